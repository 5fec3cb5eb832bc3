#pragma once

#include <limits>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

namespace lagasym {

template <unsigned Digits>
using mp_real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits>,
                                              boost::multiprecision::et_off>;

// Storage type for extended-precision results.
using xreal = mp_real<50>;

// Enough digits to read back the identical value.
inline std::string to_decimal(const xreal& x) {
  return x.str(std::numeric_limits<xreal>::max_digits10, std::ios_base::scientific);
}
inline xreal from_decimal(const std::string& s) { return xreal(s); }

}  // namespace lagasym
