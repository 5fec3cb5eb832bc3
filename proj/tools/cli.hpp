#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lagasym::cli {

// Exit codes of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_numerical = 3;
inline constexpr int exit_io = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Helpers shared with the tests.
std::string format_double(double x);  // 17 significant digits
std::complex<double> parse_complex(const std::string& s);
std::vector<double> parse_grid(const std::string& spec);  // "a:b:step"
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace lagasym::cli
