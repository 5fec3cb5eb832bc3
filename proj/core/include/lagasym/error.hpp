#pragma once

#include <stdexcept>
#include <string>

namespace lagasym {

enum class Errc {
  invalid_config,      // malformed input, bad flag values
  alpha_out_of_range,  // alpha <= -1
  leading_coeff,       // q_m <= 0 or empty Q
  domain,              // argument outside the operation's domain
  branch_cut,          // point on a cut with no side given
  region_mismatch,
  overflow,
  mrs_undefined,
  h_not_positive,
  not_converged,
  precision_loss,
  out_of_range,
  io,
};

// Rough classification used by the command line front end for exit codes.
bool is_config_error(Errc c);

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string where, const std::string& message);

  Errc code() const noexcept { return code_; }
  // "module.operation" of the failing call.
  const std::string& where() const noexcept { return where_; }

 private:
  Errc code_;
  std::string where_;
};

}  // namespace lagasym
