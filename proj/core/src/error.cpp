#include "lagasym/error.hpp"

namespace lagasym {

bool is_config_error(Errc c) {
  return c == Errc::invalid_config || c == Errc::alpha_out_of_range ||
         c == Errc::leading_coeff;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_config: return "invalid_config";
    case Errc::alpha_out_of_range: return "alpha_out_of_range";
    case Errc::leading_coeff: return "leading_coeff";
    case Errc::domain: return "domain";
    case Errc::branch_cut: return "branch_cut";
    case Errc::region_mismatch: return "region_mismatch";
    case Errc::overflow: return "overflow";
    case Errc::mrs_undefined: return "mrs_undefined";
    case Errc::h_not_positive: return "h_not_positive";
    case Errc::not_converged: return "not_converged";
    case Errc::precision_loss: return "precision_loss";
    case Errc::out_of_range: return "out_of_range";
    case Errc::io: return "io";
  }
  return "unknown";
}

Error::Error(Errc code, std::string where, const std::string& message)
    : std::runtime_error(where + ": " + message), code_(code), where_(std::move(where)) {}

}  // namespace lagasym
