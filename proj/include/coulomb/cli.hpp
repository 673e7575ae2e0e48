#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace coulomb::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kDomain = 3,
  kNumerical = 4,
};

/// Runs one command line (argv[0] is the program name). Reports go to `out`,
/// diagnostics and --verbose metadata to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Schema check for one report object:
///   {command, params:{L, eta, beta}, result:{value, bracket, residual,
///    domain_cap, method_flags}, warnings}
/// Returns the list of violations; empty means valid. Sweep output (an array)
/// is checked element by element.
std::vector<std::string> validate_report(const nlohmann::json& report);

// "4", "-0.5", "4+1i", "1+i", "-2.5-0.5i", "3i".
std::complex<double> parse_complex(const std::string& text);
std::vector<std::string> split_list(const std::string& text);

}  // namespace coulomb::cli
