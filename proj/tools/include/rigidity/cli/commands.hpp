#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rigidity/cli/report.hpp"

namespace rigidity::cli {

// Invalid parameter combinations detected before any computation; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double ode = 1e-8;
  double quad = 1e-10;
  double conf = 1e-6;
};

struct Options {
  int dim = 4;
  int jmax = 3;
  int kmax = 2;
  std::uint64_t seed = 0;
  std::string profile = "L2";
  std::string suite = "all";
  Tolerances tol;
};

ReportEnvelope cmd_spectrum(const Options& o);
ReportEnvelope cmd_signs(const Options& o);
ReportEnvelope cmd_traces(const Options& o);
ReportEnvelope cmd_greens(const Options& o);
ReportEnvelope cmd_qsymbol(const Options& o);
ReportEnvelope cmd_verify(const Options& o);

// Parses argv, runs the subcommand and renders its report. Returns 0 when every check
// passes, 1 on a failed check, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rigidity::cli
