#include <CLI11.hpp>

#include <map>
#include <ostream>

#include "rigidity/cli/commands.hpp"
#include "rigidity/errors.hpp"

namespace rigidity::cli {

namespace {

struct Invocation {
  Options opts;
  std::string format = "table";
};

CLI::App* add_subcommand(CLI::App& app, std::map<std::string, Invocation>& inv, const std::string& name,
                         const std::string& help, int default_dim) {
  auto& i = inv[name];
  i.opts.dim = default_dim;
  CLI::App* sc = app.add_subcommand(name, help);
  sc->add_option("--format", i.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  sc->add_option("--seed", i.opts.seed, "Seed for randomized checks")->capture_default_str();
  sc->add_option("--tol-ode", i.opts.tol.ode, "Relative tolerance for radial ODE residuals")->capture_default_str();
  sc->add_option("--tol-quad", i.opts.tol.quad, "Relative tolerance for quadrature agreement")->capture_default_str();
  sc->add_option("--tol-conf", i.opts.tol.conf, "Tolerance for conformal-group residuals")->capture_default_str();
  return sc;
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::CSV;
  if (s == "json") return Format::JSON;
  return Format::TABLE;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigidity toolkit for conformal functionals on round spheres", "rigidity"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);
  std::map<std::string, Invocation> inv;

  auto* spectrum = add_subcommand(app, inv, "spectrum", "Universal Hessian spectrum, recursion vs closed form", 4);
  spectrum->add_option("--dim", inv["spectrum"].opts.dim, "Sphere dimension n")->capture_default_str();
  spectrum->add_option("--jmax", inv["spectrum"].opts.jmax, "Largest j")->capture_default_str();

  auto* signs = add_subcommand(app, inv, "signs", "Extremal sign theorems for n = 3..dim", 13);
  signs->add_option("--dim", inv["signs"].opts.dim, "Largest dimension")->capture_default_str();

  auto* traces = add_subcommand(app, inv, "traces", "Kontsevich-Vishik trace closed forms", 0);
  traces->add_option("--kmax", inv["traces"].opts.kmax, "Largest k (n = 2k+1)")->capture_default_str();

  auto* greens = add_subcommand(app, inv, "greens", "Green's function profiles with residual checks", 3);
  greens->add_option("--dim", inv["greens"].opts.dim, "Odd sphere dimension")->capture_default_str();
  greens->add_option("--profile", inv["greens"].opts.profile, "L, L2 or D2")
      ->check(CLI::IsMember({"L", "L2", "D2"}))
      ->capture_default_str();

  auto* qsymbol = add_subcommand(app, inv, "qsymbol", "Total Q-curvature Hessian symbol identity", 4);
  qsymbol->add_option("--dim", inv["qsymbol"].opts.dim, "Even dimension")->capture_default_str();

  auto* verify = add_subcommand(app, inv, "verify", "Run a named property suite", 2);
  verify->add_option("--suite", inv["verify"].opts.suite, "spectrum, ktypes, greens, symbols, qcurv, confgroup or all")
      ->check(CLI::IsMember({"spectrum", "ktypes", "greens", "symbols", "qcurv", "confgroup", "all"}))
      ->capture_default_str();
  verify->add_option("--dim", inv["verify"].opts.dim, "Sphere dimension for the confgroup suite (2 or 3)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  const std::map<std::string, ReportEnvelope (*)(const Options&)> handlers{
      {"spectrum", cmd_spectrum}, {"signs", cmd_signs},     {"traces", cmd_traces},
      {"greens", cmd_greens},     {"qsymbol", cmd_qsymbol}, {"verify", cmd_verify},
  };
  CLI::App* chosen = app.get_subcommands().front();
  const auto& i = inv.at(chosen->get_name());
  try {
    const ReportEnvelope report = handlers.at(chosen->get_name())(i.opts);
    render(report, parse_format(i.format), out);
    return report.all_pass() ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const rigidity::Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rigidity::cli
