#include "rigidity/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "rigidity/errors.hpp"
#include "rigidity/greens.hpp"
#include "rigidity/qcurv.hpp"
#include "rigidity/spectrum.hpp"
#include "rigidity/symbols.hpp"

namespace rigidity::cli {

namespace {

ReportEnvelope envelope(std::string command, std::vector<std::pair<std::string, std::string>> params) {
  ReportEnvelope r;
  r.command = std::move(command);
  r.parameters = std::move(params);
  r.version = version_string();
  return r;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void spectrum_rows(ReportEnvelope& r, const SpectrumTable& t, const std::string& branch, long& mismatches) {
  for (const auto& [k, v] : t.entries) {
    const ExactScalar closed = t0_eigenvalue(k);
    const bool eq = v == closed;
    if (!eq) ++mismatches;
    r.results.rows.push_back({k.dim(), k.j(), k.q(), branch, to_string(v), to_string(closed), eq});
  }
}

ExactScalar small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num_d(-9, 9), den_d(1, 7);
  const int a = num_d(rng);
  return ExactScalar(a, den_d(rng));
}

// Random rational xi != 0 and symmetric k with k xi = 0, tr k = 0.
void random_transverse_tracefree(std::mt19937_64& rng, int n, RationalVector& xi, RationalMatrix& k) {
  do {
    xi.assign(static_cast<std::size_t>(n), ExactScalar(0));
    for (auto& x : xi) x = small_rational(rng);
  } while (dot(xi, xi) == 0);
  const RationalMatrix Pi = RationalMatrix::identity(n) - RationalMatrix::outer(xi, xi) * (ExactScalar(1) / dot(xi, xi));
  RationalMatrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) A(i, j) = A(j, i) = small_rational(rng);
  const RationalMatrix t = Pi * A * Pi;
  k = t - Pi * (t.trace() / (n - 1));
}

}  // namespace

ReportEnvelope cmd_spectrum(const Options& o) {
  if (o.dim < 2) throw UsageError("spectrum needs --dim >= 2");
  if (o.jmax < 0) throw UsageError("spectrum needs --jmax >= 0");
  auto r = envelope("spectrum", {{"dim", std::to_string(o.dim)}, {"jmax", std::to_string(o.jmax)}});
  if (o.dim == 2) {
    r.notes.push_back(
        "n = 2: the space of conformal structures on S^2 is a single point, so the Hessian is universally zero; no "
        "table");
    return r;
  }
  r.results.columns = {"n", "j", "q", "branch", "recursion_value", "closed_form_value", "equal"};
  long mismatches = 0;
  if (o.dim == 3) {
    const auto plus = spectrum_generate_dim3(o.jmax, Branch::PLUS);
    const auto minus = spectrum_generate_dim3(o.jmax, Branch::MINUS);
    spectrum_rows(r, plus, "+", mismatches);
    spectrum_rows(r, minus, "-", mismatches);
    long same_sign = 0;
    for (int j = 0; j <= o.jmax; ++j)
      if (sign(plus.at(KType(3, j, 2))) * sign(minus.at(KType(3, j, -2))) >= 0) ++same_sign;
    r.add_exact_check("recursion equals closed form", mismatches);
    r.add_exact_check("T0 changes sign between q = 2 and q = -2", same_sign);
    const auto cls = classify_hessian_dim3(ExactScalar(1), ExactScalar(1));
    r.notes.push_back("c_+ = c_- = 1: " + to_string(cls.kind) + "; kernel: " + cls.kernel);
    r.notes.push_back(plus.free_scale_note);
    return r;
  }
  const auto table = spectrum_generate(o.dim, o.jmax);
  spectrum_rows(r, table, "", mismatches);
  r.add_exact_check("recursion equals closed form", mismatches);
  const auto cls = classify_hessian(o.dim, ExactScalar(1));
  r.notes.push_back("c = 1: " + to_string(cls.kind) + "; kernel: " + cls.kernel);
  if (!table.free_scale_note.empty()) r.notes.push_back(table.free_scale_note);
  return r;
}

ReportEnvelope cmd_signs(const Options& o) {
  if (o.dim < 3) throw UsageError("signs needs --dim >= 3 (largest dimension in the sweep)");
  auto r = envelope("signs", {{"dim", std::to_string(o.dim)}});
  r.results.columns = {"functional", "n", "k", "prefactor_sign", "bracket_sign", "c_sign",
                       "maximized_sign", "printed_sign", "statement", "status"};
  long mismatches = 0;
  for (int n = 3; n <= o.dim; ++n)
    for (auto f : {Functional::DET_L, Functional::ZETA0_L, Functional::DET_D2, Functional::ZETA0_D2}) {
      if (!applicable(f, n)) {
        r.results.rows.push_back({to_string(f), n, n / 2, "", "", "", "", "", "", "NOT-APPLICABLE"});
        continue;
      }
      const auto st = extremal_classification(f, n);
      const int printed = printed_maximized_sign(f, n);
      const bool ok = printed == st.maximized_sign;
      if (!ok) ++mismatches;
      r.results.rows.push_back({to_string(f), n, st.k, st.prefactor_sign, st.bracket_sign, st.c_sign, st.maximized_sign,
                                printed, st.text, ok ? "PASS" : "FAIL"});
    }
  r.add_exact_check("sign chain matches the printed theorems", mismatches);
  return r;
}

ReportEnvelope cmd_traces(const Options& o) {
  if (o.kmax < 1) throw UsageError("traces needs --kmax >= 1");
  auto r = envelope("traces", {{"kmax", std::to_string(o.kmax)}});
  r.results.columns = {"operator", "k", "n", "coeff", "pi_exp", "trace", "value", "expected_sign"};
  long wrong_sign = 0;
  for (auto kind : {GreenKind::L2, GreenKind::D2})
    for (int k = 1; k <= o.kmax; ++k) {
      const Monomial t = kind == GreenKind::L2 ? kv_trace_L2(k) : kv_trace_D2(k);
      const int expected = (kind == GreenKind::L2) == (k % 2 == 1) ? 1 : -1;
      if (sign(t.coeff) != expected) ++wrong_sign;
      r.results.rows.push_back({kind == GreenKind::L2 ? "L^-2" : "D^-2", k, 2 * k + 1, to_string(t.coeff), t.pi_exp,
                                t.str(), t.value(), expected});
    }
  r.add_exact_check("trace signs (-1)^{k+1} for L^-2 and (-1)^k for D^-2", wrong_sign);
  return r;
}

ReportEnvelope cmd_greens(const Options& o) {
  if (o.dim < 3 || o.dim % 2 == 0) throw UsageError("greens needs an odd --dim >= 3");
  GreenKind kind;
  if (o.profile == "L") kind = GreenKind::L;
  else if (o.profile == "L2") kind = GreenKind::L2;
  else if (o.profile == "D2") kind = GreenKind::D2;
  else throw UsageError("greens --profile must be L, L2 or D2");
  const int n = o.dim;
  auto r = envelope("greens", {{"dim", std::to_string(n)}, {"profile", o.profile}});
  r.results.columns = {"r", "x", "value", "ode_residual", "quadrature_diff"};
  double worst_ode = 0, worst_quad = 0;
  for (int i = 1; i <= 10; ++i) {
    const double rad = 0.3 * i;
    const double x = std::tan(0.5 * rad);
    nlohmann::json ode = nullptr, quad = nullptr;
    double value = 0;
    if (kind == GreenKind::L) {
      value = green_L(n, rad);
      const double res = std::abs(radial_L_apply(n, green_L_jet(n, rad), rad)) / value;
      worst_ode = std::max(worst_ode, res);
      ode = res;
    } else if (kind == GreenKind::L2) {
      value = green_L2(n, rad);
      const double gl = green_L(n, rad);
      const double res = std::abs(radial_L_apply(n, green_L2_jet(n, rad), rad) - gl) / gl;
      const double q = std::abs(value - green_L2_quadrature(n, rad)) / std::abs(value);
      worst_ode = std::max(worst_ode, res);
      worst_quad = std::max(worst_quad, q);
      ode = res;
      quad = q;
    } else {
      value = green_D2(n, x);
      const double q = std::abs(value - green_D2_quadrature(n, x)) / std::abs(value);
      worst_quad = std::max(worst_quad, q);
      quad = q;
    }
    r.results.rows.push_back({rad, x, value, ode, quad});
  }
  if (kind != GreenKind::D2) r.add_check("radial ODE residual (relative)", worst_ode, o.tol.ode);
  if (kind != GreenKind::L) r.add_check("closed form vs quadrature (relative)", worst_quad, o.tol.quad);
  if (kind != GreenKind::L) {
    try {
      const auto rp = regular_part(RadialGreen(n, kind));
      const int k = (n - 1) / 2;
      const double printed = kind == GreenKind::L2 ? printed_regular_L2(k).value() : printed_regular_D2(k).value();
      r.notes.push_back("regular part at coincidence: " + num(rp.value) + " (+- " + num(rp.error) +
                        "); printed constant " + num(printed) + "; ratio " + num(rp.value / printed));
    } catch (const FitUnstable& e) {
      r.notes.push_back(std::string("regular part not resolved in double precision: ") + e.what());
    }
  }
  return r;
}

ReportEnvelope cmd_qsymbol(const Options& o) {
  if (o.dim < 4 || o.dim % 2 != 0) throw UsageError("qsymbol needs an even --dim >= 4");
  const int n = o.dim;
  auto r = envelope("qsymbol", {{"dim", std::to_string(n)}, {"seed", std::to_string(o.seed)}});
  r.results.columns = {"n", "samples", "mismatches", "assembled_equals_direct"};
  std::mt19937_64 rng(o.seed);
  long mismatches = 0, direct_mismatches = 0;
  const int samples = 100;
  for (int i = 0; i < samples; ++i) {
    RationalVector xi;
    RationalMatrix k;
    random_transverse_tracefree(rng, n, xi, k);
    if (!(q_hessian_symbol(xi, k) == k * (-pow_int(dot(xi, xi), n / 2) / 4))) ++mismatches;
    if (!(lin_obstruction_symbol(xi, k) == obstruction_symbol_direct(xi, k))) ++direct_mismatches;
  }
  r.results.rows.push_back({n, samples, mismatches, direct_mismatches == 0});
  const std::string sn = std::to_string(n);
  r.notes.push_back("sigma_" + sn + "(H) = -|xi|^" + sn + "/4 * Id : " + (mismatches == 0 ? "PASS" : "FAIL") +
                    " (exact)");
  r.add_exact_check("q_hessian_symbol equals -|xi|^n/4 k", mismatches);
  r.add_exact_check("assembled obstruction symbol equals direct formula", direct_mismatches);
  return r;
}

}  // namespace rigidity::cli
