#include "colloc/report.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>

#include "json.hpp"

#include "colloc/assemble.hpp"
#include "colloc/errors.hpp"
#include "colloc/linalg.hpp"
#include "colloc/metrics.hpp"

namespace colloc {
namespace {

// round-trippable precision for data files, table precision for humans
std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

const char* rule_name(QuadRule r) { return r == QuadRule::Trapezoid ? "trapezoid" : "left"; }

void validate_source(const RunConfig& cfg) {
  if (cfg.example != 0 && !cfg.f_text.empty())
    throw ConfigError("give either --example or --f, not both");
  if (cfg.example == 0 && cfg.f_text.empty())
    throw ConfigError("no right-hand side: use --example <1..4> or --f <expr>");
  if (cfg.example < 0 || cfg.example > 4) throw ConfigError("--example must be in 1..4");
  if (cfg.n_max < 6 || cfg.n_max % 2 != 0)
    throw ConfigError("--n-max must be an even integer >= 6");
  if (cfg.M < 2) throw ConfigError("--M must be at least 2");
}

void require_exact(const Problem& p, const char* cmd) {
  if (!p.exact)
    throw ConfigError(std::string(cmd) +
                      " needs an exact solution: use --example, or --f together with --oracle");
}

// data rows of a solve: the fitted continuous part on the uniform M-point
// grid, with exact values and relative pointwise errors when available
struct PointData {
  bool with_exact = false;
  std::vector<double> t, g_exact, g_approx, rpe;
};

PointData make_points(const ApproxSolution& sol, const ErrorReport* rep, int M) {
  PointData pd;
  if (rep != nullptr) {
    pd.with_exact = true;
    pd.t = rep->t;
    pd.g_exact = rep->g_exact;
    pd.g_approx = rep->g_approx;
    pd.rpe = rep->rpe;
    return pd;
  }
  pd.t.resize(M);
  pd.g_approx.resize(M);
  for (int i = 0; i < M; ++i) {
    double t = (i == M - 1) ? 1.0 : -1.0 + 2.0 * i / (M - 1);
    pd.t[i] = t;
    pd.g_approx[i] = sol.continuous_value(t);
  }
  return pd;
}

// route a data file to cfg.out_path when set, otherwise append it to the
// summary stream after a separating blank line
void emit(const RunConfig& cfg, std::ostream& out,
          const std::function<void(std::ostream&)>& writer) {
  if (cfg.out_path.empty()) {
    out << "\n";
    writer(out);
    return;
  }
  std::ofstream fs(cfg.out_path);
  if (!fs) throw ConfigError("cannot open output file: " + cfg.out_path);
  writer(fs);
  out << "  data written to " << cfg.out_path << "\n";
}

void write_points_csv(std::ostream& os, const RunConfig& cfg, const Problem& p,
                      const ApproxSolution& sol, const PointData& pd) {
  os << "# colloc-r solve source=" << p.name << " epsilon=" << fmt17(cfg.epsilon)
     << " rule=" << rule_name(cfg.rule) << " n=" << sol.grid.n << " m=" << sol.basis.m << "\n";
  if (pd.with_exact) {
    os << "t,g_exact,g_approx,rpe\n";
    for (size_t i = 0; i < pd.t.size(); ++i)
      os << fmt17(pd.t[i]) << ',' << fmt17(pd.g_exact[i]) << ',' << fmt17(pd.g_approx[i]) << ','
         << fmt17(pd.rpe[i]) << "\n";
  } else {
    os << "t,g_approx\n";
    for (size_t i = 0; i < pd.t.size(); ++i)
      os << fmt17(pd.t[i]) << ',' << fmt17(pd.g_approx[i]) << "\n";
  }
}

void write_points_json(std::ostream& os, const RunConfig& cfg, const Problem& p,
                       const ApproxSolution& sol, const PointData& pd, bool converged,
                       const ErrorReport* rep) {
  nlohmann::json j;
  j["command"] = "solve";
  j["source"] = p.name;
  j["epsilon"] = cfg.epsilon;
  j["rule"] = rule_name(cfg.rule);
  j["converged"] = converged;
  j["n"] = sol.grid.n;
  j["m"] = sol.basis.m;
  j["dp"] = sol.dp;
  j["c_minus1"] = sol.c_minus1;
  j["c_0"] = sol.c_0;
  if (p.exact) {
    j["a_minus1"] = p.exact->a_minus1;
    j["a_0"] = p.exact->a_0;
  }
  if (rep != nullptr) j["re"] = rep->re;
  nlohmann::json pts = nlohmann::json::array();
  for (size_t i = 0; i < pd.t.size(); ++i) {
    nlohmann::json row;
    row["t"] = pd.t[i];
    if (pd.with_exact) {
      row["g_exact"] = pd.g_exact[i];
      row["rpe"] = pd.rpe[i];
    }
    row["g_approx"] = pd.g_approx[i];
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  os << j.dump(2) << "\n";
}

struct TableRow {
  int n, m;
  double epsilon, a_m1, c_m1, a_0, c_0, dp, re;
};

struct SweepRow {
  int n, m;
  double dp, re, cond;
};

}  // namespace

Problem problem_from_config(const RunConfig& cfg) {
  validate_source(cfg);
  if (cfg.example != 0) return builtin_examples()[cfg.example - 1];
  Problem p;
  p.name = "user";
  p.f = parse_expr(cfg.f_text);
  if (cfg.oracle) p.exact = exact_from_f(p.f);
  return p;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.epsilon > 0.0)) throw ConfigError("--epsilon must be positive");
  Problem p = problem_from_config(cfg);

  AdaptiveResult r = solve_adaptive(p, cfg.epsilon, cfg.n_max, cfg.rule, cfg.exec);
  const ApproxSolution& sol = r.solution;
  bool converged = r.trace.status == SolveStatus::Converged;

  std::optional<ErrorReport> rep;
  if (p.exact) rep = evaluate(sol, *p.exact, cfg.M);

  out << p.name << ": "
      << (converged ? "converged at" : "stopped without converging at")
      << " n = " << sol.grid.n << ", m = " << sol.basis.m << "\n";
  out << "  DP   = " << fmt4(sol.dp) << "  (epsilon = " << fmt4(cfg.epsilon) << ")\n";
  out << "  c_-1 = " << fmt4(sol.c_minus1);
  if (p.exact) out << "  (exact a_-1 = " << fmt4(p.exact->a_minus1) << ")";
  out << "\n";
  out << "  c_0  = " << fmt4(sol.c_0);
  if (p.exact) out << "  (exact a_0  = " << fmt4(p.exact->a_0) << ")";
  out << "\n";
  if (rep) {
    out << "  RE   = " << fmt4(rep->re) << " over " << rep->M << " points";
    if (rep->degenerate) out << "  (exact part vanishes; absolute errors reported)";
    out << "\n";
  }
  if (sol.used_ldlt) out << "  note: factorisation fell back to pivoted LDL^T\n";

  PointData pd = make_points(sol, rep ? &*rep : nullptr, cfg.M);
  emit(cfg, out, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::Json)
      write_points_json(os, cfg, p, sol, pd, converged, rep ? &*rep : nullptr);
    else
      write_points_csv(os, cfg, p, sol, pd);
  });
  return converged ? 0 : 1;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  if (cfg.epsilons.empty()) throw ConfigError("table needs at least one --epsilon");
  for (double e : cfg.epsilons)
    if (!(e > 0.0)) throw ConfigError("--epsilon must be positive");
  Problem p = problem_from_config(cfg);
  require_exact(p, "table");

  std::vector<TableRow> rows;
  bool all_converged = true;
  for (double eps : cfg.epsilons) {
    AdaptiveResult r = solve_adaptive(p, eps, cfg.n_max, cfg.rule, cfg.exec);
    const ApproxSolution& sol = r.solution;
    all_converged = all_converged && r.trace.status == SolveStatus::Converged;
    ErrorReport rep = evaluate(sol, *p.exact, cfg.M);
    rows.push_back({sol.grid.n, sol.basis.m, eps, p.exact->a_minus1, sol.c_minus1,
                    p.exact->a_0, sol.c_0, sol.dp, rep.re});
  }

  out << p.name << "\n";
  out << std::setw(5) << "n" << std::setw(6) << "m" << std::setw(11) << "epsilon"
      << std::setw(11) << "a_-1" << std::setw(11) << "c_-1" << std::setw(11) << "a_0"
      << std::setw(11) << "c_0" << std::setw(11) << "DP" << std::setw(11) << "RE" << "\n";
  for (const TableRow& r : rows) {
    out << std::setw(5) << r.n << std::setw(6) << r.m << std::setw(11) << fmt4(r.epsilon)
        << std::setw(11) << fmt4(r.a_m1) << std::setw(11) << fmt4(r.c_m1) << std::setw(11)
        << fmt4(r.a_0) << std::setw(11) << fmt4(r.c_0) << std::setw(11) << fmt4(r.dp)
        << std::setw(11) << fmt4(r.re) << "\n";
  }
  if (!all_converged) out << "  note: at least one tolerance was not reached before n_max\n";

  if (!cfg.out_path.empty()) {
    emit(cfg, out, [&](std::ostream& os) {
      if (cfg.format == OutputFormat::Json) {
        nlohmann::json j;
        j["command"] = "table";
        j["source"] = p.name;
        j["rule"] = rule_name(cfg.rule);
        nlohmann::json jr = nlohmann::json::array();
        for (const TableRow& r : rows)
          jr.push_back({{"n", r.n},
                        {"m", r.m},
                        {"epsilon", r.epsilon},
                        {"a_m1", r.a_m1},
                        {"c_m1", r.c_m1},
                        {"a_0", r.a_0},
                        {"c_0", r.c_0},
                        {"dp", r.dp},
                        {"re", r.re}});
        j["rows"] = std::move(jr);
        os << j.dump(2) << "\n";
      } else {
        os << "# colloc-r table source=" << p.name << " rule=" << rule_name(cfg.rule)
           << " n_max=" << cfg.n_max << " M=" << cfg.M << "\n";
        os << "n,m,epsilon,a_m1,c_m1,a_0,c_0,dp,re\n";
        for (const TableRow& r : rows)
          os << r.n << ',' << r.m << ',' << fmt17(r.epsilon) << ',' << fmt17(r.a_m1) << ','
             << fmt17(r.c_m1) << ',' << fmt17(r.a_0) << ',' << fmt17(r.c_0) << ','
             << fmt17(r.dp) << ',' << fmt17(r.re) << "\n";
      }
    });
  }
  return all_converged ? 0 : 1;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_values.empty()) throw ConfigError("sweep needs at least one --n value");
  for (int n : cfg.n_values)
    if (n < 6 || n % 2 != 0) throw ConfigError("--n entries must be even integers >= 6");
  Problem p = problem_from_config(cfg);
  require_exact(p, "sweep");

  // runs its own assembly so the factorisation is available for the
  // condition estimate; the numbers match solve_fixed_n entry for entry
  std::vector<SweepRow> rows;
  for (int n : cfg.n_values) {
    Grid g = make_grid(n, cfg.rule);
    SplineBasis b = make_basis(g);
    SampleMatrices sm = build_sample_matrices(g, b, cfg.exec);
    SampledPair fs = sample_expression(g, p.f);
    NormalSystem sys = build_system(g, sm, fs, cfg.exec);
    SpdFactor factor(sys.A);
    std::vector<double> c = solve_refined(sys.A, factor, sys.rhs);
    double cond = condition_estimate(sys.A, factor);

    ApproxSolution sol;
    sol.grid = g;
    sol.basis = std::move(b);
    sol.c_minus1 = c[0];
    sol.c_0 = c[1];
    sol.spline_coeffs.assign(c.begin() + 2, c.end());
    sol.dp = compute_dp(g, sm, fs, c);
    ErrorReport rep = evaluate(sol, *p.exact, cfg.M);
    rows.push_back({n, sol.basis.m, sol.dp, rep.re, cond});
  }

  auto write_csv = [&](std::ostream& os) {
    os << "# colloc-r sweep source=" << p.name << " rule=" << rule_name(cfg.rule)
       << " M=" << cfg.M << "\n";
    os << "n,m,dp,re,cond\n";
    for (const SweepRow& r : rows)
      os << r.n << ',' << r.m << ',' << fmt17(r.dp) << ',' << fmt17(r.re) << ','
         << fmt17(r.cond) << "\n";
  };
  auto write_json = [&](std::ostream& os) {
    nlohmann::json j;
    j["command"] = "sweep";
    j["source"] = p.name;
    j["rule"] = rule_name(cfg.rule);
    nlohmann::json jr = nlohmann::json::array();
    for (const SweepRow& r : rows)
      jr.push_back({{"n", r.n}, {"m", r.m}, {"dp", r.dp}, {"re", r.re}, {"cond", r.cond}});
    j["rows"] = std::move(jr);
    os << j.dump(2) << "\n";
  };

  if (cfg.out_path.empty()) {
    if (cfg.format == OutputFormat::Json)
      write_json(out);
    else
      write_csv(out);
  } else {
    std::ofstream fs(cfg.out_path);
    if (!fs) throw ConfigError("cannot open output file: " + cfg.out_path);
    if (cfg.format == OutputFormat::Json)
      write_json(fs);
    else
      write_csv(fs);
    out << rows.size() << " rows written to " << cfg.out_path << "\n";
  }
  return 0;
}

}  // namespace colloc
