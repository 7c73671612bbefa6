// colloc-r: command-line front end for the collocation solver.
//
//   colloc-r solve --example 1 --epsilon 1e-6
//   colloc-r solve --f "exp(-x)+2*sin(2*pi*(x+1))" --oracle --out points.csv
//   colloc-r table --example 3 --epsilon 1e-4 --epsilon 1e-6 --epsilon 1e-8
//   colloc-r sweep --example 1 --n 8,16,32,64
//
// Exit codes: 0 success, 1 tolerance not reached before n-max, 2 bad usage
// or configuration, 3 numerical failure.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "colloc/errors.hpp"
#include "colloc/report.hpp"

namespace {

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw colloc::ConfigError("--n expects comma-separated integers, got '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw colloc::ConfigError("--n expects comma-separated integers");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "B-spline collocation solver for the exponential-kernel integral equation on [-1,1]"};
  app.require_subcommand(1);

  colloc::RunConfig cfg;
  std::string rule = "left";
  std::string format = "csv";
  bool serial = false;
  std::vector<double> epsilons;
  std::string n_list;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--example", cfg.example, "built-in benchmark problem (1..4)")
        ->check(CLI::Range(1, 4));
    sub->add_option("--f", cfg.f_text, "right-hand side f(x) as an expression");
    sub->add_option("--n-max", cfg.n_max, "largest grid size tried by the adaptive loop");
    sub->add_option("--rule", rule, "quadrature weights: left or trapezoid")
        ->check(CLI::IsMember({"left", "trapezoid"}));
    sub->add_option("--M", cfg.M, "number of points on the error/report grid");
    sub->add_option("--out", cfg.out_path, "write the data file here instead of stdout");
    sub->add_option("--format", format, "data file format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--oracle", cfg.oracle,
                  "derive the exact solution from --f to get error columns");
    sub->add_flag("--serial", serial, "use the serial reference kernels");
  };

  CLI::App* solve =
      app.add_subcommand("solve", "adaptive solve; prints a summary and a point file");
  add_common(solve);
  solve->add_option("--epsilon", cfg.epsilon, "stopping tolerance for DP");

  CLI::App* table =
      app.add_subcommand("table", "one adaptive solve per tolerance; prints a report table");
  add_common(table);
  table->add_option("--epsilon", epsilons, "tolerance for one table row (repeatable)");

  CLI::App* sweep =
      app.add_subcommand("sweep", "fixed-n convergence study; emits n,m,dp,re,cond rows");
  add_common(sweep);
  sweep->add_option("--n", n_list, "comma-separated even grid sizes, e.g. 8,16,32");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.rule = rule == "trapezoid" ? colloc::QuadRule::Trapezoid : colloc::QuadRule::LeftRectangle;
  cfg.format = format == "json" ? colloc::OutputFormat::Json : colloc::OutputFormat::Csv;
  cfg.exec = serial ? colloc::Exec::Serial : colloc::Exec::Parallel;

  try {
    if (solve->parsed()) {
      cfg.command = "solve";
      return colloc::cmd_solve(cfg, std::cout);
    }
    if (table->parsed()) {
      cfg.command = "table";
      if (!epsilons.empty()) cfg.epsilons = epsilons;
      return colloc::cmd_table(cfg, std::cout);
    }
    cfg.command = "sweep";
    if (!n_list.empty()) cfg.n_values = parse_n_list(n_list);
    return colloc::cmd_sweep(cfg, std::cout);
  } catch (const colloc::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const colloc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
