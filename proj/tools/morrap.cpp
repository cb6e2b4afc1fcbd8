// Command-line front end: defuzzify, payoff, solve, pareto, compare, gen.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "morrap/config.hpp"
#include "morrap/error.hpp"
#include "morrap/report.hpp"

namespace {

using namespace morrap;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::config:
    case ErrorKind::invalid_argument:
    case ErrorKind::budget: return 2;
    case ErrorKind::infeasible: return 3;
    case ErrorKind::degenerate: return 4;
  }
  return 1;
}

NimbusClassification parse_classification(const std::string& text) {
  const auto colon = text.find(':');
  NimbusClassification c;
  c.cls = parse_nimbus_class(text.substr(0, colon));
  if (colon != std::string::npos) {
    try {
      c.level = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::invalid_argument, fmt::format("bad NIMBUS level in '{}'", text));
    }
  } else if (c.cls == NimbusClass::aspiration || c.cls == NimbusClass::bound) {
    fail(ErrorKind::invalid_argument, fmt::format("NIMBUS class '{}' needs a level (class:level)", text));
  }
  return c;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::config, fmt::format("cannot write '{}'", path));
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reliability-redundancy allocation with interval type-2 fuzzy reliabilities"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  std::string reduction = "km";
  std::string method = "all";
  double p = 2.0;
  std::vector<double> weights;
  std::optional<double> t1;
  double t2 = 0.1;
  std::optional<std::size_t> grid;
  std::optional<std::uint64_t> seed;
  std::string profile = "reproduce";
  std::string format = "csv";
  std::string out;
  unsigned workers = 0;
  std::string nimbus_reliability = "bound:0.53";
  std::string nimbus_cost = "improve";
  double rho = 1e-4;

  app.add_option("-c,--config", config_path, "Problem configuration (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("--reduction", reduction, "km, ub, nt, gc or t1-centroid")->capture_default_str();
  app.add_option("--method", method, "global, weighted, desirability, fuzzy, nimbus or all")->capture_default_str();
  app.add_option("--p", p, "Global criterion exponent")->capture_default_str();
  app.add_option("--weights", weights, "Weighted-sum weights w1,w2")->delimiter(',')->expected(2);
  app.add_option("--t1", t1, "Desirability exponent of reliability (default: rows for 1 and 0.5)");
  app.add_option("--t2", t2, "Desirability exponent of cost")->capture_default_str();
  app.add_option("--grid", grid, "Type-reduction grid size (env MORRAP_GRID)");
  app.add_option("--seed", seed, "Generation seed");
  app.add_option("--profile", profile, "Redundancy caps: strict, reproduce or config")->capture_default_str();
  app.add_option("--format", format, "csv or json")->capture_default_str();
  app.add_option("-o,--out", out, "Output file (default stdout)");
  app.add_option("--workers", workers, "Worker threads, 0 = auto (env MORRAP_WORKERS)");
  app.add_option("--nimbus-reliability", nimbus_reliability, "NIMBUS class of reliability, class[:level]")
      ->capture_default_str();
  app.add_option("--nimbus-cost", nimbus_cost, "NIMBUS class of cost, class[:level]")->capture_default_str();
  app.add_option("--rho", rho, "NIMBUS augmentation coefficient")->capture_default_str();

  auto* defuzzify = app.add_subcommand("defuzzify", "Type-reduce every fuzzy reliability by all four methods");
  auto* payoff = app.add_subcommand("payoff", "Individual optima and normalization anchors");
  auto* solve = app.add_subcommand("solve", "Full pipeline: defuzzify, payoff, compromise solutions");
  auto* pareto = app.add_subcommand("pareto", "Exact nondominated front and weighted-sum sweep");
  auto* compare = app.add_subcommand("compare", "T1 centroid against Karnik-Mendel, side by side");
  auto* gen = app.add_subcommand("gen", "Generate T1 and IT2 fuzzy numbers from the generation block");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string current_stage = "load";
  try {
    const PlantConfig cfg = load_config(config_path);

    current_stage = "arguments";
    RunConfig run;
    run.reduction = parse_reduction(reduction);
    run.method = method;
    run.p = p;
    if (!weights.empty()) {
      run.w_reliability = weights[0];
      run.w_cost = weights[1];
    }
    if (t1) run.desirability_k = {*t1};
    run.desirability_l = t2;
    run.grid = grid;
    run.seed = seed;
    run.profile = parse_profile(profile);
    run.solver.workers = workers;
    run.nimbus_reliability = parse_classification(nimbus_reliability);
    run.nimbus_cost = parse_classification(nimbus_cost);
    run.rho = rho;
    const OutputFormat fmt_out = parse_format(format);

    current_stage = "run";
    Report report;
    if (*defuzzify) {
      report = defuzzification_report(cfg, effective_grid(cfg, run));
    } else if (*payoff) {
      report = payoff_report(cfg, run);
    } else if (*solve) {
      report = run_pipeline(cfg, run);
    } else if (*pareto) {
      report = emit_pareto(cfg, run);
    } else if (*compare) {
      report = compare_t1_it2(cfg, run);
    } else if (*gen) {
      report = generation_report(cfg, run);
    }

    current_stage = "output";
    const std::string text = render(report, fmt_out);
    write_output(text, out);

    if (*pareto && fmt_out == OutputFormat::csv && !out.empty() && out != "-") {
      current_stage = "verification";
      std::ifstream in(out, std::ios::binary);
      const std::string back((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      const std::size_t bad = count_dominated_pairs(parse_csv_report(back));
      if (bad != 0) {
        std::cerr << fmt::format("error: stage 'verification': re-read front has {} dominated pairs\n", bad);
        return 1;
      }
    }
  } catch (const Error& e) {
    const std::string msg = e.what();
    if (msg.starts_with("stage '")) {
      std::cerr << "error: " << msg << '\n';
    } else {
      std::cerr << fmt::format("error: stage '{}': {}\n", current_stage, msg);
    }
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << fmt::format("error: stage '{}': {}\n", current_stage, e.what());
    return 1;
  }
  return 0;
}
