#ifndef MORRAP_REPORT_HPP
#define MORRAP_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "morrap/config.hpp"
#include "morrap/methods.hpp"
#include "morrap/solver.hpp"

namespace morrap {

enum class OutputFormat { csv, json };

OutputFormat parse_format(std::string_view name);

using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

/// One table of a report.
struct Section {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Index of `column`; throws Error(invalid_argument) if absent.
  std::size_t column(std::string_view column) const;
};

struct Report {
  std::vector<Section> sections;

  const Section* find(std::string_view name) const noexcept;
};

/// CSV: each section starts with a "# name" line, then a header row, then
/// data rows, with a blank line between sections. JSON: an object with a
/// "sections" array of {name, columns, rows}.
std::string render(const Report& report, OutputFormat format);

/// Reads back the CSV rendering. Every cell comes back as a string.
Report parse_csv_report(std::string_view text);

/// Tolerances of the consistency checks.
struct Tolerance {
  double reliability = 1e-4;
  double cost = 0.05;
};

struct RunConfig {
  Reduction reduction = Reduction::km;
  std::string method = "all";  ///< global, weighted, desirability, fuzzy, nimbus or all
  double p = 2.0;
  double w_reliability = 0.5;
  double w_cost = 0.5;
  std::vector<double> desirability_k{1.0, 0.5};  ///< one row per value
  double desirability_l = 0.1;
  NimbusClassification nimbus_reliability{NimbusClass::bound, 0.53};
  NimbusClassification nimbus_cost{NimbusClass::improve, 0.0};
  double rho = 1e-4;
  std::optional<std::size_t> grid;      ///< falls back to MORRAP_GRID, then the file
  std::optional<std::uint64_t> seed;    ///< overrides the generation seed
  RedundancyProfile profile = RedundancyProfile::reproduce;
  SolverOptions solver;
  Tolerance tolerance;
};

/// Grid size after applying the run override and the MORRAP_GRID variable.
std::size_t effective_grid(const PlantConfig& cfg, const RunConfig& run);

/// Scalarizations requested by `run`, in report order.
std::vector<MethodSpec> requested_methods(const RunConfig& run);

/// Outcome of re-evaluating a published row.
struct RowCheck {
  DesignVector design;  ///< wildcards filled with the best-matching level
  Evaluation evaluation;
  bool consistent = false;  ///< feasible and within tolerance of the printed objectives
  bool has_wildcard = false;
};

RowCheck check_reference_row(const ProblemInstance& inst, const ReferenceRow& row,
                             const Tolerance& tol);

/// Published row matching a computed method, or null.
const ReferenceRow* match_reference(const ReferenceTable& table, const MethodSpec& method);

/// Results of one reduction, shared by the report builders.
struct PipelineResult {
  Reduction reduction = Reduction::km;
  std::size_t grid = 0;
  std::vector<double> reliabilities;
  ProblemInstance instance;
  PayoffTable payoff;
  std::vector<MethodSpec> methods;
  std::vector<CompromiseSolution> solutions;  ///< one per method
};

PipelineResult solve_pipeline(const PlantConfig& cfg, const RunConfig& run);

/// Type reduction of every IT2 FN by all four methods next to the published values.
Report defuzzification_report(const PlantConfig& cfg, std::size_t grid);
Report payoff_report(const PlantConfig& cfg, const RunConfig& run);
/// Defuzzification, payoff, compromise solutions, published-row checks and
/// the convergence calibration.
Report run_pipeline(const PlantConfig& cfg, const RunConfig& run);
/// The pipeline under the T1 centroid and under Karnik-Mendel, side by side.
Report compare_t1_it2(const PlantConfig& cfg, const RunConfig& run);
/// Exact front plus the weighted-sum sweep w1 = 0.05, 0.10, ..., 0.95.
Report emit_pareto(const PlantConfig& cfg, const RunConfig& run);
/// Fuzzy numbers generated from the configuration's generation block.
Report generation_report(const PlantConfig& cfg, const RunConfig& run);

/// Checks the "front" section of a (possibly re-read) pareto report for
/// dominated pairs. Returns the number of dominated pairs found.
std::size_t count_dominated_pairs(const Report& report);

}  // namespace morrap

#endif  // MORRAP_REPORT_HPP
