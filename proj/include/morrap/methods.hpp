#ifndef MORRAP_METHODS_HPP
#define MORRAP_METHODS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "morrap/lattice.hpp"
#include "morrap/model.hpp"

namespace morrap {

/// Single-objective optima, their cross-evaluations, and the extreme values
/// of each objective over the feasible set.
struct PayoffTable {
  DesignVector reliability_design;  ///< argmax R_s
  double reliability_max = 0.0;
  double cost_at_reliability_max = 0.0;

  DesignVector cost_design;  ///< argmin C_s
  double cost_min = 0.0;
  double reliability_at_cost_min = 0.0;

  double reliability_floor = 0.0;  ///< min R_s over the feasible set
  double cost_ceiling = 0.0;       ///< max C_s over the feasible set

  /// Worst value among the single-objective optima (payoff-table nadir).
  double reliability_worst() const noexcept;
  double cost_worst() const noexcept;
};

/// Exhaustive single pass: max/min of both objectives, ties to the
/// lexicographically smallest design. Throws Error(infeasible) if no design
/// is feasible.
PayoffTable build_payoff(const ProblemInstance& inst, const SolverOptions& opts = {});

/// Which anchors normalize an objective: the feasible-set extremes or the
/// payoff-table cross-evaluations.
enum class Normalization { feasible_extremes, payoff };

std::string_view to_string(Normalization n) noexcept;

struct GlobalCriterionSpec {
  enum class Variant { range, ideal };
  double p = 2.0;
  Variant variant = Variant::range;
  Normalization anchors = Normalization::feasible_extremes;
};

struct WeightedSumSpec {
  double w_reliability = 0.5;
  double w_cost = 0.5;
  Normalization anchors = Normalization::feasible_extremes;
};

struct DesirabilityAnchors {
  double reliability_best = 0.0;
  double reliability_worst = 0.0;
  double cost_best = 0.0;
  double cost_worst = 0.0;
};

/// Best = individual optimum, worst = worst value among the single-objective
/// optima.
DesirabilityAnchors desirability_anchors(const PayoffTable& pt) noexcept;

struct DesirabilitySpec {
  double k = 1.0;  ///< reliability shape exponent
  double l = 0.1;  ///< cost shape exponent
  double w_reliability = 1.0;
  double w_cost = 1.0;
  std::optional<DesirabilityAnchors> anchors;  ///< from the payoff table when empty
};

struct FuzzyMaxMinSpec {};

enum class NimbusClass { improve, aspiration, satisfactory, bound, free };

std::string_view to_string(NimbusClass c) noexcept;
NimbusClass parse_nimbus_class(std::string_view name);

/// Class of one objective. `level` is the aspiration level (aspiration) or
/// the bound (bound), in the objective's own units: a reliability level is a
/// reliability value, a cost level a cost.
struct NimbusClassification {
  NimbusClass cls = NimbusClass::free;
  double level = 0.0;
};

struct NimbusSpec {
  NimbusClassification reliability{NimbusClass::bound, 0.53};
  NimbusClassification cost{NimbusClass::improve, 0.0};
  double rho = 1e-4;
  DesignVector current_design;  ///< x^c
  Objectives current;           ///< objectives at x^c

  /// Throws Error(invalid_argument) unless some objective is to improve and
  /// some objective is allowed to get worse.
  void validate() const;
};

using MethodSpec =
    std::variant<GlobalCriterionSpec, WeightedSumSpec, DesirabilitySpec, FuzzyMaxMinSpec, NimbusSpec>;

std::string method_name(const MethodSpec& m);
std::string method_params(const MethodSpec& m);
/// True when the solver maximizes the method's score.
bool maximizes(const MethodSpec& m) noexcept;

/// L_p distance to the ideal point, normalized per `variant`. Minimized.
double global_criterion_score(const Objectives& e, const PayoffTable& pt, double p,
                              GlobalCriterionSpec::Variant variant,
                              Normalization anchors = Normalization::feasible_extremes);

/// Weighted sum of normalized objectives. Maximized.
double weighted_sum_score(const Objectives& e, const PayoffTable& pt, double w_reliability,
                          double w_cost, Normalization anchors = Normalization::feasible_extremes);

/// Weighted geometric mean of the clamped power-law desirabilities. Requires
/// resolved anchors (spec.anchors set). Maximized.
double desirability_score(const Objectives& e, const DesirabilitySpec& spec);

struct FuzzyMemberships {
  double reliability = 0.0;
  double cost = 0.0;
  double lambda = 0.0;  ///< min of the two
};

/// Linear memberships between the payoff-table bounds, clamped to [0, 1].
FuzzyMemberships fuzzy_memberships(const Objectives& e, const PayoffTable& pt);

/// Augmented max-term of the classification subproblem (minimization form,
/// reliability negated). Minimized.
double nimbus_score(const Objectives& e, const NimbusSpec& spec, const PayoffTable& pt);

/// The subproblem's classification constraints: improve/aspiration/
/// satisfactory objectives may not get worse than at x^c, bounded ones may
/// not pass their bound.
bool nimbus_admissible(const Objectives& e, const NimbusSpec& spec) noexcept;

enum class ConvergenceNorm { ideal, range };

std::string_view to_string(ConvergenceNorm n) noexcept;

/// Normalized Euclidean distance to the ideal point (reliability_max,
/// cost_min). `ideal` divides by the ideal values, `range` by the payoff
/// ranges.
double convergence_metric(const Objectives& e, const PayoffTable& pt,
                          ConvergenceNorm norm = ConvergenceNorm::ideal);

/// Score of `m` at `e`; +inf (minimized) or -inf (maximized) when the
/// design breaks a method constraint.
double method_score(const MethodSpec& m, const Objectives& e, const PayoffTable& pt);

/// Fills in anchors that default to the payoff table.
MethodSpec resolve(const MethodSpec& m, const PayoffTable& pt);

}  // namespace morrap

#endif  // MORRAP_METHODS_HPP
