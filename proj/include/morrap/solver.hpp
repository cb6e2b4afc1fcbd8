#ifndef MORRAP_SOLVER_HPP
#define MORRAP_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "morrap/lattice.hpp"
#include "morrap/methods.hpp"
#include "morrap/model.hpp"

namespace morrap {

/// Optimal design of one scalarization, with its fresh evaluation.
struct CompromiseSolution {
  DesignVector design;
  Evaluation evaluation;
  std::string method;
  std::string params;
  double score = 0.0;
  double convergence = 0.0;        ///< ideal normalization
  double convergence_range = 0.0;  ///< range normalization
  std::uint64_t ties = 0;          ///< designs sharing the optimal score
};

enum class Objective { reliability, cost };

/// Calls fn(design, evaluation) for every feasible design in lexicographic
/// order. Throws Error(budget) when the lattice is too large.
void for_each_feasible(const ProblemInstance& inst,
                       const std::function<void(const DesignVector&, const Evaluation&)>& fn,
                       std::uint64_t budget = kDefaultBudget);

std::vector<std::pair<DesignVector, Evaluation>> enumerate_feasible(
    const ProblemInstance& inst, std::uint64_t budget = kDefaultBudget);

/// Certified optimum of one objective. Throws Error(infeasible) on an empty
/// region. Convergence fields are left at zero.
CompromiseSolution optimize_single(const ProblemInstance& inst, Objective objective,
                                   const SolverOptions& opts = {});

/// Exact optimum of the method's score over the feasible set. A NIMBUS spec
/// without a current design starts from the equal-weight weighted-sum
/// solution.
CompromiseSolution optimize_scalarized(const ProblemInstance& inst, const MethodSpec& method,
                                       const PayoffTable& pt, const SolverOptions& opts = {});

struct FuzzyResult {
  DesignVector design;
  double lambda = 0.0;
};

FuzzyResult fuzzy_maxmin(const ProblemInstance& inst, const PayoffTable& pt,
                         const SolverOptions& opts = {});

struct FrontPoint {
  DesignVector design;
  Evaluation evaluation;
};

/// Nondominated designs sorted by ascending cost, then descending
/// reliability, then design.
struct ParetoFront {
  std::vector<FrontPoint> points;

  /// True if some member dominates `o` (no worse in both, better in one).
  bool dominated(const Objectives& o) const noexcept;
  bool contains(const DesignVector& d) const noexcept;
};

ParetoFront pareto_front(const ProblemInstance& inst, const SolverOptions& opts = {});

/// a dominates b: no worse in both objectives and strictly better in one.
bool dominates(const Objectives& a, const Objectives& b) noexcept;

}  // namespace morrap

#endif  // MORRAP_SOLVER_HPP
