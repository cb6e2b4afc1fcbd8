#include "morrap/solver.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "morrap/error.hpp"

namespace morrap {

void for_each_feasible(const ProblemInstance& inst,
                       const std::function<void(const DesignVector&, const Evaluation&)>& fn,
                       std::uint64_t budget) {
  const DesignLattice lattice(inst, budget);
  DesignVector d;
  Evaluation e;
  e.feasible = true;
  lattice.scan(0, lattice.cardinality(), [&](const ScanPoint& p) {
    d.n.assign(p.levels.begin(), p.levels.end());
    e.reliability = p.reliability;
    e.cost = p.cost;
    e.volume = p.volume;
    e.weight = p.weight;
    fn(d, e);
  });
}

std::vector<std::pair<DesignVector, Evaluation>> enumerate_feasible(const ProblemInstance& inst,
                                                                    std::uint64_t budget) {
  std::vector<std::pair<DesignVector, Evaluation>> out;
  for_each_feasible(
      inst, [&](const DesignVector& d, const Evaluation& e) { out.emplace_back(d, e); }, budget);
  return out;
}

namespace {

CompromiseSolution finish(const ProblemInstance& inst, const DesignLattice& lattice,
                          const BestTracker& best) {
  CompromiseSolution s;
  s.design = lattice.decode(best.index);
  s.evaluation = evaluate(inst, s.design);
  s.score = best.score;
  s.ties = best.ties;
  return s;
}

template <class Score>
BestTracker scan_best(const DesignLattice& lattice, const SolverOptions& opts, bool maximize,
                      Score score) {
  return parallel_scan<BestTracker>(
      lattice, opts.workers, [maximize] { return BestTracker{maximize}; },
      [&score](BestTracker& t, const ScanPoint& p) {
        const double s = score(p);
        if (std::isfinite(s)) t.offer(s, p.index);
      },
      [](BestTracker& a, BestTracker&& b) { a.merge(b); });
}

}  // namespace

CompromiseSolution optimize_single(const ProblemInstance& inst, Objective objective,
                                   const SolverOptions& opts) {
  const DesignLattice lattice(inst, opts.budget);
  const bool rel = objective == Objective::reliability;
  const BestTracker best = scan_best(lattice, opts, rel, [rel](const ScanPoint& p) {
    return rel ? p.reliability : p.cost;
  });
  if (!best.found) {
    fail(ErrorKind::infeasible, "no design satisfies the volume, weight and bound constraints");
  }
  CompromiseSolution s = finish(inst, lattice, best);
  s.method = rel ? "max-reliability" : "min-cost";
  return s;
}

CompromiseSolution optimize_scalarized(const ProblemInstance& inst, const MethodSpec& method,
                                       const PayoffTable& pt, const SolverOptions& opts) {
  MethodSpec m = resolve(method, pt);
  if (auto* nimbus = std::get_if<NimbusSpec>(&m)) {
    nimbus->validate();
    if (nimbus->current_design.size() == 0) {
      nimbus->current_design = optimize_scalarized(inst, WeightedSumSpec{}, pt, opts).design;
    }
    nimbus->current = evaluate(inst, nimbus->current_design).objectives();
  }
  // Parameter errors surface here rather than inside a worker thread.
  (void)method_score(m, Objectives{pt.reliability_max, pt.cost_min}, pt);

  const DesignLattice lattice(inst, opts.budget);
  const bool maximize = maximizes(m);
  const BestTracker best = scan_best(lattice, opts, maximize, [&](const ScanPoint& p) {
    return method_score(m, p.objectives(), pt);
  });
  if (!best.found) {
    fail(ErrorKind::infeasible,
         fmt::format("no feasible design is admissible for the {} subproblem", method_name(m)));
  }
  CompromiseSolution s = finish(inst, lattice, best);
  s.method = method_name(m);
  s.params = method_params(m);
  s.convergence = convergence_metric(s.evaluation.objectives(), pt, ConvergenceNorm::ideal);
  s.convergence_range = convergence_metric(s.evaluation.objectives(), pt, ConvergenceNorm::range);
  return s;
}

FuzzyResult fuzzy_maxmin(const ProblemInstance& inst, const PayoffTable& pt,
                         const SolverOptions& opts) {
  const CompromiseSolution s = optimize_scalarized(inst, FuzzyMaxMinSpec{}, pt, opts);
  return {s.design, s.score};
}

bool dominates(const Objectives& a, const Objectives& b) noexcept {
  return a.reliability >= b.reliability && a.cost <= b.cost &&
         (a.reliability > b.reliability || a.cost < b.cost);
}

bool ParetoFront::dominated(const Objectives& o) const noexcept {
  return std::any_of(points.begin(), points.end(),
                     [&](const FrontPoint& p) { return dominates(p.evaluation.objectives(), o); });
}

bool ParetoFront::contains(const DesignVector& d) const noexcept {
  return std::any_of(points.begin(), points.end(),
                     [&](const FrontPoint& p) { return p.design == d; });
}

namespace {

struct Candidate {
  double cost;
  double reliability;
  std::uint64_t index;
};

// Sorts by cost, then reliability descending, then rank, and keeps the
// nondominated candidates. Candidates with identical objectives are kept
// together.
void sweep(std::vector<Candidate>& c) {
  std::sort(c.begin(), c.end(), [](const Candidate& a, const Candidate& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.reliability != b.reliability) return a.reliability > b.reliability;
    return a.index < b.index;
  });
  std::vector<Candidate> kept;
  for (const Candidate& x : c) {
    if (kept.empty() || x.reliability > kept.back().reliability) {
      kept.push_back(x);
    } else if (x.reliability == kept.back().reliability && x.cost == kept.back().cost) {
      kept.push_back(x);
    }
  }
  c = std::move(kept);
}

}  // namespace

ParetoFront pareto_front(const ProblemInstance& inst, const SolverOptions& opts) {
  const DesignLattice lattice(inst, opts.budget);
  using Acc = std::vector<Candidate>;
  Acc all = parallel_scan<Acc>(
      lattice, opts.workers, [] { return Acc{}; },
      [](Acc& a, const ScanPoint& p) { a.push_back({p.cost, p.reliability, p.index}); },
      [](Acc& a, Acc&& b) {
        sweep(b);
        a.insert(a.end(), b.begin(), b.end());
      });
  sweep(all);
  if (all.empty()) {
    fail(ErrorKind::infeasible, "no design satisfies the volume, weight and bound constraints");
  }
  ParetoFront front;
  front.points.reserve(all.size());
  for (const Candidate& c : all) {
    DesignVector d = lattice.decode(c.index);
    Evaluation e = evaluate(inst, d);
    front.points.push_back({std::move(d), std::move(e)});
  }
  return front;
}

}  // namespace morrap
