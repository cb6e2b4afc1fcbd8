#include "morrap/methods.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

#include "morrap/error.hpp"

namespace morrap {

double PayoffTable::reliability_worst() const noexcept {
  return std::min(reliability_max, reliability_at_cost_min);
}

double PayoffTable::cost_worst() const noexcept {
  return std::max(cost_min, cost_at_reliability_max);
}

PayoffTable build_payoff(const ProblemInstance& inst, const SolverOptions& opts) {
  const DesignLattice lattice(inst, opts.budget);
  struct Acc {
    BestTracker max_r{true}, min_c{false}, min_r{false}, max_c{true};
  };
  const Acc acc = parallel_scan<Acc>(
      lattice, opts.workers, [] { return Acc{}; },
      [](Acc& a, const ScanPoint& p) {
        a.max_r.offer(p.reliability, p.index);
        a.min_c.offer(p.cost, p.index);
        a.min_r.offer(p.reliability, p.index);
        a.max_c.offer(p.cost, p.index);
      },
      [](Acc& a, Acc&& b) {
        a.max_r.merge(b.max_r);
        a.min_c.merge(b.min_c);
        a.min_r.merge(b.min_r);
        a.max_c.merge(b.max_c);
      });
  if (!acc.max_r.found) {
    fail(ErrorKind::infeasible, "no design satisfies the volume, weight and bound constraints");
  }
  PayoffTable pt;
  pt.reliability_design = lattice.decode(acc.max_r.index);
  pt.cost_design = lattice.decode(acc.min_c.index);
  const Evaluation at_r = evaluate(inst, pt.reliability_design);
  const Evaluation at_c = evaluate(inst, pt.cost_design);
  pt.reliability_max = at_r.reliability;
  pt.cost_at_reliability_max = at_r.cost;
  pt.cost_min = at_c.cost;
  pt.reliability_at_cost_min = at_c.reliability;
  pt.reliability_floor = acc.min_r.score;
  pt.cost_ceiling = acc.max_c.score;
  return pt;
}

std::string_view to_string(Normalization n) noexcept {
  return n == Normalization::payoff ? "payoff" : "feasible_extremes";
}

DesirabilityAnchors desirability_anchors(const PayoffTable& pt) noexcept {
  return {pt.reliability_max, pt.reliability_worst(), pt.cost_min, pt.cost_worst()};
}

std::string_view to_string(NimbusClass c) noexcept {
  switch (c) {
    case NimbusClass::improve: return "improve";
    case NimbusClass::aspiration: return "aspiration";
    case NimbusClass::satisfactory: return "satisfactory";
    case NimbusClass::bound: return "bound";
    case NimbusClass::free: return "free";
  }
  return "?";
}

NimbusClass parse_nimbus_class(std::string_view name) {
  if (name == "improve") return NimbusClass::improve;
  if (name == "aspiration" || name == "improve-to-aspiration") return NimbusClass::aspiration;
  if (name == "satisfactory") return NimbusClass::satisfactory;
  if (name == "bound" || name == "worsen-to-bound") return NimbusClass::bound;
  if (name == "free") return NimbusClass::free;
  fail(ErrorKind::config, fmt::format("unknown NIMBUS class '{}'", name));
}

void NimbusSpec::validate() const {
  auto improving = [](NimbusClass c) {
    return c == NimbusClass::improve || c == NimbusClass::aspiration;
  };
  auto relaxing = [](NimbusClass c) { return c == NimbusClass::bound || c == NimbusClass::free; };
  if (!(improving(reliability.cls) || improving(cost.cls)) ||
      !(relaxing(reliability.cls) || relaxing(cost.cls))) {
    fail(ErrorKind::invalid_argument,
         "infeasible NIMBUS classification: at least one objective must be classed improve or "
         "aspiration and at least one must be classed bound or free");
  }
  if (!(rho > 0.0)) fail(ErrorKind::invalid_argument, "NIMBUS augmentation coefficient must be > 0");
}

namespace {

double checked_ratio(double num, double den, std::string_view what) {
  if (!(std::abs(den) > 0.0) || !std::isfinite(den)) {
    fail(ErrorKind::degenerate, fmt::format("zero normalization range for {}", what));
  }
  return num / den;
}

double reliability_anchor(const PayoffTable& pt, Normalization n) {
  return n == Normalization::payoff ? pt.reliability_worst() : pt.reliability_floor;
}

double cost_anchor(const PayoffTable& pt, Normalization n) {
  return n == Normalization::payoff ? pt.cost_worst() : pt.cost_ceiling;
}

const char* variant_name(GlobalCriterionSpec::Variant v) {
  return v == GlobalCriterionSpec::Variant::ideal ? "ideal" : "range";
}

}  // namespace

double global_criterion_score(const Objectives& e, const PayoffTable& pt, double p,
                              GlobalCriterionSpec::Variant variant, Normalization anchors) {
  if (!(p >= 1.0)) fail(ErrorKind::invalid_argument, "global criterion needs p >= 1");
  double den_r = pt.reliability_max;
  double den_c = pt.cost_min;
  if (variant == GlobalCriterionSpec::Variant::range) {
    den_r = pt.reliability_max - reliability_anchor(pt, anchors);
    den_c = cost_anchor(pt, anchors) - pt.cost_min;
  }
  const double tr = std::abs(checked_ratio(pt.reliability_max - e.reliability, den_r, "reliability"));
  const double tc = std::abs(checked_ratio(e.cost - pt.cost_min, den_c, "cost"));
  if (std::isinf(p)) return std::max(tr, tc);
  return std::pow(std::pow(tr, p) + std::pow(tc, p), 1.0 / p);
}

double weighted_sum_score(const Objectives& e, const PayoffTable& pt, double w_reliability,
                          double w_cost, Normalization anchors) {
  if (w_reliability < 0.0 || w_cost < 0.0 || std::abs(w_reliability + w_cost - 1.0) > 1e-9) {
    fail(ErrorKind::invalid_argument, "weighted sum weights must be nonnegative and sum to 1");
  }
  const double r_lo = reliability_anchor(pt, anchors);
  const double c_hi = cost_anchor(pt, anchors);
  const double fr = checked_ratio(e.reliability - r_lo, pt.reliability_max - r_lo, "reliability");
  const double fc = checked_ratio(c_hi - e.cost, c_hi - pt.cost_min, "cost");
  return w_reliability * fr + w_cost * fc;
}

double desirability_score(const Objectives& e, const DesirabilitySpec& spec) {
  if (!spec.anchors) fail(ErrorKind::invalid_argument, "desirability anchors are not resolved");
  if (!(spec.k > 0.0) || !(spec.l > 0.0)) {
    fail(ErrorKind::invalid_argument, "desirability exponents must be positive");
  }
  if (!(spec.w_reliability >= 1.0) || !(spec.w_cost >= 1.0)) {
    fail(ErrorKind::invalid_argument, "desirability importance weights must be >= 1");
  }
  const DesirabilityAnchors& a = *spec.anchors;
  if (!(a.reliability_best > a.reliability_worst) || !(a.cost_worst > a.cost_best)) {
    fail(ErrorKind::degenerate, "desirability anchors are not well ordered (worst must differ from best)");
  }
  double d = 0.0;
  if (e.reliability > a.reliability_best) {
    d = 1.0;
  } else if (e.reliability >= a.reliability_worst) {
    d = std::pow((e.reliability - a.reliability_worst) / (a.reliability_best - a.reliability_worst),
                 spec.k);
  }
  double s = 0.0;
  if (e.cost < a.cost_best) {
    s = 1.0;
  } else if (e.cost <= a.cost_worst) {
    s = std::pow((a.cost_worst - e.cost) / (a.cost_worst - a.cost_best), spec.l);
  }
  if (d == 0.0 || s == 0.0) return 0.0;
  return std::pow(std::pow(d, spec.w_reliability) * std::pow(s, spec.w_cost),
                  1.0 / (spec.w_reliability + spec.w_cost));
}

FuzzyMemberships fuzzy_memberships(const Objectives& e, const PayoffTable& pt) {
  const double u_f = pt.reliability_max;
  const double l_f = pt.reliability_worst();
  const double u_g = pt.cost_worst();
  const double l_g = pt.cost_min;
  FuzzyMemberships m;
  m.reliability = std::clamp(checked_ratio(e.reliability - l_f, u_f - l_f, "reliability"), 0.0, 1.0);
  m.cost = std::clamp(checked_ratio(u_g - e.cost, u_g - l_g, "cost"), 0.0, 1.0);
  m.lambda = std::min(m.reliability, m.cost);
  return m;
}

namespace {

// Minimization form: g_R = -R_s, g_C = C_s.
struct MinForm {
  double g_r, g_c;
};

MinForm min_form(const Objectives& e) { return {-e.reliability, e.cost}; }

}  // namespace

double nimbus_score(const Objectives& e, const NimbusSpec& spec, const PayoffTable& pt) {
  spec.validate();
  const MinForm g = min_form(e);
  const double ideal_r = -pt.reliability_max;
  const double ideal_c = pt.cost_min;
  const double span_r = -pt.reliability_worst() - ideal_r;
  const double span_c = pt.cost_worst() - ideal_c;

  double max_term = -std::numeric_limits<double>::infinity();
  auto consider = [&](const NimbusClassification& c, double value, double ideal, double aspiration,
                      double span, std::string_view what) {
    if (c.cls == NimbusClass::improve) {
      max_term = std::max(max_term, checked_ratio(value - ideal, span, what));
    } else if (c.cls == NimbusClass::aspiration) {
      max_term = std::max(max_term, checked_ratio(value - aspiration, span, what));
    }
  };
  consider(spec.reliability, g.g_r, ideal_r, -spec.reliability.level, span_r, "reliability");
  consider(spec.cost, g.g_c, ideal_c, spec.cost.level, span_c, "cost");
  const double augmentation =
      spec.rho * (checked_ratio(g.g_r, span_r, "reliability") + checked_ratio(g.g_c, span_c, "cost"));
  return max_term + augmentation;
}

bool nimbus_admissible(const Objectives& e, const NimbusSpec& spec) noexcept {
  auto ok = [](const NimbusClassification& c, double value, double current, double bound) {
    switch (c.cls) {
      case NimbusClass::improve:
      case NimbusClass::aspiration:
      case NimbusClass::satisfactory: return value <= current;
      case NimbusClass::bound: return value <= bound;
      case NimbusClass::free: return true;
    }
    return true;
  };
  const MinForm g = min_form(e);
  const MinForm cur = min_form(spec.current);
  return ok(spec.reliability, g.g_r, cur.g_r, -spec.reliability.level) &&
         ok(spec.cost, g.g_c, cur.g_c, spec.cost.level);
}

std::string_view to_string(ConvergenceNorm n) noexcept {
  return n == ConvergenceNorm::range ? "range" : "ideal";
}

double convergence_metric(const Objectives& e, const PayoffTable& pt, ConvergenceNorm norm) {
  double den_r = pt.reliability_max;
  double den_c = pt.cost_min;
  if (norm == ConvergenceNorm::range) {
    den_r = pt.reliability_max - pt.reliability_worst();
    den_c = pt.cost_worst() - pt.cost_min;
  }
  const double dr = checked_ratio(pt.reliability_max - e.reliability, den_r, "reliability");
  const double dc = checked_ratio(e.cost - pt.cost_min, den_c, "cost");
  return std::hypot(dr, dc);
}

std::string method_name(const MethodSpec& m) {
  struct {
    std::string operator()(const GlobalCriterionSpec&) const { return "global"; }
    std::string operator()(const WeightedSumSpec&) const { return "weighted"; }
    std::string operator()(const DesirabilitySpec&) const { return "desirability"; }
    std::string operator()(const FuzzyMaxMinSpec&) const { return "fuzzy"; }
    std::string operator()(const NimbusSpec&) const { return "nimbus"; }
  } v;
  return std::visit(v, m);
}

std::string method_params(const MethodSpec& m) {
  struct {
    std::string operator()(const GlobalCriterionSpec& s) const {
      return fmt::format("p={:g};variant={};anchors={}", s.p, variant_name(s.variant),
                         to_string(s.anchors));
    }
    std::string operator()(const WeightedSumSpec& s) const {
      return fmt::format("w=({:g},{:g});anchors={}", s.w_reliability, s.w_cost, to_string(s.anchors));
    }
    std::string operator()(const DesirabilitySpec& s) const {
      return fmt::format("t1={:g};t2={:g};w=({:g},{:g})", s.k, s.l, s.w_reliability, s.w_cost);
    }
    std::string operator()(const FuzzyMaxMinSpec&) const { return "max-min"; }
    std::string operator()(const NimbusSpec& s) const {
      auto cls = [](const NimbusClassification& c) {
        if (c.cls == NimbusClass::aspiration || c.cls == NimbusClass::bound) {
          return fmt::format("{}:{:g}", to_string(c.cls), c.level);
        }
        return std::string(to_string(c.cls));
      };
      return fmt::format("reliability={};cost={};rho={:g};x_c={}", cls(s.reliability), cls(s.cost),
                         s.rho, to_string(s.current_design));
    }
  } v;
  return std::visit(v, m);
}

bool maximizes(const MethodSpec& m) noexcept {
  return std::holds_alternative<WeightedSumSpec>(m) || std::holds_alternative<DesirabilitySpec>(m) ||
         std::holds_alternative<FuzzyMaxMinSpec>(m);
}

double method_score(const MethodSpec& m, const Objectives& e, const PayoffTable& pt) {
  struct {
    const Objectives& e;
    const PayoffTable& pt;
    double operator()(const GlobalCriterionSpec& s) const {
      return global_criterion_score(e, pt, s.p, s.variant, s.anchors);
    }
    double operator()(const WeightedSumSpec& s) const {
      return weighted_sum_score(e, pt, s.w_reliability, s.w_cost, s.anchors);
    }
    double operator()(const DesirabilitySpec& s) const { return desirability_score(e, s); }
    double operator()(const FuzzyMaxMinSpec&) const { return fuzzy_memberships(e, pt).lambda; }
    double operator()(const NimbusSpec& s) const {
      if (!nimbus_admissible(e, s)) return std::numeric_limits<double>::infinity();
      return nimbus_score(e, s, pt);
    }
  } v{e, pt};
  return std::visit(v, m);
}

MethodSpec resolve(const MethodSpec& m, const PayoffTable& pt) {
  MethodSpec out = m;
  if (auto* d = std::get_if<DesirabilitySpec>(&out); d && !d->anchors) {
    d->anchors = desirability_anchors(pt);
  }
  return out;
}

}  // namespace morrap
