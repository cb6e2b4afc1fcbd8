#include "morrap/model.hpp"

#include <cmath>
#include <fmt/format.h>

#include "morrap/error.hpp"

namespace morrap {

void ProblemInstance::validate() const {
  if (subsystems.empty()) fail(ErrorKind::invalid_argument, "instance has no subsystems");
  if (!(volume_limit > 0.0) || !(weight_limit > 0.0) || !(mission_time > 0.0)) {
    fail(ErrorKind::invalid_argument, "volume limit, weight limit and mission time must be positive");
  }
  if (reliabilities.size() != subsystems.size()) {
    fail(ErrorKind::invalid_argument,
         fmt::format("instance has {} subsystems but {} reliabilities", subsystems.size(),
                     reliabilities.size()));
  }
  for (std::size_t i = 0; i < subsystems.size(); ++i) {
    const SubsystemParams& p = subsystems[i];
    if (!(p.alpha > 0.0) || !(p.beta > 0.0) || !(p.v > 0.0) || !(p.w > 0.0)) {
      fail(ErrorKind::invalid_argument,
           fmt::format("subsystem {}: alpha, beta, v and w must be positive", i + 1));
    }
    if (p.n_max < 1) fail(ErrorKind::invalid_argument, fmt::format("subsystem {}: n_max < 1", i + 1));
    if (!(0.0 < p.r_min && p.r_min <= p.r_max && p.r_max < 1.0)) {
      fail(ErrorKind::invalid_argument,
           fmt::format("subsystem {}: reliability bounds must satisfy 0 < r_min <= r_max < 1", i + 1));
    }
    const double r = reliabilities[i];
    if (!(r > 0.0 && r < 1.0)) {
      fail(ErrorKind::invalid_argument,
           fmt::format("subsystem {}: reliability {} outside (0, 1)", i + 1, r));
    }
  }
}

std::string to_string(const DesignVector& d) {
  return fmt::format("({})", fmt::join(d.n, ","));
}

std::string_view to_string(ConstraintKind k) noexcept {
  switch (k) {
    case ConstraintKind::volume: return "volume";
    case ConstraintKind::weight: return "weight";
    case ConstraintKind::redundancy: return "redundancy";
    case ConstraintKind::reliability_bound: return "reliability_bound";
  }
  return "?";
}

std::string Violation::describe() const {
  switch (kind) {
    case ConstraintKind::volume:
    case ConstraintKind::weight:
      return fmt::format("{} {:.6g} exceeds limit {:.6g} by {:.6g}", to_string(kind), value, limit,
                         margin);
    case ConstraintKind::redundancy:
    case ConstraintKind::reliability_bound:
      return fmt::format("{} of subsystem {} is {:.6g}, outside its bound by {:.6g}",
                         to_string(kind), subsystem + 1, value, margin);
  }
  return {};
}

double component_cost(double r, const SubsystemParams& p, double t) {
  if (!(r > 0.0 && r < 1.0)) {
    fail(ErrorKind::invalid_argument, fmt::format("component cost needs 0 < r < 1, got {}", r));
  }
  if (!(t > 0.0)) fail(ErrorKind::invalid_argument, "mission time must be positive");
  return p.alpha * std::pow(-t / std::log(r), p.beta);
}

double subsystem_reliability(double r, int n) noexcept { return 1.0 - std::pow(1.0 - r, n); }

double subsystem_cost(double unit_cost, int n) noexcept {
  return unit_cost * (n + std::exp(n / 4.0));
}

double subsystem_volume(const SubsystemParams& p, int n) noexcept {
  return p.v * static_cast<double>(n) * static_cast<double>(n);
}

double subsystem_weight(const SubsystemParams& p, int n) noexcept {
  return p.w * (n * std::exp(n / 4.0));
}

namespace {

void check_dimension(const ProblemInstance& inst, const DesignVector& d) {
  if (d.size() != inst.size()) {
    fail(ErrorKind::invalid_argument,
         fmt::format("design has {} entries, instance has {} subsystems", d.size(), inst.size()));
  }
  if (inst.reliabilities.size() != inst.size()) {
    fail(ErrorKind::invalid_argument, "instance is missing defuzzified reliabilities");
  }
}

}  // namespace

FeasibilityReport check_feasible(const ProblemInstance& inst, const DesignVector& d) {
  check_dimension(inst, d);
  FeasibilityReport rep;
  double volume = 0.0;
  double weight = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const SubsystemParams& p = inst.subsystems[i];
    const int n = d.n[i];
    volume += subsystem_volume(p, n);
    weight += subsystem_weight(p, n);
    if (n < 1 || n > p.n_max) {
      const double margin = n < 1 ? 1.0 - n : static_cast<double>(n - p.n_max);
      rep.violations.push_back({ConstraintKind::redundancy, i, static_cast<double>(n),
                                static_cast<double>(n < 1 ? 1 : p.n_max), margin});
    }
    const double r = inst.reliabilities[i];
    if (r < p.r_min || r > p.r_max) {
      const double limit = r < p.r_min ? p.r_min : p.r_max;
      rep.violations.push_back(
          {ConstraintKind::reliability_bound, i, r, limit, std::abs(r - limit)});
    }
  }
  if (volume > inst.volume_limit) {
    rep.violations.push_back(
        {ConstraintKind::volume, 0, volume, inst.volume_limit, volume - inst.volume_limit});
  }
  if (weight > inst.weight_limit) {
    rep.violations.push_back(
        {ConstraintKind::weight, 0, weight, inst.weight_limit, weight - inst.weight_limit});
  }
  rep.feasible = rep.violations.empty();
  return rep;
}

Evaluation evaluate(const ProblemInstance& inst, const DesignVector& d) {
  check_dimension(inst, d);
  Evaluation e;
  e.reliability = 1.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const SubsystemParams& p = inst.subsystems[i];
    const int n = d.n[i];
    const double r = inst.reliabilities[i];
    e.reliability *= subsystem_reliability(r, n);
    e.cost += subsystem_cost(component_cost(r, p, inst.mission_time), n);
    e.volume += subsystem_volume(p, n);
    e.weight += subsystem_weight(p, n);
  }
  FeasibilityReport f = check_feasible(inst, d);
  e.feasible = f.feasible;
  e.violations = std::move(f.violations);
  return e;
}

std::string_view to_string(RedundancyProfile p) noexcept {
  switch (p) {
    case RedundancyProfile::strict: return "strict";
    case RedundancyProfile::reproduce: return "reproduce";
    case RedundancyProfile::config: return "config";
  }
  return "?";
}

RedundancyProfile parse_profile(std::string_view name) {
  if (name == "strict") return RedundancyProfile::strict;
  if (name == "reproduce") return RedundancyProfile::reproduce;
  if (name == "config") return RedundancyProfile::config;
  fail(ErrorKind::config,
       fmt::format("unknown redundancy profile '{}' (expected strict, reproduce or config)", name));
}

void apply_profile(ProblemInstance& inst, RedundancyProfile profile) {
  if (profile == RedundancyProfile::config) return;
  const int cap = profile == RedundancyProfile::strict ? 3 : 5;
  for (SubsystemParams& p : inst.subsystems) p.n_max = cap;
}

}  // namespace morrap
