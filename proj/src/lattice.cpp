#include "morrap/lattice.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fmt/format.h>

#include "morrap/error.hpp"

namespace morrap {

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MORRAP_WORKERS")) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec == std::errc() && v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

DesignLattice::DesignLattice(const ProblemInstance& inst, std::uint64_t budget)
    : volume_limit_(inst.volume_limit), weight_limit_(inst.weight_limit) {
  inst.validate();
  caps_.reserve(inst.size());
  terms_.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const SubsystemParams& p = inst.subsystems[i];
    const auto cap = static_cast<std::uint64_t>(p.n_max);
    if (cardinality_ > budget / cap) {
      fail(ErrorKind::budget,
           fmt::format("design lattice exceeds the enumeration budget of {} designs; "
                       "lower the redundancy caps (n_max) or raise the budget",
                       budget));
    }
    cardinality_ *= cap;
    caps_.push_back(p.n_max);

    const double r = inst.reliabilities[i];
    if (r < p.r_min || r > p.r_max) bounds_ok_ = false;
    const double unit_cost = component_cost(r, p, inst.mission_time);
    Terms t;
    for (int n = 1; n <= p.n_max; ++n) {
      t.reliability.push_back(subsystem_reliability(r, n));
      t.cost.push_back(subsystem_cost(unit_cost, n));
      t.volume.push_back(subsystem_volume(p, n));
      t.weight.push_back(subsystem_weight(p, n));
    }
    terms_.push_back(std::move(t));
  }
}

DesignVector DesignLattice::decode(std::uint64_t index) const {
  std::vector<int> levels(caps_.size(), 1);
  for (std::size_t j = caps_.size(); j-- > 0;) {
    const auto cap = static_cast<std::uint64_t>(caps_[j]);
    levels[j] = static_cast<int>(index % cap) + 1;
    index /= cap;
  }
  return DesignVector(std::move(levels));
}

}  // namespace morrap
