#ifndef MORRAP_MODEL_HPP
#define MORRAP_MODEL_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace morrap {

/// Per-subsystem data of the series-parallel system.
struct SubsystemParams {
  double alpha = 0.0;  ///< cost scaling factor (already divided by 1e5)
  double beta = 0.0;   ///< cost shaping factor
  double v = 0.0;      ///< component volume
  double w = 0.0;      ///< component weight
  int n_max = 3;       ///< redundancy cap
  double r_min = 1e-6;
  double r_max = 1.0 - 1e-6;
};

/// Series-parallel allocation instance with crisp (defuzzified) component
/// reliabilities.
struct ProblemInstance {
  std::vector<SubsystemParams> subsystems;
  double volume_limit = 0.0;  ///< V
  double weight_limit = 0.0;  ///< W
  double mission_time = 0.0;  ///< T, hours
  std::vector<double> reliabilities;

  std::size_t size() const noexcept { return subsystems.size(); }

  /// Throws Error(invalid_argument) on any violated invariant.
  void validate() const;
};

/// Redundancy levels, one per subsystem. Ordered lexicographically.
struct DesignVector {
  std::vector<int> n;

  DesignVector() = default;
  explicit DesignVector(std::vector<int> levels) : n(std::move(levels)) {}

  std::size_t size() const noexcept { return n.size(); }
  auto operator<=>(const DesignVector&) const = default;
  bool operator==(const DesignVector&) const = default;
};

std::string to_string(const DesignVector& d);

enum class ConstraintKind { volume, weight, redundancy, reliability_bound };

std::string_view to_string(ConstraintKind k) noexcept;

/// A breached constraint. `margin` is value - limit (positive = over).
struct Violation {
  ConstraintKind kind = ConstraintKind::volume;
  std::size_t subsystem = 0;  ///< meaningful for per-subsystem bounds
  double value = 0.0;
  double limit = 0.0;
  double margin = 0.0;

  std::string describe() const;
};

struct Objectives {
  double reliability = 0.0;
  double cost = 0.0;
};

struct Evaluation {
  double reliability = 0.0;  ///< R_s
  double cost = 0.0;         ///< C_s
  double volume = 0.0;       ///< V_s
  double weight = 0.0;       ///< W_s
  bool feasible = false;
  std::vector<Violation> violations;

  Objectives objectives() const noexcept { return {reliability, cost}; }
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;
};

// Building blocks shared by evaluate() and the lattice tables, so both
// paths produce bit-identical sums and products.

/// c(r) = alpha * (-T / ln r)^beta. Requires 0 < r < 1 and t > 0.
double component_cost(double r, const SubsystemParams& p, double t);
double subsystem_reliability(double r, int n) noexcept;        ///< 1 - (1 - r)^n
double subsystem_cost(double unit_cost, int n) noexcept;      ///< c (n + e^{n/4})
double subsystem_volume(const SubsystemParams& p, int n) noexcept;  ///< v n^2
double subsystem_weight(const SubsystemParams& p, int n) noexcept;  ///< w n e^{n/4}

/// Objectives and constraint check of one design. Throws on dimension mismatch.
Evaluation evaluate(const ProblemInstance& inst, const DesignVector& d);

FeasibilityReport check_feasible(const ProblemInstance& inst, const DesignVector& d);

enum class RedundancyProfile { strict, reproduce, config };

std::string_view to_string(RedundancyProfile p) noexcept;
RedundancyProfile parse_profile(std::string_view name);

/// strict sets every n_max to 3, reproduce to 5, config leaves the file values.
void apply_profile(ProblemInstance& inst, RedundancyProfile profile);

}  // namespace morrap

#endif  // MORRAP_MODEL_HPP
