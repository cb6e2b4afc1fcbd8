#ifndef MORRAP_CONFIG_HPP
#define MORRAP_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morrap/fuzzy.hpp"
#include "morrap/generation.hpp"
#include "morrap/model.hpp"
#include "morrap/type_reduction.hpp"

namespace morrap {

/// A published solution row. Missing redundancy levels are wildcards.
struct ReferenceRow {
  std::string method;       ///< global, weighted, desirability, fuzzy, nimbus
  std::string label;        ///< free text, e.g. "t1=0.5"
  double desirability_k = 1.0;
  double reliability = 0.0;
  double cost = 0.0;
  std::vector<std::optional<int>> n;
};

/// Published results for one reduction.
struct ReferenceTable {
  std::string id;
  Reduction reduction = Reduction::km;
  double max_reliability = 0.0;
  double min_cost = 0.0;
  std::vector<ReferenceRow> rows;
  std::vector<double> convergence;  ///< one per row when published
};

/// Published type-reduction results of one fuzzy number.
struct DefuzzReference {
  CentroidInterval km;
  CentroidInterval ub;
  double nt = 0.0;
  double gc = 0.0;
};

struct PlantConfig {
  std::string name;
  std::vector<SubsystemParams> subsystems;
  double volume_limit = 0.0;
  double weight_limit = 0.0;
  double mission_time = 0.0;
  std::size_t grid = kDefaultGridSize;
  std::vector<IntervalType2FuzzyNumber> it2;
  std::vector<TriangularFuzzyNumber> t1;  ///< empty when not supplied
  std::optional<GenerationSpec> generation;
  bool it2_generated = false;  ///< it2 came from the generation block

  std::vector<DefuzzReference> defuzz_reference;
  std::vector<ReferenceTable> reference_tables;

  const ReferenceTable* reference(std::string_view id) const noexcept;
};

/// Parses the JSON configuration. Fields follow the published notation:
/// V, W, T and per-subsystem alpha_scaled_1e5, beta, v, w, it2, t1. The 1e5
/// scaling of alpha is undone here. Throws Error(config) on any problem.
PlantConfig parse_config(std::string_view json_text);
PlantConfig load_config(const std::filesystem::path& path);

/// Crisp reliabilities under `method`. Reduction::t1 uses the T1 set, or the
/// generated T1 set when only a generation block is present.
std::vector<double> crisp_reliabilities(const PlantConfig& cfg, Reduction method,
                                        std::size_t grid);

/// Replaces the generation seed and regenerates any generated set. Throws
/// Error(config) without a generation block.
void reseed(PlantConfig& cfg, std::uint64_t seed);

ProblemInstance make_instance(const PlantConfig& cfg, std::vector<double> reliabilities,
                              RedundancyProfile profile);

}  // namespace morrap

#endif  // MORRAP_CONFIG_HPP
