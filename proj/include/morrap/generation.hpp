#ifndef MORRAP_GENERATION_HPP
#define MORRAP_GENERATION_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "morrap/fuzzy.hpp"

namespace morrap {

/// Source of uniform draws in [0, 1]. Production code uses SeededStream;
/// tests pass fixed sequences.
using UniformDraw = std::function<double()>;

/// Reproducible uniform [0,1) stream: mt19937_64 with a 53-bit mantissa
/// conversion, so a seed yields the same draws on every standard library.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct GenerationSpec {
  double a = 0.5;       ///< lower support bound, 0 < a
  double b = 0.999999;  ///< upper support bound, b < 1
  std::uint64_t seed = 0;
  std::vector<double> r_values;

  /// Throws Error(invalid_argument) unless 0 < a < b < 1 and every r in [a, b].
  void validate() const;
};

/// Steps 1-3 of the construction: two draws, left end first.
TriangularFuzzyNumber generate_t1(double r, const GenerationSpec& spec, const UniformDraw& draw);

/// Steps 1, 2, 4, 5, 6: six draws in textual order (left, right per step).
/// Result satisfies a <= umf.l <= lmf.l <= r <= lmf.u <= umf.u <= b.
IntervalType2FuzzyNumber generate_it2(double r, const GenerationSpec& spec,
                                      const UniformDraw& draw);

/// Fuzzy numbers for every r in spec.r_values from one stream seeded with
/// spec.seed; the T1 set and the IT2 set use independent streams
/// (seed and seed + 1).
struct GeneratedSet {
  std::vector<TriangularFuzzyNumber> t1;
  std::vector<IntervalType2FuzzyNumber> it2;
};
GeneratedSet generate_set(const GenerationSpec& spec);

}  // namespace morrap

#endif  // MORRAP_GENERATION_HPP
