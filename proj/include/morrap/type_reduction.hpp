#ifndef MORRAP_TYPE_REDUCTION_HPP
#define MORRAP_TYPE_REDUCTION_HPP

#include <cstddef>
#include <string_view>

#include "morrap/fuzzy.hpp"

namespace morrap {

/// Type-reduced interval [y_l, y_r] and its midpoint.
struct CentroidInterval {
  double y_l = 0.0;
  double y_r = 0.0;
  double defuzzified = 0.0;
};

/// Karnik-Mendel centroid on a uniform n-point grid. Each endpoint is found
/// by iterating the switch point until it stops moving.
CentroidInterval km_centroid(const IntervalType2FuzzyNumber& f,
                             std::size_t n = kDefaultGridSize);

/// Wu-Mendel inner/outer bound approximation of the type-reduced set. The
/// returned interval is the average of the inner and outer bound endpoints.
CentroidInterval uncertainty_bounds(const IntervalType2FuzzyNumber& f,
                                    std::size_t n = kDefaultGridSize);

/// Nie-Tan crisp output: grade-weighted mean using upper + lower grades.
double nie_tan(const IntervalType2FuzzyNumber& f, std::size_t n = kDefaultGridSize);

/// x-coordinate of the centroid of the polygon traced by the UMF vertices
/// followed by the LMF vertices in reverse order. Closed form, no grid.
double geometric_centroid(const IntervalType2FuzzyNumber& f);

/// (l + m + u) / 3.
double t1_centroid(const TriangularFuzzyNumber& f) noexcept;

enum class Reduction { km, ub, nt, gc, t1 };

std::string_view to_string(Reduction r) noexcept;
/// Accepts "km", "ub", "nt", "gc", "t1" and "t1-centroid".
Reduction parse_reduction(std::string_view name);

/// Crisp value of an IT2 FN under one of the four IT2 reductions.
/// Reduction::t1 reduces the UMF with t1_centroid.
double defuzzify(const IntervalType2FuzzyNumber& f, Reduction method,
                 std::size_t n = kDefaultGridSize);

}  // namespace morrap

#endif  // MORRAP_TYPE_REDUCTION_HPP
