#ifndef MORRAP_FUZZY_HPP
#define MORRAP_FUZZY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace morrap {

/// Triangular type-1 fuzzy number (l, m, u) with l <= m <= u.
struct TriangularFuzzyNumber {
  double l = 0.0;
  double m = 0.0;
  double u = 0.0;

  TriangularFuzzyNumber() = default;
  /// Throws Error(invalid_argument) unless l <= m <= u and all are finite.
  TriangularFuzzyNumber(double left, double apex, double right);

  /// Piecewise-linear grade; 1 at the apex, 0 outside [l, u].
  double membership(double x) const noexcept;

  bool operator==(const TriangularFuzzyNumber&) const = default;
};

/// Interval type-2 fuzzy number made of an upper and a lower triangular
/// membership function sharing one apex. Secondary grades are all 1 and are
/// not stored.
struct IntervalType2FuzzyNumber {
  TriangularFuzzyNumber umf;
  TriangularFuzzyNumber lmf;

  IntervalType2FuzzyNumber() = default;
  /// Throws Error(invalid_argument) when the apexes differ or the lower
  /// function is not contained in the upper one.
  IntervalType2FuzzyNumber(const TriangularFuzzyNumber& upper,
                           const TriangularFuzzyNumber& lower);

  double apex() const noexcept { return umf.m; }
  bool collapsed() const noexcept { return umf == lmf; }

  bool operator==(const IntervalType2FuzzyNumber&) const = default;
};

struct MembershipBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Footprint of uncertainty sampled on a uniform grid spanning the UMF
/// support, endpoints included.
struct DiscretizedFou {
  std::vector<double> xs;
  std::vector<double> lower_grades;
  std::vector<double> upper_grades;

  std::size_t size() const noexcept { return xs.size(); }
};

/// Grid size used by the grid-based reductions unless a caller overrides it.
inline constexpr std::size_t kDefaultGridSize = 2001;

MembershipBounds membership_bounds(const IntervalType2FuzzyNumber& f, double x) noexcept;

IntervalType2FuzzyNumber it2_add(const IntervalType2FuzzyNumber& a,
                                 const IntervalType2FuzzyNumber& b);

/// Componentwise product of the six parameters; defined for nonnegative
/// parameters only.
IntervalType2FuzzyNumber it2_mul(const IntervalType2FuzzyNumber& a,
                                 const IntervalType2FuzzyNumber& b);

/// Multiplies every parameter by r (r > 0).
IntervalType2FuzzyNumber it2_scale(const IntervalType2FuzzyNumber& a, double r);

/// Divides every parameter by r (r > 0).
IntervalType2FuzzyNumber it2_divide(const IntervalType2FuzzyNumber& a, double r);

/// Uniform grid of n >= 3 points over [umf.l, umf.u]. A collapsed support
/// (umf.l == umf.u) cannot be gridded and is rejected as degenerate.
DiscretizedFou discretize(const IntervalType2FuzzyNumber& f, std::size_t n);

// Text forms: "(l, m, u)" and "((ul, m, uu),(ll, m, lu))".
std::string to_string(const TriangularFuzzyNumber& t);
std::string to_string(const IntervalType2FuzzyNumber& f);
TriangularFuzzyNumber parse_t1(std::string_view text);
IntervalType2FuzzyNumber parse_it2(std::string_view text);

}  // namespace morrap

#endif  // MORRAP_FUZZY_HPP
