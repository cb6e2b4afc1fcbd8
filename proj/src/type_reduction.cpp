#include "morrap/type_reduction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <utility>

#include "morrap/error.hpp"

namespace morrap {

namespace {

double weighted_mean(std::span<const double> xs, std::span<const double> w) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += xs[i] * w[i];
    den += w[i];
  }
  if (!(den > 0.0)) fail(ErrorKind::degenerate, "all membership grades are zero");
  return num / den;
}

// Index k with xs[k] <= y < xs[k+1], clamped to [0, N-2].
std::size_t switch_index(std::span<const double> xs, double y) {
  auto it = std::upper_bound(xs.begin(), xs.end(), y);
  std::ptrdiff_t k = std::distance(xs.begin(), it) - 1;
  k = std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(xs.size()) - 2);
  return static_cast<std::size_t>(k);
}

// One KM endpoint. `head` grades apply at indices <= k, `tail` grades after.
double km_endpoint(const DiscretizedFou& d, std::span<const double> head,
                   std::span<const double> tail) {
  const std::size_t n = d.size();
  std::vector<double> theta(n);
  for (std::size_t i = 0; i < n; ++i) theta[i] = 0.5 * (d.lower_grades[i] + d.upper_grades[i]);
  double y = weighted_mean(d.xs, theta);
  std::size_t k = switch_index(d.xs, y);
  // Each pass either keeps k (done) or moves y monotonically, so N passes bound it.
  for (std::size_t pass = 0; pass <= n; ++pass) {
    for (std::size_t i = 0; i < n; ++i) theta[i] = i <= k ? head[i] : tail[i];
    y = weighted_mean(d.xs, theta);
    const std::size_t next = switch_index(d.xs, y);
    if (next == k) return y;
    k = next;
  }
  fail(ErrorKind::degenerate, "Karnik-Mendel iteration did not settle on a switch point");
}

double sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

CentroidInterval km_centroid(const IntervalType2FuzzyNumber& f, std::size_t n) {
  const DiscretizedFou d = discretize(f, n);
  if (!(sum(d.upper_grades) > 0.0)) {
    fail(ErrorKind::degenerate, "footprint of uncertainty has no positive grade");
  }
  CentroidInterval c;
  c.y_l = km_endpoint(d, d.upper_grades, d.lower_grades);
  c.y_r = km_endpoint(d, d.lower_grades, d.upper_grades);
  c.defuzzified = 0.5 * (c.y_l + c.y_r);
  return c;
}

CentroidInterval uncertainty_bounds(const IntervalType2FuzzyNumber& f, std::size_t n) {
  const DiscretizedFou d = discretize(f, n);
  const std::span<const double> x = d.xs;
  const std::span<const double> lo = d.lower_grades;
  const std::span<const double> up = d.upper_grades;
  const double sum_lo = sum(lo);
  const double sum_up = sum(up);
  if (!(sum_lo > 0.0) || !(sum_up > 0.0)) {
    fail(ErrorKind::degenerate,
         "uncertainty bounds need a nonzero lower and upper grade sum for " + to_string(f));
  }
  const double x_first = x.front();
  const double x_last = x.back();

  double y0_num = 0.0, yn_num = 0.0, spread = 0.0;
  double lo_left = 0.0, up_right = 0.0, up_left = 0.0, lo_right = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    y0_num += x[i] * lo[i];
    yn_num += x[i] * up[i];
    spread += up[i] - lo[i];
    lo_left += lo[i] * (x[i] - x_first);
    up_right += up[i] * (x_last - x[i]);
    up_left += up[i] * (x[i] - x_first);
    lo_right += lo[i] * (x_last - x[i]);
  }
  const double y0 = y0_num / sum_lo;
  const double yn = yn_num / sum_up;
  const double inner_l = std::min(y0, yn);
  const double inner_r = std::max(y0, yn);
  const double scale = spread / (sum_up * sum_lo);

  auto term = [](double a, double b) { return (a + b) > 0.0 ? a * b / (a + b) : 0.0; };
  const double outer_l = inner_l - scale * term(lo_left, up_right);
  const double outer_r = inner_r + scale * term(up_left, lo_right);

  CentroidInterval c;
  c.y_l = 0.5 * (outer_l + inner_l);
  c.y_r = 0.5 * (inner_r + outer_r);
  c.defuzzified = 0.5 * (c.y_l + c.y_r);
  return c;
}

double nie_tan(const IntervalType2FuzzyNumber& f, std::size_t n) {
  const DiscretizedFou d = discretize(f, n);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double g = d.upper_grades[i] + d.lower_grades[i];
    num += d.xs[i] * g;
    den += g;
  }
  if (!(den > 0.0)) fail(ErrorKind::degenerate, "Nie-Tan denominator is zero for " + to_string(f));
  return num / den;
}

double geometric_centroid(const IntervalType2FuzzyNumber& f) {
  using Vertex = std::pair<double, double>;
  const std::array<Vertex, 7> poly{{{f.umf.l, 0.0},
                                    {f.umf.m, 1.0},
                                    {f.umf.u, 0.0},
                                    {f.lmf.u, 0.0},
                                    {f.lmf.m, 1.0},
                                    {f.lmf.l, 0.0},
                                    {f.umf.l, 0.0}}};
  double num = 0.0;
  double cross_sum = 0.0;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    const auto [x0, y0] = poly[i];
    const auto [x1, y1] = poly[i + 1];
    const double cross = x0 * y1 - x1 * y0;
    num += (x0 + x1) * cross;
    cross_sum += cross;
  }
  // cross_sum is twice the signed area.
  if (std::abs(0.5 * cross_sum) < 1e-12) {
    fail(ErrorKind::degenerate,
         "geometric centroid undefined: UMF and LMF enclose no area for " + to_string(f) +
             " (use nie_tan or t1_centroid for a collapsed footprint)");
  }
  return num / (3.0 * cross_sum);
}

double t1_centroid(const TriangularFuzzyNumber& f) noexcept { return (f.l + f.m + f.u) / 3.0; }

std::string_view to_string(Reduction r) noexcept {
  switch (r) {
    case Reduction::km: return "km";
    case Reduction::ub: return "ub";
    case Reduction::nt: return "nt";
    case Reduction::gc: return "gc";
    case Reduction::t1: return "t1";
  }
  return "?";
}

Reduction parse_reduction(std::string_view name) {
  if (name == "km") return Reduction::km;
  if (name == "ub") return Reduction::ub;
  if (name == "nt") return Reduction::nt;
  if (name == "gc") return Reduction::gc;
  if (name == "t1" || name == "t1-centroid") return Reduction::t1;
  fail(ErrorKind::config, "unknown reduction method '" + std::string(name) +
                              "' (expected km, ub, nt, gc or t1-centroid)");
}

double defuzzify(const IntervalType2FuzzyNumber& f, Reduction method, std::size_t n) {
  switch (method) {
    case Reduction::km: return km_centroid(f, n).defuzzified;
    case Reduction::ub: return uncertainty_bounds(f, n).defuzzified;
    case Reduction::nt: return nie_tan(f, n);
    case Reduction::gc: return geometric_centroid(f);
    case Reduction::t1: return t1_centroid(f.umf);
  }
  fail(ErrorKind::invalid_argument, "unknown reduction");
}

}  // namespace morrap
