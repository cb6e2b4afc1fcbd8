#include "morrap/fuzzy.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "morrap/error.hpp"

namespace morrap {

TriangularFuzzyNumber::TriangularFuzzyNumber(double left, double apex, double right)
    : l(left), m(apex), u(right) {
  if (!std::isfinite(l) || !std::isfinite(m) || !std::isfinite(u)) {
    fail(ErrorKind::invalid_argument, "triangular fuzzy number has a non-finite parameter");
  }
  if (!(l <= m && m <= u)) {
    fail(ErrorKind::invalid_argument,
         "triangular fuzzy number must satisfy l <= m <= u, got " + to_string(*this));
  }
}

double TriangularFuzzyNumber::membership(double x) const noexcept {
  if (x < l || x > u) return 0.0;
  if (x == m) return 1.0;
  if (x < m) return (x - l) / (m - l);
  return (u - x) / (u - m);
}

IntervalType2FuzzyNumber::IntervalType2FuzzyNumber(const TriangularFuzzyNumber& upper,
                                                   const TriangularFuzzyNumber& lower)
    : umf(upper), lmf(lower) {
  if (umf.m != lmf.m) {
    fail(ErrorKind::invalid_argument,
         "upper and lower membership functions must share the apex: " + to_string(*this));
  }
  if (!(umf.l <= lmf.l && lmf.u <= umf.u)) {
    fail(ErrorKind::invalid_argument,
         "lower membership function must lie inside the upper one: " + to_string(*this));
  }
}

MembershipBounds membership_bounds(const IntervalType2FuzzyNumber& f, double x) noexcept {
  return {f.lmf.membership(x), f.umf.membership(x)};
}

namespace {

using Params = std::array<double, 6>;

Params params(const IntervalType2FuzzyNumber& f) {
  return {f.umf.l, f.umf.m, f.umf.u, f.lmf.l, f.lmf.m, f.lmf.u};
}

IntervalType2FuzzyNumber from_params(const Params& p) {
  return {TriangularFuzzyNumber(p[0], p[1], p[2]), TriangularFuzzyNumber(p[3], p[4], p[5])};
}

template <class Op>
IntervalType2FuzzyNumber componentwise(const IntervalType2FuzzyNumber& a,
                                       const IntervalType2FuzzyNumber& b, Op op) {
  Params pa = params(a);
  const Params pb = params(b);
  for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = op(pa[i], pb[i]);
  return from_params(pa);
}

}  // namespace

IntervalType2FuzzyNumber it2_add(const IntervalType2FuzzyNumber& a,
                                 const IntervalType2FuzzyNumber& b) {
  return componentwise(a, b, [](double x, double y) { return x + y; });
}

IntervalType2FuzzyNumber it2_mul(const IntervalType2FuzzyNumber& a,
                                 const IntervalType2FuzzyNumber& b) {
  for (const auto* f : {&a, &b}) {
    for (double p : params(*f)) {
      if (p < 0.0) {
        fail(ErrorKind::invalid_argument,
             "componentwise multiplication needs nonnegative parameters: " + to_string(*f));
      }
    }
  }
  return componentwise(a, b, [](double x, double y) { return x * y; });
}

IntervalType2FuzzyNumber it2_scale(const IntervalType2FuzzyNumber& a, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    fail(ErrorKind::invalid_argument, "scalar multiplier must be positive and finite");
  }
  Params p = params(a);
  for (double& v : p) v *= r;
  return from_params(p);
}

IntervalType2FuzzyNumber it2_divide(const IntervalType2FuzzyNumber& a, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    fail(ErrorKind::invalid_argument, "scalar divisor must be positive and finite");
  }
  Params p = params(a);
  for (double& v : p) v *= 1.0 / r;
  return from_params(p);
}

DiscretizedFou discretize(const IntervalType2FuzzyNumber& f, std::size_t n) {
  if (n < 3) fail(ErrorKind::invalid_argument, "discretization needs at least 3 points");
  const double lo = f.umf.l;
  const double hi = f.umf.u;
  if (!(hi > lo)) {
    fail(ErrorKind::degenerate, "cannot discretize a zero-width support " + to_string(f));
  }
  DiscretizedFou out;
  out.xs.resize(n);
  out.lower_grades.resize(n);
  out.upper_grades.resize(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = (i + 1 == n) ? hi : lo + step * static_cast<double>(i);
    const MembershipBounds g = membership_bounds(f, x);
    out.xs[i] = x;
    out.lower_grades[i] = g.lower;
    out.upper_grades[i] = g.upper;
  }
  return out;
}

namespace {

std::string format_number(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

class TupleParser {
 public:
  explicit TupleParser(std::string_view text) : text_(text) {}

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(ErrorKind::config, std::string("malformed fuzzy number '") + std::string(text_) +
                                  "': expected '" + c + "' at offset " + std::to_string(pos_));
    }
    ++pos_;
  }

  double number() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc()) {
      fail(ErrorKind::config, "malformed fuzzy number '" + std::string(text_) +
                                  "': expected a number at offset " + std::to_string(pos_));
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  template <class F>
  auto wrap(F&& make) {
    try {
      return make();
    } catch (const Error& e) {
      fail(ErrorKind::config, "invalid fuzzy number '" + std::string(text_) + "': " + e.what());
    }
  }

  TriangularFuzzyNumber triple() {
    expect('(');
    const double l = number();
    expect(',');
    const double m = number();
    expect(',');
    const double u = number();
    expect(')');
    return wrap([&] { return TriangularFuzzyNumber(l, m, u); });
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) {
      fail(ErrorKind::config, "trailing characters in fuzzy number '" + std::string(text_) + "'");
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const TriangularFuzzyNumber& t) {
  return "(" + format_number(t.l) + "," + format_number(t.m) + "," + format_number(t.u) + ")";
}

std::string to_string(const IntervalType2FuzzyNumber& f) {
  return "(" + to_string(f.umf) + "," + to_string(f.lmf) + ")";
}

TriangularFuzzyNumber parse_t1(std::string_view text) {
  TupleParser p(text);
  TriangularFuzzyNumber t = p.triple();
  p.finish();
  return t;
}

IntervalType2FuzzyNumber parse_it2(std::string_view text) {
  TupleParser p(text);
  p.expect('(');
  const TriangularFuzzyNumber upper = p.triple();
  p.expect(',');
  const TriangularFuzzyNumber lower = p.triple();
  p.expect(')');
  p.finish();
  return p.wrap([&] { return IntervalType2FuzzyNumber(upper, lower); });
}

}  // namespace morrap
