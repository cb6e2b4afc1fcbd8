#include "morrap/generation.hpp"

#include <algorithm>
#include <string>

#include "morrap/error.hpp"

namespace morrap {

void GenerationSpec::validate() const {
  if (!(0.0 < a && a < b && b < 1.0)) {
    fail(ErrorKind::invalid_argument, "generation support must satisfy 0 < a < b < 1");
  }
  for (double r : r_values) {
    if (!(r >= a && r <= b)) {
      fail(ErrorKind::invalid_argument,
           "crisp reliability " + std::to_string(r) + " lies outside the support [a, b]");
    }
  }
}

namespace {

void check_seed_value(double r, const GenerationSpec& spec) {
  if (!(0.0 < spec.a && spec.a < spec.b && spec.b < 1.0)) {
    fail(ErrorKind::invalid_argument, "generation support must satisfy 0 < a < b < 1");
  }
  if (!(r >= spec.a && r <= spec.b)) {
    fail(ErrorKind::invalid_argument,
         "crisp reliability " + std::to_string(r) + " lies outside the support [a, b]");
  }
}

double next(const UniformDraw& draw) {
  const double v = draw();
  if (!(v >= 0.0 && v <= 1.0)) fail(ErrorKind::invalid_argument, "random draw outside [0, 1]");
  return v;
}

struct Step2 {
  double left;
  double right;
};

Step2 outer_ends(double r, const GenerationSpec& spec, const UniformDraw& draw) {
  // Clamps absorb rounding only; the formulas already stay inside the bounds.
  const double left = std::clamp(spec.a + (r - spec.a) * next(draw), spec.a, r);
  const double right = std::clamp(spec.b - (spec.b - r) * next(draw), r, spec.b);
  return {left, right};
}

}  // namespace

TriangularFuzzyNumber generate_t1(double r, const GenerationSpec& spec, const UniformDraw& draw) {
  check_seed_value(r, spec);
  const Step2 s = outer_ends(r, spec, draw);
  return {s.left, r, s.right};
}

IntervalType2FuzzyNumber generate_it2(double r, const GenerationSpec& spec,
                                      const UniformDraw& draw) {
  check_seed_value(r, spec);
  const Step2 s = outer_ends(r, spec, draw);
  const double lower_left = std::clamp(s.left + (r - s.left) * next(draw), s.left, r);
  const double lower_right = std::clamp(s.right - (s.right - r) * next(draw), r, s.right);
  const double upper_left = std::clamp(s.left - (s.left - spec.a) * next(draw), spec.a, s.left);
  const double upper_right = std::clamp(s.right + (spec.b - s.right) * next(draw), s.right, spec.b);
  return {TriangularFuzzyNumber(upper_left, r, upper_right),
          TriangularFuzzyNumber(lower_left, r, lower_right)};
}

GeneratedSet generate_set(const GenerationSpec& spec) {
  spec.validate();
  GeneratedSet out;
  SeededStream t1_stream(spec.seed);
  SeededStream it2_stream(spec.seed + 1);
  const UniformDraw t1_draw = std::ref(t1_stream);
  const UniformDraw it2_draw = std::ref(it2_stream);
  for (double r : spec.r_values) {
    out.t1.push_back(generate_t1(r, spec, t1_draw));
    out.it2.push_back(generate_it2(r, spec, it2_draw));
  }
  return out;
}

}  // namespace morrap
