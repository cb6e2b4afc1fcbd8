#include <doctest.h>

#include <vector>

#include "morrap/error.hpp"
#include "morrap/generation.hpp"

using namespace morrap;

namespace {

UniformDraw constant(double v) {
  return [v] { return v; };
}

GenerationSpec plant_spec() {
  GenerationSpec s;
  s.a = 0.5;
  s.b = 0.999999;
  return s;
}

}  // namespace

TEST_SUITE("generation") {
  TEST_CASE("T1 with zero draws spans the support") {
    const auto t = generate_t1(0.55, plant_spec(), constant(0.0));
    CHECK(t == TriangularFuzzyNumber(0.5, 0.55, 0.999999));
  }

  TEST_CASE("T1 with draws near one collapses on r") {
    const auto t = generate_t1(0.55, plant_spec(), constant(0.999999));
    CHECK(std::abs(t.l - 0.55) <= 1e-6);
    CHECK(std::abs(t.u - 0.55) <= 1e-6);
    CHECK(t.m == 0.55);
  }

  TEST_CASE("r outside the support is rejected") {
    CHECK_THROWS_AS(generate_t1(0.3, plant_spec(), constant(0.5)), Error);
    CHECK_THROWS_AS(generate_it2(0.3, plant_spec(), constant(0.5)), Error);
    GenerationSpec bad = plant_spec();
    bad.b = 1.0;
    CHECK_THROWS_AS(bad.validate(), Error);
  }

  TEST_CASE("IT2 traces with constant draws") {
    auto f = generate_it2(0.55, plant_spec(), constant(0.0));
    CHECK(f.umf == TriangularFuzzyNumber(0.5, 0.55, 0.999999));
    CHECK(f.lmf == TriangularFuzzyNumber(0.5, 0.55, 0.999999));
    f = generate_it2(0.55, plant_spec(), constant(1.0));
    CHECK(f.umf == TriangularFuzzyNumber(0.5, 0.55, 0.999999));
    CHECK(f.lmf == TriangularFuzzyNumber(0.55, 0.55, 0.55));
  }

  TEST_CASE("draws are consumed in textual order") {
    // Step 2 left/right, step 4 left/right, step 5 left/right.
    const std::vector<double> seq{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    std::size_t i = 0;
    const UniformDraw draw = [&] { return seq.at(i++); };
    const GenerationSpec s = plant_spec();
    const double r = 0.7;
    const auto f = generate_it2(r, s, draw);
    CHECK(i == 6);
    const double rl = s.a + (r - s.a) * 0.1;
    const double ru = s.b - (s.b - r) * 0.2;
    CHECK(f.lmf.l == doctest::Approx(rl + (r - rl) * 0.3));
    CHECK(f.lmf.u == doctest::Approx(ru - (ru - r) * 0.4));
    CHECK(f.umf.l == doctest::Approx(rl - (rl - s.a) * 0.5));
    CHECK(f.umf.u == doctest::Approx(ru + (s.b - ru) * 0.6));
  }

  TEST_CASE("a single shared draw reproduces the published first fuzzy reliability") {
    // All six draws equal to q give UMF ends a + (r - a) q (1 - q) and
    // b - (b - r) q (1 - q); q = 0.61718 fits the published r1.
    const auto f = generate_it2(0.55, plant_spec(), constant(0.61718));
    CHECK(std::abs(f.umf.l - 0.511813) <= 2e-5);
    CHECK(std::abs(f.umf.u - 0.893671) <= 2e-5);
    CHECK(std::abs(f.lmf.l - 0.542672) <= 2e-5);
    CHECK(std::abs(f.lmf.u - 0.615958) <= 2e-5);
  }

  TEST_CASE("ordering and containment over seeded draws") {
    GenerationSpec s = plant_spec();
    SeededStream stream(20240101);
    const UniformDraw draw = std::ref(stream);
    SeededStream pick(7);
    int bad = 0;
    for (int k = 0; k < 10000; ++k) {
      const double r = s.a + (s.b - s.a) * pick();
      const auto f = generate_it2(r, s, draw);
      const bool ok = s.a <= f.umf.l && f.umf.l <= f.lmf.l && f.lmf.l <= r && r <= f.lmf.u &&
                      f.lmf.u <= f.umf.u && f.umf.u <= s.b && f.umf.m == r && f.lmf.m == r;
      const auto t = generate_t1(r, s, draw);
      const bool t_ok = s.a <= t.l && t.l <= r && r <= t.u && t.u <= s.b;
      if (!ok || !t_ok) ++bad;
    }
    CHECK(bad == 0);
  }

  TEST_CASE("seeded sets are reproducible") {
    GenerationSpec s = plant_spec();
    s.seed = 42;
    s.r_values = {0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.92, 0.95};
    const auto a = generate_set(s);
    const auto b = generate_set(s);
    CHECK(a.it2 == b.it2);
    CHECK(a.t1 == b.t1);
    s.seed = 43;
    CHECK_FALSE(generate_set(s).it2 == a.it2);
  }

  TEST_CASE("seeded stream is fixed across platforms") {
    SeededStream a(1);
    SeededStream b(1);
    for (int i = 0; i < 100; ++i) {
      const double v = a();
      CHECK(v == b());
      CHECK(v >= 0.0);
      CHECK(v < 1.0);
    }
    // The C++ standard fixes the 10000th mt19937_64 output for seed 5489.
    SeededStream c(5489);
    for (int i = 0; i < 9999; ++i) c();
    CHECK(c() == static_cast<double>(9981545732273789042ULL >> 11) * 0x1.0p-53);
  }
}
