#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "morrap/error.hpp"
#include "morrap/model.hpp"

using namespace morrap;

TEST_SUITE("model") {
  TEST_CASE("component cost grows with reliability and rejects r = 1") {
    SubsystemParams p;
    p.alpha = 0.611360e-5;
    p.beta = 1.5;
    p.v = 4;
    p.w = 9;
    CHECK(component_cost(0.99, p, 1000) > component_cost(0.9, p, 1000));
    CHECK(component_cost(0.9, p, 1000) > component_cost(0.5, p, 1000));
    CHECK(component_cost(1 - 1e-12, p, 1000) > 1e6);
    CHECK_THROWS_AS(component_cost(1.0, p, 1000), Error);
    CHECK_THROWS_AS(component_cost(0.0, p, 1000), Error);
    const double expected = 0.611360e-5 * std::pow(-1000.0 / std::log(0.622208), 1.5);
    CHECK(component_cost(0.622208, p, 1000) == doctest::Approx(expected).epsilon(1e-14));
  }

  TEST_CASE("published compromise designs evaluate to their printed objectives") {
    const auto inst = fixtures::plant(fixtures::kKmCrisp, 5);
    auto e = evaluate(inst, DesignVector({5, 3, 3, 3, 3, 2, 2, 2, 2, 1}));
    CHECK(std::abs(e.reliability - 0.6846485) <= 1e-4);
    CHECK(std::abs(e.cost - 286.5739) <= 0.05);
    CHECK(e.feasible);
    e = evaluate(inst, DesignVector({5, 3, 3, 3, 3, 2, 2, 2, 2, 2}));
    CHECK(std::abs(e.reliability - 0.7683246) <= 1e-4);
    CHECK(std::abs(e.cost - 318.8198) <= 0.05);
  }

  TEST_CASE("single component") {
    ProblemInstance inst;
    SubsystemParams p;
    p.alpha = 1e-5;
    p.beta = 1.5;
    p.v = 3;
    p.w = 7;
    inst.subsystems = {p};
    inst.volume_limit = 10;
    inst.weight_limit = 10;
    inst.mission_time = 1000;
    inst.reliabilities = {0.9};
    const auto e = evaluate(inst, DesignVector({1}));
    CHECK(e.reliability == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(e.volume == 3);
    CHECK(e.weight == doctest::Approx(7 * std::exp(0.25)));
  }

  TEST_CASE("all-three and all-one designs are feasible") {
    const auto inst = fixtures::plant(fixtures::kKmCrisp, 3);
    const auto e = evaluate(inst, DesignVector(std::vector<int>(10, 3)));
    double sum_w = 0;
    for (double w : fixtures::kWeight) sum_w += w;
    CHECK(e.volume == 279);
    CHECK(e.weight == doctest::Approx(3 * std::exp(0.75) * sum_w));
    CHECK(e.feasible);
    CHECK(check_feasible(inst, DesignVector(std::vector<int>(10, 1))).feasible);
  }

  TEST_CASE("violations name the breached constraint") {
    auto inst = fixtures::plant(fixtures::kKmCrisp, 3);
    inst.volume_limit = 1;
    const auto rep = check_feasible(inst, DesignVector(std::vector<int>(10, 1)));
    REQUIRE_FALSE(rep.feasible);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == ConstraintKind::volume);
    CHECK(rep.violations[0].margin == doctest::Approx(rep.violations[0].value - 1));
    CHECK(rep.violations[0].describe().find("volume") != std::string::npos);

    inst = fixtures::plant(fixtures::kKmCrisp, 3);
    const auto over = check_feasible(inst, DesignVector({4, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK_FALSE(over.feasible);
    CHECK(over.violations[0].kind == ConstraintKind::redundancy);
    CHECK(over.violations[0].subsystem == 0);

    inst.subsystems[2].r_max = 0.6;
    const auto bound = check_feasible(inst, DesignVector(std::vector<int>(10, 1)));
    CHECK(bound.violations.at(0).kind == ConstraintKind::reliability_bound);
  }

  TEST_CASE("dimension mismatch is an error") {
    const auto inst = fixtures::plant(fixtures::kKmCrisp, 3);
    CHECK_THROWS_AS(evaluate(inst, DesignVector({1, 2})), Error);
  }

  TEST_CASE("evaluate agrees with the direct transcription and is monotone (1000 random instances)") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> pick_m(1, 10);
    int mismatches = 0, non_monotone = 0, feasibility_mismatch = 0;
    for (int t = 0; t < 1000; ++t) {
      const std::size_t m = static_cast<std::size_t>(pick_m(rng));
      const auto inst = fixtures::random_instance(rng, m, 5);
      std::uniform_int_distribution<int> level(1, 4);
      std::vector<int> n(m);
      for (auto& x : n) x = level(rng);
      const auto e = evaluate(inst, DesignVector(n));
      const auto o = fixtures::naive(inst, n);
      if (std::abs(e.reliability - o.reliability) > 1e-12 || std::abs(e.cost - o.cost) > 1e-9 * o.cost ||
          std::abs(e.volume - o.volume) > 1e-9 || std::abs(e.weight - o.weight) > 1e-9 * o.weight) {
        ++mismatches;
      }
      if (e.feasible != o.feasible) ++feasibility_mismatch;
      for (std::size_t i = 0; i < m; ++i) {
        auto up = n;
        ++up[i];
        const auto u = evaluate(inst, DesignVector(up));
        if (!(u.reliability > e.reliability) || !(u.cost > e.cost) || !(u.volume > e.volume) ||
            !(u.weight > e.weight)) {
          ++non_monotone;
        }
      }
    }
    CHECK(mismatches == 0);
    CHECK(non_monotone == 0);
    CHECK(feasibility_mismatch == 0);
  }

  TEST_CASE("redundancy profiles") {
    auto inst = fixtures::plant(fixtures::kKmCrisp, 4);
    apply_profile(inst, RedundancyProfile::config);
    CHECK(inst.subsystems[0].n_max == 4);
    apply_profile(inst, RedundancyProfile::strict);
    CHECK(inst.subsystems[0].n_max == 3);
    apply_profile(inst, parse_profile("reproduce"));
    CHECK(inst.subsystems[9].n_max == 5);
    CHECK_THROWS_AS(parse_profile("loose"), Error);
  }

  TEST_CASE("design ordering and text form") {
    CHECK(DesignVector({1, 2}) < DesignVector({2, 1}));
    CHECK(to_string(DesignVector({5, 3, 1})) == "(5,3,1)");
  }

  TEST_CASE("instance validation") {
    auto inst = fixtures::plant(fixtures::kKmCrisp, 3);
    CHECK_NOTHROW(inst.validate());
    inst.reliabilities[0] = 1.0;
    CHECK_THROWS_AS(inst.validate(), Error);
    inst = fixtures::plant(fixtures::kKmCrisp, 3);
    inst.subsystems[1].alpha = 0;
    CHECK_THROWS_AS(inst.validate(), Error);
  }
}
