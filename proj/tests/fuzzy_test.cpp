#include <doctest.h>

#include "morrap/error.hpp"
#include "morrap/fuzzy.hpp"

using namespace morrap;

namespace {

IntervalType2FuzzyNumber fig1() { return {{2, 4, 6}, {3, 4, 5}}; }

}  // namespace

TEST_SUITE("fuzzy") {
  TEST_CASE("triangular number rejects unordered parameters") {
    CHECK_THROWS_AS(TriangularFuzzyNumber(3, 2, 4), Error);
    CHECK_NOTHROW(TriangularFuzzyNumber(1, 1, 1));
  }

  TEST_CASE("triangular membership") {
    const TriangularFuzzyNumber t(2, 4, 6);
    CHECK(t.membership(4) == 1.0);
    CHECK(t.membership(3) == doctest::Approx(0.5));
    CHECK(t.membership(5.5) == doctest::Approx(0.25));
    CHECK(t.membership(1.9) == 0.0);
    CHECK(t.membership(6.1) == 0.0);
    CHECK(TriangularFuzzyNumber(1, 1, 1).membership(1) == 1.0);
  }

  TEST_CASE("IT2 invariants are enforced") {
    CHECK_THROWS_AS(IntervalType2FuzzyNumber({2, 4, 6}, {3, 4.5, 5}), Error);
    CHECK_THROWS_AS(IntervalType2FuzzyNumber({2, 4, 6}, {1, 4, 5}), Error);
    CHECK_THROWS_AS(IntervalType2FuzzyNumber({2, 4, 6}, {3, 4, 7}), Error);
    CHECK(fig1().apex() == 4.0);
    CHECK_FALSE(fig1().collapsed());
  }

  TEST_CASE("membership bounds") {
    auto b = membership_bounds(fig1(), 4);
    CHECK(b.lower == 1.0);
    CHECK(b.upper == 1.0);
    b = membership_bounds(fig1(), 3);
    CHECK(b.lower == doctest::Approx(0.0));
    CHECK(b.upper == doctest::Approx(0.5));
    b = membership_bounds(fig1(), 7);
    CHECK(b.lower == 0.0);
    CHECK(b.upper == 0.0);
  }

  TEST_CASE("addition") {
    CHECK(it2_add(fig1(), fig1()) == IntervalType2FuzzyNumber({4, 8, 12}, {6, 8, 10}));
    const IntervalType2FuzzyNumber zero({0, 0, 0}, {0, 0, 0});
    CHECK(it2_add(fig1(), zero) == fig1());
    const IntervalType2FuzzyNumber a({1, 2, 3}, {1.5, 2, 2.5});
    const IntervalType2FuzzyNumber b({0, 1, 2}, {0.5, 1, 1.5});
    CHECK(it2_add(a, b) == IntervalType2FuzzyNumber({1, 3, 5}, {2, 3, 4}));
  }

  TEST_CASE("multiplication") {
    const IntervalType2FuzzyNumber one({1, 1, 1}, {1, 1, 1});
    CHECK(it2_mul(fig1(), one) == fig1());
    CHECK(it2_mul(fig1(), fig1()) == IntervalType2FuzzyNumber({4, 16, 36}, {9, 16, 25}));
    const IntervalType2FuzzyNumber neg({-1, 1, 2}, {0, 1, 1});
    CHECK_THROWS_AS(it2_mul(neg, fig1()), Error);
  }

  TEST_CASE("scaling and division") {
    CHECK(it2_scale(fig1(), 1.0) == fig1());
    CHECK(it2_scale(fig1(), 0.5) == IntervalType2FuzzyNumber({1, 2, 3}, {1.5, 2, 2.5}));
    CHECK(it2_divide(fig1(), 2.0) == IntervalType2FuzzyNumber({1, 2, 3}, {1.5, 2, 2.5}));
    CHECK_THROWS_AS(it2_divide(fig1(), 0.0), Error);
    CHECK_THROWS_AS(it2_scale(fig1(), -1.0), Error);
  }

  TEST_CASE("discretization examples") {
    auto d = discretize(fig1(), 3);
    CHECK(d.xs == std::vector<double>{2, 4, 6});
    CHECK(d.upper_grades == std::vector<double>{0, 1, 0});
    CHECK(d.lower_grades == std::vector<double>{0, 1, 0});

    d = discretize(fig1(), 5);
    CHECK(d.xs == std::vector<double>{2, 3, 4, 5, 6});
    const std::vector<double> up{0, 0.5, 1, 0.5, 0};
    const std::vector<double> lo{0, 0, 1, 0, 0};
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(d.upper_grades[i] == doctest::Approx(up[i]));
      CHECK(d.lower_grades[i] == doctest::Approx(lo[i]));
    }

    const IntervalType2FuzzyNumber f({0.511813, 0.55, 0.893671}, {0.542672, 0.55, 0.615958});
    d = discretize(f, 2001);
    CHECK(d.size() == 2001);
    CHECK(d.xs.front() == f.umf.l);
    CHECK(d.xs.back() == f.umf.u);
  }

  TEST_CASE("discretization invariants") {
    const IntervalType2FuzzyNumber f({0.523627, 0.6, 0.905484}, {0.585344, 0.6, 0.65862});
    for (std::size_t n : {3u, 4u, 41u, 2001u}) {
      const auto d = discretize(f, n);
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) CHECK(d.xs[i] > d.xs[i - 1]);
        CHECK(d.lower_grades[i] >= 0.0);
        CHECK(d.lower_grades[i] <= d.upper_grades[i]);
        CHECK(d.upper_grades[i] <= 1.0);
      }
    }
    CHECK_THROWS_AS(discretize(f, 2), Error);
    const IntervalType2FuzzyNumber point({1, 1, 1}, {1, 1, 1});
    try {
      discretize(point, 5);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::degenerate);
    }
  }

  TEST_CASE("text round trip") {
    const IntervalType2FuzzyNumber f({0.511813, 0.55, 0.893671}, {0.542672, 0.55, 0.615958});
    CHECK(parse_it2(to_string(f)) == f);
    CHECK(parse_it2(" ( (2, 4, 6) , (3,4,5) ) ") == fig1());
    CHECK(parse_t1("(0.5,0.55,0.9)") == TriangularFuzzyNumber(0.5, 0.55, 0.9));
    CHECK(to_string(fig1()) == "((2,4,6),(3,4,5))");
  }

  TEST_CASE("malformed text is a config error") {
    for (const char* bad : {"((2,4,6),(3,4,5)", "((2,4,6))", "(2,4)", "((2,4,6),(3,5,5))", "(1,2,3)x", "(a,b,c)"}) {
      CAPTURE(bad);
      try {
        if (std::string_view(bad).starts_with("((")) {
          parse_it2(bad);
        } else {
          parse_t1(bad);
        }
        FAIL("expected an error");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::config);
      }
    }
  }
}
