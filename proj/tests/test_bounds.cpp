#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "mosaic/bounds.hpp"
#include "mosaic/census.hpp"
#include "mosaic/knot_table.hpp"

using namespace mosaic;

namespace {

// Components of P(t_1, ..., t_k): with e even entries, e components when
// e >= 2, one when e == 1; all odd gives one for odd k and two for even k.
int pretzel_components(const std::vector<int>& t) {
  const int even = static_cast<int>(std::count_if(t.begin(), t.end(), [](int x) { return x % 2 == 0; }));
  if (even >= 2) return even;
  if (even == 1) return 1;
  return t.size() % 2 ? 1 : 2;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("square corner bound") {
    const std::vector<int> want{4, 8, 13, 18, 26, 32, 43, 50, 64, 72};
    for (int n = 3; n <= 12; ++n) CHECK(corner_square_bound(n) == want[static_cast<std::size_t>(n - 3)]);
    CHECK_THROWS_AS(corner_square_bound(2), std::invalid_argument);
  }

  TEST_CASE("traditional bound") {
    const std::vector<int> want{3, 7, 13, 23, 31, 47, 57, 79, 91};
    for (int n = 4; n <= 12; ++n) CHECK(traditional_square_bound(n) == want[static_cast<std::size_t>(n - 4)]);
    CHECK_THROWS_AS(traditional_square_bound(3), std::invalid_argument);
  }

  TEST_CASE("rectangular bound is symmetric and extends the square bound") {
    for (int m = 3; m <= 12; ++m)
      for (int n = 3; n <= 12; ++n) CHECK(corner_rect_bound(m, n) == corner_rect_bound(n, m));
    for (int n = 3; n <= 12; ++n) CHECK(corner_rect_bound(n, n) == corner_square_bound(n));
    CHECK(corner_rect_bound(4, 6) == 12);
    CHECK(corner_rect_bound(3, 5) == 8);
    CHECK_THROWS_AS(corner_rect_bound(2, 5), std::invalid_argument);
  }

  TEST_CASE("rectangular bound is exact on small grids") {
    for (int m = 3; m <= 7; ++m)
      for (int n = m; n <= 7; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(max_crossings_transfer(m, n) == corner_rect_bound(m, n));
      }
  }

  TEST_CASE("bound reports name the formula case") {
    CHECK(bound_report(Family::Corner, 4, 4).formula_case == FormulaCase::EvenEven);
    CHECK(bound_report(Family::Corner, 5, 5).formula_case == FormulaCase::OddOdd);
    CHECK(bound_report(Family::Corner, 4, 5).formula_case == FormulaCase::OddEven);
    CHECK(bound_report(Family::Corner, 5, 4).bound == bound_report(Family::Corner, 4, 5).bound);
    CHECK(bound_report(Family::Traditional, 9, 9).bound == 47);
    CHECK(bound_report(Family::Traditional, 9, 9).formula_case == FormulaCase::TraditionalOdd);
    CHECK_THROWS_AS(bound_report(Family::Traditional, 5, 6), std::invalid_argument);
  }

  TEST_CASE("max pattern meets the bound") {
    for (int n = 3; n <= 12; ++n) {
      CAPTURE(n);
      const Mosaic m = max_pattern(n);
      CHECK(validate(m).valid);
      CHECK(crossing_count(m) == corner_square_bound(n));
    }
  }

  TEST_CASE("pretzel layout") {
    const Mosaic m = pretzel({-2, 3, 7});
    CHECK(m.rows() == 11);
    CHECK(m.cols() == 7);
    CHECK(validate(m).valid);
    CHECK(crossing_count(m) == 12);
    CHECK(classify(pretzel({1, 1, 1})).label() == "3_1");
    CHECK_THROWS_AS(pretzel({}), std::invalid_argument);
    CHECK_THROWS_AS(pretzel({2, 0}), std::invalid_argument);
  }

  TEST_CASE("pretzel component counts follow the parity rule") {
    for (const std::vector<int>& t : std::vector<std::vector<int>>{
             {1}, {2}, {1, 1}, {2, 2}, {3, -2}, {1, 1, 1}, {2, 2, 2}, {2, 3, 4}, {-2, 3, 7}, {1, 2, 3, 4}, {3, 3, 3, 3}}) {
      const Mosaic m = pretzel(t);
      REQUIRE(validate(m).valid);
      CHECK(count_components(m) == pretzel_components(t));
      int total = 0;
      for (int x : t) total += std::abs(x);
      CHECK(crossing_count(m) == total);
    }
  }

  TEST_CASE("make_alternating") {
    const Mosaic m = parse("corner 3 3\n6 9 5\n8 0 9\n5 9 6\n");
    const auto alt = make_alternating(m);
    REQUIRE(alt);
    CHECK(is_alternating(trace(*alt)));
    CHECK(skeleton(*alt) == skeleton(m));
    for (int n = 3; n <= 8; ++n) {
      const Mosaic p = max_pattern(n);
      CHECK(is_alternating(trace(p)));
    }
  }

  TEST_CASE("traditional weaves") {
    const WeaveResult w5 = saturated_weave_traditional(5);
    CHECK(w5.crossings == 7);
    const WeaveResult w7 = saturated_weave_traditional(7);
    CHECK(w7.crossings == 23);
    for (const WeaveResult* w : {&w5, &w7}) {
      CHECK(validate(w->mosaic).valid);
      CHECK(count_components(w->mosaic) == 1);
      CHECK(w->certificate.crossing_number == w->crossings);
      CHECK(w->crossings == traditional_square_bound(w->mosaic.rows()));
    }
    CHECK_THROWS_AS(saturated_weave_traditional(6), std::invalid_argument);
    CHECK_THROWS_AS(saturated_weave_traditional(5, 100), WeaveSearchError);
  }

  TEST_CASE("counterexample harness rejects a wrong bound") {
    const CounterexampleReport good = counterexample_check();
    CHECK(good.passed);
    CHECK(good.weave.crossings == 47);
    CHECK(good.corner_bound == 43);
    const CounterexampleReport bad = counterexample_check([](int) { return 99; });
    CHECK_FALSE(bad.passed);
  }
}
