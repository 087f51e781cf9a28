#include <doctest.h>

#include <set>

#include "mosaic/grid.hpp"
#include "mosaic/verify.hpp"

using namespace mosaic;

TEST_SUITE("verify") {
  TEST_CASE("embedded manifest") {
    const auto& m = manifest();
    std::set<std::string> ids;
    std::set<int> criteria;
    for (const auto& e : m) {
      ids.insert(e.id);
      criteria.insert(e.criterion);
    }
    CHECK(ids.size() == m.size());
    CHECK(ids.count("thm-2.3") == 1);
    CHECK(ids.count("invariants") == 1);
    CHECK(criteria == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  }

  TEST_CASE("manifest parsing") {
    const auto m = parse_manifest("# comment\na | required | 1 | first\nb | extended | 2 | second\n");
    REQUIRE(m.size() == 2);
    CHECK(m[1].tier == Tier::Extended);
    CHECK(m[1].criterion == 2);
    CHECK(m[1].description == "second");
    CHECK_THROWS_AS(parse_manifest("a | required | 1 | x\na | required | 1 | y\n"), ParseError);
    CHECK_THROWS_AS(parse_manifest("a | sometimes | 1 | x\n"), ParseError);
    CHECK_THROWS_AS(parse_manifest("a | required | x\n"), ParseError);
  }

  TEST_CASE("running checks") {
    VerifyContext ctx;
    CHECK_THROWS_AS(run_check("no-such-check", ctx), std::out_of_range);
    const CheckOutcome o = run_check("bounds-table", ctx);
    CHECK(o.passed);
    CHECK_FALSE(o.details.empty());
  }

  TEST_CASE("result formatting") {
    VerifyResult r{"bounds-table", VerifyStatus::Pass, "ok", std::chrono::duration<double>(1.5)};
    CHECK(format_text(r, false) == "PASS bounds-table: ok");
    CHECK(format_text(r, true).find("1.5") != std::string::npos);
    const std::string j = format_json(r, false);
    CHECK(j.find("\"id\":\"bounds-table\"") != std::string::npos);
    CHECK(j.find("elapsed") == std::string::npos);
  }
}
