#include <doctest.h>

#include <set>

#include "mosaic/bounds.hpp"
#include "mosaic/bracket.hpp"
#include "mosaic/knot_table.hpp"

using namespace mosaic;

namespace {

LaurentPoly mono(std::int64_t c, int e) { return LaurentPoly::monomial(c, e); }

}  // namespace

TEST_SUITE("knot_table") {
  TEST_CASE("table holds the unknot and the prime knots through 8_21 plus 9_1") {
    const auto& table = knot_table();
    CHECK(table.size() == 37);
    CHECK(table.front().name == "unknot");
    CHECK(table.back().name == "9_1");
    std::set<std::string> names;
    for (const auto& e : table) names.insert(e.name);
    CHECK(names.size() == table.size());
    CHECK(names.count("8_21") == 1);
  }

  TEST_CASE("Jones polynomials in KnotInfo syntax") {
    CHECK(parse_jones("t+ t^3-t^4") == mono(1, 1) + mono(1, 3) + mono(-1, 4));
    CHECK(parse_jones("t^(-2)-t^(-1)+ 1-t+ t^2") ==
          mono(1, -2) + mono(-1, -1) + mono(1, 0) + mono(-1, 1) + mono(1, 2));
    CHECK(parse_jones("2*t^3") == mono(2, 3));
    CHECK(parse_jones("1") == LaurentPoly(1));
    CHECK_THROWS_AS(parse_jones(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_jones("t^(2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_jones("x"), std::invalid_argument);
  }

  TEST_CASE("computed brackets reproduce the published polynomials") {
    for (const auto& e : knot_table()) {
      CAPTURE(e.name);
      CHECK(jones_from_normalized(e.normalized) == e.published_jones);
    }
  }

  TEST_CASE("table polynomials are pairwise distinct up to mirror") {
    const auto& table = knot_table();
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = i + 1; j < table.size(); ++j) {
        CHECK(table[i].normalized != table[j].normalized);
        CHECK(table[i].normalized != table[j].normalized.inverted());
      }
  }

  TEST_CASE("malformed table lines") {
    CHECK_THROWS_AS(parse_knot_table("3_1 | [[1,5,2,4]]\n"), ParseError);
    CHECK_THROWS_AS(parse_knot_table("3_1 | [[1,5,2]] | t\n"), ParseError);
    CHECK(parse_knot_table("# only a comment\n\n").empty());
  }

  TEST_CASE("lookup finds both chiralities") {
    const auto& trefoil = knot_table()[1];
    REQUIRE(trefoil.name == "3_1");
    const auto as_table = lookup_normalized(trefoil.normalized);
    REQUIRE(as_table);
    CHECK(as_table->name == "3_1");
    CHECK(as_table->chirality == Chirality::AsTable);
    const auto mirrored = lookup_normalized(trefoil.normalized.inverted());
    REQUIRE(mirrored);
    CHECK(mirrored->chirality == Chirality::Mirrored);
    const auto figure_eight = lookup_normalized(knot_table()[2].normalized);
    REQUIRE(figure_eight);
    CHECK(figure_eight->chirality == Chirality::Amphichiral);
    CHECK_FALSE(lookup_normalized(mono(5, 0)));
  }

  TEST_CASE("classification of mosaics") {
    const KnotId t = classify(parse("corner 3 3\n6 10 5\n8 0 9\n5 10 6\n"));
    CHECK(t.label() == "3_1");
    CHECK(t.diagram_crossings == 3);
    // The 3x3 trefoil with these tile codes is left-handed.
    CHECK(t.chirality == Chirality::Mirrored);
    CHECK(classify(parse("corner 2 2\n3 4\n0 0\n")).label() == "unknot");
    CHECK(classify(pretzel({2, 2})).label() == "link(2)");
    CHECK(classify(Mosaic(Family::Corner, 3, 3)).label() == "empty");
    CHECK(classify(pretzel({1, 1, 1})).label() == "3_1");
    CHECK(classify(pretzel({3, -2})).label() == "unknot");
  }
}
