#include <doctest.h>

#include <set>

#include "mosaic/tile.hpp"

using namespace mosaic;

namespace {

// Endpoint offsets from the tile center, screen coordinates (y down).
struct Vec {
  int x;
  int y;
  bool operator==(const Vec&) const = default;
};

Vec offset(Family f, Endpoint e) {
  if (f == Family::Corner) {
    constexpr Vec v[] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    return v[e];
  }
  constexpr Vec v[] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};
  return v[e];
}

Endpoint geometric_image(Family f, Endpoint e, Symmetry g) {
  Vec p = offset(f, e);
  if (g.reflects()) p.x = -p.x;
  for (int i = 0; i < g.quarter_turns(); ++i) p = {-p.y, p.x};
  for (Endpoint q = 0; q < 4; ++q)
    if (offset(f, q) == p) return q;
  FAIL("no endpoint at image position");
  return 0;
}

}  // namespace

TEST_SUITE("tile") {
  TEST_CASE("catalogs hold eleven tiles in code order") {
    for (Family f : {Family::Corner, Family::Traditional}) {
      const auto cat = tile_catalog(f);
      REQUIRE(cat.size() == 11);
      for (int i = 0; i < 11; ++i) CHECK(cat[static_cast<std::size_t>(i)].code == i);
      CHECK(cat[0].is_blank());
      for (int i = 1; i < 11; ++i) CHECK_FALSE(cat[static_cast<std::size_t>(i)].is_blank());
    }
  }

  TEST_CASE("corner tile shapes") {
    auto diag = [](const Tile& t) { return t.pairs[0] == make_pair(corner::NW, corner::SE) ||
                                           t.pairs[0] == make_pair(corner::NE, corner::SW); };
    for (int code = 1; code <= 4; ++code) {
      const Tile& t = tile(Family::Corner, static_cast<TileCode>(code));
      CHECK(t.pair_count == 1);
      CHECK_FALSE(diag(t));
    }
    for (int code = 5; code <= 6; ++code) {
      const Tile& t = tile(Family::Corner, static_cast<TileCode>(code));
      CHECK(t.pair_count == 1);
      CHECK(diag(t));
    }
    for (int code = 7; code <= 10; ++code) {
      const Tile& t = tile(Family::Corner, static_cast<TileCode>(code));
      CHECK(t.pair_count == 2);
      CHECK(t.endpoint_mask() == 0xF);
    }
    const Tile& t9 = tile(Family::Corner, 9);
    const Tile& t10 = tile(Family::Corner, 10);
    CHECK(t9.pairs == t10.pairs);
    REQUIRE(t9.over);
    REQUIRE(t10.over);
    CHECK(*t9.over == make_pair(corner::NW, corner::SE));
    CHECK(*t10.over == make_pair(corner::NE, corner::SW));
    CHECK_FALSE(tile(Family::Corner, 7).is_crossing());
  }

  TEST_CASE("traditional straight tiles") {
    CHECK(tile(Family::Traditional, 5).pairs[0] == make_pair(edge::N, edge::S));
    CHECK(tile(Family::Traditional, 6).pairs[0] == make_pair(edge::E, edge::W));
    CHECK(*tile(Family::Traditional, 9).over == make_pair(edge::N, edge::S));
  }

  TEST_CASE("over strand is one of the tile's pairs") {
    for (Family f : {Family::Corner, Family::Traditional})
      for (const Tile& t : tile_catalog(f))
        if (t.over) CHECK((t.pairs[0] == *t.over || t.pairs[1] == *t.over));
  }

  TEST_CASE("tiles using the north-west corner") {
    std::set<int> uses;
    for (const Tile& t : tile_catalog(Family::Corner))
      if (uses_endpoint(t, corner::NW)) uses.insert(t.code);
    CHECK(uses == std::set<int>{1, 4, 5, 7, 8, 9, 10});
  }

  TEST_CASE("dihedral group axioms") {
    const Symmetry r = Symmetry::rot90();
    CHECK(r.compose(r).compose(r).compose(r) == Symmetry::identity());
    for (int a = 0; a < 8; ++a) {
      const Symmetry g = Symmetry::from_index(a);
      CHECK(g.compose(g.inverse()) == Symmetry::identity());
      CHECK(g.compose(Symmetry::identity()) == g);
      for (int b = 0; b < 8; ++b)
        for (int c = 0; c < 8; ++c) {
          const Symmetry h = Symmetry::from_index(b), k = Symmetry::from_index(c);
          CHECK(g.compose(h).compose(k) == g.compose(h.compose(k)));
        }
    }
    CHECK(Symmetry::flip_horizontal().compose(Symmetry::flip_horizontal()) == Symmetry::identity());
  }

  TEST_CASE("endpoint action matches the geometric action") {
    for (Family f : {Family::Corner, Family::Traditional})
      for (int a = 0; a < 8; ++a)
        for (Endpoint e = 0; e < 4; ++e) {
          const Symmetry g = Symmetry::from_index(a);
          CHECK(g.map(f, e) == geometric_image(f, e, g));
        }
  }

  TEST_CASE("tile action is a group action and preserves crossings") {
    for (Family f : {Family::Corner, Family::Traditional})
      for (int code = 0; code < 11; ++code)
        for (int a = 0; a < 8; ++a) {
          const Symmetry g = Symmetry::from_index(a);
          const TileCode img = transform_tile(f, static_cast<TileCode>(code), g);
          const Tile& src = tile(f, static_cast<TileCode>(code));
          const Tile& dst = tile(f, img);
          CHECK(src.pair_count == dst.pair_count);
          for (const EndpointPair& p : src.matching()) {
            const EndpointPair q = make_pair(g.map(f, p.a), g.map(f, p.b));
            CHECK((dst.pairs[0] == q || (dst.pair_count == 2 && dst.pairs[1] == q)));
          }
          if (src.over) CHECK(*dst.over == make_pair(g.map(f, src.over->a), g.map(f, src.over->b)));
          for (int b = 0; b < 8; ++b) {
            const Symmetry h = Symmetry::from_index(b);
            CHECK(transform_tile(f, transform_tile(f, static_cast<TileCode>(code), h), g) ==
                  transform_tile(f, static_cast<TileCode>(code), g.compose(h)));
          }
        }
  }

  TEST_CASE("rotating a corner crossing a quarter turn exchanges the two crossing codes") {
    CHECK(transform_tile(Family::Corner, 9, Symmetry::rot90()) == 10);
    CHECK(transform_tile(Family::Corner, 1, Symmetry::rot90()) == 3);
  }

  TEST_CASE("mirror exchanges over and under only") {
    for (Family f : {Family::Corner, Family::Traditional})
      for (int code = 0; code < 11; ++code) {
        const TileCode m = mirror_tile(f, static_cast<TileCode>(code));
        if (code == 9) CHECK(m == 10);
        else if (code == 10) CHECK(m == 9);
        else CHECK(m == code);
      }
  }

  TEST_CASE("family names round-trip") {
    CHECK(parse_family("corner") == Family::Corner);
    CHECK(parse_family(family_name(Family::Traditional)) == Family::Traditional);
    CHECK_FALSE(parse_family("hex").has_value());
  }
}
