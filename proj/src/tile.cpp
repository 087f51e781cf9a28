#include "mosaic/tile.hpp"

#include <stdexcept>

namespace mosaic {

namespace {

using Perm = std::array<Endpoint, 4>;

constexpr Tile make_tile(Family f, TileCode code, std::initializer_list<EndpointPair> pairs,
                         std::optional<EndpointPair> over = std::nullopt) {
  Tile t;
  t.family = f;
  t.code = code;
  for (EndpointPair p : pairs) t.pairs[t.pair_count++] = p;
  t.over = over;
  return t;
}

std::array<Tile, kTileCount> build_corner_catalog() {
  using namespace corner;
  const Family f = Family::Corner;
  return {
      make_tile(f, 0, {}),
      make_tile(f, 1, {make_pair(NW, NE)}),
      make_tile(f, 2, {make_pair(SW, SE)}),
      make_tile(f, 3, {make_pair(NE, SE)}),
      make_tile(f, 4, {make_pair(NW, SW)}),
      make_tile(f, 5, {make_pair(NW, SE)}),
      make_tile(f, 6, {make_pair(NE, SW)}),
      make_tile(f, 7, {make_pair(NW, NE), make_pair(SW, SE)}),
      make_tile(f, 8, {make_pair(NW, SW), make_pair(NE, SE)}),
      make_tile(f, 9, {make_pair(NW, SE), make_pair(NE, SW)}, make_pair(NW, SE)),
      make_tile(f, 10, {make_pair(NW, SE), make_pair(NE, SW)}, make_pair(NE, SW)),
  };
}

std::array<Tile, kTileCount> build_traditional_catalog() {
  using namespace edge;
  const Family f = Family::Traditional;
  return {
      make_tile(f, 0, {}),
      make_tile(f, 1, {make_pair(N, E)}),
      make_tile(f, 2, {make_pair(E, S)}),
      make_tile(f, 3, {make_pair(S, W)}),
      make_tile(f, 4, {make_pair(W, N)}),
      make_tile(f, 5, {make_pair(N, S)}),
      make_tile(f, 6, {make_pair(E, W)}),
      make_tile(f, 7, {make_pair(W, N), make_pair(E, S)}),
      make_tile(f, 8, {make_pair(N, E), make_pair(S, W)}),
      make_tile(f, 9, {make_pair(N, S), make_pair(E, W)}, make_pair(N, S)),
      make_tile(f, 10, {make_pair(N, S), make_pair(E, W)}, make_pair(E, W)),
  };
}

const std::array<Tile, kTileCount>& catalog_array(Family f) {
  static const auto corner_catalog = build_corner_catalog();
  static const auto traditional_catalog = build_traditional_catalog();
  return f == Family::Corner ? corner_catalog : traditional_catalog;
}

// Endpoint permutation of a group element. Rotation by a quarter turn clockwise
// is i -> i+1 for both families; the left-right mirror is i -> 1-i on corners
// and i -> -i on edge midpoints.
Perm endpoint_perm(Family f, int quarter_turns, bool reflect) {
  Perm p{};
  for (int i = 0; i < 4; ++i) {
    int j = i;
    if (reflect) j = f == Family::Corner ? (1 - j + 4) % 4 : (4 - j) % 4;
    p[i] = static_cast<Endpoint>((j + quarter_turns) % 4);
  }
  return p;
}

struct GroupTables {
  std::array<std::array<Perm, Symmetry::kOrder>, 2> perms{};
  std::array<std::array<std::uint8_t, Symmetry::kOrder>, Symmetry::kOrder> compose{};
  std::array<std::uint8_t, Symmetry::kOrder> inverse{};
  std::array<std::array<std::array<TileCode, kTileCount>, Symmetry::kOrder>, 2> tile_image{};
};

bool same_tile_shape(const Tile& x, const Tile& y) {
  if (x.pair_count != y.pair_count || x.over != y.over) return false;
  for (int i = 0; i < x.pair_count; ++i) {
    bool found = false;
    for (int j = 0; j < y.pair_count; ++j) found = found || x.pairs[i] == y.pairs[j];
    if (!found) return false;
  }
  return true;
}

GroupTables build_tables() {
  GroupTables t;
  for (int fam = 0; fam < 2; ++fam) {
    for (int g = 0; g < Symmetry::kOrder; ++g) {
      t.perms[fam][g] = endpoint_perm(static_cast<Family>(fam), g % 4, g >= 4);
    }
  }
  // The action on the four corners is faithful, so composition is read off
  // the corner permutations.
  const auto& cp = t.perms[0];
  for (int g = 0; g < Symmetry::kOrder; ++g) {
    for (int h = 0; h < Symmetry::kOrder; ++h) {
      Perm gh{};
      for (int i = 0; i < 4; ++i) gh[i] = cp[g][cp[h][i]];
      int found = -1;
      for (int k = 0; k < Symmetry::kOrder; ++k)
        if (cp[k] == gh) found = k;
      if (found < 0) throw std::logic_error("dihedral composition not closed");
      t.compose[g][h] = static_cast<std::uint8_t>(found);
      if (found == 0) t.inverse[g] = static_cast<std::uint8_t>(h);
    }
  }
  for (int fam = 0; fam < 2; ++fam) {
    const auto& cat = catalog_array(static_cast<Family>(fam));
    for (int g = 0; g < Symmetry::kOrder; ++g) {
      const Perm& p = t.perms[fam][g];
      for (const Tile& src : cat) {
        Tile img = src;
        for (int i = 0; i < src.pair_count; ++i) img.pairs[i] = make_pair(p[src.pairs[i].a], p[src.pairs[i].b]);
        if (src.over) img.over = make_pair(p[src.over->a], p[src.over->b]);
        int found = -1;
        for (const Tile& cand : cat)
          if (same_tile_shape(cand, img)) found = cand.code;
        if (found < 0) throw std::logic_error("tile catalog not closed under symmetry");
        t.tile_image[fam][g][src.code] = static_cast<TileCode>(found);
      }
    }
  }
  return t;
}

const GroupTables& tables() {
  static const GroupTables t = build_tables();
  return t;
}

}  // namespace

std::string_view family_name(Family f) { return f == Family::Corner ? "corner" : "traditional"; }

std::optional<Family> parse_family(std::string_view s) {
  if (s == "corner") return Family::Corner;
  if (s == "traditional") return Family::Traditional;
  return std::nullopt;
}

bool Tile::uses(Endpoint e) const {
  for (const auto& p : matching())
    if (p.contains(e)) return true;
  return false;
}

std::uint8_t Tile::endpoint_mask() const {
  std::uint8_t m = 0;
  for (const auto& p : matching()) m |= static_cast<std::uint8_t>((1u << p.a) | (1u << p.b));
  return m;
}

Endpoint Tile::partner(Endpoint e) const {
  for (const auto& p : matching())
    if (p.contains(e)) return p.other(e);
  throw std::invalid_argument("endpoint not used by tile");
}

std::span<const Tile, kTileCount> tile_catalog(Family f) { return catalog_array(f); }

const Tile& tile(Family f, TileCode code) {
  if (code >= kTileCount) throw std::out_of_range("tile code out of range");
  return catalog_array(f)[code];
}

bool uses_endpoint(const Tile& t, Endpoint e) { return t.uses(e); }

Symmetry Symmetry::compose(Symmetry other) const {
  return from_index(tables().compose[index_][other.index_]);
}

Symmetry Symmetry::inverse() const { return from_index(tables().inverse[index_]); }

Endpoint Symmetry::map(Family f, Endpoint e) const {
  return tables().perms[static_cast<int>(f)][index_][e];
}

std::string_view symmetry_name(Symmetry g) {
  static constexpr std::array<std::string_view, Symmetry::kOrder> names = {
      "identity", "rot90", "rot180", "rot270", "flip-h", "antitranspose", "flip-v", "transpose"};
  return names[g.index()];
}

TileCode transform_tile(Family f, TileCode code, Symmetry g) {
  return tables().tile_image[static_cast<int>(f)][g.index()][code];
}

const Tile& transform_tile(const Tile& t, Symmetry g) {
  return tile(t.family, transform_tile(t.family, t.code, g));
}

TileCode mirror_tile(Family, TileCode code) {
  if (code == 9) return 10;
  if (code == 10) return 9;
  return code;
}

}  // namespace mosaic
