#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace mosaic {

/// The two square tile sets. Corner tiles put their connection points on the
/// tile corners (lattice vertices); traditional tiles put them on edge midpoints.
enum class Family : std::uint8_t { Corner, Traditional };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view s);

/// Connection point of a tile, numbered clockwise:
/// corner family 0=NW 1=NE 2=SE 3=SW, traditional family 0=N 1=E 2=S 3=W.
using Endpoint = std::uint8_t;

namespace corner {
inline constexpr Endpoint NW = 0, NE = 1, SE = 2, SW = 3;
}
namespace edge {
inline constexpr Endpoint N = 0, E = 1, S = 2, W = 3;
}

using TileCode = std::uint8_t;
inline constexpr int kTileCount = 11;
inline constexpr TileCode kBlank = 0;

struct EndpointPair {
  Endpoint a = 0;
  Endpoint b = 0;  // a < b

  constexpr bool contains(Endpoint e) const { return a == e || b == e; }
  constexpr Endpoint other(Endpoint e) const { return e == a ? b : a; }
  friend constexpr bool operator==(EndpointPair, EndpointPair) = default;
};

constexpr EndpointPair make_pair(Endpoint x, Endpoint y) {
  return x < y ? EndpointPair{x, y} : EndpointPair{y, x};
}

/// A tile: a partial matching of its four connection points. Crossing tiles
/// carry the pair that passes over.
struct Tile {
  Family family = Family::Corner;
  TileCode code = kBlank;
  std::array<EndpointPair, 2> pairs{};
  std::uint8_t pair_count = 0;
  std::optional<EndpointPair> over;

  std::span<const EndpointPair> matching() const { return {pairs.data(), pair_count}; }
  bool is_blank() const { return pair_count == 0; }
  bool is_crossing() const { return over.has_value(); }
  bool uses(Endpoint e) const;
  /// Bit i set iff endpoint i is used.
  std::uint8_t endpoint_mask() const;
  /// The arc leaving endpoint e; e must be used.
  Endpoint partner(Endpoint e) const;
};

/// Codes 0..10 of the family, in code order.
std::span<const Tile, kTileCount> tile_catalog(Family f);
const Tile& tile(Family f, TileCode code);

bool uses_endpoint(const Tile& t, Endpoint e);

/// Element of the dihedral group of the square. The element with rotation r and
/// reflection flag f first mirrors left-right (if f), then rotates r quarter
/// turns clockwise.
class Symmetry {
 public:
  static constexpr int kOrder = 8;

  constexpr Symmetry() = default;
  constexpr Symmetry(int quarter_turns, bool reflect)
      : index_(static_cast<std::uint8_t>(((quarter_turns % 4 + 4) % 4) + (reflect ? 4 : 0))) {}

  static constexpr Symmetry from_index(int i) { return Symmetry(i % 4, i >= 4); }
  static constexpr Symmetry identity() { return {}; }
  static constexpr Symmetry rot90() { return {1, false}; }
  static constexpr Symmetry rot180() { return {2, false}; }
  static constexpr Symmetry rot270() { return {3, false}; }
  static constexpr Symmetry flip_horizontal() { return {0, true}; }  // left-right mirror
  static constexpr Symmetry flip_vertical() { return {2, true}; }    // top-bottom mirror
  static constexpr Symmetry transpose() { return {3, true}; }        // about the main diagonal
  static constexpr Symmetry antitranspose() { return {1, true}; }

  constexpr int index() const { return index_; }
  constexpr int quarter_turns() const { return index_ % 4; }
  constexpr bool reflects() const { return index_ >= 4; }
  /// True iff the element maps an rows x cols grid onto itself.
  constexpr bool preserves_shape(int rows, int cols) const {
    return rows == cols || quarter_turns() % 2 == 0;
  }

  /// (*this ∘ other): apply other first.
  Symmetry compose(Symmetry other) const;
  Symmetry inverse() const;
  Endpoint map(Family f, Endpoint e) const;

  friend constexpr bool operator==(Symmetry, Symmetry) = default;

 private:
  std::uint8_t index_ = 0;
};

std::string_view symmetry_name(Symmetry g);

/// The catalog tile whose matching is the image of t's matching under g.
TileCode transform_tile(Family f, TileCode code, Symmetry g);
const Tile& transform_tile(const Tile& t, Symmetry g);

/// Same projection with over/under exchanged (identity on non-crossing tiles).
TileCode mirror_tile(Family f, TileCode code);

inline bool is_crossing_code(TileCode c) { return c == 9 || c == 10; }
inline bool is_four_point_code(TileCode c) { return c >= 7 && c <= 10; }

}  // namespace mosaic
