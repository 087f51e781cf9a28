#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/tile.hpp"

namespace mosaic {

/// Rectangular grid of tiles from one family, stored row-major.
class Mosaic {
 public:
  Mosaic() = default;
  Mosaic(Family family, int rows, int cols);
  Mosaic(Family family, int rows, int cols, std::vector<TileCode> cells);

  Family family() const { return family_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }
  bool is_square() const { return rows_ == cols_; }

  TileCode at(int r, int c) const { return cells_[static_cast<std::size_t>(r * cols_ + c)]; }
  void set(int r, int c, TileCode code);
  const Tile& tile_at(int r, int c) const { return tile(family_, at(r, c)); }
  std::span<const TileCode> cells() const { return cells_; }

  friend bool operator==(const Mosaic&, const Mosaic&) = default;

 private:
  Family family_ = Family::Corner;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<TileCode> cells_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the `.cmos` text format: optional `#` comment lines, a header
/// `family rows cols`, then one line of space-separated codes per row.
Mosaic parse(std::string_view text);
std::string serialize(const Mosaic& m);

/// A connection site: a lattice vertex for corner mosaics, or a tile edge for
/// traditional mosaics (`horizontal` edges lie between rows).
struct Site {
  enum class Kind : std::uint8_t { Vertex, HorizontalEdge, VerticalEdge };
  Kind kind = Kind::Vertex;
  int row = 0;
  int col = 0;
  int degree = 0;

  friend bool operator==(const Site&, const Site&) = default;
};

std::string describe(const Site& s);

struct ValidationReport {
  bool valid = true;
  std::vector<Site> offending_sites;
  int non_blank = 0;
  int crossings = 0;
};

/// Corner family: valid iff every lattice vertex has degree 0 or 2.
/// Traditional family: valid iff every interior edge is used from both sides
/// or neither, and no boundary edge is used.
ValidationReport validate(const Mosaic& m);

int non_blank_count(const Mosaic& m);
int crossing_count(const Mosaic& m);

/// Degree of every lattice vertex, (rows+1) x (cols+1) row-major.
std::vector<int> vertex_degrees(const Mosaic& m);

/// Throws std::invalid_argument if g does not preserve a non-square shape.
Mosaic transform_mosaic(const Mosaic& m, Symmetry g);
/// Exchanges over and under at every crossing.
Mosaic mirror_mosaic(const Mosaic& m);

/// Position of cell (r, c) of an rows x cols grid under g.
struct CellPos {
  int row;
  int col;
};
CellPos transform_cell(int rows, int cols, int r, int c, Symmetry g);

/// Symmetries that map the mosaic's shape onto itself.
std::vector<Symmetry> shape_symmetries(int rows, int cols);

/// Position of a code in the byte order of its serialized token
/// ("0" < "1" < "10" < "2" < ... < "9"). Comparing mosaics of equal shape
/// cell-by-cell under this rank is the same as comparing their serializations.
int serial_rank(TileCode code);

/// Lexicographically least serialization over the shape symmetries.
Mosaic canonical_form(const Mosaic& m);
/// As canonical_form, also identifying a mosaic with its mirror image.
Mosaic canonical_form_with_mirror(const Mosaic& m);
bool is_canonical(const Mosaic& m);
/// Number of distinct mosaics in the symmetry orbit of m.
int orbit_size(const Mosaic& m);

/// Corner mosaic with the four-connection-point tiles anonymized.
struct Skeleton {
  static constexpr std::uint8_t kFour = 11;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> cells;  // 0..6 exact code, kFour for codes 7..10

  int non_blank() const;
  std::string to_string() const;
  friend bool operator==(const Skeleton&, const Skeleton&) = default;
  friend auto operator<=>(const Skeleton& a, const Skeleton& b) {
    if (auto c = a.rows <=> b.rows; c != 0) return c;
    if (auto c = a.cols <=> b.cols; c != 0) return c;
    return a.cells <=> b.cells;
  }
};

Skeleton skeleton(const Mosaic& m);
Skeleton canonical_skeleton(const Skeleton& s);

struct Occupancy {
  std::vector<bool> rows;
  std::vector<bool> cols;

  bool every_row() const;
  bool every_col() const;
};

Occupancy occupancy(const Mosaic& m);

}  // namespace mosaic
