#include "mosaic/grid.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace mosaic {

Mosaic::Mosaic(Family family, int rows, int cols)
    : family_(family), rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("mosaic dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(rows * cols), kBlank);
}

Mosaic::Mosaic(Family family, int rows, int cols, std::vector<TileCode> cells)
    : family_(family), rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("mosaic dimensions must be positive");
  if (cells_.size() != static_cast<std::size_t>(rows * cols))
    throw std::invalid_argument("cell count does not match dimensions");
  for (TileCode c : cells_)
    if (c >= kTileCount) throw std::invalid_argument("tile code out of range");
}

void Mosaic::set(int r, int c, TileCode code) {
  if (code >= kTileCount) throw std::invalid_argument("tile code out of range");
  cells_[static_cast<std::size_t>(r * cols_ + c)] = code;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Mosaic parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view l = text.substr(start, nl - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back(l);
    start = nl + 1;
  }

  std::size_t i = 0;
  while (i < lines.size() && (lines[i].empty() || lines[i].front() == '#')) ++i;
  if (i == lines.size()) throw ParseError(static_cast<int>(i), "missing header");

  const int header_line = static_cast<int>(i) + 1;
  auto header = split_ws(lines[i]);
  if (header.size() != 3) throw ParseError(header_line, "malformed header, expected `family rows cols`");
  auto family = parse_family(header[0]);
  if (!family) throw ParseError(header_line, "unknown family `" + std::string(header[0]) + "`");
  auto rows = to_int(header[1]);
  auto cols = to_int(header[2]);
  if (!rows || !cols || *rows < 1 || *cols < 1)
    throw ParseError(header_line, "malformed header, dimensions must be positive integers");

  std::vector<TileCode> cells;
  cells.reserve(static_cast<std::size_t>(*rows * *cols));
  for (int r = 0; r < *rows; ++r) {
    const std::size_t li = i + 1 + static_cast<std::size_t>(r);
    const int line_no = static_cast<int>(li) + 1;
    if (li >= lines.size()) throw ParseError(line_no, "expected " + std::to_string(*rows) + " rows");
    auto toks = split_ws(lines[li]);
    if (static_cast<int>(toks.size()) != *cols)
      throw ParseError(line_no, "ragged grid: expected " + std::to_string(*cols) + " codes, found " +
                                    std::to_string(toks.size()));
    for (auto tok : toks) {
      auto v = to_int(tok);
      if (!v) throw ParseError(line_no, "not a tile code: `" + std::string(tok) + "`");
      if (*v < 0 || *v >= kTileCount)
        throw ParseError(line_no, "tile code out of range: " + std::string(tok));
      cells.push_back(static_cast<TileCode>(*v));
    }
  }
  for (std::size_t li = i + 1 + static_cast<std::size_t>(*rows); li < lines.size(); ++li) {
    if (!split_ws(lines[li]).empty())
      throw ParseError(static_cast<int>(li) + 1, "unexpected content after the last row");
  }
  return Mosaic(*family, *rows, *cols, std::move(cells));
}

std::string serialize(const Mosaic& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(16 + m.size() * 3));
  out += family_name(m.family());
  out += ' ';
  out += std::to_string(m.rows());
  out += ' ';
  out += std::to_string(m.cols());
  out += '\n';
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += std::to_string(m.at(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string describe(const Site& s) {
  std::ostringstream os;
  switch (s.kind) {
    case Site::Kind::Vertex: os << "vertex"; break;
    case Site::Kind::HorizontalEdge: os << "h-edge"; break;
    case Site::Kind::VerticalEdge: os << "v-edge"; break;
  }
  os << " (" << s.row << "," << s.col << ") degree " << s.degree;
  return os.str();
}

std::vector<int> vertex_degrees(const Mosaic& m) {
  const int w = m.cols() + 1;
  std::vector<int> deg(static_cast<std::size_t>((m.rows() + 1) * w), 0);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const std::uint8_t mask = m.tile_at(r, c).endpoint_mask();
      if (mask & 1) ++deg[static_cast<std::size_t>(r * w + c)];
      if (mask & 2) ++deg[static_cast<std::size_t>(r * w + c + 1)];
      if (mask & 4) ++deg[static_cast<std::size_t>((r + 1) * w + c + 1)];
      if (mask & 8) ++deg[static_cast<std::size_t>((r + 1) * w + c)];
    }
  }
  return deg;
}

ValidationReport validate(const Mosaic& m) {
  ValidationReport rep;
  rep.non_blank = non_blank_count(m);
  rep.crossings = crossing_count(m);
  if (m.family() == Family::Corner) {
    const auto deg = vertex_degrees(m);
    const int w = m.cols() + 1;
    for (int i = 0; i <= m.rows(); ++i) {
      for (int j = 0; j <= m.cols(); ++j) {
        const int d = deg[static_cast<std::size_t>(i * w + j)];
        if (d != 0 && d != 2) rep.offending_sites.push_back({Site::Kind::Vertex, i, j, d});
      }
    }
  } else {
    using namespace edge;
    // Horizontal edge (i, c) separates rows i-1 and i.
    for (int i = 0; i <= m.rows(); ++i) {
      for (int c = 0; c < m.cols(); ++c) {
        int d = 0;
        if (i > 0 && m.tile_at(i - 1, c).uses(S)) ++d;
        if (i < m.rows() && m.tile_at(i, c).uses(N)) ++d;
        const bool boundary = i == 0 || i == m.rows();
        if (boundary ? d != 0 : d == 1) rep.offending_sites.push_back({Site::Kind::HorizontalEdge, i, c, d});
      }
    }
    // Vertical edge (r, j) separates columns j-1 and j.
    for (int r = 0; r < m.rows(); ++r) {
      for (int j = 0; j <= m.cols(); ++j) {
        int d = 0;
        if (j > 0 && m.tile_at(r, j - 1).uses(E)) ++d;
        if (j < m.cols() && m.tile_at(r, j).uses(W)) ++d;
        const bool boundary = j == 0 || j == m.cols();
        if (boundary ? d != 0 : d == 1) rep.offending_sites.push_back({Site::Kind::VerticalEdge, r, j, d});
      }
    }
  }
  rep.valid = rep.offending_sites.empty();
  return rep;
}

int non_blank_count(const Mosaic& m) {
  return static_cast<int>(std::count_if(m.cells().begin(), m.cells().end(), [](TileCode c) { return c != kBlank; }));
}

int crossing_count(const Mosaic& m) {
  return static_cast<int>(std::count_if(m.cells().begin(), m.cells().end(), is_crossing_code));
}

CellPos transform_cell(int rows, int cols, int r, int c, Symmetry g) {
  if (g.reflects()) c = cols - 1 - c;
  for (int q = 0; q < g.quarter_turns(); ++q) {
    const int nr = c;
    const int nc = rows - 1 - r;
    r = nr;
    c = nc;
    std::swap(rows, cols);
  }
  return {r, c};
}

Mosaic transform_mosaic(const Mosaic& m, Symmetry g) {
  if (!g.preserves_shape(m.rows(), m.cols()))
    throw std::invalid_argument("symmetry does not preserve the mosaic shape");
  const bool swap = g.quarter_turns() % 2 == 1;
  Mosaic out(m.family(), swap ? m.cols() : m.rows(), swap ? m.rows() : m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const CellPos p = transform_cell(m.rows(), m.cols(), r, c, g);
      out.set(p.row, p.col, transform_tile(m.family(), m.at(r, c), g));
    }
  }
  return out;
}

Mosaic mirror_mosaic(const Mosaic& m) {
  Mosaic out = m;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.set(r, c, mirror_tile(m.family(), m.at(r, c)));
  return out;
}

std::vector<Symmetry> shape_symmetries(int rows, int cols) {
  std::vector<Symmetry> out;
  for (int i = 0; i < Symmetry::kOrder; ++i) {
    const Symmetry g = Symmetry::from_index(i);
    if (g.preserves_shape(rows, cols)) out.push_back(g);
  }
  return out;
}

int serial_rank(TileCode code) {
  static constexpr std::array<int, kTileCount> rank = {0, 1, 3, 4, 5, 6, 7, 8, 9, 10, 2};
  return rank[code];
}

namespace {

bool serial_less(const Mosaic& a, const Mosaic& b) {
  for (int i = 0; i < a.size(); ++i) {
    const int x = serial_rank(a.cells()[static_cast<std::size_t>(i)]);
    const int y = serial_rank(b.cells()[static_cast<std::size_t>(i)]);
    if (x != y) return x < y;
  }
  return false;
}

Mosaic least_image(const Mosaic& m, bool with_mirror) {
  Mosaic best = m;
  for (Symmetry g : shape_symmetries(m.rows(), m.cols())) {
    Mosaic img = transform_mosaic(m, g);
    if (serial_less(img, best)) best = img;
    if (with_mirror) {
      img = mirror_mosaic(img);
      if (serial_less(img, best)) best = std::move(img);
    }
  }
  return best;
}

}  // namespace

Mosaic canonical_form(const Mosaic& m) { return least_image(m, false); }
Mosaic canonical_form_with_mirror(const Mosaic& m) { return least_image(m, true); }
bool is_canonical(const Mosaic& m) { return canonical_form(m) == m; }

int orbit_size(const Mosaic& m) {
  std::set<std::vector<TileCode>> seen;
  for (Symmetry g : shape_symmetries(m.rows(), m.cols())) {
    const Mosaic img = transform_mosaic(m, g);
    seen.emplace(img.cells().begin(), img.cells().end());
  }
  return static_cast<int>(seen.size());
}

int Skeleton::non_blank() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](std::uint8_t c) { return c != 0; }));
}

std::string Skeleton::to_string() const {
  std::string out;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c) out += ' ';
      const std::uint8_t v = cells[static_cast<std::size_t>(r * cols + c)];
      out += v == kFour ? std::string("X") : std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

Skeleton skeleton(const Mosaic& m) {
  if (m.family() != Family::Corner) throw std::invalid_argument("skeletons are defined for corner mosaics");
  Skeleton s{m.rows(), m.cols(), {}};
  s.cells.reserve(static_cast<std::size_t>(m.size()));
  for (TileCode c : m.cells()) s.cells.push_back(is_four_point_code(c) ? Skeleton::kFour : c);
  return s;
}

Skeleton canonical_skeleton(const Skeleton& s) {
  // Use T7 as the representative of every four-point tile; T7 maps to T7 or T8
  // under symmetry, so re-anonymize after transforming.
  std::vector<TileCode> cells;
  for (auto v : s.cells) cells.push_back(v == Skeleton::kFour ? TileCode{7} : v);
  const Mosaic as_mosaic(Family::Corner, s.rows, s.cols, std::move(cells));
  Skeleton best = s;
  for (Symmetry g : shape_symmetries(s.rows, s.cols)) {
    Skeleton img = skeleton(transform_mosaic(as_mosaic, g));
    if (img < best) best = std::move(img);
  }
  return best;
}

bool Occupancy::every_row() const { return std::all_of(rows.begin(), rows.end(), [](bool b) { return b; }); }
bool Occupancy::every_col() const { return std::all_of(cols.begin(), cols.end(), [](bool b) { return b; }); }

Occupancy occupancy(const Mosaic& m) {
  Occupancy o{std::vector<bool>(static_cast<std::size_t>(m.rows()), false),
              std::vector<bool>(static_cast<std::size_t>(m.cols()), false)};
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != kBlank) {
        o.rows[static_cast<std::size_t>(r)] = true;
        o.cols[static_cast<std::size_t>(c)] = true;
      }
    }
  }
  return o;
}

}  // namespace mosaic
