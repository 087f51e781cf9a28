#include <doctest.h>

#include <random>
#include <set>

#include "mosaic/grid.hpp"

using namespace mosaic;

namespace {

Mosaic trefoil() { return parse("corner 3 3\n6 10 5\n8 0 9\n5 10 6\n"); }

Mosaic random_grid(std::mt19937& rng, Family f, int rows, int cols) {
  std::uniform_int_distribution<int> code(0, 10);
  Mosaic m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, static_cast<TileCode>(code(rng)));
  return m;
}

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("parse and serialize round-trip") {
    const std::string text = "corner 3 3\n6 10 5\n8 0 9\n5 10 6\n";
    const Mosaic m = parse(text);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 3);
    CHECK(m.at(0, 1) == 10);
    CHECK(serialize(m) == text);
    CHECK(parse("# comment\n\r\ncorner 3 3\r\n6 10 5\r\n8 0 9\r\n5 10 6\r\n") == m);
  }

  TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
      try {
        parse(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("corner 2 2\n1 2\n3\n") == 3);
    CHECK(line_of("corner 2 2\n1 2\n3 11\n") == 3);
    CHECK(line_of("hex 2 2\n1 2\n3 4\n") == 1);
    CHECK(line_of("corner 2 2\n1 2\n3 4\n5 6\n") == 4);
    CHECK(line_of("corner 2 2\n1 2\n") == 3);
    CHECK(line_of("corner 2 2\n1 x\n0 0\n") == 2);
  }

  TEST_CASE("validity of corner mosaics") {
    const ValidationReport ok = validate(trefoil());
    CHECK(ok.valid);
    CHECK(ok.non_blank == 8);
    CHECK(ok.crossings == 3);

    // Layout with corners T6 T5 T5 T6, four-point mid-edge tiles, blank center.
    for (TileCode x : {7, 8, 9, 10}) {
      Mosaic m = parse("corner 3 3\n6 7 5\n7 0 7\n5 7 6\n");
      for (auto [r, c] : {std::pair{0, 1}, {1, 0}, {1, 2}, {2, 1}}) m.set(r, c, x);
      CHECK(validate(m).valid);
    }

    const ValidationReport bad = validate(parse("corner 1 1\n1\n"));
    CHECK_FALSE(bad.valid);
    CHECK(bad.offending_sites.size() == 2);
    CHECK(validate(Mosaic(Family::Corner, 4, 4)).valid);
  }

  TEST_CASE("validity of traditional mosaics") {
    CHECK(validate(parse("traditional 2 2\n2 3\n1 4\n")).valid);
    const ValidationReport edge_use = validate(parse("traditional 1 1\n5\n"));
    CHECK_FALSE(edge_use.valid);
    CHECK_FALSE(validate(parse("traditional 2 2\n2 0\n1 4\n")).valid);
  }

  TEST_CASE("counts") {
    CHECK(non_blank_count(trefoil()) == 8);
    CHECK(crossing_count(trefoil()) == 3);
  }

  TEST_CASE("cell transform rotates clockwise after the flip") {
    const CellPos p = transform_cell(3, 4, 0, 1, Symmetry::rot90());
    CHECK(p.row == 1);
    CHECK(p.col == 2);
    const CellPos q = transform_cell(3, 4, 0, 1, Symmetry::flip_horizontal());
    CHECK(q.row == 0);
    CHECK(q.col == 2);
    CHECK(shape_symmetries(3, 4).size() == 4);
    CHECK(shape_symmetries(4, 4).size() == 8);
    CHECK_THROWS_AS(transform_mosaic(Mosaic(Family::Corner, 3, 4), Symmetry::rot90()), std::invalid_argument);
  }

  TEST_CASE("symmetries preserve validity on random grids") {
    std::mt19937 rng(7);
    int valid = 0;
    for (int i = 0; i < 1000; ++i) {
      const Family f = i % 2 ? Family::Corner : Family::Traditional;
      Mosaic m = random_grid(rng, f, 1 + i % 3, 1 + (i / 3) % 3);
      // Blank most cells so a fair share of grids are valid.
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
          if (rng() % 4) m.set(r, c, 0);
      const bool v = validate(m).valid;
      valid += v;
      for (Symmetry g : shape_symmetries(m.rows(), m.cols())) CHECK(validate(transform_mosaic(m, g)).valid == v);
    }
    CHECK(valid > 100);
  }

  TEST_CASE("serial rank orders codes like their text") {
    std::vector<std::string> tokens;
    for (int code = 0; code < 11; ++code) tokens.push_back(std::to_string(code));
    for (int a = 0; a < 11; ++a)
      for (int b = 0; b < 11; ++b)
        CHECK((serial_rank(static_cast<TileCode>(a)) < serial_rank(static_cast<TileCode>(b))) ==
              (tokens[static_cast<std::size_t>(a)] < tokens[static_cast<std::size_t>(b)]));
  }

  TEST_CASE("canonical form is least over the orbit, idempotent and orbit-constant") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
      const Mosaic m = random_grid(rng, Family::Corner, 2 + i % 3, 2 + (i / 3) % 3);
      const Mosaic c = canonical_form(m);
      CHECK(canonical_form(c) == c);
      CHECK(is_canonical(c));
      std::set<std::string> orbit;
      for (Symmetry g : shape_symmetries(m.rows(), m.cols())) {
        const Mosaic t = transform_mosaic(m, g);
        orbit.insert(serialize(t));
        CHECK(canonical_form(t) == c);
      }
      CHECK(serialize(c) == *orbit.begin());
      CHECK(orbit_size(m) == static_cast<int>(orbit.size()));
      CHECK(8 % orbit_size(m) == 0);
    }
  }

  TEST_CASE("mirror canonical form identifies mirror images") {
    const Mosaic m = trefoil();
    CHECK(canonical_form_with_mirror(m) == canonical_form_with_mirror(mirror_mosaic(m)));
    CHECK(orbit_size(m) <= 8);
  }

  TEST_CASE("skeleton anonymizes four-point tiles") {
    const Skeleton s = skeleton(trefoil());
    CHECK(s.non_blank() == 8);
    CHECK(s.cells[1] == Skeleton::kFour);
    CHECK(s.cells[3] == Skeleton::kFour);
    CHECK(s.cells[0] == 6);
    CHECK(s.to_string() == "6 X 5\nX 0 X\n5 X 6\n");
    const Skeleton rotated = skeleton(transform_mosaic(trefoil(), Symmetry::rot90()));
    CHECK(canonical_skeleton(rotated) == canonical_skeleton(s));
  }

  TEST_CASE("occupancy") {
    const Occupancy o = occupancy(parse("corner 3 3\n0 0 0\n0 3 4\n0 0 0\n"));
    CHECK_FALSE(o.every_row());
    CHECK_FALSE(o.every_col());
    CHECK(occupancy(trefoil()).every_row());
    CHECK(occupancy(trefoil()).every_col());
  }

  TEST_CASE("vertex degrees") {
    const auto d = vertex_degrees(trefoil());
    CHECK(d.size() == 16);
    for (int v : d) CHECK((v == 0 || v == 2));
  }
}
