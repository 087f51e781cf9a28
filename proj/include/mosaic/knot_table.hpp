#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/laurent.hpp"
#include "mosaic/trace.hpp"

namespace mosaic {

struct KnotTableEntry {
  std::string name;
  std::vector<std::array<int, 4>> pd;
  LaurentPoly published_jones;  // in t
  LaurentPoly normalized;       // computed from pd, in A
};

/// Parses the reference table text (`name | PD | Jones` lines, `#` comments).
/// Throws ParseError on malformed lines.
std::vector<KnotTableEntry> parse_knot_table(std::string_view text);
/// Parses a Jones polynomial in KnotInfo syntax, e.g. "t^(-2)-t^(-1)+ 1-t+ t^2".
LaurentPoly parse_jones(std::string_view text);

/// Text of the table compiled into the library.
std::string_view embedded_knot_table_text();

/// The 37 reference knots with brackets recomputed from their PD codes.
/// Built once; shared read-only.
const std::vector<KnotTableEntry>& knot_table();

/// name -> normalized bracket of the tabulated chirality.
std::vector<std::pair<std::string, LaurentPoly>> reference_table();

enum class Chirality { AsTable, Mirrored, Amphichiral };
std::string_view chirality_name(Chirality c);

struct KnotId {
  enum class Kind { Knot, Unknown, Link, Empty, Unclassified };
  Kind kind = Kind::Knot;
  std::string name;  // table name for Kind::Knot
  Chirality chirality = Chirality::Amphichiral;
  int components = 1;
  int diagram_crossings = 0;
  LaurentPoly polynomial;  // normalized bracket when it was computed

  bool is_knot() const { return kind == Kind::Knot; }
  bool is_nontrivial_knot() const { return kind == Kind::Knot && name != "unknot"; }
  /// "3_1", "unknown", "link(2)", "empty", "unclassified".
  std::string label() const;
};

/// Looks a normalized bracket up in the table and its mirror images.
std::optional<KnotId> lookup_normalized(const LaurentPoly& f);

/// Names a single-component diagram by its normalized bracket; diagrams with
/// fewer than three crossings are unknots. Multi-component diagrams come back
/// as Kind::Link, the empty diagram as Kind::Empty.
KnotId classify(const Diagram& d);
KnotId classify(const Mosaic& m);

}  // namespace mosaic
