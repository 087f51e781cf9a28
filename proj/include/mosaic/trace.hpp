#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mosaic/grid.hpp"

namespace mosaic {

/// Point of the half-unit lattice of an m x n mosaic, (2m+1) x (2n+1) points.
/// Corner connection points sit at even/even coordinates, edge midpoints at
/// mixed parity, tile centers at odd/odd.
struct SitePoint {
  int row = 0;
  int col = 0;
  friend bool operator==(const SitePoint&, const SitePoint&) = default;
  friend auto operator<=>(const SitePoint&, const SitePoint&) = default;
};

SitePoint endpoint_site(Family f, int r, int c, Endpoint e);

/// One traversal of a crossing tile by a strand.
struct Passage {
  int crossing = 0;  // index into Diagram::crossings
  bool over = false;
  Endpoint in = 0;   // tile endpoint where the strand enters
  Endpoint out = 0;
};

struct TracedComponent {
  std::vector<SitePoint> sites;  // connection points in walking order, start first
  std::vector<Passage> passages;
};

struct CrossingSite {
  int row = 0;
  int col = 0;
  TileCode code = 0;
};

/// The link diagram drawn by a valid mosaic. Components are oriented from
/// their least connection point toward its lesser neighbour and ordered by
/// that starting point.
struct Diagram {
  Family family = Family::Corner;
  int rows = 0;
  int cols = 0;
  std::vector<TracedComponent> components;
  std::vector<CrossingSite> crossings;  // row-major cell order

  int component_count() const { return static_cast<int>(components.size()); }
  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

class InvalidMosaic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidMosaic if m is not suitably connected.
Diagram trace(const Mosaic& m);

/// Number of closed curves; cheaper than trace. m must be valid.
int count_components(const Mosaic& m);

struct PDCrossing {
  std::array<int, 4> arcs{};  // counterclockwise from the incoming under-strand
  int sign = 1;               // +1 right-handed
  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

/// Planar diagram code. Arc labels run 1..2c; component k owns the
/// consecutive labels [first, last] in orientation order. Components without
/// crossings are counted in free_loops only.
struct PDCode {
  std::vector<PDCrossing> crossings;
  std::vector<std::pair<int, int>> component_labels;
  int free_loops = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int component_count() const { return static_cast<int>(component_labels.size()) + free_loops; }
  int arc_count() const { return 2 * crossing_count(); }
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Throws std::invalid_argument on a diagram without crossings.
PDCode pd_code(const Diagram& d);
/// As pd_code, but a crossing-free diagram yields an empty code with its
/// loops counted as free.
PDCode pd_code_or_empty(const Diagram& d);

/// Builds a single-component code from tuples alone, inferring crossing signs
/// from the label order (labels 1..2c along the orientation).
PDCode pd_from_tuples(const std::vector<std::array<int, 4>>& tuples);

/// One `X(a,b,c,d)` line per crossing.
std::string format_pd(const PDCode& pd);

int writhe(const PDCode& pd);
/// Same diagram with every crossing switched.
PDCode mirror_pd(const PDCode& pd);

/// Every arc runs from an over-passage to an under-passage.
bool is_alternating(const PDCode& pd);
bool is_alternating(const Diagram& d);

/// Crossings and loops form one connected plane curve system.
bool is_connected(const PDCode& pd);

/// Faces of the 4-valent plane graph. Corner k of crossing x lies between
/// arc slots k and k+1 (counterclockwise).
struct FaceSet {
  int face_count = 0;
  std::vector<std::array<int, 4>> corner_face;  // per crossing, per corner
  std::vector<std::vector<std::pair<int, int>>> walks;  // (crossing, corner) cycles
};

/// Throws std::invalid_argument for disconnected diagrams.
FaceSet faces(const PDCode& pd);
FaceSet faces(const Diagram& d);

/// A crossing is nugatory if one face meets it in two opposite corners.
bool is_reduced(const PDCode& pd);
bool is_reduced(const Diagram& d);

struct KmtCertificate {
  int crossing_number = 0;
  std::string statement;
};

/// Connected, reduced and alternating diagrams realize their crossing number.
std::optional<KmtCertificate> kmt_certificate(const PDCode& pd);
std::optional<KmtCertificate> kmt_certificate(const Diagram& d);

}  // namespace mosaic
