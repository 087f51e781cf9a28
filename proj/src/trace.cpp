#include "mosaic/trace.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mosaic {

SitePoint endpoint_site(Family f, int r, int c, Endpoint e) {
  if (f == Family::Corner) {
    switch (e) {
      case corner::NW: return {2 * r, 2 * c};
      case corner::NE: return {2 * r, 2 * c + 2};
      case corner::SE: return {2 * r + 2, 2 * c + 2};
      default: return {2 * r + 2, 2 * c};
    }
  }
  switch (e) {
    case edge::N: return {2 * r, 2 * c + 1};
    case edge::E: return {2 * r + 1, 2 * c + 2};
    case edge::S: return {2 * r + 2, 2 * c + 1};
    default: return {2 * r + 1, 2 * c};
  }
}

namespace {

struct Arc {
  int row;
  int col;
  Endpoint a;
  Endpoint b;
  int site_a;
  int site_b;
  int crossing;  // -1 unless part of a crossing tile
  bool over;
};

struct ArcGraph {
  int width = 0;  // 2n+1
  std::vector<Arc> arcs;
  std::vector<std::array<int, 2>> at_site;
  std::vector<std::uint8_t> site_uses;
  std::vector<CrossingSite> crossings;

  SitePoint point(int s) const { return {s / width, s % width}; }
};

ArcGraph build_arcs(const Mosaic& m) {
  ArcGraph g;
  g.width = 2 * m.cols() + 1;
  const int sites = (2 * m.rows() + 1) * g.width;
  g.at_site.assign(static_cast<std::size_t>(sites), {-1, -1});
  g.site_uses.assign(static_cast<std::size_t>(sites), 0);
  auto index = [&](SitePoint p) { return p.row * g.width + p.col; };
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const Tile& t = m.tile_at(r, c);
      int crossing = -1;
      if (t.is_crossing()) {
        crossing = static_cast<int>(g.crossings.size());
        g.crossings.push_back({r, c, t.code});
      }
      for (const EndpointPair& p : t.matching()) {
        Arc arc{r, c, p.a, p.b, index(endpoint_site(m.family(), r, c, p.a)),
                index(endpoint_site(m.family(), r, c, p.b)), crossing, t.over && *t.over == p};
        const int id = static_cast<int>(g.arcs.size());
        for (int s : {arc.site_a, arc.site_b}) {
          auto& uses = g.site_uses[static_cast<std::size_t>(s)];
          if (uses >= 2) throw InvalidMosaic("mosaic is not suitably connected");
          g.at_site[static_cast<std::size_t>(s)][uses++] = id;
        }
        g.arcs.push_back(arc);
      }
    }
  }
  for (auto uses : g.site_uses)
    if (uses == 1) throw InvalidMosaic("mosaic is not suitably connected");
  return g;
}

int other_arc(const ArcGraph& g, int site, int arc) {
  const auto& pair = g.at_site[static_cast<std::size_t>(site)];
  return pair[0] == arc ? pair[1] : pair[0];
}

int other_site(const Arc& a, int site) { return a.site_a == site ? a.site_b : a.site_a; }

}  // namespace

Diagram trace(const Mosaic& m) {
  const ArcGraph g = build_arcs(m);
  Diagram d;
  d.family = m.family();
  d.rows = m.rows();
  d.cols = m.cols();
  d.crossings = g.crossings;

  std::vector<bool> used(g.arcs.size(), false);
  // Sites are scanned in increasing order, so each new component starts at
  // its least site and components come out ordered by that site.
  for (int s = 0; s < static_cast<int>(g.at_site.size()); ++s) {
    if (g.site_uses[static_cast<std::size_t>(s)] == 0) continue;
    const auto [a0, a1] = g.at_site[static_cast<std::size_t>(s)];
    if (used[static_cast<std::size_t>(a0)]) continue;
    const int n0 = other_site(g.arcs[static_cast<std::size_t>(a0)], s);
    const int n1 = other_site(g.arcs[static_cast<std::size_t>(a1)], s);
    int arc = n1 < n0 ? a1 : a0;

    TracedComponent comp;
    int site = s;
    do {
      used[static_cast<std::size_t>(arc)] = true;
      comp.sites.push_back(g.point(site));
      const Arc& a = g.arcs[static_cast<std::size_t>(arc)];
      const int next = other_site(a, site);
      if (a.crossing >= 0) {
        const bool forward = a.site_a == site;
        comp.passages.push_back({a.crossing, a.over, forward ? a.a : a.b, forward ? a.b : a.a});
      }
      site = next;
      arc = other_arc(g, site, arc);
    } while (site != s);
    d.components.push_back(std::move(comp));
  }
  return d;
}

int count_components(const Mosaic& m) {
  const ArcGraph g = build_arcs(m);
  std::vector<bool> used(g.arcs.size(), false);
  int count = 0;
  for (int start = 0; start < static_cast<int>(g.arcs.size()); ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    ++count;
    const int s0 = g.arcs[static_cast<std::size_t>(start)].site_a;
    int site = s0;
    int arc = start;
    do {
      used[static_cast<std::size_t>(arc)] = true;
      site = other_site(g.arcs[static_cast<std::size_t>(arc)], site);
      arc = other_arc(g, site, arc);
    } while (site != s0);
  }
  return count;
}

PDCode pd_code_or_empty(const Diagram& d) {
  PDCode pd;
  const int c = d.crossing_count();
  struct SlotLabels {
    std::array<int, 4> label{};
    Endpoint under_in = 0;
    Endpoint over_out = 0;
  };
  std::vector<SlotLabels> slots(static_cast<std::size_t>(c));
  int next_label = 1;
  for (const auto& comp : d.components) {
    const int len = static_cast<int>(comp.passages.size());
    if (len == 0) {
      ++pd.free_loops;
      continue;
    }
    const int base = next_label;
    for (int i = 0; i < len; ++i) {
      const Passage& p = comp.passages[static_cast<std::size_t>(i)];
      auto& s = slots[static_cast<std::size_t>(p.crossing)];
      s.label[p.in] = base + i;
      s.label[p.out] = base + (i + 1) % len;
      if (p.over) {
        s.over_out = p.out;
      } else {
        s.under_in = p.in;
      }
    }
    pd.component_labels.emplace_back(base, base + len - 1);
    next_label += len;
  }
  // Slots are numbered clockwise, so the counterclockwise successor of slot k
  // is k+3 mod 4.
  for (const auto& s : slots) {
    PDCrossing x;
    for (int k = 0; k < 4; ++k) x.arcs[static_cast<std::size_t>(k)] = s.label[(s.under_in + 3 * k) % 4];
    x.sign = s.over_out == (s.under_in + 3) % 4 ? 1 : -1;
    pd.crossings.push_back(x);
  }
  return pd;
}

PDCode pd_code(const Diagram& d) {
  if (d.crossing_count() == 0) throw std::invalid_argument("diagram has no crossings");
  return pd_code_or_empty(d);
}

PDCode pd_from_tuples(const std::vector<std::array<int, 4>>& tuples) {
  PDCode pd;
  const int arcs = 2 * static_cast<int>(tuples.size());
  if (arcs == 0) {
    pd.free_loops = 1;
    return pd;
  }
  auto succ = [arcs](int l) { return l % arcs + 1; };
  for (const auto& t : tuples) {
    for (int l : t)
      if (l < 1 || l > arcs) throw std::invalid_argument("PD label out of range");
    // The over strand runs d -> b on a positive crossing.
    pd.crossings.push_back({t, t[1] == succ(t[3]) && t[3] != succ(t[1]) ? 1 : -1});
    if (t[1] == succ(t[3]) && t[3] == succ(t[1]))
      throw std::invalid_argument("crossing sign is ambiguous for a two-arc component");
  }
  pd.component_labels.emplace_back(1, arcs);
  return pd;
}

std::string format_pd(const PDCode& pd) {
  std::ostringstream os;
  for (const auto& x : pd.crossings)
    os << "X(" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3] << ")\n";
  return os.str();
}

int writhe(const PDCode& pd) {
  int w = 0;
  for (const auto& x : pd.crossings) w += x.sign;
  return w;
}

PDCode mirror_pd(const PDCode& pd) {
  PDCode out = pd;
  for (auto& x : out.crossings) {
    const auto [a, b, c, d] = x.arcs;
    // The former over strand becomes the under strand; it enters at d on a
    // positive crossing and at b on a negative one.
    x.arcs = x.sign > 0 ? std::array<int, 4>{d, a, b, c} : std::array<int, 4>{b, c, d, a};
    x.sign = -x.sign;
  }
  return out;
}

bool is_alternating(const PDCode& pd) {
  const int n = pd.arc_count();
  std::vector<int> under(static_cast<std::size_t>(n + 1), 0), over(static_cast<std::size_t>(n + 1), 0);
  for (const auto& x : pd.crossings) {
    ++under[static_cast<std::size_t>(x.arcs[0])];
    ++under[static_cast<std::size_t>(x.arcs[2])];
    ++over[static_cast<std::size_t>(x.arcs[1])];
    ++over[static_cast<std::size_t>(x.arcs[3])];
  }
  for (int l = 1; l <= n; ++l)
    if (under[static_cast<std::size_t>(l)] != 1 || over[static_cast<std::size_t>(l)] != 1) return false;
  return true;
}

bool is_alternating(const Diagram& d) { return is_alternating(pd_code_or_empty(d)); }

bool is_connected(const PDCode& pd) {
  if (pd.crossings.empty()) return pd.free_loops == 1;
  if (pd.free_loops > 0) return false;
  const int n = pd.arc_count();
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& x : pd.crossings)
    for (int k = 1; k < 4; ++k) parent[static_cast<std::size_t>(find(x.arcs[static_cast<std::size_t>(k)]))] = find(x.arcs[0]);
  const int root = find(1);
  for (int l = 2; l <= n; ++l)
    if (find(l) != root) return false;
  return true;
}

FaceSet faces(const PDCode& pd) {
  if (!is_connected(pd)) throw std::invalid_argument("faces need a connected diagram");
  FaceSet fs;
  const int c = pd.crossing_count();
  if (c == 0) {
    fs.face_count = 2;
    return fs;
  }
  // ends[label] = the two (crossing, slot) positions carrying that arc.
  std::vector<std::vector<std::pair<int, int>>> ends(static_cast<std::size_t>(pd.arc_count() + 1));
  for (int x = 0; x < c; ++x)
    for (int k = 0; k < 4; ++k) ends[static_cast<std::size_t>(pd.crossings[static_cast<std::size_t>(x)].arcs[static_cast<std::size_t>(k)])].emplace_back(x, k);
  auto across = [&](int x, int k) {
    const auto& e = ends[static_cast<std::size_t>(pd.crossings[static_cast<std::size_t>(x)].arcs[static_cast<std::size_t>(k)])];
    return e[0] == std::make_pair(x, k) ? e[1] : e[0];
  };

  fs.corner_face.assign(static_cast<std::size_t>(c), {-1, -1, -1, -1});
  // Leave crossing x through slot k, arrive at (y, j); the face continues out
  // of slot j+1 and so contains corner j of y.
  for (int x = 0; x < c; ++x) {
    for (int k = 0; k < 4; ++k) {
      auto [y0, j0] = across(x, k);
      if (fs.corner_face[static_cast<std::size_t>(y0)][static_cast<std::size_t>(j0)] >= 0) continue;
      const int id = fs.face_count++;
      std::vector<std::pair<int, int>> walk;
      int y = y0, j = j0;
      while (fs.corner_face[static_cast<std::size_t>(y)][static_cast<std::size_t>(j)] < 0) {
        fs.corner_face[static_cast<std::size_t>(y)][static_cast<std::size_t>(j)] = id;
        walk.emplace_back(y, j);
        std::tie(y, j) = across(y, (j + 1) % 4);
      }
      fs.walks.push_back(std::move(walk));
    }
  }
  return fs;
}

FaceSet faces(const Diagram& d) { return faces(pd_code_or_empty(d)); }

bool is_reduced(const PDCode& pd) {
  const FaceSet fs = faces(pd);
  for (const auto& cf : fs.corner_face)
    if (cf[0] == cf[2] || cf[1] == cf[3]) return false;
  return true;
}

bool is_reduced(const Diagram& d) { return is_reduced(pd_code_or_empty(d)); }

std::optional<KmtCertificate> kmt_certificate(const PDCode& pd) {
  if (!is_connected(pd) || !is_alternating(pd) || !is_reduced(pd)) return std::nullopt;
  const int c = pd.crossing_count();
  return KmtCertificate{c, "connected reduced alternating diagram with " + std::to_string(c) +
                               " crossings; crossing number = " + std::to_string(c)};
}

std::optional<KmtCertificate> kmt_certificate(const Diagram& d) { return kmt_certificate(pd_code_or_empty(d)); }

}  // namespace mosaic
