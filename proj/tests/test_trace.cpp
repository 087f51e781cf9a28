#include <doctest.h>

#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "mosaic/census.hpp"
#include "mosaic/trace.hpp"

using namespace mosaic;

namespace {

// Independent endpoint geometry in doubled coordinates: (row, col) of the
// connection point on the (2m+1) x (2n+1) lattice.
std::pair<int, int> site_of(Family f, int r, int c, Endpoint e) {
  static constexpr int corner_dr[] = {0, 0, 2, 2}, corner_dc[] = {0, 2, 2, 0};
  static constexpr int edge_dr[] = {0, 1, 2, 1}, edge_dc[] = {1, 2, 1, 0};
  if (f == Family::Corner) return {2 * r + corner_dr[e], 2 * c + corner_dc[e]};
  return {2 * r + edge_dr[e], 2 * c + edge_dc[e]};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Components as connected classes of arcs; arcs meet at shared sites.
int component_oracle(const Mosaic& m) {
  std::vector<std::array<std::pair<int, int>, 2>> arcs;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      for (const EndpointPair& p : m.tile_at(r, c).matching())
        arcs.push_back({site_of(m.family(), r, c, p.a), site_of(m.family(), r, c, p.b)});
  UnionFind uf(static_cast<int>(arcs.size()));
  std::map<std::pair<int, int>, int> first;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
    for (const auto& s : arcs[static_cast<std::size_t>(i)]) {
      auto [it, fresh] = first.try_emplace(s, i);
      if (!fresh) uf.unite(i, it->second);
    }
  std::set<int> roots;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) roots.insert(uf.find(i));
  return static_cast<int>(roots.size());
}

// Sign from the direction vectors of the two strands (y up).
int geometric_sign(const Diagram& d, int crossing) {
  std::array<int, 2> over{}, under{};
  const CrossingSite& x = d.crossings[static_cast<std::size_t>(crossing)];
  for (const auto& comp : d.components)
    for (const Passage& p : comp.passages) {
      if (p.crossing != crossing) continue;
      const auto a = site_of(d.family, x.row, x.col, p.in);
      const auto b = site_of(d.family, x.row, x.col, p.out);
      const std::array<int, 2> v{b.second - a.second, -(b.first - a.first)};
      (p.over ? over : under) = v;
    }
  const int cross = over[0] * under[1] - over[1] * under[0];
  return cross > 0 ? 1 : -1;
}

std::vector<Mosaic> sample_mosaics() {
  std::vector<Mosaic> out;
  CensusQuery q;
  q.rows = q.cols = 3;
  q.classify = false;
  q.dedup = Dedup::Raw;
  enumerate(q, [&](const CensusRecord& r) { out.push_back(r.mosaic); });
  q.rows = q.cols = 4;
  q.dedup = Dedup::Symmetry;
  q.max_non_blank = 10;
  enumerate(q, [&](const CensusRecord& r) { out.push_back(r.mosaic); });
  q.family = Family::Traditional;
  q.max_non_blank.reset();
  enumerate(q, [&](const CensusRecord& r) { out.push_back(r.mosaic); });
  return out;
}

const std::vector<Mosaic>& samples() {
  static const std::vector<Mosaic> s = sample_mosaics();
  return s;
}

}  // namespace

TEST_SUITE("trace") {
  TEST_CASE("component counts agree with a union-find oracle") {
    REQUIRE(samples().size() > 1000);
    for (const Mosaic& m : samples()) {
      const int want = component_oracle(m);
      CHECK(count_components(m) == want);
      CHECK(trace(m).component_count() == want);
    }
  }

  TEST_CASE("crossing signs agree with strand geometry") {
    for (const Mosaic& m : samples()) {
      const Diagram d = trace(m);
      if (d.crossing_count() == 0) continue;
      const PDCode pd = pd_code(d);
      for (int i = 0; i < d.crossing_count(); ++i) CHECK(pd.crossings[static_cast<std::size_t>(i)].sign == geometric_sign(d, i));
    }
  }

  TEST_CASE("PD labels appear twice and rebuild single-component signs") {
    for (const Mosaic& m : samples()) {
      const Diagram d = trace(m);
      if (d.crossing_count() == 0) continue;
      const PDCode pd = pd_code(d);
      std::map<int, int> seen;
      for (const auto& x : pd.crossings)
        for (int a : x.arcs) ++seen[a];
      CHECK(static_cast<int>(seen.size()) == pd.arc_count());
      for (const auto& [label, n] : seen) CHECK(n == 2);
      // One crossing leaves the sign undetermined by labels alone.
      if (d.component_count() == 1 && d.crossing_count() >= 2) {
        std::vector<std::array<int, 4>> tuples;
        for (const auto& x : pd.crossings) tuples.push_back(x.arcs);
        CHECK(pd_from_tuples(tuples) == pd);
      }
      CHECK(writhe(mirror_pd(pd)) == -writhe(pd));
      CHECK(is_alternating(mirror_pd(pd)) == is_alternating(pd));
    }
  }

  TEST_CASE("Euler formula on connected diagrams") {
    int checked = 0;
    for (const Mosaic& m : samples()) {
      const PDCode pd = pd_code_or_empty(trace(m));
      if (pd.crossing_count() == 0 || !is_connected(pd)) continue;
      const FaceSet f = faces(pd);
      CHECK(f.face_count == pd.crossing_count() + 2);
      std::size_t corners = 0;
      for (const auto& w : f.walks) corners += w.size();
      CHECK(corners == 4 * pd.crossings.size());
      ++checked;
    }
    CHECK(checked > 100);
  }

  TEST_CASE("four alternating crossings in the 8-tile layout make a link") {
    const Mosaic m = parse("corner 3 3\n6 9 5\n10 0 10\n5 9 6\n");
    CHECK(validate(m).valid);
    CHECK(count_components(m) == 2);
  }

  TEST_CASE("trefoil diagram") {
    const Diagram d = trace(parse("corner 3 3\n6 10 5\n8 0 9\n5 10 6\n"));
    REQUIRE(d.component_count() == 1);
    const PDCode pd = pd_code(d);
    CHECK(pd.crossing_count() == 3);
    CHECK(std::abs(writhe(pd)) == 3);
    CHECK(is_alternating(pd));
    CHECK(is_reduced(pd));
    const auto cert = kmt_certificate(pd);
    REQUIRE(cert);
    CHECK(cert->crossing_number == 3);
    CHECK(format_pd(pd).rfind("X(", 0) == 0);
  }

  TEST_CASE("single-crossing diagrams are not reduced") {
    for (const Mosaic& m : samples()) {
      const Diagram d = trace(m);
      if (d.crossing_count() != 1) continue;
      const PDCode pd = pd_code(d);
      if (is_connected(pd)) CHECK_FALSE(is_reduced(pd));
    }
  }

  TEST_CASE("the empty diagram") {
    const Diagram d = trace(Mosaic(Family::Corner, 2, 2));
    CHECK(d.component_count() == 0);
    CHECK_THROWS_AS(pd_code(d), std::invalid_argument);
    CHECK(pd_code_or_empty(d).component_count() == 0);
  }

  TEST_CASE("invalid mosaics are rejected") {
    CHECK_THROWS_AS(trace(parse("corner 1 1\n1\n")), InvalidMosaic);
  }
}
