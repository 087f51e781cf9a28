#include "mosaic/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "mosaic/parallel.hpp"
#include "mosaic/svg.hpp"

namespace mosaic {

std::string_view formula_case_name(FormulaCase c) {
  switch (c) {
    case FormulaCase::EvenEven: return "even-even";
    case FormulaCase::OddOdd: return "odd-odd";
    case FormulaCase::OddEven: return "odd-even";
    case FormulaCase::TraditionalEven: return "traditional-even";
    case FormulaCase::TraditionalOdd: return "traditional-odd";
  }
  return "?";
}

int corner_square_bound(int n) {
  if (n < 3) throw std::invalid_argument("corner bound needs n >= 3");
  return n % 2 == 0 ? n * n / 2 : (n * n + n - 4) / 2;
}

namespace {

// (m, n) arranged so the stated formula cases apply: m <= n when both are
// odd, m odd and n even when the parities differ.
std::pair<int, int> normalize_rect(int m, int n) {
  if (m % 2 == 1 && n % 2 == 1) return {std::min(m, n), std::max(m, n)};
  if (m % 2 == 0 && n % 2 == 1) return {n, m};
  return {m, n};
}

}  // namespace

int corner_rect_bound(int m, int n) {
  if (m < 3 || n < 3) throw std::invalid_argument("corner bound needs m, n >= 3");
  if (m % 2 == 0 && n % 2 == 0) return m * n / 2;
  const auto [a, b] = normalize_rect(m, n);
  return (a * b + b - 4) / 2;
}

int traditional_square_bound(int n) {
  if (n < 4) throw std::invalid_argument("traditional bound needs n >= 4");
  return n % 2 == 0 ? (n - 2) * (n - 2) - (n - 3) : (n - 2) * (n - 2) - 2;
}

BoundReport bound_report(Family family, int rows, int cols) {
  BoundReport r{family, rows, cols, 0, FormulaCase::EvenEven};
  if (family == Family::Traditional) {
    if (rows != cols) throw std::invalid_argument("traditional bound is for square mosaics");
    r.bound = traditional_square_bound(rows);
    r.formula_case = rows % 2 == 0 ? FormulaCase::TraditionalEven : FormulaCase::TraditionalOdd;
    return r;
  }
  r.bound = corner_rect_bound(rows, cols);
  if (rows % 2 == 0 && cols % 2 == 0)
    r.formula_case = FormulaCase::EvenEven;
  else if (rows % 2 == 1 && cols % 2 == 1)
    r.formula_case = FormulaCase::OddOdd;
  else
    r.formula_case = FormulaCase::OddEven;
  return r;
}

namespace {

constexpr TileCode T1 = 1, T2 = 2, T3 = 3, T4 = 4, T5 = 5, T6 = 6, T7 = 7, T8 = 8, T9 = 9, T10 = 10;

TileCode crossing_with_over(Family f, EndpointPair over) {
  return tile(f, T9).over == over ? T9 : T10;
}

}  // namespace

std::optional<Mosaic> make_alternating(const Mosaic& m) {
  const Diagram d = trace(m);
  const int k = d.component_count();
  // The first passage of component i is over iff phase[i] == 0.
  std::vector<std::vector<std::pair<int, int>>> visits(d.crossings.size());  // (component, passage index)
  for (int i = 0; i < k; ++i) {
    const auto& ps = d.components[static_cast<std::size_t>(i)].passages;
    for (int j = 0; j < static_cast<int>(ps.size()); ++j)
      visits[static_cast<std::size_t>(ps[static_cast<std::size_t>(j)].crossing)].push_back({i, j});
  }
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(k));  // (neighbour, phase xor)
  for (const auto& v : visits) {
    const auto [a, ia] = v[0];
    const auto [b, ib] = v[1];
    adj[static_cast<std::size_t>(a)].push_back({b, 1 ^ ((ia ^ ib) & 1)});
    adj[static_cast<std::size_t>(b)].push_back({a, 1 ^ ((ia ^ ib) & 1)});
  }
  std::vector<int> phase(static_cast<std::size_t>(k), -1);
  for (int root = 0; root < k; ++root) {
    if (phase[static_cast<std::size_t>(root)] != -1) continue;
    phase[static_cast<std::size_t>(root)] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [w, x] : adj[static_cast<std::size_t>(u)]) {
        const int want = phase[static_cast<std::size_t>(u)] ^ x;
        int& pw = phase[static_cast<std::size_t>(w)];
        if (pw == -1) {
          pw = want;
          stack.push_back(w);
        } else if (pw != want) {
          return std::nullopt;
        }
      }
    }
  }
  Mosaic out = m;
  for (int i = 0; i < k; ++i) {
    const auto& ps = d.components[static_cast<std::size_t>(i)].passages;
    for (int j = 0; j < static_cast<int>(ps.size()); ++j) {
      const bool over = ((j & 1) ^ phase[static_cast<std::size_t>(i)]) == 0;
      if (!over) continue;
      const Passage& p = ps[static_cast<std::size_t>(j)];
      const CrossingSite& x = d.crossings[static_cast<std::size_t>(p.crossing)];
      out.set(x.row, x.col, crossing_with_over(m.family(), make_pair(p.in, p.out)));
    }
  }
  return out;
}

Mosaic max_pattern(int n) {
  if (n < 3) throw std::invalid_argument("max_pattern needs n >= 3");
  Mosaic m(Family::Corner, n, n);
  // Vertical chains of crossings in rows 1..n-2. Odd n: every even column.
  // Even n: even columns up to n-4, then the last column.
  std::vector<int> chains;
  for (int c = 0; c <= (n % 2 == 1 ? n - 1 : n - 4); c += 2) chains.push_back(c);
  if (n % 2 == 0) chains.push_back(n - 1);
  for (int c : chains)
    for (int r = 1; r <= n - 2; ++r) m.set(r, c, T9);
  // Edge rows: crossings in the columns after each chain but the last, with
  // a single arc cap over every interior chain.
  for (int c = 1; c <= n - 2; ++c) {
    const bool capped = std::find(chains.begin(), chains.end(), c) != chains.end();
    m.set(0, c, capped ? T1 : T9);
    m.set(n - 1, c, capped ? T2 : T9);
  }
  m.set(0, 0, T6);
  m.set(0, n - 1, T5);
  m.set(n - 1, 0, T5);
  m.set(n - 1, n - 1, T6);
  if (auto alt = make_alternating(m)) return *alt;
  return m;
}

Mosaic pretzel(const std::vector<int>& twists) {
  if (twists.empty()) throw std::invalid_argument("pretzel needs at least one twist region");
  int depth = 0;
  for (int t : twists) {
    if (t == 0) throw std::invalid_argument("pretzel twist counts must be nonzero");
    depth = std::max(depth, std::abs(t));
  }
  const int k = static_cast<int>(twists.size());
  const int top = 2;
  const int bottom = top + depth;  // row of the lower connectors
  Mosaic m(Family::Corner, depth + 4, 2 * k + 1);
  const int last = 2 * k - 1;  // column of the last chain
  for (int i = 0; i < k; ++i) {
    const int x = 2 * i + 1;
    const int t = twists[static_cast<std::size_t>(i)];
    for (int r = top; r < bottom; ++r) m.set(r, x, r < top + std::abs(t) ? (t > 0 ? T9 : T10) : T8);
    if (i + 1 < k) {
      m.set(top - 1, x + 1, T2);
      m.set(bottom, x + 1, T1);
    }
  }
  // Outer loop from the first chain over the top to the last chain, and the
  // same underneath.
  m.set(1, 0, T3);
  m.set(1, last + 1, T4);
  m.set(bottom, 0, T3);
  m.set(bottom, last + 1, T4);
  for (int c = 1; c <= last; ++c) {
    m.set(0, c, T2);
    m.set(bottom + 1, c, T1);
  }
  return m;
}

namespace {

// Traditional n-mosaic: interior crossings, boundary ring closing the line
// ends through the top-left and bottom-right corners.
Mosaic weave_base(int n) {
  Mosaic m(Family::Traditional, n, n);
  for (int r = 1; r <= n - 2; ++r)
    for (int c = 1; c <= n - 2; ++c) m.set(r, c, T9);
  m.set(0, 0, T2);
  m.set(n - 1, n - 1, T4);
  m.set(0, 1, T3);
  for (int c = 2; c <= n - 2; c += 2) {
    m.set(0, c, T2);
    m.set(0, c + 1, T3);
  }
  m.set(1, 0, T1);
  for (int r = 2; r <= n - 2; r += 2) {
    m.set(r, 0, T2);
    m.set(r + 1, 0, T1);
  }
  m.set(n - 2, n - 1, T3);
  for (int r = 1; r <= n - 3; r += 2) {
    m.set(r, n - 1, T3);
    m.set(r + 1, n - 1, T4);
  }
  m.set(n - 1, n - 2, T1);
  for (int c = 1; c <= n - 3; c += 2) {
    m.set(n - 1, c, T1);
    m.set(n - 1, c + 1, T4);
  }
  return m;
}

std::optional<WeaveResult> check_weave(const Mosaic& candidate, int defects) {
  if (!validate(candidate).valid || count_components(candidate) != 1) return std::nullopt;
  auto alt = make_alternating(candidate);
  if (!alt) return std::nullopt;
  const Diagram d = trace(*alt);
  auto cert = kmt_certificate(d);
  if (!cert) return std::nullopt;
  return WeaveResult{*alt, d.crossing_count(), defects, 0, *cert};
}

// Next d-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
  const int d = static_cast<int>(idx.size());
  int i = d - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - d + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

}  // namespace

WeaveResult saturated_weave_traditional(int n, int floor, int max_defects) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("weave needs odd n >= 5");
  const Mosaic base = weave_base(n);
  const int inner = n - 2;
  const int cells = inner * inner;
  std::int64_t tried = 0;
  for (int d = 0; d <= max_defects && d <= cells; ++d) {
    if (cells - d < floor) break;
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int variants = 1 << d;
    constexpr std::size_t kBlock = 2048;
    bool more = true;
    while (more) {
      std::vector<std::vector<int>> block;
      while (more && block.size() < kBlock) {
        block.push_back(idx);
        more = d > 0 && next_combination(idx, cells);
      }
      const auto total = static_cast<std::int64_t>(block.size()) * variants;
      std::int64_t found = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : found) num_threads(worker_count())
      for (std::int64_t t = 0; t < total; ++t) {
        Mosaic m = base;
        const auto& combo = block[static_cast<std::size_t>(t / variants)];
        const int bits = static_cast<int>(t % variants);
        for (int j = 0; j < d; ++j) {
          const int cell = combo[static_cast<std::size_t>(j)];
          m.set(1 + cell / inner, 1 + cell % inner, (bits >> (d - 1 - j)) & 1 ? T8 : T7);
        }
        if (check_weave(m, d)) found = std::min(found, t);
      }
      if (found != std::numeric_limits<std::int64_t>::max()) {
        tried += found + 1;
        Mosaic m = base;
        const auto& combo = block[static_cast<std::size_t>(found / variants)];
        const int bits = static_cast<int>(found % variants);
        for (int j = 0; j < d; ++j) {
          const int cell = combo[static_cast<std::size_t>(j)];
          m.set(1 + cell / inner, 1 + cell % inner, (bits >> (d - 1 - j)) & 1 ? T8 : T7);
        }
        WeaveResult result = *check_weave(m, d);
        result.candidates = tried;
        return result;
      }
      tried += total;
    }
  }
  std::ostringstream os;
  os << "no single-component reduced alternating weave on a traditional " << n << "-mosaic with at least " << floor
     << " crossings within " << max_defects << " defects (" << tried << " candidates)";
  throw WeaveSearchError(os.str(), std::nullopt);
}

CounterexampleReport counterexample_check(const std::function<int(int)>& corner_bound) {
  constexpr int kN = 9;
  constexpr int kFloor = 44;
  CounterexampleReport rep;
  rep.weave = saturated_weave_traditional(kN, kFloor);
  const int c = rep.weave.certificate.crossing_number;
  rep.corner_bound = corner_bound(kN);
  // A corner n-mosaic of K carries at least c crossing tiles.
  int least_fit = 3;
  while (least_fit <= kN && corner_bound(least_fit) < c) ++least_fit;
  rep.passed = least_fit > kN && c > rep.corner_bound;

  std::ostringstream os;
  os << "traditional " << kN << "-mosaic: " << rep.weave.crossings << " crossing tiles, " << rep.weave.defects
     << " defects, single component\n";
  os << "certificate: " << rep.weave.certificate.statement << "\n";
  os << "crossing number c = " << c << "\n";
  os << "corner bound for n = " << kN << ": " << rep.corner_bound << "\n";
  if (rep.passed) {
    os << "conclusion: m(K) <= " << kN << " < mcc(K); mcc(K) >= " << least_fit << "\n";
  } else {
    os << "check failed: c = " << c << " fits the corner bound at n = " << least_fit << "\n";
  }
  rep.text = os.str();
  rep.weave_svg = render_svg(rep.weave.mosaic);
  rep.pattern_svg = render_svg(max_pattern(kN));
  return rep;
}

}  // namespace mosaic
