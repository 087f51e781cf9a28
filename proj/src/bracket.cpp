#include "mosaic/bracket.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mosaic/parallel.hpp"

namespace mosaic {

LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

namespace {

void check_size(const PDCode& pd) {
  if (pd.crossing_count() > kBracketCrossingLimit)
    throw std::invalid_argument("bracket limited to " + std::to_string(kBracketCrossingLimit) + " crossings");
  if (pd.crossing_count() == 0 && pd.free_loops == 0) throw std::invalid_argument("bracket of the empty diagram");
}

// counts[b * stride + loops] = number of states with b B-smoothings and the
// given number of loops.
using StateCounts = std::vector<std::int64_t>;

int state_loops(const PDCode& pd, std::uint32_t state, std::vector<int>& parent) {
  const int n = pd.arc_count();
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int loops = n;
  auto join = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[static_cast<std::size_t>(x)] = y;
      --loops;
    }
  };
  for (int i = 0; i < pd.crossing_count(); ++i) {
    const auto& a = pd.crossings[static_cast<std::size_t>(i)].arcs;
    if (state >> i & 1u) {
      join(a[0], a[3]);
      join(a[1], a[2]);
    } else {
      join(a[0], a[1]);
      join(a[2], a[3]);
    }
  }
  return loops;
}

LaurentPoly assemble(const PDCode& pd, const StateCounts& counts, int stride) {
  const int c = pd.crossing_count();
  const LaurentPoly delta = loop_value();
  std::vector<LaurentPoly> delta_pow(static_cast<std::size_t>(stride + pd.free_loops + 1));
  delta_pow[0] = LaurentPoly(1);
  for (std::size_t k = 1; k < delta_pow.size(); ++k) delta_pow[k] = delta_pow[k - 1] * delta;
  LaurentPoly sum;
  for (int b = 0; b <= c; ++b) {
    for (int loops = 0; loops < stride; ++loops) {
      const std::int64_t n = counts[static_cast<std::size_t>(b * stride + loops)];
      if (n == 0) continue;
      const int total = loops + pd.free_loops;
      sum += delta_pow[static_cast<std::size_t>(total - 1)].shifted(c - 2 * b) * LaurentPoly(n);
    }
  }
  return sum;
}

}  // namespace

LaurentPoly bracket_serial(const PDCode& pd) {
  check_size(pd);
  const int c = pd.crossing_count();
  const int stride = pd.arc_count() + 1;
  StateCounts counts(static_cast<std::size_t>((c + 1) * stride), 0);
  if (c == 0) {
    counts[0] = 1;
    return assemble(pd, counts, stride);
  }
  std::vector<int> parent(static_cast<std::size_t>(pd.arc_count() + 1));
  for (std::uint32_t s = 0; s < (1u << c); ++s) {
    const int b = std::popcount(s);
    ++counts[static_cast<std::size_t>(b * stride + state_loops(pd, s, parent))];
  }
  return assemble(pd, counts, stride);
}

LaurentPoly bracket(const PDCode& pd) {
  check_size(pd);
  const int c = pd.crossing_count();
  const int workers = worker_count();
  if (c < 12 || workers == 1) return bracket_serial(pd);
  const int stride = pd.arc_count() + 1;
  const std::size_t cells = static_cast<std::size_t>((c + 1) * stride);
  StateCounts counts(cells, 0);
  const std::int64_t states = std::int64_t{1} << c;
#pragma omp parallel num_threads(workers)
  {
    StateCounts local(cells, 0);
    std::vector<int> parent(static_cast<std::size_t>(pd.arc_count() + 1));
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < states; ++s) {
      const auto st = static_cast<std::uint32_t>(s);
      ++local[static_cast<std::size_t>(std::popcount(st) * stride + state_loops(pd, st, parent))];
    }
#pragma omp critical
    for (std::size_t i = 0; i < cells; ++i) counts[i] += local[i];
  }
  return assemble(pd, counts, stride);
}

namespace {

using Tuples = std::vector<std::array<int, 4>>;

// Joins the arc ends x and y. Returns true when they were already the same
// arc, which closes a loop; otherwise renames y to x everywhere pending.
bool merge(int x, int y, Tuples& rest, std::array<int, 2>& pending) {
  if (x == y) return true;
  for (auto& t : rest)
    for (int& l : t)
      if (l == y) l = x;
  for (int& l : pending)
    if (l == y) l = x;
  return false;
}

LaurentPoly skein(const Tuples& xs, int loops, const LaurentPoly& delta) {
  if (xs.empty()) return delta.pow(static_cast<unsigned>(loops - 1));
  const auto x = xs.back();
  LaurentPoly total;
  for (int smoothing = 0; smoothing < 2; ++smoothing) {
    Tuples rest(xs.begin(), xs.end() - 1);
    int closed = loops;
    // A-smoothing joins a-b and c-d; B-smoothing joins a-d and b-c.
    std::array<int, 2> pending = smoothing == 0 ? std::array<int, 2>{x[2], x[3]} : std::array<int, 2>{x[1], x[2]};
    const int first_a = x[0];
    const int first_b = smoothing == 0 ? x[1] : x[3];
    if (merge(first_a, first_b, rest, pending)) ++closed;
    std::array<int, 2> none{};
    if (merge(pending[0], pending[1], rest, none)) ++closed;
    total += skein(rest, closed, delta).shifted(smoothing == 0 ? 1 : -1);
  }
  return total;
}

}  // namespace

LaurentPoly bracket_skein(const PDCode& pd) {
  check_size(pd);
  Tuples xs;
  for (const auto& x : pd.crossings) xs.push_back(x.arcs);
  return skein(xs, pd.free_loops, loop_value());
}

LaurentPoly normalized_bracket(const PDCode& pd) {
  const int w = writhe(pd);
  return bracket(pd) * LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
}

LaurentPoly jones_from_normalized(const LaurentPoly& f) {
  LaurentPoly v;
  for (auto [e, c] : f.terms()) {
    if (e % 4 != 0) throw std::invalid_argument("normalized bracket has exponents not divisible by 4");
    v += LaurentPoly::monomial(c, -e / 4);
  }
  return v;
}

LaurentPoly normalized_from_jones(const LaurentPoly& v) { return v.substituted_power(-4); }

}  // namespace mosaic
