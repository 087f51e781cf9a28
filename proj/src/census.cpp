#include "mosaic/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "mosaic/parallel.hpp"
#include "mosaic/trace.hpp"

namespace mosaic {

std::string_view dedup_name(Dedup d) {
  switch (d) {
    case Dedup::Raw: return "raw";
    case Dedup::Symmetry: return "symmetry";
    default: return "symmetry+mirror";
  }
}

void CensusQuery::check() const {
  if (rows < 1 || cols < 1) throw std::invalid_argument("census dimensions must be positive");
  if (max_non_blank && *max_non_blank < 0) throw std::invalid_argument("negative tile budget");
  if (min_crossings && max_crossings && *min_crossings > *max_crossings)
    throw std::invalid_argument("min crossings exceeds max crossings");
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  leaves += o.leaves;
  degree_prunes += o.degree_prunes;
  budget_prunes += o.budget_prunes;
  crossing_prunes += o.crossing_prunes;
  symmetry_prunes += o.symmetry_prunes;
  return *this;
}

std::optional<int> CensusSummary::min_tiles(const std::string& label) const {
  auto it = knots.find(label);
  if (it == knots.end()) return std::nullopt;
  return it->second.min_non_blank;
}

std::set<std::string> CensusSummary::prime_knots() const {
  std::set<std::string> out;
  for (const auto& e : knot_table())
    if (e.name != "unknot" && knots.count(e.name)) out.insert(e.name);
  return out;
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

// candidates[required][forbidden]: tiles, in code order, using every required
// endpoint and no forbidden one.
using CandidateTable = std::array<std::array<std::vector<TileCode>, 16>, 16>;

const CandidateTable& candidate_table(Family f) {
  static const auto build = [](Family fam) {
    CandidateTable t;
    for (int req = 0; req < 16; ++req)
      for (int forb = 0; forb < 16; ++forb)
        for (const Tile& tl : tile_catalog(fam)) {
          const int mask = tl.endpoint_mask();
          if ((mask & req) == req && (mask & forb) == 0) t[req][forb].push_back(tl.code);
        }
    return t;
  };
  static const CandidateTable corner_table = build(Family::Corner);
  static const CandidateTable traditional_table = build(Family::Traditional);
  return f == Family::Corner ? corner_table : traditional_table;
}

struct CellInfo {
  int row = 0;
  int col = 0;
  std::array<int, 4> vertex{};  // lattice vertex of each corner
  std::uint8_t completes = 0;   // bit k: the corner-k vertex has no later cell
};

struct SymCheck {
  std::vector<int> src;  // image position p receives the tile from cell src[p]
  std::array<int, kTileCount> rank{};  // serial rank of the image of each code
};

struct Frame {
  std::vector<TileCode> cells;
  std::vector<std::uint8_t> deg;
  int non_blank = 0;
  int crossings = 0;
  std::vector<int> sym_pos;
};

using LeafFn = std::function<void(const std::vector<TileCode>&, int, int)>;

class Searcher {
 public:
  explicit Searcher(const CensusQuery& q) : q_(q), size_(q.rows * q.cols) {
    const int vw = q.cols + 1;
    info_.resize(static_cast<std::size_t>(size_));
    for (int r = 0; r < q.rows; ++r) {
      for (int c = 0; c < q.cols; ++c) {
        CellInfo& ci = info_[static_cast<std::size_t>(r * q.cols + c)];
        ci.row = r;
        ci.col = c;
        ci.vertex = {r * vw + c, r * vw + c + 1, (r + 1) * vw + c + 1, (r + 1) * vw + c};
        const bool last_row = r == q.rows - 1;
        const bool last_col = c == q.cols - 1;
        ci.completes = static_cast<std::uint8_t>(1u | (last_col ? 2u : 0u) | (last_row && last_col ? 4u : 0u) |
                                                 (last_row ? 8u : 0u));
      }
    }
    cells_.assign(static_cast<std::size_t>(size_), kBlank);
    deg_.assign(static_cast<std::size_t>((q.rows + 1) * vw), 0);

    if (q.dedup != Dedup::Raw) {
      const Mosaic probe(q.family, q.rows, q.cols);
      for (Symmetry g : shape_symmetries(q.rows, q.cols)) {
        for (int mirrored = 0; mirrored < 2; ++mirrored) {
          if (mirrored && q.dedup != Dedup::SymmetryMirror) continue;
          if (g == Symmetry::identity() && !mirrored) continue;
          SymCheck s;
          s.src.assign(static_cast<std::size_t>(size_), 0);
          for (int r = 0; r < q.rows; ++r)
            for (int c = 0; c < q.cols; ++c) {
              const CellPos p = transform_cell(q.rows, q.cols, r, c, g);
              s.src[static_cast<std::size_t>(p.row * q.cols + p.col)] = r * q.cols + c;
            }
          for (int code = 0; code < kTileCount; ++code) {
            TileCode img = transform_tile(q.family, static_cast<TileCode>(code), g);
            if (mirrored) img = mirror_tile(q.family, img);
            s.rank[static_cast<std::size_t>(code)] = serial_rank(img);
          }
          syms_.push_back(std::move(s));
        }
      }
    }
    sym_pos_.assign(static_cast<std::size_t>((size_ + 1) * std::max<std::size_t>(syms_.size(), 1)), 0);
  }

  void run(const LeafFn& leaf) {
    leaf_ = &leaf;
    stop_depth_ = -1;
    dfs(0);
  }

  std::vector<Frame> collect_prefixes(int depth) {
    frames_.clear();
    stop_depth_ = depth;
    dfs(0);
    return std::move(frames_);
  }

  void run_from(const Frame& f, const LeafFn& leaf) {
    const int depth = static_cast<int>(f.cells.size());
    std::copy(f.cells.begin(), f.cells.end(), cells_.begin());
    deg_ = f.deg;
    non_blank_ = f.non_blank;
    crossings_ = f.crossings;
    std::copy(f.sym_pos.begin(), f.sym_pos.end(), sym_pos_.begin() + static_cast<std::ptrdiff_t>(depth * syms_.size()));
    leaf_ = &leaf;
    stop_depth_ = -1;
    dfs(depth);
  }

  const SearchStats& stats() const { return stats_; }

 private:
  void dfs(int k) {
    if (k == stop_depth_) {
      Frame f;
      f.cells.assign(cells_.begin(), cells_.begin() + k);
      f.deg = deg_;
      f.non_blank = non_blank_;
      f.crossings = crossings_;
      const auto ns = static_cast<std::ptrdiff_t>(syms_.size());
      f.sym_pos.assign(sym_pos_.begin() + k * ns, sym_pos_.begin() + (k + 1) * ns);
      frames_.push_back(std::move(f));
      return;
    }
    ++stats_.nodes;
    if (k == size_) {
      ++stats_.leaves;
      if (q_.min_crossings && crossings_ < *q_.min_crossings) return;
      (*leaf_)(cells_, non_blank_, crossings_);
      return;
    }
    const CellInfo& ci = info_[static_cast<std::size_t>(k)];
    unsigned req = 0, forb = 0;
    if (q_.family == Family::Corner) {
      for (int j = 0; j < 4; ++j) {
        const int d = deg_[static_cast<std::size_t>(ci.vertex[static_cast<std::size_t>(j)])];
        const unsigned bit = 1u << j;
        if (ci.completes & bit) {
          (d == 1 ? req : forb) |= bit;
        } else if (d >= 2) {
          forb |= bit;
        }
      }
    } else {
      using namespace edge;
      if (ci.row > 0 && tile(q_.family, cells_[static_cast<std::size_t>(k - q_.cols)]).uses(S))
        req |= 1u << N;
      else
        forb |= 1u << N;
      if (ci.col > 0 && tile(q_.family, cells_[static_cast<std::size_t>(k - 1)]).uses(E))
        req |= 1u << W;
      else
        forb |= 1u << W;
      if (ci.col == q_.cols - 1) forb |= 1u << E;
      if (ci.row == q_.rows - 1) forb |= 1u << S;
    }
    const auto& cands = candidate_table(q_.family)[req][forb];
    stats_.degree_prunes += kTileCount - static_cast<std::int64_t>(cands.size());
    const int remaining = size_ - k - 1;
    for (TileCode code : cands) {
      const int nb = non_blank_ + (code != kBlank);
      if (q_.max_non_blank && nb > *q_.max_non_blank) {
        ++stats_.budget_prunes;
        continue;
      }
      const int cr = crossings_ + (is_crossing_code(code) ? 1 : 0);
      if (q_.max_crossings && cr > *q_.max_crossings) {
        ++stats_.crossing_prunes;
        continue;
      }
      if (q_.min_crossings) {
        int potential = remaining;
        if (q_.max_non_blank) potential = std::min(potential, *q_.max_non_blank - nb);
        if (cr + potential < *q_.min_crossings) {
          ++stats_.crossing_prunes;
          continue;
        }
      }
      cells_[static_cast<std::size_t>(k)] = code;
      const std::uint8_t mask = tile(q_.family, code).endpoint_mask();
      if (q_.family == Family::Corner)
        for (int j = 0; j < 4; ++j)
          if (mask >> j & 1u) ++deg_[static_cast<std::size_t>(ci.vertex[static_cast<std::size_t>(j)])];
      const int saved_nb = non_blank_, saved_cr = crossings_;
      non_blank_ = nb;
      crossings_ = cr;
      if (prefix_canonical(k)) {
        dfs(k + 1);
      } else {
        ++stats_.symmetry_prunes;
      }
      non_blank_ = saved_nb;
      crossings_ = saved_cr;
      if (q_.family == Family::Corner)
        for (int j = 0; j < 4; ++j)
          if (mask >> j & 1u) --deg_[static_cast<std::size_t>(ci.vertex[static_cast<std::size_t>(j)])];
    }
    cells_[static_cast<std::size_t>(k)] = kBlank;
  }

  // Compares the mosaic with each of its images wherever both are already
  // determined. False if some image is provably smaller.
  bool prefix_canonical(int k) {
    const std::size_t ns = syms_.size();
    if (ns == 0) return true;
    const int* prev = &sym_pos_[static_cast<std::size_t>(k) * ns];
    int* next = &sym_pos_[static_cast<std::size_t>(k + 1) * ns];
    for (std::size_t g = 0; g < ns; ++g) {
      int p = prev[g];
      if (p >= 0) {
        const SymCheck& s = syms_[g];
        while (p < size_ && p <= k && s.src[static_cast<std::size_t>(p)] <= k) {
          const int img = s.rank[cells_[static_cast<std::size_t>(s.src[static_cast<std::size_t>(p)])]];
          const int own = serial_rank(cells_[static_cast<std::size_t>(p)]);
          if (img < own) return false;
          if (img > own) {
            p = -1;
            break;
          }
          ++p;
        }
      }
      next[g] = p;
    }
    return true;
  }

  const CensusQuery& q_;
  int size_;
  std::vector<CellInfo> info_;
  std::vector<TileCode> cells_;
  std::vector<std::uint8_t> deg_;
  int non_blank_ = 0;
  int crossings_ = 0;
  std::vector<SymCheck> syms_;
  std::vector<int> sym_pos_;
  SearchStats stats_;
  const LeafFn* leaf_ = nullptr;
  int stop_depth_ = -1;
  std::vector<Frame> frames_;
};

// Applies the component and knot filters to a complete mosaic.
std::optional<CensusRecord> make_record(const CensusQuery& q, const std::vector<TileCode>& cells, int non_blank,
                                        int crossings) {
  Mosaic m(q.family, q.rows, q.cols, cells);
  if (q.occupancy == OccupancyFilter::EveryRowOrEveryColumn) {
    const Occupancy o = occupancy(m);
    if (!o.every_row() && !o.every_col()) return std::nullopt;
  }
  CensusRecord rec;
  rec.non_blank = non_blank;
  rec.crossings = crossings;
  const int comps = count_components(m);
  if (q.require_single_component && comps != 1) return std::nullopt;
  if (comps != 1 || !q.classify) {
    rec.knot.components = comps;
    rec.knot.diagram_crossings = crossings;
    rec.knot.kind = comps == 0 ? KnotId::Kind::Empty : comps > 1 ? KnotId::Kind::Link : KnotId::Kind::Unclassified;
  } else {
    rec.knot = classify(trace(m));
  }
  if (q.require_prime_table_knot && !rec.knot.is_nontrivial_knot()) return std::nullopt;
  rec.mosaic = std::move(m);
  return rec;
}

class Aggregator {
 public:
  explicit Aggregator(const CensusQuery& q) { sum_.query = q; }

  void add(const CensusRecord& r) {
    const Mosaic& m = r.mosaic;
    std::int64_t raw = 1;
    bool mirror_rep = true;
    switch (sum_.query.dedup) {
      case Dedup::Raw:
        mirror_rep = canonical_form_with_mirror(m) == m;
        break;
      case Dedup::Symmetry:
        raw = orbit_size(m);
        mirror_rep = !serial_less(canonical_form(mirror_mosaic(m)), m);
        break;
      case Dedup::SymmetryMirror:
        raw = orbit_size(m);
        if (canonical_form(mirror_mosaic(m)) != m) raw += orbit_size(m);
        break;
    }
    ++sum_.records;
    sum_.raw_records += raw;
    sum_.mirror_classes += mirror_rep;
    if (r.crossings > sum_.max_crossings) {
      sum_.max_crossings = r.crossings;
      sum_.max_crossing_example = m;
    } else if (r.crossings == sum_.max_crossings && serial_less(m, *sum_.max_crossing_example)) {
      sum_.max_crossing_example = m;
    }
    const std::string label = r.knot.label();
    auto [it, fresh] = sum_.knots.try_emplace(label);
    KnotCensusEntry& e = it->second;
    if (fresh) {
      e.label = label;
      e.min_non_blank = r.non_blank;
      e.min_crossings = r.crossings;
      e.example = m;
    }
    ++e.count;
    e.mirror_classes += mirror_rep;
    e.min_crossings = std::min(e.min_crossings, r.crossings);
    if (r.non_blank < e.min_non_blank) {
      e.min_non_blank = r.non_blank;
      e.minimal.clear();
      e.example = m;
    }
    if (r.non_blank == e.min_non_blank) {
      e.minimal.push_back(m);
      if (serial_less(m, e.example)) e.example = m;
    }
  }

  void merge(const CensusSummary& part) {
    sum_.records += part.records;
    sum_.raw_records += part.raw_records;
    sum_.mirror_classes += part.mirror_classes;
    sum_.stats += part.stats;
    if (part.max_crossings > sum_.max_crossings ||
        (part.max_crossings == sum_.max_crossings && part.max_crossings >= 0 &&
         serial_less(*part.max_crossing_example, *sum_.max_crossing_example))) {
      sum_.max_crossings = part.max_crossings;
      sum_.max_crossing_example = part.max_crossing_example;
    }
    for (const auto& [label, pe] : part.knots) {
      auto [it, fresh] = sum_.knots.try_emplace(label, pe);
      if (fresh) continue;
      KnotCensusEntry& e = it->second;
      e.count += pe.count;
      e.mirror_classes += pe.mirror_classes;
      e.min_crossings = std::min(e.min_crossings, pe.min_crossings);
      if (pe.min_non_blank < e.min_non_blank) {
        e.min_non_blank = pe.min_non_blank;
        e.minimal = pe.minimal;
        e.example = pe.example;
      } else if (pe.min_non_blank == e.min_non_blank) {
        e.minimal.insert(e.minimal.end(), pe.minimal.begin(), pe.minimal.end());
        if (serial_less(pe.example, e.example)) e.example = pe.example;
      }
    }
  }

  CensusSummary& summary() { return sum_; }

 private:
  CensusSummary sum_;
};

int split_depth(const CensusQuery& q) { return std::min(q.rows * q.cols, 2 * q.cols); }

}  // namespace

SearchStats enumerate(const CensusQuery& q, const std::function<void(const CensusRecord&)>& emit) {
  q.check();
  Searcher s(q);
  const LeafFn leaf = [&](const std::vector<TileCode>& cells, int nb, int cr) {
    if (auto rec = make_record(q, cells, nb, cr)) emit(*rec);
  };
  s.run(leaf);
  return s.stats();
}

CensusSummary census_serial(const CensusQuery& q) {
  Aggregator agg(q);
  agg.summary().stats = enumerate(q, [&](const CensusRecord& r) { agg.add(r); });
  return std::move(agg.summary());
}

CensusSummary census(const CensusQuery& q) {
  q.check();
  Searcher root(q);
  const std::vector<Frame> frames = root.collect_prefixes(split_depth(q));
  std::vector<CensusSummary> parts(frames.size());
  const int workers = worker_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(frames.size()); ++i) {
    Aggregator agg(q);
    Searcher s(q);
    const LeafFn leaf = [&](const std::vector<TileCode>& cells, int nb, int cr) {
      if (auto rec = make_record(q, cells, nb, cr)) agg.add(*rec);
    };
    s.run_from(frames[static_cast<std::size_t>(i)], leaf);
    agg.summary().stats = s.stats();
    parts[static_cast<std::size_t>(i)] = std::move(agg.summary());
  }
  Aggregator total(q);
  total.summary().stats = root.stats();
  for (const auto& p : parts) total.merge(p);
  return std::move(total.summary());
}

const CensusSummary& CensusSession::square(int n) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = cache_[n];
  if (!slot) {
    CensusQuery q;
    q.family = family_;
    q.rows = q.cols = n;
    q.require_single_component = true;
    slot = std::make_unique<CensusSummary>(census(q));
  }
  return *slot;
}

std::optional<int> CensusSession::min_tiles(const std::string& knot, int n) { return square(n).min_tiles(knot); }

std::optional<int> CensusSession::mcc_search(const std::string& knot, int n_max) {
  for (int n = 1; n <= n_max; ++n)
    if (min_tiles(knot, n)) return n;
  return std::nullopt;
}

namespace {
CensusSession& default_session(Family f) {
  static CensusSession corner(Family::Corner);
  static CensusSession traditional(Family::Traditional);
  return f == Family::Corner ? corner : traditional;
}
}  // namespace

std::optional<int> min_tiles(const std::string& knot, Family family, int n) {
  return default_session(family).min_tiles(knot, n);
}

std::optional<int> mcc_search(const std::string& knot, int n_max) {
  return default_session(Family::Corner).mcc_search(knot, n_max);
}

std::vector<LayoutEntry> layout_census(const CensusQuery& q, CensusSession& session) {
  if (q.family != Family::Corner) throw std::invalid_argument("layouts are defined for corner mosaics");
  if (q.rows != q.cols) throw std::invalid_argument("layout census needs a square grid");
  const int n = q.rows;
  const CensusSummary& here = session.square(n);
  std::map<Skeleton, LayoutEntry> found;
  for (const std::string& knot : here.prime_knots()) {
    if (n > 1 && session.min_tiles(knot, n - 1)) continue;
    for (const Mosaic& m : here.knots.at(knot).minimal) {
      if (q.occupancy == OccupancyFilter::EveryRowOrEveryColumn) {
        const Occupancy o = occupancy(m);
        if (!o.every_row() && !o.every_col()) continue;
      }
      const Skeleton s = canonical_skeleton(skeleton(m));
      auto [it, fresh] = found.try_emplace(s);
      if (fresh) {
        it->second.skeleton = s;
        it->second.non_blank = s.non_blank();
      }
      it->second.knots.insert(knot);
    }
  }
  std::vector<LayoutEntry> out;
  for (auto& [s, e] : found) out.push_back(std::move(e));
  std::stable_sort(out.begin(), out.end(),
                   [](const LayoutEntry& a, const LayoutEntry& b) { return a.non_blank < b.non_blank; });
  return out;
}

int max_crossings_empirical(Family family, int n) {
  if (n > 4) throw std::invalid_argument("exhaustive crossing maximum limited to n <= 4");
  CensusQuery q;
  q.family = family;
  q.rows = q.cols = n;
  q.classify = false;
  const CensusSummary s = census(q);
  return std::max(s.max_crossings, 0);
}

int max_marking_relaxation(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("relaxation needs m, n >= 2");
  if (m > n) std::swap(m, n);
  if (m > 16) throw std::invalid_argument("relaxation limited to min(m, n) <= 16");
  // Columns are processed left to right; the state is the mark set of the
  // previous column.
  const unsigned states = 1u << m;
  const unsigned corners = 1u | (1u << (m - 1));
  auto compatible = [m](unsigned a, unsigned b) {
    for (int i = 0; i + 1 < m; ++i) {
      const unsigned w = 3u << i;
      if (std::popcount(a & w) + std::popcount(b & w) > 2) return false;
    }
    return true;
  };
  constexpr int kNone = -1;
  std::vector<int> best(states, kNone), next(states, kNone);
  for (unsigned s = 0; s < states; ++s)
    if (!(s & corners)) best[s] = std::popcount(s);
  for (int col = 1; col < n; ++col) {
    std::fill(next.begin(), next.end(), kNone);
    const bool edge_col = col == n - 1;
    for (unsigned s = 0; s < states; ++s) {
      if (edge_col && (s & corners)) continue;
      for (unsigned p = 0; p < states; ++p) {
        if (best[p] == kNone || !compatible(p, s)) continue;
        next[s] = std::max(next[s], best[p] + std::popcount(s));
      }
    }
    std::swap(best, next);
  }
  return *std::max_element(best.begin(), best.end());
}

int max_crossings_transfer(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("transfer needs m, n >= 1");
  if (m < n) std::swap(m, n);
  if (n > 14) throw std::invalid_argument("transfer limited to min(m, n) <= 14");
  const int rows = m;
  const int cols = n;
  // Frontier of n+2 vertex degrees, 2 bits each. Before cell (r, c) slot j
  // holds the bottom vertex (r+1, j) for j <= c and the top vertex (r, j-1)
  // for j > c.
  auto get = [](std::uint32_t s, int i) { return (s >> (2 * i)) & 3u; };
  auto put = [](std::uint32_t s, int i, std::uint32_t v) { return (s & ~(3u << (2 * i))) | (v << (2 * i)); };
  std::array<std::uint8_t, kTileCount> masks{};
  for (int code = 0; code < kTileCount; ++code)
    masks[static_cast<std::size_t>(code)] = tile(Family::Corner, static_cast<TileCode>(code)).endpoint_mask();
  std::unordered_map<std::uint32_t, int> layer{{0u, 0}}, next;
  for (int k = 0; k < rows * cols; ++k) {
    const int r = k / cols;
    const int c = k % cols;
    const bool last_row = r == rows - 1;
    const bool last_col = c == cols - 1;
    next.clear();
    for (const auto& [s, value] : layer) {
      const std::uint32_t nw = get(s, c + 1), ne = get(s, c + 2), sw = get(s, c);
      for (int code = 0; code < kTileCount; ++code) {
        const std::uint8_t mask = masks[static_cast<std::size_t>(code)];
        const std::uint32_t dnw = nw + (mask & 1u), dne = ne + ((mask >> 1) & 1u);
        const std::uint32_t dse = (mask >> 2) & 1u, dsw = sw + ((mask >> 3) & 1u);
        // The NW vertex is complete once this cell is placed.
        if (dnw == 1 || dnw > 2 || dne > 2 || dsw > 2) continue;
        if (last_col && dne == 1) continue;
        if (last_row && dsw == 1) continue;
        if (last_row && last_col && dse == 1) continue;
        std::uint32_t ns = put(put(put(s, c, dsw), c + 1, dse), c + 2, dne);
        if (last_col) {
          std::uint32_t shifted = 0;
          for (int j = 0; j <= cols; ++j) shifted = put(shifted, j + 1, get(ns, j));
          ns = shifted;
        }
        const int v = value + (is_crossing_code(static_cast<TileCode>(code)) ? 1 : 0);
        auto [it, inserted] = next.try_emplace(ns, v);
        if (!inserted) it->second = std::max(it->second, v);
      }
    }
    std::swap(layer, next);
  }
  int best = 0;
  for (const auto& [s, value] : layer) best = std::max(best, value);
  return best;
}

}  // namespace mosaic
