#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mosaic/grid.hpp"
#include "mosaic/knot_table.hpp"

namespace mosaic {

enum class Dedup { Raw, Symmetry, SymmetryMirror };
enum class OccupancyFilter { None, EveryRowOrEveryColumn };

std::string_view dedup_name(Dedup d);

struct CensusQuery {
  Family family = Family::Corner;
  int rows = 3;
  int cols = 3;
  std::optional<int> max_non_blank;
  std::optional<int> min_crossings;
  std::optional<int> max_crossings;
  bool require_single_component = false;
  /// Knot found in the reference table, other than the unknot.
  bool require_prime_table_knot = false;
  OccupancyFilter occupancy = OccupancyFilter::None;
  Dedup dedup = Dedup::Symmetry;
  /// When false, records carry only component counts (Kind::Unclassified
  /// for knots), which keeps crossing-maximum searches cheap.
  bool classify = true;

  /// Throws std::invalid_argument on inconsistent bounds.
  void check() const;
};

struct CensusRecord {
  Mosaic mosaic;  // canonical under the query's dedup mode
  KnotId knot;
  int non_blank = 0;
  int crossings = 0;
};

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t leaves = 0;
  std::int64_t degree_prunes = 0;
  std::int64_t budget_prunes = 0;
  std::int64_t crossing_prunes = 0;
  std::int64_t symmetry_prunes = 0;

  SearchStats& operator+=(const SearchStats& o);
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct KnotCensusEntry {
  std::string label;
  int min_non_blank = 0;
  int min_crossings = 0;  // fewest diagram crossings among records
  std::int64_t count = 0;
  std::int64_t mirror_classes = 0;  // counted with mirror images identified
  Mosaic example;                   // least serialization at min_non_blank
  std::vector<Mosaic> minimal;      // every record at min_non_blank

  friend bool operator==(const KnotCensusEntry&, const KnotCensusEntry&) = default;
};

struct CensusSummary {
  CensusQuery query;
  std::map<std::string, KnotCensusEntry> knots;  // keyed by KnotId::label()
  std::int64_t records = 0;
  std::int64_t raw_records = 0;     // sum of symmetry-orbit sizes
  std::int64_t mirror_classes = 0;  // records with mirror images identified
  int max_crossings = -1;           // over all records; -1 when empty
  std::optional<Mosaic> max_crossing_example;
  SearchStats stats;

  std::optional<int> min_tiles(const std::string& label) const;
  /// Table knots other than the unknot that occur.
  std::set<std::string> prime_knots() const;
};

/// Streams every record of q in depth-first row-major order on the calling
/// thread.
SearchStats enumerate(const CensusQuery& q, const std::function<void(const CensusRecord&)>& emit);

/// Parallel census: the search tree is split at a fixed prefix depth and the
/// subtrees run on worker threads. The result does not depend on the worker
/// count.
CensusSummary census(const CensusQuery& q);
/// Same result computed by one plain depth-first search.
CensusSummary census_serial(const CensusQuery& q);

/// Full single-component corner censuses by size, computed on demand and
/// cached. Thread-safe.
class CensusSession {
 public:
  explicit CensusSession(Family family = Family::Corner) : family_(family) {}

  /// Every single-component mosaic on an n x n grid, symmetry-deduplicated.
  const CensusSummary& square(int n);
  std::optional<int> min_tiles(const std::string& knot, int n);
  /// Least n <= n_max for which the knot occurs.
  std::optional<int> mcc_search(const std::string& knot, int n_max);

 private:
  Family family_;
  std::mutex mutex_;
  std::map<int, std::unique_ptr<CensusSummary>> cache_;
};

std::optional<int> min_tiles(const std::string& knot, Family family, int n);
std::optional<int> mcc_search(const std::string& knot, int n_max);

struct LayoutEntry {
  Skeleton skeleton;  // canonical up to symmetry
  int non_blank = 0;
  std::set<std::string> knots;
};

/// Skeletons of the per-knot tile-minimal single-component records at
/// q.rows x q.cols, for table knots whose corner mosaic number equals the
/// grid size, subject to q.occupancy. Square corner grids only.
std::vector<LayoutEntry> layout_census(const CensusQuery& q, CensusSession& session);

/// Largest crossing count over all valid mosaics (links allowed).
int max_crossings_empirical(Family family, int n);

/// Maximum number of marked cells of an m x n grid such that every 2 x 2
/// window holds at most two marks and the four grid corners are unmarked.
int max_marking_relaxation(int m, int n);

/// Exact largest crossing count over valid corner m x n mosaics, by a
/// row-major transfer over lattice-vertex degrees. min(m, n) <= 14.
int max_crossings_transfer(int m, int n);

}  // namespace mosaic
