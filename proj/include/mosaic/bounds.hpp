#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mosaic/grid.hpp"
#include "mosaic/trace.hpp"

namespace mosaic {

enum class FormulaCase { EvenEven, OddOdd, OddEven, TraditionalEven, TraditionalOdd };
std::string_view formula_case_name(FormulaCase c);

struct BoundReport {
  Family family = Family::Corner;
  int rows = 0;
  int cols = 0;
  int bound = 0;
  FormulaCase formula_case = FormulaCase::EvenEven;
};

/// Most crossing tiles on a corner n-mosaic: n^2/2 (n even), (n^2+n-4)/2
/// (n odd). Throws std::invalid_argument for n < 3.
int corner_square_bound(int n);
/// Rectangular corner bound; (m, n) and (n, m) agree. Throws for m or n < 3.
int corner_rect_bound(int m, int n);
/// Traditional-tile bound for n >= 4: (n-2)^2 - (n-3) (n even),
/// (n-2)^2 - 2 (n odd).
int traditional_square_bound(int n);

/// Square bounds need rows == cols for the traditional family.
BoundReport bound_report(Family family, int rows, int cols);

/// Valid corner n-mosaic with exactly corner_square_bound(n) crossings:
/// vertical chains of crossings joined by crossing rows along the top and
/// bottom edges. Crossings are set to alternate where the diagram allows.
Mosaic max_pattern(int n);

/// Corner mosaic of the pretzel link P(t_1, ..., t_k): column 2i+1 holds a
/// vertical chain of |t_i| crossings (T9 for positive t_i, T10 for negative),
/// padded with double-arc tiles; arcs above and below join neighbouring
/// chains and an outer loop closes the first chain to the last. Size
/// (max|t_i| + 4) x (2k + 1). Throws std::invalid_argument for an empty list
/// or a zero entry.
Mosaic pretzel(const std::vector<int>& twists);

/// Re-chooses every crossing so passages alternate along each component;
/// nullopt if no alternating choice exists.
std::optional<Mosaic> make_alternating(const Mosaic& m);

struct WeaveResult {
  Mosaic mosaic;
  int crossings = 0;
  int defects = 0;  // interior cells without a crossing
  std::int64_t candidates = 0;
  KmtCertificate certificate;
};

class WeaveSearchError : public std::runtime_error {
 public:
  WeaveSearchError(const std::string& what, std::optional<WeaveResult> best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const std::optional<WeaveResult>& best() const { return best_; }

 private:
  std::optional<WeaveResult> best_;
};

/// Traditional n-mosaic (n odd, n >= 5) whose interior is filled with
/// crossings except for a few double-arc defects, closed around the boundary
/// ring, and made alternating. Returns the single-component, reduced,
/// alternating candidate with the fewest defects (ties broken by least
/// defect positions). Candidates are checked in parallel. Throws
/// WeaveSearchError if none reaches `floor` crossings within `max_defects`.
WeaveResult saturated_weave_traditional(int n, int floor = 0, int max_defects = 4);

struct CounterexampleReport {
  WeaveResult weave;
  int corner_bound = 0;
  bool passed = false;
  std::string text;
  std::string weave_svg;
  std::string pattern_svg;
};

/// Builds the traditional 9-mosaic weave, certifies its crossing number and
/// compares it with the corner bound for n = 9. The bound function is a
/// parameter so the harness can be checked against a wrong bound.
CounterexampleReport counterexample_check(const std::function<int(int)>& corner_bound = corner_square_bound);

}  // namespace mosaic
