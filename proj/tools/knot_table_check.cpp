// Recomputes each reference knot's Jones polynomial from its PD code and
// compares it with the published value. Exit status 1 on any mismatch.
#include <cstdio>
#include <set>

#include "mosaic/bracket.hpp"
#include "mosaic/knot_table.hpp"

int main() {
  using namespace mosaic;
  int failures = 0;
  const auto& table = knot_table();
  for (const auto& e : table) {
    const LaurentPoly expected = normalized_from_jones(e.published_jones);
    if (e.normalized != expected) {
      std::fprintf(stderr, "%s: computed %s, published %s\n", e.name.c_str(), e.normalized.to_string().c_str(),
                   expected.to_string().c_str());
      ++failures;
    }
  }
  std::set<std::string> keys;
  for (const auto& e : table) {
    const LaurentPoly m = e.normalized.inverted();
    const std::string key = std::min(e.normalized.to_string(), m.to_string());
    if (!keys.insert(key).second) {
      std::fprintf(stderr, "%s: polynomial collides with another entry\n", e.name.c_str());
      ++failures;
    }
  }
  if (table.size() != 37) {
    std::fprintf(stderr, "expected 37 entries, found %zu\n", table.size());
    ++failures;
  }
  if (failures) return 1;
  std::printf("knot table: %zu entries verified\n", table.size());
  return 0;
}
