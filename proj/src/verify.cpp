#include "mosaic/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mosaic/bounds.hpp"
#include "mosaic/bracket.hpp"
#include "mosaic/census.hpp"
#include "mosaic/knot_table.hpp"

namespace mosaic {

namespace detail {
extern const std::string_view kVerifyManifestText;
}

std::string_view tier_name(Tier t) { return t == Tier::Required ? "required" : "extended"; }

std::string_view status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass: return "pass";
    case VerifyStatus::Fail: return "fail";
    case VerifyStatus::SkippedExtended: return "skipped-extended";
  }
  return "?";
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::vector<ManifestEntry> out;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      const auto bar = line.find('|', start);
      if (bar == std::string::npos) throw ParseError(line_no, "expected 4 '|'-separated fields");
      fields.push_back(trim(std::string_view(line).substr(start, bar - start)));
      start = bar + 1;
    }
    fields.push_back(trim(std::string_view(line).substr(start)));
    ManifestEntry e;
    e.id = fields[0];
    if (e.id.empty()) throw ParseError(line_no, "empty check id");
    if (fields[1] == "required")
      e.tier = Tier::Required;
    else if (fields[1] == "extended")
      e.tier = Tier::Extended;
    else
      throw ParseError(line_no, "unknown tier '" + fields[1] + "'");
    try {
      e.criterion = std::stoi(fields[2]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad criterion '" + fields[2] + "'");
    }
    e.description = fields[3];
    if (!seen.insert(e.id).second) throw ParseError(line_no, "repeated check id '" + e.id + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::string_view embedded_manifest_text() { return detail::kVerifyManifestText; }

const std::vector<ManifestEntry>& manifest() {
  static const std::vector<ManifestEntry> m = parse_manifest(embedded_manifest_text());
  return m;
}

VerifyContext::VerifyContext() : session_(std::make_unique<CensusSession>(Family::Corner)) {}
VerifyContext::~VerifyContext() = default;

namespace {

template <class Range>
std::string braces(const Range& r) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& x : r) {
    os << (first ? "" : ", ") << x;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string one_line(const Mosaic& m) {
  std::string s = serialize(m);
  const auto nl = s.find('\n');
  std::string body = s.substr(nl + 1);
  std::replace(body.begin(), body.end(), '\n', '/');
  if (!body.empty() && body.back() == '/') body.pop_back();
  return body;
}

std::set<std::string> knot_labels(const CensusSummary& s) {
  std::set<std::string> out;
  for (const auto& [label, e] : s.knots)
    if (label != "unknot") out.insert(label);
  return out;
}

CheckOutcome check_trefoil_census(VerifyContext& ctx) {
  const CensusSummary& s = ctx.session().square(3);
  const auto labels = knot_labels(s);
  const auto min = s.min_tiles("3_1");
  CheckOutcome out;
  out.passed = labels == std::set<std::string>{"3_1"} && min == 8;
  std::ostringstream os;
  os << "knots " << braces(labels) << ", min tiles 3_1 = " << (min ? std::to_string(*min) : "none");
  if (min) os << " (" << s.knots.at("3_1").minimal.size() << " minimal records)";
  os << ", " << s.records << " records";
  out.details = os.str();
  return out;
}

CheckOutcome check_layouts(VerifyContext& ctx, int n, OccupancyFilter filter, const std::multiset<int>& expected) {
  CensusQuery q;
  q.rows = q.cols = n;
  q.occupancy = filter;
  const auto layouts = layout_census(q, ctx.session());
  std::multiset<int> counts;
  for (const auto& l : layouts) counts.insert(l.non_blank);
  CheckOutcome out;
  out.passed = counts == expected;
  std::ostringstream os;
  os << "layout counts " << braces(counts) << ", expected " << braces(expected);
  for (const auto& l : layouts) {
    std::string sk = l.skeleton.to_string();
    while (!sk.empty() && sk.back() == '\n') sk.pop_back();
    std::replace(sk.begin(), sk.end(), '\n', '/');
    os << "; " << l.non_blank << " " << braces(l.knots) << " " << sk;
  }
  out.details = os.str();
  return out;
}

CheckOutcome check_four_census(VerifyContext& ctx) {
  const CensusSummary& s = ctx.session().square(4);
  const std::set<std::string> want{"3_1", "4_1", "5_1", "5_2", "6_1", "7_1", "7_2"};
  const std::map<std::string, int> min_want{{"5_1", 10}, {"4_1", 11}, {"5_2", 11}, {"7_1", 12},
                                            {"6_1", 13}, {"7_2", 14}};
  const auto labels = knot_labels(s);
  CheckOutcome out;
  out.passed = labels == want;
  std::ostringstream os;
  os << "knots " << braces(labels) << "; min tiles";
  for (const auto& [k, v] : min_want) {
    const auto got = s.min_tiles(k);
    os << " " << k << "=" << (got ? std::to_string(*got) : "none");
    if (got != v) {
      out.passed = false;
      os << " (expected " << v << ")";
    }
  }
  os << "; " << s.records << " records, " << s.raw_records << " raw";
  out.details = os.str();
  return out;
}

CheckOutcome check_crossing_max(int n) {
  const int empirical = max_crossings_empirical(Family::Corner, n);
  const int bound = corner_square_bound(n);
  const int pattern = crossing_count(max_pattern(n));
  CheckOutcome out;
  out.passed = empirical == bound && pattern == bound;
  out.details = "exhaustive maximum " + std::to_string(empirical) + ", bound " + std::to_string(bound) +
                ", max_pattern " + std::to_string(pattern);
  return out;
}

CheckOutcome check_max_pattern() {
  CheckOutcome out{true, {}};
  std::ostringstream os;
  std::vector<int> bad;
  for (int n = 3; n <= 12; ++n) {
    const Mosaic m = max_pattern(n);
    if (!validate(m).valid || crossing_count(m) != corner_square_bound(n)) bad.push_back(n);
  }
  if (!bad.empty()) out.passed = false;
  os << "max_pattern 3..12 " << (bad.empty() ? "valid at the bound" : "wrong for n in " + braces(bad));
  os << "; relaxation vs formula vs exact:";
  std::vector<std::string> gaps;
  for (int n = 3; n <= 9; ++n) {
    const int relax = max_marking_relaxation(n, n);
    const int exact = max_crossings_transfer(n, n);
    const int bound = corner_square_bound(n);
    os << " " << n << ":" << relax << "/" << bound << "/" << exact;
    if (relax < exact) out.passed = false;
    if (exact != bound) out.passed = false;
    if (relax != bound) gaps.push_back("n=" + std::to_string(n) + " relaxation " + std::to_string(relax) + " > " +
                                       std::to_string(bound));
  }
  os << "; discrepancies " << (gaps.empty() ? std::string("none") : braces(gaps));
  out.details = os.str();
  return out;
}

CheckOutcome check_bounds_table() {
  CheckOutcome out{true, {}};
  std::ostringstream os;
  const std::vector<int> corner_want{4, 8, 13, 18, 26, 32, 43, 50, 64, 72};
  const std::vector<int> trad_want{3, 7, 13, 23, 31, 47, 57, 79, 91};
  std::vector<int> corner, trad;
  for (int n = 3; n <= 12; ++n) corner.push_back(corner_square_bound(n));
  for (int n = 4; n <= 12; ++n) trad.push_back(traditional_square_bound(n));
  if (corner != corner_want || trad != trad_want) out.passed = false;
  os << "corner 3..12 " << braces(corner) << "; traditional 4..12 " << braces(trad);
  int rect_bad = 0;
  for (int m = 3; m <= 8; ++m) {
    for (int n = 3; n <= 8; ++n) {
      const int b = corner_rect_bound(m, n);
      int want = 0;
      if (m % 2 == 0 && n % 2 == 0)
        want = m * n / 2;
      else if (m % 2 == 1 && n % 2 == 1)
        want = (m * n + std::max(m, n) - 4) / 2;
      else
        want = (m * n + (m % 2 == 0 ? m : n) - 4) / 2;
      if (b != want || b != corner_rect_bound(n, m)) ++rect_bad;
      if (m == n && b != corner_square_bound(n)) ++rect_bad;
    }
  }
  if (rect_bad) out.passed = false;
  os << "; rectangular 3..8 x 3..8 " << (rect_bad ? std::to_string(rect_bad) + " mismatches" : "consistent");
  const int c9 = corner_square_bound(9);
  const int t9 = traditional_square_bound(9);
  if (c9 != 43 || t9 != 47) out.passed = false;
  os << "; spot corner(9)=" << c9 << " traditional(9)=" << t9;
  out.details = os.str();
  return out;
}

// Uniform random codes; almost always invalid.
Mosaic random_mosaic(std::mt19937& rng, Family f) {
  std::uniform_int_distribution<int> size(2, 6);
  std::uniform_int_distribution<int> code(0, kTileCount - 1);
  Mosaic m(f, size(rng), size(rng));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.set(r, c, static_cast<TileCode>(code(rng)));
  return m;
}

CheckOutcome check_invariants(VerifyContext& ctx) {
  CheckOutcome out{true, {}};
  std::vector<std::string> notes;
  auto note = [&](bool ok, const std::string& what) {
    if (!ok) out.passed = false;
    notes.push_back(std::string(ok ? "ok " : "FAILED ") + what);
  };

  const CensusSummary& s3 = ctx.session().square(3);
  const Mosaic trefoil = s3.knots.at("3_1").example;

  // Disjoint unknot multiplies the bracket by the loop value.
  {
    Mosaic wide(Family::Corner, 3, 5);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) wide.set(r, c, trefoil.at(r, c));
    wide.set(0, 3, 3);
    wide.set(0, 4, 4);
    const PDCode a = pd_code(trace(trefoil));
    const PDCode b = pd_code(trace(wide));
    note(bracket(b) == loop_value() * bracket(a) && b.free_loops == 1, "disjoint unknot multiplier");
  }

  // Every 3x3 trefoil diagram has the same normalized bracket up to mirror,
  // and mirroring sends A to A^-1.
  {
    std::vector<Mosaic> trefoils;
    CensusQuery q;
    q.rows = q.cols = 3;
    q.require_single_component = true;
    enumerate(q, [&](const CensusRecord& r) {
      if (r.knot.label() == "3_1") trefoils.push_back(r.mosaic);
    });
    const LaurentPoly f = normalized_bracket(pd_code(trace(trefoils.front())));
    bool same = true;
    bool mirror_ok = true;
    std::set<std::string> seen;
    for (const Mosaic& m : trefoils) {
      const LaurentPoly g = normalized_bracket(pd_code(trace(m)));
      if (g != f && g != f.inverted()) same = false;
      seen.insert(g.to_string());
      const LaurentPoly h = normalized_bracket(pd_code(trace(mirror_mosaic(m))));
      if (h != g.inverted()) mirror_ok = false;
    }
    note(same, "3x3 trefoil brackets agree up to mirror (" + std::to_string(trefoils.size()) + " records, " +
                   std::to_string(seen.size()) + " chiralities)");
    note(mirror_ok, "mirror relation A <-> A^-1");
  }

  // State sum against skein recursion, table knots and census diagrams.
  {
    int compared = 0;
    bool ok = true;
    for (const auto& e : knot_table()) {
      const PDCode pd = pd_from_tuples(e.pd);
      if (pd.crossing_count() > 10) continue;
      ok = ok && bracket(pd) == bracket_skein(pd);
      ++compared;
    }
    for (const auto& [label, e] : ctx.session().square(4).knots) {
      for (const Mosaic& m : e.minimal) {
        const PDCode pd = pd_code_or_empty(trace(m));
        if (pd.crossing_count() == 0 || pd.crossing_count() > 10) continue;
        ok = ok && bracket(pd) == bracket_skein(pd);
        ++compared;
      }
    }
    note(ok, "state sum = skein on " + std::to_string(compared) + " diagrams");
  }

  // Euler: a connected 4-valent plane diagram with c crossings has c + 2 faces.
  {
    std::int64_t checked = 0;
    std::int64_t bad = 0;
    for (int n : {3, 4}) {
      CensusQuery q;
      q.rows = q.cols = n;
      q.classify = false;
      q.require_single_component = n == 4;
      enumerate(q, [&](const CensusRecord& r) {
        const PDCode pd = pd_code_or_empty(trace(r.mosaic));
        if (pd.crossing_count() == 0 || !is_connected(pd)) return;
        ++checked;
        if (faces(pd).face_count != pd.crossing_count() + 2) ++bad;
      });
    }
    note(bad == 0, "Euler formula on " + std::to_string(checked) + " census diagrams");
  }

  // Symmetry action preserves validity; canonical forms are idempotent and
  // constant on orbits.
  {
    std::mt19937 rng(20261015);
    int valid = 0;
    bool keeps = true;
    bool canon = true;
    std::vector<Mosaic> sample;
    for (int i = 0; i < 500; ++i) sample.push_back(random_mosaic(rng, i % 2 ? Family::Corner : Family::Traditional));
    {
      std::vector<Mosaic> valid3;
      CensusQuery q;
      q.rows = q.cols = 3;
      q.classify = false;
      q.dedup = Dedup::Raw;
      enumerate(q, [&](const CensusRecord& r) { valid3.push_back(r.mosaic); });
      std::uniform_int_distribution<std::size_t> pick(0, valid3.size() - 1);
      for (int i = 0; i < 500; ++i) sample.push_back(valid3[pick(rng)]);
    }
    for (const Mosaic& m : sample) {
      const bool v = validate(m).valid;
      valid += v;
      const Mosaic c = canonical_form(m);
      if (canonical_form(c) != c) canon = false;
      for (Symmetry g : shape_symmetries(m.rows(), m.cols())) {
        const Mosaic t = transform_mosaic(m, g);
        if (validate(t).valid != v) keeps = false;
        if (canonical_form(t) != c) canon = false;
      }
    }
    note(keeps, "validity preserved under symmetries on " + std::to_string(sample.size()) + " mosaics (" +
                    std::to_string(valid) + " valid)");
    note(canon, "canonical form idempotent and orbit-constant");
  }

  // Reference table: distinct after mirror identification.
  {
    std::set<std::string> keys;
    bool distinct = true;
    for (const auto& e : knot_table()) {
      const std::string key = std::min(e.normalized.to_string(), e.normalized.inverted().to_string());
      distinct = distinct && keys.insert(key).second;
    }
    note(distinct && knot_table().size() == 37,
         std::to_string(knot_table().size()) + " reference polynomials pairwise distinct up to mirror");
  }

  // Jones polynomial of the 3x3 trefoil.
  {
    const LaurentPoly v = jones_from_normalized(normalized_bracket(pd_code(trace(trefoil))));
    const LaurentPoly left = LaurentPoly::monomial(-1, -4) + LaurentPoly::monomial(1, -3) + LaurentPoly::monomial(1, -1);
    note(v == left || v == left.inverted(), "V(3_1) = " + v.to_string('t'));
  }

  std::ostringstream os;
  for (std::size_t i = 0; i < notes.size(); ++i) os << (i ? "; " : "") << notes[i];
  out.details = os.str();
  return out;
}

CheckOutcome check_pretzel() {
  const Mosaic a = pretzel({-2, 3, 7});
  const Mosaic b = pretzel({1, 1, 1});
  const bool a_valid = validate(a).valid;
  const int a_comp = a_valid ? count_components(a) : -1;
  const KnotId b_id = classify(b);
  CheckOutcome out;
  out.passed = a_valid && a_comp == 1 && crossing_count(a) == 12 && b_id.label() == "3_1";
  std::ostringstream os;
  os << "P(-2,3,7): " << a.rows() << "x" << a.cols() << (a_valid ? " valid" : " invalid") << ", " << a_comp
     << " component(s), " << crossing_count(a) << " crossings; P(1,1,1) classifies as " << b_id.label();
  out.details = os.str();
  return out;
}

CheckOutcome check_seven_two() {
  CensusQuery q;
  q.rows = q.cols = 5;
  q.max_non_blank = 13;
  q.min_crossings = 7;
  q.require_single_component = true;
  const CensusSummary s = census(q);
  CheckOutcome out;
  const auto it = s.knots.find("7_2");
  out.passed = it != s.knots.end() && it->second.min_non_blank <= 13;
  std::ostringstream os;
  os << "5x5, <= 13 tiles, >= 7 crossings: knots " << braces(knot_labels(s));
  if (it != s.knots.end())
    os << "; 7_2 at " << it->second.min_non_blank << " tiles, e.g. " << one_line(it->second.example);
  out.details = os.str();
  return out;
}

CheckOutcome check_budget_twelve() {
  // Knots outside the set have crossing number >= 6, so diagrams with fewer
  // crossings cannot show them.
  CensusQuery q;
  q.rows = q.cols = 5;
  q.max_non_blank = 12;
  q.min_crossings = 6;
  q.require_single_component = true;
  const CensusSummary s = census(q);
  const std::set<std::string> allowed{"3_1", "4_1", "5_1", "5_2", "6_1", "7_1", "7_2"};
  std::set<std::string> outside;
  for (const auto& k : knot_labels(s))
    if (!allowed.count(k)) outside.insert(k);
  CheckOutcome out;
  out.passed = outside.empty();
  out.details = "5x5, <= 12 tiles, >= 6 crossings: " + std::to_string(s.records) + " records, knots " +
                braces(knot_labels(s)) + ", outside the 4-mosaic set " + braces(outside);
  return out;
}

CheckOutcome check_counterexample() {
  const CounterexampleReport rep = counterexample_check();
  CheckOutcome out;
  out.passed = rep.passed && rep.weave.certificate.crossing_number >= 44;
  std::string text;
  std::istringstream lines(rep.text);
  for (std::string line; std::getline(lines, line);) text += (text.empty() ? "" : "; ") + line;
  out.details = text;
  return out;
}

}  // namespace

CheckOutcome run_check(const std::string& id, VerifyContext& ctx) {
  if (id == "thm-2.3") return check_trefoil_census(ctx);
  if (id == "layouts-n3") return check_layouts(ctx, 3, OccupancyFilter::None, {8, 9});
  if (id == "thm-2.5") return check_four_census(ctx);
  if (id == "thm-2.4")
    return check_layouts(ctx, 4, OccupancyFilter::EveryRowOrEveryColumn, {10, 11, 12, 12, 13, 13, 14});
  if (id == "thm-4.1-n3") return check_crossing_max(3);
  if (id == "thm-4.1-n4") return check_crossing_max(4);
  if (id == "max-pattern") return check_max_pattern();
  if (id == "bounds-table") return check_bounds_table();
  if (id == "invariants") return check_invariants(ctx);
  if (id == "pretzel") return check_pretzel();
  if (id == "thm-2.6") return check_seven_two();
  if (id == "budget-12") return check_budget_twelve();
  if (id == "thm-3.2") return check_counterexample();
  throw std::out_of_range("unknown check id '" + id + "'");
}

std::vector<VerifyResult> verify_all(Tier tier, const std::function<void(const VerifyResult&)>& on_result) {
  VerifyContext ctx;
  std::vector<VerifyResult> results;
  for (const ManifestEntry& e : manifest()) {
    VerifyResult r;
    r.id = e.id;
    if (e.tier == Tier::Extended && tier == Tier::Required) {
      r.status = VerifyStatus::SkippedExtended;
      r.details = e.description;
    } else {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const CheckOutcome o = run_check(e.id, ctx);
        r.status = o.passed ? VerifyStatus::Pass : VerifyStatus::Fail;
        r.details = o.details;
      } catch (const std::exception& ex) {
        r.status = VerifyStatus::Fail;
        r.details = std::string("error: ") + ex.what();
      }
      r.elapsed = std::chrono::steady_clock::now() - t0;
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_text(const VerifyResult& r, bool timing) {
  std::string status(status_name(r.status));
  std::transform(status.begin(), status.end(), status.begin(), [](unsigned char c) { return std::toupper(c); });
  std::ostringstream os;
  os << status << " " << r.id;
  if (timing) os << " [" << r.elapsed.count() << " s]";
  os << ": " << r.details;
  return os.str();
}

std::string format_json(const VerifyResult& r, bool timing) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["status"] = status_name(r.status);
  j["details"] = r.details;
  if (timing) j["elapsed_s"] = r.elapsed.count();
  return j.dump();
}

}  // namespace mosaic
