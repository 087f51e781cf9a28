// Command-line driver: mosaic <subcommand> [options]. Exit status 0 on
// success, 1 on a domain failure, 2 on a usage error.
#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "mosaic/bounds.hpp"
#include "mosaic/bracket.hpp"
#include "mosaic/census.hpp"
#include "mosaic/knot_table.hpp"
#include "mosaic/svg.hpp"
#include "mosaic/verify.hpp"

namespace {

using namespace mosaic;

struct DomainFailure {
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainFailure{"cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Mosaic load(const std::string& path) {
  try {
    return parse(read_input(path));
  } catch (const ParseError& e) {
    throw DomainFailure{(path.empty() ? std::string("<stdin>") : path) + ": " + e.what()};
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainFailure{"cannot write " + path};
  out << text;
}

Mosaic require_valid(const Mosaic& m) {
  const ValidationReport rep = validate(m);
  if (!rep.valid) {
    std::string msg = "mosaic is not suitably connected:";
    for (const Site& s : rep.offending_sites) msg += "\n  " + describe(s);
    throw DomainFailure{msg};
  }
  return m;
}

int cmd_validate(const std::string& path) {
  const Mosaic m = load(path);
  const ValidationReport rep = validate(m);
  if (rep.valid) {
    fmt::print("valid ({} non-blank, {} crossings)\n", rep.non_blank, rep.crossings);
    return 0;
  }
  fmt::print("invalid: {} offending site(s)\n", rep.offending_sites.size());
  for (const Site& s : rep.offending_sites) fmt::print("  {}\n", describe(s));
  return 1;
}

int cmd_trace(const std::string& path) {
  const Mosaic m = require_valid(load(path));
  const Diagram d = trace(m);
  const PDCode pd = pd_code_or_empty(d);
  fmt::print("components: {}\ncrossings: {}\n", d.component_count(), d.crossing_count());
  for (int i = 0; i < d.component_count(); ++i) {
    const auto& c = d.components[static_cast<std::size_t>(i)];
    fmt::print("component {}: start ({},{}), {} passages\n", i + 1, c.sites.front().row, c.sites.front().col,
               c.passages.size());
  }
  if (pd.crossing_count() > 0) {
    fmt::print("writhe: {}\nalternating: {}\nreduced: {}\n", writhe(pd), is_alternating(pd) ? "yes" : "no",
               is_connected(pd) ? (is_reduced(pd) ? "yes" : "no") : "n/a (split diagram)");
    fmt::print("{}", format_pd(pd));
  }
  return 0;
}

int cmd_classify(const std::string& path) {
  const Mosaic m = require_valid(load(path));
  const KnotId id = classify(m);
  fmt::print("{} ({} non-blank, {} crossings)\n", id.label(), non_blank_count(m), crossing_count(m));
  return 0;
}

struct CensusOptions {
  std::string family = "corner";
  int rows = 3;
  int cols = 0;
  int max_tiles = -1;
  int min_crossings = -1;
  int max_crossings = -1;
  bool knots_only = false;
  bool prime_only = false;
  std::string dedup = "symmetry";
  std::string format = "text";
  bool records = false;
  bool serial = false;
};

CensusQuery make_query(const CensusOptions& o) {
  CensusQuery q;
  q.family = *parse_family(o.family);
  q.rows = o.rows;
  q.cols = o.cols > 0 ? o.cols : o.rows;
  if (o.max_tiles >= 0) q.max_non_blank = o.max_tiles;
  if (o.min_crossings >= 0) q.min_crossings = o.min_crossings;
  if (o.max_crossings >= 0) q.max_crossings = o.max_crossings;
  q.require_single_component = o.knots_only || o.prime_only;
  q.require_prime_table_knot = o.prime_only;
  q.dedup = o.dedup == "raw" ? Dedup::Raw : o.dedup == "mirror" ? Dedup::SymmetryMirror : Dedup::Symmetry;
  q.check();
  return q;
}

std::string one_line(const Mosaic& m) {
  std::string s;
  for (int r = 0; r < m.rows(); ++r) {
    if (r) s += " / ";
    for (int c = 0; c < m.cols(); ++c) s += (c ? " " : "") + std::to_string(m.at(r, c));
  }
  return s;
}

int cmd_census(const CensusOptions& o) {
  const CensusQuery q = make_query(o);
  const bool json = o.format == "json-lines";
  if (o.records) {
    const SearchStats st = enumerate(q, [&](const CensusRecord& r) {
      if (json) {
        nlohmann::ordered_json j;
        j["mosaic"] = serialize(r.mosaic);
        j["knot"] = r.knot.label();
        j["non_blank"] = r.non_blank;
        j["crossings"] = r.crossings;
        std::cout << j.dump() << "\n";
      } else {
        fmt::print("{}\t{}\t{}\t{}\n", r.knot.label(), r.non_blank, r.crossings, one_line(r.mosaic));
      }
    });
    fmt::print(stderr, "nodes {} leaves {}\n", st.nodes, st.leaves);
    return 0;
  }
  const CensusSummary s = o.serial ? census_serial(q) : census(q);
  fmt::print(stderr, "nodes {} leaves {} prunes: degree {} budget {} crossing {} symmetry {}\n", s.stats.nodes,
             s.stats.leaves, s.stats.degree_prunes, s.stats.budget_prunes, s.stats.crossing_prunes,
             s.stats.symmetry_prunes);
  if (json) {
    for (const auto& [label, e] : s.knots) {
      nlohmann::ordered_json j;
      j["knot"] = label;
      j["min_non_blank"] = e.min_non_blank;
      j["min_crossings"] = e.min_crossings;
      j["count"] = e.count;
      j["mirror_classes"] = e.mirror_classes;
      j["example"] = serialize(e.example);
      std::cout << j.dump() << "\n";
    }
    nlohmann::ordered_json j;
    j["records"] = s.records;
    j["raw_records"] = s.raw_records;
    j["mirror_classes"] = s.mirror_classes;
    j["max_crossings"] = s.max_crossings;
    std::cout << j.dump() << "\n";
    return 0;
  }
  fmt::print("{} {}x{} census, dedup {}\n", family_name(q.family), q.rows, q.cols, dedup_name(q.dedup));
  fmt::print("{:<12} {:>9} {:>9} {:>10} {:>10}  example\n", "knot", "min tiles", "min cross", "records", "mirror");
  for (const auto& [label, e] : s.knots)
    fmt::print("{:<12} {:>9} {:>9} {:>10} {:>10}  {}\n", label, e.min_non_blank, e.min_crossings, e.count,
               e.mirror_classes, one_line(e.example));
  fmt::print("records {}, raw {}, mirror classes {}, max crossings {}\n", s.records, s.raw_records, s.mirror_classes,
             s.max_crossings);
  return 0;
}

int cmd_layouts(int n, bool filter) {
  CensusQuery q;
  q.rows = q.cols = n;
  q.occupancy = filter ? OccupancyFilter::EveryRowOrEveryColumn : OccupancyFilter::None;
  CensusSession session;
  const auto layouts = layout_census(q, session);
  for (const auto& l : layouts) {
    std::string knots;
    for (const auto& k : l.knots) knots += (knots.empty() ? "" : ",") + k;
    fmt::print("{} non-blank, knots {}\n{}\n", l.non_blank, knots, l.skeleton.to_string());
  }
  std::string counts;
  for (const auto& l : layouts) counts += (counts.empty() ? "" : ", ") + std::to_string(l.non_blank);
  fmt::print("counts: {{{}}}\n", counts);
  return 0;
}

int cmd_bounds(const std::string& family, int m, int n, bool verbose) {
  const Family f = *parse_family(family);
  const BoundReport r = bound_report(f, m > 0 ? m : n, n);
  if (verbose)
    fmt::print("{} {}x{}: {} ({})\n", family_name(f), r.rows, r.cols, r.bound, formula_case_name(r.formula_case));
  else
    fmt::print("{}\n", r.bound);
  return 0;
}

int cmd_verify(const std::string& tier, const std::string& format, bool timing, const std::vector<std::string>& only) {
  const bool json = format == "json-lines";
  bool failed = false;
  int pass = 0, fail = 0, skipped = 0;
  auto report = [&](const VerifyResult& r) {
    std::cout << (json ? format_json(r, timing) : format_text(r, timing)) << "\n" << std::flush;
    if (r.status == VerifyStatus::Pass) ++pass;
    if (r.status == VerifyStatus::SkippedExtended) ++skipped;
    if (r.status == VerifyStatus::Fail) {
      ++fail;
      for (const auto& e : manifest())
        if (e.id == r.id && e.tier == Tier::Required) failed = true;
    }
  };
  if (only.empty()) {
    verify_all(tier == "extended" ? Tier::Extended : Tier::Required, report);
  } else {
    VerifyContext ctx;
    for (const auto& id : only) {
      VerifyResult r;
      r.id = id;
      const auto t0 = std::chrono::steady_clock::now();
      const CheckOutcome o = run_check(id, ctx);
      r.elapsed = std::chrono::steady_clock::now() - t0;
      r.status = o.passed ? VerifyStatus::Pass : VerifyStatus::Fail;
      r.details = o.details;
      report(r);
      if (!o.passed) failed = true;
    }
  }
  if (json) {
    nlohmann::ordered_json j;
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
    std::cout << j.dump() << "\n";
  } else {
    fmt::print("summary: {} pass, {} fail, {} skipped\n", pass, fail, skipped);
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot mosaics with corner connection tiles"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand help for all subcommands");

  std::string input;
  auto add_input = [&](CLI::App* sub) { sub->add_option("file", input, "Input .cmos file (default: standard input)"); };

  auto* validate_cmd = app.add_subcommand("validate", "Check that every connection point is matched");
  add_input(validate_cmd);
  auto* trace_cmd = app.add_subcommand("trace", "Trace components and print the PD code");
  add_input(trace_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "Name the knot drawn by a mosaic");
  add_input(classify_cmd);

  CensusOptions co;
  auto* census_cmd = app.add_subcommand("census", "Enumerate valid mosaics and tabulate knots");
  census_cmd->add_option("--family", co.family)->check(CLI::IsMember({"corner", "traditional"}));
  census_cmd->add_option("--rows,-n", co.rows, "Rows (and columns unless --cols)")->check(CLI::Range(1, 8));
  census_cmd->add_option("--cols", co.cols)->check(CLI::Range(1, 8));
  census_cmd->add_option("--max-tiles", co.max_tiles, "Most non-blank tiles")->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--min-crossings", co.min_crossings)->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--max-crossings", co.max_crossings)->check(CLI::NonNegativeNumber);
  census_cmd->add_flag("--knots-only", co.knots_only, "Single-component mosaics only");
  census_cmd->add_flag("--prime-only", co.prime_only, "Nontrivial table knots only");
  census_cmd->add_option("--dedup", co.dedup)->check(CLI::IsMember({"raw", "symmetry", "mirror"}));
  census_cmd->add_option("--format", co.format)->check(CLI::IsMember({"text", "json-lines"}));
  census_cmd->add_flag("--records", co.records, "Stream every record instead of a summary");
  census_cmd->add_flag("--serial", co.serial, "Single-threaded reference search");

  int layout_n = 4;
  bool layout_filter = false;
  auto* layouts_cmd = app.add_subcommand("layouts", "Skeletons of tile-minimal knot mosaics");
  layouts_cmd->add_option("--n", layout_n)->check(CLI::Range(2, 4));
  layouts_cmd->add_flag("--row-or-column", layout_filter, "Keep layouts occupying every row or every column");

  std::string bound_family = "corner";
  int bound_m = 0, bound_n = 0;
  bool bound_verbose = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Upper bound on crossing tiles");
  bounds_cmd->add_option("--family", bound_family)->check(CLI::IsMember({"corner", "traditional"}));
  bounds_cmd->add_option("--n", bound_n, "Columns (and rows unless --m)")->required();
  bounds_cmd->add_option("--m", bound_m, "Rows of a rectangular mosaic");
  bounds_cmd->add_flag("--verbose,-v", bound_verbose, "Print the formula case");

  int pattern_n = 0;
  auto* pattern_cmd = app.add_subcommand("pattern", "Corner mosaic with the most crossings");
  pattern_cmd->add_option("--n", pattern_n)->required()->check(CLI::Range(3, 64));

  std::vector<int> twists;
  auto* pretzel_cmd = app.add_subcommand("pretzel", "Corner mosaic of a pretzel link");
  pretzel_cmd->add_option("twists", twists, "Signed twist counts, e.g. -- -2 3 7")->required();

  int weave_n = 9, weave_floor = 0;
  bool weave_report = false;
  std::string svg_prefix;
  auto* weave_cmd = app.add_subcommand("weave", "Saturated alternating traditional mosaic");
  weave_cmd->add_option("--n", weave_n)->check(CLI::Range(5, 15));
  weave_cmd->add_option("--floor", weave_floor, "Fewest crossings accepted");
  weave_cmd->add_flag("--counterexample", weave_report, "Run the n = 9 comparison with the corner bound");
  weave_cmd->add_option("--svg-prefix", svg_prefix, "With --counterexample, write PREFIX-weave.svg and PREFIX-pattern.svg");

  std::string render_out;
  auto* render_cmd = app.add_subcommand("render", "Draw a mosaic as SVG");
  add_input(render_cmd);
  render_cmd->add_option("-o,--output", render_out, "Output file (default: standard output)");

  std::string tier = "required", verify_format = "text";
  bool timing = false;
  std::vector<std::string> only;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification checks");
  verify_cmd->add_option("--tier", tier)->check(CLI::IsMember({"required", "extended"}));
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json-lines"}));
  verify_cmd->add_flag("--timing", timing, "Include elapsed seconds");
  verify_cmd->add_option("--only", only, "Run only these check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(input);
    if (*trace_cmd) return cmd_trace(input);
    if (*classify_cmd) return cmd_classify(input);
    if (*census_cmd) return cmd_census(co);
    if (*layouts_cmd) return cmd_layouts(layout_n, layout_filter);
    if (*bounds_cmd) return cmd_bounds(bound_family, bound_m, bound_n, bound_verbose);
    if (*pattern_cmd) {
      std::cout << serialize(max_pattern(pattern_n));
      return 0;
    }
    if (*pretzel_cmd) {
      std::cout << serialize(pretzel(twists));
      return 0;
    }
    if (*weave_cmd) {
      if (weave_report) {
        const CounterexampleReport rep = counterexample_check();
        std::cout << serialize(rep.weave.mosaic) << rep.text;
        if (!svg_prefix.empty()) {
          write_output(svg_prefix + "-weave.svg", rep.weave_svg);
          write_output(svg_prefix + "-pattern.svg", rep.pattern_svg);
        }
        return rep.passed ? 0 : 1;
      }
      const WeaveResult w = saturated_weave_traditional(weave_n, weave_floor);
      std::cout << serialize(w.mosaic);
      fmt::print(stderr, "{} crossings, {} defects, {} candidates; {}\n", w.crossings, w.defects, w.candidates,
                 w.certificate.statement);
      return 0;
    }
    if (*render_cmd) {
      write_output(render_out, render_svg(load(input)));
      return 0;
    }
    if (*verify_cmd) return cmd_verify(tier, verify_format, timing, only);
  } catch (const DomainFailure& e) {
    std::cerr << e.message << "\n";
    return 1;
  } catch (const WeaveSearchError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
