#include "mosaic/knot_table.hpp"

#include <cctype>
#include <json.hpp>
#include <stdexcept>
#include <unordered_map>

#include "mosaic/bracket.hpp"

namespace mosaic {

namespace detail {
extern const std::string_view kKnotTableText;
}

std::string_view embedded_knot_table_text() { return detail::kKnotTableText; }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

LaurentPoly parse_jones(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  LaurentPoly out;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || !std::isdigit(static_cast<unsigned char>(s[pos - 1])))
      throw std::invalid_argument("expected integer in polynomial `" + s + "`");
    return std::stoll(s.substr(start, pos - start));
  };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::int64_t coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = read_int(i);
      have_coeff = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    int exponent = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const bool paren = i < s.size() && s[i] == '(';
        if (paren) ++i;
        exponent = static_cast<int>(read_int(i));
        if (paren) {
          if (i >= s.size() || s[i] != ')') throw std::invalid_argument("unbalanced parenthesis in `" + s + "`");
          ++i;
        }
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("malformed term in polynomial `" + s + "`");
    }
    out += LaurentPoly::monomial(sign * coeff, exponent);
  }
  return out;
}

std::vector<KnotTableEntry> parse_knot_table(std::string_view text) {
  std::vector<KnotTableEntry> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = trim(text.substr(start, nl - start));
    start = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t bar1 = line.find('|');
    const std::size_t bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos) throw ParseError(line_no, "expected `name | PD | Jones`");
    KnotTableEntry e;
    e.name = std::string(trim(line.substr(0, bar1)));
    try {
      const auto pd = nlohmann::json::parse(trim(line.substr(bar1 + 1, bar2 - bar1 - 1)));
      for (const auto& x : pd) e.pd.push_back(x.get<std::array<int, 4>>());
      e.published_jones = parse_jones(line.substr(bar2 + 1));
    } catch (const std::exception& ex) {
      throw ParseError(line_no, ex.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<KnotTableEntry>& knot_table() {
  static const std::vector<KnotTableEntry> table = [] {
    auto entries = parse_knot_table(embedded_knot_table_text());
    for (auto& e : entries) e.normalized = normalized_bracket(pd_from_tuples(e.pd));
    return entries;
  }();
  return table;
}

std::vector<std::pair<std::string, LaurentPoly>> reference_table() {
  std::vector<std::pair<std::string, LaurentPoly>> out;
  for (const auto& e : knot_table()) out.emplace_back(e.name, e.normalized);
  return out;
}

std::string_view chirality_name(Chirality c) {
  switch (c) {
    case Chirality::AsTable: return "as-table";
    case Chirality::Mirrored: return "mirrored";
    default: return "amphichiral";
  }
}

std::string KnotId::label() const {
  switch (kind) {
    case Kind::Knot: return name;
    case Kind::Unknown: return "unknown";
    case Kind::Link: return "link(" + std::to_string(components) + ")";
    case Kind::Empty: return "empty";
    default: return "unclassified";
  }
}

namespace {

struct Lookup {
  std::string name;
  Chirality chirality;
};

const std::unordered_map<LaurentPoly, Lookup, LaurentPolyHash>& lookup_map() {
  static const auto map = [] {
    std::unordered_map<LaurentPoly, Lookup, LaurentPolyHash> m;
    for (const auto& e : knot_table()) {
      const LaurentPoly mirror = e.normalized.inverted();
      if (mirror == e.normalized) {
        m.emplace(e.normalized, Lookup{e.name, Chirality::Amphichiral});
      } else {
        m.emplace(e.normalized, Lookup{e.name, Chirality::AsTable});
        m.emplace(mirror, Lookup{e.name, Chirality::Mirrored});
      }
    }
    return m;
  }();
  return map;
}

}  // namespace

std::optional<KnotId> lookup_normalized(const LaurentPoly& f) {
  const auto& m = lookup_map();
  auto it = m.find(f);
  if (it == m.end()) return std::nullopt;
  KnotId id;
  id.name = it->second.name;
  id.chirality = it->second.chirality;
  id.polynomial = f;
  return id;
}

KnotId classify(const Diagram& d) {
  KnotId id;
  id.components = d.component_count();
  id.diagram_crossings = d.crossing_count();
  if (id.components == 0) {
    id.kind = KnotId::Kind::Empty;
    return id;
  }
  if (id.components > 1) {
    id.kind = KnotId::Kind::Link;
    return id;
  }
  if (id.diagram_crossings < 3) {
    id.name = "unknot";
    id.polynomial = LaurentPoly(1);
    return id;
  }
  const LaurentPoly f = normalized_bracket(pd_code(d));
  if (auto hit = lookup_normalized(f)) {
    hit->components = 1;
    hit->diagram_crossings = id.diagram_crossings;
    return *hit;
  }
  id.kind = KnotId::Kind::Unknown;
  id.polynomial = f;
  return id;
}

KnotId classify(const Mosaic& m) { return classify(trace(m)); }

}  // namespace mosaic
