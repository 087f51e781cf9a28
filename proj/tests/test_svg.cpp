#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "mosaic/svg.hpp"

using namespace mosaic;

namespace {

int count(const std::string& s, const std::string& what) {
  int n = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE("svg") {
  TEST_CASE("one path per arc") {
    const std::string svg = render_svg(parse("corner 2 2\n3 4\n0 0\n"));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count(svg, "class=\"arc\"") == 2);
    CHECK(count(svg, "class=\"grid\"") == 6);
    CHECK(count(svg, "offending") == 0);
    CHECK(svg.find("width=\"100\"") != std::string::npos);
  }

  TEST_CASE("under strand leaves a gap") {
    const std::string svg = render_svg(parse("corner 1 1\n9\n"));
    CHECK(count(svg, "class=\"arc\"") == 2);
    const std::regex gap("d=\"M [^\"]* L [^\"]* M [^\"]* L [^\"]*\"");
    CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), gap), std::sregex_iterator()) == 1);
  }

  TEST_CASE("invalid mosaics mark offending sites") {
    const std::string svg = render_svg(parse("corner 1 1\n1\n"));
    CHECK(count(svg, "class=\"offending\"") == 2);
  }

  TEST_CASE("output is deterministic and matches the golden file") {
    const Mosaic m = parse("corner 3 3\n6 10 5\n8 0 9\n5 10 6\n");
    const std::string svg = render_svg(m);
    CHECK(render_svg(m) == svg);
    CHECK(svg == read_file(MOSAIC_GOLDEN_DIR "/trefoil.svg"));
  }
}
