#include <filesystem>
#include <fstream>
#include <regex>

#include "doctest.h"
#include "puiseux/cli/parse.hpp"
#include "puiseux/cli/svg.hpp"

using namespace puiseux;
using namespace puiseux::cli;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

std::vector<std::pair<std::string, std::string>> circles(const std::string& svg) {
  static const std::regex re("<circle [^>]*cx=\"([-0-9.]+)\" cy=\"([-0-9.]+)\"");
  std::vector<std::pair<std::string, std::string>> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
    out.emplace_back((*it)[1], (*it)[2]);
  return out;
}

const NewtonPolygon kCusp = newton_polygon(parse_form("-3*x^2", "2*y"));

}  // namespace

TEST_CASE("cusp polygon figure") {
  const std::string svg = render_svg(kCusp);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "<svg ") == 1);
  CHECK(count(svg, "</svg>") == 1);
  CHECK(count(svg, "<polyline") == 1);
  CHECK(count(svg, "class=\"support\"") == 0);
  // i in [-1, 3], j in [0, 3]: 5 + 4 gridlines and two axes
  CHECK(count(svg, "class=\"grid\"") == 9);
  CHECK(count(svg, "class=\"axis\"") == 2);
  // (-1,2) and (2,0) with 48 px per unit and a 32 px margin, j pointing up
  const auto dots = circles(svg);
  REQUIRE(dots.size() == 2);
  CHECK(dots[0] == std::pair<std::string, std::string>{"32.00", "80.00"});
  CHECK(dots[1] == std::pair<std::string, std::string>{"176.00", "176.00"});
  CHECK(svg.find("points=\"32.00,80.00 176.00,176.00\"") != std::string::npos);
}

TEST_CASE("singleton polygon has one dot and no chain") {
  const std::string svg = render_svg(newton_polygon(parse_form("y", "-x")));
  CHECK(circles(svg).size() == 1);
  CHECK(count(svg, "<polyline") == 0);
}

TEST_CASE("support line crosses the axis at tau") {
  SvgAnnotations ann;
  ann.mu = Rat(3, 2);
  const std::string svg = render_svg(kCusp, ann);
  CHECK(count(svg, "class=\"support\"") == 1);
  // tau = 2 maps to x = 32 + 3 * 48, on the axis y = 176
  CHECK(svg.find("<line class=\"support\" x1=\"176.00\" y1=\"176.00\"") != std::string::npos);
  CHECK(svg.find(">tau = 2</text>") != std::string::npos);
}

TEST_CASE("svg output is deterministic and written to disk") {
  SvgAnnotations ann;
  ann.mu = Rat(1);
  CHECK(render_svg(kCusp, ann) == render_svg(kCusp, ann));

  const auto path = std::filesystem::temp_directory_path() / "puiseux_svg_test.svg";
  emit_svg(kCusp, ann, path.string());
  std::ifstream f(path);
  const std::string back((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(back == render_svg(kCusp, ann));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(emit_svg(kCusp, ann, "/nonexistent-dir/x.svg"), Error);
  CHECK_THROWS_AS(render_svg(NewtonPolygon{}), Error);
}
