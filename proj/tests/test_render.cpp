#include <doctest.h>

#include <regex>

#include "fixtures.hpp"
#include "tangles/ops.hpp"
#include "tangles/render.hpp"

using namespace tangles;
using namespace fixtures;

namespace {

std::size_t occurrences(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::string path_data(const std::string& svg) {
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex(" d=\"([^\"]*)\"")));
  return m[1];
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(12.5) == "12.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333");
}

TEST_CASE("circle path closes on its start") {
  const auto d = path_data(render_svg(build_tangle(square_circle())));
  CHECK(occurrences(d, " A ") == 4);
  std::smatch m;
  REQUIRE(std::regex_match(d, m, std::regex("M (\\S+ \\S+) .* (\\S+ \\S+) Z")));
  CHECK(m[1] == m[2]);
}

TEST_CASE("single square path stays inside the canvas") {
  RenderOptions opts;
  const std::string svg = render_svg(build_tangle(single_square()), nullptr, opts);
  const auto d = path_data(svg);
  CHECK(occurrences(d, " A ") == 8);
  // centers span [0, 2]; every arc point lies within one radius of them
  const double lo = opts.margin, hi = opts.margin + 4 * opts.scale;
  CHECK(svg.find("width=\"" + format_number(hi + opts.margin) + "\"") != std::string::npos);
  std::regex pt("(?:M|A \\S+ \\S+ 0 0 [01]) (-?[0-9.]+) (-?[0-9.]+)");
  for (auto it = std::sregex_iterator(d.begin(), d.end(), pt); it != std::sregex_iterator(); ++it) {
    const double x = std::stod((*it)[1]), y = std::stod((*it)[2]);
    CHECK(x >= lo - 1e-9);
    CHECK(x <= hi + 1e-9);
    CHECK(y >= lo - 1e-9);
    CHECK(y <= hi + 1e-9);
  }
}

TEST_CASE("polyform layer") {
  RenderOptions opts;
  opts.show_polyform = true;
  const auto p = single_square();
  const std::string svg = render_svg(build_tangle(p), &p, opts);
  CHECK(occurrences(svg, "<polygon") == 1);
  CHECK(occurrences(svg, "fill=\"#000000\"/>") == 2);
  CHECK(occurrences(svg, "fill=\"#ffffff\"/>") == 2);
}

TEST_CASE("white cut vertex is ringed") {
  const auto p = white_cut_pair();
  const auto r = validate(p);
  const std::string svg = render_polyform_svg(p, {}, &r);
  CHECK(occurrences(svg, "<polygon") == 2);
  CHECK(svg.find("#d62728") != std::string::npos);
  CHECK(render_polyform_svg(single_square(), {}, nullptr).find("#d62728") == std::string::npos);
}

TEST_CASE("dual graph overlay") {
  RenderOptions opts;
  opts.show_polyform = true;
  opts.show_dual_graph = true;
  const auto p = block2x2();
  CHECK(occurrences(render_svg(build_tangle(p), &p, opts), "<line") == 4);
}

TEST_CASE("op preview overlays two paths") {
  const auto before = build_tangle(square_circle());
  const auto after = build_tangle(apply(square_circle(), applicable_ops(square_circle()).front()));
  const std::string svg = render_op_preview(before, after);
  CHECK(occurrences(svg, "<path") == 2);
  CHECK(svg.find("#a0a0a0") < svg.find("stroke=\"#000000\""));
}

TEST_CASE("rendering is deterministic") {
  RenderOptions opts;
  opts.show_polyform = true;
  const auto p = fan();
  CHECK(render_svg(build_tangle(p), &p, opts) == render_svg(build_tangle(p), &p, opts));
}
