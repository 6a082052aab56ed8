#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "apollon/errors.hpp"
#include "apollon/render.hpp"
#include "apollon/symbols.hpp"

using namespace apollon;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0;
  for (size_t pos = 0; (pos = text.find(needle, pos)) != std::string::npos;
       pos += needle.size()) {
    ++count;
  }
  return count;
}

struct ParsedCircle {
  double cx, cy, r;
};

std::vector<ParsedCircle> parse_circles(const std::string& svg) {
  std::vector<ParsedCircle> out;
  size_t pos = 0;
  while ((pos = svg.find("<circle cx=\"", pos)) != std::string::npos) {
    ParsedCircle c{};
    pos += 12;
    c.cx = std::strtod(svg.c_str() + pos, nullptr);
    pos = svg.find("cy=\"", pos) + 4;
    c.cy = std::strtod(svg.c_str() + pos, nullptr);
    pos = svg.find("r=\"", pos) + 3;
    c.r = std::strtod(svg.c_str() + pos, nullptr);
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("one svg circle per packing circle") {
  const Packing p = generate({1, 0, 1, 1}, 3);
  const std::string svg = render_svg(p, RenderOptions{});
  CHECK(count_occurrences(svg, "<circle ") == 5);
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"", 0) == 0);
  CHECK(svg.find("width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\"") !=
        std::string::npos);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");

  RenderOptions narrow;
  narrow.width_px = 400;
  CHECK(render_svg(p, narrow).find("viewBox=\"0 0 400 400\"") != std::string::npos);
}

TEST_CASE("bend labels") {
  const Packing p = generate({1, 0, 1, 1}, 15);
  RenderOptions opts;
  opts.label_mode = LabelMode::Bends;
  const std::string svg = render_svg(p, opts);
  for (const char* bend : {"-1", "2", "3", "6", "11", "14", "15"}) {
    CHECK(svg.find(">" + std::string(bend) + "</text>") != std::string::npos);
  }
}

TEST_CASE("symbol labels") {
  const Packing p = generate({1, 0, 1, 1}, 3);
  RenderOptions opts;
  opts.label_mode = LabelMode::Symbols;
  const std::string svg = render_svg(p, opts);
  CHECK(svg.find(">(0,0)/-1</text>") != std::string::npos);
  CHECK(svg.find(">(-1,0)/2</text>") != std::string::npos);
  CHECK(svg.find(">(0,-2)/3</text>") != std::string::npos);
}

TEST_CASE("culling by projected radius") {
  const Packing p = generate({1, 0, 1, 1}, 100);
  RenderOptions opts;
  opts.min_radius_px = Rat(50);
  // scale is 10000/21 px per unit, so only bends up to 200/21 survive
  CHECK(count_occurrences(render_svg(p, opts), "<circle ") == 9);
  CHECK(count_occurrences(render_svg(p, RenderOptions{}), "<circle ") == p.circles.size());
}

TEST_CASE("render rejects unusable input") {
  const Packing p = generate({1, 0, 1, 1}, 3);

  RenderOptions zero_width;
  zero_width.width_px = 0;
  CHECK_THROWS_AS(render_svg(p, zero_width), std::invalid_argument);

  RenderOptions no_cull;
  no_cull.min_radius_px = Rat(0);
  CHECK_THROWS_AS(render_svg(p, no_cull), std::invalid_argument);

  Packing empty;
  empty.key = {1, 0, 1, 1};
  CHECK_THROWS_AS(render_svg(empty, RenderOptions{}), EmptyPacking);

  Packing no_enclosing;
  no_enclosing.key = {0, 0, 0, 1};
  no_enclosing.circles = {CircleSymbol{Rat(0), Rat(0), 1}};
  CHECK_THROWS_AS(render_svg(no_enclosing, RenderOptions{}), std::invalid_argument);
}

TEST_CASE("rendered tangencies are accurate to one part in a billion") {
  const Packing p = generate({6, 2, 5, 8}, 60);
  const std::string svg = render_svg(p, RenderOptions{});
  const auto parsed = parse_circles(svg);
  REQUIRE(parsed.size() == p.circles.size());

  size_t tangencies = 0;
  for (size_t i = 0; i < p.circles.size(); ++i) {
    for (size_t j = i + 1; j < p.circles.size(); ++j) {
      if (!tangent(p.circles[i], p.circles[j])) continue;
      ++tangencies;
      const double dx = parsed[i].cx - parsed[j].cx;
      const double dy = parsed[i].cy - parsed[j].cy;
      const double dist = std::sqrt(dx * dx + dy * dy);
      const bool internal = p.circles[i].bend < 0 || p.circles[j].bend < 0;
      const double expected =
          internal ? std::fabs(parsed[i].r - parsed[j].r) : parsed[i].r + parsed[j].r;
      CHECK(std::fabs(dist - expected) <= 1e-9 * (parsed[i].r + parsed[j].r));
    }
  }
  CHECK(tangencies > 20);
}

TEST_CASE("principal frame overlay") {
  const Packing p = generate({1, 0, 1, 1}, 3);
  RenderOptions opts;
  opts.draw_frame = true;
  const std::string svg = render_svg(p, opts);
  CHECK(count_occurrences(svg, "<line ") == 6);
  CHECK(svg.find("(3,-4,5)") != std::string::npos);
  CHECK(count_occurrences(render_svg(p, RenderOptions{}), "<line ") == 0);
}

TEST_CASE("byte identical output") {
  const Packing p = generate({2, 0, 1, 4}, 50);
  RenderOptions opts;
  opts.label_mode = LabelMode::Bends;
  opts.draw_frame = true;
  CHECK(render_svg(p, opts) == render_svg(p, opts));
}
