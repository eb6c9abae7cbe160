#include <doctest.h>

#include <stdexcept>
#include <string>

#include "cantor/render.hpp"

using namespace cantor;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("one rect per level square, identical bytes across runs") {
  const CoverSpec spec = build("circle-big");
  const std::string svg = render_svg(spec, 6);
  CHECK(count_occurrences(svg, "<rect class=\"sq ") == 1024);  // 4^5
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") == 0);
  CHECK(svg.find("class=\"root\"") != std::string::npos);
  CHECK(count_occurrences(svg, "<text class=\"lg\"") == 3);
  CHECK(render_svg(spec, 6) == svg);
}

TEST_CASE("correction region shows its four boundary arcs") {
  const CoverSpec spec = build("correction-region");
  const std::string svg = render_svg(spec, 5);
  CHECK(count_occurrences(svg, "<rect class=\"sq ") == 256);
  CHECK(count_occurrences(svg, "<polyline class=\"arc\"") == 4);
  // straddling squares exist at this level and are drawn in their own class
  CHECK(count_occurrences(svg, "<rect class=\"sq st\"") > 0);
}

TEST_CASE("level gate") {
  const CoverSpec spec = build("octagon-fixed");
  CHECK_THROWS_AS(render_svg(spec, 0), std::invalid_argument);
  CHECK_THROWS_AS(render_svg(spec, 10), std::invalid_argument);
  CHECK_NOTHROW(render_svg(spec, 1));
}
