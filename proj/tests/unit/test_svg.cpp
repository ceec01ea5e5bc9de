#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "latin/catalog.hpp"
#include "latin/error.hpp"
#include "latin/svg.hpp"

using namespace latin;

namespace {

std::size_t occurrences(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("element counts") {
  BoardPtr b = build_board("b1");
  std::string svg = render_svg(*b);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(occurrences(svg, "class=\"point\"") == 9);
  CHECK(occurrences(svg, "class=\"line\"") == 6);
  CHECK(occurrences(render_svg(*b, {48, false, false}), "class=\"line\"") == 0);

  std::string full = render_svg(fixtures::sudoku_full());
  CHECK(occurrences(full, "class=\"symbol\"") == 81);
  CHECK(occurrences(full, "class=\"cell\"") == 81);
  CHECK(occurrences(render_svg(fixtures::sudoku17()), "class=\"symbol\"") == 17);
  CHECK(occurrences(render_svg(fixtures::sudoku17(), {48, true, true}), "class=\"symbol\"") == 17);

  CHECK(occurrences(render_svg(*build_board("cube_base?m=4")), "class=\"cell\"") == 96);
  CHECK(occurrences(render_svg(*build_board("monthai_base?n=6")), "class=\"cell\"") == 36);
}

TEST_CASE("rendering is stable") {
  BoardPtr b = build_board("hexagon_base?n=2");
  CHECK(render_svg(*b) == render_svg(*build_board("hexagon_base?n=2")));
  CHECK(render_svg(*b, {24, true, false}) != render_svg(*b));
}

TEST_CASE("boards without a layout cannot be drawn") {
  BoardPtr b = build_board("b1");
  Source s = b->source;
  s.layout.reset();
  BoardPtr bare = make_board("bare", s, b->design);
  try {
    render_svg(*bare);
    FAIL("rendered");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_layout);
  }
}
