#include <doctest.h>

#include "latin/catalog.hpp"
#include "latin/error.hpp"
#include "oracles.hpp"

using namespace latin;

namespace {

std::vector<oracle::Perm> raw(const std::vector<Permutation>& ps) {
  std::vector<oracle::Perm> out;
  for (const auto& p : ps) out.push_back(p.images());
  return out;
}

}  // namespace

TEST_CASE("classification of small boards") {
  CHECK(classify_board(*build_board("b1")) == BoardClass::Weft);
  CHECK(classify_board(*build_board("fano")) == BoardClass::Woof);
  CHECK(classify_board(*build_board("sudoku_base")) == BoardClass::Woof);
  CHECK(classify_board(*build_board("monthai_base?n=6")) == BoardClass::Weft);
  CHECK(weft_resolution(*build_board("b1")).has_value());
  CHECK_FALSE(weft_resolution(*build_board("sudoku_base")).has_value());
}

TEST_CASE("a board whose lines are not preserved is not symmetric") {
  Source s = build_biregular(Family::biregular_square, 3, PointKind::face_center);
  BoardPtr rows = make_board("rows", s, Design(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}));
  CHECK(classify_board(*rows) == BoardClass::NotSymmetric);
  CHECK_FALSE(acts_on_lines(rows->group, rows->design));
  CHECK_THROWS_AS(make_board("short", s, Design(3, {{0, 1, 2}})), Error);
}

TEST_CASE("the induced group lies in the automorphism group") {
  for (const char* ref : {"b1", "fano", "sudoku_base", "monthai_base?n=6", "triangle_vertex_base?n=5",
                          "hexagon_base?n=2&pairing=P2", "cube_base?m=2", "tetrahedron_base?m=2"}) {
    CAPTURE(ref);
    BoardPtr b = build_board(ref);
    auto elements = oracle::closure(raw(b->group.generators()), b->design.num_points());
    CHECK(elements.size() == b->group.order());
    for (const auto& p : elements) CHECK(oracle::maps_lines(p, b->design.lines()));
    if (b->design.num_points() <= 32) {
      PermGroup aut = automorphism_group(b->design);
      for (const auto& p : elements) CHECK(aut.contains(Permutation(p)));
    }
  }
}

TEST_CASE("transitivity on parallel classes") {
  BoardPtr b = build_board("b1");
  std::vector<LineSet> classes{b->design.class_lines("H"), b->design.class_lines("V")};
  CHECK(acts_transitively(b->group, classes));
  CHECK_THROWS_AS(acts_transitively(b->group, {b->design.class_lines("H")}), Error);

  BoardPtr s = build_board("sudoku_base");
  CHECK(acts_transitively(s->group, {s->design.class_lines("H"), s->design.class_lines("V")}));
  CHECK_FALSE(acts_transitively(
      s->group, {s->design.class_lines("H"), s->design.class_lines("V"), s->design.class_lines("Q")}));
}

TEST_CASE("orbits of lines") {
  BoardPtr b = build_board("b1");
  CHECK(orbit(b->group, b->design.line(0)).size() == 4);  // the four border lines
  auto cls = orbit(b->group, b->design.class_lines("H"));
  CHECK(cls.size() == 2);
}
