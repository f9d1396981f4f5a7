#include <set>

#include "doctest.h"
#include "majority/errors.hpp"
#include "majority/lattice.hpp"
#include "majority/rng.hpp"

using namespace majority;

TEST_CASE("vertices_of lists the block lexicographically") {
  const HyperedgeFamily line(2, Geometry::window(1, {0, 0}, 10));
  CHECK(vertices_of(line, {0, 0}) == std::vector<Coord>{{0, 0}, {1, 0}});

  const HyperedgeFamily square(3, Geometry::window(2, {0, 0}, 5, 5));
  std::vector<Coord> expected;
  for (std::int64_t x = 0; x < 3; ++x)
    for (std::int64_t y = 0; y < 3; ++y) expected.push_back({x, y});
  CHECK(vertices_of(square, {0, 0}) == expected);
}

TEST_CASE("periodic blocks wrap") {
  const HyperedgeFamily ring(3, Geometry::torus(1, 10));
  CHECK(vertices_of(ring, {9, 0}) == std::vector<Coord>{{9, 0}, {0, 0}, {1, 0}});
  CHECK(ring.anchor_count() == 10);
  const HyperedgeFamily torus(3, Geometry::torus(2, 7));
  CHECK(torus.anchor_count() == 49);
}

TEST_CASE("zero-padded blocks are clipped to the window") {
  const HyperedgeFamily fam(3, Geometry::window(2, {-2, 1}, 5, 4));
  CHECK(fam.anchor_count() == 3 * 2);
  CHECK(fam.has_anchor({-2, 1}));
  CHECK(fam.has_anchor({0, 2}));
  CHECK_FALSE(fam.has_anchor({1, 1}));
  CHECK_THROWS_AS(vertices_of(fam, {1, 1}), RangeError);
}

TEST_CASE("block size, distinct vertices and count complement") {
  RngStream rng(5);
  for (int n = 2; n <= 4; ++n) {
    const Geometry g = Geometry::torus(2, 6);
    const HyperedgeFamily fam(n, g);
    Configuration c(g);
    for (std::size_t i = 0; i < g.size(); ++i) c.set_index(i, rng.bernoulli(0.5));
    for (std::size_t k = 0; k < fam.anchor_count(); ++k) {
      const auto v = fam.vertices_of(fam.anchor(k));
      CHECK(v.size() == static_cast<std::size_t>(n * n));
      CHECK(std::set<Coord>(v.begin(), v.end()).size() == v.size());
      int zeros = 0;
      for (Coord p : v) zeros += c.get(p) == 0;
      CHECK(count_ones(c, fam.anchor(k), fam) + zeros == n * n);
    }
  }
}

TEST_CASE("count_ones is translation invariant on a torus") {
  RngStream rng(11);
  const Geometry g = Geometry::torus(2, 8);
  const HyperedgeFamily fam(3, g);
  Configuration c(g);
  for (std::size_t i = 0; i < g.size(); ++i) c.set_index(i, rng.bernoulli(0.4));
  const Coord shift{3, 5};
  Configuration moved(g);
  for (std::size_t i = 0; i < g.size(); ++i) moved.set(g.coord(i) + shift, c.at_index(i));
  for (std::size_t k = 0; k < fam.anchor_count(); ++k)
    CHECK(count_ones(c, fam.anchor(k), fam) == count_ones(moved, fam.anchor(k) + shift, fam));
}

TEST_CASE("count_ones examples") {
  const Geometry g = Geometry::window(2, {0, 0}, 4, 4);
  const HyperedgeFamily fam3(3, g);
  Configuration c(g);
  CHECK(count_ones(c, {0, 0}, fam3) == 0);
  c = set_block(c, {{0, 0}, 4, 4}, 1);
  CHECK(count_ones(c, {1, 1}, fam3) == 9);
  const HyperedgeFamily fam2(2, g);
  Configuration row(g);
  row.set({1, 1}, 1);
  row.set({2, 1}, 1);
  CHECK(count_ones(row, {1, 1}, fam2) == 2);
}

TEST_CASE("reads outside a window are 0, writes outside throw") {
  Configuration c(Geometry::window(2, {0, 0}, 3, 3));
  CHECK(c.get({-1, 0}) == 0);
  CHECK(c.get({5, 5}) == 0);
  CHECK_THROWS_AS(c.set({3, 0}, 1), RangeError);
}

TEST_CASE("support box") {
  Configuration c(Geometry::window(2, {-5, -5}, 10, 10));
  CHECK(c.support().width == 0);
  c.set({-2, 1}, 1);
  c.set({3, -4}, 1);
  const Rect s = c.support();
  CHECK(s.lo == Coord{-2, -4});
  CHECK(s.width == 6);
  CHECK(s.height == 6);
}

TEST_CASE("grid text examples") {
  const Configuration block = read_grid_text("##\n##\n");
  CHECK(block.count_ones() == 4);
  CHECK(block.geometry().width() == 2);

  const Configuration diag = read_grid_text("#.\n.#\n");
  CHECK(diag.get({0, 1}) == 1);  // top row is the highest y
  CHECK(diag.get({1, 0}) == 1);
  CHECK(diag.get({0, 0}) == 0);
  CHECK(diag.count_ones() == 2);
}

TEST_CASE("grid text round trip") {
  for (const char* s : {"##\n##\n", "#.\n.#\n", "..#\n###\n#..\n", "-3 4 3 2\n#.#\n.#.\n"})
    CHECK(write_grid_text(read_grid_text(s)) == s);
  const Configuration c = read_grid_text("-3 4 3 2\n#.#\n.#.\n");
  CHECK(c.geometry().origin() == Coord{-3, 4});
  CHECK(c.get({-3, 5}) == 1);
  CHECK(c.get({-2, 4}) == 1);
}

TEST_CASE("grid text errors carry the line number") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      read_grid_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("##\n#\n") == 2);
  CHECK(line_of("##\n#x\n") == 2);
  CHECK(line_of("#.\n\n#.\n") == 2);
  CHECK(line_of("") == 1);
  CHECK(line_of("0 0 3 3\n##\n##\n") == 2);
  CHECK(line_of("0 0 2\n") == 1);
}
