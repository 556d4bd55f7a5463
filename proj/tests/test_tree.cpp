#include "treehom/tree.hpp"

#include <random>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace treehom;
using treehom::testing::random_vertex;

TEST_CASE("apply_generator basics") {
  CHECK(apply_generator(root(), 1) == make_vertex({1}));
  CHECK(apply_generator(make_vertex({1}), 1) == root());
  CHECK(apply_generator(make_vertex({1, 2}), 3) == make_vertex({1, 2, 3}));
}

TEST_CASE("apply_generator is an involution and moves by one step") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    TreeVertex v = random_vertex(rng, 4, 12);
    for (Generator i = 1; i <= 4; ++i) {
      TreeVertex w = apply_generator(v, i);
      CHECK(is_reduced(w.word));
      CHECK(tree_distance(v, w) == 1);
      CHECK(apply_generator(w, i) == v);
    }
  }
}

TEST_CASE("tree_distance examples and metric properties") {
  CHECK(tree_distance(root(), root()) == 0);
  CHECK(tree_distance(make_vertex({1}), make_vertex({1, 2})) == 1);
  CHECK(tree_distance(make_vertex({1, 2}), make_vertex({1, 3})) == 2);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    TreeVertex a = random_vertex(rng, 3, 10);
    TreeVertex b = random_vertex(rng, 3, 10);
    TreeVertex c = random_vertex(rng, 3, 10);
    CHECK(tree_distance(a, b) == tree_distance(b, a));
    CHECK(tree_distance(a, c) <= tree_distance(a, b) + tree_distance(b, c));
    CHECK((tree_distance(a, b) == 0) == (a == b));
  }
}

TEST_CASE("standard geodesic points") {
  const Geodesic& g = standard_geodesic();
  CHECK(g.point(0) == root());
  CHECK(g.point(2) == make_vertex({1, 2}));
  CHECK(g.point(-1) == make_vertex({2}));
  for (long k = -6; k < 6; ++k)
    CHECK(tree_distance(g.point(k), g.point(k + 1)) == 1);
  for (long j = -5; j <= 5; ++j)
    for (long k = -5; k <= 5; ++k)
      CHECK(tree_distance(g.point(j), g.point(k)) == std::labs(j - k));
}

TEST_CASE("projection onto the standard geodesic") {
  const Geodesic& g = standard_geodesic();
  auto p = project_to_geodesic(root(), g);
  CHECK(p.position == 0);
  CHECK(p.dist == 0);
  p = project_to_geodesic(make_vertex({3}), g);
  CHECK(p.position == 0);
  CHECK(p.dist == 1);
  p = project_to_geodesic(make_vertex({1, 2, 3}), g);
  CHECK(p.position == 2);
  CHECK(p.dist == 1);
}

TEST_CASE("projection is the unique distance minimizer") {
  const Geodesic& g = standard_geodesic();
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    TreeVertex v = random_vertex(rng, 3, 10);
    auto p = project_to_geodesic(v, g);
    long window = v.norm() + 8;
    for (long j = -window; j <= window; ++j) {
      int dj = tree_distance(v, g.point(j));
      CHECK(dj >= p.dist);
      if (j != p.position) CHECK(dj > p.dist);
      CHECK(dj == p.dist + std::labs(j - p.position));
    }
  }
}

TEST_CASE("depth examples and sign convention") {
  const Geodesic& g = standard_geodesic();
  CHECK(depth(root(), g) == 0);
  CHECK(depth(make_vertex({2}), g) == -1);
  CHECK(depth(make_vertex({1, 3}), g) == 2);
}

TEST_CASE("depth equals the horodistance oracle from the backward end") {
  const Geodesic& g = standard_geodesic();
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    TreeVertex v = random_vertex(rng, 3, 10);
    long N = v.norm() + 8;
    long oracle = tree_distance(v, g.point(-N)) - N;
    CHECK(depth(v, g) == oracle);
    auto p = project_to_geodesic(v, g);
    CHECK(depth(v, g) == p.position + p.dist);
  }
}

TEST_CASE("adjacent vertices differ by one in depth, one parent each") {
  const Geodesic& g = standard_geodesic();
  std::mt19937_64 rng(19);
  const int d = 3;
  for (int t = 0; t < 300; ++t) {
    TreeVertex v = random_vertex(rng, d, 10);
    long dv = depth(v, g);
    int down = 0;
    for (Generator i = 1; i <= d; ++i) {
      long dn = depth(apply_generator(v, i), g);
      CHECK(std::labs(dn - dv) == 1);
      if (dn < dv) {
        ++down;
        CHECK(parent_generator(v, g) == i);
      }
    }
    CHECK(down == 1);  // no fake maxima: exactly one depth-decreasing neighbor
  }
}

TEST_CASE("busemann depth toward an end") {
  TreeEnd omega{{}, {1, 2}};
  CHECK(busemann_depth(root(), omega) == 0);
  CHECK(busemann_depth(make_vertex({1}), omega) == -1);
  CHECK(busemann_depth(make_vertex({3}), omega) == 1);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    TreeVertex v = random_vertex(rng, 3, 8);
    // Oracle: d(v, omega_k) - k stabilizes for large k.
    long k = v.norm() + 6;
    CHECK(busemann_depth(v, omega) == tree_distance(v, omega.vertex(k)) - k);
    TreeVertex w = step_toward_end(v, omega);
    CHECK(tree_distance(v, w) == 1);
    CHECK(busemann_depth(w, omega) == busemann_depth(v, omega) - 1);
  }
}

TEST_CASE("meeting heights of ends") {
  TreeEnd a{{}, {1, 2}};
  TreeEnd b{{3}, {1, 3}};
  CHECK(meeting_height(a, b) == 0);
  TreeEnd c{{1, 2, 1}, {3, 1}};
  CHECK(meeting_height(a, c) == 3);
  CHECK_THROWS_AS(meeting_height(a, TreeEnd{{1}, {2, 1}}), EqualEnds);
}

TEST_CASE("end validity") {
  CHECK(TreeEnd{{}, {1, 2}}.valid());
  CHECK_FALSE(TreeEnd{{}, {1}}.valid());      // 1,1,... not reduced
  CHECK_FALSE(TreeEnd{{2}, {2, 1}}.valid());  // 2,2,... not reduced
  CHECK_FALSE(TreeEnd{{}, {}}.valid());
}

TEST_CASE("vertex text round trip") {
  CHECK(to_string(root()) == "e");
  CHECK(to_string(make_vertex({1, 2, 3})) == "1,2,3");
  CHECK(vertex_from_string("e") == root());
  CHECK(vertex_from_string("1,2,3") == make_vertex({1, 2, 3}));
  CHECK_THROWS_AS(vertex_from_string("1,1"), IOError);
}
