#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treehom/errors.hpp"

namespace treehom {

// The d-regular tree is the Cayley graph of G = <a_1,...,a_d | a_i^2 = e>.
// Vertices are reduced words over the 1-based generator indices; the empty
// word is the root. All values here are immutable after construction.

using Generator = std::uint8_t;  // 1..d

struct TreeVertex {
  std::vector<Generator> word;  // reduced: no two consecutive letters equal

  bool is_root() const { return word.empty(); }
  int norm() const { return static_cast<int>(word.size()); }

  bool operator==(const TreeVertex&) const = default;
  auto operator<=>(const TreeVertex&) const = default;
};

TreeVertex root();
TreeVertex make_vertex(std::initializer_list<int> letters);
bool is_reduced(const std::vector<Generator>& w);

// Right multiplication by a generator: cancel a trailing i, else append it.
TreeVertex apply_generator(const TreeVertex& v, Generator i);

// Right multiplication by a word (letters applied left to right).
TreeVertex apply_word(const TreeVertex& v, const std::vector<Generator>& w);

// Left multiplication g*v, the tree automorphism moving the root to g.
TreeVertex left_mul(const TreeVertex& g, const TreeVertex& v);

// Group inverse: the reversed word (generators are involutions).
TreeVertex inverse(const TreeVertex& v);

std::vector<Generator> reduce_concat(const std::vector<Generator>& a,
                                     const std::vector<Generator>& b);

int tree_distance(const TreeVertex& v, const TreeVertex& w);

// Generator taking v to the adjacent vertex w, if d_T(v,w) = 1; 0 otherwise.
Generator generator_between(const TreeVertex& v, const TreeVertex& w);

// Boundary point of the tree: an eventually periodic infinite reduced word
// read from the root.
struct TreeEnd {
  std::vector<Generator> prefix;
  std::vector<Generator> period;  // nonempty; prefix+period+period is reduced

  Generator letter(std::size_t i) const {
    return i < prefix.size() ? prefix[i]
                             : period[(i - prefix.size()) % period.size()];
  }
  // k-th vertex of the ray from the root (k = 0 is the root).
  TreeVertex vertex(std::size_t k) const;

  bool valid() const;
};

bool equal_ends(const TreeEnd& a, const TreeEnd& b);

// Length of the longest common prefix of a vertex word and an end stream.
int common_prefix(const TreeVertex& v, const TreeEnd& e);

// Bi-infinite geodesic through the root: g(k) walks the forward ray for
// k >= 0 and the backward ray for k < 0. The two rays diverge at the root.
struct Geodesic {
  TreeEnd forward;
  TreeEnd backward;

  Geodesic(TreeEnd fwd, TreeEnd bwd);
  TreeVertex point(long k) const;
};

// Forward ray (1,2,1,2,...), backward ray (2,1,2,1,...).
const Geodesic& standard_geodesic();

struct GeodesicProjection {
  long position;  // k with g(k) the closest geodesic point
  int dist;       // d_T(v, g(k))
};

GeodesicProjection project_to_geodesic(const TreeVertex& v, const Geodesic& g);

// Depth = projection position + distance to the geodesic; equals the
// horodistance from the backward end (busemann_depth toward g.backward).
long depth(const TreeVertex& v, const Geodesic& g);

// lim_k (d_T(v, omega_k) - k) along the ray omega.
long busemann_depth(const TreeVertex& v, const TreeEnd& omega);

// Unique generator a with depth(v a) = depth(v) - 1.
Generator parent_generator(const TreeVertex& v, const Geodesic& g);

// One step from v along the geodesic ray toward the end omega.
TreeVertex step_toward_end(const TreeVertex& v, const TreeEnd& omega);

// |inf_g1 ^ inf_g2|: length of the common prefix of two distinct ends.
int meeting_height(const TreeEnd& e1, const TreeEnd& e2);

// Text form: comma-separated generator indices, "e" for the root.
std::string to_string(const TreeVertex& v);
TreeVertex vertex_from_string(const std::string& s);

}  // namespace treehom
