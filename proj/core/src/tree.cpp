#include "treehom/tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace treehom {

TreeVertex root() { return TreeVertex{}; }

TreeVertex make_vertex(std::initializer_list<int> letters) {
  TreeVertex v;
  for (int l : letters) v.word.push_back(static_cast<Generator>(l));
  if (!is_reduced(v.word)) throw Error("make_vertex: word not reduced");
  return v;
}

bool is_reduced(const std::vector<Generator>& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return false;
  return true;
}

TreeVertex apply_generator(const TreeVertex& v, Generator i) {
  TreeVertex out = v;
  if (!out.word.empty() && out.word.back() == i) {
    out.word.pop_back();
  } else {
    out.word.push_back(i);
  }
  return out;
}

TreeVertex apply_word(const TreeVertex& v, const std::vector<Generator>& w) {
  TreeVertex out = v;
  for (Generator g : w) {
    if (!out.word.empty() && out.word.back() == g) {
      out.word.pop_back();
    } else {
      out.word.push_back(g);
    }
  }
  return out;
}

std::vector<Generator> reduce_concat(const std::vector<Generator>& a,
                                     const std::vector<Generator>& b) {
  std::vector<Generator> out = a;
  for (Generator g : b) {
    if (!out.empty() && out.back() == g) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

TreeVertex left_mul(const TreeVertex& g, const TreeVertex& v) {
  return TreeVertex{reduce_concat(g.word, v.word)};
}

TreeVertex inverse(const TreeVertex& v) {
  TreeVertex out = v;
  std::reverse(out.word.begin(), out.word.end());
  return out;
}

int tree_distance(const TreeVertex& v, const TreeVertex& w) {
  std::size_t lcp = 0;
  while (lcp < v.word.size() && lcp < w.word.size() &&
         v.word[lcp] == w.word[lcp])
    ++lcp;
  return static_cast<int>(v.word.size() + w.word.size() - 2 * lcp);
}

Generator generator_between(const TreeVertex& v, const TreeVertex& w) {
  if (w.word.size() == v.word.size() + 1 &&
      std::equal(v.word.begin(), v.word.end(), w.word.begin()))
    return w.word.back();
  if (v.word.size() == w.word.size() + 1 &&
      std::equal(w.word.begin(), w.word.end(), v.word.begin()))
    return v.word.back();
  return 0;
}

TreeVertex TreeEnd::vertex(std::size_t k) const {
  TreeVertex v;
  v.word.reserve(k);
  for (std::size_t i = 0; i < k; ++i) v.word.push_back(letter(i));
  return v;
}

bool TreeEnd::valid() const {
  if (period.empty()) return false;
  std::vector<Generator> w = prefix;
  w.insert(w.end(), period.begin(), period.end());
  w.insert(w.end(), period.begin(), period.end());
  return is_reduced(w);
}

bool equal_ends(const TreeEnd& a, const TreeEnd& b) {
  // Two eventually periodic streams agree iff they agree on
  // max(preperiods) + lcm(periods) letters.
  std::size_t p = std::max(a.prefix.size(), b.prefix.size());
  std::size_t l = std::lcm(a.period.size(), b.period.size());
  for (std::size_t i = 0; i < p + l; ++i)
    if (a.letter(i) != b.letter(i)) return false;
  return true;
}

int common_prefix(const TreeVertex& v, const TreeEnd& e) {
  std::size_t i = 0;
  while (i < v.word.size() && v.word[i] == e.letter(i)) ++i;
  return static_cast<int>(i);
}

Geodesic::Geodesic(TreeEnd fwd, TreeEnd bwd)
    : forward(std::move(fwd)), backward(std::move(bwd)) {
  if (!forward.valid() || !backward.valid())
    throw Error("geodesic: invalid end");
  if (forward.letter(0) == backward.letter(0))
    throw Error("geodesic: rays must diverge at the root");
}

TreeVertex Geodesic::point(long k) const {
  if (k >= 0) return forward.vertex(static_cast<std::size_t>(k));
  return backward.vertex(static_cast<std::size_t>(-k));
}

const Geodesic& standard_geodesic() {
  static const Geodesic g{TreeEnd{{}, {1, 2}}, TreeEnd{{}, {2, 1}}};
  return g;
}

GeodesicProjection project_to_geodesic(const TreeVertex& v, const Geodesic& g) {
  if (v.word.empty()) return {0, 0};
  // The rays diverge at the root, so at most one of the two overlaps is
  // nonzero; the projection is the last vertex of v's word lying on that ray.
  int f = common_prefix(v, g.forward);
  if (f > 0) return {f, v.norm() - f};
  int b = common_prefix(v, g.backward);
  if (b > 0) return {-b, v.norm() - b};
  return {0, v.norm()};
}

long depth(const TreeVertex& v, const Geodesic& g) {
  return busemann_depth(v, g.backward);
}

long busemann_depth(const TreeVertex& v, const TreeEnd& omega) {
  return v.norm() - 2L * common_prefix(v, omega);
}

Generator parent_generator(const TreeVertex& v, const Geodesic& g) {
  // Off the backward ray the depth-decreasing neighbor is the truncation;
  // on the ray it is the next ray letter.
  int b = common_prefix(v, g.backward);
  if (b == v.norm()) return g.backward.letter(v.word.size());
  return v.word.back();
}

TreeVertex step_toward_end(const TreeVertex& v, const TreeEnd& omega) {
  int c = common_prefix(v, omega);
  if (c == v.norm()) {
    TreeVertex out = v;
    out.word.push_back(omega.letter(v.word.size()));
    return out;
  }
  TreeVertex out = v;
  out.word.pop_back();
  return out;
}

int meeting_height(const TreeEnd& e1, const TreeEnd& e2) {
  if (equal_ends(e1, e2)) throw EqualEnds();
  std::size_t i = 0;
  while (e1.letter(i) == e2.letter(i)) ++i;
  return static_cast<int>(i);
}

std::string to_string(const TreeVertex& v) {
  if (v.is_root()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < v.word.size(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(v.word[i]);
  }
  return os.str();
}

TreeVertex vertex_from_string(const std::string& s) {
  if (s == "e" || s.empty()) return root();
  TreeVertex v;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    int x = std::stoi(tok);
    if (x < 1 || x > 255) throw IOError("vertex letter out of range: " + tok);
    v.word.push_back(static_cast<Generator>(x));
  }
  if (!is_reduced(v.word)) throw IOError("vertex word not reduced: " + s);
  return v;
}

}  // namespace treehom
