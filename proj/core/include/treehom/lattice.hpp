#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treehom/tree.hpp"

namespace treehom {

using Cell = std::vector<int>;  // point of Z^m

// Finite subset of Z^m with its induced unit-l1 adjacency.
class Region {
 public:
  Region() = default;
  Region(int m, std::vector<Cell> cells);
  static Region box(const Cell& lo, const Cell& hi);  // inclusive corners

  int m() const { return m_; }
  int size() const { return static_cast<int>(cells_.size()); }
  const Cell& cell(int i) const { return cells_[i]; }
  const std::vector<Cell>& cells() const { return cells_; }
  int index_of(const Cell& c) const;  // -1 if absent
  bool contains(const Cell& c) const { return index_of(c) >= 0; }
  // Indices of unit neighbors inside the region.
  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  bool connected() const;

 private:
  int m_ = 0;
  std::vector<Cell> cells_;  // sorted lexicographically
  std::map<Cell, int> index_;
  std::vector<std::vector<int>> adj_;
};

// Cells of the region with a unit neighbor outside it.
std::vector<int> inner_boundary(const Region& r);

// Graph distance inside the region (BFS). Throws Unreachable.
int lattice_distance(const Region& r, int from, int to);
std::vector<int> lattice_distances_from(const Region& r, int from);  // -1 unreachable

struct HeightFunction {
  Region region;
  std::vector<TreeVertex> values;  // indexed like region cells

  const TreeVertex& at(int i) const { return values[i]; }
};

bool validate_homomorphism(const HeightFunction& h);

// Labels on the region's unoriented unit edges. Entry (i, k) is the label of
// the edge from cell i to cell i + e_k when that neighbor is in the region;
// 0 marks an absent edge.
struct DualLabels {
  Region region;
  std::vector<Generator> labels;  // size region.size() * m

  Generator at(int i, int k) const { return labels[static_cast<std::size_t>(i) * region.m() + k]; }
  Generator& at(int i, int k) { return labels[static_cast<std::size_t>(i) * region.m() + k]; }
};

DualLabels dual_of(const HeightFunction& h);
// Walks labels from base with h(base) = anchor. Path independent on valid
// inputs; throws PlaquetteInconsistent when two walks disagree.
HeightFunction reconstruct(const DualLabels& labels, const TreeVertex& anchor,
                           int base);

// Slope of an n-invariant configuration: s_k = numer[k] / n with
// numer[k] = min_x d_T(h(x), h(x + n e_k)). Numerators are nonnegative and
// share the parity of n on nonempty configuration classes.
struct Slope {
  std::vector<int> numer;
  int n = 1;

  bool is_zero() const;
  double component(int k) const { return static_cast<double>(numer[k]) / n; }
  bool operator==(const Slope&) const = default;
};

bool parity_realizable(const Slope& s);
std::string to_string(const Slope& s);

// n-invariant homomorphism Z^m -> T stored as torus edge labels plus the
// anchor h(0) of the canonical lift. Canonical anchoring: for nonzero slope
// the monodromy axis passes through the root, oriented with the
// lexicographically smaller outgoing letter forward, and h(0) projects onto
// the root; for zero slope h(0) is the root. The lift, depths relative to
// the reference geodesic and per-cell depth-decreasing directions are cached
// on the fundamental domain [0,n)^m.
class PeriodicConfig {
 public:
  PeriodicConfig(int m, int n, int d, std::vector<Generator> labels,
                 TreeVertex anchor);

  int m() const { return m_; }
  int n() const { return n_; }
  int d() const { return d_; }
  int cells() const { return static_cast<int>(values_.size()); }

  Generator label(int cell, int k) const { return labels_[static_cast<std::size_t>(cell) * m_ + k]; }
  const std::vector<Generator>& labels() const { return labels_; }
  // Torus neighbor in direction k (dir = +1 forward, -1 backward).
  int neighbor(int cell, int k, int dir) const;
  // Label on the edge between cell and its k-directional neighbor.
  Generator edge_label(int cell, int k, int dir) const;
  Cell coords(int cell) const;
  int cell_index(const Cell& c) const;  // coordinates taken mod n

  const TreeVertex& value(int cell) const { return values_[cell]; }
  const TreeVertex& anchor() const { return values_[0]; }
  long depth_at(int cell) const { return depths_[cell]; }
  Generator parent_at(int cell) const { return parents_[cell]; }

  const Slope& slope() const { return slope_; }
  const Geodesic& reference_geodesic() const { return reference_; }

  // Mutators used by the dynamics. Pivot: all 2m edges at the cell get the
  // label alpha (requires the current labels at the cell to be equal).
  void apply_pivot(int cell, Generator alpha);
  // Relabels the given (cell, k) edges and rebuilds the lift and caches.
  void apply_relabel(const std::vector<std::pair<int, int>>& edges,
                     Generator alpha);

  bool validate(std::string* why = nullptr) const;

  bool operator==(const PeriodicConfig& o) const {
    return m_ == o.m_ && n_ == o.n_ && d_ == o.d_ && labels_ == o.labels_;
  }

 private:
  void rebuild();         // lift + slope + canonical anchor + caches
  void rebuild_lift();    // values_ from labels_ and values_[0]
  void recanonicalize();  // move the anchor to the canonical position
  void rebuild_depths();

  int m_ = 0, n_ = 1, d_ = 2;
  std::vector<Generator> labels_;  // labels_[cell * m + k]
  std::vector<TreeVertex> values_;
  std::vector<long> depths_;
  std::vector<Generator> parents_;
  Slope slope_;
  Geodesic reference_ = standard_geodesic();
  std::vector<int> stride_;
};

Slope slope_of(const PeriodicConfig& cfg);

// Unique geodesic within tree-distance n/2 of every value (monodromy axis).
// Throws ZeroSlope when the slope vanishes.
Geodesic supporting_geodesic(const PeriodicConfig& cfg);

// Reduced word of labels along the straight segment base -> base + n e_k.
std::vector<Generator> monodromy(const PeriodicConfig& cfg, int k, int base);

std::vector<Generator> cyclic_reduce(std::vector<Generator> w,
                                     std::vector<Generator>* conjugator = nullptr);

// True when the cyclically reduced word alternates between generators 1 and 2,
// i.e. the monodromy axis has the spelling of the standard geodesic.
bool spells_standard_axis(const std::vector<Generator>& cyclic_word);

// Text serialization (format TREEHOM v1).
void write_config(std::ostream& os, const PeriodicConfig& cfg);
PeriodicConfig read_config(std::istream& is);

}  // namespace treehom
