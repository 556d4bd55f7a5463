#include "treehom/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace treehom {

Region::Region(int m, std::vector<Cell> cells) : m_(m), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  for (int i = 0; i < size(); ++i) {
    if (static_cast<int>(cells_[i].size()) != m_)
      throw Error("region: cell dimension mismatch");
    index_[cells_[i]] = i;
  }
  adj_.resize(cells_.size());
  for (int i = 0; i < size(); ++i) {
    Cell c = cells_[i];
    for (int k = 0; k < m_; ++k) {
      for (int dir : {-1, +1}) {
        c[k] += dir;
        auto it = index_.find(c);
        if (it != index_.end()) adj_[i].push_back(it->second);
        c[k] -= dir;
      }
    }
  }
}

Region Region::box(const Cell& lo, const Cell& hi) {
  int m = static_cast<int>(lo.size());
  std::vector<Cell> cells;
  Cell cur = lo;
  while (true) {
    cells.push_back(cur);
    int k = m - 1;
    while (k >= 0) {
      if (cur[k] < hi[k]) {
        ++cur[k];
        break;
      }
      cur[k] = lo[k];
      --k;
    }
    if (k < 0) break;
  }
  return Region(m, std::move(cells));
}

int Region::index_of(const Cell& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

bool Region::connected() const {
  if (cells_.empty()) return true;
  std::vector<char> seen(cells_.size(), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    for (int j : adj_[i])
      if (!seen[j]) {
        seen[j] = 1;
        ++cnt;
        q.push_back(j);
      }
  }
  return cnt == size();
}

std::vector<int> inner_boundary(const Region& r) {
  std::vector<int> out;
  for (int i = 0; i < r.size(); ++i)
    if (static_cast<int>(r.neighbors(i).size()) < 2 * r.m()) out.push_back(i);
  return out;
}

std::vector<int> lattice_distances_from(const Region& r, int from) {
  std::vector<int> dist(r.size(), -1);
  std::deque<int> q{from};
  dist[from] = 0;
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    for (int j : r.neighbors(i))
      if (dist[j] < 0) {
        dist[j] = dist[i] + 1;
        q.push_back(j);
      }
  }
  return dist;
}

int lattice_distance(const Region& r, int from, int to) {
  auto d = lattice_distances_from(r, from);
  if (d[to] < 0) throw Unreachable();
  return d[to];
}

bool validate_homomorphism(const HeightFunction& h) {
  const Region& r = h.region;
  if (static_cast<int>(h.values.size()) != r.size()) return false;
  for (int i = 0; i < r.size(); ++i)
    for (int j : r.neighbors(i))
      if (j > i && tree_distance(h.values[i], h.values[j]) != 1) return false;
  return true;
}

DualLabels dual_of(const HeightFunction& h) {
  if (!validate_homomorphism(h)) throw Error("dual_of: not a homomorphism");
  const Region& r = h.region;
  DualLabels out{r, std::vector<Generator>(static_cast<std::size_t>(r.size()) * r.m(), 0)};
  for (int i = 0; i < r.size(); ++i) {
    Cell c = r.cell(i);
    for (int k = 0; k < r.m(); ++k) {
      ++c[k];
      int j = r.index_of(c);
      --c[k];
      if (j >= 0) out.at(i, k) = generator_between(h.values[i], h.values[j]);
    }
  }
  return out;
}

HeightFunction reconstruct(const DualLabels& labels, const TreeVertex& anchor,
                           int base) {
  const Region& r = labels.region;
  HeightFunction h{r, std::vector<TreeVertex>(r.size())};
  std::vector<char> seen(r.size(), 0);
  h.values[base] = anchor;
  seen[base] = 1;
  std::deque<int> q{base};
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    Cell c = r.cell(i);
    for (int k = 0; k < r.m(); ++k) {
      for (int dir : {+1, -1}) {
        c[k] += dir;
        int j = r.index_of(c);
        c[k] -= dir;
        if (j < 0) continue;
        Generator g = dir > 0 ? labels.at(i, k) : labels.at(j, k);
        if (g == 0) throw PlaquetteInconsistent("reconstruct: missing edge label");
        TreeVertex v = apply_generator(h.values[i], g);
        if (!seen[j]) {
          h.values[j] = std::move(v);
          seen[j] = 1;
          q.push_back(j);
        } else if (h.values[j] != v) {
          throw PlaquetteInconsistent("reconstruct: plaquette word is nontrivial");
        }
      }
    }
  }
  for (char s : seen)
    if (!s) throw Error("reconstruct: region not connected from base");
  return h;
}

bool Slope::is_zero() const {
  return std::all_of(numer.begin(), numer.end(), [](int x) { return x == 0; });
}

bool parity_realizable(const Slope& s) {
  for (int p : s.numer) {
    if (p < 0 || p > s.n) return false;
    if ((p - s.n) % 2 != 0) return false;
  }
  return true;
}

std::string to_string(const Slope& s) {
  std::ostringstream os;
  for (std::size_t k = 0; k < s.numer.size(); ++k) {
    if (k) os << ',';
    os << s.numer[k] << '/' << s.n;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// PeriodicConfig

PeriodicConfig::PeriodicConfig(int m, int n, int d,
                               std::vector<Generator> labels, TreeVertex anchor)
    : m_(m), n_(n), d_(d), labels_(std::move(labels)) {
  if (m_ < 1 || n_ < 1 || d_ < 2) throw Error("config: bad parameters");
  std::size_t ncells = 1;
  for (int k = 0; k < m_; ++k) ncells *= static_cast<std::size_t>(n_);
  if (labels_.size() != ncells * m_) throw Error("config: label count mismatch");
  for (Generator g : labels_)
    if (g < 1 || g > d_) throw Error("config: label out of range");
  stride_.assign(m_, 1);
  for (int k = m_ - 2; k >= 0; --k) stride_[k] = stride_[k + 1] * n_;
  values_.assign(ncells, TreeVertex{});
  values_[0] = std::move(anchor);

  // Plaquette closure: the four letters around every unit square must cancel
  // in G, which for involution generators means they pair up.
  for (int c = 0; c < cells(); ++c) {
    for (int k = 0; k < m_; ++k) {
      for (int l = k + 1; l < m_; ++l) {
        Generator a = label(c, k);
        Generator b = label(neighbor(c, k, +1), l);
        Generator cc = label(neighbor(c, l, +1), k);
        Generator dd = label(c, l);
        bool ok = (a == b && cc == dd) || (b == cc && a == dd);
        if (!ok)
          throw PlaquetteInconsistent("config: plaquette word is nontrivial at cell " +
                                      std::to_string(c));
      }
    }
  }
  rebuild();
}

int PeriodicConfig::neighbor(int cell, int k, int dir) const {
  int xk = (cell / stride_[k]) % n_;
  int nk = xk + dir;
  if (nk < 0) nk += n_;
  if (nk >= n_) nk -= n_;
  return cell + (nk - xk) * stride_[k];
}

Generator PeriodicConfig::edge_label(int cell, int k, int dir) const {
  return dir > 0 ? label(cell, k) : label(neighbor(cell, k, -1), k);
}

Cell PeriodicConfig::coords(int cell) const {
  Cell c(m_);
  for (int k = 0; k < m_; ++k) c[k] = (cell / stride_[k]) % n_;
  return c;
}

int PeriodicConfig::cell_index(const Cell& c) const {
  int idx = 0;
  for (int k = 0; k < m_; ++k) {
    int x = c[k] % n_;
    if (x < 0) x += n_;
    idx += x * stride_[k];
  }
  return idx;
}

void PeriodicConfig::rebuild_lift() {
  // Lexicographic fill: each nonzero cell takes its value from the
  // predecessor along its first nonzero coordinate. Path independence is
  // guaranteed by plaquette closure.
  for (int c = 1; c < cells(); ++c) {
    for (int k = 0; k < m_; ++k) {
      int xk = (c / stride_[k]) % n_;
      if (xk > 0) {
        int p = c - stride_[k];
        values_[c] = apply_generator(values_[p], label(p, k));
        break;
      }
    }
  }
}

std::vector<Generator> monodromy(const PeriodicConfig& cfg, int k, int base) {
  std::vector<Generator> w;
  int c = base;
  for (int i = 0; i < cfg.n(); ++i) {
    Generator g = cfg.label(c, k);
    if (!w.empty() && w.back() == g)
      w.pop_back();
    else
      w.push_back(g);
    c = cfg.neighbor(c, k, +1);
  }
  return w;
}

std::vector<Generator> cyclic_reduce(std::vector<Generator> w,
                                     std::vector<Generator>* conjugator) {
  if (conjugator) conjugator->clear();
  while (w.size() >= 2 && w.front() == w.back()) {
    if (conjugator) conjugator->push_back(w.front());
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

bool spells_standard_axis(const std::vector<Generator>& c) {
  // Alternates between 1 and 2, starting from either.
  if (c.empty() || c.size() % 2 != 0) return false;
  if (c[0] != 1 && c[0] != 2) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Generator want = (i % 2 == 0) ? c[0] : (c[0] == 1 ? 2 : 1);
    if (c[i] != want) return false;
  }
  return true;
}

void PeriodicConfig::rebuild() {
  rebuild_lift();
  // Slope: per direction the minimum reduced monodromy length over all
  // basepoints, divided by n.
  slope_.n = n_;
  slope_.numer.assign(m_, 0);
  for (int k = 0; k < m_; ++k) {
    int best = -1;
    for (int c = 0; c < cells(); ++c) {
      int len = static_cast<int>(monodromy(*this, k, c).size());
      if (best < 0 || len < best) best = len;
      if (best == 0) break;
    }
    slope_.numer[k] = best;
  }
  recanonicalize();
  rebuild_depths();
}

void PeriodicConfig::recanonicalize() {
  if (slope_.is_zero()) {
    // Pin h(0) = r.
    if (!values_[0].is_root()) {
      TreeVertex g = inverse(values_[0]);
      for (auto& v : values_) v = left_mul(g, v);
    }
    reference_ = standard_geodesic();
    return;
  }
  int k0 = 0;
  while (slope_.numer[k0] == 0) ++k0;
  // Translation by n e_k0 acts on values as the left multiplication by
  // N = h(0) M h(0)^-1. Its axis is the supporting geodesic.
  std::vector<Generator> M = monodromy(*this, k0, 0);
  std::vector<Generator> Nw =
      reduce_concat(reduce_concat(values_[0].word, M), inverse(values_[0]).word);
  std::vector<Generator> u;
  std::vector<Generator> core = cyclic_reduce(Nw, &u);
  if (core.empty()) throw Error("config: hyperbolic monodromy expected");

  // Axis vertices: A(t) = u * (t letters of core^inf) for t >= 0,
  // A(-t) = u * (t letters of reversed core^inf).
  TreeVertex base{u};
  std::vector<Generator> rev(core.rbegin(), core.rend());
  auto axis_vertex = [&](long t) {
    TreeVertex v = base;
    const std::vector<Generator>& s = t >= 0 ? core : rev;
    long a = std::labs(t);
    for (long i = 0; i < a; ++i)
      v.word.push_back(s[static_cast<std::size_t>(i) % s.size()]);
    return v;
  };
  // Projection of h(0) onto the axis by window scan.
  long window = values_[0].norm() + static_cast<long>(u.size()) +
                static_cast<long>(core.size()) + 4;
  long best_t = 0;
  int best_d = tree_distance(values_[0], axis_vertex(0));
  for (long t = -window; t <= window; ++t) {
    int dist = tree_distance(values_[0], axis_vertex(t));
    if (dist < best_d) {
      best_d = dist;
      best_t = t;
    }
  }
  TreeVertex q = axis_vertex(best_t);
  if (!q.is_root()) {
    TreeVertex g = inverse(q);
    for (auto& v : values_) v = left_mul(g, v);
  }
  // Axis now passes through the root; its two outgoing streams are the
  // conjugated core and its reverse. Orient forward = smaller first letter.
  std::vector<Generator> Nw2 =
      reduce_concat(reduce_concat(values_[0].word, monodromy(*this, k0, 0)),
                    inverse(values_[0]).word);
  std::vector<Generator> u2;
  std::vector<Generator> core2 = cyclic_reduce(Nw2, &u2);
  if (!u2.empty())
    throw Error("config: anchor canonicalization failed (axis misses root)");
  std::vector<Generator> rev2(core2.rbegin(), core2.rend());
  TreeEnd plus{{}, core2};
  TreeEnd minus{{}, rev2};
  if (plus.letter(0) < minus.letter(0))
    reference_ = Geodesic{plus, minus};
  else
    reference_ = Geodesic{minus, plus};
}

void PeriodicConfig::rebuild_depths() {
  depths_.resize(values_.size());
  parents_.resize(values_.size());
  for (int c = 0; c < cells(); ++c) {
    depths_[c] = depth(values_[c], reference_);
    parents_[c] = parent_generator(values_[c], reference_);
  }
}

void PeriodicConfig::apply_pivot(int cell, Generator alpha) {
  Generator old = label(cell, 0);
  for (int k = 0; k < m_; ++k) {
    if (label(cell, k) != old || edge_label(cell, k, -1) != old)
      throw NotExtremum();
  }
  for (int k = 0; k < m_; ++k) {
    labels_[static_cast<std::size_t>(cell) * m_ + k] = alpha;
    int back = neighbor(cell, k, -1);
    labels_[static_cast<std::size_t>(back) * m_ + k] = alpha;
  }
  if (cell == 0) {
    // The anchor cell moved; rebuild the lift in the old gauge and restore
    // the canonical anchor.
    rebuild_lift();
    recanonicalize();
    rebuild_depths();
    return;
  }
  TreeVertex nb = values_[neighbor(cell, 0, +1)];
  values_[cell] = apply_generator(nb, alpha);
  depths_[cell] = depth(values_[cell], reference_);
  parents_[cell] = parent_generator(values_[cell], reference_);
}

void PeriodicConfig::apply_relabel(const std::vector<std::pair<int, int>>& edges,
                                   Generator alpha) {
  for (auto [c, k] : edges) labels_[static_cast<std::size_t>(c) * m_ + k] = alpha;
  rebuild_lift();
  recanonicalize();
  rebuild_depths();
}

bool PeriodicConfig::validate(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int c = 0; c < cells(); ++c)
    for (int k = 0; k < m_; ++k) {
      if (coords(c)[k] == n_ - 1) continue;  // wrapping edge, lift jumps gauge
      int nb = neighbor(c, k, +1);
      if (values_[nb] != apply_generator(values_[c], label(c, k)))
        return fail("lift inconsistent with labels");
    }
  if (slope_.is_zero()) {
    long bound = static_cast<long>(m_) * n_ / 2;
    for (int c = 0; c < cells(); ++c)
      if (tree_distance(values_[c], values_[0]) > bound)
        return fail("zero-slope range bound violated");
  } else {
    for (int c = 0; c < cells(); ++c) {
      auto pr = project_to_geodesic(values_[c], reference_);
      if (2 * pr.dist > n_) return fail("distance to supporting geodesic exceeds n/2");
    }
  }
  return true;
}

Slope slope_of(const PeriodicConfig& cfg) { return cfg.slope(); }

Geodesic supporting_geodesic(const PeriodicConfig& cfg) {
  if (cfg.slope().is_zero()) throw ZeroSlope();
  const Geodesic& g = cfg.reference_geodesic();
  for (int c = 0; c < cfg.cells(); ++c) {
    auto pr = project_to_geodesic(cfg.value(c), g);
    if (2 * pr.dist > cfg.n())
      throw Error("supporting geodesic bound n/2 violated");
  }
  return g;
}

// ---------------------------------------------------------------------------
// Serialization (TREEHOM v1)

void write_config(std::ostream& os, const PeriodicConfig& cfg) {
  os << "TREEHOM v1\n";
  os << "m=" << cfg.m() << " n=" << cfg.n() << " d=" << cfg.d() << "\n";
  os << "slope=" << to_string(cfg.slope()) << "\n";
  os << "anchor=" << to_string(cfg.anchor()) << "\n";
  for (int k = 0; k < cfg.m(); ++k) {
    os << "labels k=" << (k + 1) << ":\n";
    for (int c = 0; c < cfg.cells(); ++c) {
      if (c) os << ' ';
      os << static_cast<int>(cfg.label(c, k));
    }
    os << "\n";
  }
}

PeriodicConfig read_config(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "TREEHOM v1")
    throw IOError("config: bad magic line");
  int m = 0, n = 0, d = 0;
  if (!std::getline(is, line) ||
      std::sscanf(line.c_str(), "m=%d n=%d d=%d", &m, &n, &d) != 3)
    throw IOError("config: bad parameter line");
  if (!std::getline(is, line) || line.rfind("slope=", 0) != 0)
    throw IOError("config: bad slope line");
  if (!std::getline(is, line) || line.rfind("anchor=", 0) != 0)
    throw IOError("config: bad anchor line");
  TreeVertex anchor = vertex_from_string(line.substr(7));
  std::size_t ncells = 1;
  for (int k = 0; k < m; ++k) ncells *= static_cast<std::size_t>(n);
  std::vector<Generator> labels(ncells * m, 0);
  for (int k = 0; k < m; ++k) {
    if (!std::getline(is, line) ||
        line != "labels k=" + std::to_string(k + 1) + ":")
      throw IOError("config: bad labels header");
    if (!std::getline(is, line)) throw IOError("config: missing labels row");
    std::istringstream row(line);
    for (std::size_t c = 0; c < ncells; ++c) {
      int g;
      if (!(row >> g)) throw IOError("config: short labels row");
      labels[c * m + k] = static_cast<Generator>(g);
    }
  }
  return PeriodicConfig(m, n, d, std::move(labels), std::move(anchor));
}

}  // namespace treehom
