#include "kzdisk/homology.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "kzdisk/cyclic_core.hpp"

namespace kzdisk {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int find_root(std::vector<int>& parent, int x) {
  while (parent[idx(x)] != x) {
    parent[idx(x)] = parent[idx(parent[idx(x)])];
    x = parent[idx(x)];
  }
  return x;
}

void add_scaled(Chain& into, const Chain& c, std::int64_t k) {
  for (std::size_t e = 0; e < into.size(); ++e) into[e] += k * c[e];
}

}  // namespace

HomologyModel::HomologyModel(Origami o) : origami_(std::move(o)) {
  build_vertices();
  build_basis();
  build_intersection();
  build_splitting();
}

void HomologyModel::build_vertices() {
  const int d = squares();
  const auto& r = origami_.right();
  const auto& u = origami_.up();
  std::vector<int> parent(idx(d));
  std::iota(parent.begin(), parent.end(), 0);
  // top-right corner of j is the bottom-left corner of u(r(j)) and of r(u(j))
  for (int j = 0; j < d; ++j) {
    const int a = find_root(parent, u(r(j)));
    const int b = find_root(parent, r(u(j)));
    if (a != b) parent[idx(a)] = b;
  }
  vertex_of_.assign(idx(d), -1);
  std::vector<int> label(idx(d), -1);
  vertex_count_ = 0;
  for (int i = 0; i < d; ++i) {
    const int root = find_root(parent, i);
    if (label[idx(root)] < 0) label[idx(root)] = vertex_count_++;
    vertex_of_[idx(i)] = label[idx(root)];
  }
  genus_ = (2 + d - vertex_count_) / 2;
  if (genus_ != origami_genus(origami_)) throw std::logic_error("vertex count disagrees with the vertex permutation");
}

bool HomologyModel::is_cycle(const Chain& c) const {
  const int d = squares();
  if (static_cast<int>(c.size()) != 2 * d) throw std::invalid_argument("chain has the wrong length");
  std::vector<std::int64_t> bd(idx(vertex_count_), 0);
  for (int i = 0; i < d; ++i) {
    const std::int64_t hc = c[idx(h(i))];
    const std::int64_t vc = c[idx(v(i))];
    bd[idx(vertex_of(origami_.right()(i)))] += hc;
    bd[idx(vertex_of(i))] -= hc;
    bd[idx(vertex_of(origami_.up()(i)))] += vc;
    bd[idx(vertex_of(i))] -= vc;
  }
  for (auto x : bd) {
    if (x != 0) return false;
  }
  return true;
}

Chain HomologyModel::square_boundary(int square) const {
  Chain c = zero_chain();
  c[idx(h(square))] += 1;
  c[idx(v(origami_.right()(square)))] += 1;
  c[idx(h(origami_.up()(square)))] -= 1;
  c[idx(v(square))] -= 1;
  return c;
}

void HomologyModel::build_basis() {
  const int d = squares();
  const int edges = 2 * d;
  const auto& r = origami_.right();
  const auto& u = origami_.up();
  std::vector<int> tail(idx(edges));
  std::vector<int> head(idx(edges));
  for (int i = 0; i < d; ++i) {
    tail[idx(h(i))] = vertex_of(i);
    head[idx(h(i))] = vertex_of(r(i));
    tail[idx(v(i))] = vertex_of(i);
    head[idx(v(i))] = vertex_of(u(i));
  }

  // spanning tree of the 1-skeleton
  std::vector<std::vector<int>> incident(idx(vertex_count_));
  for (int e = 0; e < edges; ++e) {
    incident[idx(tail[idx(e)])].push_back(e);
    incident[idx(head[idx(e)])].push_back(e);
  }
  std::vector<int> tree_edge(idx(vertex_count_), -1);
  std::vector<bool> seen(idx(vertex_count_), false);
  std::vector<bool> in_tree(idx(edges), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int e : incident[idx(x)]) {
      const int y = tail[idx(e)] == x ? head[idx(e)] : tail[idx(e)];
      if (seen[idx(y)]) continue;
      seen[idx(y)] = true;
      tree_edge[idx(y)] = e;
      in_tree[idx(e)] = true;
      queue.push_back(y);
    }
  }

  // spanning tree of the dual graph avoiding tree edges
  std::vector<std::pair<int, int>> sides(idx(edges));  // faces on both sides
  for (int i = 0; i < d; ++i) {
    sides[idx(h(i))] = {u.inverse()(i), i};
    sides[idx(v(i))] = {r.inverse()(i), i};
  }
  std::vector<std::vector<int>> around(idx(d));
  for (int e = 0; e < edges; ++e) {
    if (in_tree[idx(e)]) continue;
    around[idx(sides[idx(e)].first)].push_back(e);
    if (sides[idx(e)].second != sides[idx(e)].first) around[idx(sides[idx(e)].second)].push_back(e);
  }
  std::vector<bool> in_cotree(idx(edges), false);
  std::vector<bool> face_seen(idx(d), false);
  cotree_parent_edge_.assign(idx(d), -1);
  cotree_order_.clear();
  queue = {0};
  face_seen[0] = true;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    cotree_order_.push_back(f);
    for (int e : around[idx(f)]) {
      const auto [a, b] = sides[idx(e)];
      const int g = a == f ? b : a;
      if (face_seen[idx(g)]) continue;
      face_seen[idx(g)] = true;
      cotree_parent_edge_[idx(g)] = e;
      in_cotree[idx(e)] = true;
      queue.push_back(g);
    }
  }

  free_edges_.clear();
  for (int e = 0; e < edges; ++e) {
    if (!in_tree[idx(e)] && !in_cotree[idx(e)]) free_edges_.push_back(e);
  }
  if (static_cast<int>(free_edges_.size()) != 2 * genus_) throw std::logic_error("tree-cotree count mismatch");

  auto path_to_root = [&](int x) {
    Chain c = zero_chain();
    while (tree_edge[idx(x)] >= 0) {
      const int e = tree_edge[idx(x)];
      if (tail[idx(e)] == x) {
        c[idx(e)] += 1;
        x = head[idx(e)];
      } else {
        c[idx(e)] -= 1;
        x = tail[idx(e)];
      }
    }
    return c;
  };
  basis_.clear();
  for (int e : free_edges_) {
    Chain c = path_to_root(head[idx(e)]);
    add_scaled(c, path_to_root(tail[idx(e)]), -1);
    c[idx(e)] += 1;
    basis_.push_back(std::move(c));
  }
}

std::vector<std::int64_t> HomologyModel::coordinates(const Chain& cycle) const {
  if (!is_cycle(cycle)) throw std::invalid_argument("chain is not a cycle");
  Chain c = cycle;
  // Peel faces off the dual tree from the root outwards; each face clears its
  // parent edge and only touches edges further out.
  for (int f : cotree_order_) {
    const int e = cotree_parent_edge_[idx(f)];
    if (e < 0) continue;
    const std::int64_t coef = c[idx(e)];
    if (coef == 0) continue;
    const Chain bd = square_boundary(f);
    const std::int64_t sign = bd[idx(e)];
    if (sign != 1 && sign != -1) throw std::logic_error("degenerate dual tree edge");
    add_scaled(c, bd, -coef * sign);
  }
  std::vector<std::int64_t> out;
  out.reserve(free_edges_.size());
  for (int e : free_edges_) out.push_back(c[idx(e)]);
  return out;
}

Chain HomologyModel::from_coordinates(const std::vector<std::int64_t>& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("coordinate vector has the wrong length");
  Chain c = zero_chain();
  for (std::size_t k = 0; k < coords.size(); ++k) add_scaled(c, basis_[k], coords[k]);
  return c;
}

// Dual chain: R_i joins the centre of i to the centre of right(i), U_i the
// centre of i to the centre of up(i). Layout: R at [0, d), U at [d, 2d).
Chain HomologyModel::dual_pushoff(const Chain& c) const {
  const int d = squares();
  const auto& r = origami_.right();
  const auto& u = origami_.up();
  const Permutation rinv = r.inverse();
  const Permutation uinv = u.inverse();
  Chain beta = c;

  std::vector<std::int64_t> residue(idx(d), 0);
  for (int i = 0; i < d; ++i) {
    residue[idx(r(i))] += c[idx(i)];
    residue[idx(i)] -= c[idx(i)];
    residue[idx(u(i))] += c[idx(d + i)];
    residue[idx(i)] -= c[idx(d + i)];
  }
  // Around each vertex, move residue from one bottom-left square to the next
  // counterclockwise: left, down, right, up.
  std::vector<bool> done(idx(d), false);
  for (int start = 0; start < d; ++start) {
    if (done[idx(start)]) continue;
    std::int64_t carry = 0;
    int i = start;
    do {
      done[idx(i)] = true;
      carry += residue[idx(i)];
      const int l = rinv(i);
      const int dl = uinv(l);
      const int next = u(r(dl));
      if (next != start && carry != 0) {
        beta[idx(l)] -= carry;
        beta[idx(d + dl)] -= carry;
        beta[idx(dl)] += carry;
        beta[idx(d + r(dl))] += carry;
      }
      i = next;
    } while (i != start);
    if (carry != 0) throw std::logic_error("push-off residue does not vanish");
  }
  return beta;
}

std::int64_t HomologyModel::intersection_number(const Chain& a, const Chain& b) const {
  if (!is_cycle(a) || !is_cycle(b)) throw std::invalid_argument("intersection of non-cycles");
  const int d = squares();
  const Chain beta = dual_pushoff(a);
  std::int64_t s = 0;
  for (int i = 0; i < d; ++i) {
    s += beta[idx(i)] * b[idx(v(origami_.right()(i)))];
    s -= beta[idx(d + i)] * b[idx(h(origami_.up()(i)))];
  }
  return s;
}

void HomologyModel::build_intersection() {
  const int n = rank();
  intersection_ = IntMatrix(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) intersection_(a, b) = intersection_number(basis_[idx(a)], basis_[idx(b)]);
  }
}

std::array<std::int64_t, 2> HomologyModel::holonomy(const Chain& c) const {
  std::array<std::int64_t, 2> hol{0, 0};
  for (int i = 0; i < squares(); ++i) {
    hol[0] += c[idx(h(i))];
    hol[1] += c[idx(v(i))];
  }
  return hol;
}

void HomologyModel::build_splitting() {
  const int n = rank();
  holonomy_ = IntMatrix(2, n);
  for (int k = 0; k < n; ++k) {
    const auto hol = holonomy(basis_[idx(k)]);
    holonomy_(0, k) = hol[0];
    holonomy_(1, k) = hol[1];
  }

  Chain sum_h = zero_chain();
  Chain sum_v = zero_chain();
  for (int i = 0; i < squares(); ++i) {
    sum_h[idx(h(i))] = 1;
    sum_v[idx(v(i))] = 1;
  }
  taut_ = IntMatrix(n, 2);
  taut_.set_column(0, coordinates(sum_h));
  taut_.set_column(1, coordinates(sum_v));

  // Unimodular column reduction hol * U = [H | 0]; the trailing columns of U
  // span the kernel and the matching rows of U^-1 give kernel coordinates.
  IntMatrix hm = holonomy_;
  IntMatrix um = IntMatrix::identity(n);
  IntMatrix uinv = IntMatrix::identity(n);
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int row = 0; row < 2; ++row) std::swap(hm(row, a), hm(row, b));
    for (int row = 0; row < n; ++row) std::swap(um(row, a), um(row, b));
    for (int col = 0; col < n; ++col) std::swap(uinv(a, col), uinv(b, col));
  };
  auto subtract = [&](int target, int pivot, std::int64_t q) {  // col_target -= q col_pivot
    for (int row = 0; row < 2; ++row) hm(row, target) -= q * hm(row, pivot);
    for (int row = 0; row < n; ++row) um(row, target) -= q * um(row, pivot);
    for (int col = 0; col < n; ++col) uinv(pivot, col) += q * uinv(target, col);
  };
  for (int row = 0; row < 2; ++row) {
    const int s = row;
    for (;;) {
      int best = -1;
      for (int c = s; c < n; ++c) {
        if (hm(row, c) != 0 && (best < 0 || std::abs(hm(row, c)) < std::abs(hm(row, best)))) best = c;
      }
      if (best < 0) throw std::logic_error("holonomy map is not onto a lattice");
      swap_cols(s, best);
      bool clean = true;
      for (int c = s + 1; c < n; ++c) {
        if (hm(row, c) == 0) continue;
        subtract(c, s, hm(row, c) / hm(row, s));
        if (hm(row, c) != 0) clean = false;
      }
      if (clean) break;
    }
  }
  zero_basis_ = IntMatrix(n, n - 2);
  zero_projection_ = IntMatrix(n - 2, n);
  for (int k = 2; k < n; ++k) {
    for (int row = 0; row < n; ++row) zero_basis_(row, k - 2) = um(row, k);
    for (int col = 0; col < n; ++col) zero_projection_(k - 2, col) = uinv(k, col);
  }
}

std::vector<std::int64_t> HomologyModel::zero_coordinates(const std::vector<std::int64_t>& coords) const {
  const auto hol = holonomy_ * coords;
  if (hol[0] != 0 || hol[1] != 0) throw std::invalid_argument("class has nonzero holonomy");
  return zero_projection_ * coords;
}

IntMatrix sl2_matrix(Generator g) {
  switch (g) {
    case Generator::HorizontalShear: return IntMatrix{{1, 1}, {0, 1}};
    case Generator::Rotation: return IntMatrix{{0, -1}, {1, 0}};
    case Generator::VerticalShear: return IntMatrix{{1, 0}, {1, 1}};
  }
  throw std::invalid_argument("unknown generator");
}

Origami apply_generator(const Origami& o, Generator g) {
  const auto& r = o.right();
  const auto& u = o.up();
  switch (g) {
    case Generator::HorizontalShear: return Origami(r, u * r.inverse());
    case Generator::Rotation: return Origami(u.inverse(), r);
    case Generator::VerticalShear: return Origami(r * u.inverse(), u);
  }
  throw std::invalid_argument("unknown generator");
}

namespace {

// Image of every edge as a chain on the image origami (same square labels).
std::vector<Chain> generator_edge_images(const Origami& o, Generator g) {
  const int d = o.squares();
  const auto& r = o.right();
  const auto& u = o.up();
  const Permutation uinv = u.inverse();
  std::vector<Chain> img(idx(2 * d), Chain(idx(2 * d), 0));
  for (int j = 0; j < d; ++j) {
    Chain& hj = img[idx(j)];
    Chain& vj = img[idx(d + j)];
    switch (g) {
      case Generator::HorizontalShear:
        hj[idx(j)] += 1;
        vj[idx(j)] += 1;
        vj[idx(d + r(j))] += 1;
        break;
      case Generator::Rotation:
        hj[idx(d + uinv(j))] += 1;
        vj[idx(j)] -= 1;
        break;
      case Generator::VerticalShear:
        hj[idx(d + j)] += 1;
        hj[idx(u(j))] += 1;
        vj[idx(d + j)] += 1;
        break;
    }
  }
  return img;
}

Chain apply_edge_map(const std::vector<Chain>& edge_images, const Chain& c) {
  Chain out(edge_images.empty() ? 0 : edge_images.front().size(), 0);
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] != 0) add_scaled(out, edge_images[e], c[e]);
  }
  return out;
}

}  // namespace

Chain push_forward(const Origami& o, Generator g, const Chain& c) {
  if (static_cast<int>(c.size()) != 2 * o.squares()) throw std::invalid_argument("chain has the wrong length");
  return apply_edge_map(generator_edge_images(o, g), c);
}

Chain relabel_chain(const Chain& c, const Permutation& relabel) {
  const int d = relabel.size();
  if (static_cast<int>(c.size()) != 2 * d) throw std::invalid_argument("chain has the wrong length");
  Chain out(c.size(), 0);
  for (int i = 0; i < d; ++i) {
    out[idx(relabel(i))] = c[idx(i)];
    out[idx(d + relabel(i))] = c[idx(d + i)];
  }
  return out;
}

IntMatrix induced_matrix(const HomologyModel& source, const HomologyModel& target,
                         const std::vector<Chain>& edge_images) {
  const int n = source.rank();
  if (target.rank() != n) throw std::invalid_argument("models of different genus");
  IntMatrix m(n, n);
  for (int k = 0; k < n; ++k) m.set_column(k, target.coordinates(apply_edge_map(edge_images, source.basis()[idx(k)])));
  return m;
}

IntMatrix restrict_to_zero(const HomologyModel& m, const IntMatrix& full) {
  const IntMatrix image = full * m.zero_basis();
  const IntMatrix hol = m.holonomy_matrix() * image;
  for (int r = 0; r < hol.rows(); ++r) {
    for (int c = 0; c < hol.cols(); ++c) {
      if (hol(r, c) != 0) throw std::invalid_argument("map does not preserve the holonomy kernel");
    }
  }
  return m.zero_projection() * image;
}

HomologyAction generator_action(const HomologyModel& source, const HomologyModel& target, Generator g,
                                const Permutation& relabel) {
  std::vector<Chain> edges = generator_edge_images(source.origami(), g);
  for (auto& e : edges) e = relabel_chain(e, relabel);
  HomologyAction a{source.origami(), target.origami(), relabel, sl2_matrix(g), {}, {}};
  a.matrix = induced_matrix(source, target, edges);
  const IntMatrix image = a.matrix * source.zero_basis();
  const IntMatrix hol = target.holonomy_matrix() * image;
  for (int r = 0; r < hol.rows(); ++r) {
    for (int c = 0; c < hol.cols(); ++c) {
      if (hol(r, c) != 0) throw std::logic_error("generator leaves the holonomy kernel");
    }
  }
  a.zero_block = target.zero_projection() * image;
  return a;
}

HomologyAction generator_action(const Origami& o, Generator g) {
  const HomologyModel source(o);
  const CanonicalForm cf = canonical_form(apply_generator(o, g));
  const HomologyModel target(cf.origami);
  return generator_action(source, target, g, cf.relabel);
}

bool is_symplectic(const IntMatrix& m, const IntMatrix& j_source, const IntMatrix& j_target) {
  return m.transpose() * j_target * m == j_source;
}

bool preserves_splitting(const HomologyAction& a, const HomologyModel& source, const HomologyModel& target) {
  const IntMatrix zero_image = target.holonomy_matrix() * (a.matrix * source.zero_basis());
  if (zero_image != IntMatrix(2, source.rank() - 2)) return false;
  if (target.holonomy_matrix() * a.matrix != a.sl2 * source.holonomy_matrix()) return false;
  return a.matrix * source.taut_basis() == target.taut_basis() * a.sl2;
}

IntMatrix automorphism_action(const HomologyModel& m, const Permutation& phi) {
  return automorphism_action(m, phi, classify_automorphism(m.origami(), phi));
}

IntMatrix automorphism_action(const HomologyModel& m, const Permutation& phi, AutomorphismKind kind) {
  const Origami& o = m.origami();
  const int d = o.squares();
  if (!is_automorphism(o, phi, kind)) throw DomainError("permutation is not a translation or half-turn automorphism");
  std::vector<Chain> edges(idx(2 * d), Chain(idx(2 * d), 0));
  for (int i = 0; i < d; ++i) {
    if (kind == AutomorphismKind::Translation) {
      edges[idx(i)][idx(phi(i))] = 1;
      edges[idx(d + i)][idx(d + phi(i))] = 1;
    } else {
      // bottom side goes to the top side of the image, reversed; left to right
      edges[idx(i)][idx(o.up()(phi(i)))] = -1;
      edges[idx(d + i)][idx(d + o.right()(phi(i)))] = -1;
    }
  }
  return induced_matrix(m, m, edges);
}

IntMatrix deck_action(const HomologyModel& m, int cover_degree) {
  if (!deck_check(m.origami(), cover_degree)) throw DomainError("origami carries no valid deck transformation");
  return automorphism_action(m, m.origami().deck(), AutomorphismKind::HalfTurn);
}

}  // namespace kzdisk
