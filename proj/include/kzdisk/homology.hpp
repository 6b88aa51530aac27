#pragma once

// Integral first homology of an origami and the action of SL(2,Z) generators
// and automorphisms on it.
//
// Chains live on the edges of the square tiling: h_i is the bottom side of
// square i oriented rightwards (index i), v_i its left side oriented upwards
// (index d + i). Square i has boundary h_i + v_right(i) - h_up(i) - v_i.

#include <array>
#include <cstdint>
#include <vector>

#include "kzdisk/int_matrix.hpp"
#include "kzdisk/origami.hpp"

namespace kzdisk {

using Chain = std::vector<std::int64_t>;

class HomologyModel {
 public:
  explicit HomologyModel(Origami o);

  const Origami& origami() const noexcept { return origami_; }
  int squares() const noexcept { return origami_.squares(); }
  int genus() const noexcept { return genus_; }
  int rank() const noexcept { return 2 * genus_; }

  int h(int square) const { return square; }
  int v(int square) const { return squares() + square; }
  Chain zero_chain() const { return Chain(static_cast<std::size_t>(2 * squares()), 0); }

  /// Vertex at the bottom-left corner of a square.
  int vertex_of(int square) const { return vertex_of_[static_cast<std::size_t>(square)]; }
  int vertex_count() const noexcept { return vertex_count_; }

  bool is_cycle(const Chain& c) const;
  Chain square_boundary(int square) const;

  /// Integral basis of H_1: one cycle per edge outside a spanning tree of the
  /// vertex graph and a spanning tree of the dual graph.
  const std::vector<Chain>& basis() const noexcept { return basis_; }
  /// Coordinates of a cycle in basis(); throws std::invalid_argument if the
  /// chain is not closed.
  std::vector<std::int64_t> coordinates(const Chain& cycle) const;
  Chain from_coordinates(const std::vector<std::int64_t>& coords) const;

  /// Algebraic intersection number, +1 for (horizontal, vertical) on a torus.
  std::int64_t intersection_number(const Chain& a, const Chain& b) const;
  /// Intersection form J on basis().
  const IntMatrix& intersection() const noexcept { return intersection_; }

  /// Holonomy (horizontal, vertical) of a chain.
  std::array<std::int64_t, 2> holonomy(const Chain& c) const;
  /// 2 x 2g holonomy of the basis cycles.
  const IntMatrix& holonomy_matrix() const noexcept { return holonomy_; }

  /// Coordinates (2g x 2) of the tautological cycles sum_i h_i and sum_i v_i.
  const IntMatrix& taut_basis() const noexcept { return taut_; }
  /// Coordinates (2g x (2g-2)) of a Z-basis of H_1^(0), the holonomy kernel.
  const IntMatrix& zero_basis() const noexcept { return zero_basis_; }
  /// (2g-2) x 2g; sends basis coordinates of a holonomy-free class to its
  /// coordinates in zero_basis().
  const IntMatrix& zero_projection() const noexcept { return zero_projection_; }
  std::vector<std::int64_t> zero_coordinates(const std::vector<std::int64_t>& coords) const;

 private:
  void build_vertices();
  void build_basis();
  void build_intersection();
  void build_splitting();
  Chain dual_pushoff(const Chain& c) const;

  Origami origami_;
  int genus_ = 0;
  int vertex_count_ = 0;
  std::vector<int> vertex_of_;
  std::vector<int> cotree_order_;        // faces, breadth-first from the root
  std::vector<int> cotree_parent_edge_;  // per face, -1 at the root
  std::vector<int> free_edges_;          // edges carrying the coordinates
  std::vector<Chain> basis_;
  IntMatrix intersection_;
  IntMatrix holonomy_;
  IntMatrix taut_;
  IntMatrix zero_basis_;
  IntMatrix zero_projection_;
};

inline HomologyModel homology_model(const Origami& o) { return HomologyModel(o); }

enum class Generator {
  HorizontalShear,  // T = [[1,1],[0,1]]
  Rotation,         // S = [[0,-1],[1,0]]
  VerticalShear,    // L = [[1,0],[1,1]]
};

IntMatrix sl2_matrix(Generator g);

/// Image origami in the labels of the source squares (deck dropped).
Origami apply_generator(const Origami& o, Generator g);

/// Image under the affine map of a chain, as a chain on apply_generator(o, g).
Chain push_forward(const Origami& o, Generator g, const Chain& c);

/// Renames squares: square i becomes relabel(i).
Chain relabel_chain(const Chain& c, const Permutation& relabel);

struct HomologyAction {
  Origami source;
  Origami target;  // canonical form of the image
  Permutation relabel;  // raw image square -> target square
  IntMatrix sl2;
  IntMatrix matrix;      // 2g x 2g, source basis -> target basis
  IntMatrix zero_block;  // restriction to H_1^(0) in the zero bases
};

/// Action of a generator from `source` to the model of the canonical image.
/// `target` must be the model of canonical_form(apply_generator(...)).
HomologyAction generator_action(const HomologyModel& source, const HomologyModel& target, Generator g,
                                const Permutation& relabel);
HomologyAction generator_action(const Origami& o, Generator g);

/// Matrix of a chain map given edge by edge, in the bases of the two models.
IntMatrix induced_matrix(const HomologyModel& source, const HomologyModel& target,
                         const std::vector<Chain>& edge_images);

bool is_symplectic(const IntMatrix& m, const IntMatrix& j_source, const IntMatrix& j_target);

/// M maps H_1^(0) into H_1^(0) and the tautological pair to itself by sl2.
bool preserves_splitting(const HomologyAction& a, const HomologyModel& source, const HomologyModel& target);

/// Homology action of a translation or half-turn automorphism of the
/// model's origami. Throws DomainError for any other permutation.
IntMatrix automorphism_action(const HomologyModel& m, const Permutation& phi);
/// Same with the kind fixed, for permutations that pass both tests.
IntMatrix automorphism_action(const HomologyModel& m, const Permutation& phi, AutomorphismKind kind);

/// Deck action on H_1; throws DomainError unless deck_check passes.
IntMatrix deck_action(const HomologyModel& m, int cover_degree);

/// Restriction of an endomorphism of H_1 (preserving H_1^(0)) to H_1^(0).
IntMatrix restrict_to_zero(const HomologyModel& m, const IntMatrix& full);

}  // namespace kzdisk
