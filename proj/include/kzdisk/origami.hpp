#pragma once

// Square-tiled translation surfaces. Square i has right neighbour right(i)
// and upper neighbour up(i). The optional deck permutation records a cyclic
// automorphism inherited from a cover of the pillowcase.

#include <string>
#include <string_view>
#include <vector>

#include "kzdisk/permutation.hpp"

namespace kzdisk {

class Origami {
 public:
  /// Throws std::invalid_argument on size mismatch or a disconnected surface.
  Origami(Permutation right, Permutation up);
  Origami(Permutation right, Permutation up, Permutation deck);

  int squares() const noexcept { return right_.size(); }
  const Permutation& right() const noexcept { return right_; }
  const Permutation& up() const noexcept { return up_; }
  const Permutation& deck() const noexcept { return deck_; }

  Origami with_deck(Permutation deck) const { return Origami(right_, up_, std::move(deck)); }

  /// Equality of labelled data, deck included. Use equivalent() for
  /// isomorphism.
  friend bool operator==(const Origami&, const Origami&) = default;

 private:
  Permutation right_;
  Permutation up_;
  Permutation deck_;
};

bool is_transitive(const Permutation& right, const Permutation& up);

/// right * up * right^-1 * up^-1; its cycles are the vertices of the square
/// tiling (a cycle of length k is a cone point of angle 2 pi k).
Permutation vertex_permutation(const Origami& o);

int origami_genus(const Origami& o);

/// Orders k-1 of the zeros of the abelian differential, sorted descending,
/// regular points omitted.
std::vector<int> origami_stratum(const Origami& o);

struct CanonicalForm {
  Origami origami;
  /// relabel(old square) = new square
  Permutation relabel;
};

/// Canonical representative under simultaneous conjugation: for each start
/// square, label squares breadth-first following right then up moves; keep
/// the lexicographically smallest (right, up). The deck is conjugated along.
CanonicalForm canonical_form(const Origami& o);

/// Isomorphic as translation surfaces (ignores decks).
bool equivalent(const Origami& a, const Origami& b);

enum class AutomorphismKind { Translation, HalfTurn, None };

/// Translation automorphisms commute with right and up; half-turns conjugate
/// them to their inverses. When right and up are involutions a permutation
/// passes both tests; this reports Translation then.
AutomorphismKind classify_automorphism(const Origami& o, const Permutation& phi);

/// Whether phi satisfies the relations of the given kind (None: never).
bool is_automorphism(const Origami& o, const Permutation& phi, AutomorphismKind kind);

/// All translation automorphisms (permutations commuting with right and up).
std::vector<Permutation> translation_automorphisms(const Origami& o);

/// Deck of exact order cover_degree that is a half-turn automorphism (the
/// square root of the differential is odd under the deck) and moves every
/// square in a cycle of full length.
bool deck_check(const Origami& o, int cover_degree);

/// Text format: square count, then right, up and deck in 1-based cycle
/// notation, one per line. Lines starting with '#' are comments.
std::string serialize(const Origami& o);
Origami parse_origami(std::string_view text);

}  // namespace kzdisk
