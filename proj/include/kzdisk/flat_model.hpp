#pragma once

// Flat model of M_N(a): N copies of the pillowcase (two unit squares, the
// sphere with the quadratic differential having simple poles at its four
// corners) glued along a chain of cuts x1-x2, x2-x3, x3-x4 so that a small
// counter-clockwise loop around x_mu shifts the sheet index by a_mu.
//
// Chart conventions. The up square of a sheet is [0,1]^2 with corners
// x1 = bottom-left, x2 = bottom-right, x3 = top-right, x4 = top-left. The down
// square sits directly below it in the developed picture. Top and bottom
// sides are glued by translations, left and right sides by half-turns.

#include <array>
#include <optional>
#include <vector>

#include "kzdisk/cyclic_core.hpp"
#include "kzdisk/origami.hpp"

namespace kzdisk {

enum class Side { Right = 0, Top = 1, Left = 2, Bottom = 3 };
enum class Corner { BottomLeft = 0, BottomRight = 1, TopRight = 2, TopLeft = 3 };
enum class Half { Up = 0, Down = 1 };
enum class GluingKind { Translation, HalfTurn };

struct Gluing {
  int square = 0;
  Side side = Side::Right;
  GluingKind kind = GluingKind::Translation;

  friend bool operator==(const Gluing&, const Gluing&) = default;
};

class PillowComplex {
 public:
  const CoverParams& params() const noexcept { return params_; }
  int degree() const noexcept { return params_.degree(); }
  int squares() const noexcept { return 2 * degree(); }
  /// Total flat area in unit squares; the area-one normalisation divides by it.
  int area_scale() const noexcept { return squares(); }

  int square_id(int level, Half half) const;
  int level_of(int square) const { return square % degree(); }
  Half half_of(int square) const { return square < degree() ? Half::Up : Half::Down; }

  const Gluing& glued(int square, Side side) const;
  /// Which branch point x_mu (0..3) sits at this corner.
  int branch_point(int square, Corner corner) const;
  /// Sheet shift of the deck transformation T.
  int deck(int square) const;
  const std::array<int, 4>& branch_monodromy() const noexcept { return params_.exponents(); }

 private:
  friend PillowComplex build_cover_complex(const CoverParams& p);
  explicit PillowComplex(const CoverParams& p) : params_(p) {}

  CoverParams params_;
  std::vector<std::array<Gluing, 4>> gluings_;
};

PillowComplex build_cover_complex(const CoverParams& p);

/// Every side glued exactly once, symmetric gluing data, deck commuting with
/// the gluings.
bool gluings_consistent(const PillowComplex& c);

struct ComplexVertex {
  int branch_point = 0;  // 0..3
  int corners = 0;       // cone angle = corners * pi / 2
};

std::vector<ComplexVertex> complex_vertices(const PillowComplex& c);

/// Genus from V - E + F of the square complex.
int complex_genus(const PillowComplex& c);

/// Sheet shift picked up by the lift, starting on the up square of sheet 0,
/// of a small counter-clockwise loop around x_mu (mu = 0..3).
int loop_monodromy(const PillowComplex& c, int mu);

struct StratumSignature {
  std::vector<int> quadratic_orders;                 // sorted descending, zeros omitted
  std::optional<std::vector<int>> abelian_orders;    // present iff orientable
};

StratumSignature stratum_signature(const PillowComplex& c);

/// A sign per square such that half-turn gluings join opposite signs and
/// translations equal signs; absent when the +-1 holonomy is nontrivial.
std::optional<std::vector<int>> orientation_coloring(const PillowComplex& c);

bool holonomy_orientable(const PillowComplex& c);

/// Rotates every negatively coloured square by a half-turn so all gluings
/// become translations. flip selects the opposite of the two colourings.
/// Throws DomainError when the complex is not orientable.
Origami to_origami(const PillowComplex& c, bool flip = false);

}  // namespace kzdisk
