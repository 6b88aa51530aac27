#include "kzdisk/flat_model.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace kzdisk {

namespace {

constexpr std::array<Side, 4> kSides{Side::Right, Side::Top, Side::Left, Side::Bottom};

std::size_t idx(Side s) { return static_cast<std::size_t>(s); }

int mod(long long x, int n) { return static_cast<int>(((x % n) + n) % n); }

// Sides are parametrised along the counter-clockwise boundary of the square:
// right BR->TR, top TR->TL, left TL->BL, bottom BL->BR.
Corner side_start(Side s) {
  switch (s) {
    case Side::Right: return Corner::BottomRight;
    case Side::Top: return Corner::TopRight;
    case Side::Left: return Corner::TopLeft;
    case Side::Bottom: return Corner::BottomLeft;
  }
  return Corner::BottomLeft;
}

Side side_ending_at(Corner c) {
  switch (c) {
    case Corner::BottomLeft: return Side::Left;
    case Corner::BottomRight: return Side::Bottom;
    case Corner::TopRight: return Side::Right;
    case Corner::TopLeft: return Side::Top;
  }
  return Side::Left;
}

struct CornerRef {
  int square;
  Corner corner;
  friend bool operator==(const CornerRef&, const CornerRef&) = default;
};

// Next corner counter-clockwise around the same vertex: leave through the
// side ending at this corner; an orientation-preserving gluing reverses the
// boundary parametrisation, so we arrive at the start of the partner side.
CornerRef rotate_ccw(const PillowComplex& c, CornerRef at) {
  const Gluing& g = c.glued(at.square, side_ending_at(at.corner));
  return {g.square, side_start(g.side)};
}

int corner_index(CornerRef r) { return 4 * r.square + static_cast<int>(r.corner); }

}  // namespace

int PillowComplex::square_id(int level, Half half) const {
  return (half == Half::Up ? 0 : degree()) + mod(level, degree());
}

const Gluing& PillowComplex::glued(int square, Side side) const {
  return gluings_.at(static_cast<std::size_t>(square))[idx(side)];
}

int PillowComplex::branch_point(int square, Corner corner) const {
  // up square: x1 BL, x2 BR, x3 TR, x4 TL; the down square is its mirror
  // across the x1-x2 side.
  static constexpr std::array<int, 4> up{0, 1, 2, 3};
  static constexpr std::array<int, 4> down{3, 2, 1, 0};
  const auto k = static_cast<std::size_t>(corner);
  return half_of(square) == Half::Up ? up[k] : down[k];
}

int PillowComplex::deck(int square) const {
  return square_id(level_of(square) + 1, half_of(square));
}

PillowComplex build_cover_complex(const CoverParams& p) {
  PillowComplex c(p);
  const int n = p.degree();
  const auto& a = p.exponents();
  // Crossing a cut from the up square to the down square lowers the sheet by
  // the cut's shift; the reverse crossing raises it.
  const int shift_bottom = mod(a[0], n);                // x1-x2
  const int shift_right = mod(a[0] + a[1], n);          // x2-x3
  const int shift_top = mod(a[0] + a[1] + a[2], n);     // x3-x4
  const int shift_left = 0;                             // x4-x1

  c.gluings_.assign(static_cast<std::size_t>(2 * n), {});
  for (int level = 0; level < n; ++level) {
    const int up = c.square_id(level, Half::Up);
    auto link = [&](Side up_side, int shift, Side down_side, GluingKind kind) {
      const int down = c.square_id(level - shift, Half::Down);
      c.gluings_[static_cast<std::size_t>(up)][idx(up_side)] = {down, down_side, kind};
      c.gluings_[static_cast<std::size_t>(down)][idx(down_side)] = {up, up_side, kind};
    };
    link(Side::Bottom, shift_bottom, Side::Top, GluingKind::Translation);
    link(Side::Top, shift_top, Side::Bottom, GluingKind::Translation);
    link(Side::Left, shift_left, Side::Left, GluingKind::HalfTurn);
    link(Side::Right, shift_right, Side::Right, GluingKind::HalfTurn);
  }
  return c;
}

bool gluings_consistent(const PillowComplex& c) {
  for (int s = 0; s < c.squares(); ++s) {
    for (Side side : kSides) {
      const Gluing& g = c.glued(s, side);
      if (g.square < 0 || g.square >= c.squares()) return false;
      const Gluing& back = c.glued(g.square, g.side);
      if (back.square != s || back.side != side || back.kind != g.kind) return false;
      // translations pair opposite sides, half-turns pair equal sides
      const bool opposite = (static_cast<int>(side) + 2) % 4 == static_cast<int>(g.side);
      if ((g.kind == GluingKind::Translation) != opposite) return false;
      const Gluing& moved = c.glued(c.deck(s), side);
      if (moved.square != c.deck(g.square) || moved.side != g.side || moved.kind != g.kind) return false;
    }
  }
  return true;
}

std::vector<ComplexVertex> complex_vertices(const PillowComplex& c) {
  std::vector<char> seen(static_cast<std::size_t>(4 * c.squares()), 0);
  std::vector<ComplexVertex> out;
  for (int s = 0; s < c.squares(); ++s) {
    for (int k = 0; k < 4; ++k) {
      CornerRef start{s, static_cast<Corner>(k)};
      if (seen[static_cast<std::size_t>(corner_index(start))]) continue;
      ComplexVertex v{c.branch_point(s, start.corner), 0};
      CornerRef at = start;
      do {
        seen[static_cast<std::size_t>(corner_index(at))] = 1;
        ++v.corners;
        at = rotate_ccw(c, at);
      } while (!(at == start));
      out.push_back(v);
    }
  }
  return out;
}

int complex_genus(const PillowComplex& c) {
  const int v = static_cast<int>(complex_vertices(c).size());
  const int e = 2 * c.squares();  // four sides per square, each shared by two
  const int f = c.squares();
  return (2 - (v - e + f)) / 2;
}

int loop_monodromy(const PillowComplex& c, int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("branch point index must be 0..3");
  const int start = c.square_id(0, Half::Up);
  CornerRef at{start, static_cast<Corner>(mu)};
  // one turn around x_mu on the pillow visits the up corner and the down corner
  at = rotate_ccw(c, rotate_ccw(c, at));
  if (c.half_of(at.square) != Half::Up || at.corner != static_cast<Corner>(mu)) {
    throw std::logic_error("loop around a branch point did not close on the pillow");
  }
  return c.level_of(at.square);
}

StratumSignature stratum_signature(const PillowComplex& c) {
  StratumSignature sig;
  for (const auto& v : complex_vertices(c)) {
    // cone angle (k + 2) pi for a zero of order k of the quadratic differential
    const int k = v.corners / 2 - 2;
    if (k != 0) sig.quadratic_orders.push_back(k);
  }
  std::sort(sig.quadratic_orders.begin(), sig.quadratic_orders.end(), std::greater<>());
  if (holonomy_orientable(c)) {
    std::vector<int> ab;
    for (int k : sig.quadratic_orders) ab.push_back(k / 2);
    sig.abelian_orders = std::move(ab);
  }
  return sig;
}

std::optional<std::vector<int>> orientation_coloring(const PillowComplex& c) {
  std::vector<int> color(static_cast<std::size_t>(c.squares()), 0);
  // the complex is connected, so one breadth-first pass from square 0 suffices
  std::deque<int> queue{0};
  color[0] = 1;
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    for (Side side : kSides) {
      const Gluing& g = c.glued(s, side);
      const int want = g.kind == GluingKind::Translation ? color[static_cast<std::size_t>(s)]
                                                         : -color[static_cast<std::size_t>(s)];
      int& have = color[static_cast<std::size_t>(g.square)];
      if (have == 0) {
        have = want;
        queue.push_back(g.square);
      } else if (have != want) {
        return std::nullopt;
      }
    }
  }
  return color;
}

bool holonomy_orientable(const PillowComplex& c) { return orientation_coloring(c).has_value(); }

Origami to_origami(const PillowComplex& c, bool flip) {
  auto coloring = orientation_coloring(c);
  if (!coloring) {
    throw DomainError("cover " + c.params().to_string() +
                      " has nontrivial holonomy; it is not square-tiled by a translation surface");
  }
  const int d = c.squares();
  std::vector<int> right(static_cast<std::size_t>(d)), up(static_cast<std::size_t>(d)), deck(static_cast<std::size_t>(d));
  for (int s = 0; s < d; ++s) {
    int sign = (*coloring)[static_cast<std::size_t>(s)];
    if (flip) sign = -sign;
    // a half-turned square sees its left side on the right and its bottom on top
    right[static_cast<std::size_t>(s)] = c.glued(s, sign > 0 ? Side::Right : Side::Left).square;
    up[static_cast<std::size_t>(s)] = c.glued(s, sign > 0 ? Side::Top : Side::Bottom).square;
    deck[static_cast<std::size_t>(s)] = c.deck(s);
  }
  return Origami(Permutation(std::move(right)), Permutation(std::move(up)), Permutation(std::move(deck)));
}

}  // namespace kzdisk
