#pragma once

// Finite SL(2,Z)-orbit of an origami with the Kontsevich-Zorich cocycle on
// each generator edge.

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "kzdisk/homology.hpp"

namespace kzdisk {

struct OrbitMove {
  std::size_t target = 0;
  Permutation relabel;
  IntMatrix matrix;      // full H_1
  IntMatrix zero_block;  // H_1^(0)
};

struct OrbitPoint {
  HomologyModel model;
  std::array<OrbitMove, 3> moves;  // indexed by Generator
};

class SL2Orbit {
 public:
  /// Breadth-first closure under the horizontal shear and the rotation, on
  /// canonical forms. Throws DomainError past max_size points.
  explicit SL2Orbit(const Origami& start, std::size_t max_size = 20000);

  std::size_t size() const noexcept { return points_.size(); }
  int genus() const { return points_.front().model.genus(); }
  const OrbitPoint& point(std::size_t p) const { return points_.at(p); }
  const Origami& origami(std::size_t p) const { return points_.at(p).model.origami(); }
  const OrbitMove& move(std::size_t p, Generator g) const {
    return points_.at(p).moves[static_cast<std::size_t>(g)];
  }
  /// Position of an origami (any labelling); throws std::out_of_range.
  std::size_t index_of(const Origami& o) const;

  struct Walk {
    std::size_t end = 0;
    IntMatrix full;
    IntMatrix zero;
  };
  /// Cocycle along a word, applied left to right starting at p.
  Walk follow(std::size_t p, std::span<const Generator> word) const;

  /// Smallest k >= 1 with g^k returning to p.
  std::size_t cycle_length(std::size_t p, Generator g) const;

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  static Key key_of(const Origami& canonical);

  std::vector<OrbitPoint> points_;
  std::map<Key, std::size_t> index_;
};

}  // namespace kzdisk
