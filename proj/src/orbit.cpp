#include "kzdisk/orbit.hpp"

#include <deque>
#include <optional>
#include <stdexcept>

#include "kzdisk/cyclic_core.hpp"

namespace kzdisk {

SL2Orbit::Key SL2Orbit::key_of(const Origami& canonical) {
  return {canonical.right().images(), canonical.up().images()};
}

SL2Orbit::SL2Orbit(const Origami& start, std::size_t max_size) {
  const Origami first = canonical_form(Origami(start.right(), start.up())).origami;
  std::vector<std::optional<HomologyModel>> models;
  models.emplace_back(first);
  index_.emplace(key_of(first), 0);

  struct Pending {
    std::array<std::size_t, 3> target{};
    std::array<Permutation, 3> relabel;
  };
  std::vector<Pending> pending(1);
  constexpr std::array<Generator, 3> gens{Generator::HorizontalShear, Generator::Rotation, Generator::VerticalShear};

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      CanonicalForm cf = canonical_form(apply_generator(models[p]->origami(), gens[k]));
      auto [it, inserted] = index_.emplace(key_of(cf.origami), models.size());
      if (inserted) {
        if (models.size() >= max_size) throw DomainError("SL(2,Z) orbit exceeds the size limit");
        models.emplace_back(cf.origami);
        pending.emplace_back();
        queue.push_back(it->second);
      }
      pending[p].target[k] = it->second;
      pending[p].relabel[k] = std::move(cf.relabel);
    }
  }

  points_.reserve(models.size());
  for (std::size_t p = 0; p < models.size(); ++p) {
    OrbitPoint pt{std::move(*models[p]), {}};
    points_.push_back(std::move(pt));
  }
  for (std::size_t p = 0; p < points_.size(); ++p) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t q = pending[p].target[k];
      HomologyAction a = generator_action(points_[p].model, points_[q].model, gens[k], pending[p].relabel[k]);
      points_[p].moves[k] = OrbitMove{q, std::move(a.relabel), std::move(a.matrix), std::move(a.zero_block)};
    }
  }
}

std::size_t SL2Orbit::index_of(const Origami& o) const {
  const auto it = index_.find(key_of(canonical_form(Origami(o.right(), o.up())).origami));
  if (it == index_.end()) throw std::out_of_range("origami is not in this orbit");
  return it->second;
}

SL2Orbit::Walk SL2Orbit::follow(std::size_t p, std::span<const Generator> word) const {
  const int n = points_.at(p).model.rank();
  Walk w{p, IntMatrix::identity(n), IntMatrix::identity(n - 2)};
  for (Generator g : word) {
    const OrbitMove& m = move(w.end, g);
    w.full = m.matrix * w.full;
    w.zero = m.zero_block * w.zero;
    w.end = m.target;
  }
  return w;
}

std::size_t SL2Orbit::cycle_length(std::size_t p, Generator g) const {
  std::size_t q = move(p, g).target;
  std::size_t k = 1;
  while (q != p) {
    q = move(q, g).target;
    ++k;
    if (k > points_.size()) throw std::logic_error("generator does not act as a permutation");
  }
  return k;
}

}  // namespace kzdisk
