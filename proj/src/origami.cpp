#include "kzdisk/origami.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace kzdisk {

Origami::Origami(Permutation right, Permutation up)
    : Origami(right, up, Permutation::identity(right.size())) {}

Origami::Origami(Permutation right, Permutation up, Permutation deck)
    : right_(std::move(right)), up_(std::move(up)), deck_(std::move(deck)) {
  if (right_.size() < 1) throw std::invalid_argument("origami needs at least one square");
  if (up_.size() != right_.size() || deck_.size() != right_.size()) {
    throw std::invalid_argument("origami permutations must act on the same squares");
  }
  if (!is_transitive(right_, up_)) throw std::invalid_argument("origami is not connected");
}

bool is_transitive(const Permutation& right, const Permutation& up) {
  const int d = right.size();
  std::vector<char> seen(static_cast<std::size_t>(d), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  const Permutation right_inv = right.inverse();
  const Permutation up_inv = up.inverse();
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int t : {right(s), up(s), right_inv(s), up_inv(s)}) {
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = 1;
        ++count;
        stack.push_back(t);
      }
    }
  }
  return count == d;
}

Permutation vertex_permutation(const Origami& o) {
  return o.right() * o.up() * o.right().inverse() * o.up().inverse();
}

int origami_genus(const Origami& o) {
  const int vertices = static_cast<int>(vertex_permutation(o).cycles().size());
  // V - E + F with E = 2d, F = d
  return (2 + o.squares() - vertices) / 2;
}

std::vector<int> origami_stratum(const Origami& o) {
  std::vector<int> orders;
  for (const auto& c : vertex_permutation(o).cycles()) {
    if (c.size() > 1) orders.push_back(static_cast<int>(c.size()) - 1);
  }
  std::sort(orders.begin(), orders.end(), std::greater<>());
  return orders;
}

namespace {

std::vector<int> bfs_labels(const Origami& o, int start) {
  const auto d = static_cast<std::size_t>(o.squares());
  std::vector<int> label(d, -1);
  std::deque<int> queue{start};
  label[static_cast<std::size_t>(start)] = 0;
  int next = 1;
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    for (int t : {o.right()(s), o.up()(s)}) {
      if (label[static_cast<std::size_t>(t)] < 0) {
        label[static_cast<std::size_t>(t)] = next++;
        queue.push_back(t);
      }
    }
  }
  // right/up alone reach everything: the group they generate is finite
  return label;
}

Permutation conjugate(const Permutation& p, const std::vector<int>& label) {
  std::vector<int> img(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) {
    img[static_cast<std::size_t>(label[i])] = label[static_cast<std::size_t>(p(static_cast<int>(i)))];
  }
  return Permutation(std::move(img));
}

}  // namespace

CanonicalForm canonical_form(const Origami& o) {
  std::vector<int> best_label;
  std::vector<int> best_r, best_u;
  for (int s = 0; s < o.squares(); ++s) {
    auto label = bfs_labels(o, s);
    auto r = conjugate(o.right(), label).images();
    auto u = conjugate(o.up(), label).images();
    if (best_label.empty() || std::tie(r, u) < std::tie(best_r, best_u)) {
      best_label = std::move(label);
      best_r = std::move(r);
      best_u = std::move(u);
    }
  }
  Origami canon(Permutation(best_r), Permutation(best_u), conjugate(o.deck(), best_label));
  return {std::move(canon), Permutation(best_label)};
}

bool equivalent(const Origami& a, const Origami& b) {
  if (a.squares() != b.squares()) return false;
  const auto ca = canonical_form(a).origami;
  const auto cb = canonical_form(b).origami;
  return ca.right() == cb.right() && ca.up() == cb.up();
}

AutomorphismKind classify_automorphism(const Origami& o, const Permutation& phi) {
  if (phi.size() != o.squares()) return AutomorphismKind::None;
  const Permutation phi_inv = phi.inverse();
  const Permutation r = phi * o.right() * phi_inv;
  const Permutation u = phi * o.up() * phi_inv;
  if (r == o.right() && u == o.up()) return AutomorphismKind::Translation;
  if (r == o.right().inverse() && u == o.up().inverse()) return AutomorphismKind::HalfTurn;
  return AutomorphismKind::None;
}

bool is_automorphism(const Origami& o, const Permutation& phi, AutomorphismKind kind) {
  if (kind == AutomorphismKind::None || phi.size() != o.squares()) return false;
  const Permutation phi_inv = phi.inverse();
  const Permutation r = phi * o.right() * phi_inv;
  const Permutation u = phi * o.up() * phi_inv;
  if (kind == AutomorphismKind::Translation) return r == o.right() && u == o.up();
  return r == o.right().inverse() && u == o.up().inverse();
}

std::vector<Permutation> translation_automorphisms(const Origami& o) {
  // A translation automorphism is fixed by the image of square 0.
  std::vector<Permutation> out;
  const auto base = bfs_labels(o, 0);
  for (int t = 0; t < o.squares(); ++t) {
    const auto target = bfs_labels(o, t);
    // phi maps the square with label k from 0 to the square with label k from t
    std::vector<int> by_label(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) by_label[static_cast<std::size_t>(target[i])] = static_cast<int>(i);
    std::vector<int> img(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) img[i] = by_label[static_cast<std::size_t>(base[i])];
    Permutation phi(std::move(img));
    if (classify_automorphism(o, phi) == AutomorphismKind::Translation) out.push_back(std::move(phi));
  }
  return out;
}

bool deck_check(const Origami& o, int cover_degree) {
  const Permutation& deck = o.deck();
  if (cover_degree < 1 || deck.order() != cover_degree) return false;
  if (!is_automorphism(o, deck, AutomorphismKind::HalfTurn)) return false;
  for (const auto& c : deck.cycles()) {
    if (static_cast<int>(c.size()) != cover_degree) return false;
  }
  return true;
}

std::string serialize(const Origami& o) {
  std::ostringstream os;
  os << o.squares() << '\n'
     << o.right().to_cycle_string() << '\n'
     << o.up().to_cycle_string() << '\n'
     << o.deck().to_cycle_string() << '\n';
  return os.str();
}

Origami parse_origami(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line.substr(first));
  }
  if (lines.size() != 3 && lines.size() != 4) {
    throw std::invalid_argument("origami text needs a square count, right, up and optionally deck lines");
  }
  int d = 0;
  try {
    std::size_t used = 0;
    d = std::stoi(lines[0], &used);
    if (lines[0].find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("origami square count is not an integer");
  }
  if (d < 1) throw std::invalid_argument("origami square count must be positive");
  auto r = Permutation::parse_cycles(lines[1], d);
  auto u = Permutation::parse_cycles(lines[2], d);
  auto deck = lines.size() == 4 ? Permutation::parse_cycles(lines[3], d) : Permutation::identity(d);
  return Origami(std::move(r), std::move(u), std::move(deck));
}

}  // namespace kzdisk
