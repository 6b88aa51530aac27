#include "kzdisk/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kzdisk {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= size() || hit[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("not a permutation");
    }
    hit[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    auto& cyc = out.emplace_back();
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      cyc.push_back(j);
    }
  }
  return out;
}

long long Permutation::order() const {
  long long o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<long long>(c.size()));
  return o;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k] + 1;
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("expected a point label in cycle notation");
      const int v = std::stoi(std::string(text.substr(start, pos - start))) - 1;
      if (v < 0 || v >= n) throw std::invalid_argument("point label out of range");
      if (used[static_cast<std::size_t>(v)]) throw std::invalid_argument("point repeated in cycle notation");
      used[static_cast<std::size_t>(v)] = 1;
      cyc.push_back(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      img[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> img(static_cast<std::size_t>(rhs.size()));
  for (int i = 0; i < rhs.size(); ++i) img[static_cast<std::size_t>(i)] = lhs(rhs(i));
  return Permutation(std::move(img));
}

}  // namespace kzdisk
