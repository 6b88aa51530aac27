#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace kzdisk {

/// Permutation of {0, .., n-1} stored by images.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection of 0..n-1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// All cycles including fixed points, each starting at its smallest element,
  /// ordered by that element.
  std::vector<std::vector<int>> cycles() const;
  long long order() const;

  /// 1-based cycle notation without fixed points; the identity prints as "()".
  std::string to_cycle_string() const;
  /// Inverse of to_cycle_string on n points. Throws std::invalid_argument.
  static Permutation parse_cycles(std::string_view text, int n);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Composition applying rhs first: (lhs * rhs)(i) = lhs(rhs(i)).
Permutation operator*(const Permutation& lhs, const Permutation& rhs);

}  // namespace kzdisk
