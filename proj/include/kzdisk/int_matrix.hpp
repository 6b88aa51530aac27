#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kzdisk {

/// Dense row-major integer matrix for homology computations (sizes ~ 2g).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  std::vector<std::int64_t> column(int c) const;
  void set_column(int c, const std::vector<std::int64_t>& v);

  IntMatrix transpose() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Throws std::overflow_error if an entry leaves the int64 range.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<std::int64_t> operator*(const IntMatrix& a, const std::vector<std::int64_t>& v);

std::int64_t determinant(const IntMatrix& m);

/// Coefficients of det(x I - m), constant term first.
using IntPoly = std::vector<std::int64_t>;
IntPoly characteristic_polynomial(const IntMatrix& m);
IntPoly poly_multiply(const IntPoly& a, const IntPoly& b);
IntPoly cyclotomic_polynomial(int n);

std::string to_string(const IntMatrix& m);

}  // namespace kzdisk
