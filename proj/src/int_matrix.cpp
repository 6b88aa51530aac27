#include "kzdisk/int_matrix.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace kzdisk {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer matrix entry overflow");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<std::int64_t> IntMatrix::column(int c) const {
  std::vector<std::int64_t> v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
  return v;
}

void IntMatrix::set_column(int c, const std::vector<std::int64_t>& v) {
  if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("column length mismatch");
  for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[static_cast<std::size_t>(r)];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool IntMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      Wide s = 0;
      for (int k = 0; k < a.cols(); ++k) s += static_cast<Wide>(a(i, k)) * b(k, j);
      c(i, j) = narrow(s);
    }
  }
  return c;
}

std::vector<std::int64_t> operator*(const IntMatrix& a, const std::vector<std::int64_t>& v) {
  if (a.cols() != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<std::int64_t> out(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) {
    Wide s = 0;
    for (int k = 0; k < a.cols(); ++k) s += static_cast<Wide>(a(i, k)) * v[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(i)] = narrow(s);
  }
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division is exact.
  std::vector<Wide> a(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = m(i, j);
  }
  auto at = [&](int i, int j) -> Wide& { return a[static_cast<std::size_t>(i * n + j)]; };
  int sign = 1;
  Wide prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    }
    prev = at(k, k);
  }
  return narrow(sign * at(n - 1, n - 1));
}

IntPoly characteristic_polynomial(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  IntPoly c(static_cast<std::size_t>(n + 1), 0);
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix mk(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    mk = std::move(next);
    const IntMatrix am = m * mk;
    Wide trace = 0;
    for (int i = 0; i < n; ++i) trace += am(i, i);
    if (trace % k != 0) throw std::logic_error("inexact division in characteristic polynomial");
    c[static_cast<std::size_t>(n - k)] = narrow(-trace / k);
  }
  return c;
}

IntPoly poly_multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = narrow(static_cast<Wide>(out[i + j]) + static_cast<Wide>(a[i]) * b[j]);
  }
  return out;
}

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d of n
  IntPoly num(static_cast<std::size_t>(n + 1), 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const IntPoly den = cyclotomic_polynomial(d);  // monic
    IntPoly q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      const std::int64_t coef = num[i + den.size() - 1];
      q[i] = coef;
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= coef * den[j];
    }
    num = std::move(q);
  }
  return num;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace kzdisk
