#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library routine it is checking.

#include <Eigen/Dense>
#include <gmp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "kzdisk/cf_digits.hpp"
#include "kzdisk/int_matrix.hpp"
#include "kzdisk/orbit.hpp"

namespace oracle {

// Riemann-Hurwitz: 2g - 2 = -2N + sum over branch points of (N - #preimages).
inline int riemann_hurwitz_genus(int n, const std::array<int, 4>& a) {
  int ramification = 0;
  for (int x : a) ramification += n - std::gcd(x, n);
  return (ramification - 2 * n + 2) / 2;
}

// Numerical rank with a relative pivot threshold.
inline int numeric_rank(Eigen::MatrixXd m) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

// Largest rank over random real matrices with the given 1-based support.
inline int random_support_rank(int g, const std::vector<std::pair<int, int>>& support, int trials,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g, g);
    for (auto [i, k] : support) m(i - 1, k - 1) = dist(rng);
    best = std::max(best, numeric_rank(m));
  }
  return best;
}

// Exponent pairs (i, k) with e_i + e_k = 0 mod N, from the raw exponent list.
inline std::vector<std::pair<int, int>> support_of(int n, const std::vector<int>& e) {
  std::vector<std::pair<int, int>> s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      if ((e[i] + e[k]) % n == 0) s.emplace_back(static_cast<int>(i) + 1, static_cast<int>(k) + 1);
    }
  }
  return s;
}

// Every valid exponent tuple for degree n, grouped into classes under
// permutations and unit rescaling; returns the sorted minimum of each class.
inline std::set<std::pair<int, std::array<int, 4>>> cover_classes(int n_max) {
  std::set<std::pair<int, std::array<int, 4>>> classes;
  for (int n = 2; n <= n_max; ++n) {
    std::set<std::array<int, 4>> seen;
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        for (int c = 1; c < n; ++c) {
          for (int d = 1; d < n; ++d) {
            if ((a + b + c + d) % n != 0) continue;
            if (std::gcd(std::gcd(std::gcd(std::gcd(n, a), b), c), d) != 1) continue;
            std::array<int, 4> best{n, n, n, n};
            for (int u = 1; u < n; ++u) {
              if (std::gcd(u, n) != 1) continue;
              std::array<int, 4> t{u * a % n, u * b % n, u * c % n, u * d % n};
              std::sort(t.begin(), t.end());
              best = std::min(best, t);
            }
            seen.insert(best);
          }
        }
      }
    }
    for (const auto& t : seen) classes.emplace(n, t);
  }
  return classes;
}

// Rank of H_1 of a square-tiled surface from the cellular chain complex:
// dim ker d1 - rank d2, with d1 : edges -> vertices and d2 : faces -> edges.
inline int homology_rank(const std::vector<int>& right, const std::vector<int>& up) {
  const int d = static_cast<int>(right.size());
  // vertices = cycles of the commutator acting on bottom-left corners
  std::vector<int> rinv(d), uinv(d);
  for (int i = 0; i < d; ++i) {
    rinv[right[i]] = i;
    uinv[up[i]] = i;
  }
  std::vector<int> vertex(d, -1);
  int nv = 0;
  for (int s = 0; s < d; ++s) {
    if (vertex[s] >= 0) continue;
    int i = s;
    while (vertex[i] < 0) {
      vertex[i] = nv;
      i = up[right[uinv[rinv[i]]]];
    }
    ++nv;
  }
  Eigen::MatrixXd d1 = Eigen::MatrixXd::Zero(nv, 2 * d);
  Eigen::MatrixXd d2 = Eigen::MatrixXd::Zero(2 * d, d);
  for (int i = 0; i < d; ++i) {
    d1(vertex[right[i]], i) += 1;
    d1(vertex[i], i) -= 1;
    d1(vertex[up[i]], d + i) += 1;
    d1(vertex[i], d + i) -= 1;
    d2(i, i) += 1;
    d2(d + right[i], i) += 1;
    d2(up[i], i) -= 1;
    d2(d + i, i) -= 1;
  }
  return 2 * d - numeric_rank(d1) - numeric_rank(d2);
}

// Is there a relabelling carrying (r1, u1) to (r2, u2)? Exhaustive search.
inline bool brute_force_conjugate(const std::vector<int>& r1, const std::vector<int>& u1, const std::vector<int>& r2,
                                  const std::vector<int>& u2) {
  const int d = static_cast<int>(r1.size());
  if (static_cast<int>(r2.size()) != d) return false;
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) ok = p[r1[i]] == r2[p[i]] && p[u1[i]] == u2[p[i]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Continued-fraction digits of a uniformly random dyadic rational with `bits`
// binary digits, by exact Euclid. Only the first bits/4 digits are kept: past
// roughly bits/3.4 digits the expansion reflects the truncation, not x.
inline std::vector<std::uint64_t> exact_cf_digits(std::mt19937_64& rng, unsigned bits = 1u << 16) {
  mpz_t num, den, q, r;
  mpz_inits(num, den, q, r, nullptr);
  mpz_set_ui(num, 0);
  for (unsigned w = 0; w < bits / 64; ++w) {
    mpz_mul_2exp(num, num, 64);
    mpz_add_ui(num, num, static_cast<unsigned long>(rng()));
  }
  mpz_setbit(den, bits);
  std::vector<std::uint64_t> digits;
  const std::size_t keep = bits / 4;
  while (digits.size() < keep && mpz_sgn(num) != 0) {
    mpz_tdiv_qr(q, r, den, num);
    if (!mpz_fits_ulong_p(q)) break;
    digits.push_back(mpz_get_ui(q));
    mpz_swap(den, num);
    mpz_swap(num, r);
  }
  mpz_clears(num, den, q, r, nullptr);
  return digits;
}

inline double digit_one_frequency(std::uint64_t digits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t ones = 0;
  std::uint64_t n = 0;
  while (n < digits) {
    const auto ds = exact_cf_digits(rng);
    // skip a short prefix so the statistics are those of the Gauss measure
    for (std::size_t k = 10; k < ds.size() && n < digits; ++k, ++n) ones += ds[k] == 1;
  }
  return static_cast<double>(ones) / static_cast<double>(n);
}

// Reference exponent estimate on H_1^(0) along one geodesic per block of
// exact digits: Householder QR and a normalizer from the product of sl2
// shears, both independent of the library estimator.
inline std::vector<double> reference_exponents(const kzdisk::SL2Orbit& orbit, std::uint64_t digits,
                                               std::uint64_t seed) {
  const int g = orbit.genus();
  const int dim = 2 * g - 2;
  const int cols = g - 1;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;

  std::vector<Eigen::MatrixXd> zero_blocks;
  for (std::size_t p = 0; p < orbit.size(); ++p) {
    for (auto gen : {kzdisk::Generator::HorizontalShear, kzdisk::Generator::VerticalShear}) {
      const auto& zb = orbit.move(p, gen).zero_block;
      Eigen::MatrixXd m(dim, dim);
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) m(i, j) = static_cast<double>(zb(i, j));
      }
      zero_blocks.push_back(m);
    }
  }

  std::vector<long double> logs(static_cast<std::size_t>(cols), 0.0L);
  long double time = 0.0L;
  std::uint64_t used = 0;
  while (used < digits) {
    // fresh geodesic from the first orbit point with a random frame
    Eigen::MatrixXd frame(dim, cols);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < cols; ++j) frame(i, j) = normal(rng);
    }
    frame = Eigen::HouseholderQR<Eigen::MatrixXd>(frame).householderQ() * Eigen::MatrixXd::Identity(dim, cols);
    Eigen::Vector2d w(1.0, 0.0);
    std::size_t p = 0;
    const auto ds = exact_cf_digits(rng);
    for (std::size_t n = 0; n < ds.size() && used < digits; ++n, ++used) {
      const bool horizontal = n % 2 == 0;
      const auto gen = horizontal ? kzdisk::Generator::HorizontalShear : kzdisk::Generator::VerticalShear;
      Eigen::Matrix2d shear = Eigen::Matrix2d::Identity();
      if (horizontal) {
        shear(0, 1) = static_cast<double>(ds[n]);
      } else {
        shear(1, 0) = static_cast<double>(ds[n]);
      }
      w = shear * w;
      const bool count = n >= 200;  // transient of each geodesic
      if (count) time += std::log(static_cast<long double>(w.norm()));
      w.normalize();
      for (std::uint64_t s = 0; s < ds[n]; ++s) {
        const Eigen::MatrixXd& m = zero_blocks[2 * p + (horizontal ? 0 : 1)];
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(m * frame);
        const Eigen::MatrixXd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
        Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, cols);
        for (int j = 0; j < cols; ++j) {
          if (count) logs[static_cast<std::size_t>(j)] += std::log(std::abs(static_cast<long double>(r(j, j))));
          if (r(j, j) < 0) q.col(j) = -q.col(j);
        }
        frame = q;
        p = orbit.move(p, gen).target;
      }
    }
  }
  std::vector<double> out;
  for (auto l : logs) out.push_back(static_cast<double>(l / time));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// prod_k Phi_k^{m_k}, with m_k the H_1 multiplicity of primitive k-th roots
// of unity under the deck, read off from eigenspace dimensions: eps^i occurs
// with multiplicity dims_i + dims_{N-i}.
inline kzdisk::IntPoly deck_polynomial_from_dims(int n, const std::vector<int>& dims) {
  kzdisk::IntPoly poly{1};
  std::map<int, int> mult;  // order -> multiplicity
  for (int i = 1; i < n; ++i) {
    const int order = n / std::gcd(i, n);
    const int m = dims[static_cast<std::size_t>(i - 1)] + dims[static_cast<std::size_t>(n - i - 1)];
    mult[order] = m;  // Galois invariance is checked separately
  }
  for (auto [order, m] : mult) {
    for (int k = 0; k < m; ++k) poly = kzdisk::poly_multiply(poly, kzdisk::cyclotomic_polynomial(order));
  }
  return poly;
}

}  // namespace oracle
