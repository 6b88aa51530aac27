#pragma once

// Exact arithmetic for cyclic covers M_N(a) of the sphere branched over four
// points: genus, eigenspace dimensions of the deck action on holomorphic
// forms, the square-root index of the pulled-back pillowcase differential,
// and rank bounds for the second fundamental form H_q.
//
// Roots of unity never appear as complex numbers here. An eigenvalue
// eps^e is carried by its exponent e mod N and every identity between
// products of eigenvalues is checked on exponents.

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kzdisk {

enum class CoverErrorCode {
  DegreeTooSmall,      // N < 2
  ExponentOutOfRange,  // some a_mu not in (0, N)
  NotCoprime,          // gcd(N, a_1..a_4) != 1
  SumNotDivisible,     // a_1+..+a_4 != 0 mod N
};

std::string_view to_string(CoverErrorCode code);

class CoverError : public std::invalid_argument {
 public:
  CoverError(CoverErrorCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  CoverErrorCode code() const noexcept { return code_; }

 private:
  CoverErrorCode code_;
};

/// Raised when an operation needs structure the cover does not have, e.g. a
/// square root of the quadratic differential on a non-orientable cover.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validated cover data (N, a). Only constructible through validate_params.
class CoverParams {
 public:
  int degree() const noexcept { return n_; }
  const std::array<int, 4>& exponents() const noexcept { return a_; }
  int exponent(int mu) const { return a_.at(static_cast<std::size_t>(mu)); }

  /// "N:a1,a2,a3,a4"
  std::string to_string() const;

  friend bool operator==(const CoverParams&, const CoverParams&) = default;
  friend auto operator<=>(const CoverParams&, const CoverParams&) = default;

 private:
  friend CoverParams validate_params(int n, std::array<int, 4> a);
  CoverParams(int n, std::array<int, 4> a) : n_(n), a_(a) {}

  int n_;
  std::array<int, 4> a_;
};

/// Checks the three cover constraints and throws CoverError naming the first
/// one violated (degree, range, gcd, sum in that order).
CoverParams validate_params(int n, std::array<int, 4> a);

/// Parses "N:a1,a2,a3,a4". Malformed text throws std::invalid_argument,
/// a well-formed but invalid cover throws CoverError.
CoverParams parse_cover(std::string_view text);

int genus(const CoverParams& p);

/// Ramification order d_mu = N / gcd(a_mu, N) at each preimage of x_mu.
std::array<int, 4> ramification_orders(const CoverParams& p);

struct EigenspaceDims {
  std::vector<int> dims;  // dims[i-1] = dim L_i, i = 1..N-1

  int at(int i) const { return dims.at(static_cast<std::size_t>(i - 1)); }
  int total() const;
};

EigenspaceDims eigenspace_dims(const CoverParams& p);

/// Index m of the eigenspace L_m holding a square root of the pulled-back
/// pillowcase differential, decided by 2*m*a_mu = N (mod 2N) for every mu.
/// The solution is unique when it exists (and then m = N/2).
std::optional<int> square_root_index(const CoverParams& p);

/// Eigenvalues u_i(T) = eps^{e_i} of the deck generator on the space of
/// square-integrable meromorphic functions, stored as a sorted multiset of
/// exponents mod N. Exponent 0 (the constant function) always comes first.
class RootOfUnitySpectrum {
 public:
  /// Throws std::invalid_argument unless order >= 1, exponents is nonempty,
  /// entries lie in [0, order) and 0 occurs.
  RootOfUnitySpectrum(int order, std::vector<int> exponents);

  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(exponents_.size()); }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  /// 1-based, matching u_1..u_g.
  int exponent(int i) const { return exponents_.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const RootOfUnitySpectrum&, const RootOfUnitySpectrum&) = default;

 private:
  int order_;
  std::vector<int> exponents_;
};

/// Throws DomainError when the cover carries no orientable square root.
RootOfUnitySpectrum mqplus_spectrum(const CoverParams& p);

/// True iff prod_{i in I} prod_{j in J} u_i u_j != 1, i.e. the minor
/// det B_IJ is forced to vanish. Index sets are 1-based and duplicate-free.
bool forced_zero_minor(const RootOfUnitySpectrum& s, std::span<const int> rows,
                       std::span<const int> cols);

/// Best bound g - k over k in 1..g-1 for which every k x k minor is forced
/// to vanish; g when no such k exists.
int corollary_rank_bound(const RootOfUnitySpectrum& s);

/// Whether the single g x g minor (the full determinant) is forced to vanish.
bool full_determinant_forced(const RootOfUnitySpectrum& s);

enum class Verdict { TotallyDegenerate, Inconclusive };

std::string_view to_string(Verdict v);

struct RankBoundReport {
  int genus = 0;
  int structural_rank = 0;
  int corollary_bound = 0;
  bool full_determinant_forced = false;
  Verdict verdict = Verdict::Inconclusive;
  // Genus 1: degenerate only because there are no nontrivial exponents.
  bool trivial_torus = false;
};

/// Allowed support of B: pairs (i, k), 1-based, with e_i + e_k = 0 mod N.
std::vector<std::pair<int, int>> allowed_support(const RootOfUnitySpectrum& s);

/// Maximum bipartite matching on the allowed support, i.e. the largest rank of
/// any g x g matrix with that zero pattern.
RankBoundReport structural_rank_bound(const RootOfUnitySpectrum& s);

/// Full pipeline for one cover. Throws DomainError when non-orientable.
RankBoundReport degeneracy_verdict(const CoverParams& p);

/// Lyapunov spectrum of the Teichmueller flow from the nonnegative
/// Kontsevich-Zorich exponents 1 = l_1 >= ... >= l_g >= 0 and the number of
/// distinct zeros sigma. Returns 2(2g+sigma-2)+1 values, sorted descending.
std::vector<double> teichmuller_spectrum(std::span<const double> kz, int sigma);

}  // namespace kzdisk
