#pragma once

// Continued-fraction digits of Gauss-measure-typical numbers.

#include <cstdint>
#include <random>
#include <vector>

namespace kzdisk {

/// splitmix64 step; used to derive independent per-sample seeds.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Uniform double in (0, 1) with 53 random bits.
double uniform_open(std::mt19937_64& rng);

/// Gauss-Kuzmin probability of the digit k: -log2(1 - 1/(k+1)^2).
double gauss_kuzmin(std::uint64_t k);

/// Digits a_1, a_2, ... of x = [0; a_1, a_2, ...] for x uniform in (0, 1),
/// which is equivalent to the Gauss measure.
///
/// Each digit is drawn from its exact conditional law given the previous ones
/// (the tail ratio q_{n-1}/q_n is carried along), so long runs do not suffer
/// the precision loss of iterating the Gauss map in floating point.
class CfDigitStream {
 public:
  explicit CfDigitStream(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next();
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::mt19937_64 rng_;
  long double ratio_ = 0.0L;  // q_{n-1} / q_n
  std::uint64_t count_ = 0;
};

/// Finite continued fraction of num/den in (0, 1]: [0; a_1, ..., a_k].
std::vector<std::uint64_t> continued_fraction(std::uint64_t num, std::uint64_t den);

}  // namespace kzdisk
