#include "kzdisk/cf_digits.hpp"

#include <cmath>
#include <stdexcept>

namespace kzdisk {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t state = master ^ (0xd1b54a32d192ed03ULL * (stream + 1));
  splitmix64(state);
  return splitmix64(state);
}

double uniform_open(std::mt19937_64& rng) {
  for (;;) {
    const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (x > 0.0) return x;
  }
}

double gauss_kuzmin(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("continued fraction digits are positive");
  const double k1 = static_cast<double>(k) + 1.0;
  return -std::log2(1.0 - 1.0 / (k1 * k1));
}

std::uint64_t CfDigitStream::next() {
  // Given the digits so far the tail t has density (1+r)/(1+rt)^2 on (0,1);
  // invert its distribution function.
  for (;;) {
    const long double u = uniform_open(rng_);
    const long double t = u / (1.0L + ratio_ * (1.0L - u));
    const long double inv = 1.0L / t;
    const long double a = std::floor(inv);
    if (a == inv) continue;  // rational tail, probability zero
    const auto digit = static_cast<std::uint64_t>(a);
    ratio_ = 1.0L / (a + ratio_);
    ++count_;
    return digit;
  }
}

std::vector<std::uint64_t> continued_fraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num == 0 || num > den) throw std::invalid_argument("continued fraction needs 0 < num/den <= 1");
  std::vector<std::uint64_t> digits;
  while (num != 0) {
    digits.push_back(den / num);
    const std::uint64_t rem = den % num;
    den = num;
    num = rem;
  }
  return digits;
}

}  // namespace kzdisk
