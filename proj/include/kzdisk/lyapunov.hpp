#pragma once

// Monte Carlo estimation of Kontsevich-Zorich exponents on an SL(2,Z)-orbit:
// random geodesics are coded by continued-fraction digits a_1, a_2, ... and
// the cocycle is applied along T^a_1 L^a_2 T^a_3 ...

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "kzdisk/orbit.hpp"

namespace kzdisk {

struct LyapunovOptions {
  std::uint64_t steps = 1'000'000;  // digits, split over the samples
  int samples = 8;
  std::uint64_t seed = 0;
  /// Estimate all 2g exponents on H_1 instead of lambda_2..lambda_g on H_1^(0).
  bool full_homology = false;
  /// Orbit index of the starting surface; defaults to the given origami (or
  /// index 0 when starting from an orbit).
  std::optional<std::size_t> start_point;
  /// Record running estimates every this many digits (0 = no trace).
  std::uint64_t trace_every = 0;
  /// Worker threads, 0 = hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
  /// Digits above this are applied through powers of the return matrix of
  /// the generator cycle instead of one generator at a time.
  std::uint64_t power_threshold = 4096;
  /// Digits consumed per sample before accumulation starts, capped at a
  /// tenth of the sample's digits.
  std::uint64_t burn_in = 1000;
};

struct TraceRow {
  int sample = 0;
  std::uint64_t step = 0;
  std::vector<double> running;
};

struct LyapunovEstimate {
  std::vector<double> lambdas;    // means over samples, sorted descending
  std::vector<double> std_error;  // NaN with fewer than two samples
  std::uint64_t steps = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  bool full_homology = false;
  int genus = 0;
  std::size_t orbit_size = 0;
  /// Per sample, one value per frame direction, in the order of lambdas.
  std::vector<std::vector<double>> per_sample;
  /// 1 + sum of the estimates (on H_1^(0)); on full homology the sum of the
  /// top g values.
  double sum_check = 0.0;
  /// Normalizer growth per digit, Levy's constant pi^2 / (12 log 2) in the limit.
  double log_growth_per_digit = 0.0;
  std::vector<TraceRow> trace;

  bool empty() const noexcept { return lambdas.empty(); }
};

LyapunovEstimate lyapunov_estimate(const SL2Orbit& orbit, const LyapunovOptions& options);
LyapunovEstimate lyapunov_estimate(const Origami& o, const LyapunovOptions& options);
LyapunovEstimate lyapunov_estimate(const Origami& o, std::uint64_t steps, int samples, std::uint64_t seed);

/// Columns sample, step, lambda_2 .. lambda_g (nu_1 .. nu_2g on full homology).
void write_trace_csv(std::ostream& os, const LyapunovEstimate& e);

}  // namespace kzdisk
