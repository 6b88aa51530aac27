#include "kzdisk/lyapunov.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "kzdisk/cf_digits.hpp"

namespace kzdisk {

namespace {

using Mat = Eigen::MatrixXd;
using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

constexpr std::array<Generator, 2> kAlternation{Generator::HorizontalShear, Generator::VerticalShear};

Mat to_eigen(const IntMatrix& m) {
  Mat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out(r, c) = static_cast<double>(m(r, c));
  }
  return out;
}

// Shared, read-only view of the cocycle along the two shears.
struct Cocycle {
  int dim = 0;
  int cols = 0;
  std::vector<std::array<Mat, 2>> step;
  std::vector<std::array<std::size_t, 2>> next;

  Cocycle(const SL2Orbit& orbit, bool full) {
    const int g = orbit.genus();
    dim = full ? 2 * g : 2 * g - 2;
    cols = full ? 2 * g : g - 1;
    step.resize(orbit.size());
    next.resize(orbit.size());
    for (std::size_t p = 0; p < orbit.size(); ++p) {
      for (std::size_t k = 0; k < kAlternation.size(); ++k) {
        const OrbitMove& m = orbit.move(p, kAlternation[k]);
        step[p][k] = to_eigen(full ? m.matrix : m.zero_block);
        next[p][k] = m.target;
      }
    }
  }
};

// Return matrices of generator cycles and their repeated squares, built on
// demand by each sample.
class PowerCache {
 public:
  explicit PowerCache(const Cocycle& c) : c_(c) {}

  struct Entry {
    std::uint64_t cycle = 0;
    std::vector<MatL> squares;  // C^(2^j)
    std::vector<Mat> rounded;
  };

  const Mat& power(std::size_t p, std::size_t k, int bit) {
    Entry& e = entry(p, k);
    while (static_cast<int>(e.squares.size()) <= bit) {
      const MatL& last = e.squares.back();
      e.squares.push_back(last * last);
      e.rounded.push_back(e.squares.back().cast<double>());
    }
    return e.rounded[static_cast<std::size_t>(bit)];
  }

  std::uint64_t cycle(std::size_t p, std::size_t k) { return entry(p, k).cycle; }

 private:
  Entry& entry(std::size_t p, std::size_t k) {
    auto [it, inserted] = cache_.try_emplace({p, k});
    Entry& e = it->second;
    if (inserted) {
      MatL ret = MatL::Identity(c_.dim, c_.dim);
      std::size_t q = p;
      do {
        ret = c_.step[q][k].cast<long double>() * ret;
        q = c_.next[q][k];
        ++e.cycle;
      } while (q != p);
      e.squares.push_back(ret);
      e.rounded.push_back(ret.cast<double>());
    }
    return e;
  }

  const Cocycle& c_;
  std::map<std::pair<std::size_t, std::size_t>, Entry> cache_;
};

// Gram-Schmidt with one re-orthogonalization pass; adds log R_jj to logs.
void orthonormalize(Mat& q, std::vector<long double>* logs) {
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
    }
    const double n = q.col(j).norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw std::runtime_error("frame collapsed during re-orthonormalization");
    if (logs) (*logs)[static_cast<std::size_t>(j)] += std::log(static_cast<long double>(n));
    q.col(j) /= n;
  }
}

double gaussian(std::mt19937_64& rng) {
  const double u1 = uniform_open(rng);
  const double u2 = uniform_open(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

struct SampleResult {
  std::vector<double> lambdas;
  long double normalizer = 0.0L;
  std::vector<TraceRow> trace;
};

SampleResult run_sample(const Cocycle& c, const LyapunovOptions& opt, std::size_t start, int sample,
                        std::uint64_t digits) {
  std::mt19937_64 frame_rng(derive_seed(opt.seed, 2 * static_cast<std::uint64_t>(sample)));
  CfDigitStream stream(derive_seed(opt.seed, 2 * static_cast<std::uint64_t>(sample) + 1));
  PowerCache powers(c);

  Mat q(c.dim, c.cols);
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    for (Eigen::Index i = 0; i < q.rows(); ++i) q(i, j) = gaussian(frame_rng);
  }
  orthonormalize(q, nullptr);
  Mat tmp(c.dim, c.cols);

  const double angle = 2.0 * std::numbers::pi * uniform_open(frame_rng);
  long double w0 = std::cos(angle);
  long double w1 = std::sin(angle);

  std::vector<long double> logs(static_cast<std::size_t>(c.cols), 0.0L);
  long double normalizer = 0.0L;
  std::size_t p = start;
  SampleResult out;

  auto apply = [&](const Mat& m) {
    tmp.noalias() = m * q;
    q.swap(tmp);
    orthonormalize(q, &logs);
  };

  const std::uint64_t burn = std::min(opt.burn_in, digits / 10);
  for (std::uint64_t n = 0; n < digits; ++n) {
    if (n == burn) {
      std::fill(logs.begin(), logs.end(), 0.0L);
      normalizer = 0.0L;
    }
    const std::size_t k = n % 2;
    const std::uint64_t a = stream.next();

    const auto ad = static_cast<long double>(a);
    if (k == 0) {
      w0 += ad * w1;
    } else {
      w1 += ad * w0;
    }
    const long double norm = std::sqrt(w0 * w0 + w1 * w1);
    normalizer += std::log(norm);
    w0 /= norm;
    w1 /= norm;

    std::uint64_t single = a;
    if (a > opt.power_threshold) {
      const std::uint64_t cyc = powers.cycle(p, k);
      const std::uint64_t whole = a / cyc;
      single = a % cyc;
      for (int bit = 0; (whole >> bit) != 0; ++bit) {
        if ((whole >> bit) & 1U) apply(powers.power(p, k, bit));
      }
    }
    for (std::uint64_t s = 0; s < single; ++s) {
      apply(c.step[p][k]);
      p = c.next[p][k];
    }

    if (opt.trace_every != 0 && n >= burn && (n + 1) % opt.trace_every == 0) {
      TraceRow row{sample, n + 1, {}};
      for (auto l : logs) row.running.push_back(static_cast<double>(l / normalizer));
      out.trace.push_back(std::move(row));
    }
  }

  out.normalizer = normalizer;
  // Columns keep the Gram-Schmidt order: column j tracks the j-th exponent.
  for (auto l : logs) out.lambdas.push_back(static_cast<double>(l / normalizer));
  return out;
}

}  // namespace

LyapunovEstimate lyapunov_estimate(const SL2Orbit& orbit, const LyapunovOptions& options) {
  if (options.steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (options.samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (options.steps < static_cast<std::uint64_t>(options.samples)) {
    throw std::invalid_argument("steps must be at least the number of samples");
  }
  const std::size_t start = options.start_point.value_or(0);
  if (start >= orbit.size()) throw std::out_of_range("start point outside the orbit");

  LyapunovEstimate est;
  est.steps = options.steps;
  est.samples = options.samples;
  est.seed = options.seed;
  est.full_homology = options.full_homology;
  est.genus = orbit.genus();
  est.orbit_size = orbit.size();
  if (!options.full_homology && est.genus < 2) {
    est.sum_check = 1.0;
    return est;
  }

  const Cocycle cocycle(orbit, options.full_homology);
  const auto samples = static_cast<std::size_t>(options.samples);
  std::vector<SampleResult> results(samples);
  auto digits_for = [&](std::size_t s) {
    return options.steps / samples + (s < options.steps % samples ? 1 : 0);
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(samples));
  auto work = [&](unsigned worker) {
    for (std::size_t s = worker; s < samples; s += threads) {
      results[s] = run_sample(cocycle, options, start, static_cast<int>(s), digits_for(s));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  // Average direction by direction, then order the directions by their mean.
  const auto m = static_cast<std::size_t>(cocycle.cols);
  std::vector<double> mean(m, 0.0);
  std::vector<double> err(m, std::numeric_limits<double>::quiet_NaN());
  long double normalizer = 0.0L;
  std::uint64_t accumulated = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < m; ++i) mean[i] += results[s].lambdas[i] / static_cast<double>(samples);
    normalizer += results[s].normalizer;
    accumulated += digits_for(s) - std::min(options.burn_in, digits_for(s) / 10);
  }
  if (samples > 1) {
    for (std::size_t i = 0; i < m; ++i) {
      double ss = 0.0;
      for (const auto& r : results) ss += (r.lambdas[i] - mean[i]) * (r.lambdas[i] - mean[i]);
      err[i] = std::sqrt(ss / static_cast<double>(samples - 1)) / std::sqrt(static_cast<double>(samples));
    }
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return mean[a] > mean[b]; });
  for (std::size_t i : order) {
    est.lambdas.push_back(mean[i]);
    est.std_error.push_back(err[i]);
  }
  for (auto& r : results) {
    std::vector<double> row;
    for (std::size_t i : order) row.push_back(r.lambdas[i]);
    est.per_sample.push_back(std::move(row));
    for (auto& t : r.trace) {
      std::vector<double> running;
      for (std::size_t i : order) running.push_back(t.running[i]);
      t.running = std::move(running);
      est.trace.push_back(std::move(t));
    }
  }
  est.log_growth_per_digit = static_cast<double>(normalizer / static_cast<long double>(accumulated));

  if (options.full_homology) {
    double top = 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(est.genus); ++i) top += est.lambdas[i];
    est.sum_check = top;
  } else {
    est.sum_check = 1.0;
    for (double l : est.lambdas) est.sum_check += l;
  }
  return est;
}

LyapunovEstimate lyapunov_estimate(const Origami& o, const LyapunovOptions& options) {
  const SL2Orbit orbit(o);
  LyapunovOptions opt = options;
  if (!opt.start_point) opt.start_point = orbit.index_of(o);
  return lyapunov_estimate(orbit, opt);
}

LyapunovEstimate lyapunov_estimate(const Origami& o, std::uint64_t steps, int samples, std::uint64_t seed) {
  LyapunovOptions opt;
  opt.steps = steps;
  opt.samples = samples;
  opt.seed = seed;
  return lyapunov_estimate(o, opt);
}

void write_trace_csv(std::ostream& os, const LyapunovEstimate& e) {
  os << "sample,step";
  const std::size_t m = e.lambdas.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (e.full_homology) {
      os << ",nu_" << i + 1;
    } else {
      os << ",lambda_" << i + 2;
    }
  }
  os << '\n';
  const auto old = os.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& row : e.trace) {
    os << row.sample << ',' << row.step;
    for (double v : row.running) os << ',' << v;
    os << '\n';
  }
  os.precision(old);
}

}  // namespace kzdisk
