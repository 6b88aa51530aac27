#include "kzdisk/search.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "kzdisk/flat_model.hpp"

namespace kzdisk {

CoverParams canonicalize(const CoverParams& p) {
  const int n = p.degree();
  std::optional<std::array<int, 4>> best;
  for (int c = 1; c < n; ++c) {
    if (std::gcd(c, n) != 1) continue;
    std::array<int, 4> scaled{};
    for (std::size_t mu = 0; mu < 4; ++mu) scaled[mu] = (c * p.exponents()[mu]) % n;
    std::sort(scaled.begin(), scaled.end());
    if (!best || scaled < *best) best = scaled;
  }
  return validate_params(n, *best);
}

void for_each_cover(int n_max, const std::function<bool(const CoverParams&)>& visit) {
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  for (int n = 2; n <= n_max; ++n) {
    for (int a1 = 1; a1 < n; ++a1) {
      for (int a2 = a1; a2 < n; ++a2) {
        for (int a3 = a2; a3 < n; ++a3) {
          for (int a4 = a3; a4 < n; ++a4) {
            if ((a1 + a2 + a3 + a4) % n != 0) continue;
            if (std::gcd(std::gcd(std::gcd(std::gcd(n, a1), a2), a3), a4) != 1) continue;
            const CoverParams p = validate_params(n, {a1, a2, a3, a4});
            if (canonicalize(p) != p) continue;
            if (!visit(p)) return;
          }
        }
      }
    }
  }
}

std::vector<CoverParams> enumerate_covers(int n_max) {
  std::vector<CoverParams> out;
  for_each_cover(n_max, [&](const CoverParams& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

namespace {

enum class Outcome { NonOrientable, GenusOne, Inconclusive, Hit };

struct Evaluated {
  Outcome outcome = Outcome::Inconclusive;
  std::optional<SearchHit> hit;
};

bool known_family(const CoverParams& p) {
  return p == validate_params(4, {1, 1, 1, 1}) || p == validate_params(6, {1, 1, 1, 3});
}

Evaluated evaluate(const CoverParams& p) {
  if (!square_root_index(p)) return {Outcome::NonOrientable, std::nullopt};
  if (genus(p) < 2) return {Outcome::GenusOne, std::nullopt};
  const RankBoundReport report = degeneracy_verdict(p);
  if (report.verdict != Verdict::TotallyDegenerate) return {Outcome::Inconclusive, std::nullopt};

  SearchHit hit{p, report, !known_family(p), false};
  const auto sig = stratum_signature(build_cover_complex(p));
  hit.even_cone_orders = std::all_of(sig.quadratic_orders.begin(), sig.quadratic_orders.end(),
                                     [](int k) { return k % 2 == 0; });
  return {Outcome::Hit, std::move(hit)};
}

}  // namespace

SearchReport run_search(int n_max, unsigned threads) {
  const auto covers = enumerate_covers(n_max);
  std::vector<Evaluated> results(covers.size());

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(covers.size())));
  // Strided assignment; results land at fixed indices so the merge below is
  // independent of scheduling.
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < covers.size(); i += threads) results[i] = evaluate(covers[i]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  SearchReport report;
  report.n_max = n_max;
  report.examined = static_cast<int>(covers.size());
  for (auto& r : results) {
    switch (r.outcome) {
      case Outcome::NonOrientable: ++report.skipped_nonorientable; break;
      case Outcome::GenusOne: ++report.genus_one; break;
      case Outcome::Inconclusive: break;
      case Outcome::Hit: report.hits.push_back(std::move(*r.hit)); break;
    }
  }
  return report;
}

}  // namespace kzdisk
