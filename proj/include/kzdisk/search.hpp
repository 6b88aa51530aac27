#pragma once

#include <functional>
#include <vector>

#include "kzdisk/cyclic_core.hpp"

namespace kzdisk {

/// Lexicographically smallest exponent tuple over permutations of a and
/// rescalings a -> c*a mod N with gcd(c, N) = 1.
CoverParams canonicalize(const CoverParams& p);

/// One representative per equivalence class, N = 2..n_max, ordered by N and
/// then lexicographically. The callback returns false to stop early.
void for_each_cover(int n_max, const std::function<bool(const CoverParams&)>& visit);
std::vector<CoverParams> enumerate_covers(int n_max);

struct SearchHit {
  CoverParams params;
  RankBoundReport report;
  /// Set for anything beyond the two known totally degenerate families.
  bool needs_review = false;
  /// Every cone angle of the flat model is an even multiple of pi.
  bool even_cone_orders = false;
};

struct SearchReport {
  int n_max = 0;
  int examined = 0;
  int skipped_nonorientable = 0;
  int genus_one = 0;
  std::vector<SearchHit> hits;
};

/// Runs the degeneracy pipeline on every class. Classes are independent, so
/// the work is split over `threads` workers; the result does not depend on it.
SearchReport run_search(int n_max, unsigned threads = 1);

}  // namespace kzdisk
