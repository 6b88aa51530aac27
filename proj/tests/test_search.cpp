#include <doctest.h>

#include <algorithm>
#include <set>

#include "kzdisk/search.hpp"
#include "oracles.hpp"

using namespace kzdisk;

TEST_CASE("canonicalize picks the smallest tuple") {
  const auto want = validate_params(6, {1, 1, 1, 3});
  CHECK(canonicalize(validate_params(6, {3, 1, 1, 1})) == want);
  CHECK(canonicalize(validate_params(6, {5, 5, 5, 3})) == want);
  CHECK(canonicalize(validate_params(4, {3, 3, 3, 3})) == validate_params(4, {1, 1, 1, 1}));
}

TEST_CASE("property: canonicalize is idempotent and constant on classes") {
  for (int n = 2; n <= 10; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        for (int c = 1; c < n; ++c) {
          const int d = ((-(a + b + c)) % n + n) % n;
          if (d == 0) continue;
          CoverParams p = [&] {
            try {
              return validate_params(n, {a, b, c, d});
            } catch (const CoverError&) {
              return validate_params(2, {1, 1, 1, 1});
            }
          }();
          if (p.degree() != n) continue;
          const auto k = canonicalize(p);
          CHECK(canonicalize(k) == k);
          CHECK(canonicalize(validate_params(n, {d, c, b, a})) == k);
          CHECK(std::is_sorted(k.exponents().begin(), k.exponents().end()));
          CHECK(k <= canonicalize(p));
        }
      }
    }
  }
}

TEST_CASE("enumerate_covers small degrees") {
  const auto two = enumerate_covers(2);
  REQUIRE(two.size() == 1);
  CHECK(two.front() == validate_params(2, {1, 1, 1, 1}));

  const auto three = enumerate_covers(3);
  CHECK(std::find(three.begin(), three.end(), validate_params(3, {1, 1, 2, 2})) != three.end());
  CHECK(std::is_sorted(three.begin(), three.end()));
}

TEST_CASE("enumerate_covers matches the brute-force class list") {
  for (int n_max : {2, 5, 8, 12}) {
    std::set<std::pair<int, std::array<int, 4>>> got;
    for (const auto& p : enumerate_covers(n_max)) got.emplace(p.degree(), p.exponents());
    CHECK(got == oracle::cover_classes(n_max));
  }
  CHECK(enumerate_covers(12).size() == 83);
}

TEST_CASE("for_each_cover stops when asked") {
  int seen = 0;
  for_each_cover(12, [&](const CoverParams&) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("search up to degree 6 finds exactly the two known families") {
  const auto r = run_search(6);
  REQUIRE(r.hits.size() == 2);
  CHECK(r.hits[0].params == validate_params(4, {1, 1, 1, 1}));
  CHECK(r.hits[1].params == validate_params(6, {1, 1, 1, 3}));
  for (const auto& h : r.hits) {
    CHECK(h.report.verdict == Verdict::TotallyDegenerate);
    CHECK_FALSE(h.needs_review);
    CHECK(h.even_cone_orders);
  }
}

TEST_CASE("search up to degree 2 only meets the torus") {
  const auto r = run_search(2);
  CHECK(r.hits.empty());
  CHECK(r.examined == 1);
  CHECK(r.genus_one == 1);
}

TEST_CASE("search to degree 12 tallies match the class list") {
  const auto r = run_search(12);
  const auto classes = oracle::cover_classes(12);
  CHECK(r.examined == static_cast<int>(classes.size()));
  int nonorientable = 0;
  int torus = 0;
  for (const auto& [n, a] : classes) {
    const auto p = validate_params(n, a);
    if (!square_root_index(p)) {
      ++nonorientable;
    } else if (genus(p) == 1) {
      ++torus;
    }
  }
  CHECK(r.skipped_nonorientable == nonorientable);
  CHECK(r.genus_one == torus);
  CHECK(r.skipped_nonorientable == 60);
  REQUIRE(r.hits.size() == 2);
  for (const auto& h : r.hits) {
    CHECK(h.report.structural_rank == 1);
    CHECK(h.report.genus == genus(h.params));
  }
}

TEST_CASE("property: search result does not depend on the thread count") {
  const auto one = run_search(12, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    const auto r = run_search(12, t);
    CHECK(r.examined == one.examined);
    CHECK(r.skipped_nonorientable == one.skipped_nonorientable);
    CHECK(r.genus_one == one.genus_one);
    REQUIRE(r.hits.size() == one.hits.size());
    for (std::size_t i = 0; i < r.hits.size(); ++i) {
      CHECK(r.hits[i].params == one.hits[i].params);
      CHECK(r.hits[i].report.structural_rank == one.hits[i].report.structural_rank);
    }
  }
}
