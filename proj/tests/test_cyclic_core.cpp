#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "kzdisk/cyclic_core.hpp"
#include "oracles.hpp"

using namespace kzdisk;

namespace {

std::vector<CoverParams> all_valid(int n_max) {
  std::vector<CoverParams> out;
  for (int n = 2; n <= n_max; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        for (int c = 1; c < n; ++c) {
          for (int d = 1; d < n; ++d) {
            try {
              out.push_back(validate_params(n, {a, b, c, d}));
            } catch (const CoverError&) {
            }
          }
        }
      }
    }
  }
  return out;
}

CoverErrorCode code_of(int n, std::array<int, 4> a) {
  try {
    validate_params(n, a);
  } catch (const CoverError& e) {
    return e.code();
  }
  FAIL("expected a CoverError");
  return CoverErrorCode::DegreeTooSmall;
}

}  // namespace

TEST_CASE("validate_params accepts the two known families and rejects bad sums") {
  CHECK(validate_params(6, {1, 1, 1, 3}).to_string() == "6:1,1,1,3");
  CHECK(validate_params(4, {1, 1, 1, 1}).degree() == 4);
  CHECK(code_of(6, {1, 1, 1, 2}) == CoverErrorCode::SumNotDivisible);
  CHECK(code_of(1, {1, 1, 1, 1}) == CoverErrorCode::DegreeTooSmall);
  CHECK(code_of(6, {0, 1, 2, 3}) == CoverErrorCode::ExponentOutOfRange);
  CHECK(code_of(6, {2, 2, 4, 4}) == CoverErrorCode::NotCoprime);
  CHECK(to_string(CoverErrorCode::SumNotDivisible) == "sum_not_divisible");
}

TEST_CASE("parse_cover") {
  CHECK(parse_cover("6:1,1,1,3") == validate_params(6, {1, 1, 1, 3}));
  CHECK_THROWS_AS(parse_cover("6:1,1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cover("six:1,1,1,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cover("6:1,1,1,2"), CoverError);
}

TEST_CASE("genus of the examples") {
  CHECK(genus(validate_params(6, {1, 1, 1, 3})) == 4);
  CHECK(genus(validate_params(4, {1, 1, 1, 1})) == 3);
  CHECK(genus(validate_params(2, {1, 1, 1, 1})) == 1);
}

TEST_CASE("genus agrees with Riemann-Hurwitz for every cover up to N = 12") {
  for (const auto& p : all_valid(12)) {
    CHECK(genus(p) == oracle::riemann_hurwitz_genus(p.degree(), p.exponents()));
  }
}

TEST_CASE("eigenspace dimensions") {
  CHECK(eigenspace_dims(validate_params(6, {1, 1, 1, 3})).dims == std::vector<int>{0, 0, 1, 1, 2});
  CHECK(eigenspace_dims(validate_params(6, {1, 1, 1, 3})).at(1) == 0);
  CHECK(eigenspace_dims(validate_params(4, {1, 1, 1, 1})).dims == std::vector<int>{0, 1, 2});
}

TEST_CASE("property: eigenspace dimensions sum to the genus") {
  for (const auto& p : all_valid(12)) CHECK(eigenspace_dims(p).total() == genus(p));
}

TEST_CASE("square root index") {
  CHECK(square_root_index(validate_params(6, {1, 1, 1, 3})) == 3);
  CHECK(square_root_index(validate_params(4, {1, 1, 1, 1})) == 2);
  CHECK_FALSE(square_root_index(validate_params(3, {1, 1, 2, 2})).has_value());
}

TEST_CASE("property: the square root index is the unique solution of the congruence") {
  for (const auto& p : all_valid(12)) {
    const int n = p.degree();
    std::vector<int> solutions;
    for (int m = 0; m < n; ++m) {
      bool ok = true;
      for (int a : p.exponents()) ok = ok && (2 * m * a) % (2 * n) == n;
      if (ok) solutions.push_back(m);
    }
    CHECK(solutions.size() <= 1);
    const auto m = square_root_index(p);
    CHECK(m.has_value() == !solutions.empty());
    if (m) CHECK(*m == solutions.front());
  }
}

TEST_CASE("spectrum of the deck on square-integrable functions") {
  CHECK(mqplus_spectrum(validate_params(6, {1, 1, 1, 3})).exponents() == std::vector<int>{0, 1, 2, 2});
  CHECK(mqplus_spectrum(validate_params(4, {1, 1, 1, 1})).exponents() == std::vector<int>{0, 1, 1});
  CHECK(mqplus_spectrum(validate_params(2, {1, 1, 1, 1})).exponents() == std::vector<int>{0});
  CHECK_THROWS_AS(mqplus_spectrum(validate_params(3, {1, 1, 2, 2})), DomainError);
}

TEST_CASE("property: the spectrum holds 0 exactly dims[m] times and has genus many entries") {
  for (const auto& p : all_valid(12)) {
    const auto m = square_root_index(p);
    if (!m) continue;
    const auto s = mqplus_spectrum(p);
    CHECK(s.size() == genus(p));
    CHECK(s.exponent(1) == 0);
    const auto zeros = std::count(s.exponents().begin(), s.exponents().end(), 0);
    CHECK(zeros == eigenspace_dims(p).at(*m));
    CHECK(zeros >= 1);
  }
}

TEST_CASE("RootOfUnitySpectrum validation") {
  CHECK_THROWS_AS(RootOfUnitySpectrum(6, {}), std::invalid_argument);
  CHECK_THROWS_AS(RootOfUnitySpectrum(6, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(RootOfUnitySpectrum(6, {0, 6}), std::invalid_argument);
  CHECK(RootOfUnitySpectrum(6, {2, 0, 1, 2}).exponents() == std::vector<int>{0, 1, 2, 2});
}

TEST_CASE("forced zero minors") {
  const RootOfUnitySpectrum s(6, {0, 1, 2, 2});
  const int one[] = {1};
  const int two[] = {2};
  const int three[] = {3};
  const int four[] = {4};
  CHECK_FALSE(forced_zero_minor(s, one, one));
  CHECK(forced_zero_minor(s, two, three));
  CHECK(forced_zero_minor(s, three, four));
  const int dup[] = {1, 1};
  CHECK_THROWS_AS(forced_zero_minor(s, dup, dup), std::invalid_argument);
}

TEST_CASE("property: singleton minors characterize the allowed support") {
  for (const auto& p : all_valid(12)) {
    if (!square_root_index(p)) continue;
    const auto s = mqplus_spectrum(p);
    const auto support = allowed_support(s);
    for (int i = 1; i <= s.size(); ++i) {
      for (int k = 1; k <= s.size(); ++k) {
        const int row[] = {i};
        const int col[] = {k};
        const bool in_support = std::find(support.begin(), support.end(), std::pair{i, k}) != support.end();
        CHECK(in_support == !forced_zero_minor(s, row, col));
      }
    }
  }
}

TEST_CASE("corollary bound is vacuous on the examples") {
  CHECK(corollary_rank_bound(RootOfUnitySpectrum(2, {0})) == 1);
  CHECK(corollary_rank_bound(RootOfUnitySpectrum(6, {0, 1, 2, 2})) == 4);
  CHECK(corollary_rank_bound(RootOfUnitySpectrum(4, {0, 1, 1})) == 3);
  CHECK(full_determinant_forced(RootOfUnitySpectrum(6, {0, 1, 2, 2})));
}

TEST_CASE("structural rank") {
  const auto a = structural_rank_bound(RootOfUnitySpectrum(6, {0, 1, 2, 2}));
  CHECK(a.structural_rank == 1);
  CHECK(a.verdict == Verdict::TotallyDegenerate);
  const auto b = structural_rank_bound(RootOfUnitySpectrum(4, {0, 1, 1}));
  CHECK(b.structural_rank == 1);
  CHECK(b.verdict == Verdict::TotallyDegenerate);
  const auto c = structural_rank_bound(RootOfUnitySpectrum(6, {0, 1, 5}));
  CHECK(c.structural_rank == 3);
  CHECK(c.verdict == Verdict::Inconclusive);
  const int oracle_rank = oracle::random_support_rank(3, oracle::support_of(6, {0, 1, 5}), 1000, 11);
  CHECK(oracle_rank == 3);
}

TEST_CASE("degeneracy verdicts") {
  CHECK(degeneracy_verdict(validate_params(6, {1, 1, 1, 3})).verdict == Verdict::TotallyDegenerate);
  CHECK(degeneracy_verdict(validate_params(4, {1, 1, 1, 1})).verdict == Verdict::TotallyDegenerate);
  const auto r = degeneracy_verdict(validate_params(8, {1, 1, 1, 5}));
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK(r.structural_rank == 3);
  CHECK(mqplus_spectrum(validate_params(8, {1, 1, 1, 5})).exponents() == std::vector<int>{0, 1, 2, 2, 3, 3, 7});
  const auto torus = degeneracy_verdict(validate_params(2, {1, 1, 1, 1}));
  CHECK(torus.verdict == Verdict::TotallyDegenerate);
  CHECK(torus.trivial_torus);
  CHECK_THROWS_AS(degeneracy_verdict(validate_params(3, {1, 1, 2, 2})), DomainError);
}

TEST_CASE("property: structural rank equals the random-matrix rank for every cover of genus <= 8") {
  int checked = 0;
  for (const auto& p : all_valid(12)) {
    if (!square_root_index(p) || genus(p) > 8 || p.exponents() != [&] {
          auto a = p.exponents();
          std::sort(a.begin(), a.end());
          return a;
        }()) {
      continue;
    }
    const auto s = mqplus_spectrum(p);
    const int expected = oracle::random_support_rank(s.size(), oracle::support_of(s.order(), s.exponents()), 1000,
                                                     static_cast<std::uint64_t>(checked) + 1);
    CHECK(structural_rank_bound(s).structural_rank == expected);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("property: structural rank equals the random-matrix rank on random spectra") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int g = 1 + static_cast<int>(rng() % 6);
    std::vector<int> e{0};
    while (static_cast<int>(e.size()) < g) e.push_back(static_cast<int>(rng() % static_cast<unsigned>(n)));
    const RootOfUnitySpectrum s(n, e);
    const int expected = oracle::random_support_rank(g, oracle::support_of(n, s.exponents()), 1000, 100u + t);
    CHECK(structural_rank_bound(s).structural_rank == expected);
  }
}

TEST_CASE("property: verdict is invariant under the equivalence group") {
  for (const auto& p : all_valid(12)) {
    const int n = p.degree();
    auto a = p.exponents();
    std::sort(a.begin(), a.end());
    if (a != p.exponents()) continue;  // one representative per multiset
    const bool orientable = square_root_index(p).has_value();
    const auto base = orientable ? std::optional(degeneracy_verdict(p)) : std::nullopt;
    for (int c = 1; c < n; ++c) {
      if (std::gcd(c, n) != 1) continue;
      std::array<int, 4> b{};
      for (std::size_t i = 0; i < 4; ++i) b[i] = c * a[i] % n;
      std::sort(b.begin(), b.end());
      do {
        const CoverParams q = validate_params(n, b);
        REQUIRE(square_root_index(q).has_value() == orientable);
        if (!orientable) continue;
        const auto r = degeneracy_verdict(q);
        CHECK(r.structural_rank == base->structural_rank);
        CHECK(r.verdict == base->verdict);
      } while (std::next_permutation(b.begin(), b.end()));
    }
  }
}

TEST_CASE("Teichmueller flow spectrum") {
  const double kz[] = {1, 0, 0, 0};
  const auto v = teichmuller_spectrum(kz, 3);
  const std::vector<double> expected{2, 1, 1, 1, 1, 1, 1, 1, 1, 0, -1, -1, -1, -1, -1, -1, -1, -1, -2};
  CHECK(v == expected);

  const double one[] = {1};
  CHECK(teichmuller_spectrum(one, 1) == std::vector<double>{2, 0, -2});
  const double flat[] = {1, 1};
  CHECK(teichmuller_spectrum(flat, 1) == std::vector<double>{2, 2, 0, 0, 0, -2, -2});

  const double bad_top[] = {0.5, 0.2};
  CHECK_THROWS_AS(teichmuller_spectrum(bad_top, 1), std::invalid_argument);
  const double increasing[] = {1, 0.1, 0.3};
  CHECK_THROWS_AS(teichmuller_spectrum(increasing, 1), std::invalid_argument);
  CHECK_THROWS_AS(teichmuller_spectrum(one, 0), std::invalid_argument);
}

TEST_CASE("property: Teichmueller spectrum is symmetric with length 2(2g+sigma-2)+1") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const int g = 1 + static_cast<int>(rng() % 6);
    const int sigma = 1 + static_cast<int>(rng() % 5);
    std::vector<double> kz{1.0};
    for (int i = 1; i < g; ++i) kz.push_back(u(rng));
    std::sort(kz.begin() + 1, kz.end(), std::greater<>());
    const auto v = teichmuller_spectrum(kz, sigma);
    REQUIRE(v.size() == static_cast<std::size_t>(2 * (2 * g + sigma - 2) + 1));
    CHECK(std::is_sorted(v.begin(), v.end(), std::greater<>()));
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == doctest::Approx(-v[v.size() - 1 - i]));
    CHECK(v.front() == 2.0);
  }
}
