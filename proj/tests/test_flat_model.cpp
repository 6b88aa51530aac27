#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "kzdisk/flat_model.hpp"
#include "kzdisk/search.hpp"
#include "oracles.hpp"

using namespace kzdisk;

namespace {

std::vector<CoverParams> all_valid(int n_max) {
  std::vector<CoverParams> out;
  for (int n = 2; n <= n_max; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        for (int c = 1; c < n; ++c) {
          const int d = ((-(a + b + c)) % n + n) % n;
          if (d == 0) continue;
          try {
            out.push_back(validate_params(n, {a, b, c, d}));
          } catch (const CoverError&) {
          }
        }
      }
    }
  }
  return out;
}

Permutation random_permutation(int d, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

Origami random_origami(int d, std::mt19937& rng) {
  for (;;) {
    auto r = random_permutation(d, rng);
    auto u = random_permutation(d, rng);
    if (is_transitive(r, u)) return Origami(std::move(r), std::move(u));
  }
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

TEST_CASE("pillow complex of the genus 4 cover") {
  const auto c = build_cover_complex(validate_params(6, {1, 1, 1, 3}));
  CHECK(c.squares() == 12);
  CHECK(gluings_consistent(c));
  CHECK(complex_genus(c) == 4);
  const auto sig = stratum_signature(c);
  CHECK(sig.quadratic_orders == std::vector<int>{4, 4, 4});
  REQUIRE(sig.abelian_orders.has_value());
  CHECK(*sig.abelian_orders == std::vector<int>{2, 2, 2});
}

TEST_CASE("pillow complex of the genus 3 cover") {
  const auto c = build_cover_complex(validate_params(4, {1, 1, 1, 1}));
  const auto sig = stratum_signature(c);
  CHECK(sig.quadratic_orders == std::vector<int>{2, 2, 2, 2});
  REQUIRE(sig.abelian_orders.has_value());
  CHECK(*sig.abelian_orders == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("non-orientable complex") {
  const auto c = build_cover_complex(validate_params(3, {1, 1, 2, 2}));
  CHECK_FALSE(holonomy_orientable(c));
  CHECK_FALSE(orientation_coloring(c).has_value());
  CHECK_FALSE(stratum_signature(c).abelian_orders.has_value());
  CHECK(stratum_signature(c).quadratic_orders == std::vector<int>{1, 1, 1, 1});
  CHECK_THROWS_AS(to_origami(c), DomainError);
}

TEST_CASE("property: flat model invariants for every cover up to N = 12") {
  for (const auto& p : all_valid(12)) {
    const auto c = build_cover_complex(p);
    const int g = genus(p);
    REQUIRE(gluings_consistent(c));
    CHECK(complex_genus(c) == g);
    for (int mu = 0; mu < 4; ++mu) CHECK(loop_monodromy(c, mu) == p.exponent(mu));

    int corners = 0;
    for (const auto& v : complex_vertices(c)) corners += v.corners;
    CHECK(corners == 4 * c.squares());

    const auto sig = stratum_signature(c);
    CHECK(sum(sig.quadratic_orders) == 4 * g - 4);
    const bool orientable = square_root_index(p).has_value();
    CHECK(holonomy_orientable(c) == orientable);
    CHECK(sig.abelian_orders.has_value() == orientable);
    if (orientable) CHECK(sum(*sig.abelian_orders) == 2 * g - 2);
  }
}

TEST_CASE("property: origami of an orientable cover") {
  for (const auto& p : all_valid(12)) {
    if (!square_root_index(p)) continue;
    const auto c = build_cover_complex(p);
    for (bool flip : {false, true}) {
      const auto o = to_origami(c, flip);
      CHECK(o.squares() == 2 * p.degree());
      CHECK(origami_genus(o) == genus(p));
      CHECK(origami_stratum(o) == *stratum_signature(c).abelian_orders);
      CHECK(deck_check(o, p.degree()));
      CHECK(oracle::homology_rank(o.right().images(), o.up().images()) == 2 * genus(p));
    }
  }
}

TEST_CASE("deck_check rejects a broken deck") {
  const auto o = to_origami(build_cover_complex(validate_params(6, {1, 1, 1, 3})));
  CHECK(deck_check(o, 6));
  CHECK_FALSE(deck_check(o.with_deck(Permutation::identity(o.squares())), 6));
  CHECK_FALSE(deck_check(o, 3));
}

TEST_CASE("origami basics") {
  const Origami torus(Permutation({0}), Permutation({0}));
  CHECK(origami_genus(torus) == 1);
  CHECK(origami_stratum(torus).empty());
  const Origami l3(Permutation({1, 0, 2}), Permutation({2, 1, 0}));
  CHECK(origami_genus(l3) == 2);
  CHECK(origami_stratum(l3) == std::vector<int>{2});
  CHECK_THROWS_AS(Origami(Permutation({0, 1}), Permutation({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Origami(Permutation({0}), Permutation({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
}

TEST_CASE("property: canonical form agrees with exhaustive conjugacy") {
  std::mt19937 rng(17);
  for (int t = 0; t < 300; ++t) {
    const int d = 1 + static_cast<int>(rng() % 6);
    const auto a = random_origami(d, rng);
    const auto b = random_origami(d, rng);
    const bool conj = oracle::brute_force_conjugate(a.right().images(), a.up().images(), b.right().images(),
                                                    b.up().images());
    CHECK(equivalent(a, b) == conj);
    const auto ca = canonical_form(a);
    const auto cb = canonical_form(b);
    CHECK((ca.origami.right() == cb.origami.right() && ca.origami.up() == cb.origami.up()) == conj);

    // relabelled copy has the same canonical form, and relabel really conjugates
    const auto p = random_permutation(d, rng);
    const Origami moved(p * a.right() * p.inverse(), p * a.up() * p.inverse());
    CHECK(canonical_form(moved).origami.right() == ca.origami.right());
    CHECK(canonical_form(moved).origami.up() == ca.origami.up());
    CHECK(ca.relabel * a.right() * ca.relabel.inverse() == ca.origami.right());
    CHECK(ca.relabel * a.up() * ca.relabel.inverse() == ca.origami.up());
  }
}

TEST_CASE("property: translation automorphisms commute with both permutations") {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto o = random_origami(1 + static_cast<int>(rng() % 7), rng);
    const auto autos = translation_automorphisms(o);
    CHECK(std::find(autos.begin(), autos.end(), Permutation::identity(o.squares())) != autos.end());
    for (const auto& phi : autos) {
      CHECK(phi * o.right() == o.right() * phi);
      CHECK(phi * o.up() == o.up() * phi);
      CHECK(classify_automorphism(o, phi) == AutomorphismKind::Translation);
    }
  }
}

TEST_CASE("origami text round trip") {
  const auto o = to_origami(build_cover_complex(validate_params(6, {1, 1, 1, 3})));
  const auto text = serialize(o);
  CHECK(parse_origami(text) == o);
  CHECK(parse_origami("# comment\n" + text) == o);
  CHECK_THROWS_AS(parse_origami("3\n(1,2)\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_origami("two\n()\n()\n()\n"), std::invalid_argument);

  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto r = random_origami(1 + static_cast<int>(rng() % 9), rng);
    CHECK(parse_origami(serialize(r)) == r);
  }
}

TEST_CASE("permutation cycle strings") {
  const Permutation p({1, 2, 0, 3});
  CHECK(p.to_cycle_string() == "(1,2,3)");
  CHECK(Permutation::parse_cycles("(1,2,3)", 4) == p);
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK(p.order() == 3);
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,5)", 4), std::invalid_argument);
}
