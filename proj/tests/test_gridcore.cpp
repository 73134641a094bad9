#include <catch_amalgamated.hpp>

#include <random>

#include "hilbdiag/borel.hpp"
#include "hilbdiag/grid.hpp"

using namespace hilbdiag;

namespace {

Monomial mono(Shape s, std::initializer_list<GridVar> vars) { return Monomial::of(s, vars); }

Multidegree md(std::initializer_list<int> v) { return Multidegree(v); }

// Coefficient of t^u in N(t) / prod_j (1 - t_j)^d, expanded directly.
Integer series_coefficient(const KPolynomial& N, int d, const Multidegree& u) {
  Integer total = 0;
  for (const auto& [a, c] : N.terms()) {
    Integer prod = c;
    for (size_t j = 0; j < u.size() && prod != 0; ++j) {
      int gap = u[j] - a[j];
      prod *= gap < 0 ? Integer(0) : binomial(gap + d - 1, d - 1);
    }
    total += prod;
  }
  return total;
}

std::vector<Multidegree> degrees_up_to(int n, int bound) {
  std::vector<Multidegree> out;
  Multidegree u(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == n) {
      out.push_back(u);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      u[static_cast<size_t>(j)] = e;
      self(self, j + 1, left - e);
    }
    u[static_cast<size_t>(j)] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

MonomialIdeal random_squarefree_ideal(Shape s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_int_distribution<std::uint64_t> bitsel(0, full_mask(s));
  std::vector<std::uint64_t> masks;
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    std::uint64_t m = bitsel(rng) & bitsel(rng);
    if (m != 0) masks.push_back(m);
  }
  return MonomialIdeal::from_masks(s, masks);
}

}  // namespace

TEST_CASE("multidegree sums exponents by column", "[gridcore]") {
  Shape s{2, 2};
  CHECK(multidegree(mono(s, {{1, 1}, {2, 2}})) == md({1, 1}));
  CHECK(multidegree(Monomial(s)) == md({0, 0}));
  CHECK(multidegree(mono(s, {{1, 1}, {1, 1}, {1, 2}})) == md({2, 1}));
}

TEST_CASE("Stanley-Reisner facets", "[gridcore]") {
  SECTION("single quadric on the 2x2 grid") {
    Shape s{2, 2};
    MonomialIdeal I(s, {mono(s, {{1, 1}, {1, 2}})});
    auto cx = stanley_reisner(I);
    // faces avoid {x11, x12}: facets {x11, x21, x22} and {x21, x12, x22}
    std::uint64_t x11 = 1u << s.index(1, 1), x12 = 1u << s.index(1, 2), x21 = 1u << s.index(2, 1),
                  x22 = 1u << s.index(2, 2);
    std::vector<std::uint64_t> expected{x11 | x21 | x22, x12 | x21 | x22};
    std::sort(expected.begin(), expected.end());
    CHECK(cx.facets == expected);
    CHECK(ideal_of_complex(cx) == I);
  }
  SECTION("zero ideal is the full simplex") {
    Shape s{1, 2};
    auto cx = stanley_reisner(MonomialIdeal(s));
    REQUIRE(cx.facets.size() == 1);
    CHECK(cx.facets[0] == full_mask(s));
  }
  SECTION("Z for d=2, n=3 has three facets each dropping two of x1, x2, x3") {
    auto cx = stanley_reisner(build_z(2, 3));
    Shape s{2, 3};
    REQUIRE(cx.facets.size() == 3);
    std::uint64_t top = 0;
    for (int j = 1; j <= 3; ++j) top |= std::uint64_t{1} << s.index(1, j);
    for (auto f : cx.facets) {
      CHECK(popcount(f & top) == 1);
      CHECK((f & ~top) == (full_mask(s) & ~top));
    }
  }
  SECTION("non-squarefree input is rejected") {
    Shape s{2, 2};
    MonomialIdeal I(s, {mono(s, {{1, 1}, {1, 1}})});
    CHECK_THROWS_AS(stanley_reisner(I), Error);
  }
}

TEST_CASE("multidegree of squarefree ideals", "[gridcore]") {
  auto z22 = multidegree_of_ideal(build_z(2, 2));
  KPolynomial expected(2);
  expected.add_term(md({1, 0}), 1);
  expected.add_term(md({0, 1}), 1);
  CHECK(z22 == expected);
  CHECK(multidegree_of_ideal(MonomialIdeal(Shape{2, 3})) == KPolynomial::one(3));

  for (int d = 1; d <= 5; ++d)
    for (int n = 1; n <= 5; ++n) {
      KPolynomial sum_u(n);
      for (const auto& u : u_set(d, n).vectors) sum_u.add_term(u, 1);
      INFO("d=" << d << " n=" << n);
      CHECK(multidegree_of_ideal(build_z(d, n)) == sum_u);
    }
  auto z33 = multidegree_of_ideal(build_z(3, 3));
  CHECK(z33.terms().size() == 6);
}

TEST_CASE("K-polynomial examples", "[gridcore]") {
  CHECK(k_polynomial(MonomialIdeal(Shape{1, 1})) == KPolynomial::one(1));

  Shape s{2, 2};
  MonomialIdeal I(s, {mono(s, {{1, 1}, {1, 2}})});
  KPolynomial expected = KPolynomial::one(2);
  expected.add_term(md({1, 1}), -1);
  CHECK(k_polynomial(I) == expected);
  // cross-check by counting standard monomials up to degree (3,3)
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) CHECK(hf_at(I, md({a, b})) == series_coefficient(expected, 2, md({a, b})));

  Shape s23{2, 3};
  MonomialIdeal chain(s23, {mono(s23, {{1, 1}, {2, 2}}), mono(s23, {{1, 1}, {2, 3}}), mono(s23, {{1, 2}, {2, 3}})});
  CHECK(k_polynomial(build_z(2, 3)) == k_polynomial(chain));
}

TEST_CASE("Hilbert function values", "[gridcore]") {
  CHECK(hf_at(build_z(2, 2), md({1, 1})) == 3);
  CHECK(hf_at(build_z(3, 3), md({0, 0, 0})) == 1);
  CHECK(hf_at(MonomialIdeal(Shape{2, 3}), md({0, 0, 0})) == 1);
  CHECK(hf_at(build_z(3, 3), md({1, 1, 0})) == 6);
  CHECK(target_hf(2, md({1, 1, 1})) == 4);
  CHECK(target_hf(3, md({0, 0, 0})) == 1);
  CHECK(target_hf(3, md({2, 2, 2})) == 28);
}

TEST_CASE("series comparison certifies membership", "[gridcore]") {
  CHECK(series_equals_diagonal(build_z(2, 3)));
  Shape s33{3, 3};
  std::vector<Monomial> chain;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = k + 1; l <= 3; ++l) chain.push_back(mono(s33, {{i, k}, {j, l}}));
  CHECK(series_equals_diagonal(MonomialIdeal(s33, chain)));
  Shape s22{2, 2};
  CHECK_FALSE(series_equals_diagonal(MonomialIdeal(s22, {mono(s22, {{1, 1}})})));
}

TEST_CASE("diagonal K-polynomial agrees with Z's face sum", "[gridcore]") {
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 4; ++n) {
      INFO("d=" << d << " n=" << n);
      CHECK(diagonal_k_polynomial(d, n) == k_polynomial(build_z(d, n)));
    }
}

TEST_CASE("face-sum series matches standard monomial counts", "[gridcore][property]") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 3);
    Shape s{d, n};
    auto I = random_squarefree_ideal(s, rng);
    auto N = k_polynomial(I);
    for (const auto& u : degrees_up_to(n, 4)) {
      INFO(I.to_string() << " at degree index " << total_degree(u));
      CHECK(hf_at(I, u) == series_coefficient(N, d, u));
    }
  }
}
