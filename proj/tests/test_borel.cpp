#include <catch_amalgamated.hpp>

#include "hilbdiag/borel.hpp"

using namespace hilbdiag;

namespace {

std::uint64_t bit(Shape s, int row, int col) { return std::uint64_t{1} << s.index(row, col); }

}  // namespace

TEST_CASE("the index set U", "[borel]") {
  auto U = u_set(2, 3);
  CHECK(U.vectors == std::vector<Multidegree>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(u_set(1, 4).vectors == std::vector<Multidegree>{{0, 0, 0, 0}});
  CHECK(u_set(3, 3).vectors.size() == 6);
  for (int d = 1; d <= 5; ++d)
    for (int n = 1; n <= 5; ++n) CHECK(Integer(u_set(d, n).vectors.size()) == binomial(d + n - 2, d - 1));
}

TEST_CASE("coordinate primes Z_u", "[borel]") {
  Shape s23{2, 3};
  CHECK(z_u(2, 3, {0, 1, 1}) == MonomialIdeal(s23, {Monomial::of(s23, {{1, 2}}), Monomial::of(s23, {{1, 3}})}));
  CHECK(z_u(1, 2, {0, 0}).is_zero());
  Shape s33{3, 3};
  CHECK(z_u(3, 3, {1, 1, 2}) ==
        MonomialIdeal(s33, {Monomial::of(s33, {{1, 1}}), Monomial::of(s33, {{1, 2}}), Monomial::of(s33, {{1, 3}}),
                            Monomial::of(s33, {{2, 3}})}));
  CHECK_THROWS_AS(z_u(2, 3, {1, 1, 1}), Error);
  for (const auto& u : u_set(3, 4).vectors) CHECK(z_u(3, 4, u).size() == 3 * 2);
}

TEST_CASE("Z by intersection", "[borel]") {
  Shape s23{2, 3};
  auto x = [&](int j) { return Monomial::of(s23, {{1, j}}); };
  CHECK(build_z(2, 3) == MonomialIdeal(s23, {x(1) * x(2), x(1) * x(3), x(2) * x(3)}));
  Shape s22{2, 2};
  CHECK(build_z(2, 2) == MonomialIdeal(s22, {Monomial::of(s22, {{1, 1}, {1, 2}})}));
  CHECK(build_z(3, 3).size() == 10);
}

TEST_CASE("Z from the index description", "[borel]") {
  CHECK(z_generators_direct(2, 3) == build_z(2, 3));
  auto z33 = z_generators_direct(3, 3);
  Shape s{3, 3};
  CHECK(z33.size() == 10);
  int quadrics = 0;
  for (const auto& g : z33.gens()) quadrics += g.degree() == 2;
  CHECK(quadrics == 9);
  CHECK(z33.contains(Monomial::of(s, {{2, 1}, {2, 2}, {2, 3}})));
  CHECK(z_generators_direct(1, 4).is_zero());

  for (int d = 1; d <= 5; ++d)
    for (int n = 1; n <= 5; ++n) {
      INFO("d=" << d << " n=" << n);
      auto z = build_z(d, n);
      CHECK(z_generators_direct(d, n) == z);
      CHECK(z.is_squarefree());
      CHECK(is_borel_fixed(z));
      if (d >= 2 && n >= 2) CHECK(z.max_generator_degree() == std::min(d, n));
    }
}

TEST_CASE("Borel-fixedness detects non-stable ideals", "[borel]") {
  Shape s{2, 2};
  // x21*x22 is present but x11*x22 is not
  MonomialIdeal I(s, {Monomial::of(s, {{2, 1}, {2, 2}})});
  CHECK_FALSE(is_borel_fixed(I));
}

TEST_CASE("shelling of Z's complex", "[borel]") {
  SECTION("d=n=2") {
    auto rep = shelling(2, 2);
    Shape s{2, 2};
    REQUIRE(rep.valid);
    REQUIRE(rep.steps.size() == 2);
    CHECK(rep.steps[0].u == Multidegree{0, 1});
    CHECK(rep.steps[0].eta == 0);
    CHECK(rep.steps[1].u == Multidegree{1, 0});
    CHECK(rep.steps[1].eta == bit(s, 1, 2));
  }
  SECTION("d=1") {
    auto rep = shelling(1, 3);
    REQUIRE(rep.steps.size() == 1);
    CHECK(rep.steps[0].eta == 0);
    CHECK(rep.valid);
  }
  SECTION("d=n=3") {
    auto rep = shelling(3, 3);
    CHECK(rep.valid);
    CHECK(rep.steps.size() == 6);
    CHECK(rep.h_polynomial() == IntPoly{1, 4, 1});
  }
  SECTION("all small grids") {
    for (int d = 1; d <= 5; ++d)
      for (int n = 1; n <= 5; ++n) {
        INFO("d=" << d << " n=" << n);
        auto rep = shelling(d, n);
        CHECK(rep.valid);
        CHECK(rep.h_polynomial() == h_closed_form(d, n));
        // the facets are exactly those of the Stanley-Reisner complex of Z
        std::vector<std::uint64_t> facets;
        for (const auto& st : rep.steps) facets.push_back(st.facet);
        std::sort(facets.begin(), facets.end());
        CHECK(stanley_reisner(build_z(d, n)).facets == facets);
      }
  }
}

TEST_CASE("generic shelling checker", "[borel]") {
  // two triangles glued along an edge, in either order
  std::vector<std::uint64_t> good{0b0111, 0b1110};
  auto r = shelling_restrictions(good);
  REQUIRE(r);
  CHECK((*r)[0] == 0);
  CHECK((*r)[1] == 0b1000);
  // two disjoint edges are not shellable in any order
  CHECK_FALSE(shelling_restrictions({0b0011, 0b1100}));
}

TEST_CASE("closed-form h-polynomial", "[borel]") {
  CHECK(h_closed_form(3, 3) == IntPoly{1, 4, 1});
  CHECK(h_closed_form(1, 5) == IntPoly{1});
  CHECK(h_closed_form(4, 1) == IntPoly{1});
  CHECK(h_closed_form(2, 4) == IntPoly{1, 3});
  for (int d = 1; d <= 5; ++d)
    for (int n = 1; n <= 5; ++n) {
      Integer at_one = 0;
      for (const auto& c : h_closed_form(d, n)) at_one += c;
      CHECK(at_one == binomial(n + d - 2, d - 1));
    }
}

TEST_CASE("Z has the diagonal's Hilbert function", "[borel]") {
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 4; ++n) {
      auto z = build_z(d, n);
      CHECK(series_equals_diagonal(z));
      // N(z) = h(z) (1 - z)^{dn - n - d + 1}
      CHECK(k_polynomial(z).specialize() == multiply(h_closed_form(d, n), one_minus_z_pow(d * n - n - d + 1)));
    }
}
