#include <catch_amalgamated.hpp>

#include <random>

#include "hilbdiag/borel.hpp"
#include "hilbdiag/tangent.hpp"

using namespace hilbdiag;

TEST_CASE("chain ideal generators", "[tangent]") {
  Shape s{2, 3};
  CHECK(chain_ideal(2, 3) == MonomialIdeal(s, {Monomial::of(s, {{1, 1}, {2, 2}}), Monomial::of(s, {{1, 1}, {2, 3}}),
                                                Monomial::of(s, {{1, 2}, {2, 3}})}));
  Shape t{2, 2};
  CHECK(chain_ideal(2, 2) == MonomialIdeal(t, {Monomial::of(t, {{1, 1}, {2, 2}})}));
  CHECK(chain_ideal(3, 3).size() == 9);
  CHECK(chain_ideal(4, 2).size() == 6);
}

TEST_CASE("tangent dimension at the chain ideal", "[tangent]") {
  for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {2, 4}}) {
    INFO("d=" << d << " n=" << n);
    CHECK(tangent_dimension(chain_ideal(d, n)) == static_cast<size_t>((d * d - 1) * (n - 1)));
  }
}

TEST_CASE("tangent dimension at the star ideal", "[tangent]") {
  for (int n = 3; n <= 5; ++n) CHECK(tangent_dimension(build_z(2, n)) == static_cast<size_t>(n * (n - 1)));
  // for n = 2 the star is a path with a bivalent center
  CHECK(tangent_dimension(build_z(2, 2)) == 3);
  // Z(3,3) is the planar class with the largest stabilizer
  CHECK(tangent_dimension(build_z(3, 3)) == 18);
}

TEST_CASE("single generator has no syzygies", "[tangent]") {
  Shape s{2, 2};
  MonomialIdeal I(s, {Monomial::of(s, {{1, 1}, {1, 2}})});
  TangentSystem sys(I);
  CHECK(sys.unknown_count() == 3);
  CHECK(sys.rows().empty());
  CHECK(sys.dimension() == 3);
}

TEST_CASE("component count agrees with Gaussian elimination", "[tangent][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2), n = 2 + static_cast<int>(rng() % 2);
    Shape s{d, n};
    std::vector<std::uint64_t> masks;
    for (int k = 0; k < 4; ++k) {
      std::uint64_t m = (rng() & rng()) & full_mask(s);
      if (m) masks.push_back(m);
    }
    if (masks.empty()) continue;
    TangentSystem sys(MonomialIdeal::from_masks(s, masks));
    CHECK(sys.dimension() == sys.dimension_by_elimination());
  }
  TangentSystem chain33(chain_ideal(3, 3));
  CHECK(chain33.dimension_by_elimination() == 16);
}

TEST_CASE("explicit basis at the chain ideal", "[tangent]") {
  CHECK(chain_basis(2, 2).size() == 3);
  CHECK(chain_basis(3, 3).size() == 16);
  for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {3, 4}}) {
    INFO("d=" << d << " n=" << n);
    auto basis = chain_basis(d, n);
    CHECK(basis.size() == static_cast<size_t>((d * d - 1) * (n - 1)));
    auto res = verify_basis(chain_ideal(d, n), basis);
    INFO(res.message);
    CHECK(res.ok());
    CHECK(res.rank == basis.size());
  }
  auto res = verify_basis(chain_ideal(2, 3), chain_basis(2, 3));
  CHECK(res.rank == 6);
}

TEST_CASE("basis verification catches bad input", "[tangent]") {
  auto basis = chain_basis(3, 3);
  SECTION("missing map") {
    basis.pop_back();
    auto res = verify_basis(chain_ideal(3, 3), basis);
    CHECK(res.well_defined);
    CHECK_FALSE(res.spanning);
  }
  SECTION("duplicate map") {
    basis.push_back(basis.front());
    auto res = verify_basis(chain_ideal(3, 3), basis);
    CHECK_FALSE(res.independent);
  }
  SECTION("map violating a syzygy") {
    // a map with several images, restricted to fewer generators, is not a homomorphism
    auto it = std::find_if(basis.begin(), basis.end(), [](const GradedHom& h) { return h.images.size() > 1; });
    REQUIRE(it != basis.end());
    auto phi = *it;
    phi.images.erase(phi.images.begin());
    auto res = verify_basis(chain_ideal(3, 3), {phi});
    CHECK_FALSE(res.well_defined);
  }
  SECTION("image outside the standard monomials") {
    Shape s{2, 2};
    GradedHom phi{"bad", {}};
    phi.images[Monomial::of(s, {{1, 1}, {2, 2}})][Monomial::of(s, {{1, 1}, {2, 2}})] = 1;
    auto res = verify_basis(chain_ideal(2, 2), {phi});
    CHECK_FALSE(res.well_defined);
  }
  SECTION("empty set against a zero-dimensional system") {
    Shape s{1, 2};
    MonomialIdeal I(s, {Monomial::of(s, {{1, 1}})});
    // x11 maps into (K[X]/I) in degree (1,0), which is zero
    CHECK(tangent_dimension(I) == 0);
    CHECK(verify_basis(I, {}).ok());
    CHECK_FALSE(verify_basis(chain_ideal(2, 2), {}).ok());
  }
}
