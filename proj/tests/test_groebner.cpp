#include <catch_amalgamated.hpp>

#include <random>

#include "hilbdiag/deligne.hpp"

using namespace hilbdiag;

namespace {

RatPoly x(Shape s, int i, int j, int aux = 0) { return RatPoly::grid_var(s, aux, i, j); }

MonomialIdeal chain(int d, int n) {
  Shape s{d, n};
  std::vector<Monomial> gens;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) gens.push_back(Monomial::of(s, {{i, k}, {j, l}}));
  return MonomialIdeal(s, gens);
}

// S-polynomial under ord, computed with RatPoly arithmetic only.
RatPoly s_poly(const RatPoly& f, const RatPoly& g, const TermOrder& ord) {
  auto lf = leading_term(f, ord), lg = leading_term(g, ord);
  Exponents l(lf.exponents.size());
  for (size_t i = 0; i < l.size(); ++i) l[i] = std::max(lf.exponents[i], lg.exponents[i]);
  auto mono = [&](const Exponents& e, const Rational& c) {
    RatPoly m(f.shape(), f.aux());
    m.add_term(e, c);
    return m;
  };
  Exponents a(l.size()), b(l.size());
  for (size_t i = 0; i < l.size(); ++i) {
    a[i] = l[i] - lf.exponents[i];
    b[i] = l[i] - lg.exponents[i];
  }
  return mono(a, 1 / lf.coefficient) * f - mono(b, 1 / lg.coefficient) * g;
}

void require_reduced_gb(const std::vector<RatPoly>& gb, const TermOrder& ord) {
  for (size_t i = 0; i < gb.size(); ++i) {
    auto lt = leading_term(gb[i], ord);
    CHECK(lt.coefficient == 1);
    for (size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      auto other = leading_term(gb[j], ord).exponents;
      for (const auto& [e, c] : gb[i].terms()) CHECK_FALSE(gb_detail::divides(other, e));
      if (j > i) CHECK(normal_form(s_poly(gb[i], gb[j], ord), gb, ord).is_zero());
    }
  }
}

RatPoly random_poly(Shape s, std::mt19937_64& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-5, 5), var(0, s.nvars() - 1), deg(1, maxdeg);
  RatPoly p(s);
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<size_t>(s.nvars()), 0);
    int k = deg(rng);
    for (int i = 0; i < k; ++i) ++e[static_cast<size_t>(var(rng))];
    p.add_term(e, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic", "[groebner]") {
  Shape s{2, 2};
  auto a = x(s, 1, 1) + x(s, 2, 1);
  CHECK((a * a).to_string() == "x11^2 + 2*x11*x21 + x21^2");
  CHECK((a - a).is_zero());
  auto z = RatPoly::aux_var(s, 1, 0);
  auto p = z * z * x(s, 1, 1, 1) + z * x(s, 1, 2, 1);
  CHECK(p.strip_power(s.nvars()) == z * x(s, 1, 1, 1) + x(s, 1, 2, 1));
  CHECK(p.evaluate(s.nvars(), 0).is_zero());
  CHECK_THROWS_AS(p.with_aux(0), Error);
  CHECK(x(s, 1, 1).multidegree() == Multidegree{1, 0});
  CHECK_THROWS_AS((x(s, 1, 1) + x(s, 1, 2)).multidegree(), Error);
}

TEST_CASE("parsing polynomials in z", "[groebner]") {
  CHECK(parse_zpoly("z^2-3/2*z") == ZPoly{0, Rational(-3, 2), 1});
  CHECK(parse_zpoly("2") == ZPoly{2});
  CHECK(parse_zpoly("-z") == ZPoly{0, -1});
  CHECK(parse_zpoly("(1/3)z^4 + 1") == ZPoly{1, 0, 0, 0, Rational(1, 3)});
  CHECK(parse_zpoly("z - z").empty());
  CHECK_THROWS_AS(parse_zpoly("z^"), Error);
  CHECK_THROWS_AS(parse_zpoly("2 3"), Error);
  CHECK_THROWS_AS(parse_zpoly("y"), Error);
  CHECK_THROWS_WITH(parse_zpoly("z+*"), Catch::Matchers::ContainsSubstring("column"));
}

TEST_CASE("minors of the generic matrix", "[groebner]") {
  CHECK(minors_ideal(2, 2).size() == 1);
  CHECK(minors_ideal(2, 2)[0].to_string() == "x11*x22 - x12*x21");
  CHECK(minors_ideal(2, 3).size() == 3);
  CHECK(minors_ideal(3, 3).size() == 9);
  CHECK(minors_ideal(1, 4).empty());
}

TEST_CASE("Buchberger basics", "[groebner]") {
  Shape s{2, 2};
  auto f = x(s, 1, 1) * 3 - x(s, 2, 2) * 6;
  auto gb = buchberger({f}, TermOrder::lex());
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == x(s, 1, 1) - x(s, 2, 2) * 2);
  CHECK(buchberger({}, TermOrder::lex()).empty());
  // the unit ideal
  auto one = buchberger({x(s, 1, 1), x(s, 1, 1) + RatPoly::constant(s, 0, 1)}, TermOrder::lex());
  REQUIRE(one.size() == 1);
  CHECK(one[0] == RatPoly::constant(s, 0, 1));
}

TEST_CASE("lex initial ideal of the minors is the chain ideal", "[groebner]") {
  for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 2}}) {
    INFO("d=" << d << " n=" << n);
    auto res = initial_ideal(minors_ideal(d, n), TermOrder::lex());
    CHECK(res.ideal == chain(d, n));
  }
}

TEST_CASE("reduced Groebner bases satisfy Buchberger's criterion", "[groebner][property]") {
  std::mt19937_64 rng(7);
  Shape s{2, 2};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RatPoly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(s, rng, 3, 2));
    for (const auto& ord : {TermOrder::lex(), TermOrder::deglex(4), TermOrder::graded_weight(4, {{3, -1, 4, 1}})}) {
      auto gb = buchberger(gens, ord);
      require_reduced_gb(gb, ord);
      for (const auto& g : gens) CHECK(ideal_contains(gb, g, ord));
      // the basis does not depend on the generator order
      auto rev = gens;
      std::reverse(rev.begin(), rev.end());
      CHECK(buchberger(rev, ord) == gb);
    }
  }
}

TEST_CASE("intersection of ideals", "[groebner]") {
  Shape s{2, 2};
  auto I = std::vector<RatPoly>{x(s, 1, 1)};
  auto J = std::vector<RatPoly>{x(s, 1, 2)};
  auto K = intersect(I, J);
  auto gb = buchberger(K, TermOrder::deglex(4));
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == x(s, 1, 1) * x(s, 1, 2));

  auto minors = minors_ideal(2, 3);
  CHECK(same_ideal(intersect(minors, minors), minors, TermOrder::deglex(6)));

  // monomial intersection agrees with the lcm rule
  Shape t{2, 3};
  MonomialIdeal A(t, {Monomial::of(t, {{1, 1}, {1, 2}}), Monomial::of(t, {{2, 3}})});
  MonomialIdeal B(t, {Monomial::of(t, {{1, 2}}), Monomial::of(t, {{2, 1}, {2, 3}})});
  auto C = initial_ideal(intersect(monomial_generators(A), monomial_generators(B)), TermOrder::deglex(6));
  CHECK(C.ideal == intersect(A, B));
}

TEST_CASE("saturation by z", "[groebner]") {
  Shape s{2, 2};
  auto z = RatPoly::aux_var(s, 1, 0);
  auto m = x(s, 1, 1, 1) * x(s, 2, 2, 1) - x(s, 2, 1, 1) * x(s, 1, 2, 1);
  SECTION("already saturated") {
    auto f = z * x(s, 1, 1, 1) * x(s, 2, 2, 1) - x(s, 2, 1, 1) * x(s, 1, 2, 1);
    auto sat = saturate_z({f});
    REQUIRE(sat.size() == 1);
    CHECK(sat[0] == f);
  }
  SECTION("z times the minor") {
    auto sat = saturate_z({z * m});
    REQUIRE(sat.size() == 1);
    CHECK(sat[0] == m);
  }
  SECTION("hidden z-torsion") {
    // z*x21 lies in L and x11 - z*x12 does too, so x21 is in the saturation only
    auto a = x(s, 1, 1, 1) - z * x(s, 1, 2, 1);
    auto b = z * x(s, 2, 1, 1);
    auto sat = saturate_z({a, b});
    auto ord = TermOrder::deglex(5);
    CHECK(ideal_contains(buchberger(sat, ord), x(s, 2, 1, 1), ord));
    CHECK_FALSE(ideal_contains(buchberger({a, b}, ord), x(s, 2, 1, 1), ord));
    CHECK(ideal_contains(buchberger(sat, ord), a, ord));
  }
  SECTION("no z at all") {
    auto sat = saturate_z({m});
    REQUIRE(sat.size() == 1);
    CHECK(sat[0] == m);
  }
}

TEST_CASE("matrix substitution", "[groebner]") {
  Shape s{2, 2};
  auto minor = minors_ideal(2, 2, 1);
  auto id = MatrixTuple::identity(2, 2);
  CHECK(apply_matrices(id, minor) == minor);

  // Y_1 = diag(z, 1) scales x11
  MatrixTuple Y = MatrixTuple::identity(2, 2);
  Y.mats[0][0][0] = {0, 1};
  auto z = RatPoly::aux_var(s, 1, 0);
  auto out = apply_matrices(Y, minor);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == z * x(s, 1, 1, 1) * x(s, 2, 2, 1) - x(s, 2, 1, 1) * x(s, 1, 2, 1));

  // swapping the rows in one column only breaks the minor; in both it negates it
  MatrixTuple P = MatrixTuple::identity(2, 2);
  P.mats[1] = {{ZPoly{}, ZPoly{1}}, {ZPoly{1}, ZPoly{}}};
  CHECK(apply_matrices(P, minors_ideal(2, 2))[0] == x(s, 1, 1) * x(s, 1, 2) - x(s, 2, 1) * x(s, 2, 2));
  P.mats[0] = P.mats[1];
  CHECK(apply_matrices(P, minors_ideal(2, 2))[0] == -minors_ideal(2, 2)[0]);

  MatrixTuple sing = MatrixTuple::identity(2, 2);
  sing.mats[1][1][1] = {};
  CHECK_THROWS_AS(apply_matrices(sing, minor), Error);
  CHECK_THROWS_AS(MatrixTuple::from_rational({{{1, 2}, {2, 4}}}), Error);
}

TEST_CASE("special fibers by saturation", "[groebner]") {
  Shape s{2, 2};
  SECTION("constant tuple gives the minors back") {
    auto f = special_fiber(MatrixTuple::identity(2, 2));
    CHECK_FALSE(f.monomial);
    REQUIRE(f.basis.size() == 1);
    CHECK(f.basis[0] == minors_ideal(2, 2)[0]);
  }
  SECTION("scaling x11 by z leaves x21*x12") {
    MatrixTuple Y = MatrixTuple::identity(2, 2);
    Y.mats[0][0][0] = {0, 1};
    auto f = special_fiber(Y);
    REQUIRE(f.monomial);
    CHECK(*f.ideal == MonomialIdeal(s, {Monomial::of(s, {{2, 1}, {1, 2}})}));
    CHECK(f.squarefree);
  }
  SECTION("scaling x12 by z leaves x11*x22") {
    MatrixTuple Y = MatrixTuple::identity(2, 2);
    Y.mats[1][0][0] = {0, 1};
    auto f = special_fiber(Y);
    REQUIRE(f.monomial);
    CHECK(*f.ideal == MonomialIdeal(s, {Monomial::of(s, {{1, 1}, {2, 2}})}));
  }
  SECTION("rejects singular input") {
    MatrixTuple Y = MatrixTuple::identity(2, 2);
    Y.mats[0][0][0] = {};
    CHECK_THROWS_AS(special_fiber(Y), Error);
  }
}

TEST_CASE("weight route", "[groebner]") {
  Shape s{2, 2};
  SECTION("identity matrices pick a term of the minor") {
    auto r = weight_initial_route({{0, 0}, {1, 1}}, MatrixTuple::identity(2, 2));
    CHECK_FALSE(r.decisive);
    auto r2 = weight_initial_route({{0, 5}, {3, 1}}, MatrixTuple::identity(2, 2));
    CHECK(r2.decisive);
    // weights: x11 x22 -> 1, x21 x12 -> 8
    CHECK(r2.ideal == MonomialIdeal(s, {Monomial::of(s, {{1, 1}, {2, 2}})}));
  }
  SECTION("generic lower-triangular matrices and rising weights give x11*x12") {
    auto A = MatrixTuple::from_rational({{{2, 0}, {3, 1}}, {{-1, 0}, {5, 4}}});
    auto r = weight_initial_route({{1, 2}, {7, 11}}, A);
    CHECK(r.decisive);
    CHECK(r.ideal == build_z(2, 2));
  }
  SECTION("agrees with the saturation route") {
    std::mt19937_64 rng(99);
    for (int n = 2; n <= 3; ++n)
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<RatMatrix> ms;
        for (int j = 0; j < n; ++j) ms.push_back(random_invertible(2, rng));
        auto A = MatrixTuple::from_rational(ms);
        auto w = random_weights(2, n, rng, 6);
        auto wr = weight_initial_route(w, A);
        if (!wr.decisive) continue;
        auto f = special_fiber(weighted_tuple(A, w));
        REQUIRE(f.monomial);
        CHECK(*f.ideal == wr.ideal);
        CHECK(wr.squarefree);
      }
  }
  SECTION("d=n=3 identity with generic weights") {
    std::mt19937_64 rng(3);
    auto w = random_weights(3, 3, rng, 1000);
    auto r = weight_initial_route(w, MatrixTuple::identity(3, 3));
    REQUIRE(r.decisive);
    CHECK(r.squarefree);
    CHECK(series_equals_diagonal(r.ideal));
  }
}

TEST_CASE("generic initial ideals", "[groebner]") {
  SECTION("d=n=2 lands in one of the four monomial points") {
    Shape s{2, 2};
    std::vector<MonomialIdeal> points;
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) points.push_back(MonomialIdeal(s, {Monomial::of(s, {{a, 1}, {b, 2}})}));
    auto rep = gin_sample(2, 2, 10, 1);
    for (const auto& t : rep.trials) CHECK(std::find(points.begin(), points.end(), t.ideal) != points.end());
    CHECK(rep.all_ok());
  }
  SECTION("d=2, n=3") {
    auto rep = gin_sample(2, 3, 20, 2);
    CHECK(rep.all_ok());
  }
  SECTION("Borel trials reproduce Z") {
    for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
      auto rep = gin_sample(d, n, 3, 5, true);
      CHECK(rep.all_ok());
      for (const auto& t : rep.trials) CHECK(t.equals_z);
    }
  }
  SECTION("trials are reproducible") {
    auto a = gin_trial(3, 3, 42, 7, false);
    auto b = gin_trial(3, 3, 42, 7, false);
    CHECK(a.ideal == b.ideal);
    CHECK(a.weights == b.weights);
  }
}

TEST_CASE("graded piece dimensions", "[groebner]") {
  Shape s{2, 2};
  CHECK(graded_piece_dim({RatPoly(s)}, {1, 1}) == 4);
  CHECK(graded_piece_dim(minors_ideal(2, 2), {1, 1}) == 3);
  CHECK(graded_piece_dim(minors_ideal(2, 2), {2, 2}) == 5);
  CHECK(graded_piece_dim(minors_ideal(3, 3), {1, 1, 1}) == 10);
  CHECK_THROWS_AS(graded_piece_dim({x(s, 1, 1) + x(s, 1, 2)}, {1, 1}), Error);
  CHECK_FALSE(first_hf_mismatch(minors_ideal(3, 3), 4));

  // HF of an ideal equals HF of its initial ideal
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<RatMatrix> ms;
    for (int j = 0; j < 3; ++j) ms.push_back(random_invertible(2, rng));
    auto gens = apply_matrices(MatrixTuple::from_rational(ms), minors_ideal(2, 3));
    auto in = initial_ideal(gens, TermOrder::deglex(6)).ideal;
    for (Multidegree u : {Multidegree{1, 1, 0}, {1, 1, 1}, {2, 1, 1}, {0, 2, 2}})
      CHECK(Integer(graded_piece_dim(gens, u)) == hf_at(in, u));
  }
}

TEST_CASE("Alexander duality", "[groebner]") {
  Shape s{2, 2};
  MonomialIdeal I(s, {Monomial::of(s, {{1, 1}, {1, 2}})});
  CHECK(alexander_dual(I) == MonomialIdeal(s, {Monomial::of(s, {{1, 1}}), Monomial::of(s, {{1, 2}})}));
  CHECK(alexander_dual(alexander_dual(I)) == I);

  auto z = build_z(2, 3);
  auto dual = alexander_dual(z);
  Shape t{2, 3};
  auto x1 = [&](int j) { return Monomial::of(t, {{1, j}}); };
  CHECK(dual == MonomialIdeal(t, {x1(1) * x1(2), x1(1) * x1(3), x1(2) * x1(3)}));
  CHECK(alexander_dual(build_z(3, 3)).size() == stanley_reisner(build_z(3, 3)).facets.size());
  for (int d = 2; d <= 3; ++d)
    for (int n = 2; n <= 4; ++n) CHECK(alexander_dual(alexander_dual(build_z(d, n))) == build_z(d, n));
  CHECK_THROWS_AS(alexander_dual(MonomialIdeal(s, {Monomial::of(s, {{1, 1}, {1, 1}})})), Error);
}
