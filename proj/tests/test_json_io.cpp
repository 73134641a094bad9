#include <catch_amalgamated.hpp>

#include "hilbdiag/json_io.hpp"

using namespace hilbdiag;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("ideal JSON round trip", "[io]") {
  for (auto [d, n] : {std::pair{2, 2}, {2, 4}, {3, 3}, {4, 3}}) {
    auto Z = build_z(d, n);
    auto j = ideal_to_json(Z);
    CHECK(ideal_from_json(j) == Z);
    CHECK(parse_ideal(dump(j)) == Z);
    CHECK(dump(j) == dump(ideal_to_json(ideal_from_json(j))));
  }
  auto j = ideal_to_json(build_z(2, 3));
  CHECK(j.dump() == R"({"d":2,"gens":[[[1,1,1],[1,2,1]],[[1,1,1],[1,3,1]],[[1,2,1],[1,3,1]]],"n":3})");
}

TEST_CASE("exponents and repeated factors", "[io]") {
  auto I = parse_ideal(R"({"d":2,"n":2,"gens":[[[1,1,2],[2,2,1]],[[1,1,1],[1,1,1]]]})");
  Shape s{2, 2};
  CHECK(I == MonomialIdeal(s, {Monomial::of(s, {{1, 1}, {1, 1}})}));
}

TEST_CASE("syntax errors report line and column", "[io]") {
  std::string text = "{\"d\": 2,\n \"n\": 3,\n \"gens\": [[[1,1,1] [2,2,1]]]}";
  CHECK_THROWS_WITH(parse_ideal(text, "bad.json"), ContainsSubstring("bad.json") && ContainsSubstring("line 3") &&
                                                       ContainsSubstring("column"));
}

TEST_CASE("schema errors report the JSON location", "[io]") {
  CHECK_THROWS_WITH(parse_ideal(R"({"d":2,"gens":[]})"), ContainsSubstring("missing key \"n\""));
  CHECK_THROWS_WITH(parse_ideal(R"({"d":2,"n":2,"gens":[[[1,1,1]],[[3,1,1]]]})"),
                    ContainsSubstring("/gens/1/0/0") && ContainsSubstring("row 3"));
  CHECK_THROWS_WITH(parse_ideal(R"({"d":2,"n":2,"gens":[[[1,1]]]})"), ContainsSubstring("/gens/0/0"));
  CHECK_THROWS_WITH(parse_ideal(R"({"d":2,"n":2,"gens":[[[1,"a",1]]]})"), ContainsSubstring("/gens/0/0/1"));
  CHECK_THROWS_WITH(parse_ideal(R"({"d":2,"n":2,"gens":[[[1,1,-1]]]})"), ContainsSubstring("negative"));
  CHECK_THROWS_WITH(parse_ideal(R"([1,2])"), ContainsSubstring("expected an object"));
}

TEST_CASE("matrix tuples over z", "[io]") {
  auto Y = matrices_from_json(Json::parse(R"({"matrices":[[["z^2-3/2*z",0],[1,"z"]],[[1,0],[0,1]]]})"));
  CHECK(Y.d == 2);
  CHECK(Y.n() == 2);
  CHECK(Y.mats[0][0][0] == ZPoly{0, Rational(-3, 2), 1});
  CHECK(!Y.is_constant());
  CHECK(matrices_from_json(matrices_to_json(Y)).mats == Y.mats);
  CHECK_THROWS_WITH(constant_matrices(Y), ContainsSubstring("constant"));
  CHECK_THROWS_WITH(matrices_from_json(Json::parse(R"({"matrices":[[["z^",0],[0,1]]]})")),
                    ContainsSubstring("/matrices/0/0/0"));
  CHECK_THROWS_WITH(matrices_from_json(Json::parse(R"({"matrices":[[[1,1],[1,1]]]})")), ContainsSubstring("singular"));
  CHECK_THROWS_WITH(matrices_from_json(Json::parse(R"({"matrices":[[[1,0],[0,1]],[[1]]]})")),
                    ContainsSubstring("/matrices/1"));
  auto w = weights_from_json(Json::parse(R"({"weights":[[1,2],[3,4]]})"), 2, 2);
  REQUIRE(w);
  CHECK((*w)[1][0] == 3);
}

TEST_CASE("K-polynomial JSON", "[io]") {
  auto j = kpoly_to_json(k_polynomial(build_z(2, 2)));
  CHECK(j.dump() == R"([{"c":1,"u":[0,0]},{"c":-1,"u":[1,1]}])");
}

TEST_CASE("DOT output", "[io]") {
  auto T = enumerate_trees(3).front();
  auto dot = tree_to_dot(T);
  CHECK_THAT(dot, ContainsSubstring("digraph tree {"));
  for (int i = 1; i <= 3; ++i)
    CHECK_THAT(dot, ContainsSubstring("v" + std::to_string(T.tail(i)) + " -> v" + std::to_string(T.head(i)) +
                                      " [label=\"" + std::to_string(i) + "\"]"));
  auto g = moves_graph(3);
  auto gd = moves_graph_to_dot(g);
  size_t swaps = 0;
  for (size_t p = gd.find("label=\"move2\""); p != std::string::npos; p = gd.find("label=\"move2\"", p + 1)) ++swaps;
  for (size_t p = gd.find("label=\"move1+move2\""); p != std::string::npos; p = gd.find("label=\"move1+move2\"", p + 1))
    ++swaps;
  CHECK(swaps == 24);
  CHECK(gd == moves_graph_to_dot(moves_graph(3)));
  auto gj = moves_graph_to_json(g);
  CHECK(gj["trees"].size() == 32);
  CHECK(gj["edges"].size() == g.edges.size());
}

TEST_CASE("tangent maps as JSON", "[io]") {
  auto maps = chain_basis(2, 3);
  Json j = graded_hom_to_json(maps.front());
  CHECK(j["name"] == maps.front().name);
  CHECK(j["images"].is_array());
}
