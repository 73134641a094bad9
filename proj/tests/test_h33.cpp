#include <catch_amalgamated.hpp>

#include "hilbdiag/borel.hpp"
#include "hilbdiag/h33.hpp"
#include "hilbdiag/tangent.hpp"

using namespace hilbdiag;

namespace {

const std::vector<CellComplex233>& all_complexes() {
  static const auto all = enumerate_h33();
  return all;
}

const ClassReport& classes() {
  static const auto cr = symmetry_classes(all_complexes());
  return cr;
}

std::optional<size_t> locate(const MonomialIdeal& I) {
  const auto& all = all_complexes();
  for (size_t k = 0; k < all.size(); ++k)
    if (complex_to_ideal(all[k]) == I) return k;
  return std::nullopt;
}

}  // namespace

TEST_CASE("scan size and result count", "[h33]") {
  CHECK(h33_candidate_count == 14348907);
  CHECK(all_complexes().size() == 13824);
  CHECK(std::is_sorted(all_complexes().begin(), all_complexes().end(),
                       [](const auto& a, const auto& b) { return a.candidate < b.candidate; }));
}

TEST_CASE("every complex has the required shape", "[h33]") {
  for (const auto& C : all_complexes()) {
    REQUIRE(C.vertex_count() == 10);
    REQUIRE(C.edge_count() == 15);
    CHECK(C.vertex_count() - C.edge_count() + 6 == 1);
    CHECK(C.squares_meet());
    auto I = complex_to_ideal(C);
    CHECK(I.is_squarefree());
    auto sr = stanley_reisner(I);
    CHECK(sr.facets.size() == 6);
    for (auto f : sr.facets) CHECK(popcount(f) == 5);
  }
}

TEST_CASE("every enumerated ideal has the Hilbert series of the diagonal", "[h33]") {
  size_t bad = 0;
  for (const auto& C : all_complexes()) bad += !series_equals_diagonal(complex_to_ideal(C));
  CHECK(bad == 0);
}

TEST_CASE("distinguished ideals are found", "[h33]") {
  CHECK(locate(build_z(3, 3)).has_value());
  CHECK(locate(chain_ideal(3, 3)).has_value());
  // a squarefree ideal outside H(3,3)
  Shape s{3, 3};
  CHECK_FALSE(locate(MonomialIdeal(s, {Monomial::of(s, {{1, 1}})})).has_value());
}

TEST_CASE("symmetry group", "[h33]") {
  auto g = h33_symmetry_group();
  CHECK(g.size() == 1296);
  std::set<std::vector<std::uint64_t>> images;
  for (const auto& e : g) {
    std::vector<std::uint64_t> v;
    for (int k = 0; k < 9; ++k) v.push_back(e.apply(std::uint64_t{1} << k));
    images.insert(v);
  }
  CHECK(images.size() == 1296);
}

TEST_CASE("symmetry classes", "[h33]") {
  const auto& cr = classes();
  CHECK(cr.closed);
  CHECK(cr.classes.size() == 16);
  size_t total = 0;
  for (const auto& c : cr.classes) {
    total += c.orbit();
    CHECK(c.orbit() * c.stabilizer == 1296);
  }
  CHECK(total == 13824);
  auto z = locate(build_z(3, 3));
  REQUIRE(z);
  for (const auto& c : cr.classes)
    if (std::find(c.members.begin(), c.members.end(), *z) != c.members.end()) CHECK(c.stabilizer == 6);
}

TEST_CASE("summary table", "[h33]") {
  auto rep = table1_report(all_complexes(), classes());
  INFO(rep.mismatch);
  CHECK(rep.matches);
  CHECK(std::count_if(rep.entries.begin(), rep.entries.end(), [](const auto& e) { return e.row.planar; }) == 7);
  std::multiset<int> tangents;
  for (const auto& e : rep.entries) tangents.insert(e.row.tangent);
  CHECK(tangents == std::multiset<int>{14, 14, 15, 16, 16, 16, 16, 16, 17, 17, 18, 18, 18, 18, 18, 18});
  auto z = locate(build_z(3, 3));
  // Z lies in every orbit closure, so it is in the minimal, non-planar class
  bool z_row = false;
  for (const auto& e : rep.entries)
    if (e.row == Table1Row{18, false, 6}) {
      const auto& members = classes().classes[e.class_index].members;
      z_row = std::find(members.begin(), members.end(), *z) != members.end();
    }
  CHECK(z_row);
}

TEST_CASE("representatives of the extra components", "[h33]") {
  CHECK(graded_piece_dim(h33_ideal_14(), {1, 1, 1}) == 10);
  CHECK(graded_piece_dim(h33_ideal_13(), {2, 1, 0}) == 10);
  for (const auto& r : component_rep_checks(4)) {
    INFO(r.name);
    CHECK(r.ok());
  }
  // dropping a component breaks the Hilbert function
  H33Vars v;
  auto partial = intersect_all({{v.x(1), v.y(1), v.x(2), v.z(2)}, {v.x(1), v.y(1), v.x(3), v.y(3)}, {v.x(2), v.y(2), v.x(3), v.y(3)}});
  CHECK(first_hf_mismatch(partial, 2).has_value());
}
