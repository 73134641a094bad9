#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "hilbdiag/hilbdiag.hpp"

using namespace hilbdiag;

namespace {

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

void check_range(int v, int lo, int hi, const char* name) {
  if (v < lo || v > hi)
    throw Error(std::string(name) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
                std::to_string(v));
}

Json shelling_json(const ShellingReport& sh, Shape s) {
  Json steps = Json::array();
  for (const auto& st : sh.steps)
    steps.push_back({{"u", st.u},
                     {"facet", monomial_to_json(Monomial::from_mask(s, st.facet))},
                     {"eta", monomial_to_json(Monomial::from_mask(s, st.eta))}});
  return {{"valid", sh.valid}, {"steps", steps}, {"h", int_poly_to_json(sh.h_polynomial())}};
}

// ---- borel ----

struct BorelOpts {
  int d = 2, n = 2;
  bool shelling = false, json = false;
};

void run_borel(const BorelOpts& o) {
  check_range(o.d, 1, 8, "--d");
  check_range(o.n, 1, 8, "--n");
  Shape s{o.d, o.n};
  auto Z = build_z(o.d, o.n);
  auto U = u_set(o.d, o.n);
  auto h = h_closed_form(o.d, o.n);
  if (o.json) {
    Json u = Json::array();
    for (const auto& v : U.vectors) u.push_back(v);
    Json out{{"ideal", ideal_to_json(Z)},
             {"direct_generators_agree", Z == z_generators_direct(o.d, o.n)},
             {"borel_fixed", is_borel_fixed(Z)},
             {"U", u},
             {"h", int_poly_to_json(h)},
             {"k_polynomial", kpoly_to_json(k_polynomial(Z))},
             {"multidegree", kpoly_to_json(multidegree_of_ideal(Z))}};
    if (o.shelling) out["shelling"] = shelling_json(shelling(o.d, o.n), s);
    std::cout << dump(out);
    return;
  }
  std::cout << "Z(" << o.d << "," << o.n << ") = " << Z.to_string() << "\n";
  std::cout << "generators: " << Z.size() << ", max degree " << Z.max_generator_degree() << "\n";
  std::cout << "agrees with the direct description: " << (Z == z_generators_direct(o.d, o.n) ? "yes" : "no") << "\n";
  std::cout << "|U| = " << U.vectors.size() << "\n";
  std::cout << "h(z) = " << to_string(h) << "\n";
  std::cout << "K(t) = " << k_polynomial(Z).to_string() << "\n";
  std::cout << "multidegree = " << multidegree_of_ideal(Z).to_string() << "\n";
  if (o.shelling) {
    auto sh = shelling(o.d, o.n);
    for (const auto& st : sh.steps) {
      std::cout << "  u = (";
      for (size_t k = 0; k < st.u.size(); ++k) std::cout << (k ? "," : "") << st.u[k];
      std::cout << ")  eta = " << (st.eta ? Monomial::from_mask(s, st.eta).to_string() : "1") << "\n";
    }
    std::cout << "shelling " << (sh.valid ? "valid" : "INVALID: " + sh.message) << "\n";
  }
}

// ---- trees ----

struct TreesOpts {
  int n = 3;
  std::string graph;
  bool ideals = false;
};

void run_trees(const TreesOpts& o) {
  check_range(o.n, 1, 7, "--n");
  if (!o.graph.empty()) {
    if (o.graph != "dot" && o.graph != "json") throw Error("--graph must be dot or json");
    check_range(o.n, 1, 5, "--n with --graph");
    auto g = moves_graph(o.n);
    std::cout << (o.graph == "dot" ? moves_graph_to_dot(g) : dump(moves_graph_to_json(g)));
    return;
  }
  auto trees = enumerate_trees(o.n);
  if (o.ideals) {
    Json out = Json::array();
    for (const auto& T : trees) out.push_back(tree_to_json(T));
    std::cout << dump(out);
    return;
  }
  std::cout << trees.size() << " trees (2^n (n+1)^(n-2) = " << tree_count_formula(o.n).get_str() << ")\n";
  size_t smooth = 0;
  for (const auto& T : trees) {
    smooth += is_smooth(T);
    std::cout << T.to_string() << "  tangent " << tree_tangent_dim(T) << (is_smooth(T) ? " smooth" : "") << "  "
              << tree_to_ideal(T).to_string() << "\n";
  }
  std::cout << smooth << " smooth points\n";
}

// ---- h33 ----

struct H33Opts {
  bool classes = false, table1 = false, reps = false;
  std::string csv;
};

void run_h33(const H33Opts& o) {
  const auto& all = cached_h33();
  std::cout << "candidates scanned: " << h33_candidate_count << "\n";
  std::cout << "monomial ideals: " << all.size() << "\n";
  bool need_classes = o.classes || o.table1 || !o.csv.empty();
  if (need_classes) {
    auto cr = symmetry_classes(all);
    std::cout << "symmetry classes: " << cr.classes.size() << " (group order " << h33_symmetry_group().size() << ")\n";
    auto rep = table1_report(all, cr);
    if (o.classes)
      for (size_t k = 0; k < rep.entries.size(); ++k) {
        const auto& e = rep.entries[k];
        std::cout << "  class " << k + 1 << ": orbit " << e.orbit << ", " << e.ideal.to_string() << "\n";
      }
    if (o.table1) {
      std::cout << table1_csv(rep);
      std::cout << "matches the printed table: " << (rep.matches ? "yes" : "no " + rep.mismatch) << "\n";
    }
    if (!o.csv.empty()) write_output(table1_csv(rep), o.csv);
  }
  if (o.reps)
    for (const auto& r : component_rep_checks(4)) {
      std::cout << r.name << ": ";
      if (r.ok()) {
        std::cout << "Hilbert function matches for |u| <= 4\n";
      } else {
        std::cout << "mismatch at u =";
        for (int x : *r.first_mismatch) std::cout << " " << x;
        std::cout << "\n";
      }
    }
}

// ---- tangent ----

struct TangentOpts {
  std::string ideal, basis;
  int d = 2, n = 2;
};

void run_tangent(const TangentOpts& o) {
  if (!o.basis.empty()) {
    if (o.basis != "chain") throw Error("--basis supports only 'chain'");
    check_range(o.d, 2, 6, "--d");
    check_range(o.n, 2, 6, "--n");
    auto maps = chain_basis(o.d, o.n);
    auto chk = verify_basis(chain_ideal(o.d, o.n), maps);
    Json js = Json::array();
    for (const auto& phi : maps) js.push_back(graded_hom_to_json(phi));
    Json out{{"ideal", ideal_to_json(chain_ideal(o.d, o.n))},
             {"maps", js},
             {"dimension", chk.dimension},
             {"basis", chk.ok()}};
    std::cout << dump(out);
    return;
  }
  if (o.ideal.empty()) throw Error("tangent needs --ideal FILE or --basis chain");
  auto I = ideal_from_json(read_json_file(o.ideal));
  std::cout << tangent_dimension(I) << "\n";
}

// ---- deligne ----

struct DeligneOpts {
  std::string matrices, route = "sat";
  std::uint64_t seed = 1;
  int weight_bound = 20;
};

void run_deligne(const DeligneOpts& o) {
  if (o.route != "sat" && o.route != "weight") throw Error("--route must be sat or weight");
  Json in = read_json_file(o.matrices);
  auto Y = matrices_from_json(in);
  auto w = weights_from_json(in, Y.d, Y.n());
  Json out;
  if (o.route == "weight") {
    if (!w) {
      std::mt19937_64 rng(o.seed);
      for (int tries = 0;; ++tries) {
        w = random_weights(Y.d, Y.n(), rng, o.weight_bound);
        if (weight_initial_route(*w, Y).decisive) break;
        if (tries > 10000) throw Error("no decisive weights found");
      }
    }
    auto r = weight_initial_route(*w, Y);
    out = {{"ideal", ideal_to_json(r.ideal)}, {"squarefree", r.squarefree}, {"decisive", r.decisive}, {"weights", *w}};
  } else {
    auto tuple = w ? weighted_tuple(Y, *w) : Y;
    auto f = special_fiber(tuple);
    out["squarefree"] = f.squarefree;
    out["monomial"] = f.monomial;
    if (f.ideal) out["ideal"] = ideal_to_json(*f.ideal);
    else out["basis"] = polys_to_json(f.basis);
  }
  if (out.contains("ideal") && out["squarefree"].get<bool>()) {
    auto I = ideal_from_json(out["ideal"]);
    out["alexander_dual"] = ideal_to_json(alexander_dual(I));
    out["series_equals_diagonal"] = series_equals_diagonal(I);
  }
  std::cout << dump(out);
}

// ---- gin ----

struct GinOpts {
  int d = 2, n = 3, trials = 10;
  std::uint64_t seed = 1;
  bool borel = false;
};

void run_gin(const GinOpts& o) {
  check_range(o.d, 1, 4, "--d");
  check_range(o.n, 1, 4, "--n");
  check_range(o.trials, 1, 100000, "--trials");
  auto rep = gin_sample(o.d, o.n, o.trials, o.seed, o.borel);
  Json trials = Json::array();
  for (const auto& t : rep.trials)
    trials.push_back({{"index", t.index},
                      {"ideal", ideal_to_json(t.ideal)},
                      {"squarefree", t.squarefree},
                      {"series_equals_diagonal", t.series_equal},
                      {"equals_z", t.equals_z},
                      {"weight_redraws", t.retries}});
  std::cout << dump({{"d", o.d}, {"n", o.n}, {"upper_triangular", o.borel}, {"trials", trials}, {"all_ok", rep.all_ok()}});
}

// ---- collineations ----

struct CollOpts {
  int sample = 5;
  std::uint64_t seed = 1;
};

void run_collineations(const CollOpts& o) {
  check_range(o.sample, 0, 100000, "--sample");
  std::mt19937_64 rng(o.seed);
  Json samples = Json::array();
  bool ok = true;
  for (int k = 0; k < o.sample; ++k) {
    auto U = random_generic_invertible(3, rng), V = random_generic_invertible(3, rng);
    auto values = plucker_param(U, V);
    auto c = classify(values);
    auto cm = collineation_matrices(coefficients_from_uv(U, V));
    ok = ok && c == PluckerCounts{6, 12, 66} && cm.rank_first <= 8 && cm.rank_second <= 8;
    samples.push_back({{"U", matrix_to_json(U)},
                       {"V", matrix_to_json(V)},
                       {"zero", c.zero},
                       {"binomial", c.binomial},
                       {"monomial", c.monomial},
                       {"rank_first", cm.rank_first},
                       {"rank_second", cm.rank_second}});
  }
  int cubic = 0;
  for (const auto& T : enumerate_trees(3)) cubic += x23_cubic_check(h23_coefficients(monomial_generators(tree_to_ideal(T))));
  std::cout << dump({{"samples", samples}, {"all_samples_ok", ok}, {"tree_ideals_on_cubic", cubic}});
}

// ---- lafforgue ----

void run_lafforgue(const std::string& path) {
  auto Y = matrices_from_json(read_json_file(path));
  auto coords = lafforgue_coordinates(constant_matrices(Y));
  Json types = Json::array();
  size_t total = 0;
  for (const auto& t : coords) {
    Json v = Json::array();
    for (const auto& c : t.coords) v.push_back(rational_to_json(c));
    total += t.coords.size();
    types.push_back({{"type", t.type}, {"coords", v}});
  }
  std::cout << dump({{"d", Y.d}, {"n", Y.n()}, {"types", types}, {"total", total},
                     {"binom_nd_d", integer_to_json(binomial(static_cast<long>(Y.n()) * Y.d, Y.d))}});
}

// ---- verify-all ----

// Checks that exercise the shape (d, n).
bool check_covers(int id, int d, int n) {
  switch (id) {
    case 1: return d >= 2 && d <= 5 && n >= 2 && n <= 5;
    case 2: return d >= 2 && d <= 4 && n >= 2 && n <= 4;
    case 3: return d >= 2 && d <= 3 && n >= 2 && n <= 3;
    case 4: return (d == 4 && n == 2) || (d >= 2 && d <= 3 && n >= 2 && n <= 3);
    case 5: return d == 2 && n >= 2 && n <= 5;
    case 6:
    case 7: return d == 3 && n == 3;
    case 8: return (d == 2 && n >= 2 && n <= 4) || (d == 3 && n == 3);
    case 9: return (d == 3 && n == 2) || (d == 2 && n == 3);
  }
  return false;
}

int run_verify(const VerifyConfig& cfg, const std::vector<int>& only, int d, int n) {
  int failed = 0, ran = 0;
  const auto& checks = all_checks();
  for (size_t k = 0; k < checks.size(); ++k) {
    int id = static_cast<int>(k + 1);
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    if (d > 0 && n > 0 && !check_covers(id, d, n)) continue;
    auto r = checks[k](cfg);
    std::cout << format_result(r) << std::endl;
    ++ran;
    failed += !r.pass();
  }
  std::cout << (failed ? "FAIL" : "PASS") << ": " << ran - failed << " of " << ran << " checks passed" << std::endl;
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hilbdiag: exact computations on the multigraded Hilbert scheme of the diagonal"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: HILBDIAG_THREADS or all cores)");

  BorelOpts bo;
  auto* borel = app.add_subcommand("borel", "The Borel-fixed ideal Z(d,n): generators, the set U, h-polynomial, "
                                            "K-polynomial and multidegree");
  borel->add_option("--d", bo.d, "Rows of the grid")->required();
  borel->add_option("--n", bo.n, "Columns of the grid")->required();
  borel->add_flag("--shelling", bo.shelling, "Check the shelling of the Stanley-Reisner complex and list eta_u");
  borel->add_flag("--json", bo.json, "Emit JSON");

  TreesOpts to;
  auto* trees = app.add_subcommand("trees", "Monomial ideals of H(2,n) as trees with n directed edges; tangent "
                                            "dimensions and the graph of moves");
  trees->add_option("--n", to.n, "Number of edges (factors)")->required();
  trees->add_option("--graph", to.graph, "Emit the moves graph as dot or json (n <= 5)");
  trees->add_flag("--ideals", to.ideals, "Emit every tree with its ideal as JSON");

  H33Opts ho;
  auto* h33 = app.add_subcommand("h33", "Enumerate the 13824 monomial ideals of H(3,3) from cell complexes and "
                                        "classify them up to symmetry");
  h33->add_flag("--classes", ho.classes, "List the symmetry classes with a representative ideal");
  h33->add_flag("--table1", ho.table1, "Print the class table (tangent, planar, stabilizer, orbit) as CSV");
  h33->add_flag("--reps", ho.reps, "Check the Hilbert functions of the extra-component representatives");
  h33->add_option("--csv", ho.csv, "Write the class table to this CSV file");

  TangentOpts tgo;
  auto* tangent = app.add_subcommand("tangent", "Tangent space dimension at a monomial ideal, or the explicit "
                                                "basis at the chain ideal");
  tangent->add_option("--ideal", tgo.ideal, "Ideal JSON file {\"d\",\"n\",\"gens\"}");
  tangent->add_option("--basis", tgo.basis, "Emit a basis: 'chain' gives the rho/sigma/tau maps");
  tangent->add_option("--d", tgo.d, "Rows for --basis chain");
  tangent->add_option("--n", tgo.n, "Columns for --basis chain");

  DeligneOpts dopt;
  auto* deligne = app.add_subcommand("deligne", "Special fiber of the degeneration of the diagonal by a tuple of "
                                                "matrices over Q[z]");
  deligne->add_option("--matrices", dopt.matrices, "Matrices JSON; entries are integers or strings such as \"z^2-3/2*z\"")
      ->required();
  deligne->add_option("--route", dopt.route, "sat: saturate by z; weight: initial ideal for a weight order")
      ->check(CLI::IsMember({"sat", "weight"}));
  deligne->add_option("--seed", dopt.seed, "Seed for weights when the weight route has none");
  deligne->add_option("--weight-bound", dopt.weight_bound, "Largest sampled weight");

  GinOpts go;
  auto* gin = app.add_subcommand("gin", "Initial ideals of random translates of the 2x2 minors");
  gin->add_option("--d", go.d, "Rows")->required();
  gin->add_option("--n", go.n, "Columns")->required();
  gin->add_option("--trials", go.trials, "Number of trials");
  gin->add_option("--seed", go.seed, "Random seed");
  gin->add_flag("--borel", go.borel, "Upper-triangular translates (limit should be Z)");

  CollOpts co;
  auto* coll = app.add_subcommand("collineations", "Syzygy matrices and Pluecker coordinates of translates of the "
                                                   "minors on the 3x2 grid, and the cubic on the 2x3 grid");
  coll->add_option("--sample", co.sample, "Number of random (U,V) pairs");
  coll->add_option("--seed", co.seed, "Random seed");

  std::string laf_path;
  auto* laf = app.add_subcommand("lafforgue", "Scaled maximal-minor coordinates of a tuple of invertible matrices");
  laf->add_option("--matrices", laf_path, "Matrices JSON (constant entries)")->required();

  VerifyConfig vc;
  std::vector<int> only;
  int vd = 0, vn = 0;
  auto* verify = app.add_subcommand("verify-all", "Run the full set of end-to-end checks; exit status 1 on any failure");
  verify->add_option("--seed", vc.seed, "Seed for all random samples");
  verify->add_option("--gin-trials", vc.gin_trials, "Generic trials per shape");
  verify->add_option("--hf-bound", vc.hf_bound, "Degree bound for Hilbert function checks");
  verify->add_option("--only", only, "Run only these check numbers (1-9)")->delimiter(',');
  verify->add_option("--d", vd, "With --n, run only the checks that involve this shape");
  verify->add_option("--n", vn, "With --d, run only the checks that involve this shape");

  CLI11_PARSE(app, argc, argv);

  try {
    if (threads > 0) setenv("HILBDIAG_THREADS", std::to_string(threads).c_str(), 1);
    if (*borel) run_borel(bo);
    if (*trees) run_trees(to);
    if (*h33) run_h33(ho);
    if (*tangent) run_tangent(tgo);
    if (*deligne) run_deligne(dopt);
    if (*gin) run_gin(go);
    if (*coll) run_collineations(co);
    if (*laf) run_lafforgue(laf_path);
    if (*verify) return run_verify(vc, only, vd, vn);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
