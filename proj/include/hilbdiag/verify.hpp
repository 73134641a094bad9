#pragma once

// The end-to-end checks run by `hilbdiag verify-all` and the acceptance
// binary. Each check returns PASS only if every assertion holds and it
// finished within its time budget.

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hilbdiag/borel.hpp"
#include "hilbdiag/deligne.hpp"
#include "hilbdiag/embeddings.hpp"
#include "hilbdiag/parallel.hpp"
#include "hilbdiag/h33.hpp"
#include "hilbdiag/tangent.hpp"
#include "hilbdiag/trees.hpp"

namespace hilbdiag {

struct VerifyConfig {
  std::uint64_t seed = 20240601;
  int gin_trials = 100;       // per (d,n) in {2,3}^2
  int borel_trials = 5;       // upper-triangular trials per (d,n)
  int hf_bound = 4;           // |u| bound for the representative checks
  int fiber_trials = 5;       // degenerations per (d,n) in the route comparison
  int fiber_weight_bound = 20;
  int collineation_samples = 20;
};

struct CheckResult {
  int id = 0;
  std::string name;
  std::string claim;
  bool correct = true;
  double seconds = 0;
  double budget = 0;
  std::vector<std::string> notes;  // failures first, then a summary line
  bool pass() const { return correct && seconds <= budget; }
};

namespace verify_detail {

class Recorder {
 public:
  explicit Recorder(CheckResult& r) : r_(r) {}
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    r_.correct = false;
    if (failures_++ < 10) r_.notes.push_back("FAILED: " + what);
  }
  void note(const std::string& s) { r_.notes.push_back(s); }

 private:
  CheckResult& r_;
  int failures_ = 0;
};

inline CheckResult timed(int id, std::string name, std::string claim, double budget,
                         const std::function<void(Recorder&)>& body) {
  CheckResult r{id, std::move(name), std::move(claim), true, 0, budget, {}};
  Recorder rec(r);
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const std::exception& e) {
    rec.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string dn(int d, int n) { return "(d,n)=(" + std::to_string(d) + "," + std::to_string(n) + ")"; }

}  // namespace verify_detail

inline CheckResult check_borel(const VerifyConfig&) {
  return verify_detail::timed(1, "Borel-fixed ideal Z",
                              "Z equals its direct generator description, U and the shelling have the stated sizes, "
                              "and the shelling h-polynomial is the closed form",
                              10, [](verify_detail::Recorder& rec) {
    using verify_detail::dn;
    for (int d = 2; d <= 5; ++d)
      for (int n = 2; n <= 5; ++n) {
        auto Z = build_z(d, n);
        rec.expect(Z == z_generators_direct(d, n), "build_z == z_generators_direct at " + dn(d, n));
        rec.expect(Z.max_generator_degree() == std::min(d, n), "max generator degree = min(d,n) at " + dn(d, n));
        rec.expect(Integer(static_cast<long>(u_set(d, n).vectors.size())) == binomial(d + n - 2, d - 1),
                   "|U| = binom(d+n-2,d-1) at " + dn(d, n));
        auto sh = shelling(d, n);
        rec.expect(sh.valid, "shelling at " + dn(d, n) + ": " + sh.message);
        rec.expect(sh.h_polynomial() == h_closed_form(d, n), "sum z^|eta_u| = h(z) at " + dn(d, n));
        rec.expect(is_borel_fixed(Z), "Z is Borel-fixed at " + dn(d, n));
      }
    rec.note("2 <= d,n <= 5: 16 shapes");
  });
}

inline CheckResult check_hilbert(const VerifyConfig&) {
  return verify_detail::timed(2, "Hilbert data of Z",
                              "hf(Z,u) = binom(|u|+d-1,d-1) for |u| <= 6, and K(Z) at t_j = z is "
                              "h(z)(1-z)^(dn-n-d+1)",
                              30, [](verify_detail::Recorder& rec) {
    using verify_detail::dn;
    size_t points = 0;
    for (int d = 2; d <= 4; ++d)
      for (int n = 2; n <= 4; ++n) {
        auto Z = build_z(d, n);
        Multidegree u(static_cast<size_t>(n), 0);
        auto rec_u = [&](auto&& self, int pos, int left) -> void {
          if (pos == n) {
            ++points;
            rec.expect(hf_at(Z, u) == binomial(total_degree(u) + d - 1, d - 1), "hf at " + dn(d, n));
            return;
          }
          for (int k = 0; k <= left; ++k) {
            u[static_cast<size_t>(pos)] = k;
            self(self, pos + 1, left - k);
          }
          u[static_cast<size_t>(pos)] = 0;
        };
        rec_u(rec_u, 0, 6);
        auto want = multiply(h_closed_form(d, n), one_minus_z_pow(d * n - n - d + 1));
        rec.expect(k_polynomial(Z).specialize() == want, "specialized K-polynomial at " + dn(d, n));
        rec.expect(series_equals_diagonal(Z), "Hilbert series of Z at " + dn(d, n));
      }
    rec.note(std::to_string(points) + " multidegrees checked for 2 <= d,n <= 4");
  });
}

inline CheckResult check_gin(const VerifyConfig& cfg) {
  return verify_detail::timed(3, "squarefree generic initial ideals",
                              "initial ideals of translates of the minors are squarefree with the Hilbert series "
                              "of Z; upper-triangular translates give Z",
                              300, [&](verify_detail::Recorder& rec) {
    using verify_detail::dn;
    int total = 0, retries = 0;
    for (int d = 2; d <= 3; ++d)
      for (int n = 2; n <= 3; ++n) {
        auto rep = gin_sample(d, n, cfg.gin_trials, cfg.seed);
        for (const auto& t : rep.trials) {
          rec.expect(t.squarefree, "trial " + std::to_string(t.index) + " squarefree at " + dn(d, n));
          rec.expect(t.series_equal, "trial " + std::to_string(t.index) + " series at " + dn(d, n));
        }
        auto borel = gin_sample(d, n, cfg.borel_trials, cfg.seed, true);
        for (const auto& t : borel.trials) rec.expect(t.equals_z, "Borel trial " + std::to_string(t.index) + " gives Z at " + dn(d, n));
        total += static_cast<int>(rep.trials.size());
        retries += rep.total_retries + borel.total_retries;
      }
    rec.note(std::to_string(total) + " generic trials, " + std::to_string(4 * cfg.borel_trials) +
             " upper-triangular trials, " + std::to_string(retries) + " weight redraws");
  });
}

inline CheckResult check_chain(const VerifyConfig&) {
  return verify_detail::timed(4, "tangent space at the chain ideal",
                              "dim T_M = (d^2-1)(n-1) and the rho/sigma/tau maps form a basis", 60,
                              [](verify_detail::Recorder& rec) {
    using verify_detail::dn;
    for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
      auto M = chain_ideal(d, n);
      size_t want = static_cast<size_t>((d * d - 1) * (n - 1));
      rec.expect(tangent_dimension(M) == want, "tangent dimension at " + dn(d, n));
      auto basis = chain_basis(d, n);
      auto chk = verify_basis(M, basis);
      rec.expect(basis.size() == want, "basis size at " + dn(d, n));
      rec.expect(chk.ok(), "basis check at " + dn(d, n) + " " + chk.message);
    }
  });
}

inline CheckResult check_trees(const VerifyConfig&) {
  return verify_detail::timed(5, "tree space H(2,n)",
                              "2^n (n+1)^(n-2) trees, tangent dimension sum_v f(deg v), smooth iff trivalent, "
                              "24 swap edges at n = 3",
                              300, [](verify_detail::Recorder& rec) {
    const size_t counts[] = {0, 0, 4, 32, 400, 6912};
    for (int n = 2; n <= 5; ++n) {
      auto trees = enumerate_trees(n);
      std::string at = "n=" + std::to_string(n);
      rec.expect(trees.size() == counts[n], "tree count " + at);
      rec.expect(Integer(static_cast<long>(trees.size())) == tree_count_formula(n), "count formula " + at);
      rec.expect(count_realizable_ztables(n) == counts[n], "brute-force count " + at);
      std::vector<int> bad(trees.size(), 0);
      parallel_for(trees.size(), [&](size_t k) {
        const auto& T = trees[k];
        auto I = tree_to_ideal(T);
        int td = tree_tangent_dim(T);
        bool ok = static_cast<int>(tangent_dimension(I)) == td;
        ok = ok && series_equals_diagonal(I) && ztable(ideal_to_tree(I)) == ztable(T);
        auto deg = T.degrees();
        bool trivalent = *std::max_element(deg.begin(), deg.end()) <= 3;
        ok = ok && is_smooth(T) == trivalent && (td == 3 * (n - 1)) == trivalent;
        bad[k] = !ok;
      });
      rec.expect(std::count(bad.begin(), bad.end(), 1) == 0, "per-tree checks " + at);
    }
    auto g = moves_graph(3);
    rec.expect(g.count(true) == 24, "24 swap edges at n=3, found " + std::to_string(g.count(true)));
    rec.expect(g.connected(), "moves graph connected at n=3");
    rec.note("n=3 moves graph: " + std::to_string(g.edges.size()) + " edges, " + std::to_string(g.count(false)) +
             " with a subtree move, " + std::to_string(g.count(true)) + " swaps");
  });
}

inline const std::vector<CellComplex233>& cached_h33() {
  static const auto all = enumerate_h33();
  return all;
}

inline CheckResult check_h33(const VerifyConfig&) {
  return verify_detail::timed(6, "monomial ideals of H(3,3)",
                              "13824 ideals in 16 classes under a group of order 1296 with the tabulated "
                              "(tangent, planar, stabilizer) multiset",
                              900, [](verify_detail::Recorder& rec) {
    const auto& all = cached_h33();
    rec.expect(all.size() == 13824, "13824 complexes, found " + std::to_string(all.size()));
    rec.expect(h33_symmetry_group().size() == 1296, "group order 1296");
    auto cr = symmetry_classes(all);
    rec.expect(cr.closed, "group action closes on the enumeration");
    rec.expect(cr.classes.size() == 16, "16 classes, found " + std::to_string(cr.classes.size()));
    auto rep = table1_report(all, cr);
    rec.expect(rep.matches, "class table multiset: " + rep.mismatch);
    std::vector<int> bad(all.size(), 0);
    parallel_for(all.size(), [&](size_t k) { bad[k] = !series_equals_diagonal(complex_to_ideal(all[k])); });
    rec.expect(std::count(bad.begin(), bad.end(), 1) == 0, "every ideal has the Hilbert series of Z(3,3)");
    rec.note(std::to_string(all.size()) + " ideals (13824 expected), " + std::to_string(cr.classes.size()) + " classes");
  });
}

inline CheckResult check_reps(const VerifyConfig& cfg) {
  return verify_detail::timed(7, "representatives of the extra components",
                              "graded pieces of dimension binom(|u|+2,2) up to the degree bound", 300,
                              [&](verify_detail::Recorder& rec) {
    for (const auto& r : component_rep_checks(cfg.hf_bound)) {
      std::string where;
      if (r.first_mismatch)
        for (int x : *r.first_mismatch) where += std::to_string(x) + " ";
      rec.expect(r.ok(), r.name + " first mismatch at u = " + where);
    }
    rec.note("|u| <= " + std::to_string(cfg.hf_bound));
  });
}

inline CheckResult check_deligne(const VerifyConfig& cfg) {
  return verify_detail::timed(8, "special fibers of diagonal degenerations",
                              "saturation and weight routes agree on a squarefree ideal; at d = 2 it is a tree ideal",
                              300, [&](verify_detail::Recorder& rec) {
    using verify_detail::dn;
    std::mt19937_64 rng(cfg.seed);
    int compared = 0, redraws = 0;
    for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
      for (int k = 0; k < cfg.fiber_trials; ++k) {
        std::vector<std::vector<int>> w;
        WeightRouteResult wr;
        for (;;) {
          w = random_weights(d, n, rng, cfg.fiber_weight_bound);
          wr = weight_initial_route(w, MatrixTuple::identity(d, n));
          if (wr.decisive) break;
          if (++redraws > 10000) throw Error("no decisive weights found");
        }
        auto f = special_fiber(MatrixTuple::diagonal_monomial(d, n, w));
        ++compared;
        rec.expect(f.monomial && *f.ideal == wr.ideal, "routes agree at " + dn(d, n));
        rec.expect(wr.squarefree, "squarefree at " + dn(d, n));
        rec.expect(series_equals_diagonal(wr.ideal), "Hilbert series at " + dn(d, n));
        if (d == 2) {
          try {
            auto T = ideal_to_tree(wr.ideal);
            rec.expect(tree_to_ideal(T) == wr.ideal, "tree round trip at " + dn(d, n));
          } catch (const Error& e) {
            rec.expect(false, std::string("fiber is not a tree ideal: ") + e.what());
          }
        }
      }
    }
    rec.note(std::to_string(compared) + " degenerations compared, " + std::to_string(redraws) + " weight redraws");
  });
}

inline CheckResult check_collineations(const VerifyConfig& cfg) {
  return verify_detail::timed(9, "collineation embeddings",
                              "84 Pluecker coordinates split 6 zero / 12 binomial / 66 monomial, both 9x18 matrices "
                              "have rank <= 8, and the 2x3 cubic vanishes on all tree ideals",
                              60, [&](verify_detail::Recorder& rec) {
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < cfg.collineation_samples; ++k) {
      auto U = random_generic_invertible(3, rng), V = random_generic_invertible(3, rng);
      auto c = classify(plucker_param(U, V));
      rec.expect(c == PluckerCounts{6, 12, 66}, "sample " + std::to_string(k) + ": counts " + std::to_string(c.zero) + "/" +
                                                    std::to_string(c.binomial) + "/" + std::to_string(c.monomial));
      auto A = coefficients_from_uv(U, V);
      auto cm = collineation_matrices(A);
      rec.expect(cm.rank_first <= 8 && cm.rank_second <= 8, "sample " + std::to_string(k) + ": ranks " +
                                                                std::to_string(cm.rank_first) + "," +
                                                                std::to_string(cm.rank_second));
      auto gen = collineation_matrices_generated(A);
      rec.expect(gen.first == cm.first && gen.second == cm.second, "printed layout matches the generator products");
    }
    auto trees = enumerate_trees(3);
    int vanish = 0;
    for (const auto& T : trees) vanish += x23_cubic_check(h23_coefficients(monomial_generators(tree_to_ideal(T))));
    rec.expect(vanish == 32, "cubic and rank test on tree ideals: " + std::to_string(vanish) + " of 32");
    rec.note(std::to_string(cfg.collineation_samples) + " (U,V) samples; " + std::to_string(vanish) + " of " +
             std::to_string(trees.size()) + " tree ideals pass the cubic test");
  });
}

using CheckFn = CheckResult (*)(const VerifyConfig&);

inline const std::vector<CheckFn>& all_checks() {
  static const std::vector<CheckFn> v{check_borel, check_hilbert, check_gin,  check_chain,       check_trees,
                                      check_h33,   check_reps,    check_deligne, check_collineations};
  return v;
}

/// One line per check: "PASS 6 name (3.2 s / 900 s): note".
inline std::string format_result(const CheckResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << (r.pass() ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.seconds << " s, limit " << r.budget
    << " s)";
  if (r.correct && !r.pass()) s << " over time";
  for (const auto& n : r.notes) s << "\n    " << n;
  return s.str();
}

}  // namespace hilbdiag
