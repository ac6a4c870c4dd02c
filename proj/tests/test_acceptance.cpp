// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failures. Exercises the end-to-end identities on the worked instances plus
// the randomized batches, with the stated time budgets.

#include <chrono>
#include <cstdio>
#include <random>

#include "oracles.hpp"
#include "zonomtt/theorems.hpp"

using namespace zonomtt;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, const char* label, bool ok, const std::string& detail = "") {
  std::printf("criterion %2d [%s]: %s%s%s\n", idx, label, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

Graph make_graph(std::size_t n,
                 std::vector<std::pair<std::size_t, std::size_t>> edges) {
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

const Graph kK3 = make_graph(3, {{1, 2}, {1, 3}, {2, 3}});
const Graph kK4 = make_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
const IntMat kP3Reduced{{-1, 0}, {1, -1}};
const IntMat kK3Reduced{{1, 0, -1}, {0, 1, 1}};
const IntMat kNK3{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  {  // 1: K4 end to end, under a second
    auto t0 = Clock::now();
    Int s = spanning_tree_count(kK4);
    Rat eig = product_nonzero_eigenvalues(to_rat(laplacian(kK4)));
    double dt = seconds_since(t0);
    bool ok = s == 16 && eig == 64 && eig == Rat(Int(4) * s) && dt < 1.0;
    report(1, "k4-end-to-end", ok,
           "s=" + s.str() + " eig=" + to_string(eig) + " in " +
               std::to_string(dt) + "s");
  }

  {  // 2: path on three vertices, everything equals 1
    IntMat l = kP3Reduced * kP3Reduced.transpose();
    bool ok = volume(kP3Reduced) == 1 && volume(l) == 1 && det(l) == 1;
    report(2, "p3-volumes", ok);
  }

  {  // 3: triangle row lattice = cocircuit lattice, plus the negative probe
    RepMatroid m(kNK3);
    IntMat cstar(3, m.cocircuits().size());
    std::size_t j = 0;
    for (const auto& c : m.cocircuits()) {
      for (std::size_t i = 0; i < 3; ++i) cstar(i, j) = c.entries[i];
      ++j;
    }
    bool equal = lattices_equal(kNK3.transpose(), cstar);
    // (1,1,1) must not lie in the rowspace of the two printed cocircuits
    RatMat basis{{1, 0}, {1, 1}, {0, 1}};
    std::vector<Rat> ones{1, 1, 1};
    auto x = solve(basis, ones);
    bool in_rowspace = x.has_value() && basis.apply(*x) == ones;
    report(3, "cocircuit-lattice", equal && !in_rowspace);
  }

  {  // 4: lattice of L equals lattice of the scaled facet barycenters
    IntMat nk4 = incidence_matrix(kK4);
    bool ok = lattices_equal(kNK3 * kNK3.transpose(), facet_barycenter_matrix(kNK3)) &&
              lattices_equal(nk4 * nk4.transpose(), facet_barycenter_matrix(nk4));
    report(4, "barycenter-lattice", ok);
  }

  {  // 5: 100 random reduced incidence matrices, d <= 6, n <= 12, under 60s
    auto t0 = Clock::now();
    std::mt19937_64 rng(1005);
    int done = 0;
    bool ok = true;
    while (done < 100) {
      std::size_t nv = 3 + rng() % 5;
      Graph g = oracles::random_connected_multigraph(rng, nv, rng() % 5);
      if (g.edges.size() > 12) continue;
      ++done;
      IntMat m = reduced_incidence(g, 1);
      IntMat l = m * m.transpose();
      RepMatroid matroid(m);
      Rat v = volume(m);
      if (v != Rat(det(l)) || v != Rat(Int(matroid.bases().size()))) ok = false;
    }
    double dt = seconds_since(t0);
    report(5, "random-mtt-100", ok && dt < 60.0,
           std::to_string(dt) + "s for 100 instances");
  }

  {  // 6: 10000 grid samples of the rearrangement on the reduced triangle
    CheckOptions opt;
    opt.seed = 1006;
    opt.samples = 10000;
    CheckReport r = check_rearrange(kK3Reduced, opt);
    report(6, "rearrange-10000", r.passed,
           "forward_failures=" + r.quantities.at("forward_failures") +
               " tile_failures=" + r.quantities.at("tile_failures"));
  }

  {  // 7: Z(L) of K4 splits into 4 pieces of volume 16
    CheckReport r = check_zl_decomposition(incidence_matrix(kK4));
    bool ok = r.passed && r.quantities.at("pieces") == "4" &&
              r.quantities.at("piece_volume") == "16";
    report(7, "zl-decomposition-k4", ok,
           "pieces=" + r.quantities.at("pieces") +
               " volume=" + r.quantities.at("piece_volume"));
  }

  {  // 8: every column basis of the lattice of L(K4) has volume 16
    CheckReport r = check_corank_mtt(incidence_matrix(kK4));
    bool ok = r.passed && r.quantities.at("vol_zm") == "16";
    report(8, "corank-k4", ok,
           "column_lattice_bases=" + r.quantities.at("column_lattice_bases"));
  }

  {  // 9: Lambda/Gamma volumes 27 and 256, plus 100 random invertible bases
    CheckReport k3 = check_classical_mtt(kK3);
    CheckReport k4 = check_classical_mtt(kK4);
    bool fixed = k3.passed && k3.quantities.at("vol_lambda") == "27" &&
                 k3.quantities.at("vol_gamma") == "27" && k4.passed &&
                 k4.quantities.at("vol_lambda") == "256" &&
                 k4.quantities.at("vol_gamma") == "256";
    std::mt19937_64 rng(1009);
    std::uniform_int_distribution<int> entry(-4, 4);
    int done = 0;
    bool random_ok = true;
    while (done < 100) {
      std::size_t n = 2 + rng() % 5;
      RatMat b(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = Rat(entry(rng));
      if (det(b) == 0) continue;
      ++done;
      auto [vol_pi, vol_p] = thm4_volumes(b);
      if (vol_pi != vol_p) random_ok = false;
    }
    report(9, "thm4-volumes", fixed && random_ok);
  }

  {  // 10: path prisms det(N|1) = n, plus 50 random prism instances
    bool paths_ok = true;
    for (std::size_t n = 2; n <= 8; ++n) {
      Graph p;
      p.n = n;
      for (std::size_t v = 1; v < n; ++v) p.edges.push_back({v, v + 1});
      IntMat inc = incidence_matrix(p);
      IntMat full(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) full(i, j) = inc(i, j);
        full(i, n - 1) = 1;
      }
      if (int_abs(det(full)) != Int(n)) paths_ok = false;
    }
    std::mt19937_64 rng(1010);
    bool random_ok = true;
    for (int t = 0; t < 50; ++t) {
      Graph g = oracles::random_connected_multigraph(rng, 3 + rng() % 3, rng() % 3);
      IntMat l = laplacian(g);
      std::vector<Int> v(g.n);
      for (auto& vi : v) vi = Int(1 + rng() % 4);  // positive sum: off-span
      auto [lhs, rhs] = prism_volume_check(l, v);
      if (lhs != rhs) random_ok = false;
    }
    report(10, "prism", paths_ok && random_ok);
  }

  {  // 11: 50 random positive rational weight vectors on K3/K4 reductions
    std::mt19937_64 rng(1011);
    bool ok = true;
    for (int t = 0; t < 50; ++t) {
      const Graph& g = (t % 2 == 0) ? kK3 : kK4;
      IntMat m = reduced_incidence(g, 1);
      std::vector<Rat> w;
      for (std::size_t j = 0; j < m.cols(); ++j)
        w.push_back(Rat(Int(1 + rng() % 9), Int(1 + rng() % 7)));
      CheckReport r = check_weighted(m, w);
      if (!r.passed) ok = false;
      Graph wg = g;
      wg.weights = w;
      if (r.quantities.at("det_lw") != to_string(oracles::weighted_trees_brute(wg)))
        ok = false;
    }
    report(11, "weighted-50", ok);
  }

  {  // 12: numeric cube-projection identity on every unimodular fixture
    bool ok = true;
    for (const IntMat& m :
         {kNK3, incidence_matrix(kK4), kP3Reduced, kK3Reduced,
          reduced_incidence(kK4, 1), IntMat::identity(4), IntMat{{1, 1}}}) {
      CheckOptions opt;
      opt.tol = 1e-9;
      if (!check_mcmullen(m, opt).passed) ok = false;
    }
    report(12, "mcmullen-numeric", ok);
  }

  {  // 13: oracle equivalence for cocircuits and tree counts
    bool ok = true;
    for (const IntMat& m : {kNK3, incidence_matrix(kK4), kP3Reduced, kK3Reduced}) {
      RepMatroid matroid(m);
      if (matroid.cocircuits() != oracles::cocircuits_brute(m)) ok = false;
    }
    std::vector<std::pair<std::size_t, std::size_t>> all_edges{
        {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (unsigned mask = 0; mask < 64; ++mask) {
      Graph g;
      g.n = 4;
      for (std::size_t e = 0; e < 6; ++e)
        if (mask & (1u << e)) g.edges.push_back(all_edges[e]);
      if (spanning_tree_count(g) != oracles::spanning_trees_brute(g)) ok = false;
    }
    report(13, "oracle-equivalence", ok);
  }

  {  // 14: non-unimodular inputs are rejected, never silently accepted
    IntMat two{{2}};
    IntMat doctored = kK3Reduced;
    for (std::size_t i = 0; i < doctored.rows(); ++i) doctored(i, 2) *= 2;
    bool ok = !is_unimodular(two) && !is_unimodular(doctored);
    for (const IntMat& bad : {two, doctored}) {
      CheckReport r = check_matroid_mtt(bad);
      if (r.passed || r.notes.find("unimodular") == std::string::npos) ok = false;
    }
    report(14, "negative-controls", ok);
  }

  std::printf("%s (%d failure%s)\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
              g_failures, g_failures == 1 ? "" : "s");
  return g_failures;
}
