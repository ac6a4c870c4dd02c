#include "zonomtt/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace zonomtt {

namespace {

bool require_unimodular(const IntMat& m, std::uint64_t cap, CheckReport& r) {
  if (is_unimodular(m, cap)) return true;
  r.passed = false;
  r.notes = "input matrix is not unimodular";
  return false;
}

IntMat append_ones_column(const IntMat& l) {
  IntMat g(l.rows(), l.cols() + 1);
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) g(i, j) = l(i, j);
    g(i, l.cols()) = 1;
  }
  return g;
}

IntMat cocircuit_matrix(const IntMat& m, std::uint64_t cap) {
  RepMatroid matroid(m, cap);
  const auto& cocs = matroid.cocircuits();
  IntMat c(m.cols(), cocs.size());
  std::size_t j = 0;
  for (const auto& sv : cocs) {
    for (std::size_t i = 0; i < m.cols(); ++i) c(i, j) = sv.entries[i];
    ++j;
  }
  return c;
}

// Uniform rational on a fixed denominator grid in [0,1].
Rat grid_sample(std::mt19937_64& rng) {
  static constexpr std::uint64_t kGrid = 9973;
  return Rat(Int(rng() % (kGrid + 1)), Int(kGrid));
}

std::string render_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

CheckReport check_matroid_mtt(const IntMat& m_in, const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "mtt";
  if (!require_unimodular(m_in, opt.cap, r)) return r;
  IntMat m = row_lattice_basis(m_in);  // full row rank, same matroid
  IntMat l = m * m.transpose();
  Rat vol_zm = volume(m, opt.cap);
  Rat vol_zl = volume(l, opt.cap);
  Rat det_l = Rat(det(l));
  Rat eig = product_nonzero_eigenvalues(to_rat(l));
  RepMatroid matroid(m, opt.cap);
  std::size_t n_bases = matroid.bases().size();
  r.put("vol_zm", vol_zm);
  r.put("vol_zl", vol_zl);
  r.put("det_l", det_l);
  r.put("eig_product", eig);
  r.put("bases", n_bases);
  r.passed = vol_zm == vol_zl && vol_zl == det_l && det_l == eig &&
             eig == Rat(Int(n_bases));
  return r;
}

CheckReport check_classical_mtt(const Graph& g, const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "classical-mtt";
  if (!g.is_connected()) {
    r.notes = "graph is not connected";
    return r;
  }
  const std::size_t n = g.n;
  Int s = spanning_tree_count(g);
  IntMat l = laplacian(g);
  Rat eig = product_nonzero_eigenvalues(to_rat(l));
  IntMat lambda = l;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lambda(i, j) += 1;
  IntMat gamma = append_ones_column(l);
  Rat vol_lambda = volume(lambda, opt.cap);
  Rat vol_gamma = volume(gamma, opt.cap);
  Rat vol_zl = volume(l, opt.cap);
  Rat n_rat = Rat(Int(n));
  r.put("n", Int(n));
  r.put("s", s);
  r.put("eig_product", eig);
  r.put("n_times_s", Rat(Int(n) * s));
  r.put("vol_lambda", vol_lambda);
  r.put("vol_gamma", vol_gamma);
  r.put("vol_zl", vol_zl);
  r.passed = eig == Rat(Int(n) * s) && vol_lambda == n_rat * eig &&
             vol_gamma == n_rat * vol_zl && vol_lambda == vol_gamma;
  return r;
}

CheckReport check_cocircuit_lattice(const IntMat& m, const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "cocircuit-lattice";
  if (!require_unimodular(m, opt.cap, r)) return r;
  IntMat cstar = cocircuit_matrix(m, opt.cap);
  bool equal = lattices_equal(m.transpose(), cstar);
  r.put("cocircuits", cstar.cols());
  r.passed = equal;
  if (!equal) r.notes = "row lattice differs from the cocircuit lattice";

  // Negative probe on the triangle instance: the covector (1,1,1) lies in
  // the cocircuit lattice but not in the rowspace of the 2x3 cocircuit
  // basis {(1,1,0),(0,1,1)}.
  const IntMat n_k3{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
  if (m == n_k3) {
    RatMat basis{{1, 0}, {1, 1}, {0, 1}};  // the two cocircuits, as columns
    std::vector<Rat> ones{1, 1, 1};
    bool in_rowspace = solve(basis, ones).has_value() &&
                       [&] {
                         auto x = solve(basis, ones);
                         RatMat bx(3, 1);
                         bx.set_column(0, basis.apply(*x));
                         return bx.column(0) == ones;
                       }();
    r.quantities["covector_111_in_cocircuit_rowspace"] = in_rowspace ? "1" : "0";
    if (in_rowspace) {
      r.passed = false;
      r.notes += "covector probe failed: (1,1,1) should not lie in the "
                 "cocircuit rowspace";
    }
  }
  return r;
}

CheckReport check_barycenter_lattice(const IntMat& m, const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "barycenter-lattice";
  if (!require_unimodular(m, opt.cap, r)) return r;
  IntMat l = m * m.transpose();
  IntMat b = facet_barycenter_matrix(m, opt.cap);
  r.put("barycenter_columns", b.cols());
  r.passed = lattices_equal(l, b);
  if (!r.passed) r.notes = "lattice of L differs from lattice of B";
  return r;
}

CheckReport check_scaled(const IntMat& m, const std::vector<Int>& d,
                         const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "scaled";
  if (!require_unimodular(m, opt.cap, r)) return r;
  if (rank(m) != m.rows()) {
    r.notes = "matrix must have full row rank";
    return r;
  }
  if (d.size() != m.cols()) {
    r.notes = "diagonal size does not match column count";
    return r;
  }
  IntMat md = m;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) md(i, j) *= d[j];
  IntMat lprime = md * m.transpose();
  Rat lhs = volume(md, opt.cap);
  Rat rhs = volume(lprime, opt.cap);
  r.put("vol_zmd", lhs);
  r.put("vol_zl_scaled", rhs);
  r.passed = lhs == rhs;
  return r;
}

CheckReport check_weighted(const IntMat& m, const std::vector<Rat>& w,
                           const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "weighted";
  if (!require_unimodular(m, opt.cap, r)) return r;
  if (rank(m) != m.rows()) {
    r.notes = "matrix must have full row rank";
    return r;
  }
  if (w.size() != m.cols()) {
    r.notes = "weight count does not match column count";
    return r;
  }
  for (const Rat& wi : w)
    if (wi <= 0) {
      r.notes = "non-positive weight rejected: the volume identity "
                "vol Z(Mw) = det Lw needs positive weights";
      return r;
    }
  RatMat mw = to_rat(m);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) mw(i, j) *= w[j];
  RatMat lw = mw * to_rat(m.transpose());
  Rat vol_mw = volume(mw, opt.cap);
  Rat det_lw = det(lw);
  // independent weighted basis sum
  RepMatroid matroid(m, opt.cap);
  Rat basis_sum = 0;
  for (const auto& b : matroid.bases()) {
    Rat prod = 1;
    for (std::size_t j : b) prod *= w[j];
    basis_sum += prod;
  }
  r.put("vol_zmw", vol_mw);
  r.put("det_lw", det_lw);
  r.put("weighted_basis_sum", basis_sum);
  // barycenter identity over the reals: span of Lw columns = span of Mw C*
  IntMat cstar = cocircuit_matrix(m, opt.cap);
  RatMat bw = mw * to_rat(cstar);
  RatMat joint(m.rows(), lw.cols() + bw.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < lw.cols(); ++j) joint(i, j) = lw(i, j);
    for (std::size_t j = 0; j < bw.cols(); ++j) joint(i, lw.cols() + j) = bw(i, j);
  }
  bool spans_equal =
      rank(lw) == rank(joint) && rank(bw) == rank(joint);
  r.quantities["barycenter_span_equal"] = spans_equal ? "1" : "0";
  r.passed = vol_mw == det_lw && det_lw == basis_sum && spans_equal;
  return r;
}

CheckReport check_zl_decomposition(const IntMat& m, const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "zl-decomposition";
  if (!require_unimodular(m, opt.cap, r)) return r;
  IntMat l = m * m.transpose();
  RepMatroid ml(l, opt.cap);
  RepMatroid mt(m.transpose(), opt.cap);
  const auto& pieces = ml.bases();
  Lattice induced(induced_lattice_basis(l));
  Rat common = -1;
  bool all_equal = true;
  for (const auto& b : pieces) {
    Rat v = normalized_volume(to_rat(l.select_columns(b)), induced);
    if (common < 0)
      common = v;
    else if (v != common)
      all_equal = false;
  }
  r.put("pieces", pieces.size());
  r.put("dual_bases", mt.bases().size());
  if (common >= 0) r.put("piece_volume", common);
  r.passed = all_equal && pieces.size() == mt.bases().size();
  if (!all_equal) r.notes = "pieces have unequal volume";
  return r;
}

CheckReport check_corank_mtt(const IntMat& m, const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "corank";
  if (!require_unimodular(m, opt.cap, r)) return r;
  IntMat l = m * m.transpose();
  const std::size_t rk = rank(l);
  Rat vol_zm = volume(m, opt.cap);
  r.put("vol_zm", vol_zm);
  std::size_t lattice_bases = 0;
  bool all_match = true;
  for_each_subset(l.cols(), rk, opt.cap, [&](const std::vector<std::size_t>& s) {
    IntMat lbar = l.select_columns(s);
    if (!lattices_equal(lbar, l)) return;
    ++lattice_bases;
    if (volume(lbar, opt.cap) != vol_zm) all_match = false;
  });
  r.put("column_lattice_bases", lattice_bases);
  r.passed = lattice_bases > 0 && all_match;
  if (lattice_bases == 0) r.notes = "no column basis of the lattice of L found";
  return r;
}

CheckReport check_rearrange(const IntMat& m, const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "rearrange";
  if (!require_unimodular(m, opt.cap, r)) return r;
  const std::size_t d = m.rows(), n = m.cols();
  if (rank(m) != d) {
    r.notes = "matrix must have full row rank";
    return r;
  }
  IntMat l = m * m.transpose();
  RatMat mq = to_rat(m);
  std::vector<Rat> center = zonotope_center(mq);
  std::mt19937_64 rng(opt.seed);
  std::size_t failures = 0;
  std::set<std::vector<Rat>> interior_sources, interior_images;
  for (std::size_t t = 0; t < opt.samples; ++t) {
    std::vector<Rat> alpha(n);
    for (auto& a : alpha) a = grid_sample(rng);
    // p ranges over the centered zonotope Z0(M), the domain of the bijection
    std::vector<Rat> p = mq.apply(alpha);
    for (std::size_t k = 0; k < d; ++k) p[k] -= center[k];
    try {
      auto [cell, q] = rearrange_forward(m, p);
      // interior = all L-coordinates strictly inside (-1,1) and nonzero
      auto coeff = solve(to_rat(l), p);
      bool interior = true;
      for (const Rat& c : *coeff)
        if (c == 0 || c == 1 || c == -1) interior = false;
      if (interior && !interior_sources.insert(p).second) continue;
      if (interior && !interior_images.insert(q).second) {
        ++failures;  // two distinct interior points collided
      }
    } catch (const std::exception&) {
      ++failures;
    }
  }
  // reverse direction: tile-locate sampled points of Z(L)
  std::size_t tile_failures = 0;
  for (std::size_t t = 0; t < opt.samples; ++t) {
    std::vector<Rat> gamma(d);
    for (auto& gi : gamma) gi = grid_sample(rng);
    std::vector<Rat> q = to_rat(l).apply(gamma);
    try {
      auto a = tile_locate(m, l, q);
      std::vector<Rat> shifted(d);
      for (std::size_t k = 0; k < d; ++k) {
        shifted[k] = q[k];
        for (std::size_t i = 0; i < d; ++i)
          if (a[i]) shifted[k] -= Rat(l(k, i));
      }
      if (!contains_centered(mq, shifted)) ++tile_failures;
    } catch (const std::exception&) {
      ++tile_failures;
    }
  }
  r.put("samples", opt.samples);
  r.put("forward_failures", failures);
  r.put("tile_failures", tile_failures);
  r.passed = failures == 0 && tile_failures == 0;
  return r;
}

CheckReport check_mcmullen(const IntMat& m, const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "mcmullen";
  if (!require_unimodular(m, opt.cap, r)) return r;
  const std::size_t n = m.cols();
  auto cube_projection_volume = [&](const RatMat& span_cols) -> double {
    if (span_cols.cols() == 0) return 1.0;  // projection to the origin
    RatMat st = span_cols.transpose();
    auto pseudo = solve(st * span_cols, st);
    RatMat proj = span_cols * *pseudo;  // n x n projection matrix
    return euclidean_volume_numeric(proj, opt.cap);
  };
  RatMat row_span = to_rat(row_lattice_basis(m).transpose());
  RatMat ker_span = kernel_basis(to_rat(m));
  double vol_row = cube_projection_volume(row_span);
  double vol_ker = cube_projection_volume(ker_span);
  double denom = std::max(std::abs(vol_row), std::abs(vol_ker));
  double rel = denom == 0 ? 0.0 : std::abs(vol_row - vol_ker) / denom;
  r.quantities["vol_rowspace"] = render_double(vol_row);
  r.quantities["vol_kernel"] = render_double(vol_ker);
  r.quantities["relative_difference"] = render_double(rel);
  r.passed = rel <= opt.tol;
  (void)n;
  return r;
}

CheckReport check_prism(const Graph& g, const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "prism";
  if (!g.is_connected()) {
    r.notes = "graph is not connected";
    return r;
  }
  IntMat l = laplacian(g);
  std::vector<Int> ones(g.n, Int(1));
  auto [lhs, rhs] = prism_volume_check(l, ones, opt.cap);
  r.put("vol_gamma", lhs);
  r.put("height_times_vol_zl", rhs);
  r.put("n", Int(g.n));
  r.passed = lhs == rhs;
  return r;
}

CheckReport check_thm4(const RatMat& bmat, const CheckOptions& opt) {
  CheckReport r;
  r.theorem_id = "thm4";
  if (bmat.rows() != bmat.cols() || det(bmat) == 0) {
    r.notes = "input must be square and invertible";
    return r;
  }
  auto [vol_pi, vol_p] = thm4_volumes(bmat, opt.cap);
  r.put("vol_pi", vol_pi);
  r.put("vol_p", vol_p);
  bool volumes_ok = vol_pi == vol_p;

  const std::size_t n = bmat.rows();
  RatMat gens = thm4_p_generators(bmat);
  std::mt19937_64 rng(opt.seed);
  std::size_t failures = 0;
  std::set<std::vector<Rat>> interior_sources, interior_images;
  for (std::size_t t = 0; t < opt.samples; ++t) {
    std::vector<Rat> alpha(n + 1);
    for (auto& a : alpha) a = grid_sample(rng);
    std::vector<Rat> p = gens.apply(alpha);
    try {
      std::vector<Rat> q = thm4_forward(bmat, p);
      auto gamma = solve(bmat, p);
      bool interior = true;
      for (const Rat& c : *gamma)
        if (c == 0 || c == 1 || c == -1) interior = false;
      if (interior && !interior_sources.insert(p).second) continue;
      if (interior && !interior_images.insert(q).second) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  r.put("samples", opt.samples);
  r.put("forward_failures", failures);
  r.passed = volumes_ok && failures == 0;
  if (!volumes_ok) r.notes = "vol Pi != vol P";
  return r;
}

}  // namespace zonomtt
