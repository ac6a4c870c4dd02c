#include "zonomtt/zonotope.hpp"

#include <cmath>
#include <stdexcept>

#include "zonomtt/simplex.hpp"

namespace zonomtt {

Rat volume(const IntMat& m, std::uint64_t cap) {
  const std::size_t d = m.rows(), n = m.cols();
  const std::size_t r = rank(m);
  if (r == 0) return 1;  // a point; empty product convention
  // Lattice coordinates: S * T = M with S a basis of the saturation, so T is
  // an integer r x n matrix and volumes are plain determinant sums.
  IntMat s = induced_lattice_basis(m);
  auto tq = solve(to_rat(s), to_rat(m));
  if (!tq) throw std::logic_error("volume: saturation basis does not span");
  IntMat t = to_int(*tq);
  Rat vol = 0;
  for_each_subset(n, r, cap, [&](const std::vector<std::size_t>& b) {
    Int dt = det(t.select_columns(b));
    if (dt != 0) vol += Rat(int_abs(dt));
  });
  (void)d;
  return vol;
}

Rat volume(const RatMat& m, std::uint64_t cap) {
  Int l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      l = boost::multiprecision::lcm(l, den(m(i, j)));
  RatMat scaled = m;
  if (l != 1)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) *= Rat(l);
  IntMat mi = to_int(scaled);
  std::size_t r = rank(mi);
  Rat v = volume(mi, cap);
  // undo the scale factor per dimension
  Rat scale = 1;
  for (std::size_t k = 0; k < r; ++k) scale *= Rat(l);
  return v / scale;
}

double euclidean_volume_numeric(const RatMat& m, std::uint64_t cap) {
  const std::size_t r = rank(m);
  if (r == 0) return 1.0;
  double vol = 0.0;
  for_each_subset(m.cols(), r, cap, [&](const std::vector<std::size_t>& b) {
    Rat g = gram_det(m.select_columns(b));
    if (g != 0) vol += std::sqrt(to_double(g));
  });
  return vol;
}

bool contains(const RatMat& m, const std::vector<Rat>& p) {
  const std::size_t d = m.rows(), n = m.cols();
  if (p.size() != d) throw std::invalid_argument("contains: dimension mismatch");
  // alpha in [0,1]^n as alpha + slack = 1, alpha, slack >= 0.
  RatMat a(d + n, 2 * n);
  std::vector<Rat> b(d + n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    b[i] = p[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    a(d + i, i) = 1;
    a(d + i, n + i) = 1;
    b[d + i] = 1;
  }
  return lp_feasible(a, b);
}

std::vector<Rat> zonotope_center(const RatMat& m) {
  std::vector<Rat> c(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) c[i] += m(i, j);
    c[i] /= 2;
  }
  return c;
}

bool contains_centered(const RatMat& m, const std::vector<Rat>& p) {
  std::vector<Rat> c = zonotope_center(m);
  std::vector<Rat> shifted(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) shifted[i] = p[i] + c[i];
  return contains(m, shifted);
}

IntMat facet_barycenter_matrix(const IntMat& m, std::uint64_t cap) {
  RepMatroid matroid(m, cap);
  const auto& cocs = matroid.cocircuits();
  IntMat cstar(m.cols(), cocs.size());
  std::size_t j = 0;
  for (const auto& c : cocs) {
    for (std::size_t i = 0; i < m.cols(); ++i) cstar(i, j) = c.entries[i];
    ++j;
  }
  return m * cstar;
}

std::pair<RearrangeCell, std::vector<Rat>> rearrange_forward(
    const IntMat& m, const std::vector<Rat>& p) {
  const std::size_t d = m.rows();
  IntMat l = m * m.transpose();
  if (rank(l) != d)
    throw std::invalid_argument("rearrange_forward: L = MM^T is singular");
  auto alpha = solve(to_rat(l), p);
  if (!alpha) throw std::invalid_argument("rearrange_forward: p outside span");
  RearrangeCell cell;
  cell.epsilon.entries.resize(d);
  cell.shift.assign(d, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    if ((*alpha)[i] < -1 || (*alpha)[i] > 1)
      throw std::logic_error(
          "rearrange_forward: |alpha_i| > 1; input point not in Z0(M)?");
    cell.epsilon.entries[i] = (*alpha)[i] < 0 ? -1 : 1;
    if (cell.epsilon.entries[i] < 0)
      for (std::size_t k = 0; k < d; ++k) cell.shift[k] += Rat(l(k, i));
  }
  std::vector<Rat> q(d);
  for (std::size_t k = 0; k < d; ++k) q[k] = p[k] + cell.shift[k];
  // delta = alpha + a must land in the unit cube, i.e. q in Z(L).
  for (std::size_t i = 0; i < d; ++i) {
    Rat delta = (*alpha)[i] + (cell.epsilon.entries[i] < 0 ? 1 : 0);
    if (delta < 0 || delta > 1)
      throw std::logic_error("rearrange_forward: image left Z(L)");
  }
  return {std::move(cell), std::move(q)};
}

std::vector<int> tile_locate(const IntMat& m, const IntMat& l,
                             const std::vector<Rat>& q) {
  const std::size_t d = l.rows();
  auto gamma = solve(to_rat(l), q);
  if (!gamma) throw std::invalid_argument("tile_locate: q outside span of L");
  RatMat mq = to_rat(m);
  auto try_a = [&](const std::vector<int>& a) {
    std::vector<Rat> shifted(d);
    for (std::size_t k = 0; k < d; ++k) {
      shifted[k] = q[k];
      for (std::size_t i = 0; i < d; ++i)
        if (a[i]) shifted[k] -= Rat(l(k, i));
    }
    return contains_centered(mq, shifted);
  };
  // Rounding candidate first: a_i = 1 when gamma_i is past the midpoint.
  std::vector<int> a(d);
  for (std::size_t i = 0; i < d; ++i) a[i] = (*gamma)[i] > Rat(1, 2) ? 1 : 0;
  if (try_a(a)) return a;
  std::vector<int> flipped = a;
  for (int& e : flipped) e = 1 - e;
  if (try_a(flipped)) return flipped;
  if (d > 20) throw std::invalid_argument("tile_locate: dimension too large");
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
    std::vector<int> c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = (mask >> i) & 1;
    if (c == a || c == flipped) continue;
    if (try_a(c)) return c;
  }
  throw std::logic_error("tile_locate: no {0,1}^d shift found; q not in Z(L)?");
}

RatMat thm4_p_generators(const RatMat& bmat) {
  const std::size_t n = bmat.rows();
  if (bmat.cols() != n) throw std::invalid_argument("thm4: matrix not square");
  std::vector<Rat> beta(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) beta[i] += bmat(i, j) / Rat(Int(n));
  RatMat g(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, 0) = beta[i];
    for (std::size_t j = 0; j < n; ++j) g(i, j + 1) = bmat(i, j) - beta[i];
  }
  return g;
}

std::pair<Rat, Rat> thm4_volumes(const RatMat& bmat, std::uint64_t cap) {
  Rat vol_pi = rat_abs(det(bmat));
  if (vol_pi == 0) throw std::invalid_argument("thm4_volumes: singular input");
  Rat vol_p = volume(thm4_p_generators(bmat), cap);
  return {vol_pi, vol_p};
}

std::vector<Rat> thm4_forward(const RatMat& bmat, const std::vector<Rat>& p) {
  const std::size_t n = bmat.rows();
  if (!contains(thm4_p_generators(bmat), p))
    throw std::invalid_argument("thm4_forward: p not in P");
  auto gamma = solve(bmat, p);
  if (!gamma) throw std::invalid_argument("thm4_forward: p outside span");
  std::vector<Rat> q = p;
  for (std::size_t i = 0; i < n; ++i) {
    if ((*gamma)[i] < -1 || (*gamma)[i] > 1)
      throw std::logic_error("thm4_forward: |gamma_i| > 1");
    if ((*gamma)[i] < 0)
      for (std::size_t k = 0; k < n; ++k) q[k] += bmat(k, i);
  }
  auto check = solve(bmat, q);
  for (std::size_t i = 0; i < n; ++i)
    if ((*check)[i] < 0 || (*check)[i] > 1)
      throw std::logic_error("thm4_forward: image left Z(B)");
  return q;
}

std::pair<Rat, Rat> prism_volume_check(const IntMat& pgens,
                                       const std::vector<Int>& v,
                                       std::uint64_t cap) {
  const std::size_t m = pgens.rows();
  if (rank(pgens) != m - 1)
    throw std::invalid_argument("prism_volume_check: generators must have rank m-1");
  IntMat full(m, pgens.cols() + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < pgens.cols(); ++j) full(i, j) = pgens(i, j);
    full(i, pgens.cols()) = v[i];
  }
  if (rank(full) != m)
    throw std::invalid_argument("prism_volume_check: v lies in the span");
  Rat lhs = volume(full, cap);
  // primitive integer normal of the span
  IntMat u = integer_kernel(pgens.transpose());
  Int height = 0;
  for (std::size_t i = 0; i < m; ++i) height += u(i, 0) * v[i];
  Rat rhs = Rat(int_abs(height)) * volume(pgens, cap);
  return {lhs, rhs};
}

}  // namespace zonomtt
