#include "zonomtt/lattice.hpp"

#include <stdexcept>

namespace zonomtt {

namespace {

// Column HNF in place on `m`, mirroring every column operation on `u`
// (when non-null). Returns the rank; afterwards columns [0, rank) hold the
// staircase and columns [rank, n) are zero.
std::size_t column_hnf(IntMat& m, IntMat* u) {
  const std::size_t rows = m.rows(), cols = m.cols();
  auto swap_cols = [&](IntMat& a, std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, x), a(i, y));
  };
  auto axpy = [&](IntMat& a, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += f * a(i, src);
  };
  auto negate_col = [&](IntMat& a, std::size_t x) {
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, x) = -a(i, x);
  };

  std::size_t c = 0;
  for (std::size_t row = 0; row < rows && c < cols; ++row) {
    // Euclidean reduction across columns [c, cols) in this row.
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j) {
        if (m(row, j) == 0) continue;
        if (best == cols || int_abs(m(row, j)) < int_abs(m(row, best))) best = j;
      }
      if (best == cols) break;  // row is zero on [c, cols)
      if (best != c) {
        swap_cols(m, c, best);
        if (u) swap_cols(*u, c, best);
      }
      bool done = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (m(row, j) == 0) continue;
        Int q = m(row, j) / m(row, c);
        axpy(m, j, c, -q);
        if (u) axpy(*u, j, c, -q);
        if (m(row, j) != 0) done = false;
      }
      if (done) break;
    }
    if (c < cols && m(row, c) != 0) {
      if (m(row, c) < 0) {
        negate_col(m, c);
        if (u) negate_col(*u, c);
      }
      const Int& pivot = m(row, c);
      for (std::size_t j = 0; j < c; ++j) {
        // floor division so the residue lands in [0, pivot)
        Int v = m(row, j);
        Int q = v / pivot;
        if (v - q * pivot < 0) q -= 1;
        if (q != 0) {
          axpy(m, j, c, -q);
          if (u) axpy(*u, j, c, -q);
        }
      }
      ++c;
    }
  }
  return c;
}

}  // namespace

IntMat hnf(const IntMat& a) {
  IntMat m = a;
  std::size_t r = column_hnf(m, nullptr);
  std::vector<std::size_t> keep(r);
  for (std::size_t j = 0; j < r; ++j) keep[j] = j;
  return m.select_columns(keep);
}

HnfTransform hnf_with_transform(const IntMat& a) {
  IntMat m = a;
  IntMat u = IntMat::identity(a.cols());
  std::size_t r = column_hnf(m, &u);
  std::vector<std::size_t> keep(r);
  for (std::size_t j = 0; j < r; ++j) keep[j] = j;
  return HnfTransform{m.select_columns(keep), std::move(u), r};
}

bool lattices_equal(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) return false;
  return hnf(a) == hnf(b);
}

IntMat integer_kernel(const IntMat& a) {
  auto t = hnf_with_transform(a);
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = t.rank; j < a.cols(); ++j) zero_cols.push_back(j);
  return t.u.select_columns(zero_cols);
}

IntMat induced_lattice_basis(const IntMat& a) {
  // The saturation is the integer kernel of any matrix whose rows span the
  // orthogonal complement of the column span.
  RatMat k = kernel_basis(to_rat(a.transpose()));
  if (k.cols() == 0) {
    // full column span: the saturation is all of Z^rows
    return hnf(IntMat::identity(a.rows()));
  }
  // clear denominators column by column
  IntMat ki(k.rows(), k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j) {
    Int l = 1;
    for (std::size_t i = 0; i < k.rows(); ++i)
      l = boost::multiprecision::lcm(l, den(k(i, j)));
    for (std::size_t i = 0; i < k.rows(); ++i) ki(i, j) = num(k(i, j) * Rat(l));
  }
  return hnf(integer_kernel(ki.transpose()));
}

Rat normalized_volume(const RatMat& cols, const Lattice& ambient) {
  const IntMat& basis = ambient.basis();
  if (cols.cols() != basis.cols())
    throw std::invalid_argument(
        "normalized_volume: column count must equal the ambient rank");
  auto t = solve(to_rat(basis), cols);
  if (!t)
    throw std::invalid_argument("normalized_volume: columns outside the span");
  // solve() returns one solution; basis has full column rank so residual
  // vanishes exactly when cols lie in the span.
  RatMat check = to_rat(basis) * *t;
  if (check != cols)
    throw std::invalid_argument("normalized_volume: columns outside the span");
  return rat_abs(det(*t));
}

}  // namespace zonomtt
