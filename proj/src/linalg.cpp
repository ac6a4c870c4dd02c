#include "zonomtt/linalg.hpp"

#include <stdexcept>

namespace zonomtt {

Rat Poly::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    v = v * x + *it;
  return v;
}

Int det(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = v / prev;  // exact by Bareiss
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

Rat det(const RatMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = a.rows();
  RatMat m = a;
  Rat result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      result = -result;
    }
    result *= m(k, k);
    Rat inv = Rat(1) / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat f = m(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return result;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(RatMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
    Rat inv = Rat(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMat& a) {
  RatMat m = a;
  return echelon(m).size();
}

std::size_t rank(const IntMat& a) { return rank(to_rat(a)); }

std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  RatMat m(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    m(i, a.cols()) = b[i];
  }
  auto pivots = echelon(m);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m(r, a.cols());
  return x;
}

std::optional<RatMat> solve(const RatMat& a, const RatMat& b) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  RatMat x(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = solve(a, b.column(j));
    if (!col) return std::nullopt;
    x.set_column(j, *col);
  }
  return x;
}

Poly char_poly(const RatMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const std::size_t n = a.rows();
  // p(x) = x^n + c[n-1] x^(n-1) + ... + c[0]
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  RatMat m = RatMat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
    Rat ck = -tr / Rat(Int(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
  }
  return Poly{std::move(c)};
}

bool is_symmetric(const RatMat& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

Rat product_nonzero_eigenvalues(const RatMat& a) {
  if (!is_symmetric(a))
    throw std::invalid_argument(
        "product_nonzero_eigenvalues: input must be symmetric");
  Poly p = char_poly(a);
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (p.coefficients[k] != 0) {
      Rat c = p.coefficients[k];
      return ((n - k) % 2 == 0) ? c : Rat(-c);
    }
  }
  return 0;  // unreachable: the polynomial is monic
}

RatMat kernel_basis(const RatMat& a) {
  RatMat m = a;
  auto pivots = echelon(m);
  std::vector<std::size_t> free;
  {
    std::size_t p = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (p < pivots.size() && pivots[p] == j)
        ++p;
      else
        free.push_back(j);
    }
  }
  RatMat k(a.cols(), free.size());
  for (std::size_t fj = 0; fj < free.size(); ++fj) {
    k(free[fj], fj) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k(pivots[r], fj) = -m(r, free[fj]);
  }
  return k;
}

Rat gram_det(const RatMat& b) { return det(b.transpose() * b); }

}  // namespace zonomtt
