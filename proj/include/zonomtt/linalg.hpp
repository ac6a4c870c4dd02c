#pragma once

#include <optional>
#include <vector>

#include "zonomtt/matrix.hpp"

namespace zonomtt {

/// Dense polynomial; coefficients[i] is the coefficient of x^i.
struct Poly {
  std::vector<Rat> coefficients;

  std::size_t degree() const {
    return coefficients.empty() ? 0 : coefficients.size() - 1;
  }
  Rat eval(const Rat& x) const;
  bool operator==(const Poly&) const = default;
};

/// Exact determinant. Integer input runs fraction-free Bareiss elimination,
/// rational input plain Gaussian elimination.
Int det(const IntMat& a);
Rat det(const RatMat& a);

std::size_t rank(const RatMat& a);
std::size_t rank(const IntMat& a);

/// Some exact solution of Ax = b, or nullopt when inconsistent.
std::optional<std::vector<Rat>> solve(const RatMat& a, const std::vector<Rat>& b);

/// Solves AX = B column by column; nullopt when any column is inconsistent.
std::optional<RatMat> solve(const RatMat& a, const RatMat& b);

/// Monic characteristic polynomial det(xI - A) via Faddeev-LeVerrier.
Poly char_poly(const RatMat& a);

/// Product of the nonzero eigenvalues of a symmetric matrix, read off the
/// lowest nonzero coefficient of the characteristic polynomial: for
/// p(x) = x^n + ... + c_k x^k with c_k != 0 the product is (-1)^(n-k) c_k.
Rat product_nonzero_eigenvalues(const RatMat& a);

/// Columns form a Q-basis of ker A (empty matrix when A is injective).
RatMat kernel_basis(const RatMat& a);

/// det(B^T B), exact.
Rat gram_det(const RatMat& b);

bool is_symmetric(const RatMat& a);

}  // namespace zonomtt
