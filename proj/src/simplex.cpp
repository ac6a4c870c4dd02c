#include "zonomtt/simplex.hpp"

#include <stdexcept>

namespace zonomtt {

std::optional<std::vector<Rat>> lp_feasible_point(const RatMat& a,
                                                  const std::vector<Rat>& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw std::invalid_argument("lp_feasible: dimension mismatch");

  // Tableau for phase 1: minimize the sum of artificials z_1..z_m subject to
  // [A | I] (x, z) = b with rows flipped so b >= 0. Columns 0..n-1 are the
  // original variables, n..n+m-1 the artificials, last column the rhs.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(width, Rat(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    int flip = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip * a(i, j);
    t[i][n + i] = 1;
    t[i][width - 1] = flip * b[i];
    basis[i] = n + i;
  }
  // Objective row: reduced costs of minimizing sum of artificials.
  std::vector<Rat> obj(width, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j) obj[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) obj[n + i] = 0;

  while (true) {
    // Bland: entering = lowest-index column with negative reduced cost.
    std::size_t enter = width - 1;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width - 1) break;  // optimal

    // Bland: leaving = min ratio, ties broken by lowest basis variable index.
    std::size_t leave = m;
    Rat best_ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded below cannot happen for phase 1

    // Pivot.
    Rat inv = Rat(1) / t[leave][enter];
    for (std::size_t j = 0; j < width; ++j) t[leave][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (std::size_t j = 0; j < width; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  // Feasible iff all artificials are zero, i.e. the phase-1 optimum is 0.
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n && t[i][width - 1] != 0) return std::nullopt;

  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  return x;
}

}  // namespace zonomtt
