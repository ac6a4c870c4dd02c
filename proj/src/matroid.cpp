#include "zonomtt/matroid.hpp"

#include <map>

#include "zonomtt/lattice.hpp"

namespace zonomtt {

std::vector<std::size_t> SignVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != 0) s.push_back(i);
  return s;
}

SignVector SignVector::negated() const {
  SignVector n = *this;
  for (int& e : n.entries) e = -e;
  return n;
}

SignVector SignVector::canonical() const {
  for (int e : entries) {
    if (e > 0) return *this;
    if (e < 0) return negated();
  }
  return *this;
}

std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // c fits in 64 bits here because we bail out as soon as it passes cap
    c = c * (n - k + i) / i;
    if (c > cap)
      throw cap_exceeded("instance too large: C(" + std::to_string(n) + "," +
                         std::to_string(k) + ") exceeds the enumeration cap");
  }
  return c;
}

void for_each_subset(std::size_t n, std::size_t k, std::uint64_t cap,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  binomial_capped(n, k, cap);
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

IntMat row_lattice_basis(const IntMat& m) {
  return hnf(m.transpose()).transpose();
}

RepMatroid::RepMatroid(IntMat matrix, std::uint64_t cap)
    : matrix_(std::move(matrix)), rank_(zonomtt::rank(matrix_)), cap_(cap) {}

bool RepMatroid::independent(const std::vector<std::size_t>& subset) const {
  for (std::size_t j : subset)
    if (j >= matrix_.cols())
      throw std::out_of_range("independent: column index out of range");
  if (subset.size() > rank_) return false;
  return zonomtt::rank(matrix_.select_columns(subset)) == subset.size();
}

const std::set<std::vector<std::size_t>>& RepMatroid::bases() const {
  if (bases_ready_) return bases_;
  // Restrict to a row basis so size-r determinants decide independence.
  IntMat r = row_lattice_basis(matrix_);
  for_each_subset(matrix_.cols(), rank_, cap_,
                  [&](const std::vector<std::size_t>& s) {
                    if (det(r.select_columns(s)) != 0) bases_.insert(s);
                  });
  bases_ready_ = true;
  return bases_;
}

const std::set<SignVector>& RepMatroid::cocircuits() const {
  if (cocircuits_ready_) return cocircuits_;
  const std::size_t n = matrix_.cols();
  if (rank_ == 0) {
    cocircuits_ready_ = true;
    return cocircuits_;
  }
  // Full-row-rank matrix with the same rowspace.
  IntMat r = row_lattice_basis(matrix_);
  RatMat rq = to_rat(r);
  RatMat rt = rq.transpose();
  for_each_subset(n, rank_ - 1, cap_, [&](const std::vector<std::size_t>& s) {
    RatMat flat = rq.select_columns(s);
    RatMat u = kernel_basis(flat.transpose());
    if (u.cols() != 1) return;  // columns do not span a rank-(d-1) flat
    std::vector<Rat> c = rt.apply(u.column(0));
    // scale to primitive integer
    Int l = 1;
    for (const Rat& x : c) l = boost::multiprecision::lcm(l, den(x));
    std::vector<Int> ci(n);
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ci[i] = num(c[i] * Rat(l));
      g = boost::multiprecision::gcd(g, ci[i]);
    }
    SignVector sv;
    sv.entries.resize(n);
    // Sign pattern of the ray. For a unimodular matrix the primitive ray
    // already has entries in {-1,0,1}, so this is the ray itself; column
    // scaling changes magnitudes but not the matroid's cocircuits.
    for (std::size_t i = 0; i < n; ++i)
      sv.entries[i] = ci[i] == 0 ? 0 : (ci[i] / g < 0 ? -1 : 1);
    cocircuits_.insert(sv.canonical());
  });
  cocircuits_ready_ = true;
  return cocircuits_;
}

IntMat RepMatroid::dual_representation() const {
  RatMat k = kernel_basis(to_rat(matrix_));
  if (k.cols() == 0) return IntMat(0, matrix_.cols());
  IntMat ki;
  try {
    ki = to_int(k);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(
        "dual_representation: kernel basis not integer; "
        "the representation matrix is not unimodular");
  }
  IntMat d = ki.transpose();
  if (!is_unimodular(d, cap_))
    throw std::invalid_argument(
        "dual_representation: computed dual is not unimodular");
  return d;
}

std::set<SignVector> RepMatroid::circuits() const {
  IntMat d = dual_representation();
  if (d.rows() == 0) return {};
  RepMatroid dual(d, cap_);
  return dual.cocircuits();
}

bool is_unimodular(const IntMat& m, std::uint64_t cap) {
  IntMat r = row_lattice_basis(m);
  const std::size_t rk = r.rows();
  if (rk == 0) return true;
  bool ok = true;
  for_each_subset(m.cols(), rk, cap, [&](const std::vector<std::size_t>& s) {
    if (!ok) return;
    Int d = det(r.select_columns(s));
    if (d < -1 || d > 1) ok = false;
  });
  return ok;
}

bool is_totally_unimodular(const IntMat& m, std::uint64_t cap) {
  const std::size_t d = m.rows(), n = m.cols();
  // All square minors bottom-up, memoizing determinants by (rowset, colset)
  // for the Laplace expansion.
  if (d > 20 || n > 20)
    throw cap_exceeded("is_totally_unimodular: matrix too large");
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= std::min(d, n); ++k) {
    std::uint64_t count;
    try {
      count = binomial_capped(d, k, cap) * binomial_capped(n, k, cap);
    } catch (const cap_exceeded&) {
      throw;
    }
    total += count;
    if (total > cap)
      throw cap_exceeded("is_totally_unimodular: minor count exceeds cap");
  }

  std::map<std::pair<std::uint64_t, std::uint64_t>, Int> memo;
  std::function<Int(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>
      minor = [&](const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) -> Int {
    if (rows.size() == 1) return m(rows[0], cols[0]);
    std::uint64_t rmask = 0, cmask = 0;
    for (auto i : rows) rmask |= (std::uint64_t{1} << i);
    for (auto j : cols) cmask |= (std::uint64_t{1} << j);
    auto it = memo.find({rmask, cmask});
    if (it != memo.end()) return it->second;
    Int result = 0;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols(cols.size() - 1);
    int sign = 1;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (m(rows[0], cols[j]) != 0) {
        std::size_t t = 0;
        for (std::size_t jj = 0; jj < cols.size(); ++jj)
          if (jj != j) sub_cols[t++] = cols[jj];
        result += sign * m(rows[0], cols[j]) * minor(sub_rows, sub_cols);
      }
      sign = -sign;
    }
    memo.emplace(std::make_pair(rmask, cmask), result);
    return result;
  };

  for (std::size_t k = 1; k <= std::min(d, n); ++k) {
    bool ok = true;
    for_each_subset(d, k, cap, [&](const std::vector<std::size_t>& rows) {
      if (!ok) return;
      for_each_subset(n, k, cap, [&](const std::vector<std::size_t>& cols) {
        if (!ok) return;
        Int v = minor(rows, cols);
        if (v < -1 || v > 1) ok = false;
      });
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace zonomtt
