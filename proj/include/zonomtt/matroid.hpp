#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "zonomtt/linalg.hpp"

namespace zonomtt {

/// Thrown when an enumeration would exceed the configured instance cap.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultCap = 200000;

/// Element of {-1,0,+1}^n. The canonical representative of a +/- pair has
/// its first nonzero entry equal to +1.
struct SignVector {
  std::vector<int> entries;

  std::vector<std::size_t> support() const;
  SignVector negated() const;
  SignVector canonical() const;
  bool operator==(const SignVector&) const = default;
  auto operator<=>(const SignVector&) const = default;
};

/// Matroid view of a representation matrix: column independence structure
/// with write-once caches for bases and cocircuits.
class RepMatroid {
 public:
  explicit RepMatroid(IntMat matrix, std::uint64_t cap = kDefaultCap);

  const IntMat& matrix() const { return matrix_; }
  std::size_t ground_size() const { return matrix_.cols(); }
  std::size_t rank() const { return rank_; }

  bool independent(const std::vector<std::size_t>& subset) const;

  /// All column subsets of size rank with linearly independent columns.
  const std::set<std::vector<std::size_t>>& bases() const;

  /// Canonical signed cocircuits, one per +/- pair: sign patterns of the
  /// rays spanned by rank-(r-1) column flats. For a unimodular matrix the
  /// sign pattern equals the primitive ray itself.
  const std::set<SignVector>& cocircuits() const;

  /// Signed circuits, via cocircuits of the dual representation.
  std::set<SignVector> circuits() const;

  /// Integer matrix whose rows span ker(matrix); unimodular for unimodular
  /// input (asserted).
  IntMat dual_representation() const;

 private:
  IntMat matrix_;
  std::size_t rank_;
  std::uint64_t cap_;
  mutable std::set<std::vector<std::size_t>> bases_;
  mutable bool bases_ready_ = false;
  mutable std::set<SignVector> cocircuits_;
  mutable bool cocircuits_ready_ = false;
};

/// True iff every rank-sized minor of M lies in {-1,0,1}. M is first
/// row-reduced to a full-row-rank matrix spanning the same row lattice.
bool is_unimodular(const IntMat& m, std::uint64_t cap = kDefaultCap);

/// True iff every square minor of M lies in {-1,0,1}.
bool is_totally_unimodular(const IntMat& m, std::uint64_t cap = kDefaultCap);

/// Full-row-rank matrix with the same row lattice as M (row-style HNF).
IntMat row_lattice_basis(const IntMat& m);

/// Iterates over all k-subsets of [0,n) in lexicographic order.
/// Throws cap_exceeded when C(n,k) > cap.
void for_each_subset(std::size_t n, std::size_t k, std::uint64_t cap,
                     const std::function<void(const std::vector<std::size_t>&)>& fn);

std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap);

}  // namespace zonomtt
