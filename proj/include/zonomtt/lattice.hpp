#pragma once

#include "zonomtt/linalg.hpp"

namespace zonomtt {

/// Column-style Hermite normal form: zero columns dropped, staircase of
/// positive pivots, entries to the left of a pivot reduced into [0, pivot).
/// Unique for a given column lattice.
IntMat hnf(const IntMat& a);

/// HNF together with a unimodular U such that A*U = [H | 0].
struct HnfTransform {
  IntMat h;
  IntMat u;
  std::size_t rank;  // columns of h
};
HnfTransform hnf_with_transform(const IntMat& a);

bool lattices_equal(const IntMat& a, const IntMat& b);

/// Z-basis of the saturation Z^rows intersect columnspace_Q(A).
IntMat induced_lattice_basis(const IntMat& a);

/// Integer basis of {x in Z^cols : A x = 0}.
IntMat integer_kernel(const IntMat& a);

/// Lattice as a column span with a lazily computed HNF.
class Lattice {
 public:
  explicit Lattice(IntMat generators) : generators_(std::move(generators)) {}

  const IntMat& generators() const { return generators_; }
  const IntMat& basis() const {
    if (!hnf_ready_) {
      hnf_ = zonomtt::hnf(generators_);
      hnf_ready_ = true;
    }
    return hnf_;
  }
  std::size_t rank() const { return basis().cols(); }

 private:
  IntMat generators_;
  mutable IntMat hnf_;
  mutable bool hnf_ready_ = false;
};

/// |det T| where cols = basis(ambient) * T. Requires cols inside the
/// ambient span, independent, and as many as rank(ambient).
Rat normalized_volume(const RatMat& cols, const Lattice& ambient);

}  // namespace zonomtt
