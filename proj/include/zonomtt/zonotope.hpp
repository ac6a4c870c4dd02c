#pragma once

#include "zonomtt/lattice.hpp"
#include "zonomtt/matroid.hpp"

namespace zonomtt {

/// Piece of the dissect-and-rearrange subdivision: the sign vector epsilon
/// over {-1,+1}^d and the translation v = sum of L_i over negative entries.
struct RearrangeCell {
  SignVector epsilon;
  std::vector<Rat> shift;
};

/// Lattice-normalized volume of Z(M): the sum of |det| over the bases of the
/// column matroid, measured in the induced lattice Z^d intersect span(M).
/// Rational input is scaled to integer and rescaled per dimension.
Rat volume(const RatMat& m, std::uint64_t cap = kDefaultCap);
Rat volume(const IntMat& m, std::uint64_t cap = kDefaultCap);

/// Euclidean rank-dimensional volume, sum of sqrt(gram_det) over bases.
double euclidean_volume_numeric(const RatMat& m, std::uint64_t cap = kDefaultCap);

/// Exact membership p in Z(M), via phase-1 simplex on Ma = p, a in [0,1]^n.
bool contains(const RatMat& m, const std::vector<Rat>& p);

/// Barycenter of Z(M): half the row sums of the generator matrix.
std::vector<Rat> zonotope_center(const RatMat& m);

/// Membership in the centered zonotope Z0(M) = Z(M) - center.
bool contains_centered(const RatMat& m, const std::vector<Rat>& p);

/// B = M * C* with the canonical cocircuits stacked as columns, one column
/// per +/- facet pair. Twice the facet barycenters of the centered zonotope.
IntMat facet_barycenter_matrix(const IntMat& m, std::uint64_t cap = kDefaultCap);

/// Dissection step of the volume bijection Z0(M) -> Z(L), with Z0(M) the
/// centered zonotope and Z(L) anchored at the origin: p = L alpha with
/// |alpha_i| <= 1, epsilon_i = sign(alpha_i) (+ at zero), q = p + v_eps.
/// Asserts q lands in Z(L).
std::pair<RearrangeCell, std::vector<Rat>> rearrange_forward(
    const IntMat& m, const std::vector<Rat>& p);

/// Reverse inclusion: finds a in {0,1}^d with q - L a in Z0(M), trying
/// rounding candidates of L^-1 q before the exhaustive 2^d sweep.
std::vector<int> tile_locate(const IntMat& m, const IntMat& l,
                             const std::vector<Rat>& q);

/// vol(Pi) = |det B| and vol(P) for P generated by the barycenter beta of
/// the columns together with the columns shifted by -beta.
std::pair<Rat, Rat> thm4_volumes(const RatMat& bmat, std::uint64_t cap = kDefaultCap);

/// Generator matrix of P in thm4_volumes: [beta | b_1-beta | ... | b_n-beta].
RatMat thm4_p_generators(const RatMat& bmat);

/// Rearrangement map P -> Pi: p = sum gamma_i b_i with gamma in [-1,1]^n,
/// q = p + sum of b_i over negative gamma_i. Asserts q in Z(B).
std::vector<Rat> thm4_forward(const RatMat& bmat, const std::vector<Rat>& p);

/// Prism volume identity: lhs = vol Z([P|v]), rhs = h_S(v) * vol_S Z(P)
/// with h_S the lattice height over the span of the rank-(m-1) generators.
std::pair<Rat, Rat> prism_volume_check(const IntMat& pgens,
                                       const std::vector<Int>& v,
                                       std::uint64_t cap = kDefaultCap);

}  // namespace zonomtt
