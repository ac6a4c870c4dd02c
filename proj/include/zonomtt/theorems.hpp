#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "zonomtt/graph.hpp"
#include "zonomtt/zonotope.hpp"

namespace zonomtt {

/// Structured result of a theorem checker: exact witness quantities
/// (pre-rendered, rationals as `p/q`) plus free-form notes.
struct CheckReport {
  std::string theorem_id;
  bool passed = false;
  std::map<std::string, std::string> quantities;
  std::string notes;

  void put(const std::string& key, const Rat& v) { quantities[key] = to_string(v); }
  void put(const std::string& key, const Int& v) { quantities[key] = v.str(); }
  void put(const std::string& key, std::size_t v) {
    quantities[key] = std::to_string(v);
  }
};

struct CheckOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  double tol = 1e-9;
  std::uint64_t cap = kDefaultCap;
};

/// vol Z(M) = vol Z(L) = det L = product of eigenvalues of L = #bases,
/// for unimodular M reduced to full row rank.
CheckReport check_matroid_mtt(const IntMat& m, const CheckOptions& opt = {});

/// Classical matrix tree theorem plus the Lambda/Gamma volume identities.
CheckReport check_classical_mtt(const Graph& g, const CheckOptions& opt = {});

/// The row lattice of M equals the lattice spanned by its cocircuits.
CheckReport check_cocircuit_lattice(const IntMat& m, const CheckOptions& opt = {});

/// The column lattices of L and of the scaled barycenter matrix B coincide.
CheckReport check_barycenter_lattice(const IntMat& m, const CheckOptions& opt = {});

/// vol Z(MD) = vol Z(MDM^T) for an integer diagonal D.
CheckReport check_scaled(const IntMat& m, const std::vector<Int>& d,
                         const CheckOptions& opt = {});

/// Weighted volume identity for positive rational weights, cross-checked
/// against the weighted basis sum.
CheckReport check_weighted(const IntMat& m, const std::vector<Rat>& w,
                           const CheckOptions& opt = {});

/// Z(L) decomposes into |bases(M^T)| equal-volume parallelepipeds.
CheckReport check_zl_decomposition(const IntMat& m, const CheckOptions& opt = {});

/// vol Z(M) = vol Z(Lbar) for every column basis Lbar of the lattice of L.
CheckReport check_corank_mtt(const IntMat& m, const CheckOptions& opt = {});

/// Sampled dissect-and-rearrange round trip between Z(M) and Z(L).
CheckReport check_rearrange(const IntMat& m, const CheckOptions& opt = {});

/// Numeric McMullen identity: cube projections onto rowspace and kernel
/// have equal Euclidean volume.
CheckReport check_mcmullen(const IntMat& m, const CheckOptions& opt = {});

/// Prism identity vol Z(Gamma) = n vol Z(L) for a connected graph.
CheckReport check_prism(const Graph& g, const CheckOptions& opt = {});

/// vol Pi = vol P for an invertible generator matrix, with sampled forward map.
CheckReport check_thm4(const RatMat& bmat, const CheckOptions& opt = {});

}  // namespace zonomtt
