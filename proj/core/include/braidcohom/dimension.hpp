#pragma once

#include <vector>

#include "braidcohom/bignat.hpp"
#include "braidcohom/invariant_cycles.hpp"

namespace braidcohom {

/// All (λ, d) with λ ⊢ n having n - degree parts, d non-increasing inside runs
/// of equal big parts, max(0, Σλ_big - n + q) <= Σd <= q, and every block
/// count pi_count(λ_i, d_i) nonzero. Partitions that vanish by part count
/// are skipped.
std::vector<MarkedPartition> marked_partitions(int n, int q, int degree);

/// Product over distinct (λ_i, d_i) groups of multiplicity m:
/// odd λ:  Σ_b C(m-1, b-1) C(Π, b),   even λ:  C(Π, m).
BigNat marked_partition_contribution(MarkedPartition const &mp);

/// dim H^degree(P_n)^G for G = S_{n-q} x S_q.
BigNat dim_invariant(int n, int q, int degree);

/// Closed-form value for q in {1, 2, 3}, read from the printed residue
/// tables (boundary degrees n-1, n-2, n-3 take precedence over the main
/// range). Throws DomainError for other q; a non-integral table entry
/// raises InternalConsistencyError.
BigNat closed_form(int q, int n, int degree);

struct DimTable {
  int n = 0;
  int q = 0;
  std::vector<BigNat> dims;  // indexed by degree 0..n-1
};

/// Requires n >= 2 and 0 <= q <= n - q. Degrees are computed in parallel.
DimTable table(int n, int q);

} // namespace braidcohom
