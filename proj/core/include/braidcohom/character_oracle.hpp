#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "braidcohom/bignat.hpp"
#include "braidcohom/combinatorics.hpp"
#include "braidcohom/invariant_cycles.hpp"
#include "braidcohom/permutation.hpp"
#include "braidcohom/root_of_unity.hpp"

namespace braidcohom::character {

/// z = ν ∘ c in Z_λ. c rotates block i by rotations[i] steps; ν then moves
/// block i onto block block_map[i] (same size) keeping offsets. So
/// z(start_i + r) = start_{block_map[i]} + (r + rotations[i]) mod λ_i.
struct CentralizerElement {
  std::vector<int> block_map;
  std::vector<int> rotations;

  Permutation to_permutation(Partition const &partition) const;

  friend bool operator==(CentralizerElement const &, CentralizerElement const &) = default;
};

CentralizerElement identity_element(Partition const &partition);

/// Calls f(element) once for each of the |Z_λ| elements.
template <class F>
void for_each_centralizer_element(Partition const &partition, F &&f) {
  auto const &parts = partition.parts();
  auto j = parts.size();
  CentralizerElement z = identity_element(partition);
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // [begin, end) in block indices
  for (std::size_t i = 0; i < j;) {
    auto k = i;
    while (k < j && parts[k] == parts[i])
      ++k;
    if (k - i > 1)
      runs.emplace_back(i, k);
    i = k;
  }
  std::vector<std::size_t> rotating;
  for (std::size_t i = 0; i < j; ++i)
    if (parts[i] > 1)
      rotating.push_back(i);

  for (;;) {
    std::fill(z.rotations.begin(), z.rotations.end(), 0);
    for (;;) {
      f(static_cast<CentralizerElement const &>(z));
      std::size_t t = rotating.size();
      while (t > 0) {
        auto b = rotating[t - 1];
        if (++z.rotations[b] < parts[b])
          break;
        z.rotations[b] = 0;
        --t;
      }
      if (t == 0)
        break;
    }
    std::size_t r = runs.size();
    while (r > 0) {
      auto [lo, hi] = runs[r - 1];
      auto first = z.block_map.begin() + static_cast<std::ptrdiff_t>(lo);
      auto last = z.block_map.begin() + static_cast<std::ptrdiff_t>(hi);
      if (std::next_permutation(first, last))
        break;
      --r;
    }
    if (r == 0)
      return;
  }
}

/// All elements, in enumeration order. Intended for small λ.
std::vector<CentralizerElement> centralizer_elements(Partition const &partition);

/// The (ν, c) decomposition of z, or nullopt when z does not centralise the
/// standard permutation of cycle type λ.
std::optional<CentralizerElement> decompose(Partition const &partition, Permutation const &z);

/// Whether the sign character inside φ_λ is taken on the rotation part c
/// only, or on the whole element ν·c.
enum class EpsilonScope { rotations, whole_element };

/// ζ_λ(νc) = α_λ(ν) · ε(c) · Π e^{2πi k_i/λ_i}, with α_λ = (-1)^{λ+1} on
/// each swap of two equal blocks. With whole_element, ε(ν) is multiplied in.
RootOfUnity zeta_eval(Partition const &partition, CentralizerElement const &z,
                      EpsilonScope scope = EpsilonScope::rotations);
RootOfUnity zeta_eval(Partition const &partition, Permutation const &z,
                      EpsilonScope scope = EpsilonScope::rotations);

/// Representatives of G\S_n for G = S_{n-q} x S_q: products of disjoint
/// transpositions (k_1,l_1)...(k_d,l_d) with k_i < n-q <= l_i, both
/// increasing. C(n, q) elements, ordered by d then lexicographically.
std::vector<Permutation> coset_representatives(int n, int q);

/// Position i is marked when s(i) lands in the last q letters.
DeltaVector delta_of(Permutation const &s, int q);

/// One representative of each double coset G\S_n/Z_λ (the first element of
/// its class in coset_representatives order).
std::vector<Permutation> double_coset_reps(int n, int q, Partition const &partition);

/// 1 iff ζ_λ(z) = 1 for every z in Z_λ with s z s^{-1} in G.
int indicator(Partition const &partition, Permutation const &s, int q,
              EpsilonScope scope = EpsilonScope::rotations);

struct OracleOptions {
  int cap = 10;
  EpsilonScope scope = EpsilonScope::rotations;
};

struct CosetVerdict {
  Permutation representative;
  DeltaVector delta;
  bool invariant = false;
};

/// Every double coset for λ with its invariance verdict. Z_λ is enumerated
/// once for all representatives.
std::vector<CosetVerdict> oracle_cosets(Partition const &partition, int q,
                                        OracleOptions const &options = {});

/// Σ over λ with n - degree parts of the number of invariant double cosets.
/// Throws CapExceededError (flag "--oracle-cap") when n > options.cap.
BigNat oracle_dim(int n, int q, int degree, OracleOptions const &options = {});

} // namespace braidcohom::character
