#pragma once

#include <cstdint>
#include <vector>

#include "braidcohom/bignat.hpp"

// Slow, independent reference computations used only by the tests.
namespace oracles {

using braidcohom::BigNat;

/// p(n) by Euler's pentagonal-number recurrence.
BigNat partition_number(int n);

/// C(n, k) from a Pascal triangle built by additions only.
BigNat pascal(int n, int k);

BigNat factorial_product(int n);

/// total! / Π parts! computed with full factorials.
BigNat multinomial_by_factorials(int total, std::vector<int> const &parts);

/// Permutations of n points with exactly j cycles, by listing all of them.
std::uint64_t stirling_by_enumeration(int n, int j);

/// Binary necklaces of length n with d ones (Burnside over rotations).
BigNat burnside_necklaces(int n, int d);

/// Rotation orbits of d-subsets of Z/part whose stabiliser has order
/// 1 (part ≡ 0,1,3 mod 4) or at most 2 (part ≡ 2 mod 4); part >= 3.
std::uint64_t admissible_orbits_brute(int part, int d);

/// Orbits of weight-q marks on [n] under all block rotations and swaps of
/// equal blocks, by flood fill.
std::uint64_t block_orbit_count(std::vector<int> const &parts, int q);

} // namespace oracles
