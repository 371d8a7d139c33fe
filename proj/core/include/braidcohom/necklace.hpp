#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "braidcohom/bignat.hpp"

namespace braidcohom {

/// Gap tuple of the marks on one cycle block, taken modulo rotation.
///
/// A block of size `part` carrying d >= 1 marks has d gaps (numbers of
/// unmarked positions between consecutive marks, cyclically), summing to
/// part - d. The tuple is stored in its lexicographically minimal rotation,
/// so equality of objects is equality of rotation classes. A block with no
/// marks is the distinguished Empty value, which sorts after everything.
class CycleInvariant {
public:
  static CycleInvariant empty(int part);

  /// Canonicalises `gaps`; throws DomainError unless the gaps are
  /// nonnegative, nonempty and sum to part - gaps.size().
  static CycleInvariant from_gaps(int part, std::vector<int> gaps);

  int part() const noexcept { return part_; }
  int marks() const noexcept { return static_cast<int>(entries_.size()); }
  bool is_empty() const noexcept { return entries_.empty(); }
  std::vector<int> const &entries() const noexcept { return entries_; }

  /// "(0,1,2)" or "-" for Empty.
  std::string to_string() const;

  friend bool operator==(CycleInvariant const &, CycleInvariant const &) = default;
  friend std::strong_ordering operator<=>(CycleInvariant const &a,
                                          CycleInvariant const &b);

private:
  CycleInvariant(int part, std::vector<int> entries)
    : part_(part), entries_(std::move(entries)) {}

  int part_ = 0;
  std::vector<int> entries_;
};

/// Lexicographically minimal rotation of a nonempty tuple.
std::vector<int> canonical_rotation(std::span<int const> tuple);

/// Number of rotations of `tuple` equal to its minimal rotation; this always
/// divides the length.
int min_rotation_multiplicity(std::span<int const> tuple);
int min_rotation_multiplicity(CycleInvariant const &chi);

/// Whether a single block of size `part` with the given mark count and
/// minimal-rotation multiplicity carries a trivial local character: marks
/// strictly between 0 and part when part >= 3; unique minimal rotation when
/// part ≡ 0,1,3 mod 4; at most two when part ≡ 2 mod 4.
bool block_admissible(int part, int marks, int multiplicity);
bool block_admissible(CycleInvariant const &chi);

/// Value/multiplicity support of a gap tuple: `values` strictly increasing,
/// value values[i] occurring multiplicities[i] times.
struct SupportPattern {
  std::vector<int> multiplicities;
  std::vector<int> values;

  int length() const;  // Σ multiplicities
  friend bool operator==(SupportPattern const &, SupportPattern const &) = default;
};

/// All support patterns with Σt = d and Σt·a = part - d, ordered by number
/// of distinct values then lexicographically by values.
std::vector<SupportPattern> support_patterns(int part, int d);

/// Inclusion-exclusion term: the sum over j-element sets of primes dividing
/// gcd(t)/k of the multinomial (d/e; t_1/e, ..., t_p/e), e = k·Π primes.
BigNat pi_k_term(SupportPattern const &pattern, int k, int j, int d);

/// Distinct primes of gcd(t)/k.
std::vector<int> pattern_primes(SupportPattern const &pattern, int k);

/// Closed-form number of admissible gap classes for a block of size `part`
/// carrying d marks.
BigNat pi_count(int part, int d);

/// Brute-force list of the same classes, sorted ascending.
std::vector<CycleInvariant> enumerate_admissible_cycles(int part, int d);

} // namespace braidcohom
