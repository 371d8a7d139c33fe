#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidcohom/combinatorics.hpp"
#include "braidcohom/necklace.hpp"

namespace braidcohom {

/// A 0/1 marking of [n]; position i is marked when it is sent into the
/// last q letters (the 𝔖_q factor). Weight = number of marks.
class DeltaVector {
public:
  DeltaVector() = default;
  explicit DeltaVector(std::vector<std::uint8_t> bits);

  /// Parses "1010..." (whitespace and commas ignored).
  static DeltaVector parse(std::string_view text);

  int n() const noexcept { return static_cast<int>(bits_.size()); }
  int q() const noexcept { return weight_; }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::vector<std::uint8_t> const &bits() const noexcept { return bits_; }

  std::string to_string() const;

  friend bool operator==(DeltaVector const &, DeltaVector const &) = default;

private:
  std::vector<std::uint8_t> bits_;
  int weight_ = 0;
};

/// One cycle invariant per block of a partition, kept in normal form: inside
/// each run of equal parts, blocks are sorted by mark count descending and
/// then by cycle ascending (Empty last).
class FullInvariantSet {
public:
  FullInvariantSet() = default;

  /// Validates block sizes and normalises the order.
  FullInvariantSet(Partition partition, std::vector<CycleInvariant> cycles);

  Partition const &partition() const noexcept { return partition_; }
  std::vector<CycleInvariant> const &cycles() const noexcept { return cycles_; }
  int n() const noexcept { return partition_.n(); }
  int q() const noexcept { return q_; }
  int degree() const noexcept { return partition_.degree(); }

  /// Marks on parts >= 2.
  int big_part_marks() const;

  /// `λ=(6,6,3,2,1,1); χ=[(0,1,2),(0,1,2),(2),(0,0),(0),-]`
  std::string label() const;

  static bool is_normal_form(Partition const &partition,
                             std::span<CycleInvariant const> cycles);

  friend bool operator==(FullInvariantSet const &, FullInvariantSet const &) = default;
  friend auto operator<=>(FullInvariantSet const &a, FullInvariantSet const &b) {
    if (auto c = a.partition_ <=> b.partition_; c != 0)
      return c;
    return a.cycles_ <=> b.cycles_;
  }

private:
  Partition partition_;
  std::vector<CycleInvariant> cycles_;
  int q_ = 0;
};

/// (λ, d): the parts >= 2 of a partition with a mark count on each.
struct MarkedPartition {
  Partition partition;
  std::vector<int> marks;  // one per big part
  int q = 0;

  std::span<int const> big_parts() const { return partition.big_parts(); }
  int n() const { return partition.n(); }
  int total_marks() const;
  std::string to_string() const;

  friend bool operator==(MarkedPartition const &, MarkedPartition const &) = default;
};

/// Gap tuple of block `block` read from its first mark, before
/// canonicalisation. Empty when the block carries no marks.
std::vector<int> raw_cycle_gaps(Partition const &partition, DeltaVector const &delta,
                                int block);

FullInvariantSet chi_from_delta(Partition const &partition, DeltaVector const &delta);

/// Canonical preimage: each block gets its first mark on its first position
/// and the following marks after the gaps of the canonical rotation.
DeltaVector delta_from_chi(FullInvariantSet const &set);

/// Whether the coset labelled by `set` contributes an invariant class: every
/// block passes block_admissible, and no two blocks of the same even size
/// carry the same cycle.
bool is_admissible(FullInvariantSet const &set);

/// Partitions whose contribution vanishes for every coset because too many
/// blocks of size >= 2 are forced to stay unmarked.
bool vanishes_by_part_count(Partition const &partition, int q);

/// Throws DomainError unless 0 <= q <= n - q and 0 <= degree <= n - 1.
void require_group_params(int n, int q);
void require_degree(int n, int degree);

/// All admissible normal-form sets for the partitions of n with n - degree
/// parts, ordered by partition (reverse-lexicographic) then by block choice.
std::vector<FullInvariantSet> enumerate_admissible_sets(int n, int q, int degree);

/// Turns the first unmarked 1-block into a marked one: (n, q) -> (n, q + 1).
FullInvariantSet stability_map(FullInvariantSet const &set);

} // namespace braidcohom
