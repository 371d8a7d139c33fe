#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "braidcohom/bignat.hpp"

namespace braidcohom {

/// A partition of n: weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

  std::vector<int> const &parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  int n() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  /// Degree of the cohomology group this partition contributes to, n - j.
  int degree() const noexcept { return n_ - length(); }

  /// Parts >= 2, in order.
  std::span<int const> big_parts() const noexcept;
  int big_part_count() const noexcept { return big_count_; }
  int ones() const noexcept { return length() - big_count_; }

  /// First index of each block in [0, n).
  std::vector<int> block_starts() const;

  /// (part size, multiplicity) pairs in decreasing part size.
  std::vector<std::pair<int, int>> multiplicities() const;

  /// |Z_λ| = Π λ^m · m! over distinct part sizes.
  BigNat centralizer_order() const;

  std::string to_string() const;

  friend bool operator==(Partition const &, Partition const &) = default;
  friend auto operator<=>(Partition const &a, Partition const &b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int n_ = 0;
  int big_count_ = 0;
};

std::ostream &operator<<(std::ostream &os, Partition const &p);

/// An ordered tuple of positive integers.
struct Composition {
  std::vector<int> terms;
  int total = 0;

  friend bool operator==(Composition const &, Composition const &) = default;
};

/// All partitions of n with exactly j parts, reverse-lexicographic.
std::vector<Partition> partitions_with_parts(int n, int j);

/// All partitions of n (any number of parts); n = 0 gives the empty partition.
std::vector<Partition> partitions(int n);

/// Ordered b-tuples of positive integers summing to total, lexicographic.
std::vector<Composition> compositions(int total, int b);

/// C(n, k); zero when k > n.
BigNat binomial(int n, int k);

BigNat factorial(int n);

/// total! / Π parts_i!.
BigNat multinomial(int total, std::span<int const> parts);
inline BigNat multinomial(int total, std::initializer_list<int> parts) {
  return multinomial(total, std::span<int const>(parts.begin(), parts.size()));
}

/// Unsigned Stirling number of the first kind c(n, j).
BigNat stirling_cycle(int n, int j);

} // namespace braidcohom
