#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace braidcohom {

/// Bijection of {0, ..., n-1}. Composition is right-to-left:
/// (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int n, int a, int b);
  /// Product of disjoint cycles given 0-based.
  static Permutation from_cycles(int n, std::vector<std::vector<int>> const &cycles);

  int n() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::vector<int> const &images() const noexcept { return images_; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;
  std::vector<int> cycle_type() const;  // sorted descending

  /// 1-based cycle notation, e.g. "(1 2)(3 5 4)"; "()" for the identity.
  std::string to_string() const;

  friend Permutation operator*(Permutation const &a, Permutation const &b);
  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &a, Permutation const &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

} // namespace braidcohom
