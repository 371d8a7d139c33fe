#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidcohom/bignat.hpp"
#include "braidcohom/combinatorics.hpp"
#include "braidcohom/permutation.hpp"

namespace braidcohom::os {

/// Generator ω_{ij} of the Arnold algebra as a 0-based pair i < j.
using Factor = std::pair<int, int>;

/// ω_{i_1 j_1} ⋯ ω_{i_k j_k} with j_1 < ... < j_k and i_t < j_t.
class StandardMonomial {
public:
  StandardMonomial() = default;
  explicit StandardMonomial(std::vector<Factor> factors);

  std::vector<Factor> const &factors() const noexcept { return factors_; }
  int degree() const noexcept { return static_cast<int>(factors_.size()); }

  /// 1-based, e.g. "ω13ω23"; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(StandardMonomial const &, StandardMonomial const &) = default;
  friend auto operator<=>(StandardMonomial const &, StandardMonomial const &) = default;

private:
  std::vector<Factor> factors_;
};

/// Integer combination of standard monomials; zero coefficients are dropped.
class SignedCombination {
public:
  void add(StandardMonomial const &m, long long coefficient);
  long long coefficient(StandardMonomial const &m) const;
  std::map<StandardMonomial, long long> const &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  SignedCombination &operator+=(SignedCombination const &o);
  SignedCombination &operator-=(SignedCombination const &o);
  friend bool operator==(SignedCombination const &, SignedCombination const &) = default;

  std::string to_string() const;

private:
  std::map<StandardMonomial, long long> terms_;
};

/// Standard monomials of degree k on n points; |basis| = c(n, n - k).
std::vector<StandardMonomial> basis(int n, int k);

/// Which repeated second index is resolved first when straightening.
enum class RewriteOrder { leftmost, rightmost };

/// Expands an ordered product of generators (pairs in either orientation)
/// in the standard basis. A repeated generator gives zero.
SignedCombination straighten(std::vector<Factor> const &product,
                             RewriteOrder order = RewriteOrder::leftmost);

/// Trace of g on the degree-k part.
long long trace(Permutation const &g, int k);

/// (rep, class size) for each conjugacy class of S_{n-q} x S_q.
std::vector<std::pair<Permutation, BigNat>> young_subgroup_classes(int n, int q);

/// dim of the G-invariants in degree k by averaging traces over classes.
/// Throws CapExceededError (flag "--oracle-cap") when n > cap and
/// InternalConsistencyError when the average is not a nonnegative integer.
BigNat invariant_dim(int n, int q, int k, int cap = 7);

} // namespace braidcohom::os
