#include "braidcohom/necklace.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "braidcohom/combinatorics.hpp"
#include "braidcohom/errors.hpp"

namespace braidcohom {

CycleInvariant CycleInvariant::empty(int part) {
  if (part < 1)
    throw DomainError("CycleInvariant: part size must be positive");
  return CycleInvariant(part, {});
}

CycleInvariant CycleInvariant::from_gaps(int part, std::vector<int> gaps) {
  if (part < 1)
    throw DomainError("CycleInvariant: part size must be positive");
  if (gaps.empty())
    throw DomainError("CycleInvariant: use empty() for a block without marks");
  int d = static_cast<int>(gaps.size());
  if (d > part)
    throw DomainError("CycleInvariant: more marks than block positions");
  long long sum = 0;
  for (int g : gaps) {
    if (g < 0)
      throw DomainError("CycleInvariant: negative gap");
    sum += g;
  }
  if (sum != part - d)
    throw DomainError("CycleInvariant: gaps must sum to part - marks");
  return CycleInvariant(part, canonical_rotation(gaps));
}

std::string CycleInvariant::to_string() const {
  if (is_empty())
    return "-";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i)
      os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(CycleInvariant const &a, CycleInvariant const &b) {
  if (a.is_empty() != b.is_empty())
    return a.is_empty() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = a.entries_ <=> b.entries_; c != 0)
    return c;
  return a.part_ <=> b.part_;
}

namespace {

// Compares rotation r of t against t itself.
int compare_rotation(std::span<int const> t, std::size_t r) {
  std::size_t d = t.size();
  for (std::size_t i = 0; i < d; ++i) {
    int x = t[(i + r) % d];
    if (x != t[i])
      return x < t[i] ? -1 : 1;
  }
  return 0;
}

} // namespace

std::vector<int> canonical_rotation(std::span<int const> tuple) {
  if (tuple.empty())
    throw DomainError("canonical_rotation: empty tuple");
  std::size_t d = tuple.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < d; ++r) {
    for (std::size_t i = 0; i < d; ++i) {
      int x = tuple[(r + i) % d], y = tuple[(best + i) % d];
      if (x != y) {
        if (x < y)
          best = r;
        break;
      }
    }
  }
  std::vector<int> out(d);
  for (std::size_t i = 0; i < d; ++i)
    out[i] = tuple[(best + i) % d];
  return out;
}

int min_rotation_multiplicity(std::span<int const> tuple) {
  if (tuple.empty())
    throw DomainError("min_rotation_multiplicity: Empty cycle has no rotations");
  auto canon = canonical_rotation(tuple);
  int count = 1;
  for (std::size_t r = 1; r < canon.size(); ++r)
    if (compare_rotation(canon, r) == 0)
      ++count;
  return count;
}

int min_rotation_multiplicity(CycleInvariant const &chi) {
  return min_rotation_multiplicity(std::span<int const>(chi.entries()));
}

bool block_admissible(int part, int marks, int multiplicity) {
  if (part >= 3 && (marks < 1 || marks > part - 1))
    return false;
  if (marks == 0)
    return true;
  if (part % 4 == 2)
    return multiplicity <= 2;
  if (part >= 3)
    return multiplicity == 1;
  return true;
}

bool block_admissible(CycleInvariant const &chi) {
  int mult = chi.is_empty() ? 1 : min_rotation_multiplicity(chi);
  return block_admissible(chi.part(), chi.marks(), mult);
}

int SupportPattern::length() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

namespace {

// Chooses the next value strictly above `min_value` with some multiplicity.
void patterns_rec(int marks_left, int weight_left, int min_value, SupportPattern &acc,
                  std::vector<SupportPattern> &out, std::size_t want) {
  if (acc.values.size() == want) {
    if (marks_left == 0 && weight_left == 0)
      out.push_back(acc);
    return;
  }
  if (marks_left <= 0)
    return;
  for (int value = min_value; value <= weight_left; ++value) {
    for (int t = 1; t <= marks_left; ++t) {
      if (static_cast<long long>(t) * value > weight_left)
        break;
      acc.values.push_back(value);
      acc.multiplicities.push_back(t);
      patterns_rec(marks_left - t, weight_left - t * value, value + 1, acc, out, want);
      acc.values.pop_back();
      acc.multiplicities.pop_back();
    }
  }
}

} // namespace

std::vector<SupportPattern> support_patterns(int part, int d) {
  if (part < 3 || d < 1 || d > part - 1)
    throw DomainError("support_patterns: require part >= 3 and 1 <= d <= part - 1");
  std::vector<SupportPattern> out;
  SupportPattern acc;
  for (int p = 1; p <= d; ++p)
    patterns_rec(d, part - d, 0, acc, out, static_cast<std::size_t>(p));
  return out;
}

namespace {

int pattern_gcd(SupportPattern const &pattern) {
  int g = 0;
  for (int t : pattern.multiplicities)
    g = std::gcd(g, t);
  return g;
}

} // namespace

std::vector<int> pattern_primes(SupportPattern const &pattern, int k) {
  int g = pattern_gcd(pattern);
  if (k < 1 || g == 0 || g % k != 0)
    throw DomainError("pattern_primes: k must divide gcd of the multiplicities");
  int h = g / k;
  std::vector<int> primes;
  for (int p = 2; p * p <= h; ++p) {
    if (h % p == 0) {
      primes.push_back(p);
      while (h % p == 0)
        h /= p;
    }
  }
  if (h > 1)
    primes.push_back(h);
  return primes;
}

BigNat pi_k_term(SupportPattern const &pattern, int k, int j, int d) {
  if (pattern.multiplicities.empty() ||
      pattern.multiplicities.size() != pattern.values.size())
    throw DomainError("pi_k_term: malformed support pattern");
  if (pattern.length() != d)
    throw DomainError("pi_k_term: multiplicities must sum to d");
  auto primes = pattern_primes(pattern, k);
  int m = static_cast<int>(primes.size());
  if (j < 0 || j > m)
    throw DomainError("pi_k_term: j exceeds the number of primes of gcd(t)/k");

  BigNat sum = 0;
  std::vector<int> reduced(pattern.multiplicities.size());
  // subsets of size j, as bitmasks over the (few) primes
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != j)
      continue;
    int e = k;
    for (int b = 0; b < m; ++b)
      if (mask & (1u << b))
        e *= primes[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < reduced.size(); ++i)
      reduced[i] = pattern.multiplicities[i] / e;
    sum += multinomial(d / e, reduced);
  }
  return sum;
}

BigNat pi_count(int part, int d) {
  if (part < 2 || d < 0 || d > part)
    throw DomainError("pi_count: require part >= 2 and 0 <= d <= part");
  if (part == 2)
    return 1;
  if (d == 0 || d == part)
    return 0;

  std::vector<int> ks{1};
  if (part % 4 == 2)
    ks.push_back(2);

  BigInt total = 0;
  for (auto const &pattern : support_patterns(part, d)) {
    int g = pattern_gcd(pattern);
    for (int k : ks) {
      if (g % k != 0)
        continue;
      int m = static_cast<int>(pattern_primes(pattern, k).size());
      BigInt alternating = 0;
      for (int j = 0; j <= m; ++j) {
        BigInt term(pi_k_term(pattern, k, j, d));
        alternating += (j % 2 == 0) ? term : BigInt(-term);
      }
      BigInt numerator = alternating * k;
      if (numerator % d != 0) {
        std::ostringstream msg;
        msg << "pi_count(" << part << ',' << d << "): inexact division by d for k=" << k;
        throw InternalConsistencyError(msg.str());
      }
      total += numerator / d;
    }
  }
  if (total < 0)
    throw InternalConsistencyError("pi_count: negative count");
  return BigNat(total);
}

std::vector<CycleInvariant> enumerate_admissible_cycles(int part, int d) {
  if (part < 2 || d < 0 || d > part)
    throw DomainError("enumerate_admissible_cycles: require part >= 2 and 0 <= d <= part");
  std::vector<CycleInvariant> out;
  if (d == 0) {
    if (block_admissible(part, 0, 1))
      out.push_back(CycleInvariant::empty(part));
    return out;
  }

  // weak compositions of part - d into d gaps, lexicographic; keep only
  // tuples that are their own minimal rotation
  int weight = part - d;
  std::vector<int> t(static_cast<std::size_t>(d), 0);
  t.back() = weight;
  auto const du = static_cast<std::size_t>(d);
  for (;;) {
    bool canonical = true;
    int mult = 1;
    for (std::size_t r = 1; r < du; ++r) {
      int c = compare_rotation(t, r);
      if (c < 0) {
        canonical = false;
        break;
      }
      if (c == 0)
        ++mult;
    }
    if (canonical && block_admissible(part, d, mult))
      out.push_back(CycleInvariant::from_gaps(part, t));

    // lexicographic successor: move one unit from the rightmost nonzero
    // entry k >= 1 onto k-1 and dump the rest of t[k] at the end
    if (du == 1)
      break;
    std::size_t k = du - 1;
    while (k > 0 && t[k] == 0)
      --k;
    if (k == 0)
      break;
    int carry = t[k] - 1;
    ++t[k - 1];
    for (std::size_t z = k; z < du; ++z)
      t[z] = 0;
    t[du - 1] = carry;
  }
  return out;
}

} // namespace braidcohom
