#include "braidcohom/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "braidcohom/errors.hpp"

namespace braidcohom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  big_count_ = static_cast<int>(
    std::count_if(parts_.begin(), parts_.end(), [](int p) { return p >= 2; }));
}

std::span<int const> Partition::big_parts() const noexcept {
  return std::span<int const>(parts_.data(), static_cast<std::size_t>(big_count_));
}

std::vector<int> Partition::block_starts() const {
  std::vector<int> starts(parts_.size());
  int s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    starts[i] = s;
    s += parts_[i];
  }
  return starts;
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> res;
  for (int p : parts_) {
    if (!res.empty() && res.back().first == p)
      ++res.back().second;
    else
      res.emplace_back(p, 1);
  }
  return res;
}

BigNat Partition::centralizer_order() const {
  BigNat order = 1;
  for (auto [part, mult] : multiplicities()) {
    for (int i = 0; i < mult; ++i)
      order *= part;
    order *= factorial(mult);
  }
  return order;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream &operator<<(std::ostream &os, Partition const &p) {
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i)
      os << ',';
    os << p.parts()[i];
  }
  return os << ')';
}

namespace {

void partitions_rec(int remaining, int slots, int max_part, std::vector<int> &acc,
                    std::vector<Partition> &out) {
  if (slots == 0) {
    if (remaining == 0)
      out.emplace_back(acc);
    return;
  }
  // every later slot needs at least 1
  int hi = std::min(max_part, remaining - (slots - 1));
  int lo = (remaining + slots - 1) / slots;
  for (int first = hi; first >= lo; --first) {
    acc.push_back(first);
    partitions_rec(remaining - first, slots - 1, first, acc, out);
    acc.pop_back();
  }
}

void compositions_rec(int remaining, int slots, std::vector<int> &acc, int total,
                      std::vector<Composition> &out) {
  if (slots == 1) {
    acc.push_back(remaining);
    out.push_back(Composition{acc, total});
    acc.pop_back();
    return;
  }
  for (int first = 1; first <= remaining - (slots - 1); ++first) {
    acc.push_back(first);
    compositions_rec(remaining - first, slots - 1, acc, total, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_with_parts(int n, int j) {
  if (j < 1 || j > n)
    throw DomainError("partitions_with_parts: require 1 <= j <= n");
  std::vector<Partition> out;
  std::vector<int> acc;
  acc.reserve(static_cast<std::size_t>(j));
  partitions_rec(n, j, n, acc, out);
  return out;
}

std::vector<Partition> partitions(int n) {
  if (n < 0)
    throw DomainError("partitions: n must be nonnegative");
  if (n == 0)
    return {Partition{}};
  std::vector<Partition> out;
  for (int j = 1; j <= n; ++j) {
    auto part = partitions_with_parts(n, j);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Composition> compositions(int total, int b) {
  if (total < 1 || b < 1)
    throw DomainError("compositions: require total >= 1 and b >= 1");
  std::vector<Composition> out;
  if (b > total)
    return out;
  std::vector<int> acc;
  acc.reserve(static_cast<std::size_t>(b));
  compositions_rec(total, b, acc, total, out);
  return out;
}

BigNat factorial(int n) {
  if (n < 0)
    throw DomainError("factorial: negative argument");
  BigNat r = 1;
  for (int i = 2; i <= n; ++i)
    r *= i;
  return r;
}

BigNat binomial(int n, int k) {
  if (n < 0 || k < 0)
    throw DomainError("binomial: negative argument");
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  BigNat r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) here
  }
  return r;
}

BigNat multinomial(int total, std::span<int const> parts) {
  long long sum = 0;
  for (int p : parts) {
    if (p < 0)
      throw DomainError("multinomial: negative part");
    sum += p;
  }
  if (total < 0 || sum != total)
    throw DomainError("multinomial: parts must sum to total");
  BigNat r = 1;
  int filled = 0;
  for (int p : parts) {
    filled += p;
    r *= binomial(filled, p);
  }
  return r;
}

BigNat stirling_cycle(int n, int j) {
  if (n < 1 || j < 1 || j > n)
    throw DomainError("stirling_cycle: require 1 <= j <= n");
  // row[k] = c(m, k), built up to m = n
  std::vector<BigNat> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = m; k >= 1; --k)
      row[static_cast<std::size_t>(k)] =
        row[static_cast<std::size_t>(k - 1)] + BigNat(m - 1) * row[static_cast<std::size_t>(k)];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(j)];
}

} // namespace braidcohom
