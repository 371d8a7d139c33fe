#include "braidcohom/os_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "braidcohom/errors.hpp"
#include "braidcohom/invariant_cycles.hpp"
#include "braidcohom/parallel.hpp"

namespace braidcohom::os {

StandardMonomial::StandardMonomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (std::size_t t = 0; t < factors_.size(); ++t) {
    auto [i, j] = factors_[t];
    if (i < 0 || i >= j)
      throw DomainError("StandardMonomial: factor needs 0 <= i < j");
    if (t > 0 && factors_[t - 1].second >= j)
      throw DomainError("StandardMonomial: second indices must increase");
  }
}

std::string StandardMonomial::to_string() const {
  if (factors_.empty())
    return "1";
  std::ostringstream os;
  for (auto [i, j] : factors_) {
    os << "ω" << i + 1;
    if (i + 1 >= 10 || j + 1 >= 10)
      os << ',';
    os << j + 1;
  }
  return os.str();
}

void SignedCombination::add(StandardMonomial const &m, long long coefficient) {
  if (coefficient == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0)
      terms_.erase(it);
  }
}

long long SignedCombination::coefficient(StandardMonomial const &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

SignedCombination &SignedCombination::operator+=(SignedCombination const &o) {
  for (auto const &[m, c] : o.terms_)
    add(m, c);
  return *this;
}

SignedCombination &SignedCombination::operator-=(SignedCombination const &o) {
  for (auto const &[m, c] : o.terms_)
    add(m, -c);
  return *this;
}

std::string SignedCombination::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto const &[m, c] : terms_) {
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    if (c != 1 && c != -1)
      os << (c < 0 ? -c : c) << '*';
    os << m.to_string();
    first = false;
  }
  return os.str();
}

std::vector<StandardMonomial> basis(int n, int k) {
  if (n < 1)
    throw DomainError("basis: require n ≥ 1");
  require_degree(n, k);
  std::vector<StandardMonomial> out;
  std::vector<Factor> current;
  // choose j_1 < ... < j_k from {1..n-1}, then any i_t < j_t
  auto rec = [&](auto &self, int next_j) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.emplace_back(current);
      return;
    }
    int remaining = k - static_cast<int>(current.size());
    for (int j = next_j; j <= n - remaining; ++j) {
      for (int i = 0; i < j; ++i) {
        current.emplace_back(i, j);
        self(self, j + 1);
        current.pop_back();
      }
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

void straighten_into(std::vector<Factor> factors, long long sign, RewriteOrder order,
                     SignedCombination &out) {
  for (std::size_t a = 0; a < factors.size(); ++a)
    for (std::size_t b = a + 1; b < factors.size(); ++b)
      if (factors[a] == factors[b])
        return;

  // locate a pair of factors with the same second index
  std::size_t p = factors.size(), r = factors.size();
  if (order == RewriteOrder::leftmost) {
    for (std::size_t b = 1; b < factors.size() && p == factors.size(); ++b)
      for (std::size_t a = 0; a < b; ++a)
        if (factors[a].second == factors[b].second) {
          p = a;
          r = b;
          break;
        }
  } else {
    for (std::size_t a = factors.size(); a-- > 0 && p == factors.size();)
      for (std::size_t b = factors.size(); b-- > a + 1;)
        if (factors[a].second == factors[b].second) {
          p = a;
          r = b;
          break;
        }
  }

  if (p == factors.size()) {
    // distinct second indices: sort them, tracking the sign
    std::vector<std::size_t> idx(factors.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t x, std::size_t y) { return factors[x].second < factors[y].second; });
    int inversions = 0;
    for (std::size_t x = 0; x < idx.size(); ++x)
      for (std::size_t y = x + 1; y < idx.size(); ++y)
        if (idx[x] > idx[y])
          ++inversions;
    std::vector<Factor> sorted;
    sorted.reserve(idx.size());
    for (auto t : idx)
      sorted.push_back(factors[t]);
    out.add(StandardMonomial(std::move(sorted)), inversions % 2 ? -sign : sign);
    return;
  }

  // bring factor r right after p
  auto moved = factors[r];
  factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(r));
  factors.insert(factors.begin() + static_cast<std::ptrdiff_t>(p + 1), moved);
  if ((r - p - 1) % 2 == 1)
    sign = -sign;
  int a = factors[p].first;
  int b = factors[p + 1].first;
  int j = factors[p].second;
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  // ω_aj ω_bj = ω_ab ω_bj - ω_ab ω_aj
  auto first = factors;
  first[p] = {a, b};
  first[p + 1] = {b, j};
  straighten_into(std::move(first), sign, order, out);
  factors[p] = {a, b};
  factors[p + 1] = {a, j};
  straighten_into(std::move(factors), -sign, order, out);
}

Factor oriented(Factor f) {
  if (f.first == f.second || f.first < 0 || f.second < 0)
    throw DomainError("straighten: generator needs two distinct nonnegative indices");
  if (f.first > f.second)
    std::swap(f.first, f.second);
  return f;
}

} // namespace

SignedCombination straighten(std::vector<Factor> const &product, RewriteOrder order) {
  std::vector<Factor> factors;
  factors.reserve(product.size());
  for (auto f : product)
    factors.push_back(oriented(f));
  SignedCombination out;
  straighten_into(std::move(factors), 1, order, out);
  return out;
}

long long trace(Permutation const &g, int k) {
  long long total = 0;
  for (auto const &m : basis(g.n(), k)) {
    std::vector<Factor> image;
    image.reserve(m.factors().size());
    for (auto [i, j] : m.factors())
      image.push_back(oriented({g(i), g(j)}));
    total += straighten(image).coefficient(m);
  }
  return total;
}

std::vector<std::pair<Permutation, BigNat>> young_subgroup_classes(int n, int q) {
  require_group_params(n, q);
  std::vector<std::pair<Permutation, BigNat>> out;
  for (auto const &mu : partitions(n - q)) {
    for (auto const &nu : partitions(q)) {
      std::vector<std::vector<int>> cycles;
      int start = 0;
      for (auto const *lambda : {&mu, &nu}) {
        for (int part : lambda->parts()) {
          std::vector<int> cycle(static_cast<std::size_t>(part));
          std::iota(cycle.begin(), cycle.end(), start);
          if (part > 1)
            cycles.push_back(std::move(cycle));
          start += part;
        }
      }
      BigNat size = factorial(n - q) / mu.centralizer_order() * (factorial(q) / nu.centralizer_order());
      out.emplace_back(Permutation::from_cycles(n, cycles), size);
    }
  }
  return out;
}

BigNat invariant_dim(int n, int q, int k, int cap) {
  if (n > cap)
    throw CapExceededError("OS oracle: n=" + std::to_string(n) + " exceeds --oracle-cap=" +
                             std::to_string(cap),
                           "--oracle-cap", cap);
  require_group_params(n, q);
  require_degree(n, k);
  auto classes = young_subgroup_classes(n, q);
  std::vector<long long> traces(classes.size());
  parallel_for(classes.size(), [&](std::size_t c) { traces[c] = trace(classes[c].first, k); });
  BigInt sum = 0;
  for (std::size_t c = 0; c < classes.size(); ++c)
    sum += BigInt(classes[c].second) * traces[c];
  BigInt order = BigInt(factorial(n - q)) * BigInt(factorial(q));
  if (sum % order != 0 || sum < 0)
    throw InternalConsistencyError("OS oracle: class average is not a nonnegative integer");
  return BigNat(sum / order);
}

} // namespace braidcohom::os
