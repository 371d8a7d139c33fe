#include "braidcohom/dimension.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <utility>

#include <boost/rational.hpp>

#include "braidcohom/errors.hpp"
#include "braidcohom/necklace.hpp"
#include "braidcohom/parallel.hpp"

namespace braidcohom {

namespace {

class PiTable {
public:
  BigNat const &operator()(int part, int d) {
    auto key = std::pair{part, d};
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, pi_count(part, d)).first;
    return it->second;
  }

private:
  std::map<std::pair<int, int>, BigNat> cache_;
};

// C(N, b) for a big N and small b.
BigNat choose(BigNat const &top, int b) {
  if (top < b)
    return 0;
  BigNat r = 1;
  for (int t = 0; t < b; ++t)
    r = r * (top - t) / (t + 1);
  return r;
}

void collect_marks(Partition const &partition, int q, int lo, PiTable &pi,
                   std::vector<int> &marks, int used,
                   std::vector<MarkedPartition> &out) {
  auto big = partition.big_parts();
  auto i = marks.size();
  if (i == big.size()) {
    if (used >= lo)
      out.push_back(MarkedPartition{partition, marks, q});
    return;
  }
  int part = big[i];
  int upper = std::min(part, q - used);
  if (i > 0 && big[i - 1] == part)
    upper = std::min(upper, marks.back());
  for (int d = upper; d >= 0; --d) {
    if (pi(part, d) == 0)
      continue;
    marks.push_back(d);
    collect_marks(partition, q, lo, pi, marks, used + d, out);
    marks.pop_back();
  }
}

std::vector<MarkedPartition> marked_partitions_with(int n, int q, int degree, PiTable &pi) {
  require_group_params(n, q);
  require_degree(n, degree);
  std::vector<MarkedPartition> out;
  for (auto const &partition : partitions_with_parts(n, n - degree)) {
    if (vanishes_by_part_count(partition, q))
      continue;
    int big_sum = 0;
    for (int p : partition.big_parts())
      big_sum += p;
    int lo = std::max(0, big_sum - n + q);
    std::vector<int> marks;
    collect_marks(partition, q, lo, pi, marks, 0, out);
  }
  return out;
}

BigNat contribution_with(MarkedPartition const &mp, PiTable &pi) {
  auto big = mp.big_parts();
  BigNat product = 1;
  std::size_t i = 0;
  while (i < big.size()) {
    std::size_t k = i;
    while (k < big.size() && big[k] == big[i] && mp.marks[k] == mp.marks[i])
      ++k;
    int part = big[i];
    int m = static_cast<int>(k - i);
    BigNat const &count = pi(part, mp.marks[i]);
    if (part % 2 == 0) {
      product *= choose(count, m);
    } else {
      BigNat factor = 0;
      for (int b = 1; b <= m; ++b)
        factor += binomial(m - 1, b - 1) * choose(count, b);
      product *= factor;
    }
    i = k;
  }
  return product;
}

} // namespace

std::vector<MarkedPartition> marked_partitions(int n, int q, int degree) {
  PiTable pi;
  return marked_partitions_with(n, q, degree, pi);
}

BigNat marked_partition_contribution(MarkedPartition const &mp) {
  PiTable pi;
  return contribution_with(mp, pi);
}

BigNat dim_invariant(int n, int q, int degree) {
  PiTable pi;
  BigNat total = 0;
  for (auto const &mp : marked_partitions_with(n, q, degree, pi))
    total += contribution_with(mp, pi);
  return total;
}

namespace {

using Rational = boost::rational<long long>;

struct ResidueRow {
  std::initializer_list<int> residues;
  Rational offset;
};

Rational pick(int residue, std::initializer_list<ResidueRow> rows) {
  for (auto const &row : rows)
    if (std::find(row.residues.begin(), row.residues.end(), residue) != row.residues.end())
      return row.offset;
  throw InternalConsistencyError("closed_form: residue class missing from table");
}

Rational closed_form_q2(long long n, long long i) {
  int r = static_cast<int>(i % 4);
  if (i == 0)
    return 1;
  if (i == n - 1)
    return Rational(i, 2) + pick(r, {{{0, 2}, 0}, {{1}, Rational(1, 2)}, {{3}, Rational(-1, 2)}});
  if (i == n - 2)
    return Rational(3 * i, 2) +
           pick(r, {{{0, 2}, 0}, {{1}, Rational(-1, 2)}, {{3}, Rational(1, 2)}});
  return Rational(2 * i) + pick(r, {{{0, 2}, 0}, {{1}, 1}, {{3}, -1}});
}

Rational closed_form_q3(long long n, long long i) {
  int r = static_cast<int>(i % 12);
  if (i == n - 1)
    return Rational(i * i - i, 6) +
           pick(r, {{{0, 1, 3, 4, 6, 7, 9, 10}, 0}, {{2, 5, 8, 11}, Rational(-1, 3)}});
  if (i == n - 2)
    return Rational(7 * i * i - 5 * i, 12) +
           pick(r, {{{0, 3, 8, 11}, 0},
                    {{1, 10}, Rational(5, 6)},
                    {{2, 5, 6, 9}, Rational(1, 2)},
                    {{4, 7}, Rational(1, 3)}});
  if (i == n - 3)
    return Rational(11 * i * i - 5 * i, 12) +
           pick(r, {{{0, 3, 4, 7}, 1},
                    {{1, 6, 9, 10}, Rational(3, 2)},
                    {{2, 5}, Rational(7, 6)},
                    {{8, 11}, Rational(2, 3)}});
  return Rational(3 * i * i - i, 3) + pick(r, {{{0, 3}, 1},
                                              {{1, 10}, Rational(7, 3)},
                                              {{2, 5}, Rational(5, 3)},
                                              {{4, 7}, Rational(4, 3)},
                                              {{6, 9}, 2},
                                              {{8, 11}, Rational(2, 3)}});
}

} // namespace

BigNat closed_form(int q, int n, int degree) {
  if (q < 1 || q > 3)
    throw DomainError("closed_form: only q = 1, 2, 3 have closed forms");
  require_group_params(n, q);
  require_degree(n, degree);
  Rational value;
  switch (q) {
  case 1:
    value = (degree == 0 || degree == n - 1) ? 1 : 2;
    break;
  case 2:
    value = closed_form_q2(n, degree);
    break;
  default:
    value = closed_form_q3(n, degree);
    break;
  }
  if (value.denominator() != 1 || value.numerator() < 0)
    throw InternalConsistencyError("closed_form: table entry is not a nonnegative integer");
  return BigNat(value.numerator());
}

DimTable table(int n, int q) {
  if (n < 2)
    throw DomainError("table: require n ≥ 2");
  require_group_params(n, q);
  DimTable t{n, q, std::vector<BigNat>(static_cast<std::size_t>(n))};
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t degree) {
    t.dims[degree] = dim_invariant(n, q, static_cast<int>(degree));
  });
  return t;
}

} // namespace braidcohom
