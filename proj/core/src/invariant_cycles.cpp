#include "braidcohom/invariant_cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "braidcohom/errors.hpp"

namespace braidcohom {

DeltaVector::DeltaVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1)
      throw DomainError("DeltaVector: entries must be 0 or 1");
    weight_ += b;
  }
}

DeltaVector DeltaVector::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c == '0' || c == '1')
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    else if (c != ',' && c != ' ' && c != '(' && c != ')')
      throw DomainError("DeltaVector::parse: unexpected character");
  }
  return DeltaVector(std::move(bits));
}

std::string DeltaVector::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_)
    s.push_back(static_cast<char>('0' + b));
  return s;
}

namespace {

// Normal-form order inside a run of equal parts.
bool precedes(CycleInvariant const &a, CycleInvariant const &b) {
  if (a.marks() != b.marks())
    return a.marks() > b.marks();
  return a < b;
}

} // namespace

FullInvariantSet::FullInvariantSet(Partition partition, std::vector<CycleInvariant> cycles)
  : partition_(std::move(partition)), cycles_(std::move(cycles)) {
  if (static_cast<int>(cycles_.size()) != partition_.length())
    throw DomainError("FullInvariantSet: need one cycle per block");
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (cycles_[i].part() != partition_[i])
      throw DomainError("FullInvariantSet: cycle part size does not match its block");
    q_ += cycles_[i].marks();
  }
  std::size_t start = 0;
  for (auto [part, mult] : partition_.multiplicities()) {
    auto first = cycles_.begin() + static_cast<std::ptrdiff_t>(start);
    std::stable_sort(first, first + mult, precedes);
    start += static_cast<std::size_t>(mult);
  }
}

bool FullInvariantSet::is_normal_form(Partition const &partition,
                                      std::span<CycleInvariant const> cycles) {
  if (static_cast<int>(cycles.size()) != partition.length())
    return false;
  for (std::size_t i = 0; i + 1 < cycles.size(); ++i)
    if (partition[i] == partition[i + 1] && precedes(cycles[i + 1], cycles[i]))
      return false;
  return true;
}

int FullInvariantSet::big_part_marks() const {
  int m = 0;
  for (int i = 0; i < partition_.big_part_count(); ++i)
    m += cycles_[static_cast<std::size_t>(i)].marks();
  return m;
}

std::string FullInvariantSet::label() const {
  std::ostringstream os;
  os << "λ=" << partition_ << "; χ=[";
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (i)
      os << ',';
    os << cycles_[i].to_string();
  }
  os << ']';
  return os.str();
}

int MarkedPartition::total_marks() const {
  return std::accumulate(marks.begin(), marks.end(), 0);
}

std::string MarkedPartition::to_string() const {
  std::ostringstream os;
  os << '(';
  auto big = big_parts();
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (i)
      os << ',';
    os << '(' << big[i] << ',' << marks[i] << ')';
  }
  os << ") in " << partition << ", q=" << q;
  return os.str();
}

std::vector<int> raw_cycle_gaps(Partition const &partition, DeltaVector const &delta,
                                int block) {
  if (delta.n() != partition.n())
    throw DomainError("raw_cycle_gaps: delta length differs from n");
  if (block < 0 || block >= partition.length())
    throw DomainError("raw_cycle_gaps: block index out of range");
  int start = partition.block_starts()[static_cast<std::size_t>(block)];
  int part = partition[static_cast<std::size_t>(block)];
  std::vector<int> marks;
  for (int r = 0; r < part; ++r)
    if (delta[static_cast<std::size_t>(start + r)])
      marks.push_back(r);
  std::vector<int> gaps;
  if (marks.empty())
    return gaps;
  for (std::size_t t = 0; t + 1 < marks.size(); ++t)
    gaps.push_back(marks[t + 1] - marks[t] - 1);
  gaps.push_back(part - marks.back() + marks.front() - 1);
  return gaps;
}

FullInvariantSet chi_from_delta(Partition const &partition, DeltaVector const &delta) {
  if (delta.n() != partition.n())
    throw DomainError("chi_from_delta: delta length differs from n");
  std::vector<CycleInvariant> cycles;
  cycles.reserve(static_cast<std::size_t>(partition.length()));
  for (int b = 0; b < partition.length(); ++b) {
    int part = partition[static_cast<std::size_t>(b)];
    auto gaps = raw_cycle_gaps(partition, delta, b);
    cycles.push_back(gaps.empty() ? CycleInvariant::empty(part)
                                  : CycleInvariant::from_gaps(part, std::move(gaps)));
  }
  return FullInvariantSet(partition, std::move(cycles));
}

DeltaVector delta_from_chi(FullInvariantSet const &set) {
  auto const &partition = set.partition();
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(partition.n()), 0);
  auto starts = partition.block_starts();
  for (std::size_t b = 0; b < set.cycles().size(); ++b) {
    auto const &chi = set.cycles()[b];
    if (chi.is_empty())
      continue;
    int pos = starts[b];
    bits[static_cast<std::size_t>(pos)] = 1;
    auto const &gaps = chi.entries();
    for (std::size_t t = 0; t + 1 < gaps.size(); ++t) {
      pos += gaps[t] + 1;
      bits[static_cast<std::size_t>(pos)] = 1;
    }
  }
  return DeltaVector(std::move(bits));
}

bool is_admissible(FullInvariantSet const &set) {
  auto const &partition = set.partition();
  auto const &cycles = set.cycles();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (partition[i] >= 2 && !block_admissible(cycles[i]))
      return false;
  }
  // equal even blocks must carry pairwise distinct cycles
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (partition[i] % 2 != 0)
      continue;
    for (std::size_t k = i + 1; k < cycles.size() && partition[k] == partition[i]; ++k)
      if (cycles[k] == cycles[i])
        return false;
  }
  return true;
}

bool vanishes_by_part_count(Partition const &partition, int q) {
  auto const &parts = partition.parts();
  if (q < 0 || static_cast<int>(parts.size()) < q + 1)
    return false;
  auto const qi = static_cast<std::size_t>(q);
  if (parts[qi] >= 3)
    return true;
  for (std::size_t i = qi; i + 1 < parts.size(); ++i)
    if (parts[i] == 2 && parts[i + 1] == 2)
      return true;
  return false;
}

void require_group_params(int n, int q) {
  if (n < 1)
    throw DomainError("require n ≥ 1");
  if (q < 0 || n - q < q)
    throw DomainError("require n−q ≥ q (got n=" + std::to_string(n) +
                      ", q=" + std::to_string(q) + ")");
}

void require_degree(int n, int degree) {
  if (degree < 0 || degree > n - 1)
    throw DomainError("require 0 ≤ degree ≤ n−1 (got degree=" + std::to_string(degree) +
                      ", n=" + std::to_string(n) + ")");
}

namespace {

class SetEnumerator {
public:
  SetEnumerator(Partition partition, int q, std::vector<FullInvariantSet> &out)
    : partition_(std::move(partition)), q_(q), out_(out) {
    int big_sum = 0;
    for (int p : partition_.big_parts())
      big_sum += p;
    min_big_marks_ = std::max(0, big_sum - partition_.n() + q_);
  }

  void run() {
    current_.clear();
    rec(0, 0);
  }

private:
  std::vector<CycleInvariant> const &cycles_for(int part, int d) {
    auto key = std::pair{part, d};
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, enumerate_admissible_cycles(part, d)).first;
    return it->second;
  }

  void rec(int block, int used) {
    int big = partition_.big_part_count();
    if (block == big) {
      if (used < min_big_marks_)
        return;
      auto cycles = current_;
      int marked_ones = q_ - used;
      for (int i = 0; i < partition_.ones(); ++i)
        cycles.push_back(i < marked_ones ? CycleInvariant::from_gaps(1, {0})
                                         : CycleInvariant::empty(1));
      out_.emplace_back(partition_, std::move(cycles));
      return;
    }
    int part = partition_[static_cast<std::size_t>(block)];
    bool same_run = block > 0 && partition_[static_cast<std::size_t>(block - 1)] == part;
    int d_max = std::min(part, q_ - used);
    if (same_run)
      d_max = std::min(d_max, current_.back().marks());
    for (int d = d_max; d >= 0; --d) {
      for (auto const &chi : cycles_for(part, d)) {
        if (same_run && d == current_.back().marks()) {
          auto const &prev = current_.back();
          if (part % 2 == 0 ? !(prev < chi) : (chi < prev))
            continue;
        }
        current_.push_back(chi);
        rec(block + 1, used + d);
        current_.pop_back();
      }
    }
  }

  Partition partition_;
  int q_;
  int min_big_marks_ = 0;
  std::vector<FullInvariantSet> &out_;
  std::vector<CycleInvariant> current_;
  std::map<std::pair<int, int>, std::vector<CycleInvariant>> cache_;
};

} // namespace

std::vector<FullInvariantSet> enumerate_admissible_sets(int n, int q, int degree) {
  require_group_params(n, q);
  require_degree(n, degree);
  std::vector<FullInvariantSet> out;
  for (auto const &partition : partitions_with_parts(n, n - degree)) {
    SetEnumerator e(partition, q, out);
    e.run();
  }
  return out;
}

FullInvariantSet stability_map(FullInvariantSet const &set) {
  int n = set.n();
  int q = set.q();
  if (n - (q + 1) < q + 1)
    throw DomainError("stability_map: require n−q−1 ≥ q+1");
  auto cycles = set.cycles();
  auto const &partition = set.partition();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (partition[i] == 1 && cycles[i].is_empty()) {
      cycles[i] = CycleInvariant::from_gaps(1, {0});
      return FullInvariantSet(partition, std::move(cycles));
    }
  }
  throw DomainError("stability_map: no unmarked 1-part (outside the map's range)");
}

} // namespace braidcohom
