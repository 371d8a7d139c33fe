#include "braidcohom/character_oracle.hpp"

#include <numeric>
#include <string>

#include "braidcohom/errors.hpp"
#include "braidcohom/parallel.hpp"

namespace braidcohom::character {

namespace {

// Parity of the permutation i -> map[i] restricted to [lo, hi).
int run_parity(std::vector<int> const &map, std::size_t lo, std::size_t hi) {
  int inversions = 0;
  for (auto a = lo; a < hi; ++a)
    for (auto b = a + 1; b < hi; ++b)
      if (map[a] > map[b])
        ++inversions;
  return inversions % 2;
}

std::uint64_t mask_of(DeltaVector const &delta) {
  std::uint64_t m = 0;
  for (int i = 0; i < delta.n(); ++i)
    if (delta[static_cast<std::size_t>(i)])
      m |= std::uint64_t{1} << i;
  return m;
}

std::uint64_t image_mask(std::vector<int> const &images, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (mask >> i & 1U)
      out |= std::uint64_t{1} << images[i];
  return out;
}

std::vector<int> images_of(Partition const &partition, std::vector<int> const &starts,
                           CentralizerElement const &z) {
  std::vector<int> images(static_cast<std::size_t>(partition.n()));
  for (std::size_t i = 0; i < starts.size(); ++i) {
    int part = partition[i];
    int target = starts[static_cast<std::size_t>(z.block_map[i])];
    for (int r = 0; r < part; ++r)
      images[static_cast<std::size_t>(starts[i] + r)] = target + (r + z.rotations[i]) % part;
  }
  return images;
}

void check_size(int n) {
  if (n > 63)
    throw DomainError("character oracle: n too large for the mask representation");
}

} // namespace

CentralizerElement identity_element(Partition const &partition) {
  CentralizerElement z;
  z.block_map.resize(static_cast<std::size_t>(partition.length()));
  std::iota(z.block_map.begin(), z.block_map.end(), 0);
  z.rotations.assign(static_cast<std::size_t>(partition.length()), 0);
  return z;
}

Permutation CentralizerElement::to_permutation(Partition const &partition) const {
  if (block_map.size() != static_cast<std::size_t>(partition.length()) ||
      rotations.size() != block_map.size())
    throw DomainError("CentralizerElement: shape does not match the partition");
  for (std::size_t i = 0; i < block_map.size(); ++i) {
    auto b = block_map[i];
    if (b < 0 || b >= partition.length() || partition[static_cast<std::size_t>(b)] != partition[i])
      throw DomainError("CentralizerElement: block map must preserve part sizes");
    if (rotations[i] < 0 || rotations[i] >= partition[i])
      throw DomainError("CentralizerElement: rotation out of range");
  }
  return Permutation(images_of(partition, partition.block_starts(), *this));
}

std::vector<CentralizerElement> centralizer_elements(Partition const &partition) {
  std::vector<CentralizerElement> out;
  for_each_centralizer_element(partition, [&](CentralizerElement const &z) { out.push_back(z); });
  return out;
}

std::optional<CentralizerElement> decompose(Partition const &partition, Permutation const &z) {
  if (z.n() != partition.n())
    throw DomainError("decompose: permutation size differs from n");
  auto starts = partition.block_starts();
  std::vector<int> block_of(static_cast<std::size_t>(partition.n()));
  for (std::size_t b = 0; b < starts.size(); ++b)
    for (int r = 0; r < partition[b]; ++r)
      block_of[static_cast<std::size_t>(starts[b] + r)] = static_cast<int>(b);

  CentralizerElement e = identity_element(partition);
  for (std::size_t i = 0; i < starts.size(); ++i) {
    int y = z(starts[i]);
    int b = block_of[static_cast<std::size_t>(y)];
    if (partition[static_cast<std::size_t>(b)] != partition[i])
      return std::nullopt;
    e.block_map[i] = b;
    e.rotations[i] = y - starts[static_cast<std::size_t>(b)];
  }
  if (Permutation(images_of(partition, starts, e)) != z)
    return std::nullopt;
  return e;
}

RootOfUnity zeta_eval(Partition const &partition, CentralizerElement const &z,
                      EpsilonScope scope) {
  RootOfUnity value;
  auto const &parts = partition.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int part = parts[i];
    int k = z.rotations[i];
    value *= RootOfUnity(k, part);
    // sign of a k-th power of a part-cycle
    if (part % 2 == 0 && k % 2 == 1)
      value *= RootOfUnity::minus_one();
  }
  for (std::size_t i = 0; i < parts.size();) {
    auto k = i;
    while (k < parts.size() && parts[k] == parts[i])
      ++k;
    if (k - i > 1 && run_parity(z.block_map, i, k) == 1) {
      if (parts[i] % 2 == 0)
        value *= RootOfUnity::minus_one();  // α: (-1)^{λ+1} per swap
      if (scope == EpsilonScope::whole_element && parts[i] % 2 == 1)
        value *= RootOfUnity::minus_one();  // ε(ν): (-1)^λ per swap
    }
    i = k;
  }
  return value;
}

RootOfUnity zeta_eval(Partition const &partition, Permutation const &z, EpsilonScope scope) {
  auto e = decompose(partition, z);
  if (!e)
    throw DomainError("zeta_eval: " + z.to_string() + " is not in Z_" + partition.to_string());
  return zeta_eval(partition, *e, scope);
}

std::vector<Permutation> coset_representatives(int n, int q) {
  require_group_params(n, q);
  int p = n - q;
  std::vector<Permutation> out;
  for (int d = 0; d <= q; ++d) {
    std::vector<bool> pick_k(static_cast<std::size_t>(p), false);
    std::fill(pick_k.begin(), pick_k.begin() + d, true);
    do {
      std::vector<bool> pick_l(static_cast<std::size_t>(q), false);
      std::fill(pick_l.begin(), pick_l.begin() + d, true);
      do {
        std::vector<std::vector<int>> cycles;
        std::vector<int> ks, ls;
        for (int i = 0; i < p; ++i)
          if (pick_k[static_cast<std::size_t>(i)])
            ks.push_back(i);
        for (int i = 0; i < q; ++i)
          if (pick_l[static_cast<std::size_t>(i)])
            ls.push_back(p + i);
        for (int t = 0; t < d; ++t)
          cycles.push_back({ks[static_cast<std::size_t>(t)], ls[static_cast<std::size_t>(t)]});
        out.push_back(Permutation::from_cycles(n, cycles));
      } while (std::prev_permutation(pick_l.begin(), pick_l.end()));
    } while (std::prev_permutation(pick_k.begin(), pick_k.end()));
  }
  return out;
}

DeltaVector delta_of(Permutation const &s, int q) {
  int n = s.n();
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    bits[static_cast<std::size_t>(i)] = s(i) >= n - q ? 1 : 0;
  return DeltaVector(std::move(bits));
}

std::vector<Permutation> double_coset_reps(int n, int q, Partition const &partition) {
  require_group_params(n, q);
  if (partition.n() != n)
    throw DomainError("double_coset_reps: partition is not of n");
  check_size(n);
  auto reps = coset_representatives(n, q);
  std::vector<std::uint64_t> masks;
  masks.reserve(reps.size());
  for (auto const &s : reps)
    masks.push_back(mask_of(delta_of(s, q)));
  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return masks[a] < masks[b]; });
  auto index_of = [&](std::uint64_t m) {
    auto it = std::lower_bound(order.begin(), order.end(), m,
                               [&](std::size_t a, std::uint64_t v) { return masks[a] < v; });
    if (it == order.end() || masks[*it] != m)
      throw InternalConsistencyError("double_coset_reps: orbit left the coset set");
    return *it;
  };

  std::vector<std::size_t> parent(reps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  };

  // generators: one-step rotation of each block, swap of adjacent equal blocks
  std::vector<std::vector<int>> generators;
  auto id = identity_element(partition);
  auto starts = partition.block_starts();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (partition[i] > 1) {
      auto g = id;
      g.rotations[i] = 1;
      generators.push_back(images_of(partition, starts, g));
    }
    if (i + 1 < starts.size() && partition[i] == partition[i + 1]) {
      auto g = id;
      std::swap(g.block_map[i], g.block_map[i + 1]);
      generators.push_back(images_of(partition, starts, g));
    }
  }
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (auto const &g : generators)
      unite(a, index_of(image_mask(g, masks[a])));

  std::vector<Permutation> out;
  for (std::size_t a = 0; a < reps.size(); ++a)
    if (find(a) == a)
      out.push_back(reps[a]);
  return out;
}

int indicator(Partition const &partition, Permutation const &s, int q, EpsilonScope scope) {
  if (s.n() != partition.n())
    throw DomainError("indicator: permutation size differs from n");
  check_size(s.n());
  auto mask = mask_of(delta_of(s, q));
  auto starts = partition.block_starts();
  bool ok = true;
  for_each_centralizer_element(partition, [&](CentralizerElement const &z) {
    if (!ok || zeta_eval(partition, z, scope).is_one())
      return;
    if (image_mask(images_of(partition, starts, z), mask) == mask)
      ok = false;
  });
  return ok ? 1 : 0;
}

std::vector<CosetVerdict> oracle_cosets(Partition const &partition, int q,
                                        OracleOptions const &options) {
  int n = partition.n();
  if (n > options.cap)
    throw CapExceededError("character oracle: n=" + std::to_string(n) +
                             " exceeds --oracle-cap=" + std::to_string(options.cap),
                           "--oracle-cap", options.cap);
  auto reps = double_coset_reps(n, q, partition);
  std::vector<CosetVerdict> out;
  std::vector<std::uint64_t> masks;
  for (auto const &s : reps) {
    auto delta = delta_of(s, q);
    masks.push_back(mask_of(delta));
    out.push_back(CosetVerdict{s, std::move(delta), true});
  }
  auto starts = partition.block_starts();
  std::size_t alive = out.size();
  for_each_centralizer_element(partition, [&](CentralizerElement const &z) {
    if (alive == 0 || zeta_eval(partition, z, options.scope).is_one())
      return;
    auto images = images_of(partition, starts, z);
    for (std::size_t a = 0; a < out.size(); ++a) {
      if (out[a].invariant && image_mask(images, masks[a]) == masks[a]) {
        out[a].invariant = false;
        --alive;
      }
    }
  });
  return out;
}

BigNat oracle_dim(int n, int q, int degree, OracleOptions const &options) {
  require_group_params(n, q);
  require_degree(n, degree);
  if (n > options.cap)
    throw CapExceededError("character oracle: n=" + std::to_string(n) +
                             " exceeds --oracle-cap=" + std::to_string(options.cap),
                           "--oracle-cap", options.cap);
  auto lambdas = partitions_with_parts(n, n - degree);
  std::vector<int> counts(lambdas.size(), 0);
  parallel_for(lambdas.size(), [&](std::size_t i) {
    for (auto const &v : oracle_cosets(lambdas[i], q, options))
      counts[i] += v.invariant ? 1 : 0;
  });
  BigNat total = 0;
  for (int c : counts)
    total += c;
  return total;
}

} // namespace braidcohom::character
