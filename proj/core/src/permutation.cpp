#include "braidcohom/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "braidcohom/errors.hpp"

namespace braidcohom {

Permutation::Permutation(int n) {
  if (n < 0)
    throw DomainError("Permutation: negative size");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= n() || seen[static_cast<std::size_t>(x)])
      throw DomainError("Permutation: images are not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  if (a < 0 || b < 0 || a >= n || b >= n || a == b)
    throw DomainError("Permutation::transposition: bad points");
  std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::from_cycles(int n, std::vector<std::vector<int>> const &cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (auto const &cycle : cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      int x = cycle[t];
      if (x < 0 || x >= n || used[static_cast<std::size_t>(x)])
        throw DomainError("Permutation::from_cycles: cycles must be disjoint and in range");
      used[static_cast<std::size_t>(x)] = true;
      images[static_cast<std::size_t>(x)] = cycle[(t + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return Permutation(std::move(inv));
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0)
      s = -s;
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x))
      return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x])
      continue;
    int len = 0;
    for (auto y = x; !seen[y]; y = static_cast<std::size_t>(images_[y])) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == static_cast<int>(x))
      continue;
    any = true;
    os << '(';
    for (auto y = x; !seen[y]; y = static_cast<std::size_t>(images_[y])) {
      if (y != x)
        os << ' ';
      os << y + 1;
      seen[y] = true;
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

Permutation operator*(Permutation const &a, Permutation const &b) {
  if (a.n() != b.n())
    throw DomainError("Permutation: size mismatch in product");
  std::vector<int> images(b.images_.size());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = a.images_[static_cast<std::size_t>(b.images_[x])];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

} // namespace braidcohom
