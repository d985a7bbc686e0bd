#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "knot/errors.hpp"

namespace knot {

/// Permutation of {0,...,d-1}, stored as its image sequence.
/// Products compose right-to-left: (a*b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm& rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Perm& rhs) const { return img_ != rhs.img_; }
  bool operator<(const Perm& rhs) const { return img_ < rhs.img_; }

 private:
  std::vector<int> img_;
};

inline Perm pow(const Perm& g, long long e) {
  Perm r = Perm::identity(g.degree());
  Perm base = e >= 0 ? g : g.inverse();
  long long k = e >= 0 ? e : -e;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

/// [g,h] = g^-1 h g h^-1
inline Perm commutator(const Perm& g, const Perm& h) {
  return g.inverse() * h * g * h.inverse();
}

inline Perm conjugate(const Perm& g, const Perm& x) {
  return g * x * g.inverse();
}

int perm_order(const Perm& g);

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace knot
