#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopkit {

/// Error type for invalid inputs and misuse of preconditions.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Bijection on {0..n-1}. Mappings act on the right: x acted by P is
/// images[x], and the composite PQ means "apply P, then Q", so that
/// x(PQ) = (xP)Q.
class Perm {
public:
  Perm() = default;

  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw error("Perm: images are not a bijection on {0..n-1}");
      seen[v] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }

  /// x acted on the right: x . P
  int operator()(int x) const { return img_[static_cast<size_t>(x)]; }

  /// Right-action composite: x(PQ) = (xP)Q.
  Perm then(const Perm& q) const {
    if (q.size() != size()) throw error("Perm: size mismatch in composition");
    std::vector<int> img(img_.size());
    for (size_t x = 0; x < img_.size(); ++x)
      img[x] = q.img_[static_cast<size_t>(img_[x])];
    Perm r;
    r.img_ = std::move(img);  // already a bijection, skip re-validation
    return r;
  }

  Perm inverse() const {
    std::vector<int> img(img_.size());
    for (size_t x = 0; x < img_.size(); ++x)
      img[static_cast<size_t>(img_[x])] = static_cast<int>(x);
    Perm r;
    r.img_ = std::move(img);
    return r;
  }

  bool is_identity() const {
    for (size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != static_cast<int>(x)) return false;
    return true;
  }

  /// Sorted multiset of cycle lengths; invariant under conjugation.
  std::vector<int> cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lens;
    for (size_t s = 0; s < img_.size(); ++s) {
      if (seen[s]) continue;
      int len = 0;
      for (size_t x = s; !seen[x]; x = static_cast<size_t>(img_[x])) {
        seen[x] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
  }

  const std::vector<int>& images() const { return img_; }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

private:
  std::vector<int> img_;
};

inline Perm compose(const Perm& p, const Perm& q) { return p.then(q); }
inline Perm invert(const Perm& p) { return p.inverse(); }
inline int apply(const Perm& p, int x) { return p(x); }

/// Conjugate d^-1-free form used throughout: apply d, then u, then d^-1.
inline Perm conjugate(const Perm& d, const Perm& u) {
  return d.then(u).then(d.inverse());
}

/// Arbitrary self-map on {0..n-1}; repeats allowed.
class SelfMap {
public:
  SelfMap() = default;

  explicit SelfMap(std::vector<int> images) : img_(std::move(images)) {
    for (int v : img_)
      if (v < 0 || v >= static_cast<int>(img_.size()))
        throw error("SelfMap: image out of range");
  }

  SelfMap(const Perm& p) : img_(p.images()) {}  // NOLINT: intentional implicit

  static SelfMap identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return SelfMap(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<size_t>(x)]; }

  bool is_bijective() const {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  /// View as a permutation; throws when not bijective.
  Perm to_perm() const {
    if (!is_bijective()) throw error("SelfMap: not bijective");
    return Perm(img_);
  }

  const std::vector<int>& images() const { return img_; }

  friend bool operator==(const SelfMap& a, const SelfMap& b) = default;

private:
  std::vector<int> img_;
};

}  // namespace loopkit
