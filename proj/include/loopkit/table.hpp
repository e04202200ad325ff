#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "loopkit/perm.hpp"
#include "loopkit/rng.hpp"

namespace loopkit {

/// Anything that multiplies element indices: a dense table or an oracle.
template <class M>
concept Magma = requires(const M& m, int i, int j) {
  { m.order() } -> std::convertible_to<int>;
  { m.mul(i, j) } -> std::convertible_to<int>;
  { m.identity() } -> std::convertible_to<int>;
};

/// Dense tables are capped so that n^2 entries stay in memory; larger
/// instances go through MulOracle.
inline constexpr int kDenseOrderCap = 8192;

/// Dense n x n Cayley table over element indices; identity at index 0.
/// Immutable after construction and safe to share across threads.
class LoopTable {
public:
  /// Validates the Latin property and the two-sided identity. When
  /// `canonicalize` is set, an identity found at index e != 0 is relabeled
  /// to 0 by swapping labels 0 and e; otherwise that is an error.
  static LoopTable from_rows(const std::vector<std::vector<int>>& rows,
                             bool canonicalize = false) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw error("loop table: empty");
    if (n > kDenseOrderCap) throw error("loop table: order exceeds dense cap");
    std::vector<uint16_t> cells(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != n)
        throw error("loop table: row " + std::to_string(r) + " is not length " +
                    std::to_string(n));
      for (int c = 0; c < n; ++c) {
        int v = rows[r][c];
        if (v < 0 || v >= n)
          throw error("loop table: entry out of range at row " + std::to_string(r) +
                      ", column " + std::to_string(c));
        cells[static_cast<size_t>(r) * n + c] = static_cast<uint16_t>(v);
      }
    }
    LoopTable t;
    t.n_ = n;
    t.cells_ = std::move(cells);
    t.validate_latin();
    int e = t.find_identity();
    if (e < 0) throw error("loop table: no two-sided identity element");
    if (e != 0) {
      if (!canonicalize)
        throw error("loop table: identity is element " + std::to_string(e) +
                    ", not 0 (pass canonicalize to relabel)");
      t.swap_labels(0, e);
    }
    t.compute_inverse_maps();
    return t;
  }

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int x, int y) const { return cells_[static_cast<size_t>(x) * n_ + y]; }

  /// Solve x * w = z for w (scan of row x).
  int left_div(int x, int z) const {
    for (int w = 0; w < n_; ++w)
      if (mul(x, w) == z) return w;
    throw error("left_div: no solution (table is not Latin?)");
  }

  /// Solve w * y = z for w (scan of column y).
  int right_div(int z, int y) const {
    for (int w = 0; w < n_; ++w)
      if (mul(w, y) == z) return w;
    throw error("right_div: no solution (table is not Latin?)");
  }

  /// yL_x = x * y: row x read as a permutation.
  Perm left_translation(int x) const {
    check_range(x);
    std::vector<int> img(static_cast<size_t>(n_));
    for (int y = 0; y < n_; ++y) img[static_cast<size_t>(y)] = mul(x, y);
    return Perm(std::move(img));
  }

  /// yR_x = y * x: column x read as a permutation.
  Perm right_translation(int x) const {
    check_range(x);
    std::vector<int> img(static_cast<size_t>(n_));
    for (int y = 0; y < n_; ++y) img[static_cast<size_t>(y)] = mul(y, x);
    return Perm(std::move(img));
  }

  /// x^rho with x * x^rho = e.
  const Perm& j_rho() const { return j_rho_; }
  /// x^lambda with x^lambda * x = e.
  const Perm& j_lambda() const { return j_lambda_; }
  bool has_two_sided_inverses() const { return j_rho_ == j_lambda_; }

  /// The inverse map J, defined only when x^lambda = x^rho for all x.
  const Perm& j() const {
    if (!has_two_sided_inverses())
      throw error("inverse map J undefined: x^lambda != x^rho for some x");
    return j_rho_;
  }

  int inv(int x) const { return j()(x); }

  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

private:
  LoopTable() = default;

  void check_range(int x) const {
    if (x < 0 || x >= n_) throw error("element index out of range");
  }

  void validate_latin() const {
    std::vector<bool> seen(static_cast<size_t>(n_));
    for (int r = 0; r < n_; ++r) {
      std::fill(seen.begin(), seen.end(), false);
      for (int c = 0; c < n_; ++c) {
        int v = mul(r, c);
        if (seen[static_cast<size_t>(v)])
          throw error("loop table: row " + std::to_string(r) +
                      " repeats entry " + std::to_string(v));
        seen[static_cast<size_t>(v)] = true;
      }
    }
    for (int c = 0; c < n_; ++c) {
      std::fill(seen.begin(), seen.end(), false);
      for (int r = 0; r < n_; ++r) {
        int v = mul(r, c);
        if (seen[static_cast<size_t>(v)])
          throw error("loop table: column " + std::to_string(c) +
                      " repeats entry " + std::to_string(v));
        seen[static_cast<size_t>(v)] = true;
      }
    }
  }

  int find_identity() const {
    for (int e = 0; e < n_; ++e) {
      bool ok = true;
      for (int y = 0; y < n_ && ok; ++y)
        ok = mul(e, y) == y && mul(y, e) == y;
      if (ok) return e;
    }
    return -1;
  }

  void swap_labels(int a, int b) {
    auto relabel = [&](int v) { return v == a ? b : v == b ? a : v; };
    std::vector<uint16_t> out(cells_.size());
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        out[static_cast<size_t>(relabel(r)) * n_ + relabel(c)] =
            static_cast<uint16_t>(relabel(mul(r, c)));
    cells_ = std::move(out);
  }

  void compute_inverse_maps() {
    std::vector<int> rho(static_cast<size_t>(n_)), lam(static_cast<size_t>(n_));
    for (int x = 0; x < n_; ++x) {
      for (int w = 0; w < n_; ++w) {
        if (mul(x, w) == 0) rho[static_cast<size_t>(x)] = w;
        if (mul(w, x) == 0) lam[static_cast<size_t>(x)] = w;
      }
    }
    j_rho_ = Perm(std::move(rho));
    j_lambda_ = Perm(std::move(lam));
  }

  int n_ = 0;
  std::vector<uint16_t> cells_;
  Perm j_rho_, j_lambda_;
};

/// Implicit multiplication for orders where a dense triple sweep is out of
/// reach. The loop axioms are only spot-checked (see validate_sampled).
class MulOracle {
public:
  MulOracle(int order, std::function<int(int, int)> mul, int identity = 0)
      : n_(order), mul_(std::move(mul)), e_(identity) {
    if (n_ <= 0) throw error("oracle: order must be positive");
  }

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int x, int y) const { return mul_(x, y); }

  /// Spot-check of identity and cancellation laws on seeded random probes.
  /// Returns false on the first failed probe.
  bool validate_sampled(uint64_t samples, uint64_t seed) const {
    for (uint64_t i = 0; i < samples; ++i) {
      int a = bounded(stream_draw(seed, i, 0), n_);
      int b = bounded(stream_draw(seed, i, 1), n_);
      int c = bounded(stream_draw(seed, i, 2), n_);
      if (mul(e_, a) != a || mul(a, e_) != a) return false;
      // cancellation: a*b = a*c or b*a = c*a forces b = c
      if (b != c && (mul(a, b) == mul(a, c) || mul(b, a) == mul(c, a))) return false;
    }
    return true;
  }

  /// Dense materialization; only valid up to the dense cap.
  LoopTable materialize() const {
    if (n_ > kDenseOrderCap) throw error("oracle: order exceeds dense cap");
    std::vector<std::vector<int>> rows(static_cast<size_t>(n_),
                                       std::vector<int>(static_cast<size_t>(n_)));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) rows[static_cast<size_t>(x)][static_cast<size_t>(y)] = mul(x, y);
    return LoopTable::from_rows(rows, /*canonicalize=*/e_ != 0);
  }

private:
  int n_;
  std::function<int(int, int)> mul_;
  int e_;
};

static_assert(Magma<LoopTable>);
static_assert(Magma<MulOracle>);

enum class Side { left, right };

template <Magma M>
Perm translation(const M& m, int x, Side side) {
  const int n = m.order();
  if (x < 0 || x >= n) throw error("translation: element out of range");
  std::vector<int> img(static_cast<size_t>(n));
  for (int y = 0; y < n; ++y)
    img[static_cast<size_t>(y)] = side == Side::left ? m.mul(x, y) : m.mul(y, x);
  return Perm(std::move(img));
}

struct InverseMaps {
  Perm j_rho;
  Perm j_lambda;
  std::optional<Perm> j;  // present iff j_rho == j_lambda
};

template <Magma M>
InverseMaps inverse_maps(const M& m) {
  const int n = m.order();
  const int e = m.identity();
  std::vector<int> rho(static_cast<size_t>(n), -1), lam(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    for (int w = 0; w < n; ++w) {
      if (m.mul(x, w) == e) rho[static_cast<size_t>(x)] = w;
      if (m.mul(w, x) == e) lam[static_cast<size_t>(x)] = w;
    }
  for (int x = 0; x < n; ++x)
    if (rho[static_cast<size_t>(x)] < 0 || lam[static_cast<size_t>(x)] < 0)
      throw error("inverse_maps: missing inverse (not a quasigroup?)");
  InverseMaps r{Perm(std::move(rho)), Perm(std::move(lam)), std::nullopt};
  if (r.j_rho == r.j_lambda) r.j = r.j_rho;
  return r;
}

inline InverseMaps inverse_maps(const LoopTable& q) {
  InverseMaps r{q.j_rho(), q.j_lambda(), std::nullopt};
  if (r.j_rho == r.j_lambda) r.j = r.j_rho;
  return r;
}

/// The unique a with (x . yz) = (xy . z) a.
inline int associator(const LoopTable& q, int x, int y, int z) {
  return q.left_div(q.mul(q.mul(x, y), z), q.mul(x, q.mul(y, z)));
}

/// Principal isotope x o y = (x R_v^-1) . (y L_u^-1), identity u.v,
/// relabeled so the identity sits at index 0.
inline LoopTable principal_isotope(const LoopTable& q, int u, int v) {
  const int n = q.order();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw error("principal_isotope: element out of range");
  Perm rv_inv = q.right_translation(v).inverse();
  Perm lu_inv = q.left_translation(u).inverse();
  std::vector<std::vector<int>> rows(static_cast<size_t>(n),
                                     std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      rows[static_cast<size_t>(x)][static_cast<size_t>(y)] = q.mul(rv_inv(x), lu_inv(y));
  return LoopTable::from_rows(rows, /*canonicalize=*/true);
}

/// The relabeling applied by principal_isotope: a transposition of 0 and
/// the isotope's identity u.v on the original carrier.
inline Perm isotope_relabeling(const LoopTable& q, int u, int v) {
  const int n = q.order();
  int e = q.mul(u, v);
  std::vector<int> img(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) img[static_cast<size_t>(x)] = x;
  std::swap(img[0], img[static_cast<size_t>(e)]);
  return Perm(std::move(img));
}

}  // namespace loopkit
