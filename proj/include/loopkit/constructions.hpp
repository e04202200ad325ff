#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "loopkit/table.hpp"

namespace loopkit {

// ---------------------------------------------------------------------------
// Tiny finite rings, just enough for the R x R loop construction.

struct RingSpec {
  enum class Kind { integers_mod, matrices, upper_triangular };
  Kind kind = Kind::integers_mod;
  int modulus = 0;  // integers_mod
  int dim = 0;      // matrix kinds
  int p = 0;        // field characteristic for matrix kinds

  int size() const {
    switch (kind) {
      case Kind::integers_mod: return modulus;
      case Kind::matrices: {
        int s = 1;
        for (int i = 0; i < dim * dim; ++i) s *= p;
        return s;
      }
      case Kind::upper_triangular: {
        int s = 1;
        for (int i = 0; i < dim * (dim + 1) / 2; ++i) s *= p;
        return s;
      }
    }
    return 0;
  }

  void validate() const {
    auto is_prime = [](int v) {
      if (v < 2) return false;
      for (int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
      return true;
    };
    switch (kind) {
      case Kind::integers_mod:
        if (modulus < 2) throw error("ring spec: modulus must be >= 2");
        break;
      default:
        if (dim < 1) throw error("ring spec: dimension must be >= 1");
        if (!is_prime(p)) throw error("ring spec: field size must be prime");
    }
  }

  /// Accepts "zn:K", "mDgfP" and "utDgfP", e.g. "zn:3", "m2gf3", "ut2gf3".
  static RingSpec parse(const std::string& s) {
    RingSpec spec;
    auto num = [&](size_t pos) {
      if (pos >= s.size()) throw error("ring spec: missing number in \"" + s + "\"");
      return std::stoi(s.substr(pos));
    };
    if (s.rfind("zn:", 0) == 0) {
      spec.kind = Kind::integers_mod;
      spec.modulus = num(3);
    } else if (s.rfind("ut", 0) == 0) {
      spec.kind = Kind::upper_triangular;
      size_t g = s.find("gf");
      if (g == std::string::npos) throw error("ring spec: expected utDgfP");
      spec.dim = std::stoi(s.substr(2, g - 2));
      spec.p = num(g + 2);
    } else if (s.rfind("m", 0) == 0) {
      spec.kind = Kind::matrices;
      size_t g = s.find("gf");
      if (g == std::string::npos) throw error("ring spec: expected mDgfP");
      spec.dim = std::stoi(s.substr(1, g - 1));
      spec.p = num(g + 2);
    } else {
      throw error("ring spec: unknown format \"" + s + "\"");
    }
    spec.validate();
    return spec;
  }
};

/// Ring arithmetic materialized as lookup tables over element indices.
/// Matrix elements are encoded row-major, base p, coefficient 0 first,
/// so index 0 is the zero element.
class Ring {
public:
  explicit Ring(const RingSpec& spec) : spec_(spec) {
    spec.validate();
    n_ = spec.size();
    if (n_ > 4096) throw error("ring: too large to tabulate");
    add_.resize(static_cast<size_t>(n_) * n_);
    mul_.resize(static_cast<size_t>(n_) * n_);
    const int slots = entry_count();
    std::vector<int> a(static_cast<size_t>(slots)), b(static_cast<size_t>(slots)),
        r(static_cast<size_t>(slots));
    for (int i = 0; i < n_; ++i) {
      decode(i, a);
      for (int j = 0; j < n_; ++j) {
        decode(j, b);
        for (int s = 0; s < slots; ++s) r[static_cast<size_t>(s)] = (a[static_cast<size_t>(s)] + b[static_cast<size_t>(s)]) % base();
        add_[static_cast<size_t>(i) * n_ + j] = static_cast<uint16_t>(encode(r));
        multiply(a, b, r);
        mul_[static_cast<size_t>(i) * n_ + j] = static_cast<uint16_t>(encode(r));
      }
    }
  }

  int size() const { return n_; }
  int zero() const { return 0; }
  int add(int i, int j) const { return add_[static_cast<size_t>(i) * n_ + j]; }
  int mul(int i, int j) const { return mul_[static_cast<size_t>(i) * n_ + j]; }
  int cube(int i) const { return mul(mul(i, i), i); }

private:
  int base() const { return spec_.kind == RingSpec::Kind::integers_mod ? spec_.modulus : spec_.p; }

  int entry_count() const {
    switch (spec_.kind) {
      case RingSpec::Kind::integers_mod: return 1;
      case RingSpec::Kind::matrices: return spec_.dim * spec_.dim;
      case RingSpec::Kind::upper_triangular: return spec_.dim * (spec_.dim + 1) / 2;
    }
    return 0;
  }

  void decode(int idx, std::vector<int>& out) const {
    for (size_t s = 0; s < out.size(); ++s) {
      out[s] = idx % base();
      idx /= base();
    }
  }

  int encode(const std::vector<int>& in) const {
    int idx = 0;
    for (size_t s = in.size(); s-- > 0;) idx = idx * base() + in[s];
    return idx;
  }

  // entry slot of matrix position (r, c), or -1 when structurally zero
  int slot(int r, int c) const {
    if (spec_.kind == RingSpec::Kind::matrices) return r * spec_.dim + c;
    if (r > c) return -1;
    int s = 0;
    for (int i = 0; i < r; ++i) s += spec_.dim - i;
    return s + (c - r);
  }

  void multiply(const std::vector<int>& a, const std::vector<int>& b,
                std::vector<int>& out) const {
    if (spec_.kind == RingSpec::Kind::integers_mod) {
      out[0] = (a[0] * b[0]) % spec_.modulus;
      return;
    }
    const int d = spec_.dim;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        int s = slot(r, c);
        if (s < 0) continue;
        int acc = 0;
        for (int k = 0; k < d; ++k) {
          int sa = slot(r, k), sb = slot(k, c);
          if (sa < 0 || sb < 0) continue;
          acc += a[static_cast<size_t>(sa)] * b[static_cast<size_t>(sb)];
        }
        out[static_cast<size_t>(s)] = acc % spec_.p;
      }
  }

  RingSpec spec_;
  int n_ = 0;
  std::vector<uint16_t> add_, mul_;
};

// ---------------------------------------------------------------------------
// The R x R loop (u,f).(v,g) = (u+v, f+g+uv^3), with uv^3 read as u.(v^3).
// Element (u,f) is encoded as u*|R| + f; the identity (0,0) is index 0.

struct RingLoop {
  std::shared_ptr<Ring> ring;
  MulOracle oracle;
  SelfMap sigma;  // loop squaring x -> x.x

  LoopTable table() const { return oracle.materialize(); }
};

inline RingLoop example_ring_loop(const RingSpec& spec) {
  auto ring = std::make_shared<Ring>(spec);
  const int r = ring->size();
  const long long order = static_cast<long long>(r) * r;
  if (order > (1 << 24)) throw error("ring loop: order too large for the oracle");
  MulOracle oracle(
      static_cast<int>(order),
      [ring, r](int x, int y) {
        const int u = x / r, f = x % r;
        const int v = y / r, g = y % r;
        return ring->add(u, v) * r + ring->add(ring->add(f, g), ring->mul(u, ring->cube(v)));
      },
      0);
  std::vector<int> sq(static_cast<size_t>(order));
  for (int x = 0; x < static_cast<int>(order); ++x) sq[static_cast<size_t>(x)] = oracle.mul(x, x);
  return RingLoop{std::move(ring), std::move(oracle), SelfMap(std::move(sq))};
}

// ---------------------------------------------------------------------------
// Standard test groups.

inline LoopTable cyclic_group(int n) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
  return LoopTable::from_rows(rows);
}

inline LoopTable elementary_abelian_group(int p, int k) {
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = i, b = j, out = 0, scale = 1;
      for (int s = 0; s < k; ++s) {
        out += scale * ((a % p + b % p) % p);
        scale *= p;
        a /= p;
        b /= p;
      }
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = out;
    }
  return LoopTable::from_rows(rows);
}

inline LoopTable klein_group() { return elementary_abelian_group(2, 2); }

/// Symmetric group on 3 letters; elements are the permutations of {0,1,2}
/// in lexicographic order, product is "apply left, then right".
inline LoopTable sym3_group() {
  std::vector<std::array<int, 3>> elems;
  std::array<int, 3> v{0, 1, 2};
  do {
    elems.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  auto index_of = [&](const std::array<int, 3>& w) {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == w) return static_cast<int>(i);
    throw error("sym3: lookup failed");
  };
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> w;
      for (int x = 0; x < 3; ++x)
        w[static_cast<size_t>(x)] =
            elems[static_cast<size_t>(j)][static_cast<size_t>(elems[static_cast<size_t>(i)][static_cast<size_t>(x)])];
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = index_of(w);
    }
  return LoopTable::from_rows(rows);
}

inline LoopTable standard_loop(const std::string& name) {
  if (name.rfind("cyclic:", 0) == 0) return cyclic_group(std::stoi(name.substr(7)));
  if (name == "klein") return klein_group();
  if (name == "sym3") return sym3_group();
  if (name.rfind("ea:", 0) == 0) {
    size_t c = name.find(':', 3);
    if (c == std::string::npos) throw error("standard loop: expected ea:p:k");
    return elementary_abelian_group(std::stoi(name.substr(3, c - 3)),
                                    std::stoi(name.substr(c + 1)));
  }
  throw error("unknown standard loop: " + name);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of loops of small order (identity fixed at 0):
// backtracking completion of the Latin square with row 0 = column 0 = id.
// Cells are filled row-major with candidate values ascending, so the
// emission order is deterministic.

namespace detail {

class LoopEnumerator {
public:
  LoopEnumerator(int n, std::function<bool(const LoopTable&)> visit)
      : n_(n), visit_(std::move(visit)), cells_(static_cast<size_t>(n) * n, -1),
        row_used_(static_cast<size_t>(n) * n, false), col_used_(static_cast<size_t>(n) * n, false) {
    for (int i = 0; i < n_; ++i) {
      set(0, i, i);
      if (i > 0) set(i, 0, i);
    }
  }

  uint64_t run() {
    fill(1, 1);
    return emitted_;
  }

private:
  void set(int r, int c, int v) {
    cells_[static_cast<size_t>(r) * n_ + c] = v;
    row_used_[static_cast<size_t>(r) * n_ + v] = true;
    col_used_[static_cast<size_t>(c) * n_ + v] = true;
  }
  void unset(int r, int c, int v) {
    cells_[static_cast<size_t>(r) * n_ + c] = -1;
    row_used_[static_cast<size_t>(r) * n_ + v] = false;
    col_used_[static_cast<size_t>(c) * n_ + v] = false;
  }

  void fill(int r, int c) {
    if (stop_) return;
    if (r == n_) {
      emit();
      return;
    }
    if (c == n_) {
      fill(r + 1, 1);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (row_used_[static_cast<size_t>(r) * n_ + v] || col_used_[static_cast<size_t>(c) * n_ + v])
        continue;
      set(r, c, v);
      fill(r, c + 1);
      unset(r, c, v);
      if (stop_) return;
    }
  }

  void emit() {
    std::vector<std::vector<int>> rows(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = cells_[static_cast<size_t>(r) * n_ + c];
    ++emitted_;
    if (!visit_(LoopTable::from_rows(rows))) stop_ = true;
  }

  int n_;
  std::function<bool(const LoopTable&)> visit_;
  std::vector<int> cells_;
  std::vector<bool> row_used_, col_used_;
  uint64_t emitted_ = 0;
  bool stop_ = false;
};

inline std::vector<int> canonical_key(const LoopTable& q) {
  // minimum flattened table over all e-fixing relabelings
  const int n = q.order();
  std::vector<int> tail(static_cast<size_t>(n > 0 ? n - 1 : 0));
  for (int i = 0; i + 1 < n; ++i) tail[static_cast<size_t>(i)] = i + 1;
  std::vector<int> best, cur(static_cast<size_t>(n) * n);
  do {
    std::vector<int> pi(static_cast<size_t>(n));
    pi[0] = 0;
    for (int i = 1; i < n; ++i) pi[static_cast<size_t>(i)] = tail[static_cast<size_t>(i - 1)];
    std::vector<int> inv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(pi[static_cast<size_t>(i)])] = i;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        cur[static_cast<size_t>(x) * n + y] =
            pi[static_cast<size_t>(q.mul(inv[static_cast<size_t>(x)], inv[static_cast<size_t>(y)]))];
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(tail.begin(), tail.end()));
  return best;
}

}  // namespace detail

/// Emits loops of the given order (<= 6) in deterministic order, up to
/// `cap` tables (0 = no cap); `visit` returns false to stop early.
/// Returns the number of tables emitted. With `dedup_isomorphic`, only the
/// first representative of each isomorphism class is emitted.
inline uint64_t enumerate_loops(int order, uint64_t cap,
                                const std::function<bool(const LoopTable&)>& visit,
                                bool dedup_isomorphic = false) {
  if (order < 1 || order > 6) throw error("enumerate_loops: order must be 1..6");
  uint64_t emitted = 0;
  std::set<std::vector<int>> seen;
  auto inner = [&](const LoopTable& q) {
    if (dedup_isomorphic && !seen.insert(detail::canonical_key(q)).second) return true;
    ++emitted;
    if (!visit(q)) return false;
    return cap == 0 || emitted < cap;
  };
  detail::LoopEnumerator e(order, inner);
  e.run();
  return emitted;
}

/// Exhaustive search over e-fixing bijections; small orders only.
inline std::optional<Perm> find_isomorphism(const LoopTable& a, const LoopTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  if (n > 8) throw error("find_isomorphism: order > 8");
  if (n == 1) return Perm::identity(1);
  std::vector<int> tail(static_cast<size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) tail[static_cast<size_t>(i)] = i + 1;
  do {
    std::vector<int> img(static_cast<size_t>(n));
    img[0] = 0;
    for (int i = 1; i < n; ++i) img[static_cast<size_t>(i)] = tail[static_cast<size_t>(i - 1)];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = img[static_cast<size_t>(a.mul(x, y))] ==
             b.mul(img[static_cast<size_t>(x)], img[static_cast<size_t>(y)]);
    if (ok) return Perm(img);
  } while (std::next_permutation(tail.begin(), tail.end()));
  return std::nullopt;
}

inline bool loops_isomorphic(const LoopTable& a, const LoopTable& b) {
  return find_isomorphism(a, b).has_value();
}

// Seeded corpus helpers.
inline SelfMap random_self_map(int n, uint64_t seed) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    img[static_cast<size_t>(x)] = bounded(stream_draw(seed, static_cast<uint64_t>(x)), n);
  return SelfMap(std::move(img));
}

inline Perm random_perm(int n, uint64_t seed) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) img[static_cast<size_t>(x)] = x;
  for (int i = n - 1; i > 0; --i) {
    int j = bounded(stream_draw(seed, static_cast<uint64_t>(i)), i + 1);
    std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)]);
  }
  return Perm(std::move(img));
}

/// The loop squaring map x -> x.x.
template <Magma M>
SelfMap squaring_map(const M& m) {
  std::vector<int> img(static_cast<size_t>(m.order()));
  for (int x = 0; x < m.order(); ++x) img[static_cast<size_t>(x)] = m.mul(x, x);
  return SelfMap(std::move(img));
}

}  // namespace loopkit
