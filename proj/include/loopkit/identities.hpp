#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "loopkit/parallel.hpp"
#include "loopkit/rng.hpp"
#include "loopkit/table.hpp"

namespace loopkit {

enum class IdentityKind {
  right_bol,       // (xy.z)y = x(yz.y)
  left_bol,        // y(z.yx) = (y.zy)x
  moufang,         // (xy).(zx) = (x.yz)x
  rip,             // (yx)x^rho = y
  lip,             // x^lambda(xy) = y
  aip,             // (xy)^-1 = x^-1 y^-1
  gbl_sigma,       // (xy.z)sigma(y) = x(yz.sigma(y))
  left_gbl_sigma,  // sigma(y)(z.yx) = (sigma(y).zy)x
  m_loop_sigma,    // (xy).(z sigma(x)) = (x.yz)sigma(x)
  bruck,           // right Bol, AIP or xy^2.x = (yx)^2, squaring bijective
};

inline bool identity_needs_sigma(IdentityKind k) {
  return k == IdentityKind::gbl_sigma || k == IdentityKind::left_gbl_sigma ||
         k == IdentityKind::m_loop_sigma;
}

inline bool identity_needs_j(IdentityKind k) {
  return k == IdentityKind::aip || k == IdentityKind::bruck;
}

/// Quantifier arity: 3 for the Bol/Moufang family, 2 for the inverse laws.
inline int identity_arity(IdentityKind k) {
  switch (k) {
    case IdentityKind::rip:
    case IdentityKind::lip:
    case IdentityKind::aip:
      return 2;
    default:
      return 3;
  }
}

inline const char* to_string(IdentityKind k) {
  switch (k) {
    case IdentityKind::right_bol: return "right_bol";
    case IdentityKind::left_bol: return "left_bol";
    case IdentityKind::moufang: return "moufang";
    case IdentityKind::rip: return "rip";
    case IdentityKind::lip: return "lip";
    case IdentityKind::aip: return "aip";
    case IdentityKind::gbl_sigma: return "gbl_sigma";
    case IdentityKind::left_gbl_sigma: return "left_gbl_sigma";
    case IdentityKind::m_loop_sigma: return "m_loop_sigma";
    case IdentityKind::bruck: return "bruck";
  }
  return "?";
}

inline IdentityKind identity_kind_from_string(const std::string& s) {
  for (IdentityKind k :
       {IdentityKind::right_bol, IdentityKind::left_bol, IdentityKind::moufang,
        IdentityKind::rip, IdentityKind::lip, IdentityKind::aip,
        IdentityKind::gbl_sigma, IdentityKind::left_gbl_sigma,
        IdentityKind::m_loop_sigma, IdentityKind::bruck})
    if (s == to_string(k)) return k;
  throw error("unknown identity kind: " + s);
}

struct CheckMode {
  bool exhaustive = true;
  uint64_t samples = 0;
  uint64_t seed = 0;

  static CheckMode full() { return CheckMode{}; }
  static CheckMode sampled(uint64_t count, uint64_t seed) {
    if (count == 0) throw error("sampled mode requires a sample budget >= 1");
    return CheckMode{false, count, seed};
  }
};

/// Outcome of one identity sweep. `holds == false` always carries a concrete
/// witness tuple (variables in alphabetical order). In sampled mode
/// `holds == true` only means "no counterexample found".
struct CheckResult {
  bool holds = true;
  std::vector<int> witness;
  CheckMode mode;
  std::string note;

  bool conclusive() const { return mode.exhaustive; }
};

namespace detail {

/// Evaluates the identity at one variable tuple (alphabetical order).
/// `inv` must carry what the kind needs (j for aip, j_rho/j_lambda for
/// rip/lip). The bruck composite is not a single equation and is handled
/// in check_identity directly.
template <Magma M>
bool identity_holds_at(const M& m, IdentityKind k, const SelfMap* sigma,
                       const InverseMaps* inv, const int* t) {
  switch (k) {
    case IdentityKind::right_bol: {
      int x = t[0], y = t[1], z = t[2];
      return m.mul(m.mul(m.mul(x, y), z), y) == m.mul(x, m.mul(m.mul(y, z), y));
    }
    case IdentityKind::left_bol: {
      int x = t[0], y = t[1], z = t[2];
      return m.mul(y, m.mul(z, m.mul(y, x))) == m.mul(m.mul(y, m.mul(z, y)), x);
    }
    case IdentityKind::moufang: {
      int x = t[0], y = t[1], z = t[2];
      return m.mul(m.mul(x, y), m.mul(z, x)) == m.mul(m.mul(x, m.mul(y, z)), x);
    }
    case IdentityKind::rip: {
      int x = t[0], y = t[1];
      return m.mul(m.mul(y, x), inv->j_rho(x)) == y;
    }
    case IdentityKind::lip: {
      int x = t[0], y = t[1];
      return m.mul(inv->j_lambda(x), m.mul(x, y)) == y;
    }
    case IdentityKind::aip: {
      int x = t[0], y = t[1];
      const Perm& j = *inv->j;
      return j(m.mul(x, y)) == m.mul(j(x), j(y));
    }
    case IdentityKind::gbl_sigma: {
      int x = t[0], y = t[1], z = t[2];
      int sy = (*sigma)(y);
      return m.mul(m.mul(m.mul(x, y), z), sy) == m.mul(x, m.mul(m.mul(y, z), sy));
    }
    case IdentityKind::left_gbl_sigma: {
      int x = t[0], y = t[1], z = t[2];
      int sy = (*sigma)(y);
      return m.mul(sy, m.mul(z, m.mul(y, x))) == m.mul(m.mul(sy, m.mul(z, y)), x);
    }
    case IdentityKind::m_loop_sigma: {
      int x = t[0], y = t[1], z = t[2];
      int sx = (*sigma)(x);
      return m.mul(m.mul(x, y), m.mul(z, sx)) == m.mul(m.mul(x, m.mul(y, z)), sx);
    }
    case IdentityKind::bruck:
      throw error("bruck is a composite; use check_identity");
  }
  return true;
}

// xy^2.x = (yx)^2, the Bruck alternative to AIP
template <Magma M>
bool bruck_alt_at(const M& m, const int* t) {
  int x = t[0], y = t[1];
  int yx = m.mul(y, x);
  return m.mul(m.mul(x, m.mul(y, y)), x) == m.mul(yx, yx);
}

template <Magma M, class Eval>
CheckResult sweep(const M& m, int arity, CheckMode mode, int threads, Eval&& at) {
  const int n = m.order();
  CheckResult res;
  res.mode = mode;
  if (mode.exhaustive) {
    auto hit = parallel_first<std::vector<int>>(
        n, threads, [&](int64_t x0) -> std::optional<std::vector<int>> {
          int t[3] = {static_cast<int>(x0), 0, 0};
          if (arity == 2) {
            for (t[1] = 0; t[1] < n; ++t[1])
              if (!at(t)) return std::vector<int>{t[0], t[1]};
          } else {
            for (t[1] = 0; t[1] < n; ++t[1])
              for (t[2] = 0; t[2] < n; ++t[2])
                if (!at(t)) return std::vector<int>{t[0], t[1], t[2]};
          }
          return std::nullopt;
        });
    if (hit) {
      res.holds = false;
      res.witness = std::move(hit->value);
    }
  } else {
    auto hit = parallel_first<std::vector<int>>(
        static_cast<int64_t>(mode.samples), threads,
        [&](int64_t i) -> std::optional<std::vector<int>> {
          int t[3];
          for (int lane = 0; lane < arity; ++lane)
            t[lane] = bounded(stream_draw(mode.seed, static_cast<uint64_t>(i),
                                          static_cast<uint64_t>(lane)),
                              n);
          if (!at(t)) return std::vector<int>(t, t + arity);
          return std::nullopt;
        });
    if (hit) {
      res.holds = false;
      res.witness = std::move(hit->value);
      res.note = "sample " + std::to_string(hit->ordinal);
    }
  }
  return res;
}

}  // namespace detail

/// Decides one identity on a loop. Exhaustive mode quantifies over all
/// tuples and reports the lexicographically first counterexample; sampled
/// mode probes `mode.samples` seeded random tuples.
template <Magma M>
CheckResult check_identity(const M& m, IdentityKind kind,
                           const SelfMap* sigma = nullptr,
                           CheckMode mode = CheckMode::full(), int threads = 0) {
  if (identity_needs_sigma(kind)) {
    if (!sigma) throw error(std::string("identity ") + to_string(kind) + " requires a self-map");
    if (sigma->size() != m.order()) throw error("self-map order mismatch");
  } else if (sigma) {
    throw error(std::string("identity ") + to_string(kind) + " takes no self-map");
  }
  if (!mode.exhaustive && mode.samples == 0)
    throw error("sampled mode requires a sample budget >= 1");

  if (kind == IdentityKind::bruck) {
    // squaring must be a permutation
    const int n = m.order();
    std::vector<int> sq(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) sq[static_cast<size_t>(x)] = m.mul(x, x);
    SelfMap squaring{sq};
    if (!squaring.is_bijective()) {
      std::vector<int> seen(static_cast<size_t>(n), -1);
      CheckResult res;
      res.mode = mode;
      for (int x = 0; x < n; ++x) {
        int s = squaring(x);
        if (seen[static_cast<size_t>(s)] >= 0) {
          res.holds = false;
          res.witness = {seen[static_cast<size_t>(s)], x};
          res.note = "squaring is not a bijection";
          return res;
        }
        seen[static_cast<size_t>(s)] = x;
      }
    }
    InverseMaps inv = inverse_maps(m);
    if (!inv.j) throw error("bruck requires the two-sided inverse map J");
    CheckResult bol = check_identity(m, IdentityKind::right_bol, nullptr, mode, threads);
    if (!bol.holds) {
      bol.note = "right Bol fails";
      return bol;
    }
    CheckResult aip = detail::sweep(m, 2, mode, threads, [&](const int* t) {
      return detail::identity_holds_at(m, IdentityKind::aip, nullptr, &inv, t);
    });
    if (aip.holds) return aip;
    CheckResult alt = detail::sweep(m, 2, mode, threads,
                                    [&](const int* t) { return detail::bruck_alt_at(m, t); });
    if (!alt.holds) alt.note = "both AIP and xy^2.x = (yx)^2 fail";
    return alt;
  }

  std::optional<InverseMaps> inv;
  if (kind == IdentityKind::rip || kind == IdentityKind::lip || kind == IdentityKind::aip) {
    inv = inverse_maps(m);
    if (kind == IdentityKind::aip && !inv->j)
      throw error("aip requires the two-sided inverse map J");
  }
  const InverseMaps* invp = inv ? &*inv : nullptr;
  return detail::sweep(m, identity_arity(kind), mode, threads, [&](const int* t) {
    return detail::identity_holds_at(m, kind, sigma, invp, t);
  });
}

/// The Bol-type autotopism triple at a fixed x:
///   B(x) = (R_x^-1, L_x R_sigma(x), R_sigma(x)).
/// Tests the autotopism law over all n^2 pairs; the loop is a sigma-GBL
/// iff this holds for every x (see gbl_via_autotopism_all).
inline CheckResult gbl_via_autotopism(const LoopTable& q, const SelfMap& sigma, int x,
                                      int threads = 0) {
  if (sigma.size() != q.order()) throw error("self-map order mismatch");
  const Perm a = q.right_translation(x).inverse();
  const Perm b = q.left_translation(x).then(q.right_translation(sigma(x)));
  const Perm c = q.right_translation(sigma(x));
  return detail::sweep(q, 2, CheckMode::full(), threads, [&](const int* t) {
    return q.mul(a(t[0]), b(t[1])) == c(q.mul(t[0], t[1]));
  });
}

/// Conjunction of gbl_via_autotopism over every x; witness is (x, u, v).
inline CheckResult gbl_via_autotopism_all(const LoopTable& q, const SelfMap& sigma,
                                          int threads = 0) {
  CheckResult res;
  for (int x = 0; x < q.order(); ++x) {
    CheckResult one = gbl_via_autotopism(q, sigma, x, threads);
    if (!one.holds) {
      res.holds = false;
      res.witness = {x, one.witness[0], one.witness[1]};
      return res;
    }
  }
  return res;
}

template <Magma M>
CheckResult check_associativity(const M& m, CheckMode mode = CheckMode::full(),
                                int threads = 0) {
  return detail::sweep(m, 3, mode, threads, [&](const int* t) {
    return m.mul(m.mul(t[0], t[1]), t[2]) == m.mul(t[0], m.mul(t[1], t[2]));
  });
}

}  // namespace loopkit
