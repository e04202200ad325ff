#pragma once

#include <utility>

#include "loopkit/regularity.hpp"
#include "loopkit/table.hpp"

namespace loopkit {

/// The A-holomorph H = A(Q) x Q with (a,x) o (b,y) = (ab, xb.y), stored as
/// a dense loop table over pair indices. Pair (a,x) lives at index a*n + x,
/// so the identity (I, e) is pair 0 and {I} x Q is the leading block.
struct HolomorphLoop {
  LoopTable base;     // order n
  AutGroup autgroup;  // order m, identity at index 0
  LoopTable table;    // order m*n

  int base_order() const { return base.order(); }
  int group_order() const { return autgroup.order(); }

  int pair_index(int alpha_idx, int x) const { return alpha_idx * base.order() + x; }
  std::pair<int, int> labels(int pair) const {
    return {pair / base.order(), pair % base.order()};
  }
};

/// Builds the dense holomorph table. A is re-validated against q (its
/// members must be automorphisms of q); the result must fit the dense cap.
inline HolomorphLoop build_holomorph(const LoopTable& q, const AutGroup& a) {
  const int n = q.order();
  const int m = a.order();
  if (static_cast<long long>(m) * n > kDenseOrderCap)
    throw error("holomorph: order " + std::to_string(static_cast<long long>(m) * n) +
                " exceeds the dense cap");
  for (const Perm& p : a.members)
    if (!is_automorphism(q, p))
      throw error("holomorph: automorphism group does not act on this loop");

  std::vector<std::vector<int>> comp(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) comp[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.compose_idx(i, j);

  const int mn = m * n;
  std::vector<std::vector<int>> rows(static_cast<size_t>(mn), std::vector<int>(static_cast<size_t>(mn)));
  for (int p = 0; p < mn; ++p) {
    const int ai = p / n, x = p % n;
    for (int r = 0; r < mn; ++r) {
      const int bi = r / n, y = r % n;
      const int xb = a.members[static_cast<size_t>(bi)](x);
      rows[static_cast<size_t>(p)][static_cast<size_t>(r)] =
          comp[static_cast<size_t>(ai)][static_cast<size_t>(bi)] * n + q.mul(xb, y);
    }
  }
  HolomorphLoop h{q, a, LoopTable::from_rows(rows)};
  return h;
}

/// sigma' : (alpha, x) -> (alpha, sigma(x)).
inline SelfMap lift_sigma(const HolomorphLoop& h, const SelfMap& sigma) {
  const int n = h.base_order();
  if (sigma.size() != n) throw error("lift_sigma: order mismatch");
  std::vector<int> img(static_cast<size_t>(h.table.order()));
  for (int p = 0; p < h.table.order(); ++p)
    img[static_cast<size_t>(p)] = (p / n) * n + sigma(p % n);
  return SelfMap(std::move(img));
}

/// (alpha, x)^-1 = (alpha^-1, (x alpha^-1)^-1). Uses the base J when it is
/// two-sided (and then verifies both product laws); otherwise falls back to
/// the right inverse (x alpha^-1)^rho and verifies the right law only.
inline int holomorph_inverse(const HolomorphLoop& h, int pair) {
  auto [ai, x] = h.labels(pair);
  const int inv_ai = h.autgroup.inverse_idx(ai);
  const Perm& alpha_inv = h.autgroup.members[static_cast<size_t>(inv_ai)];
  const int xa = alpha_inv(x);
  const bool two_sided = h.base.has_two_sided_inverses();
  const int w = two_sided ? h.base.j()(xa) : h.base.j_rho()(xa);
  const int result = h.pair_index(inv_ai, w);
  if (h.table.mul(pair, result) != 0)
    throw error("holomorph_inverse: right inverse law failed");
  if (two_sided && h.table.mul(result, pair) != 0)
    throw error("holomorph_inverse: left inverse law failed");
  return result;
}

/// The induced table of the {I} x Q slice equals the base table.
inline bool embeds_base(const HolomorphLoop& h) {
  const int n = h.base_order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (h.table.mul(x, y) != h.base.mul(x, y)) return false;
  return true;
}

struct AgreementReport {
  bool lhs = false;  // property of H
  bool rhs = false;  // property of (Q, A)
  bool agree() const { return lhs == rhs; }
};

/// H is a (right) Bol loop iff Q is a theta-GBL for every theta in A(Q).
inline AgreementReport robinson_bol_via_gbl(const HolomorphLoop& h, int threads = 0) {
  AgreementReport rep;
  rep.lhs = check_identity(h.table, IdentityKind::right_bol, nullptr, CheckMode::full(), threads).holds;
  rep.rhs = true;
  for (const Perm& theta : h.autgroup.members) {
    SelfMap s{theta.images()};
    if (!check_identity(h.base, IdentityKind::gbl_sigma, &s, CheckMode::full(), threads).holds) {
      rep.rhs = false;
      break;
    }
  }
  return rep;
}

/// H is a Bol loop iff Q is a Bol loop and x^-1 . x theta is right-nuclear
/// for every theta in A(Q) and x in Q.
inline AgreementReport robinson_bol_via_nucleus(const HolomorphLoop& h, int threads = 0) {
  AgreementReport rep;
  rep.lhs = check_identity(h.table, IdentityKind::right_bol, nullptr, CheckMode::full(), threads).holds;
  const bool q_bol =
      check_identity(h.base, IdentityKind::right_bol, nullptr, CheckMode::full(), threads).holds;
  rep.rhs = q_bol;
  if (q_bol) {  // Bol implies RIP implies two-sided J
    NucleusSet nr = nucleus(h.base, NucleusKind::right);
    const Perm& j = h.base.j();
    for (const Perm& theta : h.autgroup.members) {
      for (int x = 0; x < h.base_order() && rep.rhs; ++x)
        if (!nr.contains(h.base.mul(j(x), theta(x)))) rep.rhs = false;
      if (!rep.rhs) break;
    }
  }
  return rep;
}

}  // namespace loopkit
