#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "loopkit/identities.hpp"
#include "loopkit/table.hpp"

namespace loopkit {

/// Ordered triple (A, B, C) tested against the autotopism law
/// xA . yB = (x.y)C. Triples compose componentwise.
struct Triple {
  Perm a, b, c;

  Triple then(const Triple& o) const {
    return Triple{a.then(o.a), b.then(o.b), c.then(o.c)};
  }
  Triple inverse() const { return Triple{a.inverse(), b.inverse(), c.inverse()}; }

  friend bool operator==(const Triple& x, const Triple& y) = default;
};

template <Magma M>
bool is_autotopism(const M& m, const Triple& t) {
  const int n = m.order();
  if (t.a.size() != n || t.b.size() != n || t.c.size() != n)
    throw error("is_autotopism: order mismatch");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m.mul(t.a(x), t.b(y)) != t.c(m.mul(x, y))) return false;
  return true;
}

/// First pair breaking the autotopism law, if any.
template <Magma M>
std::optional<std::pair<int, int>> autotopism_witness(const M& m, const Triple& t) {
  for (int x = 0; x < m.order(); ++x)
    for (int y = 0; y < m.order(); ++y)
      if (m.mul(t.a(x), t.b(y)) != t.c(m.mul(x, y))) return std::make_pair(x, y);
  return std::nullopt;
}

template <Magma M>
bool is_automorphism(const M& m, const Perm& p) {
  if (p(m.identity()) != m.identity()) return false;
  return is_autotopism(m, Triple{p, p, p});
}

enum class NucleusKind { left, middle, right };

inline const char* to_string(NucleusKind k) {
  switch (k) {
    case NucleusKind::left: return "left";
    case NucleusKind::middle: return "middle";
    case NucleusKind::right: return "right";
  }
  return "?";
}

struct NucleusSet {
  NucleusKind kind;
  std::vector<int> members;  // sorted ascending
  bool subgroup = false;     // closure under the loop product, verified

  bool contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  int size() const { return static_cast<int>(members.size()); }
};

inline bool in_nucleus(const LoopTable& q, NucleusKind kind, int a) {
  const int n = q.order();
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y) {
      bool ok = true;
      switch (kind) {
        case NucleusKind::right: ok = q.mul(q.mul(z, y), a) == q.mul(z, q.mul(y, a)); break;
        case NucleusKind::middle: ok = q.mul(q.mul(z, a), y) == q.mul(z, q.mul(a, y)); break;
        case NucleusKind::left: ok = q.mul(q.mul(a, y), z) == q.mul(a, q.mul(y, z)); break;
      }
      if (!ok) return false;
    }
  return true;
}

/// Direct n^3 sweep; also verifies the subgroup property of the result.
inline NucleusSet nucleus(const LoopTable& q, NucleusKind kind) {
  NucleusSet s;
  s.kind = kind;
  for (int a = 0; a < q.order(); ++a)
    if (in_nucleus(q, kind, a)) s.members.push_back(a);
  // subgroup: identity, closure, inverses
  s.subgroup = s.contains(0);
  for (int a : s.members) {
    for (int b : s.members)
      if (!s.contains(q.mul(a, b))) s.subgroup = false;
    if (!s.contains(q.left_div(a, 0))) s.subgroup = false;
  }
  return s;
}

/// Subgroup of AUM(Q): members sorted with the identity at index 0.
struct AutGroup {
  std::vector<Perm> members;
  std::vector<Perm> generators;  // optional, may be empty

  int order() const { return static_cast<int>(members.size()); }

  int index_of(const Perm& p) const {
    auto it = index_.find(p.images());
    if (it == index_.end()) throw error("AutGroup: permutation is not a member");
    return it->second;
  }
  bool contains(const Perm& p) const { return index_.count(p.images()) != 0; }

  int compose_idx(int i, int j) const {
    return index_of(members[static_cast<size_t>(i)].then(members[static_cast<size_t>(j)]));
  }
  int inverse_idx(int i) const {
    return index_of(members[static_cast<size_t>(i)].inverse());
  }

  /// Sorts (identity first), deduplicates, and verifies: identity present,
  /// every member an automorphism of q, closure and inverses.
  static AutGroup from_members(std::vector<Perm> ms, const LoopTable& q) {
    const int n = q.order();
    AutGroup g;
    std::set<Perm> uniq(ms.begin(), ms.end());
    uniq.insert(Perm::identity(n));
    g.members.assign(uniq.begin(), uniq.end());  // lex order puts identity first
    if (!g.members.empty() && !g.members.front().is_identity())
      throw error("AutGroup: identity does not sort first");  // unreachable: id is lex-min among e-fixing perms
    for (size_t i = 0; i < g.members.size(); ++i)
      g.index_.emplace(g.members[i].images(), static_cast<int>(i));
    for (const Perm& p : g.members) {
      if (p.size() != n) throw error("AutGroup: order mismatch");
      if (!is_automorphism(q, p))
        throw error("AutGroup: member is not an automorphism");
      if (!g.contains(p.inverse())) throw error("AutGroup: not closed under inversion");
      for (const Perm& r : g.members)
        if (!g.contains(p.then(r))) throw error("AutGroup: not closed under composition");
    }
    return g;
  }

  static AutGroup trivial(const LoopTable& q) {
    return from_members({Perm::identity(q.order())}, q);
  }

private:
  std::map<std::vector<int>, int> index_;
};

namespace detail {

/// Conjugation-invariant tag used to prune the automorphism search:
/// the cycle type of R_x (theta maps R_x to a conjugate of R_{x theta}).
inline std::vector<int> r_class_tag(const LoopTable& q, int x) {
  return q.right_translation(x).cycle_type();
}

class AutSearch {
public:
  explicit AutSearch(const LoopTable& q) : q_(q), n_(q.order()) {
    std::map<std::vector<int>, int> tags;
    class_.resize(static_cast<size_t>(n_));
    for (int x = 0; x < n_; ++x)
      class_[static_cast<size_t>(x)] = tags.emplace(r_class_tag(q, x), static_cast<int>(tags.size())).first->second;
  }

  /// All automorphisms with img[first_var] = v0 (first_var is 1 for n > 1).
  std::vector<Perm> collect_with(int v0) {
    img_.assign(static_cast<size_t>(n_), -1);
    used_.assign(static_cast<size_t>(n_), false);
    trail_.clear();
    out_.clear();
    if (!assign(0, 0)) return {};
    if (n_ > 1) {
      size_t mark = trail_.size();
      if (assign(1, v0)) dfs();
      undo(mark);
    } else {
      out_.push_back(Perm::identity(1));
    }
    return std::move(out_);
  }

  const std::vector<int>& classes() const { return class_; }

private:
  bool assign(int a, int b) {
    // closure propagation: products of assigned elements are forced
    std::vector<std::pair<int, int>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, v] = queue.back();
      queue.pop_back();
      int cur = img_[static_cast<size_t>(x)];
      if (cur != -1) {
        if (cur != v) return false;
        continue;
      }
      if (used_[static_cast<size_t>(v)]) return false;
      if (class_[static_cast<size_t>(x)] != class_[static_cast<size_t>(v)]) return false;
      img_[static_cast<size_t>(x)] = v;
      used_[static_cast<size_t>(v)] = true;
      trail_.push_back(x);
      for (int y = 0; y < n_; ++y) {
        if (img_[static_cast<size_t>(y)] == -1) continue;
        int w = img_[static_cast<size_t>(y)];
        queue.emplace_back(q_.mul(x, y), q_.mul(v, w));
        queue.emplace_back(q_.mul(y, x), q_.mul(w, v));
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      int x = trail_.back();
      trail_.pop_back();
      used_[static_cast<size_t>(img_[static_cast<size_t>(x)])] = false;
      img_[static_cast<size_t>(x)] = -1;
    }
  }

  void dfs() {
    int x = -1;
    for (int i = 0; i < n_; ++i)
      if (img_[static_cast<size_t>(i)] == -1) {
        x = i;
        break;
      }
    if (x == -1) {
      Perm p{img_};
      if (is_automorphism(q_, p)) out_.push_back(std::move(p));  // recheck, search is pruned
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[static_cast<size_t>(v)]) continue;
      size_t mark = trail_.size();
      if (assign(x, v)) dfs();
      undo(mark);
    }
  }

  const LoopTable& q_;
  int n_;
  std::vector<int> class_;
  std::vector<int> img_;
  std::vector<bool> used_;
  std::vector<int> trail_;
  std::vector<Perm> out_;
};

}  // namespace detail

/// Exhaustive scan over all e-fixing permutations; correctness guard for
/// the pruned search, only sensible for order <= 9.
inline std::vector<Perm> automorphisms_exhaustive(const LoopTable& q) {
  const int n = q.order();
  if (n > 9) throw error("automorphisms_exhaustive: order > 9");
  std::vector<int> tail(static_cast<size_t>(n > 0 ? n - 1 : 0));
  for (int i = 0; i + 1 < n; ++i) tail[static_cast<size_t>(i)] = i + 1;
  std::vector<Perm> out;
  if (n == 1) {
    out.push_back(Perm::identity(1));
    return out;
  }
  do {
    std::vector<int> img(static_cast<size_t>(n));
    img[0] = 0;
    for (int i = 1; i < n; ++i) img[static_cast<size_t>(i)] = tail[static_cast<size_t>(i - 1)];
    Perm p{img};
    if (is_automorphism(q, p)) out.push_back(std::move(p));
  } while (std::next_permutation(tail.begin(), tail.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Backtracking over images with partial-product closure and an R_x
/// cycle-type pruning tag. The top split over the image of the first
/// non-identity element runs in parallel; output is sorted.
inline AutGroup automorphism_group(const LoopTable& q, int threads = 0) {
  const int n = q.order();
  if (n == 1) return AutGroup::from_members({Perm::identity(1)}, q);
  detail::AutSearch probe(q);
  std::vector<int> candidates;
  for (int v = 1; v < n; ++v)
    if (probe.classes()[static_cast<size_t>(v)] == probe.classes()[1]) candidates.push_back(v);

  std::vector<std::vector<Perm>> buckets(candidates.size());
  threads = resolve_threads(threads);
  std::atomic<size_t> next{0};
  auto work = [&] {
    detail::AutSearch search(q);
    for (size_t i = next.fetch_add(1); i < candidates.size(); i = next.fetch_add(1))
      buckets[i] = search.collect_with(candidates[i]);
  };
  if (threads <= 1 || candidates.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(threads, static_cast<int>(candidates.size())); ++t)
      pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::vector<Perm> all{Perm::identity(n)};
  for (auto& b : buckets)
    for (auto& p : b)
      if (!p.is_identity()) all.push_back(std::move(p));
  return AutGroup::from_members(std::move(all), q);
}

enum class RegularKind { rho, mu };

/// P(G,.) = rho-regular bijections, or Phi(G,.) = mu-regular bijections
/// with their adjoints (Psi). Members are R_n for n in the matching
/// nucleus, sorted by n; for mu, adjoints[i] = L_{nuclear[i]}.
struct RegularGroup {
  RegularKind kind;
  std::vector<int> nuclear;    // sorted nucleus members
  std::vector<Perm> members;   // members[i] = R_{nuclear[i]}
  std::vector<Perm> adjoints;  // mu only: adjoints[i] = L_{nuclear[i]}

  int order() const { return static_cast<int>(members.size()); }

  bool contains(const Perm& p) const {
    return std::find(members.begin(), members.end(), p) != members.end();
  }
  bool contains_adjoint(const Perm& p) const {
    return std::find(adjoints.begin(), adjoints.end(), p) != adjoints.end();
  }
  /// Adjoint of a member (mu only).
  const Perm& adjoint_of(const Perm& member) const {
    auto it = std::find(members.begin(), members.end(), member);
    if (it == members.end()) throw error("RegularGroup: not a member");
    return adjoints[static_cast<size_t>(it - members.begin())];
  }
};

/// Definitional scan over all order! bijections U with (I, U, U) in AUT.
inline std::vector<Perm> rho_regular_bruteforce(const LoopTable& q) {
  const int n = q.order();
  if (n > 5) throw error("rho_regular_bruteforce: order > 5");
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
  std::vector<Perm> out;
  Perm id = Perm::identity(n);
  do {
    Perm u{img};
    if (is_autotopism(q, Triple{id, u, u})) out.push_back(std::move(u));
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Definitional scan for mu-regular bijections: U with some bijection U'
/// such that (U, U'^-1, I) in AUT. In a loop the second slot is forced
/// pointwise (x = e gives V = L_{eU}^-1), so the adjoint is unique.
inline std::vector<std::pair<Perm, Perm>> mu_regular_bruteforce(const LoopTable& q) {
  const int n = q.order();
  if (n > 5) throw error("mu_regular_bruteforce: order > 5");
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
  std::vector<std::pair<Perm, Perm>> out;
  Perm id = Perm::identity(n);
  do {
    Perm u{img};
    Perm v = q.left_translation(u(0)).inverse();
    if (is_autotopism(q, Triple{u, v, id})) out.emplace_back(u, v.inverse());
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// P(G,.) as the closed form {R_n : n in N_rho}. (I,U,U) in AUT forces
/// U = R_{eU} with eU right-nuclear, so nothing else can appear; for
/// order <= 5 that is re-verified against the definitional scan.
inline RegularGroup rho_regular_group(const LoopTable& q) {
  RegularGroup g;
  g.kind = RegularKind::rho;
  g.nuclear = nucleus(q, NucleusKind::right).members;
  for (int n1 : g.nuclear) g.members.push_back(q.right_translation(n1));
  if (q.order() <= 5) {
    std::vector<Perm> sorted = g.members;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != rho_regular_bruteforce(q))
      throw error("rho-regular closed form disagrees with definitional scan");
  }
  return g;
}

/// Phi(G,.) = {R_n : n in N_mu} with adjoint R_n -> L_n; definitional
/// cross-check for order <= 5 as above.
inline RegularGroup mu_regular_group(const LoopTable& q) {
  RegularGroup g;
  g.kind = RegularKind::mu;
  g.nuclear = nucleus(q, NucleusKind::middle).members;
  for (int n1 : g.nuclear) {
    g.members.push_back(q.right_translation(n1));
    g.adjoints.push_back(q.left_translation(n1));
  }
  if (q.order() <= 5) {
    std::vector<std::pair<Perm, Perm>> pairs;
    for (size_t i = 0; i < g.members.size(); ++i) pairs.emplace_back(g.members[i], g.adjoints[i]);
    std::sort(pairs.begin(), pairs.end());
    if (pairs != mu_regular_bruteforce(q))
      throw error("mu-regular closed form disagrees with definitional scan");
  }
  return g;
}

struct IsoCheck {
  bool bijective = false;
  bool homomorphism = false;
  bool ok() const { return bijective && homomorphism; }
};

/// Belousov's isomorphisms. psi: P -> N_rho and varpi: Phi -> N_mu send
/// U to eU and are homomorphisms for the plain composite UV = "U then V".
/// The adjoint side multiplies in the order induced by the autotopism
/// product, which is the reversed composite X * Y = "Y then X"; phi and
/// beta are isomorphisms with respect to that multiplication.
struct BelousovReport {
  IsoCheck psi, phi, varpi, beta;
  bool composites = false;  // beta(phi(U)) == varpi(U) on Phi
  bool all_ok() const {
    return psi.ok() && phi.ok() && varpi.ok() && beta.ok() && composites;
  }
};

inline BelousovReport belousov_check(const LoopTable& q) {
  BelousovReport rep;
  RegularGroup P = rho_regular_group(q);
  RegularGroup Phi = mu_regular_group(q);
  const int e = q.identity();

  auto image_is = [&](const std::vector<Perm>& dom, const std::vector<int>& target) {
    std::set<int> img;
    for (const Perm& u : dom) img.insert(u(e));
    return img.size() == dom.size() &&
           std::vector<int>(img.begin(), img.end()) == target;
  };

  rep.psi.bijective = image_is(P.members, P.nuclear);
  rep.psi.homomorphism = true;
  for (const Perm& u : P.members)
    for (const Perm& v : P.members)
      if (u.then(v)(e) != q.mul(u(e), v(e))) rep.psi.homomorphism = false;

  rep.varpi.bijective = image_is(Phi.members, Phi.nuclear);
  rep.varpi.homomorphism = true;
  for (const Perm& u : Phi.members)
    for (const Perm& v : Phi.members)
      if (u.then(v)(e) != q.mul(u(e), v(e))) rep.varpi.homomorphism = false;

  // phi: Phi -> Psi, U -> U'; bijective onto the adjoint set, and
  // phi(U then V) = phi(V) then phi(U) (adjoint multiplication).
  std::map<std::vector<int>, size_t> phi_index;
  for (size_t i = 0; i < Phi.members.size(); ++i)
    phi_index.emplace(Phi.members[i].images(), i);
  {
    std::set<Perm> adj(Phi.adjoints.begin(), Phi.adjoints.end());
    rep.phi.bijective = adj.size() == Phi.adjoints.size();
  }
  rep.phi.homomorphism = true;
  for (size_t i = 0; i < Phi.members.size(); ++i)
    for (size_t j = 0; j < Phi.members.size(); ++j) {
      auto it = phi_index.find(Phi.members[i].then(Phi.members[j]).images());
      if (it == phi_index.end()) {
        rep.phi.homomorphism = false;  // Phi not closed: should not happen
        continue;
      }
      if (Phi.adjoints[it->second] != Phi.adjoints[j].then(Phi.adjoints[i]))
        rep.phi.homomorphism = false;
    }

  // beta: Psi -> N_mu, X -> eX, homomorphism for X * Y = "Y then X".
  rep.beta.bijective = image_is(Phi.adjoints, Phi.nuclear);
  rep.beta.homomorphism = true;
  for (const Perm& x : Phi.adjoints)
    for (const Perm& y : Phi.adjoints)
      if (y.then(x)(e) != q.mul(x(e), y(e))) rep.beta.homomorphism = false;

  rep.composites = true;
  for (size_t i = 0; i < Phi.members.size(); ++i)
    if (Phi.adjoints[i](e) != Phi.members[i](e)) rep.composites = false;

  return rep;
}

struct ConjugationReport {
  bool p_closed = false, phi_closed = false, psi_closed = false;
  bool all_ok() const { return p_closed && phi_closed && psi_closed; }
};

/// Checks delta P delta^-1 = P (and Phi, Psi) as set equalities.
inline ConjugationReport conjugation_closure(const LoopTable& q, const Perm& delta) {
  if (!is_automorphism(q, delta))
    throw error("conjugation_closure: delta is not an automorphism");
  RegularGroup P = rho_regular_group(q);
  RegularGroup Phi = mu_regular_group(q);
  auto conj_set = [&](const std::vector<Perm>& s) {
    std::vector<Perm> out;
    out.reserve(s.size());
    for (const Perm& u : s) out.push_back(conjugate(delta, u));
    std::sort(out.begin(), out.end());
    return out;
  };
  auto sorted = [](std::vector<Perm> s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  ConjugationReport rep;
  rep.p_closed = conj_set(P.members) == sorted(P.members);
  rep.phi_closed = conj_set(Phi.members) == sorted(Phi.members);
  rep.psi_closed = conj_set(Phi.adjoints) == sorted(Phi.adjoints);
  return rep;
}

/// In a RIPL, (U, V, W) in AUT implies (W, JVJ, U) in AUT.
inline Triple rip_autotopism_transport(const LoopTable& q, const Triple& t) {
  if (!check_identity(q, IdentityKind::rip).holds)
    throw error("rip_autotopism_transport: loop is not RIP");
  if (!is_autotopism(q, t))
    throw error("rip_autotopism_transport: triple is not an autotopism");
  const Perm& j = q.j();
  Triple out{t.c, j.then(t.b).then(j), t.a};
  if (!is_autotopism(q, out))
    throw error("rip_autotopism_transport: transported triple failed the law");
  return out;
}

}  // namespace loopkit
