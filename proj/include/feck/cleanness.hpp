// Element- and ring-level cleanness with extracted witnesses, the
// constructive conversions between the equivalent commutative forms,
// and the full theorem harness. Witness searches scan elements in
// ascending index order and return the first hit; every witness
// re-validates from scratch.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feck/ideal.hpp"
#include "feck/ring.hpp"
#include "feck/spectra.hpp"

namespace feck {

struct CleanWitness {
  int a = 0, e = 0, u = 0;  // a = e + u, e idempotent, u a unit
};

struct FecklyWitness {
  int a = 0, e = 0, u = 0;  // a = e + u, u full, eR(1-e) ⊆ J(R)
};

// Derived data shared by the per-element searches: the radical, the
// full-element table, and which e satisfy eR(1-e) ⊆ J.
struct CleannessContext {
  const FiniteRing* R = nullptr;
  IdealSet jacobson;
  std::vector<char> full_elem;
  std::vector<char> ej_ok;
  std::vector<int> idempotent_list;

  explicit CleannessContext(const FiniteRing& ring) : R(&ring), jacobson(jacobson_radical(ring)) {
    const int n = ring.order;
    full_elem.assign(std::size_t(n), 0);
    for (int u = 0; u < n; ++u) full_elem[std::size_t(u)] = is_full(ring, u) ? 1 : 0;
    ej_ok.assign(std::size_t(n), 1);
    for (int e = 0; e < n; ++e) {
      const int ce = ring.sub(ring.one, e);
      for (int r = 0; r < n; ++r)
        if (!jacobson.contains(ring.mul(ring.mul(e, r), ce))) {
          ej_ok[std::size_t(e)] = 0;
          break;
        }
    }
    idempotent_list = idempotents(ring);
  }
};

inline std::optional<CleanWitness> clean_witness(const CleannessContext& c, int a) {
  const FiniteRing& R = *c.R;
  for (int e : c.idempotent_list) {
    const int u = R.sub(a, e);
    if (R.is_unit(u)) return CleanWitness{a, e, u};
  }
  return std::nullopt;
}

inline std::optional<FecklyWitness> feckly_witness(const CleannessContext& c, int a) {
  const FiniteRing& R = *c.R;
  for (int e = 0; e < R.order; ++e) {
    if (!c.ej_ok[std::size_t(e)]) continue;
    const int u = R.sub(a, e);
    if (c.full_elem[std::size_t(u)]) return FecklyWitness{a, e, u};
  }
  return std::nullopt;
}

inline std::optional<CleanWitness> clean_witness(const FiniteRing& R, int a) {
  return clean_witness(CleannessContext(R), a);
}

inline std::optional<FecklyWitness> feckly_witness(const FiniteRing& R, int a) {
  return feckly_witness(CleannessContext(R), a);
}

// Independent re-validation: recomputes every condition from the raw
// tables without trusting the search path.
inline void validate_clean_witness(const FiniteRing& R, const CleanWitness& w) {
  if (R.mul(w.e, w.e) != w.e)
    throw InternalError("clean witness: e is not idempotent in " + R.name());
  bool invertible = false;
  for (int b = 0; b < R.order; ++b)
    if (R.mul(w.u, b) == R.one && R.mul(b, w.u) == R.one) {
      invertible = true;
      break;
    }
  if (!invertible) throw InternalError("clean witness: u is not a unit in " + R.name());
  if (R.add(w.e, w.u) != w.a) throw InternalError("clean witness: a != e + u in " + R.name());
}

inline void validate_feckly_witness(const FiniteRing& R, const FecklyWitness& w) {
  if (R.add(w.e, w.u) != w.a) throw InternalError("feckly witness: a != e + u in " + R.name());
  if (principal_members(R, w.u, Sidedness::TwoSided).count() != std::size_t(R.order))
    throw InternalError("feckly witness: u is not full in " + R.name());
  const IdealSet J = jacobson_radical(R);
  const int ce = R.sub(R.one, w.e);
  for (int r = 0; r < R.order; ++r)
    if (!J.contains(R.mul(R.mul(w.e, r), ce)))
      throw InternalError("feckly witness: eR(1-e) not inside J(R) at r=" + std::to_string(r) +
                          " in " + R.name());
  if (!J.contains(R.sub(R.mul(w.e, w.e), w.e)))
    throw InternalError("feckly witness: e^2 - e outside J(R) in " + R.name());
}

inline bool is_clean_ring(const CleannessContext& c) {
  for (int a = 0; a < c.R->order; ++a)
    if (!clean_witness(c, a)) return false;
  return true;
}

inline bool is_feckly_clean_ring(const CleannessContext& c) {
  for (int a = 0; a < c.R->order; ++a)
    if (!feckly_witness(c, a)) return false;
  return true;
}

inline bool is_clean_ring(const FiniteRing& R) { return is_clean_ring(CleannessContext(R)); }
inline bool is_feckly_clean_ring(const FiniteRing& R) {
  return is_feckly_clean_ring(CleannessContext(R));
}

// g = e + f - ef. Requires eR(1-e), fR(1-f) ⊆ J; then E(e) ∪ E(f) = E(g)
// on Max(R) and gR(1-g) ⊆ J, both verified.
inline int lemma25_join(const CleannessContext& c, const SpectrumSpace& max_sp, int e, int f) {
  const FiniteRing& R = *c.R;
  for (int x : {e, f})
    if (!c.ej_ok[std::size_t(x)]) {
      const int cx = R.sub(R.one, x);
      for (int r = 0; r < R.order; ++r)
        if (!c.jacobson.contains(R.mul(R.mul(x, r), cx)))
          throw RingError("lemma25_join: precondition fails for e=" + std::to_string(x) +
                          " at r=" + std::to_string(r));
    }
  const int g = R.sub(R.add(e, f), R.mul(e, f));
  if (!c.ej_ok[std::size_t(g)])
    throw InternalError("lemma25_join: gR(1-g) escapes J(R) in " + R.name());
  if ((e_set(max_sp, e) | e_set(max_sp, f)) != e_set(max_sp, g))
    throw InternalError("lemma25_join: E(e) ∪ E(f) != E(g) in " + R.name());
  return g;
}

// Each prime ideal lies in exactly one maximal ideal.
inline bool is_pm(const FiniteRing& R) {
  const auto maxi = maximal_ideals(R).ideals;
  for (const auto& P : prime_ideals(R)) {
    int count = 0;
    for (const auto& M : maxi)
      if (P.members.is_subset_of(M.members)) ++count;
    if (count != 1) return false;
  }
  return true;
}

inline bool is_quasi_duo(const FiniteRing& R, Sidedness side) {
  if (side == Sidedness::TwoSided) throw RingError("quasi-duo is a one-sided condition");
  for (const auto& M : maximal_one_sided(R, side).ideals)
    if (!is_ideal_members(R, M.members, Sidedness::TwoSided)) return false;
  return true;
}

namespace detail {

inline Bitset right_multiples(const FiniteRing& R, int a) {
  Bitset out(std::size_t(R.order));
  for (int r = 0; r < R.order; ++r) out.set(std::size_t(R.mul(a, r)));
  return out;
}

}  // namespace detail

// For each a some idempotent e has e ∈ aR and 1-e ∈ (1-a)R.
inline bool is_exchange(const CleannessContext& c) {
  const FiniteRing& R = *c.R;
  for (int a = 0; a < R.order; ++a) {
    const Bitset aR = detail::right_multiples(R, a);
    const Bitset caR = detail::right_multiples(R, R.sub(R.one, a));
    bool found = false;
    for (int e : c.idempotent_list)
      if (aR.test(std::size_t(e)) && caR.test(std::size_t(R.sub(R.one, e)))) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

inline bool is_exchange(const FiniteRing& R) { return is_exchange(CleannessContext(R)); }

// Least n <= |R| with a^n ∈ a^n R a^n.
inline std::optional<int> pi_regular_index(const FiniteRing& R, int a) {
  int power = a;
  for (int n = 1; n <= R.order; ++n) {
    for (int r = 0; r < R.order; ++r)
      if (R.mul(R.mul(power, r), power) == power) return n;
    power = R.mul(power, a);
  }
  return std::nullopt;
}

inline bool is_pi_regular(const FiniteRing& R) {
  for (int a = 0; a < R.order; ++a)
    if (!pi_regular_index(R, a)) return false;
  return true;
}

// For each x some n with 2 <= n <= |R|+1 has xRx = x^n R x^n as sets.
inline bool is_gsr(const FiniteRing& R) {
  for (int x = 0; x < R.order; ++x) {
    Bitset xrx(std::size_t(R.order));
    for (int r = 0; r < R.order; ++r) xrx.set(std::size_t(R.mul(R.mul(x, r), x)));
    bool found = false;
    int power = R.mul(x, x);
    for (int n = 2; n <= R.order + 1 && !found; ++n) {
      Bitset prp(std::size_t(R.order));
      for (int r = 0; r < R.order; ++r) prp.set(std::size_t(R.mul(R.mul(power, r), power)));
      found = (prp == xrx);
      power = R.mul(power, x);
    }
    if (!found) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructive conversions between the commutative characterizations.
// Stage (2): a = f + u with u a unit and f - f^2 ∈ J.
// Stage (3): a - e ∈ (a - a^2)R with e - e^2 ∈ J.
// Stage (4): e ∈ aR, 1 - e ∈ (1 - a)R with e - e^2 ∈ J.
// Stage (1): a = f + u with u a unit, closing the loop.
// ---------------------------------------------------------------------------

struct Thm51Stage2 {
  int f = 0, u = 0;
};
struct Thm51Stage3 {
  int e = 0, s = 0;  // a - e = (a - a^2) s
};
struct Thm51Stage4 {
  int e = 0, s = 0, x = 0;  // e = a s, 1 - e = (1 - a) x
};
struct Thm51Stage1 {
  int f = 0, u = 0;
};

namespace detail {

inline void require_commutative(const FiniteRing& R, const char* who) {
  if (!R.commutative) throw RingError(std::string(who) + ": " + R.name() + " is not commutative");
}

}  // namespace detail

inline Thm51Stage3 thm51_2_to_3(const CleannessContext& c, int a, const Thm51Stage2& in) {
  const FiniteRing& R = *c.R;
  detail::require_commutative(R, "thm51_2_to_3");
  if (R.add(in.f, in.u) != a) throw RingError("thm51_2_to_3: stage form violated: a != f + u");
  if (!R.is_unit(in.u)) throw RingError("thm51_2_to_3: stage form violated: u is not a unit");
  if (!c.jacobson.contains(R.sub(in.f, R.mul(in.f, in.f))))
    throw RingError("thm51_2_to_3: stage form violated: f - f^2 outside J(R)");

  const int uinv = R.inv(in.u);
  const int j = R.sub(in.f, R.mul(in.f, in.f));
  const int e = R.add(R.sub(R.one, in.f), R.mul(j, uinv));
  if (!c.jacobson.contains(R.sub(e, R.mul(e, e))))
    throw InternalError("thm51_2_to_3: e - e^2 escaped J(R)");
  // a - e = (a - a^2)(-u^{-1}) is an algebraic identity; verify it.
  const int aa2 = R.sub(a, R.mul(a, a));
  if (R.sub(a, e) != R.mul(aa2, R.neg(uinv)))
    throw InternalError("thm51_2_to_3: identity a - e = (a - a^2)(-u^{-1}) failed");
  // the witness s with a - e = (a - a^2)s is read off directly
  return Thm51Stage3{e, R.neg(uinv)};
}

inline Thm51Stage4 thm51_3_to_4(const CleannessContext& c, int a, const Thm51Stage3& in) {
  const FiniteRing& R = *c.R;
  detail::require_commutative(R, "thm51_3_to_4");
  const int aa2 = R.sub(a, R.mul(a, a));
  if (R.mul(aa2, in.s) != R.sub(a, in.e))
    throw RingError("thm51_3_to_4: stage form violated: a - e != (a - a^2)s");
  if (!c.jacobson.contains(R.sub(in.e, R.mul(in.e, in.e))))
    throw RingError("thm51_3_to_4: stage form violated: e - e^2 outside J(R)");

  const int s4 = R.sub(R.one, R.mul(R.sub(R.one, a), in.s));
  const int x4 = R.add(R.one, R.mul(a, in.s));
  if (R.mul(a, s4) != in.e) throw InternalError("thm51_3_to_4: e != a(1 - (1 - a)s)");
  if (R.mul(R.sub(R.one, a), x4) != R.sub(R.one, in.e))
    throw InternalError("thm51_3_to_4: 1 - e != (1 - a)(1 + a s)");
  return Thm51Stage4{in.e, s4, x4};
}

// After s <- s e and x <- x(1-e), the product (a - f)(s - x) equals
// 1 - (e - e^2)(2 + s + x), so it is 1 exactly only when e is
// idempotent; in general it lies in 1 + J(R), which still certifies
// that a - f is a unit.
inline Thm51Stage1 thm51_4_to_1(const CleannessContext& c, int a, const Thm51Stage4& in) {
  const FiniteRing& R = *c.R;
  detail::require_commutative(R, "thm51_4_to_1");
  if (R.mul(a, in.s) != in.e) throw RingError("thm51_4_to_1: stage form violated: e != a s");
  if (R.mul(R.sub(R.one, a), in.x) != R.sub(R.one, in.e))
    throw RingError("thm51_4_to_1: stage form violated: 1 - e != (1 - a)x");
  if (!c.jacobson.contains(R.sub(in.e, R.mul(in.e, in.e))))
    throw RingError("thm51_4_to_1: stage form violated: e - e^2 outside J(R)");

  const int f = R.sub(R.one, in.e);
  const int s = R.mul(in.s, in.e);
  const int x = R.mul(in.x, R.sub(R.one, in.e));
  const int t = R.mul(R.sub(a, f), R.sub(s, x));
  if (!c.jacobson.contains(R.sub(t, R.one)))
    throw InternalError("thm51_4_to_1: (a - f)(s - x) is not 1 modulo J(R)");
  const int u = R.sub(a, f);
  if (!R.is_unit(u)) throw InternalError("thm51_4_to_1: a - f is not a unit");
  if (!c.jacobson.contains(R.sub(f, R.mul(f, f))))
    throw InternalError("thm51_4_to_1: f - f^2 escaped J(R)");
  return Thm51Stage1{f, u};
}

struct Thm51Chain {
  Thm51Stage2 stage2;
  Thm51Stage3 stage3;
  Thm51Stage4 stage4;
  Thm51Stage1 stage1;
};

// Full (2) -> (3) -> (4) -> (1) conversion starting from the first
// feckly witness; ends in a verified unit decomposition.
inline Thm51Chain thm51_chain(const CleannessContext& c, int a) {
  const FiniteRing& R = *c.R;
  detail::require_commutative(R, "thm51_chain");
  auto w = feckly_witness(c, a);
  if (!w) throw InternalError("thm51_chain: no feckly witness for a in " + R.name());
  if (!R.is_unit(w->u))
    throw InternalError("thm51_chain: full element is not a unit in commutative " + R.name());
  Thm51Chain out;
  out.stage2 = Thm51Stage2{w->e, w->u};
  out.stage3 = thm51_2_to_3(c, a, out.stage2);
  out.stage4 = thm51_3_to_4(c, a, out.stage3);
  out.stage1 = thm51_4_to_1(c, a, out.stage4);
  if (R.add(out.stage1.f, out.stage1.u) != a)
    throw InternalError("thm51_chain: final decomposition does not sum to a");
  return out;
}

// From a feckly witness a = e + u of a + b = 1, r = (e-a)^{-1} and
// s = -(e-a)^{-1} put (1 + ar)(1 + bs) inside J(R).
struct Thm54Pair {
  int r = 0, s = 0;
};

inline Thm54Pair thm54_construction(const CleannessContext& c, int a, int b) {
  const FiniteRing& R = *c.R;
  detail::require_commutative(R, "thm54_construction");
  if (R.add(a, b) != R.one) throw RingError("thm54_construction: a + b != 1");
  auto w = feckly_witness(c, a);
  if (!w) throw InternalError("thm54_construction: witness search failed in " + R.name());
  const int d = R.sub(w->e, a);  // = -u, a unit
  if (!R.is_unit(d)) throw InternalError("thm54_construction: e - a is not a unit");
  const int r = R.inv(d);
  const int s = R.neg(r);
  const int t = R.mul(R.add(R.one, R.mul(a, r)), R.add(R.one, R.mul(b, s)));
  if (!c.jacobson.contains(t))
    throw InternalError("thm54_construction: (1 + ar)(1 + bs) escaped J(R)");
  return Thm54Pair{r, s};
}

// e = aue, 1 - e = (1-a)(-u)(1-e), e - e^2 ∈ J, built from the clean
// witness (whose idempotent f makes the displayed identities exact).
struct Cor53Form {
  int e = 0, u = 0;
};

inline Cor53Form cor53_forms(const CleannessContext& c, int a) {
  const FiniteRing& R = *c.R;
  detail::require_commutative(R, "cor53_forms");
  auto w = clean_witness(c, a);
  if (!w) throw InternalError("cor53_forms: no clean witness for a in " + R.name());
  const int e = R.sub(R.one, w->e);
  const int u = R.inv(w->u);
  if (R.mul(R.mul(a, u), e) != e) throw InternalError("cor53_forms: e != aue");
  const int ce = R.sub(R.one, e);
  if (R.mul(R.mul(R.sub(R.one, a), R.neg(u)), ce) != ce)
    throw InternalError("cor53_forms: 1 - e != (1-a)(-u)(1-e)");
  if (!c.jacobson.contains(R.sub(e, R.mul(e, e))))
    throw InternalError("cor53_forms: e - e^2 outside J(R)");
  return Cor53Form{e, u};
}

}  // namespace feck
