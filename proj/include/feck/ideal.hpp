// Ideal enumeration for finite rings: principal ideals by worklist
// closure, full lattices as join-closures of principals, maximal and
// prime ideals, and the Jacobson radical by quasi-regularity.
#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "feck/ring.hpp"

namespace feck {

inline constexpr std::size_t kDefaultLatticeCap = 100000;

struct IdealSet {
  const FiniteRing* ring = nullptr;
  Sidedness sided = Sidedness::TwoSided;
  Bitset members;

  bool contains(int x) const { return members.test(std::size_t(x)); }
  std::size_t size() const { return members.count(); }
};

// Deterministic order: cardinality, then first differing member.
inline bool member_set_less(const Bitset& a, const Bitset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  auto pa = a.find_first(), pb = b.find_first();
  while (pa == pb && pa != Bitset::npos) {
    pa = a.find_next(pa);
    pb = b.find_next(pb);
  }
  return pa < pb;
}

inline bool is_ideal_members(const FiniteRing& R, const Bitset& m, Sidedness s) {
  if (int(m.size()) != R.order || !m.test(std::size_t(R.zero))) return false;
  for (auto i = m.find_first(); i != Bitset::npos; i = m.find_next(i)) {
    const int x = int(i);
    if (!m.test(std::size_t(R.neg(x)))) return false;
    for (auto j = m.find_first(); j != Bitset::npos; j = m.find_next(j))
      if (!m.test(std::size_t(R.add(x, int(j))))) return false;
    for (int r = 0; r < R.order; ++r) {
      if (s != Sidedness::Right && !m.test(std::size_t(R.mul(r, x)))) return false;
      if (s != Sidedness::Left && !m.test(std::size_t(R.mul(x, r)))) return false;
    }
  }
  return true;
}

inline void validate_ideal(const IdealSet& I) {
  const FiniteRing& R = *I.ring;
  if (int(I.members.size()) != R.order)
    throw RingError("ideal membership set has wrong size for " + R.name());
  if (!I.contains(R.zero)) throw RingError("ideal of " + R.name() + " does not contain 0");
  for (auto i = I.members.find_first(); i != Bitset::npos; i = I.members.find_next(i)) {
    const int x = int(i);
    if (!I.contains(R.neg(x)))
      throw RingError("ideal of " + R.name() + " not closed under negation at " + std::to_string(x));
    for (auto j = I.members.find_first(); j != Bitset::npos; j = I.members.find_next(j))
      if (!I.contains(R.add(x, int(j))))
        throw RingError("ideal of " + R.name() + " not closed under addition at " +
                        detail::pair_str(x, int(j)));
    for (int r = 0; r < R.order; ++r) {
      if (I.sided != Sidedness::Right && !I.contains(R.mul(r, x)))
        throw RingError("ideal of " + R.name() + " not closed under left multiplication at " +
                        detail::pair_str(r, x));
      if (I.sided != Sidedness::Left && !I.contains(R.mul(x, r)))
        throw RingError("ideal of " + R.name() + " not closed under right multiplication at " +
                        detail::pair_str(x, r));
    }
  }
}

inline IdealSet principal(const FiniteRing& R, int a, Sidedness s) {
  return IdealSet{&R, s, principal_members(R, a, s)};
}

inline IdealSet zero_ideal(const FiniteRing& R, Sidedness s = Sidedness::TwoSided) {
  Bitset m(R.order);
  m.set(std::size_t(R.zero));
  return IdealSet{&R, s, m};
}

inline void require_compatible(const IdealSet& I, const IdealSet& J) {
  if (I.ring != J.ring)
    throw RingError("ideals of different rings mixed (" + I.ring->name() + " vs " + J.ring->name() + ")");
  if (I.sided != J.sided)
    throw RingError(std::string("ideal sidedness mismatch (") + to_string(I.sided) + " vs " +
                    to_string(J.sided) + ")");
}

inline IdealSet ideal_sum(const IdealSet& I, const IdealSet& J) {
  require_compatible(I, J);
  return IdealSet{I.ring, I.sided, close_under(*I.ring, I.members | J.members, I.sided)};
}

inline IdealSet ideal_product(const IdealSet& I, const IdealSet& J) {
  require_compatible(I, J);
  if (I.sided != Sidedness::TwoSided)
    throw RingError("ideal product is defined for two-sided ideals only");
  const FiniteRing& R = *I.ring;
  Bitset seed(R.order);
  for (auto i = I.members.find_first(); i != Bitset::npos; i = I.members.find_next(i))
    for (auto j = J.members.find_first(); j != Bitset::npos; j = J.members.find_next(j))
      seed.set(std::size_t(R.mul(int(i), int(j))));
  return IdealSet{&R, Sidedness::TwoSided, close_under(R, seed, Sidedness::TwoSided)};
}

struct IdealLattice {
  const FiniteRing* ring = nullptr;
  Sidedness sided = Sidedness::TwoSided;
  std::vector<Bitset> ideals;  // deterministic (cardinality, lexicographic) order

  bool includes(std::size_t i, std::size_t j) const {  // ideals[i] ⊆ ideals[j]
    return ideals[i].is_subset_of(ideals[j]);
  }
};

// Every ideal is a sum of principal ideals, so the lattice is the
// join-closure of the principal ones.
inline IdealLattice all_ideals(const FiniteRing& R, Sidedness s,
                               std::size_t cap = kDefaultLatticeCap) {
  std::vector<Bitset> list;
  std::set<Bitset> seen;
  auto push = [&](const Bitset& m) {
    if (seen.insert(m).second) {
      list.push_back(m);
      if (list.size() > cap)
        throw RingError("ideal lattice of " + R.name() + " exceeds cap " + std::to_string(cap));
    }
  };
  for (int a = 0; a < R.order; ++a) push(principal_members(R, a, s));
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Bitset u = list[i] | list[j];
      if (u == list[i] || u == list[j]) continue;
      push(close_under(R, u, s));
    }
  std::sort(list.begin(), list.end(), member_set_less);
  return IdealLattice{&R, s, std::move(list)};
}

struct MaximalIdealList {
  std::vector<IdealSet> ideals;  // deterministic order
  bool trivial_ring = false;     // warning flag: no proper ideals exist
};

inline MaximalIdealList maximal_from_lattice(const FiniteRing& R, const IdealLattice& lat) {
  MaximalIdealList out;
  if (R.order == 1) {
    out.trivial_ring = true;
    return out;
  }
  const std::size_t full = std::size_t(R.order);
  std::vector<const Bitset*> proper;
  for (const auto& m : lat.ideals)
    if (m.count() < full) proper.push_back(&m);
  for (const Bitset* m : proper) {
    bool maximal = true;
    for (const Bitset* other : proper)
      if (other != m && m->is_subset_of(*other) && *m != *other) {
        maximal = false;
        break;
      }
    if (maximal) out.ideals.push_back(IdealSet{&R, lat.sided, *m});
  }
  return out;
}

inline MaximalIdealList maximal_one_sided(const FiniteRing& R, Sidedness s,
                                          std::size_t cap = kDefaultLatticeCap) {
  return maximal_from_lattice(R, all_ideals(R, s, cap));
}

inline MaximalIdealList maximal_ideals(const FiniteRing& R, std::size_t cap = kDefaultLatticeCap) {
  return maximal_one_sided(R, Sidedness::TwoSided, cap);
}

inline MaximalIdealList maximal_right_ideals(const FiniteRing& R,
                                             std::size_t cap = kDefaultLatticeCap) {
  return maximal_one_sided(R, Sidedness::Right, cap);
}

// J(R) = {x : 1 - r x is invertible for every r}. The left test suffices
// in a finite ring; invertibility itself is verified two-sidedly.
inline IdealSet jacobson_radical(const FiniteRing& R) {
  Bitset m(R.order);
  for (int x = 0; x < R.order; ++x) {
    bool ok = true;
    for (int r = 0; r < R.order && ok; ++r)
      if (!R.is_unit(R.sub(R.one, R.mul(r, x)))) ok = false;
    if (ok) m.set(std::size_t(x));
  }
  IdealSet J{&R, Sidedness::TwoSided, std::move(m)};
  if (!is_ideal_members(R, J.members, Sidedness::TwoSided))
    throw InternalError("quasi-regular set of " + R.name() + " is not a two-sided ideal");
  return J;
}

// Element-wise primeness: for all a, b outside P some a r b stays outside.
inline bool is_prime(const FiniteRing& R, const IdealSet& P) {
  if (P.sided != Sidedness::TwoSided) throw RingError("primeness is defined for two-sided ideals");
  if (P.size() == std::size_t(R.order)) throw RingError("the full ring is not a prime ideal");
  for (int a = 0; a < R.order; ++a) {
    if (P.contains(a)) continue;
    for (int b = 0; b < R.order; ++b) {
      if (P.contains(b)) continue;
      bool found = false;
      for (int r = 0; r < R.order && !found; ++r)
        if (!P.contains(R.mul(R.mul(a, r), b))) found = true;
      if (!found) return false;
    }
  }
  return true;
}

inline std::vector<IdealSet> prime_ideals(const FiniteRing& R,
                                          std::size_t cap = kDefaultLatticeCap) {
  std::vector<IdealSet> out;
  for (const auto& m : all_ideals(R, Sidedness::TwoSided, cap).ideals) {
    if (m.count() == std::size_t(R.order)) continue;
    IdealSet P{&R, Sidedness::TwoSided, m};
    if (is_prime(R, P)) out.push_back(std::move(P));
  }
  return out;
}

inline std::vector<IdealSet> j_spec_points(const FiniteRing& R,
                                           std::size_t cap = kDefaultLatticeCap) {
  const IdealSet J = jacobson_radical(R);
  std::vector<IdealSet> out;
  for (auto& P : prime_ideals(R, cap))
    if (J.members.is_subset_of(P.members)) out.push_back(std::move(P));
  return out;
}

inline std::pair<Ring, std::vector<int>> quotient(const Ring& R, const IdealSet& I) {
  if (I.ring != R.get()) throw RingError("quotient: ideal belongs to a different ring");
  if (I.sided != Sidedness::TwoSided) throw RingError("quotient requires a two-sided ideal");
  return quotient(R, I.members);
}

// Sorted element-literal list, e.g. "{0,6}".
inline std::string ideal_label(const IdealSet& I) {
  std::string out = "{";
  bool first = true;
  for (auto i = I.members.find_first(); i != Bitset::npos; i = I.members.find_next(i)) {
    if (!first) out += ",";
    out += element_literal(*I.ring, int(i));
    first = false;
  }
  return out + "}";
}

}  // namespace feck
