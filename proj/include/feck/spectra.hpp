// Max(R) and J-spec(R) as finite topological spaces with explicit
// closed-set families, plus separation predicates. Abstract spaces are
// first-class so the predicates have genuine negative cases; every ring
// spectrum here is discrete.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "feck/ideal.hpp"
#include "feck/ring.hpp"

namespace feck {

struct SpectrumSpace {
  enum class Provenance { Max, JSpec, Abstract };

  Provenance provenance = Provenance::Abstract;
  const FiniteRing* ring = nullptr;              // null for abstract spaces
  std::vector<std::string> points;               // labels, fixed order
  std::vector<Bitset> point_ideals;              // membership sets over ring elements
  std::vector<Bitset> closed_family;             // bitsets over points, deterministic order

  std::size_t point_count() const { return points.size(); }
  Bitset full_set() const {
    Bitset b(points.size());
    b.set();
    return b;
  }
};

namespace detail {

inline std::vector<Bitset> sorted_distinct(std::set<Bitset> fam) {
  std::vector<Bitset> out(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(), member_set_less);
  return out;
}

// The closed family of a finite space must contain ∅ and X and be
// closed under pairwise union and intersection.
template <typename Fail>
inline void check_closed_family(const std::vector<Bitset>& fam, std::size_t npoints, Fail fail) {
  std::set<Bitset> all(fam.begin(), fam.end());
  Bitset empty(npoints), full(npoints);
  full.set();
  if (!all.count(empty)) fail("closed family does not contain the empty set");
  if (!all.count(full)) fail("closed family does not contain the full point set");
  for (const auto& a : fam)
    for (const auto& b : fam) {
      if (!all.count(a | b)) fail("closed family not closed under union");
      if (!all.count(a & b)) fail("closed family not closed under intersection");
    }
}

inline SpectrumSpace spectrum_of(const FiniteRing& R, std::vector<IdealSet> pts,
                                 SpectrumSpace::Provenance prov, bool allow_trivial) {
  if (R.order == 1 && !allow_trivial)
    throw RingError("the trivial ring has an empty spectrum; nothing to build");
  SpectrumSpace sp;
  sp.provenance = prov;
  sp.ring = &R;
  for (auto& P : pts) {
    sp.points.push_back(ideal_label(P));
    sp.point_ideals.push_back(P.members);
  }
  // closed sets are {P : I ⊆ P} as I runs over the two-sided ideal lattice
  std::set<Bitset> fam;
  for (const auto& I : all_ideals(R, Sidedness::TwoSided).ideals) {
    Bitset v(sp.points.size());
    for (std::size_t j = 0; j < sp.point_ideals.size(); ++j)
      if (I.is_subset_of(sp.point_ideals[j])) v.set(j);
    fam.insert(v);
  }
  sp.closed_family = sorted_distinct(std::move(fam));
  check_closed_family(sp.closed_family, sp.points.size(), [&](const std::string& msg) {
    throw InternalError("spectrum of " + R.name() + ": " + msg);
  });
  return sp;
}

}  // namespace detail

inline SpectrumSpace max_spectrum(const FiniteRing& R, bool allow_trivial = false) {
  return detail::spectrum_of(R, maximal_ideals(R).ideals, SpectrumSpace::Provenance::Max,
                             allow_trivial);
}

inline SpectrumSpace j_spectrum(const FiniteRing& R, bool allow_trivial = false) {
  return detail::spectrum_of(R, j_spec_points(R), SpectrumSpace::Provenance::JSpec, allow_trivial);
}

inline SpectrumSpace abstract_space(std::vector<std::string> points,
                                    const std::vector<std::vector<std::string>>& closed) {
  SpectrumSpace sp;
  sp.provenance = SpectrumSpace::Provenance::Abstract;
  sp.points = std::move(points);
  std::set<Bitset> fam;
  for (const auto& c : closed) {
    Bitset b(sp.points.size());
    for (const auto& label : c) {
      auto it = std::find(sp.points.begin(), sp.points.end(), label);
      if (it == sp.points.end())
        throw RingError("abstract space: unknown point '" + label + "' in a closed set");
      b.set(std::size_t(it - sp.points.begin()));
    }
    fam.insert(b);
  }
  sp.closed_family = detail::sorted_distinct(std::move(fam));
  detail::check_closed_family(sp.closed_family, sp.points.size(), [](const std::string& msg) {
    throw RingError("abstract space: " + msg);
  });
  return sp;
}

// V(a) = {P : a ∈ P}; E(a) is its complement.
inline Bitset v_set(const SpectrumSpace& sp, int a) {
  if (sp.provenance == SpectrumSpace::Provenance::Abstract)
    throw RingError("V/E sets are defined for ring spectra, not abstract spaces");
  Bitset v(sp.points.size());
  for (std::size_t j = 0; j < sp.point_ideals.size(); ++j)
    if (sp.point_ideals[j].test(std::size_t(a))) v.set(j);
  return v;
}

inline Bitset e_set(const SpectrumSpace& sp, int a) { return ~v_set(sp, a); }

inline Bitset v_set_of_ideal(const SpectrumSpace& sp, const Bitset& ideal_members) {
  if (sp.provenance == SpectrumSpace::Provenance::Abstract)
    throw RingError("V/E sets are defined for ring spectra, not abstract spaces");
  Bitset v(sp.points.size());
  for (std::size_t j = 0; j < sp.point_ideals.size(); ++j)
    if (ideal_members.is_subset_of(sp.point_ideals[j])) v.set(j);
  return v;
}

inline bool is_closed(const SpectrumSpace& sp, const Bitset& s) {
  return std::find(sp.closed_family.begin(), sp.closed_family.end(), s) != sp.closed_family.end();
}

inline std::vector<Bitset> open_sets(const SpectrumSpace& sp) {
  std::set<Bitset> fam;
  for (const auto& c : sp.closed_family) fam.insert(~c);
  return detail::sorted_distinct(std::move(fam));
}

inline std::vector<Bitset> clopen_sets(const SpectrumSpace& sp) {
  std::set<Bitset> fam;
  for (const auto& c : sp.closed_family)
    if (is_closed(sp, ~c)) fam.insert(c);
  return detail::sorted_distinct(std::move(fam));
}

// Disjoint closed sets are separated by disjoint clopen sets.
inline bool is_strongly_zero_dimensional(const SpectrumSpace& sp) {
  const auto clopens = clopen_sets(sp);
  for (const auto& a : sp.closed_family)
    for (const auto& b : sp.closed_family) {
      if ((a & b).any()) continue;
      bool separated = false;
      for (const auto& c1 : clopens) {
        if (!a.is_subset_of(c1)) continue;
        for (const auto& c2 : clopens)
          if (b.is_subset_of(c2) && !(c1 & c2).any()) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

inline bool is_hausdorff(const SpectrumSpace& sp) {
  const auto opens = open_sets(sp);
  const std::size_t n = sp.points.size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      bool separated = false;
      for (const auto& u : opens) {
        if (!u.test(p)) continue;
        for (const auto& v : opens)
          if (v.test(q) && !(u & v).any()) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

inline bool is_normal(const SpectrumSpace& sp) {
  const auto opens = open_sets(sp);
  for (const auto& a : sp.closed_family)
    for (const auto& b : sp.closed_family) {
      if ((a & b).any()) continue;
      bool separated = false;
      for (const auto& u : opens) {
        if (!a.is_subset_of(u)) continue;
        for (const auto& v : opens)
          if (b.is_subset_of(v) && !(u & v).any()) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

// Every subset closed, i.e. all singletons closed in a finite space.
inline bool is_discrete(const SpectrumSpace& sp) {
  for (std::size_t p = 0; p < sp.points.size(); ++p) {
    Bitset s(sp.points.size());
    s.set(p);
    if (!is_closed(sp, s)) return false;
  }
  return true;
}

}  // namespace feck
