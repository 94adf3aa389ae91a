#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "feck/ideal.hpp"
#include "feck/ring.hpp"

using namespace feck;

namespace {

// Test-side oracle: enumerate every subset of a small ring and keep the
// ones that are ideals. Only usable for order <= 16.
std::set<Bitset> brute_force_ideals(const FiniteRing& R, Sidedness s) {
  REQUIRE(R.order <= 16);
  std::set<Bitset> out;
  for (unsigned long mask = 0; mask < (1ul << R.order); ++mask) {
    Bitset m(std::size_t(R.order), mask);
    if (is_ideal_members(R, m, s)) out.insert(m);
  }
  return out;
}

Bitset bits(int n, std::initializer_list<int> xs) {
  Bitset b{std::size_t(n)};
  for (int x : xs) b.set(std::size_t(x));
  return b;
}

std::set<Bitset> member_sets(const std::vector<IdealSet>& v) {
  std::set<Bitset> out;
  for (const auto& i : v) out.insert(i.members);
  return out;
}

}  // namespace

TEST_CASE("principal ideals") {
  auto R = zn(6);
  CHECK(principal(*R, 0, Sidedness::TwoSided).members == bits(6, {0}));
  CHECK(principal(*R, 5, Sidedness::TwoSided).members.count() == 6);  // unit
  CHECK(principal(*R, 2, Sidedness::TwoSided).members == bits(6, {0, 2, 4}));
}

TEST_CASE("principal ideals are minimal (brute force, order <= 16)") {
  for (auto R : {zn(12), zn(8), direct_product({zn(2), zn(2)})}) {
    auto all = brute_force_ideals(*R, Sidedness::TwoSided);
    for (int a = 0; a < R->order; ++a) {
      auto p = principal(*R, a, Sidedness::TwoSided).members;
      CHECK(all.count(p) == 1);
      for (const auto& ideal : all)
        if (ideal.test(std::size_t(a))) CHECK(p.is_subset_of(ideal));
    }
  }
}

TEST_CASE("ideal sum and product") {
  auto R = zn(12);
  auto i4 = principal(*R, 4, Sidedness::TwoSided);
  auto i6 = principal(*R, 6, Sidedness::TwoSided);
  CHECK(ideal_sum(i4, i6).members == principal(*R, 2, Sidedness::TwoSided).members);
  CHECK(ideal_product(i4, i6).members == bits(12, {0}));
  CHECK(ideal_sum(i4, zero_ideal(*R)).members == i4.members);

  auto S = zn(6);
  CHECK_THROWS_AS(ideal_sum(i4, zero_ideal(*S)), RingError);
  auto r1 = principal(*R, 4, Sidedness::Right);
  CHECK_THROWS_AS(ideal_sum(i4, r1), RingError);
  CHECK_THROWS_AS(ideal_product(r1, r1), RingError);
}

TEST_CASE("lattice enumeration matches brute force") {
  for (auto R : {zn(12), direct_product({zn(2), zn(2)}), matrix_ring(zn(2), 2)}) {
    for (auto s : {Sidedness::TwoSided, Sidedness::Right, Sidedness::Left}) {
      auto lat = all_ideals(*R, s);
      std::set<Bitset> got(lat.ideals.begin(), lat.ideals.end());
      CHECK(got.size() == lat.ideals.size());  // no duplicates
      CHECK(got == brute_force_ideals(*R, s));
    }
  }
}

TEST_CASE("lattice counts from the examples") {
  CHECK(all_ideals(*zn(12), Sidedness::TwoSided).ideals.size() == 6);
  CHECK(all_ideals(*zn(1), Sidedness::TwoSided).ideals.size() == 1);
  CHECK(all_ideals(*direct_product({zn(2), zn(2)}), Sidedness::TwoSided).ideals.size() == 4);
}

TEST_CASE("lattice cap errors name the ring") {
  CHECK_THROWS_WITH(all_ideals(*zn(12), Sidedness::TwoSided, 3),
                    Catch::Matchers::ContainsSubstring("zn(12)"));
}

TEST_CASE("sum is the lattice join") {
  for (auto R : {zn(12), direct_product({zn(2), zn(2)}), matrix_ring(zn(2), 2)}) {
    auto lat = all_ideals(*R, Sidedness::TwoSided);
    for (const auto& im : lat.ideals)
      for (const auto& jm : lat.ideals) {
        IdealSet I{R.get(), Sidedness::TwoSided, im}, J{R.get(), Sidedness::TwoSided, jm};
        const auto s = ideal_sum(I, J).members;
        // the join lies in the lattice and is the least upper bound
        CHECK(std::find(lat.ideals.begin(), lat.ideals.end(), s) != lat.ideals.end());
        CHECK(im.is_subset_of(s));
        CHECK(jm.is_subset_of(s));
        for (const auto& km : lat.ideals)
          if (im.is_subset_of(km) && jm.is_subset_of(km)) CHECK(s.is_subset_of(km));
      }
  }
}

TEST_CASE("lattice order is deterministic") {
  auto a = all_ideals(*zn(12), Sidedness::TwoSided);
  auto b = all_ideals(*zn(12), Sidedness::TwoSided);
  CHECK(a.ideals == b.ideals);
  for (std::size_t i = 1; i < a.ideals.size(); ++i)
    CHECK(member_set_less(a.ideals[i - 1], a.ideals[i]));
}

TEST_CASE("maximal ideals") {
  auto R = zn(6);
  auto mx = maximal_ideals(*R);
  CHECK_FALSE(mx.trivial_ring);
  CHECK(member_sets(mx.ideals) ==
        std::set<Bitset>{bits(6, {0, 2, 4}), bits(6, {0, 3})});

  auto F = zn(7);
  auto mf = maximal_ideals(*F);
  REQUIRE(mf.ideals.size() == 1);
  CHECK(mf.ideals[0].members == bits(7, {0}));

  auto M = matrix_ring(zn(2), 2);
  auto mm = maximal_ideals(*M);
  REQUIRE(mm.ideals.size() == 1);
  CHECK(mm.ideals[0].size() == 1);

  auto T = maximal_ideals(*zn(1));
  CHECK(T.trivial_ring);
  CHECK(T.ideals.empty());
}

TEST_CASE("maximal right ideals") {
  // commutative rings: same as two-sided
  auto R = zn(12);
  CHECK(member_sets(maximal_right_ideals(*R).ideals) == member_sets(maximal_ideals(*R).ideals));

  // M2(F2): exactly 3, none two-sided
  auto M = matrix_ring(zn(2), 2);
  auto mr = maximal_right_ideals(*M);
  REQUIRE(mr.ideals.size() == 3);
  for (const auto& I : mr.ideals)
    CHECK_FALSE(is_ideal_members(*M, I.members, Sidedness::TwoSided));

  // T2(Z4): exactly 2, both two-sided
  auto T = upper_triangular(zn(4), 2);
  auto tr = maximal_right_ideals(*T);
  REQUIRE(tr.ideals.size() == 2);
  for (const auto& I : tr.ideals)
    CHECK(is_ideal_members(*T, I.members, Sidedness::TwoSided));
}

TEST_CASE("jacobson radical by quasi-regularity") {
  CHECK(jacobson_radical(*zn(7)).members == bits(7, {0}));
  CHECK(jacobson_radical(*zn(12)).members == bits(12, {0, 6}));
  CHECK(jacobson_radical(*upper_triangular(zn(4), 2)).size() == 16);
}

TEST_CASE("radical equals the intersection of maximal ideals, either kind") {
  for (auto R : {zn(12), zn(16), zn(7), direct_product({zn(2), zn(2)}),
                 matrix_ring(zn(2), 2), upper_triangular(zn(4), 2)}) {
    auto J = jacobson_radical(*R).members;
    Bitset right(std::size_t(R->order));
    right.set();
    for (const auto& M : maximal_right_ideals(*R).ideals) right &= M.members;
    CHECK(J == right);
    Bitset two(std::size_t(R->order));
    two.set();
    for (const auto& M : maximal_ideals(*R).ideals) two &= M.members;
    CHECK(J == two);
    // J(R) ⊆ M for every maximal two-sided M
    for (const auto& M : maximal_ideals(*R).ideals) CHECK(J.is_subset_of(M.members));
  }
}

TEST_CASE("prime ideals") {
  auto M = matrix_ring(zn(2), 2);
  CHECK(is_prime(*M, zero_ideal(*M)));

  auto R = zn(12);
  CHECK(is_prime(*R, principal(*R, 2, Sidedness::TwoSided)));
  CHECK_FALSE(is_prime(*R, principal(*R, 4, Sidedness::TwoSided)));
  CHECK(is_prime(*zn(5), zero_ideal(*zn(5))));

  IdealSet full{R.get(), Sidedness::TwoSided, principal(*R, 1, Sidedness::TwoSided).members};
  CHECK_THROWS_AS(is_prime(*R, full), RingError);
}

TEST_CASE("j-spec points") {
  auto R = zn(12);
  auto pts = j_spec_points(*R);
  CHECK(member_sets(pts) == member_sets(maximal_ideals(*R).ideals));
  CHECK(j_spec_points(*zn(5)).size() == 1);

  // primes coincide with maximal ideals on finite rings
  for (auto S : {zn(24), zn(9), matrix_ring(zn(2), 2), upper_triangular(zn(4), 2)})
    CHECK(member_sets(prime_ideals(*S)) == member_sets(maximal_ideals(*S).ideals));
}

TEST_CASE("quotients through validated ideals") {
  auto R = zn(12);
  auto J = jacobson_radical(*R);
  auto [Q, proj] = quotient(R, J);
  CHECK(Q->order == 6);

  auto T = upper_triangular(zn(4), 2);
  auto JT = jacobson_radical(*T);
  auto [QT, projT] = quotient(T, JT);
  CHECK(QT->order == 4);

  auto M = matrix_ring(zn(2), 2);
  auto right = principal(*M, 1, Sidedness::Right);
  CHECK_THROWS_AS(quotient(M, right), RingError);
}

TEST_CASE("ideal validation reports violations") {
  auto R = zn(12);
  IdealSet ok{R.get(), Sidedness::TwoSided, principal(*R, 4, Sidedness::TwoSided).members};
  CHECK_NOTHROW(validate_ideal(ok));

  Bitset m(12);
  m.set(0);
  m.set(5);
  IdealSet bad{R.get(), Sidedness::TwoSided, m};
  CHECK_THROWS_AS(validate_ideal(bad), RingError);
}

TEST_CASE("two-sided ideals validate as one-sided too") {
  auto T = upper_triangular(zn(4), 2);
  const auto J = jacobson_radical(*T);
  for (auto s : {Sidedness::Right, Sidedness::Left}) {
    IdealSet side{T.get(), s, J.members};
    CHECK_NOTHROW(validate_ideal(side));
    CHECK(is_ideal_members(*T, J.members, s));
  }
}

TEST_CASE("ideal labels") {
  auto R = zn(12);
  CHECK(ideal_label(jacobson_radical(*R)) == "{0,6}");
  CHECK(ideal_label(zero_ideal(*R)) == "{0}");
}
