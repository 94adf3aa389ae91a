#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "feck/cleanness.hpp"
#include "feck/theorems.hpp"

using namespace feck;

namespace {

bool is_central(const FiniteRing& R, int e) {
  for (int r = 0; r < R.order; ++r)
    if (R.mul(e, r) != R.mul(r, e)) return false;
  return true;
}

}  // namespace

TEST_CASE("clean witnesses") {
  auto R = zn(6);
  CleannessContext c(*R);

  auto w0 = clean_witness(c, 0);
  REQUIRE(w0);
  CHECK(w0->e == 1);
  CHECK(w0->u == 5);  // u = -1

  auto w3 = clean_witness(c, 3);
  REQUIRE(w3);
  CHECK(w3->e == 4);
  CHECK(w3->u == 5);

  for (int a = 0; a < R->order; ++a) {
    auto w = clean_witness(c, a);
    REQUIRE(w);
    validate_clean_witness(*R, *w);
  }
}

TEST_CASE("feckly witnesses") {
  auto R = zn(6);
  CleannessContext c(*R);
  auto w1 = feckly_witness(c, 1);
  REQUIRE(w1);
  CHECK(w1->e == 0);
  CHECK(w1->u == 1);

  // in M2(F2), a = 0 forces e = 1 since u = 0 is not full
  auto M = matrix_ring(zn(2), 2);
  CleannessContext cm(*M);
  auto wm = feckly_witness(cm, M->zero);
  REQUIRE(wm);
  CHECK(wm->e == M->one);
  CHECK(wm->u == M->neg(M->one));
  validate_feckly_witness(*M, *wm);
}

TEST_CASE("Z2 x Z3 is a clean ring") {
  CHECK(is_clean_ring(*direct_product({zn(2), zn(3)})));
}

TEST_CASE("every element of the sample rings is clean and feckly clean") {
  for (auto R : {zn(6), zn(12), zn(24), direct_product({zn(2), zn(2)}),
                 matrix_ring(zn(2), 2), upper_triangular(zn(4), 2), zn(1)}) {
    CleannessContext c(*R);
    CHECK(is_clean_ring(c));
    CHECK(is_feckly_clean_ring(c));
    for (int a = 0; a < R->order; ++a) {
      auto cw = clean_witness(c, a);
      REQUIRE(cw);
      validate_clean_witness(*R, *cw);
      auto fw = feckly_witness(c, a);
      REQUIRE(fw);
      validate_feckly_witness(*R, *fw);
    }
  }
}

TEST_CASE("clean witnesses with central idempotents give feckly witnesses") {
  for (auto R : {zn(12), matrix_ring(zn(2), 2), upper_triangular(zn(4), 2)}) {
    CleannessContext c(*R);
    for (int a = 0; a < R->order; ++a) {
      auto cw = clean_witness(c, a);
      REQUIRE(cw);
      if (is_central(*R, cw->e)) {
        auto fw = feckly_witness(c, a);
        REQUIRE(fw);
        validate_feckly_witness(*R, *fw);
      }
    }
  }
}

TEST_CASE("lemma 2.5 join") {
  auto R = zn(6);
  CleannessContext c(*R);
  auto sp = max_spectrum(*R);

  CHECK(lemma25_join(c, sp, 3, 0) == 3);   // f = 0 gives g = e
  CHECK(lemma25_join(c, sp, 4, 4) == 4);   // idempotent e = f gives g = e
  CHECK(lemma25_join(c, sp, 3, 4) == 1);   // E(3) ∪ E(4) = E(1)

  // precondition violation reports the offending r
  auto R12 = zn(12);
  CleannessContext c12(*R12);
  auto sp12 = max_spectrum(*R12);
  CHECK_THROWS_WITH(lemma25_join(c12, sp12, 2, 0), Catch::Matchers::ContainsSubstring("r="));
}

TEST_CASE("pm rings") {
  CHECK(is_pm(*zn(5)));
  CHECK(is_pm(*zn(12)));
  CHECK(is_pm(*matrix_ring(zn(2), 2)));
  CHECK(is_pm(*upper_triangular(zn(4), 2)));
  CHECK(is_pm(*zn(1)));
}

TEST_CASE("quasi-duo") {
  CHECK(is_quasi_duo(*zn(12), Sidedness::Right));
  CHECK(is_quasi_duo(*zn(12), Sidedness::Left));
  CHECK(is_quasi_duo(*upper_triangular(zn(4), 2), Sidedness::Right));
  CHECK_FALSE(is_quasi_duo(*matrix_ring(zn(2), 2), Sidedness::Right));
  CHECK_THROWS_AS(is_quasi_duo(*zn(6), Sidedness::TwoSided), RingError);
}

TEST_CASE("exchange rings") {
  for (auto R : {zn(6), zn(16), matrix_ring(zn(2), 2), upper_triangular(zn(4), 2)}) {
    CleannessContext c(*R);
    CHECK(is_exchange(c));
    // idempotent a satisfies the condition with e = a directly
    for (int a : c.idempotent_list) {
      auto aR = detail::right_multiples(*R, a);
      auto caR = detail::right_multiples(*R, R->sub(R->one, a));
      CHECK(aR.test(std::size_t(a)));
      CHECK(caR.test(std::size_t(R->sub(R->one, a))));
    }
  }
}

TEST_CASE("pi-regularity") {
  auto R = zn(8);
  for (int u : units(*R)) CHECK(pi_regular_index(*R, u) == 1);
  CHECK(pi_regular_index(*R, 2) == 3);
  for (auto S : {zn(6), zn(12), matrix_ring(zn(2), 2), upper_triangular(zn(4), 2)})
    CHECK(is_pi_regular(*S));
}

TEST_CASE("gsr rings") {
  CHECK(is_gsr(*zn(2)));
  CHECK(is_gsr(*zn(4)));
  CHECK_FALSE(is_gsr(*zn(8)));
}

TEST_CASE("theorem 5.1 chain") {
  auto R = zn(6);
  CleannessContext c(*R);
  auto chain = thm51_chain(c, 3);
  CHECK(chain.stage2.f == 4);
  CHECK(chain.stage2.u == 5);
  CHECK(chain.stage3.e == 3);
  CHECK(chain.stage1.f == 4);
  CHECK(R->is_unit(chain.stage1.u));

  // unit a with f = 0: e = 1 and a - e = (a - a^2)(-a^{-1})
  auto cu = thm51_chain(c, 5);
  CHECK(cu.stage2.f == 0);
  CHECK(cu.stage3.e == 1);
  CHECK(R->add(cu.stage1.f, cu.stage1.u) == 5);

  for (auto S : {zn(12), zn(24), direct_product({zn(4), zn(3)})}) {
    CleannessContext cs(*S);
    for (int a = 0; a < S->order; ++a) {
      auto ch = thm51_chain(cs, a);
      CHECK(S->add(ch.stage1.f, ch.stage1.u) == a);
      CHECK(S->is_unit(ch.stage1.u));
      CHECK(cs.jacobson.contains(S->sub(ch.stage1.f, S->mul(ch.stage1.f, ch.stage1.f))));
    }
  }

  CHECK_THROWS_AS(thm51_chain(CleannessContext(*matrix_ring(zn(2), 2)), 0), RingError);
}

TEST_CASE("theorem 5.1 stage conversions reject bad forms") {
  auto R = zn(12);
  CleannessContext c(*R);
  CHECK_THROWS_AS(thm51_2_to_3(c, 5, Thm51Stage2{2, 2}), RingError);   // 2 not a unit
  CHECK_THROWS_AS(thm51_2_to_3(c, 4, Thm51Stage2{2, 2}), RingError);   // a != f + u
  CHECK_THROWS_AS(thm51_3_to_4(c, 5, Thm51Stage3{2, 0}), RingError);
}

TEST_CASE("theorem 5.4 construction") {
  auto R = zn(6);
  CleannessContext c(*R);
  auto p = thm54_construction(c, 1, 0);
  CHECK(p.r == 5);
  CHECK(p.s == 1);

  auto R2 = zn(6);
  CleannessContext c2(*R2);
  CHECK_NOTHROW(thm54_construction(c2, 2, 5));

  for (auto S : {zn(12), zn(24), direct_product({zn(2), zn(2)})}) {
    CleannessContext cs(*S);
    for (int a = 0; a < S->order; ++a) CHECK_NOTHROW(thm54_construction(cs, a, S->sub(S->one, a)));
  }

  CHECK_THROWS_AS(thm54_construction(c, 2, 2), RingError);  // a + b != 1
}

TEST_CASE("corollary 5.3 forms") {
  auto R = zn(6);
  CleannessContext c(*R);
  auto f1 = cor53_forms(c, 1);
  CHECK(f1.e == 1);
  CHECK(f1.u == 1);
  CHECK(R->mul(R->mul(1, f1.u), f1.e) == f1.e);

  auto f3 = cor53_forms(c, 3);
  CHECK(f3.e == 3);  // witness (e = 4, u = 5) gives e = 1 - 4 = 3

  for (auto S : {zn(12), zn(24), direct_product({zn(4), zn(3)})}) {
    CleannessContext cs(*S);
    for (int a = 0; a < S->order; ++a) CHECK_NOTHROW(cor53_forms(cs, a));
  }
}

TEST_CASE("theorem harness passes on the spotlight rings") {
  for (auto R : {zn(1), zn(12), direct_product({zn(2), zn(3)})}) {
    auto rep = check_all_theorems(R);
    INFO(rep.ring);
    for (const auto& e : rep.entries) {
      INFO(e.name << ": " << e.detail);
      CHECK((!e.hypothesis || e.holds));
    }
    CHECK(rep.pass);
    CHECK(rep.entries.size() == 23);
  }
}

TEST_CASE("theorem harness on the triangular ring") {
  auto rep = check_all_theorems(upper_triangular(zn(4), 2));
  CHECK(rep.pass);
  auto t45 = rep.find("T4.5");
  REQUIRE(t45);
  CHECK(t45->hypothesis);  // quasi-duo exchange
  CHECK(t45->holds);
  auto t51 = rep.find("T5.1");
  REQUIRE(t51);
  CHECK_FALSE(t51->hypothesis);  // not commutative
}

TEST_CASE("theorem harness on the full matrix ring") {
  auto rep = check_all_theorems(matrix_ring(zn(2), 2));
  CHECK(rep.pass);
  auto t45 = rep.find("T4.5");
  REQUIRE(t45);
  CHECK_FALSE(t45->hypothesis);  // not quasi-duo
  auto t41 = rep.find("T4.1");
  REQUIRE(t41);
  CHECK_FALSE(t41->hypothesis);  // R/J not abelian
}

TEST_CASE("theorem harness beyond the default corpus") {
  // wider spectra (3 maximal ideals), a bigger simple ring, a quotient
  std::vector<Ring> rings = {
      upper_triangular(zn(2), 3),
      matrix_ring(zn(3), 2),
      direct_product({zn(2), zn(3), zn(5)}),
  };
  {
    auto R = zn(24);
    rings.push_back(quotient(R, jacobson_radical(*R)).first);
  }
  for (const auto& R : rings) {
    auto rep = check_all_theorems(R);
    INFO(rep.ring);
    for (const auto& e : rep.entries) {
      INFO(e.name << ": " << e.detail);
      CHECK((!e.hypothesis || e.holds));
    }
    CHECK(rep.pass);
  }
}

TEST_CASE("theorem harness stress rings") {
  for (auto R : {matrix_ring(zn(4), 2), zn(100, 256)}) {
    auto rep = check_all_theorems(R);
    INFO(rep.ring);
    CHECK(rep.pass);
  }
}

TEST_CASE("theorem harness sweep over a wide ring family") {
  std::vector<Ring> rings;
  for (int n = 1; n <= 40; ++n) rings.push_back(zn(n));
  rings.push_back(direct_product({zn(2), zn(3), zn(5)}));
  rings.push_back(direct_product({zn(4), zn(9)}));
  rings.push_back(direct_product({zn(2), zn(2), zn(2)}));
  rings.push_back(direct_product({matrix_ring(zn(2), 2), zn(3)}));
  rings.push_back(direct_product({upper_triangular(zn(2), 2), zn(5)}));
  rings.push_back(upper_triangular(zn(5), 2));
  for (auto base : {zn(24), zn(36)}) {
    rings.push_back(quotient(base, jacobson_radical(*base)).first);
    rings.push_back(quotient(base, principal(*base, 4, Sidedness::TwoSided)).first);
  }
  for (const auto& R : rings) {
    auto rep = check_all_theorems(R);
    INFO(rep.ring);
    CHECK(rep.pass);
  }
}

TEST_CASE("theorem harness is deterministic") {
  auto a = check_all_theorems(zn(12));
  auto b = check_all_theorems(zn(12));
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].name == b.entries[i].name);
    CHECK(a.entries[i].hypothesis == b.entries[i].hypothesis);
    CHECK(a.entries[i].holds == b.entries[i].holds);
    CHECK(a.entries[i].detail == b.entries[i].detail);
  }
}
