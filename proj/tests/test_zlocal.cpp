#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "feck/cleanness.hpp"
#include "feck/zlocal.hpp"

using namespace feck;
using namespace feck::zlocal;

namespace {

LocRational q(long long num, long long den = 1) { return loc_rational(num, den); }

// Random member of Z_S with a fixed seed; denominators stay coprime to S.
LocRational random_member(std::mt19937_64& rng, const PrimeSet& S) {
  std::uniform_int_distribution<long long> nd(-1000000, 1000000);
  std::uniform_int_distribution<long long> dd(1, 1000000);
  for (;;) {
    auto x = loc_rational(nd(rng), dd(rng));
    if (contains(S, x)) return x;
  }
}

}  // namespace

TEST_CASE("prime set validation") {
  auto S = make_prime_set({3, 2});
  CHECK(S.primes == std::vector<unsigned long long>{2, 3});
  CHECK(S.label() == "{2,3}");

  CHECK_THROWS_AS(make_prime_set({}), RingError);
  CHECK_THROWS_AS(make_prime_set({4}), RingError);
  CHECK_THROWS_AS(make_prime_set({2, 2}), RingError);
  CHECK_THROWS_AS(make_prime_set({1}), RingError);

  // a large prime passes the deterministic Miller-Rabin
  CHECK_NOTHROW(make_prime_set({2305843009213693951ull}));  // 2^61 - 1
  CHECK_THROWS_AS(make_prime_set({2305843009213693953ull}), RingError);
}

TEST_CASE("rational normalization and parsing") {
  CHECK(q(40, 12) == q(10, 3));
  CHECK(q(-6, -4) == q(3, 2));
  CHECK(q(6, -4) == q(-3, 2));
  CHECK(to_string(q(10, 3)) == "10/3");
  CHECK(to_string(q(-5)) == "-5");
  CHECK(parse_rational("10/3") == q(10, 3));
  CHECK(parse_rational("-6/5") == q(-6, 5));
  CHECK(parse_rational("17") == q(17));
  CHECK_THROWS_AS(parse_rational("1/0"), RingError);
  CHECK_THROWS_AS(parse_rational("x"), RingError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), RingError);
}

TEST_CASE("membership") {
  auto S23 = make_prime_set({2, 3});
  CHECK(contains(S23, q(1, 5)));
  CHECK_FALSE(contains(S23, q(1, 2)));
  CHECK(contains(make_prime_set({5, 7}), q(10, 3)));
  CHECK_THROWS_AS(is_unit(S23, q(1, 6)), RingError);
}

TEST_CASE("units and the radical") {
  auto S23 = make_prime_set({2, 3});
  CHECK(is_unit(S23, q(1)));
  CHECK_FALSE(is_unit(S23, q(4)));
  CHECK(is_unit(S23, q(5, 7)));

  CHECK(in_jacobson(S23, q(0)));
  CHECK(in_jacobson(S23, q(6)));
  CHECK_FALSE(in_jacobson(S23, q(2)));
  CHECK(in_jacobson(S23, q(-6, 5)));
}

TEST_CASE("clean elements") {
  auto S23 = make_prime_set({2, 3});
  CHECK_FALSE(is_clean_element(S23, q(4)));
  CHECK(is_clean_element(S23, q(5)));

  // p(q+1)/(p+q) with p = 5, q = 7 reduces to 10/3 and is not clean
  auto S57 = make_prime_set({5, 7});
  auto x = q(5 * (7 + 1), 5 + 7);
  CHECK(x == q(10, 3));
  CHECK_FALSE(is_clean_element(S57, x));
}

TEST_CASE("feckly witnesses by CRT") {
  auto S23 = make_prime_set({2, 3});
  auto w0 = feckly_witness(S23, q(0));
  CHECK(w0.e == 1);
  CHECK(w0.u == q(-1));

  auto w4 = feckly_witness(S23, q(4));
  CHECK(w4.e == 3);
  CHECK(w4.u == q(1));

  auto S57 = make_prime_set({5, 7});
  auto w = feckly_witness(S57, q(10, 3));
  CHECK(w.e == 21);
  CHECK(w.u == q(-53, 3));
}

TEST_CASE("feckly witness properties on random members") {
  std::mt19937_64 rng(0xfec2026);
  for (const auto& S : {make_prime_set({2, 3}), make_prime_set({5, 7}), make_prime_set({2, 3, 5, 11})}) {
    const BigInt prod = [&] {
      BigInt m = 1;
      for (auto p : S.primes) m *= p;
      return m;
    }();
    for (int i = 0; i < 200; ++i) {
      auto x = random_member(rng, S);
      auto w = feckly_witness(S, x);
      CHECK(w.e >= 0);
      CHECK(w.e < prod);
      CHECK(is_unit(S, w.u));
      CHECK(in_jacobson(S, from_int(w.e - w.e * w.e)));
      CHECK(add(from_int(w.e), w.u) == x);
      for (auto p : S.primes) {
        const auto r = residue_mod(S, x, p);
        CHECK(feck::zlocal::detail::mod_nonneg(w.e, BigInt(p)) == (r == 0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("arithmetic closure on random members") {
  std::mt19937_64 rng(0x5eed);
  auto S = make_prime_set({2, 3});
  for (int i = 0; i < 200; ++i) {
    auto x = random_member(rng, S);
    auto y = random_member(rng, S);
    CHECK(contains(S, add(x, y)));
    CHECK(contains(S, mul(x, y)));
    CHECK(contains(S, sub(x, y)));
  }
}

TEST_CASE("unit characterization by exact reciprocal") {
  std::mt19937_64 rng(0xabcd);
  auto S = make_prime_set({3, 7});
  for (int i = 0; i < 200; ++i) {
    auto x = random_member(rng, S);
    if (x.num == 0) {
      CHECK_FALSE(is_unit(S, x));
      continue;
    }
    auto inv = loc_rational(x.den, x.num);
    CHECK(is_unit(S, x) == contains(S, inv));
    if (is_unit(S, x)) CHECK(mul(x, inv) == q(1));
  }
}

TEST_CASE("classification") {
  auto c23 = classify(make_prime_set({2, 3}));
  CHECK_FALSE(c23.is_local);
  CHECK_FALSE(c23.is_clean);
  CHECK(c23.is_feckly_clean);
  CHECK_FALSE(c23.is_pm);
  CHECK(c23.max_ideals == std::vector<std::string>{"2R", "3R"});
  REQUIRE(c23.non_clean_witness);
  CHECK_FALSE(is_clean_element(make_prime_set({2, 3}), *c23.non_clean_witness));

  auto c5 = classify(make_prime_set({5}));
  CHECK(c5.is_local);
  CHECK(c5.is_clean);
  CHECK(c5.is_feckly_clean);
  CHECK(c5.is_pm);

  auto c57 = classify(make_prime_set({5, 7}));
  CHECK_FALSE(c57.is_clean);
  CHECK(c57.is_feckly_clean);

  // consistency with the clean = feckly + pm biconditional
  for (const auto& S : {make_prime_set({2, 3}), make_prime_set({5}), make_prime_set({5, 7}),
                        make_prime_set({2, 3, 5})}) {
    auto c = classify(S);
    CHECK(c.is_clean == (c.is_feckly_clean && c.is_pm));
  }
}

TEST_CASE("quotient mod J") {
  auto S23 = make_prime_set({2, 3});
  auto Q = quotient_mod_j(S23);
  CHECK(Q->order == 6);
  CHECK(is_clean_ring(*Q));

  auto Q2 = quotient_mod_j(make_prime_set({2}));
  CHECK(Q2->order == 2);
  CHECK(Q2->add_t == zn(2)->add_t);

  CHECK(quotient_mod_j(make_prime_set({5, 7}))->order == 35);
  CHECK_THROWS_AS(quotient_mod_j(make_prime_set({4099})), RingError);
}

TEST_CASE("reduction is a ring homomorphism on samples") {
  std::mt19937_64 rng(0x600d);
  auto S = make_prime_set({2, 3});
  auto Q = quotient_mod_j(S);
  for (int i = 0; i < 100; ++i) {
    auto x = random_member(rng, S);
    auto y = random_member(rng, S);
    const int xi = reduce_index(S, x), yi = reduce_index(S, y);
    CHECK(reduce_index(S, add(x, y)) == Q->add(xi, yi));
    CHECK(reduce_index(S, mul(x, y)) == Q->mul(xi, yi));
  }
  CHECK(reduce_index(S, q(1)) == Q->one);
  CHECK(reduce_index(S, q(0)) == Q->zero);
}
