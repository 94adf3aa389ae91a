// Exact arithmetic in Z_S = {m/n : gcd(n, p) = 1 for every p in a
// finite prime set S}, the source of feckly-clean-but-not-clean rings.
// Feckly witnesses are built constructively by Chinese remaindering;
// the bridge to the finite side goes through R/J(R).
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "feck/ring.hpp"

namespace feck::zlocal {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxPrimes = 16;

namespace detail {

// Deterministic Miller-Rabin, exact for moduli below 2^64.
inline bool is_prime_u64(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt bn = n;
  BigInt d = bn - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (unsigned long long a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    BigInt x = boost::multiprecision::powm(BigInt(a), d, bn);
    if (x == 1 || x == bn - 1) continue;
    bool witness = true;
    for (int i = 1; i < r && witness; ++i) {
      x = x * x % bn;
      if (x == bn - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

inline BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of a modulo m for gcd(a, m) = 1, by extended Euclid.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod_nonneg(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw InternalError("mod_inverse: arguments are not coprime");
  return mod_nonneg(old_s, m);
}

}  // namespace detail

struct PrimeSet {
  std::vector<unsigned long long> primes;  // distinct, ascending

  std::string label() const {
    std::string out = "{";
    for (std::size_t i = 0; i < primes.size(); ++i) {
      out += std::to_string(primes[i]);
      out += (i + 1 < primes.size()) ? "," : "";
    }
    return out + "}";
  }
};

inline PrimeSet make_prime_set(std::vector<unsigned long long> primes) {
  if (primes.empty()) throw RingError("prime set must be nonempty");
  if (primes.size() > kMaxPrimes)
    throw RingError("prime set has more than " + std::to_string(kMaxPrimes) + " members");
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 1; i < primes.size(); ++i)
    if (primes[i] == primes[i - 1])
      throw RingError("prime set members must be distinct: " + std::to_string(primes[i]));
  for (auto p : primes)
    if (!detail::is_prime_u64(p)) throw RingError(std::to_string(p) + " is not prime");
  return PrimeSet{std::move(primes)};
}

// A reduced fraction with positive denominator.
struct LocRational {
  BigInt num = 0;
  BigInt den = 1;
};

inline LocRational loc_rational(BigInt num, BigInt den) {
  if (den == 0) throw RingError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return LocRational{std::move(num), std::move(den)};
}

inline LocRational from_int(const BigInt& n) { return LocRational{n, 1}; }

inline bool operator==(const LocRational& a, const LocRational& b) {
  return a.num == b.num && a.den == b.den;
}

inline LocRational add(const LocRational& a, const LocRational& b) {
  return loc_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline LocRational sub(const LocRational& a, const LocRational& b) {
  return loc_rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
inline LocRational mul(const LocRational& a, const LocRational& b) {
  return loc_rational(a.num * b.num, a.den * b.den);
}
inline LocRational neg(const LocRational& a) { return LocRational{-a.num, a.den}; }

inline std::string to_string(const LocRational& x) {
  std::string out = x.num.str();
  if (x.den != 1) out += "/" + x.den.str();
  return out;
}

inline LocRational parse_rational(std::string_view s) {
  auto parse_big = [](std::string_view t) -> BigInt {
    if (t.empty()) throw RingError("empty integer literal");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw RingError("malformed integer literal '" + std::string(t) + "'");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw RingError("malformed integer literal '" + std::string(t) + "'");
    return BigInt(std::string(t));
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return from_int(parse_big(s));
  return loc_rational(parse_big(s.substr(0, slash)), parse_big(s.substr(slash + 1)));
}

inline bool contains(const PrimeSet& S, const LocRational& x) {
  for (auto p : S.primes)
    if (x.den % p == 0) return false;
  return true;
}

inline void require_member(const PrimeSet& S, const LocRational& x) {
  if (!contains(S, x))
    throw RingError(to_string(x) + " is not a member of Z_" + S.label() +
                    " (denominator shares a prime)");
}

// Residue of m/n modulo p, defined because gcd(n, p) = 1.
inline BigInt residue_mod(const PrimeSet& S, const LocRational& x, unsigned long long p) {
  require_member(S, x);
  const BigInt bp = p;
  return detail::mod_nonneg(detail::mod_nonneg(x.num, bp) * detail::mod_inverse(x.den, bp), bp);
}

inline bool is_unit(const PrimeSet& S, const LocRational& x) {
  require_member(S, x);
  for (auto p : S.primes)
    if (x.num % p == 0) return false;
  return true;
}

inline bool in_jacobson(const PrimeSet& S, const LocRational& x) {
  require_member(S, x);
  for (auto p : S.primes)
    if (x.num % p != 0) return false;
  return true;
}

// Idempotents of a domain are 0 and 1, so x is clean iff x or x - 1 is
// a unit.
inline bool is_clean_element(const PrimeSet& S, const LocRational& x) {
  return is_unit(S, x) || is_unit(S, sub(x, from_int(1)));
}

struct ZFecklyWitness {
  BigInt e;       // integer, least nonnegative CRT solution
  LocRational u;  // x - e, a unit
};

// e ≡ 1 mod p where x ≡ 0 mod p, e ≡ 0 mod p otherwise; u = x - e.
inline ZFecklyWitness feckly_witness(const PrimeSet& S, const LocRational& x) {
  require_member(S, x);
  BigInt e = 0, mod = 1;
  for (auto p : S.primes) {
    const BigInt bp = p;
    const BigInt target = (residue_mod(S, x, p) == 0) ? 1 : 0;
    // extend the CRT solution from `mod` to `mod * p`
    const BigInt delta = detail::mod_nonneg((target - e) * detail::mod_inverse(mod, bp), bp);
    e += mod * delta;
    mod *= bp;
  }
  ZFecklyWitness w{e, sub(x, from_int(e))};
  if (!is_unit(S, w.u)) throw InternalError("zlocal feckly witness: u is not a unit");
  if (!in_jacobson(S, from_int(w.e - w.e * w.e)))
    throw InternalError("zlocal feckly witness: e - e^2 outside J");
  if (!(add(from_int(w.e), w.u) == x)) throw InternalError("zlocal feckly witness: x != e + u");
  return w;
}

struct ZClassification {
  bool is_local = false;
  bool is_clean = false;
  bool is_feckly_clean = false;
  bool is_pm = false;
  std::vector<std::string> max_ideals;              // "2R", "3R", ...
  std::optional<LocRational> non_clean_witness;     // present when not clean
};

inline ZClassification classify(const PrimeSet& S) {
  ZClassification out;
  out.is_local = S.primes.size() == 1;
  out.is_feckly_clean = true;  // the witness constructor is total on Z_S
  // {0} is a prime ideal lying inside every maximal ideal pZ_S
  out.is_pm = out.is_local;
  for (auto p : S.primes) out.max_ideals.push_back(std::to_string(p) + "R");
  if (out.is_local) {
    out.is_clean = true;  // local: x or x - 1 is a unit
  } else {
    // CRT element with x ≡ 0 mod p1, x ≡ 1 mod p2: neither x nor x - 1
    // is a unit, and the only idempotents are 0 and 1.
    BigInt e = 0, mod = 1;
    for (std::size_t i = 0; i < S.primes.size(); ++i) {
      const BigInt bp = S.primes[i];
      const BigInt target = (i == 1) ? 1 : 0;
      const BigInt delta = detail::mod_nonneg((target - e) * detail::mod_inverse(mod, bp), bp);
      e += mod * delta;
      mod *= bp;
    }
    LocRational w = from_int(e);
    if (is_clean_element(S, w))
      throw InternalError("zlocal classify: CRT element unexpectedly clean");
    out.is_clean = false;
    out.non_clean_witness = w;
  }
  return out;
}

// R/J(R) realized as the product of the residue fields zn(p).
inline Ring quotient_mod_j(const PrimeSet& S, int order_cap = kDefaultOrderCap) {
  long long order = 1;
  std::vector<Ring> factors;
  for (auto p : S.primes) {
    if (p > std::size_t(order_cap))
      throw RingError("quotient_mod_j: prime " + std::to_string(p) + " exceeds the order cap");
    order *= (long long)(p);
    if (order > order_cap)
      throw RingError("quotient_mod_j: order of the quotient exceeds cap " +
                      std::to_string(order_cap));
    factors.push_back(zn((long long)(p), order_cap));
  }
  if (factors.size() == 1) return factors[0];
  return direct_product(factors, order_cap);
}

// Index of the image of x in quotient_mod_j(S), via per-prime residues.
inline int reduce_index(const PrimeSet& S, const LocRational& x, int order_cap = kDefaultOrderCap) {
  require_member(S, x);
  long long idx = 0;
  long long stride = 1;
  for (auto p : S.primes) {
    stride *= (long long)(p);
    if (stride > order_cap)
      throw RingError("reduce_index: quotient of Z_" + S.label() + " exceeds the order cap");
    idx = idx * (long long)(p) + (long long)(residue_mod(S, x, p));
  }
  return int(idx);
}

}  // namespace feck::zlocal
