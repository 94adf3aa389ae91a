// Finite unital rings given by Cayley tables: validated construction,
// structured constructors (zn, products, matrix rings, quotients) and
// element-level primitives. Everything here is exact and exhaustively
// checked at construction time.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace feck {

using Bitset = boost::dynamic_bitset<>;

// Bad input: invalid tables, malformed literals, caps exceeded.
class RingError : public std::runtime_error {
 public:
  explicit RingError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical consistency check failed. Signals a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline constexpr int kDefaultOrderCap = 4096;

struct Tag;
using TagPtr = std::shared_ptr<const Tag>;

// Constructor provenance. Carries exactly what literal rendering and
// parsing need, so reports can address elements without the tables.
struct Tag {
  enum class Kind { Zn, Tables, Product, Triangular, Matrix, Quotient };

  Kind kind = Kind::Tables;
  int order = 0;
  int zero = 0;
  long long modulus = 0;          // Zn
  int dim = 0;                    // Matrix / Triangular size k
  std::vector<TagPtr> factors;    // Product
  TagPtr base;                    // Matrix / Triangular / Quotient
  std::vector<int32_t> reps;      // Quotient: coset representatives, ascending
  std::vector<int32_t> proj;      // Quotient: base index -> quotient index
  std::string name;
};

struct FiniteRing {
  int order = 0;
  std::vector<int32_t> add_t;  // row-major order x order
  std::vector<int32_t> mul_t;
  std::vector<int32_t> neg_t;
  std::vector<int32_t> inv_t;  // two-sided inverse, -1 if none
  int zero = 0;
  int one = 0;
  bool commutative = false;
  TagPtr tag;

  int add(int a, int b) const { return add_t[std::size_t(a) * order + b]; }
  int mul(int a, int b) const { return mul_t[std::size_t(a) * order + b]; }
  int neg(int a) const { return neg_t[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  bool is_unit(int a) const { return inv_t[a] >= 0; }
  int inv(int a) const {
    if (inv_t[a] < 0) throw RingError("element " + std::to_string(a) + " of " + name() + " is not a unit");
    return inv_t[a];
  }
  const std::string& name() const { return tag->name; }
};

using Ring = std::shared_ptr<const FiniteRing>;

// An element index paired with its ring. Mixing rings is a reported
// error, not undefined behavior.
struct Element {
  const FiniteRing* ring = nullptr;
  int index = -1;
};

inline Element el(const FiniteRing& R, int index) {
  if (index < 0 || index >= R.order)
    throw RingError("element index " + std::to_string(index) + " out of range for " + R.name());
  return Element{&R, index};
}

inline void require_same_ring(const Element& x, const Element& y) {
  if (x.ring != y.ring)
    throw RingError("elements of different rings mixed in one operation (" +
                    x.ring->name() + " vs " + y.ring->name() + ")");
}

inline Element operator+(const Element& x, const Element& y) {
  require_same_ring(x, y);
  return Element{x.ring, x.ring->add(x.index, y.index)};
}
inline Element operator*(const Element& x, const Element& y) {
  require_same_ring(x, y);
  return Element{x.ring, x.ring->mul(x.index, y.index)};
}
inline Element operator-(const Element& x) { return Element{x.ring, x.ring->neg(x.index)}; }
inline Element operator-(const Element& x, const Element& y) {
  require_same_ring(x, y);
  return Element{x.ring, x.ring->sub(x.index, y.index)};
}
inline bool operator==(const Element& x, const Element& y) {
  require_same_ring(x, y);
  return x.index == y.index;
}

namespace detail {

inline std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

inline std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Validates every ring axiom exhaustively, reporting the first violation
// with a witness, then fills the derived tables.
inline Ring build_validated(int order, std::vector<int32_t> add, std::vector<int32_t> mul,
                            int zero, int one, TagPtr tag) {
  const std::string& name = tag->name;
  auto fail = [&](const std::string& msg) { throw RingError(name + ": " + msg); };

  if (order < 1) fail("order must be positive");
  const std::size_t n = std::size_t(order);
  if (add.size() != n * n) fail("add table is not order x order");
  if (mul.size() != n * n) fail("mul table is not order x order");
  for (std::size_t i = 0; i < n * n; ++i) {
    if (add[i] < 0 || add[i] >= order)
      fail("add table entry out of range at " + pair_str(int(i / n), int(i % n)));
    if (mul[i] < 0 || mul[i] >= order)
      fail("mul table entry out of range at " + pair_str(int(i / n), int(i % n)));
  }
  if (zero < 0 || zero >= order) fail("zero index out of range");
  if (one < 0 || one >= order) fail("one index out of range");

  auto A = [&](int a, int b) { return add[std::size_t(a) * order + b]; };
  auto M = [&](int a, int b) { return mul[std::size_t(a) * order + b]; };

  for (int a = 0; a < order; ++a)
    for (int b = a; b < order; ++b)
      if (A(a, b) != A(b, a)) fail("addition is not commutative at " + pair_str(a, b));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int ab = A(a, b);
      for (int c = 0; c < order; ++c)
        if (A(ab, c) != A(a, A(b, c))) fail("addition is not associative at " + triple(a, b, c));
    }
  for (int a = 0; a < order; ++a)
    if (A(a, zero) != a) fail("zero is not an additive identity at " + std::to_string(a));

  std::vector<int32_t> neg(n, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (A(a, b) == zero) {
        neg[a] = b;
        break;
      }
    if (neg[a] < 0) fail("element " + std::to_string(a) + " has no additive inverse");
  }

  for (int a = 0; a < order; ++a)
    if (M(one, a) != a || M(a, one) != a)
      fail("one is not a two-sided multiplicative identity at " + std::to_string(a));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int ab = M(a, b);
      for (int c = 0; c < order; ++c)
        if (M(ab, c) != M(a, M(b, c)))
          fail("multiplication is not associative at " + triple(a, b, c));
    }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c) {
        if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
          fail("left distributivity fails at " + triple(a, b, c));
        if (M(A(a, b), c) != A(M(a, c), M(b, c)))
          fail("right distributivity fails at " + triple(a, b, c));
      }

  auto R = std::make_shared<FiniteRing>();
  R->order = order;
  R->add_t = std::move(add);
  R->mul_t = std::move(mul);
  R->neg_t = std::move(neg);
  R->zero = zero;
  R->one = one;
  R->tag = std::move(tag);

  // Two-sided inverses. In a finite ring a one-sided inverse forces a
  // two-sided one; we verify both sides anyway.
  R->inv_t.assign(n, -1);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (R->mul(a, b) == one && R->mul(b, a) == one) {
        R->inv_t[a] = b;
        break;
      }

  R->commutative = true;
  for (int a = 0; a < order && R->commutative; ++a)
    for (int b = a + 1; b < order; ++b)
      if (R->mul(a, b) != R->mul(b, a)) {
        R->commutative = false;
        break;
      }
  return R;
}

inline void check_order_cap(long long order, int cap, const std::string& who) {
  if (order > cap)
    throw RingError(who + ": order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
}

}  // namespace detail

inline Ring from_tables(const std::vector<std::vector<int>>& add,
                        const std::vector<std::vector<int>>& mul, int zero, int one,
                        int order_cap = kDefaultOrderCap) {
  const int order = int(add.size());
  if (order < 1) throw RingError("tables: empty add table");
  detail::check_order_cap(order, order_cap, "tables");
  auto tag = std::make_shared<Tag>();
  tag->kind = Tag::Kind::Tables;
  tag->order = order;
  tag->zero = zero;
  tag->name = "tables(order=" + std::to_string(order) + ")";
  std::vector<int32_t> af(std::size_t(order) * order, 0), mf(std::size_t(order) * order, 0);
  auto flatten = [&](const std::vector<std::vector<int>>& t, std::vector<int32_t>& out,
                     const char* which) {
    if (int(t.size()) != order) throw RingError(std::string("tables: ") + which + " table is not square");
    for (int i = 0; i < order; ++i) {
      if (int(t[i].size()) != order)
        throw RingError(std::string("tables: ") + which + " table row " + std::to_string(i) +
                        " has wrong length");
      for (int j = 0; j < order; ++j) out[std::size_t(i) * order + j] = t[i][j];
    }
  };
  flatten(add, af, "add");
  flatten(mul, mf, "mul");
  return detail::build_validated(order, std::move(af), std::move(mf), zero, one, std::move(tag));
}

inline Ring zn(long long n, int order_cap = kDefaultOrderCap) {
  if (n < 1) throw RingError("zn: modulus must be >= 1");
  detail::check_order_cap(n, order_cap, "zn");
  const int order = int(n);
  auto tag = std::make_shared<Tag>();
  tag->kind = Tag::Kind::Zn;
  tag->order = order;
  tag->modulus = n;
  tag->name = "zn(" + std::to_string(n) + ")";
  std::vector<int32_t> add(std::size_t(order) * order), mul(std::size_t(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      add[std::size_t(a) * order + b] = int32_t((a + b) % order);
      mul[std::size_t(a) * order + b] = int32_t((static_cast<long long>(a) * b) % order);
    }
  return detail::build_validated(order, std::move(add), std::move(mul), 0, order == 1 ? 0 : 1,
                                 std::move(tag));
}

namespace detail {

// Mixed-radix digits, first factor most significant.
inline std::vector<int> mixed_decode(int index, const std::vector<int>& radixes) {
  std::vector<int> d(radixes.size(), 0);
  for (std::size_t i = radixes.size(); i-- > 0;) {
    d[i] = index % radixes[i];
    index /= radixes[i];
  }
  return d;
}

inline int mixed_encode(const std::vector<int>& digits, const std::vector<int>& radixes) {
  int idx = 0;
  for (std::size_t i = 0; i < radixes.size(); ++i) idx = idx * radixes[i] + digits[i];
  return idx;
}

}  // namespace detail

inline Ring direct_product(const std::vector<Ring>& factors, int order_cap = kDefaultOrderCap) {
  if (factors.empty()) throw RingError("product: at least one factor required");
  long long order = 1;
  std::vector<int> radixes;
  for (const auto& f : factors) {
    order *= f->order;
    detail::check_order_cap(order, order_cap, "product");
    radixes.push_back(f->order);
  }
  const int n = int(order);
  auto tag = std::make_shared<Tag>();
  tag->kind = Tag::Kind::Product;
  tag->order = n;
  std::string name = "product(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    tag->factors.push_back(factors[i]->tag);
    name += factors[i]->name();
    name += (i + 1 < factors.size()) ? "," : ")";
  }
  tag->name = name;

  std::vector<int32_t> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  std::vector<int> da, db, dc(factors.size());
  for (int a = 0; a < n; ++a) {
    da = detail::mixed_decode(a, radixes);
    for (int b = 0; b < n; ++b) {
      db = detail::mixed_decode(b, radixes);
      for (std::size_t i = 0; i < factors.size(); ++i) dc[i] = factors[i]->add(da[i], db[i]);
      add[std::size_t(a) * n + b] = int32_t(detail::mixed_encode(dc, radixes));
      for (std::size_t i = 0; i < factors.size(); ++i) dc[i] = factors[i]->mul(da[i], db[i]);
      mul[std::size_t(a) * n + b] = int32_t(detail::mixed_encode(dc, radixes));
    }
  }
  std::vector<int> dz(factors.size()), d1(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    dz[i] = factors[i]->zero;
    d1[i] = factors[i]->one;
  }
  const int zero = detail::mixed_encode(dz, radixes);
  const int one = detail::mixed_encode(d1, radixes);
  tag->zero = zero;
  return detail::build_validated(n, std::move(add), std::move(mul), zero, one, tag);
}

namespace detail {

// Shared builder for full and upper-triangular matrix rings over a base
// ring. Positions lists the stored (row, col) entries row-major.
inline Ring matrix_like(const Ring& base, int k, bool triangular, int order_cap) {
  const std::string who = triangular ? "upper_triangular" : "matrix";
  if (k < 1) throw RingError(who + ": size must be >= 1");
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < k; ++i)
    for (int j = triangular ? i : 0; j < k; ++j) pos.emplace_back(i, j);
  long long order = 1;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    order *= base->order;
    check_order_cap(order, order_cap, who + "(" + base->name() + "," + std::to_string(k) + ")");
  }
  const int n = int(order);
  std::vector<int> radixes(pos.size(), base->order);

  auto at = [&](const std::vector<int>& digits, int i, int j) -> int {
    // entry (i, j) of the k x k matrix; absent positions are base zero
    for (std::size_t p = 0; p < pos.size(); ++p)
      if (pos[p].first == i && pos[p].second == j) return digits[p];
    return base->zero;
  };

  std::vector<int32_t> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  std::vector<int> da, db, dc(pos.size());
  for (int a = 0; a < n; ++a) {
    da = mixed_decode(a, radixes);
    for (int b = 0; b < n; ++b) {
      db = mixed_decode(b, radixes);
      for (std::size_t p = 0; p < pos.size(); ++p) dc[p] = base->add(da[p], db[p]);
      add[std::size_t(a) * n + b] = int32_t(mixed_encode(dc, radixes));
      for (std::size_t p = 0; p < pos.size(); ++p) {
        const auto [i, j] = pos[p];
        int acc = base->zero;
        for (int l = 0; l < k; ++l) acc = base->add(acc, base->mul(at(da, i, l), at(db, l, j)));
        dc[p] = acc;
      }
      mul[std::size_t(a) * n + b] = int32_t(mixed_encode(dc, radixes));
    }
  }

  std::vector<int> dz(pos.size(), base->zero), d1(pos.size());
  for (std::size_t p = 0; p < pos.size(); ++p)
    d1[p] = (pos[p].first == pos[p].second) ? base->one : base->zero;
  const int zero = mixed_encode(dz, radixes);
  const int one = mixed_encode(d1, radixes);

  auto tag = std::make_shared<Tag>();
  tag->kind = triangular ? Tag::Kind::Triangular : Tag::Kind::Matrix;
  tag->order = n;
  tag->zero = zero;
  tag->dim = k;
  tag->base = base->tag;
  tag->name = who + "(" + base->name() + "," + std::to_string(k) + ")";
  return build_validated(n, std::move(add), std::move(mul), zero, one, std::move(tag));
}

}  // namespace detail

inline Ring upper_triangular(const Ring& base, int k, int order_cap = kDefaultOrderCap) {
  return detail::matrix_like(base, k, true, order_cap);
}

inline Ring matrix_ring(const Ring& base, int k, int order_cap = kDefaultOrderCap) {
  return detail::matrix_like(base, k, false, order_cap);
}

// Smallest subset containing seed that is an additive subgroup closed
// under the multiplications the sidedness permits. Worklist closure.
enum class Sidedness { TwoSided, Right, Left };

inline const char* to_string(Sidedness s) {
  switch (s) {
    case Sidedness::TwoSided: return "two-sided";
    case Sidedness::Right: return "right";
    default: return "left";
  }
}

inline Bitset close_under(const FiniteRing& R, const Bitset& seed, Sidedness s) {
  Bitset members(R.order);
  std::vector<int> list;
  auto push = [&](int x) {
    if (!members.test(std::size_t(x))) {
      members.set(std::size_t(x));
      list.push_back(x);
    }
  };
  push(R.zero);
  for (auto i = seed.find_first(); i != Bitset::npos; i = seed.find_next(i)) push(int(i));
  for (std::size_t head = 0; head < list.size(); ++head) {
    const int x = list[head];
    for (std::size_t j = 0; j <= head; ++j) push(R.add(x, list[j]));
    for (int r = 0; r < R.order; ++r) {
      if (s != Sidedness::Right) push(R.mul(r, x));
      if (s != Sidedness::Left) push(R.mul(x, r));
    }
  }
  return members;
}

inline Bitset principal_members(const FiniteRing& R, int a, Sidedness s) {
  Bitset seed(R.order);
  seed.set(std::size_t(a));
  return close_under(R, seed, s);
}

// RuR = R
inline bool is_full(const FiniteRing& R, int u) {
  return principal_members(R, u, Sidedness::TwoSided).count() == std::size_t(R.order);
}

inline std::vector<int> units(const FiniteRing& R) {
  std::vector<int> out;
  for (int a = 0; a < R.order; ++a)
    if (R.is_unit(a)) out.push_back(a);
  return out;
}

inline std::vector<int> idempotents(const FiniteRing& R) {
  std::vector<int> out;
  for (int e = 0; e < R.order; ++e)
    if (R.mul(e, e) == e) out.push_back(e);
  return out;
}

inline bool is_abelian(const FiniteRing& R) {
  for (int e : idempotents(R))
    for (int r = 0; r < R.order; ++r)
      if (R.mul(e, r) != R.mul(r, e)) return false;
  return true;
}

inline bool is_commutative(const FiniteRing& R) { return R.commutative; }

// Quotient by a two-sided ideal given as a membership set. Coset
// representatives are the minimal element index per coset.
inline std::pair<Ring, std::vector<int>> quotient(const Ring& R, const Bitset& members) {
  const FiniteRing& B = *R;
  const int n = B.order;
  if (int(members.size()) != n) throw RingError("quotient: ideal membership set has wrong size");
  if (!members.test(std::size_t(B.zero))) throw RingError("quotient: ideal does not contain 0");
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i)) {
    const int x = int(i);
    for (auto j = members.find_first(); j != Bitset::npos; j = members.find_next(j))
      if (!members.test(std::size_t(B.add(x, int(j)))))
        throw RingError("quotient: set not closed under addition at " + detail::pair_str(x, int(j)));
    for (int r = 0; r < n; ++r) {
      if (!members.test(std::size_t(B.mul(r, x))))
        throw RingError("quotient: set not closed under left multiplication at " +
                        detail::pair_str(r, x));
      if (!members.test(std::size_t(B.mul(x, r))))
        throw RingError("quotient: set not closed under right multiplication at " +
                        detail::pair_str(x, r));
    }
  }

  std::vector<int32_t> rep_of(n, -1);
  for (int x = 0; x < n; ++x) {
    int best = x;
    for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i))
      best = std::min(best, B.add(x, int(i)));
    rep_of[x] = best;
  }
  std::vector<int32_t> reps;
  for (int x = 0; x < n; ++x)
    if (rep_of[x] == x) reps.push_back(x);
  const int q = int(reps.size());
  if (std::size_t(q) * members.count() != std::size_t(n))
    throw InternalError("quotient: cosets do not partition the ring");

  std::vector<int32_t> proj(n, -1);
  for (int x = 0; x < n; ++x)
    proj[x] = int32_t(std::lower_bound(reps.begin(), reps.end(), rep_of[x]) - reps.begin());

  std::vector<int32_t> add(std::size_t(q) * q), mul(std::size_t(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      add[std::size_t(a) * q + b] = proj[B.add(reps[a], reps[b])];
      mul[std::size_t(a) * q + b] = proj[B.mul(reps[a], reps[b])];
    }

  auto tag = std::make_shared<Tag>();
  tag->kind = Tag::Kind::Quotient;
  tag->order = q;
  tag->base = B.tag;
  tag->reps = reps;
  tag->proj = proj;
  {
    std::string m = "{";
    bool first = true;
    for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i)) {
      if (!first) m += ",";
      m += std::to_string(int(i));
      first = false;
    }
    m += "}";
    tag->name = "quotient(" + B.name() + "," + m + ")";
  }
  tag->zero = proj[B.zero];
  Ring Q = detail::build_validated(q, std::move(add), std::move(mul), proj[B.zero], proj[B.one], tag);

  // The projection must be a surjective ring homomorphism.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (proj[B.add(x, y)] != Q->add(proj[x], proj[y]))
        throw InternalError("quotient projection does not preserve addition");
      if (proj[B.mul(x, y)] != Q->mul(proj[x], proj[y]))
        throw InternalError("quotient projection does not preserve multiplication");
    }
  return {Q, std::vector<int>(proj.begin(), proj.end())};
}

// ---------------------------------------------------------------------------
// Element literals.
//   zn          decimal residue
//   product     (a,b,...)
//   matrix      row-major [[...],[...]]  (triangular shown as full matrix)
//   tables      decimal index
//   quotient    literal of the minimal coset representative in the base
// ---------------------------------------------------------------------------

inline std::string element_literal(const Tag& t, int index);

namespace detail {

inline std::vector<int> tag_radixes(const Tag& t) {
  std::vector<int> r;
  if (t.kind == Tag::Kind::Product) {
    for (const auto& f : t.factors) r.push_back(f->order);
  } else {
    const int k = t.dim;
    const int m = (t.kind == Tag::Kind::Triangular) ? k * (k + 1) / 2 : k * k;
    r.assign(std::size_t(m), t.base->order);
  }
  return r;
}

}  // namespace detail

inline std::string element_literal(const Tag& t, int index) {
  switch (t.kind) {
    case Tag::Kind::Zn:
    case Tag::Kind::Tables:
      return std::to_string(index);
    case Tag::Kind::Product: {
      auto d = detail::mixed_decode(index, detail::tag_radixes(t));
      std::string out = "(";
      for (std::size_t i = 0; i < d.size(); ++i) {
        out += element_literal(*t.factors[i], d[i]);
        out += (i + 1 < d.size()) ? "," : ")";
      }
      return out;
    }
    case Tag::Kind::Matrix:
    case Tag::Kind::Triangular: {
      auto d = detail::mixed_decode(index, detail::tag_radixes(t));
      const int k = t.dim;
      std::string out = "[";
      std::size_t p = 0;
      for (int i = 0; i < k; ++i) {
        out += "[";
        for (int j = 0; j < k; ++j) {
          int digit;
          if (t.kind == Tag::Kind::Triangular)
            digit = (j >= i) ? d[p] : t.base->zero;
          else
            digit = d[p];
          if (t.kind != Tag::Kind::Triangular || j >= i) ++p;
          out += element_literal(*t.base, digit);
          out += (j + 1 < k) ? "," : "]";
        }
        out += (i + 1 < k) ? "," : "]";
      }
      return out;
    }
    case Tag::Kind::Quotient:
      return element_literal(*t.base, t.reps[index]);
  }
  throw InternalError("unreachable tag kind");
}

inline std::string element_literal(const FiniteRing& R, int index) {
  if (index < 0 || index >= R.order)
    throw RingError("element index out of range for " + R.name());
  return element_literal(*R.tag, index);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Splits on top-level commas, respecting () and [] nesting.
inline std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

inline long long parse_int(std::string_view s, const std::string& what) {
  s = trim(s);
  if (s.empty()) throw RingError("empty " + what);
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw RingError("malformed " + what + " '" + std::string(s) + "'");
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw RingError("malformed " + what + " '" + std::string(s) + "'");
    v = v * 10 + (s[i] - '0');
    if (v > (1LL << 40)) throw RingError(what + " out of range '" + std::string(s) + "'");
  }
  return (s[0] == '-') ? -v : v;
}

}  // namespace detail

inline int parse_element(const Tag& t, std::string_view lit) {
  lit = detail::trim(lit);
  switch (t.kind) {
    case Tag::Kind::Zn: {
      long long v = detail::parse_int(lit, "residue");
      long long m = t.modulus;
      return int(((v % m) + m) % m);
    }
    case Tag::Kind::Tables: {
      long long v = detail::parse_int(lit, "element index");
      if (v < 0 || v >= t.order)
        throw RingError("element index " + std::string(lit) + " out of range for " + t.name);
      return int(v);
    }
    case Tag::Kind::Product: {
      if (lit.size() < 2 || lit.front() != '(' || lit.back() != ')')
        throw RingError("product literal must be (a,b,...): '" + std::string(lit) + "'");
      auto parts = detail::split_top(lit.substr(1, lit.size() - 2));
      if (parts.size() != t.factors.size())
        throw RingError("product literal has " + std::to_string(parts.size()) + " components, expected " +
                        std::to_string(t.factors.size()));
      std::vector<int> d(parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i) d[i] = parse_element(*t.factors[i], parts[i]);
      return detail::mixed_encode(d, detail::tag_radixes(t));
    }
    case Tag::Kind::Matrix:
    case Tag::Kind::Triangular: {
      if (lit.size() < 2 || lit.front() != '[' || lit.back() != ']')
        throw RingError("matrix literal must be [[...],[...]]: '" + std::string(lit) + "'");
      auto rows = detail::split_top(lit.substr(1, lit.size() - 2));
      const int k = t.dim;
      if (int(rows.size()) != k)
        throw RingError("matrix literal has " + std::to_string(rows.size()) + " rows, expected " +
                        std::to_string(k));
      std::vector<int> digits;
      for (int i = 0; i < k; ++i) {
        auto row = detail::trim(rows[i]);
        if (row.size() < 2 || row.front() != '[' || row.back() != ']')
          throw RingError("matrix row must be [...]: '" + std::string(row) + "'");
        auto entries = detail::split_top(row.substr(1, row.size() - 2));
        if (int(entries.size()) != k)
          throw RingError("matrix row has " + std::to_string(entries.size()) + " entries, expected " +
                          std::to_string(k));
        for (int j = 0; j < k; ++j) {
          const int v = parse_element(*t.base, entries[j]);
          if (t.kind == Tag::Kind::Triangular && j < i) {
            if (v != t.base->zero)
              throw RingError("below-diagonal entry must be zero in upper-triangular literal");
          } else {
            digits.push_back(v);
          }
        }
      }
      return detail::mixed_encode(digits, detail::tag_radixes(t));
    }
    case Tag::Kind::Quotient: {
      const int b = parse_element(*t.base, lit);
      return t.proj[b];
    }
  }
  throw InternalError("unreachable tag kind");
}

inline int parse_element(const FiniteRing& R, std::string_view lit) {
  return parse_element(*R.tag, lit);
}

}  // namespace feck
