// Ring-spec JSON: the constructor AST consumed by the CLI. Also the
// abstract-space JSON format and the content hash used for caching.
#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "feck/ideal.hpp"
#include "feck/ring.hpp"
#include "feck/spectra.hpp"
#include "feck/zlocal.hpp"

namespace feck {

using Json = nlohmann::json;

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// nlohmann keeps object keys sorted, so dump() is canonical under key
// reordering.
inline std::string spec_hash(const Json& j) {
  const std::uint64_t h = fnv1a64(j.dump());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

struct ParsedSpec {
  Ring ring;                               // finite constructors
  std::optional<zlocal::PrimeSet> primes;  // kind "zlocal"
  std::string hash;
  std::string name;

  bool is_zlocal() const { return primes.has_value(); }
};

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw RingError(std::string("ring spec is missing field '") + key + "'");
  return j[key];
}

inline long long int_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_number_integer()) throw RingError(std::string("field '") + key + "' must be an integer");
  return f.get<long long>();
}

inline Ring build_from_spec(const Json& j, int order_cap) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "zn") return zn(int_field(j, "n"), order_cap);
  if (kind == "product") {
    const Json& fs = field(j, "factors");
    if (!fs.is_array() || fs.empty()) throw RingError("product spec needs a nonempty factors array");
    std::vector<Ring> factors;
    for (const auto& f : fs) factors.push_back(build_from_spec(f, order_cap));
    return direct_product(factors, order_cap);
  }
  if (kind == "upper_triangular")
    return upper_triangular(build_from_spec(field(j, "base"), order_cap),
                            int(int_field(j, "size")), order_cap);
  if (kind == "matrix")
    return matrix_ring(build_from_spec(field(j, "base"), order_cap), int(int_field(j, "size")),
                       order_cap);
  if (kind == "quotient") {
    Ring base = build_from_spec(field(j, "base"), order_cap);
    const Json& gens = field(j, "ideal_generators");
    if (!gens.is_array()) throw RingError("quotient spec needs an ideal_generators array");
    Bitset seed(std::size_t(base->order));
    for (const auto& g : gens) {
      if (!g.is_string()) throw RingError("ideal generators must be element literals (strings)");
      seed.set(std::size_t(parse_element(*base, g.get<std::string>())));
    }
    const Bitset members = close_under(*base, seed, Sidedness::TwoSided);
    return quotient(base, members).first;
  }
  if (kind == "tables") {
    const long long order = int_field(j, "order");
    auto read_table = [&](const char* key) {
      const Json& t = field(j, key);
      if (!t.is_array()) throw RingError(std::string("field '") + key + "' must be a table");
      std::vector<std::vector<int>> out;
      for (const auto& row : t) {
        if (!row.is_array()) throw RingError(std::string("field '") + key + "' must be a table of rows");
        std::vector<int> r;
        for (const auto& v : row) {
          if (!v.is_number_integer()) throw RingError("table entries must be integers");
          r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
      }
      return out;
    };
    auto add = read_table("add");
    auto mul = read_table("mul");
    if (static_cast<long long>(add.size()) != order)
      throw RingError("tables spec: add table size differs from order");
    return from_tables(add, mul, int(int_field(j, "zero")), int(int_field(j, "one")), order_cap);
  }
  throw RingError("unknown ring spec kind '" + kind + "'");
}

}  // namespace detail

inline ParsedSpec parse_ring_spec(const Json& j, int order_cap = kDefaultOrderCap) {
  ParsedSpec out;
  out.hash = spec_hash(j);
  try {
    const std::string kind = detail::field(j, "kind").get<std::string>();
    if (kind == "zlocal") {
      const Json& ps = detail::field(j, "primes");
      if (!ps.is_array() || ps.empty()) throw RingError("zlocal spec needs a nonempty primes array");
      std::vector<unsigned long long> primes;
      for (const auto& p : ps) {
        if (!p.is_number_unsigned() && !p.is_number_integer())
          throw RingError("zlocal primes must be integers");
        const long long v = p.get<long long>();
        if (v < 2) throw RingError("zlocal primes must be >= 2");
        primes.push_back((unsigned long long)(v));
      }
      out.primes = zlocal::make_prime_set(std::move(primes));
      out.name = "zlocal" + out.primes->label();
    } else {
      out.ring = detail::build_from_spec(j, order_cap);
      out.name = out.ring->name();
    }
  } catch (const Json::exception& e) {
    throw RingError(std::string("malformed ring spec: ") + e.what());
  }
  return out;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RingError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw RingError("invalid JSON in " + path + ": " + e.what());
  }
}

inline Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw RingError("invalid JSON in " + what + ": " + e.what());
  }
}

// {"points":["x","y","z"],"closed":[[],["x"],...]}
inline SpectrumSpace parse_abstract_space(const Json& j) {
  try {
    const Json& pts = detail::field(j, "points");
    const Json& closed = detail::field(j, "closed");
    if (!pts.is_array() || !closed.is_array())
      throw RingError("abstract space needs points and closed arrays");
    std::vector<std::string> points;
    for (const auto& p : pts) points.push_back(p.get<std::string>());
    std::vector<std::vector<std::string>> family;
    for (const auto& c : closed) {
      if (!c.is_array()) throw RingError("closed sets must be arrays of point labels");
      std::vector<std::string> s;
      for (const auto& p : c) s.push_back(p.get<std::string>());
      family.push_back(std::move(s));
    }
    return abstract_space(std::move(points), family);
  } catch (const Json::exception& e) {
    throw RingError(std::string("malformed abstract space: ") + e.what());
  }
}

inline bool looks_like_abstract_space(const Json& j) {
  return j.is_object() && j.contains("points") && j.contains("closed");
}

}  // namespace feck
