// Classification records and their JSON/CSV encodings. Records carry no
// timing data so reports stay byte-identical across runs; timings are a
// presentation concern.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feck/cleanness.hpp"
#include "feck/ringspec.hpp"
#include "feck/theorems.hpp"

namespace feck {

inline constexpr int kRecordSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct ClassificationRecord {
  int schema_version = kRecordSchemaVersion;
  std::string ring;
  std::string hash;
  std::string kind;  // "finite" | "zlocal"
  std::optional<long long> order;
  std::optional<bool> commutative, abelian, clean, feckly_clean, exchange;
  std::optional<bool> quasi_duo_left, quasi_duo_right, pi_regular, gsr, pm;
  std::optional<long long> max_ideals, jacobson_size, idempotents_count, units_count;
  std::optional<bool> theorems_pass;
  std::optional<std::string> error;
};

inline ClassificationRecord classify_finite(const Ring& R, const std::string& hash) {
  ClassificationRecord rec;
  rec.ring = R->name();
  rec.hash = hash;
  rec.kind = "finite";
  rec.order = R->order;
  CleannessContext ctx(*R);
  rec.commutative = is_commutative(*R);
  rec.abelian = is_abelian(*R);
  rec.clean = is_clean_ring(ctx);
  rec.feckly_clean = is_feckly_clean_ring(ctx);
  rec.exchange = is_exchange(ctx);
  rec.quasi_duo_left = is_quasi_duo(*R, Sidedness::Left);
  rec.quasi_duo_right = is_quasi_duo(*R, Sidedness::Right);
  rec.pi_regular = is_pi_regular(*R);
  rec.gsr = is_gsr(*R);
  rec.pm = is_pm(*R);
  rec.max_ideals = (long long)(maximal_ideals(*R).ideals.size());
  rec.jacobson_size = (long long)(ctx.jacobson.size());
  rec.idempotents_count = (long long)(ctx.idempotent_list.size());
  rec.units_count = (long long)(units(*R).size());
  rec.theorems_pass = check_all_theorems(R).pass;
  return rec;
}

inline ClassificationRecord classify_zlocal(const zlocal::PrimeSet& S, const std::string& hash) {
  ClassificationRecord rec;
  rec.ring = "zlocal" + S.label();
  rec.hash = hash;
  rec.kind = "zlocal";
  const auto c = zlocal::classify(S);
  rec.commutative = true;
  rec.abelian = true;
  rec.clean = c.is_clean;
  rec.feckly_clean = c.is_feckly_clean;
  rec.pm = c.is_pm;
  rec.max_ideals = (long long)(c.max_ideals.size());
  rec.idempotents_count = 2;  // Z_S is a domain
  // T5.6 consistency stands in for the finite-ring harness
  rec.theorems_pass = (c.is_clean == (c.is_feckly_clean && c.is_pm));
  return rec;
}

inline ClassificationRecord classify_spec(const ParsedSpec& spec) {
  return spec.is_zlocal() ? classify_zlocal(*spec.primes, spec.hash)
                          : classify_finite(spec.ring, spec.hash);
}

// --------------------------------------------------------------------------
// JSON encoding. Optionals serialize as null; nlohmann emits keys sorted.
// --------------------------------------------------------------------------

namespace detail {

template <typename T>
inline Json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

template <typename T>
inline std::optional<T> opt_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

}  // namespace detail

inline Json record_to_json(const ClassificationRecord& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["ring"] = r.ring;
  j["hash"] = r.hash;
  j["kind"] = r.kind;
  j["order"] = detail::opt_json(r.order);
  j["commutative"] = detail::opt_json(r.commutative);
  j["abelian"] = detail::opt_json(r.abelian);
  j["clean"] = detail::opt_json(r.clean);
  j["feckly_clean"] = detail::opt_json(r.feckly_clean);
  j["exchange"] = detail::opt_json(r.exchange);
  j["quasi_duo_left"] = detail::opt_json(r.quasi_duo_left);
  j["quasi_duo_right"] = detail::opt_json(r.quasi_duo_right);
  j["pi_regular"] = detail::opt_json(r.pi_regular);
  j["gsr"] = detail::opt_json(r.gsr);
  j["pm"] = detail::opt_json(r.pm);
  j["max_ideals"] = detail::opt_json(r.max_ideals);
  j["jacobson_size"] = detail::opt_json(r.jacobson_size);
  j["idempotents"] = detail::opt_json(r.idempotents_count);
  j["units"] = detail::opt_json(r.units_count);
  j["theorems_pass"] = detail::opt_json(r.theorems_pass);
  j["error"] = detail::opt_json(r.error);
  return j;
}

inline ClassificationRecord record_from_json(const Json& j) {
  ClassificationRecord r;
  r.schema_version = j.at("schema_version").get<int>();
  r.ring = j.at("ring").get<std::string>();
  r.hash = j.at("hash").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.order = detail::opt_from_json<long long>(j, "order");
  r.commutative = detail::opt_from_json<bool>(j, "commutative");
  r.abelian = detail::opt_from_json<bool>(j, "abelian");
  r.clean = detail::opt_from_json<bool>(j, "clean");
  r.feckly_clean = detail::opt_from_json<bool>(j, "feckly_clean");
  r.exchange = detail::opt_from_json<bool>(j, "exchange");
  r.quasi_duo_left = detail::opt_from_json<bool>(j, "quasi_duo_left");
  r.quasi_duo_right = detail::opt_from_json<bool>(j, "quasi_duo_right");
  r.pi_regular = detail::opt_from_json<bool>(j, "pi_regular");
  r.gsr = detail::opt_from_json<bool>(j, "gsr");
  r.pm = detail::opt_from_json<bool>(j, "pm");
  r.max_ideals = detail::opt_from_json<long long>(j, "max_ideals");
  r.jacobson_size = detail::opt_from_json<long long>(j, "jacobson_size");
  r.idempotents_count = detail::opt_from_json<long long>(j, "idempotents");
  r.units_count = detail::opt_from_json<long long>(j, "units");
  r.theorems_pass = detail::opt_from_json<bool>(j, "theorems_pass");
  r.error = detail::opt_from_json<std::string>(j, "error");
  return r;
}

inline bool operator==(const ClassificationRecord& a, const ClassificationRecord& b) {
  return record_to_json(a) == record_to_json(b);
}

// --------------------------------------------------------------------------
// CSV encoding: same fields, fixed column order, RFC-style quoting.
// --------------------------------------------------------------------------

inline const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "schema_version", "ring",          "hash",           "kind",       "order",
      "commutative",    "abelian",       "clean",          "feckly_clean", "exchange",
      "quasi_duo_left", "quasi_duo_right", "pi_regular",   "gsr",        "pm",
      "max_ideals",     "jacobson_size", "idempotents",    "units",      "theorems_pass",
      "error"};
  return cols;
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return csv_escape(v.get<std::string>());
  return v.dump();
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline std::string records_to_csv(const std::vector<ClassificationRecord>& recs) {
  std::string out;
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out += cols[i];
    out += (i + 1 < cols.size()) ? "," : "\n";
  }
  for (const auto& r : recs) {
    const Json j = record_to_json(r);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out += detail::cell(j.at(cols[i]));
      out += (i + 1 < cols.size()) ? "," : "\n";
    }
  }
  return out;
}

inline std::vector<ClassificationRecord> records_from_csv(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  if (lines.empty()) throw RingError("empty CSV report");
  const auto header = detail::split_csv_line(lines[0]);
  if (header != csv_columns()) throw RingError("unexpected CSV header");
  std::vector<ClassificationRecord> out;
  const auto& cols = csv_columns();
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (lines[li].empty()) continue;
    const auto cells = detail::split_csv_line(lines[li]);
    if (cells.size() != cols.size()) throw RingError("CSV row has wrong number of cells");
    Json j;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::string& col = cols[i];
      const std::string& cell = cells[i];
      if (col == "ring" || col == "hash" || col == "kind") {
        j[col] = cell;
      } else if (col == "error") {
        if (cell.empty()) j[col] = nullptr;
        else j[col] = cell;
      } else if (col == "schema_version") {
        j[col] = std::stoll(cell);
      } else if (col == "order" || col == "max_ideals" || col == "jacobson_size" ||
                 col == "idempotents" || col == "units") {
        if (cell.empty()) j[col] = nullptr;
        else j[col] = std::stoll(cell);
      } else {  // boolean flags
        if (cell.empty()) j[col] = nullptr;
        else if (cell == "true") j[col] = true;
        else if (cell == "false") j[col] = false;
        else throw RingError("bad boolean cell '" + cell + "' in CSV");
      }
    }
    out.push_back(record_from_json(j));
  }
  return out;
}

// TheoremReport external JSON form.
inline Json theorem_report_to_json(const TheoremReport& rep) {
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json je;
    je["name"] = e.name;
    je["hypothesis"] = e.hypothesis;
    je["holds"] = e.holds;
    je["detail"] = e.detail;
    entries.push_back(je);
  }
  Json j;
  j["ring"] = rep.ring;
  j["entries"] = entries;
  j["pass"] = rep.pass;
  return j;
}

}  // namespace feck
