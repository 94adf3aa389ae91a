// Batch classification over a corpus of ring specs: bounded parallelism
// with input-order output, optional record cache keyed by spec hash and
// tool version. Reports are byte-identical across runs and jobs
// settings.
#pragma once

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "feck/classify.hpp"
#include "feck/ringspec.hpp"

namespace feck {

struct AtlasOptions {
  int jobs = 1;
  int max_order = kDefaultOrderCap;
  std::string cache_dir;  // empty: caching disabled
};

struct AtlasResult {
  std::vector<ClassificationRecord> rows;  // input order
  int pass = 0;
  int fail = 0;  // theorem harness failed
  int errors = 0;

  bool ok() const { return fail == 0 && errors == 0; }
};

namespace detail {

inline std::string cache_path(const std::string& dir, const std::string& hash) {
  return dir + "/" + hash + "-v" + std::to_string(kRecordSchemaVersion) + "-" + kToolVersion +
         ".json";
}

inline std::optional<ClassificationRecord> cache_load(const std::string& dir,
                                                      const std::string& hash) {
  std::ifstream in(cache_path(dir, hash));
  if (!in) return std::nullopt;
  try {
    return record_from_json(Json::parse(in));
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
}

inline void cache_store(const std::string& dir, const std::string& hash,
                        const ClassificationRecord& rec) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::string final_path = cache_path(dir, hash);
  const std::string tmp_path =
      final_path + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp_path);
    if (!out) return;  // cache is best effort
    out << record_to_json(rec).dump(2) << "\n";
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) std::filesystem::remove(tmp_path, ec);
}

inline ClassificationRecord atlas_row(const Json& spec, const AtlasOptions& opt) {
  const std::string hash = spec_hash(spec);
  if (!opt.cache_dir.empty())
    if (auto hit = cache_load(opt.cache_dir, hash)) return *hit;
  ClassificationRecord rec;
  try {
    rec = classify_spec(parse_ring_spec(spec, opt.max_order));
    if (!opt.cache_dir.empty()) cache_store(opt.cache_dir, hash, rec);
  } catch (const std::exception& e) {
    rec = ClassificationRecord{};
    rec.ring = spec.is_object() && spec.contains("kind") && spec["kind"].is_string()
                   ? spec["kind"].get<std::string>() + " spec"
                   : "invalid spec";
    rec.hash = hash;
    rec.kind = "error";
    rec.error = e.what();
  }
  return rec;
}

}  // namespace detail

inline AtlasResult run_atlas(const Json& corpus, const AtlasOptions& opt = {}) {
  if (!corpus.is_array()) throw RingError("corpus must be a JSON array of ring specs");
  AtlasResult result;
  result.rows.resize(corpus.size());

  const int jobs = std::max(1, opt.jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      result.rows[i] = detail::atlas_row(corpus[i], opt);
    }
  };
  if (jobs == 1 || corpus.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& r : result.rows) {
    if (r.error) ++result.errors;
    else if (r.theorems_pass && *r.theorems_pass) ++result.pass;
    else ++result.fail;
  }
  return result;
}

inline std::string render_report(const std::vector<ClassificationRecord>& rows,
                                 const std::string& format) {
  if (format == "csv") return records_to_csv(rows);
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(record_to_json(r));
    return arr.dump(2) + "\n";
  }
  throw RingError("unknown report format '" + format + "' (expected json or csv)");
}

inline std::string atlas_summary(const AtlasResult& r) {
  return "atlas: " + std::to_string(r.rows.size()) + " rings, " + std::to_string(r.pass) +
         " pass, " + std::to_string(r.fail) + " fail, " + std::to_string(r.errors) + " errors";
}

}  // namespace feck
