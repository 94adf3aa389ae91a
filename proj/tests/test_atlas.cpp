#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "feck/atlas.hpp"

using namespace feck;

namespace {

Json tiny_corpus() {
  return Json::parse(R"([
    {"kind":"zn","n":6},
    {"kind":"zn","n":12},
    {"kind":"matrix","base":{"kind":"zn","n":2},"size":2},
    {"kind":"zlocal","primes":[2,3]}
  ])");
}

}  // namespace

TEST_CASE("classification records for known rings") {
  auto rec = classify_spec(parse_ring_spec(Json::parse(R"({"kind":"zn","n":6})")));
  CHECK(rec.kind == "finite");
  CHECK(rec.order == 6);
  CHECK(rec.clean == true);
  CHECK(rec.feckly_clean == true);
  CHECK(rec.commutative == true);
  CHECK(rec.max_ideals == 2);
  CHECK(rec.jacobson_size == 1);
  CHECK(rec.idempotents_count == 4);
  CHECK(rec.units_count == 2);
  CHECK(rec.theorems_pass == true);

  auto tri = classify_spec(parse_ring_spec(
      Json::parse(R"({"kind":"upper_triangular","base":{"kind":"zn","n":4},"size":2})")));
  CHECK(tri.abelian == false);
  CHECK(tri.quasi_duo_right == true);
  CHECK(tri.feckly_clean == true);
  CHECK(tri.theorems_pass == true);

  auto triv = classify_spec(parse_ring_spec(Json::parse(R"({"kind":"zn","n":1})")));
  CHECK(triv.order == 1);
  CHECK(triv.clean == true);
  CHECK(triv.feckly_clean == true);
  CHECK(triv.theorems_pass == true);

  auto z = classify_spec(parse_ring_spec(Json::parse(R"({"kind":"zlocal","primes":[2,3]})")));
  CHECK(z.kind == "zlocal");
  CHECK_FALSE(z.order.has_value());
  CHECK(z.clean == false);
  CHECK(z.feckly_clean == true);
  CHECK(z.pm == false);
  CHECK(z.max_ideals == 2);
  CHECK(z.theorems_pass == true);
}

TEST_CASE("record json round-trip") {
  auto rec = classify_spec(parse_ring_spec(Json::parse(R"({"kind":"zn","n":10})")));
  auto back = record_from_json(record_to_json(rec));
  CHECK(back == rec);
}

TEST_CASE("csv and json encode identical records") {
  AtlasOptions opt;
  auto result = run_atlas(tiny_corpus(), opt);
  REQUIRE(result.rows.size() == 4);

  const auto csv = records_to_csv(result.rows);
  const auto parsed = records_from_csv(csv);
  REQUIRE(parsed.size() == result.rows.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i] == result.rows[i]);
}

TEST_CASE("atlas output is deterministic across jobs settings") {
  AtlasOptions one, four;
  one.jobs = 1;
  four.jobs = 4;
  auto a = run_atlas(tiny_corpus(), one);
  auto b = run_atlas(tiny_corpus(), four);
  CHECK(render_report(a.rows, "json") == render_report(b.rows, "json"));
  CHECK(render_report(a.rows, "csv") == render_report(b.rows, "csv"));
  CHECK(a.ok());
  CHECK(atlas_summary(a) == "atlas: 4 rings, 4 pass, 0 fail, 0 errors");
}

TEST_CASE("atlas records per-row errors without aborting") {
  auto corpus = Json::parse(R"([
    {"kind":"zn","n":6},
    {"kind":"zn","n":0},
    {"kind":"zn","n":8}
  ])");
  auto result = run_atlas(corpus, {});
  REQUIRE(result.rows.size() == 3);
  CHECK_FALSE(result.rows[0].error);
  REQUIRE(result.rows[1].error);
  CHECK(result.rows[2].theorems_pass == true);
  CHECK(result.errors == 1);
  CHECK(result.pass == 2);
  CHECK_FALSE(result.ok());
}

TEST_CASE("empty corpus") {
  auto result = run_atlas(Json::array(), {});
  CHECK(result.rows.empty());
  CHECK(result.ok());
  CHECK(render_report(result.rows, "csv").rfind("schema_version,", 0) == 0);
}

TEST_CASE("cache hits reproduce the exact report bytes") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "feck_cache_test";
  fs::remove_all(dir);

  AtlasOptions opt;
  opt.cache_dir = dir.string();
  auto cold = run_atlas(tiny_corpus(), opt);
  const auto cold_bytes = render_report(cold.rows, "json");

  // cache files exist for the successful rows
  std::size_t files = 0;
  for (auto& e : fs::directory_iterator(dir)) (void)e, ++files;
  CHECK(files == 4);

  auto warm = run_atlas(tiny_corpus(), opt);
  CHECK(render_report(warm.rows, "json") == cold_bytes);

  // and equal to an uncached run
  auto plain = run_atlas(tiny_corpus(), {});
  CHECK(render_report(plain.rows, "json") == cold_bytes);
  fs::remove_all(dir);
}

TEST_CASE("corpus must be an array") {
  CHECK_THROWS_AS(run_atlas(Json::object(), {}), RingError);
}
