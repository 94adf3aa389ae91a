// feck -- classify finite rings and semilocal subrings of Q, extract
// clean/feckly witnesses, dump spectra and ideal lattices, and run the
// theorem harness over single rings or corpora.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed (bug
// signal), 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "feck/atlas.hpp"
#include "feck/classify.hpp"
#include "feck/cleanness.hpp"
#include "feck/ringspec.hpp"
#include "feck/spectra.hpp"
#include "feck/theorems.hpp"
#include "feck/zlocal.hpp"

namespace {

using feck::Json;

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitInputError = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw feck::RingError("cannot write to " + out_path);
  out << text;
}

std::string fmt_bool(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "true" : "false";
}

std::string fmt_int(const std::optional<long long>& v) {
  if (!v) return "-";
  return std::to_string(*v);
}

std::string classification_table(const feck::ClassificationRecord& r, double ms) {
  std::string t;
  auto row = [&](const std::string& k, const std::string& v) {
    t += "  " + k;
    t += std::string(k.size() < 18 ? 18 - k.size() : 1, ' ');
    t += v + "\n";
  };
  t += r.ring + "  [" + r.hash + "]\n";
  row("order", fmt_int(r.order));
  row("commutative", fmt_bool(r.commutative));
  row("abelian", fmt_bool(r.abelian));
  row("clean", fmt_bool(r.clean));
  row("feckly clean", fmt_bool(r.feckly_clean));
  row("exchange", fmt_bool(r.exchange));
  row("quasi-duo left", fmt_bool(r.quasi_duo_left));
  row("quasi-duo right", fmt_bool(r.quasi_duo_right));
  row("pi-regular", fmt_bool(r.pi_regular));
  row("gsr", fmt_bool(r.gsr));
  row("pm", fmt_bool(r.pm));
  row("|Max|", fmt_int(r.max_ideals));
  row("|J|", fmt_int(r.jacobson_size));
  row("idempotents", fmt_int(r.idempotents_count));
  row("units", fmt_int(r.units_count));
  row("theorems pass", fmt_bool(r.theorems_pass));
  row("time", std::to_string(ms) + " ms");
  return t;
}

Json witness_json_finite(const feck::Ring& R, const std::string& lit, const std::string& mode) {
  using namespace feck;
  const int a = parse_element(*R, lit);
  CleannessContext ctx(*R);
  Json j;
  j["ring"] = R->name();
  j["element"] = element_literal(*R, a);
  j["mode"] = mode;
  if (mode == "clean") {
    auto w = clean_witness(ctx, a);
    if (!w) {
      j["witness"] = "none";
      j["note"] = "exhaustive search over all " + std::to_string(ctx.idempotent_list.size()) +
                  " idempotents found no decomposition";
      return j;
    }
    validate_clean_witness(*R, *w);
    Json wj;
    wj["e"] = element_literal(*R, w->e);
    wj["u"] = element_literal(*R, w->u);
    j["witness"] = wj;
    j["checks"] = Json::array({Json{{"name", "e*e = e"}, {"ok", true}},
                               Json{{"name", "u has a two-sided inverse"}, {"ok", true}},
                               Json{{"name", "a = e + u"}, {"ok", true}}});
    return j;
  }
  if (mode != "feckly") throw RingError("mode must be clean or feckly");
  auto w = feckly_witness(ctx, a);
  if (!w) {
    j["witness"] = "none";
    j["note"] = "exhaustive search over all " + std::to_string(R->order) +
                " candidate elements e found no decomposition";
    return j;
  }
  validate_feckly_witness(*R, *w);
  Json wj;
  wj["e"] = element_literal(*R, w->e);
  wj["u"] = element_literal(*R, w->u);
  j["witness"] = wj;
  j["checks"] = Json::array({Json{{"name", "a = e + u"}, {"ok", true}},
                             Json{{"name", "RuR = R"}, {"ok", true}},
                             Json{{"name", "eR(1-e) inside J(R)"}, {"ok", true}},
                             Json{{"name", "e^2 - e inside J(R)"}, {"ok", true}}});
  return j;
}

Json witness_json_zlocal(const feck::zlocal::PrimeSet& S, const std::string& lit,
                         const std::string& mode) {
  using namespace feck::zlocal;
  const LocRational x = parse_rational(lit);
  require_member(S, x);
  Json j;
  j["ring"] = "zlocal" + S.label();
  j["element"] = to_string(x);
  j["mode"] = mode;
  if (mode == "clean") {
    for (long long e : {0ll, 1ll}) {
      auto u = sub(x, from_int(e));
      if (is_unit(S, u)) {
        Json wj;
        wj["e"] = std::to_string(e);
        wj["u"] = to_string(u);
        j["witness"] = wj;
        j["checks"] = Json::array({Json{{"name", "e idempotent"}, {"ok", true}},
                                   Json{{"name", "u a unit of Z_S"}, {"ok", true}},
                                   Json{{"name", "x = e + u"}, {"ok", true}}});
        return j;
      }
    }
    j["witness"] = "none";
    j["note"] = "the idempotents of a domain are 0 and 1; neither x nor x-1 is a unit";
    return j;
  }
  if (mode != "feckly") throw feck::RingError("mode must be clean or feckly");
  auto w = feckly_witness(S, x);
  Json wj;
  wj["e"] = w.e.str();
  wj["u"] = to_string(w.u);
  j["witness"] = wj;
  j["checks"] = Json::array({Json{{"name", "x = e + u"}, {"ok", true}},
                             Json{{"name", "u a unit of Z_S"}, {"ok", true}},
                             Json{{"name", "e - e^2 inside J"}, {"ok", true}},
                             Json{{"name", "least nonnegative CRT solution"}, {"ok", true}}});
  return j;
}

Json spectrum_json(const feck::SpectrumSpace& sp, const std::string& ring_name) {
  using namespace feck;
  Json j;
  j["ring"] = ring_name;
  switch (sp.provenance) {
    case SpectrumSpace::Provenance::Max: j["space"] = "max"; break;
    case SpectrumSpace::Provenance::JSpec: j["space"] = "jspec"; break;
    default: j["space"] = "abstract"; break;
  }
  j["points"] = sp.points;
  auto set_to_labels = [&](const Bitset& s) {
    Json arr = Json::array();
    for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
      arr.push_back(sp.points[i]);
    return arr;
  };
  Json closed = Json::array();
  for (const auto& c : sp.closed_family) closed.push_back(set_to_labels(c));
  j["closed_sets"] = closed;
  Json clopen = Json::array();
  for (const auto& c : clopen_sets(sp)) clopen.push_back(set_to_labels(c));
  j["clopen_sets"] = clopen;
  j["discrete"] = is_discrete(sp);
  j["hausdorff"] = is_hausdorff(sp);
  j["normal"] = is_normal(sp);
  j["strongly_zero_dimensional"] = is_strongly_zero_dimensional(sp);
  return j;
}

std::vector<unsigned long long> parse_primes_flag(const std::string& code) {
  std::vector<unsigned long long> primes;
  std::string cur;
  for (char c : code + ",") {
    if (c == ',') {
      if (!cur.empty()) {
        try {
          primes.push_back(std::stoull(cur));
        } catch (const std::exception&) {
          throw feck::RingError("bad prime '" + cur + "' in --primes");
        }
        cur.clear();
      }
    } else {
      cur += c;
    }
  }
  return primes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feck -- cleanness atlas for finite rings and semilocal subrings of Q"};
  app.require_subcommand(1);

  std::string spec_path, out_path, cache_dir, format = "json", mode = "clean";
  std::string element, primes_flag, space = "max", sidedness = "two-sided";
  int jobs = 1, max_order = feck::kDefaultOrderCap;

  auto add_common = [&](CLI::App* cmd, bool with_spec = true) {
    if (with_spec) cmd->add_option("spec", spec_path, "ring spec JSON file")->required();
    cmd->add_option("--max-order", max_order, "order cap for ring constructors");
    cmd->add_option("--out", out_path, "write the report to this path instead of stdout");
  };

  auto* c_classify = app.add_subcommand("classify", "classify one ring");
  add_common(c_classify);
  c_classify->add_option("--format", format, "json|table");
  c_classify->add_option("--cache-dir", cache_dir, "record cache directory")
      ->envname("FECK_CACHE_DIR");

  auto* c_witness = app.add_subcommand("witness", "extract a clean or feckly witness");
  add_common(c_witness);
  c_witness->add_option("--element", element, "element literal")->required();
  c_witness->add_option("--mode", mode, "clean|feckly");

  auto* c_spectrum = app.add_subcommand("spectrum", "dump Max(R) or J-spec(R)");
  add_common(c_spectrum);
  c_spectrum->add_option("--space", space, "max|jspec (ignored for abstract space files)");

  auto* c_ideals = app.add_subcommand("ideals", "dump the ideal lattice");
  add_common(c_ideals);
  c_ideals->add_option("--sidedness", sidedness, "two-sided|right|left");

  auto* c_theorems = app.add_subcommand("theorems", "run the theorem harness on one ring");
  add_common(c_theorems);

  auto* c_atlas = app.add_subcommand("atlas", "classify a corpus of rings");
  add_common(c_atlas);
  c_atlas->add_option("--jobs", jobs, "parallel workers");
  c_atlas->add_option("--format", format, "json|csv");
  c_atlas->add_option("--cache-dir", cache_dir, "record cache directory")
      ->envname("FECK_CACHE_DIR");

  auto* c_zlocal = app.add_subcommand("zlocal", "semilocal subrings of Q");
  c_zlocal->require_subcommand(1);
  auto* z_classify = c_zlocal->add_subcommand("classify", "classify Z_S");
  auto* z_witness = c_zlocal->add_subcommand("witness", "witness for an element of Z_S");
  auto* z_member = c_zlocal->add_subcommand("member", "membership test for a rational");
  for (auto* z : {z_classify, z_witness, z_member}) {
    z->add_option("--primes", primes_flag, "comma-separated prime set, e.g. 2,3")->required();
    z->add_option("--out", out_path, "write the report to this path instead of stdout");
    z->add_option("--max-order", max_order, "order cap for the R/J quotient ring");
  }
  z_witness->add_option("--element", element, "rational literal num/den")->required();
  z_witness->add_option("--mode", mode, "clean|feckly");
  z_member->add_option("--element", element, "rational literal num/den")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (c_classify->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      auto spec = feck::parse_ring_spec(feck::load_json_file(spec_path), max_order);
      feck::ClassificationRecord rec;
      bool cached = false;
      if (!cache_dir.empty()) {
        if (auto hit = feck::detail::cache_load(cache_dir, spec.hash)) {
          rec = *hit;
          cached = true;
        }
      }
      if (!cached) {
        rec = feck::classify_spec(spec);
        if (!cache_dir.empty()) feck::detail::cache_store(cache_dir, spec.hash, rec);
      }
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      if (format == "table") emit(classification_table(rec, ms), out_path);
      else emit(feck::record_to_json(rec).dump(2) + "\n", out_path);
      return (rec.theorems_pass && !*rec.theorems_pass) ? kExitMathFail : kExitOk;
    }

    if (c_witness->parsed()) {
      auto spec = feck::parse_ring_spec(feck::load_json_file(spec_path), max_order);
      Json j = spec.is_zlocal() ? witness_json_zlocal(*spec.primes, element, mode)
                                : witness_json_finite(spec.ring, element, mode);
      emit(j.dump(2) + "\n", out_path);
      return kExitOk;
    }

    if (c_spectrum->parsed()) {
      const Json input = feck::load_json_file(spec_path);
      if (feck::looks_like_abstract_space(input)) {
        emit(spectrum_json(feck::parse_abstract_space(input), "abstract").dump(2) + "\n", out_path);
        return kExitOk;
      }
      auto spec = feck::parse_ring_spec(input, max_order);
      if (spec.is_zlocal())
        throw feck::RingError("spectrum dumps are for finite rings; use zlocal classify");
      feck::SpectrumSpace sp = (space == "jspec") ? feck::j_spectrum(*spec.ring)
                                                  : feck::max_spectrum(*spec.ring);
      emit(spectrum_json(sp, spec.ring->name()).dump(2) + "\n", out_path);
      return kExitOk;
    }

    if (c_ideals->parsed()) {
      auto spec = feck::parse_ring_spec(feck::load_json_file(spec_path), max_order);
      if (spec.is_zlocal())
        throw feck::RingError("ideal lattices are for finite rings; use zlocal classify");
      feck::Sidedness s = feck::Sidedness::TwoSided;
      if (sidedness == "right") s = feck::Sidedness::Right;
      else if (sidedness == "left") s = feck::Sidedness::Left;
      else if (sidedness != "two-sided")
        throw feck::RingError("sidedness must be two-sided, right or left");
      const auto lat = feck::all_ideals(*spec.ring, s);
      Json j;
      j["ring"] = spec.ring->name();
      j["sidedness"] = sidedness;
      j["count"] = lat.ideals.size();
      Json arr = Json::array();
      for (const auto& m : lat.ideals) {
        feck::IdealSet I{spec.ring.get(), s, m};
        Json ji;
        ji["size"] = m.count();
        Json members = Json::array();
        for (auto i = m.find_first(); i != feck::Bitset::npos; i = m.find_next(i))
          members.push_back(feck::element_literal(*spec.ring, int(i)));
        ji["members"] = members;
        arr.push_back(ji);
      }
      j["ideals"] = arr;
      emit(j.dump(2) + "\n", out_path);
      return kExitOk;
    }

    if (c_theorems->parsed()) {
      auto spec = feck::parse_ring_spec(feck::load_json_file(spec_path), max_order);
      if (spec.is_zlocal())
        throw feck::RingError("the theorem harness runs on finite rings; use zlocal classify");
      const auto rep = feck::check_all_theorems(spec.ring);
      emit(feck::theorem_report_to_json(rep).dump(2) + "\n", out_path);
      return rep.pass ? kExitOk : kExitMathFail;
    }

    if (c_atlas->parsed()) {
      feck::AtlasOptions opt;
      opt.jobs = jobs;
      opt.max_order = max_order;
      opt.cache_dir = cache_dir;
      const auto result = feck::run_atlas(feck::load_json_file(spec_path), opt);
      if (format != "json" && format != "csv")
        throw feck::RingError("atlas format must be json or csv");
      emit(feck::render_report(result.rows, format), out_path);
      std::cerr << feck::atlas_summary(result) << "\n";
      return result.ok() ? kExitOk : kExitMathFail;
    }

    if (c_zlocal->parsed()) {
      const auto S = feck::zlocal::make_prime_set(parse_primes_flag(primes_flag));
      if (z_classify->parsed()) {
        const auto c = feck::zlocal::classify(S);
        Json j;
        j["primes"] = S.primes;
        j["is_local"] = c.is_local;
        j["is_clean"] = c.is_clean;
        j["is_feckly_clean"] = c.is_feckly_clean;
        j["is_pm"] = c.is_pm;
        j["max_ideals"] = c.max_ideals;
        if (c.non_clean_witness)
          j["non_clean_witness"] = feck::zlocal::to_string(*c.non_clean_witness);
        try {
          const auto Q = feck::zlocal::quotient_mod_j(S, max_order);
          Json qj;
          qj["order"] = Q->order;
          qj["is_clean_ring"] = feck::is_clean_ring(*Q);
          j["quotient_mod_j"] = qj;
        } catch (const feck::RingError& e) {
          j["quotient_mod_j"] = Json{{"omitted", e.what()}};
        }
        emit(j.dump(2) + "\n", out_path);
        return kExitOk;
      }
      if (z_witness->parsed()) {
        emit(witness_json_zlocal(S, element, mode).dump(2) + "\n", out_path);
        return kExitOk;
      }
      // member
      Json j;
      j["primes"] = S.primes;
      const auto x = feck::zlocal::parse_rational(element);
      j["element"] = feck::zlocal::to_string(x);
      const bool member = feck::zlocal::contains(S, x);
      j["member"] = member;
      if (!member) {
        for (auto p : S.primes)
          if (x.den % p == 0) {
            j["reason"] = "denominator divisible by " + std::to_string(p);
            break;
          }
      }
      emit(j.dump(2) + "\n", out_path);
      return kExitOk;
    }
  } catch (const feck::InternalError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitMathFail;
  } catch (const feck::RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
