// Copyright 2026 The hbsiegel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "hbsiegel/errors.hpp"
#include "hbsiegel/io.hpp"
#include "hbsiegel/modembed.hpp"
#include "hbsiegel/numfield.hpp"
#include "hbsiegel/sampling.hpp"
#include "hbsiegel/symplectic.hpp"
#include "hbsiegel/torsion.hpp"

#ifndef HBSIEGEL_VERSION
#define HBSIEGEL_VERSION "unknown"
#endif

namespace hbsiegel::cli {

namespace {

using io::to_json;

// A trial returns nullopt on success and a witness on failure.
using Trial = std::function<std::optional<json>(Rng&)>;

CheckRecord run_trials(const std::string& name, std::uint64_t stream_seed, std::size_t trials,
                       const Trial& trial) {
  CheckRecord rec{name, true, json::object()};
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(trial_seed(stream_seed, t));
    std::optional<json> witness;
    try {
      witness = trial(rng);
    } catch (const Error& e) {
      witness = json{{"error", errc_name(e.code())}, {"message", e.what()}};
    }
    if (witness) {
      if (failures == 0) {
        (*witness)["trial"] = t;
        rec.data["witness"] = *witness;
      }
      ++failures;
    }
  }
  rec.passed = failures == 0;
  rec.data["trials"] = trials;
  rec.data["failures"] = failures;
  return rec;
}

void require_level(long n, long min) {
  require(n >= min, Errc::LevelTooSmall, "level must be >= " + std::to_string(min));
}

void require_common(const RunConfig& cfg) {
  require(cfg.precision >= 1, Errc::InvalidInput, "precision must be >= 1");
  require(cfg.trials >= 1, Errc::InvalidInput, "trials must be >= 1");
  require_level(cfg.level, 1);
}

json element_pair(const FieldElement& x, const FieldElement& y) { return {{"x", to_json(x)}, {"y", to_json(y)}}; }

}  // namespace

std::size_t Report::failures() const {
  std::size_t k = 0;
  for (const auto& r : records) k += r.passed ? 0 : 1;
  return k;
}

std::string Report::to_jsonl() const {
  std::ostringstream os;
  for (const auto& r : records) {
    json line = {{"check", r.name}, {"status", r.passed ? "pass" : "fail"}, {"data", r.data}};
    os << line.dump() << '\n';
  }
  const std::size_t failed = failures();
  json summary = {{"summary",
                   {{"command", command},
                    {"checks", records.size()},
                    {"passed", records.size() - failed},
                    {"failed", failed},
                    {"status", failed == 0 ? "pass" : "fail"},
                    {"config", config},
                    {"version", HBSIEGEL_VERSION}}}};
  os << summary.dump() << '\n';
  return os.str();
}

json config_echo(const RunConfig& cfg) {
  return {{"field", cfg.field_path.empty() ? cfg.field : json(cfg.field_path)},
          {"level", cfg.level},
          {"precision", cfg.precision},
          {"seed", cfg.seed},
          {"trials", cfg.trials},
          {"budget", cfg.budget},
          {"taus", cfg.taus},
          {"object", cfg.object}};
}

Report cmd_field_info(const RunConfig& cfg) {
  require_common(cfg);
  const NumberField nf = io::field_from_json(cfg.field);
  Report rep{"field-info", {}, config_echo(cfg)};

  auto rows = [](const std::vector<FieldElement>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
  };
  const RealEmbeddingSet emb = real_embeddings(nf, cfg.precision);
  json roots = json::array();
  for (const auto& iv : emb.intervals) roots.push_back(to_json(iv));
  rep.records.push_back({"field",
                         true,
                         {{"degree", nf.degree()},
                          {"minpoly", to_json(nf.minpoly().coeffs())},
                          {"basis", rows(nf.basis())},
                          {"gram", to_json(nf.gram())},
                          {"discriminant", to_string(nf.discriminant())},
                          {"dual_basis", rows(nf.dual_basis())},
                          {"different_basis", rows(nf.different_basis())},
                          {"embeddings", roots}}});

  const EmbeddingData ed = compute_embedding_data(nf, cfg.precision);
  rep.records.push_back({"interval_duality",
                         ed.certified(),
                         {{"precision", ed.emb.precision}, {"product", to_json(ed.duality_product())}}});
  return rep;
}

Report cmd_verify_embedding(const RunConfig& cfg) {
  require_common(cfg);
  require_level(cfg.level, 3);
  const NumberField nf = io::field_from_json(cfg.field);
  const std::size_t g = nf.degree();
  const long n = cfg.level;
  Report rep{"verify-embedding", {}, config_echo(cfg)};
  std::uint64_t stream = 0;
  auto next_stream = [&] { return trial_seed(cfg.seed, stream++); };

  {
    const auto e = nf.basis();
    const auto es = nf.dual_basis();
    CheckRecord rec{"dual_basis_duality", true, json::object()};
    for (std::size_t j = 0; j < g && rec.passed; ++j)
      for (std::size_t k = 0; k < g && rec.passed; ++k)
        if (trace(es[j] * e[k]) != Rational(j == k ? 1 : 0)) {
          rec.passed = false;
          rec.data["witness"] = {{"j", j}, {"k", k}, {"trace", to_string(trace(es[j] * e[k]))}};
        }
    rep.records.push_back(rec);
  }

  {
    const RatMatrix psi = trace_form_gram(nf);
    const bool ok = psi == standard_form(g);
    CheckRecord rec{"trace_form_standard", ok, json::object()};
    if (!ok) rec.data["witness"] = {{"gram", to_json(psi)}};
    rep.records.push_back(rec);
  }

  rep.records.push_back(run_trials("iota_bar_homomorphism", next_stream(), cfg.trials,
                                   [&](Rng& rng) -> std::optional<json> {
                                     const HBMatrix h1 = random_g_prime(nf, rng);
                                     const HBMatrix h2 = random_g_prime(nf, rng);
                                     const GSpElement m = iota_bar(h1 * h2);
                                     const GSpElement m1 = iota_bar(h1);
                                     const GSpElement m2 = iota_bar(h2);
                                     if (m == m1 * m2 && m.nu() == m1.nu() * m2.nu() &&
                                         m1.nu() == h1.det().rational_value())
                                       return std::nullopt;
                                     return json{{"h1", to_json(h1)}, {"h2", to_json(h2)}};
                                   }));

  rep.records.push_back(run_trials("sl_to_sp2g_z", next_stream(), cfg.trials, [&](Rng& rng) -> std::optional<json> {
    const HBMatrix h = random_sl_dmo(nf, rng);
    const GSpElement m = iota_bar(h);
    if (is_integral(m.matrix()) && m.nu() == 1) return std::nullopt;
    return json{{"h", to_json(h)}, {"image", to_json(m)}};
  }));

  rep.records.push_back(
      run_trials("gamma_prime_to_gamma_n", next_stream(), cfg.trials, [&](Rng& rng) -> std::optional<json> {
        const HBMatrix h = random_gamma_prime(nf, n, rng);
        const GSpElement m = iota_bar(h);
        if (gamma_n_check(m.matrix(), n)) return std::nullopt;
        return json{{"h", to_json(h)}, {"image", to_json(m)}};
      }));

  rep.records.push_back(run_trials("equivariance", next_stream(), cfg.trials, [&](Rng& rng) -> std::optional<json> {
    HBMatrix h = rng.uniform(0, 1) == 0 ? random_sl_dmo(nf, rng) : random_g_prime(nf, rng);
    // Negative determinant swaps the half-spaces; compose with diag(-1, 1).
    if (h.det().rational_value() < 0) h = h * HBMatrix(-nf.one(), nf.zero(), nf.zero(), nf.one());
    const HBPoint tau = random_upper_point(nf, rng);
    if (check_equivariance(h, tau)) return std::nullopt;
    return json{{"h", to_json(h)}, {"tau", to_json(tau)}};
  }));

  rep.records.push_back(run_trials("half_space", next_stream(), cfg.trials, [&](Rng& rng) -> std::optional<json> {
    const HBPoint tau = random_upper_point(nf, rng);
    const SiegelPoint z = iota_point(tau);
    if (z.re().is_symmetric() && z.im().is_symmetric() && is_positive_definite(z.im())) return std::nullopt;
    return json{{"tau", to_json(tau)}, {"image", to_json(z)}};
  }));

  const EmbeddingData ed = compute_embedding_data(nf, cfg.precision);
  {
    CheckRecord rec{"interval_duality", ed.certified(), json::object()};
    rec.data["precision"] = ed.emb.precision;
    rec.data["max_width"] = to_string(max_width(ed.duality_product()));
    if (!rec.passed) rec.data["witness"] = {{"product", to_json(ed.duality_product())}};
    rep.records.push_back(rec);
  }

  rep.records.push_back(
      run_trials("interval_conjugation", next_stream(), cfg.trials, [&](Rng& rng) -> std::optional<json> {
        const HBMatrix h = random_g_prime(nf, rng);
        if (encloses(iota_bar_enclosure(ed, h), iota_bar(h).matrix())) return std::nullopt;
        return json{{"h", to_json(h)}};
      }));

  return rep;
}

Report cmd_map(const RunConfig& cfg) {
  require_common(cfg);
  const NumberField nf = io::field_from_json(cfg.field);
  Report rep{"map", {}, config_echo(cfg)};
  require(!cfg.input.is_null(), Errc::InvalidInput, "map needs --input");

  // Parse errors are input errors; membership failures become failing records.
  auto membership = [&](const std::string& name, auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      if (e.code() == Errc::InvalidInput || e.code() == Errc::DimensionMismatch) throw;
      rep.records.push_back({name, false, {{"reason", errc_name(e.code())}, {"message", e.what()}}});
    }
  };

  if (cfg.object == "matrix") {
    const HBMatrix h = io::hb_matrix_from_json(nf, cfg.input);
    membership("iota_bar", [&] {
      const GSpElement m = iota_bar(h);
      json data = {{"input", to_json(h)}, {"image", to_json(m)}, {"in_sl_dmo", sl_dm_o_check(h)}};
      if (cfg.level >= 3) data["in_gamma_prime_n"] = gamma_prime_n_check(h, cfg.level);
      rep.records.push_back({"iota_bar", true, data});
    });
  } else if (cfg.object == "point") {
    membership("iota_point", [&] {
      const HBPoint tau = io::hb_point_from_json(nf, cfg.input);
      if (tau.orientation() != Orientation::Upper) throw Error(Errc::NotUpperHalf, "map expects an upper point");
      rep.records.push_back({"iota_point", true, {{"input", to_json(tau)}, {"image", to_json(iota_point(tau))}}});
    });
  } else if (cfg.object == "torsion") {
    membership("transport", [&] {
      const HBTorsionPoint t = io::hb_torsion_from_json(nf, cfg.input);
      const TorsionPoint v = transport(t);
      rep.records.push_back({"transport",
                             v.order() == t.order(),
                             {{"input", to_json(t)}, {"image", to_json(v)}, {"order", t.order()}}});
    });
  } else {
    throw Error(Errc::InvalidInput, "--object must be matrix, point or torsion");
  }
  return rep;
}

Report cmd_torsion_suite(const RunConfig& cfg) {
  require_common(cfg);
  const NumberField nf = io::field_from_json(cfg.field);
  const std::size_t g = nf.degree();
  const long n = cfg.level;
  Report rep{"torsion-suite", {}, config_echo(cfg)};

  // n^(2g) points, checked against the budget before any enumeration.
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < 2 * g; ++i) {
    if (count > cfg.budget / static_cast<std::uint64_t>(n)) {
      count = cfg.budget + 1;
      break;
    }
    count *= static_cast<std::uint64_t>(n);
  }
  require(count <= cfg.budget, Errc::BudgetExceeded,
          "torsion enumeration of level " + std::to_string(n) + " exceeds budget " + std::to_string(cfg.budget));

  std::uint64_t stream = 0;
  auto next_stream = [&] { return trial_seed(cfg.seed, stream++); };

  // Table: stream the Siegel side, pull each point back and push it forward.
  CheckRecord table{"transport_table", true, json::object()};
  json entries = json::array();
  std::set<TorsionPoint> siegel_side;
  CheckRecord orders{"transport_order", true, json::object()};
  for (const TorsionPoint& v : enumerate_torsion(n, g)) {
    RatVector v1(v.coords().begin(), v.coords().begin() + static_cast<long>(g));
    RatVector v2(v.coords().begin() + static_cast<long>(g), v.coords().end());
    const HBTorsionPoint t = HBTorsionPoint::make(nf.from_dual_coords(v1), nf.from_basis_coords(v2), n);
    const TorsionPoint w = transport(t);
    entries.push_back({{"input", element_pair(t.x(), t.y())}, {"output", to_json(w.coords())}, {"order", w.order()}});
    if (!(w == v) && table.passed) {
      table.passed = false;
      table.data["witness"] = {{"input", to_json(t)}, {"expected", to_json(v)}, {"got", to_json(w)}};
    }
    if (t.order() != w.order() && orders.passed) {
      orders.passed = false;
      orders.data["witness"] = {{"input", to_json(t)}, {"hb_order", t.order()}, {"order", w.order()}};
    }
    siegel_side.insert(v);
  }
  table.data["points"] = entries;
  orders.data["points"] = siegel_side.size();
  rep.records.push_back(table);

  // Bijection: images of an independent enumeration of the HB side.
  {
    const auto hb = enumerate_hb_torsion(nf, n);
    std::set<TorsionPoint> images;
    for (const auto& t : hb) images.insert(transport(t));
    const bool ok = hb.size() == count && images.size() == hb.size() && images == siegel_side;
    rep.records.push_back(
        {"transport_bijection", ok, {{"domain", hb.size()}, {"image", images.size()}, {"expected", count}}});
  }
  rep.records.push_back(orders);

  rep.records.push_back(
      run_trials("transport_additive", next_stream(), cfg.trials, [&](Rng& rng) -> std::optional<json> {
        const HBTorsionPoint a = random_hb_torsion(nf, n, rng);
        const HBTorsionPoint b = random_hb_torsion(nf, n, rng);
        if (transport(a + b) == transport(a) + transport(b)) return std::nullopt;
        return json{{"a", to_json(a)}, {"b", to_json(b)}};
      }));

  {
    CheckRecord rec{"cartesian_transport", true, json::object()};
    const std::uint64_t s = next_stream();
    std::size_t k = 0, failures = 0;
    for (const TorsionPoint& v : enumerate_torsion(n, g)) {
      RatVector v1(v.coords().begin(), v.coords().begin() + static_cast<long>(g));
      RatVector v2(v.coords().begin() + static_cast<long>(g), v.coords().end());
      const HBTorsionPoint t = HBTorsionPoint::make(nf.from_dual_coords(v1), nf.from_basis_coords(v2), n);
      for (std::size_t i = 0; i < cfg.taus; ++i) {
        Rng rng(trial_seed(s, k++));
        const HBPoint tau = random_upper_point(nf, rng);
        if (!check_cartesian_transport(t, tau)) {
          if (failures++ == 0) rec.data["witness"] = {{"point", to_json(t)}, {"tau", to_json(tau)}};
        }
      }
    }
    rec.passed = failures == 0;
    rec.data["checks"] = k;
    rec.data["failures"] = failures;
    rep.records.push_back(rec);
  }

  rep.records.push_back(
      run_trials("lattice_equivariance", next_stream(), cfg.trials, [&](Rng& rng) -> std::optional<json> {
        const HBTorsionPoint t = random_hb_torsion(nf, n, rng);
        const HBMatrix h = random_sl_dmo(nf, rng);
        if (lattice_equivariance(t, h)) return std::nullopt;
        return json{{"point", to_json(t)}, {"h", to_json(h)}};
      }));

  if (n >= 3) {
    rep.records.push_back(
        run_trials("gamma_prime_trivial", next_stream(), cfg.trials, [&](Rng& rng) -> std::optional<json> {
          const HBTorsionPoint t = random_hb_torsion(nf, n, rng);
          const HBMatrix h = random_gamma_prime(nf, n, rng);
          if (act(h, t) == t) return std::nullopt;
          return json{{"point", to_json(t)}, {"h", to_json(h)}};
        }));
  }
  return rep;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for the Hilbert-Siegel modular embedding", "hbsiegel"};
  app.set_version_flag("--version", std::string("hbsiegel ") + HBSIEGEL_VERSION);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string field_path, input_path, json_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", field_path, "field JSON file {minpoly, basis}")->required();
    sub->add_option("--level", cfg.level, "level n")->capture_default_str();
    sub->add_option("--precision", cfg.precision, "interval precision in bits")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "base RNG seed")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "random trials per check")->capture_default_str();
    sub->add_option("--json", json_path, "also write the report to this file");
  };
  CLI::App* info = app.add_subcommand("field-info", "print field data and embeddings");
  CLI::App* verify = app.add_subcommand("verify-embedding", "run the embedding verification suite");
  CLI::App* map = app.add_subcommand("map", "map one matrix, point or torsion point");
  CLI::App* tors = app.add_subcommand("torsion-suite", "exhaustive torsion transport checks");
  for (CLI::App* s : {info, verify, map, tors}) add_common(s);
  map->add_option("--object", cfg.object, "matrix | point | torsion")
      ->required()
      ->check(CLI::IsMember({"matrix", "point", "torsion"}));
  map->add_option("--input", input_path, "JSON file holding the object")->required();
  tors->add_option("--budget", cfg.budget, "maximum number of torsion points")->capture_default_str();
  tors->add_option("--taus", cfg.taus, "points tau per torsion point")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kAllPass;
    }
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    cfg.field_path = field_path;
    cfg.field = io::read_json_file(field_path);
    if (!input_path.empty()) cfg.input = io::read_json_file(input_path);

    Report rep;
    if (*info) rep = cmd_field_info(cfg);
    else if (*verify) rep = cmd_verify_embedding(cfg);
    else if (*map) rep = cmd_map(cfg);
    else rep = cmd_torsion_suite(cfg);

    const std::string text = rep.to_jsonl();
    out << text;
    if (!json_path.empty()) {
      std::ofstream f(json_path, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << json_path << '\n';
        return kInputError;
      }
      f << text;
    }
    return rep.exit_code();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    out << json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}}.dump() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    out << json{{"error", {{"code", "InvalidInput"}, {"message", e.what()}}}}.dump() << '\n';
    return kInputError;
  }
}

}  // namespace hbsiegel::cli
