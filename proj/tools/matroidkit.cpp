// Copyright 2026 The MatroidKit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// matroidkit command line: intersect, packcov, orient, wave, brute, fuzz,
// check. Results go to stdout as JSON, errors to stderr as JSON.
//
// Exit codes: 0 verified success, 1 verified negative verdict, 2 input
// error, 3 internal failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matroidkit/matroidkit.hpp"

namespace mk = matroidkit;
using mk::Json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mk::Error(mk::Errc::parse_error, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// FNV-1a over the raw input bytes; only used to tag results with their inputs.
std::string digest(const std::vector<std::string>& paths) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& p : paths) {
    for (unsigned char c : read_text(p)) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json run_result(const std::string& sub, const std::vector<std::string>& inputs) {
  return Json{{"subcommand", sub}, {"inputs", {{"files", inputs}, {"fnv1a64", digest(inputs)}}}};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailed(what);
}

Json telemetry_of(const mk::MixedTelemetry& t) {
  return Json{{"augmentations", t.augmentations}, {"repairs", t.repairs},
              {"extensions", t.extensions},       {"key_steps", t.key_steps},
              {"key_iterations", t.key_iterations}, {"max_key_iterations", t.max_key_iterations}};
}

// intersect ------------------------------------------------------------------

struct IntersectArgs {
  std::string m, n, solver = "classic", e1, trace;
  bool no_verify = false;
};

int run_intersect(const IntersectArgs& a) {
  const mk::Matroid m = mk::parse_matroid(mk::read_json_file(a.m));
  const mk::Matroid n = mk::parse_partner(m, mk::read_json_file(a.n));
  const mk::PairContext ctx(m, n);
  std::vector<std::string> inputs{a.m, a.n};
  Json trace = Json::array();
  Json telemetry;
  mk::IntersectionCertificate cert;
  if (a.solver == "classic") {
    if (!a.e1.empty()) throw mk::Error(mk::Errc::parse_error, "--e1 needs --solver mixed");
    const mk::EdmondsResult r = mk::edmonds_run(ctx, ctx.empty_set());
    cert = r.certificate;
    mk::ElementSet i = ctx.empty_set();
    for (const auto& p : r.paths) {
      const mk::ElementSet next = i ^ mk::path_set(ctx.capacity(), p);
      Json path = Json::array();
      for (mk::Element x : p) path.push_back(m.labels().label(x));
      trace.push_back({{"kind", "augment"}, {"before", mk::emit_set(m, i)},
                       {"path", std::move(path)}, {"after", mk::emit_set(m, next)}});
      i = next;
    }
    telemetry = Json{{"augmentations", r.paths.size()}};
  } else if (a.solver == "mixed") {
    mk::ElementSet e1 = ctx.empty_set();
    if (!a.e1.empty()) {
      e1 = mk::parse_set(n, mk::read_json_file(a.e1));
      inputs.push_back(a.e1);
    }
    const mk::MixedResult r = mk::mixed_run(m, mk::make_split(n, e1), !a.trace.empty());
    cert = r.certificate;
    for (const auto& ev : r.trace) {
      Json path = Json::array();
      for (mk::Element x : ev.path) path.push_back(m.labels().label(x));
      trace.push_back({{"kind", mk::trace_kind_name(ev.kind)}, {"before", mk::emit_set(m, ev.before)},
                       {"path", std::move(path)}, {"after", mk::emit_set(m, ev.after)},
                       {"added", mk::emit_set(m, ev.added)}});
    }
    telemetry = telemetry_of(r.telemetry);
    telemetry["wave_size"] = r.wave.set.size();
    telemetry["wave_rounds"] = r.wave.steps;
  } else {
    throw mk::Error(mk::Errc::parse_error, "unknown solver '" + a.solver + "'");
  }

  Json out = run_result("intersect", inputs);
  out["solver"] = a.solver;
  out["certificate"] = mk::emit_certificate(m, cert);
  out["telemetry"] = telemetry;
  out["verified"] = !a.no_verify;
  if (!a.no_verify) {
    Json v{{"certificate_valid", mk::verify_certificate(ctx, cert)},
           {"common_independent", ctx.common_independent(cert.common)},
           {"I_M_spans_E_M", mk::spans(m, cert.m_part(), cert.m_side)},
           {"I_N_spans_E_N", mk::spans(n, cert.n_part(), cert.n_side)},
           {"minmax_value", m.rank(cert.m_side) + n.rank(cert.n_side)}};
    if (ctx.ground().size() <= mk::exhaustive_bound(16)) {
      v["brute_max_common"] = mk::brute_max_common(m, n).size;
    }
    out["verification"] = v;
    require(v["certificate_valid"].get<bool>(), "intersection certificate failed verification");
    require(v["minmax_value"].get<std::size_t>() == cert.common.size(), "min-max values differ");
    if (v.contains("brute_max_common")) {
      require(v["brute_max_common"].get<std::size_t>() == cert.common.size(),
              "certificate size differs from brute force");
    }
  }
  if (!a.trace.empty()) {
    std::ofstream(a.trace) << Json{{"events", trace}, {"solver", a.solver}}.dump(2) << '\n';
  }
  emit(out);
  return kOk;
}

// packcov --------------------------------------------------------------------

struct PackCovArgs {
  std::string family, solver = "classic";
  std::vector<std::size_t> cofinitary;
  bool no_verify = false;
};

int run_packcov(const PackCovArgs& a) {
  const mk::MatroidFamily fam = mk::parse_family(mk::read_json_file(a.family));
  mk::PackCovOptions opt;
  if (a.solver == "mixed") {
    opt.solver = mk::SolverKind::mixed;
  } else if (a.solver != "classic") {
    throw mk::Error(mk::Errc::parse_error, "unknown solver '" + a.solver + "'");
  }
  opt.cofinitary = a.cofinitary;
  const mk::PackCovResult r = mk::packcov_solve(fam, opt);
  Json out = run_result("packcov", {a.family});
  out["solver"] = a.solver;
  out["result"] = mk::emit_packcov(fam, r);
  out["verified"] = !a.no_verify;
  if (!a.no_verify) {
    Json v{{"packcov_valid", mk::verify_packcov(fam, r)},
           {"slackness", mk::slackness_holds(fam, r)},
           {"value", mk::packcov_value(fam, r)}};
    if (fam.ground().size() <= mk::exhaustive_bound(10)) {
      v["brute_union_rank"] = mk::brute_union_rank(fam);
    }
    out["verification"] = v;
    require(v["packcov_valid"].get<bool>() && v["slackness"].get<bool>(),
            "packing/covering failed verification");
    if (v.contains("brute_union_rank")) {
      require(v["brute_union_rank"] == v["value"], "rank formula differs from brute force");
    }
  }
  emit(out);
  return kOk;
}

// orient ---------------------------------------------------------------------

struct OrientArgs {
  std::string graph, demands, solver = "classic";
  bool no_verify = false;
};

int run_orient(const OrientArgs& a) {
  mk::DemandGraph g = mk::parse_graph(mk::read_json_file(a.graph));
  mk::parse_demands(g, mk::read_json_file(a.demands));
  std::vector<std::string> dropped;
  g = mk::normalize(std::move(g), &dropped);
  for (const auto& label : dropped) {
    std::cerr << Json{{"warning", {{"message", "self-loop dropped"}, {"edge", label}}}}.dump()
              << '\n';
  }
  mk::SolverKind solver = mk::SolverKind::classic;
  if (a.solver == "mixed") {
    solver = mk::SolverKind::mixed;
  } else if (a.solver != "classic") {
    throw mk::Error(mk::Errc::parse_error, "unknown solver '" + a.solver + "'");
  }
  const mk::OrientationOutcome o = mk::orient_solve(g, solver);
  Json out = mk::emit_outcome(g, o);
  out["subcommand"] = "orient";
  out["inputs"] = run_result("orient", {a.graph, a.demands})["inputs"];
  out["solver"] = a.solver;
  out["dropped_loops"] = dropped;
  out["verified"] = !a.no_verify;
  const bool deficient = o.verdict == mk::OrientationOutcome::Verdict::deficient;
  if (!a.no_verify) {
    Json v{{"outcome_valid", mk::verify_outcome(g, o)}};
    if (g.edges.size() <= mk::exhaustive_bound(14)) {
      v["brute_feasible"] = mk::brute_orientations(g).has_value();
    }
    out["verification"] = v;
    require(v["outcome_valid"].get<bool>(), "orientation outcome failed verification");
    if (deficient) require(out["counting_check"].get<bool>(), "counting check failed");
    if (v.contains("brute_feasible")) {
      require(v["brute_feasible"].get<bool>() == !deficient, "verdict differs from brute force");
    }
  }
  emit(out);
  return deficient ? kNegative : kOk;
}

// wave / brute / check ---------------------------------------------------------

int run_wave(const std::string& mp, const std::string& np) {
  const mk::Matroid m = mk::parse_matroid(mk::read_json_file(mp));
  const mk::Matroid n = mk::parse_partner(m, mk::read_json_file(np));
  const mk::PairContext ctx(m, n);
  const mk::Wave w = mk::largest_wave(ctx);
  const mk::PairContext quotient(mk::contract(m, w.set), mk::delete_set(n, w.set));
  Json out = run_result("wave", {mp, np});
  out["W"] = mk::emit_set(m, w.set);
  out["witness"] = mk::emit_set(m, w.witness);
  out["cond_plus"] = mk::check_cond_plus(ctx);
  out["quotient_cond_plus"] = mk::check_cond_plus(quotient);
  out["verification"] = {{"witness_valid", mk::is_wave_witness(ctx, w.set, w.witness)}};
  require(out["verification"]["witness_valid"].get<bool>(), "wave witness failed verification");
  emit(out);
  return kOk;
}

struct BruteArgs {
  std::string m, n, graph, demands;
};

int run_brute(const BruteArgs& a) {
  Json out{{"subcommand", "brute"}};
  std::vector<std::string> inputs;
  if (!a.m.empty() || !a.n.empty()) {
    if (a.m.empty() || a.n.empty()) throw mk::Error(mk::Errc::parse_error, "--m and --n go together");
    const mk::Matroid m = mk::parse_matroid(mk::read_json_file(a.m));
    const mk::Matroid n = mk::parse_partner(m, mk::read_json_file(a.n));
    const mk::BruteCommon c = mk::brute_max_common(m, n);
    out["max_common"] = {{"size", c.size}, {"witness", mk::emit_set(m, c.witness)}};
    out["minmax"] = mk::brute_minmax(m, n);
    if (m.ground().size() <= mk::exhaustive_bound(10)) {
      out["largest_wave"] = mk::emit_set(m, mk::brute_largest_wave(m, n));
    }
    inputs.insert(inputs.end(), {a.m, a.n});
  }
  if (!a.graph.empty()) {
    mk::DemandGraph g = mk::parse_graph(mk::read_json_file(a.graph));
    if (!a.demands.empty()) mk::parse_demands(g, mk::read_json_file(a.demands));
    g = mk::normalize(std::move(g));
    const auto o = mk::brute_orientations(g);
    Json orientation = nullptr;
    if (o) {
      orientation = Json::object();
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        orientation[g.edges[e].label] = g.vertices[(*o)[e]];
      }
    }
    out["orientation_above_o"] = orientation;
    inputs.push_back(a.graph);
    if (!a.demands.empty()) inputs.push_back(a.demands);
  }
  if (inputs.empty()) throw mk::Error(mk::Errc::parse_error, "brute needs --m/--n or --graph");
  out["inputs"] = run_result("brute", inputs)["inputs"];
  emit(out);
  return kOk;
}

int run_check(const std::string& path) {
  const mk::Matroid m = mk::parse_matroid(mk::read_json_file(path));
  const mk::AxiomReport r = mk::axiom_report(m);
  Json out = run_result("check", {path});
  out["axioms"] = {{"empty_independent", r.empty_independent},
                   {"downward_closed", r.downward_closed},
                   {"augmentation", r.augmentation}};
  out["ok"] = r.ok();
  out["rank"] = m.rank();
  out["size"] = m.ground().size();
  emit(out);
  return r.ok() ? kOk : kNegative;
}

// fuzz -----------------------------------------------------------------------

struct FuzzArgs {
  mk::CorpusSpec spec;
  std::string out;
};

int run_fuzz(const FuzzArgs& a) {
  namespace fs = std::filesystem;
  fs::create_directories(a.out);
  mk::Fuzzer f(a.spec);
  Json files = Json::array();
  auto write = [&](const std::string& name, const Json& doc) {
    std::ofstream(fs::path(a.out) / name) << doc.dump(2) << '\n';
    files.push_back(name);
  };
  char name[64];
  for (std::size_t i = 0; i < a.spec.pairs; ++i) {
    std::snprintf(name, sizeof name, "pair_%05zu.json", i);
    write(name, f.pair());
  }
  for (std::size_t i = 0; i < a.spec.families; ++i) {
    std::snprintf(name, sizeof name, "family_%05zu.json", i);
    write(name, f.family());
  }
  for (std::size_t i = 0; i < a.spec.graphs; ++i) {
    std::snprintf(name, sizeof name, "graph_%05zu.json", i);
    write(name, f.demand_graph());
  }
  Json manifest{{"seed", a.spec.seed},
                {"counts", {{"pairs", a.spec.pairs}, {"families", a.spec.families},
                            {"graphs", a.spec.graphs}}},
                {"bounds", {{"max_elements", a.spec.max_elements},
                            {"max_family", a.spec.max_family},
                            {"family_elements", a.spec.family_elements},
                            {"max_edges", a.spec.max_edges},
                            {"max_depth", a.spec.max_depth}}},
                {"coverage", f.coverage()},
                {"files", files}};
  std::ofstream(fs::path(a.out) / "manifest.json") << manifest.dump(2) << '\n';
  emit(Json{{"subcommand", "fuzz"}, {"manifest", (fs::path(a.out) / "manifest.json").string()},
            {"coverage", f.coverage()}, {"files", files.size()}});
  return kOk;
}

int fail(int code, const std::string& name, const std::string& message) {
  std::cerr << Json{{"error", {{"code", name}, {"message", message}, {"exit", code}}}}.dump()
            << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificate-producing matroid intersection toolkit"};
  app.require_subcommand(1);

  IntersectArgs ia;
  auto* intersect = app.add_subcommand("intersect", "Maximum common independent set with certificate");
  intersect->add_option("--m", ia.m, "Matroid M (JSON expression)")->required();
  intersect->add_option("--n", ia.n, "Matroid N (JSON expression)")->required();
  intersect->add_option("--solver", ia.solver, "classic or mixed");
  intersect->add_option("--e1", ia.e1, "JSON array of E1 labels (mixed solver)");
  intersect->add_option("--trace", ia.trace, "Write the run trace to this file");
  intersect->add_flag("--verify,!--no-verify", [&](std::int64_t c) { ia.no_verify = c < 0; },
                      "Re-check the certificate (default on)");

  PackCovArgs pa;
  auto* packcov = app.add_subcommand("packcov", "Packing/covering decomposition of a family");
  packcov->add_option("--family", pa.family, "Family JSON")->required();
  packcov->add_option("--solver", pa.solver, "classic or mixed");
  packcov->add_option("--cofinitary", pa.cofinitary, "Member indices whose slices form E1");
  packcov->add_flag("--verify,!--no-verify", [&](std::int64_t c) { pa.no_verify = c < 0; },
                    "Re-check the result (default on)");

  OrientArgs oa;
  auto* orient = app.add_subcommand("orient", "Orientation above in-degree demands");
  orient->add_option("--graph", oa.graph, "Graph JSON")->required();
  orient->add_option("--demands", oa.demands, "Demands JSON")->required();
  orient->add_option("--solver", oa.solver, "classic or mixed");
  orient->add_flag("--verify,!--no-verify", [&](std::int64_t c) { oa.no_verify = c < 0; },
                   "Re-check the outcome (default on)");

  std::string wave_m, wave_n;
  auto* wave = app.add_subcommand("wave", "Largest wave of a pair");
  wave->add_option("m", wave_m, "Matroid M")->required();
  wave->add_option("n", wave_n, "Matroid N")->required();

  BruteArgs ba;
  auto* brute = app.add_subcommand("brute", "Exhaustive oracles");
  brute->add_option("--m", ba.m, "Matroid M");
  brute->add_option("--n", ba.n, "Matroid N");
  brute->add_option("--graph", ba.graph, "Graph JSON");
  brute->add_option("--demands", ba.demands, "Demands JSON");

  FuzzArgs fa;
  auto* fuzz = app.add_subcommand("fuzz", "Write a deterministic corpus");
  fuzz->add_option("--seed", fa.spec.seed, "Seed");
  fuzz->add_option("--pairs", fa.spec.pairs, "Number of matroid pairs");
  fuzz->add_option("--families", fa.spec.families, "Number of families");
  fuzz->add_option("--graphs", fa.spec.graphs, "Number of demand graphs");
  fuzz->add_option("--max-elements", fa.spec.max_elements, "Largest pair ground set")
      ->check(CLI::Range(0, 16));
  fuzz->add_option("--max-edges", fa.spec.max_edges, "Largest graph")->check(CLI::Range(0, 32));
  fuzz->add_option("--out", fa.out, "Output directory")->required();

  std::string check_path;
  auto* check = app.add_subcommand("check", "Exhaustive matroid axiom check");
  check->add_option("matroid", check_path, "Matroid JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail(kInputError, "UsageError", e.what());
  }

  try {
    if (*intersect) return run_intersect(ia);
    if (*packcov) return run_packcov(pa);
    if (*orient) return run_orient(oa);
    if (*wave) return run_wave(wave_m, wave_n);
    if (*brute) return run_brute(ba);
    if (*fuzz) return run_fuzz(fa);
    if (*check) return run_check(check_path);
  } catch (const mk::Error& e) {
    return fail(mk::is_internal(e.code()) ? kInternal : kInputError,
                std::string(mk::errc_name(e.code())), e.what());
  } catch (const VerificationFailed& e) {
    return fail(kInternal, "VerificationFailed", e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, "Internal", e.what());
  }
  return kInternal;
}
