// Command-line front end: file I/O, JSON reporting, run orchestration.
//
// Exit codes: 0 = requested properties hold / reports generated,
//             1 = a checked property fails (witness printed),
//             2 = input or configuration error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "loopkit.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace loopkit;

namespace {

struct Common {
  int threads = 0;
  std::string json_path;
  bool force = false;
};

CheckMode parse_mode(const std::string& s) {
  if (s.empty() || s == "exhaustive") return CheckMode::full();
  if (s.rfind("sampled:", 0) == 0) {
    size_t c = s.find(':', 8);
    if (c == std::string::npos)
      throw error("mode: sampled requires an explicit count and seed (sampled:N:SEED)");
    uint64_t count = std::stoull(s.substr(8, c - 8));
    uint64_t seed = std::stoull(s.substr(c + 1));
    return CheckMode::sampled(count, seed);
  }
  throw error("mode: expected exhaustive or sampled:N:SEED, got \"" + s + "\"");
}

json mode_json(const CheckMode& m) {
  json j;
  j["mode"] = m.exhaustive ? "exhaustive" : "sampled";
  j["samples"] = m.samples;
  j["seed"] = m.seed;
  return j;
}

SelfMap resolve_sigma(const std::string& spec, const LoopTable& q) {
  if (spec == "identity" || spec == "id") return SelfMap::identity(q.order());
  if (spec == "squaring" || spec == "sq") return squaring_map(q);
  return load_map(spec);
}

AutGroup resolve_autgroup(const std::string& spec, const LoopTable& q, int threads) {
  if (spec == "full") return automorphism_group(q, threads);
  if (spec == "trivial") return AutGroup::trivial(q);
  return AutGroup::from_members(load_perms(spec), q);
}

void emit_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write json file: " + path);
  out << j.dump(2) << "\n";
}

std::string witness_str(const std::vector<int>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

json check_result_json(const std::string& identity, const CheckResult& r) {
  json j;
  j["identity"] = identity;
  j["holds"] = r.holds;
  j["witness"] = r.witness;
  j.update(mode_json(r.mode));
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json report_json(const TheoremReport& r) {
  json j;
  j["theorem"] = r.theorem_id;
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["vacuous"] = r.vacuous;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["overall"] = r.overall;
  if (!r.note.empty()) j["note"] = r.note;
  j["clauses"] = json::array();
  for (const Clause& c : r.clauses) {
    json cj;
    cj["label"] = c.label;
    cj["holds"] = c.holds;
    cj["gates"] = c.gates;
    cj["witness"] = c.witness;
    if (!c.note.empty()) cj["note"] = c.note;
    j["clauses"].push_back(cj);
  }
  return j;
}

void guard_exhaustive_budget(const CheckMode& mode, int order, bool force) {
  if (!mode.exhaustive || force) return;
  long double cube = static_cast<long double>(order) * order * order;
  if (cube > 1e10L)
    throw error("exhaustive sweep over order " + std::to_string(order) +
                " exceeds the budget (order^3 > 1e10); pass --force or use sampled:N:SEED");
}

int cmd_check(const std::string& loop_path, const std::string& ring_spec,
              const std::string& identity, const std::string& sigma_spec,
              const std::string& mode_str, bool canonicalize, const Common& common) {
  CheckMode mode = parse_mode(mode_str);
  IdentityKind kind = identity_kind_from_string(identity);

  json j;
  j["tool_version"] = kToolVersion;
  j["config_echo"] = {{"subcommand", "check"}, {"loop", loop_path}, {"ring", ring_spec},
                      {"identity", identity},  {"sigma", sigma_spec}, {"threads", common.threads}};
  j["config_echo"].update(mode_json(mode));

  CheckResult r;
  if (!ring_spec.empty()) {
    RingLoop rl = example_ring_loop(RingSpec::parse(ring_spec));
    guard_exhaustive_budget(mode, rl.oracle.order(), common.force);
    std::optional<SelfMap> sigma;
    if (identity_needs_sigma(kind)) {
      if (sigma_spec.empty() || sigma_spec == "squaring" || sigma_spec == "sq")
        sigma = rl.sigma;
      else
        throw error("ring-backed check supports --sigma squaring only");
    }
    r = check_identity(rl.oracle, kind, sigma ? &*sigma : nullptr, mode, common.threads);
  } else {
    LoopTable q = load_loop(loop_path, canonicalize);
    guard_exhaustive_budget(mode, q.order(), common.force);
    std::optional<SelfMap> sigma;
    if (identity_needs_sigma(kind)) {
      if (sigma_spec.empty()) throw error("identity " + identity + " requires --sigma");
      sigma = resolve_sigma(sigma_spec, q);
    }
    r = check_identity(q, kind, sigma ? &*sigma : nullptr, mode, common.threads);
  }

  j["results"] = json::array({check_result_json(identity, r)});
  emit_json(common.json_path, j);
  if (r.holds) {
    std::cout << identity << ": " << (r.conclusive() ? "holds" : "no counterexample found")
              << "\n";
    return 0;
  }
  std::cout << identity << ": fails, witness " << witness_str(r.witness);
  if (!r.note.empty()) std::cout << " [" << r.note << "]";
  std::cout << "\n";
  return 1;
}

int cmd_nuclei(const std::string& loop_path, bool canonicalize, const Common& common) {
  LoopTable q = load_loop(loop_path, canonicalize);
  json j;
  j["tool_version"] = kToolVersion;
  j["config_echo"] = {{"subcommand", "nuclei"}, {"loop", loop_path}};
  j["results"] = json::array();
  for (NucleusKind k : {NucleusKind::left, NucleusKind::middle, NucleusKind::right}) {
    NucleusSet s = nucleus(q, k);
    j["results"].push_back(
        {{"kind", to_string(k)}, {"members", s.members}, {"subgroup", s.subgroup}});
    std::cout << "N_" << to_string(k) << " = " << witness_str(s.members)
              << (s.subgroup ? "" : "  [not closed]") << "\n";
  }
  emit_json(common.json_path, j);
  return 0;
}

int cmd_aut(const std::string& loop_path, const std::string& out, bool canonicalize,
            const Common& common) {
  LoopTable q = load_loop(loop_path, canonicalize);
  AutGroup g = automorphism_group(q, common.threads);
  std::cout << "automorphism group order " << g.order() << "\n";
  if (!out.empty()) save_perms(out, q.order(), g.members);
  json j;
  j["tool_version"] = kToolVersion;
  j["config_echo"] = {{"subcommand", "aut"}, {"loop", loop_path}, {"out", out}};
  json perms = json::array();
  for (const Perm& p : g.members) perms.push_back(p.images());
  j["results"] = json::array({{{"order", g.order()}, {"members", perms}}});
  emit_json(common.json_path, j);
  return 0;
}

int cmd_holomorph(const std::string& loop_path, const std::string& autgroup,
                  const std::string& out, std::string labels_path, bool canonicalize,
                  const Common& common) {
  LoopTable q = load_loop(loop_path, canonicalize);
  AutGroup a = resolve_autgroup(autgroup, q, common.threads);
  HolomorphLoop h = build_holomorph(q, a);
  save_loop(out, h.table);
  if (labels_path.empty()) labels_path = out + ".labels";
  {
    std::ofstream lf(labels_path);
    if (!lf) throw error("cannot write labels file: " + labels_path);
    lf << h.table.order() << "\n";
    for (int p = 0; p < h.table.order(); ++p) {
      auto [ai, x] = h.labels(p);
      lf << p << " " << ai << " " << x << "\n";
    }
  }
  std::cout << "holomorph order " << h.table.order() << " (autgroup " << a.order()
            << " x base " << q.order() << ") -> " << out << "\n";
  return 0;
}

int cmd_verify(const std::string& loop_path, const std::string& sigma_spec,
               const std::string& autgroup, const std::string& theorems,
               const std::string& mode_str, bool canonicalize, const Common& common) {
  LoopTable q = load_loop(loop_path, canonicalize);
  SelfMap sigma = resolve_sigma(sigma_spec.empty() ? "identity" : sigma_spec, q);
  AutGroup a = resolve_autgroup(autgroup.empty() ? "trivial" : autgroup, q, common.threads);
  CheckMode mode = parse_mode(mode_str);

  std::vector<std::string> ids;
  if (theorems.empty() || theorems == "all") {
    ids = all_theorem_ids();
  } else {
    std::string cur;
    for (char ch : theorems + ",") {
      if (ch == ',') {
        if (!cur.empty()) ids.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
  }

  Instance inst = Instance::make(q, sigma, a);
  Analysis an(inst, mode, common.threads);

  json j;
  j["tool_version"] = kToolVersion;
  j["config_echo"] = {{"subcommand", "verify"},   {"loop", loop_path},
                      {"sigma", sigma_spec},      {"autgroup", autgroup},
                      {"theorems", theorems},     {"threads", common.threads}};
  j["config_echo"].update(mode_json(mode));
  j["results"] = json::array();

  bool all_ok = true;
  for (const std::string& id : ids) {
    TheoremReport r = verify(id, an);
    j["results"].push_back(report_json(r));
    all_ok = all_ok && r.overall;
    std::cout << r.theorem_id << ": "
              << (r.vacuous ? "pass (vacuous)" : r.overall ? "pass" : "FAIL");
    if (!r.overall) {
      std::cout << "  lhs=" << r.lhs << " rhs=" << r.rhs;
      for (const Clause& c : r.clauses)
        if (c.gates && !c.holds)
          std::cout << "  [" << c.label << " witness " << witness_str(c.witness) << "]";
    }
    std::cout << "\n";
  }
  emit_json(common.json_path, j);
  return all_ok ? 0 : 1;
}

int cmd_construct(const std::string& ring, const std::string& group, int enumerate_order,
                  uint64_t cap, bool dedup, const std::string& out,
                  const std::string& sigma_out, const std::string& out_dir,
                  const Common& common) {
  (void)common;
  int selected = (!ring.empty()) + (!group.empty()) + (enumerate_order > 0);
  if (selected != 1) throw error("construct: pass exactly one of --ring, --group, --enumerate");
  if (enumerate_order > 0) {
    if (out_dir.empty()) throw error("construct: --enumerate requires --out-dir");
    fs::create_directories(out_dir);
    uint64_t idx = 0;
    uint64_t count = enumerate_loops(enumerate_order, cap, [&](const LoopTable& q) {
      save_loop(out_dir + "/loop_" + std::to_string(enumerate_order) + "_" +
                    std::to_string(idx++) + ".loop",
                q);
      return true;
    }, dedup);
    std::cout << "emitted " << count << " loops of order " << enumerate_order << "\n";
    return 0;
  }
  if (out.empty()) throw error("construct: --out required");
  if (!ring.empty()) {
    RingLoop rl = example_ring_loop(RingSpec::parse(ring));
    if (rl.oracle.order() > kDenseOrderCap)
      throw error("ring loop order exceeds the dense cap; use `check --ring` instead");
    save_loop(out, rl.table());
    std::string sp = sigma_out;
    if (sp.empty()) {
      sp = out;
      size_t dot = sp.rfind(".loop");
      sp = (dot == std::string::npos ? sp : sp.substr(0, dot)) + ".map";
    }
    save_map(sp, rl.sigma);
    std::cout << "ring loop order " << rl.oracle.order() << " -> " << out << ", sigma -> " << sp
              << "\n";
    return 0;
  }
  LoopTable q = standard_loop(group);
  save_loop(out, q);
  std::cout << "group " << group << " order " << q.order() << " -> " << out << "\n";
  return 0;
}

int cmd_isotope(const std::string& loop_path, int u, int v, const std::string& out,
                bool canonicalize, const Common& common) {
  (void)common;
  LoopTable q = load_loop(loop_path, canonicalize);
  LoopTable iso = principal_isotope(q, u, v);
  save_loop(out, iso);
  std::cout << "principal isotope (u=" << u << ", v=" << v << ") -> " << out << "\n";
  return 0;
}

int cmd_enumerate(int order, uint64_t cap, bool dedup, const std::string& out_dir,
                  bool count_only, const Common& common) {
  if (count_only) {
    uint64_t count = enumerate_loops(order, cap, [](const LoopTable&) { return true; }, dedup);
    std::cout << count << "\n";
    return 0;
  }
  return cmd_construct("", "", order, cap, dedup, "", "", out_dir, common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite loop computations: identities, nuclei, regular maps, holomorphs"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--threads", common.threads, "worker threads (0 = hardware)");

  std::string loop_path, ring_spec, identity, sigma_spec, mode_str, autgroup, out, labels,
      theorems, group, out_dir, sigma_out;
  bool canonicalize = false, dedup = false, count_only = false;
  int u = 0, v = 0, order = 0;
  uint64_t cap = 0;

  auto* check = app.add_subcommand("check", "decide an identity on a loop");
  check->add_option("--loop", loop_path, "loop table file");
  check->add_option("--ring", ring_spec, "ring-backed oracle instead of a file (zn:K, m2gf3, ut2gf3)");
  check->add_option("--identity", identity, "identity kind")->required();
  check->add_option("--sigma", sigma_spec, "self-map file, or identity|squaring");
  check->add_option("--mode", mode_str, "exhaustive | sampled:N:SEED");
  check->add_flag("--canonicalize", canonicalize, "relabel the identity to index 0");
  check->add_flag("--force", common.force, "allow exhaustive sweeps past the budget");
  check->add_option("--json", common.json_path, "write a JSON report (- for stdout)");

  auto* nuclei = app.add_subcommand("nuclei", "compute the left/middle/right nuclei");
  nuclei->add_option("--loop", loop_path)->required();
  nuclei->add_flag("--canonicalize", canonicalize);
  nuclei->add_option("--json", common.json_path);

  auto* aut = app.add_subcommand("aut", "compute the automorphism group");
  aut->add_option("--loop", loop_path)->required();
  aut->add_option("--out", out, "write members as a .perms file");
  aut->add_flag("--canonicalize", canonicalize);
  aut->add_option("--json", common.json_path);

  auto* hol = app.add_subcommand("holomorph", "build the A-holomorph as a dense loop");
  hol->add_option("--loop", loop_path)->required();
  hol->add_option("--autgroup", autgroup, "full | trivial | .perms file")->required();
  hol->add_option("--out", out)->required();
  hol->add_option("--labels", labels, "label sidecar path (default <out>.labels)");
  hol->add_flag("--canonicalize", canonicalize);

  auto* verify = app.add_subcommand("verify", "machine-verify the theorem suite on an instance");
  verify->add_option("--loop", loop_path)->required();
  verify->add_option("--sigma", sigma_spec, "self-map file, or identity|squaring");
  verify->add_option("--autgroup", autgroup, "full | trivial | .perms file");
  verify->add_option("--theorems", theorems, "all or a comma list, e.g. T2.1,T2.2");
  verify->add_option("--mode", mode_str, "exhaustive | sampled:N:SEED");
  verify->add_flag("--canonicalize", canonicalize);
  verify->add_option("--json", common.json_path);

  auto* construct = app.add_subcommand("construct", "emit test instances");
  construct->add_option("--ring", ring_spec, "zn:K | m2gf3 | ut2gf3");
  construct->add_option("--group", group, "cyclic:N | sym3 | klein | ea:p:k");
  construct->add_option("--enumerate", order, "enumerate loops of this order (<= 6)");
  construct->add_option("--cap", cap, "stop after this many loops (0 = all)");
  construct->add_flag("--dedup", dedup, "emit one loop per isomorphism class");
  construct->add_option("--out", out);
  construct->add_option("--sigma-out", sigma_out, "sigma output path for ring loops");
  construct->add_option("--out-dir", out_dir);

  auto* iso = app.add_subcommand("isotope", "principal isotope, relabeled to identity 0");
  iso->add_option("--loop", loop_path)->required();
  iso->add_option("--u", u)->required();
  iso->add_option("--v", v)->required();
  iso->add_option("--out", out)->required();
  iso->add_flag("--canonicalize", canonicalize);

  auto* enumsub = app.add_subcommand("enumerate", "enumerate loops of a small order");
  enumsub->add_option("--order", order)->required();
  enumsub->add_option("--cap", cap);
  enumsub->add_flag("--dedup", dedup);
  enumsub->add_option("--out-dir", out_dir);
  enumsub->add_flag("--count-only", count_only, "print the count, write nothing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed())
      return cmd_check(loop_path, ring_spec, identity, sigma_spec, mode_str, canonicalize, common);
    if (nuclei->parsed()) return cmd_nuclei(loop_path, canonicalize, common);
    if (aut->parsed()) return cmd_aut(loop_path, out, canonicalize, common);
    if (hol->parsed())
      return cmd_holomorph(loop_path, autgroup, out, labels, canonicalize, common);
    if (verify->parsed())
      return cmd_verify(loop_path, sigma_spec, autgroup, theorems, mode_str, canonicalize, common);
    if (construct->parsed())
      return cmd_construct(ring_spec, group, order, cap, dedup, out, sigma_out, out_dir, common);
    if (iso->parsed()) return cmd_isotope(loop_path, u, v, out, canonicalize, common);
    if (enumsub->parsed()) return cmd_enumerate(order, cap, dedup, out_dir, count_only, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
