// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ix/algebra.hpp"
#include "ix/error.hpp"
#include "ix/fixpoint.hpp"
#include "ix/fixtures.hpp"
#include "ix/programs.hpp"
#include "ix/random.hpp"
#include "ix/simulation.hpp"
#include "ix/topology.hpp"
#include "ixcli/laws.hpp"
#include "ixcli/oracle.hpp"
#include "ixcli/run.hpp"
#include "ixcli/serialize.hpp"

namespace fs = std::filesystem;
using namespace ix;
using cli::Json;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << s << "s";
  return os.str();
}

// 1 ---------------------------------------------------------------------------

Outcome law_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  cli::LawOptions o;
  o.seed = 0;
  o.iterations = 200;
  o.max_states = 5;
  const cli::LawReport r = cli::run_random_laws(o);
  const double t = seconds_since(t0);
  std::string detail = std::to_string(r.laws.size()) + " laws, " + std::to_string(r.checked()) +
                       " checks, " + std::to_string(r.failed()) + " failures, " + fmt_seconds(t);
  for (const auto& l : r.laws) {
    if (l.failed) detail += "; " + l.name + ": " + l.first_failure;
    if (l.checked == 0) detail += "; " + l.name + " never exercised";
  }
  bool exercised = true;
  for (const auto& l : r.laws) exercised = exercised && l.checked > 0;
  return {r.ok() && exercised && t < 60.0, detail};
}

// 2 ---------------------------------------------------------------------------

Outcome cover_oracle() {
  const RandomShape shape{1, 4, 3, 3};
  std::size_t subsets = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(Rng::derive(2, i));
    const SpacePtr sp = random_space(rng, shape);
    const InteractionStructure w = random_structure(rng, sp, shape);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << sp->size()); ++m) {
      const Subset u = Subset::from_mask(sp, m);
      ++subsets;
      const Subset got = cover(w, u).subset;
      const Subset want = oracle::tree_roots(w, u, /*memo=*/false);
      if (!(got == want)) {
        return {false, "structure " + std::to_string(i) + " U=" + to_string(u) + ": cover " +
                           to_string(got) + " vs trees " + to_string(want)};
      }
    }
  }
  return {true, "100 structures, " + std::to_string(subsets) + " goal subsets, exact equality"};
}

// 3 ---------------------------------------------------------------------------

Json names(const Subset& u) {
  Json j = Json::array();
  u.for_each([&](StateIndex s) { j.push_back(u.space()->state_name(s)); });
  return j;
}

Json pairs(const Relation& r) {
  Json j = Json::array();
  for (const auto& [a, b] : r.pairs()) {
    j.push_back(Json::array({r.domain()->state_name(a), r.codomain()->state_name(b)}));
  }
  return j;
}

Json dual_sizes(const InteractionStructure& w) {
  const InteractionStructure d = dual(w);
  Json j = Json::array();
  for (std::size_t s = 0; s < d.source()->size(); ++s) j.push_back(d.command_count(s));
  return j;
}

Json localized(const SelfSimulation& ss) {
  auto c = check_localized(ss);
  if (!c) return nullptr;
  const auto& w = ss.structure();
  return Json::array({w.source()->state_name(c->lower), w.source()->state_name(c->upper),
                      w.command(c->upper, c->command).name});
}

Json artifact_ledger() {
  const InteractionStructure count3 = fixtures::count3();
  const InteractionStructure coin = fixtures::coin();
  const InteractionStructure magic = fixtures::magic();
  const InteractionStructure jump2 = fixtures::jump2();
  const SpacePtr& C = count3.source();
  const SpacePtr& K = coin.source();
  const Subset s2(C, {2});
  Json L = Json::object();

  L["one_step count3 angel {s2}"] = names(angel_step(count3, s2));
  L["one_step coin demon {win}"] = names(demon_step(coin, Subset(K, {1})));

  const CoverResult c = cover(count3, s2);
  L["cover count3 {s2}"] = names(c.subset);
  Json st = Json::object();
  for (std::size_t s = 0; s < C->size(); ++s) {
    if (c.stage[s]) st[C->state_name(s)] = *c.stage[s];
  }
  L["cover count3 {s2} stages"] = st;
  L["cover coin {win}"] = names(cover(coin, Subset(K, {1})).subset);
  L["cover magic {}"] = names(cover(magic, Subset(magic.source())).subset);
  L["interior count3 full"] = names(interior(count3, Subset::full(C)).subset);
  L["interior count3 {s0,s1}"] = names(interior(count3, Subset(C, {0, 1})).subset);
  const InteriorResult jc = interior(coin, Subset(K, {0, 1}));
  L["interior coin {s,win}"] = names(jc.subset);
  L["interior coin {s,win} choice s play"] = coin.command(0, 0).responses[*jc.choice[0][0]].name;
  L["interior magic full"] = names(interior(magic, Subset::full(magic.source())).subset);

  L["dual sizes count3"] = dual_sizes(count3);
  L["dual sizes coin"] = dual_sizes(coin);
  L["dual sizes magic"] = dual_sizes(magic);
  L["factorize count3 mid"] = Json(factorize(count3).mid->states());

  L["greatest linear count3"] = pairs(greatest_sim(count3, count3, SimKind::linear));
  L["greatest general count3"] = pairs(greatest_sim(count3, count3, SimKind::general));
  L["saturate {(s2,s2)} count3"] =
      pairs(saturate(Relation::from_pairs(C, C, {{2, 2}}), count3));

  const Relation refine = Relation::from_pairs(jump2.source(), C, {{0, 0}, {1, 2}});
  L["jump2 count3 linear"] = check_sim(jump2, count3, refine, SimKind::linear).ok();
  L["jump2 count3 general"] = check_sim(jump2, count3, refine, SimKind::general).ok();

  L["localize count3 s0"] = Json(localize(count3, 0).structure.source()->states());
  L["localize magic m"] = Json(localize(magic, 0).structure.source()->states());

  const SelfSimulation sat = saturation_preorder(count3);
  L["saturation preorder count3"] = pairs(sat.leq());
  L["saturation preorder coin"] = pairs(saturation_preorder(coin).leq());
  L["down count3-sat {s2}"] = names(down_closure(sat, s2));
  L["bin_down count3-sat {s1} {s2}"] = names(bin_down(sat, Subset(C, {1}), s2));
  L["localized count3-sat"] = localized(sat);
  L["localized count3-identity"] = localized(identity_preorder(count3));
  L["localized L(count3)"] = localized(localize_with_preorder(count3, 0).second);

  auto point = [](const PointVerdict& v) {
    return v.ok() ? std::string("ok") : std::string(to_string(*v.failed));
  };
  L["point count3-sat full"] = point(check_formal_point(sat, Subset::full(C)));
  L["point coin-identity {s,win}"] =
      point(check_formal_point(identity_preorder(coin), Subset(K, {0, 1})));

  auto map = [](const MapVerdict& v) {
    return v.ok() ? std::string("ok") : std::string(to_string(*v.failed));
  };
  L["continuous identity count3"] = map(check_continuous_map(Relation::identity(C), sat, sat));
  L["continuous jump2 count3"] = map(check_continuous_map(refine, saturation_preorder(jump2), sat));

  const ServerProgram srv = synth_server(count3, Subset::full(C)).server;
  const ClientProgram p = synth_client(count3, 0, s2);
  const Trace t = exec(count3, 0, p.tree, srv);
  Json steps = Json::array();
  for (const TraceStep& x : t.steps) {
    steps.push_back(Json::array({C->state_name(x.state), count3.command(x.state, x.command).name,
                                 count3.command(x.state, x.command).responses[x.response].name,
                                 C->state_name(x.next)}));
  }
  Json ex = Json::object();
  ex["final"] = C->state_name(t.final_state);
  ex["steps"] = steps;
  L["exec count3 s0 {s2}"] = ex;

  const SimCert id = *check_sim(count3, count3, Relation::identity(C), SimKind::linear).cert;
  const AcrossResult a1 = exec_across(count3, count3, id, 0, 0, p.tree, srv);
  Json e1 = Json::object();
  e1["final"] = Json::array({C->state_name(a1.final_high), C->state_name(a1.final_low)});
  e1["low_steps"] = a1.low.steps.size();
  L["exec_across identity count3"] = e1;

  const SimCert jc2 = *check_sim(jump2, count3, refine, SimKind::general).cert;
  const ClientProgram hp = synth_client(jump2, 0, Subset(jump2.source(), {1}));
  const AcrossResult a2 = exec_across(jump2, count3, jc2, 0, 0, hp.tree, srv);
  Json e2 = Json::object();
  e2["final"] = Json::array({jump2.source()->state_name(a2.final_high), C->state_name(a2.final_low)});
  e2["high_steps"] = a2.high.steps.size();
  e2["low_steps"] = a2.low.steps.size();
  L["exec_across jump2 count3"] = e2;
  return L;
}

Outcome fixture_ledger() {
  std::ifstream f(IXCALC_LEDGER);
  if (!f) return {false, "cannot read the frozen ledger"};
  const nlohmann::json frozen = nlohmann::json::parse(f);
  const nlohmann::json mine = nlohmann::json::parse(artifact_ledger().dump());
  std::size_t matched = 0;
  std::string bad;
  for (const auto& [key, value] : frozen.items()) {
    if (!mine.contains(key)) {
      bad += " missing '" + key + "'";
    } else if (mine[key] != value) {
      bad += " '" + key + "': " + mine[key].dump() + " vs " + value.dump();
    } else {
      ++matched;
    }
  }
  for (const auto& [key, value] : mine.items()) {
    if (!frozen.contains(key)) bad += " unledgered '" + key + "'";
  }
  if (!bad.empty()) return {false, bad};
  return {true, std::to_string(matched) + " ledger values matched exactly"};
}

// 4 ---------------------------------------------------------------------------

Outcome compatibility() {
  const auto t0 = std::chrono::steady_clock::now();
  const RandomShape shape{1, 5, 3, 3};
  std::size_t instances = 0, runs = 0;
  for (std::size_t i = 0; instances < 100 && i < 100000; ++i) {
    Rng rng(Rng::derive(4, i));
    const SpacePtr sp = random_space(rng, shape);
    const InteractionStructure w = random_structure(rng, sp, shape);
    const Subset u = random_subset(rng, sp, 40);
    const Subset v = random_subset(rng, sp, 70);
    const CoverResult cu = cover(w, u);
    const ServerSynthesis srv = synth_server(w, v);
    const Subset both = cu.subset & srv.server.inv;
    if (!overlap(both, both)) continue;
    ++instances;
    for (StateIndex s : both.members()) {
      ++runs;
      try {
        const Trace t = exec(w, s, synth_client(w, s, u).tree, srv.server);
        if (!u.contains(t.final_state) || !srv.server.inv.contains(t.final_state) ||
            !replay(w, t)) {
          return {false, "instance " + std::to_string(i) + " from " + sp->state_name(s)};
        }
      } catch (const Error& e) {
        return {false, "instance " + std::to_string(i) + ": " + e.what()};
      }
    }
  }
  const double t = seconds_since(t0);
  return {instances == 100 && t < 30.0,
          std::to_string(instances) + " instances, " + std::to_string(runs) +
              " executions ended in U and J(V), " + fmt_seconds(t)};
}

// 5 ---------------------------------------------------------------------------

Outcome continuity() {
  const RandomShape shape{1, 4, 3, 3};
  std::size_t relations = 0, sims = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng(Rng::derive(5, i));
    const SpacePtr sh = random_space(rng, shape, "H");
    const SpacePtr sl = random_space(rng, shape, "L");
    const InteractionStructure wh = random_structure(rng, sh, shape, "wh");
    const InteractionStructure wl = random_structure(rng, sl, shape, "wl");
    const Relation g = greatest_sim(wh, wl, SimKind::general);
    std::vector<Relation> rs = {Relation(sh, sl), Relation::full(sh, sl), g};
    for (int k = 0; k < 4; ++k) rs.push_back(random_relation(rng, sh, sl, 40));
    for (int k = 0; k < 4; ++k) rs.push_back(g & random_relation(rng, sh, sl, 70));
    for (const Relation& r : rs) {
      ++relations;
      const bool sim = check_sim(wh, wl, r, SimKind::general).ok();
      const ContinuityReport c = continuity_conditions(r, wh, wl);
      sims += sim;
      if (!c.exhaustive || sim != c.cond1 || sim != (c.cond1 && c.cond2)) {
        return {false, "pair " + std::to_string(i) + " relation " + to_string(r)};
      }
    }
  }
  return {true, "50 pairs, " + std::to_string(relations) + " relations (" + std::to_string(sims) +
                    " simulations), all subsets enumerated"};
}

// 6 ---------------------------------------------------------------------------

struct LocalStats {
  std::size_t structures = 0, triples = 0, distributive = 0;
};

std::optional<std::string> localization_consequences(const SelfSimulation& ss, Rng& rng,
                                                     LocalStats& stats) {
  if (check_localized(ss)) return "not localized";
  ++stats.structures;
  const SpacePtr& sp = ss.structure().source();
  std::size_t found = 0;
  for (std::size_t attempt = 0; found < 50 && attempt < 20000; ++attempt) {
    const Subset u = random_subset(rng, sp, 40);
    const Subset v = random_subset(rng, sp, 40);
    const Subset both = localized_cover(ss, u) & localized_cover(ss, v);
    if (both.empty()) continue;
    const auto ms = both.members();
    const StateIndex s = ms[rng.below(ms.size())];
    ++found;
    if (!localized_cover(ss, bin_down(ss, u, v)).contains(s)) {
      return "convergence fails at " + sp->state_name(s) + " for " + to_string(u) + ", " +
             to_string(v);
    }
  }
  if (found < 50) return "only " + std::to_string(found) + " convergence triples found";
  stats.triples += found;

  if (sp->size() <= 4) {
    std::vector<Subset> opens;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << sp->size()); ++m) {
      const Subset o = localized_cover(ss, Subset::from_mask(sp, m));
      if (std::find(opens.begin(), opens.end(), o) == opens.end()) opens.push_back(o);
    }
    // Every family of opens has a finite subfamily of at most |opens| members;
    // enumerate all of them via bit masks.
    const std::size_t k = opens.size();
    for (const Subset& u : opens) {
      for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << k); ++fam) {
        Subset join(sp), meets(sp);
        for (std::size_t i = 0; i < k; ++i) {
          if (fam >> i & 1) {
            join |= opens[i];
            meets |= u & opens[i];
          }
        }
        if (!((u & localized_cover(ss, join)) == localized_cover(ss, meets))) {
          return "distributivity fails at " + to_string(u);
        }
      }
    }
    ++stats.distributive;
  }
  return std::nullopt;
}

Outcome localization() {
  LocalStats stats;
  Rng rng(Rng::derive(6, 0));
  if (auto e = localization_consequences(saturation_preorder(fixtures::count3()), rng, stats)) {
    return {false, "count3: " + *e};
  }
  const RandomShape shape{1, 5, 3, 3};
  std::size_t made = 0;
  for (std::size_t i = 0; made < 20 && i < 1000; ++i) {
    Rng r(Rng::derive(6, i + 1));
    const SpacePtr sp = random_space(r, shape);
    const InteractionStructure w = random_structure(r, sp, shape);
    auto [l, ss] = localize_with_preorder(w, r.below(sp->size()));
    if (l.structure.source()->size() > 64) continue;
    ++made;
    if (auto e = localization_consequences(ss, r, stats)) {
      return {false, "L(w) #" + std::to_string(i) + ": " + *e};
    }
  }
  return {made == 20, std::to_string(stats.structures) + " localized structures, " +
                          std::to_string(stats.triples) + " convergence triples, " +
                          std::to_string(stats.distributive) +
                          " exhaustive distributivity checks"};
}

// 7 ---------------------------------------------------------------------------

std::string fixture(const char* name) { return std::string(IXCALC_FIXTURES) + "/" + name; }

std::string transcript(const fs::path& dir) {
  fs::create_directories(dir);
  const std::string c3 = fixture("count3.ix");
  const std::string j2 = fixture("jump2.ix");
  const std::string client = (dir / "client.json").string();
  const std::string server = (dir / "server.json").string();
  const std::string hclient = (dir / "high.json").string();
  const std::string lserver = (dir / "low.json").string();
  const std::string cert = (dir / "cert.json").string();
  const std::vector<std::vector<std::string>> cmds = {
      {"cover", c3, "--istruct", "w", "--subset", "goal"},
      {"interior", c3, "--istruct", "w", "--subset", "full"},
      {"synth", "client", c3, "--istruct", "w", "--start", "s0", "--goal", "goal", "--out", client},
      {"synth", "server", c3, "--istruct", "w", "--maintain", "full", "--out", server},
      {"exec", c3, "--istruct", "w", "--start", "s0", "--client", client, "--server", server},
      {"sim", j2, "--kind", "general", "--from", "jump2", "--to", "count3", "--relation",
       "refine", "--cert", cert},
      {"synth", "client", j2, "--istruct", "jump2", "--start", "a0", "--goal", "done", "--out",
       hclient},
      {"synth", "server", j2, "--istruct", "count3", "--maintain", "full", "--out", lserver},
      {"exec-across", j2, "--cert", cert, "--start-high", "a0", "--start-low", "s0", "--client",
       hclient, "--server", lserver},
      {"sim-greatest", c3, "--kind", "linear", "--from", "w", "--to", "w"},
      {"algebra", "dual", fixture("coin.ix"), "--istruct", "w"},
      {"algebra", "localize", c3, "--istruct", "w", "--start", "s0"},
      {"topology", "continuous", j2, "--from", "jump2", "--to", "count3", "--relation", "refine"},
      {"topology", "point", fixture("coin.ix"), "--istruct", "w", "--subset", "keep",
       "--preorder", "identity"},
      {"laws", "--random", "--seed", "7", "--iterations", "20"},
      {"laws", fixture("count3.ix"), "--seed", "3", "--iterations", "2"},
  };
  std::string all;
  for (const auto& args : cmds) {
    cli::Report r = cli::run(args);
    cli::commit_outputs(r);
    all += r.render();
    for (const auto& o : r.outputs) all += "== " + o.path + "\n" + o.content;
  }
  return all;
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "ixcalc-acceptance";
  const std::string a = transcript(dir);
  const std::string b = transcript(dir);
  if (a != b) return {false, "two runs differ"};
  if (a.find("status: error") != std::string::npos) return {false, "a command errored:\n" + a};
  std::size_t commands = 0;
  for (std::size_t p = a.find("command: "); p != std::string::npos; p = a.find("command: ", p + 1)) {
    ++commands;
  }
  return {true, std::to_string(commands) + " commands, " + std::to_string(a.size()) +
                    " bytes identical across two runs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 law suite (seed 0, 200 iterations, max 5 states)", law_suite},
      {"2 cover equals client-tree roots (100 structures)", cover_oracle},
      {"3 fixture ledger matches brute-force recomputation", fixture_ledger},
      {"4 compatibility-rule execution (100 instances)", compatibility},
      {"5 general simulation agrees with continuity (50 pairs)", continuity},
      {"6 localization implies convergence and distributivity", localization},
      {"7 byte-identical reruns", determinism},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
