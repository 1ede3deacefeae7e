#include "ixcli/run.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ix/algebra.hpp"
#include "ix/error.hpp"
#include "ix/fixpoint.hpp"
#include "ix/programs.hpp"
#include "ix/simulation.hpp"
#include "ix/topology.hpp"
#include "ixcli/laws.hpp"
#include "ixcli/model.hpp"
#include "ixcli/serialize.hpp"

namespace ix::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
  }
  return "error";
}

std::string Report::render() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (const auto& [k, v] : fields) os << k << ": " << v << "\n";
  os << body;
  if (!body.empty() && body.back() != '\n') os << "\n";
  for (const auto& d : diagnostics) os << "diagnostic: " << d << "\n";
  os << "status: " << to_string(status) << "\n";
  return os.str();
}

int Report::exit_code() const {
  switch (status) {
    case Status::pass:
      return 0;
    case Status::fail:
      return 1;
    case Status::error:
      return 2;
  }
  return 2;
}

void commit_outputs(Report& report) {
  if (report.status == Status::error) return;
  for (const Output& out : report.outputs) {
    std::ofstream f(out.path, std::ios::binary);
    f << out.content;
    f.close();
    if (!f) {
      report.status = Status::error;
      report.diagnostics.push_back("cannot write '" + out.path + "'");
      return;
    }
  }
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

ModelFile load_model(const std::string& path) {
  try {
    return parse_model(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += " ";
    out += a;
  }
  return out;
}

StateIndex state_in(const SpacePtr& sp, const std::string& name) {
  auto idx = sp->index_of(name);
  if (!idx) throw Error("unknown state '" + name + "' in space '" + sp->name() + "'");
  return *idx;
}

// Declared objects win; "empty" and "full" name the extreme subsets.
Subset subset_of(const ModelFile& m, const std::string& name, const SpacePtr& sp) {
  try {
    Subset u = m.subset(name);
    require_same_space(sp, u.space(), "subset");
    return u;
  } catch (const SpaceMismatch&) {
    throw;
  } catch (const Error&) {
    if (name == "empty") return Subset(sp);
    if (name == "full") return Subset::full(sp);
    throw;
  }
}

// Declared objects win; "empty", "full" and "identity" are built in.
Relation relation_of(const ModelFile& m, const std::string& name, const SpacePtr& dom,
                     const SpacePtr& cod) {
  try {
    Relation r = m.relation(name);
    require_same_space(dom, r.domain(), "relation");
    require_same_space(cod, r.codomain(), "relation");
    return r;
  } catch (const SpaceMismatch&) {
    throw;
  } catch (const Error&) {
    if (name == "empty") return Relation(dom, cod);
    if (name == "full") return Relation::full(dom, cod);
    if (name == "identity") {
      require_same_space(dom, cod, "identity relation");
      return Relation::identity(dom);
    }
    throw;
  }
}

SimKind kind_of(const std::string& text) {
  auto k = parse_sim_kind(text);
  if (!k) throw Error("unknown simulation kind '" + text + "'");
  return *k;
}

SelfSimulation self_sim(const ModelFile& m, const InteractionStructure& w,
                        const std::string& preorder) {
  if (preorder.empty() || preorder == "saturation") return saturation_preorder(w);
  if (preorder == "identity") return identity_preorder(w);
  return SelfSimulation::certify(w, m.preorder(preorder));
}

struct Options {
  std::string file;
  std::string istruct, subset, preorder, from, to, relation, kind;
  std::string start, goal, maintain, client, server, cert, out, trace;
  std::string start_high, start_low, left, right, name, preorder_low;
  bool strict = false;
  bool random = false;
  std::uint64_t seed = 0;
  std::size_t iterations = 100;
  std::size_t max_states = 5;
  std::size_t max_size = kDefaultSizeCap;
  std::size_t samples = 256;
};

using Handler = std::function<void(const Options&, Report&)>;

// --- handlers ----------------------------------------------------------------

void do_cover(const Options& o, Report& rep) {
  const ModelFile m = load_model(o.file);
  const InteractionStructure& w = m.istruct(o.istruct);
  const Subset u = subset_of(m, o.subset, w.source());
  std::optional<Relation> leq;
  if (!o.preorder.empty()) leq = m.preorder(o.preorder);
  const CoverResult c = cover(w, u, leq ? &*leq : nullptr);
  rep.field("result", to_string(c.subset));
  rep.field("rounds", std::to_string(c.rounds));
  for (std::size_t s = 0; s < w.source()->size(); ++s) {
    if (!c.stage[s]) continue;
    std::string line = "stage " + w.source()->state_name(s) + " " + std::to_string(*c.stage[s]);
    if (c.witness[s]) line += " via " + w.command(s, *c.witness[s]).name;
    rep.body += line + "\n";
  }
}

void do_interior(const Options& o, Report& rep) {
  const ModelFile m = load_model(o.file);
  const InteractionStructure& w = m.istruct(o.istruct);
  const InteriorResult j = interior(w, subset_of(m, o.subset, w.source()));
  rep.field("result", to_string(j.subset));
  rep.field("rounds", std::to_string(j.rounds));
  for (std::size_t s = 0; s < j.choice.size(); ++s) {
    for (std::size_t a = 0; a < j.choice[s].size(); ++a) {
      if (!j.choice[s][a]) continue;
      rep.body += "choice " + w.source()->state_name(s) + " " + w.command(s, a).name + " " +
                  w.command(s, a).responses[*j.choice[s][a]].name + "\n";
    }
  }
}

void do_sim(const Options& o, Report& rep) {
  const ModelFile m = load_model(o.file);
  const InteractionStructure& wh = m.istruct(o.from);
  const InteractionStructure& wl = m.istruct(o.to);
  const Relation r = relation_of(m, o.relation, wh.source(), wl.source());
  const SimKind kind = kind_of(o.kind);
  const SimCheck c = check_sim(wh, wl, r, kind);
  rep.field("kind", to_string(kind));
  if (!c.ok()) {
    const auto& x = *c.counterexample;
    rep.field("result", "counterexample");
    rep.field("at", "(" + wh.source()->state_name(x.high) + "," + wl.source()->state_name(x.low) +
                        "," + wh.command(x.high, x.command).name + ")");
    rep.status = Status::fail;
    return;
  }
  rep.field("result", "certified");
  rep.field("witnesses", std::to_string(c.cert->witnesses.size()));
  const std::string doc = dump(cert_to_json(wh, wl, *c.cert));
  if (o.cert.empty()) {
    rep.body = doc;
  } else {
    rep.outputs.push_back({o.cert, doc});
  }
}

void do_sim_greatest(const Options& o, Report& rep) {
  const ModelFile m = load_model(o.file);
  const InteractionStructure& wh = m.istruct(o.from);
  const InteractionStructure& wl = m.istruct(o.to);
  const SimKind kind = kind_of(o.kind);
  if (kind != SimKind::linear && kind != SimKind::general) {
    throw Error("sim-greatest supports linear and general");
  }
  const Relation g = greatest_sim(wh, wl, kind);
  rep.field("kind", to_string(kind));
  rep.field("result", to_string(g));
  rep.field("pairs", std::to_string(g.count()));
}

void do_synth_client(const Options& o, Report& rep) {
  const ModelFile m = load_model(o.file);
  const InteractionStructure& w = m.istruct(o.istruct);
  const StateIndex s = state_in(w.source(), o.start);
  const Subset goal = subset_of(m, o.goal, w.source());
  try {
    const ClientProgram p = synth_client(w, s, goal);
    rep.field("result", "covered");
    rep.field("depth", std::to_string(p.tree.depth()));
    const std::string doc = dump(client_to_json(w, p));
    if (o.out.empty()) {
      rep.body = doc;
    } else {
      rep.outputs.push_back({o.out, doc});
    }
  } catch (const NotCovered&) {
    rep.field("result", "not covered");
    rep.diagnostics.push_back(o.start + " is not in the cover of " + to_string(goal));
    rep.status = Status::fail;
  }
}

void do_synth_server(const Options& o, Report& rep) {
  const ModelFile m = load_model(o.file);
  const InteractionStructure& w = m.istruct(o.istruct);
  const ServerSynthesis s = synth_server(w, subset_of(m, o.maintain, w.source()));
  rep.field("result", to_string(s.server.inv));
  if (s.empty_invariant) rep.diagnostics.push_back("warning: the invariant is empty");
  const std::string doc = dump(server_to_json(w, s.server));
  if (o.out.empty()) {
    rep.body = doc;
  } else {
    rep.outputs.push_back({o.out, doc});
  }
}

void do_exec(const Options& o, Report& rep) {
  const ModelFile m = load_model(o.file);
  const InteractionStructure& w = m.istruct(o.istruct);
  const StateIndex s = state_in(w.source(), o.start);
  const ClientProgram p = client_from_json(w, parse_json(read_file(o.client)));
  const ServerProgram srv = server_from_json(w, parse_json(read_file(o.server)));
  if (p.root != s) {
    rep.diagnostics.push_back("client is rooted at " + w.source()->state_name(p.root) +
                              "; running it from " + o.start);
  }
  try {
    const Trace t = exec(w, s, p.tree, srv);
    rep.field("final", w.source()->state_name(t.final_state));
    rep.field("steps", std::to_string(t.steps.size()));
    const std::string lines = trace_to_lines(w, t);
    if (o.trace.empty()) {
      rep.body = lines;
    } else {
      rep.outputs.push_back({o.trace, lines});
    }
  } catch (const ContractViolation& e) {
    rep.field("result", "contract violation");
    rep.diagnostics.push_back(e.what());
    rep.status = Status::fail;
  }
}

void do_exec_across(const Options& o, Report& rep) {
  const ModelFile m = load_model(o.file);
  const LoadedCert lc = cert_from_json(m, parse_json(read_file(o.cert)));
  const InteractionStructure& wh = m.istruct(lc.high);
  const InteractionStructure& wl = m.istruct(lc.low);
  if (auto defect = verify_cert(wh, wl, lc.cert)) throw Error("invalid certificate: " + *defect);
  const StateIndex sh = state_in(wh.source(), o.start_high);
  const StateIndex sl = state_in(wl.source(), o.start_low);
  const ClientProgram p = client_from_json(wh, parse_json(read_file(o.client)));
  const ServerProgram srv = server_from_json(wl, parse_json(read_file(o.server)));
  try {
    const AcrossResult r = exec_across(wh, wl, lc.cert, sh, sl, p.tree, srv);
    rep.field("final", "(" + wh.source()->state_name(r.final_high) + "," +
                           wl.source()->state_name(r.final_low) + ")");
    rep.field("high steps", std::to_string(r.high.steps.size()));
    rep.field("low steps", std::to_string(r.low.steps.size()));
    std::string lines = "# high\n" + trace_to_lines(wh, r.high) + "# low\n" +
                        trace_to_lines(wl, r.low);
    if (o.trace.empty()) {
      rep.body = lines;
    } else {
      rep.outputs.push_back({o.trace, lines});
    }
  } catch (const ContractViolation& e) {
    rep.field("result", "contract violation");
    rep.diagnostics.push_back(e.what());
    rep.status = Status::fail;
  } catch (const MissingWitness& e) {
    rep.field("result", "missing witness");
    rep.diagnostics.push_back(e.what());
    rep.status = Status::fail;
  }
}

void emit_structures(Report& rep, const std::vector<InteractionStructure>& ws) {
  ModelFile out;
  for (const auto& w : ws) add_with_spaces(out, w);
  rep.body = print_model(out);
}

void do_algebra(const std::string& op, const Options& o, Report& rep) {
  const ModelFile m = load_model(o.file);
  auto named = [&](const InteractionStructure& w, const std::string& dflt) {
    return w.renamed(o.name.empty() ? dflt : o.name);
  };
  std::vector<InteractionStructure> result;
  if (op == "dual" || op == "factorize" || op == "localize") {
    const InteractionStructure& w = m.istruct(o.istruct);
    if (op == "dual") {
      result.push_back(named(dual(w, o.max_size), "dual(" + w.name() + ")"));
    } else if (op == "factorize") {
      const Factorization f = factorize(w);
      result.push_back(angelic_update(f.angelic).renamed("angelic(" + w.name() + ")"));
      result.push_back(demonic_update(f.demonic).renamed("demonic(" + w.name() + ")"));
      rep.field("mid", std::to_string(f.mid->size()));
    } else {
      const StateIndex init = state_in(w.source(), o.start);
      const LocalizedStructure l = localize(w, init, o.max_size);
      const InteractionStructure lw = named(l.structure, "L(" + w.name() + ")");
      rep.field("states", std::to_string(lw.source()->size()));
      ModelFile out;
      add_with_spaces(out, lw);
      out.add_preorder("leq", l.leq);
      rep.body = print_model(out);
      return;
    }
  } else {
    const InteractionStructure& a = m.istruct(o.left);
    const InteractionStructure& b = m.istruct(o.right);
    if (op == "seq") {
      result.push_back(named(seq(a, b, o.max_size), "(" + a.name() + ";" + b.name() + ")"));
    } else if (op == "tensor") {
      result.push_back(named(tensor(a, b, o.max_size), "(" + a.name() + "*" + b.name() + ")"));
    } else {
      result.push_back(named(angelic_product(a, b), "(" + a.name() + "+" + b.name() + ")"));
    }
  }
  emit_structures(rep, result);
}

void do_topology(const std::string& op, const Options& o, Report& rep) {
  const ModelFile m = load_model(o.file);
  if (op == "saturation") {
    const InteractionStructure& w = m.istruct(o.istruct);
    const SelfSimulation ss = saturation_preorder(w);
    rep.field("result", to_string(ss.leq()));
    rep.field("pairs", std::to_string(ss.leq().count()));
    return;
  }
  if (op == "localized") {
    const InteractionStructure& w = m.istruct(o.istruct);
    const SelfSimulation ss = self_sim(m, w, o.preorder);
    rep.field("form", o.strict ? "one-step" : "cover");
    if (auto c = check_localized(ss, o.strict)) {
      const auto& sp = w.source();
      rep.field("result", "not localized");
      rep.field("at", "(" + sp->state_name(c->lower) + "," + sp->state_name(c->upper) + "," +
                          w.command(c->upper, c->command).name + ")");
      rep.status = Status::fail;
    } else {
      rep.field("result", "localized");
    }
    return;
  }
  if (op == "point") {
    const InteractionStructure& w = m.istruct(o.istruct);
    const SelfSimulation ss = self_sim(m, w, o.preorder);
    const Subset alpha = subset_of(m, o.subset, w.source());
    const PointVerdict v = check_formal_point(ss, alpha);
    if (v.ok()) {
      rep.field("result", "formal point");
      return;
    }
    rep.field("result", std::string("not a point: ") + to_string(*v.failed));
    std::string at;
    if (v.first) at = w.source()->state_name(*v.first);
    if (v.second) at += "," + w.source()->state_name(*v.second);
    if (!at.empty()) rep.field("at", at);
    rep.status = Status::fail;
    return;
  }
  // continuous
  const InteractionStructure& wh = m.istruct(o.from);
  const InteractionStructure& wl = m.istruct(o.to);
  const Relation r = relation_of(m, o.relation, wh.source(), wl.source());
  const SelfSimulation sh = self_sim(m, wh, o.preorder);
  const SelfSimulation sl = self_sim(m, wl, o.preorder_low);
  const MapVerdict v = check_continuous_map(r, sh, sl);
  const ContinuityReport c = continuity_conditions(r, wh, wl, 12, o.samples, o.seed);
  rep.field("cond1", c.cond1 ? "holds" : "fails at " + to_string(*c.cond1_witness));
  rep.field("cond2", c.cond2 ? "holds" : "fails at " + to_string(*c.cond2_witness));
  rep.field("subsets", std::string(c.exhaustive ? "exhaustive " : "sampled ") +
                           std::to_string(c.subsets_checked));
  if (v.ok()) {
    rep.field("result", "continuous");
    return;
  }
  rep.field("result", std::string("not continuous: ") + to_string(*v.failed));
  if (v.counterexample) {
    rep.field("at", "(" + wh.source()->state_name(v.counterexample->high) + "," +
                        wl.source()->state_name(v.counterexample->low) + "," +
                        wh.command(v.counterexample->high, v.counterexample->command).name + ")");
  } else if (*v.failed == MapCondition::totality) {
    rep.field("at", wl.source()->state_name(*v.first));
  } else {
    rep.field("at", wh.source()->state_name(*v.first) + "," + wh.source()->state_name(*v.second));
  }
  rep.status = Status::fail;
}

void do_laws(const Options& o, Report& rep) {
  LawOptions lo;
  lo.seed = o.seed;
  lo.iterations = o.iterations;
  lo.max_states = o.max_states;
  lo.size_cap = o.max_size;
  LawReport lr;
  if (o.random) {
    if (!o.file.empty()) throw Error("laws takes either FILE or --random");
    lr = run_random_laws(lo);
  } else {
    if (o.file.empty()) throw Error("laws needs FILE or --random");
    lr = run_model_laws(load_model(o.file), lo);
  }
  rep.field("seed", std::to_string(o.seed));
  rep.field("iterations", std::to_string(lr.iterations));
  rep.field("checked", std::to_string(lr.checked()));
  rep.field("failed", std::to_string(lr.failed()));
  rep.body = lr.render();
  if (!lr.ok()) rep.status = Status::fail;
}

}  // namespace

Report run(const std::vector<std::string>& args) {
  Report rep;
  rep.command = join_args(args);
  Options o;
  Handler handler;

  CLI::App app{"Interaction structures: covers, simulations and basic topology", "ixcalc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed for every random choice");
    sub->add_option("--max-size", o.max_size, "Cap on enumerated commands or states");
  };
  auto file = [&](CLI::App* sub) { sub->add_option("FILE", o.file, "Model file")->required(); };
  auto target = [&](CLI::App* sub, const char* name, const std::string& desc,
                    std::string& slot, bool req = true) {
    auto* opt = sub->add_option(name, slot, desc);
    if (req) opt->required();
  };

  auto* cov = app.add_subcommand("cover", "Least fixpoint A(U)");
  file(cov);
  common(cov);
  target(cov, "--istruct", "Interaction structure", o.istruct);
  target(cov, "--subset", "Goal subset", o.subset);
  target(cov, "--preorder", "Preorder replacing the goal by its down-closure", o.preorder, false);
  cov->callback([&] { handler = do_cover; });

  auto* inte = app.add_subcommand("interior", "Greatest fixpoint J(V)");
  file(inte);
  common(inte);
  target(inte, "--istruct", "Interaction structure", o.istruct);
  target(inte, "--subset", "Subset to maintain", o.subset);
  inte->callback([&] { handler = do_interior; });

  auto* sim = app.add_subcommand("sim", "Check a simulation and emit its certificate");
  file(sim);
  common(sim);
  target(sim, "--kind", "linear|affine|tc|general", o.kind);
  target(sim, "--from", "High-level structure", o.from);
  target(sim, "--to", "Low-level structure", o.to);
  target(sim, "--relation", "Relation (or empty|full|identity)", o.relation);
  target(sim, "--cert", "Write the certificate here", o.cert, false);
  sim->callback([&] { handler = do_sim; });

  auto* simg = app.add_subcommand("sim-greatest", "Largest simulation of a kind");
  file(simg);
  common(simg);
  target(simg, "--kind", "linear|general", o.kind);
  target(simg, "--from", "High-level structure", o.from);
  target(simg, "--to", "Low-level structure", o.to);
  simg->callback([&] { handler = do_sim_greatest; });

  auto* synth = app.add_subcommand("synth", "Synthesize programs");
  synth->require_subcommand(1);
  auto* sc = synth->add_subcommand("client", "Client tree reaching a goal");
  file(sc);
  common(sc);
  target(sc, "--istruct", "Interaction structure", o.istruct);
  target(sc, "--start", "Start state", o.start);
  target(sc, "--goal", "Goal subset", o.goal);
  target(sc, "--out", "Write the program here", o.out, false);
  sc->callback([&] { handler = do_synth_client; });
  auto* ss = synth->add_subcommand("server", "Server maintaining an invariant");
  file(ss);
  common(ss);
  target(ss, "--istruct", "Interaction structure", o.istruct);
  target(ss, "--maintain", "Subset to maintain", o.maintain);
  target(ss, "--out", "Write the program here", o.out, false);
  ss->callback([&] { handler = do_synth_server; });

  auto* ex = app.add_subcommand("exec", "Run a client against a server");
  file(ex);
  common(ex);
  target(ex, "--istruct", "Interaction structure", o.istruct);
  target(ex, "--start", "Start state", o.start);
  target(ex, "--client", "Client program document", o.client);
  target(ex, "--server", "Server program document", o.server);
  target(ex, "--trace", "Write the trace here", o.trace, false);
  ex->callback([&] { handler = do_exec; });

  auto* exa = app.add_subcommand("exec-across", "Run a high-level client through a certificate");
  file(exa);
  common(exa);
  target(exa, "--cert", "Certificate document", o.cert);
  target(exa, "--start-high", "High start state", o.start_high);
  target(exa, "--start-low", "Low start state", o.start_low);
  target(exa, "--client", "High-level client program document", o.client);
  target(exa, "--server", "Low-level server program document", o.server);
  target(exa, "--trace", "Write both traces here", o.trace, false);
  exa->callback([&] { handler = do_exec_across; });

  auto* alg = app.add_subcommand("algebra", "Constructions on interaction structures");
  alg->require_subcommand(1);
  for (const char* op : {"dual", "factorize", "localize"}) {
    auto* sub = alg->add_subcommand(op, std::string("Print ") + op + " of a structure");
    file(sub);
    common(sub);
    target(sub, "--istruct", "Interaction structure", o.istruct);
    target(sub, "--name", "Name of the result", o.name, false);
    if (std::string(op) == "localize") target(sub, "--start", "Initial state", o.start);
    const std::string name = op;
    sub->callback([&, name] {
      handler = [name](const Options& opts, Report& r) { do_algebra(name, opts, r); };
    });
  }
  for (const char* op : {"seq", "tensor", "oplus"}) {
    auto* sub = alg->add_subcommand(op, std::string("Print the ") + op + " of two structures");
    file(sub);
    common(sub);
    target(sub, "--left", "First structure", o.left);
    target(sub, "--right", "Second structure", o.right);
    target(sub, "--name", "Name of the result", o.name, false);
    const std::string name = op;
    sub->callback([&, name] {
      handler = [name](const Options& opts, Report& r) { do_algebra(name, opts, r); };
    });
  }

  auto* top = app.add_subcommand("topology", "Basic topology checks");
  top->require_subcommand(1);
  {
    auto* sat = top->add_subcommand("saturation", "Saturation preorder s <= t iff s in A({t})");
    file(sat);
    common(sat);
    target(sat, "--istruct", "Interaction structure", o.istruct);
    sat->callback([&] {
      handler = [](const Options& opts, Report& r) { do_topology("saturation", opts, r); };
    });
    auto* loc = top->add_subcommand("localized", "Check the localization condition");
    file(loc);
    common(loc);
    target(loc, "--istruct", "Interaction structure", o.istruct);
    target(loc, "--preorder", "Preorder (saturation|identity|NAME)", o.preorder, false);
    loc->add_flag("--strict", o.strict, "Use one angelic step instead of the cover");
    loc->callback([&] {
      handler = [](const Options& opts, Report& r) { do_topology("localized", opts, r); };
    });
    auto* pt = top->add_subcommand("point", "Check a formal point");
    file(pt);
    common(pt);
    target(pt, "--istruct", "Interaction structure", o.istruct);
    target(pt, "--subset", "Candidate point", o.subset);
    target(pt, "--preorder", "Preorder (saturation|identity|NAME)", o.preorder, false);
    pt->callback([&] {
      handler = [](const Options& opts, Report& r) { do_topology("point", opts, r); };
    });
    auto* cm = top->add_subcommand("continuous", "Check a continuous map");
    file(cm);
    common(cm);
    target(cm, "--from", "High-level structure", o.from);
    target(cm, "--to", "Low-level structure", o.to);
    target(cm, "--relation", "Relation (or empty|full|identity)", o.relation);
    target(cm, "--preorder-high", "High preorder (saturation|identity|NAME)", o.preorder, false);
    target(cm, "--preorder-low", "Low preorder (saturation|identity|NAME)", o.preorder_low, false);
    cm->add_option("--samples", o.samples, "Subsets sampled when a space is large");
    cm->callback([&] {
      handler = [](const Options& opts, Report& r) { do_topology("continuous", opts, r); };
    });
  }

  auto* laws = app.add_subcommand("laws", "Run the law suite");
  laws->add_option("FILE", o.file, "Model file");
  laws->add_flag("--random", o.random, "Use seeded random structures");
  common(laws);
  laws->add_option("--iterations", o.iterations, "Number of iterations");
  laws->add_option("--max-states", o.max_states, "Largest random state space")
      ->check(CLI::Range(1, 60));
  laws->callback([&] { handler = do_laws; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    rep.body = out.str();
    return rep;
  } catch (const CLI::ParseError& e) {
    rep.status = Status::error;
    rep.diagnostics.push_back(std::string("usage: ") + e.what());
    return rep;
  }

  try {
    handler(o, rep);
  } catch (const Error& e) {
    rep = Report{rep.command, {}, {}, Status::error, {e.what()}, {}};
  } catch (const nlohmann::json::exception& e) {
    rep = Report{rep.command, {}, {}, Status::error, {std::string("invalid document: ") + e.what()}, {}};
  }
  return rep;
}

}  // namespace ix::cli
