#include "ixcli/laws.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ix/error.hpp"
#include "ix/fixpoint.hpp"
#include "ix/programs.hpp"
#include "ix/random.hpp"
#include "ix/simulation.hpp"
#include "ix/topology.hpp"
#include "ixcli/oracle.hpp"

namespace ix::cli {

std::size_t LawReport::checked() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.checked;
  return n;
}

std::size_t LawReport::failed() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.failed;
  return n;
}

std::string LawReport::render() const {
  std::ostringstream os;
  for (const auto& l : laws) {
    os << l.name << " " << l.checked << " " << l.failed;
    if (l.failed) os << " first: " << l.first_failure;
    os << "\n";
  }
  return os.str();
}

namespace {

const std::vector<std::string> kLaws = {
    "core.galois",
    "core.converse",
    "core.update_unions",
    "core.rtc",
    "core.division",
    "core.transition_updates",
    "istruct.skip_unit",
    "istruct.union_hom",
    "istruct.intersection_hom",
    "istruct.seq_hom",
    "istruct.dual_demon",
    "istruct.dual_size",
    "istruct.factorization",
    "istruct.tensor",
    "istruct.oplus_projection",
    "istruct.deterministic",
    "fixpoint.cover_closure",
    "fixpoint.interior_laws",
    "fixpoint.cover_tree_oracle",
    "fixpoint.least_saturated",
    "fixpoint.greatest_invariant",
    "fixpoint.rounds",
    "fixpoint.preorder_goal",
    "programs.synth_client",
    "programs.synth_server",
    "programs.compatibility",
    "programs.trace_replay",
    "simulation.linear_oracle",
    "simulation.general_oracle",
    "simulation.subcommutativity",
    "simulation.kind_hierarchy",
    "simulation.cert_verifies",
    "simulation.union_closure",
    "simulation.greatest_contains",
    "simulation.kleisli",
    "simulation.saturation",
    "simulation.invariant_transport",
    "simulation.lifting",
    "simulation.exec_across",
    "topology.sim_continuity",
    "topology.cover_transport",
    "topology.saturation_preorder",
    "topology.localized",
    "topology.convergence",
    "topology.distributivity",
};

// Spaces up to this size are scanned over all subsets; larger ones are sampled.
constexpr std::size_t kExhaustive = 6;
// Oracles that scan 2^|S| subsets per query run only up to this size.
constexpr std::size_t kOracleLimit = 10;
constexpr std::size_t kSamples = 32;
// Localizations larger than this are built but not certified or checked.
constexpr std::size_t kLocalizedLimit = 64;

class Suite {
public:
  Suite() {
    for (std::size_t i = 0; i < kLaws.size(); ++i) {
      index_[kLaws[i]] = i;
      tallies_.push_back(LawTally{kLaws[i], 0, 0, {}});
    }
  }

  template <typename F>
  void check(const std::string& law, bool ok, const std::string& ctx, F&& detail) {
    LawTally& t = tallies_.at(index_.at(law));
    ++t.checked;
    if (!ok && t.failed++ == 0) t.first_failure = ctx + ": " + detail();
  }
  void check(const std::string& law, bool ok, const std::string& ctx) {
    check(law, ok, ctx, [] { return std::string("violated"); });
  }

  LawReport finish(std::size_t iterations) {
    return LawReport{std::move(tallies_), iterations};
  }

private:
  std::map<std::string, std::size_t> index_;
  std::vector<LawTally> tallies_;
};

std::vector<Subset> subsets(const SpacePtr& sp, Rng& rng) {
  std::vector<Subset> out;
  if (sp->size() <= kExhaustive) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << sp->size()); ++m) {
      out.push_back(Subset::from_mask(sp, m));
    }
  } else {
    out.push_back(Subset(sp));
    out.push_back(Subset::full(sp));
    for (std::size_t i = 0; i < kSamples; ++i) out.push_back(random_subset(rng, sp));
  }
  return out;
}

std::string show(const Subset& u) { return to_string(u); }

// --- core --------------------------------------------------------------------

void relation_laws(Suite& suite, const SpacePtr& s1, const SpacePtr& s2, Rng& rng,
                   const std::string& ctx) {
  const Relation r = random_relation(rng, s1, s2);
  if (s1->size() <= kExhaustive && s2->size() <= kExhaustive) {
    suite.check("core.galois", oracle::galois_holds(r), ctx, [&] { return to_string(r); });
  }

  const Relation q = random_relation(rng, s2, s1);
  suite.check("core.converse", r.converse().converse() == r, ctx);
  suite.check("core.converse", compose(r, q).converse() == compose(q.converse(), r.converse()),
              ctx);

  const Relation conv = r.converse();
  const auto us = subsets(s1, rng);
  const auto vs = subsets(s2, rng);
  for (const Subset& u : us) {
    for (const Subset& v : us) {
      const bool ok = angelic_update(conv, u | v) ==
                      (angelic_update(conv, u) | angelic_update(conv, v));
      suite.check("core.update_unions", ok, ctx, [&] { return show(u) + " " + show(v); });
    }
  }
  for (const Subset& u : vs) {
    for (const Subset& v : vs) {
      const bool ok = demonic_update(r, u & v) == (demonic_update(r, u) & demonic_update(r, v));
      suite.check("core.update_unions", ok, ctx, [&] { return show(u) + " " + show(v); });
    }
  }

  const Relation e = random_relation(rng, s1, s1, 30);
  const Relation c = e.rtc();
  suite.check("core.rtc", c == oracle::path_closure(e), ctx, [&] { return to_string(e); });
  suite.check("core.rtc", c.rtc() == c && c.is_reflexive() && c.is_transitive() && e.subset_of(c),
              ctx, [&] { return to_string(e); });

  // Q ⊆ S1×S3, R ⊆ S2×S3 with S3 = s1: P;R ⊆ Q ⇔ P ⊆ Q/R for P ⊆ S1×S2.
  const Relation dq = random_relation(rng, s1, s1, 60);
  const Relation dr = random_relation(rng, s2, s1);
  const Relation quot = post_divide(dq, dr);
  // R' ⊆ S1×S2, Q' ⊆ S1×S1: R';P' ⊆ Q' ⇔ P' ⊆ R'\Q' for P' ⊆ S2×S1.
  const Relation pr = random_relation(rng, s1, s2);
  const Relation under = pre_divide(pr, dq);
  for (std::size_t i = 0; i < 8; ++i) {
    const Relation p = random_relation(rng, s1, s2, 50);
    suite.check("core.division", compose(p, dr).subset_of(dq) == p.subset_of(quot), ctx,
                [&] { return "post " + to_string(p); });
    const Relation p2 = random_relation(rng, s2, s1, 50);
    suite.check("core.division", compose(pr, p2).subset_of(dq) == p2.subset_of(under), ctx,
                [&] { return "pre " + to_string(p2); });
  }
}

void transition_laws(Suite& suite, const InteractionStructure& w, Rng& rng,
                     const std::string& ctx) {
  const TransitionStructure t = underlying_transitions(w);
  const Relation rel = to_relation(t);
  const InteractionStructure ang = angelic_update(t);
  const InteractionStructure dem = demonic_update(t);
  for (const Subset& u : subsets(w.target(), rng)) {
    suite.check("core.transition_updates",
                angel_step(ang, u) == angelic_update(rel, u) &&
                    angel_step(dem, u) == demonic_update(rel, u),
                ctx, [&] { return show(u); });
  }
}

// --- istruct -----------------------------------------------------------------

template <typename F>
void same_angel(Suite& suite, const char* law, const InteractionStructure& lhs,
                const std::vector<Subset>& us, const std::string& ctx, F&& rhs) {
  for (const Subset& u : us) {
    const Subset want = rhs(u);
    suite.check(law, angel_step(lhs, u) == want, ctx, [&] { return show(u); });
  }
}

void algebra_laws(Suite& suite, const InteractionStructure& w1, const InteractionStructure& w2,
                  std::size_t cap, Rng& rng, const std::string& ctx) {
  const SpacePtr& sp = w1.source();
  const auto us = subsets(sp, rng);

  same_angel(suite, "istruct.skip_unit", skip(sp), us, ctx, [](const Subset& u) { return u; });
  same_angel(suite, "istruct.skip_unit", seq(skip(sp), w1, cap), us, ctx,
             [&](const Subset& u) { return angel_step(w1, u); });
  same_angel(suite, "istruct.skip_unit", seq(w1, skip(sp), cap), us, ctx,
             [&](const Subset& u) { return angel_step(w1, u); });

  same_angel(suite, "istruct.union_hom", union_all({w1, w2}), us, ctx,
             [&](const Subset& u) { return angel_step(w1, u) | angel_step(w2, u); });
  same_angel(suite, "istruct.union_hom", union_all({}, sp, sp), us, ctx,
             [&](const Subset&) { return Subset(sp); });

  same_angel(suite, "istruct.intersection_hom", intersection_all({w1, w2}, cap), us, ctx,
             [&](const Subset& u) { return angel_step(w1, u) & angel_step(w2, u); });
  same_angel(suite, "istruct.intersection_hom", intersection_all({}, sp, sp, cap), us, ctx,
             [&](const Subset&) { return Subset::full(sp); });

  same_angel(suite, "istruct.seq_hom", seq(w1, w2, cap), us, ctx,
             [&](const Subset& u) { return angel_step(w1, angel_step(w2, u)); });

  suite.check("istruct.deterministic",
              seq(w1, w2, cap) == seq(w1, w2, cap) && dual(w1, cap) == dual(w1, cap) &&
                  intersection_all({w1, w2}, cap) == intersection_all({w1, w2}, cap),
              ctx);
}

void dual_laws(Suite& suite, const InteractionStructure& w, std::size_t cap, Rng& rng,
               const std::string& ctx) {
  const InteractionStructure d = dual(w, cap);
  same_angel(suite, "istruct.dual_demon", d, subsets(w.source(), rng), ctx,
             [&](const Subset& u) { return demon_step(w, u); });
  for (std::size_t s = 0; s < w.source()->size(); ++s) {
    std::size_t product = 1;
    for (std::size_t a = 0; a < w.command_count(s); ++a) product *= w.response_count(s, a);
    suite.check("istruct.dual_size",
                d.command_count(s) == product &&
                    std::all_of(d.commands(s).begin(), d.commands(s).end(),
                                [&](const Command& c) {
                                  return c.responses.size() == w.command_count(s);
                                }),
                ctx, [&] { return "state " + w.source()->state_name(s); });
  }

  const Factorization f = factorize(w);
  const InteractionStructure composed = seq(angelic_update(f.angelic), demonic_update(f.demonic), cap);
  same_angel(suite, "istruct.factorization", composed, subsets(w.source(), rng), ctx,
             [&](const Subset& u) { return angel_step(w, u); });
}

Subset product_subset(const SpacePtr& prod, const Subset& u, const Subset& v) {
  Subset out(prod);
  const std::size_t m = v.universe_size();
  u.for_each([&](StateIndex i) { v.for_each([&](StateIndex j) { out.insert(i * m + j); }); });
  return out;
}

void product_laws(Suite& suite, const InteractionStructure& w1, const InteractionStructure& w2,
                  std::size_t cap, Rng& rng, const std::string& ctx) {
  const InteractionStructure t = tensor(w1, w2, cap);
  for (std::size_t i = 0; i < 16; ++i) {
    const Subset u = random_subset(rng, w1.source());
    const Subset v = random_subset(rng, w2.source());
    const Subset lhs = angel_step(t, product_subset(t.source(), u, v));
    const Subset rhs = product_subset(t.source(), angel_step(w1, u), angel_step(w2, v));
    suite.check("istruct.tensor", rhs.subset_of(lhs), ctx,
                [&] { return show(u) + " x " + show(v); });
  }

  const InteractionStructure o = angelic_product(w1, w2);
  const SpacePtr& ps = o.source();
  const std::size_t m = w2.source()->size();
  Relation pi1(w1.source(), ps);
  Relation pi2(w2.source(), ps);
  for (std::size_t i = 0; i < w1.source()->size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      pi1.insert(i, i * m + j);
      pi2.insert(j, i * m + j);
    }
  }
  suite.check("istruct.oplus_projection", check_sim(w1, o, pi1, SimKind::linear).ok(), ctx,
              [] { return std::string("left"); });
  suite.check("istruct.oplus_projection", check_sim(w2, o, pi2, SimKind::linear).ok(), ctx,
              [] { return std::string("right"); });
}

// --- fixpoint and programs ---------------------------------------------------

void fixpoint_laws(Suite& suite, const InteractionStructure& w, Rng& rng,
                   const std::string& ctx) {
  const SpacePtr& sp = w.source();
  const auto us = subsets(sp, rng);
  std::vector<CoverResult> covers;
  std::vector<InteriorResult> interiors;
  for (const Subset& u : us) {
    covers.push_back(cover(w, u));
    interiors.push_back(interior(w, u));
  }
  const std::size_t n = sp->size();
  for (std::size_t i = 0; i < us.size(); ++i) {
    const Subset& a = covers[i].subset;
    const Subset& j = interiors[i].subset;
    suite.check("fixpoint.cover_closure", us[i].subset_of(a) && cover(w, a).subset == a, ctx,
                [&] { return show(us[i]); });
    suite.check("fixpoint.interior_laws", j.subset_of(us[i]) && interior(w, j).subset == j, ctx,
                [&] { return show(us[i]); });
    suite.check("fixpoint.rounds", covers[i].rounds <= n + 1 && interiors[i].rounds <= n + 1, ctx,
                [&] { return show(us[i]); });
    for (std::size_t k = 0; k < us.size(); ++k) {
      if (us[i].subset_of(covers[k].subset)) {
        suite.check("fixpoint.cover_closure", a.subset_of(covers[k].subset), ctx,
                    [&] { return show(us[i]) + " " + show(us[k]); });
      }
      if (j.subset_of(us[k])) {
        suite.check("fixpoint.interior_laws", j.subset_of(interiors[k].subset), ctx,
                    [&] { return show(us[i]) + " " + show(us[k]); });
      }
    }
    suite.check("fixpoint.cover_tree_oracle", a == oracle::tree_roots(w, us[i]), ctx,
                [&] { return show(us[i]); });
    if (n <= kOracleLimit) {
      suite.check("fixpoint.least_saturated", a == oracle::least_saturated(w, us[i]), ctx,
                  [&] { return show(us[i]); });
      suite.check("fixpoint.greatest_invariant", j == oracle::greatest_invariant(w, us[i]), ctx,
                  [&] { return show(us[i]); });
    }
  }

  const Relation leq = random_relation(rng, sp, sp, 25).rtc();
  for (std::size_t i = 0; i < std::min<std::size_t>(us.size(), 8); ++i) {
    const Subset& u = us[rng.below(us.size())];
    suite.check("fixpoint.preorder_goal",
                cover(w, u, &leq).subset == cover(w, down_closure(leq, u)).subset, ctx,
                [&] { return show(u); });
  }
}

void program_laws(Suite& suite, const InteractionStructure& w, Rng& rng,
                  const std::string& ctx) {
  const SpacePtr& sp = w.source();
  for (std::size_t i = 0; i < 4; ++i) {
    const Subset u = random_subset(rng, sp);
    const Subset v = random_subset(rng, sp, 70);
    const CoverResult cu = cover(w, u);
    for (std::size_t s = 0; s < sp->size(); ++s) {
      if (cu.subset.contains(s)) {
        const ClientProgram p = synth_client(w, s, u);
        suite.check("programs.synth_client",
                    verify_client(w, p, u) && p.tree.depth() == cu.stage[s].value_or(0), ctx,
                    [&] { return "start " + sp->state_name(s) + " goal " + show(u); });
      } else {
        bool threw = false;
        try {
          synth_client(w, s, u);
        } catch (const NotCovered&) {
          threw = true;
        }
        suite.check("programs.synth_client", threw, ctx, [&] { return "no NotCovered"; });
      }
    }
    const ServerSynthesis srv = synth_server(w, v);
    const Subset jv = interior(w, v).subset;
    suite.check("programs.synth_server",
                srv.server.inv == jv && !verify_server(w, srv.server) &&
                    srv.empty_invariant == jv.empty(),
                ctx, [&] { return show(v); });

    const Subset both = cu.subset & jv;
    both.for_each([&](StateIndex s) {
      const Trace t = exec(w, s, synth_client(w, s, u).tree, srv.server);
      suite.check("programs.compatibility", u.contains(t.final_state) && jv.contains(t.final_state),
                  ctx, [&] { return "start " + sp->state_name(s); });
      suite.check("programs.trace_replay", replay(w, t) && t.start == s, ctx);
    });
  }
}

// --- simulation --------------------------------------------------------------

void sim_laws(Suite& suite, const InteractionStructure& wh, const InteractionStructure& wl,
              const InteractionStructure& wm, Rng& rng, const std::string& ctx) {
  // wh on S_h, wl on S_l, wm on S_l as a third structure for composition.
  const SpacePtr& sh = wh.source();
  const SpacePtr& sl = wl.source();
  const bool small = sh->size() <= kOracleLimit;

  const Relation r = random_relation(rng, sh, sl, 50);
  std::map<SimKind, bool> ok;
  for (SimKind kind : {SimKind::linear, SimKind::affine, SimKind::tc, SimKind::general}) {
    const SimCheck c = check_sim(wh, wl, r, kind);
    ok[kind] = c.ok();
    if (c.ok()) {
      auto defect = verify_cert(wh, wl, *c.cert);
      suite.check("simulation.cert_verifies", !defect && c.cert->relation == r, ctx,
                  [&] { return std::string(to_string(kind)) + " " + defect.value_or(""); });
    }
  }
  suite.check("simulation.linear_oracle", ok[SimKind::linear] == oracle::is_linear_sim(wh, wl, r),
              ctx, [&] { return to_string(r); });
  suite.check("simulation.general_oracle",
              ok[SimKind::general] == oracle::is_general_sim(wh, wl, r), ctx,
              [&] { return to_string(r); });
  if (small) {
    suite.check("simulation.subcommutativity",
                ok[SimKind::linear] == oracle::is_subcommutative(wh, wl, r), ctx,
                [&] { return to_string(r); });
  }
  suite.check("simulation.kind_hierarchy",
              (!ok[SimKind::linear] || (ok[SimKind::affine] && ok[SimKind::tc])) &&
                  (!ok[SimKind::affine] || ok[SimKind::general]) &&
                  (!ok[SimKind::tc] || ok[SimKind::general]),
              ctx, [&] { return to_string(r); });

  const Relation g_lin = greatest_sim(wh, wl, SimKind::linear);
  const Relation g_gen = greatest_sim(wh, wl, SimKind::general);
  suite.check("simulation.greatest_contains",
              check_sim(wh, wl, g_lin, SimKind::linear).ok() &&
                  check_sim(wh, wl, g_gen, SimKind::general).ok() && g_lin.subset_of(g_gen),
              ctx);
  for (const Relation& x : {g_lin, g_gen, g_lin & random_relation(rng, sh, sl, 70),
                            g_gen & random_relation(rng, sh, sl, 70)}) {
    suite.check("simulation.linear_oracle",
                check_sim(wh, wl, x, SimKind::linear).ok() == oracle::is_linear_sim(wh, wl, x),
                ctx, [&] { return to_string(x); });
    suite.check("simulation.general_oracle",
                check_sim(wh, wl, x, SimKind::general).ok() == oracle::is_general_sim(wh, wl, x),
                ctx, [&] { return to_string(x); });
    if (small) {
      suite.check("simulation.subcommutativity",
                  check_sim(wh, wl, x, SimKind::linear).ok() == oracle::is_subcommutative(wh, wl, x),
                  ctx, [&] { return to_string(x); });
    }
  }
  for (SimKind kind : {SimKind::linear, SimKind::general}) {
    if (ok[kind]) {
      suite.check("simulation.greatest_contains",
                  r.subset_of(kind == SimKind::linear ? g_lin : g_gen), ctx,
                  [&] { return to_string(r); });
    }
  }

  for (SimKind kind : {SimKind::linear, SimKind::general}) {
    const Relation a = largest_sim_within(wh, wl, random_relation(rng, sh, sl, 60), kind);
    const Relation b = largest_sim_within(wh, wl, random_relation(rng, sh, sl, 60), kind);
    suite.check("simulation.union_closure",
                check_sim(wh, wl, a, kind).ok() && check_sim(wh, wl, b, kind).ok() &&
                    check_sim(wh, wl, a | b, kind).ok(),
                ctx, [&] { return std::string(to_string(kind)); });
  }

  // Kleisli composition wh → wl → wm.
  const Relation r1 = largest_sim_within(wh, wl, random_relation(rng, sh, sl, 60),
                                         SimKind::general);
  const Relation q1 = largest_sim_within(wl, wm, random_relation(rng, sl, sl, 60),
                                         SimKind::general);
  const Relation r2 = saturate(r1, wl);
  const Relation q2 = saturate(q1, wm);
  const Relation c1 = kleisli_compose(r1, q1);
  const Relation c2 = kleisli_compose(r2, q2);
  const SimOrder ord = sim_compare(c1, c2, wm);
  suite.check("simulation.kleisli",
              check_sim(wh, wm, c1, SimKind::general).ok() &&
                  check_sim(wh, wm, c2, SimKind::general).ok() &&
                  (ord == SimOrder::leq || ord == SimOrder::equiv) &&
                  kleisli_compose(Relation::identity(sh), r1) == r1,
              ctx, [&] { return to_string(c1) + " vs " + to_string(c2); });

  // Saturation.
  const Relation sat = saturate(r, wl);
  const Relation bigger = r | random_relation(rng, sh, sl, 20);
  suite.check("simulation.saturation",
              r.subset_of(sat) && saturate(sat, wl) == sat &&
                  sat.subset_of(saturate(bigger, wl)) &&
                  sim_compare(r, sat, wl) == SimOrder::equiv,
              ctx, [&] { return to_string(r); });
  suite.check("simulation.saturation", check_sim(wh, wl, r2, SimKind::general).ok(), ctx,
              [&] { return "saturation of " + to_string(r1); });

  // Image of a post-fixpoint of w_h° under a linear simulation.
  const Relation lin = largest_sim_within(wh, wl, random_relation(rng, sh, sl, 60),
                                          SimKind::linear);
  for (const Subset& u : subsets(sh, rng)) {
    if (!u.subset_of(angel_step(wh, u))) continue;
    const Subset img = lin.image(u);
    suite.check("simulation.invariant_transport", img.subset_of(angel_step(wl, img)), ctx,
                [&] { return show(u); });
  }

  // Lifting and topology: conditions over every high subset.
  const bool gen = ok[SimKind::general];
  bool lifted = true;
  for (const Subset& u : subsets(sh, rng)) {
    const CoverResult ch = cover(wh, u);
    const Subset lo = cover(wl, r.image(u)).subset;
    for (std::size_t h = 0; h < sh->size(); ++h) {
      if (ch.stage[h] && !r.row(h).subset_of(lo)) lifted = false;
    }
  }
  suite.check("simulation.lifting", lifted == gen, ctx, [&] { return to_string(r); });

  if (gen) {
    for (const Subset& u : subsets(sh, rng)) {
      const Subset rhs = cover(wl, r.image(u)).subset;
      const Subset lhs = cover(wh, u).subset;
      bool fine = true;
      lhs.for_each([&](StateIndex s) { fine = fine && r.row(s).subset_of(rhs); });
      suite.check("topology.cover_transport", fine, ctx, [&] { return show(u); });
    }
  }
  if (small && sl->size() <= kOracleLimit) {
    const ContinuityReport cr = continuity_conditions(r, wh, wl, kExhaustive, kSamples, rng.next());
    suite.check("topology.sim_continuity",
                cr.cond1 == gen && (!gen || cr.cond2), ctx, [&] { return to_string(r); });
  }

  // Execution across a general simulation certificate.
  const SimCheck cg = check_sim(wh, wl, g_gen, SimKind::general);
  if (cg.ok()) {
    const Subset goal = random_subset(rng, sh);
    const ServerSynthesis srv = synth_server(wl, Subset::full(sl));
    const CoverResult cov = cover(wh, goal);
    for (std::size_t h = 0; h < sh->size(); ++h) {
      if (!cov.subset.contains(h)) continue;
      const ClientTree p = tree_from_cover(wh, cov, h);
      for (StateIndex l : g_gen.row(h).members()) {
        if (!srv.server.inv.contains(l)) continue;
        bool fine = true;
        std::string why;
        try {
          const AcrossResult res = exec_across(wh, wl, *cg.cert, h, l, p, srv.server);
          fine = goal.contains(res.final_high) && g_gen.contains(res.final_high, res.final_low) &&
                 replay(wh, res.high) && replay(wl, res.low);
          why = "final outside goal or relation";
        } catch (const Error& e) {
          fine = false;
          why = e.what();
        }
        suite.check("simulation.exec_across", fine, ctx, [&] {
          return "start (" + sh->state_name(h) + "," + sl->state_name(l) + "): " + why;
        });
      }
    }
  }
}

// --- topology ----------------------------------------------------------------

bool distributive(Suite& suite, const SelfSimulation& ss, const std::string& ctx) {
  const SpacePtr& sp = ss.structure().source();
  std::vector<Subset> opens;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << sp->size()); ++m) {
    const Subset o = localized_cover(ss, Subset::from_mask(sp, m));
    if (std::find(opens.begin(), opens.end(), o) == opens.end()) opens.push_back(o);
  }
  const std::size_t k = opens.size();
  auto join = [&](const std::vector<Subset>& fam) {
    Subset u(sp);
    for (const Subset& x : fam) u |= x;
    return localized_cover(ss, u);
  };
  bool all = true;
  for (std::size_t u = 0; u < k; ++u) {
    std::vector<std::vector<std::size_t>> families{{}};
    for (std::size_t a = 0; a < k; ++a) {
      families.push_back({a});
      for (std::size_t b = a + 1; b < k; ++b) {
        families.push_back({a, b});
        for (std::size_t c = b + 1; c < k; ++c) families.push_back({a, b, c});
      }
    }
    for (const auto& fam : families) {
      std::vector<Subset> vs, meets;
      for (std::size_t i : fam) {
        vs.push_back(opens[i]);
        meets.push_back(opens[u] & opens[i]);
      }
      const bool ok = (opens[u] & join(vs)) == join(meets);
      all = all && ok;
      suite.check("topology.distributivity", ok, ctx, [&] { return show(opens[u]); });
    }
  }
  return all;
}

void convergence(Suite& suite, const SelfSimulation& ss, Rng& rng, std::size_t samples,
                 const std::string& ctx) {
  const SpacePtr& sp = ss.structure().source();
  for (std::size_t i = 0; i < samples; ++i) {
    const Subset u = random_subset(rng, sp, 30);
    const Subset v = random_subset(rng, sp, 30);
    const Subset both = localized_cover(ss, u) & localized_cover(ss, v);
    const Subset meet = localized_cover(ss, bin_down(ss, u, v));
    suite.check("topology.convergence", both.subset_of(meet), ctx,
                [&] { return show(u) + " " + show(v); });
  }
}

void topology_laws(Suite& suite, const InteractionStructure& w, std::size_t cap, Rng& rng,
                   const std::string& ctx) {
  bool certified = true;
  std::optional<SelfSimulation> sat;
  try {
    sat = saturation_preorder(w);
  } catch (const InvalidPreorder&) {
    certified = false;
  }
  suite.check("topology.saturation_preorder", certified, ctx);
  if (sat && !check_localized(*sat)) {
    convergence(suite, *sat, rng, 8, ctx);
    if (w.source()->size() <= 4) distributive(suite, *sat, ctx + " sat");
  }

  if (w.source()->size() == 0) return;
  const StateIndex init = rng.below(w.source()->size());
  const LocalizedStructure l = localize(w, init, cap);
  if (l.structure.source()->size() > kLocalizedLimit) return;
  const SelfSimulation ss = SelfSimulation::certify(l.structure, l.leq);
  suite.check("topology.localized", !check_localized(ss), ctx,
              [&] { return "L(w) from " + w.source()->state_name(init); });
  convergence(suite, ss, rng, 8, ctx + " L(w)");
  if (l.structure.source()->size() <= 4) distributive(suite, ss, ctx + " L(w)");
}

void structure_laws(Suite& suite, const InteractionStructure& w, const LawOptions& opts, Rng& rng,
                    const std::string& ctx) {
  transition_laws(suite, w, rng, ctx);
  dual_laws(suite, w, opts.size_cap, rng, ctx);
  fixpoint_laws(suite, w, rng, ctx);
  program_laws(suite, w, rng, ctx);
  topology_laws(suite, w, opts.size_cap, rng, ctx);
}

}  // namespace

LawReport run_random_laws(const LawOptions& opts) {
  Suite suite;
  RandomShape shape{1, std::max<std::size_t>(1, opts.max_states), opts.max_commands,
                    opts.max_responses};
  for (std::size_t i = 0; i < opts.iterations; ++i) {
    Rng rng(Rng::derive(opts.seed, i));
    const std::string ctx = "iteration " + std::to_string(i);
    const SpacePtr s1 = random_space(rng, shape, "S");
    const SpacePtr s2 = random_space(rng, shape, "T");
    const InteractionStructure w1 = random_structure(rng, s1, shape, "w1");
    const InteractionStructure w2 = random_structure(rng, s1, shape, "w2");
    const InteractionStructure wl = random_structure(rng, s2, shape, "wl");
    const InteractionStructure wm = random_structure(rng, s2, shape, "wm");

    relation_laws(suite, s1, s2, rng, ctx);
    structure_laws(suite, w1, opts, rng, ctx);
    algebra_laws(suite, w1, w2, opts.size_cap, rng, ctx);
    product_laws(suite, w1, wl, opts.size_cap, rng, ctx);
    sim_laws(suite, w1, wl, wm, rng, ctx);
  }
  return suite.finish(opts.iterations);
}

LawReport run_model_laws(const ModelFile& model, const LawOptions& opts) {
  Suite suite;
  std::vector<const InteractionStructure*> ws;
  for (const auto& name : model.istruct_names()) {
    const InteractionStructure& w = model.istruct(name);
    if (w.homogeneous()) ws.push_back(&w);
  }
  for (std::size_t i = 0; i < opts.iterations; ++i) {
    Rng rng(Rng::derive(opts.seed, i));
    for (const InteractionStructure* w : ws) {
      const std::string ctx = "iteration " + std::to_string(i) + " " + w->name();
      relation_laws(suite, w->source(), w->source(), rng, ctx);
      structure_laws(suite, *w, opts, rng, ctx);
      for (const InteractionStructure* v : ws) {
        const std::string pctx = ctx + "/" + v->name();
        if (same_space(w->source(), v->source())) {
          algebra_laws(suite, *w, *v, opts.size_cap, rng, pctx);
        }
        product_laws(suite, *w, *v, opts.size_cap, rng, pctx);
        sim_laws(suite, *w, *v, *v, rng, pctx);
      }
    }
  }
  return suite.finish(opts.iterations);
}

}  // namespace ix::cli
