#include "ix/simulation.hpp"

#include "ix/error.hpp"
#include "ix/fixpoint.hpp"

namespace ix {

namespace {

/// The low-side obligation for one (s_h, a_h) under relation R.
class Obligation {
public:
  Obligation(const InteractionStructure& w_high, const InteractionStructure& w_low,
             const Relation& r, StateIndex high, CommandIndex command, SimKind kind)
      : w_high_(w_high), w_low_(w_low), r_(r), high_(high), command_(command), kind_(kind),
        target_(w_low.source()) {
    for (std::size_t d = 0; d < w_high.response_count(high, command); ++d) {
      target_ |= r.row(w_high.next(high, command, d));
    }
    if (kind == SimKind::tc || kind == SimKind::general) cov_ = cover(w_low, target_);
  }

  bool holds(StateIndex low) const {
    switch (kind_) {
      case SimKind::linear:
        return one_step_command(low, target_).has_value();
      case SimKind::affine:
        return target_.contains(low) || one_step_command(low, target_).has_value();
      case SimKind::tc:
        return one_step_command(low, cov_->subset).has_value();
      case SimKind::general:
        return cov_->subset.contains(low);
    }
    return false;
  }

  /// Requires holds(low).
  SimWitness witness(StateIndex low) const {
    SimWitness wit{high_, low, command_, ClientTree::exit(), {}};
    switch (kind_) {
      case SimKind::linear:
      case SimKind::affine: {
        if (kind_ == SimKind::affine && target_.contains(low)) break;
        const CommandIndex a = *one_step_command(low, target_);
        wit.program = ClientTree::call(
            a, std::vector<ClientTree>(w_low_.response_count(low, a), ClientTree::exit()));
        break;
      }
      case SimKind::tc: {
        const CommandIndex a = *one_step_command(low, cov_->subset);
        std::vector<ClientTree> branches;
        for (std::size_t d = 0; d < w_low_.response_count(low, a); ++d) {
          branches.push_back(tree_from_cover(w_low_, *cov_, w_low_.next(low, a, d)));
        }
        wit.program = ClientTree::call(a, std::move(branches));
        break;
      }
      case SimKind::general:
        wit.program = tree_from_cover(w_low_, *cov_, low);
        break;
    }
    for (const auto& e : client_exits(w_low_, low, wit.program)) {
      wit.exits.emplace_back(e.path, high_response_for(e.state));
    }
    return wit;
  }

private:
  std::optional<CommandIndex> one_step_command(StateIndex low, const Subset& goal) const {
    for (std::size_t a = 0; a < w_low_.command_count(low); ++a) {
      if (w_low_.successors(low, a).subset_of(goal)) return a;
    }
    return std::nullopt;
  }

  ResponseIndex high_response_for(StateIndex low_exit) const {
    for (std::size_t d = 0; d < w_high_.response_count(high_, command_); ++d) {
      if (r_.contains(w_high_.next(high_, command_, d), low_exit)) return d;
    }
    throw Error("simulation: exit outside the target");  // unreachable when holds()
  }

  const InteractionStructure& w_high_;
  const InteractionStructure& w_low_;
  const Relation& r_;
  StateIndex high_;
  CommandIndex command_;
  SimKind kind_;
  Subset target_;
  std::optional<CoverResult> cov_;
};

void require_sim_shape(const InteractionStructure& w_high, const InteractionStructure& w_low,
                       const Relation& r, const char* op) {
  require_homogeneous(w_high, op);
  require_homogeneous(w_low, op);
  require_same_space(w_high.source(), r.domain(), op);
  require_same_space(w_low.source(), r.codomain(), op);
}

}  // namespace

SimCheck check_sim(const InteractionStructure& w_high, const InteractionStructure& w_low,
                   const Relation& r, SimKind kind) {
  require_sim_shape(w_high, w_low, r, "check_sim");
  SimCert cert{kind, r, {}};
  for (std::size_t h = 0; h < w_high.source()->size(); ++h) {
    if (r.row(h).empty()) continue;
    std::vector<Obligation> obligations;
    for (std::size_t a = 0; a < w_high.command_count(h); ++a) {
      obligations.emplace_back(w_high, w_low, r, h, a, kind);
    }
    std::optional<SimCounterexample> bad;
    r.row(h).for_each([&](StateIndex l) {
      if (bad) return;
      for (std::size_t a = 0; a < obligations.size(); ++a) {
        if (!obligations[a].holds(l)) {
          bad = SimCounterexample{h, l, a};
          return;
        }
        cert.witnesses.push_back(obligations[a].witness(l));
      }
    });
    if (bad) return SimCheck{std::nullopt, bad};
  }
  return SimCheck{std::move(cert), std::nullopt};
}

Relation largest_sim_within(const InteractionStructure& w_high, const InteractionStructure& w_low,
                            const Relation& start, SimKind kind) {
  require_sim_shape(w_high, w_low, start, "largest_sim_within");
  Relation r = start;
  bool changed = true;
  while (changed) {
    changed = false;
    Relation next = r;
    for (std::size_t h = 0; h < w_high.source()->size(); ++h) {
      if (r.row(h).empty()) continue;
      for (std::size_t a = 0; a < w_high.command_count(h); ++a) {
        const Obligation ob(w_high, w_low, r, h, a, kind);
        r.row(h).for_each([&](StateIndex l) {
          if (next.contains(h, l) && !ob.holds(l)) {
            next.erase(h, l);
            changed = true;
          }
        });
      }
    }
    r = std::move(next);
  }
  return r;
}

Relation greatest_sim(const InteractionStructure& w_high, const InteractionStructure& w_low,
                      SimKind kind) {
  return largest_sim_within(w_high, w_low, Relation::full(w_high.source(), w_low.source()), kind);
}

Relation kleisli_compose(const Relation& r, const Relation& q) { return compose(r, q); }

Relation saturate(const Relation& r, const InteractionStructure& w_low) {
  require_homogeneous(w_low, "saturate");
  require_same_space(w_low.source(), r.codomain(), "saturate");
  Relation out(r.domain(), r.codomain());
  for (std::size_t h = 0; h < r.domain()->size(); ++h) out.row(h) = cover(w_low, r.row(h)).subset;
  return out;
}

const char* to_string(SimOrder order) {
  switch (order) {
    case SimOrder::leq:
      return "leq";
    case SimOrder::geq:
      return "geq";
    case SimOrder::equiv:
      return "equiv";
    case SimOrder::incomparable:
      return "incomparable";
  }
  return "?";
}

SimOrder sim_compare(const Relation& r, const Relation& q, const InteractionStructure& w_low) {
  require_same_space(r.domain(), q.domain(), "sim_compare");
  require_same_space(r.codomain(), q.codomain(), "sim_compare");
  const Relation sr = saturate(r, w_low);
  const Relation sq = saturate(q, w_low);
  const bool le = sr.subset_of(sq);
  const bool ge = sq.subset_of(sr);
  if (le && ge) return SimOrder::equiv;
  if (le) return SimOrder::leq;
  if (ge) return SimOrder::geq;
  return SimOrder::incomparable;
}

}  // namespace ix
