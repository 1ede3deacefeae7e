#!/usr/bin/env python3
"""Brute-force recomputation of the fixture ledger.

Every value is computed from hard-coded fixture tables by the most direct
method available (subset scans, relation scans, explicit tree search), with
no code shared with the C++ library. Writes the ledger as JSON, or with
--check compares against an existing ledger file.
"""

import argparse
import itertools
import json
import sys


def structure(states, table):
    return {"states": states, "cmds": {s: table.get(s, []) for s in states}}


COUNT3 = structure(["s0", "s1", "s2"], {
    "s0": [("inc", [("ok", "s1")])],
    "s1": [("inc", [("ok", "s2")])],
})
COIN = structure(["s", "win", "lose"], {
    "s": [("play", [("good", "win"), ("bad", "lose")])],
})
MAGIC = structure(["m"], {"m": [("go", [])]})
JUMP2 = structure(["a0", "a2"], {"a0": [("jump", [("ok", "a2")])]})


def subsets(states):
    for n in range(len(states) + 1):
        for c in itertools.combinations(states, n):
            yield frozenset(c)


def order(w, xs):
    return [s for s in w["states"] if s in xs]


def angel(w, u):
    return frozenset(s for s in w["states"]
                     if any(all(n in u for _, n in ds) for _, ds in w["cmds"][s]))


def demon(w, u):
    return frozenset(s for s in w["states"]
                     if all(any(n in u for _, n in ds) for _, ds in w["cmds"][s]))


def cover(w, u):
    """Least X ⊇ U with angel(X) ⊆ X, by scanning every subset."""
    best = frozenset(w["states"])
    for x in subsets(w["states"]):
        if u <= x and angel(w, x) <= x:
            best &= x
    return best


def stages(w, u):
    """Entry round of each state in the iterates U, U ∪ angel(U), ..."""
    st = {s: 0 for s in u}
    cur, k = frozenset(u), 0
    while True:
        k += 1
        nxt = cur | angel(w, cur)
        if nxt == cur:
            return st
        for s in nxt - cur:
            st[s] = k
        cur = nxt


def interior(w, v):
    """Greatest X ⊆ V with X ⊆ demon(X), by scanning every subset."""
    best = frozenset()
    for x in subsets(w["states"]):
        if x <= v and x <= demon(w, x):
            best |= x
    return best


def least_response(w, s, a, inv):
    for d, n in dict(w["cmds"][s])[a]:
        if n in inv:
            return d
    return None


def dual_sizes(w):
    out = []
    for s in w["states"]:
        p = 1
        for _, ds in w["cmds"][s]:
            p *= len(ds)
        out.append(p)
    return out


def is_linear(wh, wl, r):
    for h, l in r:
        for _, dhs in wh["cmds"][h]:
            if not any(all(any((nh, nl) in r for _, nh in dhs) for _, nl in dls)
                       for _, dls in wl["cmds"][l]):
                return False
    return True


def has_tree(w, s, goal, depth):
    if s in goal:
        return True
    if depth == 0:
        return False
    return any(all(has_tree(w, n, goal, depth - 1) for _, n in ds) for _, ds in w["cmds"][s])


def is_general(wh, wl, r):
    for h, l in r:
        for _, dhs in wh["cmds"][h]:
            target = frozenset(y for (x, y) in r if x in {nh for _, nh in dhs})
            if not has_tree(wl, l, target, len(wl["states"])):
                return False
    return True


def all_relations(a, b):
    pairs = [(x, y) for x in a for y in b]
    for mask in range(1 << len(pairs)):
        yield frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)


def greatest(wh, wl, test):
    best = frozenset()
    for r in all_relations(wh["states"], wl["states"]):
        if test(wh, wl, r):
            best |= r
    return best


def pairs_list(wh, wl, r):
    return [[x, y] for x in wh["states"] for y in wl["states"] if (x, y) in r]


def sat_preorder(w):
    return frozenset((s, t) for t in w["states"] for s in cover(w, {t}))


def identity(w):
    return frozenset((s, s) for s in w["states"])


def down(leq, u):
    return frozenset(s for (s, t) in leq if t in u)


def up(leq, u):
    return frozenset(t for (s, t) in leq if s in u)


def localized_counterexample(w, leq):
    for s1 in w["states"]:
        for s2 in w["states"]:
            if (s1, s2) not in leq:
                continue
            for a, ds in w["cmds"][s2]:
                succ = frozenset(n for _, n in ds)
                target = down(leq, succ) & down(leq, {s1})
                if s1 not in cover(w, target):
                    return [s1, s2, a]
    return None


def formal_point(w, leq, alpha):
    if interior(w, up(leq, alpha)) != alpha:
        return "closed"
    if not alpha:
        return "nonempty"
    for s1 in w["states"]:
        for s2 in w["states"]:
            if s1 in alpha and s2 in alpha:
                if not (down(leq, {s1}) & down(leq, {s2}) & alpha):
                    return "convergent"
    return "ok"


def continuous(wh, wl, r, leq_h, leq_l):
    if not is_general(wh, wl, r):
        return "simulation"
    img = frozenset(y for (_, y) in r)
    if cover(wl, down(leq_l, img)) != frozenset(wl["states"]):
        return "totality"
    for s1 in wh["states"]:
        for s2 in wh["states"]:
            r1 = frozenset(y for (x, y) in r if x == s1)
            r2 = frozenset(y for (x, y) in r if x == s2)
            lhs = down(leq_l, r1) & down(leq_l, r2)
            meet = down(leq_h, {s1}) & down(leq_h, {s2})
            rhs = cover(wl, down(leq_l, frozenset(y for (x, y) in r if x in meet)))
            if not lhs <= rhs:
                return "convergence"
    return "ok"


def localize_states(w, init):
    """Reachable log sets of L(w) from {init}, breadth first."""
    start = frozenset({init})
    seen, queue = [start], [start]
    while queue:
        cur = queue.pop(0)
        for s in order(w, cur):
            for _, ds in w["cmds"][s]:
                for _, n in ds:
                    nxt = cur | {n}
                    if nxt not in seen:
                        seen.append(nxt)
                        queue.append(nxt)
    return seen


def client_to_goal(w, s, goal, st):
    """Walk the stage witnesses: at stage k pick the first command whose
    responses all have smaller stages."""
    if st[s] == 0:
        return "exit"
    for a, ds in w["cmds"][s]:
        if all(n in st and st[n] < st[s] for _, n in ds):
            return (a, {d: client_to_goal(w, n, goal, st) for d, n in ds})
    raise AssertionError("no witness")


def run(w, s, tree, choice):
    steps = []
    while tree != "exit":
        a, branches = tree
        d = choice[(s, a)]
        n = dict(dict(w["cmds"][s])[a])[d]
        steps.append([s, a, d, n])
        s, tree = n, branches[d]
    return steps, s


def server_choice(w, v):
    inv = interior(w, v)
    return {(s, a): least_response(w, s, a, inv)
            for s in inv for a, _ in w["cmds"][s]}


def compute():
    L = {}
    all3 = frozenset(COUNT3["states"])

    L["one_step count3 angel {s2}"] = order(COUNT3, angel(COUNT3, {"s2"}))
    L["one_step coin demon {win}"] = order(COIN, demon(COIN, {"win"}))

    L["cover count3 {s2}"] = order(COUNT3, cover(COUNT3, {"s2"}))
    st = stages(COUNT3, {"s2"})
    L["cover count3 {s2} stages"] = {s: st[s] for s in order(COUNT3, st)}
    L["cover coin {win}"] = order(COIN, cover(COIN, {"win"}))
    L["cover magic {}"] = order(MAGIC, cover(MAGIC, frozenset()))
    L["interior count3 full"] = order(COUNT3, interior(COUNT3, all3))
    L["interior count3 {s0,s1}"] = order(COUNT3, interior(COUNT3, {"s0", "s1"}))
    L["interior coin {s,win}"] = order(COIN, interior(COIN, {"s", "win"}))
    L["interior coin {s,win} choice s play"] = least_response(
        COIN, "s", "play", interior(COIN, {"s", "win"}))
    L["interior magic full"] = order(MAGIC, interior(MAGIC, {"m"}))

    L["dual sizes count3"] = dual_sizes(COUNT3)
    L["dual sizes coin"] = dual_sizes(COIN)
    L["dual sizes magic"] = dual_sizes(MAGIC)

    L["factorize count3 mid"] = [f"({s},{a})" for s in COUNT3["states"]
                                 for a, _ in COUNT3["cmds"][s]]

    lin = greatest(COUNT3, COUNT3, is_linear)
    gen = greatest(COUNT3, COUNT3, is_general)
    L["greatest linear count3"] = pairs_list(COUNT3, COUNT3, lin)
    L["greatest general count3"] = pairs_list(COUNT3, COUNT3, gen)
    sat = frozenset(("s2", y) for y in cover(COUNT3, {"s2"}))
    L["saturate {(s2,s2)} count3"] = pairs_list(COUNT3, COUNT3, sat)

    refine = frozenset({("a0", "s0"), ("a2", "s2")})
    L["jump2 count3 linear"] = is_linear(JUMP2, COUNT3, refine)
    L["jump2 count3 general"] = is_general(JUMP2, COUNT3, refine)

    L["localize count3 s0"] = ["{" + ",".join(order(COUNT3, x)) + "}"
                               for x in localize_states(COUNT3, "s0")]
    L["localize magic m"] = ["{" + ",".join(order(MAGIC, x)) + "}"
                             for x in localize_states(MAGIC, "m")]

    sp = sat_preorder(COUNT3)
    L["saturation preorder count3"] = pairs_list(COUNT3, COUNT3, sp)
    L["saturation preorder coin"] = pairs_list(COIN, COIN, sat_preorder(COIN))
    L["down count3-sat {s2}"] = order(COUNT3, down(sp, {"s2"}))
    L["bin_down count3-sat {s1} {s2}"] = order(COUNT3, down(sp, {"s1"}) & down(sp, {"s2"}))
    L["localized count3-sat"] = localized_counterexample(COUNT3, sp)
    L["localized count3-identity"] = localized_counterexample(COUNT3, identity(COUNT3))

    ls = localize_states(COUNT3, "s0")
    names = ["{" + ",".join(order(COUNT3, x)) + "}" for x in ls]
    lw = structure(names, {})
    for i, cur in enumerate(ls):
        cmds = []
        for s in order(COUNT3, cur):
            for a, ds in COUNT3["cmds"][s]:
                cmds.append((f"({s},{a})",
                             [(d, names[ls.index(cur | {n})]) for d, n in ds]))
        lw["cmds"][names[i]] = cmds
    lleq = frozenset((names[i], names[j]) for i in range(len(ls)) for j in range(len(ls))
                     if ls[i] >= ls[j])
    L["localized L(count3)"] = localized_counterexample(lw, lleq)

    L["point count3-sat full"] = formal_point(COUNT3, sp, all3)
    L["point coin-identity {s,win}"] = formal_point(COIN, identity(COIN), frozenset({"s", "win"}))

    L["continuous identity count3"] = continuous(COUNT3, COUNT3, identity(COUNT3), sp, sp)
    L["continuous jump2 count3"] = continuous(JUMP2, COUNT3, refine, sat_preorder(JUMP2), sp)

    tree = client_to_goal(COUNT3, "s0", {"s2"}, stages(COUNT3, {"s2"}))
    steps, final = run(COUNT3, "s0", tree, server_choice(COUNT3, all3))
    L["exec count3 s0 {s2}"] = {"steps": steps, "final": final}

    # Across the identity: each high inc is one low inc.
    L["exec_across identity count3"] = {"final": [final, final], "low_steps": len(steps)}
    # Across refine: the high jump expands to the low tree inc;inc.
    jt = client_to_goal(JUMP2, "a0", {"a2"}, stages(JUMP2, {"a2"}))
    low_tree = client_to_goal(COUNT3, "s0", {"s2"}, stages(COUNT3, {"s2"}))
    hsteps, hfinal = run(JUMP2, "a0", jt, {("a0", "jump"): "ok"})
    lsteps, lfinal = run(COUNT3, "s0", low_tree, server_choice(COUNT3, all3))
    L["exec_across jump2 count3"] = {"final": [hfinal, lfinal], "low_steps": len(lsteps),
                                     "high_steps": len(hsteps)}
    return L


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out")
    ap.add_argument("--check")
    args = ap.parse_args()
    text = json.dumps(compute(), indent=2, sort_keys=True) + "\n"
    if args.check:
        with open(args.check, encoding="utf-8") as f:
            frozen = f.read()
        if frozen != text:
            sys.stderr.write("ledger differs from recomputation\n")
            return 1
        print("ledger matches")
        return 0
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
