"""Deterministic enumeration of small instances and the statement sweep.

Rings are enumerated as staircase quotients (one per down-closed set of
standard monomials, every variable alive, the field listed once at one
variable), ideals as up-closed sets of nonunit standard monomials, and
modules as cyclic quotients plus small multi-generator presentations.
Identical bounds and prime always produce byte-identical catalogs.
"""

import itertools
import json
import random

from . import modules, rings
from .rings import Ideal, MonomialAlgebra
from .statements import STATEMENTS, Workspace, run_statement

MAX_VARS = 3
MAX_LEN = 12


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------


def _down_sets(nvars, max_len):
    """All down-closed exponent sets containing 0 with at most max_len cells."""
    start = frozenset({(0,) * nvars})
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for d in frontier:
            if len(d) >= max_len:
                continue
            for e in d:
                for v in range(nvars):
                    f = tuple(a + 1 if u == v else a for u, a in enumerate(e))
                    if f in d:
                        continue
                    ok = True
                    for u in range(nvars):
                        if f[u] > 0:
                            g = tuple(a - 1 if w == u else a for w, a in enumerate(f))
                            if g not in d:
                                ok = False
                                break
                    if ok:
                        nd = frozenset(d | {f})
                        if nd not in seen:
                            seen.add(nd)
                            nxt.append(nd)
        frontier = nxt
    return seen


def _staircase_of_down_set(d, nvars):
    gens = set()
    for e in d | {(0,) * nvars}:
        for v in range(nvars):
            f = tuple(a + 1 if u == v else a for u, a in enumerate(e))
            if f in d:
                continue
            ok = True
            for u in range(nvars):
                if f[u] > 0:
                    g = tuple(a - 1 if w == u else a for w, a in enumerate(f))
                    if g not in d:
                        ok = False
                        break
            if ok:
                gens.add(f)
    return tuple(sorted(gens))


def enumerate_rings(max_vars, max_len, p=rings.DEFAULT_P):
    """Every Artinian monomial quotient within the bounds, exactly once,
    in canonical order.  Quotients with a dead variable are represented at
    the lower variable count; the field appears once, at one variable."""
    if not (1 <= max_vars <= MAX_VARS):
        raise ValueError(f"max_vars must be in [1, {MAX_VARS}]")
    if not (1 <= max_len <= MAX_LEN):
        raise ValueError(f"max_len must be in [1, {MAX_LEN}]")
    found = []
    for nvars in range(1, max_vars + 1):
        units = [tuple(1 if u == v else 0 for u in range(nvars)) for v in range(nvars)]
        for d in _down_sets(nvars, max_len):
            if nvars >= 2 and not all(e in d for e in units):
                continue
            found.append((nvars, len(d), _staircase_of_down_set(d, nvars)))
    found.sort()
    return [MonomialAlgebra(nv, stair, p=p) for nv, _, stair in found]


def enumerate_ideals(ring, mode="monomial"):
    """Monomial ideals of R: up-closed subsets of the nonunit standard
    monomials, canonical order (by length, then generators).  The zero
    ideal is first; the unit ideal is excluded."""
    if mode not in ("monomial", "all-m2I-zero"):
        raise ValueError(f"unknown ideal enumeration mode {mode!r}")
    nonunit = list(ring.basis[1:])
    upsets = []
    for k in range(len(nonunit) + 1):
        for subset in itertools.combinations(nonunit, k):
            cells = set(subset)
            ok = True
            for e in cells:
                for v in range(ring.nvars):
                    f = tuple(a + 1 if u == v else a for u, a in enumerate(e))
                    if f in ring.index and f not in cells:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                gens = tuple(
                    sorted(
                        e
                        for e in cells
                        if not any(
                            f != e
                            and all(a <= b for a, b in zip(f, e))
                            for f in cells
                        )
                    )
                )
                upsets.append((len(cells), gens))
    upsets.sort()
    out = []
    for _, gens in upsets:
        ideal = Ideal(ring, [ring.monomial(g) for g in gens])
        if mode == "all-m2I-zero" and not rings.m2I_is_zero(ring, ideal):
            continue
        out.append(ideal)
    return out


def _term(exp):
    return {"c": 1, "e": [int(a) for a in exp]}


class ModuleInstance:
    """A module together with its presentation fingerprint."""

    def __init__(self, module, fingerprint):
        self.module = module
        self.fingerprint = fingerprint

    def __repr__(self):
        return f"ModuleInstance({json.dumps(self.fingerprint, sort_keys=True)})"


def enumerate_modules(ring, max_gens=1, max_rels=2):
    """Cyclic quotients R/J over every proper monomial ideal, plus
    presentations with up to max_gens generators and max_rels columns of
    nonunit-monomial entries.  Canonical order; the zero module never
    appears."""
    if not (1 <= max_gens <= 3):
        raise ValueError("max_gens must be in [1, 3]")
    if not (0 <= max_rels <= 3):
        raise ValueError("max_rels must be in [0, 3]")
    out = []
    for ideal in enumerate_ideals(ring):
        fp = {
            "gens": 1,
            "relations": [[[_term(e)]] for e in _monomial_gens(ideal)],
        }
        out.append(ModuleInstance(modules.cyclic(ring, ideal), fp))
    nonunit = [e for e in ring.basis[1:]]
    for g in range(2, max_gens + 1):
        entry_choices = [None] + nonunit  # None encodes a zero entry
        columns = [
            col
            for col in itertools.product(entry_choices, repeat=g)
            if any(x is not None for x in col)
        ]
        total = sum(
            _n_multisets(len(columns), r) for r in range(1, max_rels + 1)
        )
        if total > 200_000:
            raise ValueError("bounds exceeded: too many presentations to enumerate")
        for r in range(1, max_rels + 1):
            for combo in itertools.combinations_with_replacement(range(len(columns)), r):
                cols = [columns[i] for i in combo]
                rel_cols = [
                    [ring.monomial(e) if e is not None else ring.zero() for e in col]
                    for col in cols
                ]
                mod = modules.cokernel(ring, g, rel_cols)
                fp = {
                    "gens": g,
                    "relations": [
                        [[_term(e)] if e is not None else [] for e in col]
                        for col in cols
                    ],
                }
                out.append(ModuleInstance(mod, fp))
    return out


def _n_multisets(n, r):
    import math

    return math.comb(n + r - 1, r)


def _monomial_gens(ideal):
    gens = []
    for g in ideal.gens:
        nz = g.nonzero()[0]
        assert len(nz) == 1 and g[nz[0]] == 1
        gens.append(ideal.ring.basis[int(nz[0])])
    return sorted(gens)


# --------------------------------------------------------------------------
# instance sweep
# --------------------------------------------------------------------------


def _instance_fingerprint(ring, ideal=None, mods=()):
    return {
        "p": ring.p,
        "staircase": [list(g) for g in ring.staircase],
        "ideal": None if ideal is None else [[_term(e)] for e in _monomial_gens(ideal)],
        "modules": [m.fingerprint for m in mods],
    }


def _statement_summary(report):
    return {
        "applicable": report.applicable,
        "conclusion": report.conclusion,
        "counterexample": report.is_counterexample,
    }


def _entry_line(entry):
    return json.dumps(entry, sort_keys=True, separators=(",", ":"))


def suite_tasks(ring, ideals, mods, depth, window):
    """Deterministic task list: (statement_id, kwargs, fingerprint parts)."""
    tasks = []
    tasks.append(("cor34", {}, None, ()))
    for ideal in ideals:
        for sid in ("bettiomega", "prop31"):
            tasks.append((sid, {"I": ideal}, ideal, ()))
        for m in mods:
            kwargs = {"I": ideal, "M": m.module}
            for sid in ("property.1", "property.2", "property.3",
                        "betti1socle", "socle-lemma", "duality-bound"):
                tasks.append((sid, dict(kwargs), ideal, (m,)))
            tasks.append(("dual-freeness", dict(kwargs, window=window), ideal, (m,)))
            tasks.append(("cor35", dict(kwargs, i=2), ideal, (m,)))
        for m in mods:
            for n in mods:
                kwargs = {"I": ideal, "M": m.module, "N": n.module}
                pair = (m, n)
                tasks.append(("property.5", dict(kwargs), ideal, pair))
                for i in sorted({1, min(2, depth)}):
                    for sid in ("bettiandgamma.1", "bettiandgamma.2",
                                "bettiandgamma.3", "tor-converse.1",
                                "tor-converse.2"):
                        tasks.append((sid, dict(kwargs, i=i), ideal, pair))
                tasks.append(("tor-propagation", dict(kwargs, i=1, j=2), ideal, pair))
                tasks.append(("integrality.1", dict(kwargs), ideal, pair))
                tasks.append(("integrality.2", dict(kwargs), ideal, pair))
                tasks.append(("imbetti.1", dict(kwargs), ideal, pair))
                tasks.append(("imbetti.2", dict(kwargs), ideal, pair))
                tasks.append(("sum", dict(kwargs), ideal, pair))
                for i in (0, 1):
                    tasks.append(("purebetti", dict(kwargs, i=i), ideal, pair))
                tasks.append(("socle-corollary", dict(kwargs), ideal, pair))
                tasks.append(("three-vanish", dict(kwargs, j=1), ideal, pair))
                tasks.append(("three-vanish-freeness", dict(kwargs, j=2), ideal, pair))
                tasks.append(("prop2", dict(kwargs, window=window), ideal, pair))
    return tasks


def _property4_submodules(ws, ideals, inst):
    subs = []
    for ideal in ideals:
        subs.append(
            ("ideal_multiple", _ideal_label(ideal), modules.ideal_times(inst.module, ideal))
        )
    subs.append(("socle", "socle", modules.socle(inst.module)))
    return subs


def _ideal_label(ideal):
    return json.dumps([[_term(e)] for e in _monomial_gens(ideal)], sort_keys=True)


def run_suite(max_vars, max_len, depth=4, out_path=None, p=rings.DEFAULT_P,
              seed=None, sample=None, max_gens=1, probe=False):
    """Run every checker over every corpus instance; optionally write the
    JSONL catalog (header first, entries sorted by fingerprint) plus a
    findings file for the flagged statement."""
    window = (3, depth) if depth >= 3 else (1, depth)
    mode = "probe" if probe else "check"
    ring_list = enumerate_rings(max_vars, max_len, p=p)
    per_statement = {
        sid: {"evaluated": 0, "applicable": 0, "true": 0, "false": 0}
        for sid in sorted(STATEMENTS)
    }
    counterexamples = []
    flagged = []
    findings = []
    entries = []

    for ring in ring_list:
        ws = Workspace(ring, max_depth=max(depth + 3, 8))
        ideals = [i for i in enumerate_ideals(ring) if i.is_proper]
        mods = enumerate_modules(ring, max_gens=max_gens)
        tasks = suite_tasks(ring, ideals, mods, depth, window)
        if sample is not None:
            rng = random.Random(f"{seed}:{json.dumps(ring.fingerprint(), sort_keys=True)}")
            keep = min(sample, len(tasks))
            idx = sorted(rng.sample(range(len(tasks)), keep))
            tasks = [tasks[i] for i in idx]

        grouped = {}
        for sid, kwargs, ideal, fp_mods in tasks:
            report = run_statement(ws, sid, mode=mode, **kwargs)
            stats = per_statement[sid]
            stats["evaluated"] += 1
            if report.applicable:
                stats["applicable"] += 1
                if report.conclusion is True:
                    stats["true"] += 1
                elif report.conclusion is False:
                    stats["false"] += 1
            fp_key = _entry_line(_instance_fingerprint(ring, ideal, fp_mods))
            grouped.setdefault(fp_key, {})[sid] = report
            if report.is_counterexample:
                info = STATEMENTS[sid]
                record = {
                    "statement_id": sid,
                    "fingerprint": json.loads(fp_key),
                    "scope": info.scope,
                    "open_question": info.open_question,
                    "stated_reading_gap": info.stated_reading_gap,
                    "data": report.to_dict()["data"],
                }
                if info.open_question or info.stated_reading_gap or info.scope == "window":
                    flagged.append(record)
                else:
                    counterexamples.append(record)

        # the flagged statement: failures are findings, never counterexamples
        for ideal in ideals:
            for m in mods:
                for kind, label, sub in _property4_submodules(ws, ideals, m):
                    rep = run_statement(ws, "property.4", mode=mode,
                                        I=ideal, M=m.module, submodule=sub)
                    stats = per_statement["property.4"]
                    stats["evaluated"] += 1
                    if rep.applicable:
                        stats["applicable"] += 1
                        if rep.conclusion is True:
                            stats["true"] += 1
                        elif rep.conclusion is False:
                            stats["false"] += 1
                            findings.append({
                                "statement_id": "property.4",
                                "fingerprint": _instance_fingerprint(ring, ideal, (m,)),
                                "submodule": {"kind": kind, "label": label,
                                              "length": int(sub.length)},
                                "data": rep.to_dict()["data"],
                            })

        for fp_key, reports in grouped.items():
            fp = json.loads(fp_key)
            entry = {
                "kind": "entry",
                "fingerprint": fp,
                "invariants": _entry_invariants(ws, fp, ring),
                "tor_pattern": _entry_tor_pattern(ws, fp, ring, depth),
                "statements": {
                    sid: _statement_summary(rep) for sid, rep in sorted(reports.items())
                },
            }
            entries.append((fp_key, entry))

    entries.sort(key=lambda kv: kv[0])
    header = {
        "kind": "header",
        "version": 1,
        "p": p,
        "bounds": {"max_vars": max_vars, "max_len": max_len, "max_gens": max_gens},
        "depth": depth,
        "window": list(window),
        "seed": seed,
        "sample": sample,
    }
    flagged.sort(key=_entry_line)
    summary = {
        "instances": len(entries),
        "per_statement": per_statement,
        "counterexamples": counterexamples,
        "flagged": flagged,
        "findings": len(findings),
        "rings": len(ring_list),
    }
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(_entry_line(header) + "\n")
            for _, entry in entries:
                fh.write(_entry_line(entry) + "\n")
        with open(str(out_path) + ".findings.jsonl", "w", encoding="utf-8") as fh:
            for item in findings:
                fh.write(_entry_line(item) + "\n")
            for item in flagged:
                fh.write(_entry_line(item) + "\n")
    summary["findings_detail"] = findings
    return summary


def _entry_invariants(ws, fp, ring):
    base = {
        "len_r": ring.dim,
        "socdim": ring.socle_dim(),
        "loewy": rings.loewy_length(ring),
        "embdim": ws.ring_e(),
    }
    if fp["ideal"] is not None:
        gens = [ws.ring.element([(t["c"], tuple(t["e"])) for t in poly])
                for poly in fp["ideal"]]
        inv = ws.invariants(Ideal(ring, gens))
        base.update({"s": inv.s, "h": inv.h, "c": inv.c})
    return base


def _entry_tor_pattern(ws, fp, ring, depth):
    mods = fp["modules"]
    if not mods:
        return None
    first = _module_from_fp(ring, mods[0])
    second = _module_from_fp(ring, mods[1]) if len(mods) > 1 else first
    return [ws.tor_len(first, second, i) == 0 for i in range(1, depth + 1)]


def _module_from_fp(ring, fp):
    cols = []
    for col in fp["relations"]:
        cols.append([
            ring.element([(t["c"], tuple(t["e"])) for t in poly]) for poly in col
        ])
    return modules.cokernel(ring, fp["gens"], cols)


def search_witnesses(statement_id, max_vars, max_len, depth=4, p=rings.DEFAULT_P,
                     max_gens=1):
    """All corpus instances whose hypotheses hold for the statement, each
    re-verified in a fresh workspace."""
    if statement_id not in STATEMENTS:
        raise KeyError(f"unknown statement {statement_id!r}")
    window = (3, depth) if depth >= 3 else (1, depth)
    hits = []
    for ring in enumerate_rings(max_vars, max_len, p=p):
        ws = Workspace(ring, max_depth=max(depth + 3, 8))
        ideals = [i for i in enumerate_ideals(ring) if i.is_proper]
        mods = enumerate_modules(ring, max_gens=max_gens)
        if statement_id == "property.4":
            tasks = [
                ("property.4", {"I": ideal, "M": m.module, "submodule": sub}, ideal, (m,))
                for ideal in ideals
                for m in mods
                for _, _, sub in _property4_submodules(ws, ideals, m)
            ]
        else:
            tasks = [t for t in suite_tasks(ring, ideals, mods, depth, window)
                     if t[0] == statement_id]
        for sid, kwargs, ideal, fp_mods in tasks:
            report = run_statement(ws, sid, **kwargs)
            if not report.applicable:
                continue
            recheck = run_statement(Workspace(ring), sid, **kwargs)
            assert json.dumps(recheck.to_dict(), sort_keys=True) == json.dumps(
                report.to_dict(), sort_keys=True
            )
            fp = _instance_fingerprint(ring, ideal, fp_mods)
            hits.append({
                "fingerprint": fp,
                "statement_id": sid,
                "conclusion": report.conclusion,
                "report": report.to_dict(),
            })
    hits.sort(key=lambda h: _entry_line(h["fingerprint"]))
    return hits
