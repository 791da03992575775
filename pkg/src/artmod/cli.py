"""Command-line surface.

Instances are JSON files: {"p": prime, "vars": [names], "staircase":
[exponent arrays], "ideal_I": [polynomials], "modules": {name: {"gens":
g, "relations": [columns]}}} where a polynomial is an array of terms
{"c": coefficient, "e": exponent array} and a column is an array of g
polynomials.  "p" may be omitted; then ARTMOD_P (default 101) applies.

Exit status: 0 success, 1 error, 2 a counterexample was found.
"""

import argparse
import json
import os
import sys

from . import explore, homology, modules, resolutions, rings
from .rings import Ideal, MonomialAlgebra
from .statements import STATEMENTS, Workspace, fmt_q, run_statement


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def default_p():
    raw = os.environ.get("ARTMOD_P", "").strip()
    return int(raw) if raw else rings.DEFAULT_P


def _require(cond, path, msg):
    if not cond:
        raise CliError(f"{path}: {msg}")


def _parse_poly(ring, poly, path):
    _require(isinstance(poly, list), path, "polynomial must be an array of terms")
    terms = []
    for t, term in enumerate(poly):
        tp = f"{path}[{t}]"
        _require(isinstance(term, dict), tp, "term must be an object")
        _require("c" in term and "e" in term, tp, 'term needs "c" and "e"')
        _require(isinstance(term["c"], int), tp + ".c", "coefficient must be an integer")
        e = term["e"]
        _require(
            isinstance(e, list) and len(e) == ring.nvars
            and all(isinstance(a, int) and a >= 0 for a in e),
            tp + ".e",
            f"exponent array of {ring.nvars} nonnegative integers expected",
        )
        terms.append((term["c"], tuple(e)))
    return ring.element(terms)


def parse_instance(path_or_data):
    """Parse and validate an instance file.

    Returns (ring, ideal-or-None, dict name -> module)."""
    if isinstance(path_or_data, dict):
        data = path_or_data
        where = "<instance>"
    else:
        where = str(path_or_data)
        try:
            with open(path_or_data, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise CliError(f"cannot read {where}: {exc}")
        except json.JSONDecodeError as exc:
            raise CliError(f"{where}: invalid JSON: {exc}")
    _require(isinstance(data, dict), where, "top level must be an object")
    p = data.get("p", default_p())
    _require(isinstance(p, int), where + ".p", "p must be an integer")
    varnames = data.get("vars")
    _require(
        isinstance(varnames, list) and varnames
        and all(isinstance(v, str) for v in varnames),
        where + ".vars",
        "vars must be a nonempty array of names",
    )
    staircase = data.get("staircase")
    _require(isinstance(staircase, list) and staircase, where + ".staircase",
             "staircase must be a nonempty array of exponent arrays")
    for i, g in enumerate(staircase):
        _require(
            isinstance(g, list) and len(g) == len(varnames)
            and all(isinstance(a, int) and a >= 0 for a in g),
            f"{where}.staircase[{i}]",
            f"exponent array of {len(varnames)} nonnegative integers expected",
        )
    try:
        ring = MonomialAlgebra(len(varnames), [tuple(g) for g in staircase],
                               p=p, varnames=varnames)
    except (ValueError, rings.NotArtinianError) as exc:
        raise CliError(f"{where}.staircase: {exc}")

    ideal = None
    if "ideal_I" in data:
        gens_raw = data["ideal_I"]
        _require(isinstance(gens_raw, list), where + ".ideal_I",
                 "ideal_I must be an array of polynomials")
        gens = [
            _parse_poly(ring, poly, f"{where}.ideal_I[{i}]")
            for i, poly in enumerate(gens_raw)
        ]
        ideal = Ideal(ring, gens)

    mods = {}
    raw_mods = data.get("modules", {})
    _require(isinstance(raw_mods, dict), where + ".modules",
             "modules must be a map of name -> presentation")
    for name, pres in raw_mods.items():
        mp = f"{where}.modules.{name}"
        _require(isinstance(pres, dict), mp, "presentation must be an object")
        g = pres.get("gens")
        _require(isinstance(g, int) and g >= 0, mp + ".gens",
                 "gens must be a nonnegative integer")
        rel_raw = pres.get("relations", [])
        _require(isinstance(rel_raw, list), mp + ".relations",
                 "relations must be an array of columns")
        columns = []
        for c, col in enumerate(rel_raw):
            cp = f"{mp}.relations[{c}]"
            _require(isinstance(col, list) and len(col) == g, cp,
                     f"column must be an array of {g} polynomials")
            columns.append([
                _parse_poly(ring, poly, f"{cp}[{k}]") for k, poly in enumerate(col)
            ])
        module = modules.cokernel(ring, g, columns)
        module.validate()
        mods[name] = module
    return ring, ideal, mods


# -- output helpers ----------------------------------------------------------


def _emit(payload, as_json, order=None):
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
        return
    keys = order if order is not None else sorted(payload)
    width = max((len(k) for k in keys), default=0)
    for k in keys:
        v = payload[k]
        if isinstance(v, (dict, list)):
            v = json.dumps(v, sort_keys=True)
        print(f"{k:<{width}}  {v}")


def _pick_module(mods, name, where):
    if name not in mods:
        raise CliError(f"{where}: no module named {name!r} in the instance file")
    return mods[name]


# -- subcommands ---------------------------------------------------------------


def cmd_ring_info(args):
    ring, ideal, _ = parse_instance(args.file)
    payload = {
        "p": ring.p,
        "length": ring.dim,
        "basis": [ring.format_monomial(e) for e in ring.basis],
        "staircase": [ring.format_monomial(e) for e in ring.staircase],
        "loewy_length": rings.loewy_length(ring),
        "socle_dim": ring.socle_dim(),
        "gorenstein": ring.is_gorenstein(),
    }
    order = ["p", "length", "staircase", "basis", "loewy_length", "socle_dim",
             "gorenstein"]
    if ideal is not None and ideal.is_proper:
        inv = rings.ring_invariants(ring, ideal)
        payload.update({"s": inv.s, "h": inv.h, "c": inv.c, "e": inv.e,
                        "m2I_zero": rings.m2I_is_zero(ring, ideal)})
        order += ["s", "h", "c", "e", "m2I_zero"]
    _emit(payload, args.json, order)
    return 0


def cmd_module_info(args):
    ring, ideal, mods = parse_instance(args.file)
    names = args.module or sorted(mods)
    payload = {}
    for name in names:
        m = _pick_module(mods, name, "module-info")
        row = {
            "length": m.length,
            "min_gens": m.min_gens(),
            "socle_dim": modules.socle(m).length,
            "free": modules.is_free(m),
        }
        if ideal is not None and ideal.is_proper and m.length > 0:
            row["gamma_I"] = fmt_q(modules.gamma(m, ideal))
            row["I_free"] = modules.is_I_free(m, ideal)
        payload[name] = row
    if args.json:
        _emit(payload, True)
    else:
        for name in names:
            print(f"[{name}]")
            _emit(payload[name], False,
                  [k for k in ("length", "min_gens", "socle_dim", "free",
                               "gamma_I", "I_free") if k in payload[name]])
    return 0


def cmd_resolve(args):
    ring, _, mods = parse_instance(args.file)
    m = _pick_module(mods, args.module, "resolve")
    res = resolutions.minimal_resolution(m, args.depth)
    payload = {
        "module": args.module,
        "betti": res.betti,
        "differentials": [
            [[ring.format_element(entry) for entry in row] for row in delta]
            for delta in res.differentials
        ],
        "syzygy_lengths": [s.length for s in res.syzygies],
    }
    _emit(payload, args.json, ["module", "betti", "syzygy_lengths", "differentials"])
    return 0


def cmd_tor(args):
    ring, _, mods = parse_instance(args.file)
    first, second = (s.strip() for s in args.modules.split(","))
    m = _pick_module(mods, first, "tor")
    n = _pick_module(mods, second, "tor")
    res = resolutions.Resolver(n)
    lengths = [homology.tor_length(m, n, i, resolver=res)
               for i in range(args.max_i + 1)]
    payload = {
        "modules": [first, second],
        "tor_lengths": lengths,
        "vanishing": [l == 0 for l in lengths[1:]],
    }
    _emit(payload, args.json, ["modules", "tor_lengths", "vanishing"])
    return 0


def cmd_canonical(args):
    ring, ideal, _ = parse_instance(args.file)
    w = modules.canonical_module(ring)
    payload = {
        "length": w.length,
        "min_gens": w.min_gens(),
        "socle_dim": modules.socle(w).length,
        "betti": resolutions.betti_vector(w, args.depth),
        "gorenstein": ring.is_gorenstein(),
    }
    order = ["length", "min_gens", "socle_dim", "betti", "gorenstein"]
    if ideal is not None and ideal.is_proper:
        payload["gamma_I"] = fmt_q(modules.gamma(w, ideal))
        order.append("gamma_I")
    _emit(payload, args.json, order)
    return 0


def _parse_window(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise CliError(f"bad window {text!r}: expected lo..hi")
    if not 1 <= lo <= hi:
        raise CliError(f"bad window {text!r}: need 1 <= lo <= hi")
    return lo, hi


def cmd_verify(args):
    ring, ideal, mods = parse_instance(args.file)
    info = STATEMENTS.get(args.statement)
    if info is None:
        raise CliError(f"unknown statement {args.statement!r}")
    ws = Workspace(ring)
    kwargs = {}
    if "I" in info.needs:
        if ideal is None:
            raise CliError("this statement needs ideal_I in the instance file")
        kwargs["I"] = ideal
    if "M" in info.needs:
        kwargs["M"] = _pick_module(mods, args.module, "verify")
    if "N" in info.needs:
        kwargs["N"] = _pick_module(mods, args.second, "verify")
    if "i" in info.needs:
        kwargs["i"] = args.i
    if "j" in info.needs:
        kwargs["j"] = args.j
    if "window" in info.needs:
        kwargs["window"] = _parse_window(args.window)
    if "submodule" in info.needs:
        m = kwargs["M"]
        if args.submodule == "ideal":
            if ideal is None:
                raise CliError("submodule spec 'ideal' needs ideal_I")
            sub = modules.ideal_times(m, ideal)
        elif args.submodule == "socle":
            sub = modules.socle(m)
        elif args.submodule == "radical":
            sub = modules.radical(m)
        else:
            raise CliError(f"unknown submodule spec {args.submodule!r}")
        kwargs["submodule"] = sub
    mode = "probe" if args.probe else "check"
    report = run_statement(ws, args.statement, mode=mode, **kwargs)
    d = report.to_dict()
    if args.json:
        print(json.dumps(d, sort_keys=True, indent=2))
    else:
        print(f"statement    {report.statement_id}")
        print(f"mode         {report.mode}")
        for name, flag, witness in report.hypotheses:
            mark = "?" if flag is None else ("ok" if flag else "FAIL")
            suffix = f"  ({witness})" if witness else ""
            print(f"  hypothesis {name:<40} {mark}{suffix}")
        print(f"applicable   {report.applicable}")
        print(f"conclusion   {report.conclusion}")
        if d["data"]:
            print(f"data         {json.dumps(d['data'], sort_keys=True)}")
        if report.is_counterexample:
            print("COUNTEREXAMPLE")
    return 2 if report.is_counterexample else 0


def cmd_explore(args):
    summary = explore.run_suite(
        args.max_vars,
        args.max_len,
        depth=args.depth,
        out_path=args.out,
        p=args.p if args.p else default_p(),
        seed=args.seed,
        sample=args.sample,
        max_gens=args.max_gens,
    )
    brief = {
        "rings": summary["rings"],
        "instances": summary["instances"],
        "counterexamples": len(summary["counterexamples"]),
        "flagged": len(summary["flagged"]),
        "findings": summary["findings"],
        "applicable": {
            sid: st["applicable"]
            for sid, st in summary["per_statement"].items()
            if st["applicable"]
        },
    }
    if args.json:
        print(json.dumps(brief, sort_keys=True, indent=2))
    else:
        _emit(brief, False, ["rings", "instances", "counterexamples", "flagged",
                             "findings", "applicable"])
    return 2 if summary["counterexamples"] else 0


def cmd_witnesses(args):
    hits = explore.search_witnesses(
        args.statement, args.max_vars, args.max_len, depth=args.depth,
        p=args.p if args.p else default_p(),
    )
    if args.json:
        print(json.dumps(
            [{"fingerprint": h["fingerprint"], "conclusion": h["conclusion"]}
             for h in hits],
            sort_keys=True, indent=2))
    else:
        print(f"witnesses    {len(hits)}")
        for h in hits[: args.limit]:
            print(f"  {json.dumps(h['fingerprint'], sort_keys=True)}")
    return 0


def build_parser():
    parser = _Parser(prog="artmod",
                     description="exact invariants over Artinian local monomial algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="machine output")
        return p

    p = add("ring-info", cmd_ring_info, help="ring length, basis, invariants")
    p.add_argument("file")

    p = add("module-info", cmd_module_info, help="module lengths, gamma, socle")
    p.add_argument("file")
    p.add_argument("--module", action="append", help="module name (repeatable)")

    p = add("resolve", cmd_resolve, help="minimal free resolution")
    p.add_argument("file")
    p.add_argument("--module", default="M")
    p.add_argument("--depth", type=int, default=8)

    p = add("tor", cmd_tor, help="Tor lengths between two named modules")
    p.add_argument("file")
    p.add_argument("--modules", default="M,N", help="pair, e.g. M,N")
    p.add_argument("--max-i", type=int, default=4)

    p = add("canonical", cmd_canonical, help="the canonical (dualizing) module")
    p.add_argument("file")
    p.add_argument("--depth", type=int, default=4)

    p = add("verify", cmd_verify, help="run one statement checker")
    p.add_argument("file")
    p.add_argument("--statement", required=True, choices=sorted(STATEMENTS))
    p.add_argument("--probe", action="store_true",
                   help="evaluate the conclusion even when hypotheses fail")
    p.add_argument("--module", default="M")
    p.add_argument("--second", default="N")
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=2)
    p.add_argument("--window", default="3..8")
    p.add_argument("--submodule", default="ideal",
                   choices=["ideal", "socle", "radical"])

    p = add("explore", cmd_explore, help="sweep every checker over a corpus")
    p.add_argument("--max-vars", type=int, default=2)
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--max-gens", type=int, default=1)
    p.add_argument("--out", help="write the JSONL catalog here")
    p.add_argument("--p", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--sample", type=int,
                   help="random per-ring task sample (seeded)")

    p = add("witnesses", cmd_witnesses, help="hypothesis-satisfying instances")
    p.add_argument("--statement", required=True, choices=sorted(STATEMENTS))
    p.add_argument("--max-vars", type=int, default=2)
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--p", type=int)
    p.add_argument("--limit", type=int, default=10)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
