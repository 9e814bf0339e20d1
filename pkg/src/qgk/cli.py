"""Command-line interface: ``qgk <subcommand> [options]``.

Exit codes: 0 success, 1 usage or precondition error, 2 a mathematical
check failed (for example a Jantzen mismatch or a table row disagreeing with
the shipped fixture).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import gk, hecke, subsys, weights
from .rootsys import GroupTooLarge, InvalidType, RootSystem, parse_type

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class Config:
    cap: int = weights.DEFAULT_CAP
    height: int | None = None
    ells: list = field(default_factory=list)
    fmt: str = "text"
    seed: int = 0
    allow_large: bool = False      # f4-afunction
    g2_gram: bool = False

    def __post_init__(self):
        if self.cap <= 0 or (self.height is not None and self.height <= 0):
            raise UsageError("caps and heights must be positive")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")


@dataclass
class Output:
    data: dict
    header: list
    rows: list
    text: str
    ok: bool = True


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# -- helpers ---------------------------------------------------------------------

def _rs(label: str) -> RootSystem:
    try:
        return RootSystem.build(label)
    except (InvalidType, ValueError) as exc:
        raise UsageError(f"bad type {label!r}: {exc}") from exc


def _weight(rs, text):
    return weights.parse_weight(text, rs)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _root_str(v) -> str:
    return "(" + ",".join(str(c) for c in v) + ")"


def _fmt_table(header, rows) -> str:
    cells = [[str(c) for c in header]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _spec(text: str) -> subsys.FieldSpec:
    vals = {"D": 2, "g": 1}
    for part in text.split(","):
        key, _, val = part.partition("=")
        key = key.strip()
        if key not in vals:
            raise UsageError(f"field spec keys are D and g, got {key!r}")
        vals[key] = None if val.strip().lower() in ("none", "inf") else int(val)
    return subsys.FieldSpec(vals["D"], vals["g"])


def _check_gram_type(rs, cfg):
    if rs.label == "G2" and not cfg.g2_gram:
        raise UsageError("G2 Gram computations are behind --g2-gram")
    if rs.rank > 2:
        raise UsageError("Gram computations are implemented for rank <= 2")


# -- subcommands --------------------------------------------------------------------

def cmd_subsystem(args, cfg) -> Output:
    rs = _rs(args.type)
    lam = _weight(rs, args.weight)
    psi = weights.phi_lambda(lam)
    tset = weights.t_set(lam)
    W_size = len(weights.integral_weyl_group(lam, cfg.cap)[1])
    data = {
        "type": rs.label, "weight": lam.to_dict(), "phi_type": psi.label,
        "roots": [list(rs.roots[k]) for k in sorted(psi.members)],
        "weyl_order": W_size,
        "dominant": weights.is_dominant(lam), "antidominant": weights.is_antidominant(lam),
        "regular": weights.is_regular(lam, cfg.cap),
        "t_set": [[m, list(a)] for m, a in tset],
    }
    rows = [[k, data[k]] for k in ("phi_type", "weyl_order", "dominant", "antidominant", "regular")]
    rows.append(["roots", " ".join(_root_str(r) for r in data["roots"]) or "-"])
    rows.append(["t_set", " ".join(f"{m}:{_root_str(a)}" for m, a in tset) or "-"])
    return Output(data, ["field", "value"], rows, _fmt_table(["field", "value"], rows))


def cmd_gkdim(args, cfg) -> Output:
    rs = _rs(args.type)
    lam = _weight(rs, args.weight)
    rep = gk.gk_dimension(lam, cfg.cap, allow_large=cfg.allow_large)
    data = rep.to_dict()
    header = ["phi_type", "witness_length", "a_value", "d"]
    rows = [[rep.phi_type, rep.witness_length, rep.a_value, rep.d]]
    return Output(data, header, rows, _fmt_table(header, rows))


def cmd_afunction(args, cfg) -> Output:
    rs = _rs(args.type)
    W = hecke.CoxeterSystem(rs, cap=max(cfg.cap, 1200) if cfg.allow_large else cfg.cap)
    a = hecke.a_function(W, allow_large=cfg.allow_large)
    counts = Counter(a)
    ok = a[W.identity] == 0 and a[W.longest] == rs.num_positive and all(
        a[w] == a[W.inverse(w)] for w in range(W.size))
    header = ["a", "count"]
    rows = [[v, counts[v]] for v in sorted(counts)]
    data = {"type": rs.label, "order": W.size, "values": {str(v): counts[v] for v in sorted(counts)},
            "checks_passed": ok}
    if args.elements:
        header = ["word", "length", "a"]
        rows = [["".join(str(i + 1) for i in W.words[w]) or "e", W.length[w], a[w]]
                for w in range(W.size)]
        data["elements"] = [{"word": list(W.words[w]), "a": a[w]} for w in range(W.size)]
    return Output(data, header, rows, _fmt_table(header, rows), ok)


def cmd_tables(args, cfg) -> Output:
    types = [t.strip() for t in args.types.split(",") if t.strip()]
    if args.table == 1:
        return _table1(types, cfg)
    fixture = gk._table2()
    header = ["type", "kappa0", "kappa1", "kappa2", "expected", "match"]
    rows = []
    ok = True
    for t in types:
        (letter, n), = parse_type(t)
        k = gk.kappas(t)
        if letter in fixture["families"]:
            fam = fixture["families"][letter]
            exp = tuple(fam[key][0] * n + fam[key][1] for key in ("kappa0", "kappa1", "kappa2"))
        elif t in fixture["exceptional"]:
            exp = tuple(fixture["exceptional"][t])
        else:
            exp = None
        match = exp is None or tuple(k) == exp
        ok &= match
        rows.append([t, *k, "-" if exp is None else ",".join(map(str, exp)), match])
    data = {"table": 2, "rows": [dict(zip(header, r)) for r in rows], "all_match": ok}
    return Output(data, header, rows, _fmt_table(header, rows), ok)


def _table1(types, cfg) -> Output:
    catalog = subsys.load_catalog()["types"]
    header = ["type", "class", "positive_roots", "in_catalog"]
    rows = []
    ok = True
    for t in types:
        rs = _rs(t)
        found = subsys.maximal_by_enumeration(rs, cfg.cap)
        names = {c["canonical"] for c in catalog.get(rs.label, {}).get("classes", [])}
        labels = set()
        for psi in found:
            labels.add(psi.label)
            rows.append([rs.label, psi.label, len(psi.positive), psi.label in names])
        ok &= labels == names
    data = {"table": 1, "rows": [dict(zip(header, r)) for r in rows], "all_match": ok}
    return Output(data, header, rows, _fmt_table(header, rows), ok)


def cmd_growth(args, cfg) -> Output:
    from .verma import growth_experiment
    rs = _rs(args.type)
    _check_gram_type(rs, cfg)
    lam = _weight(rs, args.weight)
    ells = cfg.ells or [5, 7, 11]
    rep = growth_experiment(lam, ells, m=args.m, height=cfg.height)
    header = ["ell", "total_dim", "exponent_estimate", "J"]
    rows = rep.csv_rows()
    ok = rep.agreement_ok and (not rep.estimate.exact or rep.estimate.exponent == rep.gk)
    data = rep.to_dict()
    text = _fmt_table(header, rows) + f"\nd(L_q) = {rep.gk}; estimate {rep.estimate.exponent}" \
        f" ({'exact' if rep.estimate.exact else 'slope'})"
    return Output(data, header, rows, text, ok)


def cmd_jantzen(args, cfg) -> Output:
    from .verma import jantzen_sum_check
    from .verma.gram import _depths
    rs = _rs(args.type)
    _check_gram_type(rs, cfg)
    cases = []
    if args.random:
        rng = random.Random(cfg.seed)
        top = cfg.height or 6
        for _ in range(args.random):
            lam = weights.random_weight(rs, rng, torsion_den=(1, 2), exponent_den=(1,))
            h = rng.randint(1, top)
            cases.append((lam, rng.choice(list(_depths(rs.rank, h)))))
    else:
        if not args.weight or not args.nu:
            raise UsageError("jantzen needs --weight and --nu (or --random N)")
        cases.append((_weight(rs, args.weight), tuple(_ints(args.nu))))
    header = ["weight", "nu", "lhs", "rhs", "equal"]
    rows = []
    for lam, nu in cases:
        res = jantzen_sum_check(lam, nu)
        rows.append([lam.to_literal(), ",".join(map(str, nu)), res.lhs, res.rhs, res.equal])
    ok = all(r[-1] for r in rows)
    data = {"type": rs.label, "cases": [dict(zip(header, r)) for r in rows], "all_equal": ok}
    return Output(data, header, rows, _fmt_table(header, rows), ok)


def cmd_shapovalov(args, cfg) -> Output:
    from .verma import det_formula_cross_check, shapovalov_det_formula
    rs = _rs(args.type)
    _check_gram_type(rs, cfg)
    nu = tuple(_ints(args.nu))
    if len(nu) != rs.rank:
        raise UsageError(f"--nu needs {rs.rank} entries")
    weight = _weight(rs, args.weight) if args.weight else None
    formula = shapovalov_det_formula(rs, nu, weight)
    check = det_formula_cross_check(rs, nu, seed=cfg.seed)
    data = {"type": rs.label, "nu": list(nu), "formula": str(formula),
            "value": None if formula.value is None else str(formula.value),
            "cross_check": check.to_dict()}
    header = ["field", "value"]
    rows = [["formula", str(formula)], ["ratio", str(check.ratio)], ["constant", check.constant]]
    if formula.value is not None:
        rows.insert(1, ["value", str(formula.value)])
    return Output(data, header, rows, _fmt_table(header, rows), check.constant)


def _target(rs, text):
    norms = {rs.norm2(k) for k in range(len(rs.roots))}
    if text in ("long-roots", "short-roots"):
        if len(norms) == 1:
            raise UsageError(f"{rs.label} has a single root length")
        want = max(norms) if text == "long-roots" else min(norms)
        members = [k for k in range(len(rs.roots)) if rs.norm2(k) == want]
        return subsys.reflection_closure(rs, members)
    if text.startswith("roots:"):
        seeds = []
        for chunk in text[6:].split(";"):
            v = tuple(_ints(chunk))
            if v not in rs.index:
                raise UsageError(f"{v} is not a root of {rs.label}")
            seeds.append(rs.index[v])
        return subsys.reflection_closure(rs, seeds)
    raise UsageError("target is long-roots, short-roots or roots:a,b;c,d")


def cmd_realize(args, cfg) -> Output:
    rs = _rs(args.type)
    psi = _target(rs, args.target)
    spec = _spec(args.field)
    res = subsys.realize_subsystem(psi, spec)
    header = ["target", "field", "result"]
    if isinstance(res, subsys.Infeasible):
        rows = [[psi.label, args.field, "infeasible"]]
        data = {"target": psi.label, "field": {"D": spec.D, "g": spec.g}, "feasible": False,
                "searched": res.searched}
    else:
        rows = [[psi.label, args.field, res.to_literal()]]
        data = {"target": psi.label, "field": {"D": spec.D, "g": spec.g}, "feasible": True,
                "weight": res.to_dict()}
    return Output(data, header, rows, rows[0][2])


COMMANDS = {
    "subsystem": cmd_subsystem, "gkdim": cmd_gkdim, "afunction": cmd_afunction,
    "tables": cmd_tables, "growth": cmd_growth, "jantzen": cmd_jantzen,
    "shapovalov": cmd_shapovalov, "realize": cmd_realize,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS)
    common.add_argument("--height", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--allow-large", action="store_true", default=argparse.SUPPRESS,
                        help="permit a-function computations beyond the default cap (F4)")
    common.add_argument("--g2-gram", action="store_true", default=argparse.SUPPRESS,
                        help="enable Gram computations in type G2")

    parser = _Parser(prog="qgk", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("subsystem", parents=[common], help="integral subsystem of a weight")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)

    p = sub.add_parser("gkdim", parents=[common], help="GK dimension of L_q(Lambda)")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)

    p = sub.add_parser("afunction", parents=[common], help="Lusztig's a-function")
    p.add_argument("--type", required=True)
    p.add_argument("--elements", action="store_true", help="list every element")

    p = sub.add_parser("tables", parents=[common], help="reproduce the kappa or subsystem tables")
    p.add_argument("--types", required=True)
    p.add_argument("--table", type=int, choices=(1, 2), default=2)

    p = sub.add_parser("growth", parents=[common], help="baby Verma dimension growth")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--ells", default="")
    p.add_argument("--m", type=int, default=8)

    p = sub.add_parser("jantzen", parents=[common], help="Jantzen sum formula check")
    p.add_argument("--type", required=True)
    p.add_argument("--weight")
    p.add_argument("--nu")
    p.add_argument("--random", type=int, default=0, metavar="N")

    p = sub.add_parser("shapovalov", parents=[common], help="Shapovalov determinant")
    p.add_argument("--type", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--weight")

    p = sub.add_parser("realize", parents=[common], help="realize a subsystem as Phi_Lambda")
    p.add_argument("--type", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--field", default="D=2,g=1")
    return parser


def _config(ns) -> Config:
    ells = _ints(ns.ells) if getattr(ns, "ells", "") else []
    return Config(cap=getattr(ns, "cap", weights.DEFAULT_CAP), height=getattr(ns, "height", None),
                  ells=ells, fmt=getattr(ns, "format", "text"), seed=getattr(ns, "seed", 0),
                  allow_large=getattr(ns, "allow_large", False),
                  g2_gram=getattr(ns, "g2_gram", False))


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.data, indent=2, default=str) + "\n"
    if fmt == "csv":
        return _csv(out.header, out.rows)
    return out.text + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        if not ns.command:
            raise UsageError("a subcommand is required")
        cfg = _config(ns)
        out = COMMANDS[ns.command](ns, cfg)
    except UsageError as exc:
        print(f"qgk: error: {exc}", file=sys.stderr)
        return 1
    except weights.ParseError as exc:
        print(f"qgk.weights: {exc}", file=sys.stderr)
        return 1
    except (GroupTooLarge, ValueError, RuntimeError) as exc:
        module = type(exc).__module__.replace("qgk.", "")
        print(f"qgk.{module}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render(out, cfg.fmt))
    return 0 if out.ok else 2


if __name__ == "__main__":
    sys.exit(main())
