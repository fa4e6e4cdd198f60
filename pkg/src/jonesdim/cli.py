"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Output is
rendered in full before anything is printed, so a failure never leaves a
partial table on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import tables as tabmod
from .branching import (
    delta_mults,
    fusion_mults,
    fusion_mults_altsum,
    minuscule_walk_mults,
)
from .jones_algebras import (
    AlgebraConfig,
    hecke_simple_dims,
    is_e_regular,
    symmetric_simple_dims,
    weight_set,
)
from .oracle import char_product_decompose, enumerate_paths
from .root_data import AlcoveParams, Family, Weight, make_root_system


def _build_config(args) -> AlgebraConfig:
    algebra = args.algebra
    need = {
        "symmetric": ("p",),
        "hecke": ("ell",),
        "brauer": ("delta", "p"),
        "brauer-b": ("m", "p"),
        "bmw": ("n", "ell"),
    }[algebra]
    for flag in need:
        if getattr(args, flag) is None:
            raise ValueError(f"--{flag} is required for --algebra {algebra}")
    if algebra == "symmetric":
        return AlgebraConfig.symmetric(args.p)
    if algebra == "hecke":
        return AlgebraConfig.hecke(args.ell)
    if algebra == "brauer":
        return AlgebraConfig.brauer(args.delta, args.p)
    if algebra == "brauer-b":
        return AlgebraConfig.brauer_type_b(args.m, args.p)
    return AlgebraConfig.bmw(args.n, args.ell)


def _parse_weight(text: str) -> Weight:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}; expected e.g. 3,1")


def _strip(w: Weight) -> Weight:
    out = list(w)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _normalize_weight(config: AlgebraConfig, weight: Weight) -> Weight:
    if config.kind in ("symmetric", "hecke"):
        return _strip(weight)
    ((spec, _),) = config.resolve()
    if len(weight) > spec.rank:
        raise ValueError(
            f"weight {weight} has more than {spec.rank} entries"
        )
    return weight + (0,) * (spec.rank - len(weight))


def _fmt_weight(w: Weight) -> str:
    return ".".join(str(c) for c in w)


def _render_rows(config: AlgebraConfig, levels, fmt: str) -> str:
    rows = [tabmod.config_rows(config, r) for r in levels]
    if fmt == "csv":
        lines = ["r,weight,dim"]
        for row in rows:
            for w, d in row.entries:
                lines.append(f"{row.r},{_fmt_weight(w)},{d}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {
            "algebra": config.kind,
            "rows": [
                {
                    "r": row.r,
                    "entries": [
                        {"weight": list(w), "dim": str(d)} for w, d in row.entries
                    ],
                }
                for row in rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = []
    for row in rows:
        cells = "  ".join(f"{_fmt_weight(w)}:{d}" for w, d in row.entries)
        lines.append(f"r={row.r}  {cells}")
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    config = _build_config(args)
    if args.r is not None:
        levels = [args.r]
    else:
        if args.rmax < 1:
            raise ValueError(f"--rmax must be >= 1, got {args.rmax}")
        levels = list(range(1, args.rmax + 1))
    out = _render_rows(config, levels, args.format)
    sys.stdout.write(out)
    return 0


def cmd_dim(args) -> int:
    config = _build_config(args)
    if args.r is None:
        raise ValueError("--r is required for dim")
    if args.weight is None:
        raise ValueError("--weight is required for dim")
    weight = _normalize_weight(config, _parse_weight(args.weight))
    row = tabmod.config_rows(config, args.r)
    table = row.as_dict()
    if weight not in table:
        valid = ", ".join(_fmt_weight(w) for w, _ in row.entries)
        print(
            f"error: weight {_fmt_weight(weight)} is not a label at r={args.r};"
            f" valid labels: {valid}",
            file=sys.stderr,
        )
        return 2
    d = table[weight]
    if args.format == "json":
        out = json.dumps(
            {"r": args.r, "weight": list(weight), "dim": str(d)}
        ) + "\n"
    elif args.format == "csv":
        out = f"r,weight,dim\n{args.r},{_fmt_weight(weight)},{d}\n"
    else:
        out = f"{d}\n"
    sys.stdout.write(out)
    return 0


# ---------------------------------------------------------------------------
# verification suites


def verify_fixtures() -> tuple[list[str], bool]:
    lines = []
    ok_tables = 0
    all_ok = True
    for tid in tabmod.TABLE_IDS:
        problems = tabmod.check_table(tid)
        if problems:
            all_ok = False
            lines.append(f"FAIL {tid}")
            lines.extend(f"  {p}" for p in problems)
        else:
            ok_tables += 1
            lines.append(f"ok {tid}")
    for err in tabmod.ERRATA:
        routes = _erratum_routes(err)
        if all(v == err.computed for v in routes.values()):
            lines.append(
                f"ok erratum {err.table} r={err.r} {_fmt_weight(err.weight)}"
                f" {err.printed}->{err.computed}"
                f" ({len(routes)} routes agree)"
            )
        else:
            all_ok = False
            lines.append(
                f"FAIL erratum {err.table} r={err.r} {_fmt_weight(err.weight)}:"
                f" routes {routes} vs claimed {err.computed}"
            )
    lines.append(
        f"{ok_tables}/{len(tabmod.TABLE_IDS)} tables match"
        f" ({len(tabmod.ERRATA)} errata entries applied)"
    )
    return lines, all_ok


def _erratum_routes(err: tabmod.Erratum) -> dict[str, int]:
    fixture = tabmod.TABLES[err.table]
    slices = [
        (spec, params)
        for config in fixture.configs
        for spec, params in config.resolve()
        if spec.rank == len(err.weight)
    ]
    if not slices:
        raise AssertionError(f"no rank slice for erratum {err}")
    spec, params = slices[0]
    routes = {
        "fusion": fusion_mults(spec, params, err.r).get(err.weight, 0),
        "altsum": fusion_mults_altsum(spec, params, err.r).get(err.weight, 0),
        "paths": enumerate_paths(spec, params, err.r, err.weight),
    }
    if spec.family is not Family.B:
        routes["walk"] = minuscule_walk_mults(spec, params, err.r).get(
            err.weight, 0
        )
    return routes


_ORACLE_GRID = (
    (Family.A_GL, 1, ("modular", 5)),
    (Family.A_GL, 2, ("modular", 5)),
    (Family.A_GL, 2, ("quantum", 12)),
    (Family.C, 1, ("modular", 7)),
    (Family.C, 2, ("modular", 7)),
    (Family.C, 2, ("quantum", 10)),
    (Family.D, 1, ("modular", 7)),
    (Family.D, 2, ("modular", 7)),
)


def _params_of(tag) -> AlcoveParams:
    mode, value = tag
    if mode == "modular":
        return AlcoveParams.modular(value)
    return AlcoveParams.quantum(value)


def verify_oracles() -> tuple[list[str], bool]:
    lines = []
    all_ok = True
    for family, rank, tag in _ORACLE_GRID:
        spec = make_root_system(family, rank)
        params = _params_of(tag)
        bad = []
        for r in range(0, 7):
            fus = fusion_mults(spec, params, r)
            if fusion_mults_altsum(spec, params, r) != fus:
                bad.append(f"altsum r={r}")
            if minuscule_walk_mults(spec, params, r) != fus:
                bad.append(f"walk r={r}")
            for w in sorted(fus):
                if enumerate_paths(spec, params, r, w) != fus[w]:
                    bad.append(f"paths r={r} {w}")
        name = f"{family.value} rank {rank} {tag[0]} {tag[1]}"
        if bad:
            all_ok = False
            lines.append(f"FAIL oracle agreement {name}: {', '.join(bad)}")
        else:
            lines.append(f"ok oracle agreement {name}")
    for family, rank in ((Family.B, 1), (Family.B, 2)):
        spec = make_root_system(family, rank)
        params = AlcoveParams.modular(7)
        bad = [
            f"r={r}"
            for r in range(0, 9)
            if fusion_mults(spec, params, r)
            != fusion_mults_altsum(spec, params, r)
        ]
        if bad:
            all_ok = False
            lines.append(f"FAIL B rank {rank} fusion vs altsum: {', '.join(bad)}")
        else:
            lines.append(f"ok B rank {rank} fusion vs altsum")
    for family, rank in (
        (Family.A_GL, 1),
        (Family.A_GL, 2),
        (Family.B, 1),
        (Family.B, 2),
        (Family.C, 1),
        (Family.C, 2),
        (Family.D, 1),
        (Family.D, 2),
    ):
        spec = make_root_system(family, rank)
        bad = []
        for r in range(0, 5):
            dm = delta_mults(spec, r)
            for w in sorted(dm):
                if char_product_decompose(spec, r, w) != dm[w]:
                    bad.append(f"r={r} {w}")
        name = f"{family.value} rank {rank}"
        if bad:
            all_ok = False
            lines.append(f"FAIL characters vs branching {name}: {', '.join(bad)}")
        else:
            lines.append(f"ok characters vs branching {name}")
    return lines, all_ok


def _fib(n: int) -> int:
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def verify_laws() -> tuple[list[str], bool]:
    lines = []
    all_ok = True

    def law(name, failures):
        nonlocal all_ok
        if failures:
            all_ok = False
            lines.append(f"FAIL {name}: {failures[:5]}")
        else:
            lines.append(f"ok {name}")

    bad = []
    for r in range(1, 31):
        row = symmetric_simple_dims(5, r).as_dict()
        labels = tabmod.TABLES["T1"].groups[1].labels(r)
        pick = labels[0] if r % 2 == 0 else labels[1]
        got = row.get(_strip(pick))
        if got != _fib(r):
            bad.append(f"r={r}: {got} != {_fib(r)}")
    law("two-row dimensions at p=5 follow the Fibonacci sequence", bad)

    bad = []
    for r in range(2, 21):
        row = hecke_simple_dims(8, r).as_dict()
        expect = 2 ** ((r + 1) // 2 - 1)
        for lam in weight_set(AlgebraConfig.hecke(8), r):
            if len(lam) == 2 and row[lam] != expect:
                bad.append(f"r={r} {lam}: {row[lam]} != {expect}")
    law("two-row dimensions at order 8 are powers of two", bad)

    bad = []
    for r in range(1, 21):
        for lam, d in symmetric_simple_dims(3, r).entries:
            if d != 1:
                bad.append(f"r={r} {lam}")
    law("all simple dimensions are 1 at p=3", bad)

    bad = []
    for p in (5, 7, 11):
        spec = make_root_system(Family.A_GL, p - 1)
        params = AlcoveParams.modular(p)
        for r in range(1, 21):
            table = fusion_mults(spec, params, r)
            if list(table.values()) != [1]:
                bad.append(f"p={p} r={r}: {table}")
    law("the top-rank general-linear slice is a single one-dim block", bad)

    bad = []
    for p in (5, 7, 11):
        spec = make_root_system(Family.C, (p - 1) // 2)
        params = AlcoveParams.modular(p)
        for r in range(1, 21):
            table = fusion_mults(spec, params, r)
            if list(table.values()) != [1]:
                bad.append(f"p={p} r={r}: {table}")
    law("the top-rank symplectic slice is a single one-dim block", bad)

    bad = []
    for rank in (5, 6):
        spec = make_root_system(Family.A_GL, rank)
        params = AlcoveParams.modular(5)
        for r in range(1, 7):
            if fusion_mults(spec, params, r):
                bad.append(f"rank={rank} r={r}")
    law("general-linear slices of rank >= p are empty", bad)

    bad = []
    for p in (5, 7):
        for r in range(1, 13):
            for lam in weight_set(AlgebraConfig.symmetric(p), r):
                if not is_e_regular(lam, p):
                    bad.append(f"p={p} r={r} {lam}")
    for ell in (8, 12):
        e = AlcoveParams.quantum(ell).ell_prime
        for r in range(1, 13):
            for lam in weight_set(AlgebraConfig.hecke(ell), r):
                if not is_e_regular(lam, e):
                    bad.append(f"ell={ell} r={r} {lam}")
    law("every table label is e-regular", bad)

    return lines, all_ok


def cmd_verify(args) -> int:
    suite = {
        "fixtures": verify_fixtures,
        "oracles": verify_oracles,
        "laws": verify_laws,
    }[args.suite]
    lines, ok = suite()
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_fixtures(args) -> int:
    root = Path(args.path)
    if args.action == "emit":
        root.mkdir(parents=True, exist_ok=True)
        for tid in tabmod.TABLE_IDS:
            (root / f"{tid}.csv").write_text(tabmod.render_table_csv(tid))
        (root / "errata.txt").write_text(tabmod.render_errata())
        print(f"wrote {len(tabmod.TABLE_IDS)} tables and errata to {root}")
        return 0
    problems = []
    for tid in tabmod.TABLE_IDS:
        path = root / f"{tid}.csv"
        if not path.exists():
            print(f"error: missing fixture file {path}", file=sys.stderr)
            return 2
        problems.extend(tabmod.diff_table_csv(tid, path.read_text()))
    errata_path = root / "errata.txt"
    if not errata_path.exists():
        print(f"error: missing fixture file {errata_path}", file=sys.stderr)
        return 2
    if errata_path.read_text() != tabmod.render_errata():
        problems.append("errata.txt differs from the built-in errata list")
    if problems:
        sys.stdout.write("\n".join(problems) + "\n")
        return 1
    print(f"{len(tabmod.TABLE_IDS)} tables and errata match {root}")
    return 0


def _add_algebra_flags(sub) -> None:
    sub.add_argument(
        "--algebra",
        required=True,
        choices=["symmetric", "hecke", "brauer", "brauer-b", "bmw"],
    )
    sub.add_argument("--p", type=int, help="modular parameter (odd prime)")
    sub.add_argument("--ell", type=int, help="quantum order")
    sub.add_argument("--delta", type=int, help="Brauer parameter delta")
    sub.add_argument("--n", type=int, help="BMW rank")
    sub.add_argument("--m", type=int, help="odd-orthogonal rank")
    sub.add_argument(
        "--format", choices=["csv", "json", "text"], default="text"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jonesdim",
        description="Dimension tables for semisimple quotient algebras",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_table = subs.add_parser("table", help="print dimension rows")
    _add_algebra_flags(p_table)
    p_table.add_argument("--r", type=int, help="single level")
    p_table.add_argument("--rmax", type=int, default=10, help="levels 1..rmax")
    p_table.set_defaults(func=cmd_table)

    p_dim = subs.add_parser("dim", help="dimension of one simple module")
    _add_algebra_flags(p_dim)
    p_dim.add_argument("--r", type=int, help="level")
    p_dim.add_argument("--weight", help="comma-separated label, e.g. 3,1")
    p_dim.set_defaults(func=cmd_dim)

    p_verify = subs.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=["fixtures", "oracles", "laws"])
    p_verify.set_defaults(func=cmd_verify)

    p_fix = subs.add_parser("fixtures", help="emit or diff fixture files")
    p_fix.add_argument("action", choices=["emit", "diff"])
    p_fix.add_argument("--path", default="tables")
    p_fix.set_defaults(func=cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
