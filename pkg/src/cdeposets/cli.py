"""Command-line front end.

Verbs: analyze, cert-tcde, witness, orbits, homomesy, count-tableaux, scan,
family.  Exactly one input source per invocation (--poset FILE, --shape LIT,
or --family LIT).  Exit codes: 0 success, 1 property refuted (a witness
exists when certifying, or no witness exists when one was requested),
2 input error, 3 budget exceeded.

``analyze --poset`` reports on the poset in the file itself (the
counterexample fixtures are studied directly); every other lattice verb, and
``analyze`` on shapes/families, works on the ideal lattice J(P).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cde import cde_report, certify_tcde, find_witness, scan_family
from .distributions import expectation, mchain_dist, mmchain_dist
from .dynamics import (
    antichain_cardinality,
    gyration_map,
    homomesy_report,
    orbit_decomposition,
    rank_permuted_rowmotion_map,
    rowmotion_map,
)
from .ideals import DEFAULT_IDEAL_BUDGET, LatticeBudgetError, build_lattice
from .minuscule import parse_family
from .posets import Poset, PosetError, load_poset
from .serialize import rat_str
from .shapes import (
    ShiftedShape,
    SkewShape,
    iter_partitions,
    iter_strict_partitions,
    parse_shape,
)
from .tableaux import (
    TableauBudgetError,
    count_barely_formula,
    count_shifted_barely_formula,
    enumerate_barely,
    enumerate_shifted_barely,
    f_aitken,
    f_hook,
    g_thrall,
)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cdeposets")
    sub = p.add_subparsers(dest="verb", required=True)
    for verb in (
        "analyze",
        "cert-tcde",
        "witness",
        "orbits",
        "homomesy",
        "count-tableaux",
        "scan",
        "family",
    ):
        sp = sub.add_parser(verb)
        sp.add_argument("--poset", metavar="FILE")
        sp.add_argument("--shape", metavar="LIT")
        sp.add_argument("--family", metavar="LIT")
        sp.add_argument("--map", dest="map_spec", default="rowmotion")
        sp.add_argument("--k", type=int, default=None)
        sp.add_argument("--m", type=int, default=None)
        sp.add_argument("--budget", type=int, default=DEFAULT_IDEAL_BUDGET)
        sp.add_argument("--out", metavar="FILE", default=None)
        sp.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
        sp.add_argument(
            "--predicate", choices=("cde", "mcde", "tcde"), default="cde"
        )
        sp.add_argument("--extra-empty-full", action="store_true")
        sp.add_argument("--lattice", action="store_true")
    return p


def _resolve_input(args):
    """Returns (description, base poset or None, shape or None)."""
    sources = [s for s in (args.poset, args.shape, args.family) if s]
    if len(sources) != 1:
        raise PosetError("exactly one of --poset/--shape/--family is required")
    if args.poset:
        return f"poset:{args.poset}", load_poset(args.poset), None
    if args.shape:
        shape = parse_shape(args.shape)
        return args.shape, shape.poset(), shape
    case = parse_family(args.family)
    return case.name, case.realized, None


def _mapping(L, spec: str):
    spec = spec.strip()
    if spec == "rowmotion":
        return rowmotion_map(L)
    if spec == "gyration":
        return gyration_map(L)
    if spec.startswith("sigma:"):
        sigma = [int(x) for x in spec[len("sigma:") :].split(",")]
        return rank_permuted_rowmotion_map(L, sigma)
    raise PosetError(f"unknown map {spec!r}")


def _emit(report, args) -> None:
    if args.fmt == "csv":
        rows = report if isinstance(report, list) else [report]
        cols = sorted({k for r in rows for k in r})
        lines = [",".join(cols)]
        for r in rows:
            lines.append(",".join(str(r.get(c, "")) for c in cols))
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _analyze(args) -> tuple[int, object]:
    name, P, shape = _resolve_input(args)
    if args.poset and not args.lattice:
        target = P
    else:
        target = build_lattice(P, budget=args.budget)
    report = cde_report(target).to_dict()
    report["input"] = name
    if args.k is not None:
        chains = report["chain_expectations"]
        if not 0 <= args.k < len(chains):
            raise PosetError(f"--k {args.k} out of range 0..{len(chains) - 1}")
        report["chain_expectation_k"] = chains[args.k]
    if args.m is not None:
        report["mchain_expectation"] = rat_str(
            expectation(mchain_dist(target, args.m), _ddeg(target))
        )
        report["mmchain_expectation"] = rat_str(
            expectation(mmchain_dist(target, args.m), _ddeg(target))
        )
    return EXIT_OK, report


def _ddeg(target):
    from .ideals import IdealLattice

    if isinstance(target, IdealLattice):
        return target.ddeg
    return tuple(target.ddeg(p) for p in range(target.n))


def _cert(args) -> tuple[int, object]:
    name, P, _ = _resolve_input(args)
    L = build_lattice(P, budget=args.budget)
    cert = certify_tcde(L, empty_full_constraint=args.extra_empty_full)
    if cert is not None:
        report = cert.to_dict()
        report["input"] = name
        report["certified"] = True
        return EXIT_OK, report
    witness = find_witness(L)
    report = {
        "input": name,
        "certified": False,
        "witness": None if witness is None else witness.to_dict(),
        "edge_density": rat_str(Fraction(L.edge_count(), L.n)),
    }
    return EXIT_REFUTED, report


def _witness(args) -> tuple[int, object]:
    name, P, _ = _resolve_input(args)
    L = build_lattice(P, budget=args.budget)
    witness = find_witness(L)
    if witness is None:
        return EXIT_REFUTED, {
            "input": name,
            "witness": None,
            "note": "lattice is tCDE; no witness exists",
        }
    report = witness.to_dict()
    report["input"] = name
    report["edge_density"] = rat_str(Fraction(L.edge_count(), L.n))
    return EXIT_OK, report


def _orbits(args) -> tuple[int, object]:
    name, P, _ = _resolve_input(args)
    L = build_lattice(P, budget=args.budget)
    dec = orbit_decomposition(L, _mapping(L, args.map_spec))
    report = {
        "input": name,
        "map": args.map_spec,
        "orbit_sizes": dec.sizes,
        "order": dec.order(),
        "orbits": [[sorted(L.members(i)) for i in orbit] for orbit in dec.orbits],
    }
    return EXIT_OK, report


def _homomesy(args) -> tuple[int, object]:
    name, P, _ = _resolve_input(args)
    L = build_lattice(P, budget=args.budget)
    report = homomesy_report(L, _mapping(L, args.map_spec), antichain_cardinality(L))
    report["input"] = name
    report["map"] = args.map_spec
    report["statistic"] = "antichain_cardinality"
    return EXIT_OK, report


def _count_tableaux(args) -> tuple[int, object]:
    if not args.shape:
        raise PosetError("count-tableaux needs --shape")
    shape = parse_shape(args.shape)
    report = {"input": args.shape}
    if isinstance(shape, SkewShape):
        report["standard"] = f_aitken(shape)
        if shape.inner.size == 0:
            report["standard_hook"] = f_hook(shape.outer)
        report["barely_formula"] = count_barely_formula(shape, budget=args.budget)
        try:
            report["barely_brute_force"] = enumerate_barely(shape)
        except TableauBudgetError:
            pass
    else:
        assert isinstance(shape, ShiftedShape)
        lam = shape.strict
        report["standard_unprimed"] = g_thrall(lam)
        report["barely_formula"] = count_shifted_barely_formula(lam, budget=args.budget)
        report["barely_diag_unprimed_formula"] = count_shifted_barely_formula(
            lam, diagonally_unprimed=True, budget=args.budget
        )
        try:
            report["barely_brute_force"] = enumerate_shifted_barely(lam)
            report["barely_diag_unprimed_brute_force"] = enumerate_shifted_barely(
                lam, diagonally_unprimed=True
            )
        except TableauBudgetError:
            pass
    return EXIT_OK, report


def _scan(args) -> tuple[int, object]:
    if not args.family:
        raise PosetError(
            "scan needs --family straight-shapes:N or strict-partitions:N"
        )
    kind, _, bound = args.family.partition(":")
    try:
        max_size = int(bound)
    except ValueError as exc:
        raise PosetError(f"bad scan bound {bound!r}") from exc
    if kind == "straight-shapes":
        items = (
            (f"straight:{','.join(map(str, lam.parts))}", SkewShape(lam).poset())
            for lam in iter_partitions(max_size)
        )
    elif kind == "strict-partitions":
        items = (
            (f"shifted:{','.join(map(str, lam.parts))}", ShiftedShape(lam).poset())
            for lam in iter_strict_partitions(max_size)
        )
    else:
        raise PosetError(f"unknown scan family {kind!r}")
    rows = list(scan_family(items, args.predicate, budget=args.budget))
    return EXIT_OK, rows


def _family(args) -> tuple[int, object]:
    name, P, _ = _resolve_input(args)
    report = P.to_dict()
    report["input"] = name
    return EXIT_OK, report


_HANDLERS = {
    "analyze": _analyze,
    "cert-tcde": _cert,
    "witness": _witness,
    "orbits": _orbits,
    "homomesy": _homomesy,
    "count-tableaux": _count_tableaux,
    "scan": _scan,
    "family": _family,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        code, report = _HANDLERS[args.verb](args)
    except (LatticeBudgetError, TableauBudgetError) as exc:
        _emit({"error": str(exc)}, args)
        return EXIT_BUDGET
    except (PosetError, ValueError, OSError, json.JSONDecodeError) as exc:
        _emit({"error": str(exc)}, args)
        return EXIT_INPUT
    _emit(report, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
