"""Command-line front end.

    fermatfield field table --p 3 --n 2
    fermatfield field info --p 2 --n 4
    fermatfield fermat survey --p-max 13 [--ext 1] [--n-max N]
    fermatfield exponent core --n 12
    fermatfield curve count --p 5 --coeffs 1,0,0,1 [--ext K]
    fermatfield curve reduce --coeffs 1,-1,0,0 (--p 5 | --p-max 100)
    fermatfield curve torsion --coeffs 1,0,0,1 --p 5 --m 3 [--max-ext 12]
    fermatfield curve frey --a 1 --b 2 --n 1 [--p-max 100]
    fermatfield curve lseries --coeffs 1,0,0,1 --p-max 50
    fermatfield metric check --metric taxicab [--points 0,0:1,0:0,1]
    fermatfield metric search --metric euclidean --n 2 --bound 5

Common flags on every leaf command: ``--out DIR``, ``--format json|csv``,
``--jobs N`` and ``--diff-mode`` (omit the timestamp header).

Exit codes: 0 success, 2 usage error, 3 domain error, 4 bound violation,
1 I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path

from . import __version__
from . import elliptic as ec
from . import fermat, galois, metricgeom
from .errors import BoundError, DomainError, FieldTooLarge
from .modarith import is_prime, primes_up_to
from .polyring import format_poly
from .report import Envelope, IoFailure, emit_report, render

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_DOMAIN, EXIT_BOUND = 0, 1, 2, 3, 4

INFO_MAX_Q = 20000
LSERIES_MAX_P = 20000
SEMISTABILITY_MAX_P = 10**5
METRIC_MAX_BOUND = 20


@dataclass
class RunConfig:
    command: str
    args: dict
    out: Path | None = None
    fmt: str = "json"
    jobs: int = 1
    diff_mode: bool = False

    def echo(self) -> dict:
        # jobs and output location never affect results, so they stay out of the echo
        return {"command": self.command, "format": self.fmt, **self.args}


def pmap(fn, items, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    chunk = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def modulus_cache(cfg: RunConfig) -> galois.ModulusCache | None:
    env = galois.ModulusCache.from_env()
    if env is not None:
        return env
    if cfg.out is not None:
        return galois.ModulusCache(cfg.out.resolve().parent / "modulus_cache.json")
    return None


def _need_prime(p: int, flag: str = "--p") -> None:
    if not is_prime(p):
        raise DomainError(f"{flag} {p} is not prime")


def _bound(ok: bool, msg: str) -> None:
    if not ok:
        raise FieldTooLarge(msg)


# field
def cmd_field_table(cfg: RunConfig, a) -> Envelope:
    _need_prime(a.p)
    _bound(a.p**a.n <= galois.TABLE_MAX_Q, f"q = {a.p}^{a.n} exceeds table limit {galois.TABLE_MAX_Q}")
    F = galois.gf_make(a.p, a.n, a.modulus, cache=modulus_cache(cfg))
    labels = [str(e) for e in F.elements()]
    add, mul = galois.addition_table(F), galois.multiplication_table(F)
    rows = []
    for name, table in (("add", add), ("mul", mul)):
        for i, lab in enumerate(labels):
            rows.append({"table": name, "row": lab, "values": [labels[j] for j in table[i].tolist()]})
    nz = [i for i in range(F.q) if i != F.index(F.zero)]
    summary = {
        "p": F.p,
        "n": F.n,
        "q": F.q,
        "modulus": format_poly(F.modulus),
        "modulus_values": galois.modulus_values(F),
        "elements": labels,
        "add_latin_square": galois.is_latin_square(add),
        "mul_latin_square_nonzero": galois.is_latin_square(mul[nz][:, nz]),
    }
    return Envelope(cfg.command, cfg.echo(), rows, [], summary)


def cmd_field_info(cfg: RunConfig, a) -> Envelope:
    _need_prime(a.p)
    _bound(a.p**a.n <= INFO_MAX_Q, f"q = {a.p}^{a.n} exceeds info limit {INFO_MAX_Q}")
    F = galois.gf_make(a.p, a.n, a.modulus, cache=modulus_cache(cfg))
    g = galois.primitive_element(F)
    orbit, e = [], F.gen if F.n > 1 else g
    for _ in range(F.n):
        orbit.append(str(e))
        e = galois.frobenius(e)
    rows = [
        {"m": m, "divides_n": F.n % m == 0, "fixed_points": galois.fixed_point_count(F, m), "p_pow_gcd": F.p ** gcd(m, F.n)}
        for m in range(1, F.n + 1)
    ]
    summary = {
        "p": F.p,
        "n": F.n,
        "q": F.q,
        "modulus": format_poly(F.modulus),
        "modulus_values": galois.modulus_values(F),
        "primitive_element": str(g),
        "primitive_order": galois.element_order(g),
        "subfield_degrees": galois.subfield_degrees(F),
        "frobenius_orbit": orbit,
        "splitting_check": galois.splitting_check(F),
    }
    return Envelope(cfg.command, cfg.echo(), rows, [], summary)


# fermat / exponent
def cmd_fermat_survey(cfg: RunConfig, a) -> Envelope:
    _bound(a.p_max >= 2, "--p-max must be >= 2")
    cells = fermat.survey_cells(a.p_max, a.ext, a.n_max)  # raises on bound
    cache = modulus_cache(cfg)
    for p in primes_up_to(a.p_max):
        galois.gf_make(p, a.ext, cache=cache)
    records = sorted(pmap(fermat.survey_cell, cells, cfg.jobs), key=lambda r: (r.p, r.ext_deg, r.n))
    # a survey truncated by --n-max only yields verdicts for fields it covers completely
    complete = [r for r in records if a.n_max is None or a.n_max >= r.q - 1]
    verdicts = [v.as_dict() for v in fermat.claim_eval_all(complete)]
    summary = {
        "fields": len({(r.p, r.ext_deg) for r in records}),
        "records": len(records),
        "counterexamples": [[v["p"], n] for v in verdicts for n in v["counterexamples"]],
    }
    return Envelope(cfg.command, cfg.echo(), [r.as_row() for r in records], verdicts, summary)


def cmd_exponent_core(cfg: RunConfig, a) -> Envelope:
    rows = [{"n": a.n, "core": fermat.core_exponent(a.n)}]
    return Envelope(cfg.command, cfg.echo(), rows, [], {})


# curve
def parse_coeffs(text: str) -> tuple[int, int, int, int]:
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A,B,C,D integers, got {text!r}") from None
    if len(vals) != 4:
        raise argparse.ArgumentTypeError(f"expected four comma-separated integers, got {text!r}")
    return vals


def _integer_curve(coeffs) -> ec.IntegerCurve:
    return ec.curve_make(*coeffs)


def _field_curve(coeffs, p: int, k: int = 1) -> ec.Curve:
    _need_prime(p)
    if p < 5:
        raise ec.SmallCharacteristic(f"characteristic {p} < 5 is not supported")
    return ec.curve_make(*coeffs, field=galois.gf_make(p, k))


def cmd_curve_count(cfg: RunConfig, a) -> Envelope:
    _need_prime(a.p)
    q = a.p**a.ext
    _bound(q <= galois.EXHAUSTIVE_MAX_Q, f"q = {q} exceeds {galois.EXHAUSTIVE_MAX_Q}")
    E = _field_curve(a.coeffs, a.p, a.ext)
    N = ec.count_points(E)
    structure = None
    if q + 1 + 2 * int(q**0.5) + 2 <= ec.GROUP_MAX_ORDER:
        structure = list(ec.group_structure(E))
    row = {
        "p": a.p,
        "ext": a.ext,
        "q": q,
        "b": str(E.b),
        "c": str(E.c),
        "d": str(E.d),
        "point_count": N,
        "trace": q + 1 - N,
        "group_structure": structure,
    }
    summary = {"point_count": N, "a_p" if a.ext == 1 else "trace": q + 1 - N, "group_structure": structure}
    return Envelope(cfg.command, cfg.echo(), [row], [], summary)


def _reduce_task(task):
    b, c, d, p = task
    return ec.reduction_type(ec.IntegerCurve(b, c, d), p).as_row()


def cmd_curve_reduce(cfg: RunConfig, a) -> Envelope:
    E = _integer_curve(a.coeffs)
    summary = {"curve": E.as_row(), "discriminant_kind": "model discriminant"}
    if a.p is not None:
        _need_prime(a.p)
        rows = [ec.reduction_type(E, a.p).as_row()]
        return Envelope(cfg.command, cfg.echo(), rows, [], summary)
    _bound(a.p_max <= SEMISTABILITY_MAX_P, f"--p-max {a.p_max} exceeds {SEMISTABILITY_MAX_P}")
    bad = ec.bad_primes(E, a.p_max)
    rows = pmap(_reduce_task, [(E.b, E.c, E.d, p) for p in bad], cfg.jobs)
    report = ec.semistability(E, a.p_max)
    summary["semistability"] = report.as_dict()
    verdict = {"bound": a.p_max, "semistable": report.semistable, "conductor_part": report.conductor_part}
    return Envelope(cfg.command, cfg.echo(), rows, [verdict], summary)


def cmd_curve_torsion(cfg: RunConfig, a) -> Envelope:
    E = _field_curve(a.coeffs, a.p)
    rows = []
    counts = []
    complete = False
    for k in range(1, a.max_ext + 1):
        c = ec.division_points(E, a.m, k)
        counts.append(c)
        complete = c == a.m * a.m
        rows.append({"p": a.p, "m": a.m, "k": k, "q": a.p**k, "count": c, "complete": complete})
        if complete:
            break
    if not complete:
        raise ec.ExtensionBoundExceeded(f"E[{a.m}] incomplete up to degree {a.max_ext}: {counts}")
    summary = {"m_squared": a.m * a.m, "degree_reached": len(counts), "counts": counts}
    return Envelope(cfg.command, cfg.echo(), rows, [], summary)


def cmd_curve_frey(cfg: RunConfig, a) -> Envelope:
    _bound(a.p_max <= SEMISTABILITY_MAX_P, f"--p-max {a.p_max} exceeds {SEMISTABILITY_MAX_P}")
    E = ec.frey_curve(a.a, a.b, a.n)
    report = ec.semistability(E, a.p_max)
    rows = [r.as_row() for r in report.bad]
    summary = {"curve": E.as_row(), "roots": [0, a.a**a.n, -(a.b**a.n)], "semistability": report.as_dict()}
    verdict = {"bound": a.p_max, "semistable": report.semistable, "conductor_part": report.conductor_part}
    return Envelope(cfg.command, cfg.echo(), rows, [verdict], summary)


def _lseries_task(task):
    b, c, d, p = task
    E = ec.IntegerCurve(b, c, d)
    if E.discriminant % p == 0:
        kind = ec.reduction_type(E, p).type.value.lower()
        return {"p": p, "a_p": None, "status": f"omitted: bad reduction ({kind})"}
    return {"p": p, "a_p": ec.trace_ap(E, p), "status": "good"}


def cmd_curve_lseries(cfg: RunConfig, a) -> Envelope:
    _bound(a.p_max <= LSERIES_MAX_P, f"--p-max {a.p_max} exceeds {LSERIES_MAX_P}")
    E = _integer_curve(a.coeffs)
    rows = pmap(_lseries_task, [(E.b, E.c, E.d, p) for p in primes_up_to(a.p_max, 5)], cfg.jobs)
    summary = {"curve": E.as_row(), "coefficients": [[r["p"], r["a_p"]] for r in rows if r["a_p"] is not None]}
    return Envelope(cfg.command, cfg.echo(), rows, [], summary)


# metric
def parse_points(text: str):
    try:
        pts = [metricgeom.PlanePoint(*(Fraction(v) for v in chunk.split(","))) for chunk in text.split(":")]
    except (TypeError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected x,y:x,y:x,y, got {text!r}") from None
    if len(pts) != 3:
        raise argparse.ArgumentTypeError("expected exactly three points")
    return tuple(pts)


def parse_metric_arg(text: str):
    try:
        return metricgeom.parse_metric(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"unknown metric {text!r}") from None


def cmd_metric_check(cfg: RunConfig, a) -> Envelope:
    A, B, C = a.points
    res = metricgeom.pythagoras_identity(a.metric, A, B, C)
    dists = [metricgeom.dist(a.metric, P, Q) for P, Q in ((A, B), (A, C), (B, C))]
    row = {
        "metric": str(a.metric),
        "A": A.as_list(),
        "B": B.as_list(),
        "C": C.as_list(),
        "squared_distances": [str(d.squared) for d in dists],
        "lhs": str(res.lhs),
        "rhs": str(res.rhs),
        "holds": res.holds,
    }
    return Envelope(cfg.command, cfg.echo(), [row], [], {"holds": res.holds})


def _search_task(task):
    metric_text, n, bound, start, stop = task
    m = metricgeom.parse_metric(metric_text)
    return [h.as_row(m, n) for h in metricgeom.fermat_triple_search(m, n, bound, range(start, stop))]


def cmd_metric_search(cfg: RunConfig, a) -> Envelope:
    _bound(0 <= a.bound <= METRIC_MAX_BOUND, f"--bound {a.bound} outside 0..{METRIC_MAX_BOUND}")
    if a.n < 2:
        raise DomainError("--n must be >= 2")
    metricgeom._distance_powers(a.metric, a.n, metricgeom._grid(0))  # fail fast on inexact metrics
    N = metricgeom.grid_size(a.bound)
    step = max(1, -(-N // max(1, 4 * cfg.jobs)))
    slabs = [(str(a.metric), a.n, a.bound, s, min(N, s + step)) for s in range(0, N, step)]
    rows = [r for chunk in pmap(_search_task, slabs, cfg.jobs) for r in chunk]
    return Envelope(cfg.command, cfg.echo(), rows, [], {"hits": len(rows), "grid_points": N})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fermatfield", description="Finite fields, Fermat equations, elliptic curves.")
    parser.add_argument("--version", action="version", version="fermatfield " + __version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=Path, help="directory for report files (stdout if omitted)")
    common.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--diff-mode", action="store_true", help="omit the timestamp header")

    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(group_parsers, name, handler, help_):
        sp = group_parsers.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(handler=handler)
        return sp

    fld = groups.add_parser("field", help="finite field tables and structure").add_subparsers(dest="sub", required=True)
    for name, handler, help_ in (("table", cmd_field_table, "addition and multiplication tables"), ("info", cmd_field_info, "modulus, primitive element, subfields")):
        sp = leaf(fld, name, handler, help_)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--n", type=int, default=1)
        sp.add_argument("--modulus", help="monic irreducible modulus, e.g. '1 + x + x^2'")

    fer = groups.add_parser("fermat", help="Fermat equation over finite fields").add_subparsers(dest="sub", required=True)
    sp = leaf(fer, "survey", cmd_fermat_survey, "exhaustive solution counts and claim verdicts")
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--ext", type=int, default=1)
    sp.add_argument("--n-max", type=int, default=None)

    exp = groups.add_parser("exponent", help="exponent reduction").add_subparsers(dest="sub", required=True)
    sp = leaf(exp, "core", cmd_exponent_core, "smallest divisor that is 4 or an odd prime")
    sp.add_argument("--n", type=int, required=True)

    cur = groups.add_parser("curve", help="elliptic curves").add_subparsers(dest="sub", required=True)
    sp = leaf(cur, "count", cmd_curve_count, "point count, trace and group structure")
    sp.add_argument("--coeffs", type=parse_coeffs, required=True, help="A,B,C,D")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--ext", type=int, default=1)
    sp = leaf(cur, "reduce", cmd_curve_reduce, "reduction type at p, or semistability up to --p-max")
    sp.add_argument("--coeffs", type=parse_coeffs, required=True, help="A,B,C,D")
    where = sp.add_mutually_exclusive_group(required=True)
    where.add_argument("--p", type=int)
    where.add_argument("--p-max", type=int)
    sp = leaf(cur, "torsion", cmd_curve_torsion, "m-division points over extensions")
    sp.add_argument("--coeffs", type=parse_coeffs, required=True, help="A,B,C,D")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--max-ext", type=int, default=ec.DEFAULT_MAX_EXT)
    sp = leaf(cur, "frey", cmd_curve_frey, "Frey curve y^2 = x(x - a^n)(x + b^n)")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p-max", type=int, default=100)
    sp = leaf(cur, "lseries", cmd_curve_lseries, "a_p for primes 5 <= p <= p_max")
    sp.add_argument("--coeffs", type=parse_coeffs, required=True, help="A,B,C,D")
    sp.add_argument("--p-max", type=int, required=True)

    met = groups.add_parser("metric", help="metric identities in the plane").add_subparsers(dest="sub", required=True)
    sp = leaf(met, "check", cmd_metric_check, "Pythagoras identity with the right angle at A")
    sp.add_argument("--metric", type=parse_metric_arg, required=True)
    sp.add_argument("--points", type=parse_points, default=metricgeom.UNIT_TRIPLE, help="A:B:C as x,y:x,y:x,y")
    sp = leaf(met, "search", cmd_metric_search, "grid search for d(A,B)^n + d(A,C)^n = d(B,C)^n")
    sp.add_argument("--metric", type=parse_metric_arg, required=True)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--bound", type=int, default=5)
    return parser


def _echo_args(ns: argparse.Namespace) -> dict:
    skip = {"handler", "group", "sub", "out", "fmt", "jobs", "diff_mode"}
    out = {}
    for k, v in sorted(vars(ns).items()):
        if k in skip:
            continue
        if isinstance(v, metricgeom.Metric):
            v = str(v)
        elif isinstance(v, tuple) and v and isinstance(v[0], metricgeom.PlanePoint):
            v = [P.as_list() for P in v]
        elif isinstance(v, tuple):
            v = list(v)
        out[k] = v
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if ns.jobs < 1:
        parser.print_usage(sys.stderr)
        print("fermatfield: error: argument --jobs: must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    cfg = RunConfig(f"{ns.group} {ns.sub}", _echo_args(ns), ns.out, ns.fmt, ns.jobs, ns.diff_mode)
    try:
        envelope = ns.handler(cfg, ns)
        if cfg.out is None:
            print(render(envelope, cfg.fmt, cfg.diff_mode)["report.json" if cfg.fmt == "json" else "rows.csv"], end="")
        else:
            for path in emit_report(envelope, cfg.fmt, cfg.out, cfg.diff_mode):
                print(path)
    except BoundError as exc:
        print(f"fermatfield: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except DomainError as exc:
        print(f"fermatfield: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except IoFailure as exc:
        print(f"fermatfield: IoFailure: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
