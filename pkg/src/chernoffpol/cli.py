"""Command-line front end: sweeps, crossings, discrimination queries, single-state measures.

Exit codes: 0 success, 2 validation error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from chernoffpol._numerics import bisect
from chernoffpol.discrimination import ORTHOGONAL_TOL, minimize_s_overlap, p_min_k
from chernoffpol.entanglement import (
    concurrence_bell_diagonal,
    concurrence_werner,
    concurrence_x_family,
    wootters_concurrence,
)
from chernoffpol.errors import NumericalError, ValidationError
from chernoffpol.fock_space import FockBasis
from chernoffpol.polarization import degree_chernoff, min_overlap_bell_diagonal
from chernoffpol.states import (
    BellDiagonalParams,
    bell_diagonal_state,
    common_basis,
    load_state,
    werner_params,
    x_family_params,
)

log = logging.getLogger(__name__)

EXIT_OK, EXIT_VALIDATION, EXIT_NUMERICAL = 0, 2, 3
DEFAULT_POINTS = 201
CROSS_CHECK_TOL = 1e-6
CROSSING_XTOL = 1e-8
CSV_FIELDS = ("param", "concurrence", "degree_pol", "s_star", "q_star")

FAMILIES: dict[str, tuple[Callable[[float], BellDiagonalParams], Callable[[float], float], tuple[float, float]]] = {
    "werner": (werner_params, concurrence_werner, (0.0, 1.0)),
    "x-family": (x_family_params, concurrence_x_family, (-1.0, 1.0)),
}


@dataclass(frozen=True)
class SweepRecord:
    param: float
    concurrence: float
    degree_pol: float
    s_star: float
    q_star: float


@dataclass(frozen=True)
class CrossingResult:
    location: float
    residual: float
    bracket: tuple[float, float]


def _family(name: str):
    key = name.replace("_", "-")
    if key not in FAMILIES:
        raise ValidationError(f"unknown family {name!r}; expected werner or x-family")
    return FAMILIES[key]


def evaluate_point(family: str, t: float, cross_check: bool = False) -> SweepRecord:
    params_of, conc_of, _ = _family(family)
    p = params_of(t)
    inner = min_overlap_bell_diagonal(p)
    degree = min(max(1.0 - inner.q_star, 0.0), 1.0)
    conc = conc_of(t)
    if cross_check:
        general = degree_chernoff(bell_diagonal_state(FockBasis(), p)).degree
        if abs(general - degree) > CROSS_CHECK_TOL:
            raise NumericalError(
                f"cross-check failed at {family}={t!r}: closed form {degree:.12g} "
                f"vs max-min {general:.12g}")
        if abs(concurrence_bell_diagonal(p) - conc) > 1e-12:
            raise NumericalError(f"cross-check failed at {family}={t!r}: concurrence closed forms disagree")
    return SweepRecord(param=t, concurrence=conc, degree_pol=degree, s_star=inner.s_star, q_star=inner.q_star)


def sweep(family: str, n_points: int = DEFAULT_POINTS, cross_check: bool = False) -> list[SweepRecord]:
    if int(n_points) != n_points or n_points < 2:
        raise ValidationError(f"n_points must be an integer >= 2, got {n_points!r}")
    _, _, (lo, hi) = _family(family)
    grid = np.linspace(lo, hi, int(n_points))
    # pin the endpoints and make the grid exactly symmetric where the domain is
    grid[0], grid[-1] = lo, hi
    if lo == -hi:
        grid = 0.5 * (grid - grid[::-1])
    return [evaluate_point(family, float(t), cross_check) for t in grid]


def sweep_werner(n_points: int = DEFAULT_POINTS, cross_check: bool = False) -> list[SweepRecord]:
    return sweep("werner", n_points, cross_check)


def sweep_x_family(n_points: int = DEFAULT_POINTS, cross_check: bool = False) -> list[SweepRecord]:
    return sweep("x-family", n_points, cross_check)


def crossing_gap(family: str, t: float) -> float:
    """C(t) - P_C(t) along a family."""
    rec = evaluate_point(family, t)
    return rec.concurrence - rec.degree_pol


def find_crossing(family: str, lo: float, hi: float, xtol: float = CROSSING_XTOL) -> CrossingResult:
    """Bisection for C = P_C on ``[lo, hi]``; raises NumericalError without a sign change."""
    if not lo < hi:
        raise ValidationError(f"bracket must satisfy lo < hi, got [{lo}, {hi}]")
    _, _, (dlo, dhi) = _family(family)
    if lo < dlo or hi > dhi:
        raise ValidationError(f"bracket [{lo}, {hi}] leaves the {family} domain [{dlo}, {dhi}]")
    f = lambda t: crossing_gap(family, t)
    root, bracket = bisect(f, lo, hi, xtol=xtol)
    return CrossingResult(location=root, residual=abs(f(root)), bracket=bracket)


def discriminate(rho, zeta, k: int) -> dict:
    """Chernoff quantities and the exact k-copy error for a pair of states."""
    rho, zeta = common_basis([rho, zeta])
    res = minimize_s_overlap(rho, zeta)
    infinite = res.q_star <= ORTHOGONAL_TOL
    report = {
        "q_star": res.q_star,
        "s_star": res.s_star,
        "xi_qcb": "infinite exponent" if infinite else max(-float(np.log(res.q_star)), 0.0),
        "copies": [],
    }
    for j in range(1, k + 1):
        report["copies"].append({
            "k": j,
            "p_min": p_min_k(rho, zeta, j),
            "chernoff_upper_bound": 0.5 * res.q_star ** j,
        })
    return report


def measure(rho) -> dict:
    pol = degree_chernoff(rho)
    try:
        conc = wootters_concurrence(rho)
    except ValidationError as exc:
        log.info("concurrence unavailable: %s", exc)
        conc = None
    return {
        "concurrence": conc,
        "degree_pol": pol.degree,
        "purity": rho.purity(),
        "s_star": pol.s_star,
        "best_pi": list(pol.best_pi.pi),
    }


def _g(v: float) -> str:
    return f"{v:.12g}"


def records_to_csv(records: Sequence[SweepRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in records:
        w.writerow([_g(getattr(r, k)) for k in CSV_FIELDS])
    return buf.getvalue()


def records_to_json(records: Sequence[SweepRecord]) -> str:
    rows = [{k: float(_g(getattr(r, k))) for k in CSV_FIELDS} for r in records]
    return json.dumps(rows, indent=1) + "\n"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_sweep(args) -> int:
    records = sweep(args.family, args.points, args.cross_check)
    text = records_to_csv(records) if args.format == "csv" else records_to_json(records)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_crossing(args) -> int:
    res = find_crossing(args.family, args.lo, args.hi)
    print(json.dumps({
        "family": args.family,
        "location": round(res.location, 7),
        "location_full": res.location,
        "residual": res.residual,
        "bracket": list(res.bracket),
    }, indent=1))
    return EXIT_OK


def _cmd_discriminate(args) -> int:
    report = discriminate(load_state(args.a), load_state(args.b), args.copies)
    print(json.dumps(report, indent=1))
    return EXIT_OK


def _cmd_measure(args) -> int:
    print(json.dumps(measure(load_state(args.state)), indent=1))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chernoffpol",
        description="Concurrence versus Chernoff degree of polarization for two-mode photonic states.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="tabulate C and P_C along a state family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--points", type=int, default=DEFAULT_POINTS)
    p.add_argument("--cross-check", action="store_true",
                   help="recompute each degree by the general max-min path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("crossing", help="locate C = P_C by bisection")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.set_defaults(func=_cmd_crossing)

    p = sub.add_parser("discriminate", help="Chernoff bound and k-copy error for two states")
    p.add_argument("--a", required=True, help="JSON state file")
    p.add_argument("--b", required=True, help="JSON state file")
    p.add_argument("--copies", type=int, default=1)
    p.set_defaults(func=_cmd_discriminate)

    p = sub.add_parser("measure", help="concurrence, P_C and purity of one state")
    p.add_argument("--state", required=True, help="JSON state file")
    p.set_defaults(func=_cmd_measure)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
