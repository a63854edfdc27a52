"""Command-line surface.

Weights are given as comma-separated fundamental-weight coordinates (n-1 of
them).  Explicit bound vectors follow the package's positive-root order
(1,1), (1,2), ..., (1,n-1), (2,2), ...  Exit codes: 0 success, 1 verification
mismatch or computational failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .cases import verify_case
from .dyck import (
    BoundVector,
    bounds_from_pair,
    dominant_points,
    dyck_paths,
    inequalities,
    lattice_points,
)
from .fusion import DEFAULT_DIM_CAP, DimensionCapError, build_irrep, fusion_graded
from .poset import poset_report, weyl_character_prediction
from .suite import DEFAULT_EVAL_PAIRS, run_all
from .tensor import DecompositionMap, lr_coefficients
from .typea import Weight, weyl_dim

CAP_ENV_VAR = "SLNFUSION_DIM_CAP"


def _parse_weight(parser: argparse.ArgumentParser, n: int, text: str, flag: str) -> Weight:
    try:
        coords = tuple(int(c) for c in text.split(","))
    except ValueError:
        parser.error(f"{flag}: expected comma-separated integers, got {text!r}")
    if len(coords) != n - 1:
        parser.error(f"{flag}: expected {n - 1} coordinates for n={n}, got {len(coords)}")
    if any(c < 0 for c in coords):
        parser.error(f"{flag}: coordinates must be nonnegative, got {text!r}")
    return Weight(n, coords)


def _parse_eval_pairs(parser: argparse.ArgumentParser, text: str):
    pairs = []
    try:
        for chunk in text.split(";"):
            c1, c2 = (Fraction(part.strip()) for part in chunk.split(","))
            pairs.append((c1, c2))
    except (ValueError, ZeroDivisionError):
        parser.error(f"--evals: expected 'c1,c2;c1,c2;...' with rationals, got {text!r}")
    for c1, c2 in pairs:
        if c1 == c2:
            parser.error(f"--evals: evaluation points must be distinct, got {c1},{c2}")
    return tuple(pairs)


def _resolve_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            print(f"ignoring non-integer {CAP_ENV_VAR}={env!r}", file=sys.stderr)
    return DEFAULT_DIM_CAP


def _emit(args, payload, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _decomposition_lines(dm: DecompositionMap, title: str) -> list[str]:
    lines = [title, f"  {'tau':<16}{'mult':>6}{'dim':>8}"]
    total = 0
    for tau, mult in dm.items_sorted():
        d = weyl_dim(tau)
        total += mult * d
        lines.append(f"  {str(tau):<16}{mult:>6}{d:>8}")
    lines.append(f"  total dimension {total}")
    return lines


def _monomial(point) -> str:
    exps = point.to_json()["exps"]
    if not exps:
        return "1"
    return " ".join(
        f"x[{i},{j}]" + (f"^{s}" if s > 1 else "") for i, j, s in exps
    )


def _root_label(root) -> str:
    return f"({root.i},{root.j})"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slnfusion",
        description="Tensor, lattice-point, fusion, and poset computations for sl_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("lr", "tensor product decomposition of V(l) (x) V(m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", required=True, help="first weight, comma-separated coordinates")
    p.add_argument("--m", required=True, help="second weight")

    p = add("dyck", "Dyck paths and the pruned inequality system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-prune", action="store_true", help="show the full system")

    p = add("points", "lattice points for a weight pair or explicit bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", help="first weight (with --m)")
    p.add_argument("--m", help="second weight (with --l)")
    p.add_argument("--bounds", help="explicit bound vector, root order, comma-separated")

    p = add("hw-candidates", "lattice points whose shifted weight is dominant")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", required=True)
    p.add_argument("--m", required=True)

    p = add("case", "sweep one proven regime against the oracle")
    p.add_argument(
        "--tag",
        required=True,
        choices=("sl2", "rectangular", "pieri-row", "pieri-column", "large"),
    )
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--n-values", default="3,4", help="comma-separated ranks")
    p.add_argument("--coord-max", type=int, default=2)
    p.add_argument("--k-max", type=int, default=3)

    p = add("fusion", "graded fusion product of V(l) and V(m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--c1", type=Fraction, default=Fraction(0))
    p.add_argument("--c2", type=Fraction, default=Fraction(1))
    p.add_argument("--cap", type=int, default=None, help=f"dimension cap (or ${CAP_ENV_VAR})")

    p = add("poset", "two-part splitting poset of a dominant weight")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", required=True)

    p = add("weyl", "truncated Weyl module character prediction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", required=True)

    p = add("verify", "run the full acceptance battery")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--coord-max", type=int, default=3)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument(
        "--evals",
        default="0,1;1,3;2,-1",
        help="evaluation-point pairs for independence tests, 'c1,c2;c1,c2;...'",
    )

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(parser, args)
    except DimensionCapError as exc:
        print(f"dimension cap exceeded: {exc} (dim={exc.dim}, cap={exc.cap})", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(parser: argparse.ArgumentParser, args) -> int:
    if args.command == "lr":
        lam = _parse_weight(parser, args.n, args.l, "--l")
        mu = _parse_weight(parser, args.n, args.m, "--m")
        dm = lr_coefficients(lam, mu)
        _emit(args, dm.to_json(), _decomposition_lines(dm, f"V{lam} (x) V{mu} [n={args.n}]"))
        return 0

    if args.command == "dyck":
        if args.n < 2:
            parser.error("--n must be at least 2")
        paths = dyck_paths(args.n)
        system = inequalities(args.n, prune=not args.no_prune)
        payload = {
            "n": args.n,
            "paths": [[[r.i, r.j] for r in p.steps] for p in paths],
            "inequalities": [
                {
                    "support": [[r.i, r.j] for r in ineq.support],
                    "base": [ineq.base.i, ineq.base.j],
                }
                for ineq in system
            ],
        }
        lines = [f"{len(paths)} Dyck paths for n={args.n}:"]
        lines += [
            "  " + " -> ".join(_root_label(r) for r in p.steps)
            + f"   [base {_root_label(p.base)}]"
            for p in paths
        ]
        lines.append(f"{len(system)} inequalities:")
        lines += [
            "  " + " + ".join(f"x[{r.i},{r.j}]" for r in ineq.support)
            + f" <= a[{ineq.base.i},{ineq.base.j}]"
            for ineq in system
        ]
        _emit(args, payload, lines)
        return 0

    if args.command == "points":
        if args.bounds is not None:
            try:
                values = tuple(int(v) for v in args.bounds.split(","))
                bounds = BoundVector(args.n, values)
            except ValueError as exc:
                parser.error(f"--bounds: {exc}")
        elif args.l is not None and args.m is not None:
            lam = _parse_weight(parser, args.n, args.l, "--l")
            mu = _parse_weight(parser, args.n, args.m, "--m")
            bounds = bounds_from_pair(lam, mu)
        else:
            parser.error("points needs either --bounds or both --l and --m")
        pts = lattice_points(bounds)
        payload = {
            "n": args.n,
            "bounds": list(bounds.values),
            "count": len(pts),
            "points": [p.to_json() for p in pts],
        }
        lines = [f"bounds {bounds.values}: {len(pts)} lattice points"]
        lines += [f"  {_monomial(p)}   (deg {p.deg})" for p in pts]
        _emit(args, payload, lines)
        return 0

    if args.command == "hw-candidates":
        lam = _parse_weight(parser, args.n, args.l, "--l")
        mu = _parse_weight(parser, args.n, args.m, "--m")
        pts = dominant_points(lam, mu)
        payload = {
            "n": args.n,
            "lambda1": lam.to_json(),
            "lambda2": mu.to_json(),
            "count": len(pts),
            "points": [
                {"point": p.to_json(), "tau": tau.to_json()} for p, tau in pts
            ],
        }
        lines = [f"{len(pts)} dominant-weight points for V{lam} (x) V{mu}:"]
        lines += [
            f"  {_monomial(p):<30} tau {tau}   (deg {p.deg})" for p, tau in pts
        ]
        _emit(args, payload, lines)
        return 0

    if args.command == "case":
        try:
            n_values = tuple(int(v) for v in args.n_values.split(","))
        except ValueError:
            parser.error(f"--n-values: expected comma-separated ranks, got {args.n_values!r}")
        reports = verify_case(
            args.tag,
            m_max=args.m_max,
            n_values=n_values,
            coord_max=args.coord_max,
            k_max=args.k_max,
        )
        mismatched = [r for r in reports if not r.equal]
        payload = [r.to_json() for r in reports]
        lines = [
            f"case {args.tag}: {len(reports)} comparisons, {len(mismatched)} mismatches"
        ]
        for r in mismatched:
            lines.append(f"  MISMATCH {r.params}")
            for tau, a, c in r.mismatches:
                lines.append(f"    tau {tau}: formula {a}, oracle {c}")
        _emit(args, payload, lines)
        return 0 if not mismatched else 1

    if args.command == "fusion":
        lam = _parse_weight(parser, args.n, args.l, "--l")
        mu = _parse_weight(parser, args.n, args.m, "--m")
        if args.c1 == args.c2:
            parser.error("--c1 and --c2 must be distinct")
        cap = _resolve_cap(args)
        graded = fusion_graded(
            build_irrep(lam, cap), args.c1, build_irrep(mu, cap), args.c2
        )
        lines = [
            f"fusion V{lam} (x) V{mu} [n={args.n}] at points {args.c1}, {args.c2}"
        ]
        for s, dm in graded.slices():
            terms = ", ".join(
                (f"{m} x " if m > 1 else "") + f"V{tau}" for tau, m in dm.items_sorted()
            )
            lines.append(f"  degree {s}: {terms}")
        lines.append(f"  total dimension {graded.dimension()}")
        _emit(args, graded.to_json(), lines)
        return 0

    if args.command == "poset":
        lam = _parse_weight(parser, args.n, args.l, "--l")
        report = poset_report(lam)
        lines = [f"poset of {lam} [n={args.n}]: {len(report.nodes)} elements"]
        for idx, node in enumerate(report.nodes):
            lines.append(f"  [{idx}] {node}   min-vector {node.min_vector.values}")
        lines.append(f"{len(report.edges)} cover relations:")
        for a, b, positive in report.edges:
            lines.append(f"  [{a}] <= [{b}]   schur_positive={positive}")
        lines.append(f"minimum {report.min_pair}")
        lines.append(f"maximum {report.max_pair}")
        _emit(args, report.to_json(), lines)
        return 0

    if args.command == "weyl":
        lam = _parse_weight(parser, args.n, args.l, "--l")
        prediction = weyl_character_prediction(lam)
        status = (
            "conjectural"
            if prediction.conjectural
            else f"proven regime: {prediction.proven_regime}"
        )
        lines = _decomposition_lines(
            prediction.character,
            f"truncated Weyl module character at {lam} [n={args.n}] ({status})",
        )
        lines.insert(1, f"  maximal pair {prediction.max_pair}")
        _emit(args, prediction.to_json(), lines)
        return 0

    if args.command == "verify":
        eval_pairs = _parse_eval_pairs(parser, args.evals)
        cap = _resolve_cap(args)
        results = run_all(
            n_max=args.n_max,
            coord_max=args.coord_max,
            dim_cap=cap,
            eval_pairs=eval_pairs,
        )
        payload = [
            {
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
                "elapsed": round(r.elapsed, 3),
            }
            for r in results
        ]
        lines = [r.line() for r in results]
        ok = all(r.passed for r in results)
        lines.append("all checks passed" if ok else "FAILURES PRESENT")
        _emit(args, payload, lines)
        return 0 if ok else 1

    parser.error(f"unknown command {args.command!r}")
    return 2
