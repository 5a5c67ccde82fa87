"""Command-line front end: build states, measure entanglement, sweep, verify.

Exit codes: 0 on success, 1 when a quantitative claim or oracle tolerance
fails, 2 on any usage or input error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .families import FamilySpec, build_state, parse_family_spec, predicted_entanglement, werner
from .measure import entanglement_profile
from .oracle import eigen_oracle, grid_oracle
from .statevector import StateVector, dumps_state, ket_label, load_state
from .verify import run_all

PRETTY_EPS = 1e-14


def _fmt(x: float, digits: int) -> str:
    return f"{x:.{digits}g}"


def _ket_lines(psi: StateVector, digits: int) -> list[str]:
    """Nonzero amplitudes as ket strings, basis index ascending."""
    lines = []
    for idx, amp in enumerate(psi.amps):
        if abs(amp) < PRETTY_EPS:
            continue
        if abs(amp.imag) < PRETTY_EPS:
            coeff = f"{amp.real:+.{digits}g}"
        else:
            coeff = f"({amp.real:.{digits}g}{amp.imag:+.{digits}g}i)"
        lines.append(f"{coeff} |{ket_label(idx, psi.n)}⟩")
    return lines


def _load_source(source: str) -> StateVector:
    """A family spec such as 'dicke:4,2', or the path of a state file."""
    tag = source.partition(":")[0].strip().lower()
    if tag in ("werner", "dicke", "ghz", "sin", "cos"):
        return build_state(parse_family_spec(source))
    return load_state(source)


def _cmd_state(args: argparse.Namespace) -> int:
    psi = build_state(parse_family_spec(args.spec))
    document = dumps_state(psi)
    if args.output:
        Path(args.output).write_text(document, encoding="utf-8")
    elif not args.pretty:
        sys.stdout.write(document)
    if args.pretty:
        print("\n".join(_ket_lines(psi, args.digits)))
    return 0


def _cmd_measure(args: argparse.Namespace) -> int:
    psi = _load_source(args.source)
    profile = entanglement_profile(psi)
    rows = [[str(q + 1), _fmt(e, args.digits)] for q, e in enumerate(profile.per_qubit)]
    header = ["qubit", "E"]
    max_dev = 0.0
    payload: dict = {"per_qubit": list(profile.per_qubit), "total": profile.total}
    if args.check_oracles:
        header += ["eigen", "grid"]
        eig = [eigen_oracle(psi, q) for q in range(1, psi.n + 1)]
        grd = [grid_oracle(psi, q).E_est for q in range(1, psi.n + 1)]
        for q, e in enumerate(profile.per_qubit):
            rows[q] += [_fmt(eig[q], args.digits), _fmt(grd[q], args.digits)]
            max_dev = max(max_dev, abs(e - eig[q]), abs(e - grd[q]))
        payload["eigen"] = eig
        payload["grid"] = grd
        payload["max_oracle_deviation"] = max_dev

    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(row))
        total_row = ["total", _fmt(profile.total, args.digits)] + [""] * (len(header) - 2)
        print(",".join(total_row))
    else:
        widths = [max(len(h), max(len(r[i]) for r in rows)) for i, h in enumerate(header)]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for row in rows:
            print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
        print(f"total: {_fmt(profile.total, args.digits)}")
        if args.check_oracles:
            print(f"max oracle deviation: {max_dev:.3e} (tol {args.tol:g})")
    if args.check_oracles and max_dev > args.tol:
        print(f"error: oracle deviation {max_dev:.3e} exceeds tolerance {args.tol:g}",
              file=sys.stderr)
        return 1
    return 0


def _sweep_points(args: argparse.Namespace) -> list[tuple[float, StateVector, float]]:
    """(parameter, state, predicted E) triples for one sweep family."""
    n = args.n
    if n < 2:
        raise ValueError("sweep needs at least 2 qubits")
    points = []
    if args.family == "dicke":
        for k in range(n + 1):
            spec = FamilySpec(kind="dicke", n=n, k=k)
            points.append((float(k), build_state(spec), predicted_entanglement(spec, 1)))
        return points
    if args.steps < 2:
        raise ValueError("sweep needs at least 2 steps")
    for p in np.linspace(0.0, 1.0, args.steps):
        p = float(p)
        if args.family == "ghz":
            spec = FamilySpec(kind="ghz", n=n,
                              coeffs=(complex(math.sqrt(p)), complex(math.sqrt(1.0 - p))))
            points.append((p, build_state(spec), predicted_entanglement(spec, 1)))
        else:  # werner-symmetric: |c_1|^2 = p, remaining weight spread equally
            c = np.full(n, math.sqrt((1.0 - p) / (n - 1)))
            c[0] = math.sqrt(p)
            spec = FamilySpec(kind="werner", n=n, coeffs=tuple(complex(x) for x in c))
            points.append((p, werner(c), predicted_entanglement(spec, 1)))
    return points


def _cmd_sweep(args: argparse.Namespace) -> int:
    points = _sweep_points(args)
    n = args.n
    lines = ["param," + ",".join(f"E_{q}" for q in range(1, n + 1)) + ",total,predicted"]
    for param, psi, predicted in points:
        profile = entanglement_profile(psi)
        cells = [_fmt(param, args.digits)]
        cells += [_fmt(e, args.digits) for e in profile.per_qubit]
        cells += [_fmt(profile.total, args.digits), _fmt(predicted, args.digits)]
        lines.append(",".join(cells))
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if not 2 <= args.max_n <= 14:
        raise ValueError(f"max-n must be in 2..14, got {args.max_n}")
    print(f"verification run: seed={args.seed} max_n={args.max_n} grid=64x64 rounds=8")
    results = run_all(max_n=args.max_n, seed=args.seed)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        worst = res.worst
        print(f"{status} {res.number:>2}  {res.name:<38} checks={res.n_evaluations:<6} "
              f"max_dev={worst.deviation:.3e}  tol={worst.tolerance:.0e}  ({worst.label})")
    n_pass = sum(res.passed for res in results)
    print(f"{n_pass}/{len(results)} claims passed")
    return 0 if n_pass == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "csv", "json"], default="table",
                        help="output format for reports (default table)")
    common.add_argument("--tol", type=float, default=1e-6,
                        help="oracle agreement tolerance (default 1e-6)")
    common.add_argument("--digits", type=int, default=12,
                        help="significant digits in printed reals (default 12)")
    common.add_argument("--seed", type=int, default=42,
                        help="seed for randomized corpora (default 42)")

    parser = argparse.ArgumentParser(
        prog="qgem",
        description="Geometric measure of entanglement of one qubit with the rest")
    sub = parser.add_subparsers(dest="command", required=True)

    p_state = sub.add_parser("state", parents=[common],
                             help="build a family state and write its state file")
    p_state.add_argument("spec", help="family spec, e.g. werner:0.6,0.8 / dicke:4,2 / "
                                      "ghz:3,0.7071067811865476 / sin:3 / cos:4")
    p_state.add_argument("-o", "--output", help="state file path (default stdout)")
    p_state.add_argument("--pretty", action="store_true",
                         help="print nonzero amplitudes as ket strings")

    p_measure = sub.add_parser("measure", parents=[common],
                               help="per-qubit entanglement profile of a state")
    p_measure.add_argument("source", help="family spec or state-file path")
    p_measure.add_argument("--check-oracles", action="store_true",
                           help="also run both numerical oracles and compare")

    p_sweep = sub.add_parser("sweep", parents=[common],
                             help="CSV sweep of a one-parameter family")
    p_sweep.add_argument("family", choices=["ghz", "werner-symmetric", "dicke"])
    p_sweep.add_argument("--n", type=int, required=True, help="number of qubits")
    p_sweep.add_argument("--steps", type=int, default=21,
                         help="points for continuous sweeps (default 21)")
    p_sweep.add_argument("-o", "--output", help="CSV path (default stdout)")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run the full claim-verification suite")
    p_verify.add_argument("--max-n", type=int, default=10,
                          help="largest qubit count exercised, 2..14 (default 10)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"state": _cmd_state, "measure": _cmd_measure,
               "sweep": _cmd_sweep, "verify": _cmd_verify}[args.command]
    try:
        return handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
