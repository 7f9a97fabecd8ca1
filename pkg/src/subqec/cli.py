"""Command-line front end.

Subcommands: info, build, distance, decode, simulate, compare.  Output is
JSON on stdout with sorted keys; rates are rounded to 6 decimal places so
identical runs emit identical bytes.  Exit codes: 0 success, 1 validation
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

import numpy as np

from . import __version__
from .classical import LinearCode, builtin
from .builder import ShorCode, SubsystemCode
from .pauli import PauliGrid
from .recovery import distance_bruteforce, extract_syndrome, recover
from .simulate import NoiseModel, compare_report, run_trials


# -- matrix files --------------------------------------------------------

def parse_matrix(text: str, source: str = "<matrix>") -> np.ndarray:
    """Parse the plain-text matrix format.

    First non-comment line is ``<rows> <cols>``; each following non-comment
    line is a string of 0/1 characters of length ``cols``.  ``#`` starts a
    comment anywhere on a line.  Errors name the offending line (1-based)
    and column.
    """
    header = None
    rows = []
    expect = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ValueError(
                    f"{source}:{lineno}: expected '<rows> <cols>' header, "
                    f"got {line!r}")
            header = (int(parts[0]), int(parts[1]))
            expect = header
            continue
        if len(rows) == expect[0]:
            raise ValueError(f"{source}:{lineno}: more rows than the header "
                             f"promised ({expect[0]})")
        if len(line) != expect[1]:
            raise ValueError(
                f"{source}:{lineno}: row has {len(line)} entries, header "
                f"promised {expect[1]}")
        for col, ch in enumerate(line, start=1):
            if ch not in "01":
                raise ValueError(
                    f"{source}:{lineno}:{col}: invalid character {ch!r}; "
                    f"rows must be 0/1 strings")
        rows.append([int(ch) for ch in line])
    if header is None:
        raise ValueError(f"{source}: no header line found")
    if len(rows) != header[0]:
        raise ValueError(
            f"{source}: header promised {header[0]} rows, found {len(rows)}")
    return np.array(rows, dtype=np.uint8).reshape(header[0], header[1])


def format_matrix(m: np.ndarray) -> str:
    """Serialize a matrix to the text format (round-trips with parse)."""
    m = np.asarray(m, dtype=np.uint8)
    lines = [f"{m.shape[0]} {m.shape[1]}"]
    lines.extend("".join(str(int(b)) for b in row) for row in m)
    return "\n".join(lines) + "\n"


def load_code(spec: str) -> LinearCode:
    """Resolve a code spec: rep:<n>, hamming:7-4, generator:<path>, or
    parity:<path>."""
    spec = spec.strip()
    if spec.startswith("generator:") or spec.startswith("parity:"):
        role, path = spec.split(":", 1)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValueError(f"cannot read {path}: {exc}") from None
        m = parse_matrix(text, source=path)
        if role == "generator":
            return LinearCode.from_generator(m)
        return LinearCode.from_parity(m)
    return builtin(spec)


# -- Pauli strings --------------------------------------------------------

_TERM_RE = re.compile(r"^([XYZ])@\((\d+),(\d+)\)$")


def parse_error(text: str, rows: int, cols: int) -> PauliGrid:
    """Parse ``X@(0,0),Z@(1,2),...``; repeated sites compose by
    multiplication."""
    op = PauliGrid.identity(rows, cols)
    # Site coordinates contain commas, so match whole terms instead of
    # splitting the string on commas.
    terms = re.findall(r"[XYZ]@\(\s*\d+\s*,\s*\d+\s*\)", text)
    leftover = re.sub(r"[XYZ]@\(\s*\d+\s*,\s*\d+\s*\)", "", text)
    if leftover.strip(", \t"):
        raise ValueError(f"unparsed error terms in {text!r}; expected "
                         f"comma-separated P@(row,col) with P in X,Y,Z")
    if not terms:
        raise ValueError(f"no error terms found in {text!r}")
    for term in terms:
        m = _TERM_RE.match(term.replace(" ", ""))
        kind, r, c = m.group(1), int(m.group(2)), int(m.group(3))
        if not (r < rows and c < cols):
            raise ValueError(f"site ({r},{c}) outside the {rows}x{cols} grid")
        op = op * PauliGrid.single(rows, cols, r, c, kind)
    return op


# -- rendering ------------------------------------------------------------

def render_op(op: PauliGrid) -> dict:
    return {"phase": op.phase, "rows": op.to_rows()}


def _bits(m: np.ndarray) -> list:
    return [[int(v) for v in row] for row in np.atleast_2d(m)]


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _round_rates(payload, keys=("rate", "std_error")):
    for key in keys:
        if key in payload:
            payload[key] = round(payload[key], 6)
    return payload


# -- subcommands ----------------------------------------------------------

def _cmd_info(args) -> int:
    code = load_code(args.codespec)
    d = code.d
    if d is None:
        try:
            d = code.min_distance()
        except ValueError:
            d = None
    _emit({
        "name": code.name,
        "n": code.n,
        "k": code.k,
        "d": d,
        "generator": ["".join(str(int(b)) for b in r) for r in code.generator],
        "check": ["".join(str(int(b)) for b in r) for r in code.check],
        "check_complement": ["".join(str(int(b)) for b in r)
                             for r in code.check_complement],
        "generator_complement": ["".join(str(int(b)) for b in r)
                                 for r in code.generator_complement],
    })
    return 0


def _build(args):
    c1 = load_code(args.c1)
    c2 = load_code(args.c2)
    for c in (c1, c2):
        if c.d is None:
            try:
                c.min_distance()
            except ValueError:
                pass  # block too large to enumerate; leave d unknown
    return ShorCode(c1, c2) if getattr(args, "shor", False) else SubsystemCode(c1, c2)


def _cmd_build(args) -> int:
    code = _build(args)
    payload = {
        "type": "shor" if code.shor else "subsystem",
        "n": code.n,
        "k": code.k,
        "distance": code.distance,
        "gauge_qubits": code.gauge_qubits,
        "z_stabilizers": len(code.z_stabilizers),
        "x_stabilizers": len(code.x_stabilizers),
        "total_stabilizers": len(code.stabilizers),
        "gauge_generators": len(code.gauges),
        "logical_pairs": code.k,
    }
    if args.verbose:
        payload["z_stabilizer_ops"] = [render_op(s) for s in code.z_stabilizers]
        payload["x_stabilizer_ops"] = [render_op(s) for s in code.x_stabilizers]
        payload["gauge_ops"] = [render_op(g) for g in code.gauges]
        payload["logical_x_ops"] = [render_op(l)
                                    for row in code.logical_x for l in row]
        payload["logical_z_ops"] = [render_op(l)
                                    for row in code.logical_z for l in row]
    _emit(payload)
    return 0


def _cmd_distance(args) -> int:
    code = _build(args)
    found = distance_bruteforce(code, args.wmax)
    _emit({
        "n": code.n,
        "k": code.k,
        "w_max": args.wmax,
        "distance": found,
        "found_within_bound": found is not None,
    })
    return 0


def _cmd_decode(args) -> int:
    code = _build(args)
    err = parse_error(args.error, code.n1, code.n2)
    syn = extract_syndrome(code, err)
    out = recover(code, err)
    _emit({
        "error": render_op(err),
        "syndrome": {"s_z": _bits(syn.s_z), "s_x": _bits(syn.s_x)},
        "correction": render_op(out.correction),
        "residual_z_logical": _bits(out.residual_z),
        "residual_x_logical": _bits(out.residual_x),
        "logical_ok": out.logical_ok,
    })
    return 0


def _cmd_simulate(args) -> int:
    code = _build(args)
    kind = args.noise
    if kind == "independent_xz":
        if args.px is None or args.pz is None:
            raise ValueError("independent_xz needs --px and --pz")
        noise = NoiseModel.independent_xz(args.px, args.pz)
    else:
        if args.p is None:
            raise ValueError(f"{kind} needs --p")
        noise = getattr(NoiseModel, kind)(args.p)
    report = run_trials(code, noise, args.trials, args.seed,
                        workers=args.workers)
    n, k, gauge, stabs = report.code_params
    _emit(_round_rates({
        "trials": report.trials,
        "logical_failures": report.logical_failures,
        "rate": report.rate,
        "std_error": report.std_error,
        "seed": report.seed,
        "code": {"n": n, "k": k, "gauge_qubits": gauge,
                 "stabilizer_count": stabs},
        "noise": noise.describe(),
    }))
    return 0


def _cmd_compare(args) -> int:
    c1 = load_code(args.c1)
    c2 = load_code(args.c2)
    _emit(compare_report(c1, c2))
    return 0


def _add_pair(sub, shor_flag=True):
    sub.add_argument("--c1", required=True,
                     help="first classical code (rep:<n>, hamming:7-4, "
                          "generator:<path>, parity:<path>)")
    sub.add_argument("--c2", required=True, help="second classical code")
    if shor_flag:
        sub.add_argument("--shor", action="store_true",
                         help="build the Shor-style subspace variant")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subqec",
        description="Subsystem codes from pairs of classical linear codes")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="describe a classical code")
    p.add_argument("codespec")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("build", help="build a grid code and report counts")
    _add_pair(p)
    p.add_argument("--verbose", action="store_true",
                   help="include every generator as a Pauli grid")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("distance", help="brute-force the code distance")
    _add_pair(p)
    p.add_argument("--wmax", type=int, required=True,
                   help="largest weight to search")
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("decode", help="run recovery on a Pauli error")
    _add_pair(p)
    p.add_argument("--error", required=True,
                   help="comma-separated P@(row,col) terms, P in X,Y,Z")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("simulate", help="Monte Carlo logical failure rate")
    _add_pair(p)
    p.add_argument("--noise", required=True,
                   choices=["depolarizing", "x_only", "z_only",
                            "independent_xz"])
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--px", type=float, default=None)
    p.add_argument("--pz", type=float, default=None)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("compare",
                       help="stabilizer counts vs the Shor-style variant")
    _add_pair(p, shor_flag=False)
    p.set_defaults(func=_cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
