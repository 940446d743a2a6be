"""Command-line interface: ``tpsqubits {verify,classify,simulate,table}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__
from .entanglement import classify
from .linalg import make_state
from .sim import OUTCOMES, ExperimentConfig, analytic_probs, correlation_stats, sample_counts
from .states import BUILTIN_STATES, builtin_state
from .tps import ALL_LABELS, Side, TpsLabel, subsystem_projector

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class InputError(Exception):
    pass


def _label(text: str) -> TpsLabel:
    try:
        return TpsLabel.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def parse_state_document(doc) -> np.ndarray:
    """Validate a StateFile document ``{"amplitudes": [[re, im] x4], "normalize": bool}``."""
    if not isinstance(doc, dict):
        raise InputError("state file: top level must be a JSON object")
    if "amplitudes" not in doc:
        raise InputError("amplitudes: missing field")
    amps = doc["amplitudes"]
    if not isinstance(amps, list):
        raise InputError("amplitudes: must be a list of [re, im] pairs")
    if len(amps) != 4:
        raise InputError(f"amplitudes: expected 4 amplitudes, got {len(amps)}")
    values = []
    for i, pair in enumerate(amps):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise InputError(f"amplitudes[{i}]: expected a [re, im] pair of numbers")
        if not all(math.isfinite(x) for x in pair):
            raise InputError(f"amplitudes[{i}]: entries must be finite")
        values.append(complex(pair[0], pair[1]))
    normalize = doc.get("normalize", False)
    if not isinstance(normalize, bool):
        raise InputError("normalize: must be true or false")
    try:
        return make_state(values, normalize=normalize)
    except ValueError as exc:
        raise InputError(f"amplitudes: {exc}") from None


def load_state_file(path: str) -> np.ndarray:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read state file {path!r}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"state file {path!r}: malformed JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_state_document(doc)


def _resolve_state(args) -> tuple[np.ndarray, str]:
    if args.file is not None:
        return load_state_file(args.file), args.file
    try:
        return builtin_state(args.state), args.state
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(output))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tpsqubits-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, output)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    from .verify import run_all

    report = run_all(args.seed)
    text = report.to_json() if args.format == "json" else report.to_text()
    _emit(text, args.output)
    return EXIT_OK if report.all_passed else EXIT_FAILED


def cmd_classify(args) -> int:
    psi, name = _resolve_state(args)
    labels = [args.label] if args.label is not None else list(ALL_LABELS)
    result = classify(psi, labels)
    if args.format == "json":
        doc = {"state": name, **result.to_dict()}
        _emit(_dumps(doc), None)
        return EXIT_OK
    lines = [f"state: {name}   rank threshold: {result.threshold:.0e}"]
    for l, v in result.verdicts.items():
        flag = "  near-degenerate" if v.near_degenerate else ""
        lines.append(
            f"  {l.code}  {v.separability.value:<9}  schmidt = ({v.coefficients[0]:.12f}, {v.coefficients[1]:.12f}){flag}"
        )
    _emit("\n".join(lines) + "\n", None)
    return EXIT_OK


def cmd_simulate(args) -> int:
    psi, name = _resolve_state(args)
    cfg = ExperimentConfig(psi, args.label, args.shots, args.seed)
    counts = sample_counts(cfg)
    stats = correlation_stats(counts)
    probs = analytic_probs(psi, args.label)
    if args.format == "json":
        doc = {
            "state": name,
            "seed": args.seed,
            **counts.to_dict(),
            "analytic_probs": dict(zip(OUTCOMES, (float(p) for p in probs))),
            "correlation_stats": {
                "iff_freq": stats.iff_freq,
                "xor_freq": stats.xor_freq,
                "left_bias": stats.left_bias,
                "right_bias": stats.right_bias,
            },
        }
        _emit(_dumps(doc), None)
        return EXIT_OK
    lines = [f"state: {name}   wiring: {cfg.label.code}   shots: {cfg.shots}   seed: {cfg.seed}"]
    lines.append("  outcome      count    empirical   analytic")
    for o, n, p_emp, p in zip(OUTCOMES, counts.joint, counts.joint_probs, probs):
        lines.append(f"  {o:>7}  {n:>9d}  {p_emp:>10.6f}  {p:>9.6f}")
    lines.append(f"  left marginal  (0, 1): ({counts.left_marginal[0]:.6f}, {counts.left_marginal[1]:.6f})")
    lines.append(f"  right marginal (0, 1): ({counts.right_marginal[0]:.6f}, {counts.right_marginal[1]:.6f})")
    lines.append(f"  IFF {stats.iff_freq:.6f}   XOR {stats.xor_freq:.6f}")
    _emit("\n".join(lines) + "\n", None)
    return EXIT_OK


def table_rows(label: TpsLabel) -> list[dict]:
    rows = []
    for side, bit in ((Side.LEFT, 0), (Side.LEFT, 1), (Side.RIGHT, 0), (Side.RIGHT, 1)):
        p = subsystem_projector(label, side, bit)
        lhs = f"P_{bit}⊗_{label.code} I" if side is Side.LEFT else f"I ⊗_{label.code} P_{bit}"
        rows.append({"label": label.code, "side": side.value, "bit": bit, "lhs": lhs, "colors": list(p.colors), "text": p.text})
    return rows


def cmd_table(args) -> int:
    labels = [args.label] if args.label is not None else list(ALL_LABELS)
    rows = [r for l in labels for r in table_rows(l)]
    if args.format == "json":
        _emit(_dumps(rows), None)
        return EXIT_OK
    lines = []
    for r in rows:
        rhs = " + ".join(f"P_{c}" for c in r["colors"])
        lines.append(f"{r['lhs']:<12} = {rhs:<10} ({r['text']})")
    _emit("\n".join(lines) + "\n", None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tpsqubits", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the identity verification suite")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)

    def add_state(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--state", help=f"built-in state: {', '.join(BUILTIN_STATES)}")
        g.add_argument("--file", help="JSON state file")

    p = sub.add_parser("classify", help="Schmidt data and separability per TPS")
    add_state(p)
    p.add_argument("--label", type=_label, default=None, help="one of 123,132,213,231,312,321 (default: all)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("simulate", help="Born-rule sampling under one wiring")
    add_state(p)
    p.add_argument("--label", type=_label, required=True)
    p.add_argument("--shots", type=_positive_int, default=100_000)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("table", help="subsystem projectors as color sums")
    p.add_argument("--label", type=_label, default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"tpsqubits: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"tpsqubits: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
