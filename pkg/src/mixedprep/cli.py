"""Command-line front end.

Subcommands:

* ``prepare``   compile a density matrix (file or named family) to a circuit file
* ``simulate``  run a circuit file, optionally trace out the ancilla half
* ``metrics``   print fidelity / coherence / local-coherence / concurrence
* ``reproduce`` regenerate the benchmark sweeps as CSV (figure 2 or 3)
* ``gen``       write a named family state to a density file

Exit codes: 0 success, 2 validation or format problem, 3 I/O failure.
All flags live after the subcommand, e.g. ``mixedprep prepare --family
ginibre:d=4,seed=7 --out c.json``.
"""
from __future__ import annotations

import argparse
import hashlib
import math
import sys

import numpy as np

from . import __version__
from .errors import DimensionMismatchError, FormatError, StatePrepError
from .metrics import (
    concurrence,
    fidelity,
    l1_coherence,
    local_l1_coherence,
    tomography_reconstruct,
)
from .purify import build_preparation_circuit
from .serialize import (
    FILE_VALIDATE_TOL,
    read_circuit_file,
    read_density_file,
    write_circuit_file,
    write_density_file,
)
from .simulator import reduced_density, run, sample_pauli_expectations
from .states import c1_state, ginibre_density, p00_family

_FAMILY_HELP = "family spec 'name:key=value,...'; names: ginibre, xstate, c1"


def make_family_state(text: str, default_seed: int) -> np.ndarray:
    """Build a density matrix from a family spec string.

    ``ginibre:d=4,seed=7`` (seed falls back to --seed), ``xstate:theta=...,
    phi=...,p00=...`` (angles default to pi/8, p00 to 0.5), ``c1:c1=0.2``.
    """
    name, _, rest = text.partition(":")
    name = name.strip().lower()
    kv = {}
    for part in rest.split(",") if rest else []:
        if "=" not in part:
            raise FormatError(f"family spec {text!r}: expected key=value, got {part!r}")
        key, val = part.split("=", 1)
        kv[key.strip()] = val.strip()

    if name == "ginibre":
        d = _int_param(kv, "d", text)
        seed = _int_param(kv, "seed", text, default=default_seed)
        _reject_extras(kv, {"d", "seed"}, text)
        return ginibre_density(d, seed)
    if name == "xstate":
        theta = _float_param(kv, "theta", text, default=math.pi / 8)
        phi = _float_param(kv, "phi", text, default=math.pi / 8)
        p00 = _float_param(kv, "p00", text, default=0.5)
        _reject_extras(kv, {"theta", "phi", "p00"}, text)
        return p00_family(p00, theta, phi)
    if name == "c1":
        c1 = _float_param(kv, "c1", text)
        _reject_extras(kv, {"c1"}, text)
        return c1_state(c1)
    raise FormatError(f"unknown family {name!r} (expected ginibre, xstate, or c1)")


def _int_param(kv, key, text, default=None):
    if key not in kv:
        if default is None:
            raise FormatError(f"family spec {text!r}: missing required key {key!r}")
        return default
    try:
        return int(kv[key])
    except ValueError:
        raise FormatError(f"family spec {text!r}: {key} must be an integer") from None


def _float_param(kv, key, text, default=None):
    if key not in kv:
        if default is None:
            raise FormatError(f"family spec {text!r}: missing required key {key!r}")
        return default
    try:
        return float(kv[key])
    except ValueError:
        raise FormatError(f"family spec {text!r}: {key} must be a number") from None


def _reject_extras(kv, allowed, text):
    extras = sorted(set(kv) - allowed)
    if extras:
        raise FormatError(f"family spec {text!r}: unknown key {extras[0]!r}")


def _load_density(path, args) -> np.ndarray:
    gate = None if getattr(args, "no_validate", False) else FILE_VALIDATE_TOL
    return read_density_file(path, gate)


def _file_digest(path) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()[:16]


def cmd_prepare(args) -> int:
    if args.input:
        rho = _load_density(args.input, args)
        source = f"sha256:{_file_digest(args.input)}"
    else:
        rho = make_family_state(args.family, args.seed)
        source = args.family
    bundle = build_preparation_circuit(rho, args.tol)
    meta = {
        "tool": f"mixedprep {__version__}",
        "source": source,
        "seed": args.seed,
        "tol": args.tol,
    }
    write_circuit_file(args.out, bundle.circuit, meta)
    if not args.quiet:
        print("eigenvalues:", " ".join(f"{x:.12g}" for x in bundle.spectral.eigenvalues))
        print(f"gates: {len(bundle.circuit.gates)}")
        print(f"wrote {args.out}")
    return 0


def cmd_simulate(args) -> int:
    circuit = read_circuit_file(args.circuit)
    state = run(circuit, args.tol)
    if args.trace_ancillas:
        n = circuit.num_qubits
        if n % 2:
            raise DimensionMismatchError(
                f"cannot split {n} qubits into equal system and ancilla halves"
            )
        rho = reduced_density(state, range(n // 2))
    else:
        rho = np.outer(state, state.conj())
    write_density_file(args.out, rho)
    if not args.quiet:
        print(f"wrote {args.out}")
    return 0


def cmd_metrics(args) -> int:
    rho = _load_density(args.state, args)
    if args.metric == "fidelity":
        if not args.target:
            raise FormatError("--metric fidelity requires --target")
        sigma = _load_density(args.target, args)
        value = fidelity(rho, sigma, args.tol)
    elif args.metric == "coherence":
        value = l1_coherence(rho, args.tol)
    elif args.metric == "local-coherence":
        value = local_l1_coherence(rho, args.subsystem, args.tol)
    else:
        value = concurrence(rho, args.tol)
    print(f"{value:.12f}")
    return 0


def cmd_gen(args) -> int:
    rho = make_family_state(args.family, args.seed)
    write_density_file(args.out, rho)
    if not args.quiet:
        print(f"wrote {args.out}")
    return 0


def _parse_shots(text: str):
    if text == "exact":
        return None
    try:
        shots = int(text)
    except ValueError:
        raise FormatError(
            f"shots must be a positive integer or 'exact', got {text!r}"
        ) from None
    if shots < 1:
        raise FormatError(f"shots must be >= 1, got {shots}")
    return shots


def _pipeline_density(target, args, shots, seed) -> np.ndarray:
    """prepare -> simulate -> trace; with finite shots, tomography instead of trace."""
    bundle = build_preparation_circuit(target, args.tol)
    state = run(bundle.circuit)
    if shots is None:
        return reduced_density(state, bundle.system_qubits)
    expectations = sample_pauli_expectations(state, bundle.system_qubits, shots, seed)
    return tomography_reconstruct(expectations, len(bundle.system_qubits))


def _figure2_blocks(args, shots):
    xrows = []
    row = 0
    for i in range(21):
        p00 = i / 20
        target = p00_family(p00)
        prepared = _pipeline_density(target, args, shots, args.seed + 1000 * row)
        row += 1
        xrows.append(
            (
                p00,
                concurrence(target, args.tol),
                concurrence(prepared, args.tol),
                l1_coherence(target, args.tol),
                l1_coherence(prepared, args.tol),
            )
        )
    crows = []
    for c1 in np.linspace(-0.32, 0.32, 21):
        c1 = float(c1)
        target = c1_state(c1, args.tol)
        prepared = _pipeline_density(target, args, shots, args.seed + 1000 * row)
        row += 1
        crows.append(
            (
                c1,
                l1_coherence(target, args.tol),
                l1_coherence(prepared, args.tol),
                local_l1_coherence(target, "A", args.tol),
                local_l1_coherence(prepared, "A", args.tol),
            )
        )
    return [
        (["p00", "EC_theory", "EC_pipeline", "Cl1_theory", "Cl1_pipeline"], xrows),
        (
            [
                "c1",
                "Cl1_global_theory",
                "Cl1_global_pipeline",
                "Cl1_local_theory",
                "Cl1_local_pipeline",
            ],
            crows,
        ),
    ]


def _figure3_blocks(args, shots):
    rows = []
    for d in (2, 4, 8):
        for sample in range(10):
            target = ginibre_density(d, args.seed + 1000 * d + sample)
            meas_seed = args.seed + 100000 * d + 1000 * sample
            prepared = _pipeline_density(target, args, shots, meas_seed)
            rows.append((d, sample, fidelity(prepared, target, args.tol)))
    return [(["d", "sample", "fidelity"], rows)]


def _csv_cell(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _write_csv(path, blocks) -> None:
    lines = []
    for bi, (header, rows) in enumerate(blocks):
        if bi:
            lines.append("")
        lines.append(",".join(header))
        for row in rows:
            lines.append(",".join(_csv_cell(v) for v in row))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def cmd_reproduce(args) -> int:
    if args.figure not in ("2", "3"):
        raise FormatError(f"unknown figure id: {args.figure} (expected 2 or 3)")
    shots = _parse_shots(args.shots)
    if args.figure == "2":
        blocks = _figure2_blocks(args, shots)
    else:
        blocks = _figure3_blocks(args, shots)
    _write_csv(args.out, blocks)
    if not args.quiet:
        print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol", type=float, default=1e-8, help="numerical tolerance (default 1e-8)"
    )
    common.add_argument("--seed", type=int, default=0, help="base RNG seed (default 0)")
    common.add_argument("--quiet", action="store_true", help="suppress progress output")

    parser = argparse.ArgumentParser(
        prog="mixedprep",
        description="Compile, simulate, and verify mixed-state preparation circuits.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "prepare",
        parents=[common],
        help="compile a density matrix into a preparation circuit file",
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="DENSITY_FILE", help="density-matrix JSON file")
    src.add_argument("--family", metavar="SPEC", help=_FAMILY_HELP)
    p.add_argument("--out", required=True, metavar="CIRCUIT_FILE")
    p.add_argument(
        "--no-validate", action="store_true", help="skip the density check on file input"
    )
    p.set_defaults(func=cmd_prepare)

    p = sub.add_parser("simulate", parents=[common], help="run a circuit file exactly")
    p.add_argument("--circuit", required=True, metavar="CIRCUIT_FILE")
    p.add_argument(
        "--trace-ancillas",
        action="store_true",
        help="trace out the upper half of the register before writing",
    )
    p.add_argument("--out", required=True, metavar="DENSITY_FILE")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("metrics", parents=[common], help="print a metric of a state file")
    p.add_argument("--state", required=True, metavar="DENSITY_FILE")
    p.add_argument("--target", metavar="DENSITY_FILE", help="second state for fidelity")
    p.add_argument(
        "--metric",
        required=True,
        choices=["fidelity", "coherence", "local-coherence", "concurrence"],
    )
    p.add_argument("--subsystem", choices=["A", "B"], default="A")
    p.add_argument(
        "--no-validate", action="store_true", help="skip the density check on file input"
    )
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser(
        "reproduce", parents=[common], help="regenerate a benchmark sweep as CSV"
    )
    p.add_argument("--figure", required=True, metavar="ID", help="2 or 3")
    p.add_argument("--out", required=True, metavar="CSV_FILE")
    p.add_argument(
        "--shots",
        default="exact",
        metavar="N|exact",
        help="finite-shot tomography with N shots per string, or 'exact'",
    )
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("gen", parents=[common], help="write a family state to a file")
    p.add_argument("--family", required=True, metavar="SPEC", help=_FAMILY_HELP)
    p.add_argument("--out", required=True, metavar="DENSITY_FILE")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StatePrepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
