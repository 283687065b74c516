"""Command-line interface.

Subcommands: derivations, check-derivation, check-local, biderivations,
check-biderivation, inner, verify-theorems.  Ring and algebra parameters
travel on flags; matrices, grids and quaternions travel as JSON files (or
stdin).  Output is canonical JSON with sorted keys, so identical inputs
produce identical bytes.

Exit codes: 0 success / check passed; 1 check failed (not local, not a
derivation, failed verification); 2 invalid configuration or unparsable
input; 3 operation unsupported over the requested ring.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .algebra import AlgebraParams, Quaternion
from .biderivations import (BiderivationSpec, biderivation_defect,
                            solve_biderivations)
from .derivations import (inner_superderivation, solve_superderivations,
                          recover_params, superderivation_defect)
from .errors import DomainError, UnsupportedRingError
from .linalg import BilinMap, LinMap
from .local import classify_local
from .rings import RingDescriptor, prime_field, rationals, residue_ring
from .verify import DEFAULT_SAMPLES, format_report, run_theorem_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_CONFIG = 2
EXIT_UNSUPPORTED_RING = 3


@dataclass(frozen=True)
class JobConfig:
    params: AlgebraParams
    degree: int | None = None
    symmetry: str = "any"
    input_path: str | None = None
    output_path: str | None = None
    samples: int = DEFAULT_SAMPLES


class ConfigError(Exception):
    pass


def _build_descriptor(args) -> RingDescriptor:
    if args.ring == "q":
        return rationals()
    if args.ring == "fp":
        if args.p is None:
            raise ConfigError("--ring fp needs --p")
        return prime_field(args.p)
    if args.n is None:
        raise ConfigError("--ring zn needs --n")
    return residue_ring(args.n)


def build_config(args) -> JobConfig:
    try:
        ring = _build_descriptor(args)
        params = AlgebraParams(ring, ring.element(args.a), ring.element(args.b))
    except (DomainError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    return JobConfig(
        params=params,
        degree=getattr(args, "degree", None),
        symmetry=getattr(args, "symmetry", "any"),
        input_path=getattr(args, "input", None),
        output_path=getattr(args, "output", None),
        samples=getattr(args, "samples", DEFAULT_SAMPLES),
    )


def _read_json(config: JobConfig) -> dict:
    if config.input_path:
        with open(config.input_path, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _emit(config: JobConfig, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True)
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _solution_payload(params: AlgebraParams, degree: int) -> dict:
    space = solve_superderivations(params, degree)
    maps = [LinMap.from_flat(params, v) for v in space.basis]
    params_form = []
    for M in maps:
        dp = recover_params(M, degree)
        form = dp.to_json()
        form.pop("degree")
        params_form.append(form)
    return {"dim": space.dim,
            "basis": [M.to_json() for M in maps],
            "params_form": params_form}


def cmd_derivations(config: JobConfig) -> int:
    _emit(config, _solution_payload(config.params, config.degree))
    return EXIT_OK


def cmd_check_derivation(config: JobConfig) -> int:
    D = LinMap.from_json(config.params, _read_json(config))
    defect = superderivation_defect(D, config.degree)
    if defect is None:
        _emit(config, {"verdict": "derivation"})
        return EXIT_OK
    _emit(config, {"verdict": "not_derivation",
                   "counterexample": {"kind": defect.kind,
                                      "x": defect.left, "y": defect.right}})
    return EXIT_CHECK_FAILED


def cmd_check_local(config: JobConfig) -> int:
    D = LinMap.from_json(config.params, _read_json(config))
    verdict = classify_local(D, config.degree)
    if verdict.is_derivation:
        _emit(config, {"verdict": "derivation", "params": verdict.params.to_json()})
        return EXIT_OK
    _emit(config, {"verdict": "not_local",
                   "witness": [c.to_str() for c in verdict.witness.coeffs],
                   "reason": verdict.reason})
    return EXIT_CHECK_FAILED


def cmd_biderivations(config: JobConfig) -> int:
    spec = BiderivationSpec(config.degree, config.symmetry)
    space = solve_biderivations(config.params, spec)
    basis = [BilinMap.from_flat(config.params, v).to_json() for v in space.basis]
    _emit(config, {"dim": space.dim, "basis": basis})
    return EXIT_OK


def cmd_check_biderivation(config: JobConfig) -> int:
    B = BilinMap.from_json(config.params, _read_json(config))
    defect = biderivation_defect(B, config.degree)
    if defect is None:
        _emit(config, {"verdict": "biderivation"})
        return EXIT_OK
    _emit(config, {"verdict": "not_biderivation",
                   "counterexample": {"kind": defect.kind,
                                      "at": list(defect.where)}})
    return EXIT_CHECK_FAILED


def cmd_inner(config: JobConfig) -> int:
    x = Quaternion.from_json(config.params, _read_json(config))
    _emit(config, inner_superderivation(x).to_json())
    return EXIT_OK


def cmd_verify_theorems(config: JobConfig) -> int:
    if not config.params.ring.is_field:
        raise UnsupportedRingError(
            f"verification needs a field, got {config.params.ring}")
    results = run_theorem_suite(config.params, samples=config.samples)
    _emit(config, format_report(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED


_COMMANDS = {
    "derivations": cmd_derivations,
    "check-derivation": cmd_check_derivation,
    "check-local": cmd_check_local,
    "biderivations": cmd_biderivations,
    "check-biderivation": cmd_check_biderivation,
    "inner": cmd_inner,
    "verify-theorems": cmd_verify_theorems,
}


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superquat",
        description="Exact superderivation and super-biderivation computations "
                    "on generalized quaternion algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", choices=("q", "fp", "zn"), required=True,
                        help="coefficient ring: rationals, prime field, residue ring")
    common.add_argument("--p", type=int, help="odd prime for --ring fp")
    common.add_argument("--n", type=int, help="odd modulus for --ring zn")
    common.add_argument("--a", required=True, help="first unit parameter, e.g. '3' or '-1/2'")
    common.add_argument("--b", required=True, help="second unit parameter")
    common.add_argument("--output", help="write the result here instead of stdout")

    degree = argparse.ArgumentParser(add_help=False)
    degree.add_argument("--degree", type=int, choices=(0, 1), required=True)

    infile = argparse.ArgumentParser(add_help=False)
    infile.add_argument("--input", help="JSON input file (default: stdin)")

    sub.add_parser("derivations", parents=[common, degree],
                   help="solve for the superderivation space")
    sub.add_parser("check-derivation", parents=[common, degree, infile],
                   help="check a matrix against the graded Leibniz rule")
    sub.add_parser("check-local", parents=[common, degree, infile],
                   help="classify a matrix as a local superderivation or produce a witness")
    bid = sub.add_parser("biderivations", parents=[common, degree],
                         help="solve for a super-biderivation space")
    bid.add_argument("--symmetry", choices=("any", "skew", "sym"), default="any")
    sub.add_parser("check-biderivation", parents=[common, degree, infile],
                   help="check a basis-pair grid against the biderivation identities")
    sub.add_parser("inner", parents=[common, infile],
                   help="matrix of the inner superderivation at a quaternion")
    ver = sub.add_parser("verify-theorems", parents=[common],
                         help="run every structural check for the given algebra")
    ver.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                     help="random maps per local-classification check")
    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        config = build_config(args)
        return _COMMANDS[args.command](config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except UnsupportedRingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED_RING
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG


if __name__ == "__main__":
    sys.exit(main())
