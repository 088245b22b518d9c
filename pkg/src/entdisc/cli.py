"""Command-line frontend: every analysis as a subcommand.

Results go to standard output as ``key = value`` lines, or as a single JSON
object under ``--json``. Validation problems exit with status 2 and a
one-line reason on standard error; unexpected failures exit with status 1.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings

import numpy as np

from .discrimination import (
    assisted_alpha2_max,
    locc_ensemble_feasible,
    perfect_discrimination_feasible,
    pointer_state,
    preserve_cost,
    preserve_spectrum,
    three_state_feasible,
)
from .errors import ValidationError
from .spectra import DEFAULT_TOL, ProbVector, majorizes, mix
from .states import (
    BellFamily,
    Ensemble,
    PureState,
    bell_states,
    distinguishability_bound,
    reduced_spectrum,
)
from .sweep import SWEEP_MODES, records_to_csv, run_sweep, write_csv

# File-level normalization slack: looser than the in-memory tolerance, so
# hand-edited ensembles load (renormalized, with a warning).
FILE_NORM_TOL = 1e-6


def _parse_floats(text: str, flag: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValidationError(f"{flag} expects a comma-separated list of numbers, got {text!r}")


def _parse_target(text: str) -> tuple[float, ProbVector]:
    """Parse 'p:v1,v2,...' (weighted) or 'v1,v2,...' (weight 1)."""
    if ":" in text:
        head, _, tail = text.partition(":")
        try:
            weight = float(head)
        except ValueError:
            raise ValidationError(f"--target weight {head!r} is not a number")
        return weight, ProbVector(_parse_floats(tail, "--target"))
    return 1.0, ProbVector(_parse_floats(text, "--target"))


def load_ensemble_file(path: str) -> tuple[Ensemble, BellFamily | None, list[float]]:
    """Read an ensemble description from JSON.

    Accepts either {"family": {"a2": ..., "c2": ...}, "probs": [...]} or
    {"states": [{"amplitudes": [[re, im], ...], "dim_a": ..., "dim_b": ...}],
    "probs": [...]}. Returns the ensemble, the family when one was given,
    and the prior probabilities.
    """
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ValidationError(f"cannot read ensemble file: {exc}")
    except json.JSONDecodeError as exc:
        raise ValidationError(f"ensemble file is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise ValidationError("ensemble file must contain a JSON object")
    if ("family" in data) == ("states" in data):
        raise ValidationError("ensemble file must contain exactly one of 'family' or 'states'")

    if "family" in data:
        entry = data["family"]
        if not isinstance(entry, dict) or "a2" not in entry or "c2" not in entry:
            raise ValidationError("'family' must be an object with keys 'a2' and 'c2'")
        family = BellFamily.from_squared(float(entry["a2"]), float(entry["c2"]))
        probs = [float(p) for p in data.get("probs", (0.25,) * 4)]
        if len(probs) != 4:
            raise ValidationError(f"family ensembles need 4 probabilities, got {len(probs)}")
        return Ensemble(tuple(zip(probs, family.states()))), family, probs

    raw_states = data["states"]
    if "probs" not in data:
        raise ValidationError("'states' ensembles require an explicit 'probs' list")
    probs = [float(p) for p in data["probs"]]
    if not isinstance(raw_states, list) or len(raw_states) != len(probs):
        raise ValidationError("'states' and 'probs' must be lists of equal length")
    states = []
    for idx, entry in enumerate(raw_states):
        try:
            dim_a, dim_b = int(entry["dim_a"]), int(entry["dim_b"])
            amps = np.array(
                [complex(*pair) if isinstance(pair, (list, tuple)) else complex(pair)
                 for pair in entry["amplitudes"]]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"state {idx} is malformed: {exc}")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > FILE_NORM_TOL:
            raise ValidationError(f"state {idx} has norm {norm!r}, beyond the {FILE_NORM_TOL:.0e} load tolerance")
        if abs(norm - 1.0) > DEFAULT_TOL:
            warnings.warn(f"state {idx} renormalized on load (norm was {norm!r})", stacklevel=2)
        states.append(PureState(amps / norm, dim_a, dim_b))
    return Ensemble(tuple(zip(probs, states))), None, probs


def _fmt_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    if isinstance(value, (list, tuple)):
        return ", ".join(_fmt_value(v) for v in value)
    return str(value)


def _jsonable(value):
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(result: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps({k: _jsonable(v) for k, v in result.items()}))
    else:
        for key, value in result.items():
            print(f"{key} = {_fmt_value(value)}")


def _family_from_args(args) -> tuple[BellFamily, list[float] | None]:
    if args.a2 is None or args.c2 is None:
        raise ValidationError("both --a2 and --c2 are required")
    probs = _parse_floats(args.probs, "--probs") if getattr(args, "probs", None) else None
    return BellFamily.from_squared(args.a2, args.c2), probs


def _cmd_discriminate(args) -> int:
    if args.ensemble:
        ensemble, family, probs = load_ensemble_file(args.ensemble)
        if family is not None:
            feasible = perfect_discrimination_feasible(family, probs, tol=args.tol)
        else:
            pointers = bell_states()
            if len(ensemble.members) > len(pointers):
                raise ValidationError("at most 4 ensemble members are supported")
            pointers = pointers[: len(ensemble.members)]
            lam = reduced_spectrum(pointer_state(ensemble, pointers))
            target = mix([(p, reduced_spectrum(ptr)) for p, ptr in zip(ensemble.probs, pointers)])
            feasible = majorizes(lam, target, tol=args.tol)
        _emit({"feasible_unassisted": feasible}, args.json)
        return 0
    family, probs = _family_from_args(args)
    feasible = perfect_discrimination_feasible(family, probs, tol=args.tol)
    _emit({"a2": args.a2, "c2": args.c2, "feasible_unassisted": feasible}, args.json)
    return 0


def _cmd_three_state(args) -> int:
    family, probs = _family_from_args(args)
    which = [int(i) for i in _parse_floats(args.which, "--which")]
    feasible = three_state_feasible(family, which, probs, tol=args.tol)
    _emit(
        {"a2": args.a2, "c2": args.c2, "which": which, "feasible_unassisted": feasible},
        args.json,
    )
    return 0


def _cmd_assist_cost(args) -> int:
    family, _ = _family_from_args(args)
    report = assisted_alpha2_max(family)
    _emit(
        {
            "a2": args.a2,
            "c2": args.c2,
            "feasible": report.feasible,
            "alpha2_max": report.alpha2_max,
            "assist_cost_ebits": report.cost_ebits,
            "first_sum_bound": report.first_sum_bound,
        },
        args.json,
    )
    return 0


def _cmd_preserve_cost(args) -> int:
    family, probs = _family_from_args(args)
    spectrum = preserve_spectrum(family, probs)
    _emit(
        {
            "a2": args.a2,
            "c2": args.c2,
            "preserve_cost_ebits": preserve_cost(family, probs),
            "preserve_spectrum": [float(v) for v in spectrum.entries],
        },
        args.json,
    )
    return 0


def _cmd_bounds(args) -> int:
    if args.ensemble:
        ensemble, _, _ = load_ensemble_file(args.ensemble)
    else:
        family, probs = _family_from_args(args)
        ensemble = Ensemble(tuple(zip(probs or (0.25,) * 4, family.states())))
    bound = distinguishability_bound(ensemble)
    _emit(
        {
            "n_robustness": bound.n_robustness,
            "n_rel_entropy": bound.n_rel_entropy,
            "n_geometric": bound.n_geometric,
        },
        args.json,
    )
    return 0


def _cmd_convert(args) -> int:
    source = ProbVector(_parse_floats(args.source, "--source"))
    targets = [_parse_target(t) for t in args.target]
    feasible = locc_ensemble_feasible(source, targets, tol=args.tol)
    _emit({"feasible": feasible}, args.json)
    return 0


def _cmd_sweep(args) -> int:
    probs = _parse_floats(args.probs, "--probs") if args.probs else None
    which = [int(i) for i in _parse_floats(args.which, "--which")]
    records = run_sweep(args.mode, grid_n=args.grid_n, probs=probs, which=which)
    if args.out:
        write_csv(records, args.out)
    else:
        sys.stdout.write(records_to_csv(records))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entdisc",
        description="Majorization-based feasibility and entanglement costs of local state discrimination.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="partial-sum comparison tolerance")
    common.add_argument("--json", action="store_true", help="emit one JSON object instead of text")

    family_flags = argparse.ArgumentParser(add_help=False)
    family_flags.add_argument("--a2", type=float, help="squared Schmidt parameter of the first pair, in [0.5, 1]")
    family_flags.add_argument("--c2", type=float, help="squared Schmidt parameter of the second pair, in [0.5, 1]")

    p = sub.add_parser(
        "discriminate",
        parents=[common, family_flags],
        help="perfect LOCC distinguishability of the four-state family or a JSON ensemble",
    )
    p.add_argument("--probs", help="comma-separated priors (default: uniform)")
    p.add_argument("--ensemble", metavar="FILE", help="JSON ensemble file instead of --a2/--c2")
    p.set_defaults(handler=_cmd_discriminate)

    p = sub.add_parser(
        "three-state",
        parents=[common, family_flags],
        help="distinguishability of a three-member subset",
    )
    p.add_argument("--which", default="0,1,2", help="three member indices, zero-based (default 0,1,2)")
    p.add_argument("--probs", help="comma-separated priors (default: 1/3 each)")
    p.set_defaults(handler=_cmd_three_state)

    p = sub.add_parser(
        "assist-cost",
        parents=[common, family_flags],
        help="minimal pre-shared entanglement for perfect discrimination",
    )
    p.set_defaults(handler=_cmd_assist_cost)

    p = sub.add_parser(
        "preserve-cost",
        parents=[common, family_flags],
        help="minimal entanglement for discrimination that preserves the states",
    )
    p.add_argument("--probs", help="comma-separated priors (default: uniform)")
    p.set_defaults(handler=_cmd_preserve_cost)

    p = sub.add_parser(
        "bounds",
        parents=[common, family_flags],
        help="distinguishable-count bounds from three entanglement measures",
    )
    p.add_argument("--probs", help="comma-separated priors (family form only)")
    p.add_argument("--ensemble", metavar="FILE", help="JSON ensemble file instead of --a2/--c2")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser(
        "convert",
        parents=[common],
        help="LOCC convertibility between Schmidt spectra (deterministic or probabilistic)",
    )
    p.add_argument("--source", required=True, help="source spectrum, e.g. 0.5,0.5")
    p.add_argument(
        "--target",
        action="append",
        required=True,
        help="target spectrum 'v1,v2,...' or weighted 'p:v1,v2,...'; repeatable",
    )
    p.set_defaults(handler=_cmd_convert)

    p = sub.add_parser("sweep", help="grid scan over (a2, c2), emitted as CSV")
    p.add_argument("--mode", required=True, choices=SWEEP_MODES)
    p.add_argument("--grid-n", type=int, default=101, help="lattice points per axis (default 101)")
    p.add_argument("--probs", help="comma-separated priors")
    p.add_argument("--which", default="0,1,2", help="subset for feasible3 mode")
    p.add_argument("--out", metavar="FILE", help="write CSV here instead of standard output")
    p.set_defaults(handler=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
