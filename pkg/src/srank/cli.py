"""Command-line front end.

    srank VERB INPUT [--epsilon EPS] [--json] [--class CLASS] [--tableau TABLEAU]

Exit codes: 0 success (and "simple" for ``simple``/``witness``), 3 entangled,
1 invalid input, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import config
from .decompositions import schmidt, slater
from .entanglement import is_simple, quadratic_witness, s_rank
from .errors import NumericalFailure, SRankError
from .jamiolkowski import (
    FourLegTensor,
    classify_sa,
    expected_map_rank,
    map_rank,
    state_to_map,
)
from .symmetry import antisymmetrize, symmetrize
from .tensor import Tensor, tensor_from_dict, tensor_to_dict
from .young import YoungTableau, alpha_is_simple, project

SCHEMA_VERSION = 1
EXIT_OK, EXIT_INVALID, EXIT_NUMERIC, EXIT_ENTANGLED = 0, 1, 2, 3

VERBS = (
    "srank",
    "simple",
    "witness",
    "schmidt",
    "slater",
    "project",
    "young-project",
    "young-classify",
    "jam-rank",
)
CLASSES = ("general", "symmetric", "antisymmetric")
# verbs that accept the optional flags; everything else rejects them
CLASS_VERBS = {"srank", "simple", "witness", "schmidt", "slater", "project", "jam-rank"}
TABLEAU_VERBS = {"srank", "simple", "young-project", "young-classify"}


class UsageError(SRankError):
    pass


def _read_json(source: str) -> dict:
    text = source if source.lstrip().startswith("{") else Path(source).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {source}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"{source}: expected a JSON object")
    return data


def _load_tensor(args, data: dict | None = None) -> Tensor:
    data = _read_json(args.input) if data is None else data
    if args.klass is not None:
        data = {**data, "symmetry": args.klass}
    u = tensor_from_dict(data)
    if args.tableau is not None:
        alpha = YoungTableau.from_dict(_read_json(args.tableau))
        u = u.with_symmetry("young", alpha)
    return u


def _tableau(args) -> YoungTableau:
    if args.tableau is None:
        raise UsageError(f"{args.verb} needs --tableau")
    return YoungTableau.from_dict(_read_json(args.tableau))


def format_number(z: complex, tol: float = 1e-12) -> str:
    """Short exact-looking form: rationals with small denominators print as ``p/q``."""
    if abs(z.imag) > tol:
        return f"{z.real:.12g}{z.imag:+.12g}j"
    x = z.real
    q = Fraction(x).limit_denominator(1000)
    if abs(float(q) - x) <= tol:
        return str(q)
    return f"{x:.12g}"


def _cmd_srank(args) -> tuple[int, dict, str]:
    u = _load_tensor(args)
    r = s_rank(u)
    return EXIT_OK, {"symmetry": u.symmetry, "s_rank": r}, str(r)


def _cmd_simple(args) -> tuple[int, dict, str]:
    verdict = is_simple(_load_tensor(args))
    lines = [
        f"{'simple' if verdict.simple else 'entangled'}",
        f"s_rank {verdict.s_rank} (minimal {verdict.minimal_rank})",
    ]
    if verdict.witness is not None:
        lines.append(f"witness {verdict.witness} value {format_number(verdict.witness.value)}")
    code = EXIT_OK if verdict.simple else EXIT_ENTANGLED
    return code, verdict.to_dict(), "\n".join(lines)


def _cmd_witness(args) -> tuple[int, dict, str]:
    u = _load_tensor(args)
    w = quadratic_witness(u)
    if w is None:
        return EXIT_OK, {"symmetry": u.symmetry, "witness": None}, "no witness"
    report = {"symmetry": u.symmetry, "witness": w.to_dict(), "value": format_number(w.value)}
    return EXIT_ENTANGLED, report, f"witness {w} value {format_number(w.value)}"


def _cmd_schmidt(args) -> tuple[int, dict, str]:
    dec = schmidt(_load_tensor(args))
    text = f"rank {dec.rank}\nlambdas {' '.join(f'{x:.12g}' for x in dec.lambdas)}"
    return EXIT_OK, {"rank": dec.rank, **dec.to_dict()}, text


def _cmd_slater(args) -> tuple[int, dict, str]:
    dec = slater(_load_tensor(args))
    text = f"{dec.kind} slater rank {dec.rank}\nlambdas {' '.join(f'{x:.12g}' for x in dec.lambdas)}"
    return EXIT_OK, {"rank": dec.rank, **dec.to_dict()}, text


def _tensor_report(u: Tensor) -> tuple[dict, str]:
    data = tensor_to_dict(u)
    return {"tensor": data}, json.dumps(data, sort_keys=True)


def _cmd_project(args) -> tuple[int, dict, str]:
    if args.klass not in ("symmetric", "antisymmetric"):
        raise UsageError("project needs --class symmetric or --class antisymmetric")
    u = tensor_from_dict(_read_json(args.input))
    out = symmetrize(u) if args.klass == "symmetric" else antisymmetrize(u)
    return (EXIT_OK, *_tensor_report(out))


def _cmd_young_project(args) -> tuple[int, dict, str]:
    alpha = _tableau(args)
    out = project(alpha, tensor_from_dict(_read_json(args.input)))
    report, text = _tensor_report(out)
    report["tableau"] = alpha.to_dict()
    return EXIT_OK, report, text


def _cmd_young_classify(args) -> tuple[int, dict, str]:
    alpha = _tableau(args)
    verdict = alpha_is_simple(tensor_from_dict(_read_json(args.input)), alpha)
    text = f"{'simple' if verdict.simple else 'entangled'}\ns_rank {verdict.s_rank} (minimal {verdict.minimal_rank})"
    return EXIT_OK, verdict.to_dict(), text


def _cmd_jam_rank(args) -> tuple[int, dict, str]:
    data = _read_json(args.input)
    if "legs" in data:
        phi = FourLegTensor.from_dict(data)
        report = {}
    else:
        v = _load_tensor(args, data)
        phi = state_to_map(v)
        slater_rank = slater(v).rank
        report = {
            "symmetry": v.symmetry,
            "slater_rank": slater_rank,
            "expected_rank": expected_map_rank(v.symmetry, slater_rank),
        }
    rank = map_rank(phi)
    report.update({"map_rank": rank, "self_adjoint": classify_sa(phi)})
    return EXIT_OK, report, str(rank)


COMMANDS = {
    "srank": _cmd_srank,
    "simple": _cmd_simple,
    "witness": _cmd_witness,
    "schmidt": _cmd_schmidt,
    "slater": _cmd_slater,
    "project": _cmd_project,
    "young-project": _cmd_young_project,
    "young-classify": _cmd_young_classify,
    "jam-rank": _cmd_jam_rank,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="srank", description="Entanglement of pure states via the S-rank.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("input", help="tensor JSON file (or an inline JSON object)")
    p.add_argument("--epsilon", type=float, default=None, help="relative tolerance (default 1e-9, env SRANK_EPSILON)")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--class", dest="klass", choices=CLASSES, default=None, help="override the symmetry class")
    p.add_argument("--tableau", default=None, help="Young tableau JSON file (or inline JSON)")
    return p


def _validate(args) -> None:
    if args.klass is not None and args.verb not in CLASS_VERBS:
        raise UsageError(f"--class is not valid for {args.verb}")
    if args.tableau is not None and args.verb not in TABLEAU_VERBS:
        raise UsageError(f"--tableau is not valid for {args.verb}")


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        _validate(args)
        eps = config.get_epsilon() if args.epsilon is None else args.epsilon
        with config.epsilon_context(eps):
            code, report, text = COMMANDS[args.verb](args)
    except NumericalFailure as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_NUMERIC
    except (SRankError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    if args.json:
        full = {"schema": SCHEMA_VERSION, "verb": args.verb, "exit_code": code, **report}
        print(json.dumps(full, sort_keys=True, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())
