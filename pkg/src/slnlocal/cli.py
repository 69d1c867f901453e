"""Command line front end.

Exit codes: 0 for a definitive answer, 1 for bad input or I/O failure,
2 when a search ran out of budget without deciding anything.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .autgroup import LinMap, describe, recognize
from .counterexample import DeltaAlpha, demo
from .exactmat import Mat, RationalParseError, parse_rational
from .localcheck import INCONCLUSIVE, NOT_LOCAL, certify_on_points, refute_search, search_points, sl2_classify
from .simwit import WitnessSearchExhausted, cached_invariant_factors, similarity_witness
from .slnlib import SlElement, basis, dim

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONCLUSIVE = 2

_CLASSIFY_LABELS = {
    "automorphism": "automorphism",
    "anti_automorphism": "anti-automorphism",
    "not_local": NOT_LOCAL,
}


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _parse_n(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 2:
        raise InputError(f"{where}: n must be an integer >= 2, got {value!r}")
    return value


def _parse_matrix(data, where: str, shape: tuple[int, int] | None = None) -> Mat:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError(f"{where}: expected an array of arrays")
    if shape is not None and len(data) != shape[0]:
        raise InputError(f"{where}: expected {shape[0]} rows, got {len(data)}")
    rows = []
    for i, r in enumerate(data):
        if shape is not None and len(r) != shape[1]:
            raise InputError(f"{where}[{i}]: expected {shape[1]} entries, got {len(r)}")
        row = []
        for j, v in enumerate(r):
            try:
                row.append(parse_rational(v))
            except RationalParseError as exc:
                raise InputError(f"{where}[{i}][{j}]: {exc}") from exc
        rows.append(row)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise InputError(f"{where}: ragged rows")
    return Mat.from_rows(rows)


def parse_linmap(data, source: str = "map") -> LinMap:
    if not isinstance(data, dict) or "n" not in data or "M" not in data:
        raise InputError(f"{source}: expected an object with 'n' and 'M'")
    n = _parse_n(data["n"], f"{source}.n")
    d = dim(n)
    return LinMap(n, _parse_matrix(data["M"], f"{source}.M", (d, d)))


def parse_points(data, n: int, source: str = "points") -> list[SlElement]:
    if isinstance(data, dict) and "points" in data:
        data = data["points"]
    if not isinstance(data, list):
        raise InputError(f"{source}: expected a list of elements")
    points = []
    for k, item in enumerate(data):
        try:
            x = SlElement.from_json(item)
        except (ValueError, RationalParseError) as exc:
            raise InputError(f"{source}[{k}]: {exc}") from exc
        if x.n != n:
            raise InputError(f"{source}[{k}]: element of sl_{x.n}, map is on sl_{n}")
        points.append(x)
    return points


def _parse_square(data, source: str) -> Mat:
    if isinstance(data, dict) and "matrix" in data:
        data = data["matrix"]
    m = _parse_matrix(data, source)
    if not m.is_square or m.rows == 0:
        raise InputError(f"{source}: expected a nonempty square matrix")
    return m


def emit_report(report: dict, out: str | None) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _basis_points(n: int) -> list[SlElement]:
    d = dim(n)
    return [SlElement(n, tuple(int(i == k) for i in range(d))) for k in range(len(basis(n)))]


def _cmd_classify(args) -> tuple[dict, int, str]:
    delta = parse_linmap(_load_json(args.map), args.map)
    if delta.n != 2:
        raise InputError(f"{args.map}: classify-sl2 needs n = 2, got {delta.n}")
    verdict = _CLASSIFY_LABELS[sl2_classify(delta)]
    phi = recognize(delta) if verdict != NOT_LOCAL else None
    report = {"command": "classify-sl2", "verdict": verdict, "witness": phi.to_json() if phi else None}
    summary = verdict if phi is None else f"{verdict}: {describe(phi)}"
    return report, EXIT_OK, summary


def _cmd_certify(args) -> tuple[dict, int, str]:
    delta = parse_linmap(_load_json(args.map), args.map)
    points = parse_points(_load_json(args.points), delta.n, args.points) if args.points else _basis_points(delta.n)
    result = certify_on_points(delta, points, budget=args.budget, seed=args.seed)
    report = {"command": "certify", **result.to_json()}
    code = EXIT_INCONCLUSIVE if result.verdict == INCONCLUSIVE else EXIT_OK
    summary = (f"{result.verdict}: {len(result.certificates)} certified, {len(result.refutations)} refuted, "
               f"{len(result.budget_exhausted)} undecided")
    return report, code, summary


def _cmd_refute(args) -> tuple[dict, int, str]:
    delta = parse_linmap(_load_json(args.map), args.map)
    found = refute_search(delta, budget=args.budget, seed=args.seed)
    if found is None:
        examined = sum(1 for _ in search_points(delta.n, budget=args.budget, seed=args.seed))
        report = {"command": "refute", "verdict": INCONCLUSIVE, "refutation": None,
                  "points_examined": examined, "seed": args.seed}
        return report, EXIT_INCONCLUSIVE, f"{INCONCLUSIVE}: no refutation among {examined} points"
    report = {"command": "refute", "verdict": NOT_LOCAL, "refutation": {**found.to_json(), "tier": found.tier},
              "seed": args.seed}
    return report, EXIT_OK, f"{NOT_LOCAL}: refuted at {found.x}"


def _cmd_witness(args) -> tuple[dict, int, str]:
    X = _parse_square(_load_json(args.x), args.x)
    Y = _parse_square(_load_json(args.y), args.y)
    if X.shape != Y.shape:
        raise InputError(f"size mismatch: {X.rows}x{X.cols} vs {Y.rows}x{Y.cols}")
    invariants = {
        "x": [p.to_json() for p in cached_invariant_factors(X)],
        "y": [p.to_json() for p in cached_invariant_factors(Y)],
    }
    base = {"command": "witness", "invariant_factors": invariants, "seed": args.seed}
    try:
        w = similarity_witness(X, Y, budget=args.budget, seed=args.seed)
    except WitnessSearchExhausted:
        return ({**base, "similar": True, "witness": None, "verdict": INCONCLUSIVE},
                EXIT_INCONCLUSIVE, "similar, but no witness found within budget")
    if w is None:
        return {**base, "similar": False, "witness": None, "verdict": "not similar"}, EXIT_OK, "not similar"
    return {**base, "similar": True, "witness": w.to_json(), "verdict": "similar"}, EXIT_OK, "similar"


def _cmd_counterexample(args) -> tuple[dict, int, str]:
    try:
        alpha = parse_rational(args.alpha)
        spec = DeltaAlpha(args.n, alpha)
    except (RationalParseError, ValueError) as exc:
        raise InputError(f"counterexample: {exc}") from exc
    report = {"command": "counterexample", **demo(spec, budget=args.budget, seed=args.seed)}
    code = EXIT_OK if report["verdict"] == NOT_LOCAL else EXIT_INCONCLUSIVE
    summary = (f"Delta_alpha n={spec.n} alpha={report['alpha']}: identities "
               f"{'ok' if report['identities_verified'] else 'FAILED'}, basis "
               f"{'certified' if report['basis_certified'] else 'not certified'}, {report['verdict']}")
    return report, code, summary


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slnlocal", description="Local automorphisms of sl_n, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, search: bool = True):
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        if search:
            p.add_argument("--budget", type=_nonneg_int, default=None, help="search budget (default: full schedule)")
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("classify-sl2", help="decide membership in LAut(sl_2)")
    p.add_argument("--map", required=True)
    common(p, search=False)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("certify", help="certify a map pointwise")
    p.add_argument("--map", required=True)
    p.add_argument("--points")
    common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("refute", help="search for a point where no automorphism fits")
    p.add_argument("--map", required=True)
    common(p)
    p.set_defaults(func=_cmd_refute)

    p = sub.add_parser("witness", help="similarity witness for two matrices")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    common(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("counterexample", help="build and refute Delta_alpha")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default="1")
    common(p)
    p.set_defaults(func=_cmd_counterexample)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if not hasattr(args, "seed"):
        args.seed = 0
    try:
        report, code, summary = args.func(args)
        emit_report(report, args.out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
