"""Command-line front end: ``toricube <command> ...``.

Exit status is 0 when every check passes, 1 when a check fails and 2 on
bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from . import acceptance
from .acceptance import Check
from .cubical import (
    CubicalComplex,
    ShellingError,
    f_contrib,
    f_contrib_recursive,
    g_cube,
    h_contrib,
    legal_types,
    shell_complex,
    toric_h_and_g_of_complex,
)
from .motzkin import catalan_spec, motzkin_g, weighted_moment
from .noncrossing import enumerate_nc, fillers, histogram, nc_statistic, nonsingleton_blocks, tree_to_nc
from .polynomial import Polynomial, catalan
from .poset import PosetError, stanley_f
from .trees import (
    BRACKET,
    PAREN,
    PlaneTree,
    TreeError,
    classify,
    count_forks,
    decode_polish,
    enumerate_plane_trees,
    statistic_m,
)

Value = Union[Polynomial, int, str, list]


class InputError(ValueError):
    """Bad command-line input; maps to exit status 2."""


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    results: list[tuple[str, Value]] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": [{"label": label, **_encode_value(v)} for label, v in self.results],
            "checks": [c.to_json() for c in self.checks],
        }

    @classmethod
    def from_json(cls, data) -> "Report":
        if isinstance(data, str):
            data = json.loads(data)
        results = [(r["label"], _decode_value(r)) for r in data["results"]]
        checks = [Check(**c) for c in data["checks"]]
        return cls(data["command"], dict(data["inputs"]), results, checks)


def _encode_value(v: Value) -> dict:
    if isinstance(v, Polynomial):
        return {"polynomial": v.to_json(), "text": v.to_text()}
    if isinstance(v, bool) or not isinstance(v, (int, str, list)):
        raise TypeError(f"unsupported result value {v!r}")
    if isinstance(v, int):
        return {"count": v}
    if isinstance(v, str):
        return {"text": v}
    return {"table": v}


def _decode_value(entry: dict) -> Value:
    if "polynomial" in entry:
        return Polynomial.from_json(entry["polynomial"])
    if "count" in entry:
        return int(entry["count"])
    if "table" in entry:
        return list(entry["table"])
    return entry["text"]


# -- rendering -----------------------------------------------------------


def _render_value(v: Value, fmt: str, shifted: bool) -> str:
    if isinstance(v, Polynomial):
        if fmt == "latex":
            return v.to_latex(shifted=shifted)
        if shifted:
            return " + ".join(f"{c}*(x-1)^{k}" for k, c in enumerate(v.shifted_coeffs()) if c) or "0"
        return v.to_text()
    if isinstance(v, list) and v and isinstance(v[0], (list, tuple)):
        return "\n" + "\n".join("\t".join(str(x) for x in row) for row in v)
    if isinstance(v, list):
        return "[" + ", ".join(str(r) for r in v) + "]"
    return str(v)


def render(report: Report, fmt: str = "text", shifted: bool = False) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2, sort_keys=False)
    lines = []
    if len(report.results) == 1:
        lines.append(_render_value(report.results[0][1], fmt, shifted))
    else:
        for label, v in report.results:
            lines.append(f"{label}: {_render_value(v, fmt, shifted)}")
    for c in report.checks:
        mark = "PASS" if c.passed else "FAIL"
        lines.append(f"[{mark}] {c.name}: {c.detail}")
        if c.counterexample:
            lines.append(f"       counterexample: {c.counterexample}")
    return "\n".join(lines)


# -- commands ------------------------------------------------------------


def _equal_check(name: str, got, want) -> Check:
    if got == want:
        return Check(name, True, "equal")
    show = lambda v: v.to_text() if isinstance(v, Polynomial) else v  # noqa: E731
    return Check(name, False, "values differ", json.dumps({"got": show(got), "want": show(want)}))


def _nonneg(name: str, value: int) -> int:
    if value < 0:
        raise InputError(f"{name} must be nonnegative, got {value}")
    return value


def _triple(text: str, name: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise InputError(f"{name} must be three integers d,i,j, got {text!r}") from None
    if len(parts) != 3:
        raise InputError(f"{name} must be three integers d,i,j, got {text!r}")
    return parts


def _require_legal(d: int, i: int, j: int) -> None:
    if d < 1 or (i, j) not in legal_types(d):
        raise InputError(f"(i, j) = ({i}, {j}) is not a legal type for d = {d}")


def cmd_gpoly(args) -> Report:
    d = _nonneg("d", args.d)
    gessel, cat = g_cube(d, "gessel"), g_cube(d, "catalan")
    return Report("gpoly", {"d": d}, [("g_cube", cat)], [_equal_check("gessel form = catalan form", gessel, cat)])


def cmd_contrib(args) -> Report:
    d, i, j = args.d, args.i, args.j
    _require_legal(d, i, j)
    closed = f_contrib(d, i, j)
    checks = [_equal_check("closed form = recursion", closed, f_contrib_recursive(d, i, j))]
    if args.h:
        h = h_contrib(d, i, j)
        checks.append(_equal_check("reversed h = f", h.reverse(d), closed))
        results = [(f"h_{d}({i},{j})", h)]
    else:
        results = [(f"f_{d}({i},{j})", closed)]
    return Report("contrib", {"d": d, "i": i, "j": j, "h": bool(args.h)}, results, checks)


def _load_complex(path: str) -> CubicalComplex:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read complex file {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"complex file {path!r} is not JSON: {exc.msg} at line {exc.lineno}") from None
    try:
        return CubicalComplex.from_json(data)
    except (ValueError, TypeError) as exc:
        raise InputError(f"complex file {path!r}: {exc}") from None


def cmd_toric_h(args) -> Report:
    c = _load_complex(args.complex)
    inputs: dict = {"complex": c.to_json()}
    try:
        h, g = toric_h_and_g_of_complex(c)
    except PosetError as exc:
        raise InputError(str(exc)) from None
    results: list[tuple[str, Value]] = [("toric h", h), ("toric g", g)]
    checks: list[Check] = []
    if args.shelling is not None:
        try:
            order = tuple(int(p) for p in args.shelling.split(","))
        except ValueError:
            raise InputError(f"--shelling must be comma-separated facet indices, got {args.shelling!r}") from None
        inputs["shelling"] = list(order)
        if sorted(order) != list(range(len(c.facets))):
            raise InputError(f"--shelling must be a permutation of 0..{len(c.facets) - 1}")
    else:
        order = tuple(range(len(c.facets)))
    try:
        shelling, total = shell_complex(c, order)
    except ShellingError as exc:
        if args.shelling is not None:
            checks.append(Check("shelling order is valid", False, str(exc), json.dumps({"order": list(order)})))
        return Report("toric-h", inputs, results, checks)
    rows = [[step + 1, c.facets[idx], i, j] for step, (idx, (i, j)) in enumerate(zip(order, shelling.all_types()))]
    results.append(("facet types", rows))
    checks.append(_equal_check("shelling sum = poset f", total, stanley_f(c.face_poset())))
    return Report("toric-h", inputs, results, checks)


def _parse_tree(text: str) -> PlaneTree:
    text = text.strip()
    try:
        if text.startswith("["):
            return PlaneTree.from_nested(json.loads(text))
        return decode_polish(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"tree JSON is malformed: {exc.msg}") from None
    except (TreeError, TypeError) as exc:
        raise InputError(f"bad tree {text!r}: {exc}") from None


def cmd_tree(args) -> Report:
    t = _parse_tree(args.tree)
    kinds = {scheme: classify(t, scheme) for scheme in (PAREN, BRACKET)}
    rows = [
        [v, "leaf" if t.is_leaf(v) else "internal", _kind_text(kinds[PAREN][v], "()"), _kind_text(kinds[BRACKET][v], "[]")]
        for v in t.nonroot()
    ]
    results: list[tuple[str, Value]] = [
        ("polish", t.polish()),
        ("nested", json.dumps(t.to_nested())),
        ("forks", count_forks(t)),
        ("partition", tree_to_nc(t).to_text()),
        ("vertex types", rows),
    ]
    return Report("tree", {"tree": args.tree}, results, [])


def _kind_text(kind, brackets: str) -> str:
    return "-" if kind is None else f"{brackets[0]}{kind}{brackets[1]}"


def cmd_trees(args) -> Report:
    n = args.n
    if n < 1:
        raise InputError(f"n must be at least 1, got {n}")
    trees = list(enumerate_plane_trees(n))
    inputs: dict = {"n": n}
    results: list[tuple[str, Value]] = [("trees", len(trees))]
    checks = [_equal_check("tree count is Catalan", len(trees), catalan(n - 1))]
    if args.stat is None:
        results.append(("forks", Polynomial(histogram(count_forks(t) for t in trees))))
        return Report("trees", inputs, results, checks)
    d, i, j = _triple(args.stat, "--stat")
    if d != n:
        raise InputError(f"--stat d must equal n = {n}, got {d}")
    _require_legal(d, i, j)
    if j >= d - 1:
        raise InputError("--stat needs j < d - 1")
    inputs.update({"stat": [d, i, j], "scheme": args.scheme})
    hist = histogram(statistic_m(t, d, i, j, args.scheme) for t in trees)
    gen = Polynomial([hist[d - k] if 0 <= d - k < len(hist) else 0 for k in range(d + 1)])
    results += [("statistic histogram", list(hist)), ("sum of x^(d-m)", gen)]
    if args.scheme == PAREN or i >= 1:
        checks.append(_equal_check(f"generating sum = f_{d}({i},{j})", gen, f_contrib(d, i, j)))
    return Report("trees", inputs, results, checks)


def cmd_nc(args) -> Report:
    n = _nonneg("n", args.n)
    parts = list(enumerate_nc(n))
    inputs: dict = {"n": n}
    results: list[tuple[str, Value]] = [("partitions", len(parts))]
    checks = [_equal_check("partition count is Catalan", len(parts), catalan(n))]
    if args.stat is not None:
        d, i, j = _triple(args.stat, "--stat")
        if d != n + 1:
            raise InputError(f"--stat d must equal n + 1 = {n + 1}, got {d}")
        _require_legal(d, i, j)
        if j >= d - 1:
            raise InputError("--stat needs j < d - 1")
        inputs["stat"] = [d, i, j]
        hist = histogram(nc_statistic(p, d, i, j) for p in parts)
        gen = Polynomial([hist[d - k] if 0 <= d - k < len(hist) else 0 for k in range(d + 1)])
        results += [("statistic histogram", list(hist)), ("sum of x^(d-m)", gen)]
        checks.append(_equal_check(f"generating sum = f_{d}({i},{j})", gen, f_contrib(d, i, j)))
    elif args.fillers:
        inputs["fillers"] = True
        dist = Polynomial(histogram(fillers(p) for p in parts))
        results.append(("fillers", dist))
        checks.append(_equal_check(f"filler distribution = g_cube({n})", dist, g_cube(n)))
    else:
        dist = Polynomial(histogram(nonsingleton_blocks(p) for p in parts))
        results.append(("nonsingleton blocks", dist))
        checks.append(_equal_check(f"block distribution = g_cube({n})", dist, g_cube(n)))
    return Report("nc", inputs, results, checks)


def cmd_motzkin(args) -> Report:
    n = _nonneg("n", args.n)
    g = motzkin_g(n)
    moment = weighted_moment(n, catalan_spec(n // 2 + 1))
    return Report(
        "motzkin",
        {"n": n},
        [("motzkin_g", g), ("Catalan moment", moment[0])],
        [
            _equal_check(f"motzkin_g = g_cube({n})", g, g_cube(n)),
            _equal_check("moment is Catalan", moment[0], catalan(n)),
        ],
    )


def cmd_crosscheck(args) -> Report:
    if args.max_d is not None and args.max_d < 1:
        raise InputError(f"--max-d must be at least 1, got {args.max_d}")
    checks = acceptance.run_all(args.max_d, jobs=args.jobs)
    passed = sum(c.passed for c in checks)
    return Report(
        "crosscheck",
        {"max_d": args.max_d},
        [("criteria passed", f"{passed}/{len(checks)}")],
        checks,
    )


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default=argparse.SUPPRESS)
    common.add_argument("--basis", choices=("standard", "shifted"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="toricube", description="Toric h-contributions of cubical shellings.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gpoly", parents=[common], help="g-polynomial of the cube face lattice")
    p.add_argument("d", type=int)
    p.set_defaults(run=cmd_gpoly)

    p = sub.add_parser("contrib", parents=[common], help="f- or h-contribution of a shelling step")
    p.add_argument("d", type=int)
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--h", action="store_true", help="print the h-contribution")
    p.set_defaults(run=cmd_contrib)

    p = sub.add_parser("toric-h", parents=[common], help="toric h of a cubical complex given as JSON")
    p.add_argument("complex")
    p.add_argument("--shelling", help="facet order as 0-based indices, e.g. 0,2,1,3")
    p.set_defaults(run=cmd_toric_h)

    p = sub.add_parser("trees", parents=[common], help="plane tree statistics")
    p.add_argument("n", type=int)
    p.add_argument("--stat", metavar="d,i,j")
    p.add_argument("--scheme", choices=(PAREN, BRACKET), default=BRACKET)
    p.set_defaults(run=cmd_trees)

    p = sub.add_parser("tree", parents=[common], help="classify the vertices of one tree")
    p.add_argument("tree", help="Polish word such as xxF2xxF2F1F2, or nested-list JSON")
    p.set_defaults(run=cmd_tree)

    p = sub.add_parser("nc", parents=[common], help="noncrossing partition statistics")
    p.add_argument("n", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--fillers", action="store_true")
    group.add_argument("--stat", metavar="d,i,j")
    p.set_defaults(run=cmd_nc)

    p = sub.add_parser("motzkin", parents=[common], help="Motzkin path g-polynomial")
    p.add_argument("n", type=int)
    p.set_defaults(run=cmd_motzkin)

    p = sub.add_parser("crosscheck", parents=[common], help="run the verification matrix")
    p.add_argument("--max-d", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(run=cmd_crosscheck)
    return parser


def run(argv: list[str] | None = None) -> tuple[int, Report | None, str]:
    """Parse and execute; returns (exit code, report, rendered output or error)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 2), None, ""
    fmt = getattr(args, "format", "text")
    shifted = getattr(args, "basis", "standard") == "shifted"
    try:
        report = args.run(args)
    except (InputError, ValueError) as exc:
        return 2, None, f"error: {exc}"
    return (0 if report.ok else 1), report, render(report, fmt, shifted)


def main(argv: list[str] | None = None) -> int:
    code, report, text = run(argv)
    if text:
        stream = sys.stderr if report is None else sys.stdout
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
