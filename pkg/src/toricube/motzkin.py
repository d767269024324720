"""Colored Motzkin paths, the g-polynomial recursions, and Morgan-Voyce moments.

Paths are strings over ``U`` (up), ``D`` (down), ``r`` (red level step) and
``b`` (blue level step).  A level step on the axis must be red.  The index
of the weights ``b_i`` and ``lambda_i`` below is the height of the step.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .polynomial import ONE, X, Polynomial, one_minus_x_power

Weight = Union[int, Polynomial]

STEPS = frozenset("UDrb")
_S_PAIRS = frozenset({("U", "r"), ("b", "r"), ("b", "D"), ("U", "D")})


class PathError(ValueError):
    pass


@dataclass(frozen=True)
class MotzkinPath:
    steps: str

    def __post_init__(self):
        h = 0
        for pos, s in enumerate(self.steps):
            if s not in STEPS:
                raise PathError(f"unknown step {s!r} at position {pos}")
            if s == "b" and h == 0:
                raise PathError(f"blue level step on the axis at position {pos}")
            h += {"U": 1, "D": -1}.get(s, 0)
            if h < 0:
                raise PathError(f"path drops below the axis at position {pos}")
        if h != 0:
            raise PathError("path does not return to the axis")

    def levels(self) -> list[int]:
        """Starting height of every step."""
        out, h = [], 0
        for s in self.steps:
            out.append(h)
            h += {"U": 1, "D": -1}.get(s, 0)
        return out

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps


def enumerate_motzkin(n: int) -> Iterator[MotzkinPath]:
    """All colored Motzkin paths of length ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    buf: list[str] = []

    def walk(h: int):
        left = n - len(buf)
        if left == 0:
            if h == 0:
                yield MotzkinPath("".join(buf))
            return
        options = ["U", "r"] if h == 0 else ["U", "D", "r", "b"]
        for s in options:
            nh = h + {"U": 1, "D": -1}.get(s, 0)
            if nh > left - 1:
                continue
            buf.append(s)
            yield from walk(nh)
            buf.pop()

    yield from walk(0)


def s_statistic(p: MotzkinPath) -> int:
    """Adjacent pairs (U,r), (b,r), (b,D), (U,D)."""
    st = p.steps
    return sum(1 for a, b in zip(st, st[1:]) if (a, b) in _S_PAIRS)


def motzkin_g(n: int, method: str = "transfer") -> Polynomial:
    """``sum_p t^s(p)`` over colored Motzkin paths of length ``n``.

    ``transfer`` runs a dynamic program over (height, previous step);
    ``enumerate`` walks every path.
    """
    if method == "enumerate":
        return Polynomial(_histogram(s_statistic(p) for p in enumerate_motzkin(n)))
    if method != "transfer":
        raise ValueError(f"unknown method {method!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    states: dict[tuple[int, str], Polynomial] = {(0, ""): ONE}
    for step in range(n):
        left = n - step - 1
        nxt: dict[tuple[int, str], Polynomial] = {}
        for (h, prev), w in states.items():
            for s in "UDrb":
                if s == "b" and h == 0:
                    continue
                nh = h + {"U": 1, "D": -1}.get(s, 0)
                if nh < 0 or nh > left:
                    continue
                gain = w * X if (prev, s) in _S_PAIRS else w
                key = (nh, s)
                nxt[key] = nxt[key] + gain if key in nxt else gain
        states = nxt
    return sum(states.values(), Polynomial())


def _histogram(values) -> list[int]:
    counts: list[int] = []
    for v in values:
        if v >= len(counts):
            counts.extend([0] * (v + 1 - len(counts)))
        counts[v] += 1
    return counts


def g_recursion(k: int, *, offset: int = 1) -> Polynomial:
    """``g_k = (1-t)^k + sum_{i=1..k} g_{i-1} (g_{k-i} - (1-t)^{k-i+offset})``.

    ``offset=1`` is the exponent that follows from substituting the
    ``P``-recursion; ``offset=0`` is kept for comparison.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _g_rec(k, offset)


@lru_cache(maxsize=None)
def _g_rec(k: int, offset: int) -> Polynomial:
    if k == 0:
        return ONE
    total = one_minus_x_power(k)
    for i in range(1, k + 1):
        total = total + _g_rec(i - 1, offset) * (_g_rec(k - i, offset) - one_minus_x_power(k - i + offset))
    return total


@lru_cache(maxsize=None)
def P_recursion(k: int) -> Polynomial:
    """``P_k = (1-t)^{k-1} + sum_{i<k} ((1-t)^i P_{k-i} + t P_i P_{k-i})``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    total = one_minus_x_power(k - 1)
    for i in range(1, k):
        total = total + one_minus_x_power(i) * P_recursion(k - i) + X * P_recursion(i) * P_recursion(k - i)
    return total


def morgan_voyce(n: int, variant: str = "b") -> Polynomial:
    """``b_n`` (``b_{n+1} = (x+2) b_n - b_{n-1}``) or ``p_n`` (``x-2``, ``p_1 = x-1``)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if variant == "b":
        prev, cur, step = ONE, X + 1, X + 2
    elif variant == "p":
        prev, cur, step = ONE, X - 1, X - 2
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, step * cur - prev
    return cur


@dataclass(frozen=True)
class MomentSpec:
    """Level weights: ``b[i]`` for level steps, ``lam[i]`` for down steps from height ``i``."""

    b: Sequence[Weight]
    lam: Sequence[Weight]


def catalan_spec(levels: int) -> MomentSpec:
    """``b_0 = 1``, ``b_i = 2``, ``lambda_i = 1`` on ``levels + 1`` heights."""
    return MomentSpec(b=[1] + [2] * levels, lam=[0] + [1] * levels)


def weighted_moment(n: int, spec: MomentSpec) -> Polynomial:
    """Total weight of Motzkin paths of length ``n``, by a height-indexed transfer."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    top = n // 2
    if len(spec.b) <= top or (top >= 1 and len(spec.lam) <= top):
        raise PathError(f"moment spec too short for n = {n}: needs heights 0..{top}")
    b = [Polynomial._coerce(w) for w in spec.b]
    lam = [Polynomial._coerce(w) for w in spec.lam]
    row: list[Polynomial] = [ONE] + [Polynomial()] * top
    for step in range(n):
        left = n - step - 1
        new = [Polynomial()] * (top + 1)
        for h, w in enumerate(row):
            if w.is_zero():
                continue
            if h + 1 <= min(top, left):
                new[h + 1] = new[h + 1] + w
            if h <= left:
                new[h] = new[h] + w * b[h]
            if h >= 1 and h - 1 <= left:
                new[h - 1] = new[h - 1] + w * lam[h]
        row = new
    return row[0]


def moment_functional(p: Polynomial, spec: MomentSpec) -> Polynomial:
    """Apply the linear map ``x^n -> weighted_moment(n, spec)``."""
    total = Polynomial()
    for n, c in enumerate(p.coeffs):
        if c:
            total = total + c * weighted_moment(n, spec)
    return total


def orthogonality_check(k: int, l: int) -> int:
    """Catalan moment functional applied to ``p_k * p_l``."""
    prod = morgan_voyce(k, "p") * morgan_voyce(l, "p")
    spec = catalan_spec(max(prod.degree // 2, 1))
    return moment_functional(prod, spec)[0]
