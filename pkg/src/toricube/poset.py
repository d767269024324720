"""Graded posets and the toric f/g recurrence on lower Eulerian posets.

The order relation is stored as Python-int bitsets (``down[y]`` has bit
``x`` set iff ``x <= y``), which keeps interval and parity counts cheap
even for cube lattices with a few thousand elements.
"""

from __future__ import annotations

import json
import threading
from itertools import product
from typing import Hashable, Sequence

from .polynomial import ONE, Polynomial, x_minus_one_power


class PosetError(ValueError):
    """Malformed poset input or a violated Eulerian hypothesis."""


class GradedPoset:
    """A finite poset given by its cover relations and a rank function.

    ``iso_key`` optionally assigns each element a hashable key such that
    elements with equal keys have isomorphic lower intervals; the toric
    recurrence then computes each interval polynomial once per key.
    """

    def __init__(
        self,
        elements: Sequence[Hashable],
        covers: Sequence[tuple[int, int]],
        ranks: Sequence[int],
        *,
        iso_key: Sequence[Hashable] | None = None,
    ):
        n = len(elements)
        if len(ranks) != n:
            raise PosetError("ranks must have one entry per element")
        self.elements = tuple(elements)
        self.ranks = tuple(int(r) for r in ranks)
        self.covers = tuple((int(a), int(b)) for a, b in covers)
        self.iso_key = tuple(iso_key) if iso_key is not None else None
        self.size = n

        lower: list[list[int]] = [[] for _ in range(n)]
        upper: list[list[int]] = [[] for _ in range(n)]
        for a, b in self.covers:
            if not (0 <= a < n and 0 <= b < n):
                raise PosetError(f"cover ({a}, {b}) references an unknown element")
            if self.ranks[b] != self.ranks[a] + 1:
                raise PosetError(
                    f"cover ({a}, {b}) does not raise rank by exactly one"
                )
            lower[b].append(a)
            upper[a].append(b)
        self.lower_covers = tuple(tuple(x) for x in lower)
        self.upper_covers = tuple(tuple(x) for x in upper)

        order = sorted(range(n), key=lambda e: self.ranks[e])
        down = [0] * n
        for e in order:
            mask = 1 << e
            for c in lower[e]:
                mask |= down[c]
            down[e] = mask
        up = [0] * n
        for e in reversed(order):
            mask = 1 << e
            for c in upper[e]:
                mask |= up[c]
            up[e] = mask
        self._down = down
        self._up = up
        self._order = order

        minima = [e for e in range(n) if not lower[e]]
        maxima = [e for e in range(n) if not upper[e]]
        if len(minima) != 1:
            raise PosetError("poset must have a unique minimum")
        self.bottom = minima[0]
        if self.ranks[self.bottom] != 0:
            raise PosetError("the minimum must have rank 0")
        full = (1 << n) - 1
        if self._up[self.bottom] != full:
            raise PosetError("the minimum is not below every element")
        self.top = maxima[0] if len(maxima) == 1 and self._down[maxima[0]] == full else None

        self._even_mask = 0
        for e in range(n):
            if self.ranks[e] % 2 == 0:
                self._even_mask |= 1 << e
        self._memo: dict = {}
        self._lock = threading.Lock()

    # -- relations -----------------------------------------------------

    def leq(self, a: int, b: int) -> bool:
        return bool(self._down[b] >> a & 1)

    def below(self, t: int) -> list[int]:
        """Elements strictly below ``t``."""
        mask = self._down[t] & ~(1 << t)
        return _bits(mask)

    @property
    def rank(self) -> int:
        return max(self.ranks) if self.ranks else 0

    def without_top(self) -> "GradedPoset":
        if self.top is None:
            return self
        keep = [e for e in range(self.size) if e != self.top]
        return self.induced(keep)

    def induced(self, keep: Sequence[int]) -> "GradedPoset":
        """Subposet on ``keep`` (must be a down-closed set so covers survive)."""
        index = {e: k for k, e in enumerate(keep)}
        covers = [(index[a], index[b]) for a, b in self.covers if a in index and b in index]
        return GradedPoset(
            [self.elements[e] for e in keep],
            covers,
            [self.ranks[e] for e in keep],
            iso_key=[self.iso_key[e] for e in keep] if self.iso_key else None,
        )

    def with_new_top(self) -> "GradedPoset":
        """Adjoin a new maximum element above every maximal element."""
        n = self.size
        maxima = [e for e in range(n) if not self.upper_covers[e]]
        r = self.rank + 1
        for e in maxima:
            if self.ranks[e] != r - 1:
                raise PosetError("cannot adjoin a top to a poset with maxima of mixed rank")
        return GradedPoset(
            list(self.elements) + ["1^"],
            list(self.covers) + [(e, n) for e in maxima],
            list(self.ranks) + [r],
            iso_key=list(self.iso_key) + [("top", self.iso_key[maxima[0]] if maxima else None)]
            if self.iso_key
            else None,
        )

    # -- Eulerian checks -----------------------------------------------

    def interval_defect(self, x: int, y: int) -> int:
        """``#even - #odd`` ranks in the closed interval ``[x, y]``."""
        mask = self._down[y] & self._up[x]
        even = (mask & self._even_mask).bit_count()
        return 2 * even - mask.bit_count()

    def find_non_eulerian_interval(self, tops: Sequence[int] | None = None):
        """First closed interval ``[x, y]``, ``x < y``, with unequal parity counts.

        Only intervals whose upper end lies in ``tops`` are examined when
        given.  Returns ``None`` when every examined interval balances.
        """
        ys = range(self.size) if tops is None else tops
        for y in sorted(ys, key=lambda e: self.ranks[e]):
            for x in _bits(self._down[y] & ~(1 << y)):
                if self.interval_defect(x, y) != 0:
                    return (x, y)
        return None

    def is_eulerian(self) -> bool:
        if self.top is None:
            raise PosetError("is_eulerian needs a poset with a maximum element")
        return self.find_non_eulerian_interval() is None

    def is_lower_eulerian(self) -> bool:
        return self.find_non_eulerian_interval() is None

    # -- toric recurrence ----------------------------------------------

    def _key(self, t: int):
        return self.iso_key[t] if self.iso_key is not None else t

    def _lower_g(self, t: int) -> Polynomial:
        """``g([0^, t))`` with memoization keyed by ``iso_key``."""
        key = self._key(t)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        for e in self._order:
            if not (self._down[t] >> e & 1):
                continue
            k = self._key(e)
            if k in self._memo:
                continue
            rho = self.ranks[e]
            if rho == 0:
                g = ONE
            else:
                f = Polynomial()
                for s in _bits(self._down[e] & ~(1 << e)):
                    f = f + self._memo[self._key(s)] * x_minus_one_power(rho - 1 - self.ranks[s])
                g = toric_g_from_f(f, rho - 1)
            with self._lock:
                self._memo.setdefault(k, g)
        return self._memo[key]

    def toric_f(self, *, check: bool = True) -> Polynomial:
        """Toric f-polynomial of this poset read as lower Eulerian."""
        if check:
            bad = self.find_non_eulerian_interval()
            if bad is not None:
                x, y = bad
                raise PosetError(
                    "not lower Eulerian: interval "
                    f"[{self.elements[x]!r}, {self.elements[y]!r}] is unbalanced"
                )
        d = self.rank
        f = Polynomial()
        for t in range(self.size):
            f = f + self._lower_g(t) * x_minus_one_power(d - self.ranks[t])
        return f

    def to_json(self) -> dict:
        return {
            "elements": [e if isinstance(e, (str, int)) else str(e) for e in self.elements],
            "covers": [list(c) for c in self.covers],
            "ranks": list(self.ranks),
        }

    @classmethod
    def from_json(cls, data) -> "GradedPoset":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(data["elements"], [tuple(c) for c in data["covers"]], data["ranks"])
        except KeyError as exc:
            raise PosetError(f"poset JSON is missing field {exc.args[0]!r}") from None

    def __repr__(self) -> str:
        return f"GradedPoset(size={self.size}, rank={self.rank})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def toric_g_from_f(f: Polynomial, d: int) -> Polynomial:
    """``sum_{i <= d/2} (k_i - k_{i-1}) x^i`` for ``f = sum k_i x^i``."""
    if d < 0:
        return ONE
    return Polynomial(f[i] - (f[i - 1] if i else 0) for i in range(d // 2 + 1))


def is_eulerian(p: GradedPoset) -> bool:
    return p.is_eulerian()


def stanley_f(p: GradedPoset, *, check: bool = True) -> Polynomial:
    """Toric f-polynomial; a supplied maximum element is removed first."""
    if p.size == 1:
        return ONE  # removing the top leaves the empty poset
    return p.without_top().toric_f(check=check)


def stanley_g(p: GradedPoset, *, check: bool = True) -> Polynomial:
    """Toric g-polynomial of ``p`` minus its top (``p`` has rank ``d + 1``)."""
    if p.top is None:
        raise PosetError("stanley_g needs a poset with a maximum element")
    d = p.rank - 1
    return toric_g_from_f(stanley_f(p, check=check), d)


def cube_face_lattice(d: int) -> GradedPoset:
    """Face lattice of the ``d``-cube: ``{0,1,*}^d`` plus the empty face.

    The all-star face is the maximum; the empty face ``0^`` has rank 0
    and a face with ``s`` stars has rank ``s + 1``.
    """
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    faces = ["".join(w) for w in product("01*", repeat=d)]
    return face_poset(faces)


def face_poset(faces: Sequence[str]) -> GradedPoset:
    """Face poset (with empty face) of a down-closed family of cube faces."""
    index = {f: k + 1 for k, f in enumerate(faces)}
    elements = ["0^"] + list(faces)
    ranks = [0] + [f.count("*") + 1 for f in faces]
    iso = [-1] + [f.count("*") for f in faces]
    covers = []
    for f, k in index.items():
        if "*" not in f:
            covers.append((0, k))
            continue
        for pos, ch in enumerate(f):
            if ch == "*":
                for bit in "01":
                    sub = f[:pos] + bit + f[pos + 1:]
                    try:
                        covers.append((index[sub], k))
                    except KeyError:
                        raise PosetError(f"face family is not closed: {sub!r} missing") from None
    return GradedPoset(elements, covers, ranks, iso_key=iso)
