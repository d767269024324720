"""Cubical complexes, shelling steps, and the shelling contribution polynomials.

Faces are strings over ``0``, ``1`` and ``*`` of a fixed length ``n``: the
face ``"0*1"`` is the edge of the unit 3-cube where the first coordinate is
0 and the last is 1.  A face ``u`` lies in ``v`` iff they agree wherever
``v`` has a digit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .polynomial import (
    X,
    ZERO,
    Polynomial,
    binom,
    catalan,
    one_minus_x_power,
    x_minus_one_power,
)
from .poset import GradedPoset, face_poset


class ShellingError(ValueError):
    """A facet order that is not a valid cubical shelling."""


_FACE_CHARS = frozenset("01*")


def _check_face(f: str) -> str:
    if not isinstance(f, str) or not set(f) <= _FACE_CHARS:
        raise ValueError(f"invalid face {f!r}: expected a string over '01*'")
    return f


def face_contains(big: str, small: str) -> bool:
    """True iff ``small`` is a face of ``big``."""
    return all(b == "*" or b == s for b, s in zip(big, small))


def facet_faces(f: str, codim: int) -> list[str]:
    """Faces of ``f`` obtained by fixing exactly ``codim`` of its stars."""
    _check_face(f)
    stars = [k for k, ch in enumerate(f) if ch == "*"]
    if codim > len(stars):
        raise ValueError(f"codim {codim} exceeds the star count of {f!r}")
    out = []
    for chosen in combinations(stars, codim):
        for bits in product("01", repeat=codim):
            chars = list(f)
            for pos, b in zip(chosen, bits):
                chars[pos] = b
            out.append("".join(chars))
    return out


def all_subfaces(f: str) -> set[str]:
    """Every nonempty face of ``f``, including ``f`` itself."""
    choices = [("0", "1", "*") if ch == "*" else (ch,) for ch in f]
    return {"".join(c) for c in product(*choices)}


def antipodal_pairs(f: str) -> list[tuple[str, str]]:
    """The codim-1 faces of ``f`` grouped by the star they fix."""
    pairs = []
    for pos, ch in enumerate(f):
        if ch == "*":
            pairs.append((f[:pos] + "0" + f[pos + 1:], f[:pos] + "1" + f[pos + 1:]))
    return pairs


@dataclass(frozen=True)
class CubicalComplex:
    """A pure cubical complex given by its facets inside the unit ``n``-cube."""

    ambient: int
    facets: tuple[str, ...]

    def __post_init__(self):
        facets = tuple(self.facets)
        object.__setattr__(self, "facets", facets)
        if not facets:
            raise ValueError("a cubical complex needs at least one facet")
        for f in facets:
            _check_face(f)
            if len(f) != self.ambient:
                raise ValueError(f"facet {f!r} does not have length {self.ambient}")
        if len(set(facets)) != len(facets):
            raise ValueError("duplicate facets")
        stars = {f.count("*") for f in facets}
        if len(stars) != 1:
            raise ValueError("complex is not pure: facets have different dimensions")
        for a in facets:
            for b in facets:
                if a != b and face_contains(a, b):
                    raise ValueError(f"facet {b!r} is contained in facet {a!r}")

    @property
    def dim(self) -> int:
        """Dimension ``d - 1`` of the facets."""
        return self.facets[0].count("*")

    @property
    def d(self) -> int:
        return self.dim + 1

    def faces(self) -> list[str]:
        """All nonempty faces, sorted by dimension then lexicographically."""
        seen: set[str] = set()
        for f in self.facets:
            seen |= all_subfaces(f)
        return sorted(seen, key=lambda s: (s.count("*"), s))

    def face_poset(self) -> GradedPoset:
        """Face poset with the empty face as minimum."""
        return face_poset(self.faces())

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "facets": list(self.facets)}

    @classmethod
    def from_json(cls, data) -> "CubicalComplex":
        if isinstance(data, str):
            data = json.loads(data)
        if "facets" not in data:
            raise ValueError("complex JSON is missing field 'facets'")
        facets = data["facets"]
        ambient = data.get("ambient", len(facets[0]) if facets else 0)
        return cls(int(ambient), tuple(facets))


@dataclass(frozen=True)
class Shelling:
    complex: CubicalComplex
    order: tuple[int, ...]
    types: tuple[tuple[int, int], ...] = field(default=())

    def all_types(self) -> list[tuple[int, int]]:
        """Per-facet types in shelling order, the first being ``(0, 0)``."""
        return [(0, 0)] + list(self.types)


def shelling_type(prev_union: set[str], f: str, d: int) -> tuple[int, int]:
    """Type ``(i, j)`` of adding facet ``f`` (a ``(d-1)``-cube) to ``prev_union``.

    ``prev_union`` must be closed under taking faces.
    """
    if f.count("*") != d - 1:
        raise ValueError(f"facet {f!r} is not a {d - 1}-cube")
    pairs = antipodal_pairs(f)
    i = j = 0
    expected: set[str] = set()
    for a, b in pairs:
        has_a, has_b = a in prev_union, b in prev_union
        if has_a and has_b:
            j += 1
        elif has_a or has_b:
            i += 1
        if has_a:
            expected |= all_subfaces(a)
        if has_b:
            expected |= all_subfaces(b)
    actual = all_subfaces(f) & prev_union
    if actual != expected:
        raise ShellingError(
            f"not a valid shelling step: {f!r} meets the earlier facets in "
            "a set that is not a union of codimension-1 faces"
        )
    if not (i >= 1 or j == d - 1):
        raise ShellingError(f"illegal type ({i}, {j}) for facet {f!r}")
    return (i, j)


def shell_complex(c: CubicalComplex, order: Sequence[int] | None = None) -> tuple[Shelling, Polynomial]:
    """Validate a facet order as a shelling and sum the f-contributions."""
    if order is None:
        order = range(len(c.facets))
    order = tuple(order)
    if sorted(order) != list(range(len(c.facets))):
        raise ValueError("order must be a permutation of the facet indices")
    d = c.d
    union: set[str] = set()
    types = []
    total = Polynomial()
    for step, idx in enumerate(order):
        f = c.facets[idx]
        if step == 0:
            total = total + initial_contrib(d)
        else:
            i, j = shelling_type(union, f, d)
            types.append((i, j))
            total = total + f_contrib(d, i, j)
        union |= all_subfaces(f)
    return Shelling(c, order, tuple(types)), total


# -- closed forms ------------------------------------------------------


def g_cube(d: int, form: str = "catalan") -> Polynomial:
    """Toric g-polynomial of the boundary of the ``d``-cube."""
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    total = Polynomial()
    for k in range(d // 2 + 1):
        if form == "gessel":
            num = binom(d, k) * binom(2 * d - 2 * k, d)
            coeff, rem = divmod(num, d - k + 1)
            if rem:
                raise ArithmeticError("non-integral Gessel coefficient")
        elif form == "catalan":
            coeff = catalan(d - k) * binom(d - k, k)
        else:
            raise ValueError(f"unknown form {form!r}")
        total = total + coeff * x_minus_one_power(k)
    return total


def legal_types(d: int) -> list[tuple[int, int]]:
    """Types a non-initial facet can have in dimension ``d``.

    The initial facet contributes ``initial_contrib(d)``; for ``d >= 2``
    that equals ``f_contrib(d, 0, 0)`` and ``(0, 0)`` is listed first.
    """
    out = []
    if d >= 2:
        out.append((0, 0))
    out.append((0, d - 1))
    for i in range(1, d):
        for j in range(0, d - i):
            out.append((i, j))
    return out


def _check_type(d: int, i: int, j: int) -> None:
    if d < 1:
        raise ValueError("dimension d must be at least 1")
    if (i, j) == (0, 0) or (i, j) == (0, d - 1):
        return
    if i >= 1 and j >= 0 and i + j <= d - 1:
        return
    raise ValueError(f"illegal type ({i}, {j}) for d = {d}")


def _f_closed(d: int, i: int, j: int) -> Polynomial:
    total = Polynomial()
    for k in range(d):
        inner = sum(binom(j, s) * binom(d + i + j - 1 - k - s, k - s) for s in range(min(j, k) + 1))
        if inner:
            total = total + (catalan(d - 1 - k) * inner) * one_minus_x_power(k) * Polynomial.monomial(d - k)
    return total


def _f_last(d: int) -> Polynomial:
    total = Polynomial()
    for k in range(d):
        c = catalan(d - 1 - k) * binom(d - 1 - k, k)
        if c:
            total = total + c * x_minus_one_power(k)
    return total


def f_contrib(d: int, i: int, j: int) -> Polynomial:
    """Change in the toric f-polynomial caused by a shelling step of type ``(i, j)``.

    For ``d == 1`` the type ``(0, 0)`` coincides with ``(0, d-1)`` and is
    read as a later point; use :func:`initial_contrib` for the first facet.
    """
    _check_type(d, i, j)
    if (i, j) == (0, d - 1):
        return _f_last(d)
    return _f_closed(d, i, j)


def initial_contrib(d: int) -> Polynomial:
    """Contribution of the first facet of a shelling."""
    if d < 1:
        raise ValueError("dimension d must be at least 1")
    return _f_closed(d, 0, 0)


@lru_cache(maxsize=None)
def _f_rec(d: int, i: int, j: int) -> Polynomial:
    if d == 0:
        return ZERO
    if j > 0:
        return _f_rec(d, i, j - 1) - 2 * (X - 1) * _f_rec(d - 1, i, j - 1)
    if i > 0:
        return _f_rec(d, i - 1, 0) - (X - 1) * _f_rec(d - 1, i - 1, 0)
    return g_cube(d - 1).reverse(d)


def f_contrib_recursive(d: int, i: int, j: int) -> Polynomial:
    """Same values as :func:`f_contrib`, computed by the two shelling recursions."""
    _check_type(d, i, j)
    if (i, j) == (0, d - 1):
        return g_cube(d - 1)
    return _f_rec(d, i, j)


def h_contrib(d: int, i: int, j: int) -> Polynomial:
    """Change in the toric h-polynomial caused by a shelling step of type ``(i, j)``."""
    _check_type(d, i, j)
    total = Polynomial()
    if (i, j) == (0, d - 1):
        for k in range(d):
            c = catalan(d - 1 - k) * binom(d - 1 - k, k)
            if c:
                total = total + c * one_minus_x_power(k) * Polynomial.monomial(d - k)
        return total
    for k in range(d):
        inner = sum(binom(j, s) * binom(d + i + j - 1 - k - s, k - s) for s in range(min(j, k) + 1))
        if inner:
            total = total + (catalan(d - 1 - k) * inner) * x_minus_one_power(k)
    return total


def initial_h_contrib(d: int) -> Polynomial:
    return initial_contrib(d).reverse(d)


# -- complexes ---------------------------------------------------------


def complex_f(c: CubicalComplex) -> Polynomial:
    """Toric f-polynomial of the face poset of ``c`` (every face kept)."""
    return c.face_poset().toric_f()


def toric_h_and_g_of_complex(c: CubicalComplex) -> tuple[Polynomial, Polynomial]:
    """Toric h- and g-polynomials of a pure cubical complex."""
    if not isinstance(c, CubicalComplex):
        raise TypeError("expected a CubicalComplex")
    d = c.d
    hbar = complex_f(c)
    h = hbar.reverse(d)
    g = Polynomial([h[0]] + [h[k] - h[k - 1] for k in range(1, d // 2 + 1)])
    return h, g


def cube_boundary(d: int) -> tuple[CubicalComplex, tuple[int, ...]]:
    """Boundary of the ``d``-cube with a shelling order.

    Facets are listed as (coordinate, value) pairs; the returned order takes
    every ``0``-side facet first and then every ``1``-side facet.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    facets = []
    for pos in range(d):
        for bit in "01":
            facets.append("*" * pos + bit + "*" * (d - pos - 1))
    order = tuple(2 * pos for pos in range(d)) + tuple(2 * pos + 1 for pos in range(d))
    return CubicalComplex(d, tuple(facets)), order


def single_cube(d: int) -> CubicalComplex:
    return CubicalComplex(d, ("*" * d,))


def grid_complexes() -> dict[str, CubicalComplex]:
    """Hand-built subcomplexes of cube boundaries with shellings in listed order."""
    return {
        "edge-path": CubicalComplex(3, ("00*", "0*1", "*11", "1*1")),
        "square-band": CubicalComplex(3, ("0**", "*0*", "1**")),
        "solid-staircase": CubicalComplex(4, ("0***", "*0**", "**0*", "1***", "*1**")),
    }


def complex_from_facets(facets: Iterable[str]) -> CubicalComplex:
    facets = tuple(facets)
    if not facets:
        raise ValueError("a cubical complex needs at least one facet")
    return CubicalComplex(len(facets[0]), facets)
