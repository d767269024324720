"""Plane trees in postorder, their Polish words, and special-vertex statistics.

A plane tree on ``n`` vertices is stored as its Polish word read as a tuple
of arities: the letter at postorder position ``p`` (1-based) is ``x`` for a
leaf and ``F_c`` for a vertex with ``c`` children.  The root is always the
last letter, label ``n``.

Special vertices come in two schemes.  ``paren`` is the (0)/(1)/(2)
classification, where a leaf that is the first child of the root counts as
type (1); ``bracket`` is the [0]/[1]/[2] classification, which only looks
at leaf status and first-born status.
"""

from __future__ import annotations

import re
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

PAREN = "paren"
BRACKET = "bracket"
_SCHEMES = (PAREN, BRACKET)


class TreeError(ValueError):
    """Malformed tree input or an operation outside its domain."""


class PlaneTree:
    """Immutable plane tree keyed by its postorder arity word."""

    def __init__(self, arities: Sequence[int]):
        arities = tuple(int(a) for a in arities)
        _validate_arities(arities)
        self.arities = arities

    # -- structure -----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.arities)

    def __len__(self) -> int:
        return len(self.arities)

    @property
    def root(self) -> int:
        return len(self.arities)

    @cached_property
    def _links(self) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
        n = len(self.arities)
        parent = [0] * (n + 1)
        children: list[tuple[int, ...]] = [()] * (n + 1)
        stack: list[int] = []
        for p, a in enumerate(self.arities, start=1):
            kids = tuple(stack[len(stack) - a:]) if a else ()
            if a:
                del stack[len(stack) - a:]
            for c in kids:
                parent[c] = p
            children[p] = kids
            stack.append(p)
        return tuple(parent), tuple(children)

    def parent(self, v: int) -> int:
        """Parent label, ``0`` for the root."""
        return self._links[0][v]

    def children(self, v: int) -> tuple[int, ...]:
        return self._links[1][v]

    def is_leaf(self, v: int) -> bool:
        return self.arities[v - 1] == 0

    def is_first_born(self, v: int) -> bool:
        """True iff ``v`` is the leftmost child of its parent."""
        par = self.parent(v)
        return par != 0 and self.children(par)[0] == v

    def nonroot(self) -> range:
        return range(1, len(self.arities))

    # -- conversions ---------------------------------------------------

    def polish(self) -> str:
        """Canonical ASCII Polish word, e.g. ``xxF2xxF2F1F2``."""
        return "".join("x" if a == 0 else f"F{a}" for a in self.arities)

    @classmethod
    def from_polish(cls, word: str) -> "PlaneTree":
        return decode_polish(word)

    def to_nested(self):
        """Nested-list form: every vertex is the list of its children."""
        def build(v):
            return [build(c) for c in self.children(v)]

        return build(self.root)

    @classmethod
    def from_nested(cls, nested) -> "PlaneTree":
        arities: list[int] = []

        def walk(node):
            if not isinstance(node, list):
                raise TreeError("nested tree must be built from lists")
            for child in node:
                walk(child)
            arities.append(len(node))

        walk(nested)
        return cls(arities)

    @classmethod
    def from_children(cls, root, children: dict) -> "PlaneTree":
        """Build from an arbitrary root id and a map id -> ordered child ids."""
        arities: list[int] = []
        stack = [(root, False)]
        while stack:
            v, done = stack.pop()
            kids = children.get(v, ())
            if done:
                arities.append(len(kids))
                continue
            stack.append((v, True))
            for c in reversed(kids):
                stack.append((c, False))
        return cls(arities)

    def shape(self):
        """Hashable nested-tuple form of the tree (labels forgotten)."""
        stack: list = []
        for a in self.arities:
            kids = tuple(stack[len(stack) - a:]) if a else ()
            if a:
                del stack[len(stack) - a:]
            stack.append(kids)
        return stack[0]

    @classmethod
    def from_shape(cls, shape) -> "PlaneTree":
        arities: list[int] = []

        def walk(node):
            for child in node:
                walk(child)
            arities.append(len(node))

        walk(shape)
        return cls(arities)

    def __eq__(self, other) -> bool:
        return isinstance(other, PlaneTree) and self.arities == other.arities

    def __hash__(self) -> int:
        return hash(self.arities)

    def __repr__(self) -> str:
        return f"PlaneTree({self.polish()!r})"

    def __str__(self) -> str:
        return self.polish()


def _validate_arities(arities: tuple[int, ...]) -> None:
    if not arities:
        raise TreeError("a plane tree has at least one vertex")
    height = 0
    for pos, a in enumerate(arities, start=1):
        if a < 0:
            raise TreeError(f"negative arity at position {pos}")
        if a > height:
            raise TreeError(
                f"malformed word at position {pos}: F{a} needs {a} operands, {height} available"
            )
        height += 1 - a
    if height != 1:
        raise TreeError(f"malformed word: {height} values left on the stack, expected 1")


_TOKEN = re.compile(r"\s*(?:(x|X)|F\s*([0-9]+|[₀₁₂₃₄₅₆₇₈₉]+))")
_SUBSCRIPTS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")


def decode_polish(word: str) -> PlaneTree:
    """Parse ``xxF2xxF2F1F2`` (``F₂`` subscripts are accepted too)."""
    arities = []
    pos = 0
    word = word.strip()
    while pos < len(word):
        m = _TOKEN.match(word, pos)
        if not m:
            raise TreeError(f"parse error at position {pos}: unexpected {word[pos]!r}")
        if m.group(1):
            arities.append(0)
        else:
            a = int(m.group(2).translate(_SUBSCRIPTS))
            if a < 1:
                raise TreeError(f"parse error at position {pos}: F{a} is not an operation")
            arities.append(a)
        pos = m.end()
    return PlaneTree(arities)


def encode_polish(t: PlaneTree) -> str:
    return t.polish()


def enumerate_plane_trees(n: int) -> Iterator[PlaneTree]:
    """Every plane tree on ``n`` vertices once, in lexicographic arity order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    word = [0] * n

    def extend(pos: int, height: int):
        if pos == n:
            if height == 1:
                yield PlaneTree(word)
            return
        last = pos == n - 1
        for a in range(0, height + 1):
            new_height = height - a + 1
            if last and new_height != 1:
                continue
            word[pos] = a
            yield from extend(pos + 1, new_height)

    yield from extend(0, 0)


# -- special vertices --------------------------------------------------


def vertex_kind(t: PlaneTree, v: int, scheme: str = BRACKET) -> int | None:
    """Special type of nonroot vertex ``v`` (0, 1, 2) or ``None``."""
    par = t.parent(v)
    if par == 0:
        raise TreeError("the root has no special type")
    leaf = t.is_leaf(v)
    first = t.children(par)[0] == v
    if scheme == BRACKET:
        if leaf:
            return 0 if first else 1
        return 2 if first else None
    if scheme == PAREN:
        root_parent = par == t.root
        if leaf:
            return 0 if first and not root_parent else 1
        return 2 if first else None
    raise ValueError(f"unknown scheme {scheme!r}")


def classify(t: PlaneTree, scheme: str = BRACKET) -> dict[int, int | None]:
    """Map every nonroot label to its special type under ``scheme``."""
    return {v: vertex_kind(t, v, scheme) for v in t.nonroot()}


def count_kind(t: PlaneTree, kind: int, scheme: str = PAREN) -> int:
    return sum(1 for v in t.nonroot() if vertex_kind(t, v, scheme) == kind)


def count_forks(t: PlaneTree) -> int:
    """Vertices with at least two children."""
    return sum(1 for a in t.arities if a >= 2)


def statistic_m(t: PlaneTree, d: int, i: int, j: int, scheme: str = BRACKET) -> int:
    """Number of vertices counted by the shelling statistic for type ``(i, j)``.

    A nonroot vertex counts if it has type 0; or type 1 with label at most
    ``i`` or at least ``d - j``; or type 2 with label at least ``d - j``.
    """
    if t.size != d:
        raise TreeError(f"tree has {t.size} vertices, expected {d}")
    if j >= d - 1:
        raise TreeError("the statistic needs j < d - 1")
    m = 0
    for v in t.nonroot():
        kind = vertex_kind(t, v, scheme)
        if kind == 0:
            m += 1
        elif kind == 1 and (v <= i or v >= d - j):
            m += 1
        elif kind == 2 and v >= d - j:
            m += 1
    return m


# -- removal and insertion ---------------------------------------------


def remove_vertex(t: PlaneTree, v: int) -> PlaneTree:
    """Splice the children of ``v`` into its parent's child list in place of ``v``."""
    return remove_vertices(t, [v])


def remove_vertices(t: PlaneTree, labels) -> PlaneTree:
    """Remove several nonroot vertices at once (the order never matters)."""
    gone = set(labels)
    for v in gone:
        if not 1 <= v <= t.size:
            raise TreeError(f"no vertex with label {v}")
        if v == t.root:
            raise TreeError("cannot remove the root")

    def kept_children(v):
        out = []
        for c in t.children(v):
            if c in gone:
                out.extend(kept_children(c))
            else:
                out.append(c)
        return out

    children = {v: kept_children(v) for v in range(1, t.size + 1) if v not in gone}
    return PlaneTree.from_children(t.root, children)


def _parent_positions(arities: Sequence[int]) -> list[int]:
    """0-based parent index per letter; ``-1`` for the root."""
    parent = [-1] * len(arities)
    stack: list[int] = []
    for p, a in enumerate(arities):
        if a:
            for c in stack[len(stack) - a:]:
                parent[c] = p
            del stack[len(stack) - a:]
        stack.append(p)
    return parent


def insert_type1(t: PlaneTree, p: int) -> PlaneTree:
    """Insert a leaf so that it gets postorder label ``p``.

    For ``p == 1`` the leaf becomes the first child of the root; otherwise
    it becomes the next sibling of the vertex labelled ``p - 1``.
    """
    n = t.size
    if not 1 <= p <= n:
        raise TreeError(f"position {p} out of range 1..{n}")
    word = list(t.arities)
    if p == 1:
        target = n - 1
    else:
        target = _parent_positions(word)[p - 2]
    word[target] += 1
    word.insert(p - 1, 0)
    return PlaneTree(word)


def insert_type2(t: PlaneTree, p: int) -> PlaneTree:
    """Insert a first-born internal vertex with postorder label ``p``.

    The vertex labelled ``p - 1`` is the ``c``-th child of its parent; the
    new vertex adopts that parent's first ``c`` children.
    """
    n = t.size
    if not 2 <= p <= n:
        raise TreeError(f"position {p} out of range 2..{n}")
    word = list(t.arities)
    par = _parent_positions(word)
    target = par[p - 2]
    c = 1 + sum(1 for q in range(p - 2) if par[q] == target)
    word[target] -= c - 1
    word.insert(p - 1, c)
    return PlaneTree(word)


def insert_marked_set(t: PlaneTree, positions: Sequence[int], kinds: Sequence[int]) -> PlaneTree:
    """Insert bracket-type 1/2 vertices at the given final postorder labels."""
    if len(positions) != len(kinds):
        raise TreeError("positions and kinds must have the same length")
    if len(set(positions)) != len(positions):
        raise TreeError("positions must be distinct")
    for p, k in zip(positions, kinds):
        if k not in (1, 2):
            raise TreeError(f"kind must be 1 or 2, got {k}")
        if p < 2:
            raise TreeError("bracket types 1 and 2 need a position of at least 2")
    final = t.size + len(positions)
    if positions and max(positions) > final - 1:
        raise TreeError(f"positions must lie in 2..{final - 1}")
    for p, k in sorted(zip(positions, kinds)):
        t = insert_type1(t, p) if k == 1 else insert_type2(t, p)
    return t


# -- preorder / postorder chain ----------------------------------------


def tree_to_catalan(t: PlaneTree) -> str:
    """Walk around the tree: ``+`` going down an edge, ``-`` coming back."""
    out = []

    def walk(v):
        for c in t.children(v):
            out.append("+")
            walk(c)
            out.append("-")

    walk(t.root)
    return "".join(out)


def _check_balanced(word: str) -> None:
    h = 0
    for pos, ch in enumerate(word):
        if ch == "+":
            h += 1
        elif ch == "-":
            h -= 1
        else:
            raise TreeError(f"unexpected letter {ch!r} at position {pos}")
        if h < 0:
            raise TreeError(f"unbalanced word: drops below zero at position {pos}")
    if h:
        raise TreeError("unbalanced word: more '+' than '-'")


def catalan_to_tree(word: str) -> PlaneTree:
    _check_balanced(word)
    stack: list[list] = [[]]
    for ch in word:
        if ch == "+":
            stack.append([])
        else:
            node = stack.pop()
            stack[-1].append(node)
    return PlaneTree.from_nested(stack[0])


def catalan_to_binary(word: str):
    """Binary tree of a balanced word, splitting off the last excursion.

    ``A + B -`` maps to the node ``(bin(A), bin(B))``; the empty word is
    the empty tree ``None``.
    """
    _check_balanced(word)

    def build(lo, hi):
        if lo == hi:
            return None
        h = 0
        for k in range(hi - 1, lo - 1, -1):
            h += 1 if word[k] == "-" else -1
            if h == 0:
                return (build(lo, k), build(k + 1, hi - 1))
        raise AssertionError("unreachable for balanced words")

    return build(0, len(word))


def binary_to_catalan(b) -> str:
    if b is None:
        return ""
    return binary_to_catalan(b[0]) + "+" + binary_to_catalan(b[1]) + "-"


def mirror_binary(b):
    if b is None:
        return None
    return (mirror_binary(b[1]), mirror_binary(b[0]))


def mirror_tree(t: PlaneTree) -> PlaneTree:
    def flip(node):
        return [flip(c) for c in reversed(node)]

    return PlaneTree.from_nested(flip(t.to_nested()))


def preorder_to_postorder(t: PlaneTree) -> PlaneTree:
    """Mirror the binary tree of ``t`` and read the result back as a mirrored tree."""
    word = binary_to_catalan(mirror_binary(catalan_to_binary(tree_to_catalan(t))))
    return mirror_tree(catalan_to_tree(word))


def postorder_to_preorder(t: PlaneTree) -> PlaneTree:
    word = binary_to_catalan(mirror_binary(catalan_to_binary(tree_to_catalan(mirror_tree(t)))))
    return catalan_to_tree(word)


def preorder_labels(t: PlaneTree) -> dict[int, int]:
    """Map postorder label -> preorder label (root 0, others 1..n-1)."""
    out = {}
    counter = 0

    def walk(v):
        nonlocal counter
        out[v] = counter
        counter += 1
        for c in t.children(v):
            walk(c)

    walk(t.root)
    return out


def subsets_upto(items: Sequence[int], k: int):
    for size in range(k + 1):
        yield from combinations(items, size)
