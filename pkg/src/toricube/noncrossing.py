"""Noncrossing partitions and their links to postorder and preorder trees."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .polynomial import Polynomial, one_minus_x_power
from .trees import PlaneTree, preorder_labels


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class NCPartition:
    """A set partition of ``{1..n}``; blocks are sorted and ordered by minimum."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        object.__setattr__(self, "blocks", blocks)
        seen = [x for b in blocks for x in b]
        if any(not b for b in blocks):
            raise PartitionError("blocks must be nonempty")
        if sorted(seen) != list(range(1, self.n + 1)):
            raise PartitionError(f"blocks do not partition {{1..{self.n}}}")

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "NCPartition":
        blocks = [tuple(b) for b in blocks]
        n = max((max(b) for b in blocks if b), default=0)
        return cls(n, tuple(blocks))

    @property
    def block_of(self) -> dict[int, tuple[int, ...]]:
        return {x: b for b in self.blocks for x in b}

    def is_noncrossing(self) -> bool:
        return is_noncrossing(self)

    def to_text(self) -> str:
        """``13/2/467/5``; elements are comma-separated once ``n >= 10``."""
        if self.n == 0:
            return ""
        sep = "," if self.n >= 10 else ""
        return "/".join(sep.join(str(x) for x in b) for b in self.blocks)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "NCPartition":
        text = text.strip()
        if not text:
            return cls(n or 0, ())
        blocks = []
        for part in text.split("/"):
            part = part.strip()
            if "," in part or (n is not None and n >= 10):
                items = [int(x) for x in part.split(",") if x.strip()]
            else:
                items = [int(ch) for ch in part]
            blocks.append(tuple(items))
        size = max(x for b in blocks for x in b) if n is None else n
        return cls(size, tuple(blocks))

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self) -> str:
        return self.to_text()


def is_noncrossing(p: NCPartition) -> bool:
    """No arcs ``a < b < c < d`` with ``a, c`` and ``b, d`` in different blocks."""
    arcs = [(b[k], b[k + 1]) for b in p.blocks for k in range(len(b) - 1)]
    for a, c in arcs:
        for b, d in arcs:
            if a < b < c < d:
                return False
    return True


def enumerate_nc(n: int) -> Iterator[NCPartition]:
    """All noncrossing partitions of ``{1..n}``.

    Elements are placed left to right; the open blocks form a stack and a
    new element either starts a block or joins an open block, closing every
    block opened after it.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    assign = [0] * (n + 1)

    def place(x: int, stack: list[int], nblocks: int):
        if x > n:
            blocks: list[list[int]] = [[] for _ in range(nblocks)]
            for e in range(1, n + 1):
                blocks[assign[e]].append(e)
            yield NCPartition(n, tuple(tuple(b) for b in blocks))
            return
        assign[x] = nblocks
        yield from place(x + 1, stack + [nblocks], nblocks + 1)
        for depth in range(len(stack) - 1, -1, -1):
            assign[x] = stack[depth]
            yield from place(x + 1, stack[: depth + 1], nblocks)

    yield from place(1, [], 0)


# -- postorder trees ---------------------------------------------------


def tree_to_nc(t: PlaneTree) -> NCPartition:
    """Favorite-relative classes: maximal chains of first-born edges below the root."""
    n = t.size - 1
    head = {}
    for v in t.nonroot():
        head[v] = v
    for v in t.nonroot():
        par = t.parent(v)
        if par != t.root and t.children(par)[0] == v:
            head[v] = par
    blocks: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        top = v
        while head[top] != top:
            top = head[top]
        blocks.setdefault(top, []).append(v)
    return NCPartition(n, tuple(tuple(b) for b in blocks.values()))


def nc_to_tree(p: NCPartition) -> PlaneTree:
    """Inverse of :func:`tree_to_nc`; the root gets label ``n + 1``."""
    if not is_noncrossing(p):
        raise PartitionError(f"partition {p.to_text()} is crossing")
    n = p.n
    root = n + 1
    parent = {}
    block_of = p.block_of
    for b in p.blocks:
        for a, nxt in zip(b, b[1:]):
            parent[a] = nxt
        a = b[-1]
        chosen = root
        for cand in range(a + 1, n + 1):
            if block_of[cand][0] < a:
                chosen = cand
                break
        parent[a] = chosen
    children: dict[int, list[int]] = {v: [] for v in range(1, root + 1)}
    for v in range(1, n + 1):
        children[parent[v]].append(v)
    return PlaneTree.from_children(root, children)


def nc_statistic(p: NCPartition, d: int, i: int, j: int) -> int:
    """Elements of ``p`` (on ``{1..d-1}``) counted by the shelling statistic."""
    if p.n != d - 1:
        raise PartitionError(f"partition is on {{1..{p.n}}}, expected {{1..{d - 1}}}")
    if j >= d - 1:
        raise PartitionError("the statistic needs j < d - 1")
    m = 0
    for b in p.blocks:
        if len(b) == 1:
            v = b[0]
            if v <= i or v >= d - j:
                m += 1
            continue
        m += 1  # block minimum
        for v in b[1:]:
            if v >= d - j and (v != b[-1] or b[0] == 1):
                m += 1
    return m


def nonsingleton_blocks(p: NCPartition) -> int:
    return sum(1 for b in p.blocks if len(b) > 1)


def element_classes(p: NCPartition) -> dict[int, int | None]:
    """Per-element class matching the paren special types of the tree.

    ``0``: minimum of a nonsingleton block; ``1``: singleton; ``2``: not a
    block minimum, and not a block maximum unless the block contains 1.
    """
    out: dict[int, int | None] = {}
    for b in p.blocks:
        if len(b) == 1:
            out[b[0]] = 1
            continue
        out[b[0]] = 0
        for v in b[1:]:
            out[v] = 2 if (v != b[-1] or b[0] == 1) else None
    return out


# -- preorder trees ----------------------------------------------------


def kreweras(t: PlaneTree) -> NCPartition:
    """Sibling classes of a tree labelled in preorder (root 0, others 1..n)."""
    pre = preorder_labels(t)
    n = t.size - 1
    blocks = []
    for v in range(1, t.size + 1):
        kids = t.children(v)
        if kids:
            blocks.append(tuple(sorted(pre[c] for c in kids)))
    return NCPartition(n, tuple(blocks))


# -- fillers and weights -----------------------------------------------


def fillers(p: NCPartition) -> int:
    """Number of filler points of ``p``."""
    block_of = p.block_of
    count = 0
    for i in range(2, p.n + 1):
        bi = block_of[i]
        prev = block_of[i - 1]
        if bi == prev and bi[-1] == i:
            count += 1
        elif len(bi) == 1 and prev[-1] != i - 1:
            count += 1
    return count


def nc_weight(p: NCPartition, k: int) -> Polynomial:
    """Weight of ``p`` (a partition of ``{1..k-1}``) in the total ``P_k``."""
    if p.n != k - 1:
        raise PartitionError("partition size does not match k - 1")
    if all(len(b) == 1 for b in p.blocks):
        return (1 - one_minus_x_power(k)).divexact(Polynomial.x())
    m = fillers(p)
    if m < 1:
        raise ArithmeticError(f"partition {p.to_text()} has no filler")
    return Polynomial.monomial(m - 1)


def nc_weighted_P(k: int) -> Polynomial:
    """Total weight of all noncrossing partitions of ``{1..k-1}``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    total = Polynomial()
    for p in enumerate_nc(k - 1):
        total = total + nc_weight(p, k)
    return total


def histogram(values: Iterable[int]) -> list[int]:
    out: list[int] = []
    for v in values:
        if v >= len(out):
            out.extend([0] * (v + 1 - len(out)))
        out[v] += 1
    return out
