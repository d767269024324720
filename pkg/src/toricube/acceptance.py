"""Cross-model verification matrix.

Every criterion is a function of a :class:`Bounds` instance returning one
:class:`Check`.  The same code path backs ``toricube crosscheck`` and the
acceptance tests.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields, replace
from itertools import combinations, product
from typing import Callable

from . import kernels
from .cubical import (
    complex_f,
    cube_boundary,
    f_contrib,
    f_contrib_recursive,
    g_cube,
    grid_complexes,
    h_contrib,
    initial_contrib,
    initial_h_contrib,
    legal_types,
    shell_complex,
)
from .motzkin import (
    P_recursion,
    catalan_spec,
    g_recursion,
    morgan_voyce,
    motzkin_g,
    orthogonality_check,
    weighted_moment,
)
from .noncrossing import (
    enumerate_nc,
    fillers,
    histogram,
    nc_statistic,
    nc_to_tree,
    nc_weighted_P,
    nonsingleton_blocks,
    tree_to_nc,
)
from .polynomial import X, Polynomial, catalan, one_minus_x_power
from .poset import cube_face_lattice, stanley_f, stanley_g
from .trees import (
    BRACKET,
    PAREN,
    PlaneTree,
    count_forks,
    count_kind,
    decode_polish,
    encode_polish,
    enumerate_plane_trees,
    insert_marked_set,
    insert_type1,
    insert_type2,
    postorder_to_preorder,
    preorder_to_postorder,
    remove_vertex,
    remove_vertices,
    statistic_m,
    vertex_kind,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str
    counterexample: str | None = None

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Bounds:
    g_agree_d: int = 10
    g_poset_d: int = 7
    contrib_d: int = 10
    theorem_d: int = 8
    shell_cube_d: int = 5
    special_d: int = 12
    dehn_sommerville_d: int = 7
    duality_d: int = 6
    nonneg_d: int = 10
    bijection_n: int = 9
    insertion_n: int = 7
    eq14_n: int = 10
    g_recursion_k: int = 12
    moments_n: int = 12
    orthogonality_k: int = 8
    morgan_voyce_n: int = 15
    count_n: int = 12

    @classmethod
    def capped(cls, max_d: int | None) -> "Bounds":
        """Full bounds, each lowered to ``max_d`` when that is smaller."""
        full = cls()
        if max_d is None:
            return full
        if max_d < 1:
            raise ValueError("max_d must be at least 1")
        return replace(full, **{f.name: min(getattr(full, f.name), max_d) for f in fields(cls)})


class _Tally:
    """Counts sub-cases and keeps the first failure."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failure: tuple[str, Callable[[], object]] | None = None

    def expect(self, ok: bool, label: str, witness: Callable[[], object] = lambda: None) -> bool:
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = (label, witness)
        return ok

    def equal(self, got, want, label: str) -> bool:
        return self.expect(got == want, label, lambda: {"got": _show(got), "want": _show(want)})

    def check(self, scope: str) -> Check:
        if self.failure is None:
            return Check(self.name, True, f"{self.cases} cases; {scope}")
        label, witness = self.failure
        payload = {"case": label}
        extra = witness()
        if extra is not None:
            payload["witness"] = extra
        return Check(self.name, False, f"failed at {label} ({scope})", json.dumps(payload, sort_keys=True))


def _show(value):
    if isinstance(value, Polynomial):
        return value.to_text()
    if isinstance(value, PlaneTree):
        return value.polish()
    if isinstance(value, (list, tuple)):
        return [_show(v) for v in value]
    return value


def _poly(hist: list[int]) -> Polynomial:
    return Polynomial(hist)


def _reversed_hist(hist: list[int], d: int) -> Polynomial:
    """``sum_m hist[m] x^(d - m)``."""
    out = [0] * (d + 1)
    for m, c in enumerate(hist):
        if c:
            out[d - m] += c
    return Polynomial(out)


# -- criteria ------------------------------------------------------------


def five_way_g(b: Bounds) -> Check:
    t = _Tally("five-way g agreement")
    for d in range(b.g_agree_d + 1):
        want = g_cube(d, "gessel")
        t.equal(g_cube(d, "catalan"), want, f"d={d} catalan form")
        trees = list(enumerate_plane_trees(d + 1))
        t.equal(_poly(histogram(count_kind(x, 0, PAREN) for x in trees)), want, f"d={d} type-(0) vertices")
        t.equal(_poly(histogram(count_forks(x) for x in trees)), want, f"d={d} forks")
        parts = list(enumerate_nc(d))
        t.equal(_poly(histogram(nonsingleton_blocks(p) for p in parts)), want, f"d={d} nonsingleton blocks")
        t.equal(_poly(histogram(fillers(p) for p in parts)), want, f"d={d} fillers")
        t.equal(motzkin_g(d), want, f"d={d} motzkin transfer")
        t.equal(motzkin_g(d, "enumerate"), want, f"d={d} motzkin paths")
        t.equal(_poly(kernels.tree_histogram(d + 1, 0, 0, kernels.PAREN_STAT)), want, f"d={d} kernel type-(0)")
        t.equal(_poly(kernels.nc_histogram(d, d + 1, 0, 0, kernels.NC_BLOCKS)), want, f"d={d} kernel blocks")
        t.equal(_poly(kernels.nc_histogram(d, d + 1, 0, 0, kernels.NC_FILLERS)), want, f"d={d} kernel fillers")
        if d <= b.g_poset_d:
            t.equal(stanley_g(cube_face_lattice(d)), want, f"d={d} cube lattice")
    return t.check(f"d <= {b.g_agree_d}, lattice d <= {b.g_poset_d}")


def contribution_consistency(b: Bounds) -> Check:
    t = _Tally("contribution formula consistency")
    for d in range(1, b.contrib_d + 1):
        for i, j in legal_types(d):
            f = f_contrib(d, i, j)
            t.equal(f_contrib_recursive(d, i, j), f, f"f_{d}({i},{j}) recursive")
            t.equal(h_contrib(d, i, j).reverse(d), f, f"h_{d}({i},{j}) reversed")
        t.equal(initial_h_contrib(d).reverse(d), initial_contrib(d), f"d={d} first facet")
    return t.check(f"d <= {b.contrib_d}, every legal (i,j)")


def model_theorems(b: Bounds) -> Check:
    t = _Tally("tree and partition models of f_d(i,j)")
    for d in range(2, b.theorem_d + 1):
        trees = list(enumerate_plane_trees(d))
        parts = list(enumerate_nc(d - 1))
        for i, j in legal_types(d):
            if j >= d - 1:
                continue
            want = f_contrib(d, i, j)
            paren = _reversed_hist(histogram(statistic_m(x, d, i, j, PAREN) for x in trees), d)
            t.equal(paren, want, f"d={d} ({i},{j}) paren trees")
            if i >= 1:
                bracket = _reversed_hist(histogram(statistic_m(x, d, i, j, BRACKET) for x in trees), d)
                t.equal(bracket, want, f"d={d} ({i},{j}) bracket trees")
                t.equal(
                    _reversed_hist(kernels.tree_histogram(d, i, j, kernels.BRACKET_STAT), d),
                    want,
                    f"d={d} ({i},{j}) kernel bracket",
                )
            nc = _reversed_hist(histogram(nc_statistic(p, d, i, j) for p in parts), d)
            t.equal(nc, want, f"d={d} ({i},{j}) partitions")
            t.equal(
                _reversed_hist(kernels.tree_histogram(d, i, j, kernels.PAREN_STAT), d), want, f"d={d} ({i},{j}) kernel paren"
            )
            t.equal(
                _reversed_hist(kernels.nc_histogram(d - 1, d, i, j, kernels.NC_STAT), d),
                want,
                f"d={d} ({i},{j}) kernel partitions",
            )
    return t.check(f"d <= {b.theorem_d}, j < d-1; bracket scheme for i >= 1, paren and partitions for all")


def shelling_oracle(b: Bounds) -> Check:
    t = _Tally("shelling sum equals poset f")
    cases = [(f"cube boundary d={d}", *cube_boundary(d)) for d in range(1, b.shell_cube_d + 1)]
    cases += [(f"grid {name}", c, None) for name, c in grid_complexes().items()]
    for label, c, order in cases:
        shelling, total = shell_complex(c, order)
        t.equal(total, stanley_f(c.face_poset()), label)
        t.equal(complex_f(c), total, f"{label} without top removal")
    square, order = cube_boundary(2)
    shelling, total = shell_complex(square, order)
    t.equal(shelling.all_types(), [(0, 0), (1, 0), (1, 0), (0, 1)], "square boundary types")
    t.equal(total, Polynomial([1, 2, 1]), "square boundary total")
    return t.check(f"cube boundaries d <= {b.shell_cube_d} and {len(grid_complexes())} grid complexes")


def special_values(b: Bounds) -> Check:
    t = _Tally("special values and Eulerian symmetries")
    for d in range(1, b.special_d + 1):
        t.equal(initial_contrib(d), g_cube(d - 1).reverse(d), f"f_{d}(0,0) first facet")
        if d >= 2:
            t.equal(f_contrib(d, 0, 0), g_cube(d - 1).reverse(d), f"f_{d}(0,0)")
        t.equal(f_contrib(d, 0, d - 1), g_cube(d - 1), f"f_{d}(0,{d - 1})")
    for d in range(b.dehn_sommerville_d + 1):
        f = stanley_f(cube_face_lattice(d))
        t.equal(f.reverse(d), f, f"reverse-invariance d={d}")
    for d in range(b.duality_d + 1):
        lattice = cube_face_lattice(d)
        t.equal(stanley_f(lattice.with_new_top()).reverse(d + 1), stanley_g(lattice), f"duality d={d}")
    return t.check(
        f"d <= {b.special_d}; symmetry d <= {b.dehn_sommerville_d}; duality d <= {b.duality_d}"
    )


def nonnegativity(b: Bounds) -> Check:
    t = _Tally("h-contributions are nonnegative")
    for d in range(1, b.nonneg_d + 1):
        for i, j in legal_types(d):
            h = h_contrib(d, i, j)
            t.expect(all(c >= 0 for c in h.coeffs), f"h_{d}({i},{j})", lambda h=h: h.to_text())
        h0 = initial_h_contrib(d)
        t.expect(all(c >= 0 for c in h0.coeffs), f"d={d} first facet", lambda h0=h0: h0.to_text())
    return t.check(f"d <= {b.nonneg_d}, every legal (i,j)")


def _marked_sets(tree: PlaneTree):
    """Every set of bracket type 1/2 vertices (label >= 2) with its kinds."""
    eligible = [v for v in tree.nonroot() if v >= 2 and vertex_kind(tree, v, BRACKET) in (1, 2)]
    for k in range(len(eligible) + 1):
        for subset in combinations(eligible, k):
            yield subset, tuple(vertex_kind(tree, v, BRACKET) for v in subset)


def bijections(b: Bounds) -> Check:
    t = _Tally("bijection round trips")
    n_max = b.bijection_n
    for n in range(1, n_max + 1):
        for x in enumerate_plane_trees(n):
            word = encode_polish(x)
            t.equal(decode_polish(word), x, f"polish {word}")
            t.equal(PlaneTree.from_nested(x.to_nested()), x, f"nested {word}")
            y = preorder_to_postorder(x)
            t.equal(postorder_to_preorder(y), x, f"chain inverse {word}")
            t.equal(count_kind(y, 0, PAREN), count_forks(x), f"chain forks {word}")
    for n in range(n_max + 1):
        seen = set()
        for p in enumerate_nc(n):
            x = nc_to_tree(p)
            t.equal(tree_to_nc(x), p, f"partition {p.to_text()}")
            seen.add(x)
        t.equal(len(seen), catalan(n), f"tree images n={n}")
        for x in enumerate_plane_trees(n + 1):
            t.equal(nc_to_tree(tree_to_nc(x)), x, f"tree {x.polish()}")

    n_ins = b.insertion_n
    for n in range(1, n_ins):
        for x in enumerate_plane_trees(n):
            for p in range(1, n + 1):
                y = insert_type1(x, p)
                t.equal(remove_vertex(y, p), x, f"insert leaf {x.polish()} at {p}")
                if p >= 2:
                    t.equal(vertex_kind(y, p, BRACKET), 1, f"leaf kind {x.polish()} at {p}")
            for p in range(2, n + 1):
                y = insert_type2(x, p)
                t.equal(remove_vertex(y, p), x, f"insert fork {x.polish()} at {p}")
                t.equal(vertex_kind(y, p, BRACKET), 2, f"fork kind {x.polish()} at {p}")

    for size in range(1, n_ins + 1):
        owners: dict[tuple, PlaneTree] = {}
        for big in enumerate_plane_trees(size):
            for subset, kinds in _marked_sets(big):
                key = (remove_vertices(big, subset), subset, kinds)
                ok = t.expect(key not in owners, f"marked set collision at {big.polish()} {subset}")
                if ok:
                    owners[key] = big
                    t.equal(insert_marked_set(key[0], subset, kinds), big, f"reinsert into {big.polish()} {subset}")
        expected = 0
        for k in range(size):
            base = size - k
            if base < 1:
                continue
            positions = len(list(combinations(range(2, size), k)))
            expected += catalan(base - 1) * positions * 2**k
        t.equal(len(owners), expected, f"marked trees of size {size}")
    return t.check(f"n <= {n_max}; insertion n <= {n_ins}")


def denise_simion(b: Bounds) -> Check:
    t = _Tally("Denise-Simion chain")
    for n in range(b.eq14_n + 1):
        head = one_minus_x_power(n + 1)
        want = g_cube(n)
        t.equal(head + X * P_recursion(n + 1), want, f"n={n} recursive P")
        t.equal(head + X * nc_weighted_P(n + 1), want, f"n={n} partition-weighted P")
    for k in range(b.g_recursion_k + 1):
        t.equal(g_recursion(k), g_cube(k), f"g_{k} recursion")
    return t.check(
        f"n <= {b.eq14_n}; g-recursion k <= {b.g_recursion_k} with exponent k+1-i"
    )


def viennot_morgan_voyce(b: Bounds) -> Check:
    t = _Tally("moments and Morgan-Voyce polynomials")
    spec = catalan_spec(b.moments_n // 2 + 1)
    for n in range(b.moments_n + 1):
        t.equal(weighted_moment(n, spec), Polynomial([catalan(n)]), f"moment n={n}")
    for k, l in product(range(b.orthogonality_k + 1), repeat=2):
        if k > l:
            continue
        value = orthogonality_check(k, l)
        if k == l:
            t.expect(value != 0, f"p_{k}^2 moment vanishes")
        else:
            t.equal(value, 0, f"p_{k} p_{l}")
    for n in range(b.morgan_voyce_n + 1):
        t.equal(morgan_voyce(n, "b"), (-1) ** n * morgan_voyce(n, "p").substitute_affine(-1, 0), f"b_{n}")
    t.equal(motzkin_g(2), Polynomial([1, 1]), "level reading at n=2")
    return t.check(
        f"moments n <= {b.moments_n}; k, l <= {b.orthogonality_k}; b_n n <= {b.morgan_voyce_n}"
    )


def counting(b: Bounds) -> Check:
    t = _Tally("enumeration counts")
    for n in range(1, b.count_n + 1):
        t.equal(sum(1 for _ in enumerate_plane_trees(n)), catalan(n - 1), f"trees n={n}")
        t.equal(sum(kernels.tree_histogram(n, 0, 0, kernels.FORKS)), catalan(n - 1), f"kernel trees n={n}")
    for n in range(b.count_n + 1):
        t.equal(sum(1 for _ in enumerate_nc(n)), catalan(n), f"partitions n={n}")
        t.equal(sum(kernels.nc_histogram(n, n + 1, 0, 0, kernels.NC_BLOCKS)), catalan(n), f"kernel partitions n={n}")
    return t.check(f"n <= {b.count_n}")


CRITERIA: tuple[tuple[int, Callable[[Bounds], Check]], ...] = (
    (1, five_way_g),
    (2, contribution_consistency),
    (3, model_theorems),
    (4, shelling_oracle),
    (5, special_values),
    (6, nonnegativity),
    (7, bijections),
    (8, denise_simion),
    (9, viennot_morgan_voyce),
    (10, counting),
)


def run_criterion(number: int, bounds: Bounds | None = None) -> Check:
    fn = dict(CRITERIA)[number]
    check = fn(bounds or Bounds())
    return replace(check, name=f"{number}. {check.name}")


def _run_one(args):
    return run_criterion(*args)


def run_all(max_d: int | None = None, *, jobs: int = 1) -> list[Check]:
    """Every criterion in order; ``jobs > 1`` fans out over processes."""
    bounds = Bounds.capped(max_d)
    work = [(number, bounds) for number, _ in CRITERIA]
    if jobs <= 1:
        return [_run_one(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, work))
