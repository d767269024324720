import json
import threading

import pytest

from oracles import EMPTY, coeffs, cube_faces, face_leq, face_rank, g_cube_sym, naive_toric_f
from toricube.cubical import CubicalComplex, cube_boundary, single_cube, toric_h_and_g_of_complex
from toricube.polynomial import Polynomial
from toricube.poset import (
    GradedPoset,
    PosetError,
    cube_face_lattice,
    face_poset,
    is_eulerian,
    stanley_f,
    stanley_g,
    toric_g_from_f,
)


def chain(n: int) -> GradedPoset:
    return GradedPoset(list(range(n)), [(k, k + 1) for k in range(n - 1)], list(range(n)))


def test_segment_lattice_is_eulerian():
    assert is_eulerian(cube_face_lattice(1))


def test_chain_of_four_is_not_eulerian():
    assert not is_eulerian(chain(4))


def test_cube_lattice_minus_a_vertex_is_not_eulerian():
    lattice = cube_face_lattice(3)
    vertex = lattice.elements.index("000")
    keep = [e for e in range(lattice.size) if e != vertex]
    assert not is_eulerian(lattice.induced(keep))


def test_is_eulerian_needs_a_top():
    with pytest.raises(PosetError):
        is_eulerian(cube_face_lattice(2).without_top())


def test_cube_lattice_sizes_and_ranks():
    assert cube_face_lattice(0).size == 2
    assert cube_face_lattice(1).size == 4
    lattice = cube_face_lattice(3)
    assert lattice.size == 3**3 + 1
    assert lattice.elements[lattice.top] == "***"
    assert lattice.rank == 4
    assert is_eulerian(lattice)


def test_extra_top_above_the_cube_breaks_eulerianity():
    assert not is_eulerian(cube_face_lattice(3).with_new_top())


def test_stanley_f_examples():
    assert stanley_f(cube_face_lattice(1)) == Polynomial([1, 1])
    assert stanley_f(cube_face_lattice(2)) == Polynomial([1, 2, 1])
    point = GradedPoset(["0^"], [], [0])
    assert stanley_f(point) == Polynomial([1])


def test_stanley_g_examples():
    assert stanley_g(cube_face_lattice(2)) == Polynomial([1, 1])
    assert stanley_g(cube_face_lattice(1)) == Polynomial([1])
    assert stanley_g(cube_face_lattice(3)) == Polynomial([1, 4])


@pytest.mark.parametrize("d", range(8))
def test_stanley_g_matches_closed_form(d):
    assert list(stanley_g(cube_face_lattice(d)).coeffs) == coeffs(g_cube_sym(d))


@pytest.mark.parametrize("d", range(4))
def test_recurrence_matches_naive_oracle(d):
    faces = [EMPTY] + cube_faces(d)
    want = coeffs(naive_toric_f(faces, face_leq, face_rank))
    assert list(cube_face_lattice(d).toric_f().coeffs) == want


def test_boundary_face_poset_matches_naive_oracle():
    c, _ = cube_boundary(3)
    faces = [EMPTY] + c.faces()
    want = coeffs(naive_toric_f(faces, face_leq, face_rank))
    assert list(c.face_poset().toric_f().coeffs) == want


@pytest.mark.parametrize("d", range(8))
def test_dehn_sommerville(d):
    f = stanley_f(cube_face_lattice(d))
    assert f.reverse(d) == f


@pytest.mark.parametrize("d", range(7))
def test_f_g_duality(d):
    lattice = cube_face_lattice(d)
    assert stanley_f(lattice.with_new_top()).reverse(d + 1) == stanley_g(lattice)


def test_non_lower_eulerian_error_names_interval():
    with pytest.raises(PosetError, match=r"not lower Eulerian: interval \[0, 2\]"):
        chain(4).toric_f()


def test_rejects_bad_covers():
    with pytest.raises(PosetError, match="exactly one"):
        GradedPoset([0, 1], [(0, 1)], [0, 2])
    with pytest.raises(PosetError, match="unknown element"):
        GradedPoset([0, 1], [(0, 5)], [0, 1])
    with pytest.raises(PosetError, match="unique minimum"):
        GradedPoset([0, 1], [], [0, 0])


def test_face_poset_requires_closed_family():
    with pytest.raises(PosetError, match="not closed"):
        face_poset(["0*"])


def test_json_round_trip():
    lattice = cube_face_lattice(2)
    back = GradedPoset.from_json(json.dumps(lattice.to_json()))
    assert back.elements == lattice.elements
    assert back.toric_f() == lattice.toric_f()
    with pytest.raises(PosetError, match="covers"):
        GradedPoset.from_json({"elements": [], "ranks": []})


def test_toric_g_from_f_truncates():
    assert toric_g_from_f(Polynomial([1, 2, 1]), 2) == Polynomial([1, 1])
    assert toric_g_from_f(Polynomial([1, 1]), 1) == Polynomial([1])


def test_toric_h_of_complexes():
    square_boundary, _ = cube_boundary(2)
    h, g = toric_h_and_g_of_complex(square_boundary)
    assert h == Polynomial([1, 2, 1])
    assert g == Polynomial([1, 1])
    h, _ = toric_h_and_g_of_complex(single_cube(2))
    assert h == Polynomial([1, 1]) == stanley_g(cube_face_lattice(2))
    h, _ = toric_h_and_g_of_complex(single_cube(3))
    assert h == stanley_g(cube_face_lattice(3))


def test_empty_and_impure_complexes_are_rejected():
    with pytest.raises(ValueError):
        CubicalComplex(2, ())
    with pytest.raises(ValueError):
        CubicalComplex(2, ("**", "0*"))
    with pytest.raises(ValueError):
        CubicalComplex(3, ("0**", "00*"))


def test_concurrent_queries_agree():
    lattice = cube_face_lattice(5)
    want = cube_face_lattice(5).toric_f()
    out = []

    def work():
        out.append(lattice.toric_f(check=False))

    threads = [threading.Thread(target=work) for _ in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert out == [want] * 6
