import pytest

from oracles import coeffs, g_cube_sym
from toricube.cubical import g_cube
from toricube.motzkin import (
    MomentSpec,
    MotzkinPath,
    P_recursion,
    PathError,
    catalan_spec,
    enumerate_motzkin,
    g_recursion,
    moment_functional,
    morgan_voyce,
    motzkin_g,
    orthogonality_check,
    s_statistic,
    weighted_moment,
)
from toricube.polynomial import ONE, X, Polynomial, catalan, evaluate, one_minus_x_power


def test_enumeration_examples():
    assert [p.steps for p in enumerate_motzkin(0)] == [""]
    assert sorted(p.steps for p in enumerate_motzkin(2)) == ["UD", "rr"]
    assert sum(1 for _ in enumerate_motzkin(3)) == 5


@pytest.mark.parametrize("n", range(0, 11))
def test_path_count_is_catalan(n):
    paths = [p.steps for p in enumerate_motzkin(n)]
    assert len(paths) == len(set(paths)) == catalan(n)


@pytest.mark.parametrize("steps, message", [("b", "blue"), ("DU", "below"), ("U", "return"), ("Ux", "unknown")])
def test_path_validation(steps, message):
    with pytest.raises(PathError, match=message):
        MotzkinPath(steps)


def test_levels():
    assert MotzkinPath("UbrD").levels() == [0, 1, 1, 1]


def test_s_statistic_examples():
    assert s_statistic(MotzkinPath("UD")) == 1
    assert s_statistic(MotzkinPath("rr")) == 0
    assert s_statistic(MotzkinPath("UrD")) == 1
    assert s_statistic(MotzkinPath("UbrbD")) == 2


def test_motzkin_g_examples():
    assert motzkin_g(2) == Polynomial([1, 1])
    assert motzkin_g(3) == Polynomial([1, 4])
    with pytest.raises(ValueError):
        motzkin_g(2, "other")


@pytest.mark.parametrize("n", range(0, 12))
def test_motzkin_g_two_routes_match_g_cube(n):
    want = coeffs(g_cube_sym(n))
    assert list(motzkin_g(n, "enumerate").coeffs) == want
    assert list(motzkin_g(n).coeffs) == want


@pytest.mark.parametrize("n", range(0, 15))
def test_motzkin_g_at_one_is_catalan(n):
    assert evaluate(motzkin_g(n), 1) == catalan(n)


def test_abscissa_reading_would_give_two_plus_t():
    # weighting level steps by their x-coordinate instead of their height
    total = Polynomial()
    for p in enumerate_motzkin(2):
        total = total + Polynomial.monomial(s_statistic(p))
    assert total == Polynomial([1, 1])
    assert Polynomial([2, 1]) != motzkin_g(2)


@pytest.mark.parametrize("k", range(0, 13))
def test_g_recursion_matches_g_cube(k):
    assert g_recursion(k) == g_cube(k)


def test_g_recursion_examples():
    assert g_recursion(1) == ONE
    assert g_recursion(2) == Polynomial([1, 1])


def test_k_minus_i_exponent_gives_wrong_g1():
    assert g_recursion(1, offset=0) == Polynomial([1, -1])
    assert g_recursion(1, offset=0) != g_cube(1)


def test_p_recursion_examples():
    assert P_recursion(1) == ONE
    assert P_recursion(2) == Polynomial([2, -1])
    with pytest.raises(ValueError):
        P_recursion(0)


@pytest.mark.parametrize("k", range(1, 13))
def test_p_recursion_relation(k):
    assert one_minus_x_power(k) + X * P_recursion(k) == g_cube(k - 1)


def test_morgan_voyce_examples():
    assert morgan_voyce(0, "b") == ONE
    assert morgan_voyce(1, "b") == X + 1
    assert morgan_voyce(2, "b") == Polynomial([1, 3, 1])
    assert morgan_voyce(1, "p") == X - 1
    with pytest.raises(ValueError):
        morgan_voyce(2, "q")


@pytest.mark.parametrize("n", range(0, 16))
def test_morgan_voyce_sign_relation(n):
    assert morgan_voyce(n, "b") == (-1) ** n * morgan_voyce(n, "p").substitute_affine(-1, 0)


@pytest.mark.parametrize("n", range(0, 13))
def test_catalan_moments(n):
    assert weighted_moment(n, catalan_spec(n // 2 + 1)) == Polynomial([catalan(n)])


def test_moment_edge_cases():
    zero_b = MomentSpec(b=[0] * 6, lam=[0] + [1] * 5)
    for k in range(4):
        assert weighted_moment(2 * k + 1, zero_b).is_zero()
    assert weighted_moment(2, zero_b) == ONE
    assert weighted_moment(4, zero_b) == Polynomial([2])


def test_polynomial_weights():
    spec = MomentSpec(b=[X, X + 1, X + 1], lam=[0, X, X])
    # paths of length 2: level-level, up-down
    assert weighted_moment(2, spec) == X * X + X


def test_short_spec_is_rejected():
    with pytest.raises(PathError, match="too short"):
        weighted_moment(6, catalan_spec(1))


def test_moment_functional_is_linear():
    spec = catalan_spec(4)
    p = Polynomial([3, 0, 2])
    assert moment_functional(p, spec) == Polynomial([3 * 1 + 2 * 2])


def test_orthogonality_examples():
    assert orthogonality_check(0, 1) == 0
    assert orthogonality_check(1, 2) == 0


@pytest.mark.parametrize("k", range(0, 9))
def test_orthogonality(k):
    for l in range(0, 9):
        value = orthogonality_check(k, l)
        assert (value == 0) == (k != l)
