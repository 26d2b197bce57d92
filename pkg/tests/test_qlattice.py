import pytest

import genus_forge.qlattice as qlattice
from genus_forge.coord_ring import KElem, LaurentElem, parse_laurent
from genus_forge.elliptic import EllipticCurve, cosets_mod_2, enumerate_points
from genus_forge.field import ExtField, PrimeField
from genus_forge.ideals import transition_matrix_inverse
from genus_forge.poly import parse_poly
from genus_forge.qlattice import (
    GramMatrix,
    SplitForm,
    algorithm1,
    block_diag,
    congruence,
    congruence_by_inverse,
    diag_matrix,
    evaluate,
    hyperbolic_plane,
    is_regular,
    isotropy_search,
)

F3 = PrimeField(3)
F5 = PrimeField(5)
E5 = EllipticCurve(F5, 1, 0)
E3 = EllipticCurve(F3, 1, 0)


def laurent_diag(field, *texts):
    return diag_matrix([parse_laurent(field, s) for s in texts])


def test_gram_requires_symmetry():
    zero = KElem.from_poly(E5, 0)
    one = KElem.from_poly(E5, 1)
    with pytest.raises(ValueError):
        GramMatrix([[zero, one], [zero, zero]])


def test_hyperbolic_plane_golden():
    H = hyperbolic_plane(E5)
    assert H.render() == "[[0,1],[1,0]]"
    assert is_regular(H)
    v = (KElem.from_poly(E5, 1), KElem.from_poly(E5, 0))
    assert evaluate(H, v).is_zero()
    x = KElem.x(E5)
    y = KElem.y(E5)
    assert evaluate(H, (x, y)) == 2 * x * y


def test_evaluate_diagonal(rng):
    M = laurent_diag(F3, "1", "-1", "-t")
    t = LaurentElem.t(F3)
    one = LaurentElem.const(F3, 1)
    assert evaluate(M, (one, one, LaurentElem(F3, {}))).is_zero()
    for _ in range(50):
        v = [LaurentElem(F3, {rng.randrange(-2, 3): rng.randrange(3)}) for _ in range(3)]
        direct = v[0] * v[0] - v[1] * v[1] - t * v[2] * v[2]
        assert evaluate(M, v) == direct


def test_regularity():
    assert is_regular(laurent_diag(F3, "1", "1", "t"))
    assert not is_regular(laurent_diag(F3, "1", "1", "t+1"))
    assert not is_regular(diag_matrix([KElem.x(E5)]))
    assert is_regular(diag_matrix([KElem.from_poly(E5, 2)]))


def test_congruence_identity_fixes():
    M = laurent_diag(F3, "1", "-1", "-t")
    one = LaurentElem.const(F3, 1)
    zero = LaurentElem(F3, {})
    eye = [[one if i == j else zero for j in range(3)] for i in range(3)]
    assert congruence(M, eye) == M
    assert congruence_by_inverse(M, eye) == M


def test_congruence_diagonal_scaling():
    M = laurent_diag(F3, "1", "t")
    c = LaurentElem.t(F3)
    zero = LaurentElem(F3, {})
    one = LaurentElem.const(F3, 1)
    T = [[c, zero], [zero, one]]
    R = congruence(M, T)
    # first entry scales by c^{-2}
    assert R.entries[0][0] == LaurentElem(F3, {-2: 1})
    assert R.entries[1][1] == LaurentElem.t(F3)


def test_f9_congruence_maps_forms():
    F9 = ExtField(F3, (1, 0, 1))
    i = F9.gen
    minus_t = LaurentElem(F9, {1: -1})
    M = diag_matrix([LaurentElem.const(F9, 1), LaurentElem.const(F9, -1), minus_t])
    T = [
        [LaurentElem.const(F9, 1), LaurentElem(F9, {}), LaurentElem(F9, {})],
        [LaurentElem(F9, {}), LaurentElem.const(F9, i), LaurentElem(F9, {})],
        [LaurentElem(F9, {}), LaurentElem(F9, {}), LaurentElem.const(F9, -i)],
    ]
    R = congruence(M, T)
    expected = diag_matrix(
        [LaurentElem.const(F9, 1), LaurentElem.const(F9, 1), LaurentElem(F9, {1: 1})]
    )
    assert R == expected


def test_congruence_rejects_singular():
    M = laurent_diag(F3, "1", "t")
    zero = LaurentElem(F3, {})
    one = LaurentElem.const(F3, 1)
    with pytest.raises(ValueError):
        congruence(M, [[one, zero], [one, zero]])


def test_golden_sandwich_at_origin():
    A_inv = transition_matrix_inverse(E5.point(0, 0))
    H = hyperbolic_plane(E5)
    plane = congruence_by_inverse(H, A_inv)
    assert plane.render() == "[[2*x*y,-2*x^2-1],[-2*x^2-1,2*y]]"
    assert is_regular(plane)


def test_algorithm1_golden_f5():
    F0 = SplitForm(E5, diag_matrix([KElem.from_poly(E5, 1)]))
    classes = algorithm1(E5, F0, mode="mod2")
    assert len(classes) == 4
    by_point = {repr(P): M for P, M in classes}
    assert by_point["inf"].render() == "[[0,1,0],[1,0,0],[0,0,1]]"
    assert (
        by_point["(0,0)"].render()
        == "[[2*x*y,-2*x^2-1,0],[-2*x^2-1,2*y,0],[0,0,1]]"
    )


def test_algorithm1_counts_match_cosets():
    for p, a, b in ((3, 1, 0), (5, 1, 0), (5, 1, 2), (7, 3, 1)):
        E = EllipticCurve(PrimeField(p), a, b)
        F0 = SplitForm(E, diag_matrix([KElem.from_poly(E, 1)]))
        assert len(algorithm1(E, F0, mode="mod2")) == len(cosets_mod_2(E))
        assert len(algorithm1(E, F0, mode="full")) == len(enumerate_points(E))


def test_algorithm1_rank2():
    F0 = SplitForm(E3, None)
    assert F0.rank == 2
    classes = algorithm1(E3, F0, mode="full")
    assert len(classes) == 4
    for _, M in classes:
        assert M.n == 2
        assert is_regular(M)


def test_algorithm1_rejects_irregular_v0():
    F0 = SplitForm(E5, diag_matrix([KElem.x(E5)]))
    with pytest.raises(ValueError):
        algorithm1(E5, F0)
    with pytest.raises(ValueError):
        algorithm1(E5, SplitForm(E5, None), mode="other")


def test_block_diag_shapes():
    H = hyperbolic_plane(E5)
    V0 = diag_matrix([KElem.from_poly(E5, 1)])
    M = block_diag(H, V0)
    assert M.n == 3
    assert M.entries[2][2] == KElem.from_poly(E5, 1)
    assert block_diag(H, None) == H


def test_isotropy_basis_probe():
    H = hyperbolic_plane(E5)
    w = isotropy_search(H, 0)
    assert w == (KElem.from_poly(E5, 1), KElem.from_poly(E5, 0))


def test_isotropy_laurent_goldens():
    M = laurent_diag(F3, "1", "-1", "-t")
    w = isotropy_search(M, 3)
    one = LaurentElem.const(F3, 1)
    assert w == (one, one, LaurentElem(F3, {}))
    assert evaluate(M, w).is_zero()
    aniso = laurent_diag(F3, "1", "1", "t")
    assert isotropy_search(aniso, 1) is None


def test_isotropy_witness_evaluates_to_zero(rng):
    for texts in (("1", "-1"), ("t", "-t"), ("1", "2", "t")):
        M = laurent_diag(F3, *texts)
        w = isotropy_search(M, 2)
        if w is not None:
            assert evaluate(M, w).is_zero()


def test_isotropy_elliptic():
    M = diag_matrix([KElem.from_poly(E5, 1), KElem.from_poly(E5, -1)])
    w = isotropy_search(M, 1)
    assert w is not None
    assert evaluate(M, w).is_zero()


def test_mim_agrees_with_scan(monkeypatch):
    # force the meet-in-the-middle branch at levels the plain scan can check
    cases = [
        (("1", "-1", "-t"), True),
        (("1", "1", "t"), False),
        (("1", "-t", "t+1"), False),
        (("1", "2", "2*t"), True),
        (("t", "-t-1", "1"), True),
    ]
    for texts, expect in cases:
        M = laurent_diag(F3, *texts)
        slow = isotropy_search(M, 1)
        monkeypatch.setattr(qlattice, "SCAN_LIMIT", 10)
        fast_exists = [qlattice._mim_exists(M, k) for k in (0, 1)]
        monkeypatch.undo()
        assert (slow is not None) == any(fast_exists) == expect


def test_mim_rank2_empty_verdict():
    # x^2 = (t^2+1) y^2 has no solution; level 3 runs through the MIM kernel
    M = laurent_diag(F3, "1", "-t^2-1")
    assert isotropy_search(M, 3) is None


def test_oversized_non_mim_level_raises(monkeypatch):
    monkeypatch.setattr(qlattice, "SCAN_LIMIT", 100)
    M = diag_matrix([KElem.from_poly(E5, 1), KElem.from_poly(E5, 2)])
    with pytest.raises(ValueError):
        isotropy_search(M, 2)
