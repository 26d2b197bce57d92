"""Tame residues, Witt invariants, and 2-torsion Brauer vectors.

The rank-3 Witt formula is cross-checked against two independent Clifford
models: an explicit 2x2 matrix representation over F_3(t)(sqrt(-t)), and a
generic structure-constant model of the full 8-dimensional algebra.  The
residue map is cross-checked against a conic point count over the residue
field, with the local reduction recomputed by Taylor shift on raw
coefficient lists.
"""

import itertools

import pytest

import genus_forge.brauer as brauer_mod
from genus_forge.brauer import (
    BrauerVector,
    QuaternionSymbol,
    brauer_class,
    enumerate_2Br,
    genus_report,
    residue,
    witt_invariant,
)
from genus_forge.field import PrimeField
from genus_forge.poly import (
    Place,
    Poly,
    RatFun,
    enumerate_places,
    parse_place,
    parse_ratfun,
)

F3 = PrimeField(3)
F5 = PrimeField(5)


def rat(F, text):
    return parse_ratfun(F, text)


def sym(F, a, b):
    return QuaternionSymbol(rat(F, a), rat(F, b))


def random_ratfun(rng, F, max_deg=3):
    def poly():
        while True:
            coeffs = [rng.randrange(F.p) for _ in range(rng.randint(1, max_deg + 1))]
            if any(coeffs):
                return Poly(F, coeffs)

    return RatFun(poly(), poly())


def symbol_places(s, bound=12):
    from genus_forge.poly import factor

    places = {Place.infinite(s.field)}
    for part in (s.a.num, s.a.den, s.b.num, s.b.den):
        if part.deg >= 1:
            for pi in factor(part, bound):
                places.add(Place.finite(pi))
    return places


def test_symbol_construction():
    s = sym(F3, "t", "t+1")
    assert s.field == F3
    assert s == sym(F3, "t", "t+1")
    assert s != sym(F3, "t", "t-1")
    with pytest.raises(ValueError):
        QuaternionSymbol(rat(F3, "0"), rat(F3, "t"))
    with pytest.raises(ValueError):
        QuaternionSymbol(rat(F3, "t"), rat(F5, "t"))


def test_residue_goldens():
    t_place = parse_place(F3, "t")
    inf = Place.infinite(F3)
    s = sym(F3, "-1", "-t")
    assert residue(s, t_place) == 1
    assert residue(s, inf) == 1
    split = sym(F3, "1", "t")
    for v in (t_place, inf, parse_place(F3, "t+1")):
        assert residue(split, v) == 0
    uu = sym(F3, "t", "t")
    assert residue(uu, t_place) == 1
    assert residue(uu, inf) == 1
    assert residue(uu, parse_place(F3, "t-1")) == 0
    # same shape over F_5 splits at t because -1 is a square there
    assert residue(sym(F5, "t", "t"), parse_place(F5, "t")) == 0


def test_residue_at_higher_degree_place():
    # t^2+1 is irreducible over F_3; the residue field is F_9
    v = parse_place(F3, "t^2+1")
    assert residue(sym(F3, "t^2+1", "t"), v) in (0, 1)
    assert residue(sym(F3, "1", "t^2+1"), v) == 0


def test_brauer_class_goldens():
    vec = brauer_class(sym(F3, "-1", "-t"))
    assert vec.to_json() == {"t": 1, "inf": 1}
    assert repr(vec) == "{t:1, inf:1}"
    assert brauer_class(sym(F3, "1", "-t")).is_zero()
    assert repr(brauer_class(sym(F3, "1", "t"))) == "{}"


def test_witt_goldens():
    one, t = rat(F3, "1"), rat(F3, "t")
    assert witt_invariant([one, -one, -t]) == QuaternionSymbol(one, -t)
    assert brauer_class(witt_invariant([one, -one, -t])).is_zero()
    assert witt_invariant([one, one, t]) == QuaternionSymbol(-one, -t)
    assert brauer_class(witt_invariant([one, one, t])).to_json() == {"t": 1, "inf": 1}
    assert witt_invariant([one, t]) == QuaternionSymbol(one, t)


def test_witt_rejects_bad_input():
    one, t = rat(F3, "1"), rat(F3, "t")
    with pytest.raises(ValueError):
        witt_invariant([one])
    with pytest.raises(ValueError):
        witt_invariant([one, t, one, t])
    with pytest.raises(ValueError):
        witt_invariant([one, rat(F3, "0")])
    with pytest.raises(ValueError):
        witt_invariant([1, 1, 1])


def test_brauer_vector_mechanics():
    tv = parse_place(F3, "t")
    u = parse_place(F3, "t+1")
    inf = Place.infinite(F3)
    with pytest.raises(ValueError):
        BrauerVector(F3, {tv})
    a = BrauerVector(F3, {tv, inf})
    b = BrauerVector(F3, {tv, u})
    assert (a + b).support == {u, inf}
    assert (a + a).is_zero()
    assert a[tv] == 1 and a[u] == 0
    assert a.supported_on([tv, inf, u])
    assert not b.supported_on([tv, inf])
    assert a.places() == [tv, inf]
    assert a.to_json([u, tv, inf]) == {"t": 1, "t+1": 0, "inf": 1}
    with pytest.raises(ValueError):
        a + BrauerVector(F5, set())


def test_reciprocity_seeded(rng):
    for F in (F3, F5):
        for _ in range(120):
            s = QuaternionSymbol(random_ratfun(rng, F), random_ratfun(rng, F))
            places = symbol_places(s)
            ones = {v for v in places if residue(s, v) == 1}
            assert len(ones) % 2 == 0
            assert brauer_class(s, max_deg=12).support == ones


def test_residue_bimultiplicative(rng):
    for F in (F3, F5):
        for _ in range(40):
            a1, a2, b = (random_ratfun(rng, F, 2) for _ in range(3))
            prod = QuaternionSymbol(a1 * a2, b)
            for v in symbol_places(prod) | symbol_places(QuaternionSymbol(a1, b)):
                lhs = residue(prod, v)
                rhs = residue(QuaternionSymbol(a1, b), v) ^ residue(
                    QuaternionSymbol(a2, b), v
                )
                assert lhs == rhs


def test_square_class_invariance(rng):
    for F in (F3, F5):
        for _ in range(40):
            a = random_ratfun(rng, F, 2)
            b = random_ratfun(rng, F, 2)
            c = random_ratfun(rng, F, 1)
            scaled = QuaternionSymbol(a * c * c, b)
            assert brauer_class(scaled, max_deg=12) == brauer_class(
                QuaternionSymbol(a, b), max_deg=12
            )


def test_witt_class_is_diagonal_order_invariant(rng):
    pool = ["1", "2", "t", "-t", "t+1", "t-1", "2*t", "t^2+1"]
    for F in (F3, F5):
        for _ in range(25):
            entries = [rat(F, rng.choice(pool)) for _ in range(3)]
            classes = {
                brauer_class(witt_invariant(perm), max_deg=12)
                for perm in itertools.permutations(entries)
            }
            assert len(classes) == 1


# --- independent Clifford oracles for the rank-3 formula -------------------


def _pair_mul(x, y, t):
    # (x0 + x1 s)(y0 + y1 s) with s^2 = -t
    return (x[0] * y[0] - t * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _mat_mul(A, B, t):
    def cell(i, j):
        p = _pair_mul(A[i][0], B[0][j], t)
        q = _pair_mul(A[i][1], B[1][j], t)
        return (p[0] + q[0], p[1] + q[1])

    return ((cell(0, 0), cell(0, 1)), ((cell(1, 0)), cell(1, 1)))


def _mat_scalar(c, F):
    z = rat(F, "0")
    return (((c, z), (z, z)), ((z, z), (c, z)))


def test_matrix_model_of_unit_form():
    # <1,1,t> over F_3(t), realized by 2x2 matrices over F_3(t)(s), s^2 = -t
    t = rat(F3, "t")
    one, z = rat(F3, "1"), rat(F3, "0")
    e1 = (((one, z), (z, z)), ((z, z), (-one, z)))
    e2 = (((z, z), (one, z)), ((one, z), (z, z)))
    e3 = (((z, z), (z, one)), ((z, -one), (z, z)))
    gens = (e1, e2, e3)
    squares = (one, one, t)
    for e, c in zip(gens, squares):
        assert _mat_mul(e, e, t) == _mat_scalar(c, F3)
    for i in range(3):
        for j in range(i + 1, 3):
            lhs = _mat_mul(gens[i], gens[j], t)
            rhs = _mat_mul(gens[j], gens[i], t)
            neg = tuple(tuple((-c0, -c1) for c0, c1 in row) for row in rhs)
            assert lhs == neg
    e12 = _mat_mul(e1, e2, t)
    e23 = _mat_mul(e2, e3, t)
    assert _mat_mul(e12, e12, t) == _mat_scalar(-one, F3)
    assert _mat_mul(e23, e23, t) == _mat_scalar(-t, F3)
    assert _mat_mul(e12, e23, t) == _mat_mul(e1, e3, t)
    # the even subalgebra is generated by a pair squaring to (-1, -t)
    assert witt_invariant([one, one, t]) == QuaternionSymbol(-one, -t)


def _cl_mul(u, v, d):
    # structure constants of the Clifford algebra of diag(d[1], d[2], d[3])
    out = {}
    for S, cs in u.items():
        for T, ct in v.items():
            coeff = cs * ct
            inversions = sum(1 for s_ in S for t_ in T if s_ > t_)
            if inversions % 2:
                coeff = -coeff
            for i in S & T:
                coeff = coeff * d[i]
            key = frozenset(S ^ T)
            acc = out.get(key)
            total = coeff if acc is None else acc + coeff
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
    return out


def _cl_basis(F):
    one = rat(F, "1")
    return [dict([(frozenset(S), one)]) for r in range(4)
            for S in itertools.combinations((1, 2, 3), r)]


def test_clifford_model_is_associative():
    d = {1: rat(F3, "t"), 2: rat(F3, "t+1"), 3: rat(F3, "2")}
    basis = _cl_basis(F3)
    for x in basis:
        for y in basis:
            xy = _cl_mul(x, y, d)
            for z in basis:
                assert _cl_mul(xy, z, d) == _cl_mul(x, _cl_mul(y, z, d), d)


def test_clifford_model_matches_witt_formula(rng):
    pool = ["1", "2", "t", "-t", "t+1", "t-1", "t^2+1"]
    for F in (F3, F5):
        for _ in range(20):
            a, b, c = (rat(F, rng.choice(pool)) for _ in range(3))
            d = {1: a, 2: b, 3: c}
            one = rat(F, "1")
            e12 = {frozenset({1, 2}): one}
            e23 = {frozenset({2, 3}): one}
            assert _cl_mul(e12, e12, d) == {frozenset(): -(a * b)}
            assert _cl_mul(e23, e23, d) == {frozenset(): -(b * c)}
            anti = _cl_mul(e12, e23, d)
            flip = _cl_mul(e23, e12, d)
            assert anti == {k: -v for k, v in flip.items()}
            w = witt_invariant([a, b, c])
            assert w.a == -(a * b) and w.b == -(b * c)


# --- conic oracle for degree-1 places ---------------------------------------


def _taylor_shift(coeffs, c, p):
    # coefficient list of f(t + c) over F_p, lowest degree first
    out = [0]
    for a in reversed(coeffs):
        nxt = [0] * (len(out) + 1)
        for i, x in enumerate(out):
            nxt[i + 1] = (nxt[i + 1] + x) % p
            nxt[i] = (nxt[i] + x * c) % p
        nxt[0] = (nxt[0] + a) % p
        out = nxt
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _shifted_unit(r, c, p):
    # valuation at t = c and the unit-part value there, from raw coefficients
    def split(poly):
        shifted = _taylor_shift(list(poly.coeffs), c, p)
        v = next(i for i, x in enumerate(shifted) if x)
        return v, shifted[v]

    vn, un = split(r.num)
    vd, ud = split(r.den)
    return vn - vd, (un * pow(ud, p - 2, p)) % p


def _conic_has_point(p, abar, bbar):
    for x in range(p):
        for y in range(p):
            for z in range(p):
                if (x, y, z) == (0, 0, 0):
                    continue
                if (abar * x * x + bbar * y * y - z * z) % p == 0:
                    return True
    return False


def test_conic_oracle_at_degree_one_places(rng):
    checked = 0
    for F in (F3, F5):
        for i in range(60):
            a = random_ratfun(rng, F, 2)
            b = random_ratfun(rng, F, 2)
            if i % 3 == 0:
                # force an even positive valuation at some t = c
                c0 = rng.randrange(F.p)
                shift = rat(F, "t") - c0
                a = a * shift * shift
            s = QuaternionSymbol(a, b)
            for c in range(F.p):
                va, ua = _shifted_unit(a, c, F.p)
                vb, ub = _shifted_unit(b, c, F.p)
                if va % 2 or vb % 2:
                    continue
                v = parse_place(F, f"t-{c}" if c else "t")
                assert residue(s, v) == 0
                assert _conic_has_point(F.p, ua, ub)
                checked += 1
    assert checked >= 100


def test_shifted_unit_agrees_with_place_reduction(rng):
    for F in (F3, F5):
        for _ in range(40):
            r = random_ratfun(rng, F, 3)
            c = rng.randrange(F.p)
            v = parse_place(F, f"t-{c}" if c else "t")
            val, unit = _shifted_unit(r, c, F.p)
            assert val == v.valuation(r)
            assert unit == v.reduce_unit(v.unit_part(r)).value


# --- counting ----------------------------------------------------------------


def test_enumerate_2br_counts():
    places = enumerate_places(3, 2)
    for k in range(1, 6):
        S = places[:k]
        vecs = enumerate_2Br(S)
        assert len(vecs) == 2 ** (k - 1)
        assert len(set(vecs)) == len(vecs)
        assert all(v.supported_on(S) for v in vecs)
        assert all(len(v.support) % 2 == 0 for v in vecs)
        assert sum(1 for v in vecs if v.is_zero()) == 1
    with pytest.raises(ValueError):
        enumerate_2Br([])
    with pytest.raises(ValueError):
        enumerate_2Br([Place.infinite(F3), Place.infinite(F5)])


def test_2br_is_closed_under_addition():
    S = enumerate_places(3, 1)
    vecs = enumerate_2Br(S)
    for a in vecs:
        for b in vecs:
            assert (a + b) in vecs


def test_genus_report_examples():
    inf5 = Place.infinite(F5)
    r = genus_report([inf5], rank=3, pic_order=4, pic_mod2=4, isotropic=True)
    assert r["genera"] == 1
    assert r["classes_per_genus"] == 4
    assert r["total_classes"] == 4
    assert r["hasse_principle"] is False
    assert r["places"] == ["inf"]

    S = [parse_place(F3, "t"), Place.infinite(F3)]
    r2 = genus_report(S, rank=3, pic_order=1, pic_mod2=1, isotropic=True)
    assert r2["genera"] == 2
    assert r2["classes_per_genus"] == 1
    assert r2["total_classes"] == 2
    assert r2["hasse_principle"] is True


def test_genus_report_rules():
    inf = Place.infinite(F3)
    anis = genus_report([inf], rank=3, pic_order=2)
    assert "classes_per_genus" not in anis and "total_classes" not in anis
    assert anis["hasse_principle"] is False
    with pytest.raises(ValueError):
        genus_report([inf], rank=5, pic_order=2)
    with pytest.raises(ValueError):
        genus_report([inf], rank=2, pic_order=1)
    with pytest.raises(ValueError):
        genus_report([], rank=3, pic_order=1)
    for n in range(1, 9):
        assert genus_report([inf], 3, n)["hasse_principle"] == (n % 2 == 1)


def test_brauer_class_error_paths(monkeypatch):
    s = sym(F3, "t^2-t", "1")
    monkeypatch.setattr(brauer_mod, "residue", lambda s, v: 1)
    with pytest.raises(RuntimeError):
        brauer_class(s)
    monkeypatch.undo()
    with pytest.raises(ValueError):
        brauer_class(sym(F3, "t^2+1", "t"), max_deg=1)
