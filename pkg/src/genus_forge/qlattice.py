"""Quadratic lattices as Gram matrices over the two supported rings, the
class-set generator (one congruence per 2-coset of the curve group), and a
bounded isotropy search.

Convention: q(v) = v.M.v^T with hyperbolic block [[0,1],[1,0]], matching the
printed matrices this library reproduces.
"""

from __future__ import annotations

from .coord_ring import KElem, LaurentElem, is_integral, is_unit, laurent_is_unit
from .elliptic import EllipticCurve, cosets_mod_2, enumerate_points
from .field import PrimeField
from .ideals import transition_matrix_inverse
from .poly import Poly

SCAN_LIMIT = 500_000


class GramMatrix:
    """Symmetric matrix of KElem or LaurentElem entries; q(v) = v.M.v^T."""

    __slots__ = ("entries", "ring", "base", "n")

    def __init__(self, entries):
        rows = tuple(tuple(r) for r in entries)
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise ValueError("entries must form a nonempty square matrix")
        first = rows[0][0]
        if isinstance(first, KElem):
            ring, base = "elliptic", first.curve
            ok = all(isinstance(e, KElem) and e.curve == base for r in rows for e in r)
        elif isinstance(first, LaurentElem):
            ring, base = "laurent", first.field
            ok = all(
                isinstance(e, LaurentElem) and e.field == base for r in rows for e in r
            )
        else:
            raise ValueError("entries must be KElem or LaurentElem")
        if not ok:
            raise ValueError("mixed entry rings")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix is not symmetric")
        self.entries = rows
        self.ring = ring
        self.base = base
        self.n = n

    def zero(self):
        if self.ring == "elliptic":
            return KElem.from_poly(self.base, 0)
        return LaurentElem(self.base)

    def one(self):
        if self.ring == "elliptic":
            return KElem.from_poly(self.base, 1)
        return LaurentElem.const(self.base, 1)

    def coerce(self, v):
        if isinstance(v, (KElem, LaurentElem)):
            return v
        if self.ring == "elliptic":
            return KElem.from_poly(self.base, v)
        return LaurentElem.const(self.base, v)

    def is_diagonal(self) -> bool:
        return all(
            not self.entries[i][j]
            for i in range(self.n)
            for j in range(self.n)
            if i != j
        )

    def det(self):
        return _det(self.entries, self.zero())

    def __eq__(self, other):
        return isinstance(other, GramMatrix) and other.entries == self.entries

    def __hash__(self):
        return hash(self.entries)

    def to_json(self):
        return [[e.to_json() for e in row] for row in self.entries]

    def render(self) -> str:
        rows = [
            "[" + ",".join(e.render() for e in row) + "]" for row in self.entries
        ]
        return "[" + ",".join(rows) + "]"

    def __repr__(self):
        return self.render()


def _det(rows, zero):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = zero
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [
            [rows[i][k] for k in range(n) if k != j] for i in range(1, n)
        ]
        term = rows[0][j] * _det(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def diag_matrix(entries) -> GramMatrix:
    es = list(entries)
    n = len(es)
    zero_like = None
    for e in es:
        if isinstance(e, (KElem, LaurentElem)):
            zero_like = e
            break
    if zero_like is None:
        raise ValueError("diagonal needs at least one ring element")
    if isinstance(zero_like, KElem):
        zero = KElem.from_poly(zero_like.curve, 0)
        es = [e if isinstance(e, KElem) else KElem.from_poly(zero_like.curve, e) for e in es]
    else:
        zero = LaurentElem(zero_like.field)
        es = [
            e if isinstance(e, LaurentElem) else LaurentElem.const(zero_like.field, e)
            for e in es
        ]
    return GramMatrix(
        [[es[i] if i == j else zero for j in range(n)] for i in range(n)]
    )


def hyperbolic_plane(E: EllipticCurve) -> GramMatrix:
    zero = KElem.from_poly(E, 0)
    one = KElem.from_poly(E, 1)
    return GramMatrix([[zero, one], [one, zero]])


def block_diag(A: GramMatrix, B: GramMatrix | None) -> GramMatrix:
    if B is None:
        return A
    if A.ring != B.ring or A.base != B.base:
        raise ValueError("mixed rings in block sum")
    zero = A.zero()
    n, m = A.n, B.n
    rows = []
    for i in range(n):
        rows.append(list(A.entries[i]) + [zero] * m)
    for i in range(m):
        rows.append([zero] * n + list(B.entries[i]))
    return GramMatrix(rows)


def evaluate(M: GramMatrix, v) -> object:
    """q(v) = v.M.v^T."""
    if len(v) != M.n:
        raise ValueError("vector length does not match the rank")
    vec = [M.coerce(x) for x in v]
    total = M.zero()
    for i in range(M.n):
        for j in range(M.n):
            total = total + vec[i] * M.entries[i][j] * vec[j]
    return total


def is_regular(M: GramMatrix) -> bool:
    d = M.det()
    if M.ring == "elliptic":
        return is_unit(d)
    return laurent_is_unit(d)


def _matrix_inverse(rows, zero, one):
    n = len(rows)
    aug = [list(rows[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = one / aug[col][col]
        aug[col] = [e * inv for e in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                m = aug[i][col]
                aug[i] = [a - m * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def congruence_by_inverse(M: GramMatrix, t_inv) -> GramMatrix:
    """(T^{-1})^T · M · T^{-1} for an explicitly given inverse."""
    rows = [list(r) for r in t_inv]
    n = M.n
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("transform size does not match the rank")
    out = []
    for i in range(n):
        out_row = []
        for j in range(n):
            acc = M.zero()
            for k in range(n):
                for l in range(n):
                    acc = acc + rows[k][i] * M.entries[k][l] * rows[l][j]
            out_row.append(acc)
        out.append(out_row)
    return GramMatrix(out)


def congruence(M: GramMatrix, T) -> GramMatrix:
    """T^{-t} · M · T^{-1}; T must be invertible over the fraction field."""
    rows = [list(r) for r in T]
    t_inv = _matrix_inverse(rows, M.zero(), M.one())
    return congruence_by_inverse(M, t_inv)


class SplitForm:
    """H(L0) ⊥ V0 over the coordinate ring of a curve; V0 = None means rank 2."""

    __slots__ = ("curve", "v0")

    def __init__(self, curve: EllipticCurve, v0: GramMatrix | None):
        if v0 is not None and (v0.ring != "elliptic" or v0.base != curve):
            raise ValueError("V0 must live over the curve's coordinate ring")
        self.curve = curve
        self.v0 = v0

    @property
    def rank(self) -> int:
        return 2 + (self.v0.n if self.v0 is not None else 0)

    def matrix(self) -> GramMatrix:
        return block_diag(hyperbolic_plane(self.curve), self.v0)


def algorithm1(E: EllipticCurve, F0: SplitForm, mode: str = "mod2"):
    """One Gram matrix per 2-coset (mode mod2) or per point (mode full).

    Each output is the hyperbolic block conjugated by the transition matrix
    of m_P, padded back with V0; integrality and regularity of every output
    are re-verified before returning.
    """
    if F0.curve != E:
        raise ValueError("form and curve do not match")
    if mode not in ("mod2", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    F0_mat = F0.matrix()
    if not is_regular(F0_mat):
        raise ValueError("F0 is not regular")
    points = cosets_mod_2(E) if mode == "mod2" else enumerate_points(E)
    H = hyperbolic_plane(E)
    out = []
    for P in points:
        if P.is_infinity:
            FP = F0_mat
        else:
            a_inv = transition_matrix_inverse(P)
            plane = congruence_by_inverse(H, a_inv)
            FP = block_diag(plane, F0.v0)
        for row in FP.entries:
            for e in row:
                if not is_integral(e):
                    raise RuntimeError(f"non-integral output entry at {P}: {e}")
        if not is_regular(FP):
            raise RuntimeError(f"non-regular output at {P}")
        out.append((P, FP))
    return out


def isotropy_search(M: GramMatrix, deg_bound: int = 3):
    """First isotropic vector in a fixed deterministic order, or None.

    Candidates are primitive up to units: scalar-normalized so the first
    nonzero coefficient is 1, and (Laurent) shifted so the least exponent in
    the support is 0.  Levels k = 0..deg_bound are scanned in order; a level too
    large to enumerate is decided by a meet-in-the-middle existence check
    (diagonal Laurent forms of rank 2 or 3), falling back to the ordered scan
    only when a witness is known to exist.
    """
    n = M.n
    # basis probe: a zero diagonal entry is already a witness
    for i in range(n):
        if not M.entries[i][i]:
            return tuple(M.one() if j == i else M.zero() for j in range(n))
    for k in range(deg_bound + 1):
        q = M.base.order if hasattr(M.base, "order") else M.base.field.order
        slots = (2 * k + 1) if M.ring == "laurent" else 2 * (k + 1)
        space = q ** (slots * n)
        if space <= SCAN_LIMIT:
            w = _scan_level(M, k)
            if w is not None:
                return w
            continue
        if (
            M.ring == "laurent"
            and M.is_diagonal()
            and n in (2, 3)
            and isinstance(M.base, PrimeField)
        ):
            if _mim_exists(M, k):
                w = _scan_level(M, k)
                if w is not None:
                    return w
                raise RuntimeError("witness detected but not found by the scan")
            continue
        raise ValueError(
            f"no isotropic vector up to degree {k - 1}; "
            f"degree {k} is too large for exhaustive search on this form"
        )
    return None


def _scan_level(M: GramMatrix, k: int):
    """Lexicographic scan of canonical vectors at level k."""
    n = M.n
    field = M.base if M.ring == "laurent" else M.base.field
    elems = list(field.elements())
    q = len(elems)
    if M.ring == "laurent":
        L = 2 * k + 1  # exponents 0..2k, least used exponent must be 0
    else:
        L = 2 * (k + 1)  # a, b coefficient slots
    width = L * n
    total = q**width
    for idx in range(1, total):
        digits = []
        rem = idx
        for _ in range(width):
            digits.append(rem % q)
            rem //= q
        digits.reverse()  # big-endian: entry 0 slot 0 first
        first = next(d for d in digits if d)
        if first != 1:
            continue
        per_entry = [digits[i * L : (i + 1) * L] for i in range(n)]
        if M.ring == "laurent":
            if not any(e[0] for e in per_entry):
                continue
            vec = tuple(
                LaurentElem(field, {j: elems[d] for j, d in enumerate(e) if d})
                for e in per_entry
            )
        else:
            half = L // 2
            vec = tuple(
                KElem(
                    M.base,
                    Poly(field, [elems[d].value for d in e[:half]]),
                    Poly(field, [elems[d].value for d in e[half:]]),
                )
                for e in per_entry
            )
        if not evaluate(M, vec):
            return vec
    return None


def _mim_exists(M: GramMatrix, k: int) -> bool:
    """Does a (possibly imprimitive) isotropic vector exist at level k?

    Diagonal Laurent forms only: split d1 v1^2 + d2 v2^2 = -d3 v3^2 and
    intersect packed coefficient arrays of both sides.
    """
    import numpy as np

    field = M.base
    p = field.p
    diag = [M.entries[i][i] for i in range(M.n)]
    exps = [sorted(d.coeffs) for d in diag]
    lo = min(-2 * k + e[0] for e in exps)
    hi = max(2 * k + e[-1] for e in exps)
    W = hi - lo + 1
    if p**W > 2**62:
        raise ValueError("coefficient window too large to pack")
    slots = 2 * k + 1
    N = p**slots
    idx = np.arange(N, dtype=np.int64)
    D = np.empty((N, slots), np.int16)
    for j in range(slots):
        D[:, j] = (idx // p**j) % p
    # squares of every candidate entry, exponents -2k .. 2k
    S = np.zeros((N, 2 * slots - 1), np.int32)
    for i in range(slots):
        for j in range(slots):
            S[:, i + j] += D[:, i] * D[:, j]
    S %= p
    embedded = []
    for d in diag:
        E = np.zeros((N, W), np.int32)
        off = -2 * k - lo
        for e, c in d.coeffs.items():
            E[:, off + e : off + e + 2 * slots - 1] += c.value * S
        embedded.append(E % p)
    pw = p ** np.arange(W, dtype=np.int64)
    if M.n == 2:
        k1 = (embedded[0].astype(np.int64) @ pw)[1:]
        k2 = (((-embedded[1]) % p).astype(np.int64) @ pw)[1:]
        k1.sort()
        pos = np.searchsorted(k1, k2)
        pos = np.clip(pos, 0, len(k1) - 1)
        return bool(np.any(k1[pos] == k2))
    # rank 3: A = all pairwise sums of the first two, B = minus the third
    A = np.empty(N * N, np.int64)
    E1, E2 = embedded[0], embedded[1]
    for i in range(N):
        block = (E1[i] + E2) % p
        A[i * N : (i + 1) * N] = block.astype(np.int64) @ pw
    A.sort()
    # v3 = 0 needs a nontrivial pair summing to zero; the all-zero pair packs to 0
    left = np.searchsorted(A, 0, side="left")
    right = np.searchsorted(A, 0, side="right")
    if right - left > 1:
        return True
    B = (((-embedded[2]) % p).astype(np.int64) @ pw)[1:]
    pos = np.searchsorted(A, B)
    pos = np.clip(pos, 0, len(A) - 1)
    return bool(np.any(A[pos] == B))
