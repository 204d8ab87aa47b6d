"""Matrix-deformed Hermite families, their level representation matrices,
dual (biorthogonal) families, eigenvalue structure, and the intertwiner
between monomials and Hermite polynomials.

A deformation is an invertible 2x2 complex matrix g.  It replaces the two
raising operators by the linear combinations

    R1 = g11 ad1 + g21 ad2,     R2 = g12 ad1 + g22 ad2,

and the deformed polynomials are Hg[k,l] = R1^k R2^l applied to 1.  Each
total degree L spans an (L+1)-dimensional invariant subspace on which the
action has the closed-form matrix M(g, L); column k of M(g, L) holds the
coordinates of Hg[k, L-k] over the undeformed basis [H[r, L-r]]_r.
"""

from __future__ import annotations

import cmath
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .coeffs import Coeff
from .hermite import hermite_sum, normalizer_sq, SeriesTruncation
from .linalg import identity_matrix, mat_equal, mat_inverse, mat_mul
from .poly import BiPoly, inner_product
from .report import Report
from .weyl import WeylOp

__all__ = [
    "GL2",
    "RepMatrix",
    "LevelBasis",
    "DualFamily",
    "deformed_raising",
    "deformed_lowering",
    "deformed_hermite",
    "deformed_generating_series",
    "rep_matrix",
    "rep_action_check",
    "level_basis",
    "dual_family",
    "biorthogonality_check",
    "dual_matrix_scaling_check",
    "eigenvalue_structure_check",
    "monomial_to_hermite",
    "intertwine_check",
]


class GL2:
    """Invertible 2x2 complex matrix; rejects singular input at construction."""

    __slots__ = ("g11", "g12", "g21", "g22")

    def __init__(self, g11, g12, g21, g22):
        self.g11 = Coeff.lift(g11)
        self.g12 = Coeff.lift(g12)
        self.g21 = Coeff.lift(g21)
        self.g22 = Coeff.lift(g22)
        if not self.det:
            raise ValueError("matrix is singular")

    @property
    def det(self) -> Coeff:
        return self.g11 * self.g22 - self.g12 * self.g21

    @classmethod
    def identity(cls, exact=True):
        one, zero = Coeff(1, exact=exact), Coeff(0, exact=exact)
        return cls(one, zero, zero, one)

    @classmethod
    def diagonal(cls, l1, l2):
        return cls(l1, 0, 0, l2)

    def entries(self):
        return (self.g11, self.g12, self.g21, self.g22)

    def rows(self):
        return [[self.g11, self.g12], [self.g21, self.g22]]

    def inverse(self) -> GL2:
        d = self.det.inverse()
        return GL2(self.g22 * d, -self.g12 * d, -self.g21 * d, self.g11 * d)

    def conj_transpose(self) -> GL2:
        return GL2(self.g11.conj(), self.g21.conj(), self.g12.conj(), self.g22.conj())

    def __matmul__(self, other: GL2) -> GL2:
        return GL2(
            self.g11 * other.g11 + self.g12 * other.g21,
            self.g11 * other.g12 + self.g12 * other.g22,
            self.g21 * other.g11 + self.g22 * other.g21,
            self.g21 * other.g12 + self.g22 * other.g22,
        )

    def __eq__(self, other):
        return isinstance(other, GL2) and self.entries() == other.entries()

    def is_exact(self) -> bool:
        return all(c.exact for c in self.entries())

    def to_numpy(self):
        return np.array([[c.to_complex() for c in row] for row in self.rows()])

    def __repr__(self):
        g = self.entries()
        return f"GL2([[{g[0]}, {g[1]}], [{g[2]}, {g[3]}]])"


class RepMatrix:
    """(L+1)x(L+1) matrix acting on one level of the Hermite decomposition."""

    __slots__ = ("L", "entries")

    def __init__(self, L: int, entries):
        if len(entries) != L + 1 or any(len(r) != L + 1 for r in entries):
            raise ValueError("entry grid must be (L+1) x (L+1)")
        self.L = L
        self.entries = [[Coeff.lift(c) for c in row] for row in entries]

    @classmethod
    def identity(cls, L: int, exact=True):
        return cls(L, identity_matrix(L + 1, exact))

    def __getitem__(self, rk):
        r, k = rk
        return self.entries[r][k]

    def __matmul__(self, other: RepMatrix) -> RepMatrix:
        if self.L != other.L:
            raise ValueError("level mismatch")
        return RepMatrix(self.L, mat_mul(self.entries, other.entries))

    def inverse(self) -> RepMatrix:
        return RepMatrix(self.L, mat_inverse(self.entries))

    def conj_transpose(self) -> RepMatrix:
        n = self.L + 1
        return RepMatrix(self.L, [[self.entries[k][r].conj() for k in range(n)] for r in range(n)])

    def adjoint(self) -> RepMatrix:
        """Adjoint with respect to the level inner product.

        The level basis is orthogonal but not normalized (the k-th vector has
        squared norm w_k = k!(L-k)!), so the adjoint matrix is the conjugate
        transpose with exact weights: out[r][k] = conj(self[k][r]) * w_k/w_r.
        For L >= 2 this differs from the plain conjugate transpose.
        """
        n = self.L + 1
        w = [normalizer_sq(k, self.L - k) for k in range(n)]
        return RepMatrix(
            self.L,
            [
                [self.entries[k][r].conj() * Fraction(w[k], w[r]) for k in range(n)]
                for r in range(n)
            ],
        )

    def scaled(self, s) -> RepMatrix:
        s = Coeff.lift(s)
        return RepMatrix(self.L, [[c * s for c in row] for row in self.entries])

    def __eq__(self, other):
        return (
            isinstance(other, RepMatrix)
            and self.L == other.L
            and mat_equal(self.entries, other.entries)
        )

    def close_to(self, other: RepMatrix, tol: float) -> bool:
        return self.L == other.L and mat_equal(self.entries, other.entries, tol)

    def is_identity(self) -> bool:
        return self == RepMatrix.identity(self.L, exact=all(c.exact for r in self.entries for c in r))

    def diagonal(self):
        return [self.entries[k][k] for k in range(self.L + 1)]

    def to_numpy(self):
        return np.array([[c.to_complex() for c in row] for row in self.entries])

    def to_json(self):
        return {
            "L": self.L,
            "rows": [[c.to_json_value() for c in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj) -> RepMatrix:
        return cls(obj["L"], [[Coeff.from_json_value(c) for c in row] for row in obj["rows"]])

    def __repr__(self):
        return f"RepMatrix(L={self.L}, {[[str(c) for c in row] for row in self.entries]})"


def deformed_raising(g: GL2) -> tuple[WeylOp, WeylOp]:
    """The two deformed raising operators (columns of g against ad1, ad2)."""
    ad1, ad2 = WeylOp.adag(1), WeylOp.adag(2)
    return ad1 * g.g11 + ad2 * g.g21, ad1 * g.g12 + ad2 * g.g22


def deformed_lowering(g: GL2) -> tuple[WeylOp, WeylOp]:
    """Formal adjoints of the deformed raising pair.

    Kept as pure lowering combinations so both deformed annihilators kill the
    constant polynomial; swapping in a raising term for the cross mode would
    break that.
    """
    a1, a2 = WeylOp.a(1), WeylOp.a(2)
    return a1 * g.g11.conj() + a2 * g.g21.conj(), a1 * g.g12.conj() + a2 * g.g22.conj()


def deformed_hermite(g: GL2, k: int, l: int) -> BiPoly:
    """Scaled deformed polynomial Hg[k,l] = R1^k R2^l applied to 1."""
    r1, r2 = deformed_raising(g)
    return (r1**k * r2**l).apply(BiPoly.one(exact=g.is_exact()))


def deformed_generating_series(g: GL2, N: int) -> SeriesTruncation:
    """Truncation of exp((g11 u + g12 ub) z + (g21 u + g22 ub) zbar
    - (g11 u + g12 ub)(g21 u + g22 ub)); coefficient (k, l) times k!*l!
    is Hg[k,l]."""
    z, zbar, one = BiPoly.z(), BiPoly.zbar(), BiPoly.one()
    seed = SeriesTruncation(
        N,
        {
            (1, 0): z * g.g11 + zbar * g.g21,
            (0, 1): z * g.g12 + zbar * g.g22,
            (2, 0): one * (-(g.g11 * g.g21)),
            (1, 1): one * (-(g.g11 * g.g22 + g.g12 * g.g21)),
            (0, 2): one * (-(g.g12 * g.g22)),
        },
        BiPoly.one(),
    )
    return seed.exp()


def rep_matrix(g: GL2, L: int) -> RepMatrix:
    """Closed-form level-L matrix M(g, L).

    M[r,k] = sum_q C(k,q) C(L-k, r-q) g11^q g21^(k-q) g12^(r-q) g22^(L-k+q-r),
    the coefficient of s^r t^(L-r) in (g11 s + g21 t)^k (g12 s + g22 t)^(L-k).
    """
    if L < 0:
        raise ValueError("level must be nonnegative")
    g11, g12, g21, g22 = g.entries()
    exact = g.is_exact()
    rows = []
    for r in range(L + 1):
        row = []
        for k in range(L + 1):
            acc = Coeff(0, exact=exact)
            for q in range(max(0, r + k - L), min(r, k) + 1):
                w = (
                    (g11**q)
                    * (g21 ** (k - q))
                    * (g12 ** (r - q))
                    * (g22 ** (L - k + q - r))
                )
                acc = acc + w * (comb(k, q) * comb(L - k, r - q))
            row.append(acc)
        rows.append(row)
    return RepMatrix(L, rows)


@dataclass
class LevelBasis:
    """Level-L family in the conventional order [(L,0), (L-1,1), ..., (0,L)].

    polys holds the scaled H (or Hg) polynomials; norm_sq the factors m!*n!
    whose square roots normalize them.
    """

    L: int
    indices: list
    polys: list
    norm_sq: list


def level_basis(L: int, g: GL2 | None = None) -> LevelBasis:
    indices = [(L - j, j) for j in range(L + 1)]
    if g is None:
        polys = [hermite_sum(m, n) for m, n in indices]
    else:
        polys = [deformed_hermite(g, m, n) for m, n in indices]
    return LevelBasis(L, indices, polys, [normalizer_sq(m, n) for m, n in indices])


def _coeff_equal(a: Coeff, b: Coeff, tol: float) -> bool:
    if tol == 0.0:
        return a == b
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def _poly_equal(p: BiPoly, q: BiPoly, tol: float) -> bool:
    if tol == 0.0:
        return p == q
    return (p - q).max_abs() <= tol * max(1.0, p.max_abs(), q.max_abs())


def rep_action_check(g: GL2, L: int, tol: float = 0.0) -> Report:
    """Certify the index convention: expanding each deformed Hg[k, L-k] over
    the undeformed scaled basis reproduces column k of M(g, L).

    Coordinates are taken with exact inner products, coord_r =
    <H[r, L-r], Hg[k, L-k]> / (r! (L-r)!), and the expansion must also
    reconstruct the polynomial exactly (level invariance)."""
    M = rep_matrix(g, L)
    basis = [hermite_sum(r, L - r) for r in range(L + 1)]
    mismatches = []
    for k in range(L + 1):
        hg = deformed_hermite(g, k, L - k)
        recon = BiPoly.zero()
        for r in range(L + 1):
            coord = inner_product(basis[r], hg) / normalizer_sq(r, L - r)
            if not _coeff_equal(coord, M[r, k], tol):
                mismatches.append(
                    {"r": r, "k": k, "coordinate": str(coord), "matrix_entry": str(M[r, k])}
                )
            recon = recon + basis[r] * coord
        if not _poly_equal(recon, hg, tol):
            mismatches.append({"k": k, "error": "expansion does not close within the level"})
    status = "pass" if not mismatches else "fail"
    return Report(
        status,
        f"level-{L} matrix action: {status}",
        {
            "L": L,
            "index_convention": (
                "column k of M(g,L) = coordinates of deformed H[k, L-k] over "
                "[H[r, L-r]]_r; position j of the conventional level list "
                "[(L,0), ..., (0,L)] corresponds to matrix index L-j"
            ),
            "mismatches": mismatches,
            "status": status,
        },
    )


@dataclass
class DualFamily:
    """Level-L dual family, built from the inverse conjugate-transpose matrix."""

    L: int
    g_dual: GL2
    basis: LevelBasis
    matrix_direct: RepMatrix
    matrix_inverse_route: RepMatrix

    @property
    def consistent(self) -> bool:
        """The two constructions of the dual matrix must coincide."""
        return self.matrix_direct == self.matrix_inverse_route


def dual_family(g: GL2, L: int) -> DualFamily:
    g_dual = g.conj_transpose().inverse()
    return DualFamily(
        L,
        g_dual,
        level_basis(L, g_dual),
        rep_matrix(g_dual, L),
        rep_matrix(g, L).adjoint().inverse(),
    )


def _max_workers() -> int:
    try:
        return max(1, int(os.environ.get("HERMITE_DEFORM_THREADS", "1")))
    except ValueError:
        return 1


def biorthogonality_check(g: GL2, Lmax: int, tol: float = 0.0) -> Report:
    """Exact pairing of the deformed family with its dual across levels.

    <Hdual[L-n, n], Hg[M-k, k]> must be (L-n)! n! when (L,n) == (M,k) and 0
    otherwise, including all cross-level pairs up to Lmax.
    """
    g_dual = g.conj_transpose().inverse()

    def level_pair(L):
        return level_basis(L, g_dual), level_basis(L, g)

    workers = _max_workers()
    levels = list(range(Lmax + 1))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            built = list(pool.map(level_pair, levels))
    else:
        built = [level_pair(L) for L in levels]

    violations = []
    pairs = 0
    for L in levels:
        duals = built[L][0]
        for M in levels:
            fams = built[M][1]
            for n in range(L + 1):
                for k in range(M + 1):
                    pairs += 1
                    got = inner_product(duals.polys[n], fams.polys[k])
                    want = (
                        Coeff(duals.norm_sq[n])
                        if (L == M and n == k)
                        else Coeff(0)
                    )
                    if not _coeff_equal(got, want, tol):
                        violations.append(
                            {
                                "L": L,
                                "M": M,
                                "n": n,
                                "k": k,
                                "value": str(got),
                                "expected": str(want),
                            }
                        )
    status = "pass" if not violations else "fail"
    return Report(
        status,
        f"biorthogonality up to level {Lmax}: {status} ({pairs} pairings)",
        {"Lmax": Lmax, "violations": violations, "status": status},
    )


def dual_matrix_scaling_check(point, Lmax: int, tol: float = 0.0) -> Report:
    """With the sign-flipped hermitian partner g' of the alpha matrix,
    M(g', L) M(g, L) must equal det(g)^L times the identity."""
    from .ncqm import alpha_matrix

    g = alpha_matrix(point)
    gp = GL2(g.g11, -g.g12, -g.g21, g.g22)
    delta = g.det
    failures = []
    kappas = {}
    for L in range(Lmax + 1):
        want = RepMatrix.identity(L, exact=g.is_exact()).scaled(delta**L)
        got = rep_matrix(gp, L) @ rep_matrix(g, L)
        kappas[str(L)] = str(delta**L)
        if not (got == want if tol == 0.0 else got.close_to(want, tol)):
            failures.append({"L": L})
    status = "pass" if not failures else "fail"
    return Report(
        status,
        f"dual-matrix scaling up to level {Lmax}: {status}",
        {
            "Lmax": Lmax,
            "determinant": str(delta),
            "kappa": kappas,
            "failures": failures,
            "status": status,
        },
    )


def _sort_key_exact(c: Coeff):
    return (c.re, c.im, c.re2, c.im2)


def eigenvalue_structure_check(g: GL2, L: int, tol: float = 1e-9) -> Report:
    """Eigenvalues of M(g, L) must be the products l1^k l2^(L-k) of the
    eigenvalues of g itself.

    Triangular or diagonal exact g is checked by exact multiset equality of
    the diagonal; any other g goes through the float backend and needs
    numerically distinct eigenvalues.
    """
    M = rep_matrix(g, L)
    triangular = (not g.g21) or (not g.g12)
    if triangular and g.is_exact():
        expected = sorted(
            ((g.g11**k) * (g.g22 ** (L - k)) for k in range(L + 1)), key=_sort_key_exact
        )
        actual = sorted(M.diagonal(), key=_sort_key_exact)
        ok = expected == actual
        return Report(
            "pass" if ok else "fail",
            f"eigenvalue structure (exact, triangular), L={L}: {'pass' if ok else 'fail'}",
            {
                "L": L,
                "mode": "exact-triangular",
                "eigenvalues": [str(c) for c in actual],
                "status": "pass" if ok else "fail",
            },
        )

    lam = np.linalg.eigvals(g.to_numpy())
    # defective pairs are only resolvable to ~sqrt(machine eps), so the
    # distinctness cut is much looser than the matching tolerance
    if abs(lam[0] - lam[1]) <= 1e-6 * max(1.0, abs(lam[0]), abs(lam[1])):
        return Report(
            "error",
            "eigenvalue structure: repeated eigenvalues are unsupported",
            {"L": L, "mode": "float", "status": "error"},
        )
    expected = sorted(
        (lam[0] ** k * lam[1] ** (L - k) for k in range(L + 1)),
        key=lambda v: (round(abs(v), 9), round(cmath.phase(v), 9)),
    )
    actual = sorted(
        np.linalg.eigvals(M.to_numpy()).tolist(),
        key=lambda v: (round(abs(v), 9), round(cmath.phase(v), 9)),
    )
    deviation = max(
        abs(a - b) / max(1.0, abs(b)) for a, b in zip(actual, expected)
    )
    ok = deviation <= tol
    return Report(
        "pass" if ok else "fail",
        f"eigenvalue structure (float), L={L}: {'pass' if ok else 'fail'}",
        {
            "L": L,
            "mode": "float",
            "max_relative_deviation": deviation,
            "tolerance": tol,
            "status": "pass" if ok else "fail",
        },
    )


def monomial_to_hermite(p: BiPoly) -> BiPoly:
    """Apply exp(-d/dz d/dzbar) to a polynomial.

    The mixed-derivative series terminates because each step lowers both
    degrees; on z^m zbar^n it produces the scaled Hermite polynomial H[m,n].
    """
    out = p
    term = p
    j = 0
    while True:
        term = term.diff("z").diff("zbar")
        if not term:
            return out
        j += 1
        out = out + term * Fraction((-1) ** j, factorial(j))


def intertwine_check(g: GL2, Lmax: int, tol: float = 0.0) -> Report:
    """Two exact facts about E = exp(-d/dz d/dzbar).

    First, E maps each monomial z^m zbar^n (m+n <= Lmax) to H[m,n].  Second,
    E intertwines the coordinate action with the deformed family: for every
    level L <= Lmax and column k, applying E to sum_r M[r,k] z^r zbar^(L-r)
    gives the deformed polynomial Hg[k, L-k].
    """
    failures = []
    for total in range(Lmax + 1):
        for m in range(total + 1):
            n = total - m
            if not _poly_equal(monomial_to_hermite(BiPoly.monomial(m, n)), hermite_sum(m, n), tol):
                failures.append({"kind": "monomial", "m": m, "n": n})
    for L in range(Lmax + 1):
        M = rep_matrix(g, L)
        for k in range(L + 1):
            combo = BiPoly.zero()
            for r in range(L + 1):
                combo = combo + BiPoly.monomial(r, L - r, M[r, k])
            if not _poly_equal(monomial_to_hermite(combo), deformed_hermite(g, k, L - k), tol):
                failures.append({"kind": "operator", "L": L, "k": k})
    status = "pass" if not failures else "fail"
    return Report(
        status,
        f"intertwining up to level {Lmax}: {status}",
        {"Lmax": Lmax, "failures": failures, "status": status},
    )
