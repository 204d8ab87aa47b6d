"""Bilinear generator algebras: structure constants, basis changes, and
isomorphism-class identification.

Four bilinears in the (deformed) ladder operators close under commutation.
In the split basis {X1, X2, X3, Y} the brackets are

    [X1, X2] = X3,  [X2, X3] = (1 - theta^2) X1,  [X3, X1] = (1 - theta^2) X2,

with Y central.  For 0 < theta < 1 rescaling by 1/sqrt(1 - theta^2) (and
1/(1 - theta^2) on X3) restores the standard su(2) constants; at theta = 1
the X brackets degenerate to a Heisenberg algebra, which only the float
backend reaches since that point needs alpha^2 = 1/2.

Structure constants are computed by exact linear algebra on the operators'
coefficient vectors, never assumed: every commutator is solved for in the
span of the basis and must leave zero residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coeffs import Coeff, rational_sqrt
from .linalg import det, nullspace, rank, solve_in_span
from .ncqm import FLOAT_TOL, AlphaPoint, undeformed_rotation_generators
from .report import Report
from .weyl import WeylOp, commutator

__all__ = [
    "LieBasisSet",
    "StructureConstants",
    "bilinear_generators",
    "basis_change",
    "rescale",
    "structure_constants",
    "theta_one_limit_table",
    "classify",
    "lie_report",
]


@dataclass
class LieBasisSet:
    """Ordered named generators with the deformation scale they were built at."""

    names: tuple
    ops: tuple
    theta: Fraction | float
    exact: bool

    def items(self):
        return list(zip(self.names, self.ops))


def bilinear_generators(point: AlphaPoint | None = None, exact: bool = True) -> LieBasisSet:
    """The J1..J4 bilinears; deformed at an alpha point, undeformed otherwise."""
    if point is None:
        gens = undeformed_rotation_generators(exact=exact)
        return LieBasisSet(("J1", "J2", "J3", "J4"), tuple(gens.values()), Fraction(0), exact)
    from .ncqm import _deformed_rotation_generators

    gens = _deformed_rotation_generators(point)
    return LieBasisSet(
        ("J1", "J2", "J3", "J4"),
        (gens["J1_alpha"], gens["J2_alpha"], gens["J3_alpha"], gens["J4_alpha"]),
        point.theta,
        point.exact,
    )


def basis_change(jbasis: LieBasisSet) -> LieBasisSet:
    """Split into commuting parts: X1 = iJ1, X2 = iJ3, X3 = i(J2 + theta J4),
    Y = theta J2 + J4."""
    j1, j2, j3, j4 = jbasis.ops
    th = jbasis.theta
    i_unit = Coeff(0, 1, exact=jbasis.exact)
    x1 = j1 * i_unit
    x2 = j3 * i_unit
    x3 = (j2 + j4 * th) * i_unit
    y = j2 * th + j4
    return LieBasisSet(("X1", "X2", "X3", "Y"), (x1, x2, x3, y), th, jbasis.exact)


def rescale(xbasis: LieBasisSet) -> LieBasisSet:
    """Normalize the X brackets back to su(2) constants.

    With c = 1 - theta^2 the scaling is Z1 = X1/sqrt(c), Z2 = X2/sqrt(c),
    Z3 = X3/c; it is the unique positive diagonal rescaling making
    [Zi, Zj] = eps_ijk Zk, and it degenerates at theta = 1.
    """
    th = xbasis.theta
    c = 1 - th * th
    if not c:
        raise ValueError("rescaling singular at theta = 1")
    if xbasis.exact:
        s = rational_sqrt(c)
        if s is None:
            raise ValueError(
                f"sqrt(1 - theta^2) is irrational for theta = {th}; use the float backend"
            )
        inv_s, inv_c = Coeff(Fraction(1) / s), Coeff(Fraction(1) / c)
    else:
        inv_s, inv_c = Coeff.from_complex(c**-0.5), Coeff.from_complex(1.0 / c)
    x1, x2, x3, y = xbasis.ops
    return LieBasisSet(
        ("Z1", "Z2", "Z3", "Y"),
        (x1 * inv_s, x2 * inv_s, x3 * inv_c, y),
        th,
        xbasis.exact,
    )


@dataclass
class StructureConstants:
    """Antisymmetric bracket table over an ordered generator list.

    table[(i, j)] (i < j) holds the coordinates of [g_i, g_j] in the basis;
    residuals record how much of each bracket fell outside the span (always
    exactly zero on the exact backend when the set closes).
    """

    names: tuple
    table: dict
    residuals: dict
    exact: bool

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def closed(self) -> bool:
        tol = 0.0 if self.exact else FLOAT_TOL
        return all(r <= tol for r in self.residuals.values())

    def bracket(self, i: int, j: int):
        """Coordinates of [g_i, g_j], using antisymmetry below the diagonal."""
        zero = Coeff(0, exact=self.exact)
        if i == j:
            return [zero] * self.dim
        if i < j:
            return list(self.table[(i, j)])
        return [-c for c in self.table[(j, i)]]

    def jacobi_ok(self, tol: float | None = None) -> bool:
        if tol is None:
            tol = 0.0 if self.exact else FLOAT_TOL
        n = self.dim
        c = [[self.bracket(i, j) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        acc = Coeff(0, exact=self.exact)
                        for m in range(n):
                            acc = acc + c[i][j][m] * c[m][k][l]
                            acc = acc + c[j][k][m] * c[m][i][l]
                            acc = acc + c[k][i][m] * c[m][j][l]
                        if (tol == 0.0 and acc) or (tol > 0.0 and abs(acc) > tol):
                            return False
        return True

    def to_json(self, klass: str | None = None) -> dict:
        out = {
            "basis": list(self.names),
            "brackets": [
                {
                    "i": i,
                    "j": j,
                    "coeffs": [c.to_json_value() for c in self.table[(i, j)]],
                    "residual_norm": self.residuals[(i, j)],
                }
                for (i, j) in sorted(self.table)
            ],
        }
        if klass is not None:
            out["class"] = klass
        return out


def structure_constants(basis: LieBasisSet) -> StructureConstants:
    """Expand every pairwise commutator in the span of the basis.

    Raises if the generators are linearly dependent; a nonzero residual
    (bracket escaping the span) is recorded, not raised.
    """
    tol = 0.0 if basis.exact else FLOAT_TOL
    vectors = [op.terms for op in basis.ops]
    keys = sorted({k for v in vectors for k in v})
    matrix = [[v.get(k, Coeff(0, exact=basis.exact)) for v in vectors] for k in keys]
    if rank(matrix, tol) < len(basis.ops):
        raise ValueError("generators are linearly dependent")
    n = len(basis.ops)
    table, residuals = {}, {}
    for i in range(n):
        for j in range(i + 1, n):
            br = commutator(basis.ops[i], basis.ops[j])
            coeffs, residual = solve_in_span(vectors, br.terms, tol)
            table[(i, j)] = coeffs
            residuals[(i, j)] = residual
    return StructureConstants(basis.names, table, residuals, basis.exact)


def theta_one_limit_table(xbasis: LieBasisSet) -> StructureConstants:
    """Limiting bracket table of the split basis at theta = 1.

    At theta = 1 the operators X2 and X3 vanish identically (alpha^2 = 1/2
    makes the two deformed number operators coincide), so the generators are
    not independent and the span solve is ill posed.  The bracket relations
    themselves survive the degeneration: [X1, X2] = X3 and every other pair
    commutes.  This verifies those relations as operator identities, records
    their numerical defects as residuals, and returns the limit table (the
    split-basis constants with 1 - theta^2 = 0).
    """
    x1, x2, x3, y = xbasis.ops
    exact = xbasis.exact
    zero_op = WeylOp.zero()
    one_c, zero_c = Coeff(1, exact=exact), Coeff(0, exact=exact)
    claims = {
        (0, 1): ([zero_c, zero_c, one_c, zero_c], x3),
        (0, 2): ([zero_c] * 4, zero_op),
        (1, 2): ([zero_c] * 4, zero_op),
        (0, 3): ([zero_c] * 4, zero_op),
        (1, 3): ([zero_c] * 4, zero_op),
        (2, 3): ([zero_c] * 4, zero_op),
    }
    table, residuals = {}, {}
    for (i, j), (coeffs, rhs) in claims.items():
        defect = commutator(xbasis.ops[i], xbasis.ops[j]) - rhs
        table[(i, j)] = coeffs
        residuals[(i, j)] = defect.max_abs()
    return StructureConstants(xbasis.names, table, residuals, exact)


def _realified_table(sc: StructureConstants):
    """Real structure constants, multiplying the basis by i when every bracket
    coefficient is purely imaginary; None when the table mixes the two."""
    coeffs = [c for v in sc.table.values() for c in v]
    tol = 0.0 if sc.exact else FLOAT_TOL
    def real_part_small(c):
        return (not c.re and not c.re2) if sc.exact else abs(c.re) <= tol
    def imag_part_small(c):
        return (not c.im and not c.im2) if sc.exact else abs(c.im) <= tol
    if all(imag_part_small(c) for c in coeffs):
        factor = Coeff(1, exact=sc.exact)
    elif all(real_part_small(c) for c in coeffs):
        factor = Coeff(0, 1, exact=sc.exact)
    else:
        return None
    n = sc.dim
    return [[[x * factor for x in sc.bracket(i, j)] for j in range(n)] for i in range(n)]


def classify(sc: StructureConstants) -> str:
    """Identify the algebra from its table: 'su2_plus_u1', 'heisenberg_plus_u1'
    or 'unknown'.

    Tests used: dimension of the derived algebra and of the center, and for
    the three-dimensional derived case negative definiteness of the Killing
    form restricted to it (the compact signature).
    """
    tol = 0.0 if sc.exact else FLOAT_TOL
    if not sc.closed or not sc.jacobi_ok():
        raise ValueError("structure-constant table is not a closed Lie algebra")
    c = _realified_table(sc)
    if c is None:
        return "unknown"
    n = sc.dim

    bracket_rows = [c[i][j] for i in range(n) for j in range(i + 1, n)]
    derived_dim = rank(bracket_rows, tol)

    # center: x_i with sum_i x_i c[i][j] = 0 for all j (all components)
    adj_rows = []
    for j in range(n):
        for l in range(n):
            adj_rows.append([c[i][j][l] for i in range(n)])
    center = nullspace(adj_rows, tol)
    center_dim = len(center)

    if derived_dim == 3 and center_dim == 1 and n == 4:
        if _killing_negative_definite(c, bracket_rows, tol):
            return "su2_plus_u1"
        return "unknown"
    if derived_dim == 1 and center_dim == 2 and n == 4:
        # the derived line must itself be central; pick the dominant bracket
        # row so float noise rows cannot be mistaken for it
        derived_vec = max(bracket_rows, key=lambda r: max((abs(x) for x in r), default=0.0))
        combined = [list(v) for v in center] + [list(derived_vec)]
        if rank(combined, tol) == center_dim:
            return "heisenberg_plus_u1"
        return "unknown"
    return "unknown"


def _killing_negative_definite(c, bracket_rows, tol: float) -> bool:
    n = len(c)
    exact = all(x.exact for row in bracket_rows for x in row)
    killing = [
        [
            sum((c[a][m][l] * c[b][l][m] for m in range(n) for l in range(n)), Coeff(0, exact=exact))
            for b in range(n)
        ]
        for a in range(n)
    ]
    # basis of the derived subspace
    rows = [list(r) for r in bracket_rows]
    basis = []
    for r in rows:
        if rank(basis + [r], tol) > len(basis):
            basis.append(r)
    m = len(basis)
    restricted = [
        [
            sum(
                (basis[p][a] * killing[a][b] * basis[q][b] for a in range(n) for b in range(n)),
                Coeff(0, exact=exact),
            )
            for q in range(m)
        ]
        for p in range(m)
    ]
    if exact:
        # Sylvester: K negative definite iff (-1)^k det(K_k) > 0
        for k in range(1, m + 1):
            minor = [row[:k] for row in restricted[:k]]
            d = det(minor)
            if ((-1) ** k) * d.real_sign() <= 0:
                return False
        return True
    eig = np.linalg.eigvalsh(
        np.array([[x.to_complex().real for x in row] for row in restricted])
    )
    return bool(np.all(eig < -tol))


def lie_report(point: AlphaPoint | None) -> Report:
    """Full pipeline at one parameter point: bilinears, split basis, rescaled
    basis where it exists, plus closure, Jacobi, and classification.

    At theta = 1 (float backend only) the generators degenerate, so the suite
    verifies the limiting relations instead and classifies the limit table.
    """
    jbasis = bilinear_generators(point)
    theta = jbasis.theta
    at_limit = (theta == 1) if jbasis.exact else abs(theta - 1) <= FLOAT_TOL
    xbasis = basis_change(jbasis)
    stages = {}
    if at_limit:
        sc_x = theta_one_limit_table(xbasis)
        stages["X"] = sc_x
        final_class = classify(sc_x)
    else:
        stages["J"] = structure_constants(jbasis)
        sc_x = structure_constants(xbasis)
        stages["X"] = sc_x
        zbasis = rescale(xbasis)
        sc_z = structure_constants(zbasis)
        stages["Z"] = sc_z
        final_class = classify(sc_z)
    problems = []
    for label, sc in stages.items():
        if not sc.closed:
            problems.append(f"{label}-basis table does not close")
        if not sc.jacobi_ok():
            problems.append(f"{label}-basis table violates the Jacobi identity")
    expected = "heisenberg_plus_u1" if at_limit else "su2_plus_u1"
    if final_class != expected:
        problems.append(f"classified as {final_class}, expected {expected}")
    status = "pass" if not problems else "fail"
    payload = {
        "theta": str(theta),
        "class": final_class,
        "degenerate_limit": at_limit,
        "problems": problems,
        "status": status,
        "tables": {label: sc.to_json() for label, sc in stages.items()},
    }
    payload["tables"]["X" if at_limit else "Z"]["class"] = final_class
    summary = f"bilinear-algebra suite at theta = {theta}: {status} (class {final_class})"
    return Report(status, summary, payload)
