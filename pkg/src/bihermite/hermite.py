"""Classical Hermite families, built by every route the library verifies.

The central objects are the two-index polynomials H[m,n](z, zbar) with integer
coefficients; the orthonormal family is h[m,n] = H[m,n]/sqrt(m! n!).  All
internal computation stays on the integer-coefficient H so the exact backend
never needs irrational normalizers; the factor m!*n! is reported alongside.

Three independent constructions are provided and must agree exactly:

* an explicit finite sum with binomial coefficients,
* a Rodrigues-style recurrence from differentiating P*exp(-z zbar),
* repeated application of the raising operators to the constant 1.

Truncated power series in bookkeeping variables (u, ubar) tie the families to
their generating functions with exact coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .coeffs import Coeff
from .poly import BiPoly, RealPoly, inner_product, real_inner_product
from .report import Report
from .weyl import WeylOp

__all__ = [
    "hermite_sum",
    "hermite_rodrigues",
    "hermite_operator",
    "normalizer_sq",
    "real_hermite",
    "HermiteTable",
    "SeriesTruncation",
    "generating_series_complex",
    "generating_series_real",
    "orthonormality_check",
    "real_orthogonality_check",
]


def normalizer_sq(m: int, n: int) -> int:
    """Squared normalizer m!*n!; h[m,n] = H[m,n] / sqrt(m! n!)."""
    return factorial(m) * factorial(n)


def hermite_sum(m: int, n: int) -> BiPoly:
    """H[m,n] from the explicit sum: sum_j (-1)^j j! C(m,j) C(n,j) z^(m-j) zbar^(n-j)."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    terms = {}
    for j in range(min(m, n) + 1):
        terms[(m - j, n - j)] = Coeff((-1) ** j * comb(m, j) * comb(n, j) * factorial(j))
    return BiPoly(terms)


def hermite_rodrigues(m: int, n: int) -> BiPoly:
    """H[m,n] by differentiating the Gaussian factor symbolically.

    Conjugating d/dz by exp(-z zbar) sends P to dP/dz - zbar*P (and mirrored
    for zbar).  The variable roles are assigned so that the result matches
    hermite_sum, i.e. m zbar-derivative steps and n z-derivative steps; the
    opposite assignment would produce H[n,m].
    """
    z, zbar = BiPoly.z(), BiPoly.zbar()
    p = BiPoly.one()
    for _ in range(m):
        p = p.diff("zbar") - z * p
    for _ in range(n):
        p = p.diff("z") - zbar * p
    return p * ((-1) ** (m + n))


def hermite_operator(m: int, n: int) -> BiPoly:
    """H[m,n] as (ad1)^m (ad2)^n applied to the constant polynomial 1."""
    op = WeylOp.adag(1) ** m * WeylOp.adag(2) ** n
    return op.apply(BiPoly.one())


def real_hermite(n: int, var: int = 0) -> RealPoly:
    """Physicists' Hermite polynomial H_n by the three-term recurrence, in x1 or x2."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    x = RealPoly.x1() if var == 0 else RealPoly.x2()
    prev, cur = RealPoly.one(), 2 * x
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, 2 * x * cur - (2 * k) * prev
    return cur


class HermiteTable:
    """All H[m,n] with m+n <= max_total, with the squared normalizers."""

    def __init__(self, max_total: int, route=hermite_sum):
        self.max_total = max_total
        self.entries = {}
        for total in range(max_total + 1):
            for m in range(total + 1):
                self.entries[(m, total - m)] = route(m, total - m)

    def __getitem__(self, key):
        return self.entries[key]

    def normalized_pair(self, m, n):
        """(H[m,n], m!*n!) so that h = H/sqrt of the second component."""
        return self.entries[(m, n)], normalizer_sq(m, n)

    def ordered_keys(self):
        return sorted(self.entries, key=lambda mn: (mn[0] + mn[1], mn[0]))

    def to_json(self):
        return [
            {"m": m, "n": n, "normalizer_sq": normalizer_sq(m, n), **self.entries[(m, n)].to_json_dict()}
            for m, n in self.ordered_keys()
        ]

    def to_csv_rows(self):
        rows = [("m", "n", "z", "zbar", "re", "im")]
        for m, n in self.ordered_keys():
            for (a, b), c in self.entries[(m, n)].sorted_terms():
                rows.append((m, n, a, b, str(c.re), str(c.im)))
        return rows


class SeriesTruncation:
    """Power series in (u, ubar) up to a total order, coefficients in any ring
    supporting +, * and scalar multiplication (BiPoly, RealPoly, Coeff)."""

    __slots__ = ("order", "terms", "ring_one")

    def __init__(self, order: int, terms=None, ring_one=None):
        self.order = order
        self.ring_one = BiPoly.one() if ring_one is None else ring_one
        self.terms = {}
        if terms:
            for (j, k), val in terms.items():
                if j + k <= order and val:
                    self.terms[(j, k)] = val

    def coeff(self, j: int, k: int):
        val = self.terms.get((j, k))
        if val is None:
            return self.ring_one * 0
        return val

    def __add__(self, other):
        out = dict(self.terms)
        for key, val in other.terms.items():
            cur = out.get(key)
            s = val if cur is None else cur + val
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return SeriesTruncation(self.order, out, self.ring_one)

    def __mul__(self, other):
        if not isinstance(other, SeriesTruncation):
            scaled = {k: v * other for k, v in self.terms.items()}
            return SeriesTruncation(self.order, scaled, self.ring_one)
        out = {}
        for (j1, k1), v1 in self.terms.items():
            for (j2, k2), v2 in other.terms.items():
                j, k = j1 + j2, k1 + k2
                if j + k > self.order:
                    continue
                v = v1 * v2
                cur = out.get((j, k))
                s = v if cur is None else cur + v
                if s:
                    out[(j, k)] = s
                else:
                    out.pop((j, k), None)
        return SeriesTruncation(self.order, out, self.ring_one)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, SeriesTruncation)
            and self.order == other.order
            and self.terms == other.terms
        )

    def exp(self) -> SeriesTruncation:
        """Exact exponential; the argument must have no constant term."""
        if (0, 0) in self.terms:
            raise ValueError("exp needs a series with zero constant term")
        out = SeriesTruncation(self.order, {(0, 0): self.ring_one}, self.ring_one)
        power = out
        for j in range(1, self.order + 1):
            power = power * self
            out = out + power * Fraction(1, factorial(j))
        return out

    def substitute_linear(self, a11, a12, a21, a22) -> SeriesTruncation:
        """Replace u -> a11 u + a12 ubar and ubar -> a21 u + a22 ubar."""
        a11, a12 = Coeff.lift(a11), Coeff.lift(a12)
        a21, a22 = Coeff.lift(a21), Coeff.lift(a22)
        out = SeriesTruncation(self.order, {}, self.ring_one)
        for (j, k), val in self.terms.items():
            expanded = {}
            for p in range(j + 1):
                for q in range(k + 1):
                    w = (a11**p) * (a12 ** (j - p)) * (a21**q) * (a22 ** (k - q))
                    w = w * (comb(j, p) * comb(k, q))
                    key = (p + q, (j - p) + (k - q))
                    cur = expanded.get(key)
                    expanded[key] = w if cur is None else cur + w
            add = {key: val * w for key, w in expanded.items() if w}
            out = out + SeriesTruncation(self.order, add, self.ring_one)
        return out


def generating_series_complex(N: int) -> SeriesTruncation:
    """Truncation of exp(u z + ubar zbar - u ubar); the (k, l) coefficient
    times k!*l! is H[k,l]."""
    seed = SeriesTruncation(
        N,
        {
            (1, 0): BiPoly.z(),
            (0, 1): BiPoly.zbar(),
            (1, 1): BiPoly.one() * -1,
        },
        BiPoly.one(),
    )
    return seed.exp()


def generating_series_real(N: int) -> SeriesTruncation:
    """Truncation of exp(2 u x1 - u^2 + 2 ubar x2 - ubar^2); the (k, l)
    coefficient times k!*l! is the product H_k(x1) H_l(x2)."""
    seed = SeriesTruncation(
        N,
        {
            (1, 0): 2 * RealPoly.x1(),
            (0, 1): 2 * RealPoly.x2(),
            (2, 0): RealPoly.one() * -1,
            (0, 2): RealPoly.one() * -1,
        },
        RealPoly.one(),
    )
    return seed.exp()


def orthonormality_check(Lmax: int) -> Report:
    """Exact check that <H[m,n], H[k,l]> = m! n! delta delta for m+n, k+l <= Lmax."""
    table = HermiteTable(Lmax)
    keys = table.ordered_keys()
    violations = []
    for m, n in keys:
        p = table[(m, n)]
        for k, l in keys:
            got = inner_product(p, table[(k, l)])
            want = Coeff(normalizer_sq(m, n)) if (m, n) == (k, l) else Coeff(0)
            if got != want:
                violations.append(
                    {"m": m, "n": n, "k": k, "l": l, "value": str(got), "expected": str(want)}
                )
    status = "pass" if not violations else "fail"
    return Report(
        status,
        f"orthonormality up to total degree {Lmax}: {status}",
        {"Lmax": Lmax, "pairs": len(keys) ** 2, "violations": violations, "status": status},
    )


def real_orthogonality_check(nmax: int) -> Report:
    """Exact check of the weighted line integrals: sqrt(pi) 2^n n! delta_mn."""
    polys = [real_hermite(n) for n in range(nmax + 1)]
    violations = []
    for m in range(nmax + 1):
        for n in range(nmax + 1):
            got = real_inner_product(polys[m], polys[n])
            want = Coeff(2**n * factorial(n)) if m == n else Coeff(0)
            if got.coeff != want or got.sqrt_pi_power != 1:
                violations.append({"m": m, "n": n, "value": str(got), "expected": str(want)})
    status = "pass" if not violations else "fail"
    return Report(
        status,
        f"real orthogonality up to degree {nmax}: {status}",
        {"nmax": nmax, "violations": violations, "status": status},
    )
