"""Sparse polynomials in the conjugate pair (z, zbar) and in two real variables,
together with the Gaussian-measure inner products that make the Hermite
families (bi)orthogonal.

Complex polynomials are maps {(z-degree, zbar-degree): Coeff}; the inner
product uses the monomial moment rule of the measure exp(-|z|^2) dxdy/pi,
so exact coefficients give exact inner products.  Real polynomials carry the
weight exp(-x^2) on the line, with sqrt(pi) kept symbolic.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .coeffs import Coeff

__all__ = [
    "BiPoly",
    "RealPoly",
    "SqrtPiValue",
    "inner_product",
    "real_inner_product",
]


def _clean(terms):
    out = {}
    for key, c in terms.items():
        c = Coeff.lift(c)
        if not c:
            continue
        a, b = key
        if a < 0 or b < 0:
            raise ValueError(f"negative exponent in {key}")
        out[(int(a), int(b))] = c
    return out


class BiPoly:
    """Polynomial in z and zbar with Coeff coefficients, zero terms never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean(terms) if terms else {}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls, exact=True):
        return cls.monomial(0, 0, Coeff(1, exact=exact))

    @classmethod
    def z(cls):
        return cls.monomial(1, 0)

    @classmethod
    def zbar(cls):
        return cls.monomial(0, 1)

    @classmethod
    def monomial(cls, a, b, coeff=1):
        return cls({(a, b): Coeff.lift(coeff)})

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.monomial(0, 0, other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        p = BiPoly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = BiPoly()
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.monomial(0, 0, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            s = Coeff.lift(other)
            p = BiPoly()
            if s:
                p.terms = {k: c * s for k, c in self.terms.items()}
            return p
        out = {}
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in other.terms.items():
                key = (a + c, b + d)
                v = c1 * c2
                s = out.get(key)
                s = v if s is None else s + v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        p = BiPoly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = BiPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- calculus and structure ---------------------------------------------

    def diff(self, var: str, order: int = 1) -> BiPoly:
        """Formal partial derivative; var is 'z' or 'zbar'."""
        if var not in ("z", "zbar"):
            raise ValueError(f"unknown variable {var!r}")
        idx = 0 if var == "z" else 1
        cur = self
        for _ in range(order):
            out = {}
            for (a, b), c in cur.terms.items():
                e = (a, b)[idx]
                if e == 0:
                    continue
                key = (a - 1, b) if idx == 0 else (a, b - 1)
                out[key] = c * e
            nxt = BiPoly()
            nxt.terms = out
            cur = nxt
        return cur

    def conjugate(self) -> BiPoly:
        """Complex conjugate: conj swaps z and zbar and conjugates coefficients."""
        p = BiPoly()
        p.terms = {(b, a): c.conj() for (a, b), c in self.terms.items()}
        return p

    def degree(self) -> int:
        return max((a + b for a, b in self.terms), default=0)

    def evaluate(self, z: complex) -> complex:
        zb = z.conjugate()
        return sum((c.to_complex() * z**a * zb**b for (a, b), c in self.terms.items()), 0j)

    def is_exact(self) -> bool:
        return all(c.exact for c in self.terms.values())

    def max_abs(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def sorted_terms(self):
        """Terms in the canonical (total degree, z-degree) order."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    # -- serialization ------------------------------------------------------

    def to_json_dict(self):
        return {
            "terms": [
                {"z": a, "zbar": b, **c.to_json_value()} for (a, b), c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json_dict(cls, obj) -> BiPoly:
        return cls({(t["z"], t["zbar"]): Coeff.from_json_value(t) for t in obj["terms"]})

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (a, b), c in reversed(self.sorted_terms()):
            mono = _mono_str(a, b, "z", "z~")
            chunks.append(_term_str(c, mono))
        return _join_terms(chunks)

    def __repr__(self):
        return f"BiPoly({self.pretty()})"


class RealPoly:
    """Polynomial in two real variables x1, x2 with real coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = _clean(terms) if terms else {}
        for c in clean.values():
            if not c.is_real():
                raise ValueError("RealPoly coefficients must be real")
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls, exact=True):
        return cls.monomial(0, 0, Coeff(1, exact=exact))

    @classmethod
    def x1(cls):
        return cls.monomial(1, 0)

    @classmethod
    def x2(cls):
        return cls.monomial(0, 1)

    @classmethod
    def monomial(cls, a, b, coeff=1):
        return cls({(a, b): Coeff.lift(coeff)})

    def __add__(self, other):
        if not isinstance(other, RealPoly):
            other = RealPoly.monomial(0, 0, other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        p = RealPoly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = RealPoly()
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if not isinstance(other, RealPoly):
            other = RealPoly.monomial(0, 0, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RealPoly):
            s = Coeff.lift(other)
            p = RealPoly()
            if s:
                p.terms = {k: c * s for k, c in self.terms.items()}
            return p
        out = {}
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in other.terms.items():
                key = (a + c, b + d)
                v = c1 * c2
                s = out.get(key)
                s = v if s is None else s + v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        p = RealPoly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = RealPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, RealPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, x1, x2=0.0) -> float:
        return sum(float(c.to_complex().real) * x1**a * x2**b for (a, b), c in self.terms.items())

    def is_exact(self) -> bool:
        return all(c.exact for c in self.terms.values())

    def variables_used(self) -> set:
        used = set()
        for a, b in self.terms:
            if a:
                used.add(0)
            if b:
                used.add(1)
        return used

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    def to_json_dict(self):
        return {
            "terms": [{"x1": a, "x2": b, **c.to_json_value()} for (a, b), c in self.sorted_terms()]
        }

    @classmethod
    def from_json_dict(cls, obj) -> RealPoly:
        return cls({(t["x1"], t["x2"]): Coeff.from_json_value(t) for t in obj["terms"]})

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        chunks = [
            _term_str(c, _mono_str(a, b, "x1", "x2")) for (a, b), c in reversed(self.sorted_terms())
        ]
        return _join_terms(chunks)

    def __repr__(self):
        return f"RealPoly({self.pretty()})"


@dataclass(frozen=True)
class SqrtPiValue:
    """An exact multiple of a power of sqrt(pi)."""

    coeff: Coeff
    sqrt_pi_power: int = 1

    def __str__(self):
        return f"({self.coeff}) * sqrt(pi)^{self.sqrt_pi_power}"

    def to_float(self) -> float:
        import math

        return self.coeff.to_complex().real * math.pi ** (self.sqrt_pi_power / 2)


def inner_product(p: BiPoly, q: BiPoly) -> Coeff:
    """Gaussian inner product <p, q>, conjugate linear in the first slot.

    Monomial rule: <z^a zbar^b, z^c zbar^d> = (a+d)! when b+c == a+d, else 0.
    Only terms with matching a-b == c-d can pair, so terms are bucketed by
    that difference.
    """
    exact = p.is_exact() and q.is_exact()
    buckets = defaultdict(list)
    for (c, d), qc in q.terms.items():
        buckets[c - d].append((d, qc))
    acc = Coeff(0, exact=exact)
    for (a, b), pc in p.terms.items():
        hits = buckets.get(a - b)
        if not hits:
            continue
        pconj = pc.conj()
        for d, qc in hits:
            acc = acc + pconj * qc * factorial(a + d)
    return acc


def gaussian_moment(n: int) -> Fraction:
    """Rational part of the line integral of x^n exp(-x^2); the sqrt(pi) is implicit."""
    if n % 2:
        return Fraction(0)
    k = n // 2
    return Fraction(factorial(2 * k), 4**k * factorial(k))


def real_inner_product(p: RealPoly, q: RealPoly) -> SqrtPiValue:
    """Weighted line integral of p*q against exp(-x^2), as (rational)*sqrt(pi).

    Both polynomials must be univariate in the same variable.
    """
    used = p.variables_used() | q.variables_used()
    if len(used) > 1:
        raise ValueError("real_inner_product needs univariate inputs in a common variable")
    acc = Coeff(0, exact=p.is_exact() and q.is_exact())
    for (a1, a2), pc in p.terms.items():
        for (b1, b2), qc in q.terms.items():
            m = gaussian_moment((a1 + b1) + (a2 + b2))
            if m:
                acc = acc + pc * qc * (m if acc.exact else float(m))
    return SqrtPiValue(acc, 1)


# -- shared pretty-printing helpers ----------------------------------------


def _mono_str(a, b, va, vb) -> str:
    parts = []
    if a:
        parts.append(va if a == 1 else f"{va}^{a}")
    if b:
        parts.append(vb if b == 1 else f"{vb}^{b}")
    return " ".join(parts)


def _term_str(c: Coeff, mono: str) -> str:
    ctxt = str(c)
    if not mono:
        return ctxt
    if ctxt == "1":
        return mono
    if ctxt == "-1":
        return f"-{mono}"
    if ("+" in ctxt[1:]) or ("-" in ctxt[1:]) or "sqrt2" in ctxt:
        ctxt = f"({ctxt})"
    return f"{ctxt} {mono}"


def _join_terms(chunks) -> str:
    out = chunks[0]
    for c in chunks[1:]:
        out += f" - {c[1:]}" if c.startswith("-") else f" + {c}"
    return out
