"""Noncommutative position/momentum operators and the hermitian one-parameter
deformation family.

The hermitian family is parametrized by a real alpha with 0 < |alpha| < 1:
the deformation matrix is [[alpha, i b], [-i b, alpha]] with b = sqrt(1 -
alpha^2), and theta = 2 alpha b measures the induced noncommutativity.  On
the exact backend alpha must make b rational (Pythagorean points such as
3/5, 5/13, 8/17); any other alpha runs on the float backend.

Position/momentum pairs Q_i, P_i realizing

    [Q_i, P_j] = i delta_ij,  [Q_1, Q_2] = i theta,  [P_1, P_2] = i gamma

are built two ways: from the deformed ladder operators (theta == gamma), and
from the canonical pairs through the (c, d) substitution with
kappa = 1 - gamma*theta, which covers independent theta and gamma and has
two equally valid sign branches.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeffs import Coeff, rational_sqrt
from .deform import GL2, deformed_lowering, deformed_raising
from .poly import BiPoly
from .report import Report
from .weyl import WeylOp, commutator, operators_equal, position_momentum_ops

__all__ = [
    "AlphaPoint",
    "alpha_matrix",
    "OperatorDictionary",
    "build_dictionary",
    "ncqm_commutator_suite",
    "qp_representation_suite",
    "FLOAT_TOL",
]

# residual tolerance for float-backend identity checks
FLOAT_TOL = 1e-10


@dataclass(frozen=True)
class AlphaPoint:
    """Validated deformation parameter with its derived quantities."""

    alpha: Fraction | float
    beta_im: Fraction | float  # sqrt(1 - alpha^2)
    exact: bool

    @classmethod
    def make(cls, alpha, exact: bool = True) -> AlphaPoint:
        if exact:
            alpha = Fraction(alpha)
            if not 0 < abs(alpha) < 1:
                raise ValueError("alpha must satisfy 0 < |alpha| < 1")
            beta_im = rational_sqrt(1 - alpha * alpha)
            if beta_im is None:
                raise ValueError(
                    f"sqrt(1 - alpha^2) is irrational for alpha = {alpha}; "
                    "use the float backend for this point"
                )
            return cls(alpha, beta_im, True)
        alpha = float(alpha)
        if not 0 < abs(alpha) < 1:
            raise ValueError("alpha must satisfy 0 < |alpha| < 1")
        return cls(alpha, (1 - alpha * alpha) ** 0.5, False)

    @property
    def theta(self):
        return 2 * self.alpha * self.beta_im

    def theta_coeff(self) -> Coeff:
        return Coeff(self.theta, exact=self.exact) if self.exact else Coeff.from_complex(self.theta)


def alpha_matrix(point: AlphaPoint) -> GL2:
    """Hermitian deformation matrix [[alpha, i b], [-i b, alpha]]."""
    a = Coeff(point.alpha, exact=point.exact) if point.exact else Coeff.from_complex(point.alpha)
    b = (
        Coeff(0, point.beta_im, exact=point.exact)
        if point.exact
        else Coeff.from_complex(1j * point.beta_im)
    )
    return GL2(a, b, -b, a)


def _qp_from_ladders(low: WeylOp, raise_: WeylOp, exact: bool) -> tuple[WeylOp, WeylOp]:
    """(q, p) from a lowering/raising pair: q = (a + ad)/sqrt2, p = (a - ad)/(i sqrt2)."""
    half_rt2 = Coeff(0, 0, Fraction(1, 2), exact=exact)
    neg_i_half_rt2 = Coeff(0, 0, 0, Fraction(-1, 2), exact=exact)
    return (low + raise_) * half_rt2, (low - raise_) * neg_i_half_rt2


def undeformed_rotation_generators(exact: bool = True) -> dict[str, WeylOp]:
    """Bilinears J1..J4: the standard angular-momentum set plus the total number."""
    a1, a2 = WeylOp.a(1), WeylOp.a(2)
    ad1, ad2 = WeylOp.adag(1), WeylOp.adag(2)
    half = Coeff(Fraction(1, 2), exact=exact)
    neg_i_half = Coeff(0, Fraction(-1, 2), exact=exact)
    return {
        "J1": (ad1 * a2 + ad2 * a1) * half,
        "J2": (ad1 * a2 - ad2 * a1) * neg_i_half,
        "J3": (ad1 * a1 - ad2 * a2) * half,
        "J4": (ad1 * a1 + ad2 * a2) * half,
    }


def _deformed_rotation_generators(point: AlphaPoint) -> dict[str, WeylOp]:
    g = alpha_matrix(point)
    a1, a2 = deformed_lowering(g)
    ad1, ad2 = deformed_raising(g)
    half = Coeff(Fraction(1, 2), exact=point.exact)
    neg_i_half = Coeff(0, Fraction(-1, 2), exact=point.exact)
    return {
        "J1_alpha": (ad1 * a2 + ad2 * a1) * half,
        "J2_alpha": (ad1 * a2 - ad2 * a1) * neg_i_half,
        "J3_alpha": (ad1 * a1 - ad2 * a2) * half,
        "J4_alpha": (ad1 * a1 + ad2 * a2) * half,
    }


def _qp_from_canonical(theta, gamma, branch: int, exact: bool) -> dict[str, WeylOp]:
    """Q_i, P_i from the canonical pairs via the (c, d) substitution.

    c = (1 + s sqrt(kappa))/2 and d = (1 - s sqrt(kappa))/theta with
    kappa = 1 - gamma*theta and branch sign s; gamma == 1/theta is excluded.
    """
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    if exact:
        theta, gamma = Fraction(theta), Fraction(gamma)
        kappa = 1 - gamma * theta
        if gamma * theta == 1:
            raise ValueError("gamma = 1/theta is excluded")
        root = rational_sqrt(kappa)
        if root is None:
            raise ValueError(
                f"sqrt(kappa) is irrational for (theta, gamma) = ({theta}, {gamma}); "
                "use the float backend"
            )
        c = Fraction(1 + branch * root, 2)
        d = (1 - branch * root) / theta
    else:
        theta, gamma = float(theta), float(gamma)
        kappa = 1 - gamma * theta
        if kappa < 0:
            raise ValueError("kappa = 1 - gamma*theta must be nonnegative")
        root = kappa**0.5
        c = (1 + branch * root) / 2
        d = (1 - branch * root) / theta
    qp = position_momentum_ops(exact=exact)
    q1, q2, p1, p2 = qp["q1"], qp["q2"], qp["p1"], qp["p2"]
    half_theta = theta / 2
    return {
        "Q1": q1 - p2 * half_theta,
        "Q2": q2 + p1 * half_theta,
        "P1": p1 * c + q2 * d,
        "P2": p2 * c - q1 * d,
    }


@dataclass
class OperatorDictionary:
    """Named operator set for one parameter choice, re-derivable from it."""

    ops: dict[str, WeylOp]
    params: dict

    def __getitem__(self, name: str) -> WeylOp:
        return self.ops[name]

    def __contains__(self, name: str) -> bool:
        return name in self.ops

    def names(self):
        return sorted(self.ops)

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "operators": {name: self.ops[name].to_json_dict() for name in self.names()},
        }


def build_dictionary(
    alpha=None, theta=None, gamma=None, branch: int = 1, exact: bool = True
) -> OperatorDictionary:
    """Assemble the named operators for a parameter point.

    Always includes the bare ladder operators, canonical q/p pairs, and the
    undeformed bilinears J1..J4.  With alpha it adds the deformed ladder set,
    the deformed bilinears, Q/P built from them, and the X/Y (and, away from
    theta = 1, rescaled Z) bases.  With (theta, gamma) it adds Q/P from the
    canonical substitution on the requested sign branch, plus the derived
    A_i = (Q_i + i P_i)/sqrt2 pairs.
    """
    from .lie import basis_change, bilinear_generators, rescale

    ops: dict[str, WeylOp] = {
        "a1": WeylOp.a(1),
        "a2": WeylOp.a(2),
        "ad1": WeylOp.adag(1),
        "ad2": WeylOp.adag(2),
    }
    ops.update(position_momentum_ops(exact=exact))
    ops.update(undeformed_rotation_generators(exact=exact))
    params: dict = {"exact": exact}

    if alpha is not None and (theta is not None or gamma is not None):
        raise ValueError("pass either alpha or (theta, gamma), not both")

    if alpha is not None:
        point = alpha if isinstance(alpha, AlphaPoint) else AlphaPoint.make(alpha, exact=exact)
        params["alpha"] = str(point.alpha)
        params["theta"] = str(point.theta)
        g = alpha_matrix(point)
        low1, low2 = deformed_lowering(g)
        rai1, rai2 = deformed_raising(g)
        ops.update(
            {
                "a1_alpha": low1,
                "a2_alpha": low2,
                "ad1_alpha": rai1,
                "ad2_alpha": rai2,
                # the deformed ladder set realizes the modified-boson relations
                "A1": low1,
                "A2": low2,
                "Ad1": rai1,
                "Ad2": rai2,
            }
        )
        q1, p1 = _qp_from_ladders(low1, rai1, point.exact)
        q2, p2 = _qp_from_ladders(low2, rai2, point.exact)
        ops.update({"Q1": q1, "P1": p1, "Q2": q2, "P2": p2})
        ops.update(_deformed_rotation_generators(point))
        jbasis = bilinear_generators(point)
        xbasis = basis_change(jbasis)
        ops.update(dict(zip(xbasis.names, xbasis.ops)))
        if point.theta != 1:
            try:
                zbasis = rescale(xbasis)
            except ValueError:
                pass  # irrational rescale factor on the exact backend
            else:
                ops.update(dict(zip(zbasis.names, zbasis.ops)))
        return OperatorDictionary(ops, params)

    if theta is not None or gamma is not None:
        if theta is None or gamma is None:
            raise ValueError("theta and gamma must be given together")
        params.update({"theta": str(theta), "gamma": str(gamma), "branch": branch})
        qp = _qp_from_canonical(theta, gamma, branch, exact)
        ops.update(qp)
        half_rt2 = Coeff(0, 0, Fraction(1, 2), exact=exact)
        i_unit = Coeff(0, 1, exact=exact) if exact else Coeff.from_complex(1j)
        for mode in (1, 2):
            q, p = qp[f"Q{mode}"], qp[f"P{mode}"]
            ops[f"A{mode}"] = (q + p * i_unit) * half_rt2
            ops[f"Ad{mode}"] = (q - p * i_unit) * half_rt2
        return OperatorDictionary(ops, params)

    return OperatorDictionary(ops, params)


def _check(name, got: WeylOp, want: WeylOp, tol: float):
    ok = operators_equal(got, want, tol)
    return ok, {"relation": name, "ok": ok, "got": got.pretty(), "expected": want.pretty()}


def ncqm_commutator_suite(point: AlphaPoint) -> Report:
    """Commutators of the deformed ladder operators at one alpha point.

    [a_i, ad_i] = 1, all annihilator and all creator pairs commute, and the
    cross commutator [a_1, ad_2] equals i*theta (its mirror -i*theta).
    """
    tol = 0.0 if point.exact else FLOAT_TOL
    g = alpha_matrix(point)
    a1, a2 = deformed_lowering(g)
    ad1, ad2 = deformed_raising(g)
    one = WeylOp.one(exact=point.exact)
    zero = WeylOp.zero()
    itheta = WeylOp.scalar(Coeff(0, 1, exact=point.exact) * point.theta_coeff())
    checks = [
        _check("[a1_alpha, ad1_alpha] == 1", commutator(a1, ad1), one, tol),
        _check("[a2_alpha, ad2_alpha] == 1", commutator(a2, ad2), one, tol),
        _check("[a1_alpha, a2_alpha] == 0", commutator(a1, a2), zero, tol),
        _check("[ad1_alpha, ad2_alpha] == 0", commutator(ad1, ad2), zero, tol),
        _check("[a1_alpha, ad2_alpha] == i*theta", commutator(a1, ad2), itheta, tol),
        _check("[a2_alpha, ad1_alpha] == -i*theta", commutator(a2, ad1), -itheta, tol),
    ]
    for name, lowering in (("a1_alpha", a1), ("a2_alpha", a2)):
        image = lowering.apply(BiPoly.one(exact=point.exact))
        ok_vac = image.max_abs() <= tol if not point.exact else not image
        checks.append(
            (ok_vac, {"relation": f"vacuum: {name}(1) == 0", "ok": ok_vac, "got": image.pretty()})
        )
    ok = all(c[0] for c in checks)
    return Report(
        "pass" if ok else "fail",
        f"deformed-ladder commutators at alpha = {point.alpha}: {'pass' if ok else 'fail'}",
        {
            "alpha": str(point.alpha),
            "theta": str(point.theta),
            "checks": [c[1] for c in checks],
            "status": "pass" if ok else "fail",
        },
    )


def qp_representation_suite(theta, gamma, exact: bool = True) -> Report:
    """Verify the Q/P commutation table on both sign branches.

    [Q_i, P_j] = i delta_ij, [Q_1, Q_2] = i theta, [P_1, P_2] = i gamma; when
    theta == gamma the derived A_i also satisfy the modified-boson relations.
    """
    tol = 0.0 if exact else FLOAT_TOL
    i_unit = Coeff(0, 1, exact=exact)
    th = Coeff(Fraction(theta) if exact else float(theta), exact=exact)
    ga = Coeff(Fraction(gamma) if exact else float(gamma), exact=exact)
    zero = WeylOp.zero()
    checks = []
    for branch in (1, -1):
        d = build_dictionary(theta=theta, gamma=gamma, branch=branch, exact=exact)
        q1, q2, p1, p2 = d["Q1"], d["Q2"], d["P1"], d["P2"]
        tag = f"branch {branch:+d}: "
        checks += [
            _check(tag + "[Q1, P1] == i", commutator(q1, p1), WeylOp.scalar(i_unit), tol),
            _check(tag + "[Q2, P2] == i", commutator(q2, p2), WeylOp.scalar(i_unit), tol),
            _check(tag + "[Q1, P2] == 0", commutator(q1, p2), zero, tol),
            _check(tag + "[Q2, P1] == 0", commutator(q2, p1), zero, tol),
            _check(tag + "[Q1, Q2] == i*theta", commutator(q1, q2), WeylOp.scalar(i_unit * th), tol),
            _check(tag + "[P1, P2] == i*gamma", commutator(p1, p2), WeylOp.scalar(i_unit * ga), tol),
        ]
        if th == ga:
            a1, a2, ad1, ad2 = d["A1"], d["A2"], d["Ad1"], d["Ad2"]
            one = WeylOp.one(exact=exact)
            checks += [
                _check(tag + "[A1, Ad1] == 1", commutator(a1, ad1), one, tol),
                _check(tag + "[A2, Ad2] == 1", commutator(a2, ad2), one, tol),
                _check(tag + "[A1, A2] == 0", commutator(a1, a2), zero, tol),
                _check(
                    tag + "[A1, Ad2] == i*theta",
                    commutator(a1, ad2),
                    WeylOp.scalar(i_unit * th),
                    tol,
                ),
            ]
    ok = all(c[0] for c in checks)
    return Report(
        "pass" if ok else "fail",
        f"Q/P representation at (theta, gamma) = ({theta}, {gamma}): "
        f"{'pass' if ok else 'fail'}",
        {
            "theta": str(theta),
            "gamma": str(gamma),
            "checks": [c[1] for c in checks],
            "status": "pass" if ok else "fail",
        },
    )
