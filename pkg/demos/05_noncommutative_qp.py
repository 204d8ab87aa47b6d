# Noncommutative position/momentum operators, verified in the Weyl algebra.
#
# Two constructions produce operators with [Q_i, P_j] = i delta_ij plus the
# extra noncommutativities [Q1, Q2] = i theta and [P1, P2] = i gamma: the
# canonical (c, d) substitution for independent theta and gamma, and the
# deformed ladder operators of the hermitian alpha family when theta = gamma.
# Every commutator below is computed by exact normal ordering.

from fractions import Fraction as F

from bihermite import (
    AlphaPoint,
    build_dictionary,
    commutator,
    ncqm_commutator_suite,
    qp_representation_suite,
)

theta, gamma = F(3, 5), F(16, 15)
print(f"canonical substitution at (theta, gamma) = ({theta}, {gamma}):")
for branch in (1, -1):
    d = build_dictionary(theta=theta, gamma=gamma, branch=branch)
    print(f"  branch {branch:+d}:")
    print(f"    [Q1, P1] = {commutator(d['Q1'], d['P1']).pretty()}")
    print(f"    [Q1, Q2] = {commutator(d['Q1'], d['Q2']).pretty()}")
    print(f"    [P1, P2] = {commutator(d['P1'], d['P2']).pretty()}")
rep = qp_representation_suite(theta, gamma)
print(f"  full table on both branches: {rep.status}")

print()
point = AlphaPoint.make(F(3, 5))
print(f"hermitian family at alpha = 3/5 (theta = {point.theta}):")
rep = ncqm_commutator_suite(point)
for check in rep.payload["checks"]:
    print(f"  {check['relation']}: {'ok' if check['ok'] else 'FAIL'}")

print()
print("the deformed ladders coincide with modified bosons: unit self")
print("commutators, commuting pairs, and a pure-imaginary cross commutator")
print("whose coefficient is exactly the noncommutativity scale theta.")
d = build_dictionary(alpha=F(3, 5))
print(f"  [A1, Ad2] = {commutator(d['A1'], d['Ad2']).pretty()}")
