# The dual family and exact biorthogonality.
#
# A deformed family is generally not orthogonal, but it has an exact dual:
# the family deformed by the inverse conjugate-transpose matrix.  Pairings
# between the two reproduce Kronecker deltas with the usual factorial
# normalizers, including across different levels.

from fractions import Fraction as F

from bihermite import (
    AlphaPoint,
    alpha_matrix,
    biorthogonality_check,
    deformed_hermite,
    dual_family,
    dual_matrix_scaling_check,
    inner_product,
)

point = AlphaPoint.make(F(3, 5))
g = alpha_matrix(point)

print("the deformed family is not orthogonal on its own:")
h10, h01 = deformed_hermite(g, 1, 0), deformed_hermite(g, 0, 1)
print(f"  <Hg[1,0], Hg[0,1]> = {inner_product(h10, h01)}   (nonzero)")

fam = dual_family(g, 1)
print()
print(f"dual matrix (inverse conjugate transpose), level 1:")
for (m, n), p in zip(fam.basis.indices, fam.basis.polys):
    print(f"  Hdual[{m},{n}] = {p.pretty()}")
print(f"  matrix route consistency (direct vs inverse-adjoint): {fam.consistent}")

print()
print("pairings against the dual are exact deltas:")
for (m, n) in fam.basis.indices:
    for (k, l) in fam.basis.indices:
        dual_p = fam.basis.polys[fam.basis.indices.index((m, n))]
        val = inner_product(dual_p, deformed_hermite(g, k, l))
        print(f"  <Hdual[{m},{n}], Hg[{k},{l}]> = {val}")

rep = biorthogonality_check(g, 4)
print()
print(f"full check through level 4 ({rep.summary})")

print()
print("sign-flipped hermitian partner: the product of level matrices is a")
print("power of the determinant, so the scaled pairing constants are det^L:")
rep = dual_matrix_scaling_check(point, 4)
for L, kappa in rep.payload["kappa"].items():
    print(f"  L = {L}: kappa = {kappa}")
