# Generating functions with exact truncated series.
#
# Three exponential generating functions tie the Hermite families together.
# The library expands them as formal power series in bookkeeping variables
# (u, ubar) with polynomial coefficients and exact rational arithmetic, so
# "the (k,l) coefficient times k! l! is H[k,l]" is a literal equality.

from math import factorial

from bihermite import (
    generating_series_complex,
    generating_series_real,
    hermite_sum,
    real_hermite,
)

N = 6
S = generating_series_complex(N)
print(f"exp(u z + ubar zbar - u ubar), truncated at total order {N}:")
for j, k in [(1, 0), (1, 1), (2, 0), (2, 2)]:
    print(f"  coefficient of u^{j} ubar^{k}: {S.coeff(j, k).pretty()}")

print()
match = all(
    S.coeff(k, l) * (factorial(k) * factorial(l)) == hermite_sum(k, l)
    for t in range(N + 1)
    for k in range(t + 1)
    for l in [t - k]
)
print(f"coefficient (k,l) times k! l! equals H[k,l] for all k+l <= {N}: {match}")

print()
R = generating_series_real(5)
print("exp(2 u x1 - u^2 + 2 ubar x2 - ubar^2) generates products of real")
print("Hermite polynomials in the same way:")
for j, k in [(1, 0), (2, 0), (1, 1)]:
    print(f"  coefficient of u^{j} ubar^{k}: {R.coeff(j, k).pretty()}")
match = all(
    R.coeff(k, l) * (factorial(k) * factorial(l)) == real_hermite(k, 0) * real_hermite(l, 1)
    for t in range(6)
    for k in range(t + 1)
    for l in [t - k]
)
print(f"matches H_k(x1) H_l(x2) for all k+l <= 5: {match}")
