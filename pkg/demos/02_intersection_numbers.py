"""Exact top intersection numbers of the Hodge classes.

Top monomials in the lambda classes on a smooth toroidal compactification
equal the corresponding Chern numbers on the compact dual times the
proportionality constant (-1)^{g(g+1)/2} 2^{-g} prod zeta(1-2j).  Everything
here is an exact rational; the stacky normalization makes the rank-one
Hodge line bundle have degree 1/24.
"""
from agcoh import proportionality as pr

print("== anchors ==")
print("g=1: deg lambda_1        =", pr.lambda_intersection(1, (1,)))
print("g=2: lambda_1^3          =", pr.lambda_intersection(2, (3, 0)))
print("g=2: lambda_1 lambda_2   =", pr.lambda_intersection(2, (1, 1)))
print("g=3: lambda_1^6          =", pr.lambda1_power(3))

print("\n== compact dual degrees (socle normalization) ==")
for g, exps in [(2, (3, 0)), (2, (1, 1)), (3, (6, 0, 0)), (3, (1, 1, 1)),
                (3, (0, 0, 2))]:
    print(f"g={g}, u^{exps}: degree {pr.compact_dual_degree(g, exps)}")
print("note: u_3^2 vanishes at g=3 (two generic lines span no Lagrangian)")

print("\n== pure powers of lambda_1 ==")
for g in range(1, 7):
    print(f"g={g}: lambda_1^{g*(g+1)//2:2d} = {pr.lambda1_power(g)}")

print("\n== modular form dimension asymptotics (scalar weight k -> infinity) ==")
for g in (1, 2, 3):
    coeff, expo = pr.modular_form_asymptotics(g)
    print(f"g={g}: dim M_k ~ ({coeff}) * k^{expo}")

print("\n== Siegel volumes ==")
for g in (1, 2, 3):
    print(f"g={g}: V_{g} = {pr.siegel_volume(g)}")
