"""A nontrivial complete splitting of Z_1333 = Z_31 x Z_43, step by step.

Z_1333^* is written as <x> x <g> with x = 6, g = 45.  The exponent of <g>
is split into an interval and a subgroup, pushed through powers of g, and
spread over the cosets of <g> with powers of x.  The result M, S has
|M| = 31 and |S| = 43 and every element of Z_1333 is m*s exactly once.
"""

from splitkit import analyze_structure, construct_pq, mul_order, verify

p, q, x, g = 31, 43, 6, 45
n = p * q

print(f"unit group data for n = {n}")
for label, (a, mod) in {"ord_n(x)": (x, n), "ord_n(g)": (g, n), "ord_p(g)": (g, p),
                        "ord_q(g)": (g, q), "ord_q(x)": (x, q)}.items():
    print(f"  {label:9} = {mul_order(a, mod)}")

cert, plan = construct_pq(p, q, pin_generators=(x, g), pin_split=(2, 3))
dec = plan.decomp
print(f"\nd = {dec.d}, d1 = {dec.d1}, d2 = {dec.d2}; split d' = {plan.d_prime}, d'' = {plan.d_dprime}")
print(f"case {plan.case_tag}: ord_q(x) = {mul_order(x, q)} equals d''")
print(f"A = [0, {len(plan.A) - 1}] and B = <{plan.B[1]}> factor Z_{dec.order_g}")
print(f"|M2| = {len(plan.M2)}, |S2| = {len(plan.S2)}, |M1| = {len(plan.M1)}, |S1| = {len(plan.S1)}")

print("\n" + verify(cert).summary())
rep = analyze_structure(cert)
print(f"zero is {rep.m0} * {rep.g0[0]}; |M| = gcd(m0, n) = {rep.gcd_m0}")
for name, ok in rep.checks.items():
    print(f"  {name:22} {ok}")
