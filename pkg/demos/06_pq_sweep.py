"""Which Z_pq get a nontrivial complete splitting from the construction?

For every prime pair p < q <= 50 print the case used, or why the
construction does not apply.  Every built certificate is verified.
"""

from splitkit import InapplicableError, construct_pq, verify
from splitkit.arith import is_prime

primes = [p for p in range(2, 51) if is_prime(p)]
built = 0
for i, p in enumerate(primes):
    for q in primes[i + 1:]:
        try:
            cert, plan = construct_pq(p, q)
        except InapplicableError as exc:
            print(f"Z_{p * q:<5} ({p:2}, {q:2})  -  {exc}")
            continue
        assert verify(cert).valid
        built += 1
        dec = plan.decomp
        print(f"Z_{p * q:<5} ({p:2}, {q:2})  {plan.case_tag:9} x={dec.x:<5} g={dec.g:<3} "
              f"d={dec.d} split=({plan.d_prime},{plan.d_dprime})")
print(f"\n{built} constructions, all verified")
