"""When four consecutive multipliers rule out a complete splitting.

If |M| = k contains k-3, ..., k (or multipliers with those gcds against n)
and lcm(k-3, ..., k) divides n, M cannot completely split Z_n.  The criterion
is only sufficient, so we compare it with an exhaustive search.
"""

from splitkit import make_group, nonexistence_criterion, recursive_class_counts, split_exists

cases = [((1, 2, 3, 4), 12), ((8, 9, 10, 11), 12), ((1, 2, 3, 4), 24), ((1, 2, 3, 4), 10),
         ((2, 3, 4, 5, 7), 60)]
for M, n in cases:
    verdict = nonexistence_criterion(M, n)
    S = split_exists(M, make_group([n]))
    found = "none" if S is None else [s[0] for s in S]
    print(f"M = {M} on Z_{n}: {verdict.message(n)}; search: {found}")

# the order-class recursion reaches the same conclusion on Z_12
pred = recursive_class_counts((1, 2, 3, 4), make_group([12]))
print(f"\nclass-count recursion for M = (1, 2, 3, 4) on Z_12: {pred.verdict} ({pred.reason})")
