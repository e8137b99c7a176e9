"""A complete splitting restricts to any subgroup H for which M splits G/H.

We take a splitting of Z_20, try every subgroup, and show which ones admit
the restriction H = M (S n H).  When the element g0 with m0 * g0 = 0 lies
outside H the quotient cannot be split, which the library reports as an
obstruction.  The large Z_1333 construction restricts the same way.
"""

from splitkit import (
    Certificate,
    ObstructionError,
    PreconditionError,
    all_subgroups,
    construct_pq,
    induce_subgroup,
    make_group,
    subgroup_closure,
    verify,
)

G = make_group([20])
cert = Certificate(G, (1, 2, 3, 4), [(1,), (5,), (9,), (13,), (17,)])
print(f"G = {G}, M = {list(cert.M)}, S = {[s[0] for s in cert.S]}: {verify(cert).summary()}")

for H in all_subgroups(G):
    members = sorted(h[0] for h in H.elements())
    try:
        out = induce_subgroup(cert, H)
    except ObstructionError as exc:
        print(f"  |H| = {H.order:2}: obstruction, {exc}")
    except PreconditionError as exc:
        print(f"  |H| = {H.order:2}: {exc}")
    else:
        print(f"  |H| = {H.order:2}: H = {members}, S n H = {[s[0] for s in out.S]}")

# Z_1333 / <43> is Z_43: its 42 nonzero cosets cannot be tiled by blocks of
# size |M| = 31, so the hypothesis fails even though the restriction itself
# happens to be a complete splitting of <43>
big, _ = construct_pq(31, 43, pin_generators=(6, 45), pin_split=(2, 3))
H = subgroup_closure([(43,)], big.group)
try:
    induce_subgroup(big, H)
except PreconditionError as exc:
    print(f"\nZ_1333 restricted to <43>: {exc}")
direct = Certificate(H, big.M, [s for s in big.S if s in H])
print(f"direct check of (<43>, M, S n H) with S n H = {[s[0] for s in direct.S]}: {verify(direct).summary()}")
