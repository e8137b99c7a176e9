"""Every complete splitting of a small group has the same rigid shape.

Enumerate all complete splittings of Z_12 and Z_2 + Z_6, then look at the
unique pair (m0, g0) with m0 * g0 = 0.  It always sits in the last
coordinate, |M| = gcd(m0, n_k), and S is a transversal of <g0>.
"""

from collections import Counter

from splitkit import analyze_structure, enumerate_complete_splittings, make_group

for factors in ([12], [2, 6]):
    G = make_group(factors)
    certs = list(enumerate_complete_splittings(G))
    shapes = Counter((len(c.M), len(c.S)) for c in certs)
    print(f"{G}: {len(certs)} complete splittings, shapes (|M|, |S|) = {dict(sorted(shapes.items()))}")

    nontrivial = [c for c in certs if not c.is_trivial]
    if not nontrivial:
        continue
    cert = nontrivial[0]
    rep = analyze_structure(cert)
    print(f"  first nontrivial: M = {list(cert.M)}, S = {[list(s) for s in cert.S]}")
    print(f"  m0 = {rep.m0}, g0 = {list(rep.g0)}, ord(g0) = {rep.order_g0}, checks all true: {rep.all_true}")
    assert all(analyze_structure(c).all_true for c in certs)
    print("  every certificate passes every check")
