"""Counting a splitting set class by class.

Group elements of equal order form classes.  q(A, B) collects the
multipliers sending class B into class A, and every splitting satisfies
|A| = sum over B of |q(A, B)| * |S n B|.  Solving that from the bottom of
the divisibility order predicts |S n A| before any search is run.
"""

from splitkit import Certificate, make_group, q_profile, recursive_class_counts

G = make_group([6])
cert = Certificate(G, (1, 2), [(1,), (3,), (5,)])
prof = q_profile(cert)
print("classes of Z_6 by order:")
for c in prof.classes:
    print(f"  order {c.order}: {sorted(e[0] for e in c.elements)}, |S n A| = {prof.s_counts[c.order]}")
print("nonempty q(A, B):")
for (a, b), ms in sorted(prof.q.items()):
    if ms:
        print(f"  q({a}, {b}) = {sorted(ms)}")

pred = recursive_class_counts(cert.M, G)
print(f"recursion predicts {dict(sorted(pred.counts.items()))}; actual {prof.s_counts}")

Z7 = make_group([7])
split = Certificate(Z7, (1, 2, 4), [(1,), (3,)], "splitting")
print(f"\nZ_7 \\ {{0}} = {{1, 2, 4}} * {{1, 3}}: predicted {recursive_class_counts(split.M, Z7, 'splitting').counts}")
