"""Brute-force reference implementations.

Deliberately naive and independent of the package: plain loops over plain
tuples.
"""

import itertools
from math import gcd, prod


def phi_by_count(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def order_by_iteration(g, n):
    x, k = g % n, 1
    while x != 1 % n:
        x = x * g % n
        k += 1
    return k


def elements_of(factors):
    return list(itertools.product(*(range(n) for n in factors)))


def scale(m, e, factors):
    return tuple(m * x % n for x, n in zip(e, factors))


def is_complete_splitting(M, S, factors):
    """Every element exactly once as m*s."""
    products = [scale(m, s, factors) for m in M for s in S]
    return len(products) == prod(factors) and len(set(products)) == len(products)


def naive_complete_splittings(factors):
    """Every (M, S) with M a set of residues mod the exponent and G = MS.

    Double exponential: only for |G| <= 12.  Returns canonical pairs
    (sorted M, sorted S); the trivial group gets M stored as (1,).
    """
    factors = tuple(factors)
    order = prod(factors)
    exponent = factors[-1] if factors else 1
    G = elements_of(factors)
    out = set()
    residues = range(exponent) if exponent > 1 else [1]
    for t in range(1, len(residues) + 1):
        if order % t:
            continue
        for M in itertools.combinations(residues, t):
            for S in itertools.combinations(G, order // t):
                if is_complete_splitting(M, S, factors):
                    out.add((tuple(sorted(M)), tuple(sorted(S))))
    return out


def invariant_factor_chains(max_order):
    """All chains n_1 | n_2 | ... with each n_i >= 2 and product <= max_order."""
    chains = [()]

    def grow(chain, budget):
        last = chain[0] if chain else None
        for n in range(2, budget + 1):
            # build from the top factor down: each new factor divides the previous
            if last is not None and last % n:
                continue
            new = (n,) + chain
            chains.append(new)
            grow(new, budget // n)

    grow((), max_order)
    return sorted(set(chains), key=lambda c: (prod(c), c))
