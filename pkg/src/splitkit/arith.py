"""Exact integer arithmetic: factorization, totient, multiplicative order and
the decomposition of the unit group of Z_pq into two cyclic factors.

Trial division is used throughout; the supported range is n < 2**63 with
everything of interest well below 10**7.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, prod
from typing import Iterator, Optional

from .errors import ValidationError

Factorization = tuple[tuple[int, int], ...]


def factorize(n: int) -> Factorization:
    """Return the prime factorization of ``n`` as ``((p, e), ...)``.

    Primes are strictly increasing; ``factorize(1) == ()``.

    >>> factorize(12)
    ((2, 2), (3, 1))
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    # 6k +/- 1 wheel
    p = 5
    step = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % f for f in range(3, isqrt(n) + 1, 2))


def is_prime_power(n: int) -> bool:
    return len(factorize(n)) == 1


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


def mul_order(g: int, n: int) -> int:
    """Least ``l >= 1`` with ``g**l == 1 (mod n)``.

    Starts from phi(n) and strips prime factors while the power stays 1,
    which costs O(log phi(n)) modular exponentiations.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if gcd(g, n) != 1:
        raise ValueError(f"{g} is not a unit modulo {n}")
    if n == 1:
        return 1
    g %= n
    order = euler_phi(n)
    for p in prime_factors(order):
        while order % p == 0 and pow(g, order // p, n) == 1:
            order //= p
    return order


def cyclic_subgroup(g: int, n: int) -> frozenset[int]:
    """The powers of the unit ``g`` modulo ``n``."""
    out = {1 % n}
    x = g % n
    while x not in out:
        out.add(x)
        x = x * g % n
    return frozenset(out)


@dataclass(frozen=True)
class UnitDecomposition:
    """Z_pq^* written as <x> x <g> with ord(x) = d and ord(g) = phi(pq)/d."""

    p: int
    q: int
    d: int
    x: int
    g: int
    d1: int
    d2: int

    @property
    def n(self) -> int:
        return self.p * self.q

    @property
    def order_g(self) -> int:
        return (self.p - 1) * (self.q - 1) // self.d


def _check_decomposition(p: int, q: int, x: int, g: int) -> UnitDecomposition:
    n = p * q
    d = gcd(p - 1, q - 1)
    x %= n
    g %= n
    for name, v in (("x", x), ("g", g)):
        if gcd(v, n) != 1:
            raise ValidationError(f"{name}={v} is not a unit modulo {n}")
    if mul_order(x, n) != d:
        raise ValidationError(
            f"invariant ord_pq(x) = d violated: ord_{n}({x}) = {mul_order(x, n)}, d = {d}"
        )
    big = (p - 1) * (q - 1) // d
    if mul_order(g, n) != big:
        raise ValidationError(
            f"invariant ord_pq(g) = (p-1)(q-1)/d violated: "
            f"ord_{n}({g}) = {mul_order(g, n)}, expected {big}"
        )
    if cyclic_subgroup(x, n) & cyclic_subgroup(g, n) != {1}:
        raise ValidationError(f"invariant <x> ∩ <g> = {{1}} violated for x={x}, g={g}")
    ord_p = mul_order(g, p)
    ord_q = mul_order(g, q)
    d1 = (p - 1) // ord_p
    d2 = (q - 1) // ord_q
    if d % (d1 * d2) or gcd(d1, d2) != 1:
        # impossible for a genuine decomposition; kept as a guard
        raise ValidationError(f"invariant d1*d2 | d, gcd(d1, d2) = 1 violated: d1={d1}, d2={d2}")
    return UnitDecomposition(p=p, q=q, d=d, x=x, g=g, d1=d1, d2=d2)


def unit_decompositions(p: int, q: int) -> Iterator[UnitDecomposition]:
    """Every decomposition Z_pq^* = <x> x <g>, ascending in g, then in x."""
    if not (is_prime(p) and is_prime(q)):
        raise ValidationError(f"p={p} and q={q} must both be prime")
    if p == q:
        raise ValidationError("p and q must be distinct")
    n = p * q
    d = gcd(p - 1, q - 1)
    big = (p - 1) * (q - 1) // d
    units = [u for u in range(1, n) if gcd(u, n) == 1]
    small = [u for u in units if mul_order(u, n) == d]
    for g in units:
        if mul_order(g, n) != big:
            continue
        g_powers = cyclic_subgroup(g, n)
        for x in small:
            if cyclic_subgroup(x, n) & g_powers == {1}:
                yield _check_decomposition(p, q, x, g)


def decompose_unit_group_pq(
    p: int, q: int, pin: Optional[tuple[int, int]] = None
) -> UnitDecomposition:
    """Split Z_pq^* into <x> x <g>.

    ``pin=(x, g)`` validates and uses a given pair; otherwise ``g`` is the
    smallest unit of maximal order and ``x`` the smallest unit of order d
    whose cyclic group meets <g> trivially.
    """
    if pin is not None:
        if not (is_prime(p) and is_prime(q)) or p == q:
            raise ValidationError(f"p={p} and q={q} must be distinct primes")
        return _check_decomposition(p, q, *pin)
    # a cyclic subgroup of maximal order is a direct summand, so this exists
    return next(unit_decompositions(p, q))
