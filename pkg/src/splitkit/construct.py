"""Constructions of complete splittings and a nonexistence test.

The main producer is :func:`construct_pq`, which builds a nontrivial
complete splitting of Z_pq from a decomposition Z_pq^* = <x> x <g>:

1. pick a unitary split d = d' d'' with d1 | d', d2 | d''
2. factor Z_N = A + B (N = ord(g)) with one side an interval and the other
   a cyclic subgroup, |A| = (p-1)/d', |B| = (q-1)/d''
3. M2 = g^A and S2 = g^B, then spread them over the cosets of <g> with
   powers of x to get reduced residue systems M1 (mod p) and S1 (mod q)
4. M = {p} + M1 and S = {q} + S1
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from .arith import (
    UnitDecomposition,
    decompose_unit_group_pq,
    divisors,
    factorize,
    lcm,
    mul_order,
    unit_decompositions,
)
from .errors import InapplicableError, InternalConsistencyError, ValidationError
from .group import Group, make_group
from .splitting import Certificate, residue_system_check, verify

CASES = ("cond2_d1", "cond2_d2", "cond3", "cond1_p", "cond1_q")


def trivial_complete(G: Group, side: str = "multiplier", generator=None) -> Certificate:
    """``M = {1}, S = G`` or, for cyclic ``G``, ``M = Z_n, S = {generator}``."""
    if side == "multiplier":
        cert = Certificate(G, (1,), G.elements(), "complete")
    elif side == "set":
        if not G.is_cyclic:
            raise ValidationError(f"{G} is not cyclic; a single element cannot generate it")
        gamma = G.element(generator if generator is not None else (1,) * G.rank)
        if G.element_order(gamma) != G.order:
            raise ValidationError(f"{list(gamma)} does not generate {G}")
        cert = Certificate(G, range(G.exponent), (gamma,), "complete")
    else:
        raise ValueError(f"side must be 'multiplier' or 'set', got {side!r}")
    if not verify(cert).valid:
        raise InternalConsistencyError("trivial certificate failed verification")
    return cert


def factorization_interval_subgroup(
    m: int, b: int, interval_first: bool = False
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Factor Z_m as (multiples of b) + [0, b-1].

    Returns ``(subgroup, interval)``, or ``(interval, subgroup)`` when
    ``interval_first`` is set.
    """
    if b < 1 or m % b:
        raise ValueError(f"block {b} does not divide modulus {m}")
    sub = tuple(range(0, m, b))
    interval = tuple(range(b))
    return (interval, sub) if interval_first else (sub, interval)


@dataclass(frozen=True)
class PqPlan:
    decomp: UnitDecomposition
    d_prime: int
    d_dprime: int
    case_tag: str
    A: tuple[int, ...]
    B: tuple[int, ...]
    M2: tuple[int, ...]
    S2: tuple[int, ...]
    M1: tuple[int, ...]
    S1: tuple[int, ...]

    def check(self) -> None:
        """Assert every structural property the construction relies on."""
        dec = self.decomp
        p, q, d, n = dec.p, dec.q, dec.d, dec.n
        N = dec.order_g
        facts = {
            "d' d'' = d": self.d_prime * self.d_dprime == d,
            "gcd(d', d'') = 1": gcd(self.d_prime, self.d_dprime) == 1,
            "d1 | d'": self.d_prime % dec.d1 == 0,
            "d2 | d''": self.d_dprime % dec.d2 == 0,
            "|A| = (p-1)/d'": len(self.A) == (p - 1) // self.d_prime,
            "|B| = (q-1)/d''": len(self.B) == (q - 1) // self.d_dprime,
            "A + B factors Z_N": len({(a + b) % N for a in self.A for b in self.B}) == N
            and len(self.A) * len(self.B) == N,
            "M2 = g^A": self.M2 == tuple(pow(dec.g, a, n) for a in self.A),
            "S2 = g^B": self.S2 == tuple(pow(dec.g, b, n) for b in self.B),
            "M2 distinct mod p": len({v % p for v in self.M2}) == len(self.M2),
            "S2 distinct mod q": len({v % q for v in self.S2}) == len(self.S2),
            "M1 reduced mod p": residue_system_check(self.M1, p, "reduced"),
            "S1 reduced mod q": residue_system_check(self.S1, q, "reduced"),
        }
        bad = [k for k, ok in facts.items() if not ok]
        if bad:
            raise InternalConsistencyError(f"plan for p={p}, q={q} violates: {bad}")


def admissible_splits(decomp: UnitDecomposition) -> list[tuple[int, int]]:
    """Unitary splits d = d' d'' with d1 | d' and d2 | d'', ascending in d'."""
    d = decomp.d
    return [
        (a, d // a)
        for a in divisors(d)
        if gcd(a, d // a) == 1 and a % decomp.d1 == 0 and (d // a) % decomp.d2 == 0
    ]


def applicable_cases(
    dec: UnitDecomposition, splits: list[tuple[int, int]]
) -> Iterator[tuple[str, int, int]]:
    """(case, d', d'') triples that apply to ``dec``, in preference order.

    The d1 = 1 case takes d' = 1 and spreads S2 by powers of x, which keeps
    S1 distinct modulo q only when x = 1 (mod p); symmetrically for d2 = 1.
    Such an x exists whenever d1 = 1 (resp. d2 = 1), so these cases are
    tested against the decomposition actually in hand.
    """
    d = dec.d
    ord_p_x = mul_order(dec.x, dec.p)
    ord_q_x = mul_order(dec.x, dec.q)
    cond2_d1 = dec.d1 == 1 and ord_p_x == 1 and (1, d) in splits
    cond2_d2 = dec.d2 == 1 and ord_q_x == 1 and (d, 1) in splits
    if cond2_d1:
        yield "cond2_d1", 1, d
    if cond2_d2:
        yield "cond2_d2", d, 1
    if d > 1 and len(factorize(d)) == 1:
        # a prime power forces d1 = 1 or d2 = 1, reducing to the cases above
        if cond2_d1:
            yield "cond3", 1, d
        elif cond2_d2:
            yield "cond3", d, 1
    for a, b in splits:
        if ord_p_x == a:
            yield "cond1_p", a, b
    for a, b in splits:
        if ord_q_x == b:
            yield "cond1_q", a, b


def build_plan(dec: UnitDecomposition, case_tag: str, d_prime: int, d_dprime: int) -> PqPlan:
    p, q, n, x, g = dec.p, dec.q, dec.n, dec.x, dec.g
    N = dec.order_g
    size_a = (p - 1) // d_prime
    size_b = (q - 1) // d_dprime
    # cond1_p and cond2_d1 spread M2 by x^i and S2 by x^(d' j);
    # cond1_q and cond2_d2 mirror this
    p_side = case_tag == "cond1_p" or (case_tag in ("cond2_d1", "cond3") and d_prime == 1)
    if p_side:
        A, B = factorization_interval_subgroup(N, size_b)
        m_step, s_step = 1, d_prime
    else:
        A, B = factorization_interval_subgroup(N, size_a, interval_first=True)
        m_step, s_step = d_dprime, 1
    M2 = tuple(pow(g, a, n) for a in A)
    S2 = tuple(pow(g, b, n) for b in B)
    M1 = tuple(pow(x, m_step * i, n) * v % n for i in range(d_prime) for v in M2)
    S1 = tuple(pow(x, s_step * j, n) * v % n for j in range(d_dprime) for v in S2)
    plan = PqPlan(dec, d_prime, d_dprime, case_tag, A, B, M2, S2, M1, S1)
    plan.check()
    return plan


def construct_pq(
    p: int,
    q: int,
    pin_generators: Optional[tuple[int, int]] = None,
    pin_split: Optional[tuple[int, int]] = None,
    force_case: Optional[str] = None,
) -> tuple[Certificate, PqPlan]:
    """Build a nontrivial complete splitting of Z_pq.

    Without ``pin_generators`` the decompositions Z_pq^* = <x> x <g> are
    tried in ascending (g, x) order and the first one with an applicable
    case wins.  ``pin_generators=(x, g)`` fixes the decomposition,
    ``pin_split=(d', d'')`` fixes the unitary split of d, and ``force_case``
    selects one of :data:`CASES`.  Raises :class:`InapplicableError` when the
    hypotheses gcd(d, (p-1)/d) = gcd(d, (q-1)/d) = 1 fail or no case applies.
    """
    if force_case is not None and force_case not in CASES:
        raise ValueError(f"unknown case {force_case!r}; expected one of {CASES}")
    if pin_generators is not None:
        decomps = iter([decompose_unit_group_pq(p, q, pin_generators)])
    else:
        decomps = unit_decompositions(p, q)
    first = next(decomps)
    d = first.d
    for label, prime in (("p", p), ("q", q)):
        h = gcd(d, (prime - 1) // d)
        if h != 1:
            raise InapplicableError(
                f"construction inapplicable: gcd(d,({label}-1)/d)={h} for p={p}, q={q}, d={d}"
            )
    if pin_split is not None:
        pin_split = tuple(pin_split)

    chosen = None
    for dec in itertools.chain([first], decomps):
        splits = admissible_splits(dec)
        if pin_split is not None:
            if pin_split not in splits:
                if pin_generators is not None:
                    raise ValidationError(
                        f"split {pin_split} is not admissible; admissible splits: {splits}"
                    )
                continue
            splits = [pin_split]
        chosen = next(
            (
                (dec, tag, a, b)
                for tag, a, b in applicable_cases(dec, splits)
                if force_case is None or tag == force_case
            ),
            None,
        )
        if chosen is not None:
            break
    if chosen is None:
        what = f"case {force_case}" if force_case else "no case"
        raise InapplicableError(
            f"{what} applies for p={p}, q={q} with "
            + ("the pinned generators" if pin_generators else "any decomposition of Z_pq^*")
        )
    dec, tag, a, b = chosen
    plan = build_plan(dec, tag, a, b)

    G = make_group([p * q])
    cert = Certificate(G, (p,) + plan.M1, [(q,)] + [(s,) for s in plan.S1], "complete")
    rep = verify(cert)
    if not rep.valid:
        raise InternalConsistencyError(f"construction for p={p}, q={q} fails: {rep.summary()}")
    return cert, plan


@dataclass(frozen=True)
class NonexistenceVerdict:
    applies: bool
    k: int
    lcm_value: int
    witness: Optional[str] = None  # "plain" or "remark"
    multipliers: tuple[int, ...] = ()

    def message(self, n: int) -> str:
        if self.applies:
            return f"M does not completely split Z_{n} ({self.witness} clause, k={self.k})"
        return f"criterion does not apply for Z_{n} (k={self.k}, lcm={self.lcm_value})"


def nonexistence_criterion(M, n: int) -> NonexistenceVerdict:
    """Sufficient test that ``M`` cannot completely split Z_n.

    With k = |M| and lcm(k-3, ..., k) | n, it fires if either
    {k-3, k-2, k-1, k} is contained in M (mod n) or M holds m_0..m_3 with
    gcd(m_i, n) = k - i.  Failure to fire says nothing about existence.
    """
    if n < 1:
        raise ValueError("n must be positive")
    M = {int(m) % n for m in M}
    k = len(M)
    if k < 4:
        raise ValueError(f"criterion needs |M| >= 4, got {k}")
    L = lcm(k - 3, k - 2, k - 1, k)
    if n % L:
        return NonexistenceVerdict(False, k, L)
    wanted = [k - i for i in range(4)]
    if all(w % n in M for w in wanted):
        return NonexistenceVerdict(True, k, L, "plain", tuple(wanted))
    picks = []
    for w in wanted:
        hit = min((m for m in M if gcd(m, n) == w), default=None)
        if hit is None:
            return NonexistenceVerdict(False, k, L)
        picks.append(hit)
    return NonexistenceVerdict(True, k, L, "remark", tuple(picks))


@dataclass(frozen=True)
class PGroupReport:
    prime: Optional[int]
    rank: int
    allowed: str
    searched: bool
    certificates: int = 0
    nontrivial_shapes: tuple = ()

    @property
    def agrees(self) -> bool:
        return not self.nontrivial_shapes


def p_group_triviality(G: Group, search_limit: int = 64) -> PGroupReport:
    """Which complete splittings a p-group admits, confirmed by search when small.

    Rank >= 2 allows only |M| = 1; rank 1 allows |M| = 1 or |S| = 1.
    """
    from .search import SearchConfig, enumerate_complete_splittings

    fac = factorize(G.order)
    if len(fac) > 1:
        raise ValueError(f"|G| = {G.order} is not a prime power")
    prime = fac[0][0] if fac else None
    if G.rank == 0:
        allowed = "vacuous"
    elif G.rank == 1:
        allowed = "|M|=1 or |S|=1"
    else:
        allowed = "|M|=1"
    if G.order > search_limit:
        return PGroupReport(prime, G.rank, allowed, searched=False)
    count = 0
    bad = []
    for cert in enumerate_complete_splittings(G, SearchConfig(ceiling=search_limit)):
        count += 1
        ok = len(cert.M) == 1 or (G.rank <= 1 and len(cert.S) == 1)
        if not ok:
            bad.append((cert.M, cert.S))
    return PGroupReport(prime, G.rank, allowed, True, count, tuple(bad))
