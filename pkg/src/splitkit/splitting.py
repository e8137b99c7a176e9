"""Splitting certificates and everything that can be checked about them.

A certificate ``(G, M, S, K)`` claims that every element of ``G`` outside
``K`` is ``m * s`` for exactly one pair ``(m, s)`` in ``M x S``.  The four
kinds differ only in ``K``:

    complete    K = {}
    splitting   K = {0}
    packing     0 in K
    partial     K arbitrary

Multipliers are integers reduced modulo the exponent of the ambient group,
since two multipliers congruent modulo the exponent act identically.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Union

from .arith import euler_phi, is_prime
from .errors import (
    InternalConsistencyError,
    ObstructionError,
    PreconditionError,
    ValidationError,
)
from .group import Element, Group, QuotientView, Subgroup, quotient, subgroup_closure

KINDS = ("complete", "splitting", "packing", "partial")

Ambient = Union[Group, Subgroup]


def canonical_multipliers(
    M: Iterable[int], exponent: int, modulus: Optional[int] = None
) -> tuple[int, ...]:
    """Reduce ``M`` modulo ``modulus`` and sort, rejecting entries that
    coincide modulo ``exponent``.

    ``modulus`` defaults to ``exponent``; a subgroup passes its parent's
    exponent so multipliers keep their names.  When the modulus is 1 every
    multiplier acts as the identity and is stored as ``1``.
    """
    modulus = exponent if modulus is None else modulus
    M = [int(m) for m in M]
    if not M:
        raise ValidationError("multiplier set M must be nonempty")
    seen: dict[int, int] = {}
    for m in M:
        r = m % exponent if exponent > 1 else 0
        if r in seen:
            raise ValidationError(
                f"multipliers {seen[r]} and {m} coincide modulo the exponent {exponent}"
            )
        seen[r] = m
    return tuple(sorted({m % modulus if modulus > 1 else 1 for m in M}))


@dataclass(frozen=True)
class Certificate:
    group: Ambient
    M: tuple[int, ...]
    S: tuple[Element, ...]
    kind: str = "complete"
    K: frozenset[Element] = None  # type: ignore[assignment]

    def __post_init__(self):
        G = self.group
        if self.kind not in KINDS:
            raise ValidationError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        object.__setattr__(
            self, "M", canonical_multipliers(self.M, G.exponent, G.group.exponent)
        )

        S = [G.element(s) for s in self.S]
        if len(set(S)) != len(S):
            raise ValidationError("S contains a repeated element")
        object.__setattr__(self, "S", tuple(sorted(S)))

        if self.K is None:
            K: frozenset = frozenset({G.zero}) if self.kind == "splitting" else frozenset()
        else:
            K = frozenset(G.element(k) for k in self.K)
        if self.kind == "complete" and K:
            raise ValidationError("a complete splitting has empty K")
        if self.kind == "splitting" and K != {G.zero}:
            raise ValidationError("a splitting has K = {0}")
        if self.kind == "packing" and G.zero not in K:
            raise ValidationError("a packing needs 0 in K")
        object.__setattr__(self, "K", K)

    @property
    def is_trivial(self) -> bool:
        return len(self.M) == 1 or len(self.S) == 1

    def canonical_key(self) -> tuple:
        return (self.M, self.S, tuple(sorted(self.K)), self.kind)


@dataclass
class VerificationReport:
    covered: int
    collisions: list[tuple[Element, tuple[int, Element], tuple[int, Element]]] = field(
        default_factory=list
    )
    missed: list[Element] = field(default_factory=list)
    forbidden_hits: list[Element] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not (self.collisions or self.missed or self.forbidden_hits)

    def summary(self) -> str:
        verdict = "VALID" if self.valid else "INVALID"
        return (
            f"{verdict}: covered={self.covered} collisions={len(self.collisions)} "
            f"missed={len(self.missed)} forbidden_hits={len(self.forbidden_hits)}"
        )


def verify_on(ambient, M, S, K=frozenset(), lenient_K: bool = False) -> VerificationReport:
    """Check exact-once coverage of ``ambient \\ K`` by the products ``M * S``.

    ``ambient`` is anything exposing ``elements()`` and ``mul`` (a group, a
    subgroup, or a quotient view).  Products landing in ``K`` are reported
    as forbidden hits unless ``lenient_K`` is set.
    """
    K = frozenset(K)
    reps: dict[Element, list[tuple[int, Element]]] = defaultdict(list)
    for m in M:
        for s in S:
            reps[ambient.mul(m, s)].append((m, s))
    report = VerificationReport(covered=0)
    for g in ambient.elements():
        hits = reps.get(g, ())
        if g in K:
            if hits and not lenient_K:
                report.forbidden_hits.append(g)
            continue
        if not hits:
            report.missed.append(g)
        elif len(hits) == 1:
            report.covered += 1
        else:
            report.collisions.extend((g, hits[0], h) for h in hits[1:])
    return report


def verify(cert: Certificate, lenient_K: bool = False) -> VerificationReport:
    return verify_on(cert.group, cert.M, cert.S, cert.K, lenient_K=lenient_K)


def _require_valid(cert: Certificate, kinds=KINDS) -> None:
    if cert.kind not in kinds:
        raise PreconditionError(f"expected a certificate of kind {kinds}, got {cert.kind!r}")
    rep = verify(cert)
    if not rep.valid:
        raise PreconditionError(f"certificate does not verify: {rep.summary()}")


def residue_system_check(vals: Iterable[int], modulus: int, mode: str = "complete") -> bool:
    """Is ``vals`` a complete (or reduced) residue system modulo ``modulus``?"""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    vals = list(vals)
    residues = {v % modulus for v in vals}
    if len(residues) != len(vals):
        return False
    if mode == "complete":
        return len(vals) == modulus
    if mode == "reduced":
        return len(vals) == euler_phi(modulus) and all(gcd(r, modulus) == 1 for r in residues)
    raise ValueError(f"mode must be 'complete' or 'reduced', got {mode!r}")


@lru_cache(maxsize=4096)
def _scaled_group(G: Group, m: int) -> frozenset[Element]:
    return frozenset(G.mul(m, g) for g in G.elements())


@lru_cache(maxsize=4096)
def _cyclic_with_cosets(G: Group, g: Element) -> tuple[Subgroup, QuotientView]:
    cyc = subgroup_closure([g], G)
    return cyc, QuotientView(G, cyc)


@dataclass
class StructureReport:
    m0: int
    g0: Element
    order_g0: int
    gcd_m0: int
    checks: dict[str, bool]

    @property
    def all_true(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def analyze_structure(cert: Certificate, strict: bool = True) -> StructureReport:
    """Evaluate the structure theorem for complete splittings on ``cert``.

    Locates the unique pair with ``m0 * g0 = 0`` and checks:

    * ``mS_eq_mG``: m0*S equals m0*G
    * ``g_form``: g0 = (0, ..., 0, y * n_k/(m0, n_k)) with gcd(y, (m0, n_k)) = 1
    * ``Mg_eq_cyclic``: M*g0 equals the cyclic subgroup <g0>
    * ``M_size_eq_gcd``: |M| = (m0, n_k)
    * ``M_residue_system``: M is a complete residue system modulo ord(g0)
    * ``S_transversal``: S meets each coset of <g0> exactly once

    Cyclic groups additionally get the three ``cyclic_*`` residue checks.
    With ``strict`` a failed check raises, since on a verified certificate it
    can only mean a bug.
    """
    G = cert.group
    if not isinstance(G, Group):
        raise PreconditionError("structure analysis needs a group in invariant-factor form")
    _require_valid(cert, ("complete",))

    zero = G.zero
    pairs = [(m, s) for m in cert.M for s in cert.S if G.mul(m, s) == zero]
    if len(pairs) != 1:
        raise InternalConsistencyError(f"zero has {len(pairs)} representations")
    m0, g0 = pairs[0]
    nk = G.exponent
    c = gcd(m0, nk)
    og = G.element_order(g0)
    cyc, Q = _cyclic_with_cosets(G, g0)

    checks: dict[str, bool] = {}
    checks["mS_eq_mG"] = {G.mul(m0, s) for s in cert.S} == _scaled_group(G, m0)

    if G.rank == 0:
        g_form = True
    else:
        step = nk // c
        last = g0[-1]
        g_form = (
            all(x == 0 for x in g0[:-1]) and last % step == 0 and gcd(last // step, c) == 1
        )
    checks["g_form"] = g_form
    checks["Mg_eq_cyclic"] = {G.mul(m, g0) for m in cert.M} == cyc.elements_set
    checks["M_size_eq_gcd"] = len(cert.M) == c
    checks["M_residue_system"] = residue_system_check(cert.M, og, "complete")
    cosets = [Q.rep(s) for s in cert.S]
    checks["S_transversal"] = len(set(cosets)) == len(cosets) == Q.order

    if G.rank == 1:
        n = G.order
        S_ints = [s[0] for s in cert.S]
        checks["cyclic_M_residue"] = residue_system_check(cert.M, c, "complete")
        checks["cyclic_S_residue"] = residue_system_check(S_ints, n // c, "complete")
        checks["cyclic_moduli_agree"] = n // gcd(g0[0], n) == c

    report = StructureReport(m0=m0, g0=g0, order_g0=og, gcd_m0=c, checks=checks)
    if strict and not report.all_true:
        raise InternalConsistencyError(
            f"structure checks failed on a verified certificate: {report.failed()}"
        )
    return report


# --- order partition ---------------------------------------------------------


@dataclass(frozen=True)
class OrderClass:
    order: int
    elements: frozenset[Element]

    def __len__(self):
        return len(self.elements)

    def nonzero_count(self, zero: Element) -> int:
        """c(A): the number of nonzero elements in the class."""
        return len(self.elements) - (zero in self.elements)


@lru_cache(maxsize=None)
def order_partition(G) -> tuple[OrderClass, ...]:
    """Classes of equal element order, sorted by ascending order."""
    by_order: dict[int, set] = defaultdict(set)
    for g in G.elements():
        by_order[G.element_order(g)].add(g)
    return tuple(OrderClass(o, frozenset(by_order[o])) for o in sorted(by_order))


@dataclass
class QProfile:
    """Order partition with the multiplier structure q(A, B) = {m : mB ⊆ A}.

    Classes are identified by their element order.  ``divides`` holds the
    pairs ``(B, A)`` with ``B | A``.
    """

    classes: tuple[OrderClass, ...]
    q: dict[tuple[int, int], frozenset[int]]
    divides: frozenset[tuple[int, int]]
    s_counts: dict[int, int]
    zero: Element

    @property
    def orders(self) -> list[int]:
        return [c.order for c in self.classes]

    def cls(self, order: int) -> OrderClass:
        return next(c for c in self.classes if c.order == order)

    def proper_divisors(self, a: int) -> list[int]:
        return [b for (b, x) in self.divides if x == a and b != a]

    @property
    def is_partial_order(self) -> bool:
        return not any(
            (a, b) in self.divides for (b, a) in self.divides if a != b
        )

    def diagonal_nonempty(self, a: int) -> bool:
        return bool(self.q[(a, a)])


@lru_cache(maxsize=4096)
def _q_structure(G, M: tuple[int, ...], classes: tuple[OrderClass, ...]):
    where = {}
    for c in classes:
        for e in c.elements:
            where[e] = c.order
    q: dict[tuple[int, int], set] = {(a.order, b.order): set() for a in classes for b in classes}
    for b in classes:
        for m in M:
            targets = {where[G.mul(m, e)] for e in b.elements}
            if len(targets) != 1:
                raise InternalConsistencyError(
                    f"order partition is not compatible with multiplier {m}"
                )
            q[(targets.pop(), b.order)].add(m)
    steps = {(b, a) for (a, b), ms in q.items() if ms}
    # reflexive-transitive closure
    orders = [c.order for c in classes]
    reach = {o: {o} for o in orders}
    for b, a in steps:
        reach[b].add(a)
    changed = True
    while changed:
        changed = False
        for o in orders:
            extra = set().union(*(reach[x] for x in reach[o])) - reach[o]
            if extra:
                reach[o] |= extra
                changed = True
    divides = frozenset((b, a) for b in orders for a in reach[b])
    return {k: frozenset(v) for k, v in q.items()}, divides


def q_profile_for(G, M: Iterable[int], S: Iterable[Element] = ()) -> QProfile:
    classes = order_partition(G)
    q, divides = _q_structure(G, tuple(M), classes)
    S = set(S)
    s_counts = {c.order: len(c.elements & S) for c in classes}
    return QProfile(classes, q, divides, s_counts, G.zero)


def q_profile(cert: Certificate) -> QProfile:
    """Order-partition profile of ``cert``.

    Also asserts that q(A, A) is nonempty for every class whose order is
    coprime to some multiplier, which holds for any multiplier set.
    """
    prof = q_profile_for(cert.group, cert.M, cert.S)
    for c in prof.classes:
        if any(gcd(m, c.order) == 1 for m in cert.M) and not prof.diagonal_nonempty(c.order):
            raise InternalConsistencyError(f"q(A, A) empty for class of order {c.order}")
    return prof


def _class_target(c: OrderClass, kind: str, zero: Element) -> int:
    if kind == "complete":
        return len(c.elements)
    if kind == "splitting":
        return c.nonzero_count(zero)
    raise PreconditionError(f"counting identities are defined for complete and splitting kinds, not {kind!r}")


def counting_check(cert: Certificate, profile: Optional[QProfile] = None) -> bool:
    """Check |A| (or c(A)) = sum_B |q(A, B)| * |S ∩ B| for every class A."""
    _require_valid(cert, ("complete", "splitting"))
    prof = profile if profile is not None else q_profile(cert)
    for a in prof.classes:
        total = sum(len(prof.q[(a.order, b)]) * prof.s_counts[b] for b in prof.orders)
        if total != _class_target(a, cert.kind, prof.zero):
            return False
    return True


@dataclass
class ClassCountPrediction:
    """Outcome of the bottom-up class-count recursion.

    ``verdict`` is ``"counts"`` (``counts`` holds the forced |S ∩ A| per class
    order), ``"none"`` (no splitting with this M exists) or
    ``"not_partition"`` (divisibility is not a partial order).
    """

    verdict: str
    counts: Optional[dict[int, int]] = None
    reason: str = ""


def evaluation_order(prof: QProfile) -> list[int]:
    """Topological order of classes, proper divisors first, ties by ascending order."""
    pending = set(prof.orders)
    done: list[int] = []
    while pending:
        ready = sorted(a for a in pending if all(b in done for b in prof.proper_divisors(a)))
        if not ready:
            raise PreconditionError("divisibility relation has a cycle")
        done.append(ready[0])
        pending.remove(ready[0])
    return done


def recursive_class_counts(M: Iterable[int], G, kind: str = "complete") -> ClassCountPrediction:
    """Predict |S ∩ A| for each order class A of any splitting ``G = MS``.

    The count of a class is (|A| - sum over proper divisors B of
    |q(A, B)| |S ∩ B|) / |q(A, A)|, using c(A) in place of |A| for ordinary
    splittings.  A non-integral or negative value, or an empty q(A, A),
    proves no splitting with this M exists.
    """
    M = tuple(M)
    prof = q_profile_for(G, M)
    if not prof.is_partial_order:
        return ClassCountPrediction("not_partition", reason="divisibility is not antisymmetric")
    for a in prof.orders:
        if not prof.diagonal_nonempty(a):
            return ClassCountPrediction(
                "none", reason=f"no multiplier is coprime to the class order {a}"
            )
    counts: dict[int, int] = {}
    for a in evaluation_order(prof):
        rest = _class_target(prof.cls(a), kind, prof.zero) - sum(
            len(prof.q[(a, b)]) * counts[b] for b in prof.proper_divisors(a)
        )
        value = Fraction(rest, len(prof.q[(a, a)]))
        if value.denominator != 1 or value < 0:
            return ClassCountPrediction(
                "none", counts=counts, reason=f"class of order {a} would need {value} elements of S"
            )
        counts[a] = int(value)
    return ClassCountPrediction("counts", counts=counts)


# --- subgroup induction ------------------------------------------------------


def induce_subgroup(
    cert: Certificate,
    H: Subgroup,
    T_witness: Optional[Iterable[Element]] = None,
    cfg=None,
) -> Certificate:
    """Restrict a complete splitting ``G = MS`` to the subgroup ``H``.

    Requires that ``M`` splits ``G/H``: either ``T_witness`` (coset
    representatives of a splitting set) is verified, or a search finds one.
    Returns the complete certificate ``(H, M, S ∩ H)``.
    """
    from .search import split_exists

    G = cert.group
    _require_valid(cert, ("complete",))
    if H.parent != G:
        raise ValidationError("H is not a subgroup of the certificate's group")
    if H.order == G.order:
        return cert

    zero = G.zero
    m0, g0 = next((m, s) for m in cert.M for s in cert.S if G.mul(m, s) == zero)
    if g0 not in H:
        raise ObstructionError(
            f"the element {list(g0)} with {m0}*{list(g0)} = 0 lies outside H, "
            "so M does not split G/H"
        )

    Q = quotient(G, H)
    if T_witness is not None:
        T = sorted({Q.rep(t) for t in T_witness})
        rep = verify_on(Q, cert.M, T, {Q.zero})
        if not rep.valid:
            raise PreconditionError(f"witness T does not split G/H: {rep.summary()}")
    elif split_exists(cert.M, Q, {Q.zero}, cfg) is None:
        raise PreconditionError("M does not split G/H")

    S_H = [s for s in cert.S if s in H]
    if len(S_H) * len(cert.M) != H.order:
        raise InternalConsistencyError(
            f"|S ∩ H| = {len(S_H)} but |H|/|M| = {H.order}/{len(cert.M)}"
        )
    induced = Certificate(H, cert.M, tuple(S_H), "complete")
    rep = verify(induced)
    if not rep.valid:
        raise InternalConsistencyError(f"induced certificate fails: {rep.summary()}")
    return induced


def derive_partial_from_splitting(cert: Certificate, p: int) -> Certificate:
    """Keep the multipliers and splitting elements prime to ``p``.

    For a splitting of Z_n and a prime ``p | n`` this yields a partial
    splitting for K = pZ_n.  If ``p`` does not divide ``n``, multiplication by
    ``p`` is a bijection and coprimality to ``p`` is not defined on residues;
    the source splitting is returned relabelled as partial.
    """
    G = cert.group
    if not isinstance(G, Group) or not G.is_cyclic:
        raise PreconditionError("partial derivation needs a cyclic group")
    if not is_prime(p):
        raise ValidationError(f"p={p} is not prime")
    _require_valid(cert, ("splitting",))
    n = G.order
    if n % p:
        return Certificate(G, cert.M, cert.S, "partial", cert.K)
    K = {G.mul(p, g) for g in G.elements()}
    M2 = [m for m in cert.M if gcd(m, p) == 1]
    S2 = [s for s in cert.S if gcd(s[0], p) == 1]
    out = Certificate(G, M2, S2, "partial", K)
    rep = verify(out)
    if not rep.valid:
        raise InternalConsistencyError(f"derived partial splitting fails: {rep.summary()}")
    return out
