"""Finite abelian groups Z_{n_1} + ... + Z_{n_k} in invariant-factor form.

Group elements are plain tuples of canonical coordinates (coordinate ``i``
lies in ``[0, n_i)``). Sets of elements are kept in lexicographic order so
every output is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

from .arith import lcm
from .errors import ValidationError

Element = tuple[int, ...]


@dataclass(frozen=True)
class Group:
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(n) for n in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for n in factors:
            if n < 2:
                raise ValidationError(f"invariant factors must be >= 2, got {list(factors)}")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValidationError(
                    f"invariant factors must form a divisibility chain, got {list(factors)}"
                )

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def is_cyclic(self) -> bool:
        return self.rank <= 1

    @property
    def zero(self) -> Element:
        return (0,) * self.rank

    @property
    def group(self) -> "Group":
        return self

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z_{n}" for n in self.invariant_factors)

    @cached_property
    def _elements(self) -> tuple[Element, ...]:
        return tuple(itertools.product(*(range(n) for n in self.invariant_factors)))

    def elements(self) -> tuple[Element, ...]:
        """All elements in lexicographic order."""
        return self._elements

    def element(self, coords: Iterable[int] | int) -> Element:
        """Reduce ``coords`` into a canonical element (an int is allowed for rank 1)."""
        if isinstance(coords, int):
            coords = (coords,)
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise ValidationError(
                f"element {list(coords)} has {len(coords)} coordinates, group rank is {self.rank}"
            )
        return tuple(c % n for c, n in zip(coords, self.invariant_factors))

    def contains(self, e: Element) -> bool:
        return len(e) == self.rank and all(
            0 <= c < n for c, n in zip(e, self.invariant_factors)
        )

    def add(self, a: Element, b: Element) -> Element:
        return tuple([(x + y) % n for x, y, n in zip(a, b, self.invariant_factors)])

    def neg(self, a: Element) -> Element:
        return tuple(-x % n for x, n in zip(a, self.invariant_factors))

    def sub(self, a: Element, b: Element) -> Element:
        return tuple((x - y) % n for x, y, n in zip(a, b, self.invariant_factors))

    def mul(self, m: int, e: Element) -> Element:
        if len(e) == 1:
            return (m * e[0] % self.invariant_factors[0],)
        return tuple([m * x % n for x, n in zip(e, self.invariant_factors)])

    def element_order(self, e: Element) -> int:
        return lcm(*(n // gcd(x, n) for x, n in zip(e, self.invariant_factors)))


def make_group(factors: Sequence[int]) -> Group:
    return Group(tuple(factors))


def _check_element(G: Group, e: Element) -> None:
    if not G.contains(e):
        raise ValidationError(f"{e} is not a canonical element of {G}")


def scalar_mul(m: int, e: Element, G: Group) -> Element:
    """``m * e`` computed coordinatewise; ``m`` may be any integer."""
    _check_element(G, e)
    return G.mul(m, e)


def element_order(e: Element, G: Group) -> int:
    _check_element(G, e)
    return G.element_order(e)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup materialized as its element set.

    Exposes the same element interface as :class:`Group` so it can serve as
    the ambient group of a certificate.
    """

    parent: Group
    elements_set: frozenset[Element]
    generators: tuple[Element, ...] = field(default=())

    @cached_property
    def _elements(self) -> tuple[Element, ...]:
        return tuple(sorted(self.elements_set))

    def elements(self) -> tuple[Element, ...]:
        return self._elements

    @property
    def group(self) -> Group:
        return self.parent

    @property
    def order(self) -> int:
        return len(self.elements_set)

    @property
    def zero(self) -> Element:
        return self.parent.zero

    @cached_property
    def exponent(self) -> int:
        return lcm(*(self.parent.element_order(e) for e in self.elements_set))

    @property
    def rank(self) -> int:
        return self.parent.rank

    @property
    def is_cyclic(self) -> bool:
        return any(self.parent.element_order(e) == self.order for e in self.elements_set)

    def __contains__(self, e: Element) -> bool:
        return e in self.elements_set

    def contains(self, e: Element) -> bool:
        return e in self.elements_set

    def element(self, coords) -> Element:
        e = self.parent.element(coords)
        if e not in self.elements_set:
            raise ValidationError(f"{e} is not in the subgroup")
        return e

    def add(self, a: Element, b: Element) -> Element:
        return self.parent.add(a, b)

    def mul(self, m: int, e: Element) -> Element:
        return self.parent.mul(m, e)

    def element_order(self, e: Element) -> int:
        return self.parent.element_order(e)

    def __str__(self) -> str:
        gens = ", ".join(str(list(g)) for g in self.generators) or "0"
        return f"<{gens}> <= {self.parent}"


def subgroup_closure(gens: Iterable[Element], G: Group) -> Subgroup:
    """Smallest subgroup of ``G`` containing ``gens``."""
    gens = tuple(G.element(g) for g in gens)
    elems = {G.zero}
    frontier = [G.zero]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = G.add(e, g)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return Subgroup(G, frozenset(elems), gens)


def make_subgroup(G: Group, elements: Iterable[Element]) -> Subgroup:
    """Wrap an explicit element set, checking that it is a subgroup."""
    elems = frozenset(G.element(e) for e in elements)
    if G.zero not in elems:
        raise ValidationError("subgroup must contain zero")
    for a in elems:
        if G.neg(a) not in elems:
            raise ValidationError(f"set is not closed under negation at {a}")
        for b in elems:
            if G.add(a, b) not in elems:
                raise ValidationError(f"set is not closed under addition at {a} + {b}")
    return Subgroup(G, elems, ())


def all_subgroups(G: Group) -> list[Subgroup]:
    """Every subgroup of ``G``, ordered by size then by element list."""
    seen: dict[frozenset, Subgroup] = {}
    trivial = Subgroup(G, frozenset({G.zero}), ())
    seen[trivial.elements_set] = trivial
    queue = [trivial]
    while queue:
        H = queue.pop()
        for g in G.elements():
            if g in H.elements_set:
                continue
            grown = {G.add(h, k) for h in H.elements_set for k in _multiples(G, g)}
            key = frozenset(grown)
            if key not in seen:
                sub = Subgroup(G, key, H.generators + (g,))
                seen[key] = sub
                queue.append(sub)
    return sorted(seen.values(), key=lambda s: (s.order, s.elements()))


def _multiples(G: Group, g: Element) -> list[Element]:
    out = [G.zero]
    e = g
    while e != G.zero:
        out.append(e)
        e = G.add(e, g)
    return out


@dataclass(frozen=True)
class QuotientView:
    """G/H represented by canonical coset representatives.

    The representative of a coset is its lexicographically smallest element.
    """

    parent: Group
    subgroup: Subgroup

    @cached_property
    def _rep_of(self) -> dict[Element, Element]:
        rep_of: dict[Element, Element] = {}
        for g in self.parent.elements():
            if g in rep_of:
                continue
            # g is the lexicographic minimum of its coset because it is the
            # first unassigned element in sorted order
            for h in self.subgroup.elements_set:
                rep_of[self.parent.add(g, h)] = g
        return rep_of

    @cached_property
    def coset_reps(self) -> tuple[Element, ...]:
        return tuple(sorted(set(self._rep_of.values())))

    def elements(self) -> tuple[Element, ...]:
        return self.coset_reps

    @property
    def order(self) -> int:
        return len(self.coset_reps)

    @property
    def zero(self) -> Element:
        return self.parent.zero

    @property
    def group(self) -> Group:
        return self.parent

    @cached_property
    def exponent(self) -> int:
        return lcm(*(self.element_order(r) for r in self.coset_reps))

    def rep(self, g: Element) -> Element:
        """Canonical representative of the coset ``g + H``."""
        return self._rep_of[self.parent.element(g)]

    def contains(self, e: Element) -> bool:
        return self._rep_of.get(e) == e

    def element(self, coords) -> Element:
        return self.rep(coords)

    def add(self, a: Element, b: Element) -> Element:
        return self._rep_of[self.parent.add(a, b)]

    def mul(self, m: int, e: Element) -> Element:
        return self._rep_of[self.parent.mul(m, e)]

    def is_zero(self, g: Element) -> bool:
        return self.rep(g) == self.zero

    def element_order(self, e: Element) -> int:
        k = 1
        x = self.rep(e)
        while x != self.zero:
            x = self.add(x, e)
            k += 1
        return k

    def __str__(self) -> str:
        return f"({self.parent}) / {self.subgroup}"


def quotient(G: Group, H: Subgroup) -> QuotientView:
    if H.parent != G:
        raise ValidationError("subgroup belongs to a different group")
    make_subgroup(G, H.elements_set)  # raises unless closed
    return QuotientView(G, H)
