"""Exhaustive search for splittings by exact cover.

Given ``M`` and a target set ``T = ambient \\ K``, every candidate ``s``
contributes the block ``M*s``.  A splitting set is a choice of candidates
whose blocks partition ``T``.  Blocks are stored as int bitmasks over the
element index and the search always branches on the uncovered element with
the fewest viable blocks.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Optional

from .arith import divisors
from .errors import CeilingExceeded, InternalConsistencyError, SearchInconclusive
from .group import Element, Group
from .splitting import Certificate, verify_on


@dataclass(frozen=True)
class SearchConfig:
    max_solutions: Optional[int] = None
    prune_with_structure: bool = True
    canonicalize: bool = True
    time_budget: Optional[float] = None  # seconds
    ceiling: int = 64
    validate_pruning: bool = False

    def __post_init__(self):
        if self.max_solutions is not None and self.max_solutions < 1:
            raise ValueError("max_solutions must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.ceiling < 1:
            raise ValueError("ceiling must be positive")

    def deadline(self) -> Optional[float]:
        if self.time_budget is None:
            return None
        return time.monotonic() + self.time_budget


DEFAULT = SearchConfig()


class _Indexed:
    """Element indexing plus a multiplication table over indices."""

    def __init__(self, ambient, multipliers: Iterable[int]):
        self.ambient = ambient
        self.elems = ambient.elements()
        self.index = {e: i for i, e in enumerate(self.elems)}
        self.full = (1 << len(self.elems)) - 1
        self.table = {
            m: [self.index[ambient.mul(m, e)] for e in self.elems] for m in set(multipliers)
        }

    def mask_of(self, elements) -> int:
        out = 0
        for e in elements:
            out |= 1 << self.index[e]
        return out

    def blocks(self, M, forbidden: int = 0) -> list[tuple[int, int]]:
        """(candidate index, block mask) for every s whose block is usable."""
        rows = [self.table[m] for m in M]
        k = len(rows)
        out = []
        for i in range(len(self.elems)):
            mask = 0
            for row in rows:
                mask |= 1 << row[i]
            if mask & forbidden or mask.bit_count() != k:
                continue
            out.append((i, mask))
        return out


def _exact_cover(full: int, blocks, deadline: Optional[float]) -> Iterator[tuple[int, ...]]:
    """Yield every choice of blocks partitioning the bits of ``full``."""
    by_item: dict[int, list[tuple[int, int]]] = {}
    for label, mask in blocks:
        m = mask
        while m:
            low = m & -m
            by_item.setdefault(low.bit_length() - 1, []).append((label, mask))
            m ^= low
    chosen: list[int] = []

    def rec(covered: int):
        if covered == full:
            yield tuple(chosen)
            return
        if deadline is not None and time.monotonic() > deadline:
            raise SearchInconclusive("time budget exceeded")
        free = full & ~covered
        best: list = []
        best_len = None
        while free:
            low = free & -free
            free ^= low
            viable = [b for b in by_item.get(low.bit_length() - 1, ()) if not b[1] & covered]
            if best_len is None or len(viable) < best_len:
                best, best_len = viable, len(viable)
                if best_len <= 1:
                    break
        for label, mask in best:
            chosen.append(label)
            yield from rec(covered | mask)
            chosen.pop()

    yield from rec(0)


def split_exists(
    M: Iterable[int],
    ambient,
    K: Iterable[Element] = (),
    cfg: Optional[SearchConfig] = None,
) -> Optional[tuple[Element, ...]]:
    """Find ``S`` with ``ambient \\ K = M*S`` uniquely, or return None.

    ``ambient`` may be a :class:`Group`, a subgroup or a quotient view.
    Raises :class:`SearchInconclusive` if the time budget runs out.
    """
    cfg = cfg or DEFAULT
    M = tuple(dict.fromkeys(int(m) for m in M))
    if not M:
        raise ValueError("M must be nonempty")
    K = frozenset(K)
    target_size = len(ambient.elements()) - len(K)
    if target_size % len(M):
        return None
    idx = _Indexed(ambient, M)
    kmask = idx.mask_of(K)
    blocks = idx.blocks(M, kmask)
    for labels in _exact_cover(idx.full & ~kmask, blocks, cfg.deadline()):
        S = tuple(sorted(idx.elems[i] for i in labels))
        rep = verify_on(ambient, M, S, K)
        if not rep.valid:
            raise InternalConsistencyError(f"search produced a non-splitting: {rep.summary()}")
        return S
    return None


def _unpruned_multiplier_sets(G: Group) -> Iterator[tuple[int, ...]]:
    n = G.exponent
    for t in divisors(G.order):
        if t <= n:
            yield from itertools.combinations(range(n), t)


def _normalized_multiplier_sets(G: Group) -> Iterator[tuple[int, ...]]:
    """Multiplier sets allowed by the structure theorem, normalized to contain 1.

    |M| = t must divide n_k and |G|; M is a complete residue system modulo t
    and contains an m0 with gcd(m0, n_k) = t.  Any splitting M also contains
    a unit (elements of order n_k must be covered), so up to multiplication
    by a unit we may assume 1 is in M.
    """
    n = G.exponent
    if n == 1:
        yield (1,)
        return
    for t in divisors(n):
        if G.order % t:
            continue
        span = n // t
        if t == 1:
            yield (1,)
            continue
        lifts = [[t * j for j in range(span) if gcd(j, span) == 1], [1]]
        lifts += [[r + t * j for j in range(span)] for r in range(2, t)]
        for combo in itertools.product(*lifts):
            yield tuple(sorted(combo))


def _solutions_for(idx: _Indexed, M, deadline) -> Iterator[tuple[int, ...]]:
    blocks = idx.blocks(M)
    for labels in _exact_cover(idx.full, blocks, deadline):
        yield tuple(sorted(labels))


def _covers_exactly(idx: _Indexed, M, labels) -> bool:
    """Independent soundness check: the |M||S| products hit every element once."""
    mask = 0
    for m in M:
        row = idx.table[m]
        for i in labels:
            mask |= 1 << row[i]
    return mask == idx.full and len(M) * len(labels) == len(idx.elems)


def _collect(G: Group, cfg: SearchConfig, pruned: bool) -> list[tuple[tuple[int, ...], tuple]]:
    n = G.exponent
    idx = _Indexed(G, range(n) if n > 1 else [1])
    deadline = cfg.deadline()
    found: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    if not pruned:
        for M in _unpruned_multiplier_sets(G):
            M = M if n > 1 else (1,)
            for labels in _solutions_for(idx, M, deadline):
                found.add((M, labels))
    else:
        units = [u for u in range(1, n) if gcd(u, n) == 1] if n > 1 else [1]
        for M in _normalized_multiplier_sets(G):
            for labels in _solutions_for(idx, M, deadline):
                for u in units:
                    if n > 1:
                        row = idx.table[pow(u, -1, n)]
                        uM = tuple(sorted(u * m % n for m in M))
                        found.add((uM, tuple(sorted(row[i] for i in labels))))
                    else:
                        found.add((M, labels))
    for M, labels in found:
        if not _covers_exactly(idx, M, labels):
            raise InternalConsistencyError(f"enumeration produced a non-splitting M={M}")
    # element tuples sort like their lexicographic indices
    return sorted(((M, tuple(idx.elems[i] for i in labels)) for M, labels in found), key=_order_key)


def _order_key(item):
    M, S = item
    return (len(M), M, S)


def enumerate_complete_splittings(
    G: Group, cfg: Optional[SearchConfig] = None
) -> Iterator[Certificate]:
    """Every complete splitting of ``G`` in canonical form.

    Certificates come out ordered by (|M|, M, S).  With
    ``prune_with_structure`` the candidate multiplier sets are cut down using
    the structure theorem and unit symmetry; ``validate_pruning`` cross-checks
    this against the plain enumeration on groups of order at most 16.
    """
    cfg = cfg or DEFAULT
    if G.order > cfg.ceiling:
        raise CeilingExceeded(
            f"|G| = {G.order} exceeds the enumeration ceiling {cfg.ceiling}; "
            "raise the ceiling explicitly or search for a fixed M with split_exists"
        )
    items = _collect(G, cfg, cfg.prune_with_structure)
    if cfg.validate_pruning and cfg.prune_with_structure and G.order <= 16:
        if set(items) != set(_collect(G, cfg, False)):
            raise InternalConsistencyError(f"pruned enumeration lost solutions on {G}")
    for count, (M, S) in enumerate(items):
        if cfg.max_solutions is not None and count >= cfg.max_solutions:
            return
        yield Certificate(G, M, S, "complete")
