"""Exhaustive small-graph corpus and the brute-force 2-variegation oracle.

The corpus holds every non-isomorphic simple graph up to a given order,
generated by vertex augmentation with canonical-form deduplication (kernel in
_kernels.py).  Counts are cross-checked against the known census.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

import numpy as np

from ._kernels import canon_masks
from .cycles import cycle_edges, enumerate_simple_cycles
from .errors import InputError
from .graph import Graph, from_masks
from .matchings import enumerate_perfect_matchings

MAX_CORPUS_ORDER = 9

# graphs on 1..8 vertices, up to isomorphism (re-derived by generation below
# and asserted in tests before being trusted)
KNOWN_GRAPH_COUNTS = (1, 2, 4, 11, 34, 156, 1044, 12346)


@lru_cache(maxsize=None)
def _canonical_masks_by_order(order: int) -> tuple[tuple[int, ...], ...]:
    if order == 1:
        return ((0,),)
    prev = _canonical_masks_by_order(order - 1)
    top = order - 1
    cur: set[tuple[int, ...]] = set()
    for masks in prev:
        base = list(masks)
        for s in range(1 << top):
            nm = [base[v] | (((s >> v) & 1) << top) for v in range(top)]
            nm.append(s)
            res = canon_masks(order, np.asarray(nm, dtype=np.uint64))
            cur.add(tuple(int(x) for x in res))
    return tuple(sorted(cur))


def corpus(max_order: int, connected_only: bool = False) -> Iterator[Graph]:
    """All non-isomorphic simple graphs of order 1..max_order, in canonical
    deterministic order (ascending order, then canonical mask rows)."""
    if not (1 <= max_order <= MAX_CORPUS_ORDER):
        raise InputError(f"max_order must be in 1..{MAX_CORPUS_ORDER}")
    for order in range(1, max_order + 1):
        for masks in _canonical_masks_by_order(order):
            g = from_masks(order, masks)
            if connected_only and not g.is_connected():
                continue
            yield g


def corpus_count(order: int) -> int:
    return len(_canonical_masks_by_order(order))


def oracle_is_bivariegated(g: Graph) -> bool:
    """Ground-truth 2-variegation test, deliberately naive: for every perfect
    matching, check every simple cycle's special-edge parity and try every
    per-component side orientation for balance.  Order <= ~10."""
    if g.n == 0:
        return True
    if g.n % 2:
        return False
    half = g.n // 2
    cycles = [cycle_edges(c) for c in enumerate_simple_cycles(g)]
    comps = g.components()
    for matching in enumerate_perfect_matchings(g):
        if any(sum(1 for e in ce if e in matching) % 2 for ce in cycles):
            continue
        # two-color each component: special edges flip, others preserve
        color = [-1] * g.n
        consistent = True
        sizes: list[tuple[int, int]] = []
        for comp in comps:
            color[comp[0]] = 0
            stack = [comp[0]]
            while stack and consistent:
                v = stack.pop()
                for u in g.adj[v]:
                    e = (min(u, v), max(u, v))
                    want = 1 - color[v] if e in matching else color[v]
                    if color[u] < 0:
                        color[u] = want
                        stack.append(u)
                    elif color[u] != want:
                        consistent = False
                        break
            if not consistent:
                break
            zeros = sum(1 for v in comp if color[v] == 0)
            sizes.append((zeros, len(comp) - zeros))
        if not consistent:
            continue
        for flips in itertools.product((0, 1), repeat=len(sizes)):
            if sum(s[f] for s, f in zip(sizes, flips)) == half:
                return True
    return False
