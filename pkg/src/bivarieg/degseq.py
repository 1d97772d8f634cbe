"""Degree sequences of 2-variegated line graphs.

A 2-variegated line graph on 2n vertices decomposes into two sides of
cliques (sizes between 1 and n, each side covering n vertices) joined by the
perfect matching of special edges; a vertex on a clique of size c has degree
c.  An *admissible partition* of 2n records the clique-size multiset and its
balanced side split, and is exactly the witness for a degree sequence being
realizable as a 2-variegated line graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .bivariegation import BivariegationCertificate
from .canonical import canonical_key
from .errors import InputError
from .graph import Graph, degree_sequence, from_edge_list
from .linegraph import KrauszPartition

DegreeSequence = tuple[int, ...]  # sorted non-increasing, all entries >= 1


@dataclass(frozen=True)
class AdmissiblePartition:
    """Clique sizes split into two sides, each side summing to n."""

    n: int
    side_a: tuple[int, ...]  # non-increasing, sum == n
    side_b: tuple[int, ...]

    @property
    def clique_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(self.side_a + self.side_b, reverse=True))

    def to_json(self) -> dict:
        return {"n": self.n, "sides": [list(self.side_a), list(self.side_b)]}


def _partitions_of(total: int, max_part: int) -> list[tuple[int, ...]]:
    """Integer partitions of `total` with parts <= max_part, non-increasing."""
    out: list[tuple[int, ...]] = []

    def rec(rem: int, cap: int, acc: list[int]) -> None:
        if rem == 0:
            out.append(tuple(acc))
            return
        for part in range(min(cap, rem), 0, -1):
            acc.append(part)
            rec(rem - part, part, acc)
            acc.pop()

    rec(total, max_part, [])
    return out


def admissible_partitions(n: int) -> list[AdmissiblePartition]:
    """All admissible partitions of 2n, canonical and duplicate-free."""
    if n < 1:
        raise InputError("n must be positive")
    seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    out: list[AdmissiblePartition] = []
    for side_a in _partitions_of(n, n):
        for side_b in _partitions_of(n, n):
            key = (side_a, side_b) if side_a <= side_b else (side_b, side_a)
            if key not in seen:
                seen.add(key)
                out.append(AdmissiblePartition(n, key[0], key[1]))
    out.sort(key=lambda p: (tuple(-c for c in p.clique_sizes), p.side_a, p.side_b))
    return out


def degree_sequence_of_partition(p: AdmissiblePartition) -> DegreeSequence:
    """Each clique of size c contributes c vertices of degree c."""
    seq: list[int] = []
    for c in p.clique_sizes:
        seq.extend([c] * c)
    return tuple(sorted(seq, reverse=True))


def realize_partition(
    p: AdmissiblePartition, matching_permutation: Optional[list[int]] = None
) -> Graph:
    """The canonical realization: side_a cliques on vertices 0..n-1, side_b
    cliques on n..2n-1, special edges i -- n + perm(i) (identity by default)."""
    n = p.n
    if matching_permutation is None:
        perm = list(range(n))
    else:
        perm = list(matching_permutation)
        if sorted(perm) != list(range(n)):
            raise InputError("matching permutation must be a bijection on 0..n-1")
    edges: list[tuple[int, int]] = []
    for offset, side in ((0, p.side_a), (n, p.side_b)):
        base = offset
        for c in side:
            vs = range(base, base + c)
            edges += [(a, b) for a in vs for b in vs if a < b]
            base += c
    edges += [(i, n + perm[i]) for i in range(n)]
    return from_edge_list(2 * n, edges)


def potentially_bivariegated_line_graphic(s: DegreeSequence) -> Optional[AdmissiblePartition]:
    """The canonical least admissible-partition witness for s, or None.

    s is realizable as a 2-variegated line graph iff it has 2n terms, the
    count of each degree d is a positive multiple of d with d <= n, and the
    implied clique multiset admits a balanced side split.
    """
    seq = validate_degree_sequence(s)
    total = len(seq)
    if total == 0 or total % 2:
        return None
    n = total // 2
    counts: dict[int, int] = {}
    for d in seq:
        counts[d] = counts.get(d, 0) + 1
    cliques: list[int] = []
    for d, k in counts.items():
        if d > n or k % d:
            return None
        cliques.extend([d] * (k // d))
    cliques.sort(reverse=True)
    split = _balanced_split(cliques, n)
    if split is None:
        return None
    side_a, side_b = split
    return AdmissiblePartition(n, side_a, side_b)


def _balanced_split(cliques: list[int], n: int) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Deterministic first (lexicographically least side_a) split into two
    halves summing n each, by backtracking over the sorted multiset."""
    m = len(cliques)
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] + cliques[i]
    picked: list[int] = []

    def rec(i: int, rem: int) -> bool:
        if rem == 0:
            return True
        if i == m or suffix[i] < rem:
            return False
        if cliques[i] <= rem:
            picked.append(i)
            if rec(i + 1, rem - cliques[i]):
                return True
            picked.pop()
        # skip the whole run of equal values to avoid duplicate splits
        j = i
        while j < m and cliques[j] == cliques[i]:
            j += 1
        return rec(j, rem)

    if not rec(0, n):
        return None
    chosen = set(picked)
    side_a = tuple(cliques[i] for i in sorted(chosen))
    side_b = tuple(cliques[i] for i in range(m) if i not in chosen)
    a, b = tuple(sorted(side_a, reverse=True)), tuple(sorted(side_b, reverse=True))
    return (a, b) if a <= b else (b, a)


def extract_partition(
    g: Graph, cert: BivariegationCertificate, kp: KrauszPartition
) -> AdmissiblePartition:
    """Recover the admissible partition of a 2-variegated line graph.

    Cliques are re-derived from the side-induced subgraphs (the non-special
    edges on each side must split into disjoint cliques); the supplied Krausz
    partition is only used as evidence that g is a line graph.
    """
    from .bivariegation import certificate_failures  # noqa: PLC0415
    from .linegraph import verify_krausz  # noqa: PLC0415

    if g.n == 0 or g.n % 2:
        raise InputError("graph order must be a positive even number")
    fails = certificate_failures(g, cert)
    if fails:
        raise InputError("invalid bivariegation certificate: " + ",".join(fails))
    if not verify_krausz(g, kp):
        raise InputError("invalid Krausz partition for g")
    n = g.n // 2
    sides = []
    for side in (cert.side_u, cert.side_w):
        side_set = set(side)
        comp_sizes = []
        seen: set[int] = set()
        for s in side:
            if s in seen:
                continue
            stack, comp = [s], {s}
            seen.add(s)
            while stack:
                v = stack.pop()
                for u in g.adj[v]:
                    if u in side_set and u not in seen:
                        seen.add(u)
                        comp.add(u)
                        stack.append(u)
            if not g.subgraph_is_clique(comp):
                raise InputError("side-induced subgraph is not a clique union")
            comp_sizes.append(len(comp))
        sides.append(tuple(sorted(comp_sizes, reverse=True)))
    a, b = sides
    if sum(a) != n or sum(b) != n:
        raise InputError("side clique sizes do not balance")
    if a > b:
        a, b = b, a
    return AdmissiblePartition(n, a, b)


def forcibly_bivariegated_line_graphic(s: DegreeSequence) -> bool:
    """True iff every realization of s is a 2-variegated line graph: s is
    {n^n, 1^n}, {1^(2n)}, or {2^4}."""
    seq = validate_degree_sequence(s)
    if not seq:
        return False
    if seq == (2, 2, 2, 2):
        return True
    if all(d == 1 for d in seq):
        return len(seq) % 2 == 0
    n = seq[0]
    return seq == tuple([n] * n + [1] * n)


def enumerate_realizations(s: DegreeSequence, max_vertices: int = 9) -> list[Graph]:
    """All simple graphs with degree sequence s, up to isomorphism.

    Non-graphical sequences yield the empty list.  Backtracks over the
    neighbor choices of the highest-remaining-degree vertex, deduplicating by
    canonical form.
    """
    seq = validate_degree_sequence(s)
    p = len(seq)
    if p > max_vertices:
        raise InputError(f"sequence length {p} exceeds cap {max_vertices}")
    if sum(seq) % 2 or not _erdos_gallai(seq):
        return []
    from itertools import combinations  # noqa: PLC0415

    residual = list(seq)
    edges: list[tuple[int, int]] = []
    found: dict[tuple, Graph] = {}

    def rec() -> None:
        v = max(range(p), key=lambda i: residual[i])
        if residual[v] == 0:
            g = from_edge_list(p, edges)
            found.setdefault(canonical_key(g), g)
            return
        pool = [u for u in range(p)
                if u != v and residual[u] > 0 and (min(u, v), max(u, v)) not in set(edges)]
        if len(pool) < residual[v]:
            return
        for nbrs in combinations(pool, residual[v]):
            k = residual[v]
            residual[v] = 0
            for u in nbrs:
                residual[u] -= 1
            edges.extend((min(u, v), max(u, v)) for u in nbrs)
            rec()
            del edges[-len(nbrs):]
            for u in nbrs:
                residual[u] += 1
            residual[v] = k

    rec()
    return [found[k] for k in sorted(found)]


def _erdos_gallai(seq: tuple[int, ...]) -> bool:
    p = len(seq)
    pref = 0
    for k in range(1, p + 1):
        pref += seq[k - 1]
        tail = sum(min(d, k) for d in seq[k:])
        if pref > k * (k - 1) + tail:
            return False
    return True


def validate_degree_sequence(s) -> DegreeSequence:
    seq = tuple(sorted((int(d) for d in s), reverse=True))
    if any(d < 1 for d in seq):
        raise InputError("degrees must be positive integers")
    return seq


def parse_degree_sequence(text: str) -> DegreeSequence:
    """Parse "3^3,1^3" or "3 3 3 1 1 1"."""
    text = text.strip()
    if "^" in text:
        terms = re.split(r"[,\s]+", text)
        seq: list[int] = []
        for term in terms:
            if not term:
                continue
            m = re.fullmatch(r"(\d+)\^(\d+)", term)
            if not m:
                raise InputError(f"bad degree-sequence term {term!r}")
            seq.extend([int(m.group(1))] * int(m.group(2)))
        return validate_degree_sequence(seq)
    try:
        return validate_degree_sequence(int(t) for t in re.split(r"[,\s]+", text) if t)
    except ValueError as exc:
        raise InputError(f"bad degree sequence {text!r}") from exc
