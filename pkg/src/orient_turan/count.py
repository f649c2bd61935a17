"""Exact copy counting: fast TT_r / out-star / K_{s,t}-> counters plus the
brute-force generic counter used as the correctness oracle.

Copies are unlabeled subdigraph occurrences (a vertex subset together with an
arc subset isomorphic to the pattern), not induced occurrences.  For
tournament patterns inside an oriented host the two notions coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import ConsistencyError, InvalidInputError
from .graphs import MAX_VERTICES, OrientedGraph, Pattern

_BINOM = np.array(
    [[math.comb(i, j) for j in range(MAX_VERTICES + 1)] for i in range(MAX_VERTICES + 1)],
    dtype=np.int64,
)


def _out_array(g: OrientedGraph) -> np.ndarray:
    return np.array(g.out_masks(), dtype=np.int64)


def _in_array(g: OrientedGraph) -> np.ndarray:
    return np.array(g.in_masks(), dtype=np.int64)


@dataclass(frozen=True)
class CopyProfile:
    """The vector (N_1, ..., N_r_max) of transitive-tournament copy counts."""

    counts: tuple[int, ...]
    r_max: int

    def count(self, r: int) -> int:
        """N_r; zero beyond r_max or the graph order."""
        if r < 1:
            raise InvalidInputError(f"profile index r must be >= 1, got {r}")
        if r > self.r_max:
            return 0
        return self.counts[r - 1]

    def __iter__(self):
        return iter(self.counts)


def count_tt(g: OrientedGraph, r: int) -> int:
    """Number of r-vertex subsets of g inducing a transitive tournament."""
    if r < 1:
        raise InvalidInputError(f"r must be >= 1, got {r}")
    if r > g.n:
        return 0
    return int(_kernels.tt_count(_out_array(g), r))


def count_profile(g: OrientedGraph, r_max: int) -> CopyProfile:
    """All of N_1..N_r_max in one traversal sharing prefix intersections."""
    if r_max < 1:
        raise InvalidInputError(f"r_max must be >= 1, got {r_max}")
    kernel_depth = min(r_max, g.n)
    raw = _kernels.tt_profile(_out_array(g), kernel_depth)
    counts = [int(raw[r]) for r in range(1, kernel_depth + 1)]
    counts.extend([0] * (r_max - kernel_depth))
    return CopyProfile(counts=tuple(counts), r_max=r_max)


def count_out_stars(g: OrientedGraph, t: int) -> int:
    """Number of K_{1,t}-> copies: sum over v of C(d+(v), t)."""
    if t < 1:
        raise InvalidInputError(f"t must be >= 1, got {t}")
    return sum(math.comb(g.out_degree(v), t) for v in range(g.n))


def common_in_degree(g: OrientedGraph, vertex_set: Iterable[int]) -> int:
    """Size of the intersection of in-neighbourhoods over a non-empty set."""
    mask = (1 << g.n) - 1
    empty = True
    for v in vertex_set:
        g._check_vertex(v)
        mask &= g.in_mask(v)
        empty = False
    if empty:
        raise InvalidInputError("common in-degree of the empty set is undefined")
    return mask.bit_count()


def count_kst(g: OrientedGraph, s: int, t: int) -> int:
    """Exact number of (S, T') side pairs with |S|=s, |T'|=t and all arcs S->T'.

    Equals sum over t-subsets T' of C(common-in-degree(T'), s): a common
    in-neighbour can never lie inside T' because loops are forbidden, and the
    sides are distinguished by arc direction even when s == t.
    """
    if s < 1 or t < 1:
        raise InvalidInputError("s and t must both be >= 1")
    if t > g.n:
        return 0
    return int(_kernels.kst_count(_in_array(g), s, t, _BINOM))


def count_embeddings(g: OrientedGraph, pattern_graph: OrientedGraph) -> int:
    """Injective arc-preserving maps from the pattern graph into g.

    Only the pattern's arcs constrain the image (copies are subdigraph
    occurrences, not induced ones).  Pure Python on purpose: this is the
    oracle the specialised counters are validated against.
    """
    h = pattern_graph.n
    n = g.n
    if h > n:
        return 0
    order = sorted(
        range(h), key=lambda u: -(pattern_graph.out_degree(u) + pattern_graph.in_degree(u))
    )
    # constraints[i]: arcs between order[i] and already-placed order[j], j < i
    constraints: list[list[tuple[int, bool]]] = []
    for i, u in enumerate(order):
        cons = []
        for j in range(i):
            w = order[j]
            if pattern_graph.has_arc(w, u):
                cons.append((j, True))  # image of u must be an out-neighbour of image(w)
            if pattern_graph.has_arc(u, w):
                cons.append((j, False))
        constraints.append(cons)

    full = (1 << n) - 1
    out = g.out_masks()
    inn = g.in_masks()
    images = [0] * h

    def extend(i: int, used: int) -> int:
        if i == h:
            return 1
        cand = full & ~used
        for j, forward in constraints[i]:
            w = images[j]
            cand &= out[w] if forward else inn[w]
            if not cand:
                return 0
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            images[i] = low.bit_length() - 1
            total += extend(i + 1, used | low)
        return total

    return extend(0, 0)


def count_generic(g: OrientedGraph, f: Pattern) -> int:
    """Backtracking copy counter: embeddings divided by the automorphism count.

    The division must be exact; a remainder means the cached automorphism
    count is wrong, which is reported as an internal consistency error.
    """
    if f.order > g.n:
        return 0
    embeddings = count_embeddings(g, f.graph)
    copies, rem = divmod(embeddings, f.automorphism_count)
    if rem:
        raise ConsistencyError(
            f"{embeddings} embeddings not divisible by automorphism count "
            f"{f.automorphism_count}"
        )
    return copies


def _tt_order(fg: OrientedGraph) -> int | None:
    """r if the pattern graph is TT_r, else None."""
    if not fg.is_tournament():
        return None
    degs = sorted(fg.out_degree(v) for v in range(fg.n))
    return fg.n if degs == list(range(fg.n)) else None


def _kst_sides(fg: OrientedGraph) -> tuple[int, int] | None:
    """(s, t) if the pattern graph is the complete antidirected bipartite K_{s,t}->."""
    sources = [v for v in range(fg.n) if fg.in_degree(v) == 0 and fg.out_degree(v) > 0]
    sinks = [v for v in range(fg.n) if fg.out_degree(v) == 0 and fg.in_degree(v) > 0]
    s, t = len(sources), len(sinks)
    if s + t != fg.n or s == 0 or t == 0:
        return None
    if all(fg.out_degree(v) == t for v in sources) and all(
        fg.in_degree(v) == s for v in sinks
    ):
        return s, t
    return None


def count_pattern(g: OrientedGraph, f: Pattern) -> int:
    """Copy count of f in g through the fastest applicable counter.

    Transitive tournaments and K_{s,t}-> are recognised structurally and
    routed to their specialised counters; anything else falls back to the
    generic backtracking counter.
    """
    r = _tt_order(f.graph)
    if r is not None:
        return count_tt(g, r)
    st = _kst_sides(f.graph)
    if st is not None:
        return count_kst(g, st[0], st[1])
    return count_generic(g, f)
