"""Oriented graphs on per-vertex bitsets, plus the named constructions.

An oriented graph has no loops and no pair of opposite arcs.  Vertices are
dense integers 0..n-1 and n is capped at 62 so every neighbour set fits in
one machine word (and the short digraph6 form applies).  Both adjacency
views (out-neighbours and in-neighbours) are kept consistent at all times.

Graphs are treated as immutable once handed to the counting and search
code; mutation helpers exist for building instances and for search code
operating on private copies.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, ConsistencyError, InvalidInputError

MAX_VERTICES = 62
MAX_PATTERN_ORDER = 10

# every randomized operation defaults to this master seed for reproducibility
DEFAULT_SEED = 1729

_MASK64 = (1 << 64) - 1


def split_seed(seed: int, index: int) -> int:
    """Derive the ``index``-th child seed of a 64-bit master seed.

    splitmix64 finalizer over seed + index * golden-ratio increment; the
    same (seed, index) pair yields the same child on every platform, so
    instance streams are identical across worker counts.
    """
    x = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


class OrientedGraph:
    """Loopless digraph without 2-cycles, adjacency stored as int bitsets."""

    __slots__ = ("n", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count must be in 1..{MAX_VERTICES}, got {n!r}")
        self.n = n
        self._out = [0] * n
        self._in = [0] * n
        for u, v in arcs:
            self.add_arc(u, v)

    # -- mutation -----------------------------------------------------------

    def add_arc(self, u: int, v: int) -> None:
        """Insert arc u -> v.  Re-adding an existing arc is a no-op."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise InvalidInputError(f"loop at vertex {u} is not allowed")
        if self._out[v] >> u & 1:
            raise InvalidInputError(f"adding {u}->{v} would create a 2-cycle with {v}->{u}")
        self._out[u] |= 1 << v
        self._in[v] |= 1 << u

    def remove_arc(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if not (self._out[u] >> v & 1):
            raise InvalidInputError(f"arc {u}->{v} is not present")
        self._out[u] &= ~(1 << v)
        self._in[v] &= ~(1 << u)

    # -- queries ------------------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._out[u] >> v & 1)

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def out_masks(self) -> tuple[int, ...]:
        return tuple(self._out)

    def in_masks(self) -> tuple[int, ...]:
        return tuple(self._in)

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    def total_degree(self, v: int) -> int:
        return self.out_degree(v) + self.in_degree(v)

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self._out)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            m = self._out[u]
            while m:
                low = m & -m
                yield u, low.bit_length() - 1
                m ^= low

    def is_tournament(self) -> bool:
        return self.arc_count == self.n * (self.n - 1) // 2

    # -- structural helpers --------------------------------------------------

    def copy(self) -> "OrientedGraph":
        g = OrientedGraph.__new__(OrientedGraph)
        g.n = self.n
        g._out = list(self._out)
        g._in = list(self._in)
        return g

    def delete_vertex(self, v: int) -> tuple["OrientedGraph", list[int | None]]:
        """Return the graph without v, re-indexed, plus the old->new index map."""
        self._check_vertex(v)
        if self.n == 1:
            raise InvalidInputError("cannot delete the only vertex")
        mapping: list[int | None] = []
        new = 0
        for old in range(self.n):
            if old == v:
                mapping.append(None)
            else:
                mapping.append(new)
                new += 1
        g = OrientedGraph(self.n - 1)
        for u, w in self.arcs():
            if u != v and w != v:
                g.add_arc(mapping[u], mapping[w])
        return g, mapping

    def induced(self, vertices: Iterable[int]) -> "OrientedGraph":
        """Induced subgraph on the given vertices, re-indexed in sorted order."""
        keep = sorted(set(vertices))
        if not keep:
            raise InvalidInputError("induced subgraph needs at least one vertex")
        pos = {v: i for i, v in enumerate(keep)}
        g = OrientedGraph(len(keep))
        for u in keep:
            for v in keep:
                if u != v and self.has_arc(u, v):
                    g.add_arc(pos[u], pos[v])
        return g

    def validate(self) -> None:
        """Check the no-loop / no-2-cycle / duality invariants over all pairs."""
        for v in range(self.n):
            if self._out[v] >> v & 1 or self._in[v] >> v & 1:
                raise ConsistencyError(f"loop recorded at vertex {v}")
            if self._out[v] >> self.n or self._in[v] >> self.n:
                raise ConsistencyError(f"adjacency bits beyond vertex range at {v}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                uv = self._out[u] >> v & 1
                vu = self._out[v] >> u & 1
                if uv and vu:
                    raise ConsistencyError(f"2-cycle between {u} and {v}")
                if uv != (self._in[v] >> u & 1) or vu != (self._in[u] >> v & 1):
                    raise ConsistencyError(f"adjacency views disagree on pair ({u},{v})")

    # -- dunder ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return self.n == other.n and self._out == other._out

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._out)))

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.n}, arcs={self.arc_count})"

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidInputError(f"vertex {v} out of range 0..{self.n - 1}")


def _from_masks(n: int, out: Sequence[int], inn: Sequence[int]) -> OrientedGraph:
    # hot-path constructor for search code; callers guarantee consistency
    g = OrientedGraph.__new__(OrientedGraph)
    g.n = n
    g._out = list(out)
    g._in = list(inn)
    return g


class Pattern:
    """A small counted/forbidden digraph with its symmetry data cached.

    ``automorphism_count`` is the number of arc-preserving bijections of the
    pattern onto itself (both arc presence and direction preserved); it is
    what the generic copy counter divides embeddings by.
    """

    __slots__ = ("graph", "automorphism_count", "is_antidirected")

    def __init__(self, graph: OrientedGraph):
        if graph.n > MAX_PATTERN_ORDER:
            raise CapacityError(
                f"pattern order {graph.n} exceeds the cap of {MAX_PATTERN_ORDER}"
            )
        self.graph = graph.copy()
        self.automorphism_count = _automorphism_count(self.graph)
        self.is_antidirected = all(
            graph.out_degree(v) == 0 or graph.in_degree(v) == 0 for v in range(graph.n)
        )

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def arc_count(self) -> int:
        return self.graph.arc_count

    @classmethod
    def tt(cls, r: int) -> "Pattern":
        """The transitive tournament on r vertices as a pattern."""
        return cls(transitive_tournament(r))

    @classmethod
    def single_arc(cls) -> "Pattern":
        return cls(OrientedGraph(2, [(0, 1)]))

    def __repr__(self) -> str:
        return (
            f"Pattern(order={self.order}, arcs={self.arc_count}, "
            f"aut={self.automorphism_count}, antidirected={self.is_antidirected})"
        )


def _automorphism_count(g: OrientedGraph) -> int:
    """Count arc-exact self-bijections by backtracking over degree classes."""
    n = g.n
    if g.arc_count == 0:
        return math.factorial(n)
    sig = [(g.out_degree(v), g.in_degree(v)) for v in range(n)]
    images = [-1] * n
    used = 0

    def extend(i: int) -> int:
        nonlocal used
        if i == n:
            return 1
        found = 0
        for w in range(n):
            if used >> w & 1 or sig[w] != sig[i]:
                continue
            ok = True
            for j in range(i):
                wj = images[j]
                if g.has_arc(j, i) != g.has_arc(wj, w) or g.has_arc(i, j) != g.has_arc(w, wj):
                    ok = False
                    break
            if ok:
                images[i] = w
                used |= 1 << w
                found += extend(i + 1)
                used &= ~(1 << w)
        return found

    count = extend(0)
    if count < 1 or math.factorial(n) % count != 0:
        raise ConsistencyError(f"automorphism count {count} does not divide {n}!")
    return count


# -- constructions -----------------------------------------------------------


def transitive_tournament(r: int) -> OrientedGraph:
    """TT_r: vertices 0..r-1 with arc i -> j exactly when i < j."""
    g = OrientedGraph(r)
    for i in range(r):
        for j in range(i + 1, r):
            g.add_arc(i, j)
    return g


def directed_cycle(k: int) -> OrientedGraph:
    """C_k: arcs i -> i+1 (mod k).  k >= 3, below that a loop/2-cycle would form."""
    if k < 3:
        raise InvalidInputError(f"directed cycle needs k >= 3, got {k}")
    g = OrientedGraph(k)
    for i in range(k):
        g.add_arc(i, (i + 1) % k)
    return g


def antidirected_complete_bipartite(s: int, t: int) -> Pattern:
    """K_{s,t}->: s source vertices, t sink vertices, all s*t arcs source->sink.

    Sources are vertices 0..s-1.  The two sides are distinguished by arc
    direction even when s == t, so the automorphism count is s! * t!.
    """
    if s < 1 or t < 1:
        raise InvalidInputError("both sides need at least one vertex")
    if s + t > MAX_PATTERN_ORDER:
        raise CapacityError(
            f"pattern order {s + t} exceeds the cap of {MAX_PATTERN_ORDER}"
        )
    g = OrientedGraph(s + t)
    for a in range(s):
        for b in range(s, s + t):
            g.add_arc(a, b)
    return Pattern(g)


def turan_part_sizes(n: int, k: int) -> list[int]:
    """Part sizes of the Turan graph T(n, k): as equal as possible, large first."""
    if n < 1 or k < 1:
        raise InvalidInputError("turan graph needs n >= 1 and k >= 1")
    parts = min(n, k)
    q, r = divmod(n, parts)
    return [q + 1] * r + [q] * (parts - r)


def turan_edge_count(n: int, k: int) -> int:
    """|E(T(n,k))| = C(n,2) - sum_i C(n_i,2) over the balanced part sizes."""
    sizes = turan_part_sizes(n, k)
    return math.comb(n, 2) - sum(math.comb(s, 2) for s in sizes)


def blow_up(base: OrientedGraph, parts: Sequence[int]) -> OrientedGraph:
    """Replace vertex i of a base tournament by an independent class of parts[i].

    Arc x -> y for x in class i, y in class j exactly when i -> j in the base;
    no arcs inside classes.  Only defined for tournament bases here.
    """
    if not base.is_tournament():
        raise InvalidInputError("blow_up is defined only for tournament bases")
    if len(parts) != base.n:
        raise InvalidInputError(
            f"need one part size per base vertex ({base.n}), got {len(parts)}"
        )
    if any(p < 1 for p in parts):
        raise InvalidInputError("all part sizes must be >= 1")
    total = sum(parts)
    if total > MAX_VERTICES:
        raise CapacityError(f"blow-up order {total} exceeds {MAX_VERTICES}")
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)
    g = OrientedGraph(total)
    for i, j in base.arcs():
        for x in range(offsets[i], offsets[i + 1]):
            for y in range(offsets[j], offsets[j + 1]):
                g.add_arc(x, y)
    return g


def random_oriented_graph(n: int, arc_probability, seed: int) -> OrientedGraph:
    """Each unordered pair gets an arc with the given probability, direction uniform.

    Deterministic for a fixed seed; pairs are visited in lexicographic order.
    ``arc_probability`` may be a float or an exact Fraction in [0, 1].
    """
    if not 0 <= arc_probability <= 1:
        raise InvalidInputError(f"arc probability {arc_probability} outside [0, 1]")
    rng = random.Random(seed)
    g = OrientedGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < arc_probability:
                if rng.getrandbits(1):
                    g.add_arc(u, v)
                else:
                    g.add_arc(v, u)
    return g
