"""Digraph homomorphism decision, tournament enumeration and compressibility.

The compressibility of a pattern F is the smallest k such that F admits a
homomorphism into *every* tournament of order k.  Whether the predicate
"every k-tournament receives a hom" is monotone in k is not assumed
anywhere; each k is tested independently against a complete catalog of
isomorphism classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice, permutations

import numpy as np

from .errors import BudgetError, InvalidInputError
from .graphs import OrientedGraph, Pattern

_CANONICAL_EXACT_MAX = 10
_CATALOG_MAX_ORDER = 7
_PERM_CHUNK = 40320


@lru_cache(maxsize=None)
def _perm_array(n: int) -> np.ndarray:
    # cached only for n <= 8 (~40320 rows); larger n streams chunks instead
    return np.array(list(permutations(range(n))), dtype=np.int64)


def _perm_chunks(n: int):
    if n <= 8:
        yield _perm_array(n)
        return
    it = permutations(range(n))
    while True:
        chunk = list(islice(it, _PERM_CHUNK))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64)


def canonical_form(g: OrientedGraph) -> bytes:
    """Lexicographically minimal row-major adjacency bits over all relabelings.

    The result is one order byte followed by the n*n matrix bits packed
    big-endian (zero padded), so equal byte-strings mean isomorphic graphs.
    Exact permutation-exhaustive strategy, capped at order 10.
    """
    n = g.n
    if n > _CANONICAL_EXACT_MAX:
        raise BudgetError(
            f"exact canonical form is limited to order {_CANONICAL_EXACT_MAX}, got {n}"
        )
    adj = np.zeros((n, n), dtype=bool)
    for u in range(n):
        m = g.out_mask(u)
        while m:
            low = m & -m
            adj[u, low.bit_length() - 1] = True
            m ^= low
    best: bytes | None = None
    for perms in _perm_chunks(n):
        relabeled = adj[perms[:, :, None], perms[:, None, :]]
        packed = np.packbits(relabeled.reshape(len(perms), n * n), axis=1)
        first = np.lexsort(packed.T[::-1])[0]
        cand = packed[first].tobytes()
        if best is None or cand < best:
            best = cand
    return bytes([n]) + best


def has_homomorphism(f: Pattern | OrientedGraph, d: OrientedGraph) -> bool:
    """True iff an arc-preserving (not necessarily injective) map f -> d exists.

    Backtracking over the pattern's vertices in decreasing total-degree
    order; candidate sets are pruned through the already-mapped in/out
    constraints.
    """
    fg = f.graph if isinstance(f, Pattern) else f
    h = fg.n
    n = d.n
    order = sorted(range(h), key=lambda u: -(fg.out_degree(u) + fg.in_degree(u)))
    constraints: list[list[tuple[int, bool]]] = []
    for i, u in enumerate(order):
        cons = []
        for j in range(i):
            w = order[j]
            if fg.has_arc(w, u):
                cons.append((j, True))
            if fg.has_arc(u, w):
                cons.append((j, False))
        constraints.append(cons)

    full = (1 << n) - 1
    out = d.out_masks()
    inn = d.in_masks()
    images = [0] * h

    def extend(i: int) -> bool:
        if i == h:
            return True
        cand = full
        for j, forward in constraints[i]:
            w = images[j]
            cand &= out[w] if forward else inn[w]
            if not cand:
                return False
        while cand:
            low = cand & -cand
            cand ^= low
            images[i] = low.bit_length() - 1
            if extend(i + 1):
                return True
        return False

    return extend(0)


@dataclass(frozen=True)
class TournamentCatalog:
    """One representative per isomorphism class of k-vertex tournaments."""

    order: int
    representatives: tuple[OrientedGraph, ...]
    canonical_forms: tuple[bytes, ...]

    def __len__(self) -> int:
        return len(self.representatives)


_catalog_cache: dict[int, TournamentCatalog] = {}


def enumerate_tournaments(k: int) -> TournamentCatalog:
    """Complete catalog of k-vertex tournaments up to isomorphism, k <= 7.

    k <= 6 deduplicates all 2^C(k,2) labeled tournaments by canonical form;
    k = 7 extends the order-6 catalog by one vertex (2^6 orientations per
    representative) which keeps memory flat.  Representatives are sorted by
    canonical encoding, so the ordering is deterministic.
    """
    if k < 1:
        raise InvalidInputError(f"tournament order must be >= 1, got {k}")
    if k > _CATALOG_MAX_ORDER:
        raise BudgetError(
            f"tournament enumeration is capped at order {_CATALOG_MAX_ORDER} "
            f"(2^C({k},2) labeled graphs exceed the default budget)"
        )
    if k in _catalog_cache:
        return _catalog_cache[k]

    classes: dict[bytes, OrientedGraph] = {}
    if k <= 6:
        pairs = [(u, v) for u in range(k) for v in range(u + 1, k)]
        for bits in range(1 << len(pairs)):
            g = OrientedGraph(k)
            for idx, (u, v) in enumerate(pairs):
                if bits >> idx & 1:
                    g.add_arc(u, v)
                else:
                    g.add_arc(v, u)
            key = canonical_form(g)
            if key not in classes:
                classes[key] = g
    else:
        base = enumerate_tournaments(k - 1)
        new = k - 1
        for rep in base.representatives:
            for bits in range(1 << new):
                g = OrientedGraph(k)
                for u, v in rep.arcs():
                    g.add_arc(u, v)
                for w in range(new):
                    if bits >> w & 1:
                        g.add_arc(new, w)
                    else:
                        g.add_arc(w, new)
                key = canonical_form(g)
                if key not in classes:
                    classes[key] = g

    forms = tuple(sorted(classes))
    catalog = TournamentCatalog(
        order=k,
        representatives=tuple(classes[f] for f in forms),
        canonical_forms=forms,
    )
    _catalog_cache[k] = catalog
    return catalog


@dataclass
class CompressibilityResult:
    """Outcome of the compressibility search for one pattern.

    ``value`` is None when every probed k failed ("exceeds k_max").
    ``per_k`` records, for each probed k, whether all k-tournaments admit a
    homomorphism; ``counterexamples`` holds one failing tournament per
    failing k.
    """

    value: int | None
    k_max: int
    per_k: dict[int, bool] = field(default_factory=dict)
    counterexamples: dict[int, OrientedGraph] = field(default_factory=dict)

    @property
    def exceeds(self) -> bool:
        return self.value is None


def compressibility(
    f: Pattern, k_max: int = _CATALOG_MAX_ORDER, full_vector: bool = False
) -> CompressibilityResult:
    """Smallest k <= k_max with a homomorphism from f into every k-tournament.

    k is probed in increasing order from 2 and every k up to the answer is
    tested explicitly (no monotonicity assumption).  With ``full_vector``
    the remaining k up to k_max are probed as well.  A pattern with no arcs
    maps anywhere, so by convention its compressibility is 1.
    """
    if k_max > _CATALOG_MAX_ORDER:
        raise BudgetError(f"k_max is capped at {_CATALOG_MAX_ORDER}, got {k_max}")
    if k_max < 1:
        raise InvalidInputError(f"k_max must be >= 1, got {k_max}")
    if f.arc_count == 0:
        return CompressibilityResult(value=1, k_max=k_max, per_k={})

    result = CompressibilityResult(value=None, k_max=k_max)
    for k in range(2, k_max + 1):
        ok = True
        for rep in enumerate_tournaments(k).representatives:
            if not has_homomorphism(f, rep):
                ok = False
                result.counterexamples[k] = rep
                break
        result.per_k[k] = ok
        if ok and result.value is None:
            result.value = k
            if not full_vector:
                break
    return result
