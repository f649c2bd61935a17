"""Exact oriented Turan numbers with witnesses, exhaustive minimum-copy scans
over arc-count classes, labeled enumeration, and the density sequence a_n.

The branch-and-bound search assigns each unordered pair to one of
{no arc, u->v, v->u} in lexicographic pair order, so each new vertex's pairs
complete contiguously and pattern detection can be restricted to copies
touching the newest arc.  The tree is always split at the first two pair
decisions into independent subtasks (up to 9); workers map over subtasks and
a serial run processes the same subtasks in order, so results never depend
on the worker count.
"""

from __future__ import annotations

import math
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .count import count_pattern
from .errors import BudgetError, ConsistencyError, InvalidInputError
from .graphs import DEFAULT_SEED, OrientedGraph, Pattern, _from_masks, split_seed
from .homomorphism import canonical_form

_EXHAUSTIVE_DEFAULT_MAX_N = 6  # 3^15 states; anything beyond needs an explicit budget


@dataclass(frozen=True)
class Budget:
    """Node and wall-clock limits for a search.

    Limits are applied per independent subtask (the search splits into a
    fixed set of subtasks), so a run with the same budget is deterministic
    for any worker count.  Exceeding the time limit makes results
    non-deterministic by nature; such runs are flagged non-exact.
    """

    node_limit: int | None = None
    time_limit: float | None = None

    def share(self, parts: int) -> "Budget":
        return Budget(
            node_limit=None if self.node_limit is None else max(1, self.node_limit // parts),
            time_limit=None if self.time_limit is None else self.time_limit / parts,
        )


@dataclass
class ExtremalCertificate:
    """Exact exo(n, F) plus canonical witness graphs and search statistics."""

    n: int
    pattern_id: bytes
    value: int
    witnesses: list[OrientedGraph]
    witness_forms: list[bytes]
    nodes_explored: int
    elapsed: float
    exact: bool

    def to_json_dict(self, include_timing: bool = False) -> dict:
        from .d6 import digraph6_encode

        return {
            "schema": 1,
            "kind": "extremal_certificate",
            "n": self.n,
            "pattern_id": self.pattern_id.hex(),
            "value": self.value,
            "witnesses": [digraph6_encode(w) for w in self.witnesses],
            "nodes_explored": self.nodes_explored,
            "exact": self.exact,
            "elapsed_seconds": round(self.elapsed, 3) if include_timing else None,
        }


@dataclass
class ClassMinimum:
    """Minimum copy count of a pattern over n-vertex graphs with m arcs."""

    n: int
    m: int
    pattern_id: bytes
    minimum: int
    argmin_witness: OrientedGraph | None
    argmin_form: bytes | None
    instances_scanned: int
    exhaustive: bool

    def to_json_dict(self, include_timing: bool = False) -> dict:
        from .d6 import digraph6_encode

        return {
            "schema": 1,
            "kind": "class_minimum",
            "n": self.n,
            "m": self.m,
            "pattern_id": self.pattern_id.hex(),
            "minimum": self.minimum,
            "argmin_witness": None
            if self.argmin_witness is None
            else digraph6_encode(self.argmin_witness),
            "instances_scanned": self.instances_scanned,
            "exhaustive": self.exhaustive,
        }


def _pair_order(n: int) -> list[tuple[int, int]]:
    # (0,1),(0,2),(1,2),(0,3),... : all pairs of vertex v appear before those of v+1
    return [(u, v) for v in range(1, n) for u in range(v)]


def _remaining_incidence_table(pairs: Sequence[tuple[int, int]], n: int) -> list[list[int]]:
    """table[i][a] = number of pairs with index >= i that contain vertex a."""
    table = [[0] * n for _ in range(len(pairs) + 1)]
    for i in range(len(pairs) - 1, -1, -1):
        row = list(table[i + 1])
        u, v = pairs[i]
        row[u] += 1
        row[v] += 1
        table[i] = row
    return table


class _NewCopyCounter:
    """Counts pattern copies completed by one newly decided arc.

    TT_3 gets a closed-form bitset path; every other pattern goes through
    embeddings pinned to the new arc, divided by the automorphism count.
    """

    def __init__(self, f: Pattern):
        self.f = f
        fg = f.graph
        self.is_tt3 = fg.n == 3 and fg.is_tournament() and sorted(
            fg.out_degree(v) for v in range(3)
        ) == [0, 1, 2]
        self._arcs = list(fg.arcs())

    def count_new(self, out: list[int], inn: list[int], n: int, u: int, v: int) -> int:
        """Copies that contain arc u->v, with u->v already inserted in the masks."""
        if self.is_tt3:
            return (
                (out[u] & out[v]).bit_count()
                + (inn[u] & inn[v]).bit_count()
                + (out[u] & inn[v]).bit_count()
            )
        total = 0
        for a, b in self._arcs:
            total += self._pinned_embeddings(out, inn, n, a, b, u, v)
        copies, rem = divmod(total, self.f.automorphism_count)
        if rem:
            raise ConsistencyError("pinned embedding count not divisible by automorphisms")
        return copies

    def creates(self, out: list[int], inn: list[int], n: int, u: int, v: int) -> bool:
        """Would adding arc u->v complete at least one copy?  Masks exclude u->v."""
        if self.is_tt3:
            return bool((out[u] & out[v]) | (inn[u] & inn[v]) | (out[u] & inn[v]))
        out[u] |= 1 << v
        inn[v] |= 1 << u
        try:
            for a, b in self._arcs:
                if self._pinned_embeddings(out, inn, n, a, b, u, v, existence=True):
                    return True
            return False
        finally:
            out[u] &= ~(1 << v)
            inn[v] &= ~(1 << u)

    def _pinned_embeddings(
        self,
        out: list[int],
        inn: list[int],
        n: int,
        a: int,
        b: int,
        u: int,
        v: int,
        existence: bool = False,
    ) -> int:
        fg = self.f.graph
        h = fg.n
        if h > n:
            return 0
        rest = [w for w in range(h) if w != a and w != b]
        rest.sort(key=lambda w: -(fg.out_degree(w) + fg.in_degree(w)))
        order = [a, b] + rest
        constraints: list[list[tuple[int, bool]]] = []
        for i, w in enumerate(order):
            cons = []
            for j in range(i):
                x = order[j]
                if fg.has_arc(x, w):
                    cons.append((j, True))
                if fg.has_arc(w, x):
                    cons.append((j, False))
            constraints.append(cons)
        full = (1 << n) - 1
        images = [0] * h
        images[0] = u
        images[1] = v
        # the pinned images must themselves satisfy the a<->b constraints
        for j, forward in constraints[1]:
            w = images[j]
            ok = out[w] >> v & 1 if forward else inn[w] >> v & 1
            if not ok:
                return 0

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
                if existence and total:
                    return total
            return total

        return extend(2, (1 << u) | (1 << v))


def _exo_subtask(args: tuple) -> dict:
    (n, prefix_choices, f, witness_cap, node_limit, time_limit) = args
    pairs = _pair_order(n)
    total_pairs = len(pairs)
    rem_inc = _remaining_incidence_table(pairs, n)
    sym_m = min(n, 4)
    detector = _NewCopyCounter(f)

    out = [0] * n
    inn = [0] * n
    deg = [0] * n
    arcs = 0

    # apply the fixed prefix; an infeasible prefix kills the whole subtask
    for idx, choice in enumerate(prefix_choices):
        if choice == 0:
            continue
        u, v = pairs[idx]
        if choice == 2:
            u, v = v, u
        if detector.creates(out, inn, n, u, v):
            return {"value": -1, "witnesses": [], "nodes": 0, "exact": True}
        out[u] |= 1 << v
        inn[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        arcs += 1

    start = len(prefix_choices)
    best = -1
    witnesses: dict[bytes, tuple[int, ...]] = {}
    nodes = 0
    exhausted = False
    deadline = None if time_limit is None else time.monotonic() + time_limit

    def record_leaf() -> None:
        nonlocal best
        if arcs > best:
            best = arcs
            witnesses.clear()
        if arcs == best and len(witnesses) < witness_cap:
            g = _from_masks(n, out, inn)
            key = canonical_form(g)
            if key not in witnesses:
                witnesses[key] = tuple(out)

    def dfs(i: int) -> None:
        nonlocal arcs, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            exhausted = True
            return
        if deadline is not None and nodes & 2047 == 0 and time.monotonic() > deadline:
            exhausted = True
            return
        row = rem_inc[i]
        for a in range(sym_m - 1):
            if deg[a + 1] > deg[a] + row[a]:
                return
        remaining = total_pairs - i
        if arcs + remaining < best:
            return
        if arcs + remaining == best and len(witnesses) >= witness_cap:
            return
        if i == total_pairs:
            record_leaf()
            return
        u, v = pairs[i]
        dfs(i + 1)
        for x, y in ((u, v), (v, u)):
            if not detector.creates(out, inn, n, x, y):
                out[x] |= 1 << y
                inn[y] |= 1 << x
                deg[x] += 1
                deg[y] += 1
                arcs += 1
                dfs(i + 1)
                out[x] &= ~(1 << y)
                inn[y] &= ~(1 << x)
                deg[x] -= 1
                deg[y] -= 1
                arcs -= 1

    dfs(start)
    return {
        "value": best,
        "witnesses": sorted(witnesses.items()),
        "nodes": nodes,
        "exact": not exhausted,
    }


def _run_subtasks(fn, tasks: list, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    ctx = multiprocessing.get_context("fork")
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks)), mp_context=ctx) as ex:
        return list(ex.map(fn, tasks))


def exo_exact(
    n: int,
    f: Pattern,
    budget: Budget | None = None,
    witness_cap: int = 16,
    workers: int = 1,
) -> ExtremalCertificate:
    """Largest number of arcs among n-vertex oriented graphs with no copy of f.

    Depth-first assignment of every unordered pair to {none, u->v, v->u},
    pruned by incremental copy detection on the newest arc, the bound
    current_arcs + remaining_pairs, and non-increasing total degrees on the
    first min(n, 4) vertices.  Witnesses are deduplicated by canonical form
    and capped.  A budget exhaustion returns the best bound found, flagged
    non-exact.
    """
    if f.arc_count == 0:
        raise InvalidInputError("the forbidden pattern must have at least one arc")
    started = time.monotonic()
    pairs = _pair_order(n)
    prefix_len = min(2, len(pairs))
    prefixes = [()]
    for _ in range(prefix_len):
        prefixes = [p + (c,) for p in prefixes for c in (0, 1, 2)]
    share = (budget or Budget()).share(len(prefixes))
    tasks = [
        (n, prefix, f, witness_cap, share.node_limit, share.time_limit)
        for prefix in prefixes
    ]
    results = _run_subtasks(_exo_subtask, tasks, workers)

    value = max(r["value"] for r in results)
    merged: dict[bytes, tuple[int, ...]] = {}
    for r in results:
        if r["value"] == value:
            for key, masks in r["witnesses"]:
                merged.setdefault(key, masks)
    forms = sorted(merged)[:witness_cap]
    witnesses = []
    for key in forms:
        out = list(merged[key])
        inn = [0] * n
        for u in range(n):
            m = out[u]
            while m:
                low = m & -m
                inn[low.bit_length() - 1] |= 1 << u
                m ^= low
        witnesses.append(_from_masks(n, out, inn))
    return ExtremalCertificate(
        n=n,
        pattern_id=canonical_form(f.graph),
        value=value,
        witnesses=witnesses,
        witness_forms=forms,
        nodes_explored=sum(r["nodes"] for r in results),
        elapsed=time.monotonic() - started,
        exact=all(r["exact"] for r in results),
    )


def min_copies_in_class(
    n: int,
    m: int,
    f: Pattern,
    mode: str = "exhaustive",
    budget: Budget | None = None,
    samples: int = 10**6,
    seed: int = DEFAULT_SEED,
) -> ClassMinimum:
    """Minimum copy count of f over labeled n-vertex oriented graphs with m arcs.

    Exhaustive mode walks all 3^C(n,2) assignments with arc-count pruning and
    a cut once a partial graph already holds as many copies as the incumbent
    minimum (copies never disappear when pairs are decided, so the cut is
    exact).  Sampled mode draws uniformly among m-arc graphs.
    """
    total_pairs = math.comb(n, 2)
    if not 0 <= m <= total_pairs:
        raise InvalidInputError(f"arc count {m} outside 0..{total_pairs}")
    if mode == "sampled":
        return _min_copies_sampled(n, m, f, samples, seed)
    if mode != "exhaustive":
        raise InvalidInputError(f"unknown mode {mode!r}")

    states = 3**total_pairs
    allowance = 3 ** math.comb(_EXHAUSTIVE_DEFAULT_MAX_N, 2)
    if budget is not None and budget.node_limit is not None:
        allowance = max(allowance, budget.node_limit)
    if states > allowance:
        raise BudgetError(
            f"exhaustive scan of 3^{total_pairs} states exceeds the budget; "
            "use mode='sampled' or raise the node budget"
        )

    pairs = _pair_order(n)
    detector = _NewCopyCounter(f)
    out = [0] * n
    inn = [0] * n
    arcs = 0
    copies = 0
    best = math.inf
    argmin: tuple[int, ...] | None = None
    leaves = 0
    nodes = 0
    interrupted = False
    deadline = None
    if budget is not None and budget.time_limit is not None:
        deadline = time.monotonic() + budget.time_limit

    def dfs(i: int) -> None:
        nonlocal arcs, copies, best, argmin, leaves, nodes, interrupted
        if interrupted:
            return
        nodes += 1
        if deadline is not None and nodes & 2047 == 0 and time.monotonic() > deadline:
            interrupted = True
            return
        if copies >= best:
            return
        remaining = len(pairs) - i
        if arcs > m or arcs + remaining < m:
            return
        if i == len(pairs):
            leaves += 1
            if copies < best:
                best = copies
                argmin = tuple(out)
            return
        u, v = pairs[i]
        dfs(i + 1)
        for x, y in ((u, v), (v, u)):
            out[x] |= 1 << y
            inn[y] |= 1 << x
            delta = detector.count_new(out, inn, n, x, y)
            arcs += 1
            copies += delta
            dfs(i + 1)
            out[x] &= ~(1 << y)
            inn[y] &= ~(1 << x)
            arcs -= 1
            copies -= delta

    dfs(0)
    witness = None
    form = None
    if argmin is not None:
        witness = _masks_to_graph(n, argmin)
        form = canonical_form(witness) if n <= 10 else None
    return ClassMinimum(
        n=n,
        m=m,
        pattern_id=canonical_form(f.graph),
        minimum=int(best) if best is not math.inf else 0,
        argmin_witness=witness,
        argmin_form=form,
        instances_scanned=leaves,
        exhaustive=not interrupted,
    )


def _masks_to_graph(n: int, out_masks: Sequence[int]) -> OrientedGraph:
    out = list(out_masks)
    inn = [0] * n
    for u in range(n):
        m = out[u]
        while m:
            low = m & -m
            inn[low.bit_length() - 1] |= 1 << u
            m ^= low
    return _from_masks(n, out, inn)


def _min_copies_sampled(n: int, m: int, f: Pattern, samples: int, seed: int) -> ClassMinimum:
    import random

    all_pairs = _pair_order(n)
    best = math.inf
    argmin = None
    for i in range(samples):
        rng = random.Random(split_seed(seed, i))
        chosen = rng.sample(all_pairs, m)
        g = OrientedGraph(n)
        for u, v in chosen:
            if rng.getrandbits(1):
                g.add_arc(u, v)
            else:
                g.add_arc(v, u)
        c = count_pattern(g, f)
        if c < best:
            best = c
            argmin = g
    return ClassMinimum(
        n=n,
        m=m,
        pattern_id=canonical_form(f.graph),
        minimum=int(best) if best is not math.inf else 0,
        argmin_witness=argmin,
        argmin_form=canonical_form(argmin) if argmin is not None and n <= 10 else None,
        instances_scanned=samples,
        exhaustive=False,
    )


@dataclass
class DensitySequence:
    """Exact rationals a_n = exo(n, f) / C(n, 2) with monotonicity bookkeeping."""

    pattern_id: bytes
    entries: list[tuple[int, Fraction]]
    certificates: list[ExtremalCertificate] = field(default_factory=list)
    violations: list[int] = field(default_factory=list)
    complete: bool = True

    @property
    def non_increasing(self) -> bool:
        return not self.violations


def density_sequence(
    f: Pattern,
    n_max: int,
    budget: Budget | None = None,
    workers: int = 1,
) -> DensitySequence:
    """a_n for n = 2..n_max; flags any a_n < a_{n+1} (which would be a search bug).

    A budget exhaustion at some n marks the tail of the sequence absent
    rather than reporting a non-exact value.
    """
    if n_max < 2:
        raise InvalidInputError("density sequence needs n_max >= 2")
    seq = DensitySequence(pattern_id=canonical_form(f.graph), entries=[])
    for n in range(2, n_max + 1):
        cert = exo_exact(n, f, budget=budget, witness_cap=1, workers=workers)
        if not cert.exact:
            seq.complete = False
            break
        seq.certificates.append(cert)
        seq.entries.append((n, Fraction(cert.value, math.comb(n, 2))))
    for (na, va), (nb, vb) in zip(seq.entries, seq.entries[1:]):
        if va < vb:
            seq.violations.append(na)
    return seq


def enumerate_oriented(
    n: int,
    arc_count: int | None = None,
    force: bool = False,
) -> Iterator[OrientedGraph]:
    """Yield every labeled n-vertex oriented graph once (3^C(n,2) without filter).

    With ``arc_count`` the stream is filtered to exactly that many arcs,
    pruning prefixes that can no longer hit the target.  Beyond n = 6 the
    state space explodes; pass ``force=True`` after capping consumption.
    """
    if arc_count is not None and arc_count < 0:
        raise InvalidInputError("arc_count must be non-negative")
    if n > _EXHAUSTIVE_DEFAULT_MAX_N and not force:
        raise BudgetError(
            f"enumerating 3^{math.comb(n, 2)} graphs exceeds the default budget; "
            "pass force=True if consumption is capped"
        )
    pairs = _pair_order(n)
    out = [0] * n
    inn = [0] * n
    arcs = 0

    def rec(i: int) -> Iterator[OrientedGraph]:
        nonlocal arcs
        if arc_count is not None:
            if arcs > arc_count or arcs + (len(pairs) - i) < arc_count:
                return
        if i == len(pairs):
            yield _from_masks(n, list(out), list(inn))
            return
        u, v = pairs[i]
        yield from rec(i + 1)
        for x, y in ((u, v), (v, u)):
            out[x] |= 1 << y
            inn[y] |= 1 << x
            arcs += 1
            yield from rec(i + 1)
            out[x] &= ~(1 << y)
            inn[y] &= ~(1 << x)
            arcs -= 1

    return rec(0)
