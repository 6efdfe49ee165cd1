"""Conflict graph construction and the hybrid clique/pairwise store.

Cliques are extracted per knapsack row in O(n log n): after sorting by
coefficient, the largest suffix whose smallest two members overload the
rhs forms the initial clique, and each literal below it is paired (by
binary search) with the shortest suffix it still conflicts with.  Those
extra cliques are kept as (literal, row, start) tuples rather than being
expanded, which is what keeps the loop out of quadratic territory.

After construction, every stored clique whose size is at most
``min_clq_size`` is dissolved into plain pairwise adjacency entries; the
remaining large cliques stay in the tuple store.  Queries consult the
sorted adjacency lists first and fall back to the clique indices, so the
split is invisible to callers.  The trivial conflict between a literal
and its complement is never stored and always reported.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field

from .model import (
    EPS,
    KnapsackRow,
    MilpInstance,
    complement_node,
    normalize_to_knapsack,
)


@dataclass
class DetectStats:
    """Coefficient-comparison counter for complexity checks."""

    comparisons: int = 0


@dataclass
class RowCliques:
    """Cliques of one knapsack row in compressed form.

    ``initial`` is the first clique in non-decreasing coefficient order.
    Each additional clique is (literal, l) with l the 1-based position in
    ``initial`` where its shared suffix starts.
    """

    initial: list[int]
    addtl: list[tuple[int, int]]


def detect_cliques_compressed(row: KnapsackRow,
                              stats: DetectStats | None = None) -> RowCliques:
    items = sorted(row.literals, key=lambda t: (t[1], t[0]))
    lits = [t[0] for t in items]
    a = [t[1] for t in items]
    b = row.rhs
    m = len(a)
    comparisons = 1
    if m < 2 or not a[m - 2] + a[m - 1] > b + EPS:
        if stats is not None:
            stats.comparisons += comparisons
        return RowCliques([], [])

    # Smallest k with a[k] + a[k+1] > b; the predicate is monotone.
    lo, hi = 0, m - 2
    while lo < hi:
        mid = (lo + hi) // 2
        comparisons += 1
        if a[mid] + a[mid + 1] > b + EPS:
            hi = mid
        else:
            lo = mid + 1
    k = lo
    initial = lits[k:]

    addtl: list[tuple[int, int]] = []
    for o in range(k - 1, -1, -1):
        comparisons += 1
        if not a[o] + a[m - 1] > b + EPS:
            break  # coefficients only shrink from here on
        lo2, hi2 = o + 1, m - 1
        while lo2 < hi2:
            mid = (lo2 + hi2) // 2
            comparisons += 1
            if a[o] + a[mid] > b + EPS:
                hi2 = mid
            else:
                lo2 = mid + 1
        f = lo2
        assert f > k  # the suffix is always inside the initial clique
        addtl.append((lits[o], f - k + 1))
    if stats is not None:
        stats.comparisons += comparisons
    return RowCliques(initial, addtl)


def detect_cliques(row: KnapsackRow) -> list[frozenset[int]]:
    """Expanded clique sets of one knapsack row (empty list if none)."""
    rc = detect_cliques_compressed(row)
    if not rc.initial:
        return []
    out = [frozenset(rc.initial)]
    for lit, l in rc.addtl:
        out.append(frozenset([lit, *rc.initial[l - 1:]]))
    return out


@dataclass
class CliqueStore:
    """Tuple-compressed clique storage.

    ``first[c]`` holds the initial clique of the c-th clique-bearing row in
    coefficient order and ``size[c]`` its length.  ``addtl`` holds tuples
    (literal, c, l): the clique {literal} with positions l..size[c] of
    ``first[c]`` (l is 1-based).  ``adjfirst``/``adjaddtl`` index, per node,
    the stored cliques/tuples containing it.  ``first_stored[c]`` is False
    once a first clique has been dissolved into pairwise entries; its row
    data stays because tuples may still reference it.
    """

    first: list[list[int]] = field(default_factory=list)
    size: list[int] = field(default_factory=list)
    addtl: list[tuple[int, int, int]] = field(default_factory=list)
    first_stored: list[bool] = field(default_factory=list)
    adjfirst: list[list[int]] = field(default_factory=list)
    adjaddtl: list[list[int]] = field(default_factory=list)
    first_pos: list[dict[int, int]] = field(default_factory=list)

    @property
    def sizeaf(self) -> list[int]:
        return [len(x) for x in self.adjfirst]

    @property
    def sizeaa(self) -> list[int]:
        return [len(x) for x in self.adjaddtl]

    def tuple_members(self, t: int) -> list[int]:
        lit, c, l = self.addtl[t]
        return [lit, *self.first[c][l - 1:]]

    def stored_cliques(self) -> list[list[int]]:
        out = [self.first[c] for c in range(len(self.first)) if self.first_stored[c]]
        out.extend(self.tuple_members(t) for t in range(len(self.addtl)))
        return out


@dataclass
class ConflictGraph:
    """Immutable once built; safe for concurrent readers (the neighbor
    cache only memoizes already-derivable answers)."""

    n_vars: int
    store: CliqueStore
    adjlist: list[list[int]]
    min_clq_size: int
    cliques_detected: int = 0
    _nbrs: dict[int, tuple[int, ...]] = field(default_factory=dict, repr=False, compare=False)

    @property
    def n_nodes(self) -> int:
        return 2 * self.n_vars

    def complement(self, node: int) -> int:
        return complement_node(node, self.n_vars)

    def conflicting(self, a: int, b: int) -> bool:
        """True iff literals a and b cannot both be active."""
        if a == b:
            return False
        if b == self.complement(a):
            return True
        al = self.adjlist[a]
        i = bisect.bisect_left(al, b)
        if i < len(al) and al[i] == b:
            return True
        st = self.store
        for c in st.adjfirst[a]:
            if b in st.first_pos[c]:
                return True
        for t in st.adjaddtl[a]:
            lit, c, l = st.addtl[t]
            if b == lit:
                return True
            pos = st.first_pos[c].get(b)
            if pos is not None and pos >= l - 1:
                return True
        return False

    def neighbors(self, a: int) -> tuple[int, ...]:
        """All literals conflicting with a, sorted; always includes the complement."""
        cached = self._nbrs.get(a)
        if cached is not None:
            return cached
        st = self.store
        s = set(self.adjlist[a])
        s.add(self.complement(a))
        for c in st.adjfirst[a]:
            s.update(st.first[c])
        for t in st.adjaddtl[a]:
            s.update(st.tuple_members(t))
        s.discard(a)
        result = tuple(sorted(s))
        self._nbrs[a] = result
        return result

    def degree(self, a: int) -> int:
        return len(self.neighbors(a))

    def edge_set(self) -> set[frozenset[int]]:
        """All stored (non-trivial) conflict edges."""
        edges: set[frozenset[int]] = set()
        for a in range(self.n_nodes):
            comp = self.complement(a)
            for b in self.neighbors(a):
                if b != comp:
                    edges.add(frozenset((a, b)))
        return edges

    def dump(self, instance: MilpInstance) -> str:
        """Debug listing: stored cliques, tuples and adjacency lists."""
        lines = []
        st = self.store
        for c in range(len(st.first)):
            if st.first_stored[c]:
                lines.append(f"C {c}: " + " ".join(instance.node_name(v) for v in st.first[c]))
        for lit, c, l in st.addtl:
            lines.append(f"T {instance.node_name(lit)} {c} {l}")
        for a in range(self.n_nodes):
            if self.adjlist[a]:
                lines.append(f"A {instance.node_name(a)}: "
                             + " ".join(instance.node_name(v) for v in self.adjlist[a]))
        return "\n".join(lines) + ("\n" if lines else "")


def build(instance: MilpInstance, min_clq_size: int = 512) -> ConflictGraph:
    """Build the conflict graph of an instance.

    Every row over binary variables is normalized to knapsack form and fed
    to the clique detector; rows touching non-binary variables contribute
    nothing.  Identical output for identical input: all iteration orders
    are fixed.
    """
    n = instance.n_vars
    n_nodes = 2 * n
    store = CliqueStore()
    pair_sets: list[set[int]] = [set() for _ in range(n_nodes)]
    detected = 0

    for ri, row in enumerate(instance.rows):
        for krow in normalize_to_knapsack(row, instance, ri):
            rc = detect_cliques_compressed(krow)
            if not rc.initial:
                continue
            detected += 1 + len(rc.addtl)
            c = len(store.first)
            store.first.append(rc.initial)
            store.size.append(len(rc.initial))
            store.first_pos.append({v: i for i, v in enumerate(rc.initial)})
            for lit, l in rc.addtl:
                store.addtl.append((lit, c, l))

    def add_pair(u: int, v: int) -> None:
        pair_sets[u].add(v)
        pair_sets[v].add(u)

    store.first_stored = [len(f) > min_clq_size for f in store.first]
    for c, f in enumerate(store.first):
        if not store.first_stored[c]:
            for i in range(len(f)):
                for k in range(i + 1, len(f)):
                    add_pair(f[i], f[k])

    kept: list[tuple[int, int, int]] = []
    for lit, c, l in store.addtl:
        if store.size[c] - l + 2 <= min_clq_size:
            # Suffix-internal pairs are covered by first[c] (stored or
            # dissolved above); only the outside literal needs new edges.
            for v in store.first[c][l - 1:]:
                add_pair(lit, v)
        else:
            kept.append((lit, c, l))
    store.addtl = kept

    store.adjfirst = [[] for _ in range(n_nodes)]
    store.adjaddtl = [[] for _ in range(n_nodes)]
    for c in range(len(store.first)):
        if store.first_stored[c]:
            for v in store.first[c]:
                store.adjfirst[v].append(c)
    for t, (lit, c, l) in enumerate(store.addtl):
        store.adjaddtl[lit].append(t)
        for v in store.first[c][l - 1:]:
            store.adjaddtl[v].append(t)

    adjlist = [sorted(s) for s in pair_sets]
    return ConflictGraph(n, store, adjlist, min_clq_size, detected)
