"""Budgeted, pivoted Bron-Kerbosch over weighted subgraphs.

Vertex sets (P, X, adjacency rows) are arbitrary-precision ints used as
bit strings, so the hot set operations are single AND/OR expressions.
Recursion enumerates maximal cliques whose weight reaches ``min_weight``,
skipping any subtree where the weight of the current clique plus all
remaining candidates cannot reach it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

# Slack applied to min_weight comparisons.
WEIGHT_EPS = 1e-9

PIVOT_RULES = ("rnd", "deg", "wgt", "mdg", "mwt")


@dataclass
class WeightedSubgraph:
    """A small vertex-weighted graph with bitmask adjacency.

    ``nodes`` are the external ids (ascending); all masks are over local
    indices.  ``cadj[v]`` is the complement row: non-neighbors of v minus
    v itself.
    """

    nodes: list[int]
    weights: list[float]
    adj: list[int]
    cadj: list[int]

    def __len__(self) -> int:
        return len(self.nodes)

    @classmethod
    def from_edges(cls, weights: dict[int, float],
                   edges: "list[tuple[int, int]] | set"):
        nodes = sorted(weights)
        index = {v: i for i, v in enumerate(nodes)}
        n = len(nodes)
        adj = [0] * n
        for e in edges:
            u, v = tuple(e)
            adj[index[u]] |= 1 << index[v]
            adj[index[v]] |= 1 << index[u]
        full = (1 << n) - 1
        cadj = [full ^ adj[i] ^ (1 << i) for i in range(n)]
        return cls(nodes, [weights[v] for v in nodes], adj, cadj)


@dataclass
class BkParams:
    min_weight: float = 1.0
    max_calls: int = 100_000
    pivot_rule: str = "wgt"
    rng_seed: int = 0

    def __post_init__(self):
        if self.max_calls < 1:
            raise ValueError("max_calls must be at least 1")
        if self.pivot_rule not in PIVOT_RULES:
            raise ValueError(f"unknown pivot rule {self.pivot_rule!r}")


@dataclass
class BkResult:
    cliques: list[frozenset[int]]
    exact: bool
    calls: int


def _mask_weight(mask: int, weights: list[float]) -> float:
    total = 0.0
    while mask:
        low = mask & -mask
        total += weights[low.bit_length() - 1]
        mask ^= low
    return total


def choose_pivot(rule: str, g: WeightedSubgraph, p_mask: int, x_mask: int,
                 rng: random.Random | None = None) -> int:
    """Pick the pivot from P | X; ties go to the smallest local index.

    rnd: seeded uniform pick.  deg/wgt: highest degree/weight in the whole
    subgraph.  mdg: highest degree counting only candidates still in P.
    mwt: highest weight plus total neighbor weight.
    """
    cand = p_mask | x_mask
    if cand == 0:
        raise ValueError("empty candidate set")
    if rule == "rnd":
        if rng is None:
            rng = random.Random(0)
        pick = rng.randrange(cand.bit_count())
        m = cand
        for _ in range(pick):
            m ^= m & -m
        return (m & -m).bit_length() - 1

    best = -1
    best_score = 0.0
    m = cand
    while m:
        low = m & -m
        u = low.bit_length() - 1
        m ^= low
        if rule == "deg":
            score = float(g.adj[u].bit_count())
        elif rule == "wgt":
            score = g.weights[u]
        elif rule == "mdg":
            score = float((g.adj[u] & p_mask).bit_count())
        else:  # mwt
            score = g.weights[u] + _mask_weight(g.adj[u], g.weights)
        if best < 0 or score > best_score:
            best, best_score = u, score
    return best


def find_cliques(g: WeightedSubgraph, params: BkParams, *,
                 prune: bool = True) -> BkResult:
    """Enumerate maximal cliques with weight >= params.min_weight.

    Stops after ``params.max_calls`` recursive calls; the result reports
    whether the run was exact.  Cliques already emitted are always maximal
    and heavy enough, budget or not.  ``prune`` disables the weight bound
    for A/B checks; it never changes the result set, only the call count.
    """
    n = len(g)
    full = (1 << n) - 1
    minw = params.min_weight - WEIGHT_EPS
    rng = random.Random(params.rng_seed)
    weights = g.weights
    out: list[int] = []
    calls = 0
    truncated = False

    def rec(r_mask: int, p_mask: int, x_mask: int, r_weight: float) -> None:
        nonlocal calls, truncated
        calls += 1
        if calls > params.max_calls:
            truncated = True
            return
        if p_mask == 0 and x_mask == 0:
            if r_mask and r_weight >= minw:
                out.append(r_mask)
            return
        if prune and r_weight + _mask_weight(p_mask, weights) < minw:
            return
        u = choose_pivot(params.pivot_rule, g, p_mask, x_mask, rng)
        # P \ N(u); the pivot itself stays iterable when it sits in P.
        ext = p_mask & (g.cadj[u] | (1 << u))
        while ext:
            low = ext & -ext
            ext ^= low
            v = low.bit_length() - 1
            rec(r_mask | low, p_mask & g.adj[v], x_mask & g.adj[v],
                r_weight + weights[v])
            if truncated:
                return
            p_mask &= ~low
            x_mask |= low

    rec(0, full, 0, 0.0)
    cliques = [
        frozenset(g.nodes[i] for i in range(n) if mask >> i & 1)
        for mask in out
    ]
    return BkResult(cliques, not truncated, calls)
