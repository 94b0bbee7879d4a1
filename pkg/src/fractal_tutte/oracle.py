"""Brute-force ground truth for small graphs.

Everything in this module computes invariants from first principles, with
no reliance on the self-similarity recursions, so that the recursion
engine can be validated against it:

* ``tutte_subgraph_sum``: the defining rank-nullity sum over all 2^|E|
  edge subsets;
* ``partition_subgraph_sum``: the same sum split by how the three hub
  vertices distribute over connected components;
* ``tutte_deletion_contraction``: the classical recursive algorithm, an
  algorithmically independent second witness;
* ``matrix_tree_count``: spanning trees via an exact integer Laplacian
  cofactor (fraction-free elimination);
* ``reliability_enumeration``: exact all-terminal reliability and the
  probability of the {A,B} | {C} two-component split.

Subset enumeration runs in pure Python up to 2^20 subsets and switches to
a vectorized numpy label-propagation sweep beyond that (the 2^27-subset
check on the generation-2 web needs it to finish in minutes rather than
hours).  Both paths produce identical classifications.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

import numpy as np

from .bipoly import BiPoly
from .errors import DomainError, SizeLimitExceeded
from .graphs import HubGraph
from .unionfind import UnionFind

MAX_SUBSET_EDGES = 27
MAX_DC_EDGES = 12
MAX_MATRIX_TREE_VERTICES = 64
MAX_RELIABILITY_EDGES = 20

#: Edge count above which subset enumeration switches to the numpy path.
_VECTORIZE_THRESHOLD = 20
_BATCH_BITS = 20


class HubPattern(IntEnum):
    """How the three hubs A, B, C fall into connected components.

    ``AB_C`` means A and B share a component while C lies in a different
    one, and so on; the integer values index histogram buckets.
    """

    ALL_TOGETHER = 0
    BC_A = 1
    AC_B = 2
    AB_C = 3
    ALL_APART = 4


@dataclass(frozen=True)
class SubgraphClassification:
    """Connectivity data of one spanning subgraph (one edge subset)."""

    components: int
    rank: int
    nullity: int
    pattern: HubPattern


GraphLike = HubGraph | tuple[int, list[tuple[int, int]]]


def _vertices_edges(g) -> tuple[int, list[tuple[int, int]]]:
    """Accept a HubGraph or a bare (num_vertices, edges) pair.

    The bare form exists because the Tutte oracles do not care about hubs,
    and useful test graphs (a single edge, a path) are too small to carry
    three distinct hub vertices.
    """
    if isinstance(g, HubGraph):
        return g.num_vertices, list(g.edges)
    nv, edges = g
    return nv, [tuple(e) for e in edges]


def _require_simple(nv: int, edges) -> None:
    seen = set()
    for u, v in edges:
        if u == v:
            raise DomainError(f"self-loop at vertex {u}: input must be a simple graph")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DomainError(
                f"duplicate edge {key}: multigraph input is not accepted")
        seen.add(key)
        if not (0 <= u < nv and 0 <= v < nv):
            raise DomainError(f"edge ({u}, {v}) out of range")


def classify_edge_subset(g: HubGraph, edge_mask: int) -> SubgraphClassification:
    """Classify the spanning subgraph keeping edge i iff bit i of edge_mask."""
    nv = g.num_vertices
    uf = UnionFind(nv)
    m = 0
    for i, (u, v) in enumerate(g.edges):
        if edge_mask >> i & 1:
            uf.union(u, v)
            m += 1
    k = uf.components
    rank = nv - k
    ra, rb, rc = (uf.find(h) for h in g.hubs)
    if ra == rb == rc:
        pat = HubPattern.ALL_TOGETHER
    elif rb == rc:
        pat = HubPattern.BC_A
    elif ra == rc:
        pat = HubPattern.AC_B
    elif ra == rb:
        pat = HubPattern.AB_C
    else:
        pat = HubPattern.ALL_APART
    return SubgraphClassification(k, rank, m - rank, pat)


# -- classified subset census ----------------------------------------------

def _census_python(nv, edges, hubs) -> Counter:
    """Counter (pattern, k, m) -> number of edge subsets, by direct loop."""
    counts: Counter = Counter()
    ne = len(edges)
    for mask in range(1 << ne):
        uf = UnionFind(nv)
        m = 0
        for i in range(ne):
            if mask >> i & 1:
                uf.union(*edges[i])
                m += 1
        k = uf.components
        if hubs is None:
            pat = 0
        else:
            ra, rb, rc = (uf.find(h) for h in hubs)
            if ra == rb == rc:
                pat = 0
            elif rb == rc:
                pat = 1
            elif ra == rc:
                pat = 2
            elif ra == rb:
                pat = 3
            else:
                pat = 4
        counts[(pat, k, m)] += 1
    return counts


def _census_numpy(nv, edges, hubs) -> Counter:
    """Same census as _census_python, vectorized over batches of subsets.

    Per batch, every vertex starts labeled with its own index and edges
    present in each subset repeatedly pull both endpoints down to the
    smaller label.  Label sums decrease strictly until the labels are the
    componentwise minima, so the sweep loop terminates; the number of
    fixed points labels[v] == v is then the component count.
    """
    ne = len(edges)
    batch_bits = min(_BATCH_BITS, ne)
    batch = 1 << batch_bits
    arange_v = np.arange(nv, dtype=np.int8)
    key_span = (nv + 1) * (ne + 1)
    totals = np.zeros(5 * key_span, dtype=np.int64)
    hub_idx = list(hubs) if hubs is not None else None

    for base in range(0, 1 << ne, batch):
        masks = np.arange(base, base + batch, dtype=np.int64)
        bits = (masks[:, None] >> np.arange(ne, dtype=np.int64)[None, :]) & 1
        bits = bits.astype(bool)
        m = bits.sum(axis=1).astype(np.int64)

        labels = np.broadcast_to(arange_v, (batch, nv)).copy()
        prev_sum = -1
        while True:
            for i, (u, v) in enumerate(edges):
                active = bits[:, i]
                lu = labels[:, u]
                lv = labels[:, v]
                mn = np.minimum(lu, lv)
                labels[:, u] = np.where(active, mn, lu)
                labels[:, v] = np.where(active, mn, lv)
            s = int(labels.sum(dtype=np.int64))
            if s == prev_sum:
                break
            prev_sum = s

        k = (labels == arange_v[None, :]).sum(axis=1).astype(np.int64)
        if hub_idx is None:
            pat = np.zeros(batch, dtype=np.int64)
        else:
            pa = labels[:, hub_idx[0]]
            pb = labels[:, hub_idx[1]]
            pc = labels[:, hub_idx[2]]
            eq_ab = pa == pb
            eq_ac = pa == pc
            eq_bc = pb == pc
            pat = np.select(
                [eq_ab & eq_ac, eq_bc & ~eq_ab, eq_ac & ~eq_ab, eq_ab & ~eq_ac],
                [0, 1, 2, 3],
                default=4,
            ).astype(np.int64)
        keys = pat * key_span + k * (ne + 1) + m
        totals += np.bincount(keys, minlength=5 * key_span)

    counts: Counter = Counter()
    nonzero = np.nonzero(totals)[0]
    for key in nonzero:
        pat, rem = divmod(int(key), key_span)
        k, m = divmod(rem, ne + 1)
        counts[(pat, k, m)] = int(totals[key])
    return counts


def _census(nv, edges, hubs) -> Counter:
    if len(edges) > MAX_SUBSET_EDGES:
        raise SizeLimitExceeded(
            f"{len(edges)} edges exceed the enumeration limit "
            f"{MAX_SUBSET_EDGES} (2^{len(edges)} subsets)")
    if len(edges) > _VECTORIZE_THRESHOLD:
        return _census_numpy(nv, edges, hubs)
    return _census_python(nv, edges, hubs)


def _poly_from_census(nv, rank_g, counts, patterns) -> BiPoly:
    """Assemble sum of (x-1)^(rank_g - r(H)) (y-1)^(n(H)) over chosen patterns."""
    xm1 = BiPoly.x_minus_1()
    ym1 = BiPoly.y_minus_1()
    kg = nv - rank_g
    xpow: dict[int, BiPoly] = {}
    ypow: dict[int, BiPoly] = {}

    def power(cache, base, e):
        if e not in cache:
            cache[e] = base ** e
        return cache[e]

    total = BiPoly.zero()
    for (pat, k, m), cnt in sorted(counts.items()):
        if pat not in patterns:
            continue
        ex = k - kg          # rank_g - r(H) = (nv - kg) - (nv - k)
        ey = m - nv + k      # nullity of H
        term = power(xpow, xm1, ex) * power(ypow, ym1, ey) * cnt
        total = total + term
    return total


# -- public oracles --------------------------------------------------------

def tutte_subgraph_sum(g: GraphLike) -> BiPoly:
    """Tutte polynomial by the defining sum over all edge subsets.

    Hub information is ignored; a bare (num_vertices, edges) pair works.
    """
    nv, edges = _vertices_edges(g)
    _require_simple(nv, edges)
    counts = _census(nv, edges, None)
    kg = _component_count(nv, edges)
    return _poly_from_census(nv, nv - kg, counts, {0})


def partition_subgraph_sum(
    g: HubGraph,
) -> tuple[BiPoly, BiPoly, BiPoly, BiPoly, BiPoly]:
    """The subgraph sum restricted to each hub pattern class.

    Returns (T1, T2A, T2B, T2C, T3) where T1 sums subgraphs whose hubs
    share a component, T2A those with hub A separated from B and C (and
    likewise T2B, T2C), and T3 those with all hubs apart.  The five parts
    add up to tutte_subgraph_sum(g).
    """
    nv, edges = _vertices_edges(g)
    counts = _census(nv, edges, g.hubs)
    rank_g = nv - _component_count(nv, edges)
    return tuple(
        _poly_from_census(nv, rank_g, counts, {int(pat)}) for pat in HubPattern
    )


def tutte_deletion_contraction(g: GraphLike) -> BiPoly:
    """Tutte polynomial by deletion-contraction.

    Input must be a simple graph (contractions create multi-edges and
    loops internally, which the recursion handles, but handing in a
    multigraph would make the cross-check against the subset oracle
    ill-defined).
    """
    nv, edges = _vertices_edges(g)
    _require_simple(nv, edges)
    if len(edges) > MAX_DC_EDGES:
        raise SizeLimitExceeded(
            f"{len(edges)} edges exceed the deletion-contraction limit "
            f"{MAX_DC_EDGES}")
    return _tutte_dc(nv, tuple(edges))


def _tutte_dc(nv: int, edges: tuple) -> BiPoly:
    if not edges:
        return BiPoly.one()
    (u, v), rest = edges[0], edges[1:]
    if u == v:
        return BiPoly.y() * _tutte_dc(nv, rest)
    uf = UnionFind(nv)
    for a, b in rest:
        if a != b:
            uf.union(a, b)
    contracted = tuple(
        (u if a == v else a, u if b == v else b) for a, b in rest)
    if not uf.connected(u, v):
        # Bridge: only the contraction survives, weighted by x.
        return BiPoly.x() * _tutte_dc(nv, contracted)
    return _tutte_dc(nv, rest) + _tutte_dc(nv, contracted)


def matrix_tree_count(g: GraphLike) -> int:
    """Spanning trees as a Laplacian cofactor, exactly over the integers."""
    nv, edges = _vertices_edges(g)
    if nv > MAX_MATRIX_TREE_VERTICES:
        raise SizeLimitExceeded(
            f"{nv} vertices exceed the matrix-tree limit "
            f"{MAX_MATRIX_TREE_VERTICES}")
    if nv <= 1:
        return 1
    lap = [[0] * nv for _ in range(nv)]
    for u, v in edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    minor = [row[1:] for row in lap[1:]]
    return _bareiss_det(minor)


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def reliability_enumeration(
    g: HubGraph, p: Fraction | int
) -> tuple[Fraction, Fraction]:
    """Exact (R, B) at edge probability p by enumerating all edge states.

    R is the probability that the operational edges connect every vertex;
    B is the probability that they leave exactly two components, one
    containing hubs A and B and the other containing hub C.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise DomainError(f"edge probability {p} outside [0, 1]")
    if not isinstance(g, HubGraph):
        raise DomainError(
            "reliability enumeration needs hub labels; pass a HubGraph")
    nv, edges = _vertices_edges(g)
    ne = len(edges)
    if ne > MAX_RELIABILITY_EDGES:
        raise SizeLimitExceeded(
            f"{ne} edges exceed the reliability enumeration limit "
            f"{MAX_RELIABILITY_EDGES}")
    counts = _census(nv, edges, g.hubs)
    q = 1 - p
    ppow = [Fraction(1)]
    qpow = [Fraction(1)]
    for _ in range(ne):
        ppow.append(ppow[-1] * p)
        qpow.append(qpow[-1] * q)
    r_total = Fraction(0)
    b_total = Fraction(0)
    for (pat, k, m), cnt in counts.items():
        weight = cnt * ppow[m] * qpow[ne - m]
        if k == 1:
            r_total += weight
        if k == 2 and pat == int(HubPattern.AB_C):
            b_total += weight
    return r_total, b_total


def _component_count(nv, edges) -> int:
    uf = UnionFind(nv)
    for u, v in edges:
        uf.union(u, v)
    return uf.components
