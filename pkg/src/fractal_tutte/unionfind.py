"""Small union-find (disjoint set union) used for connectivity counting."""

from __future__ import annotations


class UnionFind:
    """Union-find over the integers 0..n-1 with path halving and union by size."""

    __slots__ = ("parent", "size", "components")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; True if they were distinct."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True

    def connected(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)


def component_count(n: int, edges) -> int:
    """Number of connected components of the graph (range(n), edges)."""
    uf = UnionFind(n)
    for u, v in edges:
        uf.union(u, v)
    return uf.components
