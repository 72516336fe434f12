"""Branchings (forests of arborescences) inside a host digraph.

A branching assigns each vertex at most one parent.  A vertex of out-degree 0
is a leaf; isolated vertices count as leaves.  The counters exposed by
:class:`BranchingStats` are always recomputed from scratch, which doubles as a
validator against counter drift.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import IllegalExpansion, MalformedInput, NotTBranching
from .graph import Arc, Digraph


@dataclass(frozen=True)
class BranchingStats:
    """Component/leaf counters of a branching.

    ``N`` is the number of vertices lying in non-trivial (>= 2 vertex)
    components and ``k`` the number of such components.  ``components`` counts
    all components including singletons; ``arcs`` always equals ``N - k``.
    """

    n: int
    N: int
    k: int
    leaves: int
    components: int
    arcs: int


class Branching:
    """Mutable branching value; solver phases copy before mutating.

    The public :meth:`add_expansion` is persistent (returns a new value);
    in-place mutation is reserved for owners of a private copy.
    """

    __slots__ = ("host", "parent", "out_degree", "arc_set")

    def __init__(self, host: Digraph):
        self.host = host
        self.parent: list[Optional[int]] = [None] * host.vertex_count
        self.out_degree: list[int] = [0] * host.vertex_count
        self.arc_set: set[Arc] = set()

    @classmethod
    def empty(cls, host: Digraph) -> "Branching":
        return cls(host)

    @classmethod
    def from_arcs(cls, host: Digraph, arcs: Iterable[Arc]) -> "Branching":
        """Rebuild a branching from an explicit arc list.

        Raises MalformedInput if an arc is not in the host or some vertex
        would get two parents.
        """
        b = cls(host)
        host_arcs = set(host.arcs)
        for arc in arcs:
            u, v = arc
            if (u, v) not in host_arcs:
                raise MalformedInput(f"arc ({u}, {v}) not in host digraph")
            if b.parent[v] is not None:
                raise MalformedInput(f"vertex {v} has two parents")
            b.parent[v] = u
            b.out_degree[u] += 1
            b.arc_set.add((u, v))
        return b

    @classmethod
    def from_parents(cls, host: Digraph, parents: Sequence[Optional[int]]) -> "Branching":
        """Rebuild a branching from a per-vertex parent array."""
        if len(parents) != host.vertex_count:
            raise MalformedInput(
                f"parent array has length {len(parents)}, expected {host.vertex_count}"
            )
        arcs = [(p, v) for v, p in enumerate(parents) if p is not None]
        return cls.from_arcs(host, arcs)

    def copy(self) -> "Branching":
        b = Branching.__new__(Branching)
        b.host = self.host
        b.parent = list(self.parent)
        b.out_degree = list(self.out_degree)
        b.arc_set = set(self.arc_set)
        return b

    def available_heads(self, v: int) -> list[int]:
        """Out-neighbors of ``v`` in the host that still have in-degree 0."""
        return [u for u in self.host.out_adj[v] if self.parent[u] is None]

    def _expand(self, v: int, heads: Sequence[int]) -> None:
        """In-place expansion; caller must own this value."""
        if self.out_degree[v] != 0:
            raise IllegalExpansion(f"vertex {v} is already internal")
        if not heads:
            raise IllegalExpansion("expansion requires at least one head")
        if len(set(heads)) != len(heads):
            raise IllegalExpansion("duplicate heads in expansion")
        out = self.host.out_adj[v]
        for h in heads:
            if h not in out:
                raise IllegalExpansion(f"({v}, {h}) is not a host arc")
            if self.parent[h] is not None:
                raise IllegalExpansion(f"head {h} already has a parent")
        for h in heads:
            self.parent[h] = v
            self.arc_set.add((v, h))
        self.out_degree[v] = len(heads)

    def add_expansion(self, v: int, heads: Sequence[int]) -> "Branching":
        """Return a new branching with all arcs ``(v, h)`` added.

        Preconditions: ``v`` has out-degree 0 here, every ``(v, h)`` is a host
        arc, and every head currently has in-degree 0.
        """
        b = self.copy()
        b._expand(v, heads)
        return b

    def _attach(self, p: int, v: int) -> None:
        """Add a single arc (p, v); used by the final attachment phase."""
        if self.parent[v] is not None:
            raise IllegalExpansion(f"head {v} already has a parent")
        if p not in self.host.in_adj[v]:
            raise IllegalExpansion(f"({p}, {v}) is not a host arc")
        self.parent[v] = p
        self.out_degree[p] += 1
        self.arc_set.add((p, v))

    @property
    def leaf_count(self) -> int:
        return sum(1 for d in self.out_degree if d == 0)

    def leaf_weight(self) -> int:
        """Total weight of out-degree-0 vertices (host must be weighted)."""
        w = self.host.vertex_weights
        if w is None:
            raise MalformedInput("host digraph has no vertex weights")
        return sum(w[v] for v in range(self.host.vertex_count) if self.out_degree[v] == 0)

    def stats(self) -> BranchingStats:
        """Recompute all counters from scratch via union-find over the arcs."""
        n = self.host.vertex_count
        uf = list(range(n))

        def find(x: int) -> int:
            while uf[x] != x:
                uf[x] = uf[uf[x]]
                x = uf[x]
            return x

        for u, v in self.arc_set:
            ru, rv = find(u), find(v)
            if ru != rv:
                uf[ru] = rv

        sizes: dict[int, int] = {}
        for v in range(n):
            r = find(v)
            sizes[r] = sizes.get(r, 0) + 1
        big_n = sum(s for s in sizes.values() if s >= 2)
        k = sum(1 for s in sizes.values() if s >= 2)
        leaves = sum(1 for d in self.out_degree if d == 0)
        return BranchingStats(
            n=n,
            N=big_n,
            k=k,
            leaves=leaves,
            components=len(sizes),
            arcs=len(self.arc_set),
        )

    def is_t_branching(self, t: int) -> bool:
        """True iff every internal vertex has out-degree at least ``t``."""
        return all(d == 0 or d >= t for d in self.out_degree)

    def is_maximal(self, t: int) -> bool:
        """True iff no out-degree-0 vertex can still make a ``t``-expansion.

        Raises NotTBranching when this value is not a ``t``-branching.
        """
        if not self.is_t_branching(t):
            raise NotTBranching(f"not a {t}-branching")
        for v in range(self.host.vertex_count):
            if self.out_degree[v] == 0 and len(self.available_heads(v)) >= t:
                return False
        return True

    def has_internal_coverage(self) -> bool:
        """True iff no internal vertex still has an in-degree-0 out-neighbor.

        This is what guarantees that the final attachment phase can reach
        every remaining vertex through out-degree-0 tails only.
        """
        return all(
            self.out_degree[v] == 0 or not self.available_heads(v)
            for v in range(self.host.vertex_count)
        )

    def is_spanning_arborescence(self) -> bool:
        """True iff this branching is a single arborescence spanning the host."""
        n = self.host.vertex_count
        root = self.host.root
        if self.parent[root] is not None:
            return False
        if any(self.parent[v] is None for v in range(n) if v != root):
            return False
        # parent in-degrees are <= 1 by construction; confirm connectivity
        children: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                children[p].append(v)
        reached = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for c in children[v]:
                reached += 1
                queue.append(c)
        return reached == n

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arc_set)

    def __repr__(self) -> str:
        return f"Branching(arcs={len(self.arc_set)}, leaves={self.leaf_count})"


def empty_branching(d: Digraph) -> Branching:
    """The spanning branching of ``d`` with no arcs."""
    return Branching.empty(d)
