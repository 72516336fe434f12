"""Leaf-maximizing arborescence solvers and the exact oracle.

Pipelines:
  * ``max_leaves``         greedy 3-expansions, matching-optimal 2-expansions,
                           then attachment; certified 3/2 ratio.
  * ``expansion_baseline`` greedy 2-expansions then attachment; ratio 2.
  * ``max_leaves_packing`` greedy 4-expansions, weighted 2/3-set packing,
                           then attachment; ratio max{4/3, alpha}.
  * ``exact_max_leaves``   branch-and-bound over parent functions (oracle).

All vertex iteration happens in the deterministic topological order, so
identical inputs give identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import certificates
from .branching import Branching, BranchingStats
from .errors import PreconditionViolated, TooLarge
from .graph import Arc, Digraph, topological_order
from .matching import max_matching
from .packing import EXACT_PACKER, Packer, PackSet

EXACT_PRODUCT_LIMIT = 10**8
EXACT_SMALL_N = 16


@dataclass
class SolveReport:
    """Phase-by-phase statistics plus the bound certificates of one run.

    Bound fields are exact rationals; ``certificate_ok`` is the conjunction
    of every inequality the run's pipeline is entitled to claim.
    """

    algorithm: str
    leaf_count: int
    certificate_ok: bool
    phase_stats: dict[str, BranchingStats] = field(default_factory=dict)
    phase_arcs: dict[str, list[Arc]] = field(default_factory=dict)
    matching_size: Optional[int] = None
    lb_lemma1: Optional[Fraction] = None
    ub_lemma2: Optional[Fraction] = None
    ub_lemma3: Optional[Fraction] = None
    lb_lemma4: Optional[Fraction] = None
    ub_lemma5: Optional[Fraction] = None
    lb_baseline: Optional[Fraction] = None
    claimed_alpha: Optional[Fraction] = None
    selected_triples: Optional[int] = None
    selected_pairs: Optional[int] = None
    leaf_weight: Optional[int] = None

    def to_dict(self) -> dict:
        """Flat JSON-ready view; rationals serialize as "p/q" strings."""
        out: dict = {
            "algorithm": self.algorithm,
            "leaf_count": self.leaf_count,
            "certificate_ok": self.certificate_ok,
        }
        phase_names = [n for n in ("F1", "F2", "F3") if n in self.phase_stats]
        for i, name in enumerate(phase_names, start=1):
            s = self.phase_stats[name]
            out[f"N{i}"] = s.N
            out[f"k{i}"] = s.k
        if self.matching_size is not None:
            out["matching_size"] = self.matching_size
        for key in (
            "lb_lemma1",
            "ub_lemma2",
            "ub_lemma3",
            "lb_lemma4",
            "ub_lemma5",
            "lb_baseline",
            "claimed_alpha",
        ):
            val = getattr(self, key)
            if val is not None:
                out[key] = str(Fraction(val))
        if self.selected_triples is not None:
            out["selected_triples"] = self.selected_triples
        if self.selected_pairs is not None:
            out["selected_pairs"] = self.selected_pairs
        if self.leaf_weight is not None:
            out["leaf_weight"] = self.leaf_weight
        return out


def _check_greedy_pre(d: Digraph, t: int, f: Branching) -> None:
    if t < 1:
        raise PreconditionViolated(f"t must be positive, got {t}")
    if f.host is not d:
        raise PreconditionViolated("branching does not belong to this digraph")
    if t >= 2:
        if not f.is_t_branching(t + 1):
            raise PreconditionViolated(f"input is not a {t + 1}-branching")
    elif not f.has_internal_coverage():
        raise PreconditionViolated(
            "input branching leaves an internal vertex with in-degree-0 out-neighbors"
        )


def greedy_expand(d: Digraph, t: int, f: Branching) -> Branching:
    """Maximal spanning t-branching of ``d`` containing ``f``.

    Each out-degree-0 vertex is examined once, in topological order; when it
    still has at least ``t`` in-degree-0 out-neighbors, all of them are taken.
    """
    _check_greedy_pre(d, t, f)
    work = f.copy()
    for v in topological_order(d):
        if work.out_degree[v] == 0:
            heads = work.available_heads(v)
            if len(heads) >= t:
                work._expand(v, heads)
    return work


def attach(d: Digraph, f: Branching) -> Branching:
    """Give every remaining in-degree-0 non-root vertex a parent.

    Processed in topological order; an already-internal in-neighbor is
    preferred (it costs no leaf), ties broken by smallest id.  The result is
    always a spanning arborescence, even when earlier phases left vertices
    whose in-neighbors are all internal.
    """
    if f.host is not d:
        raise PreconditionViolated("branching does not belong to this digraph")
    work = f.copy()
    for v in topological_order(d):
        if v != d.root and work.parent[v] is None:
            candidates = d.in_adj[v]
            pick = next(
                (p for p in candidates if work.out_degree[p] > 0), candidates[0]
            )
            work._attach(pick, v)
    return work


def max_expand(d: Digraph, f: Branching) -> tuple[Branching, int]:
    """Maximum spanning 2-branching of ``d`` containing the maximal 3-branching ``f``.

    Builds the multigraph of feasible 2-expansions over in-degree-0 vertices,
    collapses parallel edges (smallest candidate id wins), computes a maximum
    matching, and applies the matched expansions.  Returns the expanded
    branching and the matching size.
    """
    if f.host is not d:
        raise PreconditionViolated("branching does not belong to this digraph")
    if not f.is_t_branching(3):
        raise PreconditionViolated("input is not a 3-branching")
    if not f.is_maximal(3):
        raise PreconditionViolated("input 3-branching is not maximal")

    # candidate v: out-degree 0 with exactly two in-degree-0 out-neighbors
    edge_for_pair: dict[frozenset[int], int] = {}
    heads_of: dict[int, list[int]] = {}
    for v in topological_order(d):
        if f.out_degree[v] == 0:
            heads = f.available_heads(v)
            if len(heads) == 2:
                heads_of[v] = heads
                pair = frozenset(heads)
                if pair not in edge_for_pair or v < edge_for_pair[pair]:
                    edge_for_pair[pair] = v

    nodes = [u for u in range(d.vertex_count) if f.parent[u] is None]
    index = {u: i for i, u in enumerate(nodes)}
    simple_edges = []
    for pair in edge_for_pair:
        a, b = sorted(pair)
        simple_edges.append((index[a], index[b]))

    matched = max_matching(len(nodes), simple_edges)

    work = f.copy()
    applied = []
    for i, j in matched:
        pair = frozenset((nodes[i], nodes[j]))
        applied.append(edge_for_pair[pair])
    for v in sorted(applied):
        work._expand(v, heads_of[v])
    return work, len(matched)


def max_leaves(d: Digraph) -> tuple[Branching, SolveReport]:
    """The certified 3/2-ratio pipeline: 3-expansions, matching, attachment."""
    f1 = greedy_expand(d, 3, Branching.empty(d))
    s1 = f1.stats()
    f2, matching_size = max_expand(d, f1)
    s2 = f2.stats()
    t = attach(d, f2)
    st = t.stats()
    assert t.is_spanning_arborescence()

    lb, u2, u3 = certificates.two_phase_bounds(s1.N, s1.k, s2.N, s2.k)
    ok = certificates.two_phase_certificate_ok(st.leaves, s1.N, s1.k, s2.N, s2.k)
    report = SolveReport(
        algorithm="maxleaves",
        leaf_count=st.leaves,
        certificate_ok=ok,
        phase_stats={"F1": s1, "F2": s2, "T": st},
        phase_arcs={
            "F1": f1.sorted_arcs(),
            "F2": f2.sorted_arcs(),
            "T": t.sorted_arcs(),
        },
        matching_size=matching_size,
        lb_lemma1=lb,
        ub_lemma2=u2,
        ub_lemma3=u3,
    )
    if d.vertex_weights is not None:
        report.leaf_weight = t.leaf_weight()
    return t, report


def expansion_baseline(d: Digraph) -> tuple[Branching, SolveReport]:
    """Plain greedy 2-expansion baseline (ratio 2) with its own certificate."""
    f = greedy_expand(d, 2, Branching.empty(d))
    s = f.stats()
    t = attach(d, f)
    st = t.stats()
    assert t.is_spanning_arborescence()

    lb = certificates.baseline_lower_bound(s.N, s.k)
    u2 = certificates.upper_bound_from_two_branching(s.N, s.k)
    report = SolveReport(
        algorithm="expansion2",
        leaf_count=st.leaves,
        certificate_ok=st.leaves >= lb,
        phase_stats={"F1": s, "T": st},
        phase_arcs={"F1": f.sorted_arcs(), "T": t.sorted_arcs()},
        lb_baseline=lb,
        ub_lemma2=u2,
    )
    if d.vertex_weights is not None:
        report.leaf_weight = t.leaf_weight()
    return t, report


def max_leaves_packing(
    d: Digraph, packer: Packer = EXACT_PACKER
) -> tuple[Branching, SolveReport]:
    """The weighted 2/3-set-packing pipeline (ratio max{4/3, alpha}).

    Greedy 4-expansions first; every remaining out-degree-0 vertex with two
    or three in-degree-0 out-neighbors contributes a set (weight = size - 1),
    and each 3-set also contributes its three 2-subsets.  Size-3 selections
    are applied before size-2 ones, then the attachment phase completes the
    arborescence.
    """
    f1 = greedy_expand(d, 4, Branching.empty(d))
    s1 = f1.stats()

    sets: list[PackSet] = []
    heads_of: dict[int, list[int]] = {}
    for v in topological_order(d):
        if f1.out_degree[v] == 0:
            heads = f1.available_heads(v)
            if 2 <= len(heads) <= 3:
                heads_of[v] = heads
                sets.append(PackSet(frozenset(heads), len(heads) - 1, v))
                if len(heads) == 3:
                    a, b, c = heads
                    for sub in ((a, b), (a, c), (b, c)):
                        sets.append(PackSet(frozenset(sub), 1, v))

    selection = packer.solve(sets)
    triples = sorted(
        (s for s in selection if len(s.members) == 3), key=lambda s: s.candidate
    )
    pairs = sorted(
        (s for s in selection if len(s.members) == 2), key=lambda s: s.candidate
    )

    f2 = f1.copy()
    for s in triples:
        f2._expand(s.candidate, s.sorted_members())
    s2 = f2.stats()
    f3 = f2.copy()
    for s in pairs:
        f3._expand(s.candidate, s.sorted_members())
    s3 = f3.stats()
    t = attach(d, f3)
    st = t.stats()
    assert t.is_spanning_arborescence()

    alpha = packer.claimed_alpha
    lb = certificates.packing_lower_bound(s1.N, s1.k, s2.N, s2.k, s3.N, s3.k)
    ub = certificates.packing_upper_bound(
        s1.N, s1.k, s2.N, s2.k, s3.N, s3.k, alpha
    )
    # leaf-loss identities: each applied selection costs exactly one leaf
    identities = (
        s1.leaves - s2.leaves == len(triples)
        and 3 * len(triples) == (s2.N - s2.k) - (s1.N - s1.k)
        and s2.leaves - s3.leaves == len(pairs)
        and 2 * len(pairs) == (s3.N - s3.k) - (s2.N - s2.k)
        and s1.N - s1.k <= s2.N - s2.k <= s3.N - s3.k
    )
    ok = st.leaves >= lb and identities
    report = SolveReport(
        algorithm=f"w3dm-{packer.name}",
        leaf_count=st.leaves,
        certificate_ok=ok,
        phase_stats={"F1": s1, "F2": s2, "F3": s3, "T": st},
        phase_arcs={
            "F1": f1.sorted_arcs(),
            "F2": f2.sorted_arcs(),
            "F3": f3.sorted_arcs(),
            "T": t.sorted_arcs(),
        },
        lb_lemma4=lb,
        ub_lemma5=ub,
        claimed_alpha=alpha,
        selected_triples=len(triples),
        selected_pairs=len(pairs),
    )
    if d.vertex_weights is not None:
        report.leaf_weight = t.leaf_weight()
    return t, report


def _exact_guard(d: Digraph) -> None:
    if d.vertex_count <= EXACT_SMALL_N:
        return
    product = 1
    for v in range(d.vertex_count):
        if v == d.root:
            continue
        product *= max(1, len(d.in_adj[v]))
        if product > EXACT_PRODUCT_LIMIT:
            raise TooLarge(
                f"search space exceeds {EXACT_PRODUCT_LIMIT} parent functions"
            )


def exact_max_leaves(
    d: Digraph, objective: str = "leaves", prune: bool = True
) -> tuple[int, Branching]:
    """Exact optimum by branch-and-bound over parent functions.

    On a rooted DAG every parent function (one in-neighbor per non-root
    vertex) yields a spanning arborescence, so the search minimizes the
    total weight of distinct parents used.  ``objective`` is "leaves" (count
    of out-degree-0 vertices) or "leaf_weight" (their summed vertex weights).
    The optimistic bound assumes every undecided vertex becomes a leaf, which
    is admissible, so pruning never changes the returned value.
    """
    if objective not in ("leaves", "leaf_weight"):
        raise ValueError(f"unknown objective {objective!r}")
    _exact_guard(d)

    n = d.vertex_count
    if objective == "leaf_weight":
        if d.vertex_weights is None:
            raise PreconditionViolated("leaf_weight objective needs vertex weights")
        weight = list(d.vertex_weights)
    else:
        weight = [1] * n
    total = sum(weight)

    order = [v for v in topological_order(d) if v != d.root]
    forced = [v for v in order if len(d.in_adj[v]) == 1]
    choices = [v for v in order if len(d.in_adj[v]) > 1]

    parent: list[Optional[int]] = [None] * n
    use_count = [0] * n
    base_cost = 0
    for v in forced:
        p = d.in_adj[v][0]
        parent[v] = p
        if use_count[p] == 0:
            base_cost += weight[p]
        use_count[p] += 1

    best_cost = total + 1
    best_parent: Optional[list[Optional[int]]] = None

    def dfs(i: int, cost: int) -> None:
        nonlocal best_cost, best_parent
        if prune and cost >= best_cost:
            return
        if i == len(choices):
            if cost < best_cost:
                best_cost = cost
                best_parent = list(parent)
            return
        v = choices[i]
        options = d.in_adj[v]
        # free (already-internal) parents first, then ascending id
        for p in sorted(options, key=lambda q: (use_count[q] == 0, q)):
            added = weight[p] if use_count[p] == 0 else 0
            parent[v] = p
            use_count[p] += 1
            dfs(i + 1, cost + added)
            use_count[p] -= 1
            parent[v] = None

    dfs(0, base_cost)
    assert best_parent is not None
    branching = Branching.from_parents(d, best_parent)
    assert branching.is_spanning_arborescence()
    return total - best_cost, branching
