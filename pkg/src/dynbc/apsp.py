"""All-pairs shortest-path state: counting Dijkstra, shortest-path DAGs,
dependency accumulation, betweenness centrality, and work counters.

Distances are exact integers with a saturating infinity sentinel; path
counts are doubles, exact up to 2**53 (an ``inexact`` flag trips beyond).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from heapq import heappush, heappop

from .graph import Graph

INF = 2**63 - 1
SIGMA_EXACT_LIMIT = float(2**53)


def sat_add(a: int, b: int) -> int:
    """Distance addition saturating at the infinity sentinel."""
    if a >= INF or b >= INF:
        return INF
    return a + b


def transpose(mat):
    return [list(row) for row in zip(*mat)]


@dataclass
class WorkCounters:
    """Tallies of algorithmic work, used to check complexity claims.

    edges_examined counts edge touches by shortest-path and DAG-repair
    scans; pairs_touched counts per-pair reclassification work;
    dag_edges_emitted counts edges written into materialized DAGs.
    """

    edges_examined: int = 0
    pairs_touched: int = 0
    dag_edges_emitted: int = 0

    def copy(self) -> "WorkCounters":
        return WorkCounters(self.edges_examined, self.pairs_touched,
                            self.dag_edges_emitted)


@dataclass
class UpdateReport:
    """Per-operation accounting attached to the state an update produced.

    DAG totals are taken at the checkpoints before, between, and after the
    update phases so work-bound assertions can be formed from real sizes.
    """

    edges_examined: int = 0
    pairs_touched: int = 0
    dag_sum_pre: int = 0
    dag_sum_mid: int = 0
    dag_sum_post: int = 0
    dag_v_pre: int = 0
    dag_v_mid: int = 0
    dag_v_post: int = 0
    r_total: int = 0
    rdag_insert_attempts: int = 0
    rdag_unique_inserts: int = 0

    def merged(self, later: "UpdateReport") -> "UpdateReport":
        """Combine with the report of an immediately following update."""
        return UpdateReport(
            edges_examined=self.edges_examined + later.edges_examined,
            pairs_touched=self.pairs_touched + later.pairs_touched,
            dag_sum_pre=self.dag_sum_pre,
            dag_sum_mid=max(self.dag_sum_mid, self.dag_sum_post,
                            later.dag_sum_pre, later.dag_sum_mid),
            dag_sum_post=later.dag_sum_post,
            dag_v_pre=self.dag_v_pre,
            dag_v_mid=max(self.dag_v_mid, self.dag_v_post,
                          later.dag_v_pre, later.dag_v_mid),
            dag_v_post=later.dag_v_post,
            r_total=self.r_total + later.r_total,
            rdag_insert_attempts=self.rdag_insert_attempts + later.rdag_insert_attempts,
            rdag_unique_inserts=self.rdag_unique_inserts + later.rdag_unique_inserts,
        )


@dataclass
class SsspResult:
    """One source's shortest-path data.

    ``dag`` holds every edge on some shortest path from the source;
    ``order`` lists reachable vertices by nondecreasing (distance, id),
    which is a valid topological order of the DAG.
    """

    source: int
    dist: list
    sigma: list
    dag: set
    order: list
    inexact: bool = False


@dataclass
class ApspState:
    """Full all-pairs state: distance and path-count matrices, one forward
    DAG per source, optional reverse DAGs, and the BC vector."""

    graph: Graph
    dist: list
    sigma: list
    dags: list
    rdags: list | None
    bc: list
    counters: WorkCounters
    inexact: bool = False
    report: UpdateReport | None = None

    @property
    def mode(self) -> str:
        return "full" if self.rdags is not None else "edge-fast"

    def dag_sum(self) -> int:
        total = sum(len(d) for d in self.dags)
        if self.rdags is not None:
            total += sum(len(d) for d in self.rdags)
        return total

    def dag_v_size(self, v: int) -> int:
        total = len(self.dags[v])
        if self.rdags is not None:
            total += len(self.rdags[v])
        return total


def counting_dijkstra(g: Graph, s: int, counters: WorkCounters | None = None) -> SsspResult:
    """Dijkstra from ``s`` with path counting and DAG collection.

    Binary heap with lazy deletion.  Each edge is relaxed exactly once,
    from its settled tail, so predecessor lists are final when collected.
    """
    n = g.n
    dist = [INF] * n
    sigma = [0.0] * n
    preds = [()] * n
    settled = [False] * n
    order = []
    dist[s] = 0
    sigma[s] = 1.0
    heap = [(0, s)]
    adj = g.adj
    inexact = False
    examined = 0
    while heap:
        _, u = heappop(heap)
        if settled[u]:
            continue
        settled[u] = True
        order.append(u)
        du = dist[u]
        su = sigma[u]
        row = adj[u]
        examined += len(row)
        for v, w in row:
            nd = du + w
            dv = dist[v]
            if nd < dv:
                dist[v] = nd
                sigma[v] = su
                preds[v] = [u]
                heappush(heap, (nd, v))
            elif nd == dv:
                sv = sigma[v] + su
                if sv > SIGMA_EXACT_LIMIT:
                    inexact = True
                sigma[v] = sv
                preds[v].append(u)
    dag = set()
    for v in order:
        for p in preds[v]:
            dag.add((p, v))
    if counters is not None:
        counters.edges_examined += examined
        counters.dag_edges_emitted += len(dag)
    return SsspResult(s, dist, sigma, dag, order, inexact)


def topo_order(dag_edges) -> list:
    """Topological order of the vertices incident to ``dag_edges`` by
    in-degree peeling.  Raises ValueError if the edge set has a cycle."""
    indeg = {}
    out = {}
    for a, b in dag_edges:
        indeg[b] = indeg.get(b, 0) + 1
        indeg.setdefault(a, 0)
        out.setdefault(a, []).append(b)
    queue = deque(v for v in sorted(indeg) if indeg[v] == 0)
    order = []
    while queue:
        a = queue.popleft()
        order.append(a)
        for b in out.get(a, ()):
            indeg[b] -= 1
            if indeg[b] == 0:
                queue.append(b)
    if len(order) != len(indeg):
        raise ValueError("cycle in supposed DAG: state corrupted")
    return order


def accumulate_dependency(s: int, order, sigma, preds, bc=None) -> list:
    """Propagate dependency shares backward through a shortest-path DAG.

    ``order`` must be a topological order of the DAG (processed in
    reverse); ``preds`` maps each vertex to its DAG in-neighbors.  When
    ``bc`` is given, every vertex except ``s`` receives its dependency.
    Returns the dependency vector.
    """
    delta = [0.0] * len(sigma)
    for w in reversed(order):
        ps = preds[w]
        if ps:
            sw = sigma[w]
            if sw <= 0.0:
                raise ValueError(
                    f"zero path count at vertex {w} despite predecessors: state corrupted")
            coeff = (1.0 + delta[w]) / sw
            for p in ps:
                delta[p] += sigma[p] * coeff
        if bc is not None and w != s:
            bc[w] += delta[w]
    return delta


def _bc_pass(s: int, dag: set, sigma_row, bc, n: int):
    """One source's dependency accumulation over a repaired DAG, using
    in-degree peeling for the topological order."""
    if not dag:
        return
    order = topo_order(dag)
    preds = [[] for _ in range(n)]
    for a, b in dag:
        preds[b].append(a)
    accumulate_dependency(s, order, sigma_row, preds, bc)


def derive_rdags(g: Graph, dist) -> list:
    """Reverse DAGs read off the distance matrix: (a, b) is in the reverse
    DAG rooted at x iff forward edge (b, a) lies on a shortest b-to-x path."""
    n = g.n
    rdags = [set() for _ in range(n)]
    for u, v, w in g.edges():
        du = dist[u]
        dv = dist[v]
        for x in range(n):
            dvx = dv[x]
            if dvx < INF and du[x] == dvx + w:
                rdags[x].add((v, u))
    return rdags


def brandes_bc(g: Graph, mode: str = "edge-fast") -> ApspState:
    """Betweenness centrality by n counting-Dijkstra runs plus dependency
    accumulation in nonincreasing-distance order."""
    if mode not in ("edge-fast", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    n = g.n
    counters = WorkCounters()
    dist = []
    sigma = []
    dags = []
    bc = [0.0] * n
    inexact = False
    for s in range(n):
        r = counting_dijkstra(g, s, counters)
        inexact |= r.inexact
        dist.append(r.dist)
        sigma.append(r.sigma)
        dags.append(r.dag)
        preds = [[] for _ in range(n)]
        for a, b in r.dag:
            preds[b].append(a)
        accumulate_dependency(s, r.order, r.sigma, preds, bc)
    rdags = derive_rdags(g, dist) if mode == "full" else None
    return ApspState(g, dist, sigma, dags, rdags, bc, counters, inexact)


def static_bc(g: Graph, mode: str = "edge-fast") -> ApspState:
    """Betweenness centrality restricted to shortest-path edges.

    The per-source runs first produce distances and the deduplicated set of
    edges lying on any shortest path.  DAGs, predecessor lists, and path
    counts are then rebuilt by scanning only that set, and dependencies are
    accumulated as in brandes_bc.  The attached report records how many
    edge scans the rebuild phases performed.
    """
    if mode not in ("edge-fast", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    n = g.n
    counters = WorkCounters()
    edge_list = g.edges()
    index = {(u, v): i for i, (u, v, _) in enumerate(edge_list)}
    seen = bytearray(len(edge_list))
    dist = []
    inexact = False
    for s in range(n):
        r = counting_dijkstra(g, s, counters)
        inexact |= r.inexact
        dist.append(r.dist)
        for e in r.dag:
            seen[index[e]] = 1
    estar = [edge_list[i] for i in range(len(edge_list)) if seen[i]]

    sigma = []
    dags = []
    bc = [0.0] * n
    rebuild_scans = 0
    for s in range(n):
        drow = dist[s]
        dag = set()
        preds = [[] for _ in range(n)]
        for u, v, w in estar:
            du = drow[u]
            if du < INF and du + w == drow[v]:
                dag.add((u, v))
                preds[v].append(u)
        counters.edges_examined += len(estar)
        counters.dag_edges_emitted += len(dag)
        rebuild_scans += len(estar)

        korder = topo_order(dag) if dag else []
        counters.edges_examined += len(dag)
        rebuild_scans += len(dag)
        srow = [0.0] * n
        srow[s] = 1.0
        for x in korder:
            if x == s:
                continue
            total = 0.0
            for p in preds[x]:
                total += srow[p]
            if total > SIGMA_EXACT_LIMIT:
                inexact = True
            srow[x] = total
        counters.edges_examined += len(dag)
        rebuild_scans += len(dag)

        order = [t for t in range(n) if drow[t] < INF]
        order.sort(key=lambda t: (drow[t], t))
        accumulate_dependency(s, order, srow, preds, bc)
        counters.edges_examined += len(dag)
        rebuild_scans += len(dag)

        sigma.append(srow)
        dags.append(dag)

    rdags = derive_rdags(g, dist) if mode == "full" else None
    state = ApspState(g, dist, sigma, dags, rdags, bc, counters, inexact)
    state.report = UpdateReport(edges_examined=rebuild_scans)
    return state


@dataclass
class StarStats:
    """Shortest-path edge statistics.

    ``per_vertex[x]`` counts edges on shortest paths through x (edges of
    the forward DAG rooted at x unioned with edges on shortest paths into
    x); ``dag_sizes[x]`` is the plain forward DAG size.
    """

    m_star: int
    m_star_avg: float
    per_vertex: list = field(default_factory=list)
    dag_sizes: list = field(default_factory=list)


def star_stats(state: ApspState) -> StarStats:
    n = state.graph.n
    union = set()
    for dag in state.dags:
        union |= dag
    rdags = state.rdags
    if rdags is None:
        rdags = derive_rdags(state.graph, state.dist)
    per = []
    for x in range(n):
        through = {(b, a) for (a, b) in rdags[x]}
        through |= state.dags[x]
        per.append(len(through))
    return StarStats(
        m_star=len(union),
        m_star_avg=sum(per) / n,
        per_vertex=per,
        dag_sizes=[len(d) for d in state.dags],
    )
