"""Independent ground truth: exhaustive path enumeration for tiny graphs
and exact state comparison.  Deliberately naive; used only by tests and
the stream verifier."""

from __future__ import annotations

from dataclasses import dataclass

from .apsp import INF, ApspState
from .graph import Graph

MAX_ENUM_VERTICES = 12


def enumerate_paths_bc(g: Graph):
    """Distances, shortest-path counts, and betweenness by enumerating all
    simple paths and summing pair dependencies directly.

    Positive weights make every shortest path simple, so the enumeration
    is exhaustive.  Limited to n <= 12.
    """
    n = g.n
    if n > MAX_ENUM_VERTICES:
        raise ValueError(f"enumeration oracle limited to n <= {MAX_ENUM_VERTICES}")
    dist = [[INF] * n for _ in range(n)]
    sigma = [[0.0] * n for _ in range(n)]
    adj = g.adj

    for s in range(n):
        best = dist[s]
        cnt = sigma[s]
        best[s] = 0
        cnt[s] = 1.0

        def walk(u, wsum, mask):
            for x, w in adj[u]:
                bit = 1 << x
                if mask & bit:
                    continue
                nw = wsum + w
                if nw < best[x]:
                    best[x] = nw
                    cnt[x] = 1.0
                elif nw == best[x]:
                    cnt[x] += 1.0
                walk(x, nw, mask | bit)

        walk(s, 0, 1 << s)

    bc = [0.0] * n
    for s in range(n):
        ds = dist[s]
        ss = sigma[s]
        for t in range(n):
            if t == s or ss[t] == 0.0:
                continue
            dst = ds[t]
            for v in range(n):
                if v == s or v == t:
                    continue
                dsv = ds[v]
                dvt = dist[v][t]
                if dsv < INF and dvt < INF and dsv + dvt == dst:
                    bc[v] += ss[v] * sigma[v][t] / ss[t]
    return dist, sigma, bc


@dataclass
class OracleReport:
    """Outcome of comparing two states entry by entry."""

    max_bc_abs_err: float
    dist_mismatches: int
    sigma_mismatches: int
    dag_mismatches: int
    passed: bool


def compare_states(a: ApspState, b: ApspState, tol: float = 1e-9) -> OracleReport:
    """Exact comparison of distance, path-count, and DAG data; BC compared
    within an absolute per-vertex tolerance.  Reverse DAGs are compared
    when both states carry them."""
    n = a.graph.n
    if n != b.graph.n:
        raise ValueError("dimension mismatch")
    dist_mism = 0
    sigma_mism = 0
    for s in range(n):
        ra, rb = a.dist[s], b.dist[s]
        sa, sb = a.sigma[s], b.sigma[s]
        for t in range(n):
            if ra[t] != rb[t]:
                dist_mism += 1
            if sa[t] != sb[t]:
                sigma_mism += 1
    dag_mism = sum(1 for s in range(n) if a.dags[s] != b.dags[s])
    if a.rdags is not None and b.rdags is not None:
        dag_mism += sum(1 for s in range(n) if a.rdags[s] != b.rdags[s])
    max_err = max(abs(x - y) for x, y in zip(a.bc, b.bc))
    passed = dist_mism == 0 and sigma_mism == 0 and dag_mism == 0 and max_err <= tol
    return OracleReport(max_err, dist_mism, sigma_mism, dag_mism, passed)
