"""Incremental edge update: per-pair reclassification, DAG repair, and BC
recomputation.  Updates are strict weight decreases or insertions (treated
as decreases from infinity); increases and deletions are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from .apsp import (
    INF,
    SIGMA_EXACT_LIMIT,
    ApspState,
    UpdateReport,
    WorkCounters,
    _bc_pass,
)
from .graph import DIST_LIMIT, Graph


class UpdateError(ValueError):
    """Invalid incremental update."""


class PairFlag(IntEnum):
    """How one (source, target) pair reacted to an update."""

    UNCHANGED = 0      # same distance, same number of shortest paths
    NUM_CHANGED = 1    # same distance, strictly more shortest paths
    WT_CHANGED = 2     # strictly smaller distance


@dataclass(frozen=True)
class EdgeUpdate:
    """Set edge (u, v) to ``weight`` (scaled); must strictly decrease an
    existing weight, or insert a missing edge."""

    u: int
    v: int
    weight: int


@dataclass
class FlagMatrix:
    """Post-update per-pair data: new distances, new path counts, and the
    flag classifying each pair (rows indexed by source)."""

    dist: list
    sigma: list
    flags: list


def _validate_edge_update(g: Graph, upd: EdgeUpdate):
    n = g.n
    if not (0 <= upd.u < n and 0 <= upd.v < n):
        raise UpdateError(f"edge update endpoint out of range: ({upd.u}, {upd.v})")
    if upd.u == upd.v:
        raise UpdateError("edge updates cannot target a self-loop")
    if upd.weight <= 0:
        raise UpdateError("updated weight must be positive")
    if n * upd.weight >= DIST_LIMIT:
        raise UpdateError("updated weight too large: distance sums could overflow")
    old = g.weight(upd.u, upd.v)
    if old is not None and upd.weight >= old:
        raise UpdateError(
            f"update must strictly decrease the weight of ({upd.u}, {upd.v})")


def classify_pair(s: int, t: int, state: ApspState, upd: EdgeUpdate):
    """New (distance, path count, flag) for one pair after the edge update.

    The detour value d(s,u) + w' + d(v,t) decides the case; pairs the
    updated edge cannot serve (unreachable legs, targets at or before u,
    sources at or after v) fall out as UNCHANGED automatically.
    """
    d = state.dist[s][t]
    sig = state.sigma[s][t]
    dsu = state.dist[s][upd.u]
    dvt = state.dist[upd.v][t]
    if dsu >= INF or dvt >= INF:
        return d, sig, PairFlag.UNCHANGED
    detour = dsu + upd.weight + dvt
    if d < detour:
        return d, sig, PairFlag.UNCHANGED
    add = state.sigma[s][upd.u] * state.sigma[upd.v][t]
    if d == detour:
        return d, sig + add, PairFlag.NUM_CHANGED
    return detour, add, PairFlag.WT_CHANGED


def classify_pairs(state: ApspState, upd: EdgeUpdate, counters: WorkCounters):
    """Classify every pair; returns the flag matrix plus an inexact marker
    for path counts that crossed 2**53."""
    n = state.graph.n
    dist = state.dist
    sigma = state.sigma
    u, v, w2 = upd.u, upd.v, upd.weight
    dv_row = dist[v]
    sv_row = sigma[v]
    new_dist = [row[:] for row in dist]
    new_sigma = [row[:] for row in sigma]
    flags = [bytearray(n) for _ in range(n)]
    inexact = False
    for s in range(n):
        counters.pairs_touched += n
        dsu = dist[s][u]
        if dsu >= INF:
            continue
        su = sigma[s][u]
        base = dsu + w2
        drow = dist[s]
        srow = sigma[s]
        ndrow = new_dist[s]
        nsrow = new_sigma[s]
        frow = flags[s]
        for t in range(n):
            dvt = dv_row[t]
            if dvt >= INF:
                continue
            detour = base + dvt
            dst = drow[t]
            if dst < detour:
                continue
            add = su * sv_row[t]
            if dst == detour:
                ns = srow[t] + add
                if ns > SIGMA_EXACT_LIMIT:
                    inexact = True
                nsrow[t] = ns
                frow[t] = 1
            else:
                if add > SIGMA_EXACT_LIMIT:
                    inexact = True
                ndrow[t] = detour
                nsrow[t] = add
                frow[t] = 2
    return FlagMatrix(new_dist, new_sigma, flags), inexact


def update_dag(s: int, upd: EdgeUpdate, flags: FlagMatrix, dag_s: set, dag_v: set,
               counters: WorkCounters | None = None) -> set:
    """Rebuild the shortest-path DAG rooted at ``s`` after the edge update.

    Edges of the old DAG survive when their target pair kept its distance;
    edges of the DAG rooted at v join when the target pair gained paths or
    got closer; the updated edge itself joins when (s, v) changed.
    """
    u, v = upd.u, upd.v
    frow = flags.flags[s]
    h = set()
    for edge in dag_s:
        if edge[0] == u and edge[1] == v:
            continue
        if frow[edge[1]] != 2:
            h.add(edge)
    for edge in dag_v:
        if frow[edge[1]]:
            h.add(edge)
    if frow[v]:
        h.add((u, v))
    if counters is not None:
        counters.edges_examined += len(dag_s) + len(dag_v) + 1
        counters.dag_edges_emitted += len(h)
    return h


def incremental_bc_edge(state: ApspState, upd: EdgeUpdate) -> ApspState:
    """Apply one incremental edge update and return the post-update state.

    In edge-fast mode the update is processed directly: classify all pairs,
    repair every forward DAG (double-buffered reads of the pre-update
    DAGs), then re-accumulate BC.  Full-mode states route through the
    vertex machinery so reverse DAGs stay current.
    """
    g = state.graph
    _validate_edge_update(g, upd)
    if state.rdags is not None:
        from .vertex_update import VertexUpdate, incremental_bc_vertex
        return incremental_bc_vertex(
            state, VertexUpdate(upd.v, ((upd.u, upd.weight),), ()))

    n = g.n
    counters = state.counters.copy()
    e0 = counters.edges_examined
    p0 = counters.pairs_touched
    report = UpdateReport(
        dag_sum_pre=sum(len(d) for d in state.dags),
        dag_v_pre=len(state.dags[upd.v]),
    )
    fm, inexact = classify_pairs(state, upd, counters)
    dag_v = state.dags[upd.v]
    new_dags = [
        update_dag(s, upd, fm, state.dags[s], dag_v, counters) for s in range(n)
    ]
    bc = [0.0] * n
    for s in range(n):
        _bc_pass(s, new_dags[s], fm.sigma[s], bc, n)
    report.dag_sum_post = sum(len(d) for d in new_dags)
    report.dag_v_post = len(new_dags[upd.v])
    report.dag_sum_mid = report.dag_sum_post
    report.dag_v_mid = report.dag_v_post
    report.edges_examined = counters.edges_examined - e0
    report.pairs_touched = counters.pairs_touched - p0
    new_graph = g.with_updates([(upd.u, upd.v, upd.weight)])
    return ApspState(new_graph, fm.dist, fm.sigma, new_dags, None, bc,
                     counters, state.inexact or inexact, report)


def incremental_bc_edge_undirected(state: ApspState, upd: EdgeUpdate) -> ApspState:
    """Undirected edge update: apply the update to both directed twins of
    the doubled edge, one after the other."""
    if not state.graph.undirected:
        raise UpdateError("state was not built from an undirected graph")
    mid = incremental_bc_edge(state, upd)
    out = incremental_bc_edge(mid, EdgeUpdate(upd.v, upd.u, upd.weight))
    out.report = mid.report.merged(out.report)
    return out
