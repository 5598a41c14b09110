"""Shared builders: named small graphs, seeded random corpora, and random
update generators used across the suite."""

from dynbc import (
    INF,
    EdgeUpdate,
    Graph,
    VertexUpdate,
    WEIGHT_SCALE,
    gen_parsed,
    parse_weight,
)

W = WEIGHT_SCALE


def wt(x):
    return parse_weight(str(x))


def build(n, edges, undirected=False):
    return Graph(n, [(u, v, wt(w)) for u, v, w in edges], undirected=undirected)


def path3():
    return build(3, [(0, 1, 1), (1, 2, 1)])


def diamond():
    return build(4, [(0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)])


def g1():
    return build(4, [(0, 1, 1), (1, 3, 5), (0, 2, 2), (2, 3, 2), (0, 3, 4)])


def k4():
    return build(4, [(u, v, 1) for u in range(4) for v in range(4) if u != v])


def gnp(n, p, wmax, seed, undirected=False):
    return gen_parsed("gnp", n, p=p, wmax=wmax, seed=seed, undirected=undirected)


def pairwise_estar(g, dist):
    """Edges on at least one shortest path, from a distance matrix alone."""
    estar = set()
    for u, v, w in g.edges():
        for s in range(g.n):
            du = dist[s][u]
            if du < INF and du + w == dist[s][v]:
                estar.add((u, v))
                break
    return estar


def random_edge_update(g, rng, insert_prob=0.3):
    """A strict decrease of an existing edge, or an insertion."""
    decr = [(u, v, w) for u, v, w in g.edges() if w > 1]
    if decr and rng.random() > insert_prob:
        u, v, w = decr[rng.randrange(len(decr))]
        return EdgeUpdate(u, v, rng.randint(1, w - 1))
    cap = max((w for _, _, w in g.edges()), default=W)
    for _ in range(400):
        u, v = rng.randrange(g.n), rng.randrange(g.n)
        if u != v and g.weight(u, v) is None:
            return EdgeUpdate(u, v, rng.randint(1, cap))
    if decr:
        u, v, w = decr[rng.randrange(len(decr))]
        return EdgeUpdate(u, v, rng.randint(1, w - 1))
    return None


def random_undirected_edge_update(g, rng, insert_prob=0.3):
    decr = [(u, v, w) for u, v, w in g.edges() if u < v and w > 1]
    if decr and rng.random() > insert_prob:
        u, v, w = decr[rng.randrange(len(decr))]
        return EdgeUpdate(u, v, rng.randint(1, w - 1))
    cap = max((w for _, _, w in g.edges()), default=W)
    for _ in range(400):
        u, v = rng.randrange(g.n), rng.randrange(g.n)
        if u != v and g.weight(u, v) is None:
            return EdgeUpdate(u, v, rng.randint(1, cap))
    if decr:
        u, v, w = decr[rng.randrange(len(decr))]
        return EdgeUpdate(u, v, rng.randint(1, w - 1))
    return None


def _new_weight(old, rng, cap):
    if old is not None:
        return rng.randint(1, old - 1)
    return rng.randint(1, cap)


def random_mirrored_vertex_update(g, rng, kmax=3):
    """Vertex update for a doubled undirected graph: every touched edge is
    updated in both directions."""
    n = g.n
    cap = max((w for _, _, w in g.edges()), default=W)
    for _ in range(200):
        v = rng.randrange(n)
        cands = [x for x in range(n)
                 if x != v and (g.weight(x, v) is None or g.weight(x, v) > 1)]
        k = min(rng.randint(1, kmax), len(cands))
        if k == 0:
            continue
        entries = tuple((x, _new_weight(g.weight(x, v), rng, cap))
                        for x in rng.sample(cands, k))
        return VertexUpdate(v, entries, entries)
    return None


def random_vertex_update(g, rng, kmax=3, allow_empty_side=True):
    """Random batch of strict decreases / insertions around one vertex."""
    n = g.n
    cap = max((w for _, _, w in g.edges()), default=W)
    for _ in range(200):
        v = rng.randrange(n)
        ins = [u for u in range(n)
               if u != v and (g.weight(u, v) is None or g.weight(u, v) > 1)]
        outs = [x for x in range(n)
                if x != v and (g.weight(v, x) is None or g.weight(v, x) > 1)]
        ki = min(rng.randint(0, kmax), len(ins))
        ko = min(rng.randint(0, kmax), len(outs))
        if not allow_empty_side:
            ki = max(ki, 1) if ins else ki
            ko = max(ko, 1) if outs else ko
        if ki + ko == 0:
            continue
        incoming = tuple((u, _new_weight(g.weight(u, v), rng, cap))
                         for u in rng.sample(ins, ki))
        outgoing = tuple((x, _new_weight(g.weight(v, x), rng, cap))
                         for x in rng.sample(outs, ko))
        return VertexUpdate(v, incoming, outgoing)
    return None
