"""Weighted digraphs with exact fixed-point weights and line-oriented file I/O.

Weights are stored as positive integers scaled by 10**6, so every distance
comparison downstream is an exact integer comparison.  Undirected inputs are
doubled into two directed edges of equal weight at parse time.
"""

from __future__ import annotations

WEIGHT_SCALE = 10**6
# Distances are sums of at most n-1 weights.  Loading and update validation
# enforce n * max_weight < DIST_LIMIT so no real distance ever collides with
# the infinity sentinel used by the shortest-path code.
DIST_LIMIT = 2**63 - 1


class GraphFormatError(ValueError):
    """Malformed graph or update-stream input."""


def parse_weight(text: str) -> int:
    """Parse a positive decimal with at most six fractional digits.

    Returns the weight scaled by 10**6.  Raises GraphFormatError for
    anything that is not a plain unsigned decimal literal.
    """
    s = text.strip()
    if "." in s:
        whole, _, frac = s.partition(".")
        if not whole or not frac or not whole.isdigit() or not frac.isdigit():
            raise GraphFormatError(f"malformed weight {text!r}")
        if len(frac) > 6:
            raise GraphFormatError(
                f"weight {text!r} has more than 6 fractional digits")
        return int(whole) * WEIGHT_SCALE + int(frac.ljust(6, "0"))
    if not s or not s.isdigit():
        raise GraphFormatError(f"malformed weight {text!r}")
    return int(s) * WEIGHT_SCALE


def format_weight(scaled: int) -> str:
    """Render a scaled weight back to its shortest decimal form."""
    whole, frac = divmod(scaled, WEIGHT_SCALE)
    if frac == 0:
        return str(whole)
    return f"{whole}.{frac:06d}".rstrip("0")


class Graph:
    """Immutable weighted digraph: at most one edge per ordered pair,
    no self-loops, all weights positive."""

    __slots__ = ("n", "undirected", "adj", "_weights")

    def __init__(self, n, edges, undirected=False):
        if n < 1:
            raise GraphFormatError("vertex count must be at least 1")
        adj = [[] for _ in range(n)]
        weights = {}
        max_w = 0
        for u, v, w in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if w <= 0:
                raise GraphFormatError(f"non-positive weight on edge ({u}, {v})")
            if (u, v) in weights:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            weights[(u, v)] = w
            adj[u].append((v, w))
            if w > max_w:
                max_w = w
        if n * max_w >= DIST_LIMIT:
            raise GraphFormatError("weights too large: distance sums could overflow")
        if undirected:
            for (u, v), w in weights.items():
                if weights.get((v, u)) != w:
                    raise GraphFormatError(
                        f"undirected graph missing equal-weight mirror of ({u}, {v})")
        for row in adj:
            row.sort()
        self.n = n
        self.undirected = undirected
        self.adj = adj
        self._weights = weights

    @classmethod
    def _raw(cls, n, adj, weights, undirected):
        g = object.__new__(cls)
        g.n = n
        g.undirected = undirected
        g.adj = adj
        g._weights = weights
        return g

    @property
    def m(self) -> int:
        return len(self._weights)

    def weight(self, u, v):
        """Weight of edge (u, v), or None when absent."""
        return self._weights.get((u, v))

    def edges(self):
        """All edges as (u, v, w), sorted by (u, v)."""
        return [(u, v, w) for (u, v), w in sorted(self._weights.items())]

    def reverse(self) -> "Graph":
        """Graph with every edge flipped, weights preserved."""
        adj = [[] for _ in range(self.n)]
        weights = {}
        for (u, v), w in self._weights.items():
            weights[(v, u)] = w
            adj[v].append((u, w))
        for row in adj:
            row.sort()
        return Graph._raw(self.n, adj, weights, self.undirected)

    def with_updates(self, changes) -> "Graph":
        """New graph with the (u, v, w) entries replaced or inserted."""
        weights = dict(self._weights)
        for u, v, w in changes:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"vertex id out of range in update ({u}, {v})")
            if u == v:
                raise ValueError("self-loops are not allowed")
            if w <= 0:
                raise ValueError("weights must stay positive")
            if self.n * w >= DIST_LIMIT:
                raise ValueError("updated weight too large: distance sums could overflow")
            weights[(u, v)] = w
        adj = [[] for _ in range(self.n)]
        for (u, v), w in weights.items():
            adj[u].append((v, w))
        for row in adj:
            row.sort()
        return Graph._raw(self.n, adj, weights, self.undirected)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.undirected == other.undirected
                and self._weights == other._weights)

    __hash__ = None  # mutable-style equality; graphs are not hashable

    def __repr__(self):
        kind = "undirected" if self.undirected else "directed"
        return f"Graph(n={self.n}, m={self.m}, {kind})"


def reverse(g: Graph) -> Graph:
    return g.reverse()


def _fail(lineno: int, msg: str):
    raise GraphFormatError(f"line {lineno}: {msg}")


def _parse_int(token: str, lineno: int, what: str) -> int:
    if not token.isdigit():
        _fail(lineno, f"malformed {what} {token!r}")
    return int(token)


def parse_graph(source) -> Graph:
    """Parse the line-oriented graph format.

    Lines: ``c`` comments, a single ``p bc <n> <m> <directed|undirected>``
    header (first non-comment line), then exactly m ``e <u> <v> <w>`` lines.
    Undirected edges are doubled.  Every error carries its line number.
    """
    if isinstance(source, bytes):
        text = source.decode("ascii")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("ascii")

    n = m = None
    undirected = False
    edge_lines = 0
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                _fail(lineno, "duplicate header")
            if len(parts) != 5 or parts[1] != "bc":
                _fail(lineno, "malformed header (expected 'p bc <n> <m> <directed|undirected>')")
            n = _parse_int(parts[2], lineno, "vertex count")
            m = _parse_int(parts[3], lineno, "edge count")
            if n < 1:
                _fail(lineno, "vertex count must be at least 1")
            if parts[4] == "undirected":
                undirected = True
            elif parts[4] != "directed":
                _fail(lineno, "directedness must be 'directed' or 'undirected'")
        elif parts[0] == "e":
            if n is None:
                _fail(lineno, "edge line before header")
            if len(parts) != 4:
                _fail(lineno, "malformed edge line (expected 'e <u> <v> <w>')")
            u = _parse_int(parts[1], lineno, "vertex id")
            v = _parse_int(parts[2], lineno, "vertex id")
            try:
                w = parse_weight(parts[3])
            except GraphFormatError as exc:
                _fail(lineno, str(exc))
            if u >= n or v >= n:
                _fail(lineno, f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                _fail(lineno, f"self-loop at vertex {u}")
            if w <= 0:
                _fail(lineno, f"non-positive weight on edge ({u}, {v})")
            if n * w >= DIST_LIMIT:
                _fail(lineno, "weight too large: distance sums could overflow")
            if (u, v) in seen or (undirected and (v, u) in seen):
                _fail(lineno, f"duplicate edge ({u}, {v})")
            edge_lines += 1
            if edge_lines > m:
                _fail(lineno, f"more than the declared {m} edge lines")
            seen.add((u, v))
            edges.append((u, v, w))
            if undirected:
                edges.append((v, u, w))
        else:
            _fail(lineno, f"unrecognized line type {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing header line 'p bc <n> <m> <directed|undirected>'")
    if edge_lines != m:
        raise GraphFormatError(f"expected {m} edge lines, found {edge_lines}")
    return Graph(n, edges, undirected=undirected)


def serialize_graph(g: Graph) -> str:
    """Canonical text form; parse(serialize(g)) reproduces g exactly."""
    lines = []
    if g.undirected:
        und = sorted((u, v) for (u, v) in g._weights if u < v)
        lines.append(f"p bc {g.n} {len(und)} undirected")
        for u, v in und:
            lines.append(f"e {u} {v} {format_weight(g._weights[(u, v)])}")
    else:
        lines.append(f"p bc {g.n} {g.m} directed")
        for u, v, w in g.edges():
            lines.append(f"e {u} {v} {format_weight(w)}")
    return "\n".join(lines) + "\n"
