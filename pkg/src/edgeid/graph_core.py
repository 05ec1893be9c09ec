"""Simple graphs, multigraphs and indexed edge sets.

Edges are unordered vertex pairs stored as (u, v) with u < v.  The position of
an edge in the construction order is its index, and every other module refers
to edges by these indices: codes are bitsets over them, file formats serialize
them, and the line graph maps edge index i to vertex i.
"""

import math
from itertools import combinations


class FormatError(ValueError):
    """Raised when an edge-list or code file cannot be parsed."""


class Graph:
    """Immutable simple graph with stably indexed edges.

    Vertices are 0..n-1.  Edges keep construction order; each is normalized
    to (u, v) with u < v.  Duplicate edges and self-loops are rejected.
    """

    def __init__(self, n, edges):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        norm = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        self.edges = tuple(norm)
        self._index = {e: i for i, e in enumerate(self.edges)}
        adj = [[] for _ in range(n)]
        inc = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append(v)
            adj[v].append(u)
            inc[u].append(i)
            inc[v].append(i)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._inc = tuple(tuple(a) for a in inc)
        self._edge_masks = None
        self.fingerprint = (n, len(self.edges), hash(self.edges))

    def _ensure_masks(self):
        # Quadratic-size data, built on first use so that merely holding a
        # large graph stays cheap.
        if self._edge_masks is None:
            vert_mask = [0] * self.n
            for v in range(self.n):
                mv = 0
                for i in self._inc[v]:
                    mv |= 1 << i
                vert_mask[v] = mv
            self._edge_masks = tuple(
                vert_mask[u] | vert_mask[v] for u, v in self.edges
            )

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return len(self._adj[v])

    def neighbors(self, v):
        return self._adj[v]

    def incident_edges(self, v):
        """Indices of edges incident to v, in edge-index order."""
        return self._inc[v]

    def edge_index(self, u, v):
        e = (u, v) if u < v else (v, u)
        return self._index[e]

    def has_edge(self, u, v):
        e = (u, v) if u < v else (v, u)
        return e in self._index

    def edge_mask(self, e):
        """Bitmask of the closed neighborhood of edge e (includes e)."""
        self._ensure_masks()
        return self._edge_masks[e]

    def all_edge_masks(self):
        self._ensure_masks()
        return self._edge_masks

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Multigraph:
    """Loopless multigraph: parallel edges allowed, used as subdivision input."""

    def __init__(self, n, edges):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        self.edges = tuple(norm)
        deg = [0] * n
        inc = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            deg[u] += 1
            deg[v] += 1
            inc[u].append(i)
            inc[v].append(i)
        self._deg = tuple(deg)
        self._inc = tuple(tuple(a) for a in inc)

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return self._deg[v]

    def incident_edges(self, v):
        return self._inc[v]

    def is_regular(self, k):
        return all(d == k for d in self._deg)

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={self.m})"


class GraphBuilder:
    """Mutable helper for assembling a Graph vertex by vertex."""

    def __init__(self):
        self.n = 0
        self.edges = []
        self._seen = set()

    def add_vertex(self):
        v = self.n
        self.n += 1
        return v

    def add_vertices(self, count):
        ids = list(range(self.n, self.n + count))
        self.n += count
        return ids

    def add_edge(self, u, v):
        """Add edge u-v, returning its index in the final graph."""
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u},{v}) references unknown vertex")
        e = (u, v) if u < v else (v, u)
        if e in self._seen:
            raise ValueError(f"duplicate edge {e}")
        self._seen.add(e)
        self.edges.append(e)
        return len(self.edges) - 1

    def to_graph(self):
        return Graph(self.n, self.edges)


class EdgeSet:
    """Subset of a graph's edges as a bitset, tied to the owner's fingerprint.

    Operations between edge sets require matching fingerprints, so sets from
    different graphs (or differently indexed copies) cannot be mixed silently.
    """

    __slots__ = ("fingerprint", "mask")

    def __init__(self, fingerprint, mask):
        self.fingerprint = fingerprint
        self.mask = mask

    @classmethod
    def from_indices(cls, g, indices):
        mask = 0
        m = g.m
        for i in indices:
            if not 0 <= i < m:
                raise ValueError(f"edge index {i} out of range for m={m}")
            mask |= 1 << i
        return cls(g.fingerprint, mask)

    @classmethod
    def full(cls, g):
        return cls(g.fingerprint, (1 << g.m) - 1)

    def check_owner(self, g):
        if self.fingerprint != g.fingerprint:
            raise ValueError("edge set does not belong to this graph")

    def _check_mate(self, other):
        if self.fingerprint != other.fingerprint:
            raise ValueError("edge sets belong to different graphs")

    def indices(self):
        mask = self.mask
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return out

    def __iter__(self):
        return iter(self.indices())

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, i):
        return bool(self.mask >> i & 1)

    def __eq__(self, other):
        return (isinstance(other, EdgeSet)
                and self.fingerprint == other.fingerprint
                and self.mask == other.mask)

    def __hash__(self):
        return hash((self.fingerprint, self.mask))

    def union(self, other):
        self._check_mate(other)
        return EdgeSet(self.fingerprint, self.mask | other.mask)

    def intersection(self, other):
        self._check_mate(other)
        return EdgeSet(self.fingerprint, self.mask & other.mask)

    def difference(self, other):
        self._check_mate(other)
        return EdgeSet(self.fingerprint, self.mask & ~other.mask)

    def symmetric_difference(self, other):
        self._check_mate(other)
        return EdgeSet(self.fingerprint, self.mask ^ other.mask)

    def issubset(self, other):
        self._check_mate(other)
        return self.mask & ~other.mask == 0

    def add(self, i):
        return EdgeSet(self.fingerprint, self.mask | 1 << i)

    def remove(self, i):
        return EdgeSet(self.fingerprint, self.mask & ~(1 << i))

    def __repr__(self):
        return f"EdgeSet({self.indices()})"


def closed_edge_neighborhood(g, e):
    """All edges sharing an endpoint with edge e, plus e itself."""
    if not 0 <= e < g.m:
        raise ValueError(f"edge index {e} out of range")
    return EdgeSet(g.fingerprint, g.edge_mask(e))


def line_graph(g):
    """Line graph of g together with the edge-index -> vertex-index map.

    Vertex i of the result is edge i of g; the returned map is that identity,
    made explicit so callers can translate edge sets to vertex sets.
    """
    lg_edges = []
    seen = set()
    for v in range(g.n):
        inc = g.incident_edges(v)
        for a, b in combinations(sorted(inc), 2):
            if (a, b) not in seen:
                seen.add((a, b))
                lg_edges.append((a, b))
    return Graph(g.m, lg_edges), {i: i for i in range(g.m)}


def twin_pairs(g):
    """Pairs of vertices with equal closed neighborhoods, sorted."""
    closed = []
    for v in range(g.n):
        mask = 1 << v
        for u in g.neighbors(v):
            mask |= 1 << u
        closed.append(mask)
    groups = {}
    for v in range(g.n):
        groups.setdefault(closed[v], []).append(v)
    pairs = []
    for members in groups.values():
        for a, b in combinations(members, 2):
            pairs.append((a, b))
    return sorted(pairs)


def pendant_pairs(g):
    """Adjacent edge pairs that no edge set can separate.

    Two adjacent edges form such a pair when their non-shared endpoints
    either both have degree 1, or both have degree 2 and are adjacent to
    each other.  Returns sorted pairs of edge indices.
    """
    pairs = set()
    for w in range(g.n):
        inc = g.incident_edges(w)
        for ei, ej in combinations(inc, 2):
            u1, v1 = g.edges[ei]
            x = u1 if v1 == w else v1
            u2, v2 = g.edges[ej]
            y = u2 if v2 == w else v2
            dx, dy = g.degree(x), g.degree(y)
            if dx == 1 and dy == 1:
                pairs.add((min(ei, ej), max(ei, ej)))
            elif dx == 2 and dy == 2 and g.has_edge(x, y):
                pairs.add((min(ei, ej), max(ei, ej)))
    return sorted(pairs)


def girth(g):
    """Length of a shortest cycle, or math.inf for acyclic graphs."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent_edge = [-1] * g.n
        dist[s] = 0
        queue = [s]
        qi = 0
        while qi < len(queue):
            a = queue[qi]
            qi += 1
            # No cycle first seen from a can beat 2*dist[a].
            if 2 * dist[a] >= best:
                continue
            for e in g.incident_edges(a):
                u, v = g.edges[e]
                b = u if v == a else v
                if e == parent_edge[a]:
                    continue
                if dist[b] == -1:
                    dist[b] = dist[a] + 1
                    parent_edge[b] = e
                    queue.append(b)
                else:
                    cyc = dist[a] + dist[b] + 1
                    if cyc < best:
                        best = cyc
    return best


def connected_components(g):
    """Vertex lists of connected components, each sorted, ordered by minimum."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            a = stack.pop()
            for b in g.neighbors(a):
                if not seen[b]:
                    seen[b] = True
                    comp.append(b)
                    stack.append(b)
        comps.append(sorted(comp))
    return comps


def is_bipartite(g):
    """(True, coloring) with colors 0/1, or (False, odd_cycle_vertices)."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        qi = 0
        while qi < len(queue):
            a = queue[qi]
            qi += 1
            for b in g.neighbors(a):
                if color[b] == -1:
                    color[b] = 1 - color[a]
                    parent[b] = a
                    queue.append(b)
                elif color[b] == color[a]:
                    # Walk both endpoints up to the BFS root; trimming the
                    # shared tail leaves an odd cycle.
                    pa = []
                    x = a
                    while x != -1:
                        pa.append(x)
                        x = parent[x]
                    pb = []
                    x = b
                    while x != -1:
                        pb.append(x)
                        x = parent[x]
                    sa, sb = set(pa), set(pb)
                    meet = next(x for x in pa if x in sb)
                    cyc = pa[:pa.index(meet) + 1] + pb[:pb.index(meet)][::-1]
                    return False, cyc
    return True, color


def is_k_degenerate(g, k):
    """Whether g can be emptied by removing vertices of degree <= k.

    Returns (True, elimination_order) or (False, None).  The order removes
    the lowest-index qualifying vertex first, so it is deterministic.
    """
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    order = []
    for _ in range(g.n):
        pick = -1
        for v in range(g.n):
            if not removed[v] and deg[v] <= k:
                pick = v
                break
        if pick == -1:
            return False, None
        removed[pick] = True
        order.append(pick)
        for u in g.neighbors(pick):
            if not removed[u]:
                deg[u] -= 1
    return True, order


def subdivide_once(mg):
    """Subdivide every edge of a multigraph exactly once.

    Original vertices keep their labels; the subdivision vertex of edge i
    is mg.n + i.  The result is always a simple bipartite graph.
    """
    edges = []
    for i, (u, v) in enumerate(mg.edges):
        s = mg.n + i
        edges.append((u, s))
        edges.append((v, s))
    return Graph(mg.n + mg.m, edges)


def bipartite_perfect_matching(mg, left):
    """Perfect matching of a bipartite multigraph, or None when absent.

    ``left`` is one side of the bipartition; every edge must cross it.
    Returns a sorted list of edge indices (augmenting-path search, processing
    left vertices in increasing order, so the result is deterministic).
    """
    left = frozenset(left)
    for u, v in mg.edges:
        if (u in left) == (v in left):
            raise ValueError(f"edge ({u},{v}) does not cross the bipartition")
    right = [v for v in range(mg.n) if v not in left]
    if len(left) != len(right):
        return None
    match_edge_of_right = {}
    matched_left = {}

    def augment(u, visited):
        for e in mg.incident_edges(u):
            a, b = mg.edges[e]
            w = b if a == u else a
            if w in visited:
                continue
            visited.add(w)
            if w not in match_edge_of_right:
                match_edge_of_right[w] = e
                matched_left[u] = e
                return True
            other_e = match_edge_of_right[w]
            oa, ob = mg.edges[other_e]
            other_u = oa if oa in left else ob
            if augment(other_u, visited):
                match_edge_of_right[w] = e
                matched_left[u] = e
                return True
        return False

    for u in sorted(left):
        if not augment(u, set()):
            return None
    return sorted(matched_left.values())


def induced_by_edges(g, s):
    """Subgraph spanned by the edges of s, with the vertex back-map.

    Returns (subgraph, old_labels) where old_labels[new_vertex] gives the
    vertex label in g.  Only endpoints of edges in s appear.
    """
    s.check_owner(g)
    used = sorted({v for e in s for v in g.edges[e]})
    back = {old: new for new, old in enumerate(used)}
    edges = [(back[g.edges[e][0]], back[g.edges[e][1]]) for e in s]
    return Graph(len(used), edges), used


def isomorphic(g1, g2):
    """Brute-force isomorphism test for graphs with at most 10 vertices."""
    if g1.n > 10 or g2.n > 10:
        raise ValueError("isomorphism test limited to 10 vertices")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degree(v) for v in range(g1.n)) != \
       sorted(g2.degree(v) for v in range(g2.n)):
        return False
    adj2 = [set(g2.neighbors(v)) for v in range(g2.n)]
    mapping = [-1] * g1.n
    used = [False] * g2.n

    def extend(v):
        if v == g1.n:
            return True
        for w in range(g2.n):
            if used[w] or g1.degree(v) != g2.degree(w):
                continue
            ok = True
            for u in g1.neighbors(v):
                if u < v and mapping[u] not in adj2[w]:
                    ok = False
                    break
            if ok:
                for u in range(v):
                    if u not in g1.neighbors(v) and mapping[u] in adj2[w]:
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return extend(0)


def read_edge_list(text):
    """Parse the edge-list format.

    Lines starting with ``#`` are comments.  The first data line is
    ``n m``, followed by m lines ``u v``.  Trailing ``c <index>`` lines
    (an embedded code) and a ``k <value>`` trailer are collected and
    returned alongside: (graph, code_indices_or_None, k_or_None).
    """
    header = None
    edges = []
    code = []
    kval = None
    saw_code = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: expected 'n m' header")
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer header") from None
            continue
        if parts[0] == "c":
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: expected 'c <edge index>'")
            try:
                code.append(int(parts[1]))
            except ValueError:
                raise FormatError(f"line {lineno}: bad code index") from None
            saw_code = True
            continue
        if parts[0] == "k":
            if len(parts) != 2 or kval is not None:
                raise FormatError(f"line {lineno}: bad 'k' trailer")
            try:
                kval = int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad 'k' trailer") from None
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer endpoints") from None
        if len(edges) >= header[1]:
            raise FormatError(f"line {lineno}: more than {header[1]} edges")
        edges.append((u, v))
    if header is None:
        raise FormatError("missing 'n m' header")
    if len(edges) != header[1]:
        raise FormatError(f"expected {header[1]} edges, found {len(edges)}")
    try:
        g = Graph(header[0], edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if saw_code:
        for i in code:
            if not 0 <= i < g.m:
                raise FormatError(f"code index {i} out of range")
    return g, (code if saw_code else None), kval


def write_edge_list(g, code=None, k=None, comments=()):
    """Render a graph (optionally with an embedded code and k trailer)."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    for u, v in g.edges:
        lines.append(f"{u} {v}")
    if code is not None:
        for i in sorted(code):
            lines.append(f"c {i}")
    if k is not None:
        lines.append(f"k {k}")
    return "\n".join(lines) + "\n"


def read_code_file(text, m):
    """Parse a code file: one ``c <edge index>`` line per code edge."""
    indices = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "c" or len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'c <edge index>'")
        try:
            i = int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: bad code index") from None
        if not 0 <= i < m:
            raise FormatError(f"line {lineno}: code index {i} out of range")
        indices.append(i)
    return indices
