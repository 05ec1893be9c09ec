"""Shared oracles, corpora, and generators for the test suite.

The naive_* helpers restate the definitions with plain set arithmetic
and no bitmask tricks, so the library is always measured against an
independent implementation.
"""

import itertools

import pytest

from edgeid.graph_core import Graph, GraphBuilder, isomorphic, pendant_pairs
from edgeid.reduction import SatFormula, attach_p_gadget


def naive_edge_neighborhoods(g):
    """Closed edge neighborhoods straight from the definition."""
    out = []
    for i, (u, v) in enumerate(g.edges):
        nb = {i}
        for j, (x, y) in enumerate(g.edges):
            if j != i and {u, v} & {x, y}:
                nb.add(j)
        out.append(nb)
    return out


def naive_is_code(g, chosen):
    chosen = set(chosen)
    traces = [frozenset(nb & chosen) for nb in naive_edge_neighborhoods(g)]
    if any(not t for t in traces):
        return False
    return len(set(traces)) == g.m


def naive_min_edge_code(g):
    """Lexicographically least minimum code by ascending enumeration."""
    for k in range(g.m + 1):
        for combo in itertools.combinations(range(g.m), k):
            if naive_is_code(g, combo):
                return combo
    return None


def _invariant_key(g):
    degs = tuple(sorted(g.degree(v) for v in range(g.n)))
    nbr = tuple(
        sorted(
            tuple(sorted(g.degree(u) for u in g.neighbors(v))) for v in range(g.n)
        )
    )
    return (g.n, g.m, degs, nbr)


def _grow(graphs):
    """Connected graphs with one more edge, deduped up to isomorphism."""
    buckets = {}
    out = []
    for g in graphs:
        present = set(g.edges)
        candidates = []
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if (u, v) not in present:
                    candidates.append(Graph(g.n, g.edges + ((u, v),)))
            candidates.append(Graph(g.n + 1, g.edges + ((u, g.n),)))
        for h in candidates:
            bucket = buckets.setdefault(_invariant_key(h), [])
            if not any(isomorphic(h, x) for x in bucket):
                bucket.append(h)
                out.append(h)
    return out


_CONNECTED = {1: [Graph(2, [(0, 1)])]}


def connected_graphs(max_edges):
    """All connected graphs with 1..max_edges edges, up to isomorphism."""
    while max(_CONNECTED) < max_edges:
        top = max(_CONNECTED)
        _CONNECTED[top + 1] = _grow(_CONNECTED[top])
    return [g for m in range(1, max_edges + 1) for g in _CONNECTED[m]]


def disjoint_union(parts):
    shift = 0
    edges = []
    for p in parts:
        edges.extend((u + shift, v + shift) for u, v in p.edges)
        shift += p.n
    return Graph(shift, edges)


def pendant_free_unions(max_edges=8):
    """All pendant-free graphs with 1..max_edges edges and no isolated
    vertices, up to isomorphism, as multisets of connected components."""
    comps = [g for g in connected_graphs(max_edges) if not pendant_pairs(g)]
    out = []

    def rec(start, budget, parts):
        for i in range(start, len(comps)):
            g = comps[i]
            if g.m > budget:
                continue
            chosen = parts + [g]
            out.append(disjoint_union(chosen))
            rec(i, budget - g.m, chosen)

    rec(0, max_edges, [])
    return out


@pytest.fixture(scope="session")
def small_connected():
    return connected_graphs(8)


@pytest.fixture(scope="session")
def pendant_free_connected(small_connected):
    return [g for g in small_connected if not pendant_pairs(g)]


@pytest.fixture(scope="session")
def pendant_free_all():
    return pendant_free_unions(8)


def random_connected_pendant_free(rng, max_n=12):
    """Random connected graph with no pendant pair, at most max_n vertices."""
    while True:
        n = rng.randint(4, max_n)
        edges = set()
        for v in range(1, n):
            edges.add((rng.randrange(v), v))
        extra = rng.randint(n // 2, n)
        for _ in range(extra):
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u != v:
                edges.add((min(u, v), max(u, v)))
        g = Graph(n, sorted(edges))
        # leaves breed pendant pairs; give every degree-1 vertex a second edge
        for v in range(n):
            if g.degree(v) == 1:
                choices = [u for u in range(n) if u != v and not g.has_edge(u, v)]
                if not choices:
                    break
                u = rng.choice(choices)
                edges.add((min(u, v), max(u, v)))
                g = Graph(n, sorted(edges))
        if not pendant_pairs(g):
            return g


def random_formula(rng, num_vars):
    """Random valid formula: clause sizes 2 or 3, no variable repeated in
    a clause, every variable twice positive and once negative."""
    lits = []
    for v in range(num_vars):
        lits.extend([(v, True), (v, True), (v, False)])
    total = len(lits)
    sizes_choices = [a for a in range(total // 3 + 1) if (total - 3 * a) % 2 == 0]
    while True:
        threes = rng.choice(sizes_choices)
        twos = (total - 3 * threes) // 2
        rng.shuffle(lits)
        clauses = []
        pos = 0
        ok = True
        for size in [3] * threes + [2] * twos:
            chunk = lits[pos : pos + size]
            pos += size
            if len({v for v, _ in chunk}) != size:
                ok = False
                break
            clauses.append(tuple(chunk))
        if ok and clauses:
            return SatFormula(num_vars, tuple(clauses))


def satisfying_assignment(f):
    """Brute-force satisfying assignment, or None."""
    for bits in range(1 << f.num_vars):
        asg = tuple(bool(bits >> v & 1) for v in range(f.num_vars))
        if all(any(asg[v] == s for v, s in clause) for clause in f.clauses):
            return asg
    return None


def build_forcing_tree_host():
    """A 4-cycle with the five-edge forcing tree hung off vertex 0."""
    b = GraphBuilder()
    b.add_vertices(4)
    for i in range(4):
        b.add_edge(i, (i + 1) % 4)
    named = attach_p_gadget(b, 0)
    return b.to_graph(), named


def build_variable_zone(mu):
    """Selection cycle of length 4*mu with platform and occurrence pendants.

    Platform edges hang at odd cycle vertices, one occurrence edge at
    each even vertex.  Returns the graph plus index groups.
    """
    b = GraphBuilder()
    size = 4 * mu
    cyc = b.add_vertices(size)
    cycle_edges = []
    for i in range(1, 2 * mu + 1):
        cycle_edges.append(b.add_edge(cyc[2 * i - 2], cyc[2 * i - 1]))  # d_i
        cycle_edges.append(b.add_edge(cyc[2 * i - 1], cyc[2 * i % size]))  # e_i
    platforms = [b.add_edge(cyc[2 * i + 1], b.add_vertex()) for i in range(2 * mu)]
    t_edges = [b.add_edge(cyc[2 * i], b.add_vertex()) for i in range(2 * mu)]
    return b.to_graph(), cycle_edges, platforms, t_edges


def zone_valid(g, cycle_edges, chosen_mask):
    """Domination and separation restricted to the cycle edges.

    The pendant edges are covered by their own gadgets in a full
    instance, so only the cycle edges must get nonempty distinct traces.
    """
    masks = g.all_edge_masks()
    traces = [masks[e] & chosen_mask for e in cycle_edges]
    return 0 not in traces and len(set(traces)) == len(traces)
