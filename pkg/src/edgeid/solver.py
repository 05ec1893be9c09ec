"""Exact and approximate solvers for edge-identifying codes.

The exact solver turns a code search into an exact-size hitting-set
problem.  A set of edges is an edge-identifying code iff it intersects
the closed neighborhood of every edge (domination) and the symmetric
difference of every pair of closed neighborhoods (separation).  Pairs
with disjoint neighborhoods are separated by domination alone, so only
intersecting pairs contribute constraints.

Search runs at a fixed size k, starting from an analytic lower bound and
growing k until a hit.  The first success is therefore an optimum, and
within each size the kernel returns the lexicographically least code.
A node budget caps the total work; runs that exhaust it fall back to a
verified hint when one was supplied.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ._search import search_exact_size
from .bounds import log_lower, solver_lower_bound
from .graph_core import EdgeSet, pendant_pairs
from .identify import verify_edge_code, verify_vertex_code, vertex_closed_masks

DEFAULT_BUDGET = 10**8

STATUS_OPTIMAL = "Optimal"
STATUS_FEASIBLE = "Feasible"
STATUS_INFEASIBLE = "Infeasible"
STATUS_BUDGET = "BudgetExhausted"


@dataclass(frozen=True)
class SolveOptions:
    """Knobs for the exact solvers.

    ``upper_hint`` is a known code (edge indices for ``min_edge_code``,
    vertex indices for ``min_vertex_code``).  It caps the search: sizes
    below it are refuted one by one, and if all are refuted the hint is
    returned as optimal.  ``prune_with_bounds`` starts the size sweep at
    the best analytic lower bound instead of 1.  ``parallel`` splits each
    size over two-level prefixes and searches them in a thread pool.
    """

    budget: int = DEFAULT_BUDGET
    upper_hint: object = None
    prune_with_bounds: bool = True
    parallel: bool = False


@dataclass(frozen=True)
class SolveResult:
    status: str
    code: object = None
    size: object = None
    lower_bound_used: object = None
    nodes_used: int = 0


def _constraints_from_masks(masks):
    cons = set(masks)
    for i, mi in enumerate(masks):
        for j in range(i + 1, len(masks)):
            mj = masks[j]
            if mi & mj:
                d = mi ^ mj
                if d == 0:
                    raise ValueError("universe contains twins")
                cons.add(d)
    return sorted(cons)


def _is_code_mask(masks, code_mask):
    seen = set()
    for mk in masks:
        t = mk & code_mask
        if t == 0 or t in seen:
            return False
        seen.add(t)
    return True


def _branches(universe):
    return [(i, j) for i in range(universe - 1) for j in range(i + 1, universe)]


def _search_k_parallel(universe, constraints, k, budget):
    live = []
    for i, j in _branches(universe):
        prefix = (1 << i) | (1 << j)
        shift = j + 1
        sub = []
        dead = False
        for c in constraints:
            if c & prefix:
                continue
            hi = c >> shift
            if hi == 0:
                dead = True
                break
            sub.append(hi)
        if not dead:
            live.append((prefix, shift, sub))
    if not live:
        return False, 0, 0, False
    per_budget = max(1, budget // len(live))
    workers = min(len(live), os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(
            pool.map(
                lambda br: search_exact_size(universe - br[1], br[2], k - 2, per_budget),
                live,
            )
        )
    nodes = sum(r[2] for r in results)
    for (prefix, shift, _), (found, mask, _, _) in zip(live, results):
        if found:
            return True, prefix | (mask << shift), nodes, False
    exhausted = any(r[3] for r in results)
    return False, 0, nodes, exhausted


def _search_k(universe, constraints, k, budget, parallel):
    if parallel and k >= 2 and universe >= 2:
        return _search_k_parallel(universe, constraints, k, budget)
    return search_exact_size(universe, constraints, k, budget)


def _solve_masks(universe, masks, lower, opts, hint_mask, hint_len):
    """Shared size sweep.  Returns ``(status, mask, size, bound_used, nodes)``.

    ``lower`` is ``(value, name)`` or None; caller has excluded twins and
    verified the hint.  Without a hint the sweep is capped at the full
    universe, which is always a code here, so it cannot fall through.
    """
    constraints = _constraints_from_masks(masks)
    start = lower[0] if lower is not None else 1
    bound_used = (lower[1], lower[0]) if lower is not None else None
    cap = hint_len - 1 if hint_mask is not None else universe
    nodes_total = 0
    for k in range(start, cap + 1):
        remaining = opts.budget - nodes_total
        if remaining <= 0:
            break
        found, mask, nodes, exhausted = _search_k(
            universe, constraints, k, remaining, opts.parallel
        )
        nodes_total += nodes
        if found:
            return STATUS_OPTIMAL, mask, k, bound_used, nodes_total
        if exhausted:
            if hint_mask is not None:
                return STATUS_FEASIBLE, hint_mask, hint_len, None, nodes_total
            return STATUS_BUDGET, None, None, None, nodes_total
    else:
        if hint_mask is not None:
            return STATUS_OPTIMAL, hint_mask, hint_len, bound_used, nodes_total
        raise RuntimeError("size sweep fell through without a code")
    # remaining budget hit zero before the sweep finished
    if hint_mask is not None:
        return STATUS_FEASIBLE, hint_mask, hint_len, None, nodes_total
    return STATUS_BUDGET, None, None, None, nodes_total


def min_edge_code(g, options=None):
    """Minimum edge-identifying code of ``g``.

    Returns a SolveResult whose ``code`` is an EdgeSet on success.  The
    graph admits no code exactly when it has a pendant pair, reported as
    Infeasible.  With default options the returned code is the
    lexicographically least optimum by edge index.
    """
    opts = options if options is not None else SolveOptions()
    if g.m == 0:
        return SolveResult(STATUS_OPTIMAL, EdgeSet.from_indices(g, ()), 0, None, 0)
    if pendant_pairs(g):
        return SolveResult(STATUS_INFEASIBLE)
    hint_mask = None
    hint_len = 0
    if opts.upper_hint is not None:
        hint = opts.upper_hint
        if not isinstance(hint, EdgeSet):
            hint = EdgeSet.from_indices(g, hint)
        hint.check_owner(g)
        if not verify_edge_code(g, hint).is_code:
            raise ValueError("upper_hint is not an edge-identifying code")
        hint_mask = hint.mask
        hint_len = len(hint)
    masks = g.all_edge_masks()
    lower = solver_lower_bound(g) if opts.prune_with_bounds else None
    status, mask, size, bound_used, nodes = _solve_masks(
        g.m, masks, lower, opts, hint_mask, hint_len
    )
    code = EdgeSet(g.fingerprint, mask) if mask is not None else None
    return SolveResult(status, code, size, bound_used, nodes)


def min_vertex_code(g, options=None):
    """Minimum identifying code of ``g`` on vertices.

    Same sweep as the edge solver over vertex closed neighborhoods.
    Twins (vertices with equal closed neighborhoods) make the instance
    Infeasible.  ``code`` is a sorted tuple of vertices on success.
    """
    opts = options if options is not None else SolveOptions()
    if g.n == 0:
        return SolveResult(STATUS_OPTIMAL, (), 0, None, 0)
    masks = vertex_closed_masks(g)
    if len(set(masks)) < g.n:
        return SolveResult(STATUS_INFEASIBLE)
    hint_mask = None
    hint_len = 0
    if opts.upper_hint is not None:
        verts = sorted(set(opts.upper_hint))
        if verts and not (0 <= verts[0] and verts[-1] < g.n):
            raise ValueError("hint vertex out of range")
        if not verify_vertex_code(g, verts).is_code:
            raise ValueError("upper_hint is not an identifying code")
        hint_mask = 0
        for v in verts:
            hint_mask |= 1 << v
        hint_len = len(verts)
    lower = (log_lower(g.n), "log-universe") if opts.prune_with_bounds else None
    status, mask, size, bound_used, nodes = _solve_masks(
        g.n, masks, lower, opts, hint_mask, hint_len
    )
    code = None
    if mask is not None:
        code = tuple(v for v in range(g.n) if mask >> v & 1)
    return SolveResult(status, code, size, bound_used, nodes)


def shrink_to_minimal(g, code):
    """Drop edges from a code until it is minimal under inclusion.

    One ascending pass over the indices suffices: the working set only
    ever shrinks, so an edge that cannot be dropped at its turn cannot
    become droppable later.  Raises ValueError if ``code`` is not a code.
    """
    if not isinstance(code, EdgeSet):
        code = EdgeSet.from_indices(g, code)
    code.check_owner(g)
    if not verify_edge_code(g, code).is_code:
        raise ValueError("not an edge-identifying code")
    masks = g.all_edge_masks()
    mask = code.mask
    for i in code.indices():
        trial = mask & ~(1 << i)
        if _is_code_mask(masks, trial):
            mask = trial
    return EdgeSet(g.fingerprint, mask)


def approx_edge_code(g):
    """Minimal edge-identifying code found by shrinking the full edge set.

    On pendant-free graphs the result is at most four times optimal: each
    component holds at least half its order as a lower bound, while a
    minimal code never exceeds twice the order less three.  Raises
    ValueError when no code exists.
    """
    if pendant_pairs(g):
        raise ValueError("graph has a pendant pair, no edge-identifying code exists")
    return shrink_to_minimal(g, EdgeSet.full(g))
