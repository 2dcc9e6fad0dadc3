"""Exact combinatorial solvers: maximum clique, chromatic number, induced
odd-cycle (hole) search, and small-graph isomorphism.

All solvers are exact; size caps raise instead of degrading to heuristics.
Tie-breaking is by lowest vertex index throughout so witnesses are
reproducible.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

from .graphs import CozeroGraph, _bits, complement
from .rings import CapExceededError

DEFAULT_VERTEX_CAP = 512
ISO_VERTEX_CAP = 64


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ColoringResult:
    count: int
    assignment: tuple[int, ...]  # vertex index -> color in [0, count)


@dataclass(frozen=True)
class OddCycleCertificate:
    where: str  # "graph" or "complement"
    cycle: tuple[int, ...]


def validate_clique(g: CozeroGraph, witness) -> bool:
    ws = list(witness)
    if len(set(ws)) != len(ws):
        return False
    return all(g.has_edge(ws[i], ws[j])
               for i in range(len(ws)) for j in range(i + 1, len(ws)))


def validate_coloring(g: CozeroGraph, assignment, count: int) -> bool:
    if len(assignment) != g.n:
        return False
    if g.n and not all(0 <= c < count for c in assignment):
        return False
    return all(assignment[i] != assignment[j] for i, j in g.edges())


def validate_certificate(g: CozeroGraph, cert: OddCycleCertificate) -> bool:
    """Check that cert.cycle is an induced odd cycle of length >= 5 in the
    flagged graph (the complement is rebuilt here, independent of the search)."""
    h = g if cert.where == "graph" else complement(g)
    cyc = list(cert.cycle)
    k = len(cyc)
    if k < 5 or k % 2 == 0 or len(set(cyc)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = (j - i == 1) or (i == 0 and j == k - 1)
            if h.has_edge(cyc[i], cyc[j]) != consecutive:
                return False
    return True


# ---------------------------------------------------------------------------
# twin reduction
#
# Vertices with identical neighborhoods (non-adjacent, "false twins") or
# identical closed neighborhoods (adjacent, "true twins") are interchangeable
# for the questions asked here: a clique or an induced cycle of length >= 5
# can use at most one member of a twin pair, and any solution through a
# removed twin maps onto its kept sibling.  Removing twins first makes the
# dense ring graphs (which have large associate classes) tractable.
# ---------------------------------------------------------------------------

def _false_twin_reduce(g: CozeroGraph) -> list[int]:
    """Keep one vertex per open-neighborhood class among non-adjacent twins."""
    seen: dict[int, int] = {}
    keep = []
    for v in range(g.n):
        key = g.adj[v]
        if key in seen and not g.has_edge(v, seen[key]):
            continue
        seen.setdefault(key, v)
        keep.append(v)
    return keep


def _all_twin_reduce(g: CozeroGraph) -> list[int]:
    """Keep one vertex per open- or closed-neighborhood class."""
    open_seen: set[int] = set()
    closed_seen: set[int] = set()
    keep = []
    for v in range(g.n):
        open_key = g.adj[v]
        closed_key = g.adj[v] | (1 << v)
        if open_key in open_seen or closed_key in closed_seen:
            continue
        open_seen.add(open_key)
        closed_seen.add(closed_key)
        keep.append(v)
    return keep


def _subgraph_rows(g: CozeroGraph, keep: list[int]) -> list[int]:
    remap = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for nb in _bits(g.adj[old]):
            if nb in remap:
                row |= 1 << remap[nb]
        rows.append(row)
    return rows


def _check_cap(g: CozeroGraph, cap: int) -> None:
    if g.n > cap:
        raise CapExceededError(f"graph has {g.n} vertices, cap is {cap}")


# ---------------------------------------------------------------------------
# maximum clique: branch and bound over bitsets with greedy-coloring bounds
# ---------------------------------------------------------------------------

def max_clique(g: CozeroGraph, max_vertices: int = DEFAULT_VERTEX_CAP) -> CliqueResult:
    _check_cap(g, max_vertices)
    if g.n == 0:
        return CliqueResult(size=0, witness=())
    keep = _false_twin_reduce(g)
    adj = _subgraph_rows(g, keep)
    best = _max_clique_core(adj)
    return CliqueResult(size=len(best), witness=tuple(sorted(keep[v] for v in best)))


def _greedy_clique(adj: list[int], n: int) -> list[int]:
    # seed the bound: extend greedily from each vertex, highest degree first
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    best: list[int] = []
    for start in order[:min(n, 16)]:
        clique = [start]
        cand = adj[start]
        while cand:
            v = (cand & -cand).bit_length() - 1
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _max_clique_core(adj: list[int]) -> list[int]:
    n = len(adj)
    best = _greedy_clique(adj, n)
    current: list[int] = []

    def color_sort(p: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        while p:
            color += 1
            q = p
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~adj[v] & ~low
                p &= ~low
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(p: int) -> None:
        nonlocal best
        order, bounds = color_sort(p)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + bounds[i] <= len(best):
                return
            v = order[i]
            current.append(v)
            sub = p & adj[v]
            if sub:
                expand(sub)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()
            p &= ~(1 << v)

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * n + 100))
    try:
        expand((1 << n) - 1)
    finally:
        sys.setrecursionlimit(old_limit)
    return sorted(best)


def brute_force_clique(g: CozeroGraph) -> int:
    """Exact clique number by enumerating every clique (test oracle, <= 20 vertices)."""
    if g.n > 20:
        raise CapExceededError(f"brute-force clique capped at 20 vertices, got {g.n}")
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand &= ~low
            grow(size + 1, cand & g.adj[v])

    grow(0, (1 << g.n) - 1)
    return best


# ---------------------------------------------------------------------------
# chromatic number: DSATUR upper bound, then backtracking per color count
# with the maximum clique pre-colored
# ---------------------------------------------------------------------------

def chromatic_number(g: CozeroGraph,
                     max_vertices: int = DEFAULT_VERTEX_CAP) -> ColoringResult:
    _check_cap(g, max_vertices)
    if g.n == 0:
        return ColoringResult(count=0, assignment=())
    keep = _false_twin_reduce(g)
    adj = _subgraph_rows(g, keep)
    count, colors = _chromatic_core(adj)
    # removed false twins reuse their kept sibling's color
    sibling: dict[int, int] = {}
    for new, old in enumerate(keep):
        sibling[g.adj[old]] = new
    full = []
    for v in range(g.n):
        full.append(colors[sibling[g.adj[v]]])
    return ColoringResult(count=count, assignment=tuple(full))


def _dsatur(adj: list[int]) -> tuple[int, list[int]]:
    n = len(adj)
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    degrees = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        u = max((v for v in range(n) if colors[v] == -1),
                key=lambda v: (len(neighbor_colors[v]), degrees[v], -v))
        c = 0
        while c in neighbor_colors[u]:
            c += 1
        colors[u] = c
        for nb in _bits(adj[u]):
            neighbor_colors[nb].add(c)
    return max(colors) + 1, colors


def _chromatic_core(adj: list[int]) -> tuple[int, list[int]]:
    n = len(adj)
    clique = _max_clique_core(adj)
    lb = len(clique)
    ub, ub_colors = _dsatur(adj)
    if ub == lb:
        return ub, ub_colors
    for k in range(lb, ub):
        colors = _try_k_coloring(adj, k, clique)
        if colors is not None:
            return k, colors
    return ub, ub_colors


def _try_k_coloring(adj: list[int], k: int, clique: list[int]) -> list[int] | None:
    """Backtracking search for a proper k-coloring, clique pre-colored to break
    color symmetry; DSATUR vertex selection, lowest index on ties."""
    n = len(adj)
    colors = [-1] * n
    # forbidden[v] = bitset of colors used on v's neighbors
    forbidden = [0] * n
    degrees = [adj[v].bit_count() for v in range(n)]
    uncolored = set(range(n))

    def assign(v: int, c: int) -> list[int]:
        colors[v] = c
        uncolored.discard(v)
        touched = []
        bit = 1 << c
        for nb in _bits(adj[v]):
            if colors[nb] == -1 and not forbidden[nb] & bit:
                forbidden[nb] |= bit
                touched.append(nb)
        return touched

    def undo(v: int, c: int, touched: list[int]) -> None:
        colors[v] = -1
        uncolored.add(v)
        bit = 1 << c
        for nb in touched:
            forbidden[nb] &= ~bit
    for i, v in enumerate(clique):
        if i >= k:
            return None
        assign(v, i)

    full = (1 << k) - 1

    def search() -> bool:
        if not uncolored:
            return True
        v = max(uncolored,
                key=lambda u: (forbidden[u].bit_count(), degrees[u], -u))
        avail = full & ~forbidden[v]
        if not avail:
            return False
        max_used = max(colors) if any(c >= 0 for c in colors) else -1
        while avail:
            low = avail & -avail
            c = low.bit_length() - 1
            avail &= ~low
            if c > max_used + 1:
                break  # fresh colors are interchangeable; try only the first
            touched = assign(v, c)
            if search():
                return True
            undo(v, c, touched)
        return False

    if search():
        return colors.copy()
    return None


def brute_force_chromatic(g: CozeroGraph) -> int:
    """Exact chromatic number by plain assignment backtracking (test oracle,
    <= 12 vertices); no heuristics shared with the main solver."""
    if g.n > 12:
        raise CapExceededError(f"brute-force coloring capped at 12 vertices, got {g.n}")
    if g.n == 0:
        return 0
    colors = [-1] * g.n

    def feasible(k: int, v: int) -> bool:
        if v == g.n:
            return True
        for c in range(k):
            if all(colors[nb] != c for nb in g.neighbors(v) if nb < v):
                colors[v] = c
                if feasible(k, v + 1):
                    colors[v] = -1
                    return True
                colors[v] = -1
        return False

    for k in range(1, g.n + 1):
        if feasible(k, 0):
            return k
    return g.n


# ---------------------------------------------------------------------------
# induced odd cycles (holes)
# ---------------------------------------------------------------------------

def find_odd_hole(g: CozeroGraph, min_len: int = 5,
                  max_vertices: int = DEFAULT_VERTEX_CAP) -> OddCycleCertificate | None:
    """Minimal-length induced odd cycle of length >= min_len, or None.

    Twin-reduced first (no induced cycle of length >= 5 uses two twins), then
    a DFS over canonical induced paths, branch-and-bound on cycle length so
    the returned certificate has minimal length.
    """
    _check_cap(g, max_vertices)
    if min_len < 5 or min_len % 2 == 0:
        raise ValueError("min_len must be odd and at least 5")
    keep = _all_twin_reduce(g)
    adj = _subgraph_rows(g, keep)
    cycle = _min_odd_hole_core(adj, min_len)
    if cycle is None:
        return None
    return OddCycleCertificate(where="graph",
                               cycle=tuple(keep[v] for v in cycle))


def _min_odd_hole_core(adj: list[int], min_len: int) -> list[int] | None:
    n = len(adj)
    if n < min_len:
        return None
    best: list[int] | None = None
    best_len = n + 1

    # path = [s, v1, ..., tail]; avail holds vertices > s, unused, and
    # non-adjacent to every interior vertex (path[1:-1])
    path: list[int] = []

    def dfs(avail: int) -> None:
        nonlocal best, best_len
        depth = len(path)
        if depth + 1 >= best_len:
            return
        s, tail = path[0], path[-1]
        if depth + 1 >= min_len and (depth + 1) % 2 == 1:
            closers = avail & adj[tail] & adj[s]
            if depth >= 2:
                # one orientation per cycle: closer must exceed path[1]
                closers &= -1 << (path[1] + 1)
            if closers:
                w = (closers & -closers).bit_length() - 1
                best = path + [w]
                best_len = depth + 1
                if best_len == min_len:
                    return
        cand = avail & adj[tail]
        if depth >= 2:
            # later vertices are non-consecutive with s, so must avoid N(s);
            # once tail becomes interior its neighbors are off limits too
            cand &= ~adj[s]
            tail_mask = ~adj[tail]
        else:
            tail_mask = -1  # tail is s itself, which never becomes interior
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand &= ~low
            child_avail = avail & ~low & tail_mask
            # a cycle still needs a closer adjacent to s and enough vertices
            if (child_avail & adj[s]
                    and depth + 2 + child_avail.bit_count() >= min_len):
                path.append(w)
                dfs(child_avail)
                path.pop()
                if best_len == min_len:
                    return

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * n + 100))
    try:
        for s in range(n):
            if best_len == min_len:
                break
            path.append(s)
            dfs(((1 << n) - 1) & (-1 << (s + 1)))
            path.pop()
    finally:
        sys.setrecursionlimit(old_limit)
    return best


def is_perfect_desk_scale(g: CozeroGraph,
                          max_vertices: int = DEFAULT_VERTEX_CAP
                          ) -> tuple[bool, OddCycleCertificate | None]:
    """Perfection by exhaustive odd-hole search in the graph and its complement."""
    hole = find_odd_hole(g, max_vertices=max_vertices)
    if hole is not None:
        return False, hole
    anti = find_odd_hole(complement(g), max_vertices=max_vertices)
    if anti is not None:
        return False, OddCycleCertificate(where="complement", cycle=anti.cycle)
    return True, None


# ---------------------------------------------------------------------------
# small-graph isomorphism
# ---------------------------------------------------------------------------

def are_isomorphic(g: CozeroGraph, h: CozeroGraph,
                   max_vertices: int = ISO_VERTEX_CAP) -> list[int] | None:
    """A vertex bijection g -> h preserving adjacency both ways, or None.

    Backtracking over candidates compatible under iterated degree refinement.
    """
    _check_cap(g, max_vertices)
    _check_cap(h, max_vertices)
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    n = g.n
    gcol = _refine_colors(g.adj, n)
    hcol = _refine_colors(h.adj, n)
    if sorted(gcol) != sorted(hcol):
        return None

    mapping = [-1] * n
    used = 0
    order = sorted(range(n), key=lambda v: (gcol.count(gcol[v]), v))

    def place(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        u = order[pos]
        for v in range(n):
            if used >> v & 1 or hcol[v] != gcol[u]:
                continue
            ok = True
            for w in order[:pos]:
                if g.has_edge(u, w) != h.has_edge(mapping[w], v):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used |= 1 << v
                if place(pos + 1):
                    return True
                used &= ~(1 << v)
                mapping[u] = -1
        return False

    if place(0):
        return mapping
    return None


def _refine_colors(adj: list[int], n: int) -> list[int]:
    """1-dimensional Weisfeiler-Leman color refinement to a fixed point."""
    colors = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        sigs = []
        for v in range(n):
            sigs.append((colors[v], tuple(sorted(colors[w] for w in _bits(adj[v])))))
        canon = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [canon[sig] for sig in sigs]
        if new == colors:
            break
        colors = new
    return colors
