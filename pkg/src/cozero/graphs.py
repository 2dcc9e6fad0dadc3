"""The cozero-divisor graph of a finite ring, with bitset adjacency rows.

Vertices are indices into a lex-sorted label list of ring elements; each
adjacency row is a Python int used as a bitset.  Graphs are immutable after
construction.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .rings import (
    AssociateClasses,
    CapExceededError,
    DEFAULT_MAX_CARDINALITY,
    Element,
    RingSpec,
    associate_classes,
    in_principal_ideal,
    is_von_neumann_regular,
    principal_ideal,
    vertices,
)


@dataclass(frozen=True, eq=False)
class CozeroGraph:
    spec: RingSpec | None
    labels: tuple[Element, ...]
    adj: tuple[int, ...]  # adj[i] bit j set iff i-j is an edge

    @property
    def n(self) -> int:
        return len(self.labels)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.adj[i] >> j & 1]

    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(self.n)) // 2

    def neighbors(self, i: int) -> list[int]:
        return _bits(self.adj[i])

    @staticmethod
    def from_edges(n: int, edges, labels=None, spec=None) -> "CozeroGraph":
        """Build a bare graph from an edge list (tests, negative controls)."""
        rows = [0] * n
        for i, j in edges:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"bad edge ({i}, {j})")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        if labels is None:
            labels = tuple((i,) for i in range(n))
        return CozeroGraph(spec=spec, labels=tuple(labels), adj=tuple(rows))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_cozero_graph(spec: RingSpec,
                       max_cardinality: int = DEFAULT_MAX_CARDINALITY) -> CozeroGraph:
    """The graph on the non-zero non-units, a-b an edge iff a not in Rb and b not in Ra."""
    if spec.cardinality > max_cardinality:
        raise CapExceededError(
            f"|{spec}| = {spec.cardinality} exceeds cardinality cap {max_cardinality}")
    labels = vertices(spec)
    n = len(labels)
    # Ra = R*gcd-signature, so adjacency only depends on the componentwise gcds
    sigs = [tuple(math.gcd(x, m) for x, m in zip(v, spec.moduli)) for v in labels]
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            a, b = sigs[i], sigs[j]
            if not in_principal_ideal(spec, a, b) and not in_principal_ideal(spec, b, a):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return CozeroGraph(spec=spec, labels=tuple(labels), adj=tuple(rows))


def adjacency_via_containment(spec: RingSpec, a: Element, b: Element) -> bool:
    """Adjacency by incomparability of the ideals Ra, Rb, enumerated explicitly.

    Deliberately a separate, slower code path than the gcd membership test
    used by build_cozero_graph; the two are cross-checked in the test suite.
    """
    ra = principal_ideal(spec, a)
    rb = principal_ideal(spec, b)
    return not ra.issubset(rb) and not rb.issubset(ra)


def complement(g: CozeroGraph) -> CozeroGraph:
    full = (1 << g.n) - 1
    rows = tuple((full & ~g.adj[i]) & ~(1 << i) for i in range(g.n))
    return CozeroGraph(spec=g.spec, labels=g.labels, adj=rows)


def induced_subgraph(g: CozeroGraph, keep) -> CozeroGraph:
    keep = sorted(keep)
    remap = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for nb in _bits(g.adj[old]):
            if nb in remap:
                row |= 1 << remap[nb]
        rows.append(row)
    return CozeroGraph(spec=g.spec,
                       labels=tuple(g.labels[old] for old in keep),
                       adj=tuple(rows))


def nzc(x: Element) -> int:
    """Number of zero components of a tuple."""
    return sum(1 for r in x if r == 0)


def nzc_partition(g: CozeroGraph) -> list[list[int]]:
    """Vertex-index sets A_1..A_{n-1} grouped by zero-component count.

    Only meaningful over a product of prime fields; same-part vertices with
    distinct zero patterns are always adjacent, so over Z2 factors (where
    equal count forces distinct patterns) each part induces a complete
    subgraph.
    """
    spec = g.spec
    if spec is None or not is_von_neumann_regular(spec):
        raise ValueError("zero-count partition requires a product of fields")
    if any(not _is_prime(m) for m in spec.moduli):
        raise ValueError("zero-count partition requires prime moduli (CRT-split spec)")
    n = len(spec.moduli)
    parts: list[list[int]] = [[] for _ in range(n - 1)]
    for i, label in enumerate(g.labels):
        parts[nzc(label) - 1].append(i)
    return parts


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True, eq=False)
class QuotientGraph:
    graph: CozeroGraph
    class_sizes: tuple[int, ...]
    origin: AssociateClasses


def quotient_by_associates(g: CozeroGraph) -> QuotientGraph:
    """Collapse each associate class to its representative.

    Non-representatives are deleted one at a time, and at every step the
    deleted vertex is checked to have a remaining non-adjacent vertex with an
    identical neighborhood (its representative), so the reduction re-proves
    the clique/coloring-preserving deletion hypothesis on every instance.
    """
    if g.spec is None:
        raise ValueError("quotient needs a ring-backed graph")
    classes = associate_classes(g.spec)
    label_index = {label: i for i, label in enumerate(g.labels)}
    rep_indices = sorted(label_index[rep] for rep, _ in classes.classes)
    rep_set = set(rep_indices)

    remaining = (1 << g.n) - 1
    for v in range(g.n):
        if v in rep_set:
            continue
        rep = label_index[classes.representative(g.labels[v])]
        if g.has_edge(v, rep):
            raise AssertionError(f"associates {v}, {rep} unexpectedly adjacent")
        if (g.adj[v] & remaining) != (g.adj[rep] & remaining):
            raise AssertionError(
                f"deletion hypothesis fails: vertices {v} and {rep} have "
                f"different neighborhoods among the remaining vertices")
        remaining &= ~(1 << v)

    sizes = []
    for rep, members in classes.classes:
        sizes.append(len(members))
    return QuotientGraph(graph=induced_subgraph(g, rep_indices),
                         class_sizes=tuple(sizes),
                         origin=classes)


def _label_str(label: Element) -> str:
    return "(" + ",".join(str(r) for r in label) + ")"


def to_dot(g: CozeroGraph, name: str = "cozero") -> str:
    lines = [f"graph {name} {{"]
    for i, label in enumerate(g.labels):
        lines.append(f'  {i} [label="{_label_str(label)}"];')
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: CozeroGraph) -> dict:
    return {
        "spec": str(g.spec) if g.spec is not None else None,
        "labels": [list(label) for label in g.labels],
        "edges": [list(e) for e in g.edges()],
    }


def to_json(g: CozeroGraph) -> str:
    return json.dumps(to_json_dict(g), indent=2, sort_keys=True) + "\n"
