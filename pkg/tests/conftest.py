import itertools
import random

import pytest

from cozero.graphs import CozeroGraph
from cozero.rings import RingSpec


# independent oracles, kept deliberately naive


def ideal_by_enumeration(spec: RingSpec, b):
    return {spec.mul(r, b) for r in spec.elements()}


def unit_by_search(spec: RingSpec, a) -> bool:
    return any(spec.mul(a, b) == spec.one for b in spec.elements())


def vnr_by_search(spec: RingSpec) -> bool:
    return all(any(spec.mul(spec.mul(r, r), s) == r for s in spec.elements())
               for r in spec.elements())


def adjacency_by_oracle(spec: RingSpec, a, b) -> bool:
    return (a not in ideal_by_enumeration(spec, b)
            and b not in ideal_by_enumeration(spec, a))


def random_graph(n: int, p: float, rng: random.Random) -> CozeroGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return CozeroGraph.from_edges(n, edges)


def cycle_graph(n: int) -> CozeroGraph:
    return CozeroGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> CozeroGraph:
    return CozeroGraph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def has_induced_odd_cycle_by_subsets(g: CozeroGraph, min_len: int = 5) -> bool:
    """Exhaustive check over vertex subsets: is some induced subgraph an odd
    cycle of length >= min_len?  Only for tiny graphs."""
    for size in range(min_len, g.n + 1, 2):
        for subset in itertools.combinations(range(g.n), size):
            degs = [sum(1 for j in subset if j != i and g.has_edge(i, j))
                    for i in subset]
            if any(d != 2 for d in degs):
                continue
            # all degrees 2 and connected means a single cycle
            seen = {subset[0]}
            frontier = [subset[0]]
            while frontier:
                v = frontier.pop()
                for w in subset:
                    if w not in seen and g.has_edge(v, w):
                        seen.add(w)
                        frontier.append(w)
            if len(seen) == size:
                return True
    return False


SMALL_SPECS = [
    RingSpec((4,)),
    RingSpec((6,)),
    RingSpec((8,)),
    RingSpec((9,)),
    RingSpec((12,)),
    RingSpec((2, 2)),
    RingSpec((2, 3)),
    RingSpec((2, 4)),
    RingSpec((3, 3)),
    RingSpec((2, 2, 2)),
    RingSpec((2, 2, 3)),
    RingSpec((2, 3, 5)),
    RingSpec((3, 5)),
    RingSpec((2, 2, 2, 2)),
]


@pytest.fixture(params=SMALL_SPECS, ids=str)
def small_spec(request):
    return request.param
