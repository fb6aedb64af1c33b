import logging
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from app.schemas.graphs import Edge, Embedding, SimpleGraph, TargetPattern
from app.schemas.sequences import DegreeSequence
from app.services.graphicality_service import erdos_gallai_holds
from app.utils.exception_handlers import EmbeddingError, IsolatedVertexError

logger = logging.getLogger(__name__)


def degree_sequence_of(graph: SimpleGraph) -> DegreeSequence:
    degrees = graph.degrees
    isolated = [v for v, degree in enumerate(degrees) if degree == 0]
    if isolated:
        raise IsolatedVertexError(isolated)
    return DegreeSequence.of(degrees)


def _host_order(
    adjacency: Sequence[Iterable[int]], prefer: Sequence[int] | None
) -> list[int]:
    n = len(adjacency)
    by_degree = sorted(range(n), key=lambda v: (-len(adjacency[v]), v))
    if not prefer:
        return by_degree
    seen: set[int] = set()
    order: list[int] = []
    for v in prefer:
        if 0 <= v < n and v not in seen:
            order.append(v)
            seen.add(v)
    order.extend(v for v in by_degree if v not in seen)
    return order


def search_embedding(
    adjacency: Sequence[frozenset[int] | set[int]],
    pattern: TargetPattern,
    prefer: Sequence[int] | None = None,
) -> tuple[int, ...] | None:
    """Backtracking subgraph (not induced) search on raw adjacency sets."""
    n = len(adjacency)
    if n < pattern.vertex_count:
        return None
    if sum(len(items) for items in adjacency) // 2 < len(pattern.edges):
        return None

    pattern_degrees = pattern.degrees
    pattern_adjacency = pattern.graph.adjacency
    # Most constrained pattern vertices first.
    pattern_order = sorted(range(pattern.vertex_count), key=lambda p: (-pattern_degrees[p], p))
    host_order = _host_order(adjacency, prefer)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(depth: int) -> bool:
        if depth == len(pattern_order):
            return True
        p = pattern_order[depth]
        placed = [mapping[q] for q in pattern_adjacency[p] if q in mapping]
        for host in host_order:
            if host in used or len(adjacency[host]) < pattern_degrees[p]:
                continue
            if any(other not in adjacency[host] for other in placed):
                continue
            mapping[p] = host
            used.add(host)
            if extend(depth + 1):
                return True
            del mapping[p]
            used.discard(host)
        return False

    if not extend(0):
        return None
    return tuple(mapping[p] for p in range(pattern.vertex_count))


def find_embedding(
    graph: SimpleGraph,
    pattern: TargetPattern,
    prefer: Sequence[int] | None = None,
) -> Embedding | None:
    """Find H inside G, trying `prefer` vertices first, then non-increasing host degree."""
    found = search_embedding(graph.adjacency, pattern, prefer)
    if found is None:
        return None
    return Embedding(mapping=found)


def verify_embedding(graph: SimpleGraph, embedding: Embedding, pattern: TargetPattern) -> bool:
    if any(v >= graph.vertex_count for v in embedding.mapping):
        return False
    return embedding.image(pattern) <= graph.edge_set


def remove_pattern(
    graph: SimpleGraph, embedding: Embedding, pattern: TargetPattern
) -> SimpleGraph:
    """G - H: drop exactly the mapped pattern edges, keep every vertex."""
    if any(v >= graph.vertex_count for v in embedding.mapping):
        raise EmbeddingError(
            "Embedding maps outside the host graph",
            details={"mapping": list(embedding.mapping), "vertex_count": graph.vertex_count},
        )
    image = embedding.image(pattern)
    missing = sorted(image - graph.edge_set)
    if missing:
        raise EmbeddingError(
            "Mapped pattern edges are missing from the host",
            details={"missing": [list(edge) for edge in missing]},
        )
    return SimpleGraph(
        vertex_count=graph.vertex_count,
        edges=[edge for edge in graph.edges if edge not in image],
    )


def iter_completions(
    demands: Sequence[int],
    forbidden: frozenset[Edge] = frozenset(),
    *,
    greedy: bool = False,
    on_node: Callable[[], None] | None = None,
) -> Iterator[list[Edge]]:
    """Yield every edge set giving vertex v exactly demands[v] new edges.

    Vertices are settled in index order; each settles its demand with a set of
    later vertices, so every labeled graph comes out exactly once. `forbidden`
    pairs are never used. After each settled vertex the remaining demands must
    pass Erdos-Gallai. With `greedy` the partner sets are tried largest demand
    first (Havel-Hakimi order) instead of lexicographically.
    """
    n = len(demands)
    remaining = list(demands)
    if any(value < 0 for value in remaining):
        return
    chosen: list[Edge] = []

    def feasible(start: int) -> bool:
        rest = sorted((remaining[v] for v in range(start, n) if remaining[v]), reverse=True)
        if not rest:
            return True
        return erdos_gallai_holds(rest)

    def extend(v: int) -> Iterator[list[Edge]]:
        while v < n and remaining[v] == 0:
            v += 1
        if v == n:
            yield list(chosen)
            return

        need = remaining[v]
        candidates = [
            u for u in range(v + 1, n) if remaining[u] > 0 and (v, u) not in forbidden
        ]
        if len(candidates) < need:
            return
        if greedy:
            candidates.sort(key=lambda u: (-remaining[u], u))

        remaining[v] = 0
        for partners in combinations(candidates, need):
            if on_node is not None:
                on_node()
            for u in partners:
                remaining[u] -= 1
                chosen.append((v, u))
            if feasible(v + 1):
                yield from extend(v + 1)
            for u in partners:
                remaining[u] += 1
                chosen.pop()
        remaining[v] = need

    if not feasible(0):
        return
    yield from extend(0)
