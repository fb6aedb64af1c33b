import logging
from itertools import accumulate
from typing import Sequence

from app.schemas.graphs import SimpleGraph
from app.schemas.sequences import DegreeSequence, LayOffResult
from app.schemas.verdicts import GraphicalityReport
from app.utils.exception_handlers import ConstructionDefect, LayOffError, NotGraphicError

logger = logging.getLogger(__name__)


def erdos_gallai_holds(terms: Sequence[int]) -> bool:
    """Erdos-Gallai test on non-increasing, non-negative terms (zeros allowed)."""
    if sum(terms) % 2:
        return False
    n = len(terms)
    prefix = list(accumulate(terms))
    for k in range(1, n + 1):
        # Only prefixes ending before a strict drop (or at the end) can be tight.
        if k < n and terms[k - 1] == terms[k]:
            continue
        right = sum(min(term, k) for term in terms[k:])
        if prefix[k - 1] > k * (k - 1) + right:
            return False
    return True


def is_graphic_erdos_gallai(sequence: DegreeSequence) -> bool:
    return erdos_gallai_holds(sequence.terms)


def lay_off(sequence: DegreeSequence) -> LayOffResult:
    """Remove d_n, decrement d_1..d_{d_n}, re-sort and strip zeros."""
    terms = sequence.terms
    n = len(terms)
    if n == 0:
        raise LayOffError(smallest=0, n=0)
    smallest = terms[-1]
    if smallest > n - 1:
        raise LayOffError(smallest=smallest, n=n)

    reduced = [term - 1 for term in terms[:smallest]] + list(terms[smallest : n - 1])
    residual = DegreeSequence.of(term for term in reduced if term > 0)
    return LayOffResult(
        residual=residual,
        reduced_positions=frozenset(range(1, smallest + 1)),
        laid_off=smallest,
    )


def is_graphic_lay_off(sequence: DegreeSequence) -> bool:
    """Lay off until nothing is left (graphic) or laying off is impossible."""
    current = sequence
    while not current.is_empty:
        try:
            current = lay_off(current).residual
        except LayOffError:
            return False
    return True


def is_graphic_small_degree(sequence: DegreeSequence) -> bool | None:
    """Fast path: 1 <= m <= 2, h = 1 and even sum imply graphic; None when it does not apply."""
    if sequence.is_empty:
        return None
    m, h = sequence.terms[0], sequence.terms[-1]
    if 1 <= m <= 2 and h == 1 and sequence.sigma % 2 == 0:
        return True
    return None


def havel_hakimi_realize(sequence: DegreeSequence) -> SimpleGraph:
    """Realize by repeatedly laying off the last smallest vertex onto the largest demands.

    Vertex v of the result has degree d_{v+1}. Ties among the largest demands go to
    the lowest vertex index.
    """
    if not is_graphic_erdos_gallai(sequence):
        raise NotGraphicError(sequence.terms)

    demand = list(sequence.terms)
    n = len(demand)
    edges: list[tuple[int, int]] = []

    while True:
        active = [v for v in range(n) if demand[v] > 0]
        if not active:
            break
        vertex = min(active, key=lambda v: (demand[v], -v))
        need = demand[vertex]
        targets = sorted((u for u in active if u != vertex), key=lambda u: (-demand[u], u))
        if len(targets) < need:
            raise ConstructionDefect(
                "Havel-Hakimi ran out of partners on a graphic sequence",
                details={"terms": list(sequence.terms), "vertex": vertex},
            )
        for u in targets[:need]:
            edges.append((vertex, u))
            demand[u] -= 1
        demand[vertex] = 0

    return SimpleGraph(vertex_count=n, edges=edges)


def graphicality_report(sequence: DegreeSequence) -> GraphicalityReport:
    report = GraphicalityReport(
        sequence=sequence,
        erdos_gallai=is_graphic_erdos_gallai(sequence),
        lay_off=is_graphic_lay_off(sequence),
        small_degree=is_graphic_small_degree(sequence),
    )
    if report.erdos_gallai != report.lay_off:
        raise ConstructionDefect(
            "Graphicality deciders disagree",
            details={"terms": list(sequence.terms)},
        )
    return report
