import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

from app.repositories.patterns_repository import fetch_pattern
from app.schemas.graphs import Edge, SimpleGraph, TargetPattern
from app.schemas.sequences import DegreeSequence
from app.schemas.verdicts import CrosscheckReport, Decision, EnumerationBudget, Mismatch
from app.services.characterize_service import MIN_ORDER, check_pattern
from app.services.graph_service import iter_completions, search_embedding
from app.services.graphicality_service import erdos_gallai_holds, is_graphic_erdos_gallai
from app.utils.exception_handlers import (
    BudgetExhaustedError,
    NotGraphicError,
    OracleCeilingError,
    OutOfScopeError,
)
from app.utils.settings import get_settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class _NodeCounter:
    def __init__(self, max_nodes: int | None):
        self.max_nodes = max_nodes
        self.nodes = 0

    def __call__(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhaustedError(self.nodes - 1, self.max_nodes)


def resolve_budget(budget: EnumerationBudget | None) -> EnumerationBudget:
    if budget is not None:
        return budget
    return EnumerationBudget(max_nodes=get_settings().max_nodes)


def require_within_ceiling(n: int) -> None:
    ceiling = get_settings().oracle_ceiling
    if n > ceiling:
        raise OracleCeilingError(n, ceiling)


def _iter_edge_sets(
    sequence: DegreeSequence, budget: EnumerationBudget | None
) -> Iterator[list[Edge]]:
    require_within_ceiling(sequence.n)
    if not is_graphic_erdos_gallai(sequence):
        raise NotGraphicError(sequence.terms)
    counter = _NodeCounter(resolve_budget(budget).max_nodes)
    yield from iter_completions(sequence.terms, on_node=counter)


def enumerate_realizations(
    sequence: DegreeSequence, budget: EnumerationBudget | None = None
) -> Iterator[SimpleGraph]:
    """Every labeled realization with vertex v of degree d_{v+1}, each exactly once."""
    for edges in _iter_edge_sets(sequence, budget):
        yield SimpleGraph(vertex_count=sequence.n, edges=edges)


def oracle_potentially(
    sequence: DegreeSequence,
    pattern: TargetPattern,
    budget: EnumerationBudget | None = None,
) -> bool:
    """Brute force: does any realization contain the pattern?"""
    budget = resolve_budget(budget)
    found = False
    realizations = 0
    for edges in _iter_edge_sets(sequence, budget):
        realizations += 1
        adjacency: list[set[int]] = [set() for _ in range(sequence.n)]
        for u, v in edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        if search_embedding(adjacency, pattern) is not None:
            found = True
            if budget.short_circuit:
                break
    logger.debug(
        "Oracle %s on %s: %s after %d realizations", pattern.name, sequence, found, realizations
    )
    return found


def enumerate_sequences(n: int, max_term: int) -> Iterator[DegreeSequence]:
    """All non-increasing sequences of n terms in 1..max_term, lexicographically descending."""
    if n < 1 or max_term < 1:
        return
    terms: list[int] = []

    def extend(upper: int) -> Iterator[DegreeSequence]:
        if len(terms) == n:
            yield DegreeSequence(terms=tuple(terms))
            return
        for value in range(upper, 0, -1):
            terms.append(value)
            yield from extend(value)
            terms.pop()

    yield from extend(max_term)


def iter_graphic_sequences(n: int) -> Iterator[DegreeSequence]:
    """Zero-free graphic sequences of length n, lexicographically descending."""
    for sequence in enumerate_sequences(n, n - 1):
        if erdos_gallai_holds(sequence.terms):
            yield sequence


def enumerate_graphic_sequences(n: int) -> Iterator[DegreeSequence]:
    """`iter_graphic_sequences` for the oracle, refused above the ceiling."""
    require_within_ceiling(n)
    yield from iter_graphic_sequences(n)


def fan_out(
    func: Callable[[T], R], items: Iterable[T], workers: int | None = None
) -> Iterator[R]:
    """Map in input order, across processes when more than one worker is configured."""
    workers = workers or get_settings().max_workers
    if workers <= 1:
        yield from map(func, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as executor:
        yield from executor.map(func, items, chunksize=16)


def _crosscheck_one(
    job: tuple[str, DegreeSequence, int | None],
) -> tuple[DegreeSequence, Decision, Decision | None]:
    pattern_name, sequence, max_nodes = job
    pattern = fetch_pattern(pattern_name)
    predicate = check_pattern(pattern, sequence).decision
    try:
        potentially = oracle_potentially(sequence, pattern, EnumerationBudget(max_nodes=max_nodes))
    except BudgetExhaustedError as exc:
        logger.warning("Budget exhausted on %s after %d nodes", sequence, exc.nodes)
        return sequence, predicate, None
    return sequence, predicate, Decision.YES if potentially else Decision.NO


def crosscheck(
    pattern: TargetPattern | str,
    n: int,
    budget: EnumerationBudget | None = None,
    workers: int | None = None,
) -> CrosscheckReport:
    """Compare the degree-condition predicate with the oracle on every graphic sequence of length n."""
    target = pattern if isinstance(pattern, TargetPattern) else fetch_pattern(pattern)
    if n < MIN_ORDER:
        raise OutOfScopeError(n, MIN_ORDER)
    require_within_ceiling(n)
    max_nodes = resolve_budget(budget).max_nodes

    tested = yes = no = unknown = 0
    mismatches: list[Mismatch] = []
    jobs = ((target.name, sequence, max_nodes) for sequence in enumerate_graphic_sequences(n))
    for sequence, predicate, oracle in fan_out(_crosscheck_one, jobs, workers):
        tested += 1
        if oracle is None:
            unknown += 1
            continue
        if predicate is Decision.YES:
            yes += 1
        else:
            no += 1
        if predicate is not oracle:
            logger.error("Mismatch on %s: predicate %s, oracle %s", sequence, predicate, oracle)
            mismatches.append(Mismatch(sequence=sequence, predicate=predicate, oracle=oracle))

    logger.info(
        "Crosscheck %s n=%d: %d sequences, %d mismatches", target.name, n, tested, len(mismatches)
    )
    return CrosscheckReport(
        pattern=target.name,
        n=n,
        tested=tested,
        yes=yes,
        no=no,
        unknown=unknown,
        mismatches=tuple(mismatches),
    )
