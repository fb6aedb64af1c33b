import logging
from collections import defaultdict
from itertools import combinations, permutations
from typing import Callable, Iterator

from app.repositories.patterns_repository import K5_MINUS_P4, K5_MINUS_Y4, fetch_pattern
from app.schemas.graphs import Edge, SimpleGraph, TargetPattern
from app.schemas.sequences import DegreeSequence, ResidualSequence
from app.schemas.verdicts import ConditionId, Verdict
from app.services.graph_service import iter_completions, search_embedding
from app.services.graphicality_service import is_graphic_erdos_gallai, lay_off
from app.services.sequence_service import match_condition3, match_condition4
from app.utils.exception_handlers import (
    ConstructionDefect,
    InvalidDataException,
    NotGraphicError,
    OutOfScopeError,
    VerdictContractError,
)

logger = logging.getLogger(__name__)

MIN_ORDER = 5


def _require_scope(sequence: DegreeSequence) -> None:
    if sequence.n < MIN_ORDER:
        raise OutOfScopeError(sequence.n, MIN_ORDER)
    if not is_graphic_erdos_gallai(sequence):
        raise NotGraphicError(sequence.terms)


def check_k5_p4(sequence: DegreeSequence) -> Verdict:
    """Potentially (K5-P4)-graphic test; NO names the first failing condition of 1, 2, 5, 3, 4."""
    _require_scope(sequence)
    name = K5_MINUS_P4.name
    n = sequence.n

    if sequence.d(2) < 3:
        return Verdict.no(name, sequence, ConditionId.P4_1)
    if sequence.d(5) < 2:
        return Verdict.no(name, sequence, ConditionId.P4_2)
    if n in (6, 7) and sequence.terms == (3, 3) + (2,) * (n - 2):
        return Verdict.no(name, sequence, ConditionId.P4_5)

    family = match_condition3(sequence)
    if family is not None:
        return Verdict.no(name, sequence, ConditionId.P4_3, family)

    family = match_condition4(sequence)
    if family is not None:
        return Verdict.no(name, sequence, ConditionId.P4_4, family)

    return Verdict.yes(name, sequence)


def check_k5_y4(sequence: DegreeSequence) -> Verdict:
    """Potentially (K5-Y4)-graphic test: d_3 >= 3, d_4 >= 2 and not (3^6)."""
    _require_scope(sequence)
    name = K5_MINUS_Y4.name

    if sequence.d(3) < 3:
        return Verdict.no(name, sequence, ConditionId.Y4_1)
    if sequence.d(4) < 2:
        return Verdict.no(name, sequence, ConditionId.Y4_2)
    if sequence.terms == (3,) * 6:
        return Verdict.no(name, sequence, ConditionId.Y4_3)

    return Verdict.yes(name, sequence)


CHECKERS: dict[str, Callable[[DegreeSequence], Verdict]] = {
    K5_MINUS_P4.name: check_k5_p4,
    K5_MINUS_Y4.name: check_k5_y4,
}


def check_pattern(pattern: TargetPattern | str, sequence: DegreeSequence) -> Verdict:
    target = pattern if isinstance(pattern, TargetPattern) else fetch_pattern(pattern)
    return CHECKERS[target.name](sequence)


def _placements(
    pattern: TargetPattern, slots: tuple[int, ...], demands: list[int]
) -> list[tuple[tuple[int, ...], frozenset[Edge]]]:
    """Distinct ways to lay the pattern onto `slots` without exceeding any demand.

    Pattern vertices are taken in non-increasing pattern degree, so the first
    placement puts the largest pattern degree on the first (largest) slot.
    """
    order = sorted(range(pattern.vertex_count), key=lambda p: (-pattern.degrees[p], p))
    seen: set[frozenset[Edge]] = set()
    placements = []
    for assigned in permutations(slots):
        mapping = [0] * pattern.vertex_count
        for p, host in zip(order, assigned):
            mapping[p] = host
        if any(pattern.degrees[p] > demands[mapping[p]] for p in range(pattern.vertex_count)):
            continue
        image = frozenset(
            (min(mapping[a], mapping[b]), max(mapping[a], mapping[b])) for a, b in pattern.edges
        )
        if image in seen:
            continue
        seen.add(image)
        placements.append((tuple(mapping), image))
    return placements


def _candidate_slots(n: int) -> Iterator[tuple[int, ...]]:
    # combinations() starts with (0, 1, 2, 3, 4): the five largest degrees.
    return combinations(range(n), MIN_ORDER)


def realize_with_pattern(sequence: DegreeSequence, pattern: TargetPattern) -> SimpleGraph:
    """Realization of a YES sequence containing the pattern; vertex v has degree d_{v+1}.

    The pattern goes on the five largest degrees first. Each distinct labeling is
    completed by backtracking; wider vertex sets are only tried after every
    top-five labeling fails.
    """
    verdict = check_pattern(pattern, sequence)
    if not verdict.is_yes:
        raise VerdictContractError(verdict)

    demands = list(sequence.terms)
    n = sequence.n
    for attempt, slots in enumerate(_candidate_slots(n)):
        if attempt == 1:
            logger.warning(
                "Top-five placement failed for %s on %s; widening", pattern.name, sequence
            )
        for mapping, image in _placements(pattern, slots, demands):
            rest = list(demands)
            for p, host in enumerate(mapping):
                rest[host] -= pattern.degrees[p]
            completion = next(iter_completions(rest, image, greedy=True), None)
            if completion is not None:
                logger.debug("Realized %s for %s with mapping %s", sequence, pattern.name, mapping)
                return SimpleGraph(vertex_count=n, edges=list(image) + completion)

    raise ConstructionDefect(
        "No realization containing the pattern was found for a YES sequence",
        details={"pattern": pattern.name, "terms": list(sequence.terms)},
    )


def residual_after_pattern(sequence: DegreeSequence, pattern: TargetPattern) -> ResidualSequence:
    """Subtract the pattern profile from the five largest terms; zeros are kept."""
    if sequence.n < MIN_ORDER:
        raise OutOfScopeError(sequence.n, MIN_ORDER)
    profile = pattern.degree_profile
    head = [term - need for term, need in zip(sequence.terms, profile)]
    if any(term < 0 for term in head):
        raise InvalidDataException(
            message="Pattern profile exceeds the largest terms",
            details={"terms": list(sequence.terms[:MIN_ORDER]), "profile": list(profile)},
        )
    rest = head + list(sequence.terms[MIN_ORDER:])
    return ResidualSequence(terms=tuple(sorted(rest, reverse=True)))


def condition4_cut_defect(n: int, k: int, i: int) -> int:
    """Edges the cut X={x,y} must carry minus what Y can absorb; always 2."""
    return ((n - k - 3) + (k + i - 3)) - (2 * (i - 3) + (n - i - 2))


def lift_realization(sequence: DegreeSequence, residual_graph: SimpleGraph) -> SimpleGraph:
    """Turn a realization of the laid-off residual into one of `sequence`.

    Stripped zeros come back as isolated vertices and the laid-off vertex joins
    one vertex per decremented value. The result is relabelled so vertex v has
    degree d_{v+1}; every subgraph of `residual_graph` survives.
    """
    result = lay_off(sequence)
    degrees = list(residual_graph.degrees)
    if tuple(sorted(degrees, reverse=True)) != result.residual.terms:
        raise InvalidDataException(
            message="Graph does not realize the laid-off residual",
            details={
                "residual": list(result.residual.terms),
                "degrees": sorted(degrees, reverse=True),
            },
        )

    decremented = sequence.terms[: result.laid_off]
    revived = sum(1 for term in decremented if term == 1)
    base = residual_graph.vertex_count
    degrees.extend([0] * revived)
    new_vertex = base + revived

    by_degree: dict[int, list[int]] = defaultdict(list)
    for v, degree in enumerate(degrees):
        by_degree[degree].append(v)

    edges = list(residual_graph.edges)
    for term in decremented:
        partner = by_degree[term - 1].pop(0)
        edges.append((partner, new_vertex))
        degrees[partner] += 1
    degrees.append(result.laid_off)

    order = sorted(range(new_vertex + 1), key=lambda v: (-degrees[v], v))
    relabel = {old: new for new, old in enumerate(order)}
    return SimpleGraph(
        vertex_count=new_vertex + 1,
        edges=[(relabel[u], relabel[v]) for u, v in edges],
    )


def contains_pattern(graph: SimpleGraph, pattern: TargetPattern) -> bool:
    return search_embedding(graph.adjacency, pattern) is not None
