import logging
from itertools import combinations

from app.schemas.graphs import TargetPattern
from app.utils.exception_handlers import AppError, PatternNotFoundError

logger = logging.getLogger(__name__)

_K5_EDGES = tuple(combinations(range(5), 2))


def _k5_minus(name: str, removed: tuple[tuple[int, int], ...]) -> TargetPattern:
    kept = [edge for edge in _K5_EDGES if edge not in set(removed)]
    return TargetPattern(name=name, edges=kept, removed=removed)


# P4 is the path 0-1-2-3-4 (four edges).
K5_MINUS_P4 = _k5_minus("k5-p4", ((0, 1), (1, 2), (2, 3), (3, 4)))

# Y4: centre 1 with leaves 0 and 2, plus the arm 1-3-4.
K5_MINUS_Y4 = _k5_minus("k5-y4", ((0, 1), (1, 2), (1, 3), (3, 4)))

_REGISTRY: dict[str, TargetPattern] = {
    K5_MINUS_P4.name: K5_MINUS_P4,
    K5_MINUS_Y4.name: K5_MINUS_Y4,
}

_EXPECTED_SHAPES: dict[str, tuple[int, tuple[int, ...]]] = {
    K5_MINUS_P4.name: (6, (3, 3, 2, 2, 2)),
    K5_MINUS_Y4.name: (6, (3, 3, 3, 2, 1)),
}


def fetch_pattern(name: str) -> TargetPattern:
    key = getattr(name, "value", name)
    try:
        return _REGISTRY[str(key).lower()]
    except KeyError as exc:
        raise PatternNotFoundError(str(key), list_pattern_names()) from exc


def list_pattern_names() -> list[str]:
    return sorted(_REGISTRY)


def list_patterns() -> list[TargetPattern]:
    return [_REGISTRY[name] for name in list_pattern_names()]


def verify_patterns() -> None:
    """Check every shipped pattern against its expected edge count and profile."""
    for name, (edge_count, profile) in _EXPECTED_SHAPES.items():
        pattern = _REGISTRY[name]
        if len(pattern.edges) != edge_count or pattern.degree_profile != profile:
            logger.error("Pattern %s has unexpected shape %s", name, pattern.degree_profile)
            raise AppError(
                message=f"Pattern {name} failed its sanity check",
                exit_code=3,
                code="pattern_sanity",
                details={
                    "edges": len(pattern.edges),
                    "profile": list(pattern.degree_profile),
                },
            )
    logger.debug("Verified %d patterns", len(_EXPECTED_SHAPES))
