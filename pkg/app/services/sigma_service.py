import logging

from app.repositories.patterns_repository import fetch_pattern
from app.schemas.graphs import TargetPattern
from app.schemas.sequences import DegreeSequence
from app.schemas.verdicts import ConditionId, DeciderMethod, EnumerationBudget, SigmaResult
from app.services.characterize_service import MIN_ORDER, check_pattern
from app.services.oracle_service import (
    fan_out,
    iter_graphic_sequences,
    oracle_potentially,
    require_within_ceiling,
    resolve_budget,
)
from app.utils.exception_handlers import ConstructionDefect, OutOfScopeError

logger = logging.getLogger(__name__)


def lower_bound_witness(pattern: TargetPattern, n: int) -> DegreeSequence:
    """((n-1)^2, 2^(n-2)): sum 4n-6 and not potentially graphic for either shipped pattern."""
    if n < MIN_ORDER:
        raise OutOfScopeError(n, MIN_ORDER)
    return DegreeSequence(terms=(n - 1, n - 1) + (2,) * (n - 2))


# Upper bounds on sigma for graphic sequences failing a degree condition.
_SUM_BOUNDS = {
    ConditionId.P4_1: lambda n: 3 * n - 3,
    ConditionId.P4_2: lambda n: 2 * n + 4,
    ConditionId.Y4_1: lambda n: 4 * n - 6,
    ConditionId.Y4_2: lambda n: 2 * n,
}


def sum_bound_for_violation(condition: ConditionId, n: int) -> int | None:
    bound = _SUM_BOUNDS.get(condition)
    return bound(n) if bound is not None else None


def _decide(
    job: tuple[str, DeciderMethod, DegreeSequence, int | None],
) -> tuple[DegreeSequence, bool]:
    pattern_name, method, sequence, max_nodes = job
    pattern = fetch_pattern(pattern_name)
    if method is DeciderMethod.ORACLE:
        return sequence, oracle_potentially(
            sequence, pattern, EnumerationBudget(max_nodes=max_nodes)
        )
    return sequence, check_pattern(pattern, sequence).is_yes


def compute_sigma(
    pattern: TargetPattern | str,
    n: int,
    method: DeciderMethod = DeciderMethod.PREDICATE,
    budget: EnumerationBudget | None = None,
    workers: int | None = None,
) -> SigmaResult:
    """Smallest even sum forcing the pattern: (largest NO sum) + 2, with its witness.

    Ties on the sum go to the lexicographically largest sequence.
    """
    target = pattern if isinstance(pattern, TargetPattern) else fetch_pattern(pattern)
    if n < MIN_ORDER:
        raise OutOfScopeError(n, MIN_ORDER)
    if method is DeciderMethod.ORACLE:
        require_within_ceiling(n)
    max_nodes = resolve_budget(budget).max_nodes

    best: DegreeSequence | None = None
    scanned = 0
    jobs = (
        (target.name, method, sequence, max_nodes)
        for sequence in iter_graphic_sequences(n)
    )
    for sequence, potentially in fan_out(_decide, jobs, workers):
        scanned += 1
        if potentially:
            continue
        if best is None or (sequence.sigma, sequence.terms) > (best.sigma, best.terms):
            best = sequence

    if best is None:
        raise ConstructionDefect(
            "Every graphic sequence was potentially graphic; no witness exists",
            details={"pattern": target.name, "n": n},
        )

    logger.info(
        "sigma(%s, %d) = %d via %s over %d sequences",
        target.name,
        n,
        best.sigma + 2,
        method.value,
        scanned,
    )
    return SigmaResult(
        n=n,
        pattern=target.name,
        method=method,
        sigma_value=best.sigma + 2,
        extremal_witness=best,
        sequences_scanned=scanned,
    )
