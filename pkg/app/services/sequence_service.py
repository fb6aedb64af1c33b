import logging
import re

from app.schemas.sequences import DegreeSequence, FamilyMatch, MatchFamily
from app.utils.exception_handlers import SequenceParseError
from app.utils.settings import get_settings

logger = logging.getLogger(__name__)

_SEPARATORS = re.compile(r"[,\s]+")
_ITEM = re.compile(r"^([+-]?\d+)(?:\^([+-]?\d+))?$")


def parse_sequence(text: str) -> DegreeSequence:
    """Parse `r` / `r^t` items separated by commas or whitespace into canonical order."""
    tokens = [token for token in _SEPARATORS.split(text or "") if token]
    if not tokens:
        raise SequenceParseError(
            message="Degree sequence is empty", code="empty_sequence", token=text
        )

    max_terms = get_settings().max_terms
    terms: list[int] = []
    for token in tokens:
        match = _ITEM.match(token)
        if match is None:
            raise SequenceParseError(
                message=f"Malformed sequence item {token!r}",
                code="malformed_item",
                token=token,
            )
        value = int(match.group(1))
        repeat = int(match.group(2)) if match.group(2) is not None else 1
        if value < 1:
            raise SequenceParseError(
                message=f"Degree must be positive in item {token!r}",
                code="non_positive_degree",
                token=token,
            )
        if repeat < 1:
            raise SequenceParseError(
                message=f"Repeat count must be positive in item {token!r}",
                code="non_positive_repeat",
                token=token,
            )
        if len(terms) + repeat > max_terms:
            raise SequenceParseError(
                message=f"Sequence would exceed {max_terms} terms at item {token!r}",
                code="too_many_terms",
                token=token,
            )
        terms.extend([value] * repeat)

    return DegreeSequence.of(terms)


def format_sequence(sequence: DegreeSequence) -> str:
    return ",".join(
        f"{value}^{repeat}" if repeat > 1 else str(value)
        for value, repeat in sequence.runs()
    )


def sigma(sequence: DegreeSequence) -> int:
    return sequence.sigma


def m_of(sequence: DegreeSequence) -> int:
    """Largest term m(pi)."""
    _require_nonempty(sequence)
    return sequence.terms[0]


def h_of(sequence: DegreeSequence) -> int:
    """Smallest term h(pi)."""
    _require_nonempty(sequence)
    return sequence.terms[-1]


def _require_nonempty(sequence: DegreeSequence) -> None:
    if sequence.is_empty:
        raise SequenceParseError(
            message="Sequence has no terms", code="empty_sequence", token=""
        )


def _split_twos_and_ones(tail: tuple[int, ...]) -> tuple[int, int] | None:
    """Return (#2s, #1s) when tail is exactly 2^a,1^b, else None."""
    twos = tail.count(2)
    ones = tail.count(1)
    if twos + ones != len(tail):
        return None
    return twos, ones


def condition3_template(n: int, k: int, t: int) -> DegreeSequence:
    return DegreeSequence.of([n - 1, k] + [2] * t + [1] * (n - 2 - t))


def condition4_template(n: int, k: int, i: int) -> DegreeSequence:
    return DegreeSequence.of([n - k, k + i] + [2] * i + [1] * (n - i - 2))


def match_condition3(sequence: DegreeSequence) -> FamilyMatch | None:
    """(n-1, k, 2^t, 1^(n-2-t)) with 3 <= k, t <= n-2 and k, t of different parity."""
    n = sequence.n
    if n < 5 or sequence.terms[0] != n - 1:
        return None

    k = sequence.terms[1]
    split = _split_twos_and_ones(sequence.terms[2:])
    if split is None:
        return None
    t, _ = split

    if not (3 <= k <= n - 2 and 3 <= t <= n - 2):
        return None
    if (k - t) % 2 == 0:
        return None
    return FamilyMatch(family=MatchFamily.COND3, n=n, k=k, t=t)


def match_condition4(sequence: DegreeSequence) -> FamilyMatch | None:
    """(n-k, k+i, 2^i, 1^(n-i-2)) with 1 <= k <= [(n-1)/2]-1 and 3 <= i <= n-2k.

    Inside the admissible range n-k >= k+i, so the two leading terms pin k and i.
    """
    n = sequence.n
    if n < 5:
        return None

    k = n - sequence.terms[0]
    i = sequence.terms[1] - k
    if not (1 <= k <= (n - 1) // 2 - 1):
        return None
    if not (3 <= i <= n - 2 * k):
        return None

    split = _split_twos_and_ones(sequence.terms[2:])
    if split is None or split != (i, n - i - 2):
        return None
    return FamilyMatch(family=MatchFamily.COND4, n=n, k=k, i=i)
