from collections import Counter
from enum import Enum
from typing import Iterable

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.utils.exception_handlers import InvalidDataException


def _check_non_increasing(terms: tuple[int, ...], field_name: str) -> None:
    for idx in range(len(terms) - 1):
        if terms[idx] < terms[idx + 1]:
            raise InvalidDataException(
                message=f"{field_name.title()} must be non-increasing",
                details={"field": field_name, "position": idx + 1},
            )


class DegreeSequence(BaseModel):
    """Non-increasing positive integer sequence; position i (1-based) holds d_i."""

    model_config = ConfigDict(frozen=True)

    terms: tuple[int, ...]

    @field_validator("terms")
    @classmethod
    def validate_terms(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        for term in value:
            if term < 1:
                raise InvalidDataException(
                    message="Degree sequences have no zero or negative terms",
                    details={"field": "terms", "value": term},
                )
        _check_non_increasing(value, "terms")
        return value

    @classmethod
    def of(cls, terms: Iterable[int]) -> "DegreeSequence":
        """Canonicalize any iterable of degrees into a sequence."""
        return cls(terms=tuple(sorted(terms, reverse=True)))

    @property
    def n(self) -> int:
        return len(self.terms)

    @property
    def sigma(self) -> int:
        return sum(self.terms)

    @property
    def is_empty(self) -> bool:
        return not self.terms

    def d(self, index: int) -> int:
        """Return d_index (1-based); 0 past the end so conditions like d_5 >= 2 read naturally."""
        if index < 1:
            raise InvalidDataException(
                message="Sequence positions start at 1", details={"index": index}
            )
        return self.terms[index - 1] if index <= len(self.terms) else 0

    def multiplicity(self, value: int) -> int:
        return self.terms.count(value)

    def runs(self) -> list[tuple[int, int]]:
        """(value, repeat) pairs in non-increasing value order: the r^t groups."""
        counts = Counter(self.terms)
        return [(value, counts[value]) for value in sorted(counts, reverse=True)]

    def __str__(self) -> str:
        return "(" + ",".join(str(term) for term in self.terms) + ")"


class MatchFamily(str, Enum):
    COND3 = "COND3"
    COND4 = "COND4"


class FamilyMatch(BaseModel):
    """Witness that a sequence belongs to one of the two exceptional families."""

    model_config = ConfigDict(frozen=True)

    family: MatchFamily
    n: int
    k: int
    t: int | None = None
    i: int | None = None

    @model_validator(mode="after")
    def validate_parameters(self) -> "FamilyMatch":
        n, k = self.n, self.k
        if self.family is MatchFamily.COND3:
            t = self.t
            if t is None or self.i is not None:
                raise InvalidDataException(
                    message="Condition-3 matches carry (k, t)", details={"family": "COND3"}
                )
            if not (3 <= k <= n - 2 and 3 <= t <= n - 2 and (k - t) % 2 == 1):
                raise InvalidDataException(
                    message="Condition-3 parameters out of range",
                    details={"n": n, "k": k, "t": t},
                )
        else:
            i = self.i
            if i is None or self.t is not None:
                raise InvalidDataException(
                    message="Condition-4 matches carry (k, i)", details={"family": "COND4"}
                )
            if not (1 <= k <= (n - 1) // 2 - 1 and 3 <= i <= n - 2 * k):
                raise InvalidDataException(
                    message="Condition-4 parameters out of range",
                    details={"n": n, "k": k, "i": i},
                )
        return self

    @property
    def parameters(self) -> dict[str, int]:
        if self.family is MatchFamily.COND3:
            return {"k": self.k, "t": self.t}
        return {"k": self.k, "i": self.i}

    def template(self) -> DegreeSequence:
        """Rebuild the family member these parameters describe."""
        n, k = self.n, self.k
        if self.family is MatchFamily.COND3:
            t = self.t
            return DegreeSequence.of([n - 1, k] + [2] * t + [1] * (n - 2 - t))
        i = self.i
        return DegreeSequence.of([n - k, k + i] + [2] * i + [1] * (n - i - 2))


class LayOffResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    residual: DegreeSequence
    reduced_positions: frozenset[int]
    laid_off: int


class ResidualSequence(BaseModel):
    """Non-increasing non-negative terms: what is left after removing a pattern."""

    model_config = ConfigDict(frozen=True)

    terms: tuple[int, ...]

    @field_validator("terms")
    @classmethod
    def validate_terms(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(term < 0 for term in value):
            raise InvalidDataException(
                message="Residual terms cannot be negative", details={"field": "terms"}
            )
        _check_non_increasing(value, "terms")
        return value

    def positive_part(self) -> DegreeSequence:
        return DegreeSequence(terms=tuple(term for term in self.terms if term > 0))
