from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.schemas.sequences import DegreeSequence, FamilyMatch
from app.utils.exception_handlers import InvalidDataException


class Decision(str, Enum):
    YES = "YES"
    NO = "NO"


class ConditionId(str, Enum):
    P4_1 = "P4-1"
    P4_2 = "P4-2"
    P4_3 = "P4-3"
    P4_4 = "P4-4"
    P4_5 = "P4-5"
    Y4_1 = "Y4-1"
    Y4_2 = "Y4-2"
    Y4_3 = "Y4-3"

    def __str__(self) -> str:
        return self.value


FAMILY_CONDITIONS = frozenset({ConditionId.P4_3, ConditionId.P4_4})


class PatternName(str, Enum):
    K5_P4 = "k5-p4"
    K5_Y4 = "k5-y4"


class OutputMode(str, Enum):
    HUMAN = "human"
    MACHINE = "machine"


class DeciderMethod(str, Enum):
    PREDICATE = "predicate"
    ORACLE = "oracle"


class Verdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    pattern: str
    sequence: DegreeSequence
    decision: Decision
    violated_condition: ConditionId | None = None
    family_match: FamilyMatch | None = None

    @model_validator(mode="after")
    def validate_consistency(self) -> "Verdict":
        if self.decision is Decision.NO and self.violated_condition is None:
            raise InvalidDataException(
                message="A NO verdict must name the violated condition",
                details={"pattern": self.pattern},
            )
        if self.decision is Decision.YES and self.violated_condition is not None:
            raise InvalidDataException(
                message="A YES verdict cannot name a violated condition",
                details={"pattern": self.pattern},
            )
        if self.violated_condition in FAMILY_CONDITIONS:
            if self.family_match is None or self.family_match.template() != self.sequence:
                raise InvalidDataException(
                    message="Family conditions need a witness that rebuilds the sequence",
                    details={"condition": str(self.violated_condition)},
                )
        return self

    @property
    def is_yes(self) -> bool:
        return self.decision is Decision.YES

    @classmethod
    def yes(cls, pattern: str, sequence: DegreeSequence) -> "Verdict":
        return cls(pattern=pattern, sequence=sequence, decision=Decision.YES)

    @classmethod
    def no(
        cls,
        pattern: str,
        sequence: DegreeSequence,
        condition: ConditionId,
        family_match: FamilyMatch | None = None,
    ) -> "Verdict":
        return cls(
            pattern=pattern,
            sequence=sequence,
            decision=Decision.NO,
            violated_condition=condition,
            family_match=family_match,
        )


class EnumerationBudget(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_nodes: int | None = Field(None, ge=1)
    short_circuit: bool = True


class SigmaResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    pattern: str
    method: DeciderMethod
    sigma_value: int
    extremal_witness: DegreeSequence
    sequences_scanned: int = 0

    @model_validator(mode="after")
    def validate_sigma(self) -> "SigmaResult":
        if self.sigma_value % 2:
            raise InvalidDataException(
                message="Sigma values are even", details={"sigma_value": self.sigma_value}
            )
        if self.sigma_value != self.extremal_witness.sigma + 2:
            raise InvalidDataException(
                message="Sigma value must exceed the witness sum by two",
                details={"sigma_value": self.sigma_value},
            )
        return self


class GraphicalityReport(BaseModel):
    """Outcome of every graphicality decider on one sequence."""

    model_config = ConfigDict(frozen=True)

    sequence: DegreeSequence
    erdos_gallai: bool
    lay_off: bool
    small_degree: bool | None = None

    @property
    def is_graphic(self) -> bool:
        return self.erdos_gallai


class Mismatch(BaseModel):
    model_config = ConfigDict(frozen=True)

    sequence: DegreeSequence
    predicate: Decision
    oracle: Decision


class CrosscheckReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    pattern: str
    n: int
    tested: int = 0
    yes: int = 0
    no: int = 0
    unknown: int = 0
    mismatches: tuple[Mismatch, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.mismatches
