from functools import cached_property
from typing import Iterable

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.utils.exception_handlers import InvalidDataException

Edge = tuple[int, int]


def _normalize_edges(edges: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
    normalized: set[Edge] = set()
    for edge in edges:
        u, v = tuple(edge)
        if u == v:
            raise InvalidDataException(
                message="Simple graphs have no self-loops", details={"edge": [u, v]}
            )
        pair = (u, v) if u < v else (v, u)
        if pair in normalized:
            raise InvalidDataException(
                message="Simple graphs have no parallel edges", details={"edge": list(pair)}
            )
        normalized.add(pair)
    return tuple(sorted(normalized))


class SimpleGraph(BaseModel):
    """Finite simple graph on vertices 0..vertex_count-1; edges stored as sorted (u, v), u < v."""

    model_config = ConfigDict(frozen=True)

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    @field_validator("vertex_count")
    @classmethod
    def validate_vertex_count(cls, value: int) -> int:
        if value < 0:
            raise InvalidDataException(
                message="Vertex count cannot be negative", details={"field": "vertex_count"}
            )
        return value

    @field_validator("edges", mode="before")
    @classmethod
    def validate_edges(cls, value: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
        return _normalize_edges(value)

    @model_validator(mode="after")
    def validate_endpoints(self) -> "SimpleGraph":
        for u, v in self.edges:
            if u < 0 or v >= self.vertex_count:
                raise InvalidDataException(
                    message="Edge endpoint outside the vertex range",
                    details={"edge": [u, v], "vertex_count": self.vertex_count},
                )
        return self

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbours: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(items) for items in neighbours)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(items) for items in self.adjacency)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set


class TargetPattern(BaseModel):
    """A fixed pattern on the labeled vertices 0..4."""

    model_config = ConfigDict(frozen=True)

    name: str
    edges: tuple[Edge, ...]
    removed: tuple[Edge, ...] = ()

    @field_validator("edges", mode="before")
    @classmethod
    def validate_edges(cls, value: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
        edges = _normalize_edges(value)
        if any(v > 4 for _, v in edges) or any(u < 0 for u, _ in edges):
            raise InvalidDataException(
                message="Pattern vertices must lie in 0..4", details={"field": "edges"}
            )
        return edges

    @property
    def vertex_count(self) -> int:
        return 5

    @cached_property
    def graph(self) -> SimpleGraph:
        return SimpleGraph(vertex_count=5, edges=self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        """Per-vertex degree, indexed by pattern vertex."""
        return self.graph.degrees

    @property
    def degree_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees, reverse=True))


class Embedding(BaseModel):
    """Injective map: pattern vertex p goes to host vertex mapping[p]."""

    model_config = ConfigDict(frozen=True)

    mapping: tuple[int, ...]

    @field_validator("mapping")
    @classmethod
    def validate_mapping(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if len(value) != 5:
            raise InvalidDataException(
                message="Embeddings map exactly five pattern vertices",
                details={"field": "mapping", "length": len(value)},
            )
        if len(set(value)) != len(value):
            raise InvalidDataException(
                message="Embedding must be injective", details={"field": "mapping"}
            )
        if any(v < 0 for v in value):
            raise InvalidDataException(
                message="Host vertices are non-negative", details={"field": "mapping"}
            )
        return value

    def image(self, pattern: TargetPattern) -> frozenset[Edge]:
        """Host edges covered by the pattern under this map."""
        covered = set()
        for a, b in pattern.edges:
            u, v = self.mapping[a], self.mapping[b]
            covered.add((u, v) if u < v else (v, u))
        return frozenset(covered)
