# graph_covers/tools/stronger/evidence.py

"""
Evidence records for the "stronger than" relation and the poset report.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from ...constants import DOT_COVER_COLOR, DOT_STRONGER_COLOR
from ...core.multigraph import Multigraph
from ...core.mg_format import serialize_mg
from ..covers.projection import CoverProjection, fold_count, projection_certificate


class Verdict(Enum):
    STRONGER_BY_COVER = "stronger-by-cover"
    STRONGER_BY_SEMICOVER = "stronger-by-semicover"
    STRONGER_BY_THEOREM = "stronger-by-theorem"
    NOT_STRONGER_BY_DIVISIBILITY = "not-stronger-by-divisibility"
    NOT_STRONGER_BY_WITNESS = "not-stronger-by-witness"
    UNKNOWN = "unknown"

    @property
    def is_stronger(self) -> bool:
        return self.value.startswith("stronger")

    @property
    def is_not_stronger(self) -> bool:
        return self.value.startswith("not-stronger")


@dataclass(frozen=True)
class RefutationRecord:
    """
    Why a witness W does not cover B.

    ``method`` is one of:
        "exhaustive": find_cover(W, B) found nothing
        "perfect-matching": W has no perfect matching, so W does not cover F(1,1)
        "edge-coloring": W is not 3-edge-colorable, so W does not cover F(3,0)

    When ``intermediate`` is set, the method refutes W -> C and
    ``intermediate_projection`` certifies B -> C; a cover W -> B would
    compose into W -> C.
    """
    method: str
    intermediate: Optional[str] = None
    intermediate_projection: Optional[CoverProjection] = None

    def describe(self) -> str:
        if self.intermediate is None:
            return f"{self.method} search finds no cover of B"
        return f"B covers {self.intermediate} and the witness does not ({self.method})"


@dataclass(frozen=True)
class StrongerEvidence:
    """
    Verdict for A |> B with its certificate.

    Only the fields relevant to the verdict are set:
        projection: the A -> B (semi)cover for the two Stronger-by-cover verdicts
        theorem: a tag naming the deciding result for STRONGER_BY_THEOREM
        sizes: (|V(A)|, |V(B)|) for NOT_STRONGER_BY_DIVISIBILITY
        witness: a simple graph W with ``witness_projection`` W -> A and ``refutation``
        budget: the vertex budget used when the verdict is UNKNOWN
    """
    verdict: Verdict
    projection: Optional[CoverProjection] = None
    theorem: Optional[str] = None
    sizes: Optional[tuple] = None
    witness: Optional[Multigraph] = None
    witness_projection: Optional[CoverProjection] = None
    refutation: Optional[RefutationRecord] = None
    witness_source: Optional[str] = None
    budget: Optional[int] = None

    @property
    def is_stronger(self) -> bool:
        return self.verdict.is_stronger

    @property
    def is_not_stronger(self) -> bool:
        return self.verdict.is_not_stronger

    def summary(self) -> str:
        v = self.verdict
        if v is Verdict.STRONGER_BY_COVER:
            return f"A covers B ({fold_count(self.projection)}-fold)"
        if v is Verdict.STRONGER_BY_SEMICOVER:
            return "A semi-covers B"
        if v is Verdict.STRONGER_BY_THEOREM:
            return f"stronger by {self.theorem}"
        if v is Verdict.NOT_STRONGER_BY_DIVISIBILITY:
            return f"|V(B)|={self.sizes[1]} fails the divisibility condition for |V(A)|={self.sizes[0]}"
        if v is Verdict.NOT_STRONGER_BY_WITNESS:
            return (f"witness {self.witness_source} with {self.witness.vertex_count} vertices covers A; "
                    f"{self.refutation.describe()}")
        return f"unknown within a budget of {self.budget} vertices"

    def to_dict(self) -> dict:
        data = {"verdict": self.verdict.value, "summary": self.summary()}
        if self.projection is not None:
            data["certificate"] = projection_certificate(self.projection)
        if self.theorem is not None:
            data["theorem"] = self.theorem
        if self.sizes is not None:
            data["sizes"] = list(self.sizes)
        if self.witness is not None:
            data["witness"] = {
                "source": self.witness_source,
                "graph": serialize_mg(self.witness),
                "certificate": projection_certificate(self.witness_projection),
                "refutation": self.refutation.method,
                "intermediate": self.refutation.intermediate,
            }
        if self.budget is not None:
            data["budget"] = self.budget
        return data


def transitive_closure(matrix: list) -> list:
    """Warshall closure of a boolean matrix."""
    n = len(matrix)
    closed = [row[:] for row in matrix]
    for k in range(n):
        for i in range(n):
            if closed[i][k]:
                for j in range(n):
                    if closed[k][j]:
                        closed[i][j] = True
    return closed


def hasse_edges(matrix: list) -> list:
    """
    Covering pairs (i, j) of a transitive relation: i -> j with no k
    such that i -> k -> j. The diagonal is ignored.
    """
    n = len(matrix)
    edges = []
    for i in range(n):
        for j in range(n):
            if i == j or not matrix[i][j]:
                continue
            if any(k not in (i, j) and matrix[i][k] and matrix[k][j]
                   for k in range(n)):
                continue
            edges.append((i, j))
    return edges


@dataclass
class PosetReport:
    """
    Pairwise cover and stronger relations over a list of named graphs.

    ``covers[i][j]`` is True when graph i covers graph j; ``stronger[i][j]``
    is True, False, or None (unknown). Diagonals are suppressed.
    """
    names: list
    covers: list
    stronger: list
    evidence: dict = field(default_factory=dict)
    budget: Optional[int] = None
    notes: list = field(default_factory=list)

    def _stronger_bool(self) -> list:
        return [[bool(x) for x in row] for row in self.stronger]

    def green_edges(self) -> list:
        return hasse_edges(self.covers)

    def purple_edges(self) -> list:
        """Hasse pairs of the stronger relation that are not also cover pairs."""
        return [(i, j) for i, j in hasse_edges(self._stronger_bool()) if not self.covers[i][j]]

    def unknown_pairs(self) -> list:
        return [(i, j) for i, row in enumerate(self.stronger) for j, x in enumerate(row)
                if i != j and x is None]

    def _closure(self) -> list:
        return transitive_closure([[x is True for x in row] for row in self.stronger])

    def implied_pairs(self) -> list:
        """Unknown pairs that follow from known stronger pairs by transitivity."""
        closed = self._closure()
        return [(i, j) for i, j in self.unknown_pairs() if closed[i][j]]

    def contradictions(self) -> list:
        """Pairs decided not stronger although transitivity forces them."""
        closed = self._closure()
        return [(i, j) for i, row in enumerate(self.stronger) for j, x in enumerate(row)
                if i != j and x is False and closed[i][j]]

    def to_json(self) -> str:
        data = {
            "graphs": self.names,
            "budget": self.budget,
            "covers": [[self.names[j] for j, x in enumerate(row) if x] for row in self.covers],
            "stronger": [[self.names[j] for j, x in enumerate(row) if x] for row in self.stronger],
            "green": [[self.names[i], self.names[j]] for i, j in self.green_edges()],
            "purple": [[self.names[i], self.names[j]] for i, j in self.purple_edges()],
            "unknown": [[self.names[i], self.names[j]] for i, j in self.unknown_pairs()],
            "implied": [[self.names[i], self.names[j]] for i, j in self.implied_pairs()],
            "evidence": {
                f"{self.names[i]} |> {self.names[j]}": ev.to_dict()
                for (i, j), ev in sorted(self.evidence.items())
            },
            "notes": self.notes,
        }
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

    def to_dot(self, name: str = "poset") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, label in enumerate(self.names):
            lines.append(f'  n{i} [label="{label}"];')
        for i, j in self.green_edges():
            lines.append(f"  n{i} -> n{j} [color={DOT_COVER_COLOR}];")
        for i, j in self.purple_edges():
            lines.append(f"  n{i} -> n{j} [color={DOT_STRONGER_COLOR}];")
        lines.append("}")
        return "\n".join(lines) + "\n"
