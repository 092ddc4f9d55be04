"""Predicates for dominating, total-dominating, LD, LTD and OLD sets.

These are written directly on neighborhood sets, deliberately without the
bitmask machinery of the solver, so they can serve as its referee.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Union

from .graph import Graph, closed_neighborhood, false_twin_pairs, vertex_set


class CodeKind(enum.Enum):
    DOM = "DOM"
    TDOM = "TDOM"
    LD = "LD"
    LTD = "LTD"
    OLD = "OLD"

    @classmethod
    def parse(cls, text: Union[str, "CodeKind"]) -> "CodeKind":
        if isinstance(text, cls):
            return text
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown code kind {text!r}; choose from {[k.name for k in cls]}") from None

    @property
    def total(self) -> bool:
        """Whether domination is by open neighborhoods."""
        return self in (CodeKind.TDOM, CodeKind.LTD, CodeKind.OLD)

    @property
    def locating(self) -> bool:
        return self in (CodeKind.LD, CodeKind.LTD, CodeKind.OLD)


UNDOMINATED = "undominated"
UNSEPARATED = "unseparated"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    # (vertex, "undominated") or ((a, b), "unseparated")
    failure: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok

    def __post_init__(self) -> None:
        if self.ok != (self.failure is None):
            raise ValueError("ok must be True exactly when no failure is given")


OK = Verdict(True)


def _domination(G: Graph, C: frozenset[int], total: bool) -> Verdict:
    for v in G.vertices:
        nbhd = G.adj[v] if total else closed_neighborhood(G, v)
        if not nbhd & C:
            return Verdict(False, (v, UNDOMINATED))
    return OK


def is_dominating(G: Graph, C: Iterable[int]) -> Verdict:
    return _domination(G, vertex_set(G, C), total=False)


def is_total_dominating(G: Graph, C: Iterable[int]) -> Verdict:
    return _domination(G, vertex_set(G, C), total=True)


def separates(G: Graph, C: Iterable[int], a: int, b: int) -> bool:
    if a == b:
        raise ValueError("a vertex cannot be separated from itself")
    C = vertex_set(G, C)
    return closed_neighborhood(G, a) & C != closed_neighborhood(G, b) & C


def total_separates(G: Graph, C: Iterable[int], a: int, b: int) -> bool:
    if a == b:
        raise ValueError("a vertex cannot be separated from itself")
    C = vertex_set(G, C)
    return G.adj[a] & C != G.adj[b] & C


def is_code(G: Graph, C: Iterable[int], kind: Union[CodeKind, str]) -> Verdict:
    """Check ``C`` against ``kind``; the failure names the lowest violation.

    Domination is checked before separation.  LD and LTD only require pairs
    outside ``C`` to be separated; OLD requires every pair of vertices to be
    total-separated.
    """
    kind = CodeKind.parse(kind)
    C = vertex_set(G, C)
    verdict = _domination(G, C, kind.total)
    if not verdict.ok or not kind.locating:
        return verdict

    if kind is CodeKind.OLD:
        pool = list(G.vertices)
        for a, b in combinations(pool, 2):
            if G.adj[a] & C == G.adj[b] & C:
                return Verdict(False, ((a, b), UNSEPARATED))
        return OK

    pool = [v for v in G.vertices if v not in C]
    for a, b in combinations(pool, 2):
        if closed_neighborhood(G, a) & C == closed_neighborhood(G, b) & C:
            return Verdict(False, ((a, b), UNSEPARATED))
    return OK


def admits_old(G: Graph) -> bool:
    return not G.has_isolated_vertex() and not false_twin_pairs(G)
