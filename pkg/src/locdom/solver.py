"""Exact X-numbers by branch-and-bound, plus a brute-force oracle.

Every code kind is a hitting-set problem over vertex bitmasks: domination
asks that each (open or closed) neighborhood meet ``C``; separating a pair
``a, b`` asks that ``C`` meet the symmetric difference of their
neighborhoods, or, for LD/LTD, contain ``a`` or ``b`` itself.  A kind is
inadmissible exactly when one of these requirement masks is empty.

The search runs in two phases.  The first finds the optimum value by
branching on the members of the most constrained unhit requirement, pruned
by a disjoint-packing lower bound.  The second walks vertices in index
order, "in" before "out", to pick the lexicographically smallest optimal
set, which is the same set :func:`gamma_oracle` returns.
"""

from __future__ import annotations

import logging
import math
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

from .codes import CodeKind, admits_old, is_code
from .graph import Graph, mask_to_set

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
ORACLE_MAX_N = 16

OPTIMAL = "optimal"
INADMISSIBLE = "inadmissible"
BUDGET = "budget"


class BudgetExhausted(RuntimeError):
    pass


@dataclass
class SolveResult:
    kind: CodeKind
    status: str
    value: Optional[int] = None
    witness: Optional[frozenset[int]] = None
    nodes_explored: int = 0
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == OPTIMAL

    @property
    def cell(self) -> Union[int, str]:
        """The value, or the status marker when there is none."""
        return self.value if self.status == OPTIMAL else self.status

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.name,
            "value": self.cell,
            "witness": sorted(self.witness) if self.witness is not None else None,
            "nodes": self.nodes_explored,
            "wall_time": round(self.wall_time, 6),
        }


def requirement_masks(G: Graph, kind: Union[CodeKind, str]) -> Optional[list[int]]:
    """Inclusion-minimal requirement masks, or None when some mask is empty."""
    kind = CodeKind.parse(kind)
    opens, closeds = G.open_masks, G.closed_masks
    reqs = list(opens if kind.total else closeds)
    if kind in (CodeKind.LD, CodeKind.LTD):
        for a, b in combinations(range(G.n), 2):
            reqs.append((1 << a) | (1 << b) | (closeds[a] ^ closeds[b]))
    elif kind is CodeKind.OLD:
        for a, b in combinations(range(G.n), 2):
            reqs.append(opens[a] ^ opens[b])
    if any(r == 0 for r in reqs):
        return None
    return _minimal(reqs)


def _minimal(reqs: list[int]) -> list[int]:
    kept: list[int] = []
    for r in sorted(set(reqs), key=lambda m: (m.bit_count(), m)):
        if not any(k & ~r == 0 for k in kept):
            kept.append(r)
    return kept


def _packing(reqs: list[int]) -> int:
    used = 0
    count = 0
    for q in reqs:
        if not q & used:
            used |= q
            count += 1
    return count


def _greedy(n: int, reqs: list[int]) -> int:
    chosen = 0
    pending = list(reqs)
    while pending:
        best_v, best_hits = -1, -1
        for v in range(n):
            bit = 1 << v
            hits = sum(1 for q in pending if q & bit)
            if hits > best_hits:
                best_v, best_hits = v, hits
        bit = 1 << best_v
        chosen |= bit
        pending = [q for q in pending if not q & bit]
    return chosen


class _Search:
    """Hitting-set branch-and-bound over ``n`` elements."""

    def __init__(self, n: int, reqs: list[int], budget: int, deadline: Optional[float],
                 shared=None) -> None:
        self.n = n
        self.reqs = reqs
        self.budget = budget
        self.deadline = deadline
        self.nodes = 0
        self.best = n + 1
        self.best_set: Optional[int] = None
        self.floor = 0
        self.shared = shared

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(f"node budget {self.budget} exhausted")
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExhausted("time limit exceeded")
        if self.shared is not None and self.shared.value < self.best:
            self.best = self.shared.value

    def _improve(self, size: int, chosen: int) -> None:
        self.best = size
        self.best_set = chosen
        if self.shared is not None:
            with self.shared.get_lock():
                if size < self.shared.value:
                    self.shared.value = size

    # phase one: optimum value
    def minimize(self, lower: int) -> None:
        seed = _greedy(self.n, self.reqs)
        self._improve(seed.bit_count(), seed)
        self.floor = max(lower, _packing(self.reqs))
        if self.best > self.floor:
            self._branch(0, 0, self.reqs)

    def root_children(self) -> list[tuple[int, list[int]]]:
        """Disjoint sub-problems (chosen mask, remaining requirements) at the root."""
        pivot = min(self.reqs, key=int.bit_count)
        children = []
        tried = 0
        for v in _bits(pivot):
            bit = 1 << v
            rest = _restrict(self.reqs, bit, tried)
            if rest is not None:
                children.append((bit, rest))
            tried |= bit
        return children

    def _branch(self, chosen: int, size: int, reqs: list[int]) -> None:
        self._tick()
        if not reqs:
            if size < self.best:
                self._improve(size, chosen)
            return
        if size + _packing(reqs) >= self.best:
            return
        pivot = min(reqs, key=int.bit_count)
        tried = 0
        for v in _bits(pivot):
            bit = 1 << v
            rest = _restrict(reqs, bit, tried)
            if rest is not None:
                self._branch(chosen | bit, size + 1, rest)
                if self.best <= self.floor:
                    return
            tried |= bit

    # phase two: lexicographically smallest set of a given size
    def lexmin(self, k: int) -> Optional[int]:
        return self._lex(0, 0, 0, self.reqs, k)

    def _lex(self, p: int, chosen: int, size: int, reqs: list[int], k: int) -> Optional[int]:
        self._tick()
        if not reqs:
            return chosen
        if p == self.n or size + _packing(reqs) > k:
            return None
        bit = 1 << p
        if size < k:
            found = self._lex(p + 1, chosen | bit, size + 1, [q for q in reqs if not q & bit], k)
            if found is not None:
                return found
        rest = []
        for q in reqs:
            q &= ~bit
            if not q:
                return None
            rest.append(q)
        return self._lex(p + 1, chosen, size, rest, k)


def _bits(mask: int):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def _restrict(reqs: list[int], bit: int, excluded: int) -> Optional[list[int]]:
    """Requirements left after choosing ``bit`` with ``excluded`` ruled out."""
    out = []
    keep = ~excluded
    for q in reqs:
        if q & bit:
            continue
        q &= keep
        if not q:
            return None
        out.append(q)
    return out


# -- parallel phase one -------------------------------------------------------

_worker_shared = None


def _init_worker(shared) -> None:
    global _worker_shared
    _worker_shared = shared


def _solve_child(n: int, chosen: int, reqs: list[int], floor: int, budget: int,
                 deadline: Optional[float]) -> tuple[int, Optional[int], int, bool]:
    search = _Search(n, reqs, budget, deadline, shared=_worker_shared)
    search.best = _worker_shared.value
    search.floor = floor
    try:
        search._branch(chosen, 1, reqs)
    except BudgetExhausted:
        return search.best, search.best_set, search.nodes, True
    return search.best, search.best_set, search.nodes, False


def _minimize_parallel(search: _Search, lower: int, workers: int) -> None:
    seed = _greedy(search.n, search.reqs)
    search._improve(seed.bit_count(), seed)
    search.floor = max(lower, _packing(search.reqs))
    if search.best <= search.floor:
        return
    shared = multiprocessing.Value("i", search.best)
    exhausted = False
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                             initargs=(shared,)) as pool:
        futures = [
            pool.submit(_solve_child, search.n, chosen, rest, search.floor,
                        search.budget, search.deadline)
            for chosen, rest in search.root_children()
        ]
        for fut in futures:
            best, best_set, nodes, hit = fut.result()
            search.nodes += nodes
            exhausted |= hit
            if best_set is not None and best < search.best:
                search.best, search.best_set = best, best_set
    if exhausted:
        raise BudgetExhausted("node budget exhausted in a worker")


# -- public API ---------------------------------------------------------------

def gamma(G: Graph, kind: Union[CodeKind, str], *, budget: int = DEFAULT_BUDGET,
          time_limit: Optional[float] = None, workers: int = 1) -> SolveResult:
    """Minimum size of a ``kind``-set of ``G`` with one optimal witness.

    With ``workers == 1`` the witness is the lexicographically smallest
    optimal set.  With more workers only the value is deterministic.
    Running out of ``budget`` nodes or ``time_limit`` seconds yields
    ``status == "budget"`` rather than an exception.
    """
    kind = CodeKind.parse(kind)
    start = time.monotonic()
    reqs = requirement_masks(G, kind)
    if reqs is None:
        return SolveResult(kind, INADMISSIBLE, wall_time=time.monotonic() - start)

    lower = 0
    if kind is CodeKind.OLD and G.regular_degree() is not None and G.n > 0:
        lower = math.ceil(regular_old_lower_bound(G))

    deadline = start + time_limit if time_limit is not None else None
    search = _Search(G.n, reqs, budget, deadline)
    try:
        if workers > 1 and reqs:
            _minimize_parallel(search, lower, workers)
            witness = search.best_set
        else:
            search.minimize(lower)
            witness = search.lexmin(search.best)
    except BudgetExhausted as exc:
        log.info("gamma(%r, %s): %s", G, kind.name, exc)
        return SolveResult(kind, BUDGET, nodes_explored=search.nodes,
                           wall_time=time.monotonic() - start)
    if witness is None:  # pragma: no cover - phase two always succeeds at the optimum
        raise AssertionError("no witness at the optimal size")
    return SolveResult(kind, OPTIMAL, search.best, mask_to_set(witness),
                       search.nodes, time.monotonic() - start)


def gamma_oracle(G: Graph, kind: Union[CodeKind, str], *, max_n: int = ORACLE_MAX_N) -> SolveResult:
    """Enumerate subsets by size, then lexicographically, and test each one."""
    kind = CodeKind.parse(kind)
    if G.n > max_n:
        raise ValueError(f"oracle ceiling is {max_n} vertices, graph has {G.n}")
    start = time.monotonic()
    tried = 0
    for k in range(G.n + 1):
        for combo in combinations(range(G.n), k):
            tried += 1
            if is_code(G, combo, kind).ok:
                return SolveResult(kind, OPTIMAL, k, frozenset(combo), tried,
                                   time.monotonic() - start)
    return SolveResult(kind, INADMISSIBLE, nodes_explored=tried,
                       wall_time=time.monotonic() - start)


def min_vertex_cover(G: Graph, *, budget: int = DEFAULT_BUDGET) -> frozenset[int]:
    """Lexicographically smallest minimum vertex cover."""
    reqs = _minimal([(1 << a) | (1 << b) for a, b in G.edges()])
    if not reqs:
        return frozenset()
    search = _Search(G.n, reqs, budget, None)
    search.minimize(0)
    return mask_to_set(search.lexmin(search.best))


def regular_old_lower_bound(G: Graph) -> Fraction:
    """``2n / (1 + r)`` for an ``r``-regular graph admitting an OLD-set."""
    r = G.regular_degree()
    if r is None:
        raise ValueError(f"{G!r} is not regular")
    if not admits_old(G):
        raise ValueError(f"{G!r} does not admit an OLD-set")
    return Fraction(2 * G.n, 1 + r)


def optimal_sets(G: Graph, kind: Union[CodeKind, str], size: int):
    """Yield every ``kind``-set of ``G`` with exactly ``size`` vertices, in lex order."""
    reqs = requirement_masks(G, kind)
    if reqs is None:
        return
    for combo in combinations(range(G.n), size):
        m = 0
        for v in combo:
            m |= 1 << v
        if all(m & r for r in reqs):
            yield frozenset(combo)
