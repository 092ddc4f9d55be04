"""Witness sets built by hand from the proofs, each checked before returning.

Vertex names in comments use the 1-based ``v_j`` / ``u_j`` / ``u`` notation;
:func:`_v` and :func:`_u` translate to indices under the Mycielski
convention of :mod:`locdom.graph` (``v_j -> j-1``, ``u_j -> n+j-1``,
``u -> 2n``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Union

from .codes import CodeKind, Verdict, admits_old, is_code, is_total_dominating
from .graph import Graph, make_aux_circulant, make_circulant, make_cycle, make_path, mycielski, vertex_set
from .solver import min_vertex_cover


class ConstructionError(RuntimeError):
    def __init__(self, message: str, verdict: Verdict | None = None) -> None:
        self.verdict = verdict
        if verdict is not None and verdict.failure is not None:
            message = f"{message}: {verdict.failure}"
        super().__init__(message)


class InadmissibleError(ConstructionError):
    pass


@dataclass(frozen=True)
class ConstructionOutcome:
    set: frozenset[int]
    claimed_kind: CodeKind
    target: Graph
    validated: bool
    citation: str
    notes: tuple[str, ...] = field(default=())

    @property
    def size(self) -> int:
        return len(self.set)

    def to_dict(self) -> dict:
        return {
            "set": sorted(self.set),
            "size": self.size,
            "kind": self.claimed_kind.name,
            "validated": self.validated,
            "citation": self.citation,
            "notes": list(self.notes),
        }


def _v(j: int) -> int:
    return j - 1


def _u(n: int, j: int) -> int:
    return n + j - 1


def _validated(target: Graph, members: Iterable[int], kind: CodeKind, citation: str,
               notes: Iterable[str] = ()) -> ConstructionOutcome:
    s = vertex_set(target, members)
    verdict = is_code(target, s, kind)
    if not verdict.ok:
        raise ConstructionError(f"{citation}: set {sorted(s)} is not a {kind.name}-set of {target!r}", verdict)
    return ConstructionOutcome(s, kind, target, True, citation, tuple(notes))


def _require(G: Graph, C: frozenset[int], kind: CodeKind, what: str) -> None:
    verdict = is_code(G, C, kind)
    if not verdict.ok:
        raise ConstructionError(f"precondition: {what}", verdict)


def total_dom_lift(G: Graph, C: Iterable[int], i: int) -> ConstructionOutcome:
    """``C + {u_i}``: a total-dominating set of M(G) one larger than ``C``."""
    C = vertex_set(G, C)
    if G.has_isolated_vertex():
        raise ConstructionError("precondition: G has an isolated vertex")
    if not 0 <= i < G.n:
        raise ConstructionError(f"precondition: no vertex {i}")
    verdict = is_total_dominating(G, C)
    if not verdict.ok:
        raise ConstructionError("precondition: C is not total-dominating", verdict)
    M = mycielski(G)
    return _validated(M, C | {M.shadow(i)}, CodeKind.TDOM, "total-domination-plus-one")


def doubling_lift(G: Graph, C: Iterable[int], kind: Union[CodeKind, str]) -> ConstructionOutcome:
    """``C + {u_i : v_i in C}``, of size ``2|C|``."""
    kind = CodeKind.parse(kind)
    C = vertex_set(G, C)
    M = mycielski(G)
    if kind is CodeKind.OLD and not admits_old(M):
        raise InadmissibleError(f"{M!r} has no OLD-set (G has false twins or isolated vertices)")
    _require(G, C, kind, f"C is not a {kind.name}-set of G")
    return _validated(M, C | {M.shadow(i) for i in C}, kind, "doubling-upper")


def old_lift(G: Graph, C: Iterable[int], i: int) -> ConstructionOutcome:
    """``C + {u, u_i}``: an OLD-set of M(G) two larger than ``C``."""
    C = vertex_set(G, C)
    if not admits_old(G):
        raise InadmissibleError(f"{G!r} has isolated vertices or false twins")
    if not 0 <= i < G.n:
        raise ConstructionError(f"precondition: no vertex {i}")
    _require(G, C, CodeKind.OLD, "C is not an OLD-set of G")
    M = mycielski(G)
    return _validated(M, C | {M.apex, M.shadow(i)}, CodeKind.OLD, "old-lift-upper")


def old_set_cycle(n: int) -> ConstructionOutcome:
    """Explicit OLD-set of C_n of minimum size (n >= 3, n != 4).

    Writing n = 6k + r, each block of six contributes four vertices and the
    last r positions a short tail.  For r = 3 no tail is printed; we try
    ``{v_{6k+1}, v_{6k+2}}`` first and otherwise take the first pair among
    the last six vertices that validates.
    """
    if n < 3 or n == 4:
        raise ValueError("C_n has an OLD-set only for n >= 3, n != 4")
    G = make_cycle(n)
    if n == 3:
        return _validated(G, {_v(1), _v(2)}, CodeKind.OLD, "old-cycle")
    if n == 5:
        return _validated(G, {_v(j) for j in (1, 2, 3, 4)}, CodeKind.OLD, "old-cycle")

    k, r = divmod(n, 6)
    S: set[int] = set()
    if r in (0, 3):
        for i in range(1, k + 1):
            S.update(_v(j) for j in (6 * i - 4, 6 * i - 3, 6 * i - 1, 6 * i))
    else:
        for i in range(1, k + 1):
            S.update(_v(j) for j in (6 * i - 4, 6 * i - 3, 6 * i - 2, 6 * i - 1))
        if r == 5:
            S.update(_v(j) for j in range(6 * k + 1, 6 * k + 5))
        else:
            S.update(_v(j) for j in range(6 * k, 6 * k + r))
    if r != 3:
        return _validated(G, S, CodeKind.OLD, "old-cycle")

    first = {_v(6 * k + 1), _v(6 * k + 2)}
    if is_code(G, S | first, CodeKind.OLD).ok:
        return _validated(G, S | first, CodeKind.OLD, "old-cycle",
                          [f"r=3 tail v_{6 * k + 1}, v_{6 * k + 2}"])
    candidates = [v for v in range(n - 6, n) if v not in S]
    for size in range(len(candidates) + 1):
        for tail in combinations(candidates, size):
            if is_code(G, S | set(tail), CodeKind.OLD).ok:
                names = ", ".join(f"v_{t + 1}" for t in tail)
                return _validated(G, S | set(tail), CodeKind.OLD, "old-cycle",
                                  [f"r=3 tail v_{6 * k + 1}, v_{6 * k + 2} failed; fallback tail {names}"])
    raise ConstructionError(f"no tail completes the OLD pattern on C_{n}")


def ld_set_mycielski_path(n: int) -> ConstructionOutcome:
    """LD-set of M(P_n) of size 2k+1 (n = 3k) or 2k+2 (n = 3k+1, 3k+2)."""
    if n < 6:
        raise ValueError("construction needs n >= 6")
    k, r = divmod(n, 3)
    M = mycielski(make_path(n))
    C = {_v(2), _u(n, 3 * k), M.apex}
    for ell in range(1, k):
        i = 3 * ell + 1
        C.update((_v(i), _v(i + 1)))
    notes = []
    if r == 1:
        C = (C - {_u(n, 3 * k)}) | {_v(3 * k + 1), _u(n, 3 * k + 1)}
    elif r == 2:
        # printed with indices 6k, 6k+1, 6k+2, which exceed n
        C = (C - {_u(n, 3 * k)}) | {_v(3 * k + 1), _v(3 * k + 2)}
        notes.append("r=2 set drops u_{3k} and adds v_{3k+1}, v_{3k+2} (printed as 6k, 6k+1, 6k+2)")
    return _validated(M, C, CodeKind.LD, "ld-mycielski-path-upper", notes)


def dist24_cover(n: int) -> frozenset[int]:
    """Minimum vertex cover of the distance-{2,4} graph on C_n's vertices."""
    if n % 2 and n >= 5:
        # the circulant with distances 1, 2 on w_i = v_{1+2i}
        return frozenset((2 * i) % n for i in min_vertex_cover(make_aux_circulant(n)))
    return min_vertex_cover(make_circulant(n, (2, 4)))


def ltd_set_mycielski_cycle(n: int) -> ConstructionOutcome:
    """LTD-set of M(C_n): a distance-{2,4} vertex cover plus ``{u_i, u}``.

    ``i`` is the lowest cover member.  For odd ``n`` the cover is computed
    on ``make_aux_circulant(n)`` and mapped back by ``w_i = v_{1+2i}``; for
    even ``n`` that relabelling is not a bijection, so the cover is taken on
    the distance-{2,4} circulant directly.  For n = 3, 4 the sets are fixed
    by hand.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    M = mycielski(make_cycle(n))
    if n == 3:
        cover = frozenset({_v(1), _v(2)})
    elif n == 4:
        # u_1, u_3 (and u_2, u_4) are false twins in M(C_4), so the apex
        # cannot stand in for a second shadow here
        return _validated(M, set(range(4)) | {M.shadow(0), M.shadow(1)}, CodeKind.LTD,
                          "ltd-mycielski-cycle-upper", ["n=4: all of V plus u_1, u_2"])
    else:
        cover = dist24_cover(n)
    i = min(cover)
    notes = [f"cover {sorted(cover)}, shadow of vertex {i}"]
    if n >= 5 and n % 2 == 0:
        notes.append("even n: cover of the distance-{2,4} circulant (w_i = v_{1+2i} is not a bijection)")
    return _validated(M, cover | {M.shadow(i), M.apex}, CodeKind.LTD,
                      "ltd-mycielski-cycle-upper", notes)


def down_projection(MG: Graph, C_M: Iterable[int]) -> frozenset[int]:
    """``(C_M & V) + {v_i : u_i in C_M}`` on the original vertex set."""
    if not MG.is_mycielski:
        raise ValueError(f"{MG!r} was not built by mycielski()")
    C_M = vertex_set(MG, C_M)
    n = MG.base.n
    return frozenset(v if v < n else v - n for v in C_M if v != MG.apex)
