"""Immutable simple graphs, family generators and the Mycielski operator.

Vertices are the integers ``0..n-1``.  For a graph produced by
:func:`mycielski` the vertex order is fixed:

* ``0..n-1``   the original vertices ``v_i``
* ``n..2n-1``  the shadows, ``u_i`` is vertex ``n + i``
* ``2n``       the apex ``u``

Everything downstream (constructions, projections, sweeps) relies on this.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional

VertexSet = frozenset  # frozenset[int]; members must be < G.n


class GraphFormatError(ValueError):
    """Malformed edge-list input. ``line`` is 1-based."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    label: str = ""
    # set only by mycielski(); the graph M(G) was built from
    base: Optional["Graph"] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency sets, got {len(self.adj)}")
        for i, nbrs in enumerate(self.adj):
            if i in nbrs:
                raise ValueError(f"self-loop at vertex {i}")
            for j in nbrs:
                if not 0 <= j < self.n:
                    raise ValueError(f"neighbor {j} of vertex {i} out of range")
                if i not in self.adj[j]:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str = "") -> "Graph":
        sets: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            sets[a].add(b)
            sets[b].add(a)
        return cls(n, tuple(frozenset(s) for s in sets), label)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        name = self.label or "Graph"
        return f"<{name}: n={self.n}, m={self.num_edges}>"

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with ``i < j``."""
        return [(i, j) for i in range(self.n) for j in sorted(self.adj[i]) if i < j]

    @cached_property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def regular_degree(self) -> Optional[int]:
        """The common degree if the graph is regular, else None."""
        degs = {len(s) for s in self.adj}
        return degs.pop() if len(degs) == 1 else None

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << j for j in nbrs) for nbrs in self.adj)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(m | (1 << i) for i, m in enumerate(self.open_masks))

    def has_isolated_vertex(self) -> bool:
        return any(not s for s in self.adj)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    @property
    def is_mycielski(self) -> bool:
        return self.base is not None

    def originals(self) -> range:
        self._require_mycielski()
        return range(self.base.n)

    def shadow(self, i: int) -> int:
        self._require_mycielski()
        if not 0 <= i < self.base.n:
            raise IndexError(f"no original vertex {i}")
        return self.base.n + i

    @property
    def apex(self) -> int:
        self._require_mycielski()
        return 2 * self.base.n

    def _require_mycielski(self) -> None:
        if self.base is None:
            raise ValueError(f"{self!r} was not built by mycielski()")


def vertex_set(G: Graph, members: Iterable[int]) -> frozenset[int]:
    """Validate ``members`` against ``G`` and freeze them."""
    s = frozenset(members)
    bad = [v for v in s if not (isinstance(v, int) and 0 <= v < G.n)]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} out of range for n={G.n}")
    return s


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def set_to_mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


# -- generators ---------------------------------------------------------------

def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), f"P_{n}")


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), f"C_{n}")


def make_star(n: int) -> Graph:
    """K_{1,n}; vertex 0 is the center."""
    if n < 1:
        raise ValueError("a star needs at least one leaf")
    return Graph.from_edges(n + 1, ((0, i) for i in range(1, n + 1)), f"K_1,{n}")


def make_circulant(n: int, distances: Iterable[int], label: str = "") -> Graph:
    edges = set()
    for i in range(n):
        for d in distances:
            j = (i + d) % n
            if j != i:
                edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, sorted(edges), label)


def make_aux_circulant(n: int) -> Graph:
    """Circulant on ``n`` vertices with chords at circular distance 1 and 2."""
    if n < 5:
        raise ValueError("circular distances 1 and 2 collide for n < 5")
    return make_circulant(n, (1, 2), f"Circ_{n}(1,2)")


def mycielski(G: Graph) -> Graph:
    n = G.n
    edges = list(G.edges())
    for i, j in G.edges():
        edges.append((n + i, j))
        edges.append((n + j, i))
    edges.extend((2 * n, n + i) for i in range(n))
    label = f"M({G.label})" if G.label else ""
    M = Graph.from_edges(2 * n + 1, edges, label)
    return Graph(M.n, M.adj, label, base=G)


def random_connected_graph(n: int, rng: random.Random, p: float = 0.3) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``p``."""
    if n < 1:
        raise ValueError("n must be positive")
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        edges.add((min(a, b), max(a, b)))
    for a, b in combinations(range(n), 2):
        if (a, b) not in edges and rng.random() < p:
            edges.add((a, b))
    return Graph.from_edges(n, sorted(edges), f"rand_{n}")


# -- neighborhoods and twins --------------------------------------------------

def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise IndexError(f"vertex {v} out of range for n={G.n}")


def open_neighborhood(G: Graph, v: int) -> frozenset[int]:
    _check_vertex(G, v)
    return G.adj[v]


def closed_neighborhood(G: Graph, v: int) -> frozenset[int]:
    _check_vertex(G, v)
    return G.adj[v] | {v}


def false_twin_pairs(G: Graph) -> list[tuple[int, int]]:
    return [(a, b) for a, b in combinations(range(G.n), 2) if G.adj[a] == G.adj[b]]


def true_twin_pairs(G: Graph) -> list[tuple[int, int]]:
    return [
        (a, b)
        for a, b in combinations(range(G.n), 2)
        if closed_neighborhood(G, a) == closed_neighborhood(G, b)
    ]


def is_isomorphic(G: Graph, H: Graph) -> bool:
    """Brute-force permutation search; only meant for tiny graphs."""
    if G.n != H.n or G.num_edges != H.num_edges:
        return False
    if sorted(map(len, G.adj)) != sorted(map(len, H.adj)):
        return False
    h_edges = set(H.edges())
    g_edges = G.edges()
    for perm in permutations(range(G.n)):
        if all((min(perm[a], perm[b]), max(perm[a], perm[b])) in h_edges for a, b in g_edges):
            return True
    return False


# -- edge-list text format ----------------------------------------------------

def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_edge_list(text: str, label: str = "") -> tuple[Graph, list[str]]:
    """Parse ``"n m"`` followed by ``m`` lines ``"i j"``.

    Returns the graph and a list of warnings (duplicate edges are dropped
    with a warning; self-loops and bad numbers raise GraphFormatError).
    """
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty input") from None
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"non-integer header {' '.join(header)!r}", lineno) from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header", lineno)

    warnings = []
    seen: set[tuple[int, int]] = set()
    count = 0
    for lineno, parts in lines:
        if len(parts) != 2:
            raise GraphFormatError(f"expected two endpoints, got {len(parts)} fields", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {' '.join(parts)!r}", lineno) from None
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"endpoint out of range 0..{n - 1}", lineno)
        count += 1
        key = (min(a, b), max(a, b))
        if key in seen:
            warnings.append(f"line {lineno}: duplicate edge {key[0]} {key[1]} ignored")
            continue
        seen.add(key)
    if count != m:
        warnings.append(f"header declares {m} edges, found {count}")
    return Graph.from_edges(n, sorted(seen), label), warnings


def format_edge_list(G: Graph) -> str:
    lines = []
    if G.label:
        lines.append(f"# {G.label}")
    edges = G.edges()
    lines.append(f"{G.n} {len(edges)}")
    lines.extend(f"{a} {b}" for a, b in edges)
    return "\n".join(lines) + "\n"
