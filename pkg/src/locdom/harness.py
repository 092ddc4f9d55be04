"""Sweeps over graph families, tightness searches and report I/O."""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, Union

from . import formulas as F
from .codes import CodeKind, admits_old, is_code
from .constructions import (
    doubling_lift,
    ld_set_mycielski_path,
    ltd_set_mycielski_cycle,
    old_lift,
    total_dom_lift,
)
from .graph import Graph, make_cycle, make_path, make_star, mycielski, parse_edge_list
from .solver import BUDGET, DEFAULT_BUDGET, INADMISSIBLE, SolveResult, gamma

log = logging.getLogger(__name__)

FAMILY_MAKERS: dict[str, Callable[[int], Graph]] = {
    F.PATH: make_path,
    F.CYCLE: make_cycle,
    F.STAR: make_star,
}

CSV_COLUMNS = ["family", "n", "kind", "exact", "formula", "lower", "upper",
               "construction", "tight_lower", "tight_upper", "ms"]

Cell = Union[int, str, None]


class InvariantViolation(AssertionError):
    pass


@dataclass
class SweepRow:
    family: str
    n: int
    kind: str
    exact: Cell
    formula: Optional[int] = None
    lower: Optional[int] = None
    upper: Optional[int] = None
    construction: Optional[int] = None
    tight_lower: bool = False
    tight_upper: bool = False
    ms: Optional[int] = None

    def sort_key(self) -> tuple:
        return (self.family, self.n, list(CodeKind.__members__).index(self.kind))

    def problems(self) -> list[str]:
        if not isinstance(self.exact, int):
            return []
        out = []
        where = f"{self.family} n={self.n} {self.kind}"
        if self.lower is not None and self.exact < self.lower:
            out.append(f"{where}: exact {self.exact} below lower bound {self.lower}")
        if self.upper is not None and self.exact > self.upper:
            out.append(f"{where}: exact {self.exact} above upper bound {self.upper}")
        if self.construction is not None and self.construction < self.exact:
            out.append(f"{where}: construction {self.construction} beats the optimum {self.exact}")
        return out


@dataclass
class SweepReport:
    rows: list[SweepRow] = field(default_factory=list)

    def sorted_rows(self) -> list[SweepRow]:
        return sorted(self.rows, key=SweepRow.sort_key)

    def violations(self) -> list[str]:
        return [p for row in self.rows for p in row.problems()]

    def check(self) -> None:
        problems = self.violations()
        if problems:
            raise InvariantViolation("; ".join(problems))

    def to_csv(self, timing: bool = True) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in self.sorted_rows():
            d = asdict(row)
            if not timing:
                d["ms"] = None
            writer.writerow(["" if d[c] is None else str(d[c]).lower() if isinstance(d[c], bool) else d[c]
                             for c in CSV_COLUMNS])
        return buf.getvalue()

    def to_json(self, timing: bool = True) -> str:
        rows = []
        for row in self.sorted_rows():
            d = asdict(row)
            if not timing:
                d["ms"] = None
            rows.append(d)
        return json.dumps({"columns": CSV_COLUMNS, "rows": rows}, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SweepReport":
        data = json.loads(text)
        return cls([SweepRow(**r) for r in data["rows"]])

    @classmethod
    def from_csv(cls, text: str) -> "SweepReport":
        rows = []
        for rec in csv.DictReader(io.StringIO(text)):
            def num(s: str) -> Optional[int]:
                return int(s) if s else None
            exact: Cell = rec["exact"]
            if exact.lstrip("-").isdigit():
                exact = int(exact)
            rows.append(SweepRow(
                rec["family"], int(rec["n"]), rec["kind"], exact if exact != "" else None,
                num(rec["formula"]), num(rec["lower"]), num(rec["upper"]),
                num(rec["construction"]), rec["tight_lower"] == "true",
                rec["tight_upper"] == "true", num(rec["ms"]),
            ))
        return cls(rows)


def upper_bound(kind: CodeKind, family: str, n: int, gamma_G: int) -> int:
    """The family-specific upper bound when one is stated, else the general one."""
    if family == F.PATH and n >= 6:
        if kind is CodeKind.LD:
            return F.ub_ld_mycielski(n, F.PATH).value
        if kind is CodeKind.LTD:
            return F.ub_ltd_mycielski(n, F.PATH).value
    if family == F.CYCLE:
        if kind is CodeKind.LD:
            return F.ub_ld_mycielski(n, F.CYCLE).value
        if kind is CodeKind.LTD:
            return F.ub_ltd_mycielski(n, F.CYCLE).value
    return F.mycielski_bounds(kind, gamma_G, family).hi


def _construction_sizes(G: Graph, family: str, n: int, kind: CodeKind,
                        base: SolveResult, budget: int) -> list[int]:
    sizes = []
    if kind is not CodeKind.OLD or admits_old(mycielski(G)):
        sizes.append(doubling_lift(G, base.witness, kind).size)
    if kind is CodeKind.OLD:
        sizes.append(old_lift(G, base.witness, 0).size)
    if kind is CodeKind.TDOM:
        sizes.append(total_dom_lift(G, base.witness, 0).size)
    if kind is CodeKind.LD and family == F.PATH and n >= 6:
        sizes.append(ld_set_mycielski_path(n).size)
    if kind is CodeKind.LTD and family == F.CYCLE:
        sizes.append(ltd_set_mycielski_cycle(n).size)
    if kind is CodeKind.LTD and family == F.PATH and admits_old(G):
        old = gamma(G, CodeKind.OLD, budget=budget)
        if old.ok:
            lifted = old_lift(G, old.witness, 0)
            if not is_code(lifted.target, lifted.set, CodeKind.LTD).ok:
                raise InvariantViolation(f"OLD lift on {G!r} is not an LTD-set")
            sizes.append(lifted.size)
    return sizes


def sweep_row(family: str, n: int, kind: Union[CodeKind, str],
              budget: int = DEFAULT_BUDGET) -> SweepRow:
    kind = CodeKind.parse(kind)
    start = time.perf_counter()
    G = FAMILY_MAKERS[family](n)
    base = gamma(G, kind, budget=budget)
    exact = gamma(mycielski(G), kind, budget=budget)
    row = SweepRow(family, n, kind.name, exact.cell)

    known = F.known_mycielski_value(kind, family, n)
    if known is not None:
        row.formula = known.value
    if base.ok:
        row.lower = F.mycielski_bounds(kind, base.value, family).lo
        row.upper = upper_bound(kind, family, n, base.value)
        sizes = _construction_sizes(G, family, n, kind, base, budget)
        row.construction = min(sizes) if sizes else None
    if exact.ok and base.ok:
        row.tight_lower = exact.value == row.lower
        row.tight_upper = exact.value == row.upper
    row.ms = round((time.perf_counter() - start) * 1000)
    return row


def _sweep_task(args: tuple) -> SweepRow:
    return sweep_row(*args)


def run_sweep(families: Sequence[str], n_range: Iterable[int], kinds: Sequence[Union[CodeKind, str]],
              budget: int = DEFAULT_BUDGET, workers: int = 1) -> SweepReport:
    """One row per (family, n, kind) describing gamma_kind(M(family_n)).

    Members a family cannot build (``cycle`` below 3, ``star`` below 1) are
    skipped.  A budget overrun shows up as ``exact == "budget"``.
    """
    kinds = [CodeKind.parse(k) for k in kinds]
    ns = list(n_range)
    minimum = {F.PATH: 1, F.CYCLE: 3, F.STAR: 1}
    tasks = []
    for family in families:
        if family not in FAMILY_MAKERS:
            raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILY_MAKERS)}")
        tasks.extend((family, n, k, budget) for n in ns if n >= minimum[family] for k in kinds)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_task, tasks))
    else:
        rows = [_sweep_task(t) for t in tasks]
    return SweepReport(rows)


# -- tightness searches -------------------------------------------------------

LOWER_PLUS_ONE = "lower_plus_one"
OLD_PLUS_ONE = "old_plus_one"


@dataclass
class TightnessResult:
    kind: str
    relation: str
    found: Optional[str] = None
    graph: Optional[Graph] = field(default=None, repr=False)
    gamma_G: Optional[int] = None
    gamma_MG: Optional[int] = None
    searched: int = 0
    skipped: int = 0
    budget_hits: int = 0

    def summary(self) -> str:
        if self.found is not None:
            return (f"{self.kind} {self.relation}: {self.found} has gamma(G)={self.gamma_G}, "
                    f"gamma(M(G))={self.gamma_MG} (after {self.searched} instances)")
        return (f"{self.kind} {self.relation}: no example among {self.searched} instances "
                f"({self.skipped} inadmissible, {self.budget_hits} over budget)")


def family_space(family: str, ns: Iterable[int]) -> Iterable[Graph]:
    make = FAMILY_MAKERS[family]
    for n in ns:
        try:
            yield make(n)
        except ValueError:
            continue


def small_graph_space(max_n: int, min_n: int = 2, twin_free: bool = False) -> Iterable[Graph]:
    """Connected graphs on ``min_n..max_n`` vertices up to isomorphism (max 7)."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas only covers up to 7 vertices")
    count = 0
    for H in nx.graph_atlas_g():
        if not min_n <= H.number_of_nodes() <= max_n or not nx.is_connected(H):
            continue
        G = Graph.from_edges(H.number_of_nodes(), H.edges(), f"atlas_{count}")
        count += 1
        if twin_free and not admits_old(G):
            continue
        yield G


def find_tightness_example(kind: Union[CodeKind, str], relation: str, search_space: Iterable[Graph],
                           budget: int = DEFAULT_BUDGET) -> TightnessResult:
    """First graph in ``search_space`` with gamma_kind(M(G)) = gamma_kind(G) + 1.

    ``old_plus_one`` is the same relation restricted to OLD.  The answer is
    only about the instances searched.
    """
    kind = CodeKind.parse(kind)
    if relation not in (LOWER_PLUS_ONE, OLD_PLUS_ONE):
        raise ValueError(f"unknown relation {relation!r}")
    if relation == OLD_PLUS_ONE and kind is not CodeKind.OLD:
        raise ValueError("old_plus_one is a relation on OLD-numbers")
    result = TightnessResult(kind.name, relation)
    for G in search_space:
        result.searched += 1
        base = gamma(G, kind, budget=budget)
        if base.status == INADMISSIBLE:
            result.skipped += 1
            continue
        M = mycielski(G)
        lifted = gamma(M, kind, budget=budget)
        if BUDGET in (base.status, lifted.status):
            result.budget_hits += 1
            continue
        if lifted.status == INADMISSIBLE:
            result.skipped += 1
            continue
        if lifted.value == base.value + 1:
            _revalidate(G, M, kind, base, lifted, budget)
            result.found = G.label or f"graph n={G.n}"
            result.graph = G
            result.gamma_G, result.gamma_MG = base.value, lifted.value
            return result
    return result


def _revalidate(G: Graph, M: Graph, kind: CodeKind, base: SolveResult, lifted: SolveResult,
                budget: int) -> None:
    for graph, res in ((G, base), (M, lifted)):
        if not is_code(graph, res.witness, kind).ok:
            raise InvariantViolation(f"witness for {graph!r} fails the checker")
        again = gamma(graph, kind, budget=budget)
        if again.value != res.value:
            raise InvariantViolation(f"re-solve of {graph!r} disagrees: {again.value} vs {res.value}")


# -- files --------------------------------------------------------------------

def load_graph(path: Union[str, Path]) -> Graph:
    path = Path(path)
    G, warnings = parse_edge_list(path.read_text(), label=path.stem)
    for w in warnings:
        log.warning("%s: %s", path, w)
    return G


def save_report(report: SweepReport, path: Union[str, Path], format: str = "csv",
                timing: bool = True) -> None:
    if format not in ("csv", "json"):
        raise ValueError(f"unknown report format {format!r}")
    text = report.to_csv(timing) if format == "csv" else report.to_json(timing)
    Path(path).write_text(text)


def load_report(path: Union[str, Path]) -> SweepReport:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return SweepReport.from_json(text)
    return SweepReport.from_csv(text)
