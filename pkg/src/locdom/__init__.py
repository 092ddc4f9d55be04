"""Locating-domination type codes (LD, LTD, OLD) under the Mycielski construction."""

from .codes import CodeKind, Verdict, admits_old, is_code, is_dominating, is_total_dominating
from .graph import (
    Graph,
    make_aux_circulant,
    make_cycle,
    make_path,
    make_star,
    mycielski,
)
from .solver import SolveResult, gamma, gamma_oracle

__all__ = [
    "CodeKind", "Graph", "SolveResult", "Verdict",
    "admits_old", "gamma", "gamma_oracle", "is_code", "is_dominating", "is_total_dominating",
    "make_aux_circulant", "make_cycle", "make_path", "make_star", "mycielski",
]
