"""Worst-case robustness of networks under node attacks."""

from ._core import (
    AttackCurve,
    Graph,
    MdaCurve,
    MrReport,
    WreError,
    apply_filter,
    attack,
    attack_all,
    centrality,
    extended_metrics,
    generate,
    maximum_rationality,
    simulate_removal,
    stack,
    standard_metrics,
)


def worst_robustness(graph, metrics=None):
    """R_W of the stacked curve over `metrics` (the standard eight by default)."""
    return stack(attack_all(graph, metrics)).worst_robustness


__all__ = [
    "AttackCurve",
    "Graph",
    "MdaCurve",
    "MrReport",
    "WreError",
    "apply_filter",
    "attack",
    "attack_all",
    "centrality",
    "extended_metrics",
    "generate",
    "maximum_rationality",
    "simulate_removal",
    "stack",
    "standard_metrics",
    "worst_robustness",
]
