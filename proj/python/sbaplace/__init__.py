"""Hybrid-cloud service placement toolkit.

Models service-based applications as weighted graphs and searches for the
cheapest split between a private and a public cloud under a minimum-offload
constraint. The heavy lifting lives in the compiled `_core` extension.
"""

from ._core import (
    BpsoConfig,
    CommEdge,
    ConstraintMode,
    CostBreakdown,
    CostParams,
    GaConfig,
    GraphFormat,
    InfeasibleInstanceError,
    InstanceSpec,
    InstanceTooLargeError,
    InvalidInputError,
    ParseError,
    Placement,
    SbaGraph,
    ServiceNode,
    SolveResult,
    bpso_solve,
    density_percent,
    evaluate_cost,
    exact_solve,
    exact_solve_bnb,
    format_graph,
    ga_solve,
    generate_instance,
    greedy_solve,
    hq_from_fraction,
    is_feasible,
    parse_graph,
    preset,
    preset_specs,
    public_hosting,
    read_graph,
    repair_placement,
    sigmoid,
    total_hosting,
    write_graph,
)

__all__ = [
    "BpsoConfig",
    "CommEdge",
    "ConstraintMode",
    "CostBreakdown",
    "CostParams",
    "GaConfig",
    "GraphFormat",
    "InfeasibleInstanceError",
    "InstanceSpec",
    "InstanceTooLargeError",
    "InvalidInputError",
    "ParseError",
    "Placement",
    "SbaGraph",
    "ServiceNode",
    "SolveResult",
    "bpso_solve",
    "density_percent",
    "evaluate_cost",
    "exact_solve",
    "exact_solve_bnb",
    "format_graph",
    "ga_solve",
    "generate_instance",
    "greedy_solve",
    "hq_from_fraction",
    "is_feasible",
    "parse_graph",
    "preset",
    "preset_specs",
    "public_hosting",
    "read_graph",
    "repair_placement",
    "sigmoid",
    "total_hosting",
    "write_graph",
]

__version__ = "0.1.0"
