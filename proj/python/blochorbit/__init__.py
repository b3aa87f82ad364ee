"""Two-qubit dynamics in the coherence-vector representation."""

from ._core import (
    Axis,
    CartanInteraction,
    Degeneracy,
    EllipseParams,
    EntanglementReport,
    HeisenbergExchange,
    LocalRotation,
    OneDimInteraction,
    ReachableDisk,
    Subsystem,
    TwoQubitState,
    apply_interaction,
    evolve,
    fit_one_dim,
    from_density,
    global_purity,
    heisenberg_ellipse,
    heisenberg_entanglement_scan,
    linear_entropy,
    oracle,
    parse_axis,
    product_state,
    reachable_disk,
    reconstruct,
    sample_reachable,
    semi_minor_product,
    subsystem_purity,
    to_density,
    trace_orbit,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
