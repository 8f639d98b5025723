# Apache License, Version 2.0, refer to LICENSE.txt

"""Belief updates from loss-encoded information."""

from ._tilt import (  # noqa: F401
    CoherenceInstance,
    CoherenceResult,
    DiscreteMeasure,
    GDivergenceGenerator,
    GridMeasure,
    GridUpdateReport,
    JointTable,
    LossFunction,
    SearchOutcome,
    TiltError,
    UpdateReport,
    coherence_gap,
    combine,
    conditional_from_joint,
    cumulative_loss,
    divergence,
    generator,
    gprime_additivity_residual,
    kl,
    kl_constraint_project,
    marginals,
    minimize_simplex,
    quadratic_loss,
    restriction_loss,
    search_counterexample,
    self_information_loss,
    tabular_loss,
    tilt,
    tilt_grid,
    two_point_stationary,
    zero_loss,
)

__all__ = [name for name in dir() if not name.startswith("_")]
