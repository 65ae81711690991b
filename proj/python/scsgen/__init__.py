"""Heralded even/odd cat-state generation from squeezed vacuum and two ancilla photons."""

from ._core import (
    BeamSplitter,
    ConvergenceError,
    DomainError,
    SearchBox,
    TruncationError,
    __version__,
    baseline00,
    bs_element,
    cascade_herald,
    conditional_state,
    fidelity,
    gain_curves,
    herald_amplitude_ck,
    herald_distribution,
    herald_probability,
    normalization_closed,
    normalization_direct,
    optimize_fidelity,
    scs_state,
    smsv_state,
    squeeze,
    sweep_beta,
    validate,
)

__all__ = [
    "BeamSplitter",
    "ConvergenceError",
    "DomainError",
    "SearchBox",
    "TruncationError",
    "__version__",
    "baseline00",
    "bs_element",
    "cascade_herald",
    "conditional_state",
    "fidelity",
    "gain_curves",
    "herald_amplitude_ck",
    "herald_distribution",
    "herald_probability",
    "normalization_closed",
    "normalization_direct",
    "optimize_fidelity",
    "scs_state",
    "smsv_state",
    "squeeze",
    "sweep_beta",
    "validate",
]
