"""Direct and inverse spectral theory of multi-peakon measures and the Camassa-Holm flow."""

from ._peakon import (
    Measure,
    PeakonError,
    Side,
    SpectralData,
    asymptotic_profile,
    coupling,
    eigenvalues,
    energy,
    evolve,
    kernel_integral,
    lipschitz_metric,
    multipeakon_approx,
    norming_constant,
    phase_shifts,
    reconstruct,
    solve_ch,
    spectral_data,
    trace_report,
    u,
    u_three_spectra,
    verify,
    wronskian,
)

__all__ = [
    "Measure",
    "PeakonError",
    "Side",
    "SpectralData",
    "asymptotic_profile",
    "coupling",
    "eigenvalues",
    "energy",
    "evolve",
    "kernel_integral",
    "lipschitz_metric",
    "multipeakon_approx",
    "norming_constant",
    "phase_shifts",
    "reconstruct",
    "solve_ch",
    "spectral_data",
    "trace_report",
    "u",
    "u_three_spectra",
    "verify",
    "wronskian",
]
