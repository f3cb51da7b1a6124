"""Bound states of the generalized MIC-Kepler system."""

from ._core import (
    DomainError,
    ParityError,
    Params,
    RangeError,
    beta,
    energy,
    enumerate_parabolic,
    enumerate_spherical,
    exponents,
    fd_angular_spectrum,
    fd_radial_spectrum,
    interbasis_matrix,
    parabolic_state,
    radial_wavefunction,
    ring_harmonic,
    run_cli,
    separation_constant,
    spherical_state,
    x_rayleigh_beta,
)

__all__ = [
    "DomainError",
    "ParityError",
    "Params",
    "RangeError",
    "beta",
    "energy",
    "enumerate_parabolic",
    "enumerate_spherical",
    "exponents",
    "fd_angular_spectrum",
    "fd_radial_spectrum",
    "interbasis_matrix",
    "parabolic_state",
    "radial_wavefunction",
    "ring_harmonic",
    "run_cli",
    "separation_constant",
    "spherical_state",
    "x_rayleigh_beta",
]
