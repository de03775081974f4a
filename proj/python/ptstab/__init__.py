"""Spectra, Routh-Hurwitz domains and exceptional points of 2-DOF systems with indefinite damping."""

from ._ptstab import (
    ConvergenceError,
    DegenerateError,
    DomainError,
    Error,
    HurwitzReport,
    Spectrum,
    Stability,
    char_poly,
    cli,
    delta_cr_squared,
    delta_pt,
    gyro,
    hurwitz,
    nls,
    potential,
    roots,
    spectrum,
)

__version__ = "0.1.0"
