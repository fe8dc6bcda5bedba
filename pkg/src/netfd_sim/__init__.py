"""Thermal doubled-space quantum stochastic dynamics.

Core layout:
    thermal_space      doubled Fock space, tilde conjugation, thermal vacuums
    generators         dissipative generators and mode families
    kinetics           occupation ODE, propagators, entropy bookkeeping
    master_equation    density-vector evolution and closed-form checks
    noise_algebra      increment tables, martingale, Ito/Stratonovich calculus
    stochastic_engine  exact noise oracle and quantum-jump ensembles
    scenarios          run configuration models
    runs               shared runners behind the CLI and the service
"""

from .thermal_space import (
    BOSON,
    FERMION,
    DoubledSpace,
    ModeConfig,
    ModeStatistics,
    ThermalVacuumPair,
    build_bra_vacuum,
    build_ket_vacuum,
    build_mode,
    tilde_conjugate,
)

__version__ = "0.1.0"

__all__ = [
    "BOSON",
    "FERMION",
    "DoubledSpace",
    "ModeConfig",
    "ModeStatistics",
    "ThermalVacuumPair",
    "build_bra_vacuum",
    "build_ket_vacuum",
    "build_mode",
    "tilde_conjugate",
    "__version__",
]
