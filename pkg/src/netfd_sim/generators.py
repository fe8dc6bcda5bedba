"""Dissipative generators on the doubled space.

All builders return dense matrices.  The total generator is the
non-hermitian matrix driving -i d|0(t)>/dt; it annihilates the left
thermal vacuum (probability conservation) and is tildian, i.e.
tilde(i H) = i H.  For bosons both properties hold exactly on every
Fock level except the top truncation level, where the defect of the
left-vacuum condition is -i*(2*kappa*n + ndot)*D on the diagonal top
component; checks therefore either exclude the top level or budget for
that tail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .thermal_space import DoubledSpace, tilde_conjugate

__all__ = [
    "SemiFreeParams",
    "CouplingModes",
    "QuasiParticleModes",
    "GeneratorSet",
    "StationaryGenerator",
    "build_coupling_modes",
    "build_quasiparticle_modes",
    "build_semi_free",
    "damping_direct",
    "build_stationary",
    "split_jump",
    "left_vacuum_residual",
]

TimeFunc = Union[float, Callable[[float], float]]


def _at(f: TimeFunc, t: float) -> float:
    return float(f(t)) if callable(f) else float(f)


@dataclass(frozen=True)
class SemiFreeParams:
    """Time-dependent parameter bundle for the bilinear generator.

    omega and kappa may be numbers or functions of time; occupation and
    occupation_rate are the mode occupation n(t) and its exact time
    derivative (supplied by the kinetics layer, never finite-differenced
    here).  nu is the free coupling knob; its partner mu = 1 - sigma*nu
    is always derived.  lam interpolates between probability-conserving
    (0) and hermitian (1) noise coupling.
    """

    omega: TimeFunc
    kappa: TimeFunc
    occupation: Callable[[float], float]
    occupation_rate: Callable[[float], float]
    lam: float = 0.0
    nu: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.lam <= 1.0:
            raise ValueError("lam must lie in [0, 1]")

    @classmethod
    def stationary(cls, omega: float, kappa: float, nbar: float,
                   lam: float = 0.0, nu: float = 0.0) -> "SemiFreeParams":
        return cls(omega=omega, kappa=kappa,
                   occupation=lambda t: nbar,
                   occupation_rate=lambda t: 0.0,
                   lam=lam, nu=nu)


@dataclass(frozen=True)
class CouplingModes:
    """Canonical pair the noise couples through, with tilde partners.

    `ann` is the damped annihilation combination mu*a + sigma*tau*nu*atilde^dag;
    `cre` is its canonical conjugate a^dag - tau*atilde (the combination
    annihilated by the left vacuum), not the hermitian adjoint.
    """

    ann: np.ndarray
    cre: np.ndarray
    ann_tilde: np.ndarray
    cre_tilde: np.ndarray
    mu: float
    nu: float


@dataclass(frozen=True)
class QuasiParticleModes:
    """Thermal quasiparticle pair annihilating the vacuum at occupation n.

    mixing is the 2x2 unit-determinant matrix sending the doublet
    (a, tau*atilde^dag) to (ann, cre).
    """

    ann: np.ndarray
    cre: np.ndarray
    ann_tilde: np.ndarray
    cre_tilde: np.ndarray
    mixing: np.ndarray
    occupation: float


@dataclass(frozen=True)
class GeneratorSet:
    """System, relaxational and diffusive parts plus their total."""

    system: np.ndarray
    relax: np.ndarray
    diffuse: np.ndarray
    total: np.ndarray
    modes: CouplingModes
    evaluated_at: float
    occupation: float
    occupation_rate: float


@dataclass(frozen=True)
class StationaryGenerator:
    """Stationary generator with the normal modes that diagonalize it."""

    gen: GeneratorSet
    modes: QuasiParticleModes
    omega: float
    kappa: float
    nbar: float

    @property
    def total(self) -> np.ndarray:
        return self.gen.total


def build_coupling_modes(space: DoubledSpace, mu: float, nu: float) -> CouplingModes:
    """Build the damped mode pair; mu + sigma*nu = 1 is required."""
    stats = space.statistics
    if abs(mu + stats.sigma * nu - 1.0) > 1e-12:
        raise ValueError("mu + sigma*nu must equal 1")
    ann = mu * space.op_a + stats.sigma * stats.tau * nu * space.op_atildedag
    cre = space.op_adag - stats.tau * space.op_atilde
    return CouplingModes(
        ann=ann,
        cre=cre,
        ann_tilde=tilde_conjugate(ann, space),
        cre_tilde=tilde_conjugate(cre, space),
        mu=float(mu),
        nu=float(nu),
    )


def build_quasiparticle_modes(space: DoubledSpace, n_t: float) -> QuasiParticleModes:
    """Quasiparticle pair at occupation n_t.

    ann kills the right vacuum at n_t and cre kills the left vacuum.
    """
    stats = space.statistics
    if n_t < 0 or (stats.is_fermion and n_t > 1):
        raise ValueError("occupation out of range for these statistics")
    ann = (1.0 + stats.sigma * n_t) * space.op_a \
        - stats.sigma * stats.tau * n_t * space.op_atildedag
    cre = space.op_adag - stats.tau * space.op_atilde
    mixing = np.array(
        [[1.0 + stats.sigma * n_t, -stats.sigma * n_t], [-1.0, 1.0]]
    )
    return QuasiParticleModes(
        ann=ann,
        cre=cre,
        ann_tilde=tilde_conjugate(ann, space),
        cre_tilde=tilde_conjugate(cre, space),
        mixing=mixing,
        occupation=float(n_t),
    )


def left_vacuum_residual(space: DoubledSpace, bra: np.ndarray,
                         total: np.ndarray) -> float:
    """Max |<bra| total| component, top truncation level excluded for bosons."""
    row = bra @ total
    if not space.statistics.is_fermion:
        row = row.copy()
        row[space.dim - 1] = 0.0
    return float(np.abs(row).max())


def build_semi_free(space: DoubledSpace, params: SemiFreeParams, t: float,
                    bra: np.ndarray | None = None) -> GeneratorSet:
    """Assemble the bilinear generator at time t.

    total = system + i*(relax + diffuse) with
      relax   = -kappa * (cre@ann + cre_tilde@ann_tilde)
      diffuse = sigma*tau*(2*kappa*(n+nu) + ndot) * cre@cre_tilde
    When a left vacuum is passed, the conservation condition <bra|total=0
    is checked (bulk components for bosons) and a violation raises.
    """
    stats = space.statistics
    w = _at(params.omega, t)
    k = _at(params.kappa, t)
    if k < 0:
        raise ValueError("kappa must be nonnegative")
    n = float(params.occupation(t))
    ndot = float(params.occupation_rate(t))

    mu = 1.0 - stats.sigma * params.nu
    modes = build_coupling_modes(space, mu, params.nu)
    system = w * (space.number_op - space.number_op_tilde)
    relax = -k * (modes.cre @ modes.ann + modes.cre_tilde @ modes.ann_tilde)
    diffuse = (stats.sigma * stats.tau * (2.0 * k * (n + params.nu) + ndot)) \
        * (modes.cre @ modes.cre_tilde)
    total = system + 1j * (relax + diffuse)

    if bra is not None:
        scale = max(1.0, float(np.abs(total).max()))
        resid = left_vacuum_residual(space, bra, total)
        if resid > 1e-10 * scale:
            raise RuntimeError(
                f"left vacuum condition violated: residual {resid:.3e}"
            )

    return GeneratorSet(
        system=system,
        relax=relax,
        diffuse=diffuse,
        total=total,
        modes=modes,
        evaluated_at=float(t),
        occupation=n,
        occupation_rate=ndot,
    )


def damping_direct(space: DoubledSpace, kappa: float, n: float,
                   ndot: float) -> np.ndarray:
    """Damping part assembled directly in ladder operators.

    Equals relax + diffuse from build_semi_free for every nu (exactly
    for fermions; up to the top truncation level for bosons).  Kept as
    an independent assembly for cross checks.
    """
    stats = space.statistics
    s, tau = stats.sigma, stats.tau
    return (
        -(kappa * (1.0 + 2.0 * s * n) + s * ndot)
        * (space.number_op + space.number_op_tilde)
        + s * tau * (2.0 * kappa * (1.0 + s * n) + s * ndot)
        * (space.op_a @ space.op_atilde)
        + s * tau * (2.0 * kappa * n + ndot)
        * (space.op_adag @ space.op_atildedag)
        - (2.0 * kappa * n + ndot) * space.identity
    )


def build_stationary(space: DoubledSpace, omega: float, kappa: float,
                     nbar: float) -> StationaryGenerator:
    """Stationary generator and its diagonalizing normal modes.

    The normal modes are the quasiparticle pair frozen at nbar; the
    total factorizes as (omega - i*kappa)*cre@ann
    - (omega + i*kappa)*cre_tilde@ann_tilde (top level excepted for
    bosons), so the normal annihilator decays as exp(-(i*omega+kappa)t)
    under the generated flow.
    """
    params = SemiFreeParams.stationary(omega, kappa, nbar, nu=nbar)
    gen = build_semi_free(space, params, 0.0)
    modes = build_quasiparticle_modes(space, nbar)
    return StationaryGenerator(gen=gen, modes=modes, omega=float(omega),
                               kappa=float(kappa), nbar=float(nbar))


def split_jump(space: DoubledSpace, stationary: StationaryGenerator
               ) -> tuple[np.ndarray, np.ndarray]:
    """Split the stationary generator into drift and jump parts.

    drift = omega*(n_op - n_op~) - i*kappa*(1+2*sigma*nbar)*(n_op + n_op~)
    jump  = 2i*sigma*tau*kappa*((1+sigma*nbar)*a@atilde + nbar*adag@atilde^dag)
            - 2i*kappa*nbar
    The scalar stays in the jump part so the pieces sum back to the
    total exactly; a reassembly mismatch raises.
    """
    stats = space.statistics
    s, tau = stats.sigma, stats.tau
    w, k, nb = stationary.omega, stationary.kappa, stationary.nbar
    drift = w * (space.number_op - space.number_op_tilde) \
        - 1j * k * (1.0 + 2.0 * s * nb) * (space.number_op + space.number_op_tilde)
    jump = 2j * s * tau * k * (
        (1.0 + s * nb) * (space.op_a @ space.op_atilde)
        + nb * (space.op_adag @ space.op_atildedag)
    ) - 2j * k * nb * space.identity
    scale = max(1.0, float(np.abs(stationary.total).max()))
    if np.abs(drift + jump - stationary.total).max() > 1e-13 * scale:
        raise RuntimeError("jump split does not reassemble the generator")
    return drift, jump
