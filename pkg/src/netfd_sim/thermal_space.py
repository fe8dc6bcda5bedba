"""Doubled Fock space for a single boson or fermion mode.

The state space is a truncated Fock space tensored with a second "tilde"
copy of itself.  Basis ordering is row-major |n> (x) |m~> with n the slow
index, so component n*D + m is the amplitude on |n, m~>.  Tilde
conjugation is the antilinear involution that swaps the two factors and
conjugates scalars; here it is realized as a fixed signed permutation so
that applying it twice returns the input bit for bit.

Thermal bra and ket vacuums are obtained as one-dimensional null spaces
of the thermal state conditions, normalized so the bra-ket overlap is 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space

__all__ = [
    "BOSON",
    "FERMION",
    "ModeStatistics",
    "ModeConfig",
    "DoubledSpace",
    "ThermalVacuumPair",
    "statistics_from_name",
    "ladder_matrix",
    "build_mode",
    "tilde_conjugate",
    "build_bra_vacuum",
    "build_ket_vacuum",
    "measure_occupation",
    "ket_truncation_shift",
]


@dataclass(frozen=True)
class ModeStatistics:
    """Sign pair (sigma, tau) selecting the commutation convention.

    sigma=+1, tau=1 for bosons; sigma=-1, tau=i for fermions.  Both
    identities sigma*tau == conj(tau) and tau**2 == sigma follow.
    """

    sigma: int
    tau: complex

    def __post_init__(self):
        if self.sigma == 1:
            if self.tau != 1:
                raise ValueError("sigma=+1 requires tau=1")
        elif self.sigma == -1:
            if self.tau != 1j:
                raise ValueError("sigma=-1 requires tau=i")
        else:
            raise ValueError("sigma must be +1 or -1")

    @property
    def is_fermion(self) -> bool:
        return self.sigma == -1

    @property
    def name(self) -> str:
        return "fermion" if self.is_fermion else "boson"


BOSON = ModeStatistics(1, 1.0 + 0.0j)
FERMION = ModeStatistics(-1, 1j)


def statistics_from_name(name: str) -> ModeStatistics:
    try:
        return {"boson": BOSON, "fermion": FERMION}[name]
    except KeyError:
        raise ValueError(f"unknown statistics {name!r}") from None


@dataclass(frozen=True)
class ModeConfig:
    """Statistics plus Fock truncation for one mode."""

    statistics: ModeStatistics
    truncation: int

    def __post_init__(self):
        if self.truncation < 2:
            raise ValueError("truncation must be at least 2")
        if self.statistics.is_fermion and self.truncation != 2:
            raise ValueError("fermion mode requires truncation 2")


@dataclass(frozen=True)
class DoubledSpace:
    """Dense operator representation on the doubled space.

    Fields hold D^2 x D^2 complex matrices.  `parity` is (-1)^(a'a)
    embedded on the non-tilde factor (the string making tilde fermion
    operators anticommute with non-tilde ones); `parity_both` carries the
    string on both factors and grades the full doubled algebra.
    Instances are treated as immutable after construction.
    """

    statistics: ModeStatistics
    truncation: int
    dim: int
    op_a: np.ndarray
    op_adag: np.ndarray
    op_atilde: np.ndarray
    op_atildedag: np.ndarray
    parity: np.ndarray
    parity_both: np.ndarray
    tilde_map: np.ndarray
    tilde_map_inv: np.ndarray

    @property
    def number_op(self) -> np.ndarray:
        return self.op_adag @ self.op_a

    @property
    def number_op_tilde(self) -> np.ndarray:
        return self.op_atildedag @ self.op_atilde

    @property
    def identity(self) -> np.ndarray:
        return np.eye(self.dim, dtype=complex)


@dataclass(frozen=True)
class ThermalVacuumPair:
    """Left and right thermal vacuums with their nominal occupation."""

    bra: np.ndarray
    ket: np.ndarray
    occupation: float


def ladder_matrix(dim: int) -> np.ndarray:
    """Truncated annihilation matrix, <n-1|a|n> = sqrt(n)."""
    a = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        a[n - 1, n] = np.sqrt(n)
    return a


def build_mode(config: ModeConfig) -> DoubledSpace:
    """Construct ladder operators and the tilde map on the doubled space.

    Tilde fermion operators carry a parity factor on the non-tilde
    factor so that tilde and non-tilde fermion operators anticommute;
    boson tilde operators act on the second factor directly.
    """
    stats = config.statistics
    d = config.truncation
    a1 = ladder_matrix(d)
    eye1 = np.eye(d, dtype=complex)
    par1 = np.diag([(-1.0) ** n for n in range(d)]).astype(complex)

    op_a = np.kron(a1, eye1)
    op_adag = np.kron(a1.conj().T, eye1)
    if stats.is_fermion:
        op_atilde = np.kron(par1, a1)
        op_atildedag = np.kron(par1, a1.conj().T)
    else:
        op_atilde = np.kron(eye1, a1)
        op_atildedag = np.kron(eye1, a1.conj().T)

    # factor-swap permutation and the fermion phase making the swap an
    # algebra map; their product is the (real, self-inverse) tilde map
    swap = np.zeros((d * d, d * d))
    for n in range(d):
        for m in range(d):
            swap[m * d + n, n * d + m] = 1.0
    if stats.is_fermion:
        phase = np.diag([(-1.0) ** (n * m) for n in range(d) for m in range(d)])
    else:
        phase = np.eye(d * d)
    tmap = phase @ swap
    tmap_inv = swap @ phase

    return DoubledSpace(
        statistics=stats,
        truncation=d,
        dim=d * d,
        op_a=op_a,
        op_adag=op_adag,
        op_atilde=op_atilde,
        op_atildedag=op_atildedag,
        parity=np.kron(par1, eye1),
        parity_both=np.kron(par1, par1),
        tilde_map=tmap,
        tilde_map_inv=tmap_inv,
    )


def tilde_conjugate(op: np.ndarray, space: DoubledSpace) -> np.ndarray:
    """Antilinear tilde conjugation of a doubled-space operator.

    Swaps tensor factors, conjugates entries and applies the fermion
    phase correction.  An involution: applying twice is the identity,
    bit for bit, because the map is a signed permutation.
    """
    if op.shape != (space.dim, space.dim):
        raise ValueError(f"operator shape {op.shape} does not match dim {space.dim}")
    return space.tilde_map @ op.conj() @ space.tilde_map_inv


def build_bra_vacuum(space: DoubledSpace) -> np.ndarray:
    """Left thermal vacuum as a 1-D complex row vector.

    Solves the left null space of the pair {atilde^dag - conj(tau) a,
    adag - tau atilde} and normalizes the bare-vacuum component to 1,
    which reproduces the closed forms (all ones on |n, n~> for bosons;
    (1, 0, 0, i) for fermions).
    """
    tau = space.statistics.tau
    c1 = space.op_atildedag - np.conj(tau) * space.op_a
    c2 = space.op_adag - tau * space.op_atilde
    ns = null_space(np.vstack([c1.T, c2.T]))
    if ns.shape[1] != 1:
        raise RuntimeError(
            f"left vacuum null space has dimension {ns.shape[1]}, expected 1"
        )
    v = ns[:, 0]
    if abs(v[0]) < 1e-12:
        raise RuntimeError("left vacuum has no bare-vacuum component")
    return v / v[0]


def ket_truncation_shift(n0: float, truncation: int) -> float:
    """Occupation deficit of the truncated boson pair-condensate ket.

    The geometric-series ket cut at D levels measures n0 - D*f^D/(1-f^D)
    with f = n0/(1+n0); this returns that exact deficit (0 at n0=0).
    """
    if n0 == 0.0:
        return 0.0
    f = n0 / (1.0 + n0)
    fD = f**truncation
    return truncation * fD / (1.0 - fD)


def build_ket_vacuum(
    space: DoubledSpace, n0: float, tail_tol: float | None = 0.5
) -> ThermalVacuumPair:
    """Right thermal vacuum at occupation n0, bra-normalized to 1.

    The defining condition atilde|0> = tau*f*adag|0> with
    f = n0/(1+sigma*n0) is solved in the rescaled form
    (1+sigma*n0)*atilde|0> = tau*n0*adag|0>, which stays regular at the
    fermion boundary n0=1.  For bosons the truncated ket satisfies the
    truncated condition exactly but its measured occupation sits below
    n0 by ket_truncation_shift; when that shift exceeds tail_tol the
    construction is refused (tail_tol=None disables the guard).
    """
    stats = space.statistics
    if n0 < 0:
        raise ValueError("occupation must be nonnegative")
    if stats.is_fermion and n0 > 1:
        raise ValueError("fermion occupation must not exceed 1")
    if not stats.is_fermion and tail_tol is not None:
        shift = ket_truncation_shift(n0, space.truncation)
        if shift > tail_tol:
            raise ValueError(
                f"truncation tail {shift:.3g} exceeds {tail_tol:.3g}; "
                "raise the truncation"
            )

    g = 1.0 + stats.sigma * n0
    tau = stats.tau
    c1 = g * space.op_atilde - tau * n0 * space.op_adag
    c2 = g * space.op_a - np.conj(tau) * n0 * space.op_atildedag
    ns = null_space(np.vstack([c1, c2]))
    if ns.shape[1] != 1:
        raise RuntimeError(
            f"right vacuum null space has dimension {ns.shape[1]}, expected 1"
        )
    bra = build_bra_vacuum(space)
    ket = ns[:, 0]
    overlap = bra @ ket
    if abs(overlap) < 1e-12:
        raise RuntimeError("right vacuum is orthogonal to the left vacuum")
    ket = ket / overlap
    return ThermalVacuumPair(bra=bra, ket=ket, occupation=float(n0))


def measure_occupation(space: DoubledSpace, bra: np.ndarray, ket: np.ndarray) -> float:
    """Bi-normalized occupation <bra|a'a|ket> / <bra|ket>."""
    return float(np.real((bra @ (space.number_op @ ket)) / (bra @ ket)))
