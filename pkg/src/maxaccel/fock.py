"""Truncated discrete-mode Fock space for the extended ladder algebra.

Modes are labeled by (momentum cell, acceleration cell) pairs on a finite
lattice; the continuum Dirac deltas become ``delta_ij / cell_volume``.
Operators are sparse matrices on the occupation basis truncated at a maximum
occupation per mode, ordered mixed-radix with the last mode varying fastest.

A hard truncation necessarily breaks ``[b, b+] = 1/V`` on states at the top
occupation, so the commutator check restricts input states to occupations
at most cutoff-1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse

__all__ = [
    "ModeLattice",
    "LadderKind",
    "FockOperator",
    "CommutatorReport",
    "build_ladder",
    "commutator_check",
    "basis_index",
]


@dataclass(frozen=True)
class ModeLattice:
    """Unique (p-cell, a-cell) mode labels and the phase-space cell volume."""

    modes: tuple[tuple[int, int], ...]
    cell_volume: float = 1.0

    def __post_init__(self) -> None:
        modes = tuple((int(p), int(a)) for p, a in self.modes)
        object.__setattr__(self, "modes", modes)
        if len(set(modes)) != len(modes):
            raise ValueError("mode labels must be unique")
        if not modes:
            raise ValueError("lattice needs at least one mode")
        if not self.cell_volume > 0:
            raise ValueError("cell_volume must be strictly positive")

    @property
    def n_modes(self) -> int:
        return len(self.modes)


class LadderKind(enum.Enum):
    CREATE = "create"
    ANNIHILATE = "annihilate"


@dataclass(frozen=True)
class FockOperator:
    """A sparse linear map on the truncated occupation basis."""

    matrix: sparse.csr_matrix
    cutoff: int

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


def basis_index(occupations: tuple[int, ...], cutoff: int) -> int:
    """Mixed-radix index of an occupation tuple (last mode fastest)."""
    index = 0
    for n in occupations:
        if not 0 <= n <= cutoff:
            raise ValueError("occupation outside [0, cutoff]")
        index = index * (cutoff + 1) + n
    return index


def _single_mode_annihilator(cutoff: int, cell_volume: float) -> sparse.csr_matrix:
    # Offdiagonal sqrt(n)/sqrt(V) so that [b, b+] = 1/V below the cutoff.
    scale = 1.0 / math.sqrt(cell_volume)
    data = [scale * math.sqrt(n) for n in range(1, cutoff + 1)]
    return sparse.diags(data, offsets=1, format="csr")


def build_ladder(
    lattice: ModeLattice, mode_index: int, kind: LadderKind, cutoff: int
) -> FockOperator:
    """Ladder operator for one mode: the standard matrix on that factor, identity elsewhere."""
    if not 0 <= mode_index < lattice.n_modes:
        raise ValueError(f"mode_index {mode_index} outside lattice of {lattice.n_modes} modes")
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    op = _single_mode_annihilator(cutoff, lattice.cell_volume)
    if kind is LadderKind.CREATE:
        op = op.T.tocsr()
    d = cutoff + 1
    eye = sparse.identity(d, format="csr")
    factors = [op if i == mode_index else eye for i in range(lattice.n_modes)]
    matrix = factors[0]
    for factor in factors[1:]:
        matrix = sparse.kron(matrix, factor, format="csr")
    return FockOperator(matrix=matrix.tocsr(), cutoff=cutoff)


def _interior_mask(n_modes: int, cutoff: int) -> np.ndarray:
    """Input states with every occupation <= cutoff-1 (truncation edge excluded)."""
    d = cutoff + 1
    mask = np.ones(d**n_modes, dtype=bool)
    digits = np.arange(d**n_modes)
    for _ in range(n_modes):
        mask &= (digits % d) <= cutoff - 1
        digits //= d
    return mask


@dataclass(frozen=True)
class CommutatorReport:
    """Worst deviation of the discretized ladder algebra on the interior subspace."""

    max_deviation: float
    subspace_dim: int
    n_modes: int
    cutoff: int
    cell_volume: float


def _max_abs_on_columns(matrix: sparse.spmatrix, mask: np.ndarray) -> float:
    sub = matrix.tocsc()[:, mask]
    return float(np.max(np.abs(sub.data))) if sub.nnz else 0.0


def commutator_check(lattice: ModeLattice, cutoff: int) -> CommutatorReport:
    """Verify [b_i, b+_j] = delta_ij/V, [b_i, b_j] = 0, [b+_i, b+_j] = 0.

    All relations are checked as matrices applied to interior input states
    (every occupation <= cutoff-1); the report carries the largest absolute
    deviation found.
    """
    if cutoff < 2:
        raise ValueError("cutoff must be at least 2 for a meaningful interior subspace")
    m = lattice.n_modes
    ann = [build_ladder(lattice, i, LadderKind.ANNIHILATE, cutoff).matrix for i in range(m)]
    cre = [build_ladder(lattice, i, LadderKind.CREATE, cutoff).matrix for i in range(m)]
    mask = _interior_mask(m, cutoff)
    eye = sparse.identity(ann[0].shape[0], format="csr")

    worst = 0.0
    for i in range(m):
        for j in range(m):
            mixed = ann[i] @ cre[j] - cre[j] @ ann[i]
            if i == j:
                mixed = mixed - eye / lattice.cell_volume
            worst = max(worst, _max_abs_on_columns(mixed, mask))
            worst = max(worst, _max_abs_on_columns(ann[i] @ ann[j] - ann[j] @ ann[i], mask))
            worst = max(worst, _max_abs_on_columns(cre[i] @ cre[j] - cre[j] @ cre[i], mask))

    return CommutatorReport(
        max_deviation=worst,
        subspace_dim=int(np.count_nonzero(mask)),
        n_modes=m,
        cutoff=cutoff,
        cell_volume=lattice.cell_volume,
    )
