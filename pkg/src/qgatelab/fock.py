"""Truncated Fock-space machinery: ladder matrices, tensor lifts, occupation indexing.

Everything is small and dense (complex128).  Multi-mode indexing is row-major over
occupation tuples with mode 1 slowest: for cutoff d and k modes the basis index of
(n_1, ..., n_k) is sum(n_i * d^(k - i)).
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ModeOperators",
    "MultiModeState",
    "basis_state",
    "index_occupation",
    "lift",
    "make_mode_ops",
    "occupation_index",
    "vacuum",
]


@dataclass(frozen=True)
class ModeOperators:
    """Dense ladder matrices on the levels 0 .. cutoff-1 of one mode.

    a|n> = sqrt(n)|n-1>, a_dag|n> = sqrt(n+1)|n+1> with the top transition
    removed by truncation, and n_op = diag(0, ..., cutoff-1) with exact integer
    entries (agreeing with a_dag @ a to rounding).
    """

    cutoff: int
    a: np.ndarray
    a_dag: np.ndarray
    n_op: np.ndarray


def make_mode_ops(d: int) -> ModeOperators:
    """Ladder operators for a single mode truncated to d levels (d >= 2)."""
    if d < 2:
        raise ValueError(f"cutoff must be at least 2, got {d}")
    a = np.diag(np.sqrt(np.arange(1, d, dtype=float)), 1).astype(complex)
    n_op = np.diag(np.arange(d, dtype=float)).astype(complex)
    return ModeOperators(cutoff=d, a=a, a_dag=a.conj().T, n_op=n_op)


def lift(op: np.ndarray, mode_index: int, mode_count: int) -> np.ndarray:
    """Embed a single-mode operator at a 1-based mode position among mode_count modes.

    The tensor order matches the state indexing (mode 1 slowest), so the result
    is I^(mode_index-1) (x) op (x) I^(mode_count-mode_index).
    """
    op = np.asarray(op)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {op.shape}")
    if not 1 <= mode_index <= mode_count:
        raise ValueError(f"mode index must be in 1..{mode_count}, got {mode_index}")
    d = op.shape[0]
    left = np.eye(d ** (mode_index - 1), dtype=complex)
    right = np.eye(d ** (mode_count - mode_index), dtype=complex)
    return np.kron(np.kron(left, op.astype(complex)), right)


def occupation_index(occ, d: int) -> int:
    """Basis index of an occupation tuple (row-major, mode 1 slowest)."""
    idx = 0
    for n in occ:
        n = int(n)
        if not 0 <= n < d:
            raise ValueError(f"occupation {n} outside 0..{d - 1}")
        idx = idx * d + n
    return idx


def index_occupation(index: int, mode_count: int, d: int) -> tuple:
    """Occupation tuple of a basis index; inverse of occupation_index."""
    index = int(index)
    if not 0 <= index < d**mode_count:
        raise ValueError(f"index {index} outside 0..{d ** mode_count - 1}")
    occ = []
    for _ in range(mode_count):
        index, rem = divmod(index, d)
        occ.append(rem)
    return tuple(reversed(occ))


@dataclass(frozen=True)
class MultiModeState:
    """Amplitude vector over mode_count modes at a common cutoff.

    The norm is reported through the property below and never silently imposed;
    deformed constructions deliberately produce non-unit vectors.
    """

    mode_count: int
    cutoff: int
    vector: np.ndarray

    def __post_init__(self):
        vec = np.array(self.vector, dtype=complex)
        if vec.shape != (self.cutoff**self.mode_count,):
            raise ValueError(
                f"expected vector of length {self.cutoff ** self.mode_count}, got shape {vec.shape}"
            )
        vec.flags.writeable = False
        object.__setattr__(self, "vector", vec)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))

    def amplitude(self, occ) -> complex:
        """Amplitude on one occupation tuple."""
        if len(occ) != self.mode_count:
            raise ValueError(f"expected {self.mode_count} occupations, got {len(occ)}")
        return complex(self.vector[occupation_index(occ, self.cutoff)])


def vacuum(mode_count: int, d: int) -> MultiModeState:
    """Every mode in level 0."""
    vec = np.zeros(d**mode_count, dtype=complex)
    vec[0] = 1.0
    return MultiModeState(mode_count, d, vec)


def basis_state(occ, d: int) -> MultiModeState:
    """Unit amplitude on a single occupation tuple."""
    occ = tuple(int(n) for n in occ)
    vec = np.zeros(d ** len(occ), dtype=complex)
    vec[occupation_index(occ, d)] = 1.0
    return MultiModeState(len(occ), d, vec)
