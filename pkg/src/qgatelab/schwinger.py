"""Two-modes-per-qubit encoding and deformed qubit states.

Qubit i is carried by modes (2i-1, 2i): bit value x occupies the pair as
(x, 1-x), so |0> is the single excitation in the even mode and |1> in the odd
mode.  A deformed qubit ket is the matching basis ket rescaled by one creation
amplitude sqrt(B(1)) per qubit, the whole of the deformation in the
single-excitation sector, which is why deformed states stay collinear with
their undeformed counterparts.
"""

import itertools
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .fock import MultiModeState, basis_state, occupation_index
from .qnum import DeformationParams, NegativeRadicandError, psi_bracket

__all__ = [
    "DeformedQubitSpec",
    "ExponentConvention",
    "QubitEmbedding",
    "closing_params",
    "decode",
    "deformed_qubit_state",
    "encode_basis",
    "jm_state",
    "qubit_amplitude",
]


class ExponentConvention(str, Enum):
    """Where occupation exponents in the parameter-fixing rule are evaluated.

    RESULT reads them on the created state and makes every fixed-parameter
    qubit ket exactly unit norm; VACUUM reads them on the vacuum and leaves a
    residual sqrt(q) on excited qubits.  Both are kept so reports can compare.
    """

    RESULT = "result"
    VACUUM = "vacuum"


def _check_bits(bits) -> tuple:
    bits = tuple(int(b) for b in bits)
    if not bits:
        raise ValueError("at least one qubit is required")
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"bits must be 0 or 1, got {bits}")
    return bits


@dataclass(frozen=True)
class QubitEmbedding:
    """Shape data for qubit_count qubits over 2*qubit_count modes at a cutoff."""

    qubit_count: int
    cutoff: int = 2

    def __post_init__(self):
        if self.qubit_count < 1:
            raise ValueError("at least one qubit is required")
        if self.cutoff < 2:
            raise ValueError(f"cutoff must be at least 2, got {self.cutoff}")

    @property
    def mode_count(self) -> int:
        return 2 * self.qubit_count

    @property
    def dim(self) -> int:
        return self.cutoff**self.mode_count

    def occupation(self, bits) -> tuple:
        """Occupation tuple (x, 1-x) per qubit, modes in ascending order."""
        bits = _check_bits(bits)
        if len(bits) != self.qubit_count:
            raise ValueError(f"expected {self.qubit_count} bits, got {len(bits)}")
        occ = []
        for x in bits:
            occ.extend((x, 1 - x))
        return tuple(occ)

    def basis_index(self, bits) -> int:
        return occupation_index(self.occupation(bits), self.cutoff)

    def all_bits(self):
        """Every bit tuple in lexicographic order."""
        return itertools.product((0, 1), repeat=self.qubit_count)

    def projector(self) -> np.ndarray:
        """Orthogonal projector onto the valid-encoding subspace."""
        proj = np.zeros((self.dim, self.dim), dtype=complex)
        for bits in self.all_bits():
            idx = self.basis_index(bits)
            proj[idx, idx] = 1.0
        return proj


def encode_basis(bits, cutoff: int = 2) -> MultiModeState:
    """Undeformed basis ket of a bit string under the pair encoding."""
    emb = QubitEmbedding(len(_check_bits(bits)), cutoff)
    return basis_state(emb.occupation(bits), cutoff)


def decode(occ) -> tuple:
    """Bit string of a valid occupation tuple; rejects anything off the encoding.

    Valid means an even number of modes with each consecutive pair summing to
    one excitation, (1, 0) for bit 1 and (0, 1) for bit 0.
    """
    occ = tuple(int(n) for n in occ)
    if not occ or len(occ) % 2 != 0:
        raise ValueError(f"expected an even, nonempty number of modes, got {len(occ)}")
    bits = []
    for i in range(0, len(occ), 2):
        pair = occ[i : i + 2]
        if pair == (1, 0):
            bits.append(1)
        elif pair == (0, 1):
            bits.append(0)
        else:
            raise ValueError(f"modes {i + 1},{i + 2} hold {pair}, not one shared excitation")
    return tuple(bits)


def jm_state(j, m, d: int) -> MultiModeState:
    """Two-mode angular-momentum basis ket with occupations (j+m, j-m).

    j and m are half-integers with |m| <= j and j + m integral.  The ordinary
    creation-ladder normalization 1/sqrt((j+m)!(j-m)!) cancels exactly, so the
    state has unit amplitude on its single occupation tuple.
    """
    two_j = float(2 * j)
    two_m = float(2 * m)
    if two_j != int(two_j) or two_m != int(two_m):
        raise ValueError(f"j and m must be half-integers, got j={j!r}, m={m!r}")
    if (int(two_j) - int(two_m)) % 2 != 0:
        raise ValueError(f"j + m must be an integer, got j={j!r}, m={m!r}")
    n_first = (int(two_j) + int(two_m)) // 2
    n_second = (int(two_j) - int(two_m)) // 2
    if n_first < 0 or n_second < 0:
        raise ValueError(f"|m| must not exceed j, got j={j!r}, m={m!r}")
    if n_first >= d or n_second >= d:
        raise ValueError(f"occupations ({n_first}, {n_second}) exceed cutoff {d}")
    return basis_state((n_first, n_second), d)


def closing_params(q, bits, exponent: ExponentConvention = ExponentConvention.RESULT) -> DeformationParams:
    """The per-ket parameter assignment that closes the deformed gate identities.

    For qubit i holding bit x, with n1 = x under RESULT and n1 = 0 under
    VACUUM, the odd mode's pair is set to q^(1-n1) (both entries) and the even
    mode's pair to q^(n1).  Under RESULT every creation amplitude collapses to
    exactly 1 for every q.
    """
    bits = _check_bits(bits)
    exponent = ExponentConvention(exponent)
    q = float(q)
    pairs = {}
    for i, x in enumerate(bits, start=1):
        n1 = x if exponent is ExponentConvention.RESULT else 0
        pairs[2 * i - 1] = (q ** (1 - n1), q ** (1 - n1))
        pairs[2 * i] = (q**n1, q**n1)
    return DeformationParams(q).with_pairs(pairs)


def qubit_amplitude(bit: int, qubit_index: int, q, params: DeformationParams) -> float:
    """Creation amplitude sqrt(B(1)) of the mode carrying this qubit's excitation.

    Bit 1 excites the odd mode 2*qubit_index - 1, bit 0 the even mode
    2*qubit_index; the bracket uses that mode's psi pair.
    """
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit}")
    mode = 2 * qubit_index - 1 if bit else 2 * qubit_index
    psi_a, psi_b = params.pair(mode)
    bracket = psi_bracket(1, q, psi_a, psi_b)
    if bracket < 0.0:
        raise NegativeRadicandError(1, bracket)
    return math.sqrt(bracket)


@dataclass(frozen=True)
class DeformedQubitSpec:
    """A bit string plus the deformation data used to build its deformed ket.

    params None means the closing assignment derived from the bits themselves
    (the parameter-fixing rule); an explicit DeformationParams overrides it.
    """

    bits: tuple
    params: DeformationParams | None = None
    exponent: ExponentConvention = ExponentConvention.RESULT

    def __post_init__(self):
        object.__setattr__(self, "bits", _check_bits(self.bits))
        object.__setattr__(self, "exponent", ExponentConvention(self.exponent))


def deformed_qubit_state(spec: DeformedQubitSpec, q, cutoff: int = 2) -> MultiModeState:
    """Deformed multi-qubit ket: the encoded basis ket times one amplitude per qubit."""
    q = float(q)
    if spec.params is not None and spec.params.q != q:
        raise ValueError(f"params carry q={spec.params.q!r} but the state was requested at q={q!r}")
    params = spec.params if spec.params is not None else closing_params(q, spec.bits, spec.exponent)
    amp = 1.0
    for i, x in enumerate(spec.bits, start=1):
        amp *= qubit_amplitude(x, i, q, params)
    base = encode_basis(spec.bits, cutoff)
    return MultiModeState(base.mode_count, base.cutoff, amp * base.vector)
