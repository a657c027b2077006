"""Scalar q-number arithmetic: deformed integers, two-parameter brackets, factorials.

The deformed integer [n] = (q^n - q^(-n)) / (q - q^(-1)) underlies every matrix
element in this package.  The two-parameter variant weights the numerator with a
per-mode pair (psi_a, psi_b); its values feed square roots downstream, so bracket
admissibility (nonnegative radicands) is policed with a dedicated error type.
"""

import math
import operator
from dataclasses import dataclass

__all__ = [
    "MODE_COUNT",
    "PSI_COUNT",
    "DeformationParams",
    "NegativeRadicandError",
    "q_bracket",
    "psi_bracket",
    "q_factorial",
]

MODE_COUNT = 6
PSI_COUNT = 2 * MODE_COUNT


class NegativeRadicandError(ValueError):
    """A deformed amplitude would need the square root of a negative bracket."""

    def __init__(self, level: int, value: float):
        self.level = level
        self.value = value
        super().__init__(
            f"bracket {value!r} at occupation level {level} is negative; "
            "this (q, psi) assignment does not admit real deformed amplitudes"
        )


def _check_q(q) -> float:
    q = float(q)
    if not math.isfinite(q) or q <= 0.0:
        raise ValueError(f"deformation parameter q must be a positive finite real, got {q!r}")
    return q


def _check_level(n) -> int:
    n = operator.index(n)
    if n < 0:
        raise ValueError(f"occupation number must be nonnegative, got {n}")
    return n


def q_bracket(n, q) -> float:
    """Deformed integer [n] = (q^n - q^(-n)) / (q - q^(-1)).

    Symmetric under q <-> 1/q.  At q = 1 the analytic limit n is returned
    directly instead of evaluating the 0/0 ratio.
    """
    n = _check_level(n)
    q = _check_q(q)
    if q == 1.0:
        return float(n)
    return (q**n - q**-n) / (q - 1.0 / q)


def psi_bracket(n, q, psi_a, psi_b) -> float:
    """Two-parameter bracket (q^n * psi_a - q^(-n) * psi_b) / (q - q^(-1)).

    Reduces to q_bracket(n, q) at psi_a = psi_b = 1, and to n * psi at q = 1
    with psi_a = psi_b = psi.  q = 1 with unequal pair values is rejected: the
    numerator does not vanish with the denominator, so no finite value exists.
    """
    n = _check_level(n)
    q = _check_q(q)
    psi_a = float(psi_a)
    psi_b = float(psi_b)
    if q == 1.0:
        if psi_a != psi_b:
            raise ValueError(
                "q = 1 is only defined for equal pair parameters; "
                f"got psi_a={psi_a!r}, psi_b={psi_b!r}"
            )
        return float(n) * psi_a
    return (q**n * psi_a - q**-n * psi_b) / (q - 1.0 / q)


def q_factorial(n, q) -> float:
    """Product [1][2]...[n]; the empty product 1 for n = 0."""
    n = _check_level(n)
    q = _check_q(q)
    out = 1.0
    for k in range(1, n + 1):
        out *= q_bracket(k, q)
    return out


@dataclass(frozen=True)
class DeformationParams:
    """Deformation strength q together with the twelve mode parameters.

    Mode m (1-based, six modes) owns the ordered pair (psi[2m-2], psi[2m-1]);
    qubit i is carried by modes (2i-1, 2i), so one qubit consumes four
    consecutive psi values.  s = ln q is derived from q, never stored.
    """

    q: float
    psi: tuple = (1.0,) * PSI_COUNT

    def __post_init__(self):
        object.__setattr__(self, "q", _check_q(self.q))
        psi = tuple(float(p) for p in self.psi)
        if len(psi) != PSI_COUNT:
            raise ValueError(f"expected {PSI_COUNT} psi values, got {len(psi)}")
        if not all(math.isfinite(p) for p in psi):
            raise ValueError("psi values must be finite")
        object.__setattr__(self, "psi", psi)

    @property
    def s(self) -> float:
        return math.log(self.q)

    def pair(self, mode: int) -> tuple:
        """Ordered (psi_a, psi_b) pair of the given 1-based mode."""
        if not 1 <= mode <= MODE_COUNT:
            raise ValueError(f"mode index must be in 1..{MODE_COUNT}, got {mode}")
        return self.psi[2 * mode - 2], self.psi[2 * mode - 1]

    def with_pairs(self, pairs: dict) -> "DeformationParams":
        """Copy with the given {mode: (psi_a, psi_b)} entries replaced."""
        psi = list(self.psi)
        for mode, (pa, pb) in pairs.items():
            if not 1 <= mode <= MODE_COUNT:
                raise ValueError(f"mode index must be in 1..{MODE_COUNT}, got {mode}")
            psi[2 * mode - 2] = float(pa)
            psi[2 * mode - 1] = float(pb)
        return DeformationParams(self.q, tuple(psi))

    @classmethod
    def uniform(cls, q, psi_value=1.0) -> "DeformationParams":
        """All twelve psi values equal."""
        return cls(q, (float(psi_value),) * PSI_COUNT)

    @classmethod
    def from_values(cls, q, values) -> "DeformationParams":
        """Params from an explicit psi_1.. prefix; missing entries default to 1."""
        values = [float(v) for v in values]
        if len(values) > PSI_COUNT:
            raise ValueError(f"at most {PSI_COUNT} psi values, got {len(values)}")
        values += [1.0] * (PSI_COUNT - len(values))
        return cls(q, tuple(values))
