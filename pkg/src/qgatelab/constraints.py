"""Brute-force audit of claimed parameter constraints on the deformed gate identities.

For each gate the claim table records which psi equalities are said to be
required for the deformed identity to close, together with the auxiliary
equalities the claim is conditioned on.  identity_residual measures how far a
single (q, psi) point is from closing the identity; discover_constraints sweeps
deterministic psi grids, classifies where the residual vanishes, searches for
the minimal sufficient equality pattern, and scores the claim.

Residual definition: the gate matrix is applied to the deformed input ket, and
the result is compared against the gate's traced action where each carried slot
keeps the amplitude of the input qubit it came from (the gate permutes whole
deformed kets, no amplitude comparison happens on carried slots) and each
flipped slot is re-encoded with the output bit's own mode pair.  "strict" takes
the Euclidean gap, "collinear" only the angle (norm-matched comparison).

Verdict semantics: claims are read as necessity statements under their
auxiliary assumptions.  A claim with no equalities is confirmed iff every
admissible grid point closes the identity to tolerance in both residual modes.
An equality claim is confirmed iff it is sufficient and necessary on the
tested grid in both modes; refuted otherwise, with notes recording which half
failed; convention-dependent iff the two residual modes disagree.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .gates import GateKind, GateSpec, gate_action_traced, gate_matrix
from .qdeform import OperatorConvention
from .qnum import DeformationParams, NegativeRadicandError
from .schwinger import (
    DeformedQubitSpec,
    ExponentConvention,
    QubitEmbedding,
    closing_params,
    deformed_qubit_state,
    qubit_amplitude,
)

__all__ = [
    "CLAIMS",
    "ConstraintClaim",
    "ConstraintReport",
    "discover_constraints",
    "hadamard_closure_ratio",
    "identity_residual",
]

DEFAULT_GRID = (0.5, 1.0, 2.0, 4.0)
DEFAULT_Q_VALUES = (0.5, 0.9, 1.1, 2.0)


@dataclass(frozen=True)
class ConstraintClaim:
    """A claimed psi restriction for one gate, with its auxiliary assumptions."""

    gate: GateKind
    equalities: tuple
    auxiliary: tuple
    text: str


CLAIMS = {
    GateKind.PS: ConstraintClaim(GateKind.PS, (), (), "no restriction on psi1..psi4"),
    GateKind.HAD: ConstraintClaim(
        GateKind.HAD, ((1, 2),), ((1, 3), (2, 4)), "psi1 = psi2, assuming psi1 = psi3 and psi2 = psi4"
    ),
    GateKind.NOT: ConstraintClaim(
        GateKind.NOT, ((1, 2),), ((1, 3), (2, 4)), "psi1 = psi2, assuming psi1 = psi3 and psi2 = psi4"
    ),
    GateKind.CNOT: ConstraintClaim(
        GateKind.CNOT, ((5, 6),), ((5, 7), (6, 8)), "psi5 = psi6, assuming psi5 = psi7 and psi6 = psi8"
    ),
    GateKind.SWAP: ConstraintClaim(GateKind.SWAP, (), (), "no restriction on psi1..psi8"),
    GateKind.FREDKIN: ConstraintClaim(GateKind.FREDKIN, (), (), "no restriction on psi1..psi12"),
    GateKind.TOFFOLI: ConstraintClaim(
        GateKind.TOFFOLI, ((9, 10),), ((9, 11), (10, 12)), "psi9 = psi10, assuming psi9 = psi11 and psi10 = psi12"
    ),
}


def hadamard_closure_ratio(n1: int, q) -> float:
    """Literal value of the scaling-factor ratio used to pin the Hadamard parameters.

    The constraint argument divides the two creation scaling factors and treats
    the ratio as identically 1.  Evaluated as printed,

        ((1 - n1) q^(-n1) - n1 q^(n1 + 1)) / ((1 - n1) q^(n1) - n1 q^(n1 - 1)),

    it is 1 at occupation n1 = 0 but q^2 at n1 = 1, and reports record that
    discrepancy rather than assuming the claim.
    """
    if n1 not in (0, 1):
        raise ValueError(f"the ratio is defined for occupation 0 or 1, got {n1!r}")
    q = float(q)
    if not math.isfinite(q) or q <= 0.0:
        raise ValueError(f"q must be a positive finite real, got {q!r}")
    numerator = (1 - n1) * q**-n1 - n1 * q ** (n1 + 1)
    denominator = (1 - n1) * q**n1 - n1 * q ** (n1 - 1)
    return numerator / denominator


def _collinear_gap(u: np.ndarray, v: np.ndarray) -> float:
    """Sine of the angle between two vectors; 0 for two zeros, 1 for exactly one zero.

    Computed as the norm of v's component orthogonal to u over the norm of v,
    which stays accurate near perfect alignment (the 1 - cos^2 form loses half
    the significant digits there).
    """
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 and nv == 0.0:
        return 0.0
    if nu == 0.0 or nv == 0.0:
        return 1.0
    coefficient = np.vdot(u, v) / (nu * nu)
    rejection = v - coefficient * u
    return min(1.0, float(np.linalg.norm(rejection)) / nv)


def identity_residual(
    spec: GateSpec,
    q,
    params: DeformationParams | None,
    residual_mode: str = "strict",
    exponent: ExponentConvention = ExponentConvention.RESULT,
) -> float:
    """Worst-case gap of the deformed gate identity over all input bit strings.

    params None uses the closing assignment per input ket.  Raises
    NegativeRadicandError when the point does not admit real amplitudes.
    Deformed kets are creation-built, so the value does not depend on the
    lowering-operator reading.
    """
    if residual_mode not in ("strict", "collinear"):
        raise ValueError(f"residual_mode must be 'strict' or 'collinear', got {residual_mode!r}")
    q = float(q)
    emb = QubitEmbedding(spec.arity)
    matrix = gate_matrix(spec, emb)
    worst = 0.0
    for bits in emb.all_bits():
        state = deformed_qubit_state(DeformedQubitSpec(bits, params, exponent), q)
        lhs = matrix @ state.vector
        in_params = params if params is not None else closing_params(q, bits, exponent)
        rhs = np.zeros(emb.dim, dtype=complex)
        for term in gate_action_traced(spec, bits):
            out_params = params if params is not None else closing_params(q, term.bits, exponent)
            amp = 1.0
            for slot, (src, out_bit) in enumerate(zip(term.sources, term.bits)):
                if src is None:
                    amp *= qubit_amplitude(out_bit, slot + 1, q, out_params)
                else:
                    amp *= qubit_amplitude(bits[src], src + 1, q, in_params)
            rhs[emb.basis_index(term.bits)] += term.coeff * amp
        if residual_mode == "strict":
            gap = float(np.linalg.norm(lhs - rhs))
        else:
            gap = _collinear_gap(lhs, rhs)
        worst = max(worst, gap)
    return worst


def _stratum_names(arity: int) -> tuple:
    """Sweep strata: cross-mode (auxiliary) equalities, within-mode equalities, free.

    The free stratum for three qubits would need 4^12 rows; it is replaced by
    three qubit-pair blocks (all 4^8 combinations for two qubits, third qubit
    pinned at 1), which distinguishes the same per-qubit equality patterns
    because amplitudes factor qubit by qubit.
    """
    if arity <= 2:
        return ("aux", "mode-pairs", "free")
    return ("aux", "mode-pairs", "free-q1q2", "free-q1q3", "free-q2q3")


def _slot_map(arity: int, stratum: str) -> list:
    """Per free grid slot, the list of 0-based psi indices it fills."""
    if stratum == "aux":
        slots = []
        for j in range(arity):
            slots.append([4 * j + 0, 4 * j + 2])
            slots.append([4 * j + 1, 4 * j + 3])
        return slots
    if stratum == "mode-pairs":
        slots = []
        for j in range(arity):
            slots.append([4 * j + 0, 4 * j + 1])
            slots.append([4 * j + 2, 4 * j + 3])
        return slots
    if stratum == "free":
        return [[i] for i in range(4 * arity)]
    if stratum.startswith("free-q"):
        first, second = int(stratum[6]) - 1, int(stratum[8]) - 1
        slots = [[4 * first + i] for i in range(4)]
        slots += [[4 * second + i] for i in range(4)]
        return slots
    raise ValueError(f"unknown stratum {stratum!r}")


def _stratum_rows(arity: int, stratum: str, grid) -> np.ndarray:
    """Deterministic psi rows (P x 12) for one stratum, ones everywhere else."""
    grid = tuple(float(g) for g in grid)
    slots = _slot_map(arity, stratum)
    combos = np.asarray(list(itertools.product(grid, repeat=len(slots))), dtype=float)
    rows = np.ones((combos.shape[0], 12))
    for position, indices in enumerate(slots):
        for index in indices:
            rows[:, index] = combos[:, position]
    return rows


def _sweep_rows(spec: GateSpec, q: float, rows: np.ndarray):
    """Vectorized residuals for many psi rows at one q.

    Returns (strict, collinear, admissible) arrays; residual entries are only
    meaningful where admissible is True.  The formulation mirrors
    identity_residual exactly: per input bit string the gate's output terms
    live on distinct basis kets, so the strict gap is the root sum of squared
    per-term amplitude gaps and the collinear gap comes from the cosine
    between the two coefficient vectors.
    """
    arity = spec.arity
    denominator = q - 1.0 / q
    psi_a = rows[:, 0 : 4 * arity : 2]
    psi_b = rows[:, 1 : 4 * arity : 2]
    brackets = (q * psi_a - psi_b / q) / denominator
    admissible = np.all(brackets >= 0.0, axis=1)
    amp_mode = np.sqrt(np.clip(brackets, 0.0, None))

    def amp_column(qubit: int, bit: int) -> np.ndarray:
        return amp_mode[:, 2 * qubit + (0 if bit else 1)]

    count = rows.shape[0]
    strict = np.zeros(count)
    collinear = np.zeros(count)
    for bits in itertools.product((0, 1), repeat=arity):
        c_in = np.ones(count)
        for qubit, bit in enumerate(bits):
            c_in = c_in * amp_column(qubit, bit)
        terms = gate_action_traced(spec, bits)
        weights = []
        c_outs = []
        for term in terms:
            c_out = np.ones(count)
            for slot, (src, out_bit) in enumerate(zip(term.sources, term.bits)):
                if src is None:
                    c_out = c_out * amp_column(slot, out_bit)
                else:
                    c_out = c_out * amp_column(src, bits[src])
            weights.append(abs(term.coeff) ** 2)
            c_outs.append(c_out)
        weights = np.asarray(weights)[:, None]
        c_outs = np.stack(c_outs)
        strict_here = np.sqrt((weights * (c_in[None, :] - c_outs) ** 2).sum(axis=0))
        lhs_sq = float(weights.sum()) * c_in**2
        rhs_sq = (weights * c_outs**2).sum(axis=0)
        dot = c_in * (weights * c_outs).sum(axis=0)
        both_zero = (lhs_sq == 0.0) & (rhs_sq == 0.0)
        one_zero = (lhs_sq == 0.0) ^ (rhs_sq == 0.0)
        # rejection form of the sine, mirroring _collinear_gap
        coefficient = dot / np.where(lhs_sq > 0.0, lhs_sq, 1.0)
        rejection_sq = (weights * (c_outs - coefficient[None, :] * c_in[None, :]) ** 2).sum(axis=0)
        safe_rhs = np.where(rhs_sq > 0.0, rhs_sq, 1.0)
        collinear_here = np.minimum(1.0, np.sqrt(rejection_sq / safe_rhs))
        collinear_here = np.where(both_zero, 0.0, np.where(one_zero, 1.0, collinear_here))
        strict = np.maximum(strict, strict_here)
        collinear = np.maximum(collinear, collinear_here)
    return strict, collinear, admissible


def _cross_check_samples(spec, q, rows, strict, collinear, admissible) -> int:
    """Recompute deterministic sample rows through the dense path; raise on mismatch."""
    count = rows.shape[0]
    step = max(1, count // 5)
    picks = sorted({0, count // 2, count - 1, step, 2 * step, 3 * step} & set(range(count)))
    checked = 0
    for index in picks:
        psi = tuple(float(v) for v in rows[index])
        if admissible[index]:
            point = DeformationParams(q, psi)
            dense_strict = identity_residual(spec, q, point, "strict")
            dense_collinear = identity_residual(spec, q, point, "collinear")
            if abs(dense_strict - float(strict[index])) > 1e-10 or abs(
                dense_collinear - float(collinear[index])
            ) > 1e-10:
                raise RuntimeError(
                    f"sweep engine disagrees with the dense path at {spec.kind.value}, "
                    f"q={q!r}, psi={psi!r}"
                )
        else:
            try:
                identity_residual(spec, q, DeformationParams(q, psi), "strict")
            except NegativeRadicandError:
                pass
            else:
                raise RuntimeError(
                    f"sweep engine marked an admissible point as skipped at {spec.kind.value}, "
                    f"q={q!r}, psi={psi!r}"
                )
        checked += 1
    return checked


def _satisfies(rows: np.ndarray, pattern) -> np.ndarray:
    """Boolean mask of rows meeting every psi_i = psi_j equality (grid values are exact)."""
    mask = np.ones(rows.shape[0], dtype=bool)
    for i, j in pattern:
        mask &= rows[:, i - 1] == rows[:, j - 1]
    return mask


def _pattern_text(pattern) -> str:
    return ",".join(f"psi{i}=psi{j}" for i, j in pattern) if pattern else "none"


def _candidate_patterns(claim: ConstraintClaim, arity: int) -> list:
    """Equality patterns ordered weakest first for the minimal-sufficient search."""
    candidates = [("none", ())]
    if claim.auxiliary:
        candidates.append(("auxiliary", tuple(claim.auxiliary)))
    mode_pairs = []
    all_equal = []
    for j in range(arity):
        base = 4 * j + 1
        mode_pairs += [(base, base + 1), (base + 2, base + 3)]
        all_equal += [(base, base + 1), (base + 1, base + 2), (base + 2, base + 3)]
    candidates.append(("within-mode-pairs", tuple(mode_pairs)))
    if claim.equalities:
        candidates.append(("claimed", tuple(claim.equalities)))
        candidates.append(("claimed+auxiliary", tuple(claim.equalities) + tuple(claim.auxiliary)))
    candidates.append(("all-equal-per-qubit", tuple(all_equal)))
    return candidates


@dataclass(frozen=True)
class ConstraintReport:
    """Deterministic outcome of one gate's constraint sweep."""

    gate: str
    phi: float
    q_values: tuple
    grid: tuple
    tolerance: float
    conventions: dict
    claim: dict
    strata: tuple
    totals: dict
    minimal_pattern: dict
    verdict: str
    notes: str

    def as_dict(self) -> dict:
        return {
            "gate": self.gate,
            "phi": self.phi,
            "q_values": list(self.q_values),
            "grid": list(self.grid),
            "tolerance": self.tolerance,
            "conventions": dict(self.conventions),
            "claim": dict(self.claim),
            "strata": [dict(s) for s in self.strata],
            "totals": dict(self.totals),
            "minimal_pattern": dict(self.minimal_pattern),
            "verdict": self.verdict,
            "notes": self.notes,
        }


def _stratum_summary(name, q, rows, strict, collinear, admissible, tolerance) -> dict:
    adm = admissible
    zero_strict = adm & (strict <= tolerance)
    zero_collinear = adm & (collinear <= tolerance)
    exemplars = []
    seen = set()

    def add_exemplar(index):
        index = int(index)
        if index in seen or not adm[index]:
            return
        seen.add(index)
        exemplars.append(
            {
                "psi": [float(v) for v in rows[index]],
                "strict": float(strict[index]),
                "collinear": float(collinear[index]),
            }
        )

    adm_indices = np.flatnonzero(adm)
    if adm_indices.size:
        add_exemplar(adm_indices[0])
        add_exemplar(adm_indices[np.argmax(strict[adm_indices])])
        zero_indices = np.flatnonzero(zero_strict)
        if zero_indices.size:
            add_exemplar(zero_indices[0])
        nonzero_indices = np.flatnonzero(adm & (strict > tolerance))
        if nonzero_indices.size:
            add_exemplar(nonzero_indices[0])
    skipped_indices = np.flatnonzero(~adm)
    skipped_exemplar = (
        {"psi": [float(v) for v in rows[skipped_indices[0]]]} if skipped_indices.size else None
    )
    summary = {
        "stratum": name,
        "q": float(q),
        "rows": int(rows.shape[0]),
        "admissible": int(adm.sum()),
        "skipped": int((~adm).sum()),
        "zero_strict": int(zero_strict.sum()),
        "zero_collinear": int(zero_collinear.sum()),
        "max_strict": float(strict[adm].max()) if adm.any() else 0.0,
        "max_collinear": float(collinear[adm].max()) if adm.any() else 0.0,
        "exemplars": exemplars[:4],
    }
    if skipped_exemplar is not None:
        summary["skipped_exemplar"] = skipped_exemplar
    return summary


def discover_constraints(
    gate,
    q_values=DEFAULT_Q_VALUES,
    grid=DEFAULT_GRID,
    tolerance: float = 1e-12,
    operator: OperatorConvention = OperatorConvention.MATRIX_ELEMENT,
    exponent: ExponentConvention = ExponentConvention.RESULT,
) -> ConstraintReport:
    """Sweep the psi grid for one gate and score its claimed constraint.

    gate is a GateKind or a GateSpec (a bare phase-shift kind gets phi = pi/3
    so the sweep is not the identity gate).  q values must be positive and
    not 1; grid values must be positive.  The sweep runs the vectorized engine
    over every stratum and q, cross-checks deterministic samples against the
    dense identity_residual path, then classifies the zero set.
    """
    spec = gate if isinstance(gate, GateSpec) else GateSpec(GateKind(gate), 0.0)
    if not isinstance(gate, GateSpec) and spec.kind is GateKind.PS:
        spec = GateSpec(GateKind.PS, math.pi / 3)
    q_values = tuple(float(q) for q in q_values)
    if not q_values:
        raise ValueError("at least one q value is required")
    for q in q_values:
        if not math.isfinite(q) or q <= 0.0 or q == 1.0:
            raise ValueError(f"sweep q values must be positive, finite and not 1, got {q!r}")
    grid = tuple(float(g) for g in grid)
    if len(grid) < 2 or any(not math.isfinite(g) or g <= 0.0 for g in grid):
        raise ValueError(f"grid values must be at least two positive finite reals, got {grid!r}")
    claim = CLAIMS[spec.kind]
    operator = OperatorConvention(operator)
    exponent = ExponentConvention(exponent)

    strata_summaries = []
    pooled_rows = []
    pooled_strict = []
    pooled_collinear = []
    pooled_admissible = []
    samples_checked = 0
    for name in _stratum_names(spec.arity):
        rows = _stratum_rows(spec.arity, name, grid)
        for q in q_values:
            strict, collinear, admissible = _sweep_rows(spec, q, rows)
            samples_checked += _cross_check_samples(spec, q, rows, strict, collinear, admissible)
            strata_summaries.append(
                _stratum_summary(name, q, rows, strict, collinear, admissible, tolerance)
            )
            pooled_rows.append(rows)
            pooled_strict.append(strict)
            pooled_collinear.append(collinear)
            pooled_admissible.append(admissible)
    rows_all = np.concatenate(pooled_rows)
    strict_all = np.concatenate(pooled_strict)
    collinear_all = np.concatenate(pooled_collinear)
    admissible_all = np.concatenate(pooled_admissible)

    candidates = _candidate_patterns(claim, spec.arity)
    minimal = {}
    for mode, residual_all in (("strict", strict_all), ("collinear", collinear_all)):
        found_name, found_pattern = "unresolved", None
        for cand_name, pattern in candidates:
            mask = _satisfies(rows_all, pattern) & admissible_all
            if int(mask.sum()) >= 2 and bool(np.all(residual_all[mask] <= tolerance)):
                found_name, found_pattern = cand_name, pattern
                break
        minimal[mode] = {
            "name": found_name,
            "equalities": _pattern_text(found_pattern) if found_pattern is not None else "unresolved",
        }

    verdicts = {}
    note_parts = []
    claim_mask_pool = _satisfies(rows_all, claim.equalities) & _satisfies(rows_all, claim.auxiliary)
    claim_mask_pool &= admissible_all
    for mode, residual_all in (("strict", strict_all), ("collinear", collinear_all)):
        if not claim.equalities:
            ok = bool(admissible_all.any()) and bool(np.all(residual_all[admissible_all] <= tolerance))
            verdicts[mode] = "confirmed" if ok else "refuted"
            continue
        aux_mask = _satisfies(rows_all, claim.auxiliary) & admissible_all
        with_claim = aux_mask & _satisfies(rows_all, claim.equalities)
        without_claim = aux_mask & ~_satisfies(rows_all, claim.equalities)
        sufficient = int(with_claim.sum()) >= 2 and bool(np.all(residual_all[with_claim] <= tolerance))
        zero_without = without_claim & (residual_all <= tolerance)
        necessary = int(without_claim.sum()) > 0 and int(zero_without.sum()) == 0
        verdicts[mode] = "confirmed" if (sufficient and necessary) else "refuted"
        if sufficient and not necessary:
            note_parts.append(
                f"{mode}: claimed equalities hold the identity at all {int(with_claim.sum())} "
                f"tested points but are not necessary, the identity already closes at "
                f"{int(zero_without.sum())} admissible points satisfying only the auxiliary "
                "assumptions"
            )
        elif not sufficient:
            note_parts.append(f"{mode}: claimed equalities do not close the identity on the grid")

    if verdicts["strict"] == verdicts["collinear"]:
        verdict = verdicts["strict"]
    else:
        verdict = "convention-dependent"
        note_parts.append(
            f"strict verdict {verdicts['strict']}, collinear verdict {verdicts['collinear']}"
        )

    admissible_count = int(admissible_all.sum())
    totals = {
        "rows": int(rows_all.shape[0]),
        "admissible": admissible_count,
        "skipped": int(rows_all.shape[0]) - admissible_count,
        "max_strict": float(strict_all[admissible_all].max()) if admissible_count else 0.0,
        "max_collinear": float(collinear_all[admissible_all].max()) if admissible_count else 0.0,
        "claim_points": int(claim_mask_pool.sum()),
        "claim_max_strict": float(strict_all[claim_mask_pool].max()) if claim_mask_pool.any() else 0.0,
        "claim_max_collinear": float(collinear_all[claim_mask_pool].max())
        if claim_mask_pool.any()
        else 0.0,
        "cross_checked": int(samples_checked),
    }
    if not claim.equalities and verdict == "confirmed":
        note_parts.insert(
            0,
            f"identity closes at every admissible grid point in both residual modes "
            f"({admissible_count} points, {totals['skipped']} inadmissible points skipped)",
        )
    note_parts.append(
        f"minimal sufficient pattern: strict {minimal['strict']['equalities']}, "
        f"collinear {minimal['collinear']['equalities']}"
    )

    claim_info = {
        "text": claim.text,
        "equalities": _pattern_text(claim.equalities),
        "auxiliary": _pattern_text(claim.auxiliary),
    }
    conventions = {
        "operator": operator.value,
        "exponent": exponent.value,
        "residual_modes": ["strict", "collinear"],
        "note": "deformed kets are creation-built, so residuals do not depend on the "
        "lowering-operator reading",
    }
    return ConstraintReport(
        gate=spec.kind.value,
        phi=float(spec.phi),
        q_values=q_values,
        grid=grid,
        tolerance=float(tolerance),
        conventions=conventions,
        claim=claim_info,
        strata=tuple(strata_summaries),
        totals=totals,
        minimal_pattern=minimal,
        verdict=verdict,
        notes="; ".join(note_parts),
    )
