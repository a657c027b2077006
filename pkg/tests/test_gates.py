"""Tests for gate actions, matrices, and the deformed dyad constructions."""

import cmath
import math

import numpy as np
import pytest

from qgatelab import (
    DeformationParams,
    ExponentConvention,
    GateKind,
    GateSpec,
    QubitEmbedding,
    deformed_gate_matrix,
    deformed_qubit_state,
    DeformedQubitSpec,
    encode_basis,
    gate_action,
    gate_action_traced,
    gate_matrix,
    toffoli_literal_matrix,
)

# Independent transcription of the truth tables, written out literally so the
# implementation cannot be compared against itself.
FLIP_TABLES = {
    GateKind.NOT: {(0,): [(1.0, (1,))], (1,): [(1.0, (0,))]},
    GateKind.HAD: {
        (0,): [(1.0, (0,)), (1.0, (1,))],
        (1,): [(-1.0, (1,)), (1.0, (0,))],
    },
    GateKind.CNOT: {
        (0, 0): [(1.0, (0, 0))],
        (0, 1): [(1.0, (0, 1))],
        (1, 0): [(1.0, (1, 1))],
        (1, 1): [(1.0, (1, 0))],
    },
    GateKind.SWAP: {
        (0, 0): [(1.0, (0, 0))],
        (0, 1): [(1.0, (1, 0))],
        (1, 0): [(1.0, (0, 1))],
        (1, 1): [(1.0, (1, 1))],
    },
    GateKind.FREDKIN: {
        (0, 0, 0): [(1.0, (0, 0, 0))],
        (0, 0, 1): [(1.0, (0, 0, 1))],
        (0, 1, 0): [(1.0, (0, 1, 0))],
        (0, 1, 1): [(1.0, (0, 1, 1))],
        (1, 0, 0): [(1.0, (1, 0, 0))],
        (1, 0, 1): [(1.0, (1, 1, 0))],
        (1, 1, 0): [(1.0, (1, 0, 1))],
        (1, 1, 1): [(1.0, (1, 1, 1))],
    },
    GateKind.TOFFOLI: {
        (0, 0, 0): [(1.0, (0, 0, 0))],
        (0, 0, 1): [(1.0, (0, 0, 1))],
        (0, 1, 0): [(1.0, (0, 1, 0))],
        (0, 1, 1): [(1.0, (0, 1, 1))],
        (1, 0, 0): [(1.0, (1, 0, 0))],
        (1, 0, 1): [(1.0, (1, 0, 1))],
        (1, 1, 0): [(1.0, (1, 1, 1))],
        (1, 1, 1): [(1.0, (1, 1, 0))],
    },
}

ALL_KINDS = tuple(GateKind)


def _spec(kind: GateKind) -> GateSpec:
    return GateSpec(kind, math.pi / 3) if kind is GateKind.PS else GateSpec(kind)


class TestGateAction:
    @pytest.mark.parametrize("kind", sorted(FLIP_TABLES, key=lambda k: k.value))
    def test_matches_reference_table(self, kind):
        spec = GateSpec(kind)
        for bits, expected in FLIP_TABLES[kind].items():
            got = sorted(gate_action(spec, bits), key=lambda t: t[1])
            want = sorted(((complex(c), b) for c, b in expected), key=lambda t: t[1])
            assert got == want

    @pytest.mark.parametrize("phi", [0.0, math.pi / 3, math.pi])
    def test_phase_gate_coefficients(self, phi):
        spec = GateSpec(GateKind.PS, phi)
        assert gate_action(spec, (0,)) == [(complex(1.0), (0,))]
        ((coeff, bits),) = gate_action(spec, (1,))
        assert bits == (1,)
        assert coeff == pytest.approx(cmath.exp(1j * phi), abs=1e-15)

    def test_traced_sources_mark_flips_and_carries(self):
        assert gate_action_traced(GateSpec(GateKind.NOT), (0,))[0].sources == (None,)
        assert gate_action_traced(GateSpec(GateKind.SWAP), (0, 1))[0].sources == (1, 0)
        assert gate_action_traced(GateSpec(GateKind.FREDKIN), (1, 0, 1))[0].sources == (0, 2, 1)
        assert gate_action_traced(GateSpec(GateKind.TOFFOLI), (1, 1, 0))[0].sources == (0, 1, None)
        assert gate_action_traced(GateSpec(GateKind.TOFFOLI), (0, 1, 0))[0].sources == (0, 1, 2)
        carried, flipped = gate_action_traced(GateSpec(GateKind.HAD), (1,))
        assert carried.sources == (0,)
        assert flipped.sources == (None,)

    def test_rejects_wrong_bit_count(self):
        with pytest.raises(ValueError):
            gate_action(GateSpec(GateKind.CNOT), (1,))

    def test_rejects_non_binary_bits(self):
        with pytest.raises(ValueError):
            gate_action(GateSpec(GateKind.NOT), (2,))


class TestGateMatrix:
    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_vanishes_off_the_valid_subspace(self, kind):
        spec = _spec(kind)
        matrix = gate_matrix(spec)
        proj = QubitEmbedding(spec.arity).projector()
        assert np.allclose(matrix, proj @ matrix @ proj, atol=1e-14)

    @pytest.mark.parametrize(
        "kind", [GateKind.NOT, GateKind.CNOT, GateKind.SWAP, GateKind.FREDKIN, GateKind.TOFFOLI]
    )
    def test_involution_on_the_valid_subspace(self, kind):
        spec = GateSpec(kind)
        matrix = gate_matrix(spec)
        proj = QubitEmbedding(spec.arity).projector()
        assert np.max(np.abs(matrix @ matrix - proj)) <= 1e-12

    def test_squared_parity_sum_doubles_the_projector(self):
        matrix = gate_matrix(GateSpec(GateKind.HAD))
        proj = QubitEmbedding(1).projector()
        assert np.max(np.abs(matrix @ matrix - 2.0 * proj)) <= 1e-12

    @pytest.mark.parametrize("phi", [0.0, math.pi / 3, math.pi, 2.5])
    def test_phase_gate_inverse(self, phi):
        forward = gate_matrix(GateSpec(GateKind.PS, phi))
        backward = gate_matrix(GateSpec(GateKind.PS, -phi))
        proj = QubitEmbedding(1).projector()
        assert np.max(np.abs(forward @ backward - proj)) <= 1e-12

    def test_swap_permutes_columns(self):
        emb = QubitEmbedding(2)
        matrix = gate_matrix(GateSpec(GateKind.SWAP), emb)
        for bits in emb.all_bits():
            ket = encode_basis(bits).vector
            swapped = encode_basis(bits[::-1]).vector
            assert np.array_equal(matrix @ ket, swapped)

    def test_rejects_mismatched_embedding(self):
        with pytest.raises(ValueError):
            gate_matrix(GateSpec(GateKind.CNOT), QubitEmbedding(3))


class TestDeformedGates:
    @pytest.mark.parametrize("q", [0.5, 2.0, 4.0])
    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_unit_weights_reproduce_the_undeformed_matrix(self, kind, q):
        spec = _spec(kind)
        params = DeformationParams.uniform(q)
        op = deformed_gate_matrix(spec, q, params)
        assert np.array_equal(op.matrix, gate_matrix(spec))
        assert op.assignment == "explicit"

    @pytest.mark.parametrize("q", [0.5, 2.0, 4.0])
    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_closing_assignment_reproduces_the_table(self, kind, q):
        # Under the closing rule every deformed ket is the unit basis ket, so
        # the deformed matrix must act exactly as the table does.
        spec = _spec(kind)
        op = deformed_gate_matrix(spec, q)
        emb = QubitEmbedding(spec.arity)
        assert op.assignment == "closing"
        for bits in emb.all_bits():
            expected = np.zeros(emb.dim, dtype=complex)
            for coeff, out_bits in gate_action(spec, bits):
                expected += coeff * encode_basis(out_bits).vector
            got = op.matrix @ encode_basis(bits).vector
            assert np.max(np.abs(got - expected)) <= 1e-12

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_reduces_to_undeformed_near_q_one(self, kind):
        spec = _spec(kind)
        op = deformed_gate_matrix(spec, 1.0 + 1e-7)
        assert np.max(np.abs(op.matrix - gate_matrix(spec))) <= 1e-6

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_invariant_under_q_inversion_with_uniform_weights(self, kind):
        # Equal pair weights make every level-1 bracket equal to the weight
        # itself, so inverting q cannot move the matrix.
        spec = _spec(kind)
        up = deformed_gate_matrix(spec, 2.0, DeformationParams.uniform(2.0, 3.0))
        down = deformed_gate_matrix(spec, 0.5, DeformationParams.uniform(0.5, 3.0))
        assert np.max(np.abs(up.matrix - down.matrix)) <= 1e-14

    def test_controlled_flip_with_general_weights(self):
        # Independent dense computation: the control branch contributes
        # c(in)*c(out) on the flipped ket, where c is the product of per-qubit
        # deformed amplitudes.
        q = 2.0
        params = DeformationParams.from_values(q, [1.0, 1.0, 1.0, 1.0, 2.0, 2.0, 0.5, 0.5])
        op = deformed_gate_matrix(GateSpec(GateKind.CNOT), q, params)

        def deformed(bits):
            return deformed_qubit_state(DeformedQubitSpec(bits, params), q).vector

        got = op.matrix @ deformed((1, 1))
        overlap = np.vdot(deformed((1, 1)), deformed((1, 1)))
        expected = overlap * deformed((1, 0))
        assert np.max(np.abs(got - expected)) <= 1e-12

    def test_vacuum_exponent_leaves_closure_residual(self):
        # Under the vacuum reading the excited ket carries sqrt(q), so mapping
        # the deformed |1> to the deformed |0> overshoots by exactly q - 1.
        q = 2.0
        vac = ExponentConvention.VACUUM
        op = deformed_gate_matrix(GateSpec(GateKind.NOT), q, exponent=vac)
        ket_in = deformed_qubit_state(DeformedQubitSpec((1,), exponent=vac), q).vector
        ket_out = deformed_qubit_state(DeformedQubitSpec((0,), exponent=vac), q).vector
        residual = np.linalg.norm(op.matrix @ ket_in - ket_out)
        assert residual == pytest.approx(q - 1.0, abs=1e-12)

    def test_literal_doubly_controlled_build_always_flips(self):
        q = 2.0
        literal = toffoli_literal_matrix(q, DeformationParams.uniform(q))
        faithful = deformed_gate_matrix(GateSpec(GateKind.TOFFOLI), q, DeformationParams.uniform(q))
        emb = QubitEmbedding(3)
        for bits in emb.all_bits():
            ket = encode_basis(bits).vector
            flipped = encode_basis((bits[0], bits[1], 1 - bits[2])).vector
            assert np.max(np.abs(literal @ ket - flipped)) <= 1e-12
        assert np.max(np.abs(literal - faithful.matrix)) > 0.5

    def test_trace_records_the_build(self):
        op = deformed_gate_matrix(GateSpec(GateKind.CNOT), 2.0)
        assert any("N(mode 1)" in line for line in op.trace)
        assert any(line.startswith("dyad") for line in op.trace)
