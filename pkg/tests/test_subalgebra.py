import numpy as np
import pytest

import orbitlab as ol
from orbitlab.errors import InvalidArgumentError
from orbitlab.subalgebra import (AMBIGUOUS, MIXED, NILPOTENT, NOT_REDUCTIVE,
                                 REDUCTIVE, SEMISIMPLE, element_type,
                                 reductivity_verdict, structure_report)


def span(matrices, field="complex", size=None):
    arr = np.array(matrices, dtype=complex if field == "complex" else float)
    n = size or arr.shape[-1]
    return ol.LieAlgebraBasis(arr, field, n)


def embedded_e12(n=6):
    e = np.zeros((n, n), dtype=complex)
    e[0, 1] = 1.0
    return e


class TestStructureReport:
    def test_zero_algebra(self):
        empty = ol.LieAlgebraBasis(np.zeros((0, 3, 3), dtype=complex),
                                   "complex", 3)
        data = structure_report(empty)
        assert data.derived.dim == 0
        assert data.center.dim == 0

    def test_sl2_is_its_own_derived_algebra(self):
        basis = ol.lie_algebra_basis(ol.special_linear(2, "complex"))
        data = structure_report(basis)
        assert data.derived.dim == 3
        assert data.center.dim == 0
        assert np.linalg.matrix_rank(data.killing_on_derived) == 3

    def test_sl2_killing_matches_trace_form_oracle(self):
        # on sl(n) the Killing form is 2n tr(XY); compare Gram ranks and
        # signature on the same orthonormal basis
        basis = ol.lie_algebra_basis(ol.special_linear(2, "complex"))
        data = structure_report(basis)
        coords = np.linalg.lstsq(
            basis.matrices.reshape(3, -1).T,
            data.derived.matrices.reshape(3, -1).T, rcond=None)[0]
        mats = np.einsum("ik,ijl->kjl", coords, basis.matrices)
        oracle = 4.0 * np.einsum("aij,bji->ab", mats, mats)
        assert np.allclose(oracle, data.killing_on_derived, atol=1e-8)

    def test_single_nilpotent_line(self):
        data = structure_report(span([embedded_e12()]))
        assert data.derived.dim == 0
        assert data.center.dim == 1

    def test_bracket_closure_violation_rejected(self):
        e12 = np.zeros((2, 2), dtype=complex)
        e21 = np.zeros((2, 2), dtype=complex)
        e12[0, 1] = 1.0
        e21[1, 0] = 1.0
        with pytest.raises(InvalidArgumentError):
            structure_report(span([e12, e21]))


class TestElementType:
    def test_diagonal_semisimple(self):
        assert element_type(np.diag([1.0, -1.0])) == SEMISIMPLE

    def test_strict_upper_triangular_nilpotent(self):
        assert element_type(np.array([[0.0, 1.0], [0.0, 0.0]])) == NILPOTENT

    def test_zero_counts_as_nilpotent(self):
        assert element_type(np.zeros((3, 3))) == NILPOTENT

    def test_distinct_diagonal_semisimple_despite_triangle(self):
        # eigen-oracle: distinct eigenvalues force diagonalizability
        x = np.array([[0.0, 1.0], [0.0, 1.0]])
        assert sorted(np.linalg.eigvals(x).real) == [0.0, 1.0]
        assert element_type(x) == SEMISIMPLE

    def test_jordan_block_mixed(self):
        assert element_type(np.array([[1.0, 1.0], [0.0, 1.0]])) == MIXED

    def test_near_degenerate_clusters_ambiguous(self):
        x = np.diag([0.0, 5e-6, 1.0])  # the 0 and 5e-6 clusters sit too close
        assert element_type(x) == AMBIGUOUS

    def test_scale_invariance(self):
        x = np.array([[0.0, 1.0], [0.0, 0.0]])
        assert element_type(1e6 * x) == NILPOTENT
        assert element_type(1e-6 * np.diag([1.0, -1.0])) == SEMISIMPLE


class TestReductivityVerdict:
    def test_zero_algebra_reductive(self):
        empty = ol.LieAlgebraBasis(np.zeros((0, 4, 4), dtype=complex),
                                   "complex", 4)
        assert reductivity_verdict(empty).verdict == REDUCTIVE

    def test_nilpotent_line_not_reductive(self):
        report = reductivity_verdict(span([embedded_e12()]))
        assert report.verdict == NOT_REDUCTIVE
        kinds = [k for k, _ in report.witnesses]
        assert "non_semisimple_center_element" in kinds

    def test_torus_line_reductive(self):
        report = reductivity_verdict(span([np.diag([1.0, -1.0, 0.0]) + 0j]))
        assert report.verdict == REDUCTIVE
        assert report.center_dim == 1

    def test_sl2_reductive(self):
        basis = ol.lie_algebra_basis(ol.special_linear(2, "complex"))
        report = reductivity_verdict(basis)
        assert report.verdict == REDUCTIVE
        assert report.derived_dim == 3
        assert report.killing_rank_on_derived == 3

    def test_symplectic_stabilizer_reductive(self, v0):
        basis = ol.lie_algebra_basis(ol.symplectic(form=v0))
        report = reductivity_verdict(basis)
        assert report.verdict == REDUCTIVE
        assert report.dim == 21
        assert report.killing_rank_on_derived == report.derived_dim == 21

    def test_borel_of_sl2_not_reductive(self):
        d = np.diag([1.0, -1.0]).astype(complex)
        e = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
        report = reductivity_verdict(span([d, e]))
        assert report.verdict == NOT_REDUCTIVE
        assert not report.decomposition_ok

    def test_generic_block_intersection_is_a_rank_one_symplectic_reduction(
            self, alt6, sl6, sl4_block, v0):
        # dim-3 stabilizer intersections of the 4x4 block with a conjugated
        # symplectic algebra carry an sl2-like structure: semisimple
        h = ol.lie_algebra_basis(sl4_block)
        for seed in (0, 1):
            g = ol.random_group_element(sl6, seed, 0.5)
            x = ol.act(alt6, g, v0)
            stab = ol.stabilizer_subalgebra(alt6, h, x)
            assert stab.dim == 3
            report = reductivity_verdict(stab)
            assert report.verdict == REDUCTIVE
            assert report.derived_dim == 3
            assert report.center_dim == 0

    def test_special_translate_block4_stabilizer_is_reductive(
            self, alt6, sl4_block, x_translate):
        # at the special unipotent translate the 4x4-block stabilizer is the
        # full 10-dimensional symplectic algebra of the upper-left form
        h = ol.lie_algebra_basis(sl4_block)
        stab = ol.stabilizer_subalgebra(alt6, h, x_translate)
        assert stab.dim == 10
        report = reductivity_verdict(stab)
        assert report.verdict == REDUCTIVE
        assert report.killing_rank_on_derived == 10

    @pytest.mark.parametrize("seed", range(5))
    def test_single_line_matches_element_type(self, seed):
        rng = np.random.default_rng(seed)
        # random diagonalizable: distinct eigenvalues
        eigs = np.diag(rng.standard_normal(3) + np.array([0.0, 3.0, -3.0]))
        p = rng.standard_normal((3, 3))
        semisimple = np.linalg.solve(p, eigs @ p).astype(complex)
        report = reductivity_verdict(span([semisimple], size=3))
        assert report.verdict == REDUCTIVE
        # random strictly upper triangular: nilpotent
        strict = np.triu(rng.standard_normal((3, 3)), 1).astype(complex)
        if np.linalg.norm(strict) > 1e-6:
            report = reductivity_verdict(span([strict], size=3))
            assert report.verdict == NOT_REDUCTIVE

    @pytest.mark.parametrize("seed", range(3))
    def test_conjugation_invariance(self, seed, v0):
        spec = ol.special_linear(3, "complex")
        basis = ol.lie_algebra_basis(spec)
        g = ol.random_group_element(spec, seed, 0.4)
        base = reductivity_verdict(basis).verdict
        conj = reductivity_verdict(ol.adjoint_conjugate(basis, g)).verdict
        assert conj in (base, "inconclusive")

    def test_report_serialization(self):
        import json
        report = reductivity_verdict(span([embedded_e12()]))
        payload = report.to_json()
        text = json.dumps(payload, sort_keys=True)
        assert json.loads(text)["verdict"] == "not_reductive"
