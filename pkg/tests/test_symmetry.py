import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qregstat import (
    MAX_QUBITS,
    DomainError,
    SizeError,
    StateVector,
    ZeroProjectionError,
    all_zero,
    antisymmetrizer_bruteforce,
    check_realizable,
    dicke,
    dicke_projector,
    equal_up_to_phase,
    symmetric_dim,
    symmetrize,
    symmetrizer_bruteforce,
    to_dicke,
    uniform,
)
from qregstat.symmetry import (
    _pairwise_sum,
    numerical_rank,
    permutation_parity,
    permute_cells,
)

from oracles import symmetrizer_by_strings

R3 = 1 / math.sqrt(3)
R2 = 1 / math.sqrt(2)
EQ2 = StateVector(3, np.array([0, 1, 1, 0, 1, 0, 0, 0]) * R3)
SINGLET = StateVector(2, np.array([0, 1, -1, 0]) * R2)
GHZ = StateVector(3, np.array([1, 0, 0, 0, 0, 0, 0, 1]) * R2)


def random_state(rng, n):
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return StateVector(n, v / np.linalg.norm(v))


class TestDicke:
    def test_weight_one_three_cells(self):
        amps = dicke(3, 1).amplitudes
        assert set(np.flatnonzero(amps)) == {1, 2, 4}
        np.testing.assert_allclose(amps[[1, 2, 4]], R3, atol=1e-15)

    def test_two_cells(self):
        np.testing.assert_allclose(dicke(2, 1).amplitudes, [0, R2, R2, 0], atol=1e-15)

    def test_weight_zero_is_all_zero(self):
        np.testing.assert_array_equal(dicke(3, 0).amplitudes, all_zero(3).amplitudes)

    @pytest.mark.parametrize("k", [-1, 4])
    def test_domain(self, k):
        with pytest.raises(DomainError):
            dicke(3, k)

    @pytest.mark.parametrize("n", range(1, MAX_QUBITS + 1))
    def test_orthonormal(self, n):
        basis = np.array([dicke(n, k).amplitudes for k in range(n + 1)])
        gram = basis.conj() @ basis.T
        assert np.max(np.abs(gram - np.eye(n + 1))) < 1e-12


class TestBruteForce:
    def test_two_cells(self):
        expected = [[1, 0, 0, 0], [0, 0.5, 0.5, 0], [0, 0.5, 0.5, 0], [0, 0, 0, 1]]
        np.testing.assert_allclose(symmetrizer_bruteforce(2), expected, atol=1e-15)

    def test_one_cell(self):
        np.testing.assert_array_equal(symmetrizer_bruteforce(1), np.eye(2))

    def test_trace_three_cells(self):
        assert np.trace(symmetrizer_bruteforce(3)) == pytest.approx(4.0, abs=1e-12)

    def test_antisymmetrizer_two_cells_is_singlet_projector(self):
        singlet = SINGLET.amplitudes.real
        np.testing.assert_allclose(antisymmetrizer_bruteforce(2), np.outer(singlet, singlet), atol=1e-15)

    @pytest.mark.parametrize("n, expected", [(2, 1.0), (3, 0.0)])
    def test_antisymmetrizer_trace(self, n, expected):
        assert np.trace(antisymmetrizer_bruteforce(n)) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("f", [symmetrizer_bruteforce, antisymmetrizer_bruteforce])
    def test_cap(self, f):
        with pytest.raises(SizeError):
            f(8)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_string_oracle(self, n):
        assert np.max(np.abs(symmetrizer_bruteforce(n) - symmetrizer_by_strings(n))) < 1e-12
        assert np.max(np.abs(antisymmetrizer_bruteforce(n) - symmetrizer_by_strings(n, signed=True))) < 1e-12

    @pytest.mark.parametrize("n", range(2, 7))
    def test_dicke_projector_equals_bruteforce(self, n):
        assert np.max(np.abs(dicke_projector(n) - symmetrizer_bruteforce(n))) < 1e-10

    @pytest.mark.parametrize("n", range(2, 7))
    def test_idempotent(self, n):
        for p in (dicke_projector(n), symmetrizer_bruteforce(n), antisymmetrizer_bruteforce(n)):
            assert np.max(np.abs(p @ p - p)) < 1e-10

    @pytest.mark.parametrize("n", range(2, 7))
    def test_traces(self, n):
        assert abs(np.trace(symmetrizer_bruteforce(n)) - (n + 1)) < 1e-8
        assert abs(np.trace(antisymmetrizer_bruteforce(n)) - (1 if n == 2 else 0)) < 1e-8

    def test_parity(self):
        for perm in itertools.permutations(range(5)):
            inv = sum(perm[a] > perm[b] for a in range(5) for b in range(a + 1, 5))
            assert permutation_parity(perm) == (-1) ** inv

    def test_pairwise_sum_order_is_fixed(self):
        rng = np.random.default_rng(0)
        terms = [rng.normal(size=3) for _ in range(37)]
        a = _pairwise_sum(iter(terms))
        b = _pairwise_sum(list(terms))
        assert np.array_equal(a, b)
        np.testing.assert_allclose(a, np.sum(terms, axis=0), atol=1e-12)


class TestSymmetricDim:
    @pytest.mark.parametrize("n, d", [(3, 4), (1, 2)])
    def test_examples(self, n, d):
        assert symmetric_dim(n) == d

    def test_seven_cells_matches_bruteforce_rank(self):
        assert symmetric_dim(7) == 8 == numerical_rank(symmetrizer_bruteforce(7), 1e-8)


class TestSymmetrize:
    def test_single_excitation(self):
        sym, overlap = symmetrize(StateVector.basis("100"))
        assert np.max(np.abs(sym.amplitudes - EQ2.amplitudes)) < 1e-12
        assert overlap == pytest.approx(1 / 3, abs=1e-12)
        # brute-force projector agrees on the overlap
        v = symmetrizer_by_strings(3) @ StateVector.basis("100").amplitudes
        assert overlap == pytest.approx(np.vdot(v, v).real, abs=1e-12)

    def test_uniform_is_fixed(self):
        sym, overlap = symmetrize(uniform(3))
        np.testing.assert_allclose(sym.amplitudes, uniform(3).amplitudes, atol=1e-12)
        assert overlap == pytest.approx(1.0, abs=1e-12)

    def test_singlet_has_no_symmetric_part(self):
        with pytest.raises(ZeroProjectionError):
            symmetrize(SINGLET)

    @settings(max_examples=40)
    @given(st.integers(2, 6), st.integers(0, 2**32 - 1), st.data())
    def test_permutation_invariance(self, n, seed, data):
        rng = np.random.default_rng(seed)
        psi = random_state(rng, n)
        perm = data.draw(st.permutations(range(n)))
        a, _ = symmetrize(psi)
        b, _ = symmetrize(permute_cells(psi, perm))
        assert equal_up_to_phase(a, b, 1e-10)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_matches_bruteforce_projection(self, n):
        rng = np.random.default_rng(n)
        psi = random_state(rng, n)
        v = symmetrizer_by_strings(n) @ psi.amplitudes
        sym, overlap = symmetrize(psi)
        assert overlap == pytest.approx(np.vdot(v, v).real, abs=1e-12)
        np.testing.assert_allclose(sym.amplitudes, v / np.linalg.norm(v), atol=1e-12)


class TestToDicke:
    def test_weight_one_state(self):
        c = to_dicke(EQ2)
        np.testing.assert_allclose(c.coeffs, [0, 1, 0, 0], atol=1e-12)
        assert c.residual_norm < 1e-12

    def test_basis_100(self):
        c = to_dicke(StateVector.basis("100"))
        np.testing.assert_allclose(c.coeffs, [0, R3, 0, 0], atol=1e-12)
        assert c.residual_norm == pytest.approx(math.sqrt(2 / 3), abs=1e-12)

    def test_ghz(self):
        c = to_dicke(GHZ)
        np.testing.assert_allclose(c.coeffs, [R2, 0, 0, R2], atol=1e-12)
        assert c.residual_norm < 1e-12

    @settings(max_examples=40)
    @given(st.integers(1, 8), st.integers(0, 2**32 - 1))
    def test_completeness(self, n, seed):
        psi = random_state(np.random.default_rng(seed), n)
        c = to_dicke(psi)
        sym = c.reconstruct()
        residual = psi.amplitudes - sym
        np.testing.assert_allclose(sym + residual, psi.amplitudes, atol=1e-10)
        assert abs(np.linalg.norm(residual) - c.residual_norm) < 1e-12
        assert abs(c.symmetric_weight + c.residual_norm**2 - 1) < 1e-10
        # the residual is orthogonal to every Dicke state
        for k in range(n + 1):
            assert abs(np.vdot(dicke(n, k).amplitudes, residual)) < 1e-10


class TestRealizable:
    @pytest.mark.parametrize("n", range(1, MAX_QUBITS + 1))
    def test_uniform(self, n):
        r = check_realizable(uniform(n))
        assert r.realizable
        assert abs(r.overlap - 1.0) < 1e-10

    def test_single_excitation_basis_state(self):
        r = check_realizable(StateVector.basis("100"))
        assert not r.realizable
        assert r.overlap == pytest.approx(1 / 3, abs=1e-10)

    def test_dicke_4_2(self):
        r = check_realizable(dicke(4, 2))
        assert r.realizable and r.overlap == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("tol", [0.0, -1e-3, 0.2])
    def test_tolerance_domain(self, tol):
        with pytest.raises(DomainError):
            check_realizable(uniform(2), tol)

    @settings(max_examples=40)
    @given(st.integers(1, 6), st.integers(0, 2**32 - 1), st.floats(1e-12, 0.1))
    def test_verdict_consistent_with_overlap(self, n, seed, tol):
        r = check_realizable(random_state(np.random.default_rng(seed), n), tol)
        assert r.realizable == (r.overlap >= 1 - r.tolerance_used)
        assert 0 <= r.overlap <= 1
