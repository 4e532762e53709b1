import numpy as np
import pytest

from conftest import make_frame, random_bbas
from qbelief.dst import validate_bba
from qbelief.errors import (
    BadDimension,
    ClockOverflow,
    PostselectionFailed,
    SingularMatrix,
)
from qbelief.qsim import StateVector
from qbelief.quantum import (
    MEoBConfig,
    decode_eigenvalue,
    hermitian_embed,
    meob,
    meob_apply,
)

ORACLE = MEoBConfig(backend="oracle")


def fidelity(a: StateVector, b: StateVector) -> float:
    return abs(np.vdot(a.amps, b.amps))


def normalized(v):
    v = np.asarray(v, dtype=complex)
    return v / np.linalg.norm(v)


class TestHermitianEmbedding:
    def test_hermitian_passthrough(self):
        h = np.array([[1.0, 2.0], [2.0, -1.0]])
        emb = hermitian_embed(h)
        assert not emb.was_embedded
        np.testing.assert_array_equal(emb.embedded, h)

    def test_block_form(self):
        mq = np.array([[1.0, 1.0], [0.0, 1.0]])
        emb = hermitian_embed(mq)
        assert emb.was_embedded
        assert emb.embedded.shape == (4, 4)
        np.testing.assert_array_equal(emb.embedded[2:, :2], mq)
        np.testing.assert_array_equal(emb.embedded[:2, 2:], mq.T)
        assert np.abs(emb.embedded - emb.embedded.conj().T).max() == 0.0

    def test_nilpotent_spectrum_is_singular_values(self):
        m = np.array([[0.0, 1.0], [0.0, 0.0]])
        emb = hermitian_embed(m)
        eigs = np.sort(np.linalg.eigvalsh(emb.embedded))
        np.testing.assert_allclose(eigs, [-1.0, 0.0, 0.0, 1.0], atol=1e-12)

    def test_bad_dimensions(self):
        with pytest.raises(BadDimension):
            hermitian_embed(np.ones((3, 3)))
        with pytest.raises(BadDimension):
            hermitian_embed(np.ones((2, 4)))


class TestOracleBackend:
    def test_identity_returns_encoded_state(self, frame2):
        m = validate_bba(frame2, {("A",): 0.5, ("A", "B"): 0.5})
        out, p = meob(np.eye(4), m, ORACLE)
        np.testing.assert_allclose(out.amps.real, np.sqrt(m.masses), atol=1e-12)
        assert p == pytest.approx(0.99**2, abs=1e-12)

    def test_diagonal_contraction(self):
        frame = make_frame(1)
        m = validate_bba(frame, {(): 0.5, ("e0",): 0.5})
        out, _ = meob(np.diag([0.5, 0.25]), m, ORACLE)
        np.testing.assert_allclose(
            out.amps.real, np.array([2.0, 1.0]) / np.sqrt(5.0), atol=1e-12
        )

    def test_q_matrix_on_uniform_bayesian(self, frame2):
        from qbelief.dst import q_from_mass, transform_matrix

        m = validate_bba(frame2, {("A",): 0.5, ("B",): 0.5})
        out, _ = meob(transform_matrix("q", 2), m, ORACLE)
        expect = normalized(transform_matrix("q", 2) @ np.sqrt(m.masses))
        np.testing.assert_allclose(out.amps, expect, atol=1e-12)
        # equal masses make sqrt(m) parallel to m, so the output also
        # points along the commonality vector (1, .5, .5, 0)
        np.testing.assert_allclose(
            out.amps.real, normalized(q_from_mass(m).values), atol=1e-12
        )

    def test_success_probability_is_spectral_sum(self, rng):
        # product of C^2 and the squared norms of the eigencomponents,
        # weighted by their eigenvalues
        a = rng.normal(size=(4, 4))
        h = a + a.T
        psi = rng.normal(size=4)
        psi = psi / np.linalg.norm(psi)
        out, p = meob_apply(h, StateVector(2, psi), ORACLE)
        evals, evecs = np.linalg.eigh(h)
        c = 0.99 / np.abs(evals).max()
        betas = evecs.T @ psi
        expect = float(np.sum(betas**2 * c**2 * evals**2))
        assert p == pytest.approx(expect, abs=1e-12)

    def test_zero_matrix_is_singular(self, frame2):
        m = validate_bba(frame2, {("A",): 1.0})
        with pytest.raises(SingularMatrix):
            meob(np.zeros((4, 4)), m, ORACLE)

    def test_annihilated_state_fails_postselection(self, frame2):
        m = validate_bba(frame2, {("A",): 1.0})
        # matrix kills exactly the populated coordinate
        matrix = np.diag([1.0, 0.0, 1.0, 1.0])
        with pytest.raises(PostselectionFailed):
            meob(matrix, m, ORACLE)

    def test_clock_overflow_guard(self, frame2):
        m = validate_bba(frame2, {("A",): 1.0})
        with pytest.raises(ClockOverflow):
            meob(np.eye(4), m, MEoBConfig(backend="oracle", t0=4.0))


class TestConfigGuards:
    def test_clock_width_bounds(self):
        with pytest.raises(Exception):
            MEoBConfig(t=0)
        with pytest.raises(Exception):
            MEoBConfig(t=13)
        MEoBConfig(t=1)
        MEoBConfig(t=12)

    def test_unknown_backend(self):
        with pytest.raises(Exception):
            MEoBConfig(backend="hardware")

    def test_oversized_rotation_constant(self, frame2):
        m = validate_bba(frame2, {("A",): 1.0})
        from qbelief.errors import ValidationError

        with pytest.raises(ValidationError):
            meob(np.eye(4), m, MEoBConfig(backend="oracle", C=1.5))


class TestEigenvalueDecoding:
    def test_positive_and_twos_complement(self):
        t, t0 = 4, 1.0
        assert decode_eigenvalue(0, t, t0) == 0.0
        assert decode_eigenvalue(3, t, t0) == pytest.approx(2 * np.pi * 3 / 16)
        assert decode_eigenvalue(15, t, t0) == pytest.approx(-2 * np.pi / 16)
        assert decode_eigenvalue(8, t, t0) == pytest.approx(-2 * np.pi * 8 / 16)


class TestCircuitBackend:
    def test_halving_diagonal_exact_at_three_clock_bits(self):
        # eigenvalues 1/2 and 1/4 with t0 = pi sit on clock values 2 and 1
        frame = make_frame(1)
        m = validate_bba(frame, {(): 0.5, ("e0",): 0.5})
        matrix = np.diag([0.5, 0.25])
        cfg = MEoBConfig(backend="circuit", t=3, t0=np.pi, C=0.99 / 0.5)
        out, _ = meob(matrix, m, cfg)
        np.testing.assert_allclose(
            out.amps.real, np.array([2.0, 1.0]) / np.sqrt(5.0), atol=1e-9
        )

    def test_exact_phase_diagonal(self):
        # eigenphases k/16 with t=4 are exact clock readouts
        frame = make_frame(1)
        m = validate_bba(frame, {(): 0.36, ("e0",): 0.64})
        matrix = np.diag([2.0 / 8.0, 5.0 / 8.0])
        cfg = MEoBConfig(backend="circuit", t=4, t0=np.pi, C=0.99 / (5.0 / 8.0))
        out, p = meob(matrix, m, cfg)
        ideal, p_oracle = meob(matrix, m, MEoBConfig(backend="oracle", t0=np.pi, C=0.99 / (5.0 / 8.0)))
        assert fidelity(out, ideal) >= 1.0 - 1e-6
        assert p == pytest.approx(p_oracle, abs=1e-9)

    def test_exact_phase_non_diagonal(self, rng):
        # Hermitian matrix with chosen spectrum: rotate exact eigenphases
        t, t0 = 5, np.pi
        lams = np.array([4, -6, 10, 7]) / 16.0  # phases k/32 * (2pi/t0) decodable
        q, _ = np.linalg.qr(rng.normal(size=(4, 4)))
        h = (q * lams) @ q.T
        psi = rng.normal(size=4)
        psi /= np.linalg.norm(psi)
        cfg = MEoBConfig(backend="circuit", t=t, t0=t0)
        out, _ = meob_apply(h, StateVector(2, psi), cfg)
        ideal = normalized(h @ psi)
        assert abs(np.vdot(out.amps, ideal)) >= 1.0 - 1e-6

    def test_embedded_circuit_run(self):
        # non-Hermitian diagonal-free case exercises the embedding path
        frame = make_frame(1)
        m = validate_bba(frame, {(): 0.5, ("e0",): 0.5})
        matrix = np.array([[0.0, 0.5], [0.0, 0.5]])  # maps sqrt-encoding into column mix
        cfg = MEoBConfig(backend="circuit", t=8)
        out, _ = meob(matrix, m, cfg)
        ideal = normalized(matrix @ np.sqrt(m.masses))
        assert abs(np.vdot(out.amps, ideal)) >= 1.0 - 1e-3

    def test_monotone_refinement(self, rng):
        # widening the clock register cannot hurt on average; seeds frozen
        fids = {6: [], 10: []}
        for _ in range(20):
            q, _ = np.linalg.qr(rng.normal(size=(4, 4)))
            lams = rng.uniform(1.0, 5.0, size=4) * rng.choice([-1.0, 1.0], size=4)
            lams[0] = 1.0  # pin condition number at most 5
            h = (q * lams) @ q.T
            psi = rng.normal(size=4)
            psi /= np.linalg.norm(psi)
            ideal = normalized(h @ psi)
            for t in (6, 10):
                out, _ = meob_apply(h, StateVector(2, psi), MEoBConfig(backend="circuit", t=t))
                fids[t].append(abs(np.vdot(out.amps, ideal)))
        assert np.mean(fids[10]) >= np.mean(fids[6])
        assert np.mean(fids[10]) > 1.0 - 1e-4


class TestOracleCircuitAgreement:
    @pytest.mark.parametrize("n", [1, 2])
    def test_random_diagonal_exact_phases(self, n, rng):
        # diagonals with 5-bit eigenphases: the two backends coincide
        t, t0 = 5, np.pi
        size = 1 << n
        for _ in range(5):
            ks = rng.integers(1, 15, size=size)  # positive eigenvalues k/16
            matrix = np.diag(ks / 16.0)
            for m in random_bbas(1, n, seed=int(rng.integers(1 << 30)), allow_empty=True):
                cfg_kw = dict(t0=t0, C=0.9 / matrix.max())
                out_c, p_c = meob(matrix, m, MEoBConfig(backend="circuit", t=t, **cfg_kw))
                out_o, p_o = meob(matrix, m, MEoBConfig(backend="oracle", **cfg_kw))
                assert fidelity(out_c, out_o) >= 1.0 - 1e-6
                assert p_c == pytest.approx(p_o, rel=1e-6)
