# -*- coding: utf-8 -*-
# Create Date: 2026/10/19
# Author: ldg_inverse developers
# File Name: tests/test_model.py
# Description: 参数换算, 边界条件, 指向矢与光学工具

import numpy as np
import pytest
from scipy import constants

from ldg_inverse.model import (MBBA, MaterialParams, QField, ReducedParams, TangentBC, VortexBC, berreman_matrix,
                               dielectric_from_q, director, director_field, lift_to_3d, material_from_reduced,
                               material_from_reduced_general, q_from_dielectric, qfield_from_director,
                               reduced_from_material, reduced_from_material_general, special_temperature, stokes,
                               tangent_bc, vortex_bc)


def berreman_reference(e, xi, mu0, c, eps0):
    """ 逐项照抄的 Berreman 矩阵
    """
    M = np.zeros((4, 4))
    M[0, 0] = -(e[0][2] / e[2][2]) * xi
    M[0, 1] = mu0 * c * (e[2][2] - xi ** 2) / e[2][2]
    M[0, 2] = -(e[1][2] / e[2][2]) * xi
    M[1, 0] = eps0 * c * (e[0][0] - e[0][2] ** 2 / e[2][2])
    M[1, 1] = -(e[0][2] / e[2][2]) * xi
    M[1, 2] = eps0 * c * (e[0][1] - e[0][2] * e[1][2] / e[2][2])
    M[2, 3] = mu0 * c
    M[3, 0] = eps0 * c * (e[0][1] - e[0][2] * e[1][2] / e[2][2])
    M[3, 1] = -(e[1][2] / e[2][2]) * xi
    M[3, 2] = eps0 * c * (e[1][1] - e[1][2] ** 2 / e[2][2] - xi ** 2)
    return M


class TestParams:
    def test_mbba_beta(self):
        A = special_temperature(MBBA['B'], MBBA['C'])
        m = MaterialParams(L=4e-11, B=MBBA['B'], C=MBBA['C'], A=A, lam=1e-7)
        assert reduced_from_material(m).beta == pytest.approx(0.83592, abs=5e-6)

    def test_special_temperature_round_trip(self, rng):
        for _ in range(20):
            p = ReducedParams(rng.uniform(1e-4, 1.0), rng.uniform(0.1, 2.0))
            A = -rng.uniform(1e3, 1e6)
            m = material_from_reduced(p, lam=rng.uniform(1e-8, 1e-5), A=A)
            assert m.A == pytest.approx(special_temperature(m.B, m.C), rel=1e-12)
            back = reduced_from_material(m)
            assert back.alpha == pytest.approx(p.alpha, rel=1e-12)
            assert back.beta == pytest.approx(p.beta, rel=1e-12)

    def test_general_round_trip(self):
        p = ReducedParams(0.004, 0.6)
        C, L = material_from_reduced_general(p, lam=2e-6, A=-1.5e5)
        back = reduced_from_material_general(C, L, lam=2e-6, A=-1.5e5)
        assert back.alpha == pytest.approx(0.004, rel=1e-12)
        assert back.beta == pytest.approx(0.6, rel=1e-12)

    def test_rejects_non_negative_A(self):
        with pytest.raises(ValueError):
            material_from_reduced(ReducedParams(0.01, 1.0), lam=1e-6, A=0.0)
        with pytest.raises(ValueError):
            material_from_reduced_general(ReducedParams(0.01, 1.0), lam=1e-6, A=1.0)

    @pytest.mark.parametrize('alpha,beta', [(0.0, 1.0), (1.0, -1.0)])
    def test_reduced_params_positive(self, alpha, beta):
        with pytest.raises(ValueError):
            ReducedParams(alpha, beta)


class TestTangentBC:
    def test_trapezoid(self):
        bc = TangentBC(0.1)
        t = np.array([0.0, 0.05, 0.1, 0.5, 0.9, 0.95, 1.0])
        np.testing.assert_allclose(bc.trapezoid(t), [0, 0.5, 1, 1, 1, 0.5, 0], atol=1e-12)

    def test_edges(self):
        bc = TangentBC(0.06)
        values = bc.evaluate(np.array([[0.5, 0.0], [0.5, 1.0], [0.0, 0.5], [1.0, 0.5], [0.0, 0.0], [1.0, 1.0]]))
        np.testing.assert_allclose(values, [[1, 0], [1, 0], [-1, 0], [-1, 0], [0, 0], [0, 0]], atol=1e-12)

    def test_rejects_interior_point(self):
        with pytest.raises(ValueError):
            TangentBC().evaluate(np.array([[0.5, 0.5]]))

    @pytest.mark.parametrize('d', [0.0, 0.5, 0.7])
    def test_rejects_bad_d(self, d):
        with pytest.raises(ValueError):
            TangentBC(d)

    def test_factory(self):
        bc = tangent_bc(0.06)
        assert bc.trapezoid(0.97) == pytest.approx(0.5)
        np.testing.assert_allclose(bc.evaluate(np.array([[0.5, 1.0], [0.0, 0.5]])), [[1, 0], [-1, 0]], atol=1e-12)

    def test_with_boundary(self, mesh8, tangent):
        q = QField(mesh8, np.zeros(mesh8.n_nodes), np.ones(mesh8.n_nodes)).with_boundary(tangent)
        b = mesh8.boundary_nodes
        np.testing.assert_allclose(q.q12[b], 0)
        np.testing.assert_allclose(q.q12[mesh8.interior_nodes], 1)


class TestVortexBC:
    def test_unit_length(self, mesh8, vortex):
        values = vortex.evaluate(mesh8.nodes[mesh8.boundary_nodes])
        np.testing.assert_allclose(np.linalg.norm(values, axis=1), 1.0)

    def test_direction(self):
        np.testing.assert_allclose(VortexBC(0.25, 0.75).evaluate(np.array([[1.0, 0.75]])), [[1.0, 0.0]])

    def test_factory(self):
        values = vortex_bc(0.25, 0.75).evaluate(np.array([[0.25, 0.0], [1.0, 0.75]]))
        np.testing.assert_allclose(values, [[0, -1], [1, 0]], atol=1e-12)

    def test_rejects_boundary_centre(self):
        with pytest.raises(ValueError):
            VortexBC(0.0, 0.5)

    def test_to_dict(self, vortex):
        assert vortex.to_dict() == {'kind': 'vortex', 'center': [0.25, 0.75]}


class TestDirector:
    def test_round_trip(self, mesh4, rng):
        s = rng.uniform(0.1, 1.0, mesh4.n_nodes)
        theta = rng.uniform(-np.pi / 2 + 1e-3, np.pi / 2, mesh4.n_nodes)
        field = director_field(qfield_from_director(mesh4, s, theta))
        np.testing.assert_allclose(field.s, s)
        np.testing.assert_allclose(field.theta, theta, atol=1e-12)
        assert not field.defect.any()

    def test_defect(self, mesh4):
        q = QField(mesh4, np.zeros(mesh4.n_nodes), np.zeros(mesh4.n_nodes))
        d = director(q, 3)
        assert d.defect and d.s == 0.0 and d.theta == 0.0
        with pytest.raises(IndexError):
            director(q, mesh4.n_nodes)

    def test_s_equals_norm(self, mesh4, rng):
        q = QField(mesh4, rng.normal(size=mesh4.n_nodes), rng.normal(size=mesh4.n_nodes))
        np.testing.assert_allclose(director_field(q).s, np.hypot(q.q11, q.q12))

    def test_dump_load(self, tmp_path, mesh4, rng):
        q = QField(mesh4, rng.normal(size=mesh4.n_nodes), rng.normal(size=mesh4.n_nodes))
        q.dump(tmp_path / 'q.csv')
        loaded = QField.load(tmp_path / 'q.csv', mesh4)
        np.testing.assert_array_equal(loaded.q11, q.q11)
        np.testing.assert_array_equal(loaded.q12, q.q12)

    def test_load_rejects_other_mesh(self, tmp_path, mesh4, mesh8):
        QField(mesh4, np.zeros(mesh4.n_nodes), np.zeros(mesh4.n_nodes)).dump(tmp_path / 'q.csv')
        with pytest.raises(ValueError):
            QField.load(tmp_path / 'q.csv', mesh8)


class TestOptics:
    def test_lift_symmetric_traceless(self, rng):
        for _ in range(10):
            Q = lift_to_3d(*rng.normal(size=3))
            np.testing.assert_allclose(Q, Q.T)
            assert np.trace(Q) == pytest.approx(0.0, abs=1e-15)

    def test_dielectric_round_trip(self, rng):
        Q = lift_to_3d(0.3, -0.2, 0.05)
        eps = dielectric_from_q(Q, eps_par=3.1, eps_perp=2.4, tr_eps=8.0)
        assert np.trace(eps) == pytest.approx(8.0)
        np.testing.assert_allclose(q_from_dielectric(eps, 3.1, 2.4), Q, atol=1e-12)

    def test_degenerate_anisotropy(self):
        with pytest.raises(ValueError):
            q_from_dielectric(np.eye(3), 2.0, 2.0)

    def test_stokes_identity(self, rng):
        for a, b, delta in rng.uniform(-2, 2, size=(100, 3)):
            S0, S1, S2, S3 = stokes(a, b, delta)
            assert S0 ** 2 == pytest.approx(S1 ** 2 + S2 ** 2 + S3 ** 2, rel=1e-12, abs=1e-14)

    def test_berreman_matches_reference(self, rng):
        for _ in range(10):
            A = rng.normal(size=(3, 3))
            eps = A + A.T + 6 * np.eye(3)
            xi = rng.uniform(0, 1)
            M = berreman_matrix(eps, xi, mu0=1.3, c=0.7, eps0=0.9)
            np.testing.assert_allclose(M, berreman_reference(eps, xi, 1.3, 0.7, 0.9), rtol=1e-12, atol=1e-12)

    def test_berreman_isotropic_normal_incidence(self):
        M = berreman_matrix(2.25 * np.eye(3), 0.0)
        mu0c = constants.mu_0 * constants.c
        eps0c = constants.epsilon_0 * constants.c
        assert M[0, 1] == pytest.approx(mu0c)
        assert M[2, 3] == pytest.approx(mu0c)
        assert M[1, 0] == pytest.approx(eps0c * 2.25)
        assert M[3, 2] == pytest.approx(eps0c * 2.25)
        assert M[0, 0] == 0 and M[1, 1] == 0

    def test_berreman_rejects_zero_e33(self):
        eps = np.diag([1.0, 1.0, 0.0])
        with pytest.raises(ValueError):
            berreman_matrix(eps, 0.1)
