import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from acbm.algebra import (
    ETA,
    METRIC,
    PHI,
    SIGNS,
    StructureConstants,
    bracket,
    change_basis,
    derived_dimensions,
    f_from_connection,
    f_from_structure,
    lee_forms,
    lee_forms_from_tensor,
    levi_civita,
    scale_of,
    validate_jacobi,
)
from acbm.classify import canonical_algebra

from conftest import integer_constants, random_constants, valid_constants

coords = st.floats(-5.0, 5.0, allow_nan=False, allow_infinity=False)


def test_structure_tensors():
    # phi^2 = -Id + eta (x) xi on the adapted frame, and g is the B-metric
    xi = np.array([1.0, 0.0, 0.0])
    assert np.array_equal(PHI @ PHI, -np.eye(3) + np.outer(xi, ETA))
    assert np.array_equal(METRIC, np.diag([1.0, 1.0, -1.0]))
    assert np.array_equal(PHI @ xi, np.zeros(3))


@given(st.lists(coords, min_size=6, max_size=6))
def test_metric_phi_compatibility(vals):
    # g(phi x, phi y) = -g(x, y) + eta(x) eta(y)
    x = np.array(vals[:3])
    y = np.array(vals[3:])
    lhs = (PHI @ x) @ METRIC @ (PHI @ y)
    rhs = -(x @ METRIC @ y) + (ETA @ x) * (ETA @ y)
    assert lhs == pytest.approx(rhs, abs=1e-9)


def test_constants_validation():
    with pytest.raises(ValueError):
        StructureConstants(np.zeros(2), np.zeros(3), np.zeros(3))
    with pytest.raises(ValueError):
        StructureConstants.from_flat(np.zeros(8))


def test_flat_round_trip():
    rng = np.random.default_rng(1)
    C = random_constants(rng)
    assert np.array_equal(StructureConstants.from_flat(C.flat()).flat(), C.flat())


@given(st.lists(coords, min_size=9, max_size=9))
def test_full_tensor_antisymmetry(vals):
    C = StructureConstants.from_flat(np.array(vals))
    full = C.full()
    assert np.array_equal(full, -full.transpose(1, 0, 2))
    assert np.array_equal(full[0, 1], C.c01)
    assert np.array_equal(full[0, 2], C.c02)
    assert np.array_equal(full[1, 2], C.c12)


def test_bracket_on_basis():
    rng = np.random.default_rng(2)
    C = random_constants(rng)
    e = np.eye(3)
    assert np.array_equal(bracket(C, e[0], e[1]), C.c01)
    assert np.array_equal(bracket(C, e[0], e[2]), C.c02)
    assert np.array_equal(bracket(C, e[1], e[2]), C.c12)
    x = rng.uniform(-2, 2, 3)
    assert np.array_equal(bracket(C, x, x), np.zeros(3))


def test_jacobi_accepts_every_basis_element():
    for n in range(9):
        flat = np.zeros(9)
        flat[n] = 1.0
        rep = validate_jacobi(StructureConstants.from_flat(flat))
        assert rep.ok
        assert rep.max_residual == 0.0


def test_jacobi_frozen_failure():
    # [E0,E1]=E0 and [E1,E2]=E1 break the (0,1,2) cyclic sum by exactly -E0
    C = StructureConstants(
        c01=np.array([1.0, 0.0, 0.0]),
        c02=np.zeros(3),
        c12=np.array([0.0, 1.0, 0.0]),
    )
    rep = validate_jacobi(C)
    assert not rep.ok
    assert rep.max_residual == 1.0
    assert not bool(rep)


def test_jacobi_input_validation():
    C = StructureConstants(np.zeros(3), np.zeros(3), np.zeros(3))
    with pytest.raises(ValueError):
        validate_jacobi(C, tol=-1.0)
    bad = StructureConstants(np.array([np.nan, 0.0, 0.0]), np.zeros(3), np.zeros(3))
    with pytest.raises(ValueError):
        validate_jacobi(bad)


def test_f_from_structure_frozen_components():
    C = StructureConstants(np.zeros(3), np.zeros(3), np.array([0.0, 1.0, 0.0]))
    F = f_from_structure(C)
    expected = np.zeros((3, 3, 3))
    expected[1, 1, 1] = expected[1, 2, 2] = 2.0
    assert np.array_equal(F, expected)

    C = StructureConstants(np.array([2.0, 0.0, 0.0]), np.zeros(3), np.zeros(3))
    F = f_from_structure(C)
    expected = np.zeros((3, 3, 3))
    expected[0, 2, 0] = expected[0, 0, 2] = -2.0
    assert np.array_equal(F, expected)


def test_f_tensor_symmetric_in_last_two_indices():
    rng = np.random.default_rng(3)
    for _ in range(25):
        F = f_from_structure(random_constants(rng))
        assert np.array_equal(F, F.transpose(0, 2, 1))


def test_lee_forms_frozen_values():
    lf = lee_forms(canonical_algebra("F5", 1.0))
    assert lf.theta_star[0] == -2.0
    assert np.array_equal(lf.theta, np.zeros(3))

    lf = lee_forms(canonical_algebra("F11", 1.0, 2.0))
    assert np.array_equal(lf.omega, np.array([0.0, 2.0, -1.0]))


def test_lee_forms_are_the_tensor_contractions():
    # the linear formulas must be the contractions of the component table;
    # on integer constants both routes are float-exact, so compare bitwise
    rng = np.random.default_rng(4)
    for _ in range(50):
        C = integer_constants(rng)
        direct = lee_forms(C)
        via_tensor = lee_forms_from_tensor(f_from_structure(C))
        assert np.array_equal(direct.theta, via_tensor.theta)
        assert np.array_equal(direct.theta_star, via_tensor.theta_star)
        assert np.array_equal(direct.omega, via_tensor.omega)
    for _ in range(50):
        C = random_constants(rng)
        direct = lee_forms(C)
        via_tensor = lee_forms_from_tensor(f_from_structure(C))
        tol = 1e-13 * scale_of(C)
        assert np.allclose(direct.theta, via_tensor.theta, rtol=0.0, atol=tol)
        assert np.allclose(direct.theta_star, via_tensor.theta_star, rtol=0.0, atol=tol)
        assert np.allclose(direct.omega, via_tensor.omega, rtol=0.0, atol=tol)


def test_levi_civita_requires_jacobi():
    C = StructureConstants(
        c01=np.array([1.0, 0.0, 0.0]),
        c02=np.zeros(3),
        c12=np.array([0.0, 1.0, 0.0]),
    )
    with pytest.raises(ValueError):
        levi_civita(C)


def test_levi_civita_is_torsion_free_and_metric():
    rng = np.random.default_rng(5)
    for _ in range(20):
        C = valid_constants(rng)
        gamma = levi_civita(C)
        cfull = C.full()
        scale = scale_of(C)
        # torsion: Gamma_ij^k - Gamma_ji^k = C_ij^k
        torsion = gamma - gamma.transpose(1, 0, 2) - cfull
        assert np.max(np.abs(torsion)) <= 1e-13 * scale
        # metric compatibility: eps_k Gamma_ij^k antisymmetric in (j, k)
        lowered = gamma * SIGNS[None, None, :]
        assert np.max(np.abs(lowered + lowered.transpose(0, 2, 1))) <= 1e-13 * scale


def test_f_from_connection_matches_table_for_f1_without_beta():
    rng = np.random.default_rng(6)
    for _ in range(20):
        C = canonical_algebra("F1", float(rng.uniform(-3, 3)), 0.0)
        assert np.array_equal(f_from_structure(C), f_from_connection(C))


def test_f_from_connection_flags_the_transcribed_f1_beta_components():
    # with beta on, the two maps disagree exactly at F[2,1,1] and F[2,2,2],
    # and there by a pure sign
    rng = np.random.default_rng(7)
    for _ in range(20):
        C = canonical_algebra("F1", float(rng.uniform(-3, 3)), float(rng.uniform(0.5, 3)))
        Fs = f_from_structure(C)
        Fc = f_from_connection(C)
        diff = np.abs(Fs - Fc)
        hot = set(zip(*np.nonzero(diff > 1e-12)))
        assert hot == {(2, 1, 1), (2, 2, 2)}
        assert Fc[2, 1, 1] == pytest.approx(-Fs[2, 1, 1], abs=1e-13)
        assert Fc[2, 2, 2] == pytest.approx(-Fs[2, 2, 2], abs=1e-13)


def test_f_from_connection_symmetric_in_last_two_indices():
    rng = np.random.default_rng(8)
    for _ in range(20):
        C = valid_constants(rng)
        F = f_from_connection(C)
        assert np.max(np.abs(F - F.transpose(0, 2, 1))) <= 1e-13 * scale_of(C)


def test_change_basis_identity_and_scaling():
    rng = np.random.default_rng(9)
    C = valid_constants(rng)
    same = change_basis(C, np.eye(3))
    assert np.allclose(same.flat(), C.flat(), rtol=0.0, atol=1e-14 * scale_of(C))
    doubled = change_basis(C, 2.0 * np.eye(3))
    assert np.allclose(doubled.flat(), 2.0 * C.flat(), rtol=0.0, atol=1e-13 * scale_of(C))


def test_change_basis_preserves_jacobi():
    rng = np.random.default_rng(10)
    for _ in range(20):
        C = valid_constants(rng)
        assert validate_jacobi(C).ok


def test_change_basis_rejects_singular_matrix():
    rng = np.random.default_rng(11)
    C = valid_constants(rng)
    P = np.zeros((3, 3))
    with pytest.raises(np.linalg.LinAlgError):
        change_basis(C, P)


def test_derived_dimensions():
    zero = StructureConstants(np.zeros(3), np.zeros(3), np.zeros(3))
    assert derived_dimensions(zero) == (0, 0)
    assert derived_dimensions(canonical_algebra("F1", 1.0, 2.0)) == (1, 0)
    assert derived_dimensions(canonical_algebra("F9", 1.5)) == (2, 0)
    # the F8 representative is its own derived algebra: not solvable
    assert derived_dimensions(canonical_algebra("F8", 1.0)) == (3, 3)
