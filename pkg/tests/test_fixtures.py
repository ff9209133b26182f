import json
import math

import numpy as np
import pytest

from acbm.algebra import derived_dimensions, validate_jacobi
from acbm.classify import classify, extract_profile
from acbm.cli import parse_algebra_file
from acbm.fixtures import (
    FIXTURE_NAMES,
    GIII_VARIANTS,
    algebra_file_dict,
    example_algebra,
    example_group_element,
    fixture_exp_consistency,
    rodrigues,
    rodrigues_report,
    skew,
)


def _all_records():
    out = []
    for name in FIXTURE_NAMES:
        if name == "GIII":
            out.extend(example_algebra(name, v) for v in GIII_VARIANTS)
        else:
            out.append(example_algebra(name))
    return out


def test_record_constants_frozen():
    gi = example_algebra("GI")
    assert np.array_equal(gi.constants.c01, [0.0, 1.0, 0.0])
    assert np.array_equal(gi.constants.c02, [0.0, 0.0, -1.0])
    assert np.array_equal(gi.constants.c12, [0.0, 0.0, 0.0])
    gii = example_algebra("GII")
    assert np.array_equal(gii.constants.c01, [0.0, 0.0, 1.0])
    assert np.array_equal(gii.constants.c02, [0.0, -1.0, 0.0])
    ker = example_algebra("GIII", "ker-eta")
    assert np.array_equal(ker.constants.c01, [0.0, 0.0, 1.0])
    assert np.array_equal(ker.constants.c02, [0.0, 0.0, 0.0])
    span = example_algebra("GIII", "span-xi")
    assert np.array_equal(span.constants.c12, [1.0, 0.0, 0.0])
    so3 = example_algebra("SO3")
    assert np.array_equal(so3.constants.c12, [1.0, 0.0, 0.0])
    assert np.array_equal(so3.constants.c01, [0.0, 0.0, 1.0])
    assert np.array_equal(so3.constants.c02, [0.0, -1.0, 0.0])


def test_records_satisfy_jacobi_exactly():
    for rec in _all_records():
        report = validate_jacobi(rec.constants)
        assert report.ok
        assert report.max_residual == 0.0, rec.name


def test_records_classify_as_recorded():
    for rec in _all_records():
        sig = classify(extract_profile(rec.constants))
        assert sig == rec.expected_signature, rec.name


def test_record_labels_and_substitutions():
    assert example_algebra("GI").bianchi_label == "Bia(5)"
    assert example_algebra("GII").bianchi_label == "Bia(VII0)"
    assert example_algebra("GIII", "ker-eta").bianchi_label == "Bia(2)"
    assert example_algebra("SO3").bianchi_label == "Bia(9)"
    assert example_algebra("GI").substitution == "X1 = E1, X2 = E2, X3 = -E0"
    assert example_algebra("GIII", "span-xi").substitution == "X1 = E1, X2 = E0, X3 = E2"


def test_derived_dimensions_per_record():
    dims = {
        ("GI", None): (2, 0),
        ("GII", None): (2, 0),
        ("GIII", "ker-eta"): (1, 0),
        ("GIII", "span-xi"): (1, 0),
        ("SO3", None): (3, 3),
    }
    for (name, variant), expected in dims.items():
        rec = example_algebra(name, variant)
        assert derived_dimensions(rec.constants) == expected, rec.name


def test_example_algebra_argument_errors():
    with pytest.raises(ValueError):
        example_algebra("G4")
    with pytest.raises(ValueError):
        example_algebra("GI", "ker-eta")
    with pytest.raises(ValueError):
        example_algebra("GIII")
    with pytest.raises(ValueError):
        example_algebra("GIII", "kernel")


def test_group_element_frozen_forms():
    t = 0.3
    G = example_group_element("GI", 1.0, 2.0, t)
    expected = [[math.exp(-t), 0.0, 1.0], [0.0, math.exp(t), 2.0], [0.0, 0.0, 1.0]]
    assert np.array_equal(G, expected)
    assert np.array_equal(example_group_element("GII", 0.0, 0.0, 0.0), np.eye(3))
    z = math.pi / 2
    G = example_group_element("GII", 0.5, -0.25, z)
    assert G[0, 0] == pytest.approx(0.0, abs=1e-16)
    assert G[1, 0] == 1.0 and G[0, 2] == 0.5 and G[1, 2] == -0.25
    G = example_group_element("GIII", 1.0, 2.0, 3.0)
    assert np.array_equal(G, [[1.0, 1.0, 2.0], [0.0, 1.0, 3.0], [0.0, 0.0, 1.0]])
    with pytest.raises(ValueError, match="rodrigues"):
        example_group_element("SO3", 0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        example_group_element("G4", 0.0, 0.0, 0.0)


def test_gi_elements_compose_along_the_z_subgroup():
    G1 = example_group_element("GI", 0.0, 0.0, 0.4)
    G2 = example_group_element("GI", 0.0, 0.0, 1.1)
    G12 = example_group_element("GI", 0.0, 0.0, 1.5)
    assert np.allclose(G1 @ G2, G12, rtol=1e-14, atol=0.0)


def test_skew_matrix():
    K = skew([1.0, 2.0, 3.0])
    assert np.array_equal(K, [[0.0, -3.0, 2.0], [3.0, 0.0, -1.0], [-2.0, 1.0, 0.0]])
    assert np.array_equal(K @ np.array([1.0, 0.0, 0.0]), np.cross([1.0, 2.0, 3.0], [1.0, 0.0, 0.0]))
    with pytest.raises(ValueError):
        skew([1.0, 2.0])


def test_rodrigues_frozen_rotations():
    theta = 0.7
    R = rodrigues([0.0, 0.0, 1.0], theta)
    expected = [
        [math.cos(theta), -math.sin(theta), 0.0],
        [math.sin(theta), math.cos(theta), 0.0],
        [0.0, 0.0, 1.0],
    ]
    assert np.allclose(R, expected, rtol=0.0, atol=1e-15)
    R = rodrigues([1.0, 0.0, 0.0], math.pi)
    assert np.allclose(R, np.diag([1.0, -1.0, -1.0]), rtol=0.0, atol=1e-15)
    assert np.array_equal(rodrigues([0.0, 1.0, 0.0], 0.0), np.eye(3))


def test_rodrigues_rejects_bad_axes():
    with pytest.raises(ValueError, match="unit"):
        rodrigues([1.0, 1.0, 0.0], 0.5)
    with pytest.raises(ValueError):
        rodrigues([1.0, 0.0], 0.5)


def test_rodrigues_report_passes():
    report = rodrigues_report(samples=60, seed=11, tol=1e-12)
    assert report["pass"] is True
    assert report["samples"] == 60
    assert report["max_error"] <= 1e-12


def test_gii_exp_consistency_passes():
    report = fixture_exp_consistency("GII", samples=60, seed=7, tol=1e-12)
    assert report["pass"] is True
    assert report["name"] == "GII"
    assert report["max_error"] <= 1e-12
    for name in ("GI", "GIII", "SO3"):
        with pytest.raises(ValueError):
            fixture_exp_consistency(name)


def test_algebra_file_dict_round_trips_through_cli_parser(tmp_path):
    for rec in _all_records():
        payload = algebra_file_dict(rec)
        path = tmp_path / f"{rec.name}.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        parsed = parse_algebra_file(str(path))
        assert np.array_equal(parsed.c01, rec.constants.c01)
        assert np.array_equal(parsed.c02, rec.constants.c02)
        assert np.array_equal(parsed.c12, rec.constants.c12)
