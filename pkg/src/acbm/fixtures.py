"""Worked example groups encoded as structure constants, plus rotations.

Four classical 3-dimensional groups serve as end-to-end test vectors.  Each is
stored through an explicit substitution from its textbook basis (X1, X2, X3)
into the adapted basis (E0, E1, E2); the substitution string on the record is
authoritative for signs.  GI and GII have unambiguous single assignments.  GIII
(the Heisenberg group) supports two inequivalent assignments, selected by
variant: "ker-eta" puts the derived algebra inside Ker(eta) = span{E1, E2},
"span-xi" puts it on span{E0}.  SO3 carries algebra data only; its group
elements are rotations, produced by rodrigues() rather than a parametric
template.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import StructureConstants
from .classify import ClassSignature
from .expgroups import closed_form_exp, reference_expm, table1_coefficients, table1_matrix

FIXTURE_NAMES = ("GI", "GII", "GIII", "SO3")
GIII_VARIANTS = ("ker-eta", "span-xi")


@dataclass
class ExampleRecord:
    name: str
    constants: StructureConstants
    substitution: str
    expected_signature: ClassSignature
    bianchi_label: str


def example_algebra(name, variant=None):
    """Fixture record for one example group.

    variant is required for GIII ("ker-eta" or "span-xi") and must be omitted
    for the other names.
    """
    if name not in FIXTURE_NAMES:
        raise ValueError(f"unknown example name {name!r}; expected one of {FIXTURE_NAMES}")
    if name != "GIII":
        if variant is not None:
            raise ValueError(f"example {name} takes no variant")
        if name == "GI":
            # [X1,X3]=X1, [X2,X3]=-X2 with X1=E1, X2=E2, X3=-E0
            return ExampleRecord(
                name="GI",
                constants=StructureConstants(
                    c01=np.array([0.0, 1.0, 0.0]),
                    c02=np.array([0.0, 0.0, -1.0]),
                    c12=np.zeros(3),
                ),
                substitution="X1 = E1, X2 = E2, X3 = -E0",
                expected_signature=ClassSignature(members=("F9",), is_f0=False),
                bianchi_label="Bia(5)",
            )
        if name == "GII":
            # [X1,X3]=-X2, [X2,X3]=X1 with X1=E1, X2=E2, X3=E0
            return ExampleRecord(
                name="GII",
                constants=StructureConstants(
                    c01=np.array([0.0, 0.0, 1.0]),
                    c02=np.array([0.0, -1.0, 0.0]),
                    c12=np.zeros(3),
                ),
                substitution="X1 = E1, X2 = E2, X3 = E0",
                expected_signature=ClassSignature(members=("F4",), is_f0=False),
                bianchi_label="Bia(VII0)",
            )
        # SO3: [X1,X2]=X3, [X2,X3]=X1, [X3,X1]=X2 with X1=E0, X2=E1, X3=E2
        return ExampleRecord(
            name="SO3",
            constants=StructureConstants(
                c01=np.array([0.0, 0.0, 1.0]),
                c02=np.array([0.0, -1.0, 0.0]),
                c12=np.array([1.0, 0.0, 0.0]),
            ),
            substitution="X1 = E0, X2 = E1, X3 = E2",
            expected_signature=ClassSignature(members=("F4", "F8", "F10"), is_f0=False),
            bianchi_label="Bia(9)",
        )
    # GIII: [X1,X3]=X2, [X2,X3]=0, [X1,X2]=0
    if variant == "ker-eta":
        return ExampleRecord(
            name="GIII",
            constants=StructureConstants(
                c01=np.array([0.0, 0.0, 1.0]),
                c02=np.zeros(3),
                c12=np.zeros(3),
            ),
            substitution="X1 = E0, X2 = E2, X3 = E1",
            expected_signature=ClassSignature(members=("F4", "F10"), is_f0=False),
            bianchi_label="Bia(2)",
        )
    if variant == "span-xi":
        return ExampleRecord(
            name="GIII",
            constants=StructureConstants(
                c01=np.zeros(3),
                c02=np.zeros(3),
                c12=np.array([1.0, 0.0, 0.0]),
            ),
            substitution="X1 = E1, X2 = E0, X3 = E2",
            expected_signature=ClassSignature(members=("F8", "F10"), is_f0=False),
            bianchi_label="Bia(2)",
        )
    raise ValueError(f"unknown GIII variant {variant!r}; expected one of {GIII_VARIANTS}")


def example_group_element(name, x, y, z):
    """The printed parametric group element for GI, GII, or GIII."""
    x = float(x)
    y = float(y)
    z = float(z)
    if name == "GI":
        return np.array(
            [[math.exp(-z), 0.0, x], [0.0, math.exp(z), y], [0.0, 0.0, 1.0]]
        )
    if name == "GII":
        cz = math.cos(z)
        sz = math.sin(z)
        return np.array([[cz, -sz, x], [sz, cz, y], [0.0, 0.0, 1.0]])
    if name == "GIII":
        return np.array([[1.0, x, y], [0.0, 1.0, z], [0.0, 0.0, 1.0]])
    if name == "SO3":
        raise ValueError("SO3 has no parametric template; use rodrigues(axis, angle)")
    raise ValueError(f"unknown example name {name!r}")


def skew(v):
    """The skew-symmetric matrix K with K @ w = cross(v, w)."""
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError("v must be a 3-vector")
    return np.array(
        [
            [0.0, -v[2], v[1]],
            [v[2], 0.0, -v[0]],
            [-v[1], v[0], 0.0],
        ]
    )


def rodrigues(axis, angle):
    """Rotation by angle about a unit axis: E + sin(angle) K + (1 - cos(angle)) K^2.

    The axis must already be unit length (to 1e-12); the formula is only a
    rotation under that normalization, so the caller normalizes explicitly.
    """
    axis = np.asarray(axis, dtype=float)
    if axis.shape != (3,):
        raise ValueError("axis must be a 3-vector")
    n = float(np.linalg.norm(axis))
    if abs(n - 1.0) > 1e-12:
        raise ValueError(f"axis must be unit length (norm {n!r}); normalize before calling")
    K = skew(axis)
    angle = float(angle)
    return np.eye(3) + math.sin(angle) * K + (1.0 - math.cos(angle)) * (K @ K)


def _gii_coordinates(x, y, z):
    """Coefficients (a, b, c) whose F4 closed-form exponential is GII(x, y, z).

    The translation part of the closed form is x = a*p - b*q, y = a*q + b*p
    with p = (1 - cos c)/c and q = sin(c)/c at c = z, so (a, b) solves a 2x2
    rotation-scaled system; at z = 0 the exponential degenerates to E + A and
    the map is (a, b) = (y, -x).
    """
    if z == 0.0:
        return y, -x, 0.0
    p = (1.0 - math.cos(z)) / z
    q = math.sin(z) / z
    det = p * p + q * q
    a = (p * x + q * y) / det
    b = (-q * x + p * y) / det
    return a, b, z


def fixture_exp_consistency(name, samples=100, seed=7, tol=1e-12):
    """Closed-form exponential versus the printed group element, for GII.

    Draws random (x, y, z) with z in [-3, 3], maps them to table coefficients
    (a, b, c) at alpha = 1, and compares the block-rearranged closed-form
    exponential of the F4 representation with example_group_element(GII, ...).
    Returns a report dict; the other examples are classification-only.
    """
    if name != "GII":
        raise ValueError("exp-consistency is only defined for GII")
    rng = np.random.default_rng(seed)
    max_err = 0.0
    for k in range(samples):
        x = float(rng.uniform(-5.0, 5.0))
        y = float(rng.uniform(-5.0, 5.0))
        z = 0.0 if k == 0 else float(rng.uniform(-3.0, 3.0))
        a, b, c = _gii_coordinates(x, y, z)
        A = table1_matrix("F4", 1.0, 0.0, a, b, c)
        closed = closed_form_exp(A, table1_coefficients("F4", A))
        predicted = np.array(
            [
                [closed[1, 1], closed[1, 2], closed[0, 1]],
                [closed[2, 1], closed[2, 2], closed[0, 2]],
                [0.0, 0.0, 1.0],
            ]
        )
        G = example_group_element("GII", x, y, z)
        err = float(np.max(np.abs(predicted - G)))
        err = max(err, float(np.max(np.abs(closed[:, 0] - np.array([1.0, 0.0, 0.0])))))
        if err > max_err:
            max_err = err
    return {
        "name": "GII",
        "samples": int(samples),
        "max_error": float(max_err),
        "tolerance": float(tol),
        "pass": bool(max_err <= tol),
    }


def rodrigues_report(samples=100, seed=11, tol=1e-12):
    """Orthogonality, determinant, and reference-exponential checks for rodrigues."""
    rng = np.random.default_rng(seed)
    max_err = 0.0
    for _ in range(samples):
        v = rng.normal(size=3)
        axis = v / np.linalg.norm(v)
        angle = float(rng.uniform(-2.0 * math.pi, 2.0 * math.pi))
        R = rodrigues(axis, angle)
        err = float(np.max(np.abs(R.T @ R - np.eye(3))))
        err = max(err, abs(float(np.linalg.det(R)) - 1.0))
        err = max(err, float(np.max(np.abs(R - reference_expm(angle * skew(axis))))))
        if err > max_err:
            max_err = err
    return {
        "samples": int(samples),
        "max_error": float(max_err),
        "tolerance": float(tol),
        "pass": bool(max_err <= tol),
    }


def algebra_file_dict(record):
    """Record rendered in the JSON algebra-file layout the CLI reads."""
    return {
        "name": record.name,
        "description": record.substitution,
        "C": {
            "01": [float(v) for v in record.constants.c01],
            "02": [float(v) for v in record.constants.c02],
            "12": [float(v) for v in record.constants.c12],
        },
    }
