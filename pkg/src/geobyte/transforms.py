"""Unitary operations: rotations via unit quaternions (with Cayley-Klein
and Euler-Rodrigues parameters) and reflections in points, lines and
planes, including the signed permutations they induce on the structure
elements.

Sign conventions are pinned by the 2x2 matrix representation: a
quaternion maps to [[alpha, -beta*], [beta, alpha*]], and the rotation
e1 -> e2 about the e3 axis through +pi/2 fixes the anticlockwise
orientation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clusters import LABELS, structure_element
from .errors import DomainError
from .multivector import E0, Multivector

_UNIT_TOL = 1e-9
_GRADE_TOL = 1e-12


@dataclass(frozen=True)
class AxisAngle:
    """Unit rotation axis plus angle in radians (anticlockwise positive)."""

    c1: float
    c2: float
    c3: float
    theta: float

    def to_json(self) -> dict:
        return {"axis": [self.c1, self.c2, self.c3], "theta": self.theta}

    @classmethod
    def from_json(cls, obj: dict) -> "AxisAngle":
        ax = obj["axis"]
        return cls(ax[0], ax[1], ax[2], obj["theta"])


@dataclass(frozen=True)
class CayleyKlein:
    """Complex pair (alpha, beta) with alpha*conj(alpha) + beta*conj(beta) = 1."""

    alpha: complex
    beta: complex


@dataclass(frozen=True)
class EulerRodrigues:
    """Real quadruple (rho, nu, mu, lam) with unit square sum; defined by
    alpha = rho - i*nu, beta = -i*(mu + i*lam) from the Cayley-Klein pair."""

    rho: float
    nu: float
    mu: float
    lam: float


class Quaternion:
    """Even multivector (grades 0 and 2); unit ones carry rotations."""

    __slots__ = ("_value",)

    def __init__(self, value: Multivector, require_unit: bool = True):
        odd = value.grade_project(1) + value.grade_project(3)
        if odd.norm() > _GRADE_TOL:
            raise DomainError("quaternion must have zero grade-1 and grade-3 parts")
        if require_unit and abs(value.norm() ** 2 - 1.0) > _UNIT_TOL:
            raise DomainError("quaternion is not unit")
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, v):
        raise AttributeError("Quaternion is immutable")

    @property
    def value(self) -> Multivector:
        return self._value

    @classmethod
    def identity(cls) -> "Quaternion":
        return cls(E0)

    def reversion(self) -> Multivector:
        return self._value.reversion()

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self._value)

    def to_json(self) -> dict[str, float]:
        return self._value.to_json()

    def __repr__(self) -> str:
        return f"Quaternion<{self._value!r}>"


def quaternion_from_axis_angle(aa: AxisAngle) -> Quaternion:
    """exp(-e123 * c * theta/2) = cos(theta/2) - e123*c*sin(theta/2)."""
    n2 = aa.c1**2 + aa.c2**2 + aa.c3**2
    if abs(n2 - 1.0) > _UNIT_TOL:
        raise DomainError("rotation axis must be a unit vector")
    half = 0.5 * aa.theta
    c = Multivector([0, aa.c1, aa.c2, aa.c3, 0, 0, 0, 0])
    value = math.cos(half) * E0 - math.sin(half) * (Multivector.basis("e123") * c)
    return Quaternion(value)


def cayley_klein(q: Quaternion) -> CayleyKlein:
    """(alpha, beta) reading the quaternion's matrix [[a,-b*],[b,a*]].

    Under the matrix map alpha = q0 + i*q12 and beta = q13 + i*q23; this
    reproduces the closed axis-angle forms alpha = cos(t/2) - i*c3*sin(t/2),
    beta = -i*(c1 + i*c2)*sin(t/2).
    """
    v = q.value
    return CayleyKlein(
        alpha=complex(v["e0"], v["e12"]),
        beta=complex(v["e13"], v["e23"]),
    )


def euler_rodrigues(q: Quaternion) -> EulerRodrigues:
    """Real parameters (rho, nu, mu, lam) of a unit quaternion."""
    ck = cayley_klein(q)
    return EulerRodrigues(
        rho=ck.alpha.real,
        nu=-ck.alpha.imag,
        mu=-ck.beta.imag,
        lam=ck.beta.real,
    )


def quaternion_from_euler_rodrigues(er: EulerRodrigues) -> Quaternion:
    """Inverse of :func:`euler_rodrigues`."""
    return Quaternion(
        Multivector([er.rho, 0, 0, 0, -er.nu, -er.mu, er.lam, 0])
    )


def rotate(m: Multivector, q: Quaternion) -> Multivector:
    """Sandwich q * m * ~q; grade preserving, isometric."""
    return q.value * m * q.reversion()


def compose(q1: Quaternion, q2: Quaternion) -> Quaternion:
    """Ordered product: applying the result equals applying q2 then q1."""
    return Quaternion(q1.value * q2.value)


def reflect_point(m: Multivector) -> Multivector:
    """Reflection in the frame origin: vectors and trivectors flip sign."""
    return m.grade_involution()


def _check_mirror(mirror: Multivector, grade: int, what: str) -> None:
    off = mirror - mirror.grade_project(grade)
    if off.norm() > _GRADE_TOL:
        raise DomainError(f"{what} must be a pure grade-{grade} multivector")
    if abs(mirror.norm() ** 2 - 1.0) > _UNIT_TOL:
        raise DomainError(f"{what} must be unit")


def reflect_line(m: Multivector, axis: Multivector) -> Multivector:
    """axis * m * axis: vector components along the line keep sign,
    perpendicular ones flip."""
    _check_mirror(axis, 1, "reflection axis")
    return axis * m * axis


def reflect_plane(m: Multivector, plane: Multivector) -> Multivector:
    """Mirror across a plane: the vector component perpendicular to the
    plane flips sign.

    Implemented as plane * bar(m) * ~plane (an odd versor sandwich: the
    plane's normal n with n * bar(m) * n).  The grade involution is what
    keeps scalars fixed while vectors mirror; without it the sandwich
    degenerates to the line reflection in the normal.
    """
    _check_mirror(plane, 2, "reflection plane")
    return plane * m.grade_involution() * plane.reversion()


_LINE_NAMES = ("e1", "e2", "e3")
_PLANE_NAMES = ("e12", "e23", "e13")


def structure_permutation(op: str) -> dict[str, tuple[str, int]]:
    """Signed permutation of the structure-element labels realized by a
    basis reflection.

    ``op`` is "point", a basis axis name ("e1".."e3") or a basis plane
    name ("e12"/"e23"/"e13").  Computed by reflecting each element's
    value and matching it against the table.
    """
    if op == "point":
        apply = reflect_point
    elif op in _LINE_NAMES:
        apply = lambda m: reflect_line(m, Multivector.basis(op))
    elif op in _PLANE_NAMES:
        apply = lambda m: reflect_plane(m, Multivector.basis(op))
    else:
        raise DomainError(f"unsupported reflection descriptor {op!r}")

    perm: dict[str, tuple[str, int]] = {}
    for label in LABELS:
        image = apply(structure_element(label))
        for target in LABELS:
            tv = structure_element(target)
            if image.approx_eq(tv, 1e-12):
                perm[label] = (target, 1)
                break
            if image.approx_eq(-tv, 1e-12):
                perm[label] = (target, -1)
                break
        else:
            raise DomainError(
                f"reflection {op!r} does not permute the structure elements"
            )
    return perm


def rodrigues_matrix(aa: AxisAngle) -> np.ndarray:
    """Independent 3x3 rotation-matrix oracle for the same convention."""
    c = np.array([aa.c1, aa.c2, aa.c3])
    k = np.array(
        [[0.0, -c[2], c[1]], [c[2], 0.0, -c[0]], [-c[1], c[0], 0.0]]
    )
    return np.eye(3) + math.sin(aa.theta) * k + (1.0 - math.cos(aa.theta)) * (k @ k)
