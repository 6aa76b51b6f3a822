"""The 8-dimensional multivector of G(3,0) and its basic arithmetic.

Coefficients are double precision.  Every structural constant of the
algebra (signs, 1/2, 1/4, 1/8) is exactly representable, so identities
not involving trigonometry hold with exact float equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from ._kernels import BLADE_NAMES, BLADE_TUPLES, NAME_INDEX, gp
from .errors import DomainError

Scalar = Union[int, float]

#: grade of each blade position, in storage order
BLADE_GRADES: tuple[int, ...] = tuple(len(t) for t in BLADE_TUPLES)


def blade_grade(name: str) -> int:
    """Grade of a named basis blade ('e12' -> 2)."""
    return BLADE_GRADES[NAME_INDEX[name]]


class Multivector:
    """Immutable element of G(3,0), stored as 8 coefficients over
    {e0, e1, e2, e3, e12, e23, e13, e123}."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[float]):
        c = np.asarray(coeffs, dtype=np.float64)
        if c.shape != (8,):
            raise ValueError("Multivector needs exactly 8 coefficients")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Multivector":
        return cls(np.zeros(8))

    @classmethod
    def scalar(cls, x: Scalar) -> "Multivector":
        c = np.zeros(8)
        c[0] = x
        return cls(c)

    @classmethod
    def basis(cls, name: str) -> "Multivector":
        """Unit blade by name, e.g. 'e13'."""
        if name not in NAME_INDEX:
            raise KeyError(f"unknown basis blade {name!r}")
        c = np.zeros(8)
        c[NAME_INDEX[name]] = 1.0
        return cls(c)

    # -- access -------------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array in storage order."""
        return self._c

    def __getitem__(self, name: str) -> float:
        return float(self._c[NAME_INDEX[name]])

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return Multivector(self._c + other._c)

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return Multivector(self._c - other._c)

    def __neg__(self) -> "Multivector":
        return Multivector(-self._c)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return Multivector(gp(self._c, other._c))
        if isinstance(other, (int, float)):
            return Multivector(self._c * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Multivector(other * self._c)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Multivector(self._c / other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    def approx_eq(self, other: "Multivector", tol: float) -> bool:
        """Max absolute coefficient difference at most ``tol``."""
        if tol < 0:
            raise DomainError("tolerance must be nonnegative")
        return bool(np.max(np.abs(self._c - other._c)) <= tol)

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector."""
        return float(np.sqrt(np.dot(self._c, self._c)))

    # -- grade structure ----------------------------------------------

    def grade_project(self, k: int) -> "Multivector":
        """Zero every coefficient whose blade grade differs from ``k``."""
        if k not in (0, 1, 2, 3):
            raise DomainError(f"grade must be 0..3, got {k}")
        c = np.where(np.array(BLADE_GRADES) == k, self._c, 0.0)
        return Multivector(c)

    def reversion(self) -> "Multivector":
        """Reverse the order of vector factors: grades 2 and 3 negate."""
        return Multivector(self._c * _REVERSION_SIGNS)

    def grade_involution(self) -> "Multivector":
        """Space reversion (overline): grades 1 and 3 negate."""
        return Multivector(self._c * _GRADE_INV_SIGNS)

    def clifford_conjugation(self) -> "Multivector":
        """Composite of reversion and grade involution: grades 1, 2 negate."""
        return Multivector(self._c * _CLIFF_CONJ_SIGNS)

    # -- serialization ------------------------------------------------

    def to_json(self) -> dict[str, float]:
        return {n: float(self._c[i]) for i, n in enumerate(BLADE_NAMES)}

    @classmethod
    def from_json(cls, obj: dict[str, float]) -> "Multivector":
        if set(obj) != set(BLADE_NAMES):
            raise ValueError("multivector JSON must have exactly the 8 blade keys")
        return cls([obj[n] for n in BLADE_NAMES])

    def __repr__(self) -> str:
        terms = [
            f"{self._c[i]:g}*{n}" for i, n in enumerate(BLADE_NAMES) if self._c[i] != 0
        ]
        return "Multivector<" + (" + ".join(terms) if terms else "0") + ">"


def _grade_signs(negated: tuple[int, ...]) -> np.ndarray:
    s = np.array([-1.0 if g in negated else 1.0 for g in BLADE_GRADES])
    s.setflags(write=False)
    return s


_REVERSION_SIGNS = _grade_signs((2, 3))
_GRADE_INV_SIGNS = _grade_signs((1, 3))
_CLIFF_CONJ_SIGNS = _grade_signs((1, 2))

INVOLUTION_KINDS = ("reversion", "grade_involution", "clifford_conjugation")


def involution(kind: str, m: Multivector) -> Multivector:
    """Apply one of the three involutions by name."""
    if kind not in INVOLUTION_KINDS:
        raise DomainError(f"unknown involution {kind!r}")
    return getattr(m, kind)()


def basis_element(name: str) -> Multivector:
    """Unit multivector for a named blade."""
    return Multivector.basis(name)


def geometric_product(m: Multivector, n: Multivector) -> Multivector:
    return m * n


def linear_combine(terms: Iterable[tuple[Scalar, Multivector]]) -> Multivector:
    """Componentwise weighted sum of (scalar, multivector) pairs."""
    acc = np.zeros(8)
    for w, m in terms:
        acc += w * m.coeffs
    return Multivector(acc)


def grade_project(m: Multivector, k: int) -> Multivector:
    return m.grade_project(k)


def approx_eq(m: Multivector, n: Multivector, tol: float) -> bool:
    return m.approx_eq(n, tol)


@dataclass(frozen=True)
class ComplexScalar:
    """Complex number embedded as re*e0 + im*e123.

    The pseudoscalar is central and squares to -e0, so the embedding
    commutes with every multivector.
    """

    re: float
    im: float = 0.0

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexScalar":
        return cls(z.real, z.imag)

    def as_complex(self) -> complex:
        return complex(self.re, self.im)

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def embed(self) -> Multivector:
        c = np.zeros(8)
        c[0] = self.re
        c[7] = self.im
        return Multivector(c)


def complex_multiply(z: Union[ComplexScalar, complex], m: Multivector) -> Multivector:
    """Multiply by a complex scalar realized through the pseudoscalar."""
    if isinstance(z, complex):
        z = ComplexScalar.from_complex(z)
    return z.embed() * m


# convenience handles for the 8 unit blades
E0, E1, E2, E3, E12, E23, E13, E123 = (Multivector.basis(n) for n in BLADE_NAMES)
