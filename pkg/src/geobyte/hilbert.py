"""Hilbert projections into the one-sided spinor ideals of P3/N3,
geometric qubits, and the NOT / Hadamard gate analogs.

Spinors carry their ideal (positive/negative) and variance
(contravariant/covariant) explicitly so that ill-matched products are
rejected instead of silently producing junk.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from ._kernels import BLADE_NAMES
from .clusters import N1, N3, P1, P3
from .errors import DomainError
from .multivector import E0, ComplexScalar, Multivector
from .transforms import Quaternion, rotate

Ideal = Literal["positive", "negative"]
Variance = Literal["contravariant", "covariant"]

_ABSORB_TOL = 1e-12

_E1 = Multivector.basis("e1")
#: the two basis spinors of the positive contravariant ideal
E1P3 = _E1 * P3
E1N3 = _E1 * N3


def _projector(ideal: Ideal) -> Multivector:
    if ideal == "positive":
        return P3
    if ideal == "negative":
        return N3
    raise DomainError(f"unknown ideal {ideal!r}")


@dataclass(frozen=True)
class Spinor:
    """Element of a one-sided ideal, tagged with ideal and variance.

    Contravariant spinors absorb the projector on the right
    (value * P3 = value); covariant ones absorb on the left.
    """

    value: Multivector
    ideal: Ideal
    variance: Variance

    def __post_init__(self):
        p = _projector(self.ideal)
        if self.variance == "contravariant":
            absorbed = self.value * p
        elif self.variance == "covariant":
            absorbed = p * self.value
        else:
            raise DomainError(f"unknown variance {self.variance!r}")
        if not absorbed.approx_eq(self.value, _ABSORB_TOL):
            raise DomainError(
                f"value does not lie in the {self.ideal} {self.variance} ideal"
            )

    def to_json(self) -> dict:
        return {
            "ideal": self.ideal,
            "variance": self.variance,
            "value": self.value.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Spinor":
        return cls(Multivector.from_json(obj["value"]), obj["ideal"], obj["variance"])


@dataclass(frozen=True)
class GeometricQubit:
    """Complementary pair Q*P3 (positive) and Q*N3 (negative); their sum
    reconstructs the generating quaternion."""

    positive: Spinor
    negative: Spinor


@dataclass(frozen=True)
class ParavectorState:
    """Idempotent (e0 +- a)/2 for a unit vector a; scalar part 1/2."""

    value: Multivector


def project(m: Multivector, ideal: Ideal, side: Literal["right", "left"]) -> Spinor:
    """One-sided multiplication by P3 or N3."""
    p = _projector(ideal)
    if side == "right":
        return Spinor(m * p, ideal, "contravariant")
    if side == "left":
        return Spinor(p * m, ideal, "covariant")
    raise DomainError(f"unknown side {side!r}")


def degeneracy_partner(blade: str, ideal: Ideal) -> tuple[str, int]:
    """The other basis blade with the same projection image in the ideal,
    plus the relative sign (blade * proj = sign * partner * proj)."""
    p = _projector(ideal)
    image = Multivector.basis(blade) * p
    for other in BLADE_NAMES:
        if other == blade:
            continue
        o = Multivector.basis(other) * p
        if o.approx_eq(image, _ABSORB_TOL):
            return other, 1
        if (-o).approx_eq(image, _ABSORB_TOL):
            return other, -1
    raise DomainError(f"no degeneracy partner for {blade!r} in the {ideal} ideal")


def spinor_pair(q: Quaternion) -> GeometricQubit:
    """Split a unit quaternion into its two contravariant spinor halves."""
    return GeometricQubit(
        positive=Spinor(q.value * P3, "positive", "contravariant"),
        negative=Spinor(q.value * N3, "negative", "contravariant"),
    )


def covariant(s: Spinor) -> Spinor:
    """Reversion; flips variance, keeps the ideal."""
    if s.variance != "contravariant":
        raise DomainError("covariant() expects a contravariant spinor")
    return Spinor(s.value.reversion(), s.ideal, "covariant")


def inner(sc: Spinor, s: Spinor) -> Multivector:
    """Covariant-then-contravariant product; P3 (or N3) for spinors of
    one unit quaternion."""
    if sc.variance != "covariant" or s.variance != "contravariant":
        raise DomainError("inner() wants (covariant, contravariant)")
    if sc.ideal != s.ideal:
        raise DomainError("inner() requires matching ideals")
    return sc.value * s.value


def outer(s: Spinor, sc: Spinor) -> ParavectorState:
    """Contravariant-then-covariant product; the rotated paravector."""
    if s.variance != "contravariant" or sc.variance != "covariant":
        raise DomainError("outer() wants (contravariant, covariant)")
    if s.ideal != sc.ideal:
        raise DomainError("outer() requires matching ideals")
    return ParavectorState(s.value * sc.value)


def reconstruct_vector(q: Quaternion) -> Multivector:
    """Q*P3*~Q - Q*N3*~Q, the rotated image of e3."""
    qv, qr = q.value, q.reversion()
    return qv * P3 * qr - qv * N3 * qr


def spinor_components(s: Spinor) -> tuple[complex, complex]:
    """Coefficients (alpha, beta) of a positive contravariant spinor over
    {P3, e1*P3}, with i realized as the pseudoscalar."""
    if s.ideal != "positive" or s.variance != "contravariant":
        raise DomainError("component extraction is defined on the positive contravariant ideal")
    v = s.value
    return complex(2 * v["e0"], 2 * v["e12"]), complex(2 * v["e1"], 2 * v["e2"])


def spinor_from_components(alpha: complex, beta: complex) -> Spinor:
    """alpha*P3 + beta*(e1*P3) in the positive contravariant ideal."""
    value = (
        ComplexScalar.from_complex(alpha).embed() * P3
        + ComplexScalar.from_complex(beta).embed() * E1P3
    )
    return Spinor(value, "positive", "contravariant")


@dataclass(frozen=True)
class HadamardTerms:
    """Regrouped form (alpha+beta)*(P1*P3) + (alpha-beta)*(N1*P3),
    with the structure-element identities P1*P3 = A + C and
    N1*P3 = B + Dbar."""

    coeff_plus: complex
    coeff_minus: complex
    plus_basis: Multivector  # P1*P3 = A + C
    minus_basis: Multivector  # N1*P3 = B + Dbar

    def resum(self) -> Multivector:
        return (
            ComplexScalar.from_complex(self.coeff_plus).embed() * self.plus_basis
            + ComplexScalar.from_complex(self.coeff_minus).embed() * self.minus_basis
        )


def hadamard_regroup(s: Spinor) -> HadamardTerms:
    """Rewrite a positive contravariant spinor over {P1*P3, N1*P3}."""
    alpha, beta = spinor_components(s)
    return HadamardTerms(
        coeff_plus=alpha + beta,
        coeff_minus=alpha - beta,
        plus_basis=P1 * P3,
        minus_basis=N1 * P3,
    )


def hadamard_basis_vectors() -> tuple[Spinor, Spinor]:
    """((e1+e3)/sqrt2 * P3, (e1-e3)/sqrt2 * P3): the quantum-style
    Hadamard basis, normed before projection."""
    e1 = _E1
    e3 = Multivector.basis("e3")
    s = 2.0 ** -0.5
    return (
        Spinor((s * (e1 + e3)) * P3, "positive", "contravariant"),
        Spinor((s * (e1 - e3)) * P3, "positive", "contravariant"),
    )


def not_gate(s: Spinor) -> Spinor:
    """Left multiplication by e1: swaps the two basis spinors of the
    ideal; involutive since e1*e1 = e0."""
    if s.variance != "contravariant":
        raise DomainError("not_gate() expects a contravariant spinor")
    return Spinor(_E1 * s.value, s.ideal, s.variance)
