"""Affine Weierstrass elliptic-curve arithmetic and a named-curve registry.

Curves are y^2 = x^3 + a*x + b over GF(p). Points are affine with an explicit
identity marker; all group operations go through modular inversion (no
projective coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import MathDomainError, UnknownCurveError
from .numtheory import mod_inv


@dataclass(frozen=True)
class CurvePoint:
    """Affine point, or the group identity when both coordinates are None."""

    x: Optional[int]
    y: Optional[int]

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def __repr__(self) -> str:
        if self.is_identity:
            return "CurvePoint(identity)"
        return f"CurvePoint({self.x}, {self.y})"


IDENTITY = CurvePoint(None, None)


@dataclass(frozen=True)
class CurveParams:
    """Weierstrass domain parameters. `order` is the order of base point g."""

    name: str
    p: int
    a: int
    b: int
    g: CurvePoint
    order: int


def is_on_curve(point: CurvePoint, curve: CurveParams) -> bool:
    if point.is_identity:
        return True
    x, y = point.x, point.y
    return (y * y - (x * x * x + curve.a * x + curve.b)) % curve.p == 0


def point_add(p1: CurvePoint, p2: CurvePoint, curve: CurveParams) -> CurvePoint:
    """Group law: identity cases, inverse pair, chord rule, tangent rule."""
    if p1.is_identity:
        return p2
    if p2.is_identity:
        return p1
    p = curve.p
    if p1.x == p2.x:
        if (p1.y + p2.y) % p == 0:
            # vertical line: P + (-P)
            return IDENTITY
        # doubling; y != 0 here because y = -y mod p was excluded above
        lam = (3 * p1.x * p1.x + curve.a) * mod_inv(2 * p1.y, p) % p
    else:
        lam = (p2.y - p1.y) * mod_inv(p2.x - p1.x, p) % p
    x3 = (lam * lam - p1.x - p2.x) % p
    y3 = (lam * (p1.x - x3) - p1.y) % p
    return CurvePoint(x3, y3)


def point_neg(point: CurvePoint, curve: CurveParams) -> CurvePoint:
    if point.is_identity:
        return IDENTITY
    return CurvePoint(point.x, (-point.y) % curve.p)


def scalar_mul(k: int, point: CurvePoint, curve: CurveParams) -> CurvePoint:
    """k*P by double-and-add. k is reduced mod the group order first."""
    if k < 0:
        raise MathDomainError("negative scalars are not supported")
    k %= curve.order
    result = IDENTITY
    addend = point
    while k:
        if k & 1:
            result = point_add(result, addend, curve)
        addend = point_add(addend, addend, curve)
        k >>= 1
    return result


# Registry. toy17 is a textbook 19-point group for tests; the rest are the
# standard published Weierstrass parameter sets at each NIST ECC size. Values
# are cross-checked by tests against the CurveParams invariants: nonzero
# discriminant, base point on curve, prime order, order*G = identity.
_CURVES: dict[str, CurveParams] = {
    "toy17": CurveParams(
        name="toy17",
        p=17,
        a=2,
        b=2,
        g=CurvePoint(5, 1),
        order=19,
    ),
    "secp160r1": CurveParams(
        name="secp160r1",
        p=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF7FFFFFFF,
        a=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF7FFFFFFC,
        b=0x1C97BEFC54BD7A8B65ACF89F81D4D4ADC565FA45,
        g=CurvePoint(
            0x4A96B5688EF573284664698968C38BB913CBFC82,
            0x23A628553168947D59DCC912042351377AC5FB32,
        ),
        order=0x0100000000000000000001F4C8F927AED3CA752257,
    ),
    "secp224r1": CurveParams(
        name="secp224r1",
        p=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF000000000000000000000001,
        a=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFFFFFFFFFFFFFFFFFFFE,
        b=0xB4050A850C04B3ABF54132565044B0B7D7BFD8BA270B39432355FFB4,
        g=CurvePoint(
            0xB70E0CBD6BB4BF7F321390B94A03C1D356C21122343280D6115C1D21,
            0xBD376388B5F723FB4C22DFE6CD4375A05A07476444D5819985007E34,
        ),
        order=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFF16A2E0B8F03E13DD29455C5C2A3D,
    ),
    "secp256r1": CurveParams(
        name="secp256r1",
        p=0xFFFFFFFF00000001000000000000000000000000FFFFFFFFFFFFFFFFFFFFFFFF,
        a=0xFFFFFFFF00000001000000000000000000000000FFFFFFFFFFFFFFFFFFFFFFFC,
        b=0x5AC635D8AA3A93E7B3EBBD55769886BC651D06B0CC53B0F63BCE3C3E27D2604B,
        g=CurvePoint(
            0x6B17D1F2E12C4247F8BCE6E563A440F277037D812DEB33A0F4A13945D898C296,
            0x4FE342E2FE1A7F9B8EE7EB4A7C0F9E162BCE33576B315ECECBB6406837BF51F5,
        ),
        order=0xFFFFFFFF00000000FFFFFFFFFFFFFFFFBCE6FAADA7179E84F3B9CAC2FC632551,
    ),
    "secp384r1": CurveParams(
        name="secp384r1",
        p=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFFFF0000000000000000FFFFFFFF,
        a=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFFFF0000000000000000FFFFFFFC,
        b=0xB3312FA7E23EE7E4988E056BE3F82D19181D9C6EFE8141120314088F5013875AC656398D8A2ED19D2A85C8EDD3EC2AEF,
        g=CurvePoint(
            0xAA87CA22BE8B05378EB1C71EF320AD746E1D3B628BA79B9859F741E082542A385502F25DBF55296C3A545E3872760AB7,
            0x3617DE4A96262C6F5D9E98BF9292DC29F8F41DBD289A147CE9DA3113B5F0B8C00A60B1CE1D7E819D7A431D7C90EA0E5F,
        ),
        order=0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFC7634D81F4372DDF581A0DB248B0A77AECEC196ACCC52973,
    ),
}

# Table row: NIST symmetric-equivalent level -> ECC curve size.
CURVE_BY_ECC_BITS: dict[int, str] = {
    160: "secp160r1",
    224: "secp224r1",
    256: "secp256r1",
    384: "secp384r1",
}


def get_curve(name: str) -> CurveParams:
    try:
        return _CURVES[name]
    except KeyError:
        available = ", ".join(sorted(_CURVES))
        raise UnknownCurveError(
            f"unknown curve: {name!r} (available: {available})"
        ) from None


def curve_names() -> tuple[str, ...]:
    return tuple(_CURVES)
