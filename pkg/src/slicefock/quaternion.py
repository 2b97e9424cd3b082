"""Quaternion arithmetic, the sphere of imaginary units, and slice coordinates.

Every quaternion q = w + x*i + y*j + z*k decomposes as q = re + im * I with
im = |Im q| >= 0 and I a purely imaginary unit.  The slice C_I = R + R*I
through I is a copy of the complex plane inside H, and all slice-wise
constructions in the rest of the package are phrased in these coordinates.

All values here are immutable and all operations are pure functions, so
concurrent use requires no locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroDivisor

__all__ = [
    "Quaternion",
    "ImaginaryUnit",
    "SliceCoords",
    "ONE",
    "UNIT_I",
    "UNIT_J",
    "UNIT_K",
    "quat_mul",
    "quat_conj_mod_inv",
    "decompose",
    "compose",
    "orthonormal_partner",
    "sphere_sample",
    "default_sphere",
]

_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))
# below this modulus an inverse is treated as a division by zero
_INVERSION_FLOOR = 1e-300


@dataclass(frozen=True, slots=True)
class Quaternion:
    """Element w + x*i + y*j + z*k of the real quaternion algebra.

    Multiplication follows the Hamilton rules i*j = k, j*k = i, k*i = j and
    is not commutative; everything else behaves like a 4-dimensional real
    vector space.

    >>> Quaternion(0, 1, 0, 0) * Quaternion(0, 0, 1, 0)
    Quaternion(w=0.0, x=0.0, y=0.0, z=1.0)
    """

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "w", float(self.w))
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        object.__setattr__(self, "z", float(self.z))

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a, b = self, other
            return Quaternion(
                a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
            )
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # scalars commute with everything, so only this case is needed
        if isinstance(other, (int, float)):
            return Quaternion(other * self.w, other * self.x,
                              other * self.y, other * self.z)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def modulus(self) -> float:
        # hypot rescales internally, so |q| is finite whenever q is
        return math.hypot(self.w, self.x, self.y, self.z)

    __abs__ = modulus

    def modulus_sq(self) -> float:
        return (self.w * self.w + self.x * self.x
                + self.y * self.y + self.z * self.z)

    def inverse(self) -> "Quaternion":
        m = self.modulus()
        if m < _INVERSION_FLOOR:
            raise ZeroDivisor(f"cannot invert quaternion of modulus {m!r}")
        # divide by |q| twice instead of |q|^2 so tiny moduli do not underflow
        return Quaternion(self.w / m / m, -self.x / m / m,
                          -self.y / m / m, -self.z / m / m)

    def real_part(self) -> float:
        return self.w

    def imag_vector(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def imag_modulus(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)


ONE = Quaternion(1.0)


@dataclass(frozen=True, slots=True)
class ImaginaryUnit:
    """Point of the 2-sphere S = {xi + yj + zk : x^2 + y^2 + z^2 = 1}.

    Each such I satisfies I^2 = -1 and selects the slice C_I = R + R*I.
    """

    x: float
    y: float
    z: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        object.__setattr__(self, "z", float(self.z))
        nsq = self.x * self.x + self.y * self.y + self.z * self.z
        if abs(nsq - 1.0) > 1e-12:
            raise ValueError(f"imaginary unit must have norm 1, got |v|^2 = {nsq!r}")

    @classmethod
    def normalized(cls, x: float, y: float, z: float) -> "ImaginaryUnit":
        n = math.sqrt(x * x + y * y + z * z)
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(x / n, y / n, z / n)

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    def dot(self, other: "ImaginaryUnit") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def __neg__(self):
        return ImaginaryUnit(-self.x, -self.y, -self.z)


UNIT_I = ImaginaryUnit(1.0, 0.0, 0.0)
UNIT_J = ImaginaryUnit(0.0, 1.0, 0.0)
UNIT_K = ImaginaryUnit(0.0, 0.0, 1.0)


@dataclass(frozen=True, slots=True)
class SliceCoords:
    """Coordinates q = re + im * unit with im >= 0.

    A negative im is canonicalized by absorbing the sign into the unit, so
    equal quaternions always produce equal coordinates.
    """

    re: float
    im: float
    unit: ImaginaryUnit

    def __post_init__(self):
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "im", float(self.im))
        if self.im < 0.0:
            object.__setattr__(self, "im", -self.im)
            object.__setattr__(self, "unit", -self.unit)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product of two quaternions."""
    return a * b


def quat_conj_mod_inv(q: Quaternion) -> tuple[Quaternion, float, Quaternion]:
    """Conjugate, modulus and inverse of q in one call.

    Raises ZeroDivisor when the modulus is below 1e-300 because the inverse
    is part of the result.
    """
    return q.conjugate(), q.modulus(), q.inverse()


def decompose(q: Quaternion) -> SliceCoords:
    """Slice coordinates (re, im, I) of q, with im >= 0.

    Real quaternions have no preferred slice; by convention they report the
    unit i so that compose(decompose(q)) is always well defined.
    """
    im = q.imag_modulus()
    if im == 0.0:
        return SliceCoords(q.w, 0.0, UNIT_I)
    return SliceCoords(q.w, im, ImaginaryUnit(q.x / im, q.y / im, q.z / im))


def compose(coords: SliceCoords) -> Quaternion:
    """Quaternion re + im * unit from slice coordinates."""
    u = coords.unit
    return Quaternion(coords.re, coords.im * u.x, coords.im * u.y, coords.im * u.z)


def orthonormal_partner(unit: ImaginaryUnit) -> ImaginaryUnit:
    """Deterministic unit J orthogonal to the given I.

    Gram-Schmidt applied to the first canonical basis vector of {i, j, k}
    that is not parallel to I, so i -> j, j -> i and (i+j)/sqrt2 -> (i-j)/sqrt2.
    """
    for ex, ey, ez in ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)):
        d = ex * unit.x + ey * unit.y + ez * unit.z
        if 1.0 - abs(d) > 1e-6:
            return ImaginaryUnit.normalized(ex - d * unit.x,
                                            ey - d * unit.y,
                                            ez - d * unit.z)
    raise ValueError("no canonical basis vector is transverse to the unit")


def sphere_sample(count: int) -> list[ImaginaryUnit]:
    """Deterministic Fibonacci lattice of `count` imaginary units.

    Latitudes are the midpoints 1 - 2(k + 1/2)/count and longitudes advance
    by the golden angle, which keeps pairwise angles bounded away from zero.
    count = 1 returns [i].
    """
    if count < 1:
        raise ValueError("count must be a positive integer")
    units = []
    for idx in range(count):
        lat = 1.0 - 2.0 * (idx + 0.5) / count
        rad = math.sqrt(max(0.0, 1.0 - lat * lat))
        phi = idx * _GOLDEN_ANGLE
        units.append(ImaginaryUnit.normalized(rad * math.cos(phi),
                                              rad * math.sin(phi), lat))
    return units


def default_sphere(count: int = 64) -> list[ImaginaryUnit]:
    """Fibonacci sample of the sphere plus the canonical units i, j, k.

    This is the sampling used by the norm routines when no explicit list is
    given: the lattice covers the sphere evenly while the canonical units
    keep the classical slices exercised.
    """
    units = sphere_sample(count)
    for extra in (UNIT_I, UNIT_J, UNIT_K):
        if all(u != extra for u in units):
            units.append(extra)
    return units
