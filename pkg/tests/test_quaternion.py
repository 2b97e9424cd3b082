import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slicefock import (ONE, UNIT_I, UNIT_J, UNIT_K, ImaginaryUnit, Quaternion,
                       SliceCoords, ZeroDivisor, compose, decompose,
                       default_sphere, orthonormal_partner, sphere_sample)

component = st.floats(min_value=-10.0, max_value=10.0,
                      allow_nan=False, allow_infinity=False)
quats = st.builds(Quaternion, component, component, component, component)
EPS = 2.220446049250313e-16


def qdist(a, b):
    return (a - b).modulus()


# --- multiplication table and arithmetic ---

def test_basis_table():
    i, j, k = UNIT_I.as_quaternion(), UNIT_J.as_quaternion(), UNIT_K.as_quaternion()
    assert i * j == k
    assert j * k == i
    assert k * i == j
    assert j * i == -k
    assert i * i == Quaternion(-1.0)


def test_unit_element():
    q = Quaternion(0.3, -1.2, 4.0, 2.5)
    assert q * ONE == q
    assert ONE * q == q


def test_one_plus_i_times_one_plus_j():
    a = Quaternion(1.0, 1.0, 0.0, 0.0)
    b = Quaternion(1.0, 0.0, 1.0, 0.0)
    assert a * b == Quaternion(1.0, 1.0, 1.0, 1.0)


def test_conjugate_modulus_inverse_worked():
    q = Quaternion(1.0, 1.0, 1.0, 1.0)
    assert q.conjugate() == Quaternion(1.0, -1.0, -1.0, -1.0)
    assert q.modulus() == 2.0
    assert qdist(q.inverse(), Quaternion(0.25, -0.25, -0.25, -0.25)) == 0.0

    i = Quaternion(0.0, 1.0, 0.0, 0.0)
    assert i.conjugate() == -i
    assert i.modulus() == 1.0
    assert i.inverse() == -i


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisor):
        Quaternion().inverse()


@given(quats, quats, quats)
def test_associativity(a, b, c):
    scale = max(1.0, a.modulus() * b.modulus() * c.modulus())
    assert qdist((a * b) * c, a * (b * c)) <= 1e-12 * scale


@given(quats, quats)
def test_modulus_multiplicative(a, b):
    scale = max(1.0, a.modulus() * b.modulus())
    assert abs((a * b).modulus() - a.modulus() * b.modulus()) <= 1e-12 * scale


@given(quats, quats, quats)
def test_distributive(a, b, c):
    scale = max(1.0, a.modulus() * (b.modulus() + c.modulus()))
    assert qdist(a * (b + c), a * b + a * c) <= 1e-12 * scale


@given(quats, quats)
def test_conjugate_reverses_products(a, b):
    scale = max(1.0, a.modulus() * b.modulus())
    assert qdist((a * b).conjugate(), b.conjugate() * a.conjugate()) <= 1e-12 * scale


@given(quats)
def test_inverse_ulp_scale(q):
    if q.modulus() < 1e-3:
        return
    assert qdist(q * q.inverse(), ONE) <= 8.0 * EPS
    assert qdist(q.inverse() * q, ONE) <= 8.0 * EPS


def test_inverse_extreme_scales():
    # two-division form must survive |q|^2 overflow/underflow territory
    big = Quaternion(1e200, -3e200, 0.0, 2e200)
    assert qdist(big * big.inverse(), ONE) <= 8.0 * EPS
    tiny = Quaternion(1e-200, 1e-200, 0.0, 0.0)
    assert qdist(tiny * tiny.inverse(), ONE) <= 8.0 * EPS
    with pytest.raises(ZeroDivisor):
        Quaternion(1e-320, 0.0, 0.0, 0.0).inverse()


# --- slice coordinates ---

def test_decompose_worked_examples():
    c = decompose(Quaternion(3.0, 4.0, 0.0, 0.0))
    assert (c.re, c.im) == (3.0, 4.0)
    assert (c.unit.x, c.unit.y, c.unit.z) == (1.0, 0.0, 0.0)

    c = decompose(Quaternion(5.0))
    assert (c.re, c.im) == (5.0, 0.0)
    assert c.unit == UNIT_I  # real axis convention

    c = decompose(Quaternion(1.0, 1.0, 1.0, 1.0))
    assert c.re == 1.0
    assert abs(c.im - math.sqrt(3.0)) <= 1e-15
    s = 1.0 / math.sqrt(3.0)
    assert max(abs(c.unit.x - s), abs(c.unit.y - s), abs(c.unit.z - s)) <= 1e-15


def test_slice_coords_canonicalize_negative_im():
    c = SliceCoords(2.0, -3.0, UNIT_J)
    assert c.im == 3.0
    assert c.unit == ImaginaryUnit(0.0, -1.0, 0.0)
    assert qdist(compose(c), Quaternion(2.0, 0.0, -3.0, 0.0)) == 0.0


def test_compose_decompose_roundtrip_bulk():
    rng = np.random.default_rng(7)
    for _ in range(10_000):
        q = Quaternion(*rng.uniform(-5.0, 5.0, 4))
        back = compose(decompose(q))
        assert qdist(back, q) <= 1e-12 * max(1.0, q.modulus())
        assert decompose(q).im >= 0.0


def test_imaginary_unit_validation():
    with pytest.raises(ValueError):
        ImaginaryUnit(1.0, 1.0, 0.0)
    u = ImaginaryUnit.normalized(1.0, 1.0, 0.0)
    s = 1.0 / math.sqrt(2.0)
    assert abs(u.x - s) <= 1e-15 and abs(u.y - s) <= 1e-15
    with pytest.raises(ValueError):
        ImaginaryUnit.normalized(0.0, 0.0, 0.0)


def test_unit_squares_to_minus_one():
    for u in sphere_sample(50):
        q = u.as_quaternion()
        assert qdist(q * q, Quaternion(-1.0)) <= 1e-12


# --- orthonormal partners ---

def test_partner_worked_examples():
    assert orthonormal_partner(UNIT_I) == UNIT_J
    p = orthonormal_partner(UNIT_J)
    assert abs(p.x - 1.0) <= 1e-15 and abs(p.y) <= 1e-15 and abs(p.z) <= 1e-15

    s = 1.0 / math.sqrt(2.0)
    diag = ImaginaryUnit(s, s, 0.0)
    p = orthonormal_partner(diag)
    assert abs(p.x - s) <= 1e-12 and abs(p.y + s) <= 1e-12 and abs(p.z) <= 1e-12


def test_partner_orthogonality_bulk():
    for u in sphere_sample(97):
        p = orthonormal_partner(u)
        assert abs(u.dot(p)) <= 1e-12
        assert abs(p.x**2 + p.y**2 + p.z**2 - 1.0) <= 1e-12
        # real part of I * conj(J) is the euclidean dot
        prod = u.as_quaternion() * p.as_quaternion().conjugate()
        assert abs(prod.w) <= 1e-12


# --- sphere sampling ---

def test_sphere_sample_one_is_i():
    assert sphere_sample(1) == [UNIT_I]


def test_sphere_sample_two_antipodal_ish():
    a, b = sphere_sample(2)
    for u in (a, b):
        assert abs(u.x**2 + u.y**2 + u.z**2 - 1.0) <= 1e-12
    assert a.dot(b) < -0.5


def test_sphere_sample_hundred_separated():
    units = sphere_sample(100)
    assert len(units) == 100
    pts = np.array([[u.x, u.y, u.z] for u in units])
    dots = pts @ pts.T
    np.fill_diagonal(dots, -1.0)
    assert dots.max() < 1.0 - 1e-6  # pairwise minimal angle > 0


def test_sphere_sample_rejects_bad_count():
    with pytest.raises(ValueError):
        sphere_sample(0)


def test_default_sphere_appends_canonical_units():
    units = default_sphere(16)
    assert len(units) == 19
    assert units[-3:] == [UNIT_I, UNIT_J, UNIT_K]


# --- misc accessors ---

@given(quats)
@settings(max_examples=50)
def test_accessors(q):
    assert q.real_part() == q.w
    x, y, z = q.imag_vector()
    assert (x, y, z) == (q.x, q.y, q.z)
    assert abs(q.imag_modulus() - math.sqrt(x * x + y * y + z * z)) <= 1e-12
    assert abs(q.modulus_sq() - q.modulus() ** 2) <= 1e-9 * max(1.0, q.modulus_sq())
    assert abs(q) == q.modulus()
