import cmath
import math

import pytest

from slicefock import (UNIT_I, UNIT_J, AtomicData, FockParams, PointOffSlice,
                       Quaternion, SliceSeries, atomic_synthesis,
                       embed_complex, fock_norm_p, kernel_series,
                       lattice_points, normalized_kernel_eval, rep_eval,
                       star_exp_eval, star_exp_tail_bound)
from slicefock.corpus import random_unit, rng_for

I_Q = Quaternion(0.0, 1.0, 0.0, 0.0)
J_Q = Quaternion(0.0, 0.0, 1.0, 0.0)


def qdist(a, b):
    return (a - b).modulus()


def brute_horner(q, w, alpha, trunc):
    # same series, summed highest order first
    coeffs = []
    wb = Quaternion(1.0)
    scale = 1.0
    for n in range(trunc + 1):
        coeffs.append(wb * scale)
        wb = wb * w.conjugate()
        scale *= alpha / (n + 1)
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = q * acc + c
    return acc


def test_kernel_at_zero_weight_point():
    q = Quaternion(0.2, -0.4, 0.1, 0.7)
    assert star_exp_eval(q, Quaternion(), 1.0, 25) == Quaternion(1.0)


def test_kernel_brute_force_oracle():
    value = star_exp_eval(I_Q, J_Q, 1.0, 40)
    assert qdist(value, brute_horner(I_Q, J_Q, 1.0, 40)) <= 1e-14


def test_kernel_validation():
    with pytest.raises(ValueError):
        star_exp_eval(I_Q, J_Q, 0.0, 10)
    with pytest.raises(ValueError):
        star_exp_eval(I_Q, J_Q, 1.0, -1)


def test_tail_bound_dominates_truncation_error():
    rng = rng_for(81)
    for _ in range(25):
        q = Quaternion(*rng.uniform(-1, 1, 4))
        w = Quaternion(*rng.uniform(-1, 1, 4))
        full = star_exp_eval(q, w, 1.5, 60)
        for trunc in (4, 8, 16):
            short = star_exp_eval(q, w, 1.5, trunc)
            assert qdist(full, short) <= star_exp_tail_bound(q, w, 1.5, trunc) + 1e-15


def test_slice_collapse_to_complex_exponential():
    rng = rng_for(82)
    for _ in range(100):
        unit = random_unit(rng)
        zq = complex(*rng.uniform(-1, 1, 2))
        zw = complex(*rng.uniform(-1, 1, 2))
        q = embed_complex(zq, unit)
        w = embed_complex(zw, unit)
        value = star_exp_eval(q, w, 1.0, 36)
        expected = embed_complex(cmath.exp(zq * zw.conjugate()), unit)
        tail = star_exp_tail_bound(q, w, 1.0, 36)
        assert qdist(value, expected) <= tail + 1e-12


def test_kernel_series_matches_pointwise_kernel():
    rng = rng_for(83)
    w = Quaternion(0.3, -0.2, 0.5, 0.1)
    series = kernel_series(w, 2.0, 24)
    assert series.degree == 24
    for _ in range(10):
        q = Quaternion(*rng.uniform(-0.9, 0.9, 4))
        assert qdist(series.eval(q), star_exp_eval(q, w, 2.0, 24)) <= 1e-13


def test_kernel_two_slice_consistency():
    # the kernel is slice regular in q, so one slice determines the rest
    w = embed_complex(0.4 - 0.3j, UNIT_I)
    series = kernel_series(w, 1.0, 30)
    for y in (0.2, -0.55, 0.8):
        q = Quaternion(0.1, 0.0, y, 0.0)  # points of C_j
        assert qdist(rep_eval(series, UNIT_I, q), series.eval(q)) <= 1e-10


def test_normalized_kernel_examples():
    q = Quaternion(0.25, 0.1, -0.3, 0.0)
    assert qdist(normalized_kernel_eval(Quaternion(), q, 1.0, 20),
                 Quaternion(1.0)) <= 1e-15

    z = embed_complex(0.6 + 0.2j, UNIT_I)
    value = normalized_kernel_eval(z, z, 1.0, 40)
    expected = Quaternion(math.exp(0.5 * z.modulus_sq()))
    damp = math.exp(-0.5 * z.modulus_sq())
    tail = star_exp_tail_bound(z, z, 1.0, 40) * damp
    assert qdist(value, expected) <= tail + 1e-12


def test_normalized_kernel_ball_norm_below_one():
    # unit norm on the full plane, so strictly less on the ball
    z = embed_complex(0.5 + 0.1j, UNIT_I)
    damp = math.exp(-0.5 * z.modulus_sq())
    series = kernel_series(z, 1.0, 40).scale_right(Quaternion(damp))
    params = FockParams(alpha=1.0, p=2.0, n=1, radius=1.0)
    report = fock_norm_p(series, params, sphere=[UNIT_I, UNIT_J])
    assert 0.0 < report.value < 1.0


# --- atomic synthesis ---

def test_synthesis_single_point_at_origin():
    c = Quaternion(0.3, 0.1, -0.2, 0.5)
    data = AtomicData((Quaternion(),), (c,), 1.0, 12)
    f = atomic_synthesis(data, UNIT_I)
    assert f.coeffs[0] == c
    assert all(a.modulus() == 0.0 for a in f.coeffs[1:])


def test_synthesis_two_point_parity():
    alpha = 1.0
    data = AtomicData((Quaternion(0.5), Quaternion(-0.5)),
                      (Quaternion(1.0), Quaternion(1.0)), alpha, 16)
    f = atomic_synthesis(data, UNIT_I)
    damp = math.exp(-alpha / 8.0)
    for n, coeff in enumerate(f.coeffs):
        if n % 2 == 1:
            assert coeff.modulus() < 1e-15
        else:
            expected = alpha**n * damp * (0.5**n + (-0.5) ** n) / math.factorial(n)
            assert abs(coeff.w - expected) <= 1e-15
            assert coeff.imag_modulus() == 0.0


def test_synthesis_linearity():
    rng = rng_for(84)
    pts = tuple(embed_complex(complex(*rng.uniform(-0.7, 0.7, 2)), UNIT_I)
                for _ in range(4))
    a = tuple(Quaternion(*rng.uniform(-1, 1, 4)) for _ in range(4))
    b = tuple(Quaternion(*rng.uniform(-1, 1, 4)) for _ in range(4))
    c = Quaternion(0.3, -0.5, 0.2, 0.8)

    f_a = atomic_synthesis(AtomicData(pts, a, 1.0, 18), UNIT_I)
    f_b = atomic_synthesis(AtomicData(pts, b, 1.0, 18), UNIT_I)
    f_sum = atomic_synthesis(
        AtomicData(pts, tuple(x + y for x, y in zip(a, b)), 1.0, 18), UNIT_I)
    worst = max(qdist(s, x + y) for s, x, y
                in zip(f_sum.coeffs, f_a.coeffs, f_b.coeffs))
    assert worst <= 1e-13

    f_scaled = atomic_synthesis(
        AtomicData(pts, tuple(x * c for x in a), 1.0, 18), UNIT_I)
    worst = max(qdist(s, x * c) for s, x in zip(f_scaled.coeffs, f_a.coeffs))
    assert worst <= 1e-13


def test_synthesis_truncation_stability():
    rng = rng_for(85)
    pts = tuple(embed_complex(complex(*rng.uniform(-0.7, 0.7, 2)), UNIT_I)
                for _ in range(3))
    coeffs = tuple(Quaternion(*rng.uniform(-1, 1, 4)) for _ in range(3))
    f32 = atomic_synthesis(AtomicData(pts, coeffs, 2.0, 32), UNIT_I)
    f64 = atomic_synthesis(AtomicData(pts, coeffs, 2.0, 64), UNIT_I)
    shared = max(qdist(a, b) for a, b in zip(f32.coeffs, f64.coeffs))
    assert shared <= 1e-15  # shared coefficients use the identical formula
    tail = max(a.modulus() for a in f64.coeffs[33:])
    assert tail < 1e-12


def test_synthesis_rejects_off_slice_points():
    data = AtomicData((Quaternion(0.1, 0.0, 0.5, 0.0),), (Quaternion(1.0),),
                      1.0, 8)
    with pytest.raises(PointOffSlice):
        atomic_synthesis(data, UNIT_I)


def test_atomic_data_validation():
    with pytest.raises(ValueError):
        AtomicData((Quaternion(),), (), 1.0, 4)
    with pytest.raises(ValueError):
        AtomicData((Quaternion(),), (Quaternion(1.0),), 0.0, 4)
    with pytest.raises(ValueError):
        AtomicData((Quaternion(),), (Quaternion(1.0),), 1.0, -1)


# --- lattices ---

def test_lattice_origin_only():
    pts = lattice_points(1.0, UNIT_I, 0.9)
    assert pts == [Quaternion()]


def test_lattice_thirteen_points():
    pts = lattice_points(0.5, UNIT_I, 1.01)
    assert len(pts) == 13
    values = {(round(p.w, 10), round(p.x, 10)) for p in pts}
    expected = {(0.0, 0.0), (0.5, 0.0), (-0.5, 0.0), (0.0, 0.5), (0.0, -0.5),
                (0.5, 0.5), (0.5, -0.5), (-0.5, 0.5), (-0.5, -0.5),
                (1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)}
    assert values == expected
    assert all(p.y == 0.0 and p.z == 0.0 for p in pts)
    mods = [p.modulus() for p in pts]
    assert mods == sorted(mods)  # ordered by modulus first


def test_lattice_deterministic():
    a = lattice_points(0.3, UNIT_J, 1.0)
    b = lattice_points(0.3, UNIT_J, 1.0)
    assert a == b
    assert all(p.x == 0.0 and p.z == 0.0 for p in a)  # lives on C_j


def test_lattice_validation():
    with pytest.raises(ValueError):
        lattice_points(0.0, UNIT_I, 1.0)
    with pytest.raises(ValueError):
        lattice_points(0.5, UNIT_I, 0.0)
