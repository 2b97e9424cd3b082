"""Gaussian-weighted norms, sup norms and inner products on slice disks.

Conventions.  For 0 < p < infinity the slice norm on C_I is

    ||f||_{p,I} = ( (a/pi)^n  integral_{B_I} |f(z) e^{-a|z|^2/2}|^p dA_I(z) )^{1/p}

with dA_I = dx dy / pi, the global norm is the supremum of the slice norms
over the sampled sphere of imaginary units, and for p = infinity

    ||f||_inf = sup |f(q)| e^{-a|q|^2/2}

over the sampled ball.  The inner product pairs f against the conjugate of g
with weight (a/pi)^n e^{-a|z|^2}.  Quadrature is polar Gauss-Legendre times
trapezoid (see quadrature.py) with automatic refinement: the grid is doubled
until successive values agree to 1e-8 relative or the 512 x 1024 cap, and a
residual disagreement above 1e-6 raises GridTooCoarse.

Suprema are discretized on Chebyshev radii times a uniform angle grid over
the sampled units, then the best radial cell is polished by golden-section
search.  The radial endpoints are grid nodes, so boundary maxima are exact.

Evaluation on a slice goes through the splitting f = f_1 + f_2 J: on C_I the
components are honest complex polynomials and |f|^2 = |f_1|^2 + |f_2|^2, so
grids evaluate as two batched complex polynomial evaluations.  Consistency
of this path with direct quaternion Horner evaluation is covered by tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GridTooCoarse, ViolationDetected
from .quadrature import (ANGULAR_CAP, RADIAL_CAP, QuadratureGrid)
from .quaternion import (ImaginaryUnit, Quaternion, UNIT_I, default_sphere,
                         orthonormal_partner)
from .series import (ComplexSlicePolynomial, MultiMonomial, MultiPolynomial,
                     SliceSeries, derivative, dilate, split)

__all__ = [
    "FockParams",
    "NormReport",
    "NormEquivalenceReport",
    "MonomialBoundReport",
    "DerivativeCriterionReport",
    "LittleSpaceReport",
    "slice_norm_p",
    "fock_norm_p",
    "sup_norm",
    "slice_sup_norm",
    "inner_product",
    "norm_equivalence_check",
    "monomial_bound_check",
    "dilation_convergence",
    "derivative_criterion",
    "little_space_profile",
]

REFINE_TOL = 1e-8
COARSE_TOL = 1e-6
DEFAULT_RADIAL_SAMPLES = 129
DEFAULT_SUP_ANGULAR = 256
_GOLDEN_RATIO_CONJ = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class FockParams:
    """Weight parameter alpha > 0, exponent p, dimension n, ball radius."""

    alpha: float
    p: float = 2.0
    n: int = 1
    radius: float = 1.0

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise ValueError("alpha must be positive")
        if not (self.p > 0.0 or self.p == math.inf):
            raise ValueError("p must be positive or infinity")
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        if not self.radius > 0.0:
            raise ValueError("radius must be positive")


@dataclass(frozen=True)
class NormReport:
    """A computed norm with its per-slice values and grid provenance."""

    value: float
    per_slice: tuple[tuple[ImaginaryUnit, float], ...]
    tail_bound: float
    grid_spec: dict


@dataclass(frozen=True)
class NormEquivalenceReport:
    p: float
    sandwich_constant: float        # 2^p on p-th powers of slice norms
    pair_constant: float            # 2^{max(p,1)} on pairs of slices
    sup_value: float
    per_slice: tuple[tuple[ImaginaryUnit, float], ...]
    worst_lower: float              # max_I slice^p / sup^p, <= 1
    worst_upper: float              # max_I sup^p / slice^p, <= 2^p
    worst_pair: float               # max_{I,J} slice_J^p / slice_I^p
    passed: bool


@dataclass(frozen=True)
class MonomialBoundReport:
    lhs: float
    rhs: float
    constant: float
    vacuous: bool
    passed: bool


@dataclass(frozen=True)
class DerivativeCriterionReport:
    order: int
    sup_ratio: float
    component_sups: tuple[float, float]
    passed: bool


@dataclass(frozen=True)
class LittleSpaceReport:
    rhos: tuple[float, ...]
    values: tuple[float, ...]
    decreasing_tail: bool
    member: bool
    tolerance: float


# ---------------------------------------------------------------------------
# batched slice evaluation
# ---------------------------------------------------------------------------

def _component_matrix(f: SliceSeries, units) -> np.ndarray:
    """Splitting components of f on every unit, shape (M, 2, degree + 1)."""
    out = np.empty((len(units), 2, f.degree + 1), dtype=complex)
    for m, unit in enumerate(units):
        f1, f2 = split(f, unit, orthonormal_partner(unit))
        out[m, 0] = f1.coeffs
        out[m, 1] = f2.coeffs
    return out


def _powers(z: np.ndarray, count: int) -> np.ndarray:
    """Matrix of powers z^k, shape (count, len(z))."""
    out = np.empty((count, z.size), dtype=complex)
    out[0] = 1.0
    for k in range(1, count):
        out[k] = out[k - 1] * z
    return out


def _abs_sq_values(comp: np.ndarray, powers: np.ndarray) -> np.ndarray:
    """|f|^2 on the point set for every unit, shape (M, npts)."""
    m, _, k = comp.shape
    vals = comp.reshape(2 * m, k) @ powers
    sq = vals.real ** 2 + vals.imag ** 2
    return sq.reshape(m, 2, -1).sum(axis=1)


def _complex_values(comp_row: np.ndarray, powers: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Component values (f_1, f_2) on the point set for a single unit."""
    vals = comp_row @ powers
    return vals[0], vals[1]


def _horner(coeffs: np.ndarray, z: complex) -> complex:
    acc = complex(coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = z * acc + complex(c)
    return acc


# ---------------------------------------------------------------------------
# p-norms by quadrature with automatic refinement
# ---------------------------------------------------------------------------

def _require_quadrature_params(params: FockParams) -> None:
    if params.p == math.inf:
        raise ValueError("p = infinity has no quadrature norm; use sup_norm")
    if params.n != 1:
        raise ValueError("quadrature norms are implemented for n = 1 only; "
                         "several variables are restricted to slice suprema")


def _grid_for(params: FockParams, grid: QuadratureGrid | None) -> QuadratureGrid:
    if grid is None:
        return QuadratureGrid.build(radius=params.radius)
    if abs(grid.radius - params.radius) > 1e-12:
        raise ValueError("grid radius does not match params.radius")
    return grid


def _slice_norms_on_grid(f: SliceSeries, units, params: FockParams,
                         grid: QuadratureGrid) -> np.ndarray:
    z = grid.points()
    powers = _powers(z, f.degree + 1)
    absq = _abs_sq_values(_component_matrix(f, units), powers)
    rsq = np.abs(z) ** 2
    p = params.p
    if p == 2.0:
        integrand = absq * np.exp(-params.alpha * rsq)
    else:
        integrand = absq ** (p / 2.0) * np.exp(-0.5 * params.alpha * p * rsq)
    area = grid.area_weights()
    prefactor = (params.alpha / math.pi) ** params.n / math.pi
    integrals = prefactor * (integrand * area[None, :]).sum(axis=1)
    return integrals ** (1.0 / p)


def _refine_norms(f, units, params, grid, radial_cap, angular_cap):
    """Double the grid until per-slice norms stabilize; see module docstring."""
    values = _slice_norms_on_grid(f, units, params, grid)
    trace = [(grid.describe(), [float(v) for v in values])]
    refinements = 0
    while True:
        if grid.radial_count >= radial_cap or grid.angular_count >= angular_cap:
            if refinements == 0:
                # nothing to compare against; accept the cap-size grid
                return values, grid, trace, refinements
            raise GridTooCoarse(
                "grid refinements disagree beyond 1e-6 relative at the "
                f"resolution cap {radial_cap} x {angular_cap}", trace)
        finer_grid = grid.doubled()
        finer = _slice_norms_on_grid(f, units, params, finer_grid)
        trace.append((finer_grid.describe(), [float(v) for v in finer]))
        refinements += 1
        rel = float(np.max(np.abs(finer - values)
                           / np.maximum(np.abs(finer), 1e-300)))
        if rel <= REFINE_TOL:
            return finer, finer_grid, trace, refinements
        at_cap = (finer_grid.radial_count >= radial_cap
                  or finer_grid.angular_count >= angular_cap)
        if at_cap and rel > COARSE_TOL:
            raise GridTooCoarse(
                "grid refinements disagree beyond 1e-6 relative at the "
                f"resolution cap {radial_cap} x {angular_cap}", trace)
        if at_cap:
            return finer, finer_grid, trace, refinements
        values, grid = finer, finer_grid


def slice_norm_p(f: SliceSeries, unit: ImaginaryUnit, params: FockParams,
                 grid: QuadratureGrid | None = None, *,
                 radial_cap: int = RADIAL_CAP,
                 angular_cap: int = ANGULAR_CAP) -> float:
    """p-norm of f restricted to the slice C_I, 0 < p < infinity."""
    _require_quadrature_params(params)
    g = _grid_for(params, grid)
    values, _, _, _ = _refine_norms(f, [unit], params, g, radial_cap, angular_cap)
    return float(values[0])


def fock_norm_p(f: SliceSeries, params: FockParams,
                grid: QuadratureGrid | None = None, sphere=None, *,
                radial_cap: int = RADIAL_CAP,
                angular_cap: int = ANGULAR_CAP) -> NormReport:
    """Supremum of the slice p-norms over the sampled sphere of units."""
    _require_quadrature_params(params)
    g = _grid_for(params, grid)
    units = list(sphere) if sphere is not None else default_sphere()
    values, final_grid, _, refinements = _refine_norms(
        f, units, params, g, radial_cap, angular_cap)
    per_slice = tuple((u, float(v)) for u, v in zip(units, values))
    spec = final_grid.describe()
    spec.update({"rule": "gauss-legendre x trapezoid", "refinements": refinements,
                 "sphere": len(units)})
    return NormReport(float(values.max()), per_slice, 0.0, spec)


def inner_product(f: SliceSeries, g: SliceSeries, unit: ImaginaryUnit,
                  params: FockParams, grid: QuadratureGrid | None = None, *,
                  radial_cap: int = RADIAL_CAP,
                  angular_cap: int = ANGULAR_CAP) -> Quaternion:
    """Quaternion-valued pairing integral_{B_I} f(z) conj(g(z)) dlambda_I(z).

    The weight is (a/pi)^n e^{-a|z|^2} dA_I.  Linear in f; conjugate-linear
    in g only for slice-valued g, which tests keep visible.
    """
    _require_quadrature_params(FockParams(params.alpha, 2.0, params.n, params.radius))
    quad = _grid_for(params, grid)
    partner = orthonormal_partner(unit)
    qj = partner.as_quaternion()
    qk = unit.as_quaternion() * qj
    frame = np.array([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, unit.x, unit.y, unit.z],
        [qj.w, qj.x, qj.y, qj.z],
        [qk.w, qk.x, qk.y, qk.z],
    ])
    comp_f = _component_matrix(f, [unit])[0]
    comp_g = _component_matrix(g, [unit])[0]
    prefactor = (params.alpha / math.pi) ** params.n / math.pi

    def compute(quad_grid):
        z = quad_grid.points()
        kmax = max(f.degree, g.degree) + 1
        powers = _powers(z, kmax)
        f1, f2 = _complex_values(comp_f, powers[:f.degree + 1])
        g1, g2 = _complex_values(comp_g, powers[:g.degree + 1])
        # components in the orthonormal frame {1, I, J, IJ}
        aw, ax = f1.real, f1.imag
        ay, az = f2.real, f2.imag
        bw, bx = g1.real, -g1.imag           # conj(g)
        by, bz = -g2.real, -g2.imag
        prod = np.stack([
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ])
        weight = quad_grid.area_weights() * np.exp(-params.alpha * np.abs(z) ** 2)
        comps = prefactor * (prod * weight[None, :]).sum(axis=1)
        scale = prefactor * math.sqrt(
            float((f1.real**2 + f1.imag**2 + f2.real**2 + f2.imag**2) @ weight)
            * float((g1.real**2 + g1.imag**2 + g2.real**2 + g2.imag**2) @ weight))
        return comps, scale

    comps, scale = compute(quad)
    trace = [(quad.describe(), [float(c) for c in comps])]
    refinements = 0
    while True:
        if quad.radial_count >= radial_cap or quad.angular_count >= angular_cap:
            if refinements == 0:
                break
            raise GridTooCoarse("inner product did not stabilize at the cap", trace)
        finer_grid = quad.doubled()
        finer, scale = compute(finer_grid)
        trace.append((finer_grid.describe(), [float(c) for c in finer]))
        refinements += 1
        delta = float(np.linalg.norm(finer - comps))
        floor = max(float(np.linalg.norm(finer)), scale, 1e-300)
        comps, quad = finer, finer_grid
        if delta / floor <= REFINE_TOL:
            break
        at_cap = (quad.radial_count >= radial_cap or quad.angular_count >= angular_cap)
        if at_cap:
            if delta / floor > COARSE_TOL:
                raise GridTooCoarse("inner product did not stabilize at the cap", trace)
            break
    vec = frame.T @ comps
    return Quaternion(vec[0], vec[1], vec[2], vec[3])


# ---------------------------------------------------------------------------
# weighted suprema
# ---------------------------------------------------------------------------

def _chebyshev_radii(count: int, radius: float) -> np.ndarray:
    if count < 3:
        raise ValueError("need at least 3 radial samples")
    i = np.arange(count)
    return 0.5 * radius * (1.0 - np.cos(math.pi * i / (count - 1)))


def _golden_max(fn, lo: float, hi: float, iters: int = 48) -> float:
    """Maximum of a unimodal fn on [lo, hi]; endpoints are always checked."""
    best = max(fn(lo), fn(hi))
    a, b = lo, hi
    c = b - _GOLDEN_RATIO_CONJ * (b - a)
    d = a + _GOLDEN_RATIO_CONJ * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(iters):
        best = max(best, fc, fd)
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN_RATIO_CONJ * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN_RATIO_CONJ * (b - a)
            fd = fn(d)
    return max(best, fc, fd)


def _sup_over_rows(comp: np.ndarray, alpha: float, radius: float,
                   radial_samples: int, angular_count: int,
                   weight_order: int = 0):
    """Weighted sup of |row|(z) e^{-a|z|^2/2} / (1+|z|)^t per component row.

    comp has shape (M, 2, K); returns (sups, argmax points) with one complex
    argmax point per row.  Chebyshev radii (hitting 0 and R exactly) times a
    uniform angle grid locate the maximum; the surrounding radial cell is
    then polished with golden-section search at the best angle.
    """
    radii = _chebyshev_radii(radial_samples, radius)
    theta = 2.0 * np.pi * np.arange(angular_count) / angular_count
    z = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
    powers = _powers(z, comp.shape[2])
    mags = np.sqrt(_abs_sq_values(comp, powers))
    weight = np.exp(-0.5 * alpha * radii ** 2) / (1.0 + radii) ** weight_order
    vals = mags.reshape(comp.shape[0], radial_samples, angular_count) \
        * weight[None, :, None]

    sups = np.empty(comp.shape[0])
    arg_points = []
    for row in range(comp.shape[0]):
        flat = int(np.argmax(vals[row]))
        ri, ti = divmod(flat, angular_count)
        phase = np.exp(1j * theta[ti])
        c1 = comp[row, 0]
        c2 = comp[row, 1]

        def f_of_r(r):
            zz = r * phase
            v1 = _horner(c1, zz)
            v2 = _horner(c2, zz)
            mag = math.sqrt(v1.real**2 + v1.imag**2 + v2.real**2 + v2.imag**2)
            return mag * math.exp(-0.5 * alpha * r * r) / (1.0 + r) ** weight_order

        lo = radii[max(ri - 1, 0)]
        hi = radii[min(ri + 1, radial_samples - 1)]
        refined = _golden_max(f_of_r, float(lo), float(hi))
        sups[row] = max(refined, float(vals[row, ri, ti]))
        arg_points.append(float(radii[ri]) * complex(phase))
    return sups, arg_points


def sup_norm(f: SliceSeries, params: FockParams, sphere=None,
             radial_samples: int = DEFAULT_RADIAL_SAMPLES, *,
             angular_count: int = DEFAULT_SUP_ANGULAR) -> NormReport:
    """sup of |f(q)| e^{-a|q|^2/2} over the sampled ball of radius R."""
    units = list(sphere) if sphere is not None else default_sphere()
    comp = _component_matrix(f, units)
    sups, _ = _sup_over_rows(comp, params.alpha, params.radius,
                             radial_samples, angular_count)
    per_slice = tuple((u, float(v)) for u, v in zip(units, sups))
    spec = {"rule": "chebyshev x trapezoid + golden", "radial": radial_samples,
            "angular": angular_count, "radius": params.radius,
            "sphere": len(units)}
    return NormReport(float(sups.max()), per_slice, 0.0, spec)


def slice_sup_norm(f: SliceSeries, unit: ImaginaryUnit, params: FockParams,
                   radial_samples: int = DEFAULT_RADIAL_SAMPLES, *,
                   angular_count: int = DEFAULT_SUP_ANGULAR) -> float:
    """sup of |f(z)| e^{-a|z|^2/2} over the single slice disk B_I."""
    comp = _component_matrix(f, [unit])
    sups, _ = _sup_over_rows(comp, params.alpha, params.radius,
                             radial_samples, angular_count)
    return float(sups[0])


# ---------------------------------------------------------------------------
# certified inequalities and profiles
# ---------------------------------------------------------------------------

def norm_equivalence_check(f: SliceSeries, params: FockParams,
                           grid: QuadratureGrid | None = None, sphere=None, *,
                           slack: float = 1e-9) -> NormEquivalenceReport:
    """Certify the slice-norm sandwich and the pairwise slice bound.

    For 1 < p < infinity and every sampled I, J:

        ||f||_{p,I}^p <= ||f||_p^p <= 2^p ||f||_{p,I}^p
        ||f||_{p,J}^p <= 2^{max(p,1)} ||f||_{p,I}^p

    Ratios are measured with the given slack; any violation raises
    ViolationDetected because it signals a bug, never expected behaviour.
    """
    if not (1.0 < params.p < math.inf):
        raise ValueError("the sandwich constants require 1 < p < infinity; "
                         f"got p = {params.p!r}")
    report = fock_norm_p(f, params, grid, sphere)
    units = [u for u, _ in report.per_slice]
    values = np.array([v for _, v in report.per_slice])
    p = params.p
    sandwich_c = 2.0 ** p
    pair_c = 2.0 ** max(p, 1.0)
    powered = values ** p
    sup_pow = float(powered.max())
    if sup_pow < 1e-300:
        # the zero function satisfies everything with ratio 1
        per = tuple((u, float(v)) for u, v in zip(units, values))
        return NormEquivalenceReport(p, sandwich_c, pair_c, report.value, per,
                                     1.0, 1.0, 1.0, True)
    lower = powered / sup_pow
    upper = sup_pow / powered
    worst_lower = float(lower.max())
    worst_upper = float(upper.max())
    pair_matrix = powered[None, :] / powered[:, None]
    worst_pair = float(pair_matrix.max())
    if worst_lower > 1.0 + slack or worst_upper > sandwich_c + slack:
        bad = int(np.argmax(upper))
        raise ViolationDetected(
            f"slice sandwich failed: ratio {worst_upper!r} exceeds {sandwich_c!r}",
            unit_i=units[bad], unit_j=None, ratio=worst_upper)
    if worst_pair > pair_c + slack:
        bad_j, bad_i = np.unravel_index(int(np.argmax(pair_matrix)),
                                        pair_matrix.shape)
        raise ViolationDetected(
            f"pairwise slice bound failed: ratio {worst_pair!r} exceeds {pair_c!r}",
            unit_i=units[bad_i], unit_j=units[bad_j], ratio=worst_pair)
    return NormEquivalenceReport(p, sandwich_c, pair_c, report.value,
                                 report.per_slice, worst_lower, worst_upper,
                                 worst_pair, True)


def _monomial_sup(mono: MultiMonomial, alpha: float, radius: float) -> float:
    """sup over the ball of |z^m a_m| e^{-a|z|^2/2} by radial reduction.

    |z^m| depends only on the moduli r_k, and for a fixed total radius s the
    product prod r_k^{m_k} is maximized at r_k^2 = s^2 m_k / |m|, so the sup
    reduces to one unimodal function of s on [0, R].
    """
    m = mono.multi_index
    total = sum(m)
    a = mono.coeff.modulus()
    if total == 0:
        return a * 1.0  # weight at s = 0
    direction = 1.0
    for mk in m:
        if mk > 0:
            direction *= (mk / total) ** (mk / 2.0)

    def g(s):
        return a * direction * s ** total * math.exp(-0.5 * alpha * s * s)

    return _golden_max(g, 0.0, radius, iters=64)


def _multi_slice_sup(poly: MultiPolynomial, unit: ImaginaryUnit, alpha: float,
                     radius: float, samples: int = 4096) -> float:
    """Sampled sup of |f| e^{-a|z|^2/2} over B_I^n for a multi-polynomial.

    Deterministic Kronecker sampling of radii and angles plus a golden
    polish along the best ray; a sampled lower bound of the true sup.
    """
    n = poly.n
    dims = 2 * n + 1
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    gammas = np.array([math.sqrt(primes[d % len(primes)] + d // len(primes))
                       for d in range(dims)])
    gammas = gammas - np.floor(gammas)
    idx = np.arange(1, samples + 1)[:, None]
    u = (idx * gammas[None, :]) % 1.0
    scale = np.sqrt(u[:, 0])                      # overall radius fraction
    weights = u[:, 1:n + 1] + 1e-9
    weights = weights / weights.sum(axis=1, keepdims=True)
    r = radius * scale[:, None] * np.sqrt(weights)   # (S, n), sum r^2 <= R^2
    theta = 2.0 * np.pi * u[:, n + 1:2 * n + 1]
    zs = r * np.exp(1j * theta)                      # (S, n)

    iq = unit.as_quaternion()
    comps = np.zeros((samples, 4))
    for mono in poly.monomials:
        prod = np.ones(samples, dtype=complex)
        for k, mk in enumerate(mono.multi_index):
            if mk:
                prod = prod * zs[:, k] ** mk
        a = mono.coeff
        ia = iq * a
        av = np.array([a.w, a.x, a.y, a.z])
        iav = np.array([ia.w, ia.x, ia.y, ia.z])
        comps += prod.real[:, None] * av[None, :] + prod.imag[:, None] * iav[None, :]
    mags = np.sqrt((comps ** 2).sum(axis=1))
    rsq = (r ** 2).sum(axis=1)
    vals = mags * np.exp(-0.5 * alpha * rsq)
    best = int(np.argmax(vals))

    ray = zs[best]
    ray_scale = math.sqrt(float(rsq[best]))
    if ray_scale == 0.0:
        return float(vals[best])
    ray_dir = ray / ray_scale

    def along(s):
        pt = ray_dir * s
        val = poly.slice_eval(list(pt), unit)
        return val.modulus() * math.exp(-0.5 * alpha * s * s)

    return max(float(vals[best]), _golden_max(along, 0.0, radius, iters=64))


def monomial_bound_check(mono: MultiMonomial, f, params: FockParams,
                         unit: ImaginaryUnit, *,
                         radial_samples: int = DEFAULT_RADIAL_SAMPLES,
                         slack: float = 1e-9) -> MonomialBoundReport:
    """Check ||z^m a_m||_inf <= 2^{max(p,1)} prod_k sqrt(m_k/2) * slice sup of f.

    Terms with any m_k = 0 make the right-hand side vanish and the bound
    says nothing; they are reported as vacuous and skipped.
    """
    constant = 2.0 ** max(params.p, 1.0)
    if min(mono.multi_index) == 0:
        return MonomialBoundReport(0.0, 0.0, constant, True, True)
    product = 1.0
    for mk in mono.multi_index:
        product *= math.sqrt(mk / 2.0)
    lhs = _monomial_sup(mono, params.alpha, params.radius)
    if isinstance(f, SliceSeries):
        slice_sup = slice_sup_norm(f, unit, params, radial_samples)
    else:
        slice_sup = _multi_slice_sup(f, unit, params.alpha, params.radius)
    rhs = constant * product * slice_sup
    passed = lhs <= rhs + slack * max(1.0, rhs)
    return MonomialBoundReport(float(lhs), float(rhs), constant, False, passed)


def dilation_convergence(f: SliceSeries, params: FockParams, r_list,
                         sphere=None,
                         radial_samples: int = DEFAULT_RADIAL_SAMPLES, *,
                         angular_count: int = DEFAULT_SUP_ANGULAR) -> list[float]:
    """Values ||f_r - f||_inf for each dilation factor in r_list.

    r_list must be strictly increasing inside (0, 1); for a polynomial the
    values decrease to 0 as r -> 1.
    """
    rs = [float(r) for r in r_list]
    if any(not 0.0 < r < 1.0 for r in rs) or any(b <= a for a, b in zip(rs, rs[1:])):
        raise ValueError("r_list must be strictly increasing inside (0, 1)")
    units = list(sphere) if sphere is not None else default_sphere()
    out = []
    for r in rs:
        diff = SliceSeries(tuple(a - b for a, b in
                                 zip(dilate(f, r).coeffs, f.coeffs)),
                           f.nominal_radius)
        report = sup_norm(diff, params, units, radial_samples,
                          angular_count=angular_count)
        out.append(report.value)
    return out


def derivative_criterion(f: SliceSeries, order: int, params: FockParams,
                         sphere=None,
                         radial_samples: int = DEFAULT_RADIAL_SAMPLES, *,
                         angular_count: int = DEFAULT_SUP_ANGULAR,
                         slack: float = 1e-9) -> DerivativeCriterionReport:
    """Weighted sup of the t-th slice derivative against its split components.

    Computes  sup |d^t f(q)| e^{-a|q|^2/2} / (1+|q|)^t  over the sampled ball
    and the matching suprema of the two split components on C_i, then checks

        sup(f) <= sup(f_1) + sup(f_2) + slack.

    The argmax of the left side (and its conjugate) is re-evaluated on the
    component side so discretization cannot break the comparison.
    """
    der = derivative(f, order)
    units = list(sphere) if sphere is not None else default_sphere()
    comp = _component_matrix(der, units)
    sups, points = _sup_over_rows(comp, params.alpha, params.radius,
                                  radial_samples, angular_count,
                                  weight_order=order)
    best_row = int(np.argmax(sups))
    sup_f = float(sups[best_row])
    zstar = points[best_row]

    f1, f2 = split(der, UNIT_I, orthonormal_partner(UNIT_I))
    comp_parts = np.zeros((2, 2, der.degree + 1), dtype=complex)
    comp_parts[0, 0] = f1.coeffs
    comp_parts[1, 0] = f2.coeffs
    part_sups, _ = _sup_over_rows(comp_parts, params.alpha, params.radius,
                                  radial_samples, angular_count,
                                  weight_order=order)

    def ratio_at(poly: ComplexSlicePolynomial, z: complex) -> float:
        mag = abs(poly.eval(z))
        return mag * math.exp(-0.5 * params.alpha * abs(z) ** 2) \
            / (1.0 + abs(z)) ** order

    s1 = max(float(part_sups[0]), ratio_at(f1, zstar), ratio_at(f1, zstar.conjugate()))
    s2 = max(float(part_sups[1]), ratio_at(f2, zstar), ratio_at(f2, zstar.conjugate()))
    passed = sup_f <= s1 + s2 + slack
    return DerivativeCriterionReport(order, sup_f, (s1, s2), passed)


def little_space_profile(f: SliceSeries, params: FockParams, rho_list,
                         sphere=None, *,
                         angular_count: int = DEFAULT_SUP_ANGULAR,
                         tolerance: float = 1e-3) -> LittleSpaceReport:
    """Boundary decay profile M(rho) = max_{|q| = rho} |f(q)| e^{-a rho^2/2}.

    rho_list must increase inside (0, R].  A non-increasing tail over the
    last three entries that also drops below the tolerance is reported as
    membership in the vanishing-at-the-boundary subspace.
    """
    rhos = [float(r) for r in rho_list]
    if any(not 0.0 < r <= params.radius for r in rhos) \
            or any(b <= a for a, b in zip(rhos, rhos[1:])):
        raise ValueError("rho_list must be strictly increasing inside (0, R]")
    units = list(sphere) if sphere is not None else default_sphere()
    comp = _component_matrix(f, units)
    theta = 2.0 * np.pi * np.arange(angular_count) / angular_count
    phases = np.exp(1j * theta)
    values = []
    for rho in rhos:
        powers = _powers(rho * phases, f.degree + 1)
        mags = np.sqrt(_abs_sq_values(comp, powers))
        values.append(float(mags.max()) * math.exp(-0.5 * params.alpha * rho * rho))
    tail = values[-3:] if len(values) >= 3 else values
    decreasing = all(b <= a + 1e-15 for a, b in zip(tail, tail[1:]))
    member = decreasing and values[-1] <= tolerance
    return LittleSpaceReport(tuple(rhos), tuple(values), decreasing, member,
                             tolerance)
