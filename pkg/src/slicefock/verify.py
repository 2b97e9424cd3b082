"""Numerical certification of the algebra and norm propositions.

The verifier draws a seeded corpus (200 polynomials of degree <= 12 with
coefficients uniform in [-1, 1]^4), measures every certified identity and
inequality on it, and reports one line per proposition: name, number of
instances, worst observed ratio or residual, allowed bound, PASS or FAIL.
Runs with the same seed and flags produce byte-identical reports; the
output ordering is canonical (sorted by proposition name).

Propositions:

    derivative          weighted sup of d^t f against its split components
    dilation            ||f_r - f||_inf decreases strictly along r -> 1
    monomial            coefficient bound with constant 2^{max(p,1)} sqrt(m/2)
    norm-sandwich-p     ||f||_{p,I}^p <= ||f||_p^p <= 2^p ||f||_{p,I}^p
    norm-sandwich-sup   slice sup <= global sup <= 2 * slice sup
    rep-formula         one-slice reconstruction equals direct evaluation
    slice-pair          ||f||_{p,J}^p <= 2^{max(p,1)} ||f||_{p,I}^p
    split               split/extend round-trip is exact to 1e-14
    star                pointwise star formula, zero rule, symmetrization
                        realness and the pointwise star reciprocal
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .corpus import (random_ball_point, random_orthogonal_pair, random_unit,
                     rng_for, standard_corpus)
from .errors import SingularPoint, ZeroValue
from .fock import (FockParams, _component_matrix, _monomial_sup,
                   _slice_norms_on_grid, _sup_over_rows, derivative_criterion,
                   dilation_convergence, slice_sup_norm)
from .quadrature import QuadratureGrid
from .quaternion import UNIT_I, Quaternion, default_sphere
from .series import (MultiMonomial, SliceSeries, regular_conjugate, rep_eval,
                     split, extend, star_mul, star_inverse_eval, symmetrization,
                     transform_point, truncate)

__all__ = ["PropositionResult", "PROPOSITIONS", "run_verify",
           "format_text", "results_to_dicts", "format_csv", "thread_cap"]

SLACK = 1e-9

PROPOSITIONS = (
    "derivative",
    "dilation",
    "monomial",
    "norm-sandwich-p",
    "norm-sandwich-sup",
    "rep-formula",
    "slice-pair",
    "split",
    "star",
)


@dataclass(frozen=True)
class PropositionResult:
    name: str
    instances: int
    worst: float
    bound: float
    passed: bool
    detail: str = ""


def thread_cap(threads: int | None = None) -> int:
    """Worker cap: explicit argument, else SLICE_FOCK_THREADS, else 1."""
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("SLICE_FOCK_THREADS")
    if env is None or env == "":
        return 1
    try:
        return max(1, int(env))
    except ValueError as exc:
        raise ValueError(f"SLICE_FOCK_THREADS must be an integer, got {env!r}") from exc


def _pmap(fn, items, cap: int):
    items = list(items)
    if cap <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(cap, len(items))) as pool:
        return list(pool.map(fn, items))


def _select(props) -> list[str]:
    if props is None:
        return list(PROPOSITIONS)
    if isinstance(props, str):
        props = [tok for tok in props.split(",") if tok]
    chosen = []
    for token in props:
        if token in PROPOSITIONS:
            chosen.append(token)
            continue
        matches = [name for name in PROPOSITIONS if name.startswith(token)]
        if len(matches) == 1:
            chosen.append(matches[0])
        elif not matches:
            raise ValueError(f"unknown proposition {token!r}; "
                             f"choose from {', '.join(PROPOSITIONS)}")
        else:
            raise ValueError(f"proposition prefix {token!r} is ambiguous: "
                             f"{', '.join(matches)}")
    return sorted(set(chosen))


# ---------------------------------------------------------------------------
# individual propositions
# ---------------------------------------------------------------------------

def _check_star(corpus, seed: int) -> PropositionResult:
    rng = rng_for(seed + 101)
    fs = [truncate(f, 8) for f in corpus]
    worst_point = worst_zero = worst_real = worst_inverse = 0.0
    instances = 0
    for i in range(100):
        f, g = fs[2 * i], fs[2 * i + 1]
        fg = star_mul(f, g)
        sym = symmetrization(f)
        coeff_scale = max(1.0, max(c.modulus() for c in sym.coeffs))
        worst_real = max(worst_real,
                         max(c.imag_modulus() for c in sym.coeffs) / coeff_scale)

        # a zero of the left factor must kill the star product
        z0 = random_ball_point(rng)
        vanishing = star_mul(SliceSeries((-z0, Quaternion(1.0))), truncate(f, 6))
        killed = star_mul(vanishing, g)
        scale = max(1.0, sum(c.modulus() * z0.modulus() ** k
                             for k, c in enumerate(killed.coeffs)))
        worst_zero = max(worst_zero, killed.eval(z0).modulus() / scale)

        for _ in range(20):
            q = random_ball_point(rng)
            vf = f.eval(q)
            if vf.modulus() <= 1e-6:
                continue
            moved = transform_point(f, q)
            lhs = fg.eval(q)
            rhs = vf * g.eval(moved)
            denom = max(1.0, lhs.modulus(), rhs.modulus())
            worst_point = max(worst_point, (lhs - rhs).modulus() / denom)
            instances += 1
            try:
                recip = star_inverse_eval(f, moved)
            except (SingularPoint, ZeroValue):
                continue
            worst_inverse = max(worst_inverse,
                                (vf * recip - Quaternion(1.0)).modulus())
    worst = max(worst_point / 1e-10, worst_zero / 1e-10,
                worst_real / 1e-12, worst_inverse / 1e-10)
    detail = (f"pointwise={worst_point:.2e} zero={worst_zero:.2e} "
              f"real={worst_real:.2e} reciprocal={worst_inverse:.2e}")
    return PropositionResult("star", instances, worst, 1.0, worst <= 1.0, detail)


def _check_split(corpus, seed: int) -> PropositionResult:
    rng = rng_for(seed + 102)
    worst = 0.0
    instances = 0
    for f in corpus:
        for _ in range(20):
            unit_i, unit_j = random_orthogonal_pair(rng)
            f1, f2 = split(f, unit_i, unit_j)
            back = extend(f1, f2, unit_j)
            err = max((a - b).modulus() for a, b in zip(back.coeffs, f.coeffs))
            worst = max(worst, err)
            instances += 1
    return PropositionResult("split", instances, worst, 1e-14, worst <= 1e-14)


def _check_rep_formula(corpus, seed: int) -> PropositionResult:
    rng = rng_for(seed + 103)
    worst = 0.0
    for idx in range(1000):
        f = corpus[idx % len(corpus)]
        unit = random_unit(rng)
        q = random_ball_point(rng)
        direct = f.eval(q)
        viaslice = rep_eval(f, unit, q)
        worst = max(worst, (viaslice - direct).modulus()
                    / max(1.0, direct.modulus()))
    return PropositionResult("rep-formula", 1000, worst, 1e-11, worst <= 1e-11)


def _check_p_norms(corpus, params: FockParams, grid: QuadratureGrid,
                   units, cap: int) -> tuple[PropositionResult, PropositionResult]:
    p = params.p
    fine = grid.doubled()

    def one(f):
        coarse_vals = _slice_norms_on_grid(f, units, params, grid)
        vals = _slice_norms_on_grid(f, units, params, fine)
        stability = float(np.max(np.abs(vals - coarse_vals)
                                 / np.maximum(np.abs(vals), 1e-300)))
        powered = vals ** p
        top = float(powered.max())
        if top < 1e-300:
            return stability, 1.0, 1.0, 1.0
        return (stability, float((powered / top).max()),
                float((top / powered).max()),
                float(powered.max() / powered.min()))

    rows = _pmap(one, corpus, cap)
    stability = max(r[0] for r in rows)
    worst_lower = max(r[1] for r in rows)
    worst_upper = max(r[2] for r in rows)
    worst_pair = max(r[3] for r in rows)
    instances = len(corpus) * len(units)
    sandwich_bound = 2.0 ** p
    pair_bound = 2.0 ** max(p, 1.0)
    sandwich_ok = (worst_upper <= sandwich_bound + SLACK
                   and worst_lower <= 1.0 + SLACK)
    detail = (f"lower={worst_lower:.12f} grid-doubling-rel={stability:.2e}")
    sandwich = PropositionResult("norm-sandwich-p", instances, worst_upper,
                                 sandwich_bound, sandwich_ok, detail)
    pair = PropositionResult("slice-pair", instances, worst_pair, pair_bound,
                             worst_pair <= pair_bound + SLACK)
    return sandwich, pair


def _check_sup_norms(corpus, params: FockParams, units, radial_samples: int,
                     angular_count: int, cap: int) -> PropositionResult:
    def one(f):
        comp = _component_matrix(f, units)
        sups, _ = _sup_over_rows(comp, params.alpha, params.radius,
                                 radial_samples, angular_count)
        top = float(sups.max())
        low = float(sups.min())
        if top < 1e-300:
            return 1.0, 1.0
        return float(sups.max() / top), top / low

    rows = _pmap(one, corpus, cap)
    worst_lower = max(r[0] for r in rows)
    worst_upper = max(r[1] for r in rows)
    instances = len(corpus) * len(units)
    ok = worst_upper <= 2.0 + SLACK and worst_lower <= 1.0 + SLACK
    return PropositionResult("norm-sandwich-sup", instances, worst_upper, 2.0,
                             ok, f"lower={worst_lower:.12f}")


def _check_dilation(corpus, params: FockParams, units, radial_samples: int,
                    angular_count: int, cap: int) -> PropositionResult:
    subset = corpus[::10][:20]
    factors = (0.5, 0.9, 0.99)

    def one(f):
        vals = dilation_convergence(f, params, factors, units, radial_samples,
                                    angular_count=angular_count)
        if max(vals) < 1e-12:
            return -math.inf  # already converged, nothing to order
        return max(b - a for a, b in zip(vals, vals[1:]))

    rows = _pmap(one, subset, cap)
    worst = max(rows)
    return PropositionResult("dilation", len(subset) * len(factors), worst,
                             0.0, worst < 0.0)


def _check_derivative(corpus, params: FockParams, units, radial_samples: int,
                      angular_count: int, cap: int) -> PropositionResult:
    subset = corpus[:50]
    orders = (1, 2, 3)

    def one(f):
        margin = -math.inf
        for order in orders:
            rep = derivative_criterion(f, order, params, units, radial_samples,
                                       angular_count=angular_count, slack=SLACK)
            margin = max(margin,
                         rep.sup_ratio - rep.component_sups[0]
                         - rep.component_sups[1])
        return margin

    rows = _pmap(one, subset, cap)
    worst = max(rows)
    return PropositionResult("derivative", len(subset) * len(orders), worst,
                             SLACK, worst <= SLACK)


def _check_monomial(corpus, params: FockParams) -> PropositionResult:
    subset = corpus[:50]
    constant = 2.0 ** max(params.p, 1.0)
    worst = 0.0
    instances = 0
    for f in subset:
        low = truncate(f, 5)
        ssup = slice_sup_norm(low, UNIT_I, params)
        if ssup < 1e-300:
            continue
        for k in range(1, low.degree + 1):
            mono = MultiMonomial((k,), low.coeffs[k])
            lhs = _monomial_sup(mono, params.alpha, params.radius)
            rhs = constant * math.sqrt(k / 2.0) * ssup
            worst = max(worst, lhs / rhs)
            instances += 1
    return PropositionResult("monomial", instances, worst, 1.0,
                             worst <= 1.0 + SLACK)


# ---------------------------------------------------------------------------
# runner and report formatting
# ---------------------------------------------------------------------------

def run_verify(seed: int = 0, props=None, *, alpha: float = 1.0, p: float = 2.0,
               radius: float = 1.0, sphere_count: int = 64, radial: int = 64,
               angular: int = 128, sup_radial: int = 65, sup_angular: int = 128,
               threads: int | None = None) -> list[PropositionResult]:
    """Run the selected propositions on the seeded corpus.

    Norm propositions use a Gauss-Legendre x trapezoid grid of the given
    size (plus one doubling for the stability figure); sup propositions use
    Chebyshev radii with golden-section polish.  The same seed and flags
    always produce the same results.
    """
    selected = _select(props)
    params = FockParams(alpha=alpha, p=p, n=1, radius=radius)
    corpus = standard_corpus(seed)
    units = default_sphere(sphere_count)
    grid = QuadratureGrid.build(radial, angular, radius)
    cap = thread_cap(threads)

    results: list[PropositionResult] = []
    if "norm-sandwich-p" in selected or "slice-pair" in selected:
        sandwich, pair = _check_p_norms(corpus, params, grid, units, cap)
        if "norm-sandwich-p" in selected:
            results.append(sandwich)
        if "slice-pair" in selected:
            results.append(pair)
    if "norm-sandwich-sup" in selected:
        results.append(_check_sup_norms(corpus, params, units, sup_radial,
                                        sup_angular, cap))
    if "star" in selected:
        results.append(_check_star(corpus, seed))
    if "split" in selected:
        results.append(_check_split(corpus, seed))
    if "rep-formula" in selected:
        results.append(_check_rep_formula(corpus, seed))
    if "dilation" in selected:
        results.append(_check_dilation(corpus, params, units, 33, 64, cap))
    if "derivative" in selected:
        results.append(_check_derivative(corpus, params, units, 33, 64, cap))
    if "monomial" in selected:
        results.append(_check_monomial(corpus, params))
    return sorted(results, key=lambda r: r.name)


def format_text(results) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = (f"{r.name:<18} instances={r.instances:<6d} "
                f"worst={r.worst:.6e} bound={r.bound:.3e} {status}")
        if r.detail:
            line += f"  [{r.detail}]"
        lines.append(line)
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - failed}/{len(results)} propositions passed")
    return "\n".join(lines)


def results_to_dicts(results) -> list[dict]:
    return [{"name": r.name, "instances": r.instances, "worst": r.worst,
             "bound": r.bound, "passed": r.passed, "detail": r.detail}
            for r in results]


def format_csv(results) -> str:
    lines = ["name,instances,worst,bound,passed"]
    for r in results:
        lines.append(f"{r.name},{r.instances},{r.worst!r},{r.bound!r},"
                     f"{str(r.passed).lower()}")
    return "\n".join(lines)
