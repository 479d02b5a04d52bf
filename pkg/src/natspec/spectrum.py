"""Spectral radius brackets and spectrum sampling for circle measures.

Upper bounds come from norms of iterated convolution squares (the limit of
||mu^m||^(1/m) is approached monotonically along powers of two).  Lower
bounds come from evaluating the measure against generalized characters: a
root of unity acting on the torsion part of the support group and free unit
circle variables for the independent generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np
from scipy.spatial import cKDTree

from .angles import GeneratorBasis, TWO_PI
from .errors import BudgetExceededError
from .measures import (ConvolutionBudget, DiscreteMeasure, MeasureLike, MixedMeasure,
                       _root_lut, as_mixed, convolve, tv_norm_bounds)


@dataclass(frozen=True)
class FeketeReport:
    """Nonincreasing norm-root sequence r_k = ||mu^(2^k)||^(1/2^k)."""

    entries: tuple[tuple[int, float], ...]
    final_bound: float
    budget_hit: bool


def fekete_bound(mu: MeasureLike, k_max: int = 6, *, rel_tol: float = 0.0,
                 budget: ConvolutionBudget | None = None) -> FeketeReport:
    """Certified upper bound for the spectral radius via repeated squaring.

    Each entry uses the total variation norm plus its quadrature error
    estimate, so every r_k is an upper bound for the true limit.  Stops early
    when the budget is exhausted (reported via ``budget_hit``) or when the
    relative improvement drops below ``rel_tol``.
    """
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    if budget is None:
        budget = ConvolutionBudget()
    cur = as_mixed(mu)
    value, err = tv_norm_bounds(cur)
    r = value + err
    entries = [(0, r)]
    budget_hit = False
    if r > 0.0:
        for k in range(1, k_max + 1):
            try:
                cur = convolve(cur, cur, budget=budget)
            except BudgetExceededError:
                budget_hit = True
                break
            value, err = tv_norm_bounds(cur)
            rk = (value + err) ** (1.0 / (1 << k))
            prev = entries[-1][1]
            entries.append((k, rk))
            if rel_tol > 0.0 and prev - rk <= rel_tol * prev:
                break
    final = min(r for _, r in entries)
    return FeketeReport(tuple(entries), final, budget_hit)


@dataclass(frozen=True)
class CharacterPolynomial:
    """Measure transform as a function of a generalized character.

    A character is (t, phi) with t in range(order) acting through the root of
    unity omega = e^{2 pi i t / order} and phi in [0, 2pi)^dims acting through
    z_i = e^{i phi_i}.  The value is sum_j weights[j] * omega^{torsion[j] * t}
    * prod_i z_i^{exponents[j][i]}.  Only generators that actually appear
    with a nonzero exponent contribute a dimension; ``dim_names`` records
    which basis generators those are.
    """

    order: int
    torsion: tuple[int, ...]
    exponents: tuple[tuple[int, ...], ...]
    weights: tuple[complex, ...]
    dim_names: tuple[str, ...]

    @property
    def dims(self) -> int:
        return len(self.dim_names)

    @property
    def n_terms(self) -> int:
        return len(self.weights)

    def weight_scale(self) -> float:
        """Lipschitz-type scale sum |c_j| * ||e_j||_1 used to size ascent steps."""
        return float(sum(abs(c) * sum(abs(e) for e in row)
                         for c, row in zip(self.weights, self.exponents)))

    def value(self, t: int, phis: Sequence[float]) -> complex:
        """Single character evaluation (reference implementation for tests)."""
        omega = _root_lut(self.order)
        acc = 0.0 + 0.0j
        for m, row, c in zip(self.torsion, self.exponents, self.weights):
            phase = sum(e * p for e, p in zip(row, phis))
            acc += c * omega[(m * t) % self.order] * complex(math.cos(phase), math.sin(phase))
        return acc


def char_polynomial(mu: DiscreteMeasure) -> CharacterPolynomial:
    """Character polynomial of a discrete measure.

    The torsion order is the lcm of the turn denominators of the support;
    generator coefficients become free exponents.
    """
    if isinstance(mu, MixedMeasure):
        if not mu.ac.is_zero:
            raise TypeError("character polynomials are defined for discrete measures")
        mu = mu.disc
    order = 1
    for angle in mu.atoms:
        q = angle.turns.denominator
        order = order * q // math.gcd(order, q)
    names = mu.basis.names
    active = [i for i in range(len(names))
              if any(angle.coeffs[i] for angle in mu.atoms)]
    torsion = []
    exponents = []
    weights = []
    for angle, w in mu.atoms.items():
        torsion.append((angle.turns.numerator * (order // angle.turns.denominator)) % order)
        exponents.append(tuple(angle.coeffs[i] for i in active))
        weights.append(complex(w))
    return CharacterPolynomial(order, tuple(torsion), tuple(exponents),
                               tuple(weights), tuple(names[i] for i in active))


def restrict(p: CharacterPolynomial, t: int, keep: Sequence[str]) -> CharacterPolynomial:
    """Fix the torsion character to ``t`` and pin every free variable not in
    ``keep`` at phase zero; merge terms that collapse together."""
    omega = _root_lut(p.order)
    keep = list(keep)
    keep_idx = [p.dim_names.index(name) for name in keep]
    acc: dict[tuple[int, ...], complex] = {}
    for m, row, c in zip(p.torsion, p.exponents, p.weights):
        key = tuple(row[i] for i in keep_idx)
        acc[key] = acc.get(key, 0.0 + 0.0j) + c * omega[(m * t) % p.order]
    keys = sorted(acc)
    return CharacterPolynomial(
        1, (0,) * len(keys), tuple(keys),
        tuple(acc[k] for k in keys), tuple(keep))


def character_values(p: CharacterPolynomial, grid: int = 256) -> np.ndarray:
    """Values of p over the full character lattice, as a flat complex array.

    Covers every torsion class crossed with a uniform ``grid``-point lattice
    per free dimension.  A polynomial without terms evaluates to {0}.
    """
    if p.n_terms == 0:
        return np.zeros(1, dtype=np.complex128)
    omega = _root_lut(p.order)
    torsion = np.asarray(p.torsion, dtype=np.int64)
    base = np.asarray(p.weights, dtype=np.complex128)
    exponents = np.asarray(p.exponents, dtype=np.int64).reshape(p.n_terms, p.dims)
    chunks = []
    for t in range(p.order):
        w_t = base * omega[(torsion * t) % p.order]
        if p.dims == 0:
            chunks.append(np.array([w_t.sum()], dtype=np.complex128))
        else:
            chunks.append(_eval_on_grid(w_t, exponents, grid).ravel())
    return np.concatenate(chunks)


def _axis_phases(grid: int) -> np.ndarray:
    # computed as (j / grid) * 2pi so that subsampled grids reproduce the
    # coarser grids bitwise, which keeps refinement monotone under doubling
    return (np.arange(grid, dtype=np.float64) / grid) * TWO_PI


def _eval_on_grid(weights: np.ndarray, exponents: np.ndarray, grid: int) -> np.ndarray:
    """p on the full grid^dims lattice as a dims-dimensional complex array."""
    dims = exponents.shape[1]
    theta = _axis_phases(grid)
    acc = np.zeros((grid,) * dims, dtype=np.complex128)
    for c, row in zip(weights, exponents):
        term = np.complex128(c)
        for axis in range(dims):
            e = int(row[axis])
            shape = [1] * dims
            shape[axis] = grid
            term = term * np.exp(1j * e * theta).reshape(shape)
        acc += term
    return acc


def _eval_point(weights: np.ndarray, exponents: np.ndarray, phis: np.ndarray):
    """(F, gradF) at one point, F = |p|^2."""
    phase = exponents @ phis
    vals = weights * np.exp(1j * phase)
    p = vals.sum()
    grad_p = 1j * (exponents * vals[:, None]).sum(axis=0)
    f = float(p.real * p.real + p.imag * p.imag)
    grad = 2.0 * (np.conj(p) * grad_p).real
    return f, grad


def _ascend(weights: np.ndarray, exponents: np.ndarray, start: np.ndarray,
            step: float, iters: int) -> tuple[float, np.ndarray]:
    x = start.astype(np.float64).copy()
    f, grad = _eval_point(weights, exponents, x)
    best, best_x = f, x.copy()
    for _ in range(iters):
        lam = step
        improved = False
        for _ in range(30):
            cand = x + lam * grad
            fc, gc = _eval_point(weights, exponents, cand)
            if fc >= f:
                x, f, grad = cand, fc, gc
                improved = True
                break
            lam *= 0.5
        if not improved:
            break
        if f > best:
            best, best_x = f, x.copy()
    return best, best_x


def _grid_levels(grid: int) -> list[int]:
    # dyadic subgrid sizes down to 16; every level of a coarser run is a
    # level of a finer run, which makes torus_max nondecreasing in grid
    levels = [grid]
    g = grid
    while g % 2 == 0 and g // 2 >= 16:
        g //= 2
        levels.append(g)
    return levels


def torus_max(p: CharacterPolynomial, grid: int = 512, refine_iters: int = 64) -> float:
    """Maximum of |p| over all generalized characters, from below.

    Evaluates the full torsion-by-grid lattice and runs projected gradient
    ascent (fixed step with halving safeguard) from the best point of every
    dyadic subgrid.  The returned value only increases when ``grid`` doubles.
    """
    if grid < 16:
        raise ValueError("grid must be at least 16")
    if p.dims > 4:
        raise ValueError(f"torus maximization supports at most 4 free dimensions, got {p.dims}")
    if p.n_terms == 0:
        return 0.0
    omega = _root_lut(p.order)
    torsion = np.asarray(p.torsion, dtype=np.int64)
    base_weights = np.asarray(p.weights, dtype=np.complex128)
    exponents = np.asarray(p.exponents, dtype=np.int64).reshape(p.n_terms, p.dims)
    scale = p.weight_scale()
    step = 0.5 / (scale * scale) if scale > 0 else 0.0
    best = 0.0
    for t in range(p.order):
        w_t = base_weights * omega[(torsion * t) % p.order]
        if p.dims == 0:
            val = abs(complex(w_t.sum()))
            if val > best:
                best = val
            continue
        values = _eval_on_grid(w_t, exponents, grid)
        f_grid = values.real ** 2 + values.imag ** 2
        grid_best = float(f_grid.max())
        if grid_best > best * best:
            best = math.sqrt(grid_best)
        if refine_iters > 0 and step > 0:
            theta = _axis_phases(grid)
            for level in _grid_levels(grid):
                stride = grid // level
                sub = f_grid[(slice(None, None, stride),) * p.dims]
                flat = int(np.argmax(sub))
                idx = np.unravel_index(flat, sub.shape)
                start = np.array([theta[i * stride] for i in idx], dtype=np.float64)
                f_best, _ = _ascend(w_t, exponents, start, step, refine_iters)
                if f_best > best * best:
                    best = math.sqrt(f_best)
    return best


@dataclass(frozen=True)
class SpectrumSample:
    """Cloud of transform values with the sampling resolution that made it."""

    points: np.ndarray
    grid_spec: tuple

    def __post_init__(self):
        object.__setattr__(self, "points", np.asarray(self.points, dtype=np.complex128).ravel())


def spectrum_sample(mu: DiscreteMeasure, grid: int = 512,
                    refine_iters: int = 64) -> SpectrumSample:
    """Dense sample of character values of a discrete measure.

    Contains every lattice value plus the endpoints of the ascent runs used
    by torus_max, so the sampled set converges to the full spectrum picture
    as the grid refines.
    """
    p = char_polynomial(mu)
    if p.dims > 4:
        raise ValueError(f"spectrum sampling supports at most 4 free dimensions, got {p.dims}")
    if grid < 16:
        raise ValueError("grid must be at least 16")
    if p.n_terms == 0:
        return SpectrumSample(np.zeros(1, dtype=np.complex128), (grid, refine_iters))
    omega = _root_lut(p.order)
    torsion = np.asarray(p.torsion, dtype=np.int64)
    base_weights = np.asarray(p.weights, dtype=np.complex128)
    exponents = np.asarray(p.exponents, dtype=np.int64).reshape(p.n_terms, p.dims)
    scale = p.weight_scale()
    step = 0.5 / (scale * scale) if scale > 0 else 0.0
    chunks = []
    for t in range(p.order):
        w_t = base_weights * omega[(torsion * t) % p.order]
        if p.dims == 0:
            chunks.append(np.array([w_t.sum()], dtype=np.complex128))
            continue
        values = _eval_on_grid(w_t, exponents, grid)
        chunks.append(values.ravel())
        if refine_iters > 0 and step > 0:
            f_grid = values.real ** 2 + values.imag ** 2
            theta = _axis_phases(grid)
            refined = []
            for level in _grid_levels(grid):
                stride = grid // level
                sub = f_grid[(slice(None, None, stride),) * p.dims]
                idx = np.unravel_index(int(np.argmax(sub)), sub.shape)
                start = np.array([theta[i * stride] for i in idx], dtype=np.float64)
                _, x_best = _ascend(w_t, exponents, start, step, refine_iters)
                phase = exponents @ x_best
                refined.append(complex((w_t * np.exp(1j * phase)).sum()))
            chunks.append(np.asarray(refined, dtype=np.complex128))
    return SpectrumSample(np.concatenate(chunks), (grid, refine_iters))


def transform_closure_sample(mu: MeasureLike, N: int, subset: str = "all") -> SpectrumSample:
    """Transform values mu_hat(n) over |n| <= N restricted to a parity class."""
    if subset == "all":
        ns = np.arange(-N, N + 1, dtype=np.int64)
    elif subset == "even":
        ns = np.arange(-(N - N % 2), N + 1, 2, dtype=np.int64)
    elif subset == "odd":
        lo = -(N if N % 2 == 1 else N - 1)
        ns = np.arange(lo, N + 1, 2, dtype=np.int64)
    else:
        raise ValueError(f"unknown subset {subset!r}")
    points = as_mixed(mu).transform(ns)
    return SpectrumSample(points, (N, 0))


PointsLike = Union[SpectrumSample, np.ndarray, Sequence[complex]]


def _as_points(x: PointsLike) -> np.ndarray:
    if isinstance(x, SpectrumSample):
        pts = x.points
    else:
        pts = np.asarray(x, dtype=np.complex128).ravel()
    if pts.size == 0:
        raise ValueError("empty point set")
    return pts


def _as_xy(pts: np.ndarray) -> np.ndarray:
    return np.column_stack([pts.real, pts.imag])


def covering_radius(reference: PointsLike, sample: PointsLike) -> float:
    """sup over reference points of the distance to the nearest sample point."""
    ref = _as_xy(_as_points(reference))
    smp = _as_xy(_as_points(sample))
    tree = cKDTree(smp)
    d, _ = tree.query(ref, k=1)
    return float(np.max(d))


def hausdorff(a: PointsLike, b: PointsLike) -> float:
    """Symmetric Hausdorff distance between two planar point clouds."""
    return max(covering_radius(a, b), covering_radius(b, a))


def disk_grid(radius: float = 1.0, tol: float = 0.05) -> np.ndarray:
    """Polar reference grid for the closed disk of the given radius.

    ceil(2/tol) radii by ceil(2pi/tol) angles plus the center; its covering
    radius of the disk is below ``tol * radius``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if radius == 0.0:
        return np.zeros(1, dtype=np.complex128)
    n_r = math.ceil(2.0 / tol)
    n_ang = math.ceil(TWO_PI / tol)
    radii = radius * (np.arange(n_r, dtype=np.float64) + 1.0) / n_r
    angles = _axis_phases(n_ang)
    pts = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    return np.concatenate([np.zeros(1, dtype=np.complex128), pts])


@dataclass(frozen=True)
class NaturalSpectrumReport:
    """Hausdorff comparison between transform closure and character values."""

    distance: float
    tol: float
    passed: bool
    n_transform_points: int
    n_character_points: int


def natural_spectrum_check(mu: DiscreteMeasure, N: int = 100_000, grid: int = 512,
                           refine_iters: int = 64, tol: float = 0.05) -> NaturalSpectrumReport:
    """Checks that character values are approximated by transform values.

    For measures whose spectrum is natural the two clouds have small Hausdorff
    distance once N and the grid are large enough.
    """
    trans = transform_closure_sample(mu, N, "all")
    spec = spectrum_sample(mu, grid, refine_iters)
    dist = hausdorff(trans, spec)
    return NaturalSpectrumReport(dist, tol, dist <= tol,
                                 trans.points.size, spec.points.size)
