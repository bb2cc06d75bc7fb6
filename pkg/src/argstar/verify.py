"""Grid verification of the argument-bound implications on |z| <= r_max.

Every check here has the same shape: evaluate a hypothesis functional over a
polar grid, compare its supremum (or minimum of the real part) against the
theorem's bound, and if the hypothesis holds, do the same for each conclusion
functional. Conclusions are strict inequalities, so a violation is declared
only beyond a small slack that separates genuine counterexamples from
floating-point noise at the closed boundary.

Ratios such as z f'(z)/f(z) are always evaluated with the z-power divided out
of numerator and denominator separately (f^(k)(z)/z^(p-k) is a polynomial with
nonzero constant term), which keeps small-|z| samples far away from underflow.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .roots import DEFAULT_CONFIG, RootConfig, alpha_sequence, sigma_index, solve_gamma0
from .series import (
    PowerSeries,
    ZERO_TOL,
    _horner,
    differentiate,
    integrate,
    principal_arg,
)

SLACK = 1e-9  # strict "<" conclusions fail only beyond this

VERDICT_PASS = "PASS"
VERDICT_FAIL = "FAIL"
VERDICT_HYP = "HYPOTHESIS_NOT_SATISFIED"


class ZeroOnGrid(ArithmeticError):
    """A sampled denominator fell below the zero tolerance."""

    def __init__(self, point: complex, magnitude: float, context: str = ""):
        self.point = point
        self.magnitude = magnitude
        where = f" in {context}" if context else ""
        super().__init__(
            f"|value| = {magnitude:.3e} below tolerance {ZERO_TOL} at z = {point}{where}"
        )


class NotAttained(RuntimeError):
    """The probe level was not reached anywhere on |z| <= r_max."""

    def __init__(self, gamma: float, level: float, best_sup: float, best_point: complex):
        self.gamma = gamma
        self.level = level
        self.best_sup = best_sup
        self.best_point = best_point
        super().__init__(
            f"max|arg q| = {best_sup!r} stays below the level {level!r} "
            f"(gamma = {gamma!r}) on the whole grid"
        )


class ParamOutOfRange(ValueError):
    """A theorem parameter lies outside its admissible range."""


@dataclass(frozen=True)
class DiskGrid:
    """Polar sampling of |z| <= r_max: geometric radii, uniform angles."""

    r_max: float = 0.995
    n_radial: int = 64
    n_angular: int = 512

    def __post_init__(self):
        if not 0.0 < self.r_max < 1.0:
            raise ValueError("r_max must lie in (0, 1)")
        if self.n_radial < 1 or self.n_angular < 1:
            raise ValueError("grid must have at least one radius and one angle")

    @cached_property
    def radii(self) -> np.ndarray:
        n = self.n_radial
        if n == 1:
            r = np.array([self.r_max])
        else:
            # r_j = r_max * n**((j-(n-1))/(n-1)): from r_max/n up to exactly r_max
            r = self.r_max * n ** ((np.arange(n) - (n - 1)) / (n - 1))
        r.flags.writeable = False
        return r

    @cached_property
    def angles(self) -> np.ndarray:
        t = 2.0 * np.pi * np.arange(self.n_angular) / self.n_angular
        t.flags.writeable = False
        return t

    @cached_property
    def points(self) -> np.ndarray:
        z = self.radii[:, None] * np.exp(1j * self.angles)[None, :]
        z.flags.writeable = False
        return z

    @property
    def size(self) -> int:
        return self.n_radial * self.n_angular


DEFAULT_GRID = DiskGrid()


@dataclass(frozen=True)
class SupArgResult:
    sup_abs_arg: float
    witness: complex
    samples_used: int


@dataclass(frozen=True)
class ConclusionCheck:
    label: str
    kind: str  # "sup_arg" | "min_real"
    value: float
    bound: float
    witness: complex

    @property
    def margin(self) -> float:
        return self.bound - self.value if self.kind == "sup_arg" else self.value - self.bound

    @property
    def ok(self) -> bool:
        return self.margin >= -SLACK


@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    params: dict
    hypothesis_sup: float
    hypothesis_bound: float
    hypothesis_satisfied: bool
    conclusions: tuple[ConclusionCheck, ...]
    verdict: str
    witnesses: tuple[complex, ...]  # hypothesis witness first, then one per conclusion
    grid: DiskGrid
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Lemma1Report:
    gamma: float
    level: float  # pi*gamma/2
    r0: float
    z0: complex
    ratio: complex  # z0 q'(z0)/q(z0)
    k_est: float
    a_est: float
    imag_purity: float


@dataclass(frozen=True)
class ScanReport:
    theorem_id: str
    p: Optional[int]
    params: dict
    trials: int
    seed: int
    sampler_N: int
    attempts: int
    counts: dict
    verdicts: tuple[str, ...]
    worst_margin: float
    worst_label: str
    worst_attempt: int
    worst_function: PowerSeries


# ------------------------------------------------------------ grid evaluation

def _horner_many(coeffs: np.ndarray, zs: np.ndarray) -> np.ndarray:
    acc = np.full(zs.shape, coeffs[-1], dtype=np.complex128)
    for j in range(coeffs.size - 2, -1, -1):
        acc = acc * zs + coeffs[j]
    return acc


def _grid_values(s: PowerSeries, divisor_power: int, grid: DiskGrid) -> np.ndarray:
    """Values of s(z)/z**divisor_power over the grid, z-power folded analytically."""
    pts = grid.points
    vals = _horner_many(s.coeffs, pts)
    shift = s.order_p - divisor_power
    if shift != 0:
        vals = vals * pts**shift
    return vals


def _first_below_tol(vals: np.ndarray, grid: DiskGrid, context: str):
    mag = np.abs(vals)
    mask = mag < ZERO_TOL
    if mask.any():
        idx = int(np.argmax(mask))  # first offending point in (radial, angular) order
        pt = complex(grid.points.flat[idx])
        raise ZeroOnGrid(pt, float(mag.flat[idx]), context)


def sup_arg(s: PowerSeries, divisor_power: int, grid: DiskGrid = DEFAULT_GRID) -> SupArgResult:
    """max over the grid of |arg(s(z)/z**divisor_power)|, first-occurrence witness."""
    if divisor_power < 0:
        raise ValueError("divisor_power must be >= 0")
    vals = _grid_values(s, divisor_power, grid)
    _first_below_tol(vals, grid, "sup_arg")
    absarg = np.abs(np.angle(vals))
    idx = int(np.argmax(absarg))  # ties: lexicographically first (radial, angular)
    return SupArgResult(
        sup_abs_arg=float(absarg.flat[idx]),
        witness=complex(grid.points.flat[idx]),
        samples_used=grid.size,
    )


def min_real(s: PowerSeries, divisor_power: int, grid: DiskGrid = DEFAULT_GRID) -> tuple[float, complex]:
    """min over the grid of Re(s(z)/z**divisor_power), first-occurrence witness."""
    if divisor_power < 0:
        raise ValueError("divisor_power must be >= 0")
    vals = _grid_values(s, divisor_power, grid)
    _first_below_tol(vals, grid, "min_real")
    re = vals.real
    idx = int(np.argmin(re))
    return float(re.flat[idx]), complex(grid.points.flat[idx])


def _sup_arg_of(vals: np.ndarray, grid: DiskGrid) -> tuple[float, complex]:
    absarg = np.abs(np.angle(vals))
    idx = int(np.argmax(absarg))
    return float(absarg.flat[idx]), complex(grid.points.flat[idx])


def _min_real_of(vals: np.ndarray, grid: DiskGrid) -> tuple[float, complex]:
    re = vals.real
    idx = int(np.argmin(re))
    return float(re.flat[idx]), complex(grid.points.flat[idx])


def _ratio_to_lower_derivative(f: PowerSeries, upper: int, grid: DiskGrid, context: str) -> np.ndarray:
    """z f^(upper)(z) / f^(upper-1)(z) over the grid, z-powers folded out.

    With m = f.order_p - upper, f^(upper)/z^m and f^(upper-1)/z^(m+1) are both
    polynomials with nonzero constant term for admissible inputs, and their
    pointwise quotient is exactly the wanted ratio.
    """
    m = f.order_p - upper
    num = _grid_values(differentiate(f, upper), m, grid)
    den = _grid_values(differentiate(f, upper - 1), m + 1, grid)
    _first_below_tol(den, grid, context)
    return num / den


# ------------------------------------------------------------- theorem checks

def _coefficient_of(f: PowerSeries, exponent: int) -> complex:
    j = exponent - f.order_p
    if j < 0 or j >= f.coeffs.size:
        return 0j
    return complex(f.coeffs[j])


def _check_params(theorem_id, f, alpha1, alpha0, delta, s):
    allowed = {"T1": ("alpha1",), "T3": ("alpha0",), "T4": ("alpha0",), "T5": ("delta", "s")}
    given = {"alpha1": alpha1, "alpha0": alpha0, "delta": delta, "s": s}
    needs = allowed.get(theorem_id, ())
    for name, value in given.items():
        if value is not None and name not in needs:
            raise ParamOutOfRange(f"{theorem_id} does not take parameter {name}")
        if value is None and name in needs:
            raise ParamOutOfRange(f"{theorem_id} requires parameter {name}")
    if theorem_id == "T1" and not 0 < alpha1 <= 1:
        raise ParamOutOfRange("alpha1 must lie in (0, 1]")
    if theorem_id in ("T3", "T4") and not 0 < alpha0 <= 1.5:
        raise ParamOutOfRange("alpha0 must lie in (0, 3/2]")
    if theorem_id == "T5":
        if not (delta > 0 and 2 * delta + (2 / math.pi) * math.atan(delta) < 2.0):
            raise ParamOutOfRange(
                "delta must satisfy delta > 0 and 2 delta + (2/pi)atan(delta) < 2"
            )
        if not isinstance(s, (int, np.integer)) or s < 2:
            raise ParamOutOfRange("s must be an integer >= 2")
        if _coefficient_of(f, s - 1) != 0:
            raise ParamOutOfRange(f"coefficient of z^{s - 1} must be 0")
        if _coefficient_of(f, s) == 0:
            raise ParamOutOfRange(f"coefficient of z^{s} must be nonzero")
    if f.order_p < 1:
        raise ParamOutOfRange("f must have order_p >= 1")


def check_theorem(
    theorem_id: str,
    f: PowerSeries,
    grid: DiskGrid = DEFAULT_GRID,
    *,
    alpha1: Optional[float] = None,
    alpha0: Optional[float] = None,
    delta: Optional[float] = None,
    s: Optional[int] = None,
    cfg: RootConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Verify one hypothesis -> conclusions implication on the grid.

    Implications by id (p = f.order_p, all quantities sampled on the grid):

    * T1: sup|arg f^(p)| < (pi/2)(a1 + (2/pi)atan a1)  =>
          sup|arg(f^(p-1)/z)| < a1 pi/2, for a1 in (0, 1].
    * C1: sup|arg f^(p)| < 3pi/4  =>  sup|arg(f^(p-1)/z)| < pi/2 and
          min Re(f^(p-k-1)/z^(k+1)) > 0 for k in {0..p-1}.
    * C2: sup|arg f^(p)| < (pi/2)(g0 + (2/pi)atan g0), g0 the root of
          2g + (2/pi)atan g = 1  =>  sup|arg(z f'/f)| < pi/2 (starlike).
    * T3: sup|arg f^(p)| < pi a0/2, a0 in (0, 3/2]  =>
          sup|arg(f^(p-k)/z^k)| < pi a_k/2 for k in {1..p}, a_k the implicit
          chain a_k + (2/pi)atan(a_k/k) = a_{k-1}.
    * T4: same hypothesis as T3  =>
          sup|arg(z f^(p-s+1)/f^(p-s))| < (pi/2)(a_s + a_{s-1}) for s in
          {2..p}; the s=1 case is included only when a0 + a1 < 2; when some
          sigma <= p has a_sigma + a_{sigma-1} <= 1, additionally
          sup|arg(z f'/f)| < pi/2.
    * T5: for a gap series (coefficient of z^(s-1) zero, of z^s nonzero):
          sup|arg f^(s)| < (pi/2)delta + atan(delta)  =>
          sup|arg(z f^(s)/f^(s-1))| < (pi/2)delta + 2 atan(delta).
    * L2: min Re(z f^(p)/f^(p-1)) > 0  =>  the same for every lower order
          k in {1..p}.
    * L3: min Re(p + z f^(p+1)/f^(p)) > 0  =>
          min Re(k + z f^(k+1)/f^(k)) > 0 for k in {1..p-1}.
    """
    theorem_id = theorem_id.upper()
    if theorem_id not in ("T1", "C1", "C2", "T3", "T4", "T5", "L2", "L3"):
        raise ParamOutOfRange(f"unknown theorem id {theorem_id!r}")
    _check_params(theorem_id, f, alpha1, alpha0, delta, s)
    p = f.order_p
    notes: list[str] = []
    conclusions: list[ConclusionCheck] = []

    if theorem_id == "T5":
        hyp = sup_arg(differentiate(f, s), 0, grid)
        hyp_value, hyp_witness = hyp.sup_abs_arg, hyp.witness
        hyp_bound = (math.pi / 2) * delta + math.atan(delta)
        params = {"s": int(s), "delta": delta}
    elif theorem_id in ("L2", "L3"):
        if theorem_id == "L2":
            vals = _ratio_to_lower_derivative(f, p, grid, "L2 hypothesis")
        else:
            vals = p + _ratio_to_lower_derivative(f, p + 1, grid, "L3 hypothesis")
        hyp_value, hyp_witness = _min_real_of(vals, grid)
        hyp_bound = 0.0
        params = {"p": p}
    else:
        hyp = sup_arg(differentiate(f, p), 0, grid)
        hyp_value, hyp_witness = hyp.sup_abs_arg, hyp.witness
        if theorem_id == "T1":
            hyp_bound = (math.pi / 2) * (alpha1 + (2 / math.pi) * math.atan(alpha1))
            params = {"p": p, "alpha1": alpha1}
        elif theorem_id == "C1":
            hyp_bound = 3 * math.pi / 4
            params = {"p": p}
        elif theorem_id == "C2":
            _, composite = solve_gamma0(cfg)
            hyp_bound = (math.pi / 2) * composite
            params = {"p": p}
        else:  # T3 / T4
            hyp_bound = math.pi * alpha0 / 2
            params = {"p": p, "alpha0": alpha0}

    if theorem_id in ("L2", "L3"):
        hyp_ok = hyp_value > hyp_bound
    else:
        hyp_ok = hyp_value < hyp_bound

    if hyp_ok:
        if theorem_id == "T1":
            res = sup_arg(differentiate(f, p - 1), 1, grid)
            conclusions.append(ConclusionCheck(
                f"|arg(f^({p - 1})/z)|", "sup_arg", res.sup_abs_arg, alpha1 * math.pi / 2, res.witness))
        elif theorem_id == "C1":
            res = sup_arg(differentiate(f, p - 1), 1, grid)
            conclusions.append(ConclusionCheck(
                f"|arg(f^({p - 1})/z)|", "sup_arg", res.sup_abs_arg, math.pi / 2, res.witness))
            for k in range(p):
                value, witness = min_real(differentiate(f, p - k - 1), k + 1, grid)
                conclusions.append(ConclusionCheck(
                    f"Re(f^({p - k - 1})/z^{k + 1})", "min_real", value, 0.0, witness))
        elif theorem_id == "C2":
            vals = _ratio_to_lower_derivative(f, 1, grid, "C2 conclusion")
            value, witness = _sup_arg_of(vals, grid)
            conclusions.append(ConclusionCheck(
                "|arg(z f'/f)|", "sup_arg", value, math.pi / 2, witness))
        elif theorem_id == "T3":
            chain = alpha_sequence(alpha0, p, cfg)
            for k in range(1, p + 1):
                res = sup_arg(differentiate(f, p - k), k, grid)
                conclusions.append(ConclusionCheck(
                    f"|arg(f^({p - k})/z^{k})|", "sup_arg", res.sup_abs_arg,
                    math.pi * chain.values[k] / 2, res.witness))
        elif theorem_id == "T4":
            chain = alpha_sequence(alpha0, p, cfg)
            first_s = 2
            if alpha0 + chain.values[1] < 2.0 and p >= 1:
                first_s = 1  # meaningful only under this extra pair-sum condition
            for s_ in range(first_s, p + 1):
                vals = _ratio_to_lower_derivative(f, p - s_ + 1, grid, f"T4 s={s_}")
                value, witness = _sup_arg_of(vals, grid)
                conclusions.append(ConclusionCheck(
                    f"|arg(z f^({p - s_ + 1})/f^({p - s_}))| (s={s_})", "sup_arg", value,
                    (math.pi / 2) * (chain.values[s_] + chain.values[s_ - 1]), witness))
            sigma = sigma_index(chain.values)
            if sigma is not None:
                vals = _ratio_to_lower_derivative(f, 1, grid, "T4 starlike")
                value, witness = _sup_arg_of(vals, grid)
                conclusions.append(ConclusionCheck(
                    "starlike: |arg(z f'/f)|", "sup_arg", value, math.pi / 2, witness))
                if sigma == 1:
                    notes.append(
                        "pair-sum condition first holds at sigma=1, below the "
                        "usual range {2..p}; the starlike bound is reported anyway"
                    )
            else:
                notes.append(
                    f"no sigma <= p={p} with alpha_sigma + alpha_(sigma-1) <= 1; "
                    "starlikeness conclusion not applicable"
                )
        elif theorem_id == "T5":
            m = f.order_p - s
            num = _grid_values(differentiate(f, s), m, grid)
            den = _grid_values(differentiate(f, s - 1), m + 1, grid)
            _first_below_tol(den, grid, "T5 conclusion")
            value, witness = _sup_arg_of(num / den, grid)
            conclusions.append(ConclusionCheck(
                "|arg(z f^(s)/f^(s-1))|", "sup_arg", value,
                (math.pi / 2) * delta + 2 * math.atan(delta), witness))
        elif theorem_id == "L2":
            for k in range(1, p + 1):
                vals = _ratio_to_lower_derivative(f, k, grid, f"L2 k={k}")
                value, witness = _min_real_of(vals, grid)
                conclusions.append(ConclusionCheck(
                    f"Re(z f^({k})/f^({k - 1}))", "min_real", value, 0.0, witness))
        else:  # L3
            for k in range(1, p):
                vals = k + _ratio_to_lower_derivative(f, k + 1, grid, f"L3 k={k}")
                value, witness = _min_real_of(vals, grid)
                conclusions.append(ConclusionCheck(
                    f"Re({k} + z f^({k + 1})/f^({k}))", "min_real", value, 0.0, witness))

    verdict = VERDICT_HYP
    if hyp_ok:
        verdict = VERDICT_PASS if all(c.ok for c in conclusions) else VERDICT_FAIL

    return VerificationReport(
        theorem_id=theorem_id,
        params=params,
        hypothesis_sup=hyp_value,
        hypothesis_bound=hyp_bound,
        hypothesis_satisfied=hyp_ok,
        conclusions=tuple(conclusions),
        verdict=verdict,
        witnesses=(hyp_witness, *(c.witness for c in conclusions)),
        grid=grid,
        notes=tuple(notes),
    )


# ------------------------------------------------------------- boundary probe

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(fun, a: float, b: float, tol: float) -> float:
    h = b - a
    c, d = b - _INVPHI * h, a + _INVPHI * h
    fc, fd = fun(c), fun(d)
    while h > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            h = b - a
            c = b - _INVPHI * h
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = fun(d)
    return 0.5 * (a + b)


def _ring_sup(coeffs: np.ndarray, r: float, angles: np.ndarray, theta_tol: float) -> tuple[float, float]:
    """(theta*, sup) of |arg q| on the circle of radius r: coarse scan + golden refine."""
    vals = _horner_many(coeffs, r * np.exp(1j * angles))
    args = np.angle(vals)
    absarg = np.abs(args)
    # conjugate-symmetric q gives +/- mirror maxima equal up to rounding; take
    # the positive-argument representative so the reported point is canonical
    near = np.flatnonzero(absarg >= absarg.max() - 1e-9)
    positive = near[args[near] > 0]
    j = int(positive[0]) if positive.size else int(near[0])
    step = 2.0 * math.pi / angles.size

    def g(theta: float) -> float:
        return abs(principal_arg(_horner(coeffs, r * cmath.exp(1j * theta))))

    theta = _golden_max(g, angles[j] - step, angles[j] + step, theta_tol)
    return theta, g(theta)


def lemma1_probe(
    q: PowerSeries,
    gamma: float,
    grid: DiskGrid = DEFAULT_GRID,
    *,
    theta_tol: float = 1e-10,
    r_tol: float = 1e-12,
) -> Lemma1Report:
    """Locate the first radius where max|arg q| reaches pi*gamma/2 and evaluate
    the boundary relation z0 q'(z0)/q(z0) there.

    At the first touching point the logarithmic derivative is purely imaginary
    with Im = (2k/pi) arg q(z0) for some k >= (a + 1/a)/2 >= 1, where
    a = |q(z0)|^(1/gamma); the report carries k_est, a_est, and the residual
    real part (imag_purity) so those inequalities can be asserted numerically.
    """
    if not gamma > 0:
        raise ParamOutOfRange("gamma must be > 0")
    if q.order_p != 0 or q.coeffs[0] != 1:
        raise ParamOutOfRange("q must satisfy q(0) = 1 (order_p 0, constant term 1)")
    _first_below_tol(_grid_values(q, 0, grid), grid, "lemma1 probe")
    level = math.pi * gamma / 2.0

    coeffs = q.coeffs
    crossing = None
    best = (-1.0, 0.0, 0.0)  # (sup, r, theta)
    prev_r = 0.0
    for r in grid.radii:
        theta, sup = _ring_sup(coeffs, float(r), grid.angles, theta_tol)
        if sup > best[0]:
            best = (sup, float(r), theta)
        if sup >= level:
            crossing = (prev_r, float(r))
            break
        prev_r = float(r)
    if crossing is None:
        raise NotAttained(gamma, level, best[0], complex(best[1] * cmath.exp(1j * best[2])))

    lo, hi = crossing
    while hi - lo > r_tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        _, sup = _ring_sup(coeffs, mid, grid.angles, theta_tol)
        if sup < level:
            lo = mid
        else:
            hi = mid
    r0 = 0.5 * (lo + hi)
    theta0, _ = _ring_sup(coeffs, r0, grid.angles, theta_tol)

    z0 = r0 * cmath.exp(1j * theta0)
    qz = _horner(coeffs, z0)
    qprime = differentiate(q, 1)
    ratio = z0 * _horner(qprime.coeffs, z0) * z0**qprime.order_p / qz
    arg_q = principal_arg(qz)
    return Lemma1Report(
        gamma=gamma,
        level=level,
        r0=r0,
        z0=z0,
        ratio=ratio,
        k_est=(math.pi / 2.0) * abs(ratio.imag) / abs(arg_q),
        a_est=abs(qz) ** (1.0 / gamma),
        imag_purity=abs(ratio.real),
    )


# ------------------------------------------------------------------- sampling

def sample_hypothesis_function(
    seed, p: int, bound: float, N: int = 16, s_gap: Optional[int] = None
) -> PowerSeries:
    """Draw f with sup|arg f^(p)| < bound guaranteed by construction.

    Builds h(z) = 1 + sum c_n z^n with random phases and moduli scaled so that
    sum|c_n| = sin(bound) * u for u drawn in (0, 1); then |arg h| <=
    asin(sum|c_n|) < bound everywhere, and f is the p-fold antiderivative of
    p! h, i.e. f^(p) = p! h with f in the normalized class (leading
    coefficient exactly 1). With s_gap = s the same construction starts at
    z^s, so the coefficient of z^(s-1) is 0 and that of z^s is 1.
    """
    if not 0.0 < bound < math.pi / 2.0:
        raise ValueError("bound must lie in (0, pi/2)")
    if N < 2:
        raise ValueError("N must be >= 2")
    order = int(s_gap) if s_gap is not None else int(p)
    if s_gap is not None and order < 2:
        raise ValueError("s_gap must be >= 2")
    if s_gap is None and order < 1:
        raise ValueError("p must be >= 1")
    rng = np.random.default_rng(seed)
    u = rng.uniform()
    weights = rng.uniform(size=N - 1)
    phases = rng.uniform(0.0, 2.0 * math.pi, size=N - 1)
    total = math.sin(bound) * u
    wsum = weights.sum()
    moduli = total * weights / wsum if wsum > 0 else np.zeros(N - 1)
    scale = float(math.factorial(order))
    raw = np.concatenate(([1.0], moduli * np.exp(1j * phases))) * scale
    return integrate(PowerSeries(0, raw), order)


_SAMPLER_CAP = math.pi / 2.0 - 1e-9


def _scan_setup(theorem_id, p, alpha1, alpha0, delta, s, cfg):
    """(sampler bound, sampler order args, check_theorem kwargs) for one scan."""
    needs = {"T1": ("alpha1",), "T3": ("alpha0",), "T4": ("alpha0",), "T5": ("delta", "s")}.get(theorem_id, ())
    for name, value in (("alpha1", alpha1), ("alpha0", alpha0), ("delta", delta), ("s", s)):
        if value is None and name in needs:
            raise ParamOutOfRange(f"{theorem_id} scan requires parameter {name}")
        if value is not None and name not in needs:
            raise ParamOutOfRange(f"{theorem_id} scan does not take parameter {name}")
    if theorem_id == "T1":
        hyp = (math.pi / 2) * (alpha1 + (2 / math.pi) * math.atan(alpha1))
        return min(hyp, _SAMPLER_CAP), {"p": p}, {"alpha1": alpha1}
    if theorem_id == "C1":
        return min(3 * math.pi / 4, _SAMPLER_CAP), {"p": p}, {}
    if theorem_id == "C2":
        hyp = (math.pi / 2) * solve_gamma0(cfg)[1]
        return min(hyp, _SAMPLER_CAP), {"p": p}, {}
    if theorem_id in ("T3", "T4"):
        return min(math.pi * alpha0 / 2, _SAMPLER_CAP), {"p": p}, {"alpha0": alpha0}
    if theorem_id == "T5":
        hyp = (math.pi / 2) * delta + math.atan(delta)
        return min(hyp, _SAMPLER_CAP), {"p": s, "s_gap": s}, {"delta": delta, "s": s}
    if theorem_id == "L2":
        # asin(S) + asin(S/2) <= 1.44 < pi/2 for S <= sin(1), so the L2
        # hypothesis holds by construction at this bound
        return 1.0, {"p": p}, {}
    if theorem_id == "L3":
        return 0.9, {"p": p}, {}
    raise ParamOutOfRange(f"unknown theorem id {theorem_id!r}")


def counterexample_scan(
    theorem_id: str,
    trials: int,
    seed: int,
    p: Optional[int] = None,
    grid: DiskGrid = DEFAULT_GRID,
    *,
    alpha1: Optional[float] = None,
    alpha0: Optional[float] = None,
    delta: Optional[float] = None,
    s: Optional[int] = None,
    N: int = 16,
    cfg: RootConfig = DEFAULT_CONFIG,
) -> ScanReport:
    """Run check_theorem over `trials` sampled hypothesis-satisfying functions.

    Draws that fail the hypothesis on the grid are discarded and redrawn (only
    L3 can produce them; the other samplers guarantee the hypothesis), capped
    at 10x the requested trials. FAIL counts are expected to be 0: the
    implications are proved, so any FAIL is an artifact bug or a genuinely
    interesting sample worth inspecting via worst_function.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    theorem_id = theorem_id.upper()
    bound, sampler_args, check_kwargs = _scan_setup(theorem_id, p, alpha1, alpha0, delta, s, cfg)
    if theorem_id != "T5" and (p is None or p < 1):
        raise ParamOutOfRange(f"{theorem_id} scan requires p >= 1")

    counts = {VERDICT_PASS: 0, VERDICT_FAIL: 0, VERDICT_HYP: 0}
    verdicts: list[str] = []
    worst = (math.inf, "", -1, None)  # (margin, label, attempt, function)
    attempts = 0
    while len(verdicts) < trials and attempts < 10 * trials:
        f = sample_hypothesis_function(
            np.random.SeedSequence((seed, attempts)), bound=bound, N=N, **sampler_args
        )
        report = check_theorem(theorem_id, f, grid, cfg=cfg, **check_kwargs)
        attempt = attempts
        attempts += 1
        if report.verdict == VERDICT_HYP:
            counts[VERDICT_HYP] += 1
            continue
        counts[report.verdict] += 1
        verdicts.append(report.verdict)
        for c in report.conclusions:
            if c.margin < worst[0]:
                worst = (c.margin, c.label, attempt, f)
    if len(verdicts) < trials:
        raise RuntimeError(
            f"only {len(verdicts)} of {trials} draws satisfied the {theorem_id} "
            f"hypothesis after {attempts} attempts"
        )
    return ScanReport(
        theorem_id=theorem_id,
        p=p,
        params=check_kwargs,
        trials=trials,
        seed=seed,
        sampler_N=N,
        attempts=attempts,
        counts=counts,
        verdicts=tuple(verdicts),
        worst_margin=worst[0],
        worst_label=worst[1],
        worst_attempt=worst[2],
        worst_function=worst[3],
    )
