"""Success probability over the shared-Bell-state rotated-measurement family.

Alice and Bob share (|00> + |11>)/sqrt(2).  On input x Alice measures in the
real basis rotated by ``theta_x``; on input y Bob uses ``psi_y``.  With
``d = theta_x - psi_y`` the outcomes 00 and 11 each occur with probability
cos(d)^2 / 2 and 01, 10 with sin(d)^2 / 2.  Summing over a game's winners gives

    P = D/16 + (1/16) * sum_xy c_xy * cos(2 (theta_x - psi_y))

where D is the number of winning cells and c_xy counts equal-bit winners minus
unequal-bit winners on input (x, y).  Writing each cosine as an inner product
of planar unit vectors u_x = e^{2i theta_x}, v_y = e^{2i psi_y}, the sum is
u_0.(c00 v0 + c01 v1) + u_1.(c10 v0 + c11 v1), which is maximised by aligning
each u_x with its bracket.  Only t = <v0, v1> is left, giving the 1-D concave
problem solved in :func:`analytic_family_max`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

from nlgames.classical import classical_max
from nlgames.game import INPUTS, GameLike, as_mask, winners

_INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True, slots=True)
class AngleSet:
    theta0: float
    theta1: float
    psi0: float
    psi1: float

    def theta(self, x: int) -> float:
        return self.theta1 if x else self.theta0

    def psi(self, y: int) -> float:
        return self.psi1 if y else self.psi0

    @property
    def alpha(self) -> float:
        return self.theta0 - self.psi0

    @property
    def beta(self) -> float:
        return self.theta0 - self.psi1

    @property
    def gamma(self) -> float:
        return self.theta1 - self.psi0

    @property
    def delta(self) -> float:
        return self.theta1 - self.psi1

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.theta0, self.theta1, self.psi0, self.psi1)

    def shifted(self, phi: float) -> "AngleSet":
        return AngleSet(*(v + phi for v in self.as_tuple()))

    def __str__(self) -> str:
        return ",".join(format_angle(v) for v in self.as_tuple())


def joint_distribution(angles: AngleSet, x: int, y: int) -> tuple[float, float, float, float]:
    """(p00, p01, p10, p11) for input (x, y)."""
    d = angles.theta(x) - angles.psi(y)
    same = 0.5 * math.cos(d) ** 2
    diff = 0.5 * math.sin(d) ** 2
    return (same, diff, diff, same)


def success_probability(game: GameLike, angles: AngleSet) -> float:
    total = 0.0
    for x, y in INPUTS:
        p = joint_distribution(angles, x, y)
        total += sum(p[2 * a + b] for a, b in winners(game, x, y))
    return total / 4


@dataclass(frozen=True, slots=True)
class CoefficientProfile:
    d: int
    c: tuple[int, int, int, int]  # c00, c01, c10, c11

    def value_at(self, angles: AngleSet) -> float:
        s = sum(
            cxy * math.cos(2 * (angles.theta(x) - angles.psi(y)))
            for cxy, (x, y) in zip(self.c, INPUTS)
        )
        return (self.d + s) / 16


@lru_cache(maxsize=None)
def _profile_of_mask(mask: int) -> CoefficientProfile:
    cs = []
    for x, y in INPUTS:
        w = winners(mask, x, y)
        cs.append(sum(1 if a == b else -1 for a, b in w))
    return CoefficientProfile(bin(mask).count("1"), tuple(cs))  # type: ignore[arg-type]


def coefficient_profile(game: GameLike) -> CoefficientProfile:
    return _profile_of_mask(as_mask(game))


def g_value(c: tuple[int, int, int, int], t: float) -> float:
    """||c00 v0 + c01 v1|| + ||c10 v0 + c11 v1|| for <v0, v1> = t."""
    c00, c01, c10, c11 = c
    r0 = c00 * c00 + c01 * c01 + 2 * c00 * c01 * t
    r1 = c10 * c10 + c11 * c11 + 2 * c10 * c11 * t
    # radicands only dip below zero by rounding
    return math.sqrt(max(0.0, r0)) + math.sqrt(max(0.0, r1))


def golden_section_max(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12, max_iter: int = 500
) -> float:
    """Argmax of a unimodal ``f`` on ``[lo, hi]``, endpoints included."""
    a, b = lo, hi
    x1 = b - _INV_PHI * (b - a)
    x2 = a + _INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_PHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_PHI * (b - a)
            f1 = f(x1)
    best = 0.5 * (a + b)
    return max((best, lo, hi), key=f)


def _closed_form_t(c: tuple[int, int, int, int]) -> float:
    c00, c01, c10, c11 = c
    B = 2 * c00 * c01
    D = 2 * c10 * c11
    if B == 0 and D == 0:
        return 0.0
    if B >= 0 and D >= 0:
        return 1.0
    if B <= 0 and D <= 0:
        return -1.0
    # opposite slopes: B / sqrt(A + Bt) = -D / sqrt(C + Dt), squared -> linear in t
    A = c00 * c00 + c01 * c01
    C = c10 * c10 + c11 * c11
    t = (D * D * A - B * B * C) / (B * D * (B - D))
    t = min(1.0, max(-1.0, t)) + 0.0  # no -0.0
    # concave g: the clamped stationary point wins, but guard against rounding
    return max((t, -1.0, 1.0), key=lambda s: g_value(c, s))


@dataclass(frozen=True)
class AnalyticSolution:
    value: float
    t_star: float
    angles: AngleSet


def analytic_family_max(profile: CoefficientProfile, method: str = "closed") -> AnalyticSolution:
    """Exact family maximum ``d/16 + max_t g(t)/16``.

    ``method="golden"`` swaps the closed-form stationary point for a bounded
    golden-section search on the concave ``g``; it exists for cross-checking.
    """
    c = profile.c
    if not any(c):
        t = 0.0
    elif method == "closed":
        t = _closed_form_t(c)
    elif method == "golden":
        t = golden_section_max(lambda s: g_value(c, s), -1.0, 1.0, tol=1e-12)
    else:
        raise ValueError(f"unknown method {method!r}")
    value = (profile.d + g_value(c, t)) / 16
    return AnalyticSolution(value, t, recover_optimal_angles(profile, t))


def _reduce(angle: float) -> float:
    r = math.fmod(angle, math.pi)
    if r < 0:
        r += math.pi
    # fold values that are pi up to rounding back onto 0
    return 0.0 if abs(r - math.pi) < 1e-15 or abs(r) < 1e-15 else r


def recover_optimal_angles(profile: CoefficientProfile, t_star: float) -> AngleSet:
    if not -1.0 <= t_star <= 1.0:
        raise ValueError(f"t_star must lie in [-1, 1], got {t_star}")
    if not any(profile.c):
        return AngleSet(0.0, 0.0, 0.0, 0.0)  # nothing to align
    c00, c01, c10, c11 = profile.c
    phi1 = math.acos(t_star)
    v0 = (1.0, 0.0)
    v1 = (math.cos(phi1), math.sin(phi1))

    def direction(p: int, q: int) -> float:
        wx = p * v0[0] + q * v1[0]
        wy = p * v0[1] + q * v1[1]
        if math.hypot(wx, wy) < 1e-12:
            return 0.0
        return math.atan2(wy, wx)

    theta0 = direction(c00, c01) / 2
    theta1 = direction(c10, c11) / 2
    psi0, psi1 = 0.0, phi1 / 2
    return AngleSet(*(_reduce(v - theta0) for v in (theta0, theta1, psi0, psi1)))


# --- numeric oracle --------------------------------------------------------


def _objective(c: tuple[int, ...], th1: float, p0: float, p1: float) -> float:
    return (
        c[0] * math.cos(2 * p0)
        + c[1] * math.cos(2 * p1)
        + c[2] * math.cos(2 * (th1 - p0))
        + c[3] * math.cos(2 * (th1 - p1))
    )


_COORD_SAMPLES = 8


@lru_cache(maxsize=None)
def _numeric_search(c: tuple[int, int, int, int], grid_steps: int, refine_tol: float) -> tuple[float, float, float]:
    """Grid then cyclic coordinate ascent over (theta1, psi0, psi1), theta0 = 0."""
    grid = np.arange(grid_steps) * (math.pi / grid_steps)
    th1 = grid[:, None, None]
    p0 = grid[None, :, None]
    p1 = grid[None, None, :]
    vals = (
        c[0] * np.cos(2 * p0)
        + c[1] * np.cos(2 * p1)
        + c[2] * np.cos(2 * (th1 - p0))
        + c[3] * np.cos(2 * (th1 - p1))
    )
    i, j, k = np.unravel_index(int(np.argmax(vals)), vals.shape)
    point = [float(grid[i]), float(grid[j]), float(grid[k])]
    current = _objective(c, *point)

    # along one coordinate the objective is R cos(2 s - phase): pick the best of a
    # few samples, then the peak lies within one sample spacing, where it is unimodal
    half = math.pi / _COORD_SAMPLES
    for _ in range(1000):
        start = current
        for axis in range(3):
            def along(s: float, axis: int = axis) -> float:
                q = list(point)
                q[axis] = s
                return _objective(c, *q)

            seeds = [point[axis] + n * half for n in range(_COORD_SAMPLES)]
            s0 = max(seeds, key=along)
            s = golden_section_max(along, s0 - half, s0 + half, tol=1e-11)
            v = along(s)
            if v > current:
                point[axis] = s
                current = v
        if current - start < refine_tol:
            break
    return (point[0], point[1], point[2])


def numeric_family_max(
    game: GameLike, grid_steps: int = 60, refine_tol: float = 1e-10
) -> tuple[float, AngleSet]:
    """Direct search of the family, independent of the norm-bound argument."""
    if grid_steps < 8:
        raise ValueError(f"grid_steps must be >= 8, got {grid_steps}")
    if not refine_tol > 0:
        raise ValueError(f"refine_tol must be positive, got {refine_tol}")
    th1, p0, p1 = _numeric_search(coefficient_profile(game).c, grid_steps, float(refine_tol))
    angles = AngleSet(0.0, _reduce(th1), _reduce(p0), _reduce(p1))
    return success_probability(game, angles), angles


@dataclass(frozen=True)
class QuantumResult:
    reported: float
    family: float
    classical: Fraction
    solution: AnalyticSolution

    @property
    def separation(self) -> float:
        return max(0.0, self.family - float(self.classical))


def quantum_max(game: GameLike) -> QuantumResult:
    """Family maximum next to the classical optimum.

    A classical strategy is also a quantum one (no entanglement used), so the
    reported quantum value is the larger of the two.
    """
    sol = analytic_family_max(coefficient_profile(game))
    classical = classical_max(game).max_probability
    return QuantumResult(max(sol.value, float(classical)), sol.value, classical, sol)


# --- angle text ------------------------------------------------------------


def format_angle(angle: float) -> str:
    """``p*pi/q`` text (``"7pi/8"``) when exact to 1e-9 with q <= 200."""
    frac = Fraction(angle / math.pi).limit_denominator(200)
    if abs(float(frac) * math.pi - angle) <= 1e-9:
        p, q = frac.numerator, frac.denominator
        if p == 0:
            return "0"
        head = "pi" if p == 1 else ("-pi" if p == -1 else f"{p}pi")
        return head if q == 1 else f"{head}/{q}"
    return f"{angle:.6f}"


_PI_RE = re.compile(r"([+-]?)(\d+(?:\.\d*)?|\.\d+)?\*?pi(?:/(\d+(?:\.\d*)?))?")


def parse_angle(text: str) -> float:
    """Parse ``"0"``, ``"0.39"``, ``"pi/8"``, ``"7pi/8"`` or ``"7*pi/8"``."""
    s = text.strip().replace(" ", "").lower().replace("π", "pi")
    m = _PI_RE.fullmatch(s)
    if m:
        sign = -1.0 if m.group(1) == "-" else 1.0
        num = float(m.group(2)) if m.group(2) else 1.0
        den = float(m.group(3)) if m.group(3) else 1.0
        if den == 0:
            raise ValueError(f"bad angle {text!r}: division by zero")
        return sign * num * math.pi / den
    try:
        return float(s)
    except ValueError:
        raise ValueError(f"bad angle {text!r}; expected a number or a p*pi/q form") from None


def parse_angles(text: str) -> AngleSet:
    parts = [p for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected four comma-separated angles theta0,theta1,psi0,psi1, got {text!r}")
    return AngleSet(*(parse_angle(p) for p in parts))
