"""Minkowski four-vector algebra and proper-time worldlines.

Conventions used everywhere in this package: natural units (c = 1), metric
signature (+, -, -, -), events stored as float arrays ``(t, x1, x2, x3)``.
Four-velocities are normalized to v.v = 1 with respect to proper time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import make_interp_spline

from .errors import ConstraintViolationError
from .numdiff import OFFSETS, W_D1, W_D2, W_D3

SIGNATURE = np.array([1.0, -1.0, -1.0, -1.0])
ETA = np.diag(SIGNATURE)


def as_event(x) -> np.ndarray:
    """Validate and convert to a flat float64 4-vector."""
    arr = np.asarray(x, dtype=float)
    if arr.shape != (4,):
        raise ValueError(f"expected a 4-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("event components must be finite")
    return arr


def minkowski_dot(x, y) -> float:
    """x.y = x0 y0 - x1 y1 - x2 y2 - x3 y3 (supports trailing-axis batches)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = np.sum(SIGNATURE * x * y, axis=-1)
    return float(out) if out.ndim == 0 else out


def minkowski_sq(x):
    return minkowski_dot(x, x)


def lower_index(x):
    """Lower the index of a contravariant 4-vector: x_mu = eta_{mu nu} x^nu."""
    return SIGNATURE * np.asarray(x, dtype=float)


def interval(x, xp) -> float:
    """Squared Minkowski distance (x - x')^2; sign unconstrained."""
    d = np.asarray(x, dtype=float) - np.asarray(xp, dtype=float)
    return minkowski_dot(d, d)


@dataclass(frozen=True, eq=False)
class KinematicState:
    """Position, four-velocity and its first two proper-time derivatives."""

    position: np.ndarray
    velocity: np.ndarray
    velocity_dot: np.ndarray
    velocity_ddot: np.ndarray
    tau: float

    def constraint_residuals(self):
        """(|v.v - 1|, |v.vdot|): both vanish for exact proper-time data."""
        return (abs(minkowski_dot(self.velocity, self.velocity) - 1.0),
                abs(minkowski_dot(self.velocity, self.velocity_dot)))


class HyperbolicWorldline:
    """Uniformly accelerated (for a > 0) or uniform (a = 0) motion.

    The four-velocity is v(tau) = v0 cosh(a tau) + (vdot0 / a) sinh(a tau),
    which keeps v.v = 1 for every proper acceleration a; at a = 1 this is the
    familiar cosh/sinh pair of the initial data themselves.  Initial data must
    satisfy v0.v0 = 1, v0.vdot0 = 0 and vdot0.vdot0 = -a^2 (spacelike
    acceleration).
    """

    def __init__(self, v0, vdot0, accel, x0=None, tol=1e-9):
        v0 = as_event(v0)
        vdot0 = as_event(vdot0)
        x0 = np.zeros(4) if x0 is None else as_event(x0)
        a = float(accel)
        if a < 0:
            raise ConstraintViolationError(f"acceleration must be >= 0, got {a}")
        r1 = minkowski_dot(v0, v0) - 1.0
        if abs(r1) > tol:
            raise ConstraintViolationError(
                f"v0.v0 = {1.0 + r1} violates the unit-norm constraint v0.v0 = 1")
        r2 = minkowski_dot(v0, vdot0)
        if abs(r2) > tol:
            raise ConstraintViolationError(
                f"v0.vdot0 = {r2} violates the orthogonality constraint v0.vdot0 = 0")
        r3 = minkowski_dot(vdot0, vdot0) + a * a
        if abs(r3) > tol:
            raise ConstraintViolationError(
                f"vdot0.vdot0 = {minkowski_dot(vdot0, vdot0)} violates "
                f"vdot0.vdot0 = -a^2 = {-a * a}")
        self.v0 = v0
        self.vdot0 = vdot0
        self.accel = a
        self.x0 = x0

    def position(self, tau):
        tau = np.asarray(tau, dtype=float)
        a = self.accel
        if a == 0.0:
            return self.x0 + np.multiply.outer(tau, self.v0)
        return (self.x0
                + np.multiply.outer(np.sinh(a * tau) / a, self.v0)
                + np.multiply.outer((np.cosh(a * tau) - 1.0) / a**2, self.vdot0))

    def velocity(self, tau):
        tau = np.asarray(tau, dtype=float)
        a = self.accel
        if a == 0.0:
            return np.broadcast_to(self.v0, tau.shape + (4,)).copy()
        return (np.multiply.outer(np.cosh(a * tau), self.v0)
                + np.multiply.outer(np.sinh(a * tau) / a, self.vdot0))

    def velocity_dot(self, tau):
        tau = np.asarray(tau, dtype=float)
        a = self.accel
        if a == 0.0:
            return np.zeros(tau.shape + (4,))
        return (np.multiply.outer(a * np.sinh(a * tau), self.v0)
                + np.multiply.outer(np.cosh(a * tau), self.vdot0))

    def velocity_ddot(self, tau):
        # second derivative reproduces a^2 v
        return self.accel**2 * self.velocity(tau)

    def state(self, tau, step=None) -> KinematicState:
        tau = float(tau)
        return KinematicState(
            position=self.position(tau),
            velocity=self.velocity(tau),
            velocity_dot=self.velocity_dot(tau),
            velocity_ddot=self.velocity_ddot(tau),
            tau=tau,
        )


class SampledWorldline:
    """Worldline given by (tau, event) samples, interpolated by splines.

    Quintic splines are used by default so that third derivatives of the
    position (needed for the radiation-reaction combination) remain accurate;
    cubic splines lose three orders of magnitude there.
    """

    def __init__(self, tau, events, spline_order=5):
        tau = np.asarray(tau, dtype=float)
        events = np.asarray(events, dtype=float)
        if tau.ndim != 1 or events.shape != (tau.size, 4):
            raise ValueError("expected tau of shape (n,) and events of shape (n, 4)")
        if np.any(np.diff(tau) <= 0):
            raise ConstraintViolationError("sample proper times must be strictly increasing")
        if not (np.all(np.isfinite(tau)) and np.all(np.isfinite(events))):
            raise ValueError("samples must be finite")
        k = min(int(spline_order), tau.size - 1)
        self.tau = tau
        self.events = events
        self.spline_order = k
        self._splines = [make_interp_spline(tau, events[:, i], k=k) for i in range(4)]

    @property
    def tau_range(self):
        return float(self.tau[0]), float(self.tau[-1])

    def position(self, tau):
        tau = np.asarray(tau, dtype=float)
        lo, hi = self.tau_range
        if np.any(tau < lo) or np.any(tau > hi):
            raise ValueError(f"tau outside sampled range [{lo}, {hi}]")
        out = np.stack([s(tau) for s in self._splines], axis=-1)
        return out

    def state(self, tau, step=1e-3) -> KinematicState:
        tau = float(tau)
        step = float(step)
        if step <= 0:
            raise ValueError("step must be positive")
        lo, hi = self.tau_range
        if not (lo <= tau <= hi):
            raise ValueError(f"tau = {tau} outside sampled range [{lo}, {hi}]")
        if tau - 2 * step < lo or tau + 2 * step > hi:
            raise ValueError(
                f"step {step} too large: 5-point stencil at tau = {tau} leaves "
                f"the sampled range [{lo}, {hi}]")
        pts = self.position(tau + OFFSETS * step)
        return KinematicState(
            position=self.position(tau),
            velocity=W_D1 @ pts / step,
            velocity_dot=W_D2 @ pts / step**2,
            velocity_ddot=W_D3 @ pts / step**3,
            tau=tau,
        )


Worldline = HyperbolicWorldline | SampledWorldline


def hyperbolic_worldline(v0, vdot0, accel, x0=None, tol=1e-9) -> HyperbolicWorldline:
    """Construct uniformly accelerated motion from constrained initial data."""
    return HyperbolicWorldline(v0, vdot0, accel, x0=x0, tol=tol)


def rest_worldline(x0=None) -> HyperbolicWorldline:
    return HyperbolicWorldline([1.0, 0, 0, 0], np.zeros(4), 0.0, x0=x0)


def kinematic_state(worldline, tau, step=1e-3) -> KinematicState:
    """Kinematic state at proper time tau (closed form or finite differences)."""
    return worldline.state(tau, step=step)
