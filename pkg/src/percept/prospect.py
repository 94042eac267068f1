"""Behavioral primitives: the two-part value function and Prelec weighting.

The value function maps the deviation of a quantity metric from a reference
point to perceived value,

    v(x, x0) = lambda_gain * (x - x0)**alpha      for x >= x0
    v(x, x0) = -lambda_loss * (x0 - x)**alpha     for x <  x0

and the Prelec function distorts an objective probability,

    w(p) = exp(-gamma * (-log p)**theta).

Parameter containers validate the constraints that keep the behavioral
properties intact (concave gains, convex losses, loss aversion, inverse-S
probability distortion). Two validation modes exist because the classical
identity reduction (alpha=1, lambda_gain=lambda_loss=1, gamma=theta=1) sits
on the boundary the behavioral constraints exclude:

* ``strict``      0 < alpha < 1, 0 < lambda_gain < lambda_loss,
                  gamma > 0, 0 < theta < 1
* ``permissive``  alpha in (0, 1], lambdas each positive, theta in (0, 1]

All functions accept scalars or numpy arrays and are pure; parameter objects
are frozen and safe to share across threads.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConstraintViolation, DomainError

_MODES = ("strict", "permissive")


def _require_finite(name: str, *vals: float) -> None:
    for v in vals:
        if not np.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v!r}")


def _check_mode(mode: str) -> None:
    if mode not in _MODES:
        raise DomainError(f"mode must be one of {_MODES}, got {mode!r}")


@dataclass(frozen=True)
class ValueParams:
    """Parameters of the gain/loss value function.

    ``alpha`` is the shared curvature exponent of both branches,
    ``lambda_gain`` and ``lambda_loss`` scale gains and losses. In strict
    mode loss aversion requires lambda_gain < lambda_loss and diminishing
    sensitivity requires alpha < 1.
    """

    alpha: float
    lambda_gain: float
    lambda_loss: float
    mode: str = "strict"

    def __post_init__(self):
        _check_mode(self.mode)
        _require_finite("value parameters", self.alpha, self.lambda_gain,
                        self.lambda_loss)
        alpha_hi_open = self.mode == "strict"
        if not (0.0 < self.alpha < 1.0 or
                (not alpha_hi_open and self.alpha == 1.0)):
            raise ConstraintViolation(
                "concavity",
                f"alpha must lie in (0, 1{')' if alpha_hi_open else ']'}, "
                f"got {self.alpha}")
        if self.lambda_gain <= 0.0 or self.lambda_loss <= 0.0:
            raise ConstraintViolation(
                "loss_aversion",
                "lambda_gain and lambda_loss must be positive, got "
                f"{self.lambda_gain}, {self.lambda_loss}")
        if self.mode == "strict" and not self.lambda_gain < self.lambda_loss:
            raise ConstraintViolation(
                "loss_aversion",
                "strict mode requires lambda_gain < lambda_loss, got "
                f"{self.lambda_gain} >= {self.lambda_loss}")

    @classmethod
    def classical(cls) -> "ValueParams":
        """Identity utility v(x, 0) = x; needs permissive mode."""
        return cls(1.0, 1.0, 1.0, mode="permissive")


@dataclass(frozen=True)
class WeightParams:
    """Parameters of the Prelec probability weighting function.

    ``gamma`` scales the distortion, ``theta`` controls the curvature of the
    inverse-S shape. theta=gamma=1 is the identity weighting, allowed in
    permissive mode only.
    """

    gamma: float
    theta: float
    mode: str = "strict"

    def __post_init__(self):
        _check_mode(self.mode)
        _require_finite("weight parameters", self.gamma, self.theta)
        if self.gamma <= 0.0:
            raise ConstraintViolation(
                "distortion", f"gamma must be positive, got {self.gamma}")
        theta_hi_open = self.mode == "strict"
        if not (0.0 < self.theta < 1.0 or
                (not theta_hi_open and self.theta == 1.0)):
            raise ConstraintViolation(
                "inverse_s",
                f"theta must lie in (0, 1{')' if theta_hi_open else ']'}, "
                f"got {self.theta}")

    @classmethod
    def identity(cls) -> "WeightParams":
        """No distortion, w(p) = p; needs permissive mode."""
        return cls(1.0, 1.0, mode="permissive")


@dataclass(frozen=True)
class ReferencePoint:
    """Baseline quantity against which gains and losses are perceived.

    Positive in the behavioral model; zero is admitted so the classical
    reduction v(x, 0) = x can be expressed.
    """

    x0: float

    def __post_init__(self):
        _require_finite("reference point", self.x0)
        if self.x0 < 0.0:
            raise ConstraintViolation(
                "reference", f"reference point must be >= 0, got {self.x0}")


def as_reference(ref) -> ReferencePoint:
    """Coerce a bare number into a ReferencePoint."""
    if isinstance(ref, ReferencePoint):
        return ref
    return ReferencePoint(float(ref))


def validate_value_params(alpha1: float, alpha2: float, lambda1: float,
                          lambda2: float, mode: str = "strict") -> ValueParams:
    """Reduce the four-parameter value model to its three-parameter form.

    Loss aversion over every deviation size forces the gain and loss
    exponents to coincide, so a valid parameter set always collapses to
    (alpha, lambda_gain, lambda_loss). Raises ConstraintViolation naming
    the first violated property.
    """
    _check_mode(mode)
    _require_finite("value parameters", alpha1, alpha2, lambda1, lambda2)
    alpha_hi_open = mode == "strict"
    if not (0.0 < alpha1 < 1.0 or (not alpha_hi_open and alpha1 == 1.0)):
        raise ConstraintViolation(
            "concavity", f"gain exponent must lie in (0, 1"
            f"{')' if alpha_hi_open else ']'}, got {alpha1}")
    if not (0.0 < alpha2 < 1.0 or (not alpha_hi_open and alpha2 == 1.0)):
        raise ConstraintViolation(
            "convexity", f"loss exponent must lie in (0, 1"
            f"{')' if alpha_hi_open else ']'}, got {alpha2}")
    if alpha1 != alpha2:
        raise ConstraintViolation(
            "loss_aversion",
            "loss aversion over all deviation sizes requires equal gain and "
            f"loss exponents, got {alpha1} != {alpha2}")
    return ValueParams(alpha1, lambda1, lambda2, mode=mode)


def value(x, ref, params: ValueParams):
    """Perceived value of quantity ``x`` against a reference point.

    ``x`` may be a scalar or array of nonnegative finite values. Returns 0
    exactly at the reference point.
    """
    x0 = as_reference(ref).x0
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("quantity metric must be finite")
    if np.any(x < 0.0):
        raise DomainError("quantity metric must be nonnegative")
    d = x - x0
    mag = np.abs(d) ** params.alpha
    out = np.where(d >= 0.0, params.lambda_gain * mag,
                   -params.lambda_loss * mag)
    return float(out) if out.ndim == 0 else out


def weight(p, params: WeightParams):
    """Perceived probability w(p) = exp(-gamma * (-log p)**theta).

    Defined on [0, 1] with the continuous-limit conventions w(0)=0 and
    w(1)=1. Scalar in, scalar out; arrays pass through elementwise.
    """
    p = np.asarray(p, dtype=float)
    if np.any(np.isnan(p)) or np.any(p < 0.0) or np.any(p > 1.0):
        raise DomainError("probability must lie in [0, 1]")
    with np.errstate(divide="ignore"):
        # -log(0) = inf makes the p=0 limit w=0 fall out of exp(-inf)
        out = np.exp(-params.gamma * (-np.log(p)) ** params.theta)
    return float(out) if out.ndim == 0 else out


def weight_inverse(q, params: WeightParams):
    """Inverse of :func:`weight`: the objective p with w(p) = q.

    Closed form p = exp(-((-log q) / gamma)**(1/theta)); boundaries map to
    themselves.
    """
    q = np.asarray(q, dtype=float)
    if np.any(np.isnan(q)) or np.any(q < 0.0) or np.any(q > 1.0):
        raise DomainError("perceived probability must lie in [0, 1]")
    with np.errstate(divide="ignore"):
        out = np.exp(-((-np.log(q)) / params.gamma) ** (1.0 / params.theta))
    return float(out) if out.ndim == 0 else out


def weight_derivative(p, params: WeightParams):
    """dw/dp, used for error propagation through the weighting function.

    Valid on the open interval (0, 1).
    """
    p = np.asarray(p, dtype=float)
    if np.any(p <= 0.0) or np.any(p >= 1.0):
        raise DomainError("derivative defined on (0, 1) only")
    neg_log = -np.log(p)
    out = (params.gamma * params.theta * weight(p, params)
           * neg_log ** (params.theta - 1.0) / p)
    return float(out) if out.ndim == 0 else out
