"""Perceptual utility of link metrics and perceptual outage probability.

The perceptual utility (PU) of a composite metric Omega over a random gain G
is the expectation of the value function under the perceived gain law,

    PU = integral over g of  v(Omega(g), ref) * ppdf(g) dg.

Evaluated directly the integrand is nasty: the perceived density carries
endpoint singularities and the value function has an unbounded derivative at
the reference crossing. Substituting u = F(g) and then s = gamma*(-log u)**theta
turns the integral into

    PU = integral over s in (0, inf) of  h(s) * exp(-s) ds,
    h(s) = v(Omega(Finv(winv(exp(-s)))), ref),

a smooth exponentially weighted integrand with a single kink at the image s*
of the reference crossing. Each side of the kink is handed to an adaptive
Gauss-Kronrod rule (QUADPACK) with an absolute tolerance contract.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .distributions import ExponentialGain, PerceptualDistribution
from .errors import DomainError, ToleranceNotMet
from .prospect import (ReferencePoint, ValueParams, WeightParams,
                       as_reference, value, weight)

DEFAULT_TOL = 1e-8
DEFAULT_BUDGET = 100_000

# QUADPACK cost per subinterval: 21-point Gauss-Kronrod on finite pieces,
# 15-point on the semi-infinite transform.
_EVALS_PER_INTERVAL = 21


@dataclass(frozen=True)
class LinkBudget:
    """Transmit-power-to-noise ratio (linear) plus the fading channel."""

    pt_over_n0: float
    channel: ExponentialGain

    def __post_init__(self):
        if not (np.isfinite(self.pt_over_n0) and self.pt_over_n0 >= 0.0):
            raise DomainError(
                f"pt_over_n0 must be finite and >= 0, got {self.pt_over_n0}")


@dataclass(frozen=True)
class OutageSpec:
    """Outage threshold on the instantaneous rate, in bits/s/Hz."""

    epsilon: float

    def __post_init__(self):
        if not (np.isfinite(self.epsilon) and self.epsilon > 0.0):
            raise DomainError(
                f"epsilon must be positive and finite, got {self.epsilon}")


@dataclass(frozen=True)
class PuResult:
    """Perceptual-utility value with its quadrature error estimate."""

    value: float
    abs_error: float
    evaluations: int


@dataclass(frozen=True)
class CompositeMetric:
    """A monotone nondecreasing map from channel gain to a quantity metric.

    ``crossing`` is the gain at which the metric meets its reference point;
    pass None to have it located by bisection. math.inf means the reference
    is never reached (all-loss), 0.0 that it is met on the whole support
    (all-gain).
    """

    map: Callable
    ref: ReferencePoint
    crossing: Optional[float] = None

    def crossing_point(self, support: tuple) -> float:
        if self.crossing is not None:
            return self.crossing
        lo, hi = support
        x0 = self.ref.x0
        if self.map(lo) >= x0:
            return lo
        # expand until the metric exceeds the reference or clearly never will
        probe = max(lo, 0.0) + 1.0
        for _ in range(80):
            if self.map(probe) >= x0:
                return brentq(lambda g: self.map(g) - x0, lo, probe,
                              xtol=1e-14, rtol=1e-14)
            probe *= 4.0
            if probe > min(hi, 1e300):
                break
        return math.inf


def _gain_at(base, wp: WeightParams, s):
    """Gain whose perceived CDF equals exp(-s); the substitution inverse."""
    z = (s / wp.gamma) ** (1.0 / wp.theta)
    return base.inverse_survival(-np.expm1(-z))


def _crossing_coordinate(base, wp: WeightParams, g_star: float) -> float:
    """Image s* of the reference crossing g* under the substitution."""
    lo, _ = base.support
    if g_star <= lo:
        return math.inf  # gain everywhere
    if math.isinf(g_star):
        return 0.0  # loss everywhere
    neg_log_f = -base.log_cdf(g_star)
    if not np.isfinite(neg_log_f):  # F(g*) underflowed to 0
        return math.inf
    return wp.gamma * neg_log_f ** wp.theta


def pu_composite(metric: CompositeMetric, pd: PerceptualDistribution,
                 value_params: ValueParams, tol: float = DEFAULT_TOL,
                 budget: int = DEFAULT_BUDGET) -> PuResult:
    """Perceptual utility of ``metric`` under the perceived gain law.

    Returns the integral with an absolute error estimate not exceeding
    ``tol``; raises ToleranceNotMet when the estimate cannot be certified
    within the evaluation budget.
    """
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    base, wp = pd.base, pd.weights
    if base.support[0] != 0.0:
        raise DomainError("composite PU requires base support [0, inf)")
    ref = metric.ref
    g_star = metric.crossing_point(base.support)
    s_star = _crossing_coordinate(base, wp, g_star)

    calls = [0]

    def integrand(s):
        calls[0] += 1
        g = _gain_at(base, wp, s)
        return value(metric.map(g), ref, value_params) * math.exp(-s)

    pieces = []
    if s_star > 0.0:
        pieces.append((0.0, s_star if math.isfinite(s_star) else math.inf))
    if math.isfinite(s_star):
        pieces.append((s_star, math.inf))

    limit = max(1, budget // (_EVALS_PER_INTERVAL * len(pieces)))
    total = 0.0
    err = 0.0
    for a, b in pieces:
        res = quad(integrand, a, b, epsabs=tol / len(pieces), epsrel=0.0,
                   limit=min(limit, 1000), full_output=1)
        total += res[0]
        err += res[1]
    if err > tol or calls[0] > budget:
        raise ToleranceNotMet(
            f"requested abs tolerance {tol:g} not certified: error estimate "
            f"{err:g} after {calls[0]} evaluations (budget {budget})",
            value=total, abs_error=err, evaluations=calls[0])
    return PuResult(value=total, abs_error=err, evaluations=calls[0])


def snr_metric(link: LinkBudget, ref) -> CompositeMetric:
    """Instantaneous SNR, pt_over_n0 * g, with its analytic crossing."""
    rho = link.pt_over_n0
    ref = as_reference(ref)
    crossing = math.inf if rho == 0.0 else ref.x0 / rho
    return CompositeMetric(map=lambda g: rho * g, ref=ref, crossing=crossing)


def rate_metric(link: LinkBudget, ref) -> CompositeMetric:
    """Instantaneous rate log2(1 + pt_over_n0 * g) for unit bandwidth.

    The crossing solves log2(1 + rho*g) = ref, so g* = (2**ref - 1) / rho.
    """
    rho = link.pt_over_n0
    ref = as_reference(ref)
    crossing = math.inf if rho == 0.0 else (2.0 ** ref.x0 - 1.0) / rho
    return CompositeMetric(map=lambda g: np.log2(1.0 + rho * g), ref=ref,
                           crossing=crossing)


def pu_snr(link: LinkBudget, ref, value_params: ValueParams,
           weight_params: WeightParams, tol: float = DEFAULT_TOL,
           budget: int = DEFAULT_BUDGET) -> PuResult:
    """Average perceived value of the instantaneous SNR."""
    pd = PerceptualDistribution(link.channel, weight_params)
    return pu_composite(snr_metric(link, ref), pd, value_params, tol, budget)


def pu_rate(link: LinkBudget, ref, value_params: ValueParams,
            weight_params: WeightParams, tol: float = DEFAULT_TOL,
            budget: int = DEFAULT_BUDGET) -> PuResult:
    """Average perceived value of the instantaneous transmission rate."""
    pd = PerceptualDistribution(link.channel, weight_params)
    return pu_composite(rate_metric(link, ref), pd, value_params, tol, budget)


def outage_probability(link: LinkBudget, spec: OutageSpec) -> float:
    """Probability that the instantaneous rate falls below the threshold.

    F_G((2**epsilon - 1) / pt_over_n0); defined as 1 at zero power, where
    the threshold is unreachable.
    """
    rho = link.pt_over_n0
    if rho == 0.0:
        return 1.0
    g_th = (2.0 ** spec.epsilon - 1.0) / rho
    return float(-np.expm1(-g_th / link.channel.mu))


def pop(link: LinkBudget, spec: OutageSpec,
        weight_params: WeightParams) -> float:
    """Perceptual outage probability, the Prelec-weighted outage."""
    return float(weight(outage_probability(link, spec), weight_params))
