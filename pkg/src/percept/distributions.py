"""Channel-gain distributions and their perceived counterparts.

A perceptual distribution composes any base law with the Prelec weighting:
the perceived CDF is w(F(s)) and the perceived density is its derivative,

    ppdf(s) = gamma * theta * w(F(s)) * (-log F(s))**(theta-1) * f(s) / F(s).

The base law only needs the minimal quantile interface below; the shipped
implementation is the exponential power-gain law of a Rayleigh-faded link.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .prospect import WeightParams

_LOG_HALF = float(np.log(0.5))
_LOG2 = float(np.log(2.0))


@dataclass(frozen=True)
class ExponentialGain:
    """Exponential law for the channel power gain, mean ``mu``.

    CDF 1 - exp(-g/mu) on g >= 0. Methods are elementwise on arrays.
    """

    mu: float

    def __post_init__(self):
        if not (np.isfinite(self.mu) and self.mu > 0.0):
            raise DomainError(f"mu must be positive and finite, got {self.mu}")

    @property
    def support(self) -> tuple:
        return (0.0, np.inf)

    def cdf(self, g):
        g = np.asarray(g, dtype=float)
        out = np.where(g < 0.0, 0.0, -np.expm1(-np.maximum(g, 0.0) / self.mu))
        return float(out) if out.ndim == 0 else out

    def pdf(self, g):
        g = np.asarray(g, dtype=float)
        out = np.where(g < 0.0, 0.0, np.exp(-np.maximum(g, 0.0) / self.mu) / self.mu)
        return float(out) if out.ndim == 0 else out

    def log_cdf(self, g):
        """log F(g), accurate in both tails.

        Uses log(-expm1(-x)) below x = log 2 and log1p(-exp(-x)) above,
        so neither tail loses precision before the underlying exp itself
        underflows.
        """
        g = np.asarray(g, dtype=float)
        if np.any(g <= 0.0):
            raise DomainError("log_cdf defined for g > 0")
        x = -g / self.mu
        with np.errstate(divide="ignore"):
            out = np.where(x > _LOG_HALF,
                           np.log(-np.expm1(x)), np.log1p(-np.exp(x)))
        return float(out) if out.ndim == 0 else out

    def inverse_cdf(self, u):
        """Quantile function, -mu * log1p(-u) for u in (0, 1)."""
        u = np.asarray(u, dtype=float)
        if np.any(u <= 0.0) or np.any(u >= 1.0) or np.any(np.isnan(u)):
            raise DomainError("quantile argument must lie in (0, 1)")
        out = -self.mu * np.log1p(-u)
        return float(out) if out.ndim == 0 else out

    def inverse_survival(self, q):
        """Quantile at survival probability q in (0, 1]; exact for tiny q.

        Equals inverse_cdf(1 - q) but avoids forming 1 - q, which matters
        deep in the upper tail.
        """
        q = np.asarray(q, dtype=float)
        if np.any(q <= 0.0) or np.any(q > 1.0) or np.any(np.isnan(q)):
            raise DomainError("survival argument must lie in (0, 1]")
        out = -self.mu * np.log(q)
        return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class PerceptualDistribution:
    """A base gain law seen through Prelec-distorted probabilities.

    ``base`` may be any object exposing cdf, pdf, log_cdf, inverse_cdf,
    inverse_survival and support (see ExponentialGain).
    """

    base: ExponentialGain
    weights: WeightParams

    def pcdf(self, s):
        """Perceived CDF, w(F(s)). A valid CDF spanning 0 to 1.

        Evaluated through log F so the upper tail keeps full precision
        after F itself rounds to 1.
        """
        s = np.asarray(s, dtype=float)
        lo, _ = self.base.support
        out = np.zeros(s.shape)
        inside = s > lo
        if np.any(inside):
            neg_log_f = -self.base.log_cdf(s[inside])
            out[inside] = np.exp(
                -self.weights.gamma * neg_log_f ** self.weights.theta)
        return float(out) if out.ndim == 0 else out

    def ppdf(self, s):
        """Perceived density, the derivative of :meth:`pcdf`.

        Defined strictly inside the support, wherever the base CDF is
        distinguishable from 0 and 1 in floating point. At the endpoints
        themselves only (integrable) limits exist and a DomainError is
        raised. The density is unbounded near the lower endpoint for
        theta < 1: overweighting of rare events piles perceived mass onto
        the far left tail.
        """
        s = np.asarray(s, dtype=float)
        lo, hi = self.base.support
        if np.any(s <= lo) or np.any(s >= hi):
            raise DomainError("ppdf is defined strictly inside the support")
        f_base = self.base.cdf(s)
        neg_log_f = -self.base.log_cdf(s)
        if np.any(f_base <= 0.0) or np.any(neg_log_f <= 0.0):
            raise DomainError(
                "ppdf: base CDF rounds to 0 or 1 here, only a limit exists")
        gp = self.weights
        out = (gp.gamma * gp.theta * np.exp(-gp.gamma * neg_log_f ** gp.theta)
               * neg_log_f ** (gp.theta - 1.0)
               * self.base.pdf(s) / f_base)
        return float(out) if out.ndim == 0 else out

    def perceptual_sample(self, u):
        """Deterministic inverse-transform sample at uniform variate u.

        Returned values have CDF :meth:`pcdf`. The base CDF of the sample
        is exp(-z) with z = ((-log u)/gamma)**(1/theta); each element is
        routed through whichever quantile keeps its small side exact, so
        neither u near 0 nor u near 1 collapses onto a support endpoint.
        """
        u = np.asarray(u, dtype=float)
        if np.any(u <= 0.0) or np.any(u >= 1.0) or np.any(np.isnan(u)):
            raise DomainError("uniform variate must lie in (0, 1)")
        z = ((-np.log(u)) / self.weights.gamma) ** (1.0 / self.weights.theta)
        # clamps keep the unselected branch evaluable; the floor keeps the
        # base probability representable when exp(-z) would underflow
        surv = -np.expm1(-np.minimum(z, 1.0))
        prob = np.fmax(np.exp(-np.maximum(z, 0.5)), 5e-324)
        out = np.where(z > _LOG2,
                       self.base.inverse_cdf(prob),
                       self.base.inverse_survival(surv))
        return float(out) if out.ndim == 0 else out


def pcdf(pd: PerceptualDistribution, s):
    """Module-level alias for :meth:`PerceptualDistribution.pcdf`."""
    return pd.pcdf(s)


def ppdf(pd: PerceptualDistribution, s):
    """Module-level alias for :meth:`PerceptualDistribution.ppdf`."""
    return pd.ppdf(s)


def perceptual_sample(pd: PerceptualDistribution, u):
    """Module-level alias for :meth:`PerceptualDistribution.perceptual_sample`."""
    return pd.perceptual_sample(u)
