"""Multipath sum converging to the exponential gain law.

Each path contributes a fixed amplitude at an independent uniform phase.
As the path count K grows, the summed coefficient becomes complex
Gaussian, so the power gain becomes exponential; the sup-distance between
the empirical and model CDFs quantifies the convergence.
"""
import numpy as np

from percept import ExponentialGain, MultipathConfig, draw_channel, gain_samples

N = 100_000


def sup_distance(gains, mu):
    g = np.sort(gains)
    model = ExponentialGain(mu).cdf(g)
    steps = np.arange(1, g.size + 1) / g.size
    return float(np.max(np.maximum(steps - model, model - (steps - 1 / g.size))))


print(f"empirical gain law vs Exp(1), {N} draws")
print(f"{'K':>4}  {'mean gain':>10}  {'variance':>10}  {'sup-distance':>12}")
for k in (1, 2, 4, 8, 16, 64, 256):
    g = gain_samples(MultipathConfig(k_paths=k, amplitude_scale=1.0, seed=0), N)
    print(f"{k:4d}  {g.mean():10.4f}  {g.var(ddof=1):10.4f}  "
          f"{sup_distance(g, 1.0):12.4f}")

print("\nK=1 is a pure phase rotation: |H| is exactly 1, gain variance 0")
h = draw_channel(MultipathConfig(k_paths=1, amplitude_scale=1.0, seed=0), 5)
print("  first five coefficients:", np.round(h, 4))

print("\namplitude_scale sets the mean gain (shown at K=64):")
for scale in (1.0, 2.0, 3.0):
    g = gain_samples(MultipathConfig(64, amplitude_scale=scale, seed=1), N)
    print(f"  scale {scale:.0f}: mean gain {g.mean():7.4f} "
          f"(model {scale**2:.0f})")
