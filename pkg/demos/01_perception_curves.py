"""Two building blocks of the perceptual layer, printed as small tables.

The value function measures outcomes relative to a reference point:
concave over gains, steeper and convex over losses. The Prelec weighting
function distorts probabilities in an inverse-S: rare events are
overweighted, near-certain ones underweighted, with a fixed point at 1/e.
"""
import numpy as np

from percept import ValueParams, WeightParams, value, weight, weight_inverse

vp = ValueParams(alpha=0.88, lambda_gain=1.0, lambda_loss=2.25)
ref = 4.0

print("value function, reference 4 (alpha=0.88, loss ratio 2.25)")
print(f"{'x':>6}  {'v(x)':>10}")
for x in np.arange(0.0, 10.5, 1.0):
    print(f"{x:6.1f}  {value(x, ref, vp):10.4f}")

# losses loom larger: a unit shortfall hurts more than a unit surplus helps
gain = value(5.0, ref, vp)
loss = value(3.0, ref, vp)
print(f"\nv(ref+1) = {gain:.4f} but v(ref-1) = {loss:.4f} "
      f"(ratio {-loss / gain:.2f})")

wp = WeightParams(gamma=1.0, theta=0.65)
print("\nPrelec weighting (gamma=1, theta=0.65)")
print(f"{'p':>6}  {'w(p)':>8}  {'bias':>8}")
for p in (0.01, 0.05, 0.1, 1 / np.e, 0.5, 0.75, 0.9, 0.99):
    w = weight(p, wp)
    print(f"{p:6.3f}  {w:8.4f}  {w - p:+8.4f}")

q = weight(0.2, wp)
print(f"\nround trip through the inverse: w_inv(w(0.2)) = "
      f"{weight_inverse(q, wp):.15f}")
print(f"fixed point: w(1/e) - 1/e = {weight(1 / np.e, wp) - 1 / np.e:.2e}")
