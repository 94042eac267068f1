"""Perceptual QoS metrics of a Rayleigh link across transmit power.

Three effects worth noticing: perceptual utility keeps rising with power
but with sharply diminishing increments; raising the reference point (the
expectation) can push utility negative at unchanged physical quality; and
the perceived outage probability stays above the objective one when
outages are rare, because rare events are overweighted.
"""
from percept import (ExponentialGain, LinkBudget, OutageSpec, ValueParams,
                     WeightParams, outage_probability, pop, pu_rate, pu_snr)

vp = ValueParams(alpha=0.5, lambda_gain=1.0, lambda_loss=2.0)
wp = WeightParams(gamma=1.0, theta=0.8)
wp_pop = WeightParams(gamma=1.0, theta=0.65)


def link(rho):
    return LinkBudget(pt_over_n0=rho, channel=ExponentialGain(mu=1.0))


print("perceptual utility vs transmit power (reference 4)")
print(f"{'Pt/N0':>7}  {'PU of SNR':>10}  {'PU of rate':>10}")
prev = None
for rho in (1, 2, 5, 10, 20, 50, 100, 200, 400, 1000):
    s = pu_snr(link(rho), 4.0, vp, wp).value
    r = pu_rate(link(rho), 4.0, vp, wp).value
    note = "" if prev is None else f"   (+{s - prev:.3f})"
    print(f"{rho:7d}  {s:10.4f}  {r:10.4f}{note}")
    prev = s

print("\nreference dependence at Pt/N0 = 10: higher expectations, lower PU")
for ref in (1.0, 4.0, 16.0):
    print(f"  reference {ref:4.0f}: PU of SNR = "
          f"{pu_snr(link(10.0), ref, vp, wp).value:+8.4f}")

print("\noutage probability, objective vs perceived (threshold 1 bit/s/Hz)")
print(f"{'Pt/N0':>7}  {'objective':>10}  {'perceived':>10}")
for rho in (1, 2, 5, 10, 100, 1000):
    spec = OutageSpec(epsilon=1.0)
    p = outage_probability(link(rho), spec)
    q = pop(link(rho), spec, wp_pop)
    print(f"{rho:7d}  {p:10.6f}  {q:10.6f}")
