#!/usr/bin/env python3
"""The PCM quantizer, its sawtooth error, and the white-noise MSE figure.

Quantizing a coefficient t to the nearest point of delta*Z leaves the
signed error t - Q(t), a delta-periodic sawtooth bounded by delta/2.
Modeling those errors as i.i.d. uniform noise predicts a mean-square
reconstruction error d^2 delta^2 / (12 N) that vanishes as the frame
grows; the rest of the demos show why that prediction is too optimistic.
"""

import numpy as np

from framepcm import QuantScheme, pcm_quantize, quant_error, wnh_mse

scheme = QuantScheme(0.25)

print("alphabet step delta =", scheme.delta)
print("\n  t        Q(t)     error")
for t in (0.06, 0.1249, 0.125, 0.3, -0.44, 2.0301):
    print(f"{t:8.4f} {pcm_quantize(t, scheme):8.4f} {quant_error(t, scheme):9.4f}")

t = np.linspace(-1, 1, 9)
print("\nvectorized:", np.array2string(pcm_quantize(t, scheme), precision=3))

print("\nsawtooth facts on a dense grid:")
g = np.linspace(-3, 3, 100001)
err = quant_error(g, scheme)
print("  max |error|      =", np.abs(err).max(), "(<= delta/2 =", scheme.delta / 2, ")")
print("  empirical var    =", err.var())
print("  uniform-noise var=", scheme.delta ** 2 / 12)

print("\nWNH mean-square reconstruction error d^2 delta^2/(12N):")
for d, N in ((2, 100), (3, 200000)):
    print(f"  d={d} N={N}: {wnh_mse(d, N, scheme):.3e}")
print("The prediction decays like 1/N; the later demos measure what the")
print("error actually does as N grows at fixed delta.")
