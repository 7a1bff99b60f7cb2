# Two closed-form sequences solve the discrete system at zero spectral
# parameter with vanishing left boundary data.  In rescaled coordinates
# they are plain gamma ratios:
#
#     x_k^(1) = (k+alpha)!/k!        (sign-constant, grows like k^alpha)
#     x_k^(2) = (-1)^k (k+beta)!/k!  (alternating,   grows like k^beta)
#
# Applying the operator A to either one wipes out everything except the
# last two components, and the rescaled bundle Y_k / k^b converges to a
# fixed 4-vector at rate 1/k.  Both facts are checked numerically here.

import numpy as np

from mblab import (
    JacobiWeightParams,
    build_pencil,
    bundle_matching_defect,
    particular_v,
    particular_x_sequence,
    residual_support,
    y_bundle,
)

params = JacobiWeightParams(1.5, 0.5)
n = 20
pencil = build_pencil(params, n)

print(f"weight exponents ({params.alpha:g}, {params.beta:g}), size n = {n}")
for j in (1, 2):
    sol = particular_v(params, j, n)
    ok, tail = residual_support(pencil, sol)
    print(
        f"  branch {j}: support confined to the last two components: {ok}, "
        f"tail = ({tail[0]:.3e}, {tail[1]:.3e})"
    )

# A random vector is the negative control: applying A spreads mass
# everywhere, so the support test must reject it.
from mblab.discrete import ParticularSolution

rng = np.random.default_rng(1)
fake = ParticularSolution(branch=1, exponent=0.0, variable="v", values=rng.standard_normal(n))
print(f"  random vector:  support confined: {residual_support(pencil, fake)[0]}")

# Bundle convergence: Y_k^(1) / k^alpha -> (2, 0, 4 alpha, 0).
xs = particular_x_sequence(params, 1, 204).values
print("\nY_k / k^alpha for branch 1 (limit is [2, 0, 6, 0] here):")
for k in (25, 50, 100, 200):
    print(f"  k = {k:>4}:", np.round(y_bundle(xs, k) / k**params.alpha, 4))

print("\ndefect * k stays bounded (1/k decay):")
for k in (25, 50, 100, 200):
    print(f"  k = {k:>4}: k * defect = {k * bundle_matching_defect(params, 1, k):.4f}")
