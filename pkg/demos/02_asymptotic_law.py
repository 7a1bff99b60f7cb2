# For the Jacobi weight (1-x)^alpha (1+x)^beta the sharp constant obeys
#
#     M_n = n^2 / (2 j_nu*) * (1 + o(1)),   nu* = (min(alpha, beta) - 1) / 2,
#
# where j_nu is the first positive zero of the Bessel function J_nu.
# This script tabulates the ratio M_n / (n^2 / (2 j_nu*)) along a
# doubling sequence of degrees and watches it approach 1.

from mblab import JacobiWeightParams, convergence_study, root_condition_min_l

DEGREES = [50, 100, 200, 400]

for alpha, beta in [(0.0, 0.0), (1.0, 1.0), (0.0, 2.0), (2.5, 0.0)]:
    params = JacobiWeightParams(alpha, beta)
    print(f"\nweight exponents ({alpha:g}, {beta:g}), nu* = {params.nu_star:g}")
    print(f"{'n':>6} {'M_n':>16} {'predicted':>16} {'ratio':>12} {'n^4*lambda':>12}")
    for r in convergence_study(params, DEGREES):
        print(
            f"{r.n:>6} {r.m_n:>16.6f} {r.predicted:>16.6f} "
            f"{r.ratio:>12.8f} {r.lambda_min * r.n**4:>12.6f}"
        )
    # n^4 * lambda_min heads to the square of twice the Bessel zero
    print(f"{'':>40} limit of last column: {root_condition_min_l(params):>12.6f}")

# The proof of the law needs |alpha - beta| < 4; outside that strip the
# solver still runs, and the data is worth a look even though nothing is
# guaranteed.
params = JacobiWeightParams(0.0, 6.0)
print("\nexploratory: weight exponents (0, 6), outside |alpha - beta| < 4")
for r in convergence_study(params, DEGREES):
    print(f"  n = {r.n:>4}   ratio = {r.ratio:.8f}")
