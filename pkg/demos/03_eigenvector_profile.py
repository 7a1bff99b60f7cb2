# The extremal eigenvector has a continuum shape.  Rescale its
# coordinates (v -> x), bundle consecutive entries into the 4-vector
# Y_k, set t = k/n, and the bundle component of the dominant branch
# approaches
#
#     y(t, l) = 2^b Gamma(nu+1) / l^(nu/2) * t * J_nu(sqrt(l) t^2 / 2)
#
# evaluated at l* = n^4 lambda_min.  This script measures the sup-norm
# gap between the discrete sequence and that closed form as n grows.

from mblab import JacobiWeightParams, profile_compare

for alpha, beta in [(0.0, 0.0), (1.0, 0.0)]:
    params = JacobiWeightParams(alpha, beta)
    print(f"\nweight exponents ({alpha:g}, {beta:g})")
    for n in (100, 200, 400):
        c = profile_compare(params, n)
        tag = " (branches degenerate)" if c.degenerate else ""
        print(
            f"  n = {n:>4}: branch {c.branch}{tag}, l* = {c.l_star:.6f}, "
            f"sup defect = {c.sup_defect:.5f}"
        )

# Dump one comparison as plain columns; plot it with any tool you like
# (or run `mblab profile --alpha 0 --beta 0 --n 400 --output shape` for
# ready-made two-column files).
c = profile_compare(JacobiWeightParams(0.0, 0.0), 400)
print("\n t      discrete   closed-form   (every 30th point)")
for i in range(0, len(c.t), 30):
    print(f" {c.t[i]:.4f}  {c.discrete[i]:+.6f}   {c.closed_form[i]:+.6f}")
