"""
Real roots, interlacing, and limit statistics
=============================================

The combined peak polynomials are real-rooted with all zeros in [-1, 0):
a high-multiplicity zero at -1 plus simple zeros certified by exact Sturm
counts and rational isolating intervals.
"""

from peakpoly import families as F
from peakpoly import roots as R

# Small cases factor by hand: R_3 = (1+x)^2 (1+2x), R_4 = (1+x)^3 (1+5x).
for n in (3, 4, 5):
    g = F.reduced_tan_sec_poly(n)
    print(f"R_{n} = (1+x)^{n // 2 + 1} * ({g})")

# Certified structure for every n up to 25: multiplicity floor(n/2)+1 at -1,
# ceil(n/2)-1 simple zeros isolated inside (-1, 0).
for n in (5, 10, 15, 25):
    report = R.certify_root_structure(n)
    widths = [float(b - a) for a, b in report.isolating_intervals]
    print(
        f"n={n}: multiplicity {report.mult_minus1} at -1,"
        f" {len(report.isolating_intervals)} simple zeros, interval widths {widths}"
    )

# Consecutive polynomials weakly interlace; the certificate refines the
# isolating intervals until they are disjoint and alternate.
print("\ninterlacing certified for n = 1..25:", all(R.certify_interlacing(n) for n in range(1, 26)))

# Exact coefficient statistics: the mean is (2n-1)/3 and the variance
# (8n+8)/45 from n = 4 on, so the variance grows without bound.
print("\n n   mu        sigma^2")
for n in range(4, 16):
    stats = R.clt_stats(n)
    print(f"{n:>2}   {str(stats.mu):<8}  {stats.sigma2}")

# Darroch's rule pins the largest coefficient of each row near the mean.
for n in (5, 6, 12, 25):
    mode = R.mode_bracket(n)
    print(f"row {n}: argmax {mode.argmax} within allowed {mode.allowed}")
