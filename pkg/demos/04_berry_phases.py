"""Berry phases from the discrete overlap product versus the closed forms."""
import math

from braidberry.berry import (
    EXAMPLES,
    berry_closed,
    berry_closed_raw,
    berry_numeric,
    canonical_phase,
    connection_integral,
    example_phase,
    wrap_distance,
)
from braidberry.dynamics import BANDS, DriveParams

theta = math.pi / 4
for ex, (n1, n2) in EXAMPLES.items():
    d = DriveParams(theta, n1, n2)
    print(f"example {ex}: (n1, n2) = ({n1}, {n2})")
    for k in (1, 2, 3):
        cells = []
        for band in BANDS:
            num = berry_numeric(d, k, band, steps=4096).gamma
            ref = example_phase(ex, theta, k, band)
            cells.append(f"{band}: {num:+.6f} ({wrap_distance(num, ref):.0e})")
        print(f"  k={k}  " + "   ".join(cells))

# A pair outside the examples, against the general closed form
d = DriveParams(0.6, 3, 2)
for band in BANDS:
    num = berry_numeric(d, 1, band, steps=8192).gamma
    print(f"(3,2) k=1 {band}: numeric {num:+.6f}  closed {berry_closed(d, 1, band).gamma:+.6f}")

# The minus band needs its own normalization; the other reading is far off
alt = canonical_phase(berry_closed_raw(d, 1, "-", swap_minus_norm=True))
print("alternative denominator:", f"{alt:+.6f}")

# Integrating <E|dE/dt> in the smooth gauge recovers the un-reduced value
d = DriveParams(0.7, -2, 1)
print("connection integral", connection_integral(d, 1, "+", 512), " closed", berry_closed_raw(d, 1, "+"))

# Convergence of the discrete product is second order
exact = berry_closed(d, 2, "+").gamma
prev = None
for n in (128, 256, 512, 1024, 2048):
    err = wrap_distance(berry_numeric(d, 2, "+", n).gamma, exact)
    rate = "" if prev is None else f"  order {math.log2(prev / err):.4f}"
    print(f"steps {n:5d}  error {err:.3e}{rate}")
    prev = err
