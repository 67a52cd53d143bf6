#!/usr/bin/env python3
"""How the exact bound fitter picks the line touching the most points.

Run from the repository root:  python3 demos/02_sharp_bound_fitting.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sharpbounds import fit_linear_bound

print("== a perfectly linear cloud ==")
points = [(1, 1, "a"), (2, 2, "b"), (3, 3, "c")]
result = fit_linear_bound(points, "upper")
print(f"points {[(x, y) for x, y, _ in points]}")
print(f"upper bound: y <= {result.function.slope}*x + {result.function.intercept}"
      f"   touches {result.touch_number} of {len(points)}")

print()
print("== ties break toward the flattest line ==")
points = [(1, 2, "a"), (2, 2, "b"), (3, 1, "c")]
result = fit_linear_bound(points, "upper")
print(f"points {[(x, y) for x, y, _ in points]}")
print(f"upper bound: y <= {result.function.slope}*x + {result.function.intercept}"
      f"   touch set {sorted(result.touch_set)}")

print()
print("== lower bounds work the same way ==")
points = [(1, 1, "a"), (2, 3, "b"), (3, 4, "c")]
result = fit_linear_bound(points, "lower")
print(f"points {[(x, y) for x, y, _ in points]}")
print(f"lower bound: y >= {result.function.slope}*x + {result.function.intercept}"
      f"   touch set {sorted(result.touch_set)}")

print()
print("== everything is exact rational arithmetic ==")
points = [(2, 3, "a"), (4, 6, "b"), (6, 9, "c"), (3, 4, "d")]
result = fit_linear_bound(points, "upper")
fn = result.function
print(f"points {[(x, y) for x, y, _ in points]}")
print(f"upper bound: y <= {fn.slope}*x + {fn.intercept}")
print(f"value at x=5: {fn.evaluate(5)} (a Fraction, no rounding anywhere)")
