"""Tour of the landmark surfaces in the family.

Three famous extremal metrics appear inside one three-parameter family:
the Clifford torus, the equilateral (hexagonal-lattice) torus, and the
eigenvalue-maximizing Klein bottle.  This script builds each one,
classifies it, and reproduces its functional value in closed form.
"""

import math

from lawson import Case, area_closed, classify, metric, validate
from lawson.elliptic import Modulus, complete_E, complete_K

print("=" * 72)
print("Landmark members of the family")
print("=" * 72)

for case, params, story in [
    (Case.GENERALIZED, (0, 0, 1), "Clifford torus (metric scaled by 1/2)"),
    (Case.GENERALIZED, (1, 1, 2), "equilateral torus, the Lambda_1 maximizer on T^2"),
    (Case.GENERALIZED, (0, 1, 2), "Klein bottle maximizing Lambda_1 on KL"),
    (Case.LAWSON, (1, 1), "Clifford torus again, as the simplest tau-surface"),
    (Case.LAWSON, (2, 1), "tau-surface Klein bottle"),
    (Case.LAWSON, (3, 1), "tau-surface whose bipolar is the maximal Klein bottle"),
]:
    t = validate(case, *params)
    sc = classify(t)
    s, area = area_closed(t)
    print(f"\n{t.label()}: {story}")
    print(f"  topology {sc.topology.value}, subcase {sc.subcase.value}, "
          f"covering degree {sc.covering_degree}")
    print(f"  area = {area:.12f}, extremal for Lambda_{sc.j} "
          f"({sc.functional.value}), Lambda_{sc.j} = {sc.lambda_value:.12f}")

print("\n" + "=" * 72)
print("Exact values behind the numbers")
print("=" * 72)

s, _ = area_closed(validate(Case.GENERALIZED, 0, 0, 1))
print(f"\nClifford:    S(0,0,1) = {s:.12f}  vs  2 pi^2   = {2 * math.pi**2:.12f}")

s, _ = area_closed(validate(Case.GENERALIZED, 1, 1, 2))
print(f"equilateral: S(1,1,2) = {s:.12f}  vs  8 pi^2/sqrt(3) = {8 * math.pi**2 / math.sqrt(3):.12f}")

gxx, gyy = metric(validate(Case.GENERALIZED, 1, 1, 2), 0.0)
print(f"  its metric is constant: (g_xx, g_yy) = ({gxx}, {gyy}) -> flat hexagonal torus")

half = Modulus.from_k(0.5)
s, _ = area_closed(validate(Case.GENERALIZED, 0, 1, 2))
by_KE = 2 * math.pi * (8 * complete_E(half) - 3 * complete_K(half))
print(f"\nKlein bottle: S(0,1,2) = {s:.12f}")
print(f"     2 pi (8 E(1/2) - 3 K(1/2)) = {by_KE:.12f}")

# The same number again from the other side of the Landen identity: the
# bipolar surface of tau_(3,1) carries the same extremal metric.
bipolar = 12 * math.pi * complete_E(Modulus.from_k(2 * math.sqrt(2) / 3))
print(f"     12 pi E(2 sqrt(2)/3)        = {bipolar:.12f}")
print(f"     relative difference         = {abs(s - bipolar) / s:.2e}")
