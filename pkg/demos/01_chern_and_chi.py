"""
Chern classes and Euler characteristics
=======================================

Everything in the package is exact integer arithmetic; the Euler
characteristic of a twisted rank-2 sheaf is a cubic in the twist with
rational coefficients that always evaluates to an integer.
"""

from sheafspectra import ChernClasses, ChernSeries, euler_characteristic
from sheafspectra import chern_from_resolution, ParityError

# A normalized class: first Chern class e in {-1, 0}.  The constructor
# enforces the parity law tying c3 to the other classes.
cc = ChernClasses(-1, 2, 0)
print("class:", cc.as_tuple())

print("chi(E(t)) for t = -5..2:")
for t in range(-5, 3):
    print(f"  t = {t:>2}:  {euler_characteristic(cc, t)}")

# Classes violating the parity law are rejected outright.
try:
    ChernClasses(0, 2, 1)
except ParityError as exc:
    print("rejected:", exc)

# Chern classes of a sheaf presented by line bundles can be read off the
# total Chern series.  A cokernel of O(-2) -> 3 O(-1) -> F:
print()
print("cokernel 0 -> O(-2) -> 3 O(-1) -> F -> 0")
print("chern(F) =", chern_from_resolution([-1, -1, -1], [-2]).as_tuple())

# The same computation by hand, multiplying and dividing power series.
o_minus_1 = ChernSeries.line_bundle(-1)
num = o_minus_1 * o_minus_1 * o_minus_1
den = ChernSeries.line_bundle(-2)
print("series coefficients:", (num / den).integer_coefficients())
