#!/usr/bin/env python3
# Exhaustive enumeration of spectrum candidates for a Chern class.
#
# The spectrum of a rank-2 semistable sheaf on P^3 with second Chern
# class c2 is a nondecreasing tuple of c2 integers.  The c3 identity
# fixes s from the entry sum, and the chain rules prune the rest.

from sheafspectra import ChainUpParam, ChernClasses, enumerate_spectra
from sheafspectra import s_upper_bound

cc = ChernClasses(-1, 2, 0)
print("candidates for", cc.as_tuple())
for sw in enumerate_spectra(cc):
    print(f"  {sw.values}  s = {sw.s}")

# The same walk on the larger class (0, 3, 0) finds 14 candidates.
cc = ChernClasses(0, 3, 0)
spectra = enumerate_spectra(cc)
print()
print(len(spectra), "candidates for", cc.as_tuple())
for sw in spectra:
    print(f"  {sw.values}  s = {sw.s}")

# The ascending chain rule is threshold-dependent.  Imposing it with a
# low threshold removes candidates whose top entries jump past a gap.
strict = enumerate_spectra(cc, ChainUpParam(0))
removed = sorted(set(sw.values for sw in spectra) - set(sw.values for sw in strict))
print()
print("removed by the strictest ascending rule:", removed)

# Upper bounds for s in the two regimes.
for e, c2 in [(-1, 2), (0, 3)]:
    g = s_upper_bound(e, c2, "general")
    z = s_upper_bound(e, c2, "zero_dimensional")
    print(f"e = {e}, c2 = {c2}: s <= {g} in general, s <= {z} zero-dimensional")
