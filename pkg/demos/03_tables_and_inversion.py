"""Cohomology tables from spectra, and spectra back from tables."""

import json

from sheafspectra import (
    CohomologyTable,
    RangeInsufficientError,
    SpectrumWithS,
    spectrum_from_table,
    splitting_type_from_e,
    table_from_spectrum,
)

st = splitting_type_from_e(-1)

# Generate the full table of a spectrum over a twist window.
sw = SpectrumWithS((-2, -1), 2)
table = table_from_spectrum(sw, st, (-6, 0))
print(table.to_markdown())
print()

# Tables serialize to JSON and back without loss, Chern classes included.
doc = json.loads(table.to_json())
print("attached classes:", doc["cc"])
assert CohomologyTable.from_json_dict(doc) == table

# Inversion recovers the spectrum and s.  It refuses to extrapolate:
# a window too shallow to witness h1 stabilization raises instead of
# guessing.
print("recovered:", spectrum_from_table(table, st))

shallow = table_from_spectrum(sw, st, (-1, 0))
try:
    spectrum_from_table(shallow, st)
except RangeInsufficientError as exc:
    print("shallow window refused:", exc)

# Partial tables invert too.  Only h1 and h2 over -4..-1 are needed
# here, the rows a printed table in the literature would give you.
rows = {
    -1: (None, 2, 1, None),
    -2: (None, 2, 3, None),
    -3: (None, 2, 5, None),
    -4: (None, 2, 7, None),
}
partial = CohomologyTable(-4, -1, rows)
print("from the printed window:", spectrum_from_table(partial, st))
