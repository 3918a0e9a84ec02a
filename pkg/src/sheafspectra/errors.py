"""Exception hierarchy shared by all modules.

Two broad families matter to callers (and to the CLI exit codes):

* malformed or inadmissible input: bad Chern classes, bad spectra, bad
  catalog files, ill-formed symbols;
* verification and constraint failures: tables that cannot come from any
  spectrum, ranges too short to decide, infeasible exact sequences, and
  catalog entries whose recomputation disagrees with the stored data.
"""


class SheafSpectraError(Exception):
    """Base class for every error raised by this package."""


# --- malformed / inadmissible input -------------------------------------

class NotNormalizedError(SheafSpectraError):
    """First Chern class outside the normalized range {-1, 0}."""


class ParityError(SheafSpectraError):
    """Chern classes violating the integrality parity law."""


class DegenerateClassError(SheafSpectraError):
    """c2 <= 0 where a spectrum of positive length is required."""


class InadmissibleSpectrumError(SheafSpectraError):
    """Spectrum incompatible with the given Chern classes (wrong length,
    or the solved s-invariant comes out negative)."""


class UnsupportedSymmetryError(SheafSpectraError):
    """Reflexive symmetry test requested for e = -1, where the naive
    statement fails and no variant is implemented."""


class RankMismatchError(SheafSpectraError):
    """Resolution or monad whose alternating rank is not the target."""


class IntegralityError(SheafSpectraError):
    """A total Chern class computation produced a non-integer."""


class AmbiguousCurveModuleError(SheafSpectraError):
    """Curve module asked for a twist where chi = 0 and the generic
    flag is off, so h0/h1 are not determined by the data given."""


class CatalogError(SheafSpectraError):
    """Catalog document violating the schema or a descriptor invariant."""


# --- verification / constraint failures ---------------------------------

class RangeInsufficientError(SheafSpectraError):
    """The table does not witness the stabilization needed to pin the
    spectrum; extending the twist range may fix it."""


class InconsistentTableError(SheafSpectraError):
    """The table cannot be the cohomology table of any spectrum (wrong
    monotonicity, failed regeneration, or chi mismatch)."""


class SequenceInfeasibleError(SheafSpectraError):
    """A short exact sequence forcing a negative dimension somewhere."""


class VerificationError(SheafSpectraError):
    """Recomputation disagrees with stored catalog data."""


VERIFICATION_ERRORS = (
    RangeInsufficientError,
    InconsistentTableError,
    SequenceInfeasibleError,
    VerificationError,
)
