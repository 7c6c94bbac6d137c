"""Exact computer algebra for good pairs over ordinary differential fields.

The heavy lifting happens in the compiled extension ``_core``; this package
re-exports its operations under a stable name.  All operations speak the same
text formats as the ``taugen`` command-line tool (pair manifests, ideal files,
system files, polynomial expressions), so results agree byte for byte across
the two entry points.
"""

try:
    from ._core import (  # type: ignore[attr-defined]
        DegenerateDenominatorError,
        NotSolvedFormError,
        PointError,
        PrimalityEvidenceError,
        ResourceLimitError,
        TaugenParseError,
        __version__,
        canonical,
        check_pair,
        decide,
        enumerate_pairs,
        formula_at,
        groebner,
        listing_membership,
        member,
        normal_form,
        prolongation,
        series_check,
        stabilize,
    )
except ImportError:  # plain CMake builds put the extension on sys.path directly
    from _core import (  # type: ignore[no-redef]
        DegenerateDenominatorError,
        NotSolvedFormError,
        PointError,
        PrimalityEvidenceError,
        ResourceLimitError,
        TaugenParseError,
        __version__,
        canonical,
        check_pair,
        decide,
        enumerate_pairs,
        formula_at,
        groebner,
        listing_membership,
        member,
        normal_form,
        prolongation,
        series_check,
        stabilize,
    )

__all__ = [
    "DegenerateDenominatorError",
    "NotSolvedFormError",
    "PointError",
    "PrimalityEvidenceError",
    "ResourceLimitError",
    "TaugenParseError",
    "__version__",
    "canonical",
    "check_pair",
    "decide",
    "enumerate_pairs",
    "formula_at",
    "groebner",
    "listing_membership",
    "member",
    "normal_form",
    "prolongation",
    "series_check",
    "stabilize",
]
