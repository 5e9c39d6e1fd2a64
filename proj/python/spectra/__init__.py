"""Exact homological algebra of chain complexes over Z, its localizations and p-completions.

Complexes are passed as dicts in the JSON schema used by the command-line tool:
{"base": {"ring": "Z"}, "bottom": 0, "ranks": {"0": 1, "1": 1}, "differentials": {"1": [["6"]]}}.
"""

from ._core import (
    FgAbGroup,
    InvariantError,
    SchemaError,
    SpectraError,
    cokernel,
    completed_homology,
    completion,
    cw_structure,
    dp_quotient,
    ext,
    finiteness_report,
    hom,
    homology,
    localize,
    mod_p_homology,
    moore_complex,
    p_finite_model,
    smith,
    tensor,
    tor,
    verify,
)

__all__ = [
    "FgAbGroup",
    "InvariantError",
    "SchemaError",
    "SpectraError",
    "cokernel",
    "completed_homology",
    "completion",
    "cw_structure",
    "dp_quotient",
    "ext",
    "finiteness_report",
    "hom",
    "homology",
    "localize",
    "mod_p_homology",
    "moore_complex",
    "p_finite_model",
    "smith",
    "tensor",
    "tor",
    "verify",
]
