"""Zero-sum sequence toolkit for groups <x,y | x^2 = y^n = 1, yx = xy^s>.

The heavy lifting lives in the compiled extension; this package re-exports
its surface. Report-producing functions return plain dicts matching the
CLI's JSON output.
"""

from ._core import (
    Group,
    SequenceParseError,
    StateBudgetExceeded,
    admissible_twists,
    check,
    classify,
    davenport,
    factor,
    families,
    lemma1_audit,
    parse_group,
    subproducts,
    verify_theorem,
)

__all__ = [
    "Group",
    "SequenceParseError",
    "StateBudgetExceeded",
    "admissible_twists",
    "check",
    "classify",
    "davenport",
    "factor",
    "families",
    "lemma1_audit",
    "parse_group",
    "subproducts",
    "verify_theorem",
]

__version__ = "0.1.0"
