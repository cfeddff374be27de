"""Integer compositions as tilings of a 1 x n board.

Enumeration and exact counting of the three Fibonacci-counted restriction
classes (parts in {1,2}; all parts odd; all parts >= 2), the cut/join
encoding with MacMahon conjugation, four explicit bijections with inverses,
and exact verification of the classical Fibonacci summation identities.
"""

from .bijections import (
    BIJECTIONS,
    BijectionReport,
    InternalInvariantError,
    Origin,
    TaggedSource,
    prop1_backward,
    prop1_forward,
    prop2_backward,
    prop2_forward,
    prop3_backward,
    prop3_forward,
    thm4_backward,
    thm4_forward,
    verify_bijection,
)
from .codec import CutJoinSeq, conjugate, decode, encode, reverse
from .core import (
    Cls,
    Composition,
    DomainError,
    ParseError,
    classify,
    fib,
    format_composition,
    parse_composition,
)
from .enumeration import (
    CountTable,
    binomial,
    count,
    count_by_parts,
    count_table,
    enumerate_compositions,
    enumerate_range,
    lex_first,
    rank,
    successor,
    unrank,
)
from .identities import (
    IdentityReport,
    check_eq1,
    check_eq2,
    check_eq3,
    check_eq4,
    check_pow2,
)
from .render import RenderSpec, render

__version__ = "0.1.0"
