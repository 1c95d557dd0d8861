from fnq.groups.builders import (
    BuildError,
    alt,
    cyclic,
    delta_element,
    dprime,
    dprime_gens,
    dprime_mod_delta,
    psp4,
    sp4,
    sp4_order,
    sym,
    symplectic_transvection,
)
from fnq.groups.core import (
    ClosureCapExceeded,
    ConjugacyClass,
    FiniteGroup,
    NotInGroup,
    central_quotient,
    centralizer_order,
    class_commuting_count,
    class_of,
    closure,
    conjugacy_classes,
    is_real,
    max_commuting_subset_in_class,
)
from fnq.groups.elements import CosetElement, FpMatrix, Perm, ProjFpMatrix, SignedPerm

__all__ = [
    "alt",
    "BuildError",
    "central_quotient",
    "centralizer_order",
    "class_commuting_count",
    "class_of",
    "closure",
    "ClosureCapExceeded",
    "conjugacy_classes",
    "ConjugacyClass",
    "CosetElement",
    "cyclic",
    "delta_element",
    "dprime",
    "dprime_gens",
    "dprime_mod_delta",
    "FiniteGroup",
    "FpMatrix",
    "is_real",
    "max_commuting_subset_in_class",
    "NotInGroup",
    "Perm",
    "ProjFpMatrix",
    "psp4",
    "SignedPerm",
    "sp4",
    "sp4_order",
    "sym",
    "symplectic_transvection",
]
