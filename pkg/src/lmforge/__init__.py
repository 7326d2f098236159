"""lmforge: exact computations with twisted representation families of braid
and symmetric groups.

The package builds new representation families out of old ones by tensoring
with the augmentation ideal of a free-group action (the construction lives in
:mod:`lmforge.longmoody`), and measures families with a translation /
evanescence / difference calculus (:mod:`lmforge.polydeg`).  All arithmetic
is exact: rationals and single-variable Laurent polynomials only.
"""

from .exactalg import ExactMatrix, LaurentPoly, RingSpec
from .freefox import FreeEndomorphism, FreeWord, GroupRingElement
from .systems import GroupWord, LongMoodySystem, braid_sigma1, braid_trivial, symmetric_trivial
from .functors import UGFunctor, UGMorphism, burau_reference, make_character, make_constant, perm_reference
from .longmoody import LMResult, lm_apply, lm_iterate

__all__ = [
    "ExactMatrix",
    "LaurentPoly",
    "RingSpec",
    "FreeEndomorphism",
    "FreeWord",
    "GroupRingElement",
    "GroupWord",
    "LongMoodySystem",
    "braid_sigma1",
    "braid_trivial",
    "symmetric_trivial",
    "UGFunctor",
    "UGMorphism",
    "burau_reference",
    "make_character",
    "make_constant",
    "perm_reference",
    "LMResult",
    "lm_apply",
    "lm_iterate",
]
