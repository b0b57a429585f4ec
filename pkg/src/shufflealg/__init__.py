"""Exact-arithmetic kernel for shuffle algebras over graded alphabets.

Subpackages cover: sparse rational linear combinations and lazy power
series (:mod:`.lincomb`, :mod:`.series`), words with half-shuffles and the
deconcatenation Hopf structure (:mod:`.words`), graded permutations with
dendriform products, coproducts, and the internal composition
(:mod:`.biwords`), their action on words (:mod:`.action`), the dendriform
descent algebra with its idempotents and dimension machinery
(:mod:`.descent`), exact elimination (:mod:`.linalg`), and abstract shuffle
bialgebra presentations with the primitive projector and decomposition
(:mod:`.rigidity`).  The command line lives in :mod:`.cli`.
"""

from .lincomb import LinComb
from .series import PowerSeries
from .words import Letter, Word, word
from .biwords import Biword, biword, parse_biword
from .descent import GradedSeries, p_n, pi_composite, pi_n
from .rigidity import Presentation, RigidityError

__version__ = "0.1.0"

__all__ = [
    "Biword",
    "GradedSeries",
    "Letter",
    "LinComb",
    "PowerSeries",
    "Presentation",
    "RigidityError",
    "Word",
    "biword",
    "p_n",
    "parse_biword",
    "pi_composite",
    "pi_n",
    "word",
    "__version__",
]
