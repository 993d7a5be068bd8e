"""Idioms, monads and arrows as monoids, computed exactly over finite sets.

Functors, strong profunctors and their tensors (Day convolution,
substitution, Bénabou composition) are computed exactly over a truncated
skeleton of finite sets, so monoid laws, adjunctions and the equivalences
between idioms, monads and arrows can be checked element by element.
"""
from .errors import (
    ArrowlabError,
    BoundError,
    CoendSizeError,
    CompositionError,
    DinaturalityError,
    FactorizationError,
    IndexRangeError,
    NotInvertibleError,
    TagMismatchError,
    UnknownNameError,
)
from .finset import FinFun, FinSet
from .functors import library_functor
from .monoids import library_monoid
from .profunctors import library_profunctor
from .reports import Report
from .suites import Config, run, suite_names

__version__ = "0.1.0"
