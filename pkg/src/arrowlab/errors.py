class ArrowlabError(Exception):
    """Base class for every error raised by arrowlab."""


class CompositionError(ArrowlabError, ValueError):
    pass


class IndexRangeError(ArrowlabError, IndexError):
    pass


class FactorizationError(ArrowlabError, ValueError):
    """A morphism was not presented over the product it was declared on."""


class CoendSizeError(ArrowlabError):
    """Raised when a coend computation would exceed the generator cap."""

    def __init__(self, message, generators=None, cap=None):
        super().__init__(message)
        self.generators = generators
        self.cap = cap


class BoundError(ArrowlabError, ValueError):
    """A truncation bound is too small for the computation asked of it."""


class DinaturalityError(ArrowlabError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInvertibleError(ArrowlabError, ValueError):
    def __init__(self, message, component=None):
        super().__init__(message)
        self.component = component


class TagMismatchError(ArrowlabError, ValueError):
    pass


class UnknownNameError(ArrowlabError, KeyError):
    pass
