"""Exception and warning types shared across the package."""


class GJAError(Exception):
    """Base class for engine errors."""


class MixedAlgebra(GJAError):
    pass


class AlgebraLoadError(GJAError, ValueError):
    """Raised when an algebra document cannot be turned into a table."""


class ParseError(AlgebraLoadError):
    pass


class DimensionMismatch(AlgebraLoadError):
    pass


class BadParity(AlgebraLoadError):
    pass


class BadIndex(AlgebraLoadError):
    pass


class EmptyWord(GJAError):
    pass


class WrongAlgebra(GJAError):
    """Word rules only exist for the built-in graded algebra ``A``."""


class InhomogeneousOperand(GJAError):
    pass


class UndefinedSignature(GJAError):
    pass


class UnknownElement(GJAError):
    pass


class ExprSyntaxError(GJAError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


class UnknownLetter(ExprSyntaxError):
    pass


class UnparenthesizedProductChain(ExprSyntaxError):
    pass


class BracketKindMismatch(UserWarning):
    """A forced [.,.] or {.,.} disagrees with the parity-derived bracket kind."""
