class CrystalError(Exception):
    """Base class for errors raised by rank2crystals."""


class RangeError(CrystalError, ValueError):
    """An index lies outside the coset chain or coefficient table."""


class InternalConsistencyError(CrystalError, AssertionError):
    """A derived quantity violated a proven identity (malformed input or a bug)."""


class NotInImageError(CrystalError, ValueError):
    """A monomial could not be factored back into an LS path."""


class ParseError(CrystalError, ValueError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")
