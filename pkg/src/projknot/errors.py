"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class UnsupportedGeneratorError(ValueError):
    """A knot combination contains a generator the operation cannot handle."""


class PrimitivityError(ValueError):
    """A class node's primitivity witness does not evaluate to 1."""


class ParseError(ValueError):
    """Malformed literal; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(message)

    def annotated(self):
        """Message followed by the input and a caret under the bad position."""
        if not self.text:
            return str(self)
        return f"{self}\n  {self.text}\n  {' ' * self.position}^"
