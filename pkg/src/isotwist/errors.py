class DomainError(ValueError):
    """An operation was applied outside the domain where it is defined."""


class UnsupportedMapError(DomainError):
    """The quadrature oracle only handles the separable map J e1 = 0, J e2 = theta p1."""


class ParseError(ValueError):
    """Syntax error in an algebra expression; ``offset`` is the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
