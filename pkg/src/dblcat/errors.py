"""Exception types shared by every module."""


class DblCatError(Exception):
    """Base class for all library errors."""


class MalformedDocument(DblCatError):
    """Missing fields or identifiers that do not resolve."""


class AxiomViolation(DblCatError):
    def __init__(self, law, witness=()):
        self.law = law
        self.witness = tuple(witness)
        super().__init__(f"{law}: {self.witness}")

    def __eq__(self, other):
        return (isinstance(other, AxiomViolation) and self.law == other.law
                and self.witness == other.witness)

    def __hash__(self):
        return hash((self.law, self.witness))


class PreservationViolation(AxiomViolation):
    """A functor fails to preserve some piece of structure."""


class ValidationError(AxiomViolation):
    """Raised by the validators; carries every violation that was found.

    ``law`` and ``witness`` are those of the first violation.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0] if self.violations else AxiomViolation("unknown")
        self.law, self.witness = first.law, first.witness
        head = "; ".join(str(v) for v in self.violations[:5])
        more = len(self.violations) - 5
        if more > 0:
            head += f"; ... ({more} more)"
        Exception.__init__(self, head)

    @property
    def laws(self):
        return sorted({v.law for v in self.violations})


class FunctorValidationError(ValidationError, PreservationViolation):
    """Raised when a functor document fails some preservation law."""


class IncompatibleBoundary(DblCatError):
    pass


class NotComposable(DblCatError):
    def __init__(self, direction, first, second):
        self.direction, self.first, self.second = direction, first, second
        super().__init__(f"{direction}: {first!r}, {second!r} do not compose")


class RaggedGrid(DblCatError):
    pass


class NotGlobular(DblCatError):
    pass


class NotParallel(DblCatError):
    pass


class UnknownShape(DblCatError, KeyError):
    pass


class UnknownSet(DblCatError, KeyError):
    pass


class UnknownKind(DblCatError):
    pass


class BoundExceeded(DblCatError):
    def __init__(self, shape, bound):
        self.shape, self.bound = shape, bound
        super().__init__(f"more than {bound} instances of {shape}")


class OutOfTruncation(DblCatError):
    pass


class UncertifiedShape(DblCatError):
    pass


class MissingCompanionData(NotComposable):
    """The companion data handed to a check does not fit the square."""

    def __init__(self, message):
        DblCatError.__init__(self, message)
        self.direction = self.first = self.second = None


class DocumentSyntaxError(DblCatError, SyntaxError):
    def __init__(self, msg, line, col):
        SyntaxError.__init__(self, f"{msg} (line {line}, column {col})")
        self.line, self.col = line, col
        self.lineno, self.offset = line, col
