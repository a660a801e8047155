"""Exception hierarchy.

Every validation error carries enough context to locate the offending
cells; checkers never raise on a *negative verdict* (they return it),
only on malformed input or exhausted budgets.
"""


class DblnerveError(Exception):
    pass


class ValidationError(DblnerveError):
    """Input tables violate an axiom or reference unknown cells."""


class DanglingReference(ValidationError):
    pass


class MissingComposite(ValidationError):
    pass


class BadIdentity(ValidationError):
    pass


class NonAssociative(ValidationError):
    pass


class InterchangeFailure(ValidationError):
    pass


class BoundaryMismatch(ValidationError):
    """A pasting expression node received cells with incompatible boundaries."""


class NotAnEquivalence(DblnerveError):
    pass


class NotWhi(DblnerveError):
    pass


class NotAdjoint(DblnerveError):
    pass


class RangeExceeded(DblnerveError):
    """Requested shape lies outside the supported parameter grid."""


class BudgetExceeded(DblnerveError):
    """An enumeration exceeded the configured candidate budget."""


class DisagreementBug(DblnerveError):
    """Two internally equivalent checks disagreed; indicates a code fault."""


class SchemaError(DblnerveError):
    """Interchange document is structurally malformed."""


class UsageError(DblnerveError):
    pass
