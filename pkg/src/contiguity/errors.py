"""Exception hierarchy shared across the package.

Every error raised on purpose derives from ContiguityError so callers (and
the command-line front end) can map failures to exit codes without matching
on message text.
"""


class ContiguityError(Exception):
    """Base class for all package-specific errors."""


class EmptyInput(ContiguityError):
    """Empty facet list, empty facet, or malformed vertex label."""


class InvalidArity(ContiguityError):
    """Bad power/projection index, or a non-product complex where one is required."""


class NotASimplex(ContiguityError):
    """A vertex set that is not a simplex of the complex it was checked against."""


class NotSimplicial(ContiguityError):
    """A vertex assignment that sends some facet outside the codomain.

    Carries the first violating facet in canonical order.
    """

    def __init__(self, facet, image=None):
        self.facet = tuple(facet)
        self.image = None if image is None else tuple(sorted(image))
        detail = f" (image {self.image})" if image is not None else ""
        super().__init__(f"facet {self.facet} is not carried to a simplex{detail}")


class MissingVertex(ContiguityError):
    """A map assignment that does not cover every domain vertex."""


class UnknownVertex(ContiguityError):
    """A vertex label that does not belong to the complex in question."""


class DomainMismatch(ContiguityError):
    """Two maps (or a map pair and an operation) with incompatible complexes."""


class NotSubcomplex(ContiguityError):
    """A restriction target that is not a subcomplex of the map's domain."""


class BudgetExhausted(ContiguityError):
    """A search hit its resource bounds; no verdict is implied."""


class OracleTooLarge(ContiguityError):
    """The brute-force distance oracle refused an instance above its size cap."""


class NotConnected(ContiguityError):
    """An invariant that requires edge-path connectivity got a disconnected complex."""


class NotSurjective(ContiguityError):
    """A map invariant that requires surjectivity got a non-surjective map."""


class InfiniteDistance(ContiguityError):
    """No finite cover exists (possible only with a disconnected codomain)."""


class ParseError(ContiguityError):
    """Malformed input file; carries path and 1-based line number."""

    def __init__(self, source, line, message):
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}")


class GenerationFailed(ContiguityError):
    """Random instance generation gave up after its bounded retries."""
