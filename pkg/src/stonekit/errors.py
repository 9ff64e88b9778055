"""Exception types shared across the package."""


class StonekitError(Exception):
    """Base class for every error raised by this package."""


class NotAPoset(StonekitError):
    """The relation is not reflexive, antisymmetric and transitive."""


class NotALattice(StonekitError):
    """Some pair of elements has no greatest lower or least upper bound.

    ``witness`` is ``("meet" | "join", x, y)`` for the offending pair, or
    None when the carrier itself is unusable (for example, empty).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class LatticeTooLarge(StonekitError):
    """Carrier exceeds the soft element cap (STONE_MAX_LATTICE)."""


class NotAFrame(StonekitError):
    """Distributivity fails; ``witness`` is a failing triple (x, y, z)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ShapeMismatch(StonekitError):
    """The two maps do not run between the same pair of lattices."""


class NotMonotone(StonekitError):
    """``witness`` is a pair (x, y) with x <= y but f(x) !<= f(y)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class AdjunctionFailure(StonekitError):
    """The adjunction law fails; ``witness`` is the offending pair (x, y)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotLocaleMorphism(StonekitError):
    """The map does not preserve joins and finite meets as required."""


class InvalidTopology(StonekitError):
    """An opens family fails the finite T0 topology laws."""


class NotContinuous(StonekitError):
    """Some open has a non-open preimage; ``witness`` is that open's mask."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class JRViolated(StonekitError):
    """Restricted set not closed under joins; the construction refuses.

    ``witness`` is a tuple of restricted elements whose join escapes.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MIViolated(StonekitError):
    """Induced set not closed under meets; ``witness`` is the subset."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConditionViolated(StonekitError):
    """A named precondition failed; ``condition`` holds its tag."""

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class ClosureTooLarge(StonekitError):
    """Generated group closure exceeds the hard cap."""


class JNotAdmissible(StonekitError):
    """The chosen vertex set is not usable for pair construction."""


class DocumentError(StonekitError):
    """An instance document failed validation; message is location-anchored."""


class SweepFailed(StonekitError):
    """A conformance sweep found violations; ``report`` carries them."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
