"""Exception hierarchy shared by every module of the package."""


class SemigroupError(ValueError):
    """Base class for invalid input to any construction in this package."""


class EmptyGenerators(SemigroupError):
    pass


class NotCofinite(SemigroupError):
    def __init__(self, gcd):
        self.gcd = gcd
        super().__init__(f"generators have gcd {gcd} != 1, the monoid is not cofinite in N")


class NotAMember(SemigroupError):
    pass


class ParentMismatch(SemigroupError):
    pass


class NotContained(SemigroupError):
    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"containment fails, witness {witness!r}")


class FullMonoid(SemigroupError):
    pass


class OracleTooLarge(SemigroupError):
    pass


class ResourceLimit(RuntimeError):
    pass


class InternalInconsistency(AssertionError):
    """Two independent computations of the same quantity disagree.

    This always indicates a defect in the implementation, never bad input.
    """


# good semigroups in N^2

class NotMinClosed(SemigroupError):
    def __init__(self, a, b):
        self.a, self.b = a, b
        super().__init__(f"min({a}, {b}) is missing")


class CompletionFails(SemigroupError):
    def __init__(self, a, b):
        self.a, self.b = a, b
        super().__init__(f"completion axiom fails for {a}, {b}")


class NotAdditivelyClosed(SemigroupError):
    def __init__(self, a, b):
        self.a, self.b = a, b
        super().__init__(f"{a} + {b} is missing")


class NoConductor(SemigroupError):
    pass


class NotGoodIdeal(SemigroupError):
    pass


class ChainAmbiguity(InternalInconsistency):
    pass


class MultiplicityVectorMissing(SemigroupError):
    pass


class TruncationTooSmall(SemigroupError):
    pass


class ZeroGenerator(SemigroupError):
    pass
