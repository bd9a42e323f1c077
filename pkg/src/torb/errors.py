"""Exception hierarchy shared by all torb modules."""


class TorbError(Exception):
    """Base class for all domain errors raised by this package."""


class UnboundedPolytope(TorbError):
    pass


class EmptyPolytope(TorbError):
    pass


class DegenerateInput(TorbError):
    pass


class NotAFace(TorbError):
    pass


class NonPrimitiveSlant(TorbError):
    pass


class DivisibilityViolation(TorbError):
    pass


class UnboundedResult(TorbError):
    pass


class NotASimplexBundle(TorbError):
    pass


class SingularBasis(TorbError):
    pass


class IncompatibleSublattice(TorbError):
    pass


class NotSmooth(TorbError):
    pass


class MalformedVector(TorbError):
    pass


class PreconditionViolated(TorbError):
    pass
