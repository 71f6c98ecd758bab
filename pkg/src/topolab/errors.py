"""Exception hierarchy shared by every topolab module."""


class TopolabError(Exception):
    pass


class InvalidGenerator(TopolabError, ValueError):
    """A generating set mentions a point outside the ground set."""


class InvalidTopology(TopolabError, ValueError):
    """A family of sets violates the topology axioms."""


class TooLarge(TopolabError):
    """A construction would exceed the configured size cap."""


class InvalidMap(TopolabError, ValueError):
    pass


class InvalidPartition(TopolabError, ValueError):
    pass


class NotADiscretization(TopolabError, ValueError):
    pass


class HypothesisViolated(TopolabError, ValueError):
    """The inputs do not satisfy the hypotheses a check is stated under."""


class InternalInvariantViolation(TopolabError, AssertionError):
    pass


class NotInAlgebra(TopolabError, ValueError):
    pass


class NotOpen(TopolabError, ValueError):
    pass


class InvalidSet(TopolabError, ValueError):
    pass


class NotACMorphism(TopolabError, ValueError):
    """A map is continuous but sends some isolated point to a non-isolated one."""


class OutOfComputableSlice(TopolabError, ValueError):
    pass
