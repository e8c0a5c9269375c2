"""Exception types shared across the library."""


class ConjcountError(Exception):
    """Base class for every error raised by this package."""


class NotClosed(ConjcountError):
    """A multiplication table contains an entry outside the element range."""


class NoIdentity(ConjcountError):
    """A multiplication table has no two-sided identity element."""


class NoInverse(ConjcountError):
    """Some element of a multiplication table has no inverse."""


class NotAssociative(ConjcountError):
    """Associativity fails; the message names a witnessing triple."""


class InconsistentPresentation(ConjcountError):
    """A polycyclic presentation does not define a group of the predicted order."""


class NotAutomorphism(ConjcountError):
    """A semidirect-product action value is not an automorphism of the kernel."""


class NotAHomomorphism(ConjcountError):
    """A semidirect-product action is not a homomorphism of the complement."""


class NotSimpleIntegerPoles(ConjcountError):
    """A denominator is not a product of distinct factors (1 - m*t) with integer m."""


class NonIntegralSolution(ConjcountError):
    """A moment sequence does not come from a valid centralizer spectrum."""


class ParameterOutOfRange(ConjcountError):
    """A closed-form formula was asked for parameters outside its hypotheses."""


class TooLarge(ConjcountError):
    """A brute-force enumeration would exceed its state guard."""


class RecursionDepthExceeded(ConjcountError):
    """Internal error: the commuting-tuple recursion failed to terminate."""


class SpecFormatError(ConjcountError):
    """A JSON document violates a schema; the message carries the JSON path."""
