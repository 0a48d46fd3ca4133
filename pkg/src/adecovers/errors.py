"""Exception types shared across the package."""


class AdeCoversError(Exception):
    """Base class for every domain error raised by this package."""


class DegreeMismatch(AdeCoversError):
    """Permutations (or triples) of different degrees were combined."""


class GroupTooLarge(AdeCoversError):
    """A group closure exceeded the requested element cap."""


class NotSemiregular(AdeCoversError):
    """A block system was requested from a permutation with unequal cycle lengths."""


class BlocksNotPreserved(AdeCoversError):
    """A permutation does not map the given block system to itself."""


class DegreeTooLargeForCanonicalization(AdeCoversError):
    """Simultaneous-conjugacy canonical forms are only computed for small degrees."""


class UnknownGenerator(AdeCoversError):
    """A word references a generator that is not declared or not assigned."""


class SearchSpaceTooLarge(AdeCoversError):
    """An exhaustive homomorphism count would exceed the search-space guard."""


class InvalidType(AdeCoversError):
    """Not an ADE singularity type (A_n n>=0, D_n n>=4, E_6/E_7/E_8)."""


class MalformedGraph(AdeCoversError):
    """A graph violates the resolution-graph invariants."""


class NoExceptionalCurve(AdeCoversError):
    """A_0 has no exceptional curve, hence no distinguished central word."""


class CentralityViolated(AdeCoversError):
    """The distinguished word did not evaluate to a central permutation."""


class NonZeroGenus(AdeCoversError):
    """Strict mode rejected a cover whose exceptional Belyi triple has genus > 0."""


class NotBel3(AdeCoversError):
    """The triple has fewer than three nontrivial branch permutations."""


class NotGenusZero(AdeCoversError):
    """The triple is not of genus zero."""


class NotTransitive(AdeCoversError):
    """The permutations do not generate a transitive group."""
