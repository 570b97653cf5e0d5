"""Exception types shared across the package."""


class CodesError(Exception):
    """Base class for every error raised by this package."""


class AlphabetMismatch(CodesError):
    """Operands live over different alphabets."""


class LengthMismatch(CodesError):
    """Operands have incompatible lengths or shapes."""


class NonUnitLambda(CodesError):
    """A twist constant or divisor must be a unit and is not."""


class OddLength(CodesError):
    """The operation needs an even number of coordinates."""


class NotSelfOrthogonal(CodesError):
    """The generator rows are not pairwise orthogonal."""


class RankDeficient(CodesError):
    """The generator rows are linearly dependent."""


class DimensionTooLarge(CodesError):
    """The code dimension exceeds what full enumeration supports."""


class ConditionFailed(CodesError):
    """The block condition of a construction does not hold."""


class EvenN(CodesError):
    """The bordered construction needs an odd block order."""


class RowSumMismatch(CodesError):
    """Block row sums must agree and be a unit."""


class BadBorder(CodesError):
    """Border entries must be one unit and one non-unit."""


class BadC(CodesError):
    """The extension constant must be a unit squaring to one."""


class BadX(CodesError):
    """The extension vector must have self inner product one."""


class MissingWeights(CodesError):
    """Classification needs exact counts at weights 12 and 14."""


class UnsupportedLength(CodesError):
    """No enumerator family catalog exists for this length."""


class BadCharacter(CodesError):
    """Row text contains a character outside the alphabet."""


class EmptyRow(CodesError):
    """Row text contains no coordinates."""


class ConfigInvalid(CodesError):
    """A search configuration fails validation."""


class UnknownTable(CodesError):
    """No embedded catalog table has this identifier."""
