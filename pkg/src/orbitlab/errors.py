"""Exception types shared across the package."""


class OrbitlabError(Exception):
    """Base class for all orbitlab errors."""


class NonRepresentationWeights(OrbitlabError):
    """Weight multiplicities do not come from an SL2 representation."""


class OrderTooSmall(OrbitlabError):
    """Transvectant index exceeds the order of an operand."""


class NonInvertibleFactorial(OrbitlabError):
    """A factorial or binomial prefactor is not invertible in the field."""


class DimensionMismatch(OrbitlabError):
    """Operands disagree on order or number of variables."""


class NotUnimodular(OrbitlabError):
    """Substitution matrix does not have determinant one."""


class DegenerateForm(OrbitlabError):
    """The supplied form fails a genericity precondition."""


class MissingBetti(OrbitlabError):
    """A needed generator character for a lower degree is unresolved."""


class ConfigError(OrbitlabError):
    """Pipeline or oracle configuration is inconsistent."""


class PrimeDisagreement(OrbitlabError):
    """Modular runs over distinct primes disagree after retrying."""


class NegativeMultiplicity(OrbitlabError):
    """A character that must be effective has a negative multiplicity."""


class UnsupportedOrder(OrbitlabError):
    """No tabulated data for the requested order."""


class NotTabulated(OrbitlabError):
    """The requested entry is absent from the reference tables."""
