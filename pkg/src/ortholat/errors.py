"""Exception types.  Mathematical *failures* found by checks are reported as
data (see :class:`ortholat.poset.Verdict`); exceptions are reserved for
malformed input and violated preconditions."""


class OrtholatError(Exception):
    """Base class; ``witness`` carries the offending elements when known."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceeded(OrtholatError):
    pass


class NotBounded(OrtholatError):
    pass


class NotALattice(OrtholatError):
    pass


class CyclicOrder(OrtholatError):
    pass


class EmptyGenerator(OrtholatError):
    pass


class OrthoAxiomViolation(OrtholatError):
    def __init__(self, message, axiom, witness=None):
        super().__init__(message, witness)
        self.axiom = axiom


class NoOrthocomplement(OrtholatError):
    pass


class DomainMismatch(OrtholatError):
    pass


class NotMonotone(OrtholatError):
    pass


class NotJoinPreserving(OrtholatError):
    pass


class NotMeetPreserving(OrtholatError):
    pass


class NotAMember(OrtholatError):
    pass


class OrderIncompatible(OrtholatError):
    pass


class ModelMismatch(OrtholatError):
    pass


class NotOrthomodularBase(OrtholatError):
    pass


class UnsupportedEnvironment(OrtholatError):
    pass


class DocumentError(OrtholatError):
    pass
