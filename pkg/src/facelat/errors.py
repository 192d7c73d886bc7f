"""Exception types shared across the package."""


class FacelatError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(FacelatError):
    pass


class ZeroNormal(FacelatError):
    pass


class DuplicateHyperplane(FacelatError):
    pass


class BasePointOnHyperplane(FacelatError):
    pass


class NotAntisymmetric(FacelatError):
    pass


class NotTransitive(FacelatError):
    pass


class NotALattice(FacelatError):
    pass


class NotABijection(FacelatError):
    pass


class NotComparable(FacelatError):
    pass


class NotCoversOfZ(FacelatError):
    pass


class InternalInconsistency(FacelatError):
    """An enumerated structure violates a guarantee it was built to satisfy."""


class UnsupportedFamily(FacelatError):
    pass


class InputError(FacelatError):
    """Malformed file or CLI input."""
