"""Exception hierarchy shared by every module."""


class QRegError(ValueError):
    """Base class for all library errors."""


class InvalidSpecError(QRegError):
    """A qubit specification violates its normalization or sign constraints."""


class SizeError(QRegError):
    """A register would exceed the dense-representation qubit cap."""


class DomainError(QRegError):
    """An argument lies outside the domain of the operation."""


class ShapeError(QRegError):
    """Operands have incompatible dimensions."""


class CellIndexError(QRegError, IndexError):
    """Cell selection is empty or refers to cells outside the register."""


class ZeroProjectionError(QRegError):
    """A state has no component in the symmetric subspace."""


class NotAStateError(QRegError):
    """A matrix is too far from positive semidefinite to be a density matrix."""
