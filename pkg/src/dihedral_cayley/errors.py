"""Exception hierarchy shared by every layer of the package."""


class DihedralCayleyError(Exception):
    """Base class for all errors raised by this package."""


class ModulusMismatch(DihedralCayleyError, ValueError):
    pass


class ElementParseError(DihedralCayleyError, ValueError):
    pass


class NotAUnit(DihedralCayleyError, ValueError):
    pass


class NTooSmall(DihedralCayleyError, ValueError):
    pass


class IdentityInS(DihedralCayleyError, ValueError):
    pass


class NotInverseClosed(DihedralCayleyError, ValueError):
    def __init__(self, element, missing):
        self.element = element
        self.missing = missing
        super().__init__(f"connection set is not inverse-closed: {element} is present "
                         f"but its inverse {missing} is not")


class DuplicateElement(DihedralCayleyError, ValueError):
    pass


class MalformedCase(DihedralCayleyError, ValueError):
    pass


class AsymmetricConnectionSet(DihedralCayleyError, ValueError):
    pass


class SizeCapExceeded(DihedralCayleyError, RuntimeError):
    def __init__(self, size, cap, what="graph"):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} has {size} vertices, above the cap of {cap}")


class DegreeMismatch(DihedralCayleyError, ValueError):
    pass


class NotASubgroup(DihedralCayleyError, ValueError):
    pass


class MapDoesNotPreserveS(DihedralCayleyError, ValueError):
    pass


class OutOfScope(DihedralCayleyError, ValueError):
    """Parameters fall outside the range a theorem checker is defined on."""
