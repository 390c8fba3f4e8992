"""Exception types shared across the package."""


class PicardJumpError(Exception):
    """Base class for all package errors."""


class DegenerateLatticeError(PicardJumpError):
    """Raised when an operation needs a nondegenerate lattice and got a degenerate one."""


class LatticeDomainError(PicardJumpError):
    """Invalid lattice-level input (rank bounds, admissibility, caps)."""


class PeriodDomainError(PicardJumpError):
    """Point outside a period map's disk of validity, or an invalid period."""


class PerpendicularTooSmallError(PicardJumpError):
    """The prescribed-classes complement carries no positive isotropic direction.

    A definite perpendicular of rank <= 2 forces the period domain to a point
    pair, so any family through it is constant.
    """


class ContourError(PicardJumpError):
    """Contour geometry failure: zero on (or too near) the sampling circle."""


class IdenticallyVanishingError(PicardJumpError):
    """The tested hyperplane contains the whole image of the map.

    Perturbing such a hyperplane can lose the intersection point entirely, so
    it must be rejected, never perturbed.
    """


class InsufficientSamplesError(PicardJumpError):
    """Winding accumulation did not converge to an integer."""


class ConstantMapError(PicardJumpError):
    """The supplied period map is constant (no jump search is possible)."""


class SurfaceModelError(PicardJumpError):
    """Invalid Weierstrass data (identically zero discriminant, bad substitution...)."""


class InconsistentDataError(PicardJumpError):
    """Numerically or combinatorially inconsistent (rho, fiber table) input."""
