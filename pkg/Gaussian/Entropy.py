import math
from Config.Configs import VConfigs
from Config.Exceptions import DomainError
from Config.Messages import Messages
from Gaussian.CovMatrix import CovMatrix


class GaussianEntropy:
    """Entropic quantities of Gaussian states, in bits."""

    @classmethod
    def g(cls, nu: float) -> float:
        """Entropy of a thermal mode with symplectic eigenvalue nu.

        Eigenvalues within the physicality tolerance below 1 count as 1.
        """
        config = VConfigs()
        if nu < 1 - config.PHYSICALITY_TOLERANCE:
            raise DomainError(Messages().NU_BELOW_ONE.format(nu))

        x = max(nu - 1, 0.0) / 2
        if x == 0:
            return 0.0
        if 2 * x < config.ENTROPY_SERIES_THRESHOLD:
            # (1+x)log(1+x) - x log x to second order in x
            return (x - x * math.log(x) + x * x / 2) / math.log(2)
        return (x + 1) * math.log2(x + 1) - x * math.log2(x)

    @classmethod
    def von_neumann_entropy(cls, cm: CovMatrix) -> float:
        return math.fsum(cls.g(nu) for nu in cm.symplectic_eigenvalues())

    @classmethod
    def gaussian_mutual_information(cls, x: float, y: float, z: float) -> float:
        """I(X:Y) of two Gaussian variables with variances x, y and covariance z."""
        determinant = x * y - z * z
        if x <= 0 or y <= 0 or determinant <= 0:
            raise DomainError(Messages().NOT_POSITIVE_DEFINITE.format(x, y, z))
        return math.log2(x * y / determinant)
