from dataclasses import dataclass, fields
import numpy as np
from Config.Configs import VConfigs
from Config.Exceptions import DomainError, SingularMoments, UsageError
from Config.Messages import Messages
from Protocol.RoundBatch import RoundBatch


@dataclass(frozen=True)
class DisplacementCoeffs:
    """Linear estimate g(q_Z, p_Z) = u q_Z + v p_Z subtracted from each prepared quadrature."""
    u_qA: float = 0.0
    v_qA: float = 0.0
    u_pA: float = 0.0
    v_pA: float = 0.0
    u_qB: float = 0.0
    v_qB: float = 0.0
    u_pB: float = 0.0
    v_pB: float = 0.0

    def __post_init__(self) -> None:
        for field in fields(self):
            if not np.isfinite(getattr(self, field.name)):
                raise DomainError(Messages().BAD_SCENARIO_FIELD.format(field.name, getattr(self, field.name)))

    def matrix(self) -> np.ndarray:
        """(4, 2) rows (u, v) for q'_A, p'_A, q'_B, p'_B."""
        return np.array([[self.u_qA, self.v_qA],
                         [self.u_pA, self.v_pA],
                         [self.u_qB, self.v_qB],
                         [self.u_pB, self.v_pB]])

    def residual_map(self) -> np.ndarray:
        """(4, 6) map from (q'_A, p'_A, q'_B, p'_B, q_Z, p_Z) to the displaced (q_A, p_A, q_B, p_B)."""
        return np.hstack([np.eye(4), -self.matrix()])

    @property
    def w1(self) -> float:
        return (self.u_qA * self.u_qB - self.u_pA * self.u_pB) / 2

    @property
    def w2(self) -> float:
        return (self.v_qA * self.v_qB - self.v_pA * self.v_pB) / 2

    @property
    def w3(self) -> float:
        return (self.u_qA * self.v_qB + self.v_qA * self.u_qB - self.u_pA * self.v_pB - self.v_pA * self.u_pB) / 2


class Displacement:
    @classmethod
    def coeffs_from_moments(cls, second_moments) -> DisplacementCoeffs:
        """Least-squares coefficients from the 6x6 second moments of (q'_A, p'_A, q'_B, p'_B, q_Z, p_Z).

        Accepts a matrix or anything exposing second_moments().
        """
        if hasattr(second_moments, 'second_moments'):
            second_moments = second_moments.second_moments()
        moments = np.asarray(second_moments, dtype=float)
        if moments.shape != (6, 6):
            raise DomainError(Messages().BAD_SHAPE.format(moments.shape))

        q, p, c = moments[4, 4], moments[5, 5], moments[4, 5]
        denominator = q * p - c * c
        if not denominator > VConfigs().MOMENTS_SINGULAR_TOLERANCE * max(q * p, 1.0):
            raise SingularMoments(Messages().SINGULAR_RELAY.format(denominator))

        with_q = moments[0:4, 4]
        with_p = moments[0:4, 5]
        u = (with_q * p - with_p * c) / denominator
        v = (with_p * q - with_q * c) / denominator
        return DisplacementCoeffs(u_qA=u[0], v_qA=v[0], u_pA=u[1], v_pA=v[1],
                                  u_qB=u[2], v_qB=v[2], u_pB=u[3], v_pB=v[3])

    @classmethod
    def apply(cls, batch: RoundBatch, coeffs: DisplacementCoeffs) -> RoundBatch:
        if coeffs is None:
            raise UsageError(Messages().MISSING_COEFFS)
        gains = coeffs.matrix()
        qpA = batch.qpA_prime - batch.qpZ @ gains[0:2].T
        qpB = batch.qpB_prime - batch.qpZ @ gains[2:4].T
        return batch.replace(qpA=qpA, qpB=qpB)

    @classmethod
    def cloner_coefficients(cls, tau_a: float, tau_b: float, vmod: float, nu: float) -> DisplacementCoeffs:
        """Closed-form coefficients for equal modulation under the entangling cloner."""
        gain_a = np.sqrt(tau_a / 2) * vmod / nu
        gain_b = np.sqrt(tau_b / 2) * vmod / nu
        return DisplacementCoeffs(u_qA=-gain_a, v_pA=gain_a, u_qB=gain_b, v_pB=gain_b)
