from typing import Iterable, Union
import numpy as np
from Config.Configs import VConfigs
from Config.Exceptions import DomainError
from Config.Messages import Messages
from Protocol.Displacement import DisplacementCoeffs
from Protocol.RoundBatch import RoundBatch
from Utils.Utils import CompensatedSum

_Q_Z, _P_Z = 4, 5


class EmpiricalMoments:
    """Sums of second moments over a block of rounds.

    The Gram sum covers (q'_A, p'_A, q'_B, p'_B, q_Z, p_Z); the displaced
    moments of X and Y are quadratic forms of it, so one pass over the raw
    data is enough. (q_Z + p_Z)^2 and (q_Z - p_Z)^2 are accumulated on their
    own because they are what the communication-free estimate of <q_Z p_Z> uses.
    """

    def __init__(self, n: int, gram: CompensatedSum, plus_sq: CompensatedSum, minus_sq: CompensatedSum) -> None:
        if n < 1:
            raise DomainError(Messages().EMPTY_BATCH)
        self.__n = int(n)
        self.__gram = gram
        self.__plusSq = plus_sq
        self.__minusSq = minus_sq

    @classmethod
    def accumulate(cls, batch: Union[RoundBatch, Iterable[RoundBatch]]) -> 'EmpiricalMoments':
        """One pass over a batch, or over the chunks of a streamed block."""
        chunks = [batch] if isinstance(batch, RoundBatch) else batch
        chunk_size = VConfigs().ROUNDS_PER_CHUNK
        n = 0
        gram = CompensatedSum((6, 6))
        plus_sq = CompensatedSum(())
        minus_sq = CompensatedSum(())

        for chunk in chunks:
            for start in range(0, len(chunk), chunk_size):
                rows = chunk.slice(start, start + chunk_size).prepared_and_relay()
                n += len(rows)
                gram.add(rows.T @ rows)
                plus_sq.add(np.sum((rows[:, _Q_Z] + rows[:, _P_Z]) ** 2))
                minus_sq.add(np.sum((rows[:, _Q_Z] - rows[:, _P_Z]) ** 2))

        if n == 0:
            raise DomainError(Messages().EMPTY_BATCH)
        return cls(n, gram, plus_sq, minus_sq)

    @classmethod
    def from_covariance(cls, covariance: np.ndarray, n: int) -> 'EmpiricalMoments':
        """Moments equal to their population values, for the analytic mode."""
        covariance = np.asarray(covariance, dtype=float)
        q, p, c = covariance[_Q_Z, _Q_Z], covariance[_P_Z, _P_Z], covariance[_Q_Z, _P_Z]
        gram = CompensatedSum((6, 6))
        gram.add(n * covariance)
        plus_sq = CompensatedSum(())
        plus_sq.add(n * (q + p + 2 * c))
        minus_sq = CompensatedSum(())
        minus_sq.add(n * (q + p - 2 * c))
        return cls(n, gram, plus_sq, minus_sq)

    def merge(self, other: 'EmpiricalMoments') -> 'EmpiricalMoments':
        gram = self.__gram.copy()
        gram.merge(other.__gram)
        plus_sq = self.__plusSq.copy()
        plus_sq.merge(other.__plusSq)
        minus_sq = self.__minusSq.copy()
        minus_sq.merge(other.__minusSq)
        return EmpiricalMoments(self.__n + other.__n, gram, plus_sq, minus_sq)

    @property
    def n(self) -> int:
        return self.__n

    def second_moments(self) -> np.ndarray:
        return self.__gram.value / self.__n

    @property
    def mean_qz2(self) -> float:
        return float(self.second_moments()[_Q_Z, _Q_Z])

    @property
    def mean_pz2(self) -> float:
        return float(self.second_moments()[_P_Z, _P_Z])

    @property
    def mean_qzpz(self) -> float:
        return float(self.second_moments()[_Q_Z, _P_Z])

    @property
    def mean_plus_sq(self) -> float:
        return float(self.__plusSq.value) / self.__n

    @property
    def mean_minus_sq(self) -> float:
        return float(self.__minusSq.value) / self.__n

    def displaced_moments(self, coeffs: DisplacementCoeffs) -> np.ndarray:
        """4x4 second moments of (q_A, p_A, q_B, p_B) after displacement."""
        residual = coeffs.residual_map()
        return residual @ self.second_moments() @ residual.T

    def mean_x(self, coeffs: DisplacementCoeffs) -> float:
        displaced = self.displaced_moments(coeffs)
        return float(displaced[0, 0] + displaced[1, 1]) / 2

    def mean_y(self, coeffs: DisplacementCoeffs) -> float:
        displaced = self.displaced_moments(coeffs)
        return float(displaced[2, 2] + displaced[3, 3]) / 2

    def mean_z(self, coeffs: DisplacementCoeffs) -> float:
        """(<q_A q_B> - <p_A p_B>)/2 from the displaced data."""
        displaced = self.displaced_moments(coeffs)
        return float(displaced[0, 2] - displaced[1, 3]) / 2

    def is_consistent(self) -> bool:
        """(q+p)^2 and (q-p)^2 sums agree with the q^2, p^2, qp sums."""
        tolerance = VConfigs().MOMENTS_CONSISTENCY_TOLERANCE
        scale = max(self.mean_plus_sq + self.mean_minus_sq, 1e-300)
        total = self.mean_plus_sq + self.mean_minus_sq - 2 * (self.mean_qz2 + self.mean_pz2)
        cross = self.mean_plus_sq - self.mean_minus_sq - 4 * self.mean_qzpz
        return abs(total) <= tolerance * scale and abs(cross) <= tolerance * scale

    def qzpz_covariance_estimator(self) -> float:
        return (self.mean_plus_sq - self.mean_minus_sq) / 4

    def __repr__(self) -> str:
        return f'EmpiricalMoments(n={self.__n}, qz2={self.mean_qz2:.6g}, pz2={self.mean_pz2:.6g})'
