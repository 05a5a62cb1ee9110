import itertools
import math
from dataclasses import dataclass
import numpy as np
from Config.Exceptions import DomainError
from Config.Messages import Messages
from Estimation.EmpiricalMoments import EmpiricalMoments
from Estimation.TailBounds import TailBounds
from Protocol.Displacement import Displacement, DisplacementCoeffs
from Protocol.Scenario import ScenarioParams
from Protocol.Simulator import RoundSimulator


@dataclass(frozen=True)
class WorstCaseCM:
    """Pessimistic classical CM [[x I, z Z], [z Z, y I]] of the displaced variables.

    z_direct and z_weighted are the two signed estimates of the correlation:
    the displaced-data covariance and the w-weighted relay moments. They carry
    opposite signs for the cloner attack; z_min is a magnitude.
    """
    x_max: float
    y_max: float
    z_min: float
    t: float
    eps_pe: float
    x_hat: float = math.nan
    y_hat: float = math.nan
    z_direct: float = math.nan
    z_weighted: float = math.nan
    interval: str = 'tail'

    def __post_init__(self) -> None:
        if not (self.x_max > 0 and self.y_max > 0 and self.z_min >= 0
                and self.z_min * self.z_min < self.x_max * self.y_max):
            raise DomainError(Messages().BAD_WORST_CASE.format(self.x_max, self.y_max, self.z_min))


class WorstCaseEstimator:
    @classmethod
    def worst_case_cm(cls, moments: EmpiricalMoments, coeffs: DisplacementCoeffs, eps_pe: float,
                      interval: str = 'tail') -> WorstCaseCM:
        """Widens the estimated CM to hold with probability 1 - eps_pe.

        interval='tail' uses the 1 +- t tail bound, 'exact' uses chi-squared quantiles.
        """
        if interval == 'tail':
            t = TailBounds.confidence_t(moments.n, eps_pe, strict=True)
            lower, upper = 1 - t, 1 + t
        elif interval == 'exact':
            lower, upper = TailBounds.exact_factors(moments.n, eps_pe)
            t = max(1 - lower, upper - 1)
        else:
            raise DomainError(Messages().BAD_INTERVAL.format(interval))

        return cls.widen(moments, coeffs, lower, upper, t, eps_pe, interval)

    @classmethod
    def widen(cls, moments: EmpiricalMoments, coeffs: DisplacementCoeffs, lower: float, upper: float,
              t: float, eps_pe: float, interval: str = 'tail') -> WorstCaseCM:
        """Applies given variance-ratio factors; lower = upper = 1 gives the plain estimate."""
        x_hat = moments.mean_x(coeffs)
        y_hat = moments.mean_y(coeffs)
        z_min = cls.__minimalCorrelation(moments, coeffs, lower, upper)
        z_weighted = coeffs.w1 * moments.mean_qz2 + coeffs.w2 * moments.mean_pz2 \
            + coeffs.w3 * moments.qzpz_covariance_estimator()

        return WorstCaseCM(x_max=x_hat / lower, y_max=y_hat / lower, z_min=z_min, t=t, eps_pe=eps_pe,
                           x_hat=x_hat, y_hat=y_hat, z_direct=moments.mean_z(coeffs),
                           z_weighted=z_weighted, interval=interval)

    @classmethod
    def union_failure_rate(cls, params: ScenarioParams, eps_pe: float, blocks: int, seed: int,
                           simulator: RoundSimulator = None) -> float:
        """Frequency over simulated blocks of x > x_max, y > y_max or |z| < z_min for the true CM.

        True values use the block's own displacement coefficients on the population moments.
        """
        simulator = simulator or RoundSimulator(workers=1)
        truth = RoundSimulator.expected_covariance(params)
        true_moments = EmpiricalMoments.from_covariance(truth, params.n)
        failures = 0
        for block in range(blocks):
            batch = simulator.sample_rounds(params, seed=seed * blocks + block)
            moments = EmpiricalMoments.accumulate(batch)
            coeffs = Displacement.coeffs_from_moments(moments)
            worst = cls.worst_case_cm(moments, coeffs, eps_pe)

            true_x = true_moments.mean_x(coeffs)
            true_y = true_moments.mean_y(coeffs)
            true_z = coeffs.w1 * truth[4, 4] + coeffs.w2 * truth[5, 5] + coeffs.w3 * truth[4, 5]
            if true_x > worst.x_max or true_y > worst.y_max or abs(true_z) < worst.z_min:
                failures += 1
        return failures / blocks

    @staticmethod
    def __minimalCorrelation(moments: EmpiricalMoments, coeffs: DisplacementCoeffs,
                             lower: float, upper: float) -> float:
        factors = {1: upper, -1: lower}
        mirrored = {1: lower, -1: upper}
        candidates = []
        for s1, s2, s3 in itertools.product((1, -1), repeat=3):
            value = coeffs.w1 * moments.mean_qz2 / factors[s1] \
                + coeffs.w2 * moments.mean_pz2 / factors[s2] \
                + coeffs.w3 * (moments.mean_plus_sq / (4 * factors[s3])
                               - moments.mean_minus_sq / (4 * mirrored[s3]))
            candidates.append(abs(value))
        return float(np.min(candidates))
