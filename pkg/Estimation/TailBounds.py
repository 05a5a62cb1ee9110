import math
from dataclasses import dataclass
from typing import Tuple
import numpy as np
from scipy.stats import chi2
from Config.Exceptions import BlockTooSmall, DomainError
from Config.Messages import Messages

# x, y and z together need eight one-sided chi-squared events
UNION_EVENTS = 8


@dataclass(frozen=True)
class TailCheck:
    upper_rate: float
    lower_rate: float
    bound: float
    trials: int

    def standard_error(self, rate: float) -> float:
        reference = max(rate, self.bound)
        return math.sqrt(reference * (1 - reference) / self.trials) if reference < 1 else 0.0

    def within_bound(self, sigmas: float = 3.0) -> bool:
        return all(rate <= self.bound + sigmas * self.standard_error(rate)
                   for rate in (self.upper_rate, self.lower_rate))


class TailBounds:
    """Confidence half-widths for sample variances of Gaussian data."""

    @classmethod
    def confidence_t(cls, n: int, eps_pe: float, strict: bool = False) -> float:
        """t = sqrt(8 ln(8/eps_pe) / n); with strict=True a t >= 1 raises BlockTooSmall."""
        cls.__checkEps(eps_pe)
        if n < 1:
            raise DomainError(Messages().BAD_BLOCK_SIZE.format(n))
        t = math.sqrt(8 * math.log(UNION_EVENTS / eps_pe) / n)
        if strict and t >= 1:
            raise BlockTooSmall(Messages().BLOCK_TOO_SMALL.format(n, t, eps_pe))
        return t

    @classmethod
    def tail_bound(cls, n: int, t: float) -> float:
        if t < 0:
            raise DomainError(Messages().BAD_CONFIDENCE.format(t))
        return math.exp(-n * t * t / 8)

    @classmethod
    def exact_factors(cls, n: int, eps_pe: float) -> Tuple[float, float]:
        """(lower, upper) chi-squared quantiles of the variance ratio, each tail at eps_pe / 8."""
        cls.__checkEps(eps_pe)
        if n < 1:
            raise DomainError(Messages().BAD_BLOCK_SIZE.format(n))
        level = eps_pe / UNION_EVENTS
        lower = float(chi2.ppf(level, n)) / n
        upper = float(chi2.isf(level, n)) / n
        if lower <= 0:
            raise BlockTooSmall(Messages().BLOCK_TOO_SMALL.format(n, 1.0, eps_pe))
        return lower, upper

    @classmethod
    def chi2_tail_check(cls, n: int, t: float, trials: int, seed: int) -> TailCheck:
        """Fraction of simulated blocks whose variance interval misses the true unit variance.

        upper_rate counts s^2 > 1 + t (sigma^2 < s^2/(1+t)), lower_rate counts s^2 < 1 - t.
        """
        if t < 0:
            raise DomainError(Messages().BAD_CONFIDENCE.format(t))
        rng = np.random.default_rng(seed)
        ratios = rng.chisquare(n, trials) / n
        return TailCheck(upper_rate=float(np.mean(ratios > 1 + t)),
                         lower_rate=float(np.mean(ratios < 1 - t)),
                         bound=cls.tail_bound(n, t),
                         trials=trials)

    @staticmethod
    def __checkEps(eps_pe: float) -> None:
        if not 0 < eps_pe < 1:
            raise DomainError(Messages().BAD_EPS.format('eps_pe', eps_pe))
