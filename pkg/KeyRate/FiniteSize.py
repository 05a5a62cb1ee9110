import math
from dataclasses import dataclass
from scipy.special import gammaln
from Config.Exceptions import DomainError
from Config.Messages import Messages
from Estimation.WorstCase import WorstCaseCM
from Gaussian.Entropy import GaussianEntropy
from KeyRate.Holevo import HolevoBound
from KeyRate.SecurityBudget import SecurityBudget


@dataclass(frozen=True)
class AsymptoticTerms:
    r0: float
    i_ab: float
    i_be: float


@dataclass(frozen=True)
class RateTerms:
    """A finite-size rate and its correction terms, all in bits per use."""
    rate: float
    leading: float
    aep: float
    projection: float
    hashing: float
    definetti: float = 0.0
    eps_double_prime: float = math.nan


class FiniteSizeCorrections:
    @classmethod
    def asymptotic_terms(cls, wc: WorstCaseCM, beta: float, vmod_a: float, vmod_b: float,
                         side: str = None) -> AsymptoticTerms:
        i_ab = GaussianEntropy.gaussian_mutual_information(wc.x_max, wc.y_max, wc.z_min)
        i_be = HolevoBound.holevo_bound_from_cm(wc.x_max, wc.y_max, wc.z_min, vmod_a, vmod_b, side)
        return AsymptoticTerms(r0=beta * i_ab - i_be, i_ab=i_ab, i_be=i_be)

    @classmethod
    def asymptotic_rate(cls, wc: WorstCaseCM, beta: float, vmod_a: float, vmod_b: float,
                        side: str = None) -> float:
        """beta I_AB - I_BE on the worst-case matrix; may be negative."""
        return cls.asymptotic_terms(wc, beta, vmod_a, vmod_b, side).r0

    @classmethod
    def delta_aep(cls, delta: float, d: int) -> float:
        if not 0 < delta < math.sqrt(2):
            raise DomainError(Messages().BAD_DELTA.format(delta))
        return 4 * (d + 1) * math.sqrt(math.log2(2 / delta ** 2))

    @classmethod
    def delta_aep_legacy(cls, eps: float, d: int, p: float, n: int) -> float:
        if not 0 < eps < 1:
            raise DomainError(Messages().BAD_EPS.format('eps', eps))
        if not 0 < p <= 1:
            raise DomainError(Messages().BAD_PROBABILITY.format('p', p))
        return (d + 1) ** 2 + 4 * (d + 1) * math.sqrt(math.log2(2 / eps ** 2)) \
            + 2 * math.log2(2 / (p * p * eps)) + 4 * eps * d / (p * math.sqrt(n))

    @classmethod
    def collective_rate(cls, r0: float, n: int, budget: SecurityBudget, d: int) -> RateTerms:
        smoothing = cls.__smoothing(budget)
        aep = -cls.delta_aep(smoothing, d) / math.sqrt(n)
        projection = math.log2(budget.p - smoothing) / n
        hashing = 2 * math.log2(2 * budget.eps) / n
        return RateTerms(rate=r0 + aep + projection + hashing, leading=r0, aep=aep,
                         projection=projection, hashing=hashing, eps_double_prime=budget.eps_prime)

    @classmethod
    def coherent_rate(cls, r0: float, n: int, k: int, budget: SecurityBudget, d: int,
                      definetti_k: float = None) -> RateTerms:
        """Rate against coherent attacks; K defaults to n."""
        if not 0 < k < n:
            raise DomainError(Messages().BAD_ENERGY_TEST.format(k, n))
        definetti_k = n if definetti_k is None else definetti_k
        smoothing = cls.__smoothing(budget)
        kept = n - k
        leading = kept / n * r0
        aep = -math.sqrt(kept) * cls.delta_aep(smoothing, d) / n
        projection = math.log2(budget.p - smoothing) / n
        hashing = 2 * math.log2(2 * budget.eps) / n
        definetti = -2 * cls.log2_binomial(definetti_k + 4, 4) / n
        return RateTerms(rate=leading + aep + projection + hashing + definetti, leading=leading, aep=aep,
                         projection=projection, hashing=hashing, definetti=definetti,
                         eps_double_prime=budget.eps_double_prime(definetti_k))

    @classmethod
    def legacy_collective_rate(cls, r0: float, n: int, budget: SecurityBudget, d: int) -> RateTerms:
        """Collective rate with the older correction term in place of the AEP and projection terms."""
        aep = -cls.delta_aep_legacy(budget.eps_s, d, budget.p, n) / math.sqrt(n)
        hashing = 2 * math.log2(2 * budget.eps) / n
        return RateTerms(rate=r0 + aep + hashing, leading=r0, aep=aep, projection=0.0,
                         hashing=hashing, eps_double_prime=budget.eps_prime)

    @classmethod
    def log2_binomial(cls, top: float, bottom: float) -> float:
        return float(gammaln(top + 1) - gammaln(bottom + 1) - gammaln(top - bottom + 1)) / math.log(2)

    @staticmethod
    def __smoothing(budget: SecurityBudget) -> float:
        smoothing = 2 / 3 * budget.p * budget.eps_s
        if not smoothing < min(math.sqrt(2), budget.p):
            raise DomainError(Messages().PROJECTION_TOO_LARGE.format(smoothing))
        return smoothing
