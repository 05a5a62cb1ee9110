import math
from dataclasses import dataclass
from typing import List, Optional
import numpy as np
from scipy.optimize import minimize_scalar
from Config.Configs import VConfigs
from Config.Exceptions import DomainError, QKDError
from Config.Messages import Messages
from Estimation.EmpiricalMoments import EmpiricalMoments
from Estimation.TailBounds import TailBounds
from Estimation.WorstCase import WorstCaseCM, WorstCaseEstimator
from KeyRate.FiniteSize import AsymptoticTerms, FiniteSizeCorrections, RateTerms
from KeyRate.RateReport import RateReport
from KeyRate.SecurityBudget import SecurityBudget
from Protocol.Displacement import Displacement
from Protocol.Scenario import ScenarioParams
from Protocol.Simulator import RoundSimulator
from Utils.Logger import get_logger

MODES = ('collective', 'coherent')


@dataclass(frozen=True)
class RateEvaluation:
    vmod: float
    worst_case: WorstCaseCM
    asymptotic: AsymptoticTerms
    collective: RateTerms
    legacy: RateTerms
    coherent: Optional[RateTerms]
    k: int

    def rate(self, mode: str) -> float:
        if mode == 'coherent':
            return self.coherent.rate if self.coherent is not None else -math.inf
        return self.collective.rate


class RateOptimizer:
    """Maximizes the finite-size rate over the modulation variance and, for coherent attacks, the energy-test size."""

    def __init__(self, side: str = None, interval: str = 'tail', definetti_k: float = None,
                 energy_test_k: int = None) -> None:
        self.__config = VConfigs()
        self.__side = side
        self.__interval = interval
        self.__definettiK = definetti_k
        self.__energyTestK = energy_test_k
        self.__logger = get_logger(self.__class__.__name__)

    def optimize_rate(self, scenario: ScenarioParams, n: int, budget: SecurityBudget, mode: str,
                      optimize_vmod: bool = True) -> RateReport:
        self.__checkMode(mode)
        TailBounds.confidence_t(n, budget.eps_pe, strict=True)
        scenario = scenario.with_block_size(n)

        if not optimize_vmod:
            best = self.evaluate_analytic(scenario, n, budget)
            return self.report(best, n, scenario.d, budget, mode)

        grid = np.geomspace(self.__config.VMOD_MIN, self.__config.VMOD_MAX, self.__config.VMOD_GRID_POINTS)
        values = [self.__objective(math.log(vmod), scenario, n, budget, mode) for vmod in grid]
        best_index = int(np.argmax(values))
        if not np.isfinite(values[best_index]):
            self.__logger.debug(f'No feasible modulation at n={n} mode={mode}')
            return self.__failedReport(n, scenario.d, budget, mode)

        low = math.log(grid[max(best_index - 1, 0)])
        high = math.log(grid[min(best_index + 1, len(grid) - 1)])
        best_log = math.log(grid[best_index])
        if high > low:
            refined = minimize_scalar(lambda log_v: -self.__objective(log_v, scenario, n, budget, mode),
                                      bounds=(low, high), method='bounded',
                                      options={'xatol': self.__config.VMOD_XTOL})
            if refined.success and -refined.fun > values[best_index]:
                best_log = float(refined.x)

        best = self.evaluate_analytic(scenario.with_modulation(math.exp(best_log)), n, budget)
        return self.report(best, n, scenario.d, budget, mode)

    def evaluate_analytic(self, params: ScenarioParams, n: int, budget: SecurityBudget) -> RateEvaluation:
        moments = EmpiricalMoments.from_covariance(RoundSimulator.expected_covariance(params), n)
        return self.evaluate_moments(params, moments, budget)

    def evaluate_moments(self, params: ScenarioParams, moments: EmpiricalMoments, budget: SecurityBudget,
                         k: int = None) -> RateEvaluation:
        """Every rate of one operating point from its (empirical or population) moments."""
        coeffs = Displacement.coeffs_from_moments(moments)
        worst = WorstCaseEstimator.worst_case_cm(moments, coeffs, budget.eps_pe, self.__interval)
        terms = FiniteSizeCorrections.asymptotic_terms(worst, params.beta, params.vmod_a, params.vmod_b,
                                                       self.__side)
        n = moments.n
        collective = FiniteSizeCorrections.collective_rate(terms.r0, n, budget, params.d)
        legacy = FiniteSizeCorrections.legacy_collective_rate(terms.r0, n, budget, params.d)

        coherent, best_k = None, 0
        candidates = [k] if k is not None else self.energy_test_candidates(n)
        for candidate in candidates:
            rate = FiniteSizeCorrections.coherent_rate(terms.r0, n, candidate, budget, params.d, self.__definettiK)
            if coherent is None or rate.rate > coherent.rate:
                coherent, best_k = rate, candidate
        return RateEvaluation(vmod=params.vmod_a, worst_case=worst, asymptotic=terms, collective=collective,
                              legacy=legacy, coherent=coherent, k=best_k)

    def energy_test_candidates(self, n: int) -> List[int]:
        if self.__energyTestK is not None:
            if not 0 < self.__energyTestK < n:
                raise DomainError(Messages().BAD_ENERGY_TEST.format(self.__energyTestK, n))
            return [self.__energyTestK]
        if n < 2:
            return []
        # the coherent rate is convex in n - k, its maximum sits at an end of the range
        return sorted({1, n - 1})

    def report(self, evaluation: RateEvaluation, n: int, d: int, budget: SecurityBudget, mode: str) -> RateReport:
        self.__checkMode(mode)
        raw_rate = evaluation.rate(mode)
        r0 = evaluation.asymptotic.r0
        coherent_raw = evaluation.coherent.rate if evaluation.coherent is not None else -math.inf
        aborted = not raw_rate > 0
        worst = evaluation.worst_case
        eps_double_prime = evaluation.coherent.eps_double_prime if evaluation.coherent is not None \
            else budget.eps_double_prime(n if self.__definettiK is None else self.__definettiK)
        return RateReport(n=n, d=d, mode=mode,
                          r_asymptotic=max(r0, 0.0),
                          r_collective=max(evaluation.collective.rate, 0.0),
                          r_coherent=max(coherent_raw, 0.0),
                          i_ab=evaluation.asymptotic.i_ab, i_be=evaluation.asymptotic.i_be,
                          vmod_opt=evaluation.vmod, k_opt=evaluation.k, t=worst.t,
                          x_max=worst.x_max, y_max=worst.y_max, z_min=worst.z_min,
                          eps_prime=budget.eps_prime, eps_double_prime=eps_double_prime,
                          r_asymptotic_raw=r0, r_collective_raw=evaluation.collective.rate,
                          r_coherent_raw=coherent_raw, r_legacy_raw=evaluation.legacy.rate, aborted=aborted,
                          reason=Messages().NO_POSITIVE_RATE if aborted else '')

    def __objective(self, log_vmod: float, scenario: ScenarioParams, n: int, budget: SecurityBudget,
                    mode: str) -> float:
        try:
            evaluation = self.evaluate_analytic(scenario.with_modulation(math.exp(log_vmod)), n, budget)
        except QKDError as error:
            self.__logger.debug(f'Modulation {math.exp(log_vmod):.4g} skipped: {error}')
            return -math.inf
        return evaluation.rate(mode)

    def __failedReport(self, n: int, d: int, budget: SecurityBudget, mode: str) -> RateReport:
        nan = math.nan
        return RateReport(n=n, d=d, mode=mode, r_asymptotic=0.0, r_collective=0.0, r_coherent=0.0,
                          i_ab=nan, i_be=nan, vmod_opt=nan, k_opt=0, t=nan, x_max=nan, y_max=nan, z_min=nan,
                          eps_prime=budget.eps_prime, eps_double_prime=nan, aborted=True,
                          reason=Messages().NO_POSITIVE_RATE)

    @staticmethod
    def __checkMode(mode: str) -> None:
        if mode not in MODES:
            raise DomainError(Messages().BAD_ANALYSIS_MODE.format(mode))
