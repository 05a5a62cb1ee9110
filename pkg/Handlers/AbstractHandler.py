import math
from abc import ABC, abstractmethod
from typing import Dict
from Config.Exceptions import QKDError
from Config.Messages import Messages
from Handlers.HandlerResponse import HandlerResponse
from KeyRate.Optimizer import RateOptimizer
from KeyRate.RateReport import RateReport
from KeyRate.SecurityBudget import SecurityBudget
from Runner.RunConfig import RunConfig
from Utils.Logger import get_logger


class AbstractHandler(ABC):
    """Computes one (n, mode) row of a sweep. Failures become ABORT rows, never exceptions."""

    def __init__(self, config: RunConfig) -> None:
        self.__config = config
        self.__messages = Messages()
        self.__optimizer = RateOptimizer(side=config.reconciliation_side,
                                         definetti_k=config.definetti_k,
                                         energy_test_k=config.energy_test_k)
        self.__logger = get_logger(self.__class__.__name__)

    def run(self, n: int, mode: str) -> HandlerResponse:
        budget = None
        try:
            budget = self.config.budget_for(mode, n)
            report = self._computeReport(n, mode, budget)
        except QKDError as error:
            self.__logger.warning(self.__messages.POINT_ABORTED.format(n, mode, error))
            return HandlerResponse(self.__abortRow(n, mode, budget, str(error)), error)

        if report.aborted:
            self.__logger.info(self.__messages.POINT_ABORTED.format(n, mode, report.reason))
        self.__logger.debug(self.__messages.LEGACY_RATE.format(n, report.r_legacy_raw, report.r_collective_raw))
        return HandlerResponse(self.reportRow(report))

    @abstractmethod
    def _computeReport(self, n: int, mode: str, budget: SecurityBudget) -> RateReport:
        pass

    def reportRow(self, report: RateReport) -> Dict[str, object]:
        return {
            'n': report.n,
            'r_collective': report.r_collective,
            'r_coherent': report.r_coherent,
            'r0': report.r_asymptotic,
            'i_ab': report.i_ab,
            'i_be': report.i_be,
            'vmod_opt': report.vmod_opt,
            'k_opt': report.k_opt,
            't': report.t,
            'x_max': report.x_max,
            'y_max': report.y_max,
            'z_min': report.z_min,
            'eps_prime': report.eps_prime,
            'eps_double_prime': report.eps_double_prime,
            'seed': self.__config.seed,
            'mode': report.mode,
            'status': f'ABORT: {report.reason}' if report.aborted else 'OK',
        }

    def __abortRow(self, n: int, mode: str, budget: SecurityBudget, reason: str) -> Dict[str, object]:
        nan = math.nan
        row = {column: nan for column in ('r0', 'i_ab', 'i_be', 'vmod_opt', 't', 'x_max', 'y_max', 'z_min',
                                          'eps_prime', 'eps_double_prime')}
        row.update({'n': n, 'r_collective': 0.0, 'r_coherent': 0.0, 'k_opt': 0, 'seed': self.__config.seed,
                    'mode': mode, 'status': f'ABORT: {reason}'})
        if budget is not None:
            row['eps_prime'] = budget.eps_prime
        return row

    @property
    def config(self) -> RunConfig:
        return self.__config

    @property
    def optimizer(self) -> RateOptimizer:
        return self.__optimizer
