from Handlers.AbstractHandler import AbstractHandler
from KeyRate.RateReport import RateReport
from KeyRate.SecurityBudget import SecurityBudget


class AnalyticPointHandler(AbstractHandler):
    """Rates from the population moments of the cloner model."""

    def _computeReport(self, n: int, mode: str, budget: SecurityBudget) -> RateReport:
        return self.optimizer.optimize_rate(self.config.scenario, n, budget, mode,
                                            optimize_vmod=self.config.optimize_vmod)
