from Estimation.EmpiricalMoments import EmpiricalMoments
from Handlers.AbstractHandler import AbstractHandler
from KeyRate.RateReport import RateReport
from KeyRate.SecurityBudget import SecurityBudget
from Protocol.Simulator import RoundSimulator


class SimulatedPointHandler(AbstractHandler):
    """Picks the modulation and energy-test size on the analytic model, then
    recomputes every reported quantity from a simulated block at that point."""

    def _computeReport(self, n: int, mode: str, budget: SecurityBudget) -> RateReport:
        planned = self.optimizer.optimize_rate(self.config.scenario, n, budget, mode,
                                               optimize_vmod=self.config.optimize_vmod)
        if planned.aborted and planned.k_opt == 0:
            return planned

        params = self.config.scenario.with_modulation(planned.vmod_opt).with_block_size(n)
        # one worker thread per sweep process, the sweep already runs points in parallel
        simulator = RoundSimulator(workers=1)
        moments = EmpiricalMoments.accumulate(simulator.stream_chunks(params, self.config.seed))
        k = planned.k_opt if planned.k_opt > 0 else None
        evaluation = self.optimizer.evaluate_moments(params, moments, budget, k=k)
        return self.optimizer.report(evaluation, n, params.d, budget, mode)
