import math
import numpy as np
from Tests.TestBase import QKDTesterBase
from Config.Exceptions import BlockTooSmall, DomainError
from Estimation.EmpiricalMoments import EmpiricalMoments
from Estimation.TailBounds import TailBounds
from Estimation.WorstCase import WorstCaseEstimator
from Protocol.Displacement import Displacement, DisplacementCoeffs
from Protocol.RoundBatch import RoundBatch
from Protocol.Scenario import ScenarioParams
from Protocol.Simulator import RoundSimulator


class ParamEstTest(QKDTesterBase):
    def __init__(self) -> None:
        super().__init__()
        self.__simulator = RoundSimulator()

    def test_confidenceWidthAtBoundary(self) -> bool:
        eps = 1e-3
        n = 8 * math.log(8 / eps)
        return self._close('t', TailBounds.confidence_t(n, eps), 1.0, rtol=1e-12)

    def test_confidenceWidthReference(self) -> bool:
        return self._close('t', TailBounds.confidence_t(10 ** 9, self._constants.EPS),
                           self._constants.T_REFERENCE, rtol=1e-3)

    def test_quadrupledBlockHalvesWidth(self) -> bool:
        t = TailBounds.confidence_t(10 ** 6, 1e-10)
        return self._close('t/2', TailBounds.confidence_t(4 * 10 ** 6, 1e-10), t / 2, rtol=1e-12)

    def test_smallBlockShouldThrowException(self) -> bool:
        return self._raises(BlockTooSmall, TailBounds.confidence_t, 100, 1e-21, strict=True) \
            and TailBounds.confidence_t(100, 1e-21) > 1

    def test_badEpsilonShouldThrowException(self) -> bool:
        return self._raises(DomainError, TailBounds.confidence_t, 1000, 0.0) \
            and self._raises(DomainError, TailBounds.confidence_t, 1000, 1.0)

    def test_chiSquaredTailsRespectBound(self) -> bool:
        trials = self._constants.trials(self._constants.TAIL_TRIALS)
        for n in self._constants.TAIL_BLOCK_SIZES:
            for t in self._constants.TAIL_WIDTHS:
                check = TailBounds.chi2_tail_check(n, t, trials, self._constants.SEED + n)
                if not check.within_bound(3.0):
                    print(f'n={n} t={t}: upper {check.upper_rate} lower {check.lower_rate} bound {check.bound}')
                    return False
        return True

    def test_chiSquaredReferencePoint(self) -> bool:
        check = TailBounds.chi2_tail_check(100, 0.4, self._constants.trials(self._constants.TAIL_TRIALS), 1)
        return self._close('bound', check.bound, math.exp(-2), rtol=1e-12) \
            and check.upper_rate < check.bound and check.lower_rate < check.bound

    def test_wideIntervalNeverFails(self) -> bool:
        check = TailBounds.chi2_tail_check(100, 100.0, 1000, 2)
        return check.upper_rate == 0.0 and check.lower_rate == 0.0

    def test_exactFactorsAreTighterThanTailBound(self) -> bool:
        n, eps = 10 ** 6, 1e-10
        lower, upper = TailBounds.exact_factors(n, eps)
        t = TailBounds.confidence_t(n, eps)
        return 1 - t < lower < 1 < upper < 1 + t

    def test_mergedHalvesEqualFullBlock(self) -> bool:
        batch = self.__simulator.sample_rounds(self._constants.SYMMETRIC.with_block_size(20000), 4)
        full = EmpiricalMoments.accumulate(batch)
        merged = EmpiricalMoments.accumulate(batch.slice(0, 7000)).merge(
            EmpiricalMoments.accumulate(batch.slice(7000, 20000)))
        return merged.n == full.n and np.allclose(merged.second_moments(), full.second_moments(), rtol=1e-12) \
            and self._close('plus', merged.mean_plus_sq, full.mean_plus_sq, rtol=1e-12)

    def test_chunkStreamEqualsBatch(self) -> bool:
        params = self._constants.SYMMETRIC.with_block_size(5000)
        simulator = RoundSimulator(workers=2, chunk_size=1024)
        streamed = EmpiricalMoments.accumulate(simulator.stream_chunks(params, 6))
        whole = EmpiricalMoments.accumulate(simulator.sample_rounds(params, 6))
        return np.allclose(streamed.second_moments(), whole.second_moments(), rtol=1e-12)

    def test_zeroBatchHasZeroMoments(self) -> bool:
        zeros = np.zeros((50, 2))
        moments = EmpiricalMoments.accumulate(RoundBatch(zeros, zeros.copy(), zeros.copy()))
        return not np.any(moments.second_moments()) and moments.mean_plus_sq == 0.0

    def test_emptyBatchShouldThrowException(self) -> bool:
        return self._raises(DomainError, EmpiricalMoments.accumulate, [])

    def test_relaySecondMomentMatchesNu(self) -> bool:
        params = self._constants.SYMMETRIC.with_block_size(self._constants.MC_ROUNDS)
        moments = EmpiricalMoments.accumulate(self.__simulator.stream_chunks(params, self._constants.SEED))
        nu = params.relay_variance
        error = nu * math.sqrt(2 / params.n)
        return self._within('<q_Z^2>', moments.mean_qz2, nu, error) \
            and self._within('<p_Z^2>', moments.mean_pz2, nu, error) \
            and self._within('<q_Z p_Z>', moments.mean_qzpz, 0.0, nu / math.sqrt(params.n))

    def test_crossMomentEstimatorIdentity(self) -> bool:
        batch = self.__simulator.sample_rounds(self._constants.ASYMMETRIC.with_block_size(30000), 12)
        moments = EmpiricalMoments.accumulate(batch)
        direct = float(np.mean(batch.qpZ[:, 0] * batch.qpZ[:, 1]))
        return self._close('estimator', moments.qzpz_covariance_estimator(), direct, rtol=1e-9, atol=1e-12) \
            and moments.is_consistent()

    def test_crossMomentOfIdenticalQuadratures(self) -> bool:
        rng = np.random.default_rng(3)
        q = rng.standard_normal(1000)
        relay = np.column_stack([q, q])
        zeros = np.zeros((1000, 2))
        moments = EmpiricalMoments.accumulate(RoundBatch(zeros, zeros.copy(), relay))
        return self._close('estimator', moments.qzpz_covariance_estimator(), float(np.mean(q * q)), rtol=1e-12)

    def test_zeroWidthKeepsEstimates(self) -> bool:
        params = self._constants.ASYMMETRIC
        moments = EmpiricalMoments.from_covariance(RoundSimulator.expected_covariance(params), 1000)
        coeffs = Displacement.coeffs_from_moments(moments)
        plain = WorstCaseEstimator.widen(moments, coeffs, 1.0, 1.0, 0.0, 0.5)
        return self._close('x', plain.x_max, moments.mean_x(coeffs), rtol=1e-12) \
            and self._close('z', plain.z_min, abs(plain.z_weighted), rtol=1e-12)

    def test_clonerWeightsClosedForm(self) -> bool:
        params = self._constants.ASYMMETRIC
        nu = params.relay_variance
        coeffs = Displacement.coeffs_from_moments(RoundSimulator.expected_covariance(params))
        expected = -math.sqrt(params.tau_a * params.tau_b) / 4 * params.vmod_a ** 2 / nu ** 2
        return self._close('w1', coeffs.w1, expected, rtol=1e-10) \
            and self._close('w2', coeffs.w2, expected, rtol=1e-10) \
            and self._close('w3', coeffs.w3, 0.0, atol=1e-14)

    def test_clonerWorstCaseClosedForm(self) -> bool:
        params = self._constants.ASYMMETRIC
        n, eps = 10 ** 9, self._constants.EPS
        nu, vmod = params.relay_variance, params.vmod_a
        moments = EmpiricalMoments.from_covariance(RoundSimulator.expected_covariance(params), n)
        worst = WorstCaseEstimator.worst_case_cm(moments, Displacement.coeffs_from_moments(moments), eps)
        t = TailBounds.confidence_t(n, eps)
        z_min = math.sqrt(params.tau_a * params.tau_b) * vmod ** 2 / (2 * nu * (1 + t))
        x_max = (vmod - params.tau_a * vmod ** 2 / (2 * nu)) / (1 - t)
        y_max = (vmod - params.tau_b * vmod ** 2 / (2 * nu)) / (1 - t)
        return self._close('z_min', worst.z_min, z_min, rtol=1e-10) \
            and self._close('x_max', worst.x_max, x_max, rtol=1e-10) \
            and self._close('y_max', worst.y_max, y_max, rtol=1e-10)

    def test_worstCaseTightensWithBlockSize(self) -> bool:
        params = self._constants.SYMMETRIC
        covariance = RoundSimulator.expected_covariance(params)
        previous = None
        for n in (10 ** 4, 10 ** 6, 10 ** 8, 10 ** 10):
            moments = EmpiricalMoments.from_covariance(covariance, n)
            worst = WorstCaseEstimator.worst_case_cm(moments, Displacement.coeffs_from_moments(moments), 1e-10)
            if previous is not None and not (worst.x_max < previous.x_max and worst.z_min > previous.z_min):
                return False
            previous = worst
        return True

    def test_exactIntervalIsTighter(self) -> bool:
        params = self._constants.SYMMETRIC
        moments = EmpiricalMoments.from_covariance(RoundSimulator.expected_covariance(params), 10 ** 6)
        coeffs = Displacement.coeffs_from_moments(moments)
        tail = WorstCaseEstimator.worst_case_cm(moments, coeffs, 1e-10, 'tail')
        exact = WorstCaseEstimator.worst_case_cm(moments, coeffs, 1e-10, 'exact')
        return exact.x_max < tail.x_max and exact.z_min > tail.z_min

    def test_unknownIntervalShouldThrowException(self) -> bool:
        params = self._constants.SYMMETRIC
        moments = EmpiricalMoments.from_covariance(RoundSimulator.expected_covariance(params), 10 ** 6)
        return self._raises(DomainError, WorstCaseEstimator.worst_case_cm, moments,
                            Displacement.coeffs_from_moments(moments), 1e-10, 'median')

    def test_mergedMomentsGiveSameBound(self) -> bool:
        batch = self.__simulator.sample_rounds(self._constants.ASYMMETRIC.with_block_size(40000), 21)
        full = EmpiricalMoments.accumulate(batch)
        merged = EmpiricalMoments.accumulate(batch.slice(0, 25000)).merge(
            EmpiricalMoments.accumulate(batch.slice(25000, 40000)))
        first = WorstCaseEstimator.worst_case_cm(full, Displacement.coeffs_from_moments(full), 0.01)
        second = WorstCaseEstimator.worst_case_cm(merged, Displacement.coeffs_from_moments(merged), 0.01)
        return self._close('x', first.x_max, second.x_max, rtol=1e-10) \
            and self._close('z', first.z_min, second.z_min, rtol=1e-10)

    def test_unionEventCalibration(self) -> bool:
        constants = self._constants
        blocks = constants.trials(constants.CALIBRATION_BLOCKS)
        params = constants.ASYMMETRIC.with_block_size(constants.CALIBRATION_BLOCK)
        rate = WorstCaseEstimator.union_failure_rate(params, constants.CALIBRATION_EPS_PE, blocks, constants.SEED)
        eps = constants.CALIBRATION_EPS_PE
        return rate <= eps + 3 * math.sqrt(eps * (1 - eps) / blocks)

    def test_groundTruthOnRandomScenarios(self) -> bool:
        constants = self._constants
        rng = np.random.default_rng(constants.SEED)
        n = constants.MC_ROUNDS
        sigmas = constants.SIGMAS
        for index in range(constants.RANDOM_SCENARIOS):
            params = ScenarioParams.from_excess_noise(vmod=float(rng.uniform(1, 30)),
                                                      tau_a=float(rng.uniform(0.5, 0.99)),
                                                      tau_b=float(rng.uniform(0.5, 0.99)),
                                                      xi_a=float(rng.uniform(0, 0.05)),
                                                      xi_b=float(rng.uniform(0, 0.05)), n=n)
            if not self.__matchesClosedForms(params, seed=constants.SEED + index, sigmas=sigmas):
                print(f'Scenario {index}: {params}')
                return False
        return True

    def __matchesClosedForms(self, params: ScenarioParams, seed: int, sigmas: float) -> bool:
        n, vmod, nu = params.n, params.vmod_a, params.relay_variance
        moments = EmpiricalMoments.accumulate(self.__simulator.stream_chunks(params, seed))
        coeffs = Displacement.coeffs_from_moments(moments)
        truth = Displacement.cloner_coefficients(params.tau_a, params.tau_b, vmod, nu)

        x = vmod - params.tau_a * vmod ** 2 / (2 * nu)
        y = vmod - params.tau_b * vmod ** 2 / (2 * nu)
        z = math.sqrt(params.tau_a * params.tau_b) / 2 * vmod ** 2 / nu
        prepared_relay = -math.sqrt(params.tau_a / 2) * vmod
        # slope error of a least-squares fit: residual / (sqrt(n) regressor)
        slope_a = math.sqrt(x / (n * nu))
        slope_b = math.sqrt(y / (n * nu))

        checks = (
            self._within('nu', moments.mean_qz2, nu, nu * math.sqrt(2 / n), sigmas),
            self._within('<q\'_A q_Z>', moments.second_moments()[0, 4], prepared_relay,
                         math.sqrt((vmod * nu + prepared_relay ** 2) / n), sigmas),
            self._within('u_qA', coeffs.u_qA, truth.u_qA, slope_a, sigmas),
            self._within('v_pA', coeffs.v_pA, truth.v_pA, slope_a, sigmas),
            self._within('u_qB', coeffs.u_qB, truth.u_qB, slope_b, sigmas),
            self._within('v_pB', coeffs.v_pB, truth.v_pB, slope_b, sigmas),
            self._within('x', moments.mean_x(coeffs), x, x / math.sqrt(n), sigmas),
            self._within('y', moments.mean_y(coeffs), y, y / math.sqrt(n), sigmas),
            self._within('z', moments.mean_z(coeffs), z, math.sqrt((x * y + z * z) / (2 * n)), sigmas),
        )
        return all(checks) and self.__matchesWeightsAndWorstCase(params, moments, coeffs, truth, sigmas)

    def __matchesWeightsAndWorstCase(self, params: ScenarioParams, moments: EmpiricalMoments,
                                     coeffs: DisplacementCoeffs, truth: DisplacementCoeffs, sigmas: float) -> bool:
        n, vmod, nu = params.n, params.vmod_a, params.relay_variance
        x = vmod - params.tau_a * vmod ** 2 / (2 * nu)
        y = vmod - params.tau_b * vmod ** 2 / (2 * nu)
        z = math.sqrt(params.tau_a * params.tau_b) / 2 * vmod ** 2 / nu
        w = -math.sqrt(params.tau_a * params.tau_b) / 4 * vmod ** 2 / nu ** 2
        slope_a = math.sqrt(x / (n * nu))
        slope_b = math.sqrt(y / (n * nu))

        # first-order error of a product of two fitted slopes, correlations bounded by summing
        w_error = (abs(truth.u_qB) * slope_a + abs(truth.u_qA) * slope_b + slope_a * slope_b) / 2
        w3_error = (abs(truth.u_qA) * slope_b + abs(truth.u_qB) * slope_a
                    + abs(truth.v_pB) * slope_a + abs(truth.v_pA) * slope_b + 2 * slope_a * slope_b) / 2

        eps = self._constants.EPS
        t = TailBounds.confidence_t(n, eps)
        worst = WorstCaseEstimator.worst_case_cm(moments, coeffs, eps)
        z_error = nu * (2 * w_error + w3_error) + 2 * abs(w) * nu * math.sqrt(2 / n)

        checks = (
            self._within('w1', coeffs.w1, w, w_error, sigmas),
            self._within('w2', coeffs.w2, w, w_error, sigmas),
            self._within('w3', coeffs.w3, 0.0, w3_error, sigmas),
            self._within('t', worst.t, t, 1e-12, sigmas),
            self._within('x_max', worst.x_max, x / (1 - t), x / (math.sqrt(n) * (1 - t)), sigmas),
            self._within('y_max', worst.y_max, y / (1 - t), y / (math.sqrt(n) * (1 - t)), sigmas),
            self._within('z_min', worst.z_min, z / (1 + t), z_error, sigmas),
        )
        return all(checks)
