import hashlib
import math
import os
import tempfile
from Tests.TestBase import QKDTesterBase
from Config.Exceptions import ConfigError
from Handlers.AnalyticPointHandler import AnalyticPointHandler
from Parallelism.SweepExecutor import PointStatus, SweepExecutor
from Runner.Presets import PRESETS
from Runner.RunConfig import RunConfig
from Runner.TableWriter import COLUMNS, TableWriter
from Utils.Utils import Utils
import main


class RunnerTest(QKDTesterBase):
    def __init__(self) -> None:
        super().__init__()

    def test_presetTable(self) -> bool:
        expected = {
            'asymmetric-1db': (0.99, 1.0, 0.0, 0.01),
            'asymmetric-2db': (0.99, 2.0, 0.0, 0.01),
            'asymmetric-4db': (0.99, 4.0, 0.0, 0.01),
            'symmetric-0.1db': (10 ** -0.01, 0.1, 0.01, 0.01),
            'symmetric-0.3db': (10 ** -0.03, 0.3, 0.01, 0.01),
            'symmetric-0.5db': (10 ** -0.05, 0.5, 0.01, 0.01),
            'symmetric-0.55db': (10 ** -0.055, 0.55, 0.01, 0.01),
        }
        if set(PRESETS) != set(expected):
            return False
        for name, (tau_a, loss_b_db, xi_a, xi_b) in expected.items():
            preset = PRESETS[name]
            if not (math.isclose(preset.tau_a, tau_a, rel_tol=1e-12) and preset.loss_b_db == loss_b_db
                    and preset.xi_a == xi_a and preset.xi_b == xi_b and preset.beta == 0.95
                    and preset.d == 5 and preset.p_ec == 0.99):
                print(f'Preset {name} differs: {preset}')
                return False
        return True

    def test_presetBuildsScenario(self) -> bool:
        config = RunConfig.from_mapping({'PRESET': 'asymmetric-2db'})
        scenario = config.scenario
        return self._close('tau_b', scenario.tau_b, 10 ** -0.2, rtol=1e-12) \
            and self._close('xi_b', scenario.xi_b, 0.01, rtol=1e-12) \
            and scenario.xi_a == 0.0 and config.reconciliation_side == 'alice' \
            and config.sweep[0] == 10 ** 6 and config.sweep[-1] == 10 ** 10

    def test_explicitKeysOverridePreset(self) -> bool:
        config = RunConfig.from_mapping({'PRESET': 'symmetric-0.1db', 'XI_B': '0.02', 'LOSS_A_DB': '3',
                                         'RECONCILIATION_SIDE': 'bob', 'ANALYSIS_MODE': 'coherent'})
        return self._close('xi_b', config.scenario.xi_b, 0.02, rtol=1e-12) \
            and self._close('tau_a', config.scenario.tau_a, 10 ** -0.3, rtol=1e-12) \
            and config.reconciliation_side == 'bob' and config.modes == ('coherent',)

    def test_sweepParsing(self) -> bool:
        listed = Utils.parse_sweep('1e7, 1e6,1e6')
        spaced = Utils.parse_sweep('logspace:6:10:9')
        return listed == [10 ** 6, 10 ** 7] and len(spaced) == 9 and spaced[0] == 10 ** 6 and spaced[-1] == 10 ** 10

    def test_badSweepShouldThrowException(self) -> bool:
        return self._raises(ConfigError, Utils.parse_sweep, 'logspace:6:10') \
            and self._raises(ConfigError, Utils.parse_sweep, 'many') \
            and self._raises(ConfigError, Utils.parse_sweep, '0')

    def test_unknownKeyShouldThrowException(self) -> bool:
        return self._raises(ConfigError, RunConfig.from_mapping, {'PRESET': 'asymmetric-1db', 'COLOUR': 'red'})

    def test_unknownPresetShouldThrowException(self) -> bool:
        return self._raises(ConfigError, RunConfig.from_mapping, {'PRESET': 'asymmetric-9db'})

    def test_badModeShouldThrowException(self) -> bool:
        return self._raises(ConfigError, RunConfig.from_mapping, {'PRESET': 'asymmetric-1db', 'MODE': 'guess'}) \
            and self._raises(ConfigError, RunConfig.from_mapping, {'PRESET': 'asymmetric-1db', 'SEED': 'abc'})

    def test_missingFileShouldThrowException(self) -> bool:
        return self._raises(ConfigError, RunConfig.from_file, '/nonexistent/run.cfg')

    def test_configFileWithOverrides(self) -> bool:
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'run.cfg')
            with open(path, 'w', encoding='utf-8') as file:
                file.write('# asymmetric curve\nPRESET=asymmetric-1db\nSWEEP=1e8,1e9\nSEED=17\n')
            config = RunConfig.from_file(path, {'PRESET': 'asymmetric-4db'})
        return config.preset == 'asymmetric-4db' and config.sweep == (10 ** 8, 10 ** 9) and config.seed == 17

    def test_coherentBudgetMeetsTarget(self) -> bool:
        config = RunConfig.from_mapping({'PRESET': 'asymmetric-1db'})
        n = 10 ** 9
        return config.coherent_budget(n).eps_double_prime(n) <= config.target_security \
            and config.collective_budget().eps_prime < 1e-20

    def test_emptyTableIsHeaderOnly(self) -> bool:
        return TableWriter.render([]) == ','.join(COLUMNS) + '\n'

    def test_tableRoundTrip(self) -> bool:
        row = {column: 0.5 for column in COLUMNS}
        row.update({'n': 1000000, 'k_opt': 3, 'seed': 9, 'mode': 'collective', 'status': 'OK', 'z_min': math.nan})
        parsed = TableWriter.parse(TableWriter.render([row]))
        return len(parsed) == 1 and all(
            (math.isnan(parsed[0][column]) if column == 'z_min' else parsed[0][column] == row[column])
            for column in COLUMNS)

    def test_tableUsesNineSignificantDigits(self) -> bool:
        row = {column: 0.0 for column in COLUMNS}
        row.update({'n': 1, 'k_opt': 0, 'seed': 0, 'mode': 'collective', 'status': 'OK', 'r0': 1 / 3})
        text = TableWriter.render([row])
        return '0.333333333,' in text and '\r' not in text

    def test_tooSmallBlockGivesAbortRow(self) -> bool:
        config = RunConfig.from_mapping({'PRESET': 'asymmetric-1db', 'SWEEP': '10', 'WORKERS': '1'})
        response = AnalyticPointHandler(config).run(10, 'collective')
        return not response.success and SweepExecutor.status_of(response.row) is PointStatus.ABORT \
            and response.row['r_collective'] == 0.0

    def test_rowsFollowGridOrder(self) -> bool:
        config = RunConfig.from_mapping({'PRESET': 'asymmetric-1db', 'SWEEP': '1e4,1e9', 'WORKERS': '1'})
        table = SweepExecutor(config).run()
        order = [(row['n'], row['mode']) for row in table]
        return order == [(10000, 'collective'), (10000, 'coherent'),
                         (10 ** 9, 'collective'), (10 ** 9, 'coherent')]

    def test_pooledSweepMatchesInlineSweep(self) -> bool:
        config = RunConfig.from_mapping({'PRESET': 'symmetric-0.1db', 'SWEEP': '1e7,1e8,1e9', 'WORKERS': '1'})
        inline = TableWriter.render(SweepExecutor(config).run())
        pooled = TableWriter.render(self._runner.run_coroutine(
            SweepExecutor(config.with_overrides(workers=3)).run_async()))
        return inline == pooled

    def test_repeatedRunsAreByteIdentical(self) -> bool:
        config = RunConfig.from_mapping({'PRESET': 'asymmetric-1db', 'SWEEP': '1e5,1e6', 'WORKERS': '2',
                                         'MODE': 'simulate', 'ANALYSIS_MODE': 'collective', 'SEED': '5'})
        digests = set()
        for _ in range(2):
            digests.add(hashlib.sha256(TableWriter.render(SweepExecutor(config).run()).encode()).hexdigest())
        return len(digests) == 1

    def test_exitCodeForMissingConfig(self) -> bool:
        return main.main(['/nonexistent/run.cfg']) == main.EXIT_CONFIG_ERROR \
            and main.main([]) == main.EXIT_CONFIG_ERROR

    def test_exitCodeWhenEveryRowAborts(self) -> bool:
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'rates.csv')
            code = main.main(['--scenario', 'asymmetric-4db', '--sweep', '1e3,1e4', '--workers', '1', '--out', path])
            rows = TableWriter.read_table(path)
        return code == main.EXIT_ALL_INFEASIBLE and len(rows) == 4

    def test_exitCodeOnPositiveRate(self) -> bool:
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'rates.csv')
            code = main.main(['--scenario', 'asymmetric-1db', '--sweep', '1e10', '--analysis', 'collective',
                              '--workers', '1', '--out', path])
            rows = TableWriter.read_table(path)
        return code == main.EXIT_OK and rows[0]['status'] == 'OK' and rows[0]['r_collective'] > 0

    def test_exitCodeWhenOutputIsUnwritable(self) -> bool:
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, 'missing', 'rates.csv')
            code = main.main(['--scenario', 'asymmetric-4db', '--sweep', '1e3', '--workers', '1', '--out', path])
            written = os.path.exists(path)
        return code == main.EXIT_CONFIG_ERROR and not written

    def test_handlerExposesOnlyRun(self) -> bool:
        handler = AnalyticPointHandler(RunConfig.from_mapping({'PRESET': 'asymmetric-1db'}))
        return callable(handler.run) and not hasattr(handler, 'configs') and not hasattr(handler, 'messages')
