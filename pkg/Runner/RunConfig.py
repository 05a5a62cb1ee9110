import os
from dataclasses import dataclass, replace
from typing import Callable, Dict, Optional, Tuple
from dotenv import dotenv_values
from Config.Configs import VConfigs
from Config.Exceptions import ConfigError, QKDError
from Config.Messages import Messages
from KeyRate.Holevo import SIDES
from KeyRate.SecurityBudget import SecurityBudget
from Protocol.Scenario import ScenarioParams
from Runner.Presets import PRESETS
from Utils.Utils import Utils

ANALYSIS_MODES = ('collective', 'coherent', 'both')
RUN_MODES = ('simulate', 'analytic')
KNOWN_KEYS = ('PRESET', 'VMOD', 'OPTIMIZE_VMOD', 'TAU_A', 'TAU_B', 'LOSS_A_DB', 'LOSS_B_DB', 'XI_A', 'XI_B',
              'ADC_BITS', 'BETA', 'P_EC', 'RECONCILIATION_SIDE', 'ANALYSIS_MODE', 'MODE', 'SWEEP',
              'TARGET_SECURITY', 'EPSILON', 'EPS_S', 'EPS_EC', 'EPS_PE', 'ENERGY_TEST_K', 'DEFINETTI_K',
              'SEED', 'OUTPUT', 'WORKERS')


@dataclass(frozen=True)
class RunConfig:
    """Everything one sweep needs. Built from a KEY=value file and command-line overrides."""
    scenario: ScenarioParams
    sweep: Tuple[int, ...]
    attack_mode: str = 'explicit'
    preset: str = ''
    analysis_mode: str = 'both'
    mode: str = 'analytic'
    seed: int = 0
    output: str = 'rates.csv'
    workers: int = VConfigs().SWEEP_WORKERS
    optimize_vmod: bool = True
    reconciliation_side: str = VConfigs().DEFAULT_RECONCILIATION_SIDE
    target_security: float = VConfigs().TARGET_SECURITY
    eps: float = VConfigs().SECURITY_EPSILON
    eps_s: float = VConfigs().SECURITY_EPSILON
    eps_ec: float = VConfigs().SECURITY_EPSILON
    eps_pe: float = VConfigs().SECURITY_EPSILON
    energy_test_k: Optional[int] = None
    definetti_k: Optional[float] = None

    def __post_init__(self) -> None:
        messages = Messages()
        if len(self.sweep) == 0 or list(self.sweep) != sorted(set(self.sweep)):
            raise ConfigError(messages.BAD_SWEEP.format(self.sweep))
        if self.analysis_mode not in ANALYSIS_MODES:
            raise ConfigError(messages.BAD_ANALYSIS_MODE.format(self.analysis_mode))
        if self.mode not in RUN_MODES:
            raise ConfigError(messages.RUN_MODE.format(self.mode))
        if self.reconciliation_side not in SIDES:
            raise ConfigError(messages.BAD_SIDE.format(self.reconciliation_side))
        if self.seed < 0:
            raise ConfigError(messages.BAD_SEED.format(self.seed))
        if self.workers < 1:
            raise ConfigError(messages.BAD_VALUE.format('WORKERS', self.workers, 'must be >= 1'))
        self.collective_budget()

    @property
    def modes(self) -> Tuple[str, ...]:
        return ('collective', 'coherent') if self.analysis_mode == 'both' else (self.analysis_mode,)

    def collective_budget(self) -> SecurityBudget:
        try:
            return SecurityBudget(eps=self.eps, eps_s=self.eps_s, eps_ec=self.eps_ec, eps_pe=self.eps_pe,
                                  p=self.scenario.p_ec)
        except QKDError as error:
            raise ConfigError(error.message)

    def coherent_budget(self, n: int) -> SecurityBudget:
        """Equal split reaching the target eps'' with K = n unless DEFINETTI_K is set."""
        k = n if self.definetti_k is None else self.definetti_k
        return SecurityBudget.budget_for_target(self.target_security, k, p=self.scenario.p_ec)

    def budget_for(self, mode: str, n: int) -> SecurityBudget:
        return self.coherent_budget(n) if mode == 'coherent' else self.collective_budget()

    @classmethod
    def from_file(cls, path: str, overrides: Dict[str, str] = None) -> 'RunConfig':
        if not os.path.isfile(path):
            raise ConfigError(Messages().MISSING_FILE.format(path))
        values = {key: value for key, value in dotenv_values(path).items() if value is not None}
        values.update(overrides or {})
        return cls.from_mapping(values)

    @classmethod
    def from_mapping(cls, values: Dict[str, str]) -> 'RunConfig':
        messages = Messages()
        values = {key.strip().upper(): str(value).strip() for key, value in values.items()}
        for key in values:
            if key not in KNOWN_KEYS:
                raise ConfigError(messages.UNKNOWN_KEY.format(key))

        preset = None
        if values.get('PRESET'):
            preset = PRESETS.get(values['PRESET'])
            if preset is None:
                raise ConfigError(messages.UNKNOWN_PRESET.format(values['PRESET'], ', '.join(PRESETS)))

        tau_a = cls.__transmissivity(values, 'TAU_A', 'LOSS_A_DB', preset.tau_a if preset else None)
        tau_b = cls.__transmissivity(values, 'TAU_B', 'LOSS_B_DB', preset.tau_b if preset else None)
        if tau_a is None or tau_b is None:
            raise ConfigError(messages.BAD_VALUE.format('TAU_A/TAU_B', None, 'no preset and no transmissivity'))

        get = cls.__getter(values)
        try:
            scenario = ScenarioParams.from_excess_noise(
                vmod=get('VMOD', float, 10.0),
                tau_a=tau_a, tau_b=tau_b,
                xi_a=get('XI_A', float, preset.xi_a if preset else 0.0),
                xi_b=get('XI_B', float, preset.xi_b if preset else 0.0),
                d=get('ADC_BITS', int, preset.d if preset else VConfigs().ADC_BITS),
                beta=get('BETA', float, preset.beta if preset else VConfigs().RECONCILIATION_EFFICIENCY),
                p_ec=get('P_EC', float, preset.p_ec if preset else VConfigs().EC_SUCCESS_PROBABILITY))
        except QKDError as error:
            raise ConfigError(error.message)

        epsilon = get('EPSILON', float, VConfigs().SECURITY_EPSILON)
        default_side = preset.reconciliation_side if preset else VConfigs().DEFAULT_RECONCILIATION_SIDE
        return cls(scenario=scenario,
                   sweep=tuple(Utils.parse_sweep(values.get('SWEEP', 'logspace:6:10:9'))),
                   attack_mode=preset.attack_mode if preset else 'explicit',
                   preset=preset.name if preset else '',
                   analysis_mode=values.get('ANALYSIS_MODE', 'both'),
                   mode=values.get('MODE', 'analytic'),
                   seed=get('SEED', int, 0),
                   output=values.get('OUTPUT', 'rates.csv'),
                   workers=get('WORKERS', int, VConfigs().SWEEP_WORKERS),
                   optimize_vmod=get('OPTIMIZE_VMOD', cls.__boolean, True),
                   reconciliation_side=values.get('RECONCILIATION_SIDE', default_side),
                   target_security=get('TARGET_SECURITY', float, VConfigs().TARGET_SECURITY),
                   eps=epsilon,
                   eps_s=get('EPS_S', float, epsilon),
                   eps_ec=get('EPS_EC', float, epsilon),
                   eps_pe=get('EPS_PE', float, epsilon),
                   energy_test_k=get('ENERGY_TEST_K', int, None),
                   definetti_k=get('DEFINETTI_K', float, None))

    def with_overrides(self, **overrides) -> 'RunConfig':
        overrides = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **overrides)

    @classmethod
    def __transmissivity(cls, values: Dict[str, str], tau_key: str, loss_key: str,
                         default: Optional[float]) -> Optional[float]:
        get = cls.__getter(values)
        if tau_key in values:
            return get(tau_key, float, default)
        if loss_key in values:
            try:
                return Utils.db_to_transmissivity(get(loss_key, float, 0.0))
            except QKDError as error:
                raise ConfigError(error.message)
        return default

    @staticmethod
    def __getter(values: Dict[str, str]) -> Callable:
        def get(key: str, kind: Callable, default):
            if key not in values or values[key] == '':
                return default
            try:
                if kind is int:
                    return int(float(values[key]))
                return kind(values[key])
            except ValueError as error:
                raise ConfigError(Messages().BAD_VALUE.format(key, values[key], error))
        return get

    @staticmethod
    def __boolean(text: str) -> bool:
        lowered = text.lower()
        if lowered in ('true', '1', 'yes'):
            return True
        if lowered in ('false', '0', 'no'):
            return False
        raise ValueError(f'not a boolean: {text}')
