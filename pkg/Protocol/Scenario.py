import math
from numbers import Integral
from dataclasses import dataclass, replace
from Config.Configs import VConfigs
from Config.Exceptions import DomainError
from Config.Messages import Messages

_config = VConfigs()


@dataclass(frozen=True)
class ScenarioParams:
    """One operating point: modulation, the two entangling-cloner links and the post-processing constants.

    omega_* is the thermal variance Eve injects on each link; the matching
    excess noise is xi = (1 - tau)(omega - 1).
    """
    vmod_a: float
    vmod_b: float
    tau_a: float
    tau_b: float
    omega_a: float = 1.0
    omega_b: float = 1.0
    n: int = 1
    d: int = _config.ADC_BITS
    beta: float = _config.RECONCILIATION_EFFICIENCY
    p_ec: float = _config.EC_SUCCESS_PROBABILITY

    def __post_init__(self) -> None:
        messages = Messages()
        checks = (
            ('vmod_a', self.vmod_a, self.vmod_a >= 0),
            ('vmod_b', self.vmod_b, self.vmod_b >= 0),
            ('tau_a', self.tau_a, 0 <= self.tau_a <= 1),
            ('tau_b', self.tau_b, 0 <= self.tau_b <= 1),
            ('omega_a', self.omega_a, self.omega_a >= 1),
            ('omega_b', self.omega_b, self.omega_b >= 1),
            ('n', self.n, isinstance(self.n, Integral) and self.n >= 1),
            ('d', self.d, isinstance(self.d, Integral) and 1 <= self.d <= 16),
            ('beta', self.beta, 0 < self.beta <= 1),
            ('p_ec', self.p_ec, 0 < self.p_ec <= 1),
        )
        for name, value, valid in checks:
            if not valid or (isinstance(value, float) and math.isnan(value)):
                raise DomainError(messages.BAD_SCENARIO_FIELD.format(name, value))

    @classmethod
    def from_excess_noise(cls, vmod: float, tau_a: float, tau_b: float, xi_a: float = 0.0,
                          xi_b: float = 0.0, **kwargs) -> 'ScenarioParams':
        """Same modulation on both sides, cloner variances derived from the excess noises."""
        return cls(vmod_a=vmod, vmod_b=vmod, tau_a=tau_a, tau_b=tau_b,
                   omega_a=cls.__omegaFromNoise(tau_a, xi_a, 'xi_a'),
                   omega_b=cls.__omegaFromNoise(tau_b, xi_b, 'xi_b'), **kwargs)

    @property
    def xi_a(self) -> float:
        return (1 - self.tau_a) * (self.omega_a - 1)

    @property
    def xi_b(self) -> float:
        return (1 - self.tau_b) * (self.omega_b - 1)

    @property
    def relay_variance(self) -> float:
        """Variance of q_Z and p_Z."""
        return (self.tau_a * self.vmod_a + self.tau_b * self.vmod_b) / 2 + 1 + (self.xi_a + self.xi_b) / 2

    def with_modulation(self, vmod: float) -> 'ScenarioParams':
        return replace(self, vmod_a=vmod, vmod_b=vmod)

    def with_block_size(self, n: int) -> 'ScenarioParams':
        return replace(self, n=int(n))

    @staticmethod
    def __omegaFromNoise(tau: float, xi: float, name: str) -> float:
        if xi < 0:
            raise DomainError(Messages().BAD_SCENARIO_FIELD.format(name, xi))
        if xi == 0:
            return 1.0
        if tau >= 1:
            raise DomainError(Messages().BAD_SCENARIO_FIELD.format(name, xi))
        return 1 + xi / (1 - tau)
