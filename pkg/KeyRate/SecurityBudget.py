import math
from dataclasses import dataclass
from Config.Configs import VConfigs
from Config.Exceptions import DomainError, InfeasibleBudget
from Config.Messages import Messages


@dataclass(frozen=True)
class SecurityBudget:
    """Split of the composable security parameter: hashing, smoothing, error correction, parameter estimation."""
    eps: float
    eps_s: float
    eps_ec: float
    eps_pe: float
    p: float = VConfigs().EC_SUCCESS_PROBABILITY

    def __post_init__(self) -> None:
        messages = Messages()
        for name in ('eps', 'eps_s', 'eps_ec', 'eps_pe'):
            value = getattr(self, name)
            if not 0 < value < 1:
                raise DomainError(messages.BAD_EPS.format(name, value))
        if not 0 < self.p <= 1:
            raise DomainError(messages.BAD_PROBABILITY.format('p', self.p))
        if not self.eps_prime < 1:
            raise InfeasibleBudget(messages.BAD_EPS.format('eps_prime', self.eps_prime))

    @property
    def eps_prime(self) -> float:
        return math.fsum((self.eps, self.eps_s, self.eps_ec, self.eps_pe))

    def eps_double_prime(self, k: float) -> float:
        """Security after the de Finetti reduction over K symmetrized blocks."""
        return k ** 4 / VConfigs().DEFINETTI_SCALE * self.eps_prime

    @classmethod
    def uniform(cls, eps: float = None, p: float = None) -> 'SecurityBudget':
        config = VConfigs()
        eps = config.SECURITY_EPSILON if eps is None else eps
        p = config.EC_SUCCESS_PROBABILITY if p is None else p
        return cls(eps=eps, eps_s=eps, eps_ec=eps, eps_pe=eps, p=p)

    @classmethod
    def budget_for_target(cls, target: float, k: float, p: float = None) -> 'SecurityBudget':
        """Equal split of eps' = 50 target / K^4, nudged down until eps'' <= target."""
        messages = Messages()
        if not 0 < target < 1 or k < 1:
            raise InfeasibleBudget(messages.INFEASIBLE_BUDGET.format(target, k))
        p = VConfigs().EC_SUCCESS_PROBABILITY if p is None else p

        share = VConfigs().DEFINETTI_SCALE * target / float(k) ** 4 / 4
        if not 0 < share < 0.25:
            raise InfeasibleBudget(messages.INFEASIBLE_BUDGET.format(target, k))
        budget = cls(eps=share, eps_s=share, eps_ec=share, eps_pe=share, p=p)
        while budget.eps_double_prime(k) > target:
            share = math.nextafter(share, 0.0)
            budget = cls(eps=share, eps_s=share, eps_ec=share, eps_pe=share, p=p)
        return budget
