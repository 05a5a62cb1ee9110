import math
from dataclasses import dataclass, asdict
from typing import Dict


@dataclass(frozen=True)
class RateReport:
    """Optimized rates at one block size.

    Reported rates are clamped at zero and `aborted` is set when no positive
    key is possible; the *_raw fields keep the unclamped values. i_be is
    Eve's information on whichever variable is reconciled. r_legacy_raw is
    the collective rate under the older correction term, for comparison.
    """
    n: int
    d: int
    mode: str
    r_asymptotic: float
    r_collective: float
    r_coherent: float
    i_ab: float
    i_be: float
    vmod_opt: float
    k_opt: int
    t: float
    x_max: float
    y_max: float
    z_min: float
    eps_prime: float
    eps_double_prime: float
    r_asymptotic_raw: float = math.nan
    r_collective_raw: float = math.nan
    r_coherent_raw: float = math.nan
    r_legacy_raw: float = math.nan
    aborted: bool = False
    reason: str = ''

    @property
    def rate(self) -> float:
        """The rate the report was optimized for."""
        return self.r_coherent if self.mode == 'coherent' else self.r_collective

    def as_dict(self) -> Dict[str, object]:
        return asdict(self)
