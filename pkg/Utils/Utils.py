import math
from typing import List
import numpy as np
from Config.Exceptions import ConfigError, DomainError
from Config.Messages import Messages


class Utils:
    @classmethod
    def db_to_transmissivity(cls, loss_db: float) -> float:
        if loss_db < 0:
            raise DomainError(Messages().BAD_SCENARIO_FIELD.format('loss_db', loss_db))
        return 10 ** (-loss_db / 10)

    @classmethod
    def transmissivity_to_db(cls, tau: float) -> float:
        if not 0 < tau <= 1:
            raise DomainError(Messages().BAD_TRANSMISSIVITY.format(tau))
        return -10 * math.log10(tau)

    @classmethod
    def parse_sweep(cls, text: str) -> List[int]:
        """Block sizes from '1e6,1e7' or 'logspace:6:10:9' (exponents of ten, point count)."""
        text = text.strip()
        try:
            if text.startswith('logspace:'):
                _, start, stop, count = text.split(':')
                values = np.logspace(float(start), float(stop), int(count))
            else:
                values = [float(item) for item in text.split(',') if item.strip() != '']
            sizes = sorted({int(round(value)) for value in values})
        except ValueError:
            raise ConfigError(Messages().BAD_SWEEP.format(text))

        if len(sizes) == 0 or sizes[0] < 1:
            raise ConfigError(Messages().BAD_SWEEP.format(text))
        return sizes


class CompensatedSum:
    """Elementwise Neumaier summation of equally shaped numpy arrays."""

    def __init__(self, shape) -> None:
        self.__sum = np.zeros(shape)
        self.__compensation = np.zeros(shape)

    def add(self, values) -> None:
        values = np.asarray(values, dtype=float)
        total = self.__sum + values
        bigger = np.abs(self.__sum) >= np.abs(values)
        self.__compensation += np.where(bigger, (self.__sum - total) + values, (values - total) + self.__sum)
        self.__sum = total

    def merge(self, other: 'CompensatedSum') -> None:
        self.add(other.__sum)
        self.add(other.__compensation)

    @property
    def value(self) -> np.ndarray:
        return self.__sum + self.__compensation

    def copy(self) -> 'CompensatedSum':
        clone = CompensatedSum(self.__sum.shape)
        clone.__sum = self.__sum.copy()
        clone.__compensation = self.__compensation.copy()
        return clone
