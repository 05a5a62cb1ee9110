import math
import numpy as np
from Config.Configs import VConfigs
from Config.Exceptions import DegenerateInput, DomainError, UsageError
from Config.Messages import Messages
from Protocol.RoundBatch import RoundBatch


class Discretizer:
    """Uniform ADC: each quadrature goes to one of 2^d bins spanning +-clip_sigma empirical deviations."""

    def __init__(self, d: int = None, clip_sigma: float = None) -> None:
        config = VConfigs()
        self.__d = config.ADC_BITS if d is None else d
        self.__clipSigma = config.ADC_CLIP_SIGMA if clip_sigma is None else clip_sigma
        if not 1 <= self.__d <= 16:
            raise DomainError(Messages().BAD_ADC_BITS.format(self.__d))
        if not self.__clipSigma > 0:
            raise DomainError(Messages().BAD_SCENARIO_FIELD.format('clip_sigma', self.__clipSigma))

    @property
    def bins(self) -> int:
        return 1 << self.__d

    def adc_discretize(self, batch: RoundBatch) -> RoundBatch:
        if not batch.displaced:
            raise UsageError(Messages().NOT_DISPLACED)
        return batch.replace(xbar=self.__symbols(batch.qpA, 'qpA'),
                             ybar=self.__symbols(batch.qpB, 'qpB'))

    def bin_index(self, values: np.ndarray, name: str = 'values') -> np.ndarray:
        centered = values - np.mean(values)
        sigma = float(np.std(centered))
        if sigma == 0:
            raise DegenerateInput(Messages().DEGENERATE_COLUMN.format(name))
        half_range = self.__clipSigma * sigma
        index = np.floor((centered + half_range) / (2 * half_range) * self.bins)
        return np.clip(index, 0, self.bins - 1).astype(np.int64)

    def __symbols(self, quadratures: np.ndarray, name: str) -> np.ndarray:
        q_bins = self.bin_index(quadratures[:, 0], f'{name}.q')
        p_bins = self.bin_index(quadratures[:, 1], f'{name}.p')
        return q_bins * self.bins + p_bins

    @classmethod
    def shannon_entropy(cls, symbols: np.ndarray) -> float:
        counts = np.bincount(np.asarray(symbols, dtype=np.int64))
        probabilities = counts[counts > 0] / len(symbols)
        return float(-np.sum(probabilities * np.log2(probabilities)))

    def entropy_reference(self, sigma_q: float, sigma_p: float) -> float:
        """Fine-bin estimate of H(xbar) for independent Gaussian quadratures: h(q) + h(p) - 2 log2(width)."""
        total = 0.0
        for sigma in (sigma_q, sigma_p):
            width = 2 * self.__clipSigma * sigma / self.bins
            total += 0.5 * math.log2(2 * math.pi * math.e * sigma * sigma) - math.log2(width)
        return total
