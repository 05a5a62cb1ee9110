from typing import Iterable, Tuple
import numpy as np
from Config.Configs import VConfigs
from Config.Exceptions import DomainError, EmptySupport
from Config.Messages import Messages

_NORMALIZATION_TOLERANCE = 1e-12


class CCState:
    """Classical-classical state: joint distribution P(x, b) as an |X| x |B| table."""

    def __init__(self, table, subnormalized: bool = False) -> None:
        messages = Messages()
        table = np.array(table, dtype=float)
        if table.ndim == 1:
            table = table.reshape(-1, 1)
        if table.ndim != 2 or table.size == 0:
            raise DomainError(messages.BAD_SHAPE.format(table.shape))

        limit = VConfigs().MAX_ALPHABET_SIZE
        if table.shape[0] > limit or table.shape[1] > limit:
            raise DomainError(messages.ALPHABET_TOO_LARGE.format(table.shape[0], table.shape[1], limit))
        if np.any(table < 0):
            raise DomainError(messages.NEGATIVE_ENTRY)

        total = float(table.sum())
        if subnormalized:
            if total > 1 + _NORMALIZATION_TOLERANCE:
                raise DomainError(messages.NOT_NORMALIZED.format(total))
        elif abs(total - 1) > _NORMALIZATION_TOLERANCE:
            raise DomainError(messages.NOT_NORMALIZED.format(total))

        table.setflags(write=False)
        self.__table = table
        self.__subnormalized = subnormalized

    @classmethod
    def random(cls, rng: np.random.Generator, size_x: int, size_b: int, sparsity: float = 0.0) -> 'CCState':
        """Dirichlet-distributed table; a fraction `sparsity` of entries is zeroed."""
        table = rng.dirichlet(np.ones(size_x * size_b))
        if sparsity > 0:
            mask = rng.random(table.shape) >= sparsity
            if mask.any():
                table = table * mask
        table = table / table.sum()
        return cls(table.reshape(size_x, size_b))

    @classmethod
    def uniform(cls, size_x: int, size_b: int = 1) -> 'CCState':
        return cls(np.full((size_x, size_b), 1 / (size_x * size_b)))

    @property
    def table(self) -> np.ndarray:
        return self.__table

    @property
    def shape(self) -> Tuple[int, int]:
        return self.__table.shape

    @property
    def size_x(self) -> int:
        return self.__table.shape[0]

    @property
    def size_b(self) -> int:
        return self.__table.shape[1]

    @property
    def subnormalized(self) -> bool:
        return self.__subnormalized

    def probability_of(self, subset: Iterable[int]) -> float:
        return float(self.__table[self.__subsetIndex(subset)].sum())

    def project(self, subset: Iterable[int]) -> Tuple['CCState', float]:
        """Renormalized restriction to x in `subset`, and the probability of landing there."""
        index = self.__subsetIndex(subset)
        p = float(self.__table[index].sum())
        if p <= 0:
            raise EmptySupport(Messages().EMPTY_SUPPORT.format(sorted(index)))
        restricted = np.zeros_like(self.__table)
        restricted[index] = self.__table[index] / p
        return CCState(restricted / restricted.sum()), p

    def trace_distance(self, other: 'CCState') -> float:
        if self.shape != other.shape:
            raise DomainError(Messages().SHAPE_MISMATCH.format(self.shape, other.shape))
        return float(np.abs(self.__table - other.__table).sum()) / 2

    def __subsetIndex(self, subset: Iterable[int]) -> list:
        index = sorted(set(int(x) for x in subset))
        if len(index) == 0 or index[0] < 0 or index[-1] >= self.size_x:
            raise DomainError(Messages().BAD_SUBSET.format(index, self.size_x))
        return index

    def __repr__(self) -> str:
        return f'CCState({self.size_x}x{self.size_b})'
