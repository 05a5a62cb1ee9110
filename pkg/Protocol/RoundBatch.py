from typing import List, Optional, Tuple
import numpy as np
from Config.Exceptions import DomainError
from Config.Messages import Messages


class RoundBatch:
    """Column store for a block of protocol rounds.

    Quadrature columns are (n, 2) float arrays holding (q, p); xbar/ybar are
    integer symbols in [0, 2^(2d)). Columns not yet computed are None.
    """
    COLUMN_ORDER: Tuple[str, ...] = ('qpA_prime', 'qpB_prime', 'qpZ', 'qpA', 'qpB', 'xbar', 'ybar')

    def __init__(self, qpA_prime: np.ndarray, qpB_prime: np.ndarray, qpZ: np.ndarray,
                 qpA: np.ndarray = None, qpB: np.ndarray = None,
                 xbar: np.ndarray = None, ybar: np.ndarray = None) -> None:
        self.__columns = {
            'qpA_prime': qpA_prime,
            'qpB_prime': qpB_prime,
            'qpZ': qpZ,
            'qpA': qpA,
            'qpB': qpB,
            'xbar': xbar,
            'ybar': ybar,
        }
        lengths = {len(column) for column in self.__columns.values() if column is not None}
        if len(lengths) > 1:
            raise DomainError(Messages().LENGTH_MISMATCH)
        for column in self.__columns.values():
            if column is not None:
                column.setflags(write=False)

    @classmethod
    def concatenate(cls, batches: List['RoundBatch']) -> 'RoundBatch':
        if len(batches) == 1:
            return batches[0]
        merged = {}
        for name in cls.COLUMN_ORDER:
            parts = [batch.column(name) for batch in batches]
            merged[name] = None if any(part is None for part in parts) else np.concatenate(parts)
        return cls(**merged)

    def column(self, name: str) -> Optional[np.ndarray]:
        return self.__columns[name]

    @property
    def qpA_prime(self) -> np.ndarray:
        return self.__columns['qpA_prime']

    @property
    def qpB_prime(self) -> np.ndarray:
        return self.__columns['qpB_prime']

    @property
    def qpZ(self) -> np.ndarray:
        return self.__columns['qpZ']

    @property
    def qpA(self) -> Optional[np.ndarray]:
        return self.__columns['qpA']

    @property
    def qpB(self) -> Optional[np.ndarray]:
        return self.__columns['qpB']

    @property
    def xbar(self) -> Optional[np.ndarray]:
        return self.__columns['xbar']

    @property
    def ybar(self) -> Optional[np.ndarray]:
        return self.__columns['ybar']

    @property
    def displaced(self) -> bool:
        return self.qpA is not None and self.qpB is not None

    @property
    def discretized(self) -> bool:
        return self.xbar is not None and self.ybar is not None

    def prepared_and_relay(self) -> np.ndarray:
        """(n, 6) matrix of (q'_A, p'_A, q'_B, p'_B, q_Z, p_Z)."""
        return np.hstack([self.qpA_prime, self.qpB_prime, self.qpZ])

    def slice(self, start: int, stop: int) -> 'RoundBatch':
        return RoundBatch(**{name: None if column is None else column[start:stop]
                             for name, column in self.__columns.items()})

    def replace(self, **columns) -> 'RoundBatch':
        values = dict(self.__columns)
        values.update(columns)
        return RoundBatch(**values)

    def __len__(self) -> int:
        return len(self.qpZ)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RoundBatch):
            return False
        for name in self.COLUMN_ORDER:
            mine, theirs = self.column(name), other.column(name)
            if (mine is None) != (theirs is None):
                return False
            if mine is not None and not np.array_equal(mine, theirs):
                return False
        return True
