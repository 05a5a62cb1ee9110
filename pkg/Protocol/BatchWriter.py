import csv
from typing import List
import numpy as np
from Protocol.RoundBatch import RoundBatch

_QUADRATURE_COLUMNS = {
    'qpA_prime': ('q_A_prime', 'p_A_prime'),
    'qpB_prime': ('q_B_prime', 'p_B_prime'),
    'qpZ': ('q_Z', 'p_Z'),
    'qpA': ('q_A', 'p_A'),
    'qpB': ('q_B', 'p_B'),
}


class BatchWriter:
    """Offline dumps of a RoundBatch, columns in RoundBatch.COLUMN_ORDER, absent columns skipped."""

    @classmethod
    def write_csv(cls, batch: RoundBatch, path: str) -> None:
        names = cls.__presentColumns(batch)
        header: List[str] = []
        parts = []
        for name in names:
            column = batch.column(name)
            if name in _QUADRATURE_COLUMNS:
                header.extend(_QUADRATURE_COLUMNS[name])
                parts.extend([column[:, 0], column[:, 1]])
            else:
                header.append(name)
                parts.append(column)

        with open(path, 'w', encoding='utf-8', newline='') as file:
            writer = csv.writer(file, lineterminator='\n')
            writer.writerow(header)
            for values in zip(*parts):
                writer.writerow([repr(int(value)) if isinstance(value, np.integer) else repr(float(value))
                                 for value in values])

    @classmethod
    def write_npz(cls, batch: RoundBatch, path: str) -> None:
        np.savez(path, **{name: batch.column(name) for name in cls.__presentColumns(batch)})

    @classmethod
    def read_npz(cls, path: str) -> RoundBatch:
        with np.load(path) as archive:
            return RoundBatch(**{name: archive[name].copy() for name in archive.files})

    @staticmethod
    def __presentColumns(batch: RoundBatch) -> List[str]:
        return [name for name in RoundBatch.COLUMN_ORDER if batch.column(name) is not None]
