import csv
import io
import math
from typing import Dict, List
from Config.Configs import VConfigs

COLUMNS = ('n', 'r_collective', 'r_coherent', 'r0', 'i_ab', 'i_be', 'vmod_opt', 'k_opt', 't',
           'x_max', 'y_max', 'z_min', 'eps_prime', 'eps_double_prime', 'seed', 'mode', 'status')
INTEGER_COLUMNS = ('n', 'k_opt', 'seed')
TEXT_COLUMNS = ('mode', 'status')

Row = Dict[str, object]


class TableWriter:
    """Plot-ready CSV: UTF-8, LF line endings, floats at a fixed number of significant digits."""

    @classmethod
    def render(cls, table: List[Row]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(COLUMNS)
        for row in table:
            writer.writerow([cls.__format(column, row.get(column)) for column in COLUMNS])
        return buffer.getvalue()

    @classmethod
    def emit(cls, table: List[Row], path: str) -> None:
        with open(path, 'w', encoding='utf-8', newline='') as file:
            file.write(cls.render(table))

    @classmethod
    def read_table(cls, path: str) -> List[Row]:
        with open(path, 'r', encoding='utf-8', newline='') as file:
            return cls.parse(file.read())

    @classmethod
    def parse(cls, text: str) -> List[Row]:
        reader = csv.DictReader(io.StringIO(text))
        table = []
        for record in reader:
            row: Row = {}
            for column in COLUMNS:
                value = record[column]
                if column in TEXT_COLUMNS:
                    row[column] = value
                elif column in INTEGER_COLUMNS:
                    row[column] = int(value)
                else:
                    row[column] = float(value)
            table.append(row)
        return table

    @classmethod
    def __format(cls, column: str, value) -> str:
        if column in TEXT_COLUMNS:
            return '' if value is None else str(value)
        if column in INTEGER_COLUMNS:
            return str(int(value))
        value = float(value)
        if math.isnan(value):
            return 'nan'
        return f'{value:.{VConfigs().CSV_SIGNIFICANT_DIGITS}g}'
