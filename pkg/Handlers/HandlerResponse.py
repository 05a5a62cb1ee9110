from typing import Dict, Union
from Config.Exceptions import QKDError


class HandlerResponse:
    def __init__(self, row: Dict[str, object], error: QKDError = None) -> None:
        self.__row = row
        self.__error = error
        self.__success = False if error else True

    @property
    def row(self) -> Dict[str, object]:
        return self.__row

    def error(self) -> Union[QKDError, None]:
        return self.__error

    @property
    def success(self) -> bool:
        return self.__success
