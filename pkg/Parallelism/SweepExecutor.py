import asyncio
from concurrent.futures import Executor, ProcessPoolExecutor
from enum import Enum
from typing import Dict, List, Tuple
from Handlers.AbstractHandler import AbstractHandler
from Handlers.AnalyticPointHandler import AnalyticPointHandler
from Handlers.HandlerResponse import HandlerResponse
from Handlers.SimulatedPointHandler import SimulatedPointHandler
from Runner.RunConfig import RunConfig
from Utils.Logger import get_logger

logger = get_logger(__name__)


class PointStatus(Enum):
    OK = 'OK'
    ABORT = 'ABORT'


def handler_for(config: RunConfig) -> AbstractHandler:
    if config.mode == 'simulate':
        return SimulatedPointHandler(config)
    return AnalyticPointHandler(config)


def execute_point(config: RunConfig, n: int, mode: str) -> HandlerResponse:
    """Module-level so the process pool can pickle it."""
    return handler_for(config).run(n, mode)


class SweepExecutor:
    """Dispatches the (n, mode) grid of a RunConfig to a process pool.

    Rows come back in grid order (ascending n, then collective before coherent)
    whatever order the workers finish in.
    """

    def __init__(self, config: RunConfig) -> None:
        self.__config = config

    def grid(self) -> List[Tuple[int, str]]:
        return [(n, mode) for n in self.__config.sweep for mode in self.__config.modes]

    def run(self) -> List[Dict[str, object]]:
        if self.__config.workers <= 1:
            return [self.__collect(execute_point(self.__config, n, mode)) for n, mode in self.grid()]
        return asyncio.run(self.run_async())

    async def run_async(self) -> List[Dict[str, object]]:
        with ProcessPoolExecutor(max_workers=self.__config.workers) as executor:
            responses = await self.__dispatch(executor)
        return [self.__collect(response) for response in responses]

    async def __dispatch(self, executor: Executor) -> List[HandlerResponse]:
        loop = asyncio.get_running_loop()
        tasks = [loop.run_in_executor(executor, execute_point, self.__config, n, mode) for n, mode in self.grid()]
        return list(await asyncio.gather(*tasks))

    @staticmethod
    def __collect(response: HandlerResponse) -> Dict[str, object]:
        if not response.success:
            logger.debug(f'Row n={response.row["n"]} carries error {response.error()}')
        return response.row

    @staticmethod
    def status_of(row: Dict[str, object]) -> PointStatus:
        return PointStatus.ABORT if str(row['status']).startswith(PointStatus.ABORT.value) else PointStatus.OK
