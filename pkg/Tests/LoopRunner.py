import asyncio
from asyncio import AbstractEventLoop
from threading import Thread
from typing import Any, Coroutine


class LoopRunner(Thread):
    """Owns an asyncio loop in a background thread so synchronous tests can await coroutines."""

    def __init__(self, loop: AbstractEventLoop) -> None:
        self.loop = loop
        Thread.__init__(self, name='runner', daemon=True)

    def run(self) -> None:
        asyncio.set_event_loop(self.loop)
        try:
            self.loop.run_forever()
        finally:
            self.loop.close()

    def run_coroutine(self, coroutine: Coroutine) -> Any:
        """Blocks until the coroutine finishes on the runner's loop."""
        return asyncio.run_coroutine_threadsafe(coroutine, self.loop).result()

    def stop(self) -> None:
        self.loop.call_soon_threadsafe(self.loop.stop)
