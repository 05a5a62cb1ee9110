"""Collects the project's QKDTesterBase suites so pytest runs them.

A test passes exactly as in run_tests.py: the method returns True, with the
suite's _setUp/_tearDown around each call.
"""
import importlib
import inspect

import pytest

from Tests.TestBase import QKDTesterBase


def pytest_collect_file(parent, file_path):
    if file_path.parent.name == 'Tests' and file_path.name.endswith('Tests.py'):
        return QKDSuiteFile.from_parent(parent, path=file_path)
    return None


class QKDSuiteFile(pytest.File):
    def collect(self):
        module = importlib.import_module(f'Tests.{self.path.stem}')
        for name, cls in inspect.getmembers(module, inspect.isclass):
            if issubclass(cls, QKDTesterBase) and cls is not QKDTesterBase and cls.__module__ == module.__name__:
                for attr in sorted(dir(cls)):
                    if attr.startswith('test') and callable(getattr(cls, attr)):
                        yield QKDTestItem.from_parent(self, name=f'{name}::{attr}', suite=cls, method=attr)


class QKDTestItem(pytest.Item):
    def __init__(self, *, suite, method, **kwargs):
        super().__init__(**kwargs)
        self.suite = suite
        self.method = method

    def runtest(self):
        tester = self.suite()
        tester._setUp()
        try:
            result = getattr(tester, self.method)()
        finally:
            tester._tearDown()
        assert result is True, f'{self.method} returned {result!r}'

    def reportinfo(self):
        return self.path, None, self.name
