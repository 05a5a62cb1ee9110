import sys
from Tests.GaussianCoreTests import GaussianCoreTest
from Tests.ProtocolSimTests import ProtocolSimTest
from Tests.ParamEstTests import ParamEstTest
from Tests.KeyRateTests import KeyRateTest
from Tests.MinEntropyTests import MinEntropyTest
from Tests.RunnerTests import RunnerTest


if __name__ == '__main__':
    results = []
    for tester in (GaussianCoreTest(), ProtocolSimTest(), ParamEstTest(), KeyRateTest(), MinEntropyTest(),
                   RunnerTest()):
        results.append(tester.run())
    sys.exit(0 if all(results) else 1)
