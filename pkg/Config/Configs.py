from Config.Singleton import Singleton


class VConfigs(Singleton):
    """Library tunables. Run parameters live in Runner.RunConfig, not here."""

    def __init__(self) -> None:
        if not super().created:
            # Matrix checks
            self.SYMMETRY_TOLERANCE = 1e-12
            self.PHYSICALITY_TOLERANCE = 1e-9
            # relative slack per squared entry scale, see CovMatrix.physicality_tolerance
            self.CONDITIONING_TOLERANCE = 1e-14
            self.HOMODYNE_RANK_TOLERANCE = 1e-10
            # Below this distance from the vacuum value g(nu) switches to its series
            self.ENTROPY_SERIES_THRESHOLD = 1e-6
            self.MOMENTS_SINGULAR_TOLERANCE = 1e-12
            self.MOMENTS_CONSISTENCY_TOLERANCE = 1e-9

            self.ADC_BITS = 5
            self.ADC_CLIP_SIGMA = 6.5

            # Every chunk gets its own spawned seed, so results do not depend on the worker count
            self.ROUNDS_PER_CHUNK = 1 << 18
            self.SIMULATION_WORKERS = 4
            self.SWEEP_WORKERS = 4

            self.RECONCILIATION_EFFICIENCY = 0.95
            self.EC_SUCCESS_PROBABILITY = 0.99
            self.SECURITY_EPSILON = 1e-21
            self.TARGET_SECURITY = 1e-20
            self.DEFINETTI_SCALE = 50.0
            self.DEFAULT_RECONCILIATION_SIDE = 'bob'

            self.VMOD_MIN = 0.5
            self.VMOD_MAX = 200.0
            self.VMOD_GRID_POINTS = 41
            self.VMOD_XTOL = 1e-5

            self.LP_TOLERANCE = 1e-6
            self.MAX_ALPHABET_SIZE = 64

            self.CSV_SIGNIFICANT_DIGITS = 9
            self.LOG_LEVEL = 'WARNING'
            self.LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'
