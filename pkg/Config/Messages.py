from Config.Singleton import Singleton


class Messages(Singleton):
    def __init__(self) -> None:
        if not super().created:
            self.DOMAIN_ERROR_TITLE = 'Invalid input'
            self.NUMERICAL_ERROR_TITLE = 'Numerical failure'
            self.SINGULAR_MOMENTS_TITLE = 'Singular relay moments'
            self.DEGENERATE_INPUT_TITLE = 'Degenerate input'
            self.USAGE_ERROR_TITLE = 'Wrong call order'
            self.BLOCK_TOO_SMALL_TITLE = 'Block too small'
            self.EMPTY_SUPPORT_TITLE = 'Empty projection support'
            self.INFEASIBLE_BUDGET_TITLE = 'Infeasible security budget'
            self.CONFIG_ERROR_TITLE = 'Configuration error'

            self.NOT_SYMMETRIC = 'Covariance matrix is not symmetric (max asymmetry {:.3e})'
            self.BAD_SHAPE = 'Covariance matrix must be 2m x 2m, got {}'
            self.UNPHYSICAL = 'Unphysical covariance matrix at {}: smallest symplectic eigenvalue {:.12g}'
            self.BAD_MODE = 'Mode index {} out of range for {} modes'
            self.BAD_QUADRATURE = "Quadrature must be 'q' or 'p', got {!r}"
            self.BAD_TRANSMISSIVITY = 'Transmissivity {} outside [0, 1]'
            self.BAD_EPR_VARIANCE = 'EPR variance must be >= 1, got {}'
            self.SINGULAR_CONDITIONING = 'Conditioning on mode {} needs a non-zero measured variance'
            self.SINGULAR_HETERODYNE = 'Heterodyne conditioning matrix is singular'
            self.NU_BELOW_ONE = 'Symplectic eigenvalue {} below 1'
            self.NOT_POSITIVE_DEFINITE = 'x, y must be positive and xy > z^2, got x={}, y={}, z={}'

            self.BAD_SCENARIO_FIELD = 'Scenario field {} = {} is outside its domain'
            self.BAD_BLOCK_SIZE = 'Block size must be >= 1, got {}'
            self.BAD_SEED = 'Seed must be a non-negative integer, got {!r}'
            self.NOT_DISPLACED = 'Batch has no displaced quadratures, apply the displacement first'
            self.MISSING_COEFFS = 'Displacement coefficients are required'
            self.DEGENERATE_COLUMN = 'Column {} has zero variance, cannot discretize'
            self.BAD_ADC_BITS = 'ADC resolution must be 1..16 bits, got {}'
            self.SINGULAR_RELAY = 'Relay moments are singular: QP - C^2 = {:.3e}'
            self.LENGTH_MISMATCH = 'Batch columns have different lengths'

            self.EMPTY_BATCH = 'Cannot accumulate moments over an empty batch'
            self.BAD_EPS = '{} must lie in (0, 1), got {}'
            self.BAD_CONFIDENCE = 'Confidence parameter t must be >= 0, got {}'
            self.BLOCK_TOO_SMALL = 'Block of {} rounds gives t = {:.4f} >= 1 at eps_PE = {:.3e}'
            self.BAD_WORST_CASE = 'Worst-case matrix violates z^2 < x y: x={}, y={}, z={}'
            self.BAD_INTERVAL = "Interval must be 'tail' or 'exact', got {!r}"

            self.BAD_SIDE = "Reconciliation side must be 'alice' or 'bob', got {!r}"
            self.BAD_DELTA = 'delta must lie in (0, sqrt 2), got {}'
            self.BAD_ENERGY_TEST = 'Energy test size k must satisfy 0 < k < n, got k={} n={}'
            self.BAD_PROBABILITY = 'Probability {} must lie in (0, 1], got {}'
            self.PROJECTION_TOO_LARGE = 'Projection term needs (2/3) p eps_s < p, got {}'
            self.INFEASIBLE_BUDGET = 'Budget cannot reach eps_total = {:.3e} with K = {}'
            self.BAD_ANALYSIS_MODE = "Analysis mode must be 'collective', 'coherent' or 'both', got {!r}"

            self.NOT_NORMALIZED = 'State sums to {} instead of 1'
            self.NEGATIVE_ENTRY = 'State has negative entries'
            self.ALPHABET_TOO_LARGE = 'Alphabet sizes {}x{} exceed {}'
            self.SHAPE_MISMATCH = 'States have different shapes {} and {}'
            self.EMPTY_SUPPORT = 'Projection onto {} has zero probability'
            self.BAD_SUBSET = 'Subset {} is not inside the alphabet of size {}'
            self.LP_FAILED = 'Smoothing LP failed: {}'
            self.LEMMA3_PRECONDITION = 'Needs D(rho, rho*) <= eps, got D = {} > eps = {}'
            self.THEOREM_PRECONDITION = 'Needs p > (2/3) p eps, got p = {} and eps = {}'

            self.UNKNOWN_KEY = 'Unknown configuration key {}'
            self.BAD_VALUE = 'Configuration value {}={!r} is invalid: {}'
            self.UNKNOWN_PRESET = 'Unknown preset {!r}, available: {}'
            self.BAD_SWEEP = 'Sweep {!r} is not a comma list or logspace:a:b:count'
            self.MISSING_FILE = 'Configuration file {} does not exist'
            self.RUN_MODE = "Run mode must be 'simulate' or 'analytic', got {!r}"

            self.POINT_ABORTED = 'Grid point n={} mode={} aborted: {}'
            self.LEGACY_RATE = 'n={}: collective rate with the older correction {:.6g} (current {:.6g})'
            self.ALL_ROWS_INFEASIBLE = 'Every row of the sweep aborted'
            self.NO_POSITIVE_RATE = 'no positive key rate over the modulation range'
            self.TABLE_WRITTEN = 'Wrote {} rows to {}'
            self.OUTPUT_FAILED = 'Cannot write the table to {}: {}'
