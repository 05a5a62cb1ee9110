from concurrent.futures import ThreadPoolExecutor
from typing import Iterator
import numpy as np
from Config.Configs import VConfigs
from Config.Exceptions import DomainError
from Config.Messages import Messages
from Protocol.RoundBatch import RoundBatch
from Protocol.Scenario import ScenarioParams
from Utils.Logger import get_logger

logger = get_logger(__name__)

# Latent Gaussians of one round, in draw order:
# q'_A p'_A q'_B p'_B | vacuum A (q, p), vacuum B (q, p) | cloner A (q, p), cloner B (q, p)
_LATENT_COUNT = 12


class RoundSimulator:
    """Monte Carlo of the protocol rounds under two independent entangling-cloner attacks.

    Chunk k of a block is drawn from SeedSequence(seed, spawn_key=(k,)), so a
    block is the same whatever the number of worker threads.
    """

    def __init__(self, workers: int = None, chunk_size: int = None) -> None:
        self.__config = VConfigs()
        self.__workers = workers or self.__config.SIMULATION_WORKERS
        self.__chunkSize = chunk_size or self.__config.ROUNDS_PER_CHUNK

    def sample_rounds(self, params: ScenarioParams, seed: int) -> RoundBatch:
        return RoundBatch.concatenate(list(self.stream_chunks(params, seed)))

    def stream_chunks(self, params: ScenarioParams, seed: int) -> Iterator[RoundBatch]:
        """Yields the block chunk by chunk, in order."""
        self.__validateSeed(seed)
        mixing = self.mixing_matrix(params)
        scales = self.latent_std(params)
        sizes = self.__chunkSizes(params.n)

        def draw(index: int) -> RoundBatch:
            return self.__drawChunk(seed, index, sizes[index], mixing, scales)

        if self.__workers <= 1 or len(sizes) == 1:
            for index in range(len(sizes)):
                yield draw(index)
            return

        with ThreadPoolExecutor(max_workers=self.__workers) as executor:
            # Bounded look-ahead so n = 1e9 never materializes at once
            window = self.__workers * 2
            for start in range(0, len(sizes), window):
                for chunk in executor.map(draw, range(start, min(start + window, len(sizes)))):
                    yield chunk

    @classmethod
    def mixing_matrix(cls, params: ScenarioParams) -> np.ndarray:
        """Linear map from the latent Gaussians to (q'_A, p'_A, q'_B, p'_B, q_Z, p_Z)."""
        root_a, leak_a = np.sqrt(params.tau_a), np.sqrt(1 - params.tau_a)
        root_b, leak_b = np.sqrt(params.tau_b), np.sqrt(1 - params.tau_b)
        mixing = np.zeros((6, _LATENT_COUNT))
        mixing[0:4, 0:4] = np.eye(4)

        # relay quadratures: q_rel = sqrt(tau) (q' + v) + sqrt(1 - tau) e
        relay_q_a = np.zeros(_LATENT_COUNT)
        relay_q_a[[0, 4, 8]] = [root_a, root_a, leak_a]
        relay_p_a = np.zeros(_LATENT_COUNT)
        relay_p_a[[1, 5, 9]] = [root_a, root_a, leak_a]
        relay_q_b = np.zeros(_LATENT_COUNT)
        relay_q_b[[2, 6, 10]] = [root_b, root_b, leak_b]
        relay_p_b = np.zeros(_LATENT_COUNT)
        relay_p_b[[3, 7, 11]] = [root_b, root_b, leak_b]

        mixing[4] = (relay_q_b - relay_q_a) / np.sqrt(2)
        mixing[5] = (relay_p_a + relay_p_b) / np.sqrt(2)
        return mixing

    @classmethod
    def latent_std(cls, params: ScenarioParams) -> np.ndarray:
        variances = [params.vmod_a, params.vmod_a, params.vmod_b, params.vmod_b,
                     1, 1, 1, 1,
                     params.omega_a, params.omega_a, params.omega_b, params.omega_b]
        return np.sqrt(np.array(variances, dtype=float))

    @classmethod
    def expected_covariance(cls, params: ScenarioParams) -> np.ndarray:
        """Population covariance of (q'_A, p'_A, q'_B, p'_B, q_Z, p_Z)."""
        mixing = cls.mixing_matrix(params)
        scales = cls.latent_std(params)
        return mixing @ np.diag(scales ** 2) @ mixing.T

    def __drawChunk(self, seed: int, index: int, size: int, mixing: np.ndarray,
                    scales: np.ndarray) -> RoundBatch:
        rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))
        latent = rng.standard_normal((size, _LATENT_COUNT)) * scales
        # explicit column sums instead of a BLAS product keep chunks bit-reproducible
        observed = np.zeros((size, 6))
        for row in range(6):
            for latent_index in np.flatnonzero(mixing[row]):
                observed[:, row] += mixing[row, latent_index] * latent[:, latent_index]
        return RoundBatch(qpA_prime=np.ascontiguousarray(observed[:, 0:2]),
                          qpB_prime=np.ascontiguousarray(observed[:, 2:4]),
                          qpZ=np.ascontiguousarray(observed[:, 4:6]))

    def __chunkSizes(self, n: int):
        full, rest = divmod(n, self.__chunkSize)
        sizes = [self.__chunkSize] * full
        if rest:
            sizes.append(rest)
        logger.debug(f'Block of {n} rounds in {len(sizes)} chunks')
        return sizes

    @staticmethod
    def __validateSeed(seed) -> None:
        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or seed < 0:
            raise DomainError(Messages().BAD_SEED.format(seed))
