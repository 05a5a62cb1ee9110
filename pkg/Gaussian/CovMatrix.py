from typing import Iterator, Tuple
import numpy as np
from scipy.linalg import LinAlgError, block_diag, cholesky, eigvalsh
from Config.Configs import VConfigs
from Config.Exceptions import DomainError, NumericalError
from Config.Messages import Messages


class SymplecticEigenvalues:
    """Williamson spectrum of a CovMatrix, sorted descending."""

    def __init__(self, values) -> None:
        self.__values: Tuple[float, ...] = tuple(sorted((float(v) for v in values), reverse=True))

    @property
    def values(self) -> Tuple[float, ...]:
        return self.__values

    @property
    def product(self) -> float:
        return float(np.prod(self.__values))

    @property
    def smallest(self) -> float:
        return self.__values[-1]

    def __iter__(self) -> Iterator[float]:
        return iter(self.__values)

    def __len__(self) -> int:
        return len(self.__values)

    def __repr__(self) -> str:
        return f'SymplecticEigenvalues({", ".join(f"{v:.9g}" for v in self.__values)})'


class CovMatrix:
    """Covariance matrix of an m-mode Gaussian state, shot-noise units, ordering (q1, p1, ..., qm, pm).

    Instances are immutable: every operation returns a new CovMatrix.
    """

    def __init__(self, entries) -> None:
        config = VConfigs()
        messages = Messages()
        matrix = np.array(entries, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] % 2 != 0 \
                or matrix.shape[0] == 0:
            raise DomainError(messages.BAD_SHAPE.format(matrix.shape))

        asymmetry = float(np.max(np.abs(matrix - matrix.T)))
        scale = max(1.0, float(np.max(np.abs(matrix))))
        if asymmetry > config.SYMMETRY_TOLERANCE * scale:
            raise DomainError(messages.NOT_SYMMETRIC.format(asymmetry))

        matrix = (matrix + matrix.T) / 2
        matrix.setflags(write=False)
        self.__entries = matrix

    @classmethod
    def vacuum(cls, modes: int = 1) -> 'CovMatrix':
        return cls(np.eye(2 * modes))

    @classmethod
    def thermal(cls, omega: float) -> 'CovMatrix':
        if omega < 1:
            raise DomainError(Messages().BAD_EPR_VARIANCE.format(omega))
        return cls(omega * np.eye(2))

    @classmethod
    def epr(cls, mu: float) -> 'CovMatrix':
        """Two-mode squeezed vacuum [[mu I, s Z], [s Z, mu I]], s = sqrt(mu^2 - 1), Z = diag(1, -1)."""
        if mu < 1:
            raise DomainError(Messages().BAD_EPR_VARIANCE.format(mu))
        s = np.sqrt(mu * mu - 1)
        z = np.diag([1.0, -1.0])
        identity = np.eye(2)
        return cls(np.block([[mu * identity, s * z], [s * z, mu * identity]]))

    @classmethod
    def direct_sum(cls, *matrices: 'CovMatrix') -> 'CovMatrix':
        return cls(block_diag(*[matrix.entries for matrix in matrices]))

    @classmethod
    def symplectic_form(cls, modes: int) -> np.ndarray:
        omega = np.array([[0.0, 1.0], [-1.0, 0.0]])
        return block_diag(*([omega] * modes))

    @property
    def entries(self) -> np.ndarray:
        return self.__entries

    @property
    def modes(self) -> int:
        return self.__entries.shape[0] // 2

    def mode_block(self, first: int, second: int = None) -> np.ndarray:
        second = first if second is None else second
        self.__checkMode(first)
        self.__checkMode(second)
        return self.__entries[2 * first:2 * first + 2, 2 * second:2 * second + 2].copy()

    def select(self, *modes: int) -> 'CovMatrix':
        """Reduced state of the listed modes, in the listed order."""
        for mode in modes:
            self.__checkMode(mode)
        indices = [2 * mode + offset for mode in modes for offset in (0, 1)]
        return CovMatrix(self.__entries[np.ix_(indices, indices)])

    def apply_beamsplitter(self, mode_a: int, mode_b: int, tau: float) -> 'CovMatrix':
        """Mixes two modes: a' = sqrt(tau) a + sqrt(1-tau) b, b' = -sqrt(1-tau) a + sqrt(tau) b."""
        if not 0 <= tau <= 1:
            raise DomainError(Messages().BAD_TRANSMISSIVITY.format(tau))
        self.__checkMode(mode_a)
        self.__checkMode(mode_b)
        if mode_a == mode_b:
            raise DomainError(Messages().BAD_MODE.format(mode_b, self.modes))

        transmitted = np.sqrt(tau)
        reflected = np.sqrt(1 - tau)
        symplectic = np.eye(2 * self.modes)
        a = slice(2 * mode_a, 2 * mode_a + 2)
        b = slice(2 * mode_b, 2 * mode_b + 2)
        symplectic[a, a] = transmitted * np.eye(2)
        symplectic[a, b] = reflected * np.eye(2)
        symplectic[b, a] = -reflected * np.eye(2)
        symplectic[b, b] = transmitted * np.eye(2)
        return CovMatrix(symplectic @ self.__entries @ symplectic.T)

    def condition_homodyne(self, mode: int, quadrature: str) -> 'CovMatrix':
        """State of the other modes after measuring one quadrature of `mode`."""
        if quadrature not in ('q', 'p'):
            raise DomainError(Messages().BAD_QUADRATURE.format(quadrature))
        remaining, sigma, measured = self.__partition(mode)

        projector = np.diag([1.0, 0.0]) if quadrature == 'q' else np.diag([0.0, 1.0])
        variance = measured[0, 0] if quadrature == 'q' else measured[1, 1]
        if variance <= VConfigs().HOMODYNE_RANK_TOLERANCE:
            raise NumericalError(Messages().SINGULAR_CONDITIONING.format(mode))

        pseudo_inverse = np.linalg.pinv(projector @ measured @ projector,
                                        rcond=VConfigs().HOMODYNE_RANK_TOLERANCE)
        return CovMatrix(remaining - sigma @ pseudo_inverse @ sigma.T)

    def condition_heterodyne(self, mode: int) -> 'CovMatrix':
        remaining, sigma, measured = self.__partition(mode)
        try:
            correction = sigma @ np.linalg.solve(measured + np.eye(2), sigma.T)
        except np.linalg.LinAlgError:
            raise NumericalError(Messages().SINGULAR_HETERODYNE)
        return CovMatrix(remaining - correction)

    @property
    def physicality_tolerance(self) -> float:
        """Slack below 1 for symplectic eigenvalues.

        Rounding the entries moves the eigenvalues by about eps * |entries|^2.
        """
        config = VConfigs()
        scale = float(np.max(np.abs(self.__entries)))
        return max(config.PHYSICALITY_TOLERANCE, config.CONDITIONING_TOLERANCE * scale * scale)

    def symplectic_eigenvalues(self) -> SymplecticEigenvalues:
        omega = CovMatrix.symplectic_form(self.modes)
        try:
            lower = cholesky(self.__entries, lower=True)
            # L^T (i Omega) L is Hermitian and similar to i Omega Gamma
            moduli = np.abs(eigvalsh(1j * (lower.T @ omega @ lower)))
        except LinAlgError:
            moduli = np.abs(np.linalg.eigvals(1j * omega @ self.__entries))
        # eigenvalues come in +/- pairs, keep one of each
        moduli = np.sort(moduli)[::-1][::2]
        tolerance = self.physicality_tolerance
        moduli = np.where((moduli < 1) & (moduli >= 1 - tolerance), 1.0, moduli)
        return SymplecticEigenvalues(moduli)

    def is_physical(self) -> bool:
        return self.symplectic_eigenvalues().smallest >= 1 - VConfigs().PHYSICALITY_TOLERANCE

    def ensure_physical(self, where: str) -> 'CovMatrix':
        smallest = self.symplectic_eigenvalues().smallest
        if smallest < 1 - VConfigs().PHYSICALITY_TOLERANCE:
            raise NumericalError(Messages().UNPHYSICAL.format(where, smallest))
        return self

    def __partition(self, mode: int):
        self.__checkMode(mode)
        if self.modes < 2:
            raise DomainError(Messages().BAD_MODE.format(mode, self.modes))
        measured_idx = [2 * mode, 2 * mode + 1]
        kept_idx = [i for i in range(2 * self.modes) if i not in measured_idx]
        remaining = self.__entries[np.ix_(kept_idx, kept_idx)]
        sigma = self.__entries[np.ix_(kept_idx, measured_idx)]
        measured = self.__entries[np.ix_(measured_idx, measured_idx)]
        return remaining, sigma, measured

    def __checkMode(self, mode: int) -> None:
        if not 0 <= mode < self.modes:
            raise DomainError(Messages().BAD_MODE.format(mode, self.modes))

    def __eq__(self, other) -> bool:
        return isinstance(other, CovMatrix) and np.array_equal(self.__entries, other.__entries)

    def __repr__(self) -> str:
        return f'CovMatrix(modes={self.modes})'
