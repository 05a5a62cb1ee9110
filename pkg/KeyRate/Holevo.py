import math
import numpy as np
from Config.Configs import VConfigs
from Config.Exceptions import DomainError
from Config.Messages import Messages
from Gaussian.CovMatrix import CovMatrix
from Gaussian.Entropy import GaussianEntropy
from Protocol.Scenario import ScenarioParams

SIDES = ('alice', 'bob')

# Mode layout of the entanglement-based state before the relay measurement
_ALICE_KEPT, _ALICE_SENT, _BOB_KEPT, _BOB_SENT = 0, 1, 2, 3
_CLONER_A_IN, _CLONER_B_IN = 4, 6


class HolevoBound:
    """Eve's information on the reconciled variable, through the Gaussian entanglement-based picture.

    After the relay outcome is announced the state of Alice's and Bob's kept
    modes together with Eve's is pure, so Eve's entropies equal those of the
    kept modes.
    """

    @classmethod
    def holevo_bound_mdi(cls, params: ScenarioParams, side: str = None) -> float:
        conditional = cls.conditional_state(params)
        return cls.__chi(conditional, cls.__checkSide(side))

    @classmethod
    def conditional_state(cls, params: ScenarioParams) -> CovMatrix:
        """CM of Alice's and Bob's kept EPR halves given the relay outcome."""
        state = CovMatrix.direct_sum(CovMatrix.epr(params.vmod_a + 1),
                                     CovMatrix.epr(params.vmod_b + 1),
                                     CovMatrix.epr(params.omega_a),
                                     CovMatrix.epr(params.omega_b))
        state = state.apply_beamsplitter(_ALICE_SENT, _CLONER_A_IN, params.tau_a)
        state = state.apply_beamsplitter(_BOB_SENT, _CLONER_B_IN, params.tau_b)
        state.ensure_physical('cloner output')

        # balanced mixing leaves (A + B)/sqrt2 on Alice's line and (B - A)/sqrt2 on Bob's
        state = state.apply_beamsplitter(_ALICE_SENT, _BOB_SENT, 0.5)
        state = state.condition_homodyne(_BOB_SENT, 'q')
        state = state.condition_homodyne(_ALICE_SENT, 'p')
        # remaining modes: Alice kept, Bob kept, then the four cloner modes
        return state.select(0, 1).ensure_physical('relay conditioning')

    @classmethod
    def holevo_bound_from_cm(cls, x: float, y: float, z: float, vmod_a: float, vmod_b: float,
                             side: str = None) -> float:
        """Holevo bound of the Gaussian state whose displaced classical CM is [[x I, z Z], [z Z, y I]]."""
        return cls.__chi(cls.state_from_cm(x, y, z, vmod_a, vmod_b), cls.__checkSide(side))

    @classmethod
    def state_from_cm(cls, x: float, y: float, z: float, vmod_a: float, vmod_b: float) -> CovMatrix:
        """Kept-mode CM from the classical one.

        Heterodyne on a kept half of EPR(V + 1) prepares amplitudes scaled by
        c = sqrt(V / (V + 2)), and outcome variances exceed the mode's by one.
        """
        if vmod_a <= 0 or vmod_b <= 0:
            raise DomainError(Messages().BAD_SCENARIO_FIELD.format('vmod', min(vmod_a, vmod_b)))
        scale_a = math.sqrt(vmod_a / (vmod_a + 2))
        scale_b = math.sqrt(vmod_b / (vmod_b + 2))
        a = x / scale_a ** 2 - 1
        b = y / scale_b ** 2 - 1
        c = z / (scale_a * scale_b)
        identity, flip = np.eye(2), np.diag([1.0, -1.0])
        state = CovMatrix(np.block([[a * identity, c * flip], [c * flip, b * identity]]))
        return state.ensure_physical('reconstructed worst-case state')

    @classmethod
    def plob_bound(cls, tau: float) -> float:
        """Repeater-less capacity of a pure-loss channel."""
        if not 0 <= tau < 1:
            raise DomainError(Messages().BAD_TRANSMISSIVITY.format(tau))
        return -math.log2(1 - tau)

    @classmethod
    def __chi(cls, kept: CovMatrix, side: str) -> float:
        joint = GaussianEntropy.von_neumann_entropy(kept)
        # heterodyne on the reconciling party's mode leaves the other's
        measured = 0 if side == 'alice' else 1
        remaining = GaussianEntropy.von_neumann_entropy(kept.condition_heterodyne(measured))
        return max(joint - remaining, 0.0)

    @staticmethod
    def __checkSide(side: str) -> str:
        side = VConfigs().DEFAULT_RECONCILIATION_SIDE if side is None else side
        if side not in SIDES:
            raise DomainError(Messages().BAD_SIDE.format(side))
        return side
