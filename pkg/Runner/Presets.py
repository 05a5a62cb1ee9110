from dataclasses import dataclass
from typing import Dict
from Utils.Utils import Utils


@dataclass(frozen=True)
class Preset:
    """Attack geometry of a published curve. Losses in dB, excess noises in SNU."""
    name: str
    attack_mode: str
    loss_a_db: float
    loss_b_db: float
    tau_a: float
    xi_a: float
    xi_b: float
    beta: float = 0.95
    d: int = 5
    p_ec: float = 0.99
    reconciliation_side: str = 'alice'

    @property
    def tau_b(self) -> float:
        return Utils.db_to_transmissivity(self.loss_b_db)


def _asymmetric(loss_b_db: float) -> Preset:
    # relay next to Alice: tau_A fixed at 0.99, only Bob's line is attenuated
    return Preset(name=f'asymmetric-{loss_b_db:g}db', attack_mode='asymmetric', loss_a_db=Utils.transmissivity_to_db(0.99),
                  loss_b_db=loss_b_db, tau_a=0.99, xi_a=0.0, xi_b=0.01)


def _symmetric(loss_db: float) -> Preset:
    return Preset(name=f'symmetric-{loss_db:g}db', attack_mode='symmetric', loss_a_db=loss_db, loss_b_db=loss_db,
                  tau_a=Utils.db_to_transmissivity(loss_db), xi_a=0.01, xi_b=0.01)


PRESETS: Dict[str, Preset] = {preset.name: preset for preset in (
    _asymmetric(1.0), _asymmetric(2.0), _asymmetric(4.0),
    _symmetric(0.1), _symmetric(0.3), _symmetric(0.5), _symmetric(0.55),
)}
