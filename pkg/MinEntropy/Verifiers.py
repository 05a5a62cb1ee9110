import math
from typing import Iterable
from Config.Configs import VConfigs
from Config.Exceptions import DomainError
from Config.Messages import Messages
from MinEntropy.CCState import CCState
from MinEntropy.SmoothEntropy import SmoothEntropy

# Exact checks for closed-form quantities; LP-based ones use VConfigs().LP_TOLERANCE
_EXACT_SLACK = 1e-12


class LemmaVerifier:
    """Numerical checks of the projection inequalities for min-entropy on classical states."""

    @classmethod
    def verify_lemma1(cls, state: CCState, subset: Iterable[int]) -> bool:
        """hmin(projected) >= hmin(state) + log2 p."""
        projected, p = state.project(subset)
        return SmoothEntropy.hmin(projected) >= SmoothEntropy.hmin(state) + math.log2(p) - _EXACT_SLACK

    @classmethod
    def verify_projection_probability(cls, rho: CCState, rho_star: CCState, subset: Iterable[int]) -> bool:
        """|p - p*| <= D(rho, rho*)."""
        subset = list(subset)
        gap = abs(rho.probability_of(subset) - rho_star.probability_of(subset))
        return gap <= rho.trace_distance(rho_star) + _EXACT_SLACK

    @classmethod
    def verify_lemma3(cls, rho: CCState, rho_star: CCState, subset: Iterable[int], eps: float) -> bool:
        """D(projected rho, projected rho*) <= (3/2) eps / p, given D(rho, rho*) <= eps."""
        subset = list(subset)
        distance = rho.trace_distance(rho_star)
        if distance > eps + _EXACT_SLACK:
            raise DomainError(Messages().LEMMA3_PRECONDITION.format(distance, eps))
        projected, p = rho.project(subset)
        projected_star, _ = rho_star.project(subset)
        return projected.trace_distance(projected_star) <= 1.5 * eps / p + _EXACT_SLACK

    @classmethod
    def verify_theorem1(cls, rho: CCState, subset: Iterable[int], eps: float) -> bool:
        """H_min^eps(projected) >= H_min^{(2/3) p eps}(rho) + log2(p - (2/3) p eps)."""
        subset = list(subset)
        projected, p = rho.project(subset)
        shrunk = 2 / 3 * p * eps
        if not p > shrunk:
            raise DomainError(Messages().THEOREM_PRECONDITION.format(p, eps))

        left = SmoothEntropy.smooth_hmin(projected, eps)
        right = SmoothEntropy.smooth_hmin(rho, shrunk) + math.log2(p - shrunk)
        return left >= right - VConfigs().LP_TOLERANCE
