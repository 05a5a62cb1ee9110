import itertools
import math
import numpy as np
from scipy.optimize import linprog
from scipy.sparse import hstack, identity, kron, csr_matrix, vstack
from Config.Exceptions import DomainError, NumericalError
from Config.Messages import Messages
from MinEntropy.CCState import CCState


class SmoothEntropy:
    """Conditional min-entropy of X given classical B, plain and smoothed in trace distance."""

    @classmethod
    def guessing_probability(cls, state: CCState) -> float:
        return float(state.table.max(axis=0).sum())

    @classmethod
    def hmin(cls, state: CCState) -> float:
        return -math.log2(cls.guessing_probability(state))

    @classmethod
    def guessing_probability_bruteforce(cls, state: CCState) -> float:
        """Best success over every deterministic guess x = f(b); exponential, for small alphabets."""
        best = 0.0
        columns = range(state.size_b)
        for strategy in itertools.product(range(state.size_x), repeat=state.size_b):
            best = max(best, math.fsum(state.table[strategy[b], b] for b in columns))
        return best

    @classmethod
    def smooth_hmin(cls, state: CCState, eps: float) -> float:
        """max of hmin over normalized tables Q with (1/2)|Q - P|_1 <= eps.

        Solved as one linear program in (Q, m, d): minimize sum_b m_b with
        Q(x, b) <= m_b, |Q - P| <= d, sum d <= 2 eps, sum Q = 1, Q >= 0.
        """
        if eps < 0:
            raise DomainError(Messages().BAD_EPS.format('eps', eps))
        if eps >= 1:
            return math.log2(state.size_x)
        if eps == 0:
            return cls.hmin(state)

        size_x, size_b = state.shape
        cells = size_x * size_b
        target = state.table.reshape(-1)
        cell_identity = identity(cells, format='csr')
        # column b of the table picks m_b; table is flattened row-major
        selector = csr_matrix(kron(np.ones((size_x, 1)), identity(size_b)))
        zero_m = csr_matrix((cells, size_b))
        zero_d = csr_matrix((cells, cells))

        inequalities = vstack([
            hstack([cell_identity, -selector, zero_d]),
            hstack([cell_identity, zero_m, -cell_identity]),
            hstack([-cell_identity, zero_m, -cell_identity]),
            hstack([csr_matrix((1, cells)), csr_matrix((1, size_b)), csr_matrix(np.ones((1, cells)))]),
        ]).tocsr()
        upper = np.concatenate([np.zeros(cells), target, -target, [2 * eps]])
        equalities = hstack([csr_matrix(np.ones((1, cells))), csr_matrix((1, size_b)),
                             csr_matrix((1, cells))]).tocsr()
        objective = np.concatenate([np.zeros(cells), np.ones(size_b), np.zeros(cells)])

        result = linprog(objective, A_ub=inequalities, b_ub=upper, A_eq=equalities, b_eq=[1.0],
                         bounds=(0, None), method='highs')
        if result.status != 0:
            raise NumericalError(Messages().LP_FAILED.format(result.message))
        # the optimum is at least the uniform guess 1/|X|
        guessing = max(float(result.fun), 1 / size_x)
        return min(-math.log2(guessing), math.log2(size_x))
