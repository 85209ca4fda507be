import numpy as np

from .errors import DomainError

ACCUMULATIONS = ('compensated', 'ascending')

# Truncation levels of the reference experiments; 2D is our own choice.
DEFAULT_MAX_INDEX_1D = 10000
DEFAULT_MAX_INDEX_EXPONENT = 1000000
DEFAULT_MAX_INDEX_2D = 2048

DEFAULT_BLOCK_SIZE = 4096


class TruncationPolicy(object):
    """Cut-off and accumulation strategy of an infinite series.

    Args:
        max_index (int): Number of terms kept per series index, i.e. the
            summation index runs over ``0 .. max_index - 1``.
        accumulation (str): ``'compensated'`` (pairwise block sums merged by
            Neumaier compensation) or ``'ascending'`` (plain left-to-right
            accumulation, kept for oracle comparisons).
            Default: 'compensated'.
        tail_estimate (float | None): Rigorous upper bound of the dropped
            tail when one is known. Default: None.
    """

    def __init__(self, max_index, accumulation='compensated',
                 tail_estimate=None):
        if isinstance(max_index, float) and max_index.is_integer():
            max_index = int(max_index)
        if not isinstance(max_index, (int, np.integer)) or max_index < 1:
            raise DomainError(f'max_index must be a positive integer, '
                              f'but got {max_index!r}')
        if accumulation not in ACCUMULATIONS:
            raise DomainError(f'accumulation must be one of {ACCUMULATIONS}, '
                              f'but got {accumulation!r}')
        if tail_estimate is not None and not tail_estimate >= 0:
            raise DomainError(f'tail_estimate must be non-negative, '
                              f'but got {tail_estimate}')

        self.max_index = int(max_index)
        self.accumulation = accumulation
        self.tail_estimate = (None if tail_estimate is None else
                              float(tail_estimate))

    def with_tail(self, tail_estimate):
        """Return a copy carrying ``tail_estimate``."""
        return TruncationPolicy(self.max_index, self.accumulation,
                                tail_estimate)

    def to_dict(self):
        return dict(
            max_index=self.max_index,
            accumulation=self.accumulation,
            tail_estimate=self.tail_estimate)

    def __eq__(self, other):
        return (isinstance(other, TruncationPolicy)
                and self.to_dict() == other.to_dict())

    def __repr__(self):
        return (f'{self.__class__.__name__}(max_index={self.max_index}, '
                f'accumulation={self.accumulation!r}, '
                f'tail_estimate={self.tail_estimate})')


def as_truncation(trunc, default=DEFAULT_MAX_INDEX_1D):
    """Accept a policy, an integer cut-off, a dict or None."""
    if trunc is None:
        return TruncationPolicy(default)
    if isinstance(trunc, TruncationPolicy):
        return trunc
    if isinstance(trunc, dict):
        return TruncationPolicy(**trunc)
    return TruncationPolicy(trunc)


class CompensatedAccumulator(object):
    """Neumaier summation over arrays of running sums.

    Each element of ``total`` is an independent sum; ``add`` folds one more
    summand per element and keeps the lost low-order bits in
    ``compensation``.

    Args:
        shape (tuple): Shape of the running sums. Default: ().
    """

    def __init__(self, shape=()):
        self.total = np.zeros(shape, dtype=np.float64)
        self.compensation = np.zeros(shape, dtype=np.float64)

    def add(self, value):
        value = np.asarray(value, dtype=np.float64)
        new_total = self.total + value
        keep_total = np.abs(self.total) >= np.abs(value)
        self.compensation += np.where(keep_total,
                                      (self.total - new_total) + value,
                                      (value - new_total) + self.total)
        self.total = new_total

    @property
    def result(self):
        return self.total + self.compensation


def accumulate_series(term_block,
                      num_terms,
                      accumulation='compensated',
                      block_size=DEFAULT_BLOCK_SIZE,
                      shape=()):
    """Sum ``num_terms`` terms produced block by block.

    Args:
        term_block (callable): ``term_block(start, stop)`` returns the terms
            with indices ``start .. stop - 1`` stacked along axis 0, i.e. an
            array of shape ``(stop - start, *shape)``.
        num_terms (int): Number of terms to sum.
        accumulation (str): See :class:`TruncationPolicy`.
        block_size (int): Terms requested per call. Default: 4096.
        shape (tuple): Shape of one term. Default: ().

    Returns:
        np.ndarray: The sums, shape ``shape``.
    """
    if accumulation not in ACCUMULATIONS:
        raise DomainError(f'accumulation must be one of {ACCUMULATIONS}, '
                          f'but got {accumulation!r}')

    if accumulation == 'compensated':
        acc = CompensatedAccumulator(shape)
        for start in range(0, num_terms, block_size):
            stop = min(start + block_size, num_terms)
            acc.add(np.sum(term_block(start, stop), axis=0))
        return acc.result

    total = np.zeros((1, ) + tuple(shape), dtype=np.float64)
    for start in range(0, num_terms, block_size):
        stop = min(start + block_size, num_terms)
        block = np.concatenate([total, term_block(start, stop)], axis=0)
        total = np.cumsum(block, axis=0)[-1:]
    return total[0]
