"""Compositions, partitions, and binomial/multinomial primitives.

Compositions and partitions are plain tuples of positive integers; a
partition is a composition whose parts weakly decrease.  The empty tuple
is the (unique) composition and partition of 0.
"""

from math import comb

__all__ = [
    "sort_composition",
    "reverse_composition",
    "split_at",
    "multinomial",
    "binomial",
    "partition_stats",
    "enumerate_compositions",
    "enumerate_partitions",
]


def sort_composition(alpha):
    """Reorder the parts of ``alpha`` weakly decreasingly.

    >>> sort_composition((1, 2, 1))
    (2, 1, 1)
    """
    return tuple(sorted(alpha, reverse=True))


def reverse_composition(alpha):
    """Return the parts of ``alpha`` in the opposite order.

    >>> reverse_composition((1, 1, 2))
    (2, 1, 1)
    """
    return tuple(reversed(alpha))


def split_at(alpha, i):
    """Split ``alpha`` around its ``i``-th part (1-based).

    Returns ``(left, right, L, R)`` where ``left`` and ``right`` are the
    compositions strictly before and after position ``i`` and ``L``, ``R``
    are their weights.  Splitting at the first part gives ``L == 0`` and at
    the last part gives ``R == 0``.

    >>> split_at((1, 2, 1), 3)
    ((1, 2), (), 3, 0)
    >>> split_at((1, 1, 2), 2)
    ((1,), (2,), 1, 2)
    """
    if not 1 <= i <= len(alpha):
        raise IndexError(f"position {i} out of range for composition of length {len(alpha)}")
    left = tuple(alpha[: i - 1])
    right = tuple(alpha[i:])
    return left, right, sum(left), sum(right)


def multinomial(alpha):
    """Multinomial coefficient ``|alpha|! / prod(alpha_i!)``.

    Zero parts are allowed; the empty input gives 1.

    >>> multinomial((2, 1))
    3
    >>> multinomial(())
    1
    """
    total = 0
    result = 1
    for part in alpha:
        total += part
        result *= comb(total, part)
    return result


def binomial(n, k):
    """Binomial coefficient with the convention 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def partition_stats(lam):
    """Return ``(a1, tilde)``: the number of parts equal to 1, and
    ``lam`` with its last part removed.

    >>> partition_stats((2, 1, 1))
    (2, (2, 1))
    """
    if not lam:
        raise ValueError("the empty partition has no last part to remove")
    a1 = sum(1 for part in lam if part == 1)
    return a1, tuple(lam[:-1])


def enumerate_compositions(n):
    """All compositions of ``n`` in lexicographic order by parts.

    >>> enumerate_compositions(3)
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out = []

    def extend(prefix, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for first in range(1, remaining + 1):
            prefix.append(first)
            extend(prefix, remaining - first)
            prefix.pop()

    extend([], n)
    return out


def enumerate_partitions(n):
    """All partitions of ``n``, largest-first-part first.

    >>> enumerate_partitions(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def extend(prefix, remaining, cap):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for first in range(min(remaining, cap), 0, -1):
            prefix.append(first)
            extend(prefix, remaining - first, first)
            prefix.pop()

    extend([], n, n)
    return out
