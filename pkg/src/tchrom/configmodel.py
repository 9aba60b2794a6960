"""Rows of marked boxes: conditions, the not-at-home statistic, and the
bijections behind a binomial identity.

A configuration is a row of ``n`` boxes with ``s`` of them marked,
encoded as the strictly increasing tuple of marked positions (1-based).
Fixing parameters ``s <= k <= (n-1)/2``, the ``j``-condition places a
barrier at position ``s+k+1-2j`` and asks that the barrier box be
unmarked with exactly ``s-j`` marks to its left and ``j`` to its right.
Relative to a first-home position ``b0``, the ``j``-th mark is at home
when it sits at ``b0+2j-1``; ``nat`` counts marks not at home, and
``T(n,s,i,b0)`` counts configurations with ``nat == i``.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

__all__ = [
    "Configuration",
    "ModelParams",
    "ModelCheckError",
    "ModelInconsistencyError",
    "CheckResult",
    "enumerate_configurations",
    "satisfies_j_condition",
    "count_B",
    "count_K",
    "nat",
    "count_T",
    "closed_T",
    "conditions_vs_nat",
    "b0_shift_bijection",
    "special_bijection",
    "concat",
    "count_by_last_mark",
    "verify_recursions",
    "verify_binomial_identity",
]


class ModelCheckError(RuntimeError):
    """A brute-force count disagreed with its closed form."""


class ModelInconsistencyError(RuntimeError):
    """Input contradicts a structural fact the model guarantees."""


@dataclass(frozen=True)
class Configuration:
    """A row of ``n`` boxes whose marked positions are ``marks``."""

    marks: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(self, "marks", tuple(sorted(self.marks)))
        previous = 0
        for mark in self.marks:
            if mark <= previous:
                raise ValueError(f"marks must be distinct positive positions: {self.marks}")
            previous = mark
        if previous > self.n:
            raise ValueError(f"mark {previous} beyond row length {self.n}")

    @property
    def s(self):
        return len(self.marks)


@dataclass(frozen=True)
class ModelParams:
    """Validated parameter bundle (n, s, k, b0) with b0 = k+1-s when k
    is given."""

    n: int
    s: int
    k: int = None
    b0: int = 1

    def __post_init__(self):
        if self.s < 0 or self.n < 0:
            raise ValueError("n and s must be nonnegative")
        if self.b0 < 1 or self.b0 + 2 * self.s - 1 > self.n:
            raise ValueError(f"first home {self.b0} does not fit {self.s} homes in {self.n} boxes")
        if self.k is not None:
            if not self.s <= self.k <= (self.n - 1) // 2:
                raise ValueError(f"k must satisfy {self.s} <= k <= {(self.n - 1) // 2}")
            if self.b0 != self.k + 1 - self.s:
                raise ValueError("b0 must equal k+1-s when k is given")

    @classmethod
    def from_k(cls, n, s, k):
        return cls(n, s, k, k + 1 - s)


def enumerate_configurations(n, s):
    """All s-mark configurations of length n, lexicographically."""
    if n < 0 or not 0 <= s <= n:
        raise ValueError(f"cannot place {s} marks in {n} boxes")
    return [Configuration(marks, n) for marks in combinations(range(1, n + 1), s)]


def _check_sk(n, s, k):
    if not 0 <= s <= k <= (n - 1) // 2:
        raise ValueError(f"need 0 <= s <= k <= (n-1)/2, got n={n}, s={s}, k={k}")


def _satisfies(marks, s, k, j):
    barrier = s + k + 1 - 2 * j
    idx = bisect_left(marks, barrier)
    if idx < s and marks[idx] == barrier:
        return False
    return idx == s - j


def satisfies_j_condition(gamma, s, k, j):
    """Whether the barrier box at position s+k+1-2j is unmarked with
    exactly s-j marks to its left and j to its right."""
    _check_sk(gamma.n, s, k)
    if gamma.s != s:
        raise ValueError(f"configuration has {gamma.s} marks, expected {s}")
    if not 0 <= j <= s:
        raise ValueError(f"j must be between 0 and {s}")
    return _satisfies(gamma.marks, s, k, j)


@lru_cache(maxsize=None)
def _condition_data(n, s, k):
    """One sweep over all configurations: per-j satisfaction counts and
    the histogram of how many conditions each configuration satisfies."""
    per_j = [0] * (s + 1)
    histogram = [0] * (s + 2)
    for marks in combinations(range(1, n + 1), s):
        satisfied = 0
        for j in range(s + 1):
            if _satisfies(marks, s, k, j):
                per_j[j] += 1
                satisfied += 1
        histogram[satisfied] += 1
    return tuple(per_j), tuple(histogram)


def count_B(n, s, k, j):
    """Number of configurations satisfying the j-condition, counted by
    brute force and checked against the two-binomial closed form."""
    _check_sk(n, s, k)
    if not 0 <= j <= s:
        raise ValueError(f"j must be between 0 and {s}")
    brute = _condition_data(n, s, k)[0][j]
    closed = comb(s + k - 2 * j, s - j) * comb(n - 1 - s - k + 2 * j, j)
    if brute != closed:
        raise ModelCheckError(
            f"B(n={n},s={s},k={k},j={j}): brute {brute} != closed {closed}"
        )
    return brute


def count_K(n, s, k, l):
    """Number of configurations satisfying at least l of the s+1 conditions."""
    _check_sk(n, s, k)
    if not 1 <= l <= s + 1:
        raise ValueError(f"l must be between 1 and {s + 1}")
    histogram = _condition_data(n, s, k)[1]
    return sum(histogram[l:])


def _check_home_range(n, s, b0):
    if b0 < 1 or b0 + 2 * s - 1 > n:
        raise ValueError(f"home range [b0={b0}, b0+2*{s}-1] exceeds row of length {n}")


def _nat(marks, b0):
    return sum(1 for j, mark in enumerate(marks, 1) if mark != b0 + 2 * j - 1)


def nat(gamma, b0):
    """Number of marks not at home.  The j-th mark's home is the slot
    b0 + 2j - 1 between the j-th and (j+1)-th barriers, which sit at
    b0, b0+2, b0+4, ..."""
    _check_home_range(gamma.n, gamma.s, b0)
    return _nat(gamma.marks, b0)


@lru_cache(maxsize=None)
def _nat_histogram(n, s, b0):
    """Counts of configurations by their nat value, as a tuple indexed 0..s."""
    histogram = [0] * (s + 1)
    for marks in combinations(range(1, n + 1), s):
        histogram[_nat(marks, b0)] += 1
    return tuple(histogram)


def count_T(n, s, i, b0):
    """Number of s-mark configurations of length n with nat == i."""
    _check_home_range(n, s, b0)
    if not 0 <= i <= s:
        raise ValueError(f"i must be between 0 and {s}")
    return _nat_histogram(n, s, b0)[i]


def closed_T(n, i):
    """Closed form for count_T: 1 when i = 0, else C(n,i) - C(n,i-1)."""
    if not 0 <= i <= n // 2:
        raise ValueError(f"i must be between 0 and {n // 2}")
    if i == 0:
        return 1
    return comb(n, i) - comb(n, i - 1)


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict carrying the first counterexample, if any."""

    ok: bool
    counterexample: Configuration = None
    expected: int = None
    actual: int = None

    def __bool__(self):
        return self.ok


def conditions_vs_nat(n, s, k):
    """Check that every configuration satisfies exactly s+1-nat of the
    conditions, with homes starting at b0 = k+1-s."""
    _check_sk(n, s, k)
    b0 = k + 1 - s
    for gamma in enumerate_configurations(n, s):
        satisfied = sum(
            1 for j in range(s + 1) if _satisfies(gamma.marks, s, k, j)
        )
        expected = s + 1 - _nat(gamma.marks, b0)
        if satisfied != expected:
            return CheckResult(False, gamma, expected, satisfied)
    return CheckResult(True)


def b0_shift_bijection(gamma, s, b0):
    """Carry a configuration counted by T(n,s,i,b0) to one counted by
    T(n,s,i,b0+1).

    The suffix of marks too close to the right wall (the flipped block)
    is reflected through the row; the rest shift right past it.
    """
    if gamma.s != s:
        raise ValueError(f"configuration has {gamma.s} marks, expected {s}")
    _check_home_range(gamma.n, s, b0)
    _check_home_range(gamma.n, s, b0 + 1)
    n = gamma.n
    marks = gamma.marks
    pivot = 0
    for j in range(1, s + 1):
        if n - marks[j - 1] > 2 * (s - j):
            pivot = j
    flipped_size = s - pivot
    moved = []
    for j, mark in enumerate(marks, 1):
        if j > pivot:
            moved.append(1 + n - mark)
        else:
            moved.append(mark + 2 * flipped_size + 1)
    return Configuration(tuple(sorted(moved)), n)


def special_bijection(gamma, i):
    """Carry a maximally-displaced configuration (length 2i, i marks,
    none at home) to one of length 2i-1 with i-1 marks, none at home.

    Splits off the shortest prefix holding exactly as many marks as half
    its length, reflects the remaining marks through the right end, and
    deletes the first box together with its mark.
    """
    if i < 1:
        raise ValueError("i must be positive")
    if gamma.n != 2 * i or gamma.s != i:
        raise ValueError(f"expected {i} marks in {2 * i} boxes, got {gamma.s} in {gamma.n}")
    marks = gamma.marks
    if marks[0] != 1:
        raise ModelInconsistencyError(
            f"a fully-displaced configuration must start with a mark: {marks}"
        )
    if _nat(marks, 1) != i:
        raise ValueError(f"{marks} has a mark at home")
    prefix_len = next(
        t for t in range(1, i + 1) if bisect_right(marks, 2 * t) == t
    )
    reflected = [2 * i - (p - 2 * prefix_len) + 1 for p in marks[prefix_len:]]
    shifted = [p - 1 for p in list(marks[1:prefix_len]) + reflected]
    return Configuration(tuple(sorted(shifted)), 2 * i - 1)


def concat(gamma, beta):
    """Concatenate two rows; requires the left factor to have length
    exactly twice its mark count so the homes of ``beta`` line up."""
    if gamma.n != 2 * gamma.s:
        raise ValueError(
            f"left factor must fill half its row: {gamma.s} marks in {gamma.n} boxes"
        )
    return Configuration(
        gamma.marks + tuple(b + gamma.n for b in beta.marks), gamma.n + beta.n
    )


def count_by_last_mark(l, i):
    """Among configurations of length 2l with l marks and exactly one at
    home, count those whose last mark is at position l+i+1; checked
    against T(l+i, i, i)."""
    if not 0 <= i < l:
        raise ValueError(f"need 0 <= i < l, got i={i}, l={l}")
    count = 0
    for marks in combinations(range(1, 2 * l + 1), l):
        if _nat(marks, 1) == l - 1 and marks[-1] == l + i + 1:
            count += 1
    expected = count_T(l + i, i, i, 1)
    if count != expected:
        raise ModelCheckError(
            f"last-mark count for (l={l}, i={i}): brute {count} != T {expected}"
        )
    return count


def verify_recursions(n_max):
    """Exhaustively check the counting recursions and independence
    statements for all rows up to length n_max.  Returns one report per
    family: {"family", "instances", "failures"}."""
    if not 2 <= n_max <= 16:
        raise ValueError("n_max must be between 2 and 16")

    def T(n, s, i, b0=1):
        return _nat_histogram(n, s, b0)[i]

    reports = []

    failures = []
    instances = 0
    for n in range(2, n_max + 1):
        for s in range(1, (n - 1) // 2 + 1):
            for i in range(1, s + 1):
                instances += 1
                expected = T(n - 1, s, i) + T(n - 1, s - 1, i - 1)
                actual = T(n, s, i)
                if actual != expected:
                    failures.append(
                        {"params": {"n": n, "s": s, "i": i}, "expected": expected, "actual": actual}
                    )
    reports.append(
        {"family": "last-box recursion", "instances": instances, "failures": failures}
    )

    failures = []
    instances = 0
    for n in range(2, n_max + 1):
        for s in range(0, n // 2):
            for i in range(0, s + 1):
                instances += 1
                expected = T(n, s + 1, i)
                actual = T(n, s, i)
                if actual != expected:
                    failures.append(
                        {"params": {"n": n, "s": s, "i": i}, "expected": expected, "actual": actual}
                    )
    reports.append(
        {"family": "mark-count independence", "instances": instances, "failures": failures}
    )

    failures = []
    instances = 0
    for l in range(1, n_max // 2 + 1):
        instances += 1
        expected = T(2 * l, l - 1, l - 1)
        actual = T(2 * l, l, l - 1)
        if actual != expected:
            failures.append(
                {"params": {"l": l}, "expected": expected, "actual": actual}
            )
    reports.append(
        {"family": "full-row special case", "instances": instances, "failures": failures}
    )

    failures = []
    instances = 0
    for n in range(1, n_max + 1):
        instances += 1
        actual = T(n, 0, 0)
        if actual != 1:
            failures.append({"params": {"n": n}, "expected": 1, "actual": actual})
    reports.append(
        {"family": "no-marks base case", "instances": instances, "failures": failures}
    )

    failures = []
    instances = 0
    for n in range(2, min(n_max, 12) + 1):
        for s in range(0, n // 2 + 1):
            reference = _nat_histogram(n, s, 1)
            for b0 in range(2, n - 2 * s + 2):
                shifted = _nat_histogram(n, s, b0)
                for i in range(s + 1):
                    instances += 1
                    if shifted[i] != reference[i]:
                        failures.append(
                            {
                                "params": {"n": n, "s": s, "i": i, "b0": b0},
                                "expected": reference[i],
                                "actual": shifted[i],
                            }
                        )
    reports.append(
        {"family": "first-home independence", "instances": instances, "failures": failures}
    )

    return reports


def verify_binomial_identity(n, s, k):
    """Check the identity sum_j B_j = sum_{l<=s} C(n,l) three ways:
    direct arithmetic, brute-force B versus K counts, and the closed form
    of each K."""
    _check_sk(n, s, k)
    lhs = sum(
        comb(s + k - 2 * j, s - j) * comb(n - 1 - s - k + 2 * j, j)
        for j in range(s + 1)
    )
    rhs = sum(comb(n, l) for l in range(s + 1))
    if lhs != rhs:
        return False
    total_B = sum(count_B(n, s, k, j) for j in range(s + 1))
    total_K = sum(count_K(n, s, k, l) for l in range(1, s + 2))
    if total_B != total_K:
        return False
    return all(count_K(n, s, k, s + 1 - l) == comb(n, l) for l in range(s + 1))
