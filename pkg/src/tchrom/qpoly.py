"""Exact polynomials in q over the integers.

Coefficients are stored densely from q^0 upward and always normalized:
the zero polynomial is the empty tuple, otherwise the top coefficient is
nonzero.  Python integers are unbounded, so all arithmetic is exact.
"""

from math import comb

__all__ = ["QPolynomial", "ZERO", "ONE", "Q", "monomial", "q_analog", "one_plus_q_power"]


class QPolynomial:
    """An integer polynomial in the single variable q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        stack = list(coeffs)
        for c in stack:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        while stack and stack[-1] == 0:
            stack.pop()
        self.coeffs = tuple(stack)

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return QPolynomial(merged)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial([other * c for c in self.coeffs])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        prod = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    prod[i + j] += ca * cb
        return QPolynomial(prod)

    __rmul__ = __mul__

    def coefficient(self, k):
        """Coefficient of q^k; zero beyond the degree."""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def evaluate_at_one(self):
        """Sum of the coefficients (the q=1 specialization)."""
        return sum(self.coeffs)

    def is_palindromic(self, d):
        """Whether the coefficients read the same from both ends of the
        exponent window [0, d].

        ``d`` must be at least the degree; the zero polynomial is
        palindromic in every window.
        """
        if d < self.degree:
            raise ValueError(f"window degree {d} is below polynomial degree {self.degree}")
        return all(self.coefficient(k) == self.coefficient(d - k) for k in range(d // 2 + 1))

    def to_json(self):
        """Serialize as a list of integers, ascending exponent."""
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data):
        return cls(data)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for exp in range(self.degree, -1, -1):
            c = self.coeffs[exp]
            if c == 0:
                continue
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            elif exp == 1:
                body = "q" if mag == 1 else f"{mag}q"
            else:
                body = f"q^{exp}" if mag == 1 else f"{mag}q^{exp}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


ZERO = QPolynomial()
ONE = QPolynomial((1,))
Q = QPolynomial((0, 1))


def monomial(coeff, exp):
    """The polynomial coeff * q^exp."""
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    if coeff == 0:
        return QPolynomial()
    return QPolynomial([0] * exp + [coeff])


def q_analog(j):
    """The q-integer [j]_q = 1 + q + ... + q^(j-1); [0]_q = 0."""
    if j < 0:
        raise ValueError("q-analog of a negative integer")
    return QPolynomial([1] * j)


def one_plus_q_power(k):
    """The polynomial (1+q)^k, expanded exactly."""
    if k < 0:
        raise ValueError("negative power of (1+q)")
    return QPolynomial([comb(k, i) for i in range(k + 1)])
