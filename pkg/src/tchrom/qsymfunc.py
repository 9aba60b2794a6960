"""Quasisymmetric and symmetric functions in their monomial bases.

A homogeneous quasisymmetric function of degree n is stored as a map
from compositions of n to QPolynomial coefficients (the M-basis); a
symmetric one as a map from partitions of n (the m-basis).  Products are
computed with the quasi-shuffle recursion on compositions, which matches
multiplying the underlying power series.
"""

from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from math import comb

from .combinat import sort_composition
from .qpoly import QPolynomial, ZERO

__all__ = [
    "QSymExpansion",
    "SymExpansion",
    "quasi_shuffle_product",
    "is_symmetric",
    "to_symmetric",
    "sym_to_qsym",
    "sym_product",
    "verify_star_powersum",
    "expansion_to_json",
    "expansion_from_json",
]


def _checked_terms(terms, degree, partitions):
    clean = {}
    for index, coeff in terms.items():
        index = tuple(index)
        if any(part < 1 for part in index):
            raise ValueError(f"parts must be positive: {index}")
        if partitions and any(index[i] < index[i + 1] for i in range(len(index) - 1)):
            raise ValueError(f"not a partition: {index}")
        if sum(index) != degree:
            raise ValueError(f"index {index} does not have weight {degree}")
        if not isinstance(coeff, QPolynomial):
            coeff = QPolynomial(coeff)
        if coeff:
            clean[index] = coeff
    return clean


class _Expansion:
    """Shared mechanics of the two monomial-basis expansions."""

    __slots__ = ("degree", "terms")
    _partition_keys = False

    def __init__(self, degree, terms=()):
        self.degree = degree
        self.terms = _checked_terms(dict(terms), degree, self._partition_keys)

    @classmethod
    def zero(cls, degree):
        return cls(degree)

    def coefficient(self, index):
        return self.terms.get(tuple(index), ZERO)

    def support(self):
        return sorted(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, type(self)) and isinstance(self, type(other)):
            return self.degree == other.degree and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def _combine(self, other, sign):
        if not isinstance(other, type(self)) or not isinstance(self, type(other)):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        merged = dict(self.terms)
        for index, coeff in other.terms.items():
            merged[index] = merged.get(index, ZERO) + sign * coeff
        return type(self)(self.degree, merged)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, factor):
        """Multiply every coefficient by an integer or QPolynomial."""
        return type(self)(self.degree, {k: factor * v for k, v in self.terms.items()})

    def __repr__(self):
        inside = ", ".join(f"{k}: {v}" for k, v in sorted(self.terms.items()))
        return f"{type(self).__name__}(degree={self.degree}, {{{inside}}})"


class QSymExpansion(_Expansion):
    """M-basis expansion: composition -> QPolynomial, zero entries absent."""

    _partition_keys = False
    basis = "M"


class SymExpansion(_Expansion):
    """m-basis expansion: partition -> QPolynomial, zero entries absent."""

    _partition_keys = True
    basis = "m"


@lru_cache(maxsize=None)
def _stuffle(alpha, beta):
    """Expand M_alpha * M_beta as integer multiplicities of compositions."""
    if not alpha:
        return ((beta, 1),)
    if not beta:
        return ((alpha, 1),)
    out = Counter()
    a0, arest = alpha[0], alpha[1:]
    b0, brest = beta[0], beta[1:]
    for comp, mult in _stuffle(arest, beta):
        out[(a0,) + comp] += mult
    for comp, mult in _stuffle(alpha, brest):
        out[(b0,) + comp] += mult
    for comp, mult in _stuffle(arest, brest):
        out[(a0 + b0,) + comp] += mult
    return tuple(out.items())


def quasi_shuffle_product(f, g):
    """Product of two M-basis expansions."""
    terms = {}
    for alpha, ca in f.terms.items():
        for beta, cb in g.terms.items():
            coeff = ca * cb
            for comp, mult in _stuffle(alpha, beta):
                terms[comp] = terms.get(comp, ZERO) + mult * coeff
    return QSymExpansion(f.degree + g.degree, terms)


def is_symmetric(f):
    """Whether the M-coefficients depend only on the multiset of parts."""
    seen = set()
    for alpha in f.terms:
        lam = sort_composition(alpha)
        if lam in seen:
            continue
        seen.add(lam)
        reference = f.terms[alpha]
        for rearranged in set(permutations(lam)):
            if f.coefficient(rearranged) != reference:
                return False
    return True


def to_symmetric(f):
    """Convert a symmetric QSymExpansion to the m-basis."""
    if not is_symmetric(f):
        raise ValueError("expansion is not symmetric")
    terms = {}
    for alpha, coeff in f.terms.items():
        terms[sort_composition(alpha)] = coeff
    return SymExpansion(f.degree, terms)


def sym_to_qsym(f):
    """Embed an m-basis expansion into the M-basis (m_lam = sum of M_alpha
    over the rearrangements alpha of lam)."""
    terms = {}
    for lam, coeff in f.terms.items():
        for alpha in set(permutations(lam)):
            terms[alpha] = coeff
    return QSymExpansion(f.degree, terms)


def sym_product(f, g):
    """Product of two m-basis expansions."""
    return to_symmetric(quasi_shuffle_product(sym_to_qsym(f), sym_to_qsym(g)))


def _powersum_alphabet(parts, nvars):
    """Expand prod_k p_{parts[k]} in nvars variables as exponent-vector counts."""
    state = Counter({(0,) * nvars: 1})
    for k in parts:
        bumped = Counter()
        for evec, mult in state.items():
            for i in range(nvars):
                lifted = list(evec)
                lifted[i] += k
                bumped[tuple(lifted)] += mult
        state = bumped
    return state


def verify_star_powersum(n):
    """Check, in n+1 variables, that the chromatic symmetric function of
    the star with n+1 vertices equals the alternating binomial sum of
    power sums p_(r+1, 1^(n-r)) for r = 0..n."""
    if not 1 <= n <= 6:
        raise ValueError("n must be between 1 and 6")
    nvars = n + 1
    lhs = Counter()
    colors = range(1, nvars + 1)
    for root_color in colors:
        others = [c for c in colors if c != root_color]
        for leaf_colors in product(others, repeat=n):
            evec = [0] * nvars
            evec[root_color - 1] += 1
            for c in leaf_colors:
                evec[c - 1] += 1
            lhs[tuple(evec)] += 1
    rhs = Counter()
    for r in range(n + 1):
        sign = -1 if r % 2 else 1
        weight = sign * comb(n, r)
        parts = (r + 1,) + (1,) * (n - r)
        for evec, mult in _powersum_alphabet(parts, nvars).items():
            rhs[evec] += weight * mult
    rhs = Counter({k: v for k, v in rhs.items() if v})
    return lhs == rhs


def expansion_to_json(exp):
    """Serialize an expansion: terms sorted lexicographically by index."""
    return {
        "degree": exp.degree,
        "basis": exp.basis,
        "terms": [
            {"index": list(index), "coeff": exp.terms[index].to_json()}
            for index in sorted(exp.terms)
        ],
    }


def expansion_from_json(data):
    cls = {"M": QSymExpansion, "m": SymExpansion}[data["basis"]]
    terms = {tuple(row["index"]): QPolynomial(row["coeff"]) for row in data["terms"]}
    return cls(data["degree"], terms)
