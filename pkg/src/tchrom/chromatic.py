"""Chromatic symmetric and quasisymmetric functions of graphs.

Everything here reduces to one enumeration: for each number of colors,
walk all surjective proper colorings once and bucket them by the
orientation the coloring induces (each edge directed toward the larger
color, recorded as a bitmask over the canonical edge list) and by the
color-class composition.  Ascent counts relative to any labeling or
orientation then come from XOR-ing bitmasks, so the labeled, oriented,
and both "total" functions all share the same walk.

The star-specific closed forms and the identity verifiers live here too.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .combinat import (
    binomial,
    enumerate_compositions,
    enumerate_partitions,
    multinomial,
    partition_stats,
    sort_composition,
    split_at,
)
from .graph import (
    CapExceeded,
    delete_edge,
    effective_cap,
    enumerate_acyclic_orientations,
    enumerate_labelings,
    enumerate_proper_colorings,
    is_connected,
    is_internal,
    lies_on_cycle,
    near_contract,
    star,
    star_representative_labeling,
)
from .qpoly import QPolynomial, one_plus_q_power
from .qsymfunc import QSymExpansion, SymExpansion, is_symmetric, sym_to_qsym

__all__ = [
    "SymmetryCheckError",
    "PreconditionError",
    "StarContext",
    "csf",
    "cqsf_labeled",
    "cqsf_oriented",
    "total_labeling_cqsf",
    "total_orientation_cqsf",
    "star_cqsf_coeff_closed",
    "star_csf_coeff_closed",
    "total_orientation_star_closed",
    "normalized_total_star",
    "tst_coeff_closed",
    "tst_coeff_first_step",
    "tst_coeff_by_root_color",
    "verify_csf_near_contraction",
    "verify_tcqsf_o_near_contraction",
    "verify_tree_formula",
    "check_symmetry_conjecture",
]


class SymmetryCheckError(RuntimeError):
    """A function that must be symmetric came out asymmetric (a bug)."""


class PreconditionError(ValueError):
    """A verifier was handed an edge that violates its hypothesis."""


@lru_cache(maxsize=None)
def _coloring_buckets(g):
    """Map orientation-mask -> {composition: count} over all surjective
    proper colorings of ``g``, for every number of colors up to g.n.

    Bit i of the mask is set when the coloring increases along the
    canonical edge ``g.edges[i]`` (left endpoint colored lower).
    """
    n = g.n
    earlier = [[] for _ in range(n)]
    for i, (u, v) in enumerate(g.edges):
        earlier[v].append((1 << i, u))
    buckets = {}
    for ell in range(1, n + 1):
        counts = [0] * (ell + 1)
        col = [0] * n

        def walk(v, mask, unused):
            if v == n:
                if unused == 0:
                    comp = tuple(counts[1:])
                    sub = buckets.get(mask)
                    if sub is None:
                        buckets[mask] = sub = {}
                    sub[comp] = sub.get(comp, 0) + 1
                return
            if unused > n - v:
                return
            for c in range(1, ell + 1):
                bits = 0
                for bit, u in earlier[v]:
                    cu = col[u]
                    if cu == c:
                        break
                    if cu < c:
                        bits |= bit
                else:
                    col[v] = c
                    first_use = counts[c] == 0
                    counts[c] += 1
                    walk(v + 1, mask | bits, unused - first_use)
                    counts[c] -= 1
            col[v] = 0

        walk(0, 0, ell)
    return buckets


def _check_vertex_cap(g, default, what):
    cap = effective_cap(default)
    if g.n > cap:
        raise CapExceeded(f"{what} capped at {cap} vertices, got {g.n}")


def csf(g):
    """Chromatic symmetric function in the m-basis (coefficients are
    constant polynomials: coloring counts).

    Every composition with the same sorted parts must produce the same
    count; that is re-verified on each call and a violation raises
    SymmetryCheckError.
    """
    _check_vertex_cap(g, 8, "chromatic symmetric function")
    if g.n == 0:
        return SymExpansion(0, {(): QPolynomial((1,))})
    totals = {}
    for sub in _coloring_buckets(g).values():
        for comp, count in sub.items():
            totals[comp] = totals.get(comp, 0) + count
    by_partition = {}
    for alpha in enumerate_compositions(g.n):
        lam = sort_composition(alpha)
        count = totals.get(alpha, 0)
        if lam in by_partition:
            if by_partition[lam] != count:
                raise SymmetryCheckError(
                    f"coefficient at {alpha} is {count}, expected {by_partition[lam]}"
                )
        else:
            by_partition[lam] = count
    return SymExpansion(
        g.n, {lam: QPolynomial((c,)) for lam, c in by_partition.items() if c}
    )


def _labeling_mask(g, lab):
    mask = 0
    for i, (u, v) in enumerate(g.edges):
        if lab[u] < lab[v]:
            mask |= 1 << i
    return mask


def _orientation_mask(g, orientation):
    if len(orientation) != len(g.edges):
        raise ValueError("orientation must direct every edge exactly once")
    mask = 0
    seen = set()
    for a, b in orientation:
        i = g.edge_index((a, b))
        if i in seen:
            raise ValueError(f"edge ({a},{b}) directed twice")
        seen.add(i)
        if a < b:
            mask |= 1 << i
    return mask


def _check_labeling(g, lab):
    if sorted(lab) != list(range(1, g.n + 1)):
        raise ValueError(f"labeling must be a permutation of 1..{g.n}")


def _expansion_from_masks(g, mask_weights):
    """Assemble sum over colorings of q^(ascents) where the ascent count
    of a coloring with orientation mask gamma is m - popcount(x ^ gamma),
    summed over reference masks x with multiplicity mask_weights[x]."""
    m = len(g.edges)
    arrays = {}
    for gamma, sub in _coloring_buckets(g).items():
        profile = [0] * (m + 1)
        for x, weight in mask_weights.items():
            profile[m - ((x ^ gamma).bit_count())] += weight
        for comp, count in sub.items():
            arr = arrays.get(comp)
            if arr is None:
                arrays[comp] = arr = [0] * (m + 1)
            for k, p in enumerate(profile):
                if p:
                    arr[k] += count * p
    return QSymExpansion(g.n, {comp: QPolynomial(arr) for comp, arr in arrays.items()})


def cqsf_labeled(g, lab):
    """Chromatic quasisymmetric function relative to a labeling: each
    coloring is weighted by q^(edges rising in both label and color)."""
    _check_vertex_cap(g, 8, "labeled refinement")
    _check_labeling(g, lab)
    return _expansion_from_masks(g, {_labeling_mask(g, lab): 1})


def cqsf_oriented(g, orientation):
    """Chromatic quasisymmetric function relative to an orientation: each
    coloring is weighted by q^(directed edges rising in color)."""
    _check_vertex_cap(g, 8, "oriented refinement")
    return _expansion_from_masks(g, {_orientation_mask(g, orientation): 1})


def total_labeling_cqsf(g):
    """Sum of the labeled refinement over all n! labelings."""
    _check_vertex_cap(g, 7, "labeling total")
    hist = {}
    for lab in enumerate_labelings(g):
        mask = _labeling_mask(g, lab)
        hist[mask] = hist.get(mask, 0) + 1
    return _expansion_from_masks(g, hist)


def _acyclic_masks(g):
    masks = []
    for arcs in enumerate_acyclic_orientations(g):
        mask = 0
        for i, (a, b) in enumerate(arcs):
            if a < b:
                mask |= 1 << i
        masks.append(mask)
    return masks


def total_orientation_cqsf(g):
    """Sum of the oriented refinement over all acyclic orientations."""
    return _expansion_from_masks(g, {mask: 1 for mask in _acyclic_masks(g)})


@dataclass(frozen=True)
class StarContext:
    """A star with n vertices, root label r, root colored with color i."""

    n: int
    r: int
    i: int

    def __post_init__(self):
        if not 1 <= self.r <= self.n:
            raise ValueError(f"root label must be in 1..{self.n}")
        if self.i < 1:
            raise ValueError("root color index must be positive")

    def side_weights(self, alpha):
        """Weights (L, R) of the parts before and after position i, with
        their capped versions min(n-r, L) and min(r-1, R)."""
        if sum(alpha) != self.n:
            raise ValueError(f"composition must have weight {self.n}")
        if not self.i <= len(alpha) or alpha[self.i - 1] != 1:
            raise ValueError(f"position {self.i} of {alpha} must be a part equal to 1")
        _, _, left_weight, right_weight = split_at(alpha, self.i)
        return (
            left_weight,
            right_weight,
            min(self.n - self.r, left_weight),
            min(self.r - 1, right_weight),
        )

    def ascent_values(self, alpha):
        """Every ascent count a coloring with this root color can have."""
        L, _, capped_left, capped_right = self.side_weights(alpha)
        base = abs(self.n - self.r - L)
        return tuple(base + 2 * j for j in range(min(capped_left, capped_right) + 1))


def star_cqsf_coeff_closed(alpha, r, n):
    """Coefficient at ``alpha`` of the labeled refinement of the star with
    root label r, by the closed two-binomial formula."""
    if sum(alpha) != n:
        raise ValueError(f"composition {alpha} does not have weight {n}")
    if not 1 <= r <= n:
        raise ValueError(f"root label must be in 1..{n}")
    coeffs = [0] * n
    for i in range(1, len(alpha) + 1):
        if alpha[i - 1] != 1:
            continue
        left, right, L, R = split_at(alpha, i)
        prefactor = multinomial(right) * multinomial(left)
        capped_left = min(n - r, L)
        capped_right = min(r - 1, R)
        base = abs(n - r - L)
        for j in range(min(capped_left, capped_right) + 1):
            ways = binomial(n - r, capped_left - j) * binomial(r - 1, capped_right - j)
            if ways:
                coeffs[base + 2 * j] += prefactor * ways
    return QPolynomial(coeffs)


def star_csf_coeff_closed(lam):
    """m-basis coefficient of the star's chromatic symmetric function:
    (number of parts equal to 1) times the multinomial of the partition
    with its last part dropped."""
    a1, tilde = partition_stats(lam)
    return a1 * multinomial(tilde)


def total_orientation_star_closed(n):
    """Orientation total for the star, in closed form: each m-basis
    coefficient is the star count scaled by (1+q)^(n-1)."""
    if n < 1:
        raise ValueError("star needs at least one vertex")
    edge_factor = one_plus_q_power(n - 1)
    terms = {}
    for lam in enumerate_partitions(n):
        c = star_csf_coeff_closed(lam)
        if c:
            terms[lam] = c * edge_factor
    return SymExpansion(n, terms)


def _exact_divide(expansion, divisor):
    terms = {}
    for comp, poly in expansion.terms.items():
        coeffs = []
        for c in poly.coeffs:
            quotient, remainder = divmod(c, divisor)
            if remainder:
                raise ArithmeticError(
                    f"coefficient {c} at {comp} is not divisible by {divisor}"
                )
            coeffs.append(quotient)
        terms[comp] = QPolynomial(coeffs)
    return QSymExpansion(expansion.degree, terms)


def normalized_total_star(n, via_all_labelings=False):
    """The labeling total of the star divided by (n-1)!.

    The default route sums the labeled refinement over one representative
    labeling per root label (leaf labels do not matter).  The alternative
    route really sums all n! labelings and divides, insisting that the
    division is exact.
    """
    _check_vertex_cap(star(n), 7, "star labeling total")
    if via_all_labelings:
        return _exact_divide(total_labeling_cqsf(star(n)), factorial(n - 1))
    g = star(n)
    total = QSymExpansion.zero(n)
    for r in range(1, n + 1):
        total = total + cqsf_labeled(g, star_representative_labeling(n, r))
    return total


def tst_coeff_closed(alpha, n):
    """Coefficient at ``alpha`` of the normalized star total, in closed
    form: a binomial-weighted sum of shifted q-integers for every part
    equal to 1."""
    if sum(alpha) != n:
        raise ValueError(f"composition {alpha} does not have weight {n}")
    coeffs = [0] * n
    for i in range(1, len(alpha) + 1):
        if alpha[i - 1] != 1:
            continue
        left, right, L, R = split_at(alpha, i)
        prefactor = multinomial(right) * multinomial(left)
        for l in range(min(L, R) + 1):
            ways = prefactor * binomial(n, l)
            for e in range(l, n - l):
                coeffs[e] += ways
    return QPolynomial(coeffs)


def tst_coeff_first_step(alpha, n, k):
    """The q^k coefficient of the normalized star total, by the direct
    double-binomial formula.  Only the lower half of the window is
    covered: k may not exceed (n-1)/2."""
    if sum(alpha) != n:
        raise ValueError(f"composition {alpha} does not have weight {n}")
    if not 0 <= k <= (n - 1) // 2:
        raise ValueError(f"k must be between 0 and {(n - 1) // 2}, got {k}")
    total = 0
    for i in range(1, len(alpha) + 1):
        if alpha[i - 1] != 1:
            continue
        left, right, L, R = split_at(alpha, i)
        prefactor = multinomial(right) * multinomial(left)
        s = min(L, R)
        for j in range(min(s, k) + 1):
            total += prefactor * binomial(s + k - 2 * j, s - j) * binomial(
                n - 1 - s - k + 2 * j, j
            )
    return total


@lru_cache(maxsize=None)
def _star_root_color_tables(n):
    """For the star on n vertices: (alpha, root color) -> ascent-count
    histogram summed over all root labels, via direct enumeration."""
    g = star(n)
    tables = {}
    labelings = [star_representative_labeling(n, r) for r in range(1, n + 1)]
    for ell in range(1, n + 1):
        for col in enumerate_proper_colorings(g, ell):
            sizes = [0] * ell
            for c in col:
                sizes[c - 1] += 1
            key = (tuple(sizes), col[0])
            arr = tables.get(key)
            if arr is None:
                tables[key] = arr = [0] * n
            root_color = col[0]
            for lab in labelings:
                r = lab[0]
                asc = 0
                for v in range(1, n):
                    if lab[v] > r:
                        asc += col[v] > root_color
                    else:
                        asc += col[v] < root_color
                arr[asc] += 1
    return tables


def tst_coeff_by_root_color(alpha, i, n):
    """Slice of the normalized star total's coefficient at ``alpha``
    keeping only colorings whose root gets color i (brute force)."""
    if sum(alpha) != n:
        raise ValueError(f"composition {alpha} does not have weight {n}")
    if not 1 <= i <= len(alpha):
        raise ValueError(f"color index {i} out of range for {alpha}")
    arr = _star_root_color_tables(n).get((tuple(alpha), i))
    return QPolynomial(arr or ())


def verify_csf_near_contraction(g, e):
    """Check that the chromatic symmetric function satisfies
    deletion/near-contraction at edge ``e``."""
    _check_vertex_cap(g, 7, "near-contraction check")
    contracted, leaf_edge = near_contract(g, e)
    lhs = csf(g)
    rhs = csf(delete_edge(g, e)) - csf(delete_edge(contracted, leaf_edge)) + csf(contracted)
    return lhs == rhs


def verify_tcqsf_o_near_contraction(g, e):
    """Check the orientation total's near-contraction identity at an
    internal, non-cycle edge ``e``.

    Raises PreconditionError when the edge violates the hypothesis; an
    identity failure returns False instead.
    """
    _check_vertex_cap(g, 7, "near-contraction check")
    if not is_internal(g, e):
        raise PreconditionError(f"edge {tuple(e)} is not internal")
    if lies_on_cycle(g, e):
        raise PreconditionError(f"edge {tuple(e)} lies on a cycle")
    contracted, leaf_edge = near_contract(g, e)
    bridge = total_orientation_cqsf(delete_edge(g, e)) - total_orientation_cqsf(
        delete_edge(contracted, leaf_edge)
    )
    rhs = total_orientation_cqsf(contracted) + bridge.scale(one_plus_q_power(1))
    return total_orientation_cqsf(g) == rhs


def verify_tree_formula(g):
    """Check that a tree's orientation total equals its chromatic
    symmetric function scaled by (1+q)^(edge count)."""
    _check_vertex_cap(g, 7, "tree formula check")
    if not is_connected(g) or len(g.edges) != g.n - 1:
        raise ValueError("input graph is not a tree")
    total = total_orientation_cqsf(g)
    if not is_symmetric(total):
        return False
    expected = sym_to_qsym(csf(g)).scale(one_plus_q_power(len(g.edges)))
    return total == expected


def check_symmetry_conjecture(g):
    """Whether the orientation total of ``g`` is symmetric.  Exploration
    hook: the caller decides what graphs to feed and what to conclude."""
    _check_vertex_cap(g, 7, "symmetry exploration")
    return is_symmetric(total_orientation_cqsf(g))
