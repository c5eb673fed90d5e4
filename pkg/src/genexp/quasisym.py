"""First-layer quasisymmetric machinery: the local action and its invariants.

A simple transposition acts locally on a first-layer weight by swapping two
adjacent coordinates unless both are non-negative, in which case it does
nothing.  Orbits of this action are indexed by quasi-dominant weights (the
members with all -1 coordinates rightmost), which in turn biject with subsets
of [n] through their height sets.  On top of this sit the monomial and
fundamental quasisymmetric functions and their pairings against 1, and the
expansion of an irreducible character into fundamentals whose coefficients
are the quasi-weight multiplicities.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations

from .fourier import WeightFunction, c_closed_form
from .laurent import ZERO, LaurentPolynomial, one_minus_t_set
from .tableaux import phi_set, phi_weight, syt_enumerate
from .weights import Weight


class CrossCheckError(RuntimeError):
    """Two routes to the same value disagreed; a formula or implementation bug."""


# -- the local action --------------------------------------------------------


def local_act(i: int, weight: Weight) -> Weight:
    """Act by the i-th simple transposition, frozen on two non-negative entries."""
    if not 1 <= i <= weight.n:
        raise ValueError(f"index {i} out of range 1..{weight.n}")
    if weight.coords[i - 1] >= 0 and weight.coords[i] >= 0:
        return weight
    return weight.simple_reflect(i)


def local_orbit(weight: Weight) -> list[Weight]:
    """The local orbit of a first-layer weight.

    Its members are the interleavings of the fixed subsequence of non-negative
    coordinates with the -1 entries, so they are enumerated directly by
    choosing the positions of the -1s.
    """
    if not weight.is_first_layer():
        raise ValueError(f"{weight} is not a first-layer weight")
    frozen = [x for x in weight.coords if x >= 0]
    total = len(weight.coords)
    negatives = total - len(frozen)
    orbit = []
    for positions in combinations(range(total), negatives):
        coords = []
        taken = iter(frozen)
        marked = set(positions)
        for k in range(total):
            coords.append(-1 if k in marked else next(taken))
        orbit.append(Weight(coords))
    return orbit


def is_quasi_dominant(weight: Weight) -> bool:
    """First layer with every -1 coordinate to the right of every non-negative one."""
    if not weight.is_first_layer():
        return False
    seen_negative = False
    for x in weight.coords:
        if x < 0:
            seen_negative = True
        elif seen_negative:
            return False
    return True


def quasi_dominant_representative(weight: Weight) -> Weight:
    """The maximal-height element of the local orbit: -1 entries moved to the end."""
    if not weight.is_first_layer():
        raise ValueError(f"{weight} is not a first-layer weight")
    frozen = [x for x in weight.coords if x >= 0]
    negatives = len(weight.coords) - len(frozen)
    return Weight(frozen + [-1] * negatives)


def _require_quasi_dominant(weight: Weight) -> None:
    if not is_quasi_dominant(weight):
        raise ValueError(f"{weight} is not quasi-dominant")


# -- canonical expressions and height sets ------------------------------------


def canonical_expression(weight: Weight) -> tuple[tuple[int, int], ...]:
    """The canonical decomposition into positive roots, as 1-based (i, j) pairs.

    The pair (i, j) stands for the root e_i - e_j.  Peeling off the root from
    the rightmost positive coordinate to the leftmost -1 reduces the co-length
    by one and keeps the weight quasi-dominant; the heights j - i of the
    resulting sequence strictly decrease.
    """
    _require_quasi_dominant(weight)
    coords = list(weight.coords)
    peeled = []
    while min(coords) < 0:
        j = coords.index(-1) + 1
        i = max(k + 1 for k, x in enumerate(coords) if x > 0)
        peeled.append((i, j))
        coords[i - 1] -= 1
        coords[j - 1] += 1
    peeled.reverse()
    return tuple(peeled)


def height_set(weight: Weight) -> frozenset[int]:
    """Heights j - i of the canonical-expression roots; empty for the zero weight."""
    return frozenset(j - i for i, j in canonical_expression(weight))


def height_vector(weight: Weight) -> tuple[int, ...]:
    """The height set arranged in decreasing order."""
    return tuple(sorted(height_set(weight), reverse=True))


def height_set_inverse(subset, rank: int) -> Weight:
    """The unique quasi-dominant weight of the given rank with this height set."""
    heights = sorted(subset, reverse=True)
    if any(s < 1 or s > rank for s in heights):
        raise ValueError(f"height set {heights} not contained in [1..{rank}]")
    size = len(heights)
    counts = Counter(rank + 2 - i - s for i, s in enumerate(heights, start=1))
    coords = [counts.get(k, 0) for k in range(1, rank + 2 - size)]
    coords += [-1] * size
    return Weight(coords)


# -- quasisymmetric functions and pairings ------------------------------------


def monomial_quasisym(weight: Weight) -> WeightFunction:
    """The indicator function of the local orbit of a quasi-dominant weight."""
    _require_quasi_dominant(weight)
    return WeightFunction({mu: 1 for mu in local_orbit(weight)})


def fundamental_quasisym(weight: Weight) -> WeightFunction:
    """Sum of the monomial functions over all height-subsets of the weight."""
    _require_quasi_dominant(weight)
    heights = sorted(height_set(weight))
    rank = weight.n
    total = WeightFunction()
    for r in range(len(heights) + 1):
        for subset in combinations(heights, r):
            total = total + monomial_quasisym(height_set_inverse(subset, rank))
    return total


def pair_monomial(weight: Weight) -> LaurentPolynomial:
    """Pair a monomial quasisymmetric function against 1.

    Computed by summing the closed-form Fourier coefficients over the local
    orbit, then cross-checked against the product formula
    t^height * (1 - t^(-height vector)).
    """
    _require_quasi_dominant(weight)
    total = ZERO
    for mu in local_orbit(weight):
        total = total + c_closed_form(mu)
    expected = LaurentPolynomial.monomial(weight.height()) * one_minus_t_set(
        tuple(-h for h in height_vector(weight))
    )
    if total != expected:
        raise CrossCheckError(
            f"orbit sum {total} != closed form {expected} for monomial pairing at {weight}"
        )
    return total


def pair_fundamental(weight: Weight) -> LaurentPolynomial:
    """Pair a fundamental quasisymmetric function against 1.

    The subset sums of monomial pairings telescope to the single monomial
    t^height(weight); the telescoping is verified on every call.
    """
    _require_quasi_dominant(weight)
    heights = sorted(height_set(weight))
    rank = weight.n
    total = ZERO
    for r in range(len(heights) + 1):
        for subset in combinations(heights, r):
            total = total + pair_monomial(height_set_inverse(subset, rank))
    expected = LaurentPolynomial.monomial(weight.height())
    if total != expected:
        raise CrossCheckError(
            f"subset sum {total} != t^{weight.height()} for fundamental pairing at {weight}"
        )
    return total


# -- quasi-weight expansion of characters --------------------------------------


def quasi_weight_expansion(highest: Weight) -> dict[Weight, int]:
    """Expand an irreducible character in the fundamental quasisymmetric basis.

    Each standard tableau of the shifted shape contributes the quasi-dominant
    weight whose height set is the involution image of its descent set; the
    multiplicities count tableaux sharing that image, and they sum to the
    number of standard tableaux of the shape.
    """
    if not highest.is_first_layer():
        raise ValueError(f"{highest} is not a first-layer weight")
    if not highest.is_dominant():
        raise ValueError(f"{highest} is not dominant")
    rank = highest.n
    shape = phi_weight(highest)
    counts: Counter[Weight] = Counter()
    for tableau in syt_enumerate(shape):
        image = phi_set(tableau.descent_set(), rank)
        counts[height_set_inverse(image, rank)] += 1
    return dict(counts)
