"""Graded multiplicities of first-layer irreducibles in the harmonic polynomials.

Five independent computations of the same polynomial E(V_lambda):

* ``weights``       -- multiplicity-weighted sum of closed-form Fourier
                       coefficients over all weights of the irreducible;
* ``signed``        -- the signed count of (weight, aggregate-subset) pairs by
                       height, truncated to exponents 1..height(lambda);
* ``quasiweights``  -- quasi-weight multiplicities times t^height;
* ``tableaux``      -- generating function of the non-descent height statistic
                       over standard tableaux of the shifted shape;
* ``charge``        -- generating function of the charge of the reading word;
* ``hp``            -- the alternating symmetric-group sum of a t-analogue of
                       the partition function counting decompositions into
                       positive roots (the fully independent oracle, capped by
                       rank since it scans all (n+1)! permutations).

``full_report`` runs a set of methods, compares the polynomials exactly and
extracts the exponent multiset.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .fourier import c_closed_form
from .laurent import ONE, ZERO, LaurentPolynomial
from .quasisym import CrossCheckError, quasi_weight_expansion
from .tableaux import kostka_number, phi_weight, syt_enumerate
from .weights import Weight, weights_of_irrep

DEFAULT_HP_CAP = 5

PAPER_METHODS = ("weights", "signed", "quasiweights", "tableaux", "charge")
ALL_METHODS = PAPER_METHODS + ("hp",)


def _require_dominant_first_layer(weight: Weight) -> None:
    if not weight.is_first_layer():
        raise ValueError(f"{weight} is not a first-layer weight")
    if not weight.is_dominant():
        raise ValueError(f"{weight} is not dominant")


def exponents_by_weights(highest: Weight) -> LaurentPolynomial:
    """Sum of m(mu) * t^height(mu) * (1 - t^aggregate(mu)) over all weights mu."""
    _require_dominant_first_layer(highest)
    total = ZERO
    for mu, multiplicity in weights_of_irrep(highest).items():
        total = total + multiplicity * c_closed_form(mu)
    return total


def signed_height_counts(highest: Weight) -> dict[int, int]:
    """Signed counts (even minus odd) of aggregate-subset pairs at each height.

    A pair is a weight mu of the irreducible, counted with multiplicity, whose
    aggregate vector is strictly negative (vacuously so for the zero weight),
    together with a subset A of its aggregate positions; it lands at
    height(mu) + sum of the selected aggregate entries with sign (-1)^|A|.
    """
    _require_dominant_first_layer(highest)
    counts: dict[int, int] = {}
    for mu, multiplicity in weights_of_irrep(highest).items():
        aggregate = mu.aggregate_vector()
        if any(entry >= 0 for entry in aggregate):
            continue
        base = mu.height()
        for r in range(len(aggregate) + 1):
            sign = -1 if r % 2 else 1
            for chosen in combinations(aggregate, r):
                level = base + sum(chosen)
                counts[level] = counts.get(level, 0) + sign * multiplicity
    return {level: value for level, value in counts.items() if value != 0}


def exponents_by_signed_count(highest: Weight) -> LaurentPolynomial:
    """The signed generating function, summed over exponents 1..height(highest).

    The zero highest weight has an empty sum range; by convention the result
    is 1 in that case.
    """
    _require_dominant_first_layer(highest)
    if not highest:
        return ONE
    top = highest.height()
    counts = signed_height_counts(highest)
    return LaurentPolynomial({i: c for i, c in counts.items() if 1 <= i <= top})


def exponents_by_quasiweights(highest: Weight) -> LaurentPolynomial:
    """Sum of quasi-weight multiplicities times t^height over the quasi-weights."""
    _require_dominant_first_layer(highest)
    return LaurentPolynomial.from_terms(
        (mu.height(), multiplicity)
        for mu, multiplicity in quasi_weight_expansion(highest).items()
    )


def exponents_by_tableaux(highest: Weight) -> LaurentPolynomial:
    """Generating function of the height statistic over standard tableaux."""
    _require_dominant_first_layer(highest)
    shape = phi_weight(highest)
    return LaurentPolynomial.from_terms((t.height(), 1) for t in syt_enumerate(shape))


def exponents_by_charge(highest: Weight) -> LaurentPolynomial:
    """Generating function of the charge statistic over standard tableaux."""
    _require_dominant_first_layer(highest)
    shape = phi_weight(highest)
    return LaurentPolynomial.from_terms((t.charge(), 1) for t in syt_enumerate(shape))


# -- the independent oracle ----------------------------------------------------

_kostant_memos: dict[int, dict] = {}


def _prefix_feasible(gamma: tuple[int, ...]) -> bool:
    # A vector is a non-negative integer combination of positive roots exactly
    # when it sums to zero with all proper prefix sums non-negative.
    partial = 0
    for x in gamma[:-1]:
        partial += x
        if partial < 0:
            return False
    return True


def _t_partition_count(
    gamma: tuple[int, ...], k: int, roots: list[tuple[int, int]], memo: dict
) -> LaurentPolynomial:
    """Decompositions of gamma into the first k positive roots, graded by count."""
    if not _prefix_feasible(gamma):
        return ZERO
    if k == 0:
        return ONE if not any(gamma) else ZERO
    key = (gamma, k)
    cached = memo.get(key)
    if cached is not None:
        return cached
    i, j = roots[k - 1]
    total = _t_partition_count(gamma, k - 1, roots, memo)
    reduced = list(gamma)
    uses = 0
    while True:
        uses += 1
        reduced[i] -= 1
        reduced[j] += 1
        candidate = tuple(reduced)
        if not _prefix_feasible(candidate):
            break
        total = total + LaurentPolynomial.monomial(uses) * _t_partition_count(
            candidate, k - 1, roots, memo
        )
    memo[key] = total
    return total


def _permutation_sign(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def exponents_hp_oracle(highest: Weight, rank_cap: int = DEFAULT_HP_CAP) -> LaurentPolynomial:
    """Alternating sum over the symmetric group of graded root-decomposition counts.

    With rho = (n, n-1, ..., 0), each permutation w contributes its sign times
    the graded count of decompositions of w(highest + rho) - rho into positive
    roots.  Only the difference enters, so the non-standard rho keeps all
    coordinates integral.
    """
    _require_dominant_first_layer(highest)
    rank = highest.n
    if rank > rank_cap:
        raise ValueError(
            f"rank {rank} above oracle cap {rank_cap}; the permutation sum has "
            f"(rank+1)! terms (pass a larger rank_cap to override)"
        )
    rho = tuple(range(rank, -1, -1))
    shifted = tuple(x + r for x, r in zip(highest.coords, rho))
    roots = [(i, j) for i in range(rank + 1) for j in range(i + 1, rank + 1)]
    memo = _kostant_memos.setdefault(rank, {})
    total = ZERO
    for perm in permutations(range(rank + 1)):
        gamma = tuple(shifted[perm[k]] - rho[k] for k in range(rank + 1))
        if not _prefix_feasible(gamma):
            continue
        sign = _permutation_sign(perm)
        contribution = _t_partition_count(gamma, len(roots), roots, memo)
        total = total + sign * contribution
    return total


# -- the combined report ---------------------------------------------------------


@dataclass
class ExponentReport:
    """Per-method polynomials for one highest weight, with the agreement verdict."""

    weight: Weight
    polynomials: dict[str, LaurentPolynomial]
    agreement: bool
    disagreement: str | None
    exponents: tuple[int, ...] | None

    @property
    def value(self) -> LaurentPolynomial:
        """The agreed polynomial; meaningful only when agreement holds."""
        return next(iter(self.polynomials.values()))


def compute(highest: Weight, method: str, hp_cap: int = DEFAULT_HP_CAP) -> LaurentPolynomial:
    """Run a single named method."""
    if method == "weights":
        return exponents_by_weights(highest)
    if method == "signed":
        return exponents_by_signed_count(highest)
    if method == "quasiweights":
        return exponents_by_quasiweights(highest)
    if method == "tableaux":
        return exponents_by_tableaux(highest)
    if method == "charge":
        return exponents_by_charge(highest)
    if method == "hp":
        return exponents_hp_oracle(highest, rank_cap=hp_cap)
    raise ValueError(f"unknown method {method!r}; choose from {ALL_METHODS}")


def _first_difference(name_a: str, p: LaurentPolynomial, name_b: str, q: LaurentPolynomial) -> str:
    exponents = sorted(set(dict(p.terms())) | set(dict(q.terms())))
    for e in exponents:
        if p.coefficient(e) != q.coefficient(e):
            return (
                f"methods {name_a!r} and {name_b!r} differ at t^{e}: "
                f"{p.coefficient(e)} vs {q.coefficient(e)}"
            )
    return f"methods {name_a!r} and {name_b!r} differ"


def full_report(
    highest: Weight,
    methods: tuple[str, ...] | None = None,
    hp_cap: int = DEFAULT_HP_CAP,
) -> ExponentReport:
    """Run the requested methods (default: all applicable) and compare exactly.

    On agreement the sorted exponent multiset is extracted and the evaluation
    at t = 1 is checked against the dimension of the zero weight space, the
    number of standard tableaux of the shifted shape.
    """
    _require_dominant_first_layer(highest)
    if methods is None:
        methods = tuple(
            m for m in ALL_METHODS if m != "hp" or highest.n <= hp_cap
        )
    if not methods:
        raise ValueError("at least one method is required")
    polynomials = {name: compute(highest, name, hp_cap) for name in methods}
    reference_name = methods[0]
    reference = polynomials[reference_name]
    disagreement = None
    for name in methods[1:]:
        if polynomials[name] != reference:
            disagreement = _first_difference(
                reference_name, reference, name, polynomials[name]
            )
            break
    if disagreement is not None:
        return ExponentReport(highest, polynomials, False, disagreement, None)
    if any(c < 0 for _, c in reference.terms()):
        raise CrossCheckError(f"negative coefficient in E({highest}) = {reference}")
    zero_space_dim = kostka_number(phi_weight(highest), (1,) * (highest.n + 1))
    if reference.evaluate_at_one() != zero_space_dim:
        raise CrossCheckError(
            f"E({highest})(1) = {reference.evaluate_at_one()} but the zero weight "
            f"space has dimension {zero_space_dim}"
        )
    multiset = []
    for exponent, coefficient in reference.terms():
        multiset.extend([exponent] * coefficient)
    return ExponentReport(highest, polynomials, True, None, tuple(multiset))
