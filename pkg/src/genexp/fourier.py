"""Fourier coefficients of the degenerate Cherednik kernel on first-layer weights.

Two independent routes are provided.  ``c_closed_form`` evaluates the product
formula t^height * (1 - t^aggregate).  ``solve_system`` recomputes every
coefficient from scratch by propagating the defining linear relations through
each permutation orbit, seeded only by the normalization at the zero weight
and the vanishing at the theta-reflection of each dominant weight; it never
consults the closed form, so agreement of the two routes is a genuine check.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Mapping

from .laurent import ONE, T_INV, ZERO, LaurentPolynomial, one_minus_t_set
from .weights import Weight, dominant_first_layer_weights, simple_root


class PropagationError(RuntimeError):
    """Two propagation paths assigned conflicting values; an implementation bug."""


class WeightFunction:
    """A finitely supported function from weights to Laurent polynomials.

    Represents an element of the group algebra of the weight lattice: the
    value at mu is the coefficient of e^mu.  Zero values are dropped and all
    support weights must share one rank.
    """

    __slots__ = ("mapping",)

    def __init__(self, mapping: Mapping[Weight, LaurentPolynomial | int] | None = None):
        data: dict[Weight, LaurentPolynomial] = {}
        rank = None
        if mapping:
            for weight, value in mapping.items():
                if isinstance(value, int):
                    value = LaurentPolynomial({0: value})
                if rank is None:
                    rank = weight.n
                elif weight.n != rank:
                    raise ValueError("support weights must all have the same rank")
                if value:
                    data[weight] = value
        object.__setattr__(self, "mapping", data)

    def __setattr__(self, name, value):
        raise AttributeError("WeightFunction is immutable")

    @classmethod
    def delta(cls, weight: Weight) -> "WeightFunction":
        """The function e^weight."""
        return cls({weight: ONE})

    def support(self) -> set[Weight]:
        return set(self.mapping)

    def __getitem__(self, weight: Weight) -> LaurentPolynomial:
        return self.mapping.get(weight, ZERO)

    def __add__(self, other: "WeightFunction") -> "WeightFunction":
        data = dict(self.mapping)
        for weight, value in other.mapping.items():
            data[weight] = data.get(weight, ZERO) + value
        return WeightFunction(data)

    def __rmul__(self, scalar) -> "WeightFunction":
        return WeightFunction({w: scalar * v for w, v in self.mapping.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightFunction) and self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(frozenset(self.mapping.items()))

    def __len__(self) -> int:
        return len(self.mapping)

    def __repr__(self) -> str:
        items = ", ".join(f"{w}: {v}" for w, v in sorted(self.mapping.items()))
        return f"WeightFunction({{{items}}})"


@lru_cache(maxsize=None)
def c_closed_form(weight: Weight) -> LaurentPolynomial:
    """The Fourier coefficient of a first-layer weight in closed form.

    t^height(weight) times the clamped product over the aggregate vector; in
    particular zero as soon as some aggregate entry is non-negative.
    """
    aggregate = weight.aggregate_vector()
    factor = one_minus_t_set(aggregate)
    if not factor:
        return ZERO
    return LaurentPolynomial.monomial(weight.height()) * factor


def inner_with_one(f: WeightFunction) -> LaurentPolynomial:
    """Pair a finitely supported first-layer function against 1.

    By linearity this is the sum of the coefficients times the Fourier
    coefficients of the support weights.
    """
    total = ZERO
    for weight, value in f.mapping.items():
        total = total + value * c_closed_form(weight)
    return total


# -- the from-scratch linear system solver ----------------------------------

# A value a*X + b linear in the orbit unknown X, as a coefficient pair (a, b).
_Symbolic = tuple[LaurentPolynomial, LaurentPolynomial]


def solve_system(rank: int, rank_cap: int = 7) -> dict[Weight, LaurentPolynomial]:
    """Solve for the Fourier coefficients of every first-layer weight of a rank.

    Dominant weights are processed in increasing distance to the origin.  For
    each orbit the dominant value is carried as a symbol X; the relation

        y(s_i mu) = t^-1 y(mu) - y(mu - alpha_i) + t^-1 y(s_i mu + alpha_i)

    (valid whenever (mu, alpha_i-check) > 0, collapsing to y(s_i mu) =
    t^-1 y(mu) when the pairing is 1) propagates values down the orbit, the
    right-hand extras being strictly shorter weights solved in earlier rounds.
    The vanishing at the theta-reflection of the dominant element then pins X:
    its X-coefficient is a pure power of t, so the division is exact.  Any
    conflict between two propagation paths raises ``PropagationError``.
    """
    if rank < 1:
        raise ValueError("rank must be at least 1")
    if rank > rank_cap:
        raise ValueError(
            f"rank {rank} above cap {rank_cap}; orbits grow like (rank+1)! "
            "(pass a larger rank_cap to override)"
        )
    table: dict[Weight, LaurentPolynomial] = {Weight.zero(rank): ONE}
    dominants = sorted(
        dominant_first_layer_weights(rank), key=lambda w: (w.norm_sq(), w.coords)
    )
    for highest in dominants:
        if not highest:
            continue
        _solve_orbit(highest, table)
    return table


def _solve_orbit(highest: Weight, table: dict[Weight, LaurentPolynomial]) -> None:
    rank = highest.n
    symbolic: dict[Weight, _Symbolic] = {highest: (ONE, ZERO)}
    queue = deque([highest])
    while queue:
        mu = queue.popleft()
        a_mu, b_mu = symbolic[mu]
        for i in range(1, rank + 1):
            pairing = mu.pairing_coroot(i)
            if pairing <= 0:
                continue
            nu = mu.simple_reflect(i)
            if pairing == 1:
                candidate = (T_INV * a_mu, T_INV * b_mu)
            else:
                alpha = simple_root(i, rank)
                known = T_INV * table[nu + alpha] - table[mu - alpha]
                candidate = (T_INV * a_mu, T_INV * b_mu + known)
            if nu in symbolic:
                if symbolic[nu] != candidate:
                    raise PropagationError(
                        f"conflicting propagated values at {nu} in the orbit of {highest}"
                    )
            else:
                symbolic[nu] = candidate
                queue.append(nu)
    a_pin, b_pin = symbolic[highest.theta_reflect()]
    terms = a_pin.terms()
    if len(terms) != 1 or terms[0][1] != 1:
        raise PropagationError(
            f"X-coefficient {a_pin} at the pin of orbit {highest} is not a unit monomial"
        )
    # a_pin = t^-d, so X = -b_pin / a_pin = -b_pin * t^d exactly.
    x_value = -b_pin * LaurentPolynomial.monomial(-terms[0][0])
    for mu, (a, b) in symbolic.items():
        table[mu] = a * x_value + b
