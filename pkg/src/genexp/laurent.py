"""Exact arithmetic for integer-coefficient Laurent polynomials in one variable t.

This is the universal value type of the package: every graded multiplicity,
Fourier coefficient and pairing computed elsewhere is a ``LaurentPolynomial``.
Coefficients are arbitrary-precision Python integers, so no identity is ever
at the mercy of overflow or rounding.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPolynomial:
    """A Laurent polynomial stored as a map from exponent to nonzero coefficient.

    The representation is canonical: zero coefficients are never stored, the
    zero polynomial is the empty map, and equality is map equality.
    Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        data = {}
        if coeffs:
            for exponent, coefficient in coeffs.items():
                if coefficient != 0:
                    data[int(exponent)] = coefficient
        object.__setattr__(self, "_coeffs", data)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        """c * t**exponent."""
        return cls({exponent: coefficient})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> "LaurentPolynomial":
        """Sum of (exponent, coefficient) terms; repeated exponents accumulate."""
        data: dict[int, int] = {}
        for exponent, coefficient in terms:
            data[exponent] = data.get(exponent, 0) + coefficient
        return cls(data)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "LaurentPolynomial":
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, int):
            return LaurentPolynomial({0: value})
        return NotImplemented

    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._coeffs)
        for exponent, coefficient in other._coeffs.items():
            data[exponent] = data.get(exponent, 0) + coefficient
        return LaurentPolynomial(data)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                data[e] = data.get(e, 0) + c1 * c2
        return LaurentPolynomial(data)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPolynomial":
        if power < 0:
            raise ValueError("negative powers of a general Laurent polynomial are not defined")
        result = LaurentPolynomial.one()
        for _ in range(power):
            result = result * self
        return result

    # -- inspection --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    def degree(self) -> int | None:
        """Largest exponent, or None for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    def valuation(self) -> int | None:
        """Smallest exponent, or None for the zero polynomial."""
        return min(self._coeffs) if self._coeffs else None

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    def evaluate_at_one(self) -> int:
        """Sum of all coefficients; the substitution t = 1."""
        return sum(self._coeffs.values())

    def evaluate(self, value):
        """Substitute a number for t.

        Use ``fractions.Fraction`` for exact evaluation at a rational point;
        negative exponents require a nonzero value.
        """
        return sum(c * value ** e for e, c in self._coeffs.items())

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for exponent, coefficient in self.terms():
            if exponent == 0:
                body = str(abs(coefficient))
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                body = power if abs(coefficient) == 1 else f"{abs(coefficient)}{power}"
            if not pieces:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({dict(self.terms())!r})"

    def to_json_dict(self) -> dict[str, int]:
        """JSON form: exponent (as string) -> coefficient, ascending exponent."""
        return {str(e): c for e, c in self.terms()}

    @classmethod
    def from_json_dict(cls, data: Mapping[str, int]) -> "LaurentPolynomial":
        return cls({int(e): int(c) for e, c in data.items()})


ZERO = LaurentPolynomial.zero()
ONE = LaurentPolynomial.one()
T = LaurentPolynomial.monomial(1)
T_INV = LaurentPolynomial.monomial(-1)


def one_minus_t_set(exponents: Iterable[int]) -> LaurentPolynomial:
    """The product (1 - t^S) over a multiset S of integers.

    Empty S gives 1.  Each element contributes a factor 1 - t^min(0, s), so the
    result vanishes as soon as S contains a non-negative element and the whole
    product is nonzero exactly when S consists of negative integers.
    """
    result = ONE
    for s in exponents:
        result = result * (ONE - LaurentPolynomial.monomial(min(0, s)))
        if not result:
            return ZERO
    return result


def t_set_minus_one(exponents: Iterable[int]) -> LaurentPolynomial:
    """The product (t^S - 1) over a multiset S of integers, taken verbatim.

    Empty S gives 1.  Unlike ``one_minus_t_set`` there is no clamping: each
    element s contributes t^s - 1, so subsets of a set of positive heights
    telescope as sum over S of (t^S - 1) = t^(sum of heights).
    """
    result = ONE
    for s in exponents:
        result = result * (LaurentPolynomial.monomial(s) - ONE)
        if not result:
            return ZERO
    return result
