"""The type A_n weight lattice over sum-zero integer vectors.

A weight of rank n is a vector of n+1 integers summing to zero; the symmetric
group S_{n+1} acts by permuting coordinates.  First-layer weights (all
coordinates >= -1, the zero weight included) are the ones carrying the small
representations this package is about; each comes with a height, a length and
co-length, and the aggregate vector of suffix sums that controls the vanishing
of its Fourier coefficient.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from . import tableaux


class Weight:
    """An element of the rank-n root lattice, stored as a tuple of n+1 integers."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[int]):
        coords = tuple(int(x) for x in coords)
        if len(coords) < 2:
            raise ValueError("a weight needs at least two coordinates (rank >= 1)")
        if sum(coords) != 0:
            raise ValueError(f"coordinates {coords} do not sum to zero")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * (rank + 1))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse comma-separated integer coordinates, e.g. "0,2,0,1,0,0,-1,-1,-1"."""
        try:
            coords = tuple(int(piece) for piece in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse weight from {text!r}") from None
        return cls(coords)

    @property
    def n(self) -> int:
        """The rank: one less than the number of coordinates."""
        return len(self.coords) - 1

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.coords)

    def __repr__(self) -> str:
        return f"Weight({self.coords!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __lt__(self, other: "Weight") -> bool:
        return self.coords < other.coords

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(a + b for a, b in zip(self.coords, other.coords, strict=True))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(a - b for a, b in zip(self.coords, other.coords, strict=True))

    def __bool__(self) -> bool:
        return any(self.coords)

    # -- basic invariants ----------------------------------------------------

    def height(self) -> int:
        """The pairing with the half-sum of positive coroots.

        With rho = (n/2, n/2 - 1, ..., -n/2) and sum-zero coordinates this is
        the integer -sum(k * coords[k]) over 0-based positions k.
        """
        return -sum(k * x for k, x in enumerate(self.coords))

    def norm_sq(self) -> int:
        """Squared Euclidean distance to the origin."""
        return sum(x * x for x in self.coords)

    def is_dominant(self) -> bool:
        return all(self.coords[i] >= self.coords[i + 1] for i in range(self.n))

    def is_first_layer(self) -> bool:
        """All coordinates >= -1; the zero weight counts as first layer."""
        return min(self.coords) >= -1

    def dominant_representative(self) -> "Weight":
        """The unique dominant element of the permutation orbit."""
        return Weight(sorted(self.coords, reverse=True))

    # -- reflections -----------------------------------------------------------

    def pairing_coroot(self, i: int) -> int:
        """(lambda, alpha_i-check) = coords[i] - coords[i+1] with 1-based i."""
        if not 1 <= i <= self.n:
            raise ValueError(f"simple root index {i} out of range 1..{self.n}")
        return self.coords[i - 1] - self.coords[i]

    def simple_reflect(self, i: int) -> "Weight":
        """Swap coordinates i and i+1 (1-based)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"simple root index {i} out of range 1..{self.n}")
        coords = list(self.coords)
        coords[i - 1], coords[i] = coords[i], coords[i - 1]
        return Weight(coords)

    def theta_reflect(self) -> "Weight":
        """Reflection in the highest root: swap the first and last coordinates."""
        coords = list(self.coords)
        coords[0], coords[-1] = coords[-1], coords[0]
        return Weight(coords)

    # -- first layer data ------------------------------------------------------

    def _require_first_layer(self) -> None:
        if not self.is_first_layer():
            raise ValueError(f"{self} is not a first-layer weight")

    def length(self) -> int:
        """Number of non-negative coordinates."""
        self._require_first_layer()
        return sum(1 for x in self.coords if x >= 0)

    def co_length(self) -> int:
        """Number of negative coordinates (each necessarily -1)."""
        self._require_first_layer()
        return sum(1 for x in self.coords if x < 0)

    def aggregate_vector(self) -> tuple[int, ...]:
        """Suffix sums of the coordinates starting at each -1 position.

        Empty for the zero weight.  The j-th entry is the sum of all
        coordinates from the j-th negative position to the end.
        """
        self._require_first_layer()
        entries = []
        suffix = 0
        for x in reversed(self.coords):
            suffix += x
            if x < 0:
                entries.append(suffix)
        entries.reverse()
        return tuple(entries)


def simple_root(i: int, rank: int) -> Weight:
    """alpha_i = e_i - e_{i+1} as a weight of the given rank."""
    if not 1 <= i <= rank:
        raise ValueError(f"simple root index {i} out of range 1..{rank}")
    coords = [0] * (rank + 1)
    coords[i - 1] = 1
    coords[i] = -1
    return Weight(coords)


def theta(rank: int) -> Weight:
    """The highest root e_1 - e_{n+1}."""
    coords = [0] * (rank + 1)
    coords[0] = 1
    coords[-1] = -1
    return Weight(coords)


def weight_from_partition(parts: tuple[int, ...], rank: int | None = None) -> Weight:
    """The first-layer dominant weight whose shifted coordinates are ``parts``.

    The partition is padded with zeros to rank+1 coordinates and then reduced
    by one in every coordinate; the partition must sum to rank+1.
    """
    total = sum(parts)
    if rank is None:
        rank = total - 1
    if rank < 1:
        raise ValueError("rank must be at least 1")
    if total != rank + 1:
        raise ValueError(f"{parts} is not a partition of rank+1 = {rank + 1}")
    if len(parts) > rank + 1:
        raise ValueError(f"{parts} has more than rank+1 parts")
    padded = tuple(parts) + (0,) * (rank + 1 - len(parts))
    return Weight(x - 1 for x in padded)


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` non-negative integers summing to ``total``, lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def first_layer_weights(rank: int) -> list[Weight]:
    """All first-layer weights of the given rank, in lex order of coordinates.

    These are exactly the shifts c - 1 of weak compositions c of rank+1 into
    rank+1 parts.
    """
    if rank < 1:
        raise ValueError("rank must be at least 1")
    return [
        Weight(x - 1 for x in comp) for comp in weak_compositions(rank + 1, rank + 1)
    ]


def dominant_first_layer_weights(rank: int) -> list[Weight]:
    """Dominant first-layer weights of the given rank, one per partition of rank+1."""
    if rank < 1:
        raise ValueError("rank must be at least 1")
    return [weight_from_partition(p, rank) for p in tableaux.partitions(rank + 1)]


@lru_cache(maxsize=None)
def _weights_of_irrep_items(highest: Weight) -> tuple[tuple[Weight, int], ...]:
    rank = highest.n
    shape = tableaux.phi_weight(highest)
    items = []
    for comp in weak_compositions(rank + 1, rank + 1):
        multiplicity = tableaux.kostka_number(shape, comp)
        if multiplicity:
            items.append((Weight(x - 1 for x in comp), multiplicity))
    return tuple(items)


def weights_of_irrep(highest: Weight) -> dict[Weight, int]:
    """All weights of the irreducible with the given highest weight, with multiplicities.

    For a first-layer dominant highest weight the weights mu are exactly the
    shifts of weak compositions of rank+1, and the multiplicity of mu is the
    Kostka number of the highest shape with content mu + 1.
    """
    if not highest.is_first_layer():
        raise ValueError(f"{highest} is not a first-layer weight")
    if not highest.is_dominant():
        raise ValueError(f"{highest} is not dominant")
    return dict(_weights_of_irrep_items(highest))
