"""Half-integer weight arithmetic for the even orthogonal algebra (type D).

All weights live in (1/2)Z^n and are stored as doubled integers, so every
computation in the package is exact. A weight (3/2, 1/2, 1/2, -1/2) is the
coordinate tuple ``coords2 = (3, 1, 1, -1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ValidationError


@dataclass(frozen=True)
class Weight:
    """A weight of o_{2n}, coordinates doubled to keep half-integers exact."""

    coords2: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords2", tuple(int(c) for c in self.coords2))
        if len(self.coords2) < 2:
            raise ValidationError(f"rank must be at least 2, got {len(self.coords2)}")

    @property
    def rank(self):
        return len(self.coords2)

    def __add__(self, other):
        if self.rank != other.rank:
            raise ValidationError("cannot add weights of different ranks")
        return Weight(tuple(a + b for a, b in zip(self.coords2, other.coords2)))

    def __neg__(self):
        return Weight(tuple(-c for c in self.coords2))

    def __str__(self):
        return "(" + ", ".join(str(c) + "/2" if c % 2 else str(c // 2) for c in self.coords2) + ")"

    def to_json(self):
        return list(self.coords2)

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data))

    @classmethod
    def from_halves(cls, halves):
        """Build from plain (half-)integer values, e.g. Fraction or float halves."""
        coords2 = []
        for h in halves:
            c2 = 2 * h
            if c2 != int(c2):
                raise ValidationError(f"{h} is not a half-integer")
            coords2.append(int(c2))
        return cls(tuple(coords2))


@dataclass(frozen=True)
class OrthWeight:
    """A dominant-weight candidate for o_k, with floor(k/2) doubled coordinates."""

    coords2: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "coords2", tuple(int(c) for c in self.coords2))
        if self.k < 1:
            raise ValidationError(f"ambient rank must be positive, got {self.k}")
        if len(self.coords2) != self.k // 2:
            raise ValidationError(
                f"o_{self.k} weights have {self.k // 2} coordinates, got {len(self.coords2)}"
            )

    def is_dominant(self):
        # even rank allows a negative last coordinate; odd rank does not
        c = self.coords2
        if not c:
            return True
        if not all(c[i] >= c[i + 1] for i in range(len(c) - 1)):
            return False
        if self.k % 2 == 0:
            return len(c) < 2 or c[-2] >= abs(c[-1])
        return c[-1] >= 0

    def validate(self):
        if not self.is_dominant():
            raise ValidationError(f"{self.coords2} is not dominant for o_{self.k}")
        return self

    def to_json(self):
        return list(self.coords2)


def is_dominant_d(w: Weight) -> bool:
    """True iff w1 >= w2 >= ... >= w_{n-1} >= |w_n| (type-D dominance)."""
    c = w.coords2
    return all(c[i] >= c[i + 1] for i in range(len(c) - 2)) and c[-2] >= abs(c[-1])


def spinor_weights(n: int) -> tuple[Weight, ...]:
    """All 2^n weights with entries +-1/2, in descending lexicographic order."""
    if n < 2:
        raise ValidationError(f"rank must be at least 2, got {n}")
    return tuple(Weight(signs) for signs in product((1, -1), repeat=n))


def omega_plus(n: int) -> Weight:
    return Weight((1,) * n)


def omega_minus(n: int) -> Weight:
    return Weight((1,) * (n - 1) + (-1,))


def delta_membership(w: Weight, big_n: int) -> bool:
    """True iff w is a highest weight occurring in the big_n-th spinor tensor power.

    The three conditions: dominance, |w_i| <= big_n/2, and 2*w_i + big_n even.
    """
    if big_n < 1:
        raise ValidationError(f"tensor power must be positive, got {big_n}")
    if not is_dominant_d(w):
        return False
    return all(-big_n <= c <= big_n and (c + big_n) % 2 == 0 for c in w.coords2)


def w0_image(w: Weight) -> Weight:
    """Image of w under the longest Weyl group element of D_n.

    Full negation for even rank; for odd rank the last coordinate survives.
    """
    if w.rank % 2 == 0:
        return -w
    return Weight(tuple(-c for c in w.coords2[:-1]) + (w.coords2[-1],))
