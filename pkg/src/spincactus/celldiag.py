"""Regular cell diagrams and regular cell tables.

A regular cell diagram of length N and height n is a pair of non-negative
integer rows (l, r) around a vertical axis with r_i + l_i = N, r weakly
decreasing and r_{n-1} >= l_n. Diagrams of length N biject with the highest
weights occurring in the N-th spinor tensor power via r_i = N/2 + w_i.

A regular cell table is a nested chain of diagrams of lengths 1..N, stored
here as its step sequence: the spinor weights (mu_1, ..., mu_N) whose prefix
sums walk through the chain. Every prefix sum must be dominant and the first
step must be one of the two dominant spinor weights.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .weights import (
    Weight,
    delta_membership,
    is_dominant_d,
    omega_minus,
    omega_plus,
    spinor_weights,
)


@dataclass(frozen=True)
class CellDiagram:
    l: tuple[int, ...]
    r: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(int(x) for x in self.l))
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))
        n = len(self.r)
        if n < 2 or len(self.l) != n:
            raise ValidationError("diagram needs rows l, r of equal length >= 2")
        if any(x < 0 for x in self.l + self.r):
            raise ValidationError("row lengths must be non-negative")
        big_n = self.l[0] + self.r[0]
        if big_n < 1:
            raise ValidationError("diagram length must be positive")
        if any(li + ri != big_n for li, ri in zip(self.l, self.r)):
            raise ValidationError(f"all rows must have total length {big_n}")
        if any(self.r[i] < self.r[i + 1] for i in range(n - 1)):
            raise ValidationError("right rows must be weakly decreasing")
        if self.r[n - 2] < self.l[n - 1]:
            raise ValidationError("need r_{n-1} >= l_n")

    @property
    def length(self):
        return self.l[0] + self.r[0]

    @property
    def height(self):
        return len(self.r)

    def to_json(self):
        return {"N": self.length, "n": self.height, "l": list(self.l), "r": list(self.r)}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["l"]), tuple(data["r"]))


def diagram_of_weight(w: Weight, big_n: int) -> CellDiagram:
    """The diagram with r_i = big_n/2 + w_i, defined exactly on member weights."""
    if not delta_membership(w, big_n):
        raise ValidationError(_delta_violation(w, big_n))
    r = tuple((big_n + c) // 2 for c in w.coords2)
    l = tuple(big_n - ri for ri in r)
    return CellDiagram(l, r)


def weight_of_diagram(d: CellDiagram) -> Weight:
    """Inverse of diagram_of_weight: w_i = (r_i - l_i)/2."""
    return Weight(tuple(ri - li for li, ri in zip(d.l, d.r)))


def _delta_violation(w, big_n):
    if not is_dominant_d(w):
        return f"{w} is not dominant"
    for c in w.coords2:
        if not -big_n <= c <= big_n:
            return f"coordinate {c}/2 of {w} is outside [-{big_n}/2, {big_n}/2]"
        if (c + big_n) % 2:
            return f"coordinate {c}/2 of {w} has the wrong parity for length {big_n}"
    raise AssertionError("weight is a member")  # pragma: no cover


def enumerate_delta(n: int, big_n: int) -> list[Weight]:
    """All member weights at height n and length big_n, descending lex order."""
    if n < 2:
        raise ValidationError(f"height must be at least 2, got {n}")
    if big_n < 1:
        raise ValidationError(f"length must be positive, got {big_n}")
    out = []

    def extend(prefix):
        i = len(prefix)
        if i == n:
            if prefix[-2] >= abs(prefix[-1]):
                out.append(Weight(tuple(prefix)))
            return
        top = big_n if i == 0 else prefix[-1]
        lo = -big_n
        if i == n - 1:
            # the last coordinate may be negative but not below -w_{n-1}
            lo = -prefix[-1]
        for c in range(top, lo - 1, -2):
            extend(prefix + [c])

    extend([])
    return out


def contains(d1: CellDiagram, d2: CellDiagram) -> bool:
    """Componentwise containment of rows on both sides of the axis."""
    if d1.height != d2.height:
        raise ValidationError("diagrams must have equal heights")
    return all(a >= b for a, b in zip(d1.l, d2.l)) and all(
        a >= b for a, b in zip(d1.r, d2.r)
    )


def _is_spinor_step(w: Weight) -> bool:
    return all(c in (1, -1) for c in w.coords2)


@dataclass(frozen=True)
class CellTable:
    """A regular cell table, stored as its step sequence of spinor weights."""

    steps: tuple[Weight, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise ValidationError("a table has at least one step")
        n = self.steps[0].rank
        for k, mu in enumerate(self.steps, 1):
            if mu.rank != n:
                raise ValidationError("all steps must share one rank")
            if not _is_spinor_step(mu):
                raise ValidationError(f"step {k} is not a spinor weight: {mu}")
        if self.steps[0] not in (omega_plus(n), omega_minus(n)):
            raise ValidationError(f"first step must be one of the two dominant spinor weights, got {self.steps[0]}")
        total = [0] * n
        for k, mu in enumerate(self.steps, 1):
            total = [a + b for a, b in zip(total, mu.coords2)]
            if not is_dominant_d(Weight(tuple(total))):
                raise ValidationError(f"prefix sum at position {k} is not dominant")

    @property
    def length(self):
        return len(self.steps)

    @property
    def height(self):
        return self.steps[0].rank

    def weight(self) -> Weight:
        total = [0] * self.height
        for mu in self.steps:
            total = [a + b for a, b in zip(total, mu.coords2)]
        return Weight(tuple(total))

    def shape(self) -> CellDiagram:
        return diagram_of_weight(self.weight(), self.length)

    def diagram_chain(self) -> list[CellDiagram]:
        """The nested diagrams of the prefix sums, lengths 1..N."""
        chain = []
        total = [0] * self.height
        for k, mu in enumerate(self.steps, 1):
            total = [a + b for a, b in zip(total, mu.coords2)]
            chain.append(diagram_of_weight(Weight(tuple(total)), k))
        return chain

    def prefix(self, k: int) -> "CellTable":
        return CellTable(self.steps[:k])

    def flat2(self):
        return tuple(c for mu in self.steps for c in mu.coords2)

    def to_json(self):
        return {"steps2": [list(mu.coords2) for mu in self.steps]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(Weight(tuple(s)) for s in data["steps2"]))


def table_from_steps(steps) -> CellTable:
    """Validate a step sequence and return the table (membership in T^N)."""
    return CellTable(tuple(steps))


def steps_from_diagram_chain(chain) -> CellTable:
    """Recover the step sequence from a nested diagram chain of lengths 1..N."""
    chain = list(chain)
    if not chain:
        raise ValidationError("empty chain")
    prev_l = prev_r = (0,) * chain[0].height
    steps = []
    for k, d in enumerate(chain, 1):
        if d.length != k:
            raise ValidationError(f"chain entry {k} has length {d.length}, expected {k}")
        if k > 1 and not contains(d, chain[k - 2]):
            raise ValidationError(f"chain entry {k} does not contain entry {k - 1}")
        mu = tuple(
            (d.r[i] - prev_r[i]) - (d.l[i] - prev_l[i]) for i in range(d.height)
        )
        steps.append(Weight(mu))
        prev_l, prev_r = d.l, d.r
    return table_from_steps(steps)


def enumerate_tables(shape: CellDiagram) -> list[CellTable]:
    """All tables of the given shape, descending lex order on flattened steps."""
    n = shape.height
    big_n = shape.length
    target = weight_of_diagram(shape).coords2
    steps_pool = spinor_weights(n)
    first_pool = (omega_plus(n), omega_minus(n))
    out = []

    def reachable(total, k):
        remaining = big_n - k
        return all(abs(t - c) <= remaining for t, c in zip(target, total))

    def extend(prefix_steps, total, k):
        if k == big_n:
            if tuple(total) == target:
                out.append(CellTable(tuple(prefix_steps)))
            return
        pool = first_pool if k == 0 else steps_pool
        for mu in pool:
            new_total = [a + b for a, b in zip(total, mu.coords2)]
            if not is_dominant_d(Weight(tuple(new_total))):
                continue
            if not reachable(new_total, k + 1):
                continue
            extend(prefix_steps + [mu], new_total, k + 1)

    extend([], [0] * n, 0)
    out.sort(key=CellTable.flat2, reverse=True)
    return out
