"""The spin crystal of the even orthogonal algebra and its tensor powers.

Elements of the basic crystal are the 2^n sign vectors, packed into integer
bitmasks (bit j set means coordinate j+1 is +1/2). For i < n the lowering
operator f_i turns signs (+,-) at positions (i, i+1) into (-,+); f_n turns
(+,+) at positions (n-1, n) into (-,-). Words in the N-th tensor power are
tuples of masks; the tensor rule moves e_i to the first factor of a pair
exactly when eps_i(first) exceeds phi_i(second), and f_i when it is at least
phi_i(second).

The bijection between highest-weight words and regular cell tables reads the
factor weights right to left: under this tensor rule the last factor of a
highest-weight word is the one forced into a dominant spinor weight, so the
branching sequence of the component is the reversed factor sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .celldiag import CellTable, table_from_steps
from .errors import BudgetExceededError, ValidationError
from .weights import Weight

DEFAULT_BUDGET_BITS = 20
MAX_BUDGET_BITS = 24


def _check_budget(needed_bits, budget_bits):
    if budget_bits > MAX_BUDGET_BITS:
        raise ValidationError(f"budget_bits must be at most {MAX_BUDGET_BITS}")
    if needed_bits > budget_bits:
        raise BudgetExceededError(needed_bits, budget_bits)


@dataclass(frozen=True)
class Component:
    """One connected component: its highest-weight word, weight, and size."""

    hw_word: tuple[int, ...]
    weight: Weight
    size: int


class SpinCrystal:
    """Crystal structure on sign vectors and their tensor words, for fixed rank n."""

    def __init__(self, n):
        if n < 2:
            raise ValidationError(f"rank must be at least 2, got {n}")
        self.n = n

    # -- single factors ----------------------------------------------------

    def elements(self):
        return range(1 << self.n)

    def element_weight(self, b) -> Weight:
        return Weight(tuple(1 if (b >> j) & 1 else -1 for j in range(self.n)))

    def element_of_weight(self, w: Weight):
        if w.rank != self.n or any(c not in (1, -1) for c in w.coords2):
            raise ValidationError(f"{w} is not a spinor weight of rank {self.n}")
        mask = 0
        for j, c in enumerate(w.coords2):
            if c == 1:
                mask |= 1 << j
        return mask

    def _check_index(self, i):
        if not 1 <= i <= self.n:
            raise ValidationError(f"crystal index must be in 1..{self.n}, got {i}")

    def spin_f(self, i, b):
        self._check_index(i)
        n = self.n
        if i < n:
            hi, lo = (b >> (i - 1)) & 1, (b >> i) & 1
            if hi == 1 and lo == 0:
                return b ^ (1 << (i - 1)) ^ (1 << i)
            return None
        pair = (b >> (n - 2)) & 3
        if pair == 3:
            return b ^ (3 << (n - 2))
        return None

    def spin_e(self, i, b):
        self._check_index(i)
        n = self.n
        if i < n:
            hi, lo = (b >> (i - 1)) & 1, (b >> i) & 1
            if hi == 0 and lo == 1:
                return b ^ (1 << (i - 1)) ^ (1 << i)
            return None
        pair = (b >> (n - 2)) & 3
        if pair == 0:
            return b ^ (3 << (n - 2))
        return None

    def _eps1(self, i, b):
        return 0 if self.spin_e(i, b) is None else 1

    def _phi1(self, i, b):
        return 0 if self.spin_f(i, b) is None else 1

    # -- tensor words -------------------------------------------------------

    def word_weight(self, w) -> Weight:
        total = [0] * self.n
        for b in w:
            for j in range(self.n):
                total[j] += 1 if (b >> j) & 1 else -1
        return Weight(tuple(total))

    def _act_position(self, i, w, lowering):
        # Walking the left-nested pairs from the top: descend into the prefix
        # unless the comparison hands the move to the current last factor.
        # The surviving position is the largest k whose factor wins.
        pos = 0
        eps_prefix = 0
        for k, b in enumerate(w):
            p = self._phi1(i, b)
            if k > 0:
                if lowering:
                    if eps_prefix < p:
                        pos = k
                else:
                    if eps_prefix <= p:
                        pos = k
            eps_prefix = self._eps1(i, b) + max(0, eps_prefix - p)
        return pos

    def tensor_f(self, i, w):
        pos = self._act_position(i, w, lowering=True)
        moved = self.spin_f(i, w[pos])
        if moved is None:
            return None
        return w[:pos] + (moved,) + w[pos + 1 :]

    def tensor_e(self, i, w):
        pos = self._act_position(i, w, lowering=False)
        moved = self.spin_e(i, w[pos])
        if moved is None:
            return None
        return w[:pos] + (moved,) + w[pos + 1 :]

    def eps(self, i, w):
        """Largest power of e_i that does not kill w, by repeated application."""
        count = 0
        cur = self.tensor_e(i, w)
        while cur is not None:
            count += 1
            cur = self.tensor_e(i, cur)
        return count

    def phi(self, i, w):
        """Largest power of f_i that does not kill w, by repeated application."""
        count = 0
        cur = self.tensor_f(i, w)
        while cur is not None:
            count += 1
            cur = self.tensor_f(i, cur)
        return count

    def is_highest_weight(self, w):
        return all(self.tensor_e(i, w) is None for i in range(1, self.n + 1))

    def is_lowest_weight(self, w):
        return all(self.tensor_f(i, w) is None for i in range(1, self.n + 1))

    def to_highest_weight(self, w):
        moved = True
        while moved:
            moved = False
            for i in range(1, self.n + 1):
                up = self.tensor_e(i, w)
                if up is not None:
                    w = up
                    moved = True
                    break
        return w

    def to_lowest_weight(self, w):
        moved = True
        while moved:
            moved = False
            for i in range(1, self.n + 1):
                down = self.tensor_f(i, w)
                if down is not None:
                    w = down
                    moved = True
                    break
        return w

    def component_members(self, w, budget_bits=DEFAULT_BUDGET_BITS):
        """All words in the component of w, found by lowering from its top."""
        limit = 1 << budget_bits
        if budget_bits > MAX_BUDGET_BITS:
            raise ValidationError(f"budget_bits must be at most {MAX_BUDGET_BITS}")
        hw = self.to_highest_weight(w)
        seen = {hw}
        queue = [hw]
        while queue:
            cur = queue.pop()
            for i in range(1, self.n + 1):
                down = self.tensor_f(i, cur)
                if down is not None and down not in seen:
                    if len(seen) >= limit:
                        raise BudgetExceededError(budget_bits + 1, budget_bits)
                    seen.add(down)
                    queue.append(down)
        return hw, seen

    # -- whole-crystal scans --------------------------------------------------

    def all_words(self, big_n):
        return product(range(1 << self.n), repeat=big_n)

    def components(self, big_n, budget_bits=DEFAULT_BUDGET_BITS):
        """Partition the full tensor power into components, scan order deterministic."""
        _check_budget(self.n * big_n, budget_bits)
        comps = []
        visited = set()
        for w in self.all_words(big_n):
            if w in visited:
                continue
            hw, members = self.component_members(w, budget_bits)
            hw_count = sum(1 for m in members if self.is_highest_weight(m))
            lw_count = sum(1 for m in members if self.is_lowest_weight(m))
            assert hw_count == 1 and lw_count == 1, (
                "every component must have exactly one top and one bottom word"
            )
            visited |= members
            comps.append(Component(hw, self.word_weight(hw), len(members)))
        assert len(visited) == (1 << self.n) ** big_n
        return comps

    def highest_weight_words(self, big_n, budget_bits=DEFAULT_BUDGET_BITS):
        _check_budget(self.n * big_n, budget_bits)
        return [w for w in self.all_words(big_n) if self.is_highest_weight(w)]

    def hw_census(self, big_n, budget_bits=DEFAULT_BUDGET_BITS):
        """Count highest-weight words per weight; keys in descending lex order."""
        census = {}
        for w in self.highest_weight_words(big_n, budget_bits):
            wt = self.word_weight(w)
            census[wt] = census.get(wt, 0) + 1
        return dict(sorted(census.items(), key=lambda kv: kv[0].coords2, reverse=True))

    # -- identification with cell tables --------------------------------------

    def word_to_table(self, w) -> CellTable:
        """The cell table of a highest-weight word: factor weights, read right to left."""
        if not self.is_highest_weight(w):
            raise ValidationError("word is not highest weight")
        steps = tuple(self.element_weight(b) for b in reversed(w))
        try:
            return table_from_steps(steps)
        except ValidationError as exc:  # pragma: no cover - identification guard
            raise AssertionError(
                f"highest-weight word does not yield a valid table: {exc}"
            ) from exc

    def table_to_word(self, t: CellTable):
        """The unique highest-weight word whose reversed factor weights are t's steps."""
        if t.height != self.n:
            raise ValidationError("table height does not match crystal rank")
        w = tuple(self.element_of_weight(mu) for mu in reversed(t.steps))
        assert self.is_highest_weight(w), (
            "table steps do not produce a highest-weight word"
        )
        return w

    def decompose_component_tensor(self, hw_word, budget_bits=DEFAULT_BUDGET_BITS):
        """Weights of the top words in (component of hw_word) tensored by one more factor."""
        if not self.is_highest_weight(hw_word):
            raise ValidationError("word is not highest weight")
        _check_budget(self.n * (len(hw_word) + 1), budget_bits)
        _, members = self.component_members(hw_word, budget_bits)
        found = []
        for w in members:
            for b in self.elements():
                ext = w + (b,)
                if self.is_highest_weight(ext):
                    found.append(self.word_weight(ext))
        found.sort(key=lambda wt: wt.coords2, reverse=True)
        return found


def word_label(crystal, w):
    """Human-readable sign-string label, factors separated by '|'."""
    return "|".join(
        "".join("+" if (b >> j) & 1 else "-" for j in range(crystal.n)) for b in w
    )


def crystal_dot(crystal, big_n, budget_bits=DEFAULT_BUDGET_BITS, words=None):
    """DOT digraph of the full tensor power, or of the given word set."""
    if words is None:
        _check_budget(crystal.n * big_n, budget_bits)
        words = list(crystal.all_words(big_n))
    words = sorted(words)
    lines = ["digraph crystal {"]
    for w in words:
        lines.append(f'  "{word_label(crystal, w)}";')
    kept = set(words)
    for w in words:
        for i in range(1, crystal.n + 1):
            down = crystal.tensor_f(i, w)
            if down is not None and down in kept:
                lines.append(
                    f'  "{word_label(crystal, w)}" -> '
                    f'"{word_label(crystal, down)}" [label="{i}"];'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"


def census_json(crystal, big_n, budget_bits=DEFAULT_BUDGET_BITS):
    return [
        {"lambda2": list(wt.coords2), "count": count}
        for wt, count in crystal.hw_census(big_n, budget_bits).items()
    ]
