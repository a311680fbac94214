"""Short Young diagrams, semi-standard short Young tables, GT patterns.

A short Young diagram in SYD(N, n) is a partition whose first two column
lengths sum to at most N and with at most n columns; these index the
irreducible representations of the rank-N orthogonal group that occur here.
The three indexing sets (cell tables, short Young tables, GT patterns) are
connected by the bijections y_map and j_map below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .celldiag import CellDiagram, CellTable, diagram_of_weight, steps_from_diagram_chain
from .errors import ValidationError
from .weights import OrthWeight, Weight


@dataclass(frozen=True)
class ShortYoungDiagram:
    """Partition stored as row lengths, with ambient height N and width bound n."""

    rows: tuple[int, ...]
    N: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(x) for x in self.rows))
        if self.N < 0 or self.n < 2:
            raise ValidationError("need ambient height >= 0 and width bound >= 2")
        rows = self.rows
        if any(x <= 0 for x in rows):
            raise ValidationError("row lengths must be positive (drop trailing zeros)")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValidationError("rows must be weakly decreasing")
        if rows and rows[0] > self.n:
            raise ValidationError(f"at most {self.n} columns allowed, got {rows[0]}")
        if self.col(1) + self.col(2) > self.N:
            raise ValidationError(
                f"first two columns sum to {self.col(1) + self.col(2)} > {self.N}"
            )

    def col(self, j):
        """Length of the j-th column (1-based)."""
        return sum(1 for x in self.rows if x >= j)

    def columns(self):
        return tuple(self.col(j) for j in range(1, self.rows[0] + 1)) if self.rows else ()

    def size(self):
        return sum(self.rows)

    def contains(self, other):
        if len(other.rows) > len(self.rows):
            return False
        return all(o <= s for s, o in zip(self.rows, other.rows))

    def horizontal_strip_over(self, other):
        """True iff self contains other and self - other has no two cells in a column."""
        if not self.contains(other):
            return False
        padded = other.rows + (0,) * (len(self.rows) - len(other.rows))
        return all(padded[i] >= self.rows[i + 1] for i in range(len(self.rows) - 1))

    def to_json(self):
        return {"rows": list(self.rows), "N": self.N, "n": self.n}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["rows"]), data["N"], data["n"])


def _rows_from_columns(cols):
    cols = [c for c in cols if c > 0]
    if not cols:
        return ()
    return tuple(sum(1 for c in cols if c >= j) for j in range(1, max(cols) + 1))


def f_map(d: CellDiagram) -> ShortYoungDiagram:
    """The diagram whose columns are (l_n, ..., l_1), or (r_n, l_{n-1}, ..., l_1) at odd height."""
    n = d.height
    if n % 2 == 0:
        cols = tuple(reversed(d.l))
    else:
        cols = (d.r[-1],) + tuple(reversed(d.l[:-1]))
    try:
        return ShortYoungDiagram(_rows_from_columns(cols), d.length, n)
    except ValidationError as exc:  # pragma: no cover - guaranteed for valid input
        raise AssertionError(f"f_map produced an invalid diagram: {exc}") from exc


def f_inverse(v: ShortYoungDiagram) -> CellDiagram:
    """The unique cell diagram mapping to v."""
    n, big_n = v.n, v.N
    ct = [v.col(j) for j in range(1, n + 1)]
    coords2 = [big_n - 2 * ct[n - i] for i in range(1, n + 1)]
    if n % 2 == 1:
        coords2[n - 1] = 2 * ct[0] - big_n
    return diagram_of_weight(Weight(tuple(coords2)), big_n)


def associated(v: ShortYoungDiagram) -> ShortYoungDiagram:
    """Replace the first column by N minus itself; an involution on SYD(N, n)."""
    cols = list(v.columns()) or [0]
    cols[0] = v.N - cols[0]
    return ShortYoungDiagram(_rows_from_columns(cols), v.N, v.n)


def is_self_associated(v: ShortYoungDiagram) -> bool:
    return 2 * v.col(1) == v.N


def shorter(v: ShortYoungDiagram) -> ShortYoungDiagram:
    """The shorter of v and its associate (v itself when its first column is <= N/2)."""
    return v if 2 * v.col(1) <= v.N else associated(v)


def syd_to_orthweight(v: ShortYoungDiagram, k: int, sign: int = 1) -> OrthWeight:
    """Rows of v as an o_k weight, zero padded; sign -1 negates the last coordinate."""
    d = k // 2
    if v.col(1) > d:
        raise ValidationError(
            f"first column {v.col(1)} exceeds {k}/2; pass the shorter diagram"
        )
    coords = list(v.rows) + [0] * (d - len(v.rows))
    if sign == -1:
        if k % 2 or len(v.rows) != d:
            raise ValidationError(
                "sign -1 needs even ambient rank and exactly k/2 nonzero rows"
            )
        coords[-1] = -coords[-1]
    elif sign != 1:
        raise ValidationError("sign must be +1 or -1")
    return OrthWeight(tuple(2 * c for c in coords), k)


def interlaces(beta: OrthWeight, mu: OrthWeight) -> bool:
    """The branching condition from rank k down to rank k-1."""
    if beta.k != mu.k + 1:
        raise ValidationError(f"ranks must be adjacent, got {beta.k} and {mu.k}")
    b, m = beta.coords2, mu.coords2
    if beta.k % 2 == 1:
        d = beta.k // 2
        # b and m both have d entries; the chain ends with b_d >= |m_d|
        for j in range(d - 1):
            if not (b[j] >= m[j] >= b[j + 1]):
                return False
        return b[d - 1] >= abs(m[d - 1])
    d = beta.k // 2
    # b has d entries, m has d-1; the chain ends with m_{d-1} >= |b_d|
    for j in range(d - 2):
        if not (b[j] >= m[j] >= b[j + 1]):
            return False
    if d >= 2 and not (b[d - 2] >= m[d - 2] >= abs(b[d - 1])):
        return False
    return True


def branch_syd(v: ShortYoungDiagram) -> list[ShortYoungDiagram]:
    """All members of SYD(N-1, n) under v by a horizontal strip, descending lex."""
    if v.N < 1:
        raise ValidationError("cannot branch below height 0")
    rows = v.rows
    out = []

    def extend(prefix, i):
        if i == len(rows):
            cand = tuple(x for x in prefix if x > 0)
            try:
                out.append(ShortYoungDiagram(cand, v.N - 1, v.n))
            except ValidationError:
                pass
            return
        hi = rows[i]
        lo = rows[i + 1] if i + 1 < len(rows) else 0
        for x in range(hi, lo - 1, -1):
            extend(prefix + [x], i + 1)

    extend([], 0)
    out.sort(key=lambda s: s.rows, reverse=True)
    return out


@dataclass(frozen=True)
class SSYTable:
    """A chain of short Young diagrams growing by horizontal strips."""

    chain: tuple[ShortYoungDiagram, ...]

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(self.chain))
        if not self.chain:
            raise ValidationError("a table has at least one diagram")
        n = self.chain[0].n
        for k, v in enumerate(self.chain, 1):
            if v.N != k:
                raise ValidationError(f"chain entry {k} has ambient height {v.N}, expected {k}")
            if v.n != n:
                raise ValidationError("all chain entries must share one width bound")
        for k in range(1, len(self.chain)):
            if not self.chain[k].horizontal_strip_over(self.chain[k - 1]):
                raise ValidationError(
                    f"entry {k + 1} does not grow from entry {k} by a horizontal strip"
                )

    @property
    def length(self):
        return len(self.chain)

    @property
    def shape(self):
        return self.chain[-1]

    def to_json(self):
        return {"chain": [list(v.rows) for v in self.chain], "n": self.chain[0].n}

    @classmethod
    def from_json(cls, data, n=None):
        width = data.get("n", n)
        if width is None:
            raise ValidationError("width bound n is required to read a chain")
        return cls(
            tuple(
                ShortYoungDiagram(tuple(rows), k, width)
                for k, rows in enumerate(data["chain"], 1)
            )
        )


def enumerate_sssyt(v: ShortYoungDiagram) -> list[SSYTable]:
    """All semi-standard short Young tables of shape v, descending lex order."""
    chains = [[v]]
    for _ in range(v.N - 1):
        chains = [[rho] + c for c in chains for rho in branch_syd(c[0])]
    out = [SSYTable(tuple(c)) for c in chains]
    out.sort(key=lambda s: tuple(x.rows for x in s.chain), reverse=True)
    return out


def count_sssyt(v: ShortYoungDiagram) -> int:
    counts = {v.rows: 1}
    for big_n in range(v.N, 1, -1):
        next_counts = {}
        for rows, c in counts.items():
            for rho in branch_syd(ShortYoungDiagram(rows, big_n, v.n)):
                next_counts[rho.rows] = next_counts.get(rho.rows, 0) + c
        counts = next_counts
    return sum(counts.values())


def y_map(t: CellTable) -> SSYTable:
    """Apply the diagram-to-partition map to every entry of the table's chain."""
    try:
        return SSYTable(tuple(f_map(d) for d in t.diagram_chain()))
    except ValidationError as exc:  # pragma: no cover - guaranteed for valid input
        raise AssertionError(f"y_map produced an invalid chain: {exc}") from exc


def y_inverse(s: SSYTable) -> CellTable:
    return steps_from_diagram_chain([f_inverse(v) for v in s.chain])


@dataclass(frozen=True)
class GTPattern:
    """Interlacing chain of orthogonal weights (rank N down to 3) plus the rank-2 label z."""

    betas: tuple[OrthWeight, ...]
    z: int

    def __post_init__(self):
        object.__setattr__(self, "betas", tuple(self.betas))
        object.__setattr__(self, "z", int(self.z))
        if not self.betas:
            raise ValidationError("a pattern has at least the rank-3 row")
        top = self.betas[0].k
        if top < 3:
            raise ValidationError("patterns start at rank 3 or higher")
        for offset, beta in enumerate(self.betas):
            if beta.k != top - offset:
                raise ValidationError("rows must descend through consecutive ranks")
            beta.validate()
        if self.betas[-1].k != 3:
            raise ValidationError("the last row must have rank 3")
        for upper, lower in zip(self.betas, self.betas[1:]):
            if not interlaces(upper, lower):
                raise ValidationError(
                    f"rows at ranks {upper.k}, {lower.k} do not interlace"
                )
        if self.betas[-1].coords2[0] < 2 * abs(self.z):
            raise ValidationError("the rank-3 row must dominate |z|")

    @property
    def top_rank(self):
        return self.betas[0].k

    def to_json(self):
        return {"betas2": [list(b.coords2) for b in self.betas], "z": self.z}

    @classmethod
    def from_json(cls, data):
        top = len(data["betas2"]) + 2
        return cls(
            tuple(
                OrthWeight(tuple(c), top - off) for off, c in enumerate(data["betas2"])
            ),
            data["z"],
        )


def _beta_of_level(v: ShortYoungDiagram, below_size: int, k: int) -> OrthWeight:
    if not is_self_associated(v):
        return syd_to_orthweight(shorter(v), k)
    if below_size % 2 == 0:
        return syd_to_orthweight(v, k, 1)
    return syd_to_orthweight(v, k, -1)


def j_map(s: SSYTable) -> GTPattern:
    """The pattern of a chain: shorter diagrams as rows, with a sign twist at
    self-associated levels recording the parity of the level below, and z
    carrying the rank-2 data with a sign remembering whether level 1 is empty."""
    if s.length < 3:
        raise ValidationError("patterns are only defined for chains of length >= 3")
    betas = []
    for k in range(s.length, 2, -1):
        betas.append(_beta_of_level(s.chain[k - 1], s.chain[k - 2].size(), k))
    z = shorter(s.chain[1]).size()
    if s.chain[0].size() != 0:
        z = -z
    try:
        return GTPattern(tuple(betas), z)
    except ValidationError as exc:  # pragma: no cover - guaranteed for valid input
        raise AssertionError(f"j_map produced an invalid pattern: {exc}") from exc


def _candidates_from_beta(beta: OrthWeight, n: int):
    """Diagrams in SYD(k, n) that the given pattern row can encode."""
    k = beta.k
    if any(c % 2 for c in beta.coords2):
        return []
    halves = [c // 2 for c in beta.coords2]
    rows = tuple(abs(x) for x in halves if x != 0)
    cands = []
    try:
        first = ShortYoungDiagram(rows, k, n)
    except ValidationError:
        return []
    if halves and halves[-1] < 0:
        # a sign twist is only produced at self-associated levels
        return [first] if is_self_associated(first) else []
    cands.append(first)
    other = associated(first)
    if other.rows != first.rows and other.rows and other.rows[0] <= n:
        cands.append(other)
    return cands


def j_inverse(p: GTPattern, v: ShortYoungDiagram) -> SSYTable:
    """The unique chain of shape v mapping to p; raises if p is not in the image."""
    big_n = v.N
    if p.top_rank != big_n:
        raise ValidationError(f"pattern top rank {p.top_rank} does not match shape height {big_n}")
    if big_n < 3:
        raise ValidationError("patterns are only defined for chains of length >= 3")
    beta_at = {big_n - off: beta for off, beta in enumerate(p.betas)}
    if _consistent_top(p.betas[0], v) is False:
        raise ValidationError("pattern top row does not encode the given shape")

    solutions = []

    def extend(chain_tail):
        # chain_tail is the partial chain from level k_cur up to N
        k_cur = big_n - len(chain_tail) + 1
        if k_cur == 1:
            candidate = SSYTable(tuple(chain_tail))
            if j_map(candidate) == p:
                solutions.append(candidate)
            return
        level = k_cur - 1
        upper = chain_tail[0]
        if level >= 3:
            cands = _candidates_from_beta(beta_at[level], v.n)
        elif level == 2:
            size = abs(p.z)
            cands = []
            try:
                cands.append(ShortYoungDiagram((size,) if size else (), 2, v.n))
            except ValidationError:
                pass
            if size == 0:
                cands.append(ShortYoungDiagram((1, 1), 2, v.n))
        else:
            cands = [ShortYoungDiagram((), 1, v.n)]
            if p.z <= 0:
                cands.append(ShortYoungDiagram((1,), 1, v.n))
        for cand in cands:
            if upper.horizontal_strip_over(cand):
                extend([cand] + chain_tail)

    extend([v])
    if not solutions:
        raise ValidationError("pattern is not in the image of the chain bijection")
    assert len(solutions) == 1, "chain reconstruction must be unique"
    return solutions[0]


def _consistent_top(beta: OrthWeight, v: ShortYoungDiagram):
    return any(c.rows == v.rows for c in _candidates_from_beta(beta, v.n))


def _interlacing_children(beta: OrthWeight):
    """All dominant integer rows of the next rank down, per the branching chains."""
    halves = [c // 2 for c in beta.coords2]
    k = beta.k
    out = []
    if k % 2 == 1:
        d = k // 2
        # child has d entries, the last one allowed to be negative

        def build(prefix, j):
            if j == d - 1:
                for x in range(-halves[d - 1], halves[d - 1] + 1):
                    out.append(prefix + [x])
                return
            for x in range(halves[j + 1], halves[j] + 1):
                build(prefix + [x], j + 1)

        build([], 0)
    else:
        d = k // 2
        # child has d-1 entries, all at least |last entry of beta|
        lowest = abs(halves[d - 1])

        def build(prefix, j):
            if j == d - 1:
                out.append(prefix)
                return
            lo = halves[j + 1] if j + 1 < d - 1 else lowest
            for x in range(lo, halves[j] + 1):
                build(prefix + [x], j + 1)

        build([], 0)
    return [OrthWeight(tuple(2 * x for x in row), k - 1) for row in out]


def enumerate_gtp(v: ShortYoungDiagram) -> list[GTPattern]:
    """All patterns whose top row encodes v, descending lex order."""
    if v.N < 3:
        raise ValidationError("patterns are only defined for ambient height >= 3")
    if is_self_associated(v):
        tops = [syd_to_orthweight(v, v.N, 1), syd_to_orthweight(v, v.N, -1)]
    else:
        tops = [syd_to_orthweight(shorter(v), v.N)]
    stacks = [[t] for t in tops]
    for _ in range(v.N - 3):
        stacks = [
            chain + [child]
            for chain in stacks
            for child in _interlacing_children(chain[-1])
        ]
    out = []
    for chain in stacks:
        top3 = chain[-1].coords2[0] // 2
        for z in range(-top3, top3 + 1):
            out.append(GTPattern(tuple(chain), z))
    out.sort(key=lambda p: (tuple(b.coords2 for b in p.betas), p.z), reverse=True)
    return out
