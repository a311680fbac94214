"""Exact exterior-algebra verifier for the joint orthogonal actions.

The ambient space has one basis vector per pair (k, i) with k in 1..N and
i in 1..n, enumerated as (k-1)*n + (i-1). Monomials are bitmasks over these
indices, kept sorted ascending, and every operator sign is a transposition
count against that order. Coefficients are exact rationals; the operators in
scope only ever introduce halves, so denominators stay powers of two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .celldiag import diagram_of_weight
from .errors import ValidationError
from .weights import OrthWeight, Weight

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


class ExteriorVector:
    """Sparse exact linear combination of wedge monomials (bitmask -> coefficient)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def unit(cls):
        return cls({0: ONE})

    @classmethod
    def monomial(cls, mask, coeff=ONE):
        return cls({mask: Fraction(coeff)})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, ExteriorVector) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return ExteriorVector(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) - c
        return ExteriorVector(out)

    def scaled(self, c):
        c = Fraction(c)
        return ExteriorVector({m: c * v for m, v in self.terms.items()})

    def __repr__(self):
        if self.is_zero():
            return "ExteriorVector(0)"
        parts = [f"{c}*[{m:b}]" for m, c in sorted(self.terms.items())]
        return "ExteriorVector(" + " + ".join(parts) + ")"


def _sign_below(mask, bit_index):
    return -1 if bin(mask & ((1 << bit_index) - 1)).count("1") % 2 else 1


def wedge_insert(idx, x: ExteriorVector) -> ExteriorVector:
    """Left wedge by basis vector idx; kills monomials already containing it."""
    bit = 1 << idx
    out = {}
    for m, c in x.terms.items():
        if m & bit:
            continue
        nm = m | bit
        out[nm] = out.get(nm, ZERO) + c * _sign_below(m, idx)
    return ExteriorVector(out)


def contract(idx, x: ExteriorVector) -> ExteriorVector:
    """Interior product dual to wedge_insert; kills monomials without idx."""
    bit = 1 << idx
    out = {}
    for m, c in x.terms.items():
        if not m & bit:
            continue
        nm = m & ~bit
        out[nm] = out.get(nm, ZERO) + c * _sign_below(m, idx)
    return ExteriorVector(out)


@dataclass(frozen=True)
class OperatorSpec:
    """A signed sum of words in the wedge/contraction generators.

    Each term is (coefficient, word); a word is a tuple of ("M", idx) or
    ("D", idx) letters, applied right to left.
    """

    terms: tuple[tuple[Fraction, tuple[tuple[str, int], ...]], ...]

    def __add__(self, other):
        return OperatorSpec(self.terms + other.terms)

    def scaled(self, c):
        c = Fraction(c)
        return OperatorSpec(tuple((c * coeff, word) for coeff, word in self.terms))

    def apply(self, x: ExteriorVector) -> ExteriorVector:
        out = ExteriorVector()
        for coeff, word in self.terms:
            cur = x
            for kind, idx in reversed(word):
                cur = wedge_insert(idx, cur) if kind == "M" else contract(idx, cur)
                if cur.is_zero():
                    break
            out = out + cur.scaled(coeff)
        return out


@dataclass
class BiWeightReport:
    is_weight: bool
    left: OrthWeight | None
    right: Weight | None
    failures: list[str] = field(default_factory=list)


@dataclass
class SingularReport:
    all_zero: bool
    nonzero: list[str] = field(default_factory=list)

    def to_json(self):
        return {"singular": self.all_zero, "nonzero_under": list(self.nonzero)}


class ExteriorAlgebra:
    """Operator context for fixed block sizes n (columns) and N (rows)."""

    def __init__(self, n, big_n):
        if n < 2:
            raise ValidationError(f"need n >= 2, got {n}")
        if big_n < 1:
            raise ValidationError(f"need N >= 1, got {big_n}")
        self.n = n
        self.N = big_n
        self.d = big_n // 2

    def index(self, k, i):
        if not (1 <= k <= self.N and 1 <= i <= self.n):
            raise ValidationError(f"basis pair ({k}, {i}) out of range")
        return (k - 1) * self.n + (i - 1)

    def kbar(self, k):
        """Pairing of the isotropic basis halves; the odd extra vector is fixed."""
        if k <= self.d:
            return k + self.d
        if k <= 2 * self.d:
            return k - self.d
        return k

    # -- the commuting actions ------------------------------------------------

    def oe_operator(self, label) -> OperatorSpec:
        """The operator image of one column-side basis element."""
        kind, i, j = label
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValidationError(f"column indices out of range in {label}")
        terms = []
        if kind == "gl":
            # half the commutator of wedge and contraction, summed over rows
            for k in range(1, self.N + 1):
                a, b = self.index(k, i), self.index(k, j)
                terms.append((HALF, (("M", a), ("D", b))))
                terms.append((-HALF, (("D", b), ("M", a))))
        elif kind == "raise":
            if i == j:
                raise ValidationError(f"{kind} operators need i != j")
            for k in range(1, self.N + 1):
                terms.append(
                    (ONE, (("M", self.index(k, i)), ("M", self.index(self.kbar(k), j))))
                )
        elif kind == "lower":
            if i == j:
                raise ValidationError(f"{kind} operators need i != j")
            for k in range(1, self.N + 1):
                terms.append(
                    (ONE, (("D", self.index(self.kbar(k), i)), ("D", self.index(k, j))))
                )
        else:
            raise ValidationError(f"unknown column-side label {label}")
        return OperatorSpec(tuple(terms))

    def act_gl_pair(self, i, j, v):
        return self.oe_operator(("gl", i, j)).apply(v)

    def act_oE(self, label, v):
        return self.oe_operator(label).apply(v)

    def cartan_h(self, i, v):
        return self.act_gl_pair(i, i, v)

    def npos_oE_labels(self):
        return [("gl", i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)] + [
            ("raise", i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
        ]

    def ov_operator(self, mat) -> OperatorSpec:
        """Derivation action of a row-side matrix {(p, q): c}, v_q -> c * v_p."""
        terms = []
        for (p, q), c in mat.items():
            if not (1 <= p <= self.N and 1 <= q <= self.N):
                raise ValidationError(f"row indices ({p}, {q}) out of range")
            if c == 0:
                continue
            for s in range(1, self.n + 1):
                terms.append(
                    (Fraction(c), (("M", self.index(p, s)), ("D", self.index(q, s))))
                )
        return OperatorSpec(tuple(terms))

    def act_oV(self, mat, v):
        return self.ov_operator(mat).apply(v)

    def cartan_t(self, i, v):
        if not 1 <= i <= self.d:
            raise ValidationError(f"diagonal index {i} out of range 1..{self.d}")
        return self.act_oV({(i, i): 1, (i + self.d, i + self.d): -1}, v)

    def npos_oV_matrices(self):
        d = self.d
        mats = []
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                if i < j:
                    mats.append((f"E({i},{j})-E({j + d},{i + d})", {(i, j): 1, (j + d, i + d): -1}))
                if i != j and i < j:
                    mats.append((f"E({i},{j + d})-E({j},{i + d})", {(i, j + d): 1, (j, i + d): -1}))
        if self.N % 2 == 1:
            last = self.N
            for i in range(1, d + 1):
                mats.append((f"E({i},{last})-E({last},{i + d})", {(i, last): 1, (last, i + d): -1}))
        return mats

    # -- distinguished vectors and group elements ------------------------------

    def xi_lambda(self, w: Weight) -> ExteriorVector:
        """The explicit top vector: row i takes its first r_i slots in the order
        1, ..., d, N, N-1, ..., d+1."""
        if w.rank != self.n:
            raise ValidationError("weight rank does not match n")
        diag = diagram_of_weight(w, self.N)
        factors = []
        for i in range(1, self.n + 1):
            r = diag.r[i - 1]
            for k in range(1, min(r, self.d) + 1):
                factors.append(self.index(k, i))
            for k in range(1, max(0, r - self.d) + 1):
                factors.append(self.index(self.N - k + 1, i))
        vec = ExteriorVector.unit()
        for idx in reversed(factors):
            vec = wedge_insert(idx, vec)
        assert len(vec.terms) == 1, "top vector must be a single monomial"
        return vec

    def substitute_rows(self, row_map, v):
        """Relabel row indices of every factor, re-sorting with signs."""
        out = {}
        for m, c in v.terms.items():
            indices = []
            bit = 0
            mm = m
            while mm:
                if mm & 1:
                    k, i = bit // self.n + 1, bit % self.n + 1
                    indices.append(self.index(row_map.get(k, k), i))
                mm >>= 1
                bit += 1
            inv = sum(
                1
                for a in range(len(indices))
                for b in range(a + 1, len(indices))
                if indices[a] > indices[b]
            )
            nm = 0
            for idx in indices:
                if nm & (1 << idx):
                    raise ValidationError("row relabeling is not injective")
                nm |= 1 << idx
            sign = -1 if inv % 2 else 1
            out[nm] = out.get(nm, ZERO) + sign * c
        return ExteriorVector(out)

    def gd_swap(self, v):
        """Action of the group element exchanging rows d and 2d (even N only)."""
        if self.N % 2 == 1:
            raise ValidationError("the row swap element needs even N")
        return self.substitute_rows({self.d: 2 * self.d, 2 * self.d: self.d}, v)

    def neg_id(self, v):
        """Action of -Id: each monomial scales by (-1)^degree."""
        return ExteriorVector(
            {m: -c if bin(m).count("1") % 2 else c for m, c in v.terms.items()}
        )

    # -- reports ---------------------------------------------------------------

    def _eigenvalue(self, image, v):
        if v.is_zero():
            return None
        anchor = next(iter(v.terms))
        c = image.terms.get(anchor, ZERO) / v.terms[anchor]
        return c if image == v.scaled(c) else None

    def weight_of_vector(self, v: ExteriorVector) -> BiWeightReport:
        failures = []
        taus = []
        for i in range(1, self.d + 1):
            c = self._eigenvalue(self.cartan_t(i, v), v)
            if c is None or c.denominator != 1:
                failures.append(f"t_{i}")
            else:
                taus.append(int(c))
        etas2 = []
        for i in range(1, self.n + 1):
            c = self._eigenvalue(self.cartan_h(i, v), v)
            if c is None or (2 * c).denominator != 1:
                failures.append(f"h_{i}")
            else:
                etas2.append(int(2 * c))
        if failures:
            return BiWeightReport(False, None, None, failures)
        return BiWeightReport(
            True,
            OrthWeight(tuple(2 * t for t in taus), self.N),
            Weight(tuple(etas2)),
        )

    def check_singular(self, v: ExteriorVector) -> SingularReport:
        nonzero = []
        for label in self.npos_oE_labels():
            if not self.act_oE(label, v).is_zero():
                nonzero.append(str(label))
        for name, mat in self.npos_oV_matrices():
            if not self.act_oV(mat, v).is_zero():
                nonzero.append(name)
        return SingularReport(not nonzero, nonzero)


def top_vector_report(alg: ExteriorAlgebra, w: Weight) -> dict:
    """Full JSON report for the explicit top vector of one member weight."""
    vec = alg.xi_lambda(w)
    singular = alg.check_singular(vec)
    bi = alg.weight_of_vector(vec)
    gd_sign = None
    if alg.N % 2 == 0 and w.coords2[-1] != 0:
        swapped = alg.gd_swap(vec)
        gd_sign = 1 if swapped == vec else -1 if swapped == vec.scaled(-1) else None
    negid_sign = None
    if alg.N % 2 == 1:
        flipped = alg.neg_id(vec)
        negid_sign = 1 if flipped == vec else -1 if flipped == vec.scaled(-1) else None
    return {
        "lambda2": list(w.coords2),
        "singular": singular.all_zero,
        "left_weight": bi.left.to_json() if bi.is_weight else None,
        "right_weight": bi.right.to_json() if bi.is_weight else None,
        "gd_sign": gd_sign,
        "negid_sign": negid_sign,
    }


def kappa(w: Weight, big_n: int) -> OrthWeight:
    """The row-side weight of the explicit top vector: conjugate of the column
    list (min(l_n, r_n), l_{n-1}, ..., l_1), padded to floor(N/2) entries."""
    diag = diagram_of_weight(w, big_n)
    cols = [min(diag.l[-1], diag.r[-1])] + list(reversed(diag.l[:-1]))
    d = big_n // 2
    rows = [sum(1 for c in cols if c >= j) for j in range(1, d + 1)]
    return OrthWeight(tuple(2 * r for r in rows), big_n)


def kappa_sigma(w: Weight, big_n: int) -> OrthWeight:
    k = kappa(w, big_n)
    return OrthWeight(k.coords2[:-1] + (-k.coords2[-1],), big_n)
