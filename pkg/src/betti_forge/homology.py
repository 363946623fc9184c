"""Reduced simplicial homology over Q or F_p via exact ranks of boundary maps.

Chain groups use the lexicographic face bases of ``faces_of_dim``; the
boundary of a face drops its vertex at sorted position t with sign (-1)^t,
and C_{-1} is spanned by the empty face (augmentation).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .complex import Face, SimplicialComplex, faces_of_dim
from .errors import MatrixTooLarge
from .graph import vertices_of

MAX_COLUMNS = 5000


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals when ``p`` is None, else F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def label(self) -> str:
        return "q" if self.p is None else f"fp:{self.p}"

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls()
        if t.startswith("fp:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise ValueError(f"bad field {text!r}; expected q or fp:P") from None
            return cls(p)
        raise ValueError(f"bad field {text!r}; expected q or fp:P")

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


QQ = FieldSpec()


@dataclass(frozen=True)
class BoundaryMatrix:
    """Matrix of d_k : C_k -> C_{k-1}, stored column-sparse."""

    k: int
    field: FieldSpec
    rows: list[Face]
    cols: list[Face]
    columns: list[dict[int, int]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    def rank(self) -> int:
        return column_rank(self.columns, self.field)


def _reduce(value: int, field: FieldSpec) -> int:
    return value if field.p is None else value % field.p


def _boundary_columns(c: SimplicialComplex, k: int, field: FieldSpec) -> list[dict[int, int]]:
    cols = c.face_masks(k)
    if len(cols) > MAX_COLUMNS:
        raise MatrixTooLarge(f"boundary matrix in degree {k} has {len(cols)} columns (cap {MAX_COLUMNS})")
    if k == 0:
        return [{0: 1} for _ in cols]
    row_index = {m: i for i, m in enumerate(c.face_masks(k - 1))}
    neg = _reduce(-1, field)
    out = []
    for m in cols:
        col = {}
        for t, v in enumerate(vertices_of(m)):
            col[row_index[m ^ (1 << v)]] = neg if t & 1 else 1
        out.append(col)
    return out


def boundary_matrix(c: SimplicialComplex, k: int, field: FieldSpec = QQ) -> BoundaryMatrix:
    if k < 0:
        raise ValueError("boundary matrices are defined for k >= 0")
    rows = faces_of_dim(c, k - 1) if k > 0 else ([()] if not c.is_void else [])
    return BoundaryMatrix(k, field, rows, faces_of_dim(c, k), _boundary_columns(c, k, field))


# -- exact rank ----------------------------------------------------------------

def _rank_mod2(columns: list[dict[int, int]]) -> int:
    pivots: dict[int, int] = {}
    for col in columns:
        v = 0
        for i, x in col.items():
            if x & 1:
                v |= 1 << i
        while v:
            top = v.bit_length() - 1
            piv = pivots.get(top)
            if piv is None:
                pivots[top] = v
                break
            v ^= piv
    return len(pivots)


def _rank_modp(columns: list[dict[int, int]], p: int) -> int:
    # pivot rows keyed by their leading (smallest) index, normalized to lead 1
    pivots: dict[int, dict[int, int]] = {}
    for col in columns:
        v = {i: x % p for i, x in col.items() if x % p}
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(v[lead], -1, p)
                pivots[lead] = {i: x * inv % p for i, x in v.items()}
                break
            f = v[lead]
            for i, x in piv.items():
                y = (v.get(i, 0) - f * x) % p
                if y:
                    v[i] = y
                else:
                    v.pop(i, None)
    return len(pivots)


def _rank_rational(columns: list[dict[int, int]]) -> int:
    # fraction-free: v <- a*v - b*piv, then strip the content of v
    pivots: dict[int, dict[int, int]] = {}
    for col in columns:
        v = {i: x for i, x in col.items() if x}
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                g = 0
                for x in v.values():
                    g = gcd(g, x)
                if g > 1:
                    v = {i: x // g for i, x in v.items()}
                pivots[lead] = v
                break
            a, b = piv[lead], v[lead]
            if a != 1:
                v = {i: a * x for i, x in v.items()}
            for i, x in piv.items():
                y = v.get(i, 0) - b * x
                if y:
                    v[i] = y
                else:
                    v.pop(i, None)
            if v:
                g = 0
                for x in v.values():
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    v = {i: x // g for i, x in v.items()}
    return len(pivots)


def column_rank(columns: list[dict[int, int]], field: FieldSpec = QQ) -> int:
    if field.p is None:
        return _rank_rational(columns)
    if field.p == 2:
        return _rank_mod2(columns)
    return _rank_modp(columns, field.p)


def boundary_rank(c: SimplicialComplex, k: int, field: FieldSpec = QQ) -> int:
    """Rank of d_k; zero for k < 0 and above the top dimension."""
    if k < 0 or c.is_void or k > c.dim:
        return 0
    if k == 0:
        return 1 if c.face_masks(0) else 0
    return column_rank(_boundary_columns(c, k, field), field)


# -- homology -------------------------------------------------------------------

def reduced_betti_numbers(c: SimplicialComplex, field: FieldSpec = QQ, degrees=None) -> dict[int, int]:
    """dim H~_k(c) for each requested k (default: -1..dim c)."""
    if c.is_void:
        raise ValueError("reduced homology of the void complex is not defined here")
    top = c.dim
    ks = list(range(-1, top + 1)) if degrees is None else list(degrees)
    ranks: dict[int, int] = {}

    def rank(k):
        if k not in ranks:
            ranks[k] = boundary_rank(c, k, field)
        return ranks[k]

    out = {}
    for k in ks:
        if k < -1:
            raise ValueError("homological degree must be >= -1")
        if k > top:
            out[k] = 0
            continue
        f_k = len(c.face_masks(k))
        out[k] = f_k - rank(k) - rank(k + 1)
    return out


def reduced_betti(c: SimplicialComplex, k: int, field: FieldSpec = QQ) -> int:
    return reduced_betti_numbers(c, field, [k])[k]


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    if c.is_void:
        raise ValueError("the void complex has no reduced Euler characteristic")
    return sum((-1) ** k * len(c.face_masks(k)) for k in range(0, c.dim + 1)) - 1
