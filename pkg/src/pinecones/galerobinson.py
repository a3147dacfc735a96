"""Gale-Robinson pinecones P(n; i, j, k, l).

Odd edges of row ``r >= 0`` sit at the abscissas ``U(n, r, c) > r`` and those
of row ``-r`` at ``L(n, r, c) > r``, for ``c = 0, 1, ...``.  The same
pinecones arise by superimposing smaller ones (``build_recursive``) and from
the rational-parameter form of U and L (``build_continuous``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Callable, Iterator, Union

from .errors import InvalidArgument, PreconditionViolation
from .pinecone import Pinecone, from_black_squares, from_odd_edges, is_interleaved, single_square
from .reduction import sub_pinecones

__all__ = [
    "GRParams",
    "RealParams",
    "normalize_params",
    "as_params",
    "upper_abscissa",
    "lower_abscissa",
    "build_direct",
    "build_recursive",
    "build_continuous",
    "check_interleaving",
    "check_shift_identities",
    "shift_identity_failures",
    "check_sub_pinecone_identities",
]


@dataclass(frozen=True)
class GRParams:
    i: int
    j: int
    k: int
    l: int
    # Symmetries applied by normalize_params, in order; informational only.
    symmetry: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        vals = (self.i, self.j, self.k, self.l)
        if not all(isinstance(v, int) and v > 0 for v in vals):
            raise InvalidArgument(f"parameters must be positive integers, got {vals}")
        if self.i + self.j != self.k + self.l:
            raise InvalidArgument(f"need i+j = k+l, got {vals}")
        if self.j != min(vals):
            raise InvalidArgument(f"j must be the smallest parameter, got {vals}; use normalize_params")

    @property
    def m(self) -> int:
        return self.i + self.j

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.i, self.j, self.k, self.l)

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.k},{self.l})"


def normalize_params(i: int, j: int, k: int, l: int) -> GRParams:
    """Move the smallest parameter into position ``j`` using the recurrence's symmetries."""
    vals = (i, j, k, l)
    if not all(isinstance(v, int) and not isinstance(v, bool) and v > 0 for v in vals):
        raise InvalidArgument(f"parameters must be positive integers, got {vals}")
    if i + j != k + l:
        raise InvalidArgument(f"need i+j = k+l, got {vals}")
    low = min(vals)
    applied: list[str] = []
    if j != low:
        if i == low:
            i, j = j, i
            applied.append("swap i,j")
        else:
            i, j, k, l = k, l, i, j
            applied.append("swap pairs")
            if j != low:
                i, j = j, i
                applied.append("swap i,j")
    return GRParams(i, j, k, l, tuple(applied))


ParamsLike = Union[GRParams, tuple, list]


def as_params(params: ParamsLike) -> GRParams:
    if isinstance(params, GRParams):
        return params
    return normalize_params(*params)


def upper_abscissa(params: ParamsLike, n: int, r: int, c: int) -> int:
    p = as_params(params)
    return 2 * c + r - 3 - 2 * ((p.m * c + p.k * r + p.i - n - 1) // p.j)


def lower_abscissa(params: ParamsLike, n: int, r: int, c: int) -> int:
    p = as_params(params)
    return 2 * c + r - 3 - 2 * ((p.m * c + p.l * r + p.i - n - 1) // p.j)


def _odd_edges(fn: Callable[[int, int], int], sign: int) -> Iterator[tuple[int, int]]:
    """Retained odd edges ``(u, sign*r)`` for ``u = fn(r, c) > r``."""
    r = 0 if sign > 0 else 1
    while fn(r, 0) > r:
        c = 0
        while (u := fn(r, c)) > r:
            yield (u, sign * r)
            c += 1
        r += 1


def _from_functions(U: Callable[[int, int], int], L: Callable[[int, int], int]) -> Pinecone:
    edges = list(_odd_edges(U, 1)) + list(_odd_edges(L, -1))
    return from_odd_edges(edges)


def build_direct(params: ParamsLike, n: int) -> Pinecone:
    """P(n) from the U and L formulas, as a standard closed pinecone."""
    p = as_params(params)
    if n < p.m:
        return Pinecone()
    return _from_functions(
        lambda r, c: upper_abscissa(p, n, r, c),
        lambda r, c: lower_abscissa(p, n, r, c),
    )


def build_recursive(params: ParamsLike, n: int) -> Pinecone:
    """P(n) by superimposing P(n-i), P(n-j), P(n-k), P(n-l) at (0,0), (2,0), (1,1), (1,-1)."""
    return _recursive(as_params(params).astuple(), n)


@lru_cache(maxsize=4096)
def _recursive(params: tuple[int, int, int, int], n: int) -> Pinecone:
    i, j, k, l = params
    m = i + j
    if n < m:
        return Pinecone()
    if n < m + j:
        return single_square()
    squares = set()
    for d, (dx, dy) in ((i, (0, 0)), (j, (2, 0)), (k, (1, 1)), (l, (1, -1))):
        squares |= _recursive(params, n - d).translate(dx, dy).squares()
    return from_black_squares(squares)


@dataclass(frozen=True)
class RealParams:
    iota: Fraction
    kappa: Fraction
    lam: Fraction

    def __post_init__(self) -> None:
        vals = tuple(Fraction(v) for v in (self.iota, self.kappa, self.lam))
        object.__setattr__(self, "iota", vals[0])
        object.__setattr__(self, "kappa", vals[1])
        object.__setattr__(self, "lam", vals[2])
        if any(v < 1 for v in vals):
            raise InvalidArgument(f"iota, kappa and lambda must be at least 1, got {vals}")
        if self.mu != self.kappa + self.lam:
            raise InvalidArgument("need iota + 1 = kappa + lambda")

    @property
    def mu(self) -> Fraction:
        return self.iota + 1

    @classmethod
    def from_params(cls, params: ParamsLike) -> "RealParams":
        p = as_params(params)
        return cls(Fraction(p.i, p.j), Fraction(p.k, p.j), Fraction(p.l, p.j))


def build_continuous(rp: RealParams, t: Fraction | int) -> Pinecone:
    """Pinecone from the rational-parameter U and L, with exact floors."""
    t = Fraction(t)

    def U(r: int, c: int) -> int:
        return 2 * c + r - 3 - 2 * floor(rp.mu * c + rp.kappa * r + rp.iota - t)

    def L(r: int, c: int) -> int:
        return 2 * c + r - 3 - 2 * floor(rp.mu * c + rp.lam * r + rp.iota - t)

    if U(0, 0) < 0:
        return Pinecone()
    return _from_functions(U, L)


def _retained_extent(p: GRParams, n: int) -> tuple[int, int]:
    """Bounds (rows, columns) covering every retained (r, c), plus one."""
    rows = cols = 0
    for fn in (upper_abscissa, lower_abscissa):
        r = 0
        while fn(p, n, r, 0) > r:
            c = 0
            while fn(p, n, r, c) > r:
                c += 1
            cols = max(cols, c)
            r += 1
        rows = max(rows, r)
    return rows + 1, cols + 1


def check_interleaving(params: ParamsLike, n: int) -> bool:
    """The interleaving inequalities for U and L, and interleaving of P(n)."""
    p = as_params(params)
    rows, cols = _retained_extent(p, n)
    for fn in (upper_abscissa, lower_abscissa):
        for r in range(rows + 1):
            for c in range(cols + 1):
                below = fn(p, n, r, c + 1) + 1
                mid = fn(p, n, r + 1, c)
                above = fn(p, n, r, c) - 1
                if not below <= mid <= above:
                    return False
    return is_interleaved(build_direct(p, n))


def shift_identity_failures(
    params: ParamsLike, n_values: range, r_values: range | None = None, c_values: range | None = None
) -> Iterator[tuple[str, int, int, int]]:
    """Yield ``(identity, n, r, c)`` for every violated shift identity.

    Without explicit ranges, each ``n`` is checked over the retained ``(r, c)``
    of P(n) with one extra row and column.
    """
    p = as_params(params)
    i, j, k, l, m = p.i, p.j, p.k, p.l, p.m
    U = lambda n, r, c: upper_abscissa(p, n, r, c)  # noqa: E731
    L = lambda n, r, c: lower_abscissa(p, n, r, c)  # noqa: E731
    identities = [
        # name, needs c >= 1, needs r >= 1, lhs, rhs
        ("U(n-i,r,c-1)=U(n,r,c)", 1, 0, lambda n, r, c: U(n - i, r, c - 1), lambda n, r, c: U(n, r, c)),
        ("U(n-j,r,c)=U(n,r,c)-2", 0, 0, lambda n, r, c: U(n - j, r, c), lambda n, r, c: U(n, r, c) - 2),
        ("U(n-k,r-1,c)=U(n,r,c)-1", 0, 1, lambda n, r, c: U(n - k, r - 1, c), lambda n, r, c: U(n, r, c) - 1),
        ("U(n-l,r+1,c-1)=U(n,r,c)-1", 1, 0, lambda n, r, c: U(n - l, r + 1, c - 1), lambda n, r, c: U(n, r, c) - 1),
        ("U(n-m,r,c-1)=U(n,r,c)-2", 1, 0, lambda n, r, c: U(n - m, r, c - 1), lambda n, r, c: U(n, r, c) - 2),
        ("L(n-i,r,c-1)=L(n,r,c)", 1, 0, lambda n, r, c: L(n - i, r, c - 1), lambda n, r, c: L(n, r, c)),
        ("L(n-j,r,c)=L(n,r,c)-2", 0, 0, lambda n, r, c: L(n - j, r, c), lambda n, r, c: L(n, r, c) - 2),
        ("L(n-l,r-1,c)=L(n,r,c)-1", 0, 1, lambda n, r, c: L(n - l, r - 1, c), lambda n, r, c: L(n, r, c) - 1),
        ("L(n-k,r+1,c-1)=L(n,r,c)-1", 1, 0, lambda n, r, c: L(n - k, r + 1, c - 1), lambda n, r, c: L(n, r, c) - 1),
        ("L(n-m,r,c-1)=L(n,r,c)-2", 1, 0, lambda n, r, c: L(n - m, r, c - 1), lambda n, r, c: L(n, r, c) - 2),
    ]
    for n in n_values:
        if r_values is None or c_values is None:
            rows, cols = _retained_extent(p, n)
        rs = r_values if r_values is not None else range(rows + 1)
        cs = c_values if c_values is not None else range(cols + 1)
        for r in rs:
            for c in cs:
                for name, need_c, need_r, lhs, rhs in identities:
                    if c < need_c or r < need_r:
                        continue
                    if lhs(n, r, c) != rhs(n, r, c):
                        yield (name, n, r, c)


def check_shift_identities(
    params: ParamsLike, n_values: range, r_values: range | None = None, c_values: range | None = None
) -> bool:
    """All ten shift identities of U and L over the given grid."""
    return next(shift_identity_failures(params, n_values, r_values, c_values), None) is None


def check_sub_pinecone_identities(params: ParamsLike, n: int) -> bool:
    """The five sub-pinecones of P(n) are P(n-i), P(n-j), P(n-k), P(n-l), P(n-m), translated."""
    p = as_params(params)
    if n < p.m:
        raise PreconditionViolation(f"need n >= m = {p.m}, got {n}")
    sub = sub_pinecones(build_direct(p, n))
    expected = {
        "west": build_direct(p, n - p.i).at((0, 0)),
        "east": build_direct(p, n - p.j).at((2, 0)),
        "north": build_direct(p, n - p.k).at((1, 1)),
        "south": build_direct(p, n - p.l).at((1, -1)),
        "center": build_direct(p, n - p.m).at((2, 0)),
    }
    return all(q == expected[name] for name, q in sub.items())
