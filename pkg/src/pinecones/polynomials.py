"""Polynomial types: multivariate edge polynomials and bivariate integer polynomials.

A :class:`MatchingPolynomial` has one variable per lattice edge.  Monomials
are packed into Python ints: every edge gets a 4-bit exponent slot from a
process-wide registry, so multiplying monomials is integer addition.
Exponents stay far below 16 (at most 2 in a product of two matching
polynomials, 4 in a product of two such products).
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator, Mapping

from .errors import InvalidArgument, PolynomialityViolation
from .grid import Edge

__all__ = ["MatchingPolynomial", "BivariatePoly", "edge_code", "monomial_code", "poly_product"]

_SLOT = 4
_SLOT_MASK = (1 << _SLOT) - 1
_registry: dict[Edge, int] = {}
_edges: list[Edge] = []


def _index(e: Edge) -> int:
    idx = _registry.get(e)
    if idx is None:
        idx = _registry[e] = len(_edges)
        _edges.append(e)
    return idx


def edge_code(e: Edge) -> int:
    """Packed monomial of a single edge."""
    return 1 << (_SLOT * _index(e))


def monomial_code(edges: Iterable[Edge]) -> int:
    return sum(edge_code(e) for e in edges)


def _decode(code: int) -> dict[Edge, int]:
    out = {}
    idx = 0
    while code:
        exp = code & _SLOT_MASK
        if exp:
            out[_edges[idx]] = exp
        code >>= _SLOT
        idx += 1
    return out


class MatchingPolynomial:
    """Polynomial in edge variables with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms: dict[int, int] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls) -> "MatchingPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, edges: Iterable[Edge] | Mapping[Edge, int], coefficient: int = 1) -> "MatchingPolynomial":
        if isinstance(edges, Mapping):
            code = sum(edge_code(e) * exp for e, exp in edges.items())
        else:
            code = monomial_code(edges)
        return cls({code: coefficient})

    def __mul__(self, other: "MatchingPolynomial") -> "MatchingPolynomial":
        return poly_product(self, other)

    def __add__(self, other: "MatchingPolynomial") -> "MatchingPolynomial":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return MatchingPolynomial(out)

    def times_monomial(self, code: int) -> "MatchingPolynomial":
        return MatchingPolynomial({k + code: v for k, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MatchingPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[dict[Edge, int], int]]:
        for code, coef in self.terms.items():
            yield _decode(code), coef

    def evaluate_ones(self) -> int:
        """Value with every variable set to 1."""
        return sum(self.terms.values())

    def substitute_ones(self, edges: Iterable[Edge]) -> "MatchingPolynomial":
        """Set the variables of ``edges`` to 1."""
        mask = 0
        for e in edges:
            mask |= _SLOT_MASK << (_SLOT * _index(e))
        keep = ~mask
        out: dict[int, int] = defaultdict(int)
        for k, v in self.terms.items():
            out[k & keep] += v
        return MatchingPolynomial(out)

    def variables(self) -> set[Edge]:
        out: set[Edge] = set()
        for code in self.terms:
            out.update(_decode(code))
        return out

    def is_multilinear(self) -> bool:
        return all(exp == 1 for mono, _ in self for exp in mono.values())

    def __repr__(self) -> str:
        return f"MatchingPolynomial({len(self.terms)} terms)"

    def __str__(self) -> str:
        parts = []
        for mono, coef in sorted(self, key=lambda t: sorted(map(str, t[0]))):
            body = "*".join(
                f"[{e}]" + (f"^{x}" if x > 1 else "") for e, x in sorted(mono.items())
            ) or "1"
            parts.append(body if coef == 1 else f"{coef}*{body}")
        return " + ".join(parts) or "0"


def poly_product(p: MatchingPolynomial, q: MatchingPolynomial) -> MatchingPolynomial:
    """Product of two edge polynomials (exponents add)."""
    if len(p.terms) < len(q.terms):
        p, q = q, p
    out: dict[int, int] = defaultdict(int)
    small = list(q.terms.items())
    for k1, v1 in p.terms.items():
        for k2, v2 in small:
            out[k1 + k2] += v1 * v2
    return MatchingPolynomial(out)


class BivariatePoly:
    """Polynomial in two named variables with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs", "names")

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None, names: tuple[str, str] = ("u", "v")):
        self.coeffs: dict[tuple[int, int], int] = {
            (int(a), int(b)): int(c) for (a, b), c in (coeffs or {}).items() if c
        }
        for a, b in self.coeffs:
            if a < 0 or b < 0:
                raise InvalidArgument("exponents must be nonnegative")
        self.names = tuple(names)

    @classmethod
    def constant(cls, c: int, names: tuple[str, str] = ("u", "v")) -> "BivariatePoly":
        return cls({(0, 0): c}, names)

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1, names: tuple[str, str] = ("u", "v")) -> "BivariatePoly":
        return cls({(a, b): c}, names)

    def _like(self, coeffs: Mapping[tuple[int, int], int]) -> "BivariatePoly":
        return BivariatePoly(coeffs, self.names)

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return self._like(out)

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) - v
        return self._like(out)

    def __mul__(self, other: "BivariatePoly | int") -> "BivariatePoly":
        if isinstance(other, int):
            return self._like({k: v * other for k, v in self.coeffs.items()})
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                out[a1 + a2, b1 + b2] += c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({(0, 0): other} if other else {})
        return isinstance(other, BivariatePoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> tuple[tuple[int, int], int]:
        """Leading term in lexicographic order (first exponent, then second)."""
        key = max(self.coeffs)
        return key, self.coeffs[key]

    def divide_exact(self, divisor: "BivariatePoly") -> "BivariatePoly":
        """Exact quotient by lexicographic long division; raises on any remainder."""
        if divisor.is_zero():
            raise PolynomialityViolation("division by the zero polynomial")
        (da, db), dc = divisor.leading()
        rem = dict(self.coeffs)
        quotient: dict[tuple[int, int], int] = {}
        dterms = list(divisor.coeffs.items())
        while rem:
            (ra, rb) = max(rem)
            rc = rem[ra, rb]
            qa, qb = ra - da, rb - db
            if qa < 0 or qb < 0 or rc % dc:
                raise PolynomialityViolation(f"inexact division: leftover term {rc}*{self.names[0]}^{ra} {self.names[1]}^{rb}")
            qc = rc // dc
            quotient[qa, qb] = qc
            for (a, b), c in dterms:
                key = (a + qa, b + qb)
                val = rem.get(key, 0) - qc * c
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        return self._like(quotient)

    def substitute_squares(self, names: tuple[str, str] | None = None) -> "BivariatePoly":
        """p(x^2, y^2), optionally renaming the variables."""
        return BivariatePoly({(2 * a, 2 * b): c for (a, b), c in self.coeffs.items()}, names or self.names)

    def renamed(self, names: tuple[str, str]) -> "BivariatePoly":
        return BivariatePoly(self.coeffs, names)

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**a * y**b for (a, b), c in self.coeffs.items())

    def min_coefficient(self) -> int:
        return min(self.coeffs.values(), default=0)

    def total(self) -> int:
        return sum(self.coeffs.values())

    def key(self, a: int, b: int) -> str:
        return f"{self.names[0]}^{a} {self.names[1]}^{b}"

    def to_json(self) -> dict[str, int]:
        return {self.key(a, b): c for (a, b), c in sorted(self.coeffs.items(), reverse=True)}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        x, y = self.names
        for (a, b), c in sorted(self.coeffs.items(), reverse=True):
            factors = [f"{x}^{a}" if a > 1 else x] * (a > 0) + [f"{y}^{b}" if b > 1 else y] * (b > 0)
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"BivariatePoly({self})"
