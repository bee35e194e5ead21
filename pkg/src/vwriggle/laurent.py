"""Integer multivariate Laurent polynomials in ``t1, t2, ...``.

A monomial is stored as a sorted tuple of ``(variable, exponent)`` pairs with
nonzero exponents, so the constant monomial is ``()``.  Coefficients and
exponents are kept inside the signed 64-bit range; anything that would leave
it raises :class:`CoefficientOverflow` instead of wrapping.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import CoefficientOverflow

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1

Monomial = tuple  # tuple[tuple[int, int], ...]


def _checked(n: int, what: str = "coefficient") -> int:
    if not INT64_MIN <= n <= INT64_MAX:
        raise CoefficientOverflow(f"{what} {n} does not fit in 64 bits")
    return n


def _monomial(exps: Mapping[int, int] | Iterable[tuple[int, int]]) -> Monomial:
    items = exps.items() if isinstance(exps, Mapping) else exps
    merged: dict[int, int] = {}
    for var, e in items:
        if int(var) < 1:
            raise ValueError(f"variable index must be >= 1, got {var}")
        merged[int(var)] = merged.get(int(var), 0) + int(e)
    return tuple(sorted((v, _checked(e, "exponent")) for v, e in merged.items() if e))


def _order_key(mono: Monomial) -> tuple:
    return tuple((-v, e) for v, e in mono)


class LaurentPolynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            key = _monomial(mono)
            acc[key] = acc.get(key, 0) + int(coeff)
        self._terms = {m: _checked(c) for m, c in acc.items() if c}

    @classmethod
    def _from_clean(cls, terms: dict) -> LaurentPolynomial:
        new = object.__new__(cls)
        new._terms = {m: _checked(c) for m, c in terms.items() if c}
        return new

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls({(): c})

    @classmethod
    def monomial(cls, var: int, exp: int = 1, coeff: int = 1) -> LaurentPolynomial:
        return cls({((var, exp),): coeff})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical order.

        Monomials compare lexicographically as sequences of (variable,
        exponent) pairs, lower variables first and higher exponents first,
        so ``t1`` terms precede ``t2`` terms and the constant comes last.
        """
        for mono in sorted(self._terms, key=_order_key, reverse=True):
            yield mono, self._terms[mono]

    def variables(self) -> set[int]:
        return {v for mono in self._terms for v, _ in mono}

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        from .codec import polynomial_to_text
        return f"LaurentPolynomial({polynomial_to_text(self)!r})"

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = []
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                out.append((m1 + m2, _checked(c1 * c2)))
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def invert_variable(self, var: int) -> LaurentPolynomial:
        """Substitute ``t_var -> t_var^-1``."""
        return LaurentPolynomial(
            {tuple((v, -e if v == var else e) for v, e in m): c for m, c in self._terms.items()})

    def rename(self, mapping: Mapping[int, int]) -> LaurentPolynomial:
        """Substitute ``t_v -> t_mapping[v]``; unmapped variables are kept."""
        used = self.variables()
        targets = [mapping.get(v, v) for v in used]
        if len(set(targets)) != len(targets):
            raise ValueError("variable map is not injective on the variables in use")
        return LaurentPolynomial(
            {tuple((mapping.get(v, v), e) for v, e in m): c for m, c in self._terms.items()})

    def eval_ones(self) -> int:
        return _checked(sum(self._terms.values()))
