"""Finite eps-Laurent elements of g(F) and the adjoint action of exp.

A :class:`LaurentLie` maps an integer exponent ``k`` to the nonzero
coefficient of ``eps**k``.  Group elements ``exp(x)`` are never formed;
only ``Ad(exp(x)) = exp(ad x)`` is.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .chevalley import ChevalleyAlgebra, LieElt, Rational, exact


class LaurentLie:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, LieElt] | None = None):
        self.terms = {int(k): v for k, v in (terms or {}).items() if v}

    @classmethod
    def monomial(cls, k: int, x: LieElt) -> LaurentLie:
        return cls({k: x})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentLie):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        inner = ", ".join(f"{k}: {v!r}" for k, v in sorted(self.terms.items()))
        return f"LaurentLie({{{inner}}})"

    @property
    def exponents(self) -> list[int]:
        return sorted(self.terms)

    def coefficient(self, k: int) -> LieElt:
        return self.terms.get(k, LieElt())

    def __add__(self, other: LaurentLie) -> LaurentLie:
        d = dict(self.terms)
        for k, v in other.terms.items():
            d[k] = d[k] + v if k in d else v
        return LaurentLie(d)

    def __neg__(self) -> LaurentLie:
        return LaurentLie({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: LaurentLie) -> LaurentLie:
        return self + (-other)

    def __mul__(self, s: Rational) -> LaurentLie:
        s = exact(s)
        return LaurentLie({k: v * s for k, v in self.terms.items()})

    __rmul__ = __mul__


def in_L(x: LaurentLie) -> bool:
    """No negative powers of eps."""
    return all(k >= 0 for k in x.terms)


def in_n_prime(alg: ChevalleyAlgebra, x: LaurentLie) -> bool:
    """Strictly negative exponents, coefficients in n."""
    return all(k < 0 and alg.in_n(v) for k, v in x.terms.items())


def l_bracket(alg: ChevalleyAlgebra, x: LaurentLie, y: LaurentLie) -> LaurentLie:
    out: dict[int, LieElt] = {}
    for i, xi in x.terms.items():
        for j, yj in y.terms.items():
            b = alg.bracket(xi, yj)
            if b:
                out[i + j] = out[i + j] + b if i + j in out else b
    return LaurentLie(out)


def exp_ad_terms(alg: ChevalleyAlgebra, x: LaurentLie, y: LaurentLie) -> Iterator[LaurentLie]:
    """The nonzero terms ad(x)^k (y) / k!, k = 0, 1, ..."""
    if not in_n_prime(alg, x):
        raise ValueError("exp(ad x) needs x with negative exponents and coefficients in n")
    # each bracket with x raises root height by at least one
    bound = 2 * alg.rs.max_height + 1
    term = y
    k = 0
    while term:
        yield term
        k += 1
        if k > bound + 1:
            raise RuntimeError("exp(ad x) series failed to terminate")
        term = l_bracket(alg, x, term) * Fraction(1, k)


def exp_ad_apply(alg: ChevalleyAlgebra, x: LaurentLie, y: LaurentLie) -> LaurentLie:
    """exp(ad x)(y) for x in n(F)', summed exactly (the series is finite)."""
    total = LaurentLie()
    for term in exp_ad_terms(alg, x, y):
        total = total + term
    return total


def coefficient(x: LaurentLie, k: int) -> LieElt:
    return x.coefficient(k)


def to_json(alg: ChevalleyAlgebra, x: LaurentLie) -> dict:
    return {str(k): alg.to_json(x.terms[k]) for k in x.exponents}


def from_json(alg: ChevalleyAlgebra, d: Mapping) -> LaurentLie:
    if not isinstance(d, Mapping):
        raise ValueError(f"bad LaurentLie JSON: {d!r}")
    return LaurentLie({int(k): alg.from_json(v) for k, v in d.items()})
