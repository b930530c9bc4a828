"""The nilpotent recursion behind the fundamental domain.

Given a regular ``h`` and ``E`` in n, find ``E_2, E_3, ...`` in n so that

    X = eps^-1 E + eps^-2 E_2 + eps^-3 E_3 + ...

satisfies ``exp(ad X)(eps h) in A (x) g``: no negative powers of eps survive.
Collecting the coefficient of ``eps^(1-r)`` gives, for ``r >= 2``,

    [E_r, h] = - sum_{k >= 2} 1/k! sum_{i_1 + ... + i_k = r} [E_i1, [E_i2, ... [E_ik, h]]]

and ``E_r`` is recovered because ``ad h`` is invertible on n.  Every ``E_r``
lies in the span of root vectors of height ``>= r``, so the sequence stops
at the highest root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator, Mapping

from .chevalley import ChevalleyAlgebra, LieElt, lie_sum, parse_rational
from .laurent import LaurentLie, exp_ad_apply, in_L, in_n_prime
from .rootsys import CartanElt, WeylElem, check_regular, inversion_data


@dataclass(frozen=True)
class ESequence:
    h: CartanElt
    e_terms: tuple[LieElt, ...]

    def __getitem__(self, r: int) -> LieElt:
        """E_r with 1-based r; zero past the stored range."""
        if r < 1:
            raise IndexError(r)
        return self.e_terms[r - 1] if r <= len(self.e_terms) else LieElt()

    def to_laurent(self) -> LaurentLie:
        return LaurentLie({-r: e for r, e in enumerate(self.e_terms, start=1)})


@dataclass(frozen=True)
class SteinbergPoint:
    nilpotent: LieElt
    w: WeylElem


class NotInBorel(ValueError):
    """-[E, h] is not in the Borel subalgebra of the given cell."""

    def __init__(self, roots: frozenset[int]):
        self.roots = roots
        super().__init__(f"support outside n cap b_1 at positive roots {sorted(roots)}")


def compositions(r: int, k: int) -> Iterator[tuple[int, ...]]:
    """Ordered k-tuples of positive integers summing to r."""
    if k == 1:
        yield (r,)
        return
    for first in range(1, r - k + 2):
        for rest in compositions(r - first, k - 1):
            yield (first,) + rest


def _check_inputs(alg: ChevalleyAlgebra, h: CartanElt, E: LieElt) -> None:
    check_regular(h, alg.rs)
    alg._require_n(E, "E")


def solve_direct(alg: ChevalleyAlgebra, h: CartanElt, E: LieElt) -> ESequence:
    """Solve the recursion term by term from the multilinear sum."""
    _check_inputs(alg, h, E)
    H = alg.cartan_element(h)
    top = alg.rs.max_height
    es = {1: E}
    nested: dict[tuple[int, ...], LieElt] = {(): H}

    def nest(comp):
        # [E_comp[0], [E_comp[1], ... [E_comp[-1], h]]]
        if comp not in nested:
            nested[comp] = alg.bracket(es[comp[0]], nest(comp[1:]))
        return nested[comp]

    for r in range(2, top + 2):
        rhs = lie_sum(
            nest(comp) * Fraction(1, factorial(k))
            for k in range(2, r + 1)
            for comp in compositions(r, k)
        )
        es[r] = alg._ad_h_inverse(h, -rhs)
    if es[top + 1]:
        raise RuntimeError(f"E_{top + 1} is nonzero; recursion failed to terminate")
    return ESequence(h, tuple(es[r] for r in range(1, top + 1)))


def solve_incremental(alg: ChevalleyAlgebra, h: CartanElt, E: LieElt) -> ESequence:
    """Grow X one power of eps at a time, cancelling the lowest bad coefficient."""
    _check_inputs(alg, h, E)
    eps_h = LaurentLie.monomial(1, alg.cartan_element(h))
    top = alg.rs.max_height
    partial = LaurentLie.monomial(-1, E)
    es = [E]
    for r in range(2, top + 2):
        c = exp_ad_apply(alg, partial, eps_h).coefficient(1 - r)
        alg._require_n(c, "intermediate coefficient")
        e_r = alg._ad_h_inverse(h, -c)
        es.append(e_r)
        partial = partial + LaurentLie.monomial(-r, e_r)
    if es[top]:
        raise RuntimeError(f"E_{top + 1} is nonzero; recursion failed to terminate")
    return ESequence(h, tuple(es[:top]))


def phi_inverse(alg: ChevalleyAlgebra, h: CartanElt, E: LieElt) -> LaurentLie:
    return solve_direct(alg, h, E).to_laurent()


def omega_image(alg: ChevalleyAlgebra, h: CartanElt, x: LaurentLie) -> LaurentLie:
    """exp(ad x)(eps h)."""
    return exp_ad_apply(alg, x, LaurentLie.monomial(1, alg.cartan_element(h)))


def verify_omega(alg: ChevalleyAlgebra, h: CartanElt, x: LaurentLie) -> bool:
    if not in_n_prime(alg, x):
        raise ValueError("x must have negative exponents and coefficients in n")
    return in_L(omega_image(alg, h, x))


def leading_term(alg: ChevalleyAlgebra, h: CartanElt, E: LieElt) -> LieElt:
    """Coefficient of eps^0 in exp(ad phi^-1(E))(eps h); equals [E, h]."""
    image = omega_image(alg, h, phi_inverse(alg, h, E))
    if not in_L(image):
        raise RuntimeError("solved sequence left negative powers of eps")
    return image.coefficient(0)


def steinberg_image(alg: ChevalleyAlgebra, h: CartanElt, E: LieElt, w: WeylElem) -> SteinbergPoint:
    """(E, cell w) -> (-[E, h], w); raises NotInBorel when -[E,h] leaves n cap b_1."""
    _check_inputs(alg, h, E)
    nil = -alg.bracket(E, alg.cartan_element(h))
    _, coinv = inversion_data(w)
    bad = nil.support - coinv
    if bad:
        raise NotInBorel(frozenset(bad))
    return SteinbergPoint(nil, w)


def esequence_to_json(alg: ChevalleyAlgebra, seq: ESequence) -> dict:
    return {
        "h": [str(v) for v in seq.h.simple_values],
        "E_seq": [alg.to_json(e) for e in seq.e_terms],
    }


def esequence_from_json(alg: ChevalleyAlgebra, d: Mapping) -> ESequence:
    return ESequence(
        CartanElt(tuple(parse_rational(v) for v in d["h"])),
        tuple(alg.from_json(e) for e in d["E_seq"]),
    )
