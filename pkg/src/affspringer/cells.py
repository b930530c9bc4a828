"""Cell decomposition data and component labels.

The piece of the fundamental domain over a Bruhat cell ``B_w`` is a vector
bundle whose fibre over a Borel ``b_1`` is ``n cap b_1``.  Here we build
explicit Borels of each cell and check the fibre dimension ``nu - |w|``
by exact rank computations.  Components are modelled by labels ``(w, t)``
with ``t`` in the coroot lattice ``Z^rank``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .chevalley import ChevalleyAlgebra, LieElt, exact
from .linalg import Span, primitive, rank
from .rootsys import DEFAULT_CAP, RootSystem, WeylElem, inversion_data, weyl_enumerate


@dataclass(frozen=True)
class CellLabel:
    w: WeylElem
    t: tuple[int, ...]

    def translate(self, t0: Sequence[int]) -> CellLabel:
        return CellLabel(self.w, tuple(a + b for a, b in zip(self.t, t0)))


@dataclass(frozen=True)
class CellReport:
    w: WeylElem
    length: int
    fibre_dim: int
    cell_dim: int


def fibre_roots(w: WeylElem) -> frozenset[int]:
    return inversion_data(w)[1]


def borel_from_cell(alg: ChevalleyAlgebra, w: WeylElem, coords: Sequence) -> list[LieElt]:
    """Basis of exp(ad u) Ad(w) b, u = sum of coords times e_a over the inversions of w.

    ``coords`` follows the inversion roots in increasing index order.
    """
    inversions = sorted(inversion_data(w)[0])
    if len(coords) != len(inversions):
        raise ValueError(f"cell of length {len(inversions)} needs that many coordinates, got {len(coords)}")
    u = LieElt({k: exact(c) for k, c in zip(inversions, coords)})
    base = [alg.h(i) for i in range(alg.rank)]
    base += [alg.e(w.perm[k]) for k in range(alg.nu)]
    return [alg.exp_ad_nilpotent(u, b) for b in base]


def intersection_dim(alg: ChevalleyAlgebra, borel_basis: Sequence[LieElt]) -> int:
    """dim(n cap V) = dim V + dim n - dim(V + n)."""
    v = [b.coeffs for b in borel_basis]
    n = [{k: 1} for k in range(alg.nu)]
    return rank(v) + alg.nu - rank(v + n)


def is_subalgebra(alg: ChevalleyAlgebra, basis: Sequence[LieElt]) -> bool:
    # integer multiples span the same space and keep brackets in Z
    basis = [LieElt(primitive(b.coeffs)) for b in basis]
    span = Span(b.coeffs for b in basis)
    return all(
        alg.bracket(x, y).coeffs in span
        for x, y in itertools.combinations(basis, 2)
    )


def cell_census(rs: RootSystem, cap: int = DEFAULT_CAP) -> list[CellReport]:
    reports = []
    for w in weyl_enumerate(rs, cap):
        fibre = len(fibre_roots(w))
        reports.append(CellReport(w, w.length, fibre, w.length + fibre))
    return reports


def labels_in_box(elems: Iterable[WeylElem], rank_: int, radius: int) -> list[CellLabel]:
    """All (w, t) with t in [-radius, radius]^rank."""
    box = list(itertools.product(range(-radius, radius + 1), repeat=rank_))
    return [CellLabel(w, t) for w in elems for t in box]


def component_orbits(labels: Iterable[CellLabel]) -> int:
    """Orbits of the lattice translations on a label set.

    Translations only move t, and any two lattice points differ by a
    translation, so two labels share an orbit exactly when they share w.
    """
    orbits: dict[WeylElem, list[CellLabel]] = {}
    for lab in labels:
        orbits.setdefault(lab.w, []).append(lab)
    return len(orbits)


def acts_freely(labels: Iterable[CellLabel], shifts: Iterable[Sequence[int]]) -> bool:
    """No nonzero shift fixes any label."""
    labels = list(labels)
    for s in shifts:
        if not any(s):
            continue
        if any(lab.translate(s) == lab for lab in labels):
            return False
    return True


def steinberg_embedding(w: WeylElem, rank_: int) -> CellLabel:
    return CellLabel(w, (0,) * rank_)
