"""Root systems of simple type and their Weyl groups.

Roots are integer tuples in simple-root coordinates.  Positive roots are
sorted by (height, coordinates); that order fixes every root index used in
the package: positive root ``k`` has index ``k`` and its negative has index
``nu + k``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Root = tuple[int, ...]

DEFAULT_CAP = 10_000

_ADMISSIBLE = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class GroupTooLarge(RuntimeError):
    """Weyl group enumeration hit the element cap."""


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _ADMISSIBLE:
            raise ValueError(f"unknown Cartan family {self.family!r}")
        if not _ADMISSIBLE[self.family](self.rank):
            raise ValueError(f"inadmissible rank {self.rank} for type {self.family}")

    @classmethod
    def parse(cls, text: str) -> CartanType:
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"bad Cartan type string {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entry ``[i][j] = <alpha_i^vee, alpha_j>``.

    Bourbaki numbering; in G2 the first simple root is short.
    """
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    fam = ct.family
    if fam in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B":
            # last simple root short
            link(n - 2, n - 1, -1, -2)
        elif fam == "C":
            link(n - 2, n - 1, -2, -1)
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif fam == "G":
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class CartanElt:
    """An element h of the Cartan subalgebra, given by the values alpha_i(h)."""

    simple_values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "simple_values", tuple(Fraction(v) for v in self.simple_values)
        )

    def pair(self, root: Sequence[int]) -> Fraction:
        """alpha(h) for alpha given in simple-root coordinates."""
        return sum((c * v for c, v in zip(root, self.simple_values)), Fraction(0))


class NotRegular(ValueError):
    def __init__(self, root: Root):
        self.root = root
        super().__init__(f"h is not regular: alpha(h) = 0 for alpha = {format_root(root)}")


def format_root(root: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(root):
        if c == 0:
            continue
        name = f"a{i + 1}"
        if c == 1:
            terms.append(name)
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"{c}{name}")
    return "+".join(terms).replace("+-", "-") or "0"


@dataclass(frozen=True)
class WeylElem:
    """A Weyl group element stored as its permutation of the root list.

    ``perm[k]`` is the index of ``w(root_k)``.  ``word`` is a reduced word,
    read left to right, so ``w = s_{word[0]} ... s_{word[-1]}``.
    """

    perm: tuple[int, ...]
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def nu(self) -> int:
        return len(self.perm) // 2

    def act(self, k: int) -> int:
        return self.perm[k]

    def inverse_perm(self) -> tuple[int, ...]:
        inv = [0] * len(self.perm)
        for k, j in enumerate(self.perm):
            inv[j] = k
        return tuple(inv)

    def word_str(self) -> str:
        return "".join(f"s{i + 1}" for i in self.word) or "e"


@dataclass(frozen=True)
class RootSystem:
    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    # half squared lengths d_i of the simple roots, so (a_i, a_j) = d_i * A[i][j]
    root_scale: tuple[Fraction, ...]
    index: dict = field(repr=False, compare=False)
    simple_perms: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def nu(self) -> int:
        return len(self.positive_roots)

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(negate(r) for r in self.positive_roots)

    def root(self, k: int) -> Root:
        if k < self.nu:
            return self.positive_roots[k]
        return negate(self.positive_roots[k - self.nu])

    def height(self, root: Sequence[int]) -> int:
        return sum(root)

    @property
    def max_height(self) -> int:
        return self.height(self.positive_roots[-1])

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.index

    def simple_index(self, i: int) -> int:
        return self.index[unit(self.rank, i)]

    def coroot_pairing(self, root: Sequence[int], i: int) -> int:
        """<root, alpha_i^vee>."""
        return sum(c * a for c, a in zip(root, self.cartan_matrix[i]))

    def inner(self, r: Sequence[int], s: Sequence[int]) -> Fraction:
        a, d = self.cartan_matrix, self.root_scale
        total = Fraction(0)
        for i, ri in enumerate(r):
            if ri:
                for j, sj in enumerate(s):
                    if sj and a[i][j]:
                        total += ri * sj * d[i] * a[i][j]
        return total

    def reflect(self, i: int, root: Sequence[int]) -> Root:
        c = self.coroot_pairing(root, i)
        out = list(root)
        out[i] -= c
        return tuple(out)

    def string_p(self, r: Root, s: Root) -> int:
        """Largest p with s - p*r a root."""
        p = 0
        while self.is_root(tuple(b - (p + 1) * a for a, b in zip(r, s))):
            p += 1
        return p


def unit(n: int, i: int) -> Root:
    return tuple(1 if j == i else 0 for j in range(n))


def negate(root: Sequence[int]) -> Root:
    return tuple(-c for c in root)


def _root_scale(a) -> tuple[Fraction, ...]:
    n = len(a)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if a[i][j] and d[j] is None and i != j:
                # d_i a_ij = d_j a_ji
                d[j] = d[i] * a[i][j] / a[j][i]
                todo.append(j)
    return tuple(d)


def build(ct: CartanType | str) -> RootSystem:
    """Construct the root system by closing the simple roots under reflections."""
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    a = cartan_matrix(ct)
    n = ct.rank

    def refl(i, r):
        c = sum(x * y for x, y in zip(r, a[i]))
        out = list(r)
        out[i] -= c
        return tuple(out)

    found = {unit(n, i) for i in range(n)}
    frontier = list(found)
    while frontier:
        new = []
        for r in frontier:
            for i in range(n):
                s = refl(i, r)
                if all(c >= 0 for c in s) and s not in found:
                    found.add(s)
                    new.append(s)
        frontier = new
    positive = tuple(sorted(found, key=lambda r: (sum(r), r)))
    nu = len(positive)
    index = {r: k for k, r in enumerate(positive)}
    index.update({negate(r): nu + k for k, r in enumerate(positive)})
    all_roots = positive + tuple(negate(r) for r in positive)
    perms = tuple(tuple(index[refl(i, r)] for r in all_roots) for i in range(n))
    return RootSystem(ct, a, positive, _root_scale(a), index, perms)


def weyl_enumerate(rs: RootSystem, cap: int = DEFAULT_CAP) -> list[WeylElem]:
    """All Weyl group elements, breadth first under right multiplication.

    Sorted by (length, word); each word is the lexicographically least
    reduced word of its element.
    """
    identity = tuple(range(2 * rs.nu))
    seen = {identity: ()}
    level = [identity]
    while level:
        nxt = []
        for p in level:
            word = seen[p]
            for i, s in enumerate(rs.simple_perms):
                q = tuple(p[k] for k in s)
                if q not in seen:
                    if len(seen) >= cap:
                        raise GroupTooLarge(
                            f"Weyl group of {rs.cartan_type} exceeds cap {cap}"
                        )
                    seen[q] = word + (i,)
                    nxt.append(q)
        level = nxt
    elems = [WeylElem(p, w) for p, w in seen.items()]
    elems.sort(key=lambda e: (e.length, e.word))
    return elems


def identity_elem(rs: RootSystem) -> WeylElem:
    return WeylElem(tuple(range(2 * rs.nu)), ())


def from_word(rs: RootSystem, word: Sequence[int]) -> WeylElem:
    """Element for a word; the word is stored as given, so pass reduced words."""
    p = tuple(range(2 * rs.nu))
    for i in word:
        s = rs.simple_perms[i]
        p = tuple(p[k] for k in s)
    return WeylElem(p, tuple(word))


def longest_element(rs: RootSystem) -> WeylElem:
    """Built by descent: keep multiplying by a simple reflection that lengthens."""
    w = identity_elem(rs)
    while True:
        for i in range(rs.rank):
            # w s_i is longer iff w(alpha_i) > 0
            if w.perm[rs.simple_index(i)] < rs.nu:
                w = from_word(rs, w.word + (i,))
                break
        else:
            return w


def inversion_data(w: WeylElem) -> tuple[frozenset[int], frozenset[int]]:
    """(inversions, coinversions) as sets of positive root indices.

    Inversions are the positive alpha with w^-1(alpha) < 0.
    """
    nu = w.nu
    inv = w.inverse_perm()
    inversions = frozenset(k for k in range(nu) if inv[k] >= nu)
    coinversions = frozenset(range(nu)) - inversions
    return inversions, coinversions


def length_by_inversions(w: WeylElem) -> int:
    return sum(1 for k in range(w.nu) if w.perm[k] >= w.nu)


def is_regular(h: CartanElt, rs: RootSystem) -> bool:
    return all(h.pair(r) != 0 for r in rs.positive_roots)


def check_regular(h: CartanElt, rs: RootSystem) -> None:
    """Raise NotRegular naming the first positive root killed by h."""
    if len(h.simple_values) != rs.rank:
        raise ValueError(f"h has {len(h.simple_values)} entries, rank is {rs.rank}")
    for r in rs.positive_roots:
        if h.pair(r) == 0:
            raise NotRegular(r)


def weyl_order_formula(rs: RootSystem) -> int:
    """|W| = rank! * det(Cartan) * product of highest-root coefficients."""
    det = _det([list(map(Fraction, row)) for row in rs.cartan_matrix])
    return int(math.factorial(rs.rank) * det * math.prod(rs.highest_root))


def _det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det
