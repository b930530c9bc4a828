"""Exact Chevalley-basis Lie algebras.

Basis of g: root vectors ``e_k`` for every root index ``k`` (``0 <= k < 2*nu``)
followed by the simple coroots ``h_i`` at flat index ``2*nu + i``.  Brackets
satisfy ``[e_a, e_-a] = h_a`` and ``[e_a, h] = -a(h) e_a``; signs of the
integers ``N_{a,b}`` are fixed by taking ``N > 0`` on extraspecial pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .rootsys import CartanElt, RootSystem, build, check_regular, negate

Rational = int | Fraction


def exact(c) -> Rational:
    """Coerce to an exact rational; floats are refused."""
    if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
        return c
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {c!r}")


def fmt_rational(c: Rational) -> str:
    return str(Fraction(c))


class LieElt:
    """Sparse vector over the flat Chevalley basis; zero entries are never stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Rational] | None = None):
        d = {}
        if coeffs:
            for k, c in coeffs.items():
                c = exact(c)
                if c:
                    d[int(k)] = c
        self.coeffs = d

    @classmethod
    def _trusted(cls, d: dict[int, Rational]) -> LieElt:
        x = cls.__new__(cls)
        x.coeffs = d
        return x

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LieElt):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        inner = ", ".join(f"{k}: {fmt_rational(c)}" for k, c in sorted(self.coeffs.items()))
        return f"LieElt({{{inner}}})"

    def __getitem__(self, k: int) -> Rational:
        return self.coeffs.get(k, 0)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.coeffs)

    def __add__(self, other: LieElt) -> LieElt:
        d = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = d.get(k, 0) + c
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return LieElt._trusted(d)

    def __neg__(self) -> LieElt:
        return LieElt._trusted({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: LieElt) -> LieElt:
        return self + (-other)

    def __mul__(self, s) -> LieElt:
        s = exact(s)
        if not s:
            return LieElt()
        return LieElt._trusted({k: c * s for k, c in self.coeffs.items()})

    __rmul__ = __mul__


def lie_sum(terms: Iterable[LieElt]) -> LieElt:
    d: dict[int, Rational] = {}
    for t in terms:
        for k, c in t.coeffs.items():
            d[k] = d.get(k, 0) + c
    return LieElt._trusted({k: c for k, c in d.items() if c})


@dataclass
class StructureTable:
    """Brackets of all ordered pairs of basis vectors.

    ``n[(a, b)]`` holds ``N_{a,b}`` for root indices with ``a + b`` a root,
    ``coroot[a]`` the expansion of ``[e_a, e_-a]`` over the simple coroots,
    and ``rows[x][y]`` the bracket ``[x, y]`` as ``((key, coeff), ...)``.
    """

    rs: RootSystem
    n: dict[tuple[int, int], int]
    coroot: list[dict[int, int]]
    rows: list[list[tuple[tuple[int, int], ...]]]

    @property
    def dim(self) -> int:
        return len(self.rows)


def _signed_constants(rs: RootSystem) -> dict[tuple[int, int], int]:
    """N_{r,s} for all pairs of roots whose sum is a root."""
    nu = rs.nu
    pos = rs.positive_roots
    idx = rs.index
    norm = [rs.inner(r, r) for r in pos]

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    npos: dict[tuple[int, int], Fraction] = {}
    for xi_k in range(nu):
        xi = pos[xi_k]
        if sum(xi) < 2:
            continue
        special = []
        for r_k in range(xi_k):
            s = sub(xi, pos[r_k])
            s_k = idx.get(s)
            if s_k is not None and s_k < nu and r_k < s_k:
                special.append((r_k, s_k))
        a_k, b_k = special[0]
        p = rs.string_p(pos[a_k], pos[b_k])
        npos[a_k, b_k] = Fraction(p + 1)
        npos[b_k, a_k] = -Fraction(p + 1)
        for r_k, s_k in special[1:]:
            r, s = pos[r_k], pos[s_k]
            # four-root relation on (a, b, -r, -s); see module tests for Jacobi
            total = Fraction(0)
            u_k = idx.get(sub(s, pos[a_k]))
            if u_k is not None:
                total -= norm[u_k] * npos[r_k, u_k] * npos[u_k, a_k] / (norm[b_k] * norm[s_k])
            v_k = idx.get(sub(r, pos[a_k]))
            if v_k is not None:
                total -= norm[v_k] * npos[a_k, v_k] * npos[s_k, v_k] / (norm[r_k] * norm[b_k])
            val = norm[xi_k] * total / npos[a_k, b_k]
            npos[r_k, s_k] = val
            npos[s_k, r_k] = -val

    out: dict[tuple[int, int], int] = {}
    for (r_k, s_k), v in npos.items():
        assert v.denominator == 1
        out[r_k, s_k] = int(v)
        out[r_k + nu, s_k + nu] = -int(v)
    for r_k in range(nu):
        r = pos[r_k]
        for s_k in range(nu):
            s = negate(pos[s_k])
            q = add(r, s)
            q_k = idx.get(q)
            if q_k is None:
                continue
            if q_k < nu:
                # r = q + (-s), both positive
                v = -norm[q_k] / norm[r_k] * out[s_k, q_k]
            else:
                # -s = r + (-q), both positive
                v = norm[q_k - nu] / norm[s_k] * out[q_k - nu, r_k]
            assert v.denominator == 1
            out[r_k, s_k + nu] = int(v)
            out[s_k + nu, r_k] = -int(v)
    return out


def structure_constants(rs: RootSystem) -> StructureTable:
    nu, rank = rs.nu, rs.rank
    dim = 2 * nu + rank
    n = _signed_constants(rs)
    roots = rs.roots
    coroot = []
    for k, r in enumerate(roots):
        rr = rs.inner(r, r)
        cr = {}
        for i, c in enumerate(r):
            if c:
                v = c * 2 * rs.root_scale[i] / rr
                assert v.denominator == 1
                cr[i] = int(v)
        coroot.append(cr)
    pairing = [[rs.coroot_pairing(r, i) for i in range(rank)] for r in roots]

    rows: list[list[tuple]] = [[() for _ in range(dim)] for _ in range(dim)]
    for a in range(2 * nu):
        ra = roots[a]
        neg_a = a + nu if a < nu else a - nu
        for b in range(2 * nu):
            if b == neg_a:
                rows[a][b] = tuple((2 * nu + i, c) for i, c in coroot[a].items())
            elif (a, b) in n:
                s = tuple(x + y for x, y in zip(ra, roots[b]))
                rows[a][b] = ((rs.index[s], n[a, b]),)
        for i in range(rank):
            c = pairing[a][i]
            if c:
                rows[a][2 * nu + i] = ((a, -c),)
                rows[2 * nu + i][a] = ((a, c),)
    return StructureTable(rs, n, coroot, rows)


class ChevalleyAlgebra:
    def __init__(self, table: StructureTable):
        self.table = table
        self.rs = table.rs
        self.nu = self.rs.nu
        self.rank = self.rs.rank
        self.dim = table.dim
        self._heights = [sum(self.rs.root(k)) for k in range(2 * self.nu)]

    # basis helpers

    def e(self, k: int) -> LieElt:
        return LieElt._trusted({k: 1})

    def e_root(self, root) -> LieElt:
        return self.e(self.rs.index[tuple(root)])

    def h(self, i: int) -> LieElt:
        return LieElt._trusted({2 * self.nu + i: 1})

    def is_cartan_key(self, k: int) -> bool:
        return k >= 2 * self.nu

    def in_n(self, x: LieElt) -> bool:
        return all(k < self.nu for k in x.coeffs)

    def _require_n(self, x: LieElt, what: str = "element") -> None:
        if not self.in_n(x):
            bad = sorted(k for k in x.coeffs if k >= self.nu)
            raise ValueError(f"{what} has support outside n: basis indices {bad}")

    def cartan_element(self, h: CartanElt) -> LieElt:
        """h as a combination of simple coroots: solve sum_j x_j A[j][i] = alpha_i(h)."""
        a = self.rs.cartan_matrix
        n = self.rank
        m = [[Fraction(a[j][i]) for j in range(n)] + [h.simple_values[i]] for i in range(n)]
        for c in range(n):
            piv = next(r for r in range(c, n) if m[r][c] != 0)
            m[c], m[piv] = m[piv], m[c]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c] / m[c][c]
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return LieElt({2 * self.nu + i: m[i][n] / m[i][i] for i in range(n)})

    # operations

    def bracket(self, x: LieElt, y: LieElt) -> LieElt:
        rows = self.table.rows
        out: dict[int, Rational] = {}
        for a, ca in x.coeffs.items():
            row = rows[a]
            for b, cb in y.coeffs.items():
                for k, c in row[b]:
                    out[k] = out.get(k, 0) + ca * cb * c
        return LieElt._trusted({k: c for k, c in out.items() if c})

    def ad_h_inverse(self, h: CartanElt, x: LieElt) -> LieElt:
        """The unique E in n with [E, h] = x."""
        check_regular(h, self.rs)
        self._require_n(x)
        return self._ad_h_inverse(h, x)

    def _ad_h_inverse(self, h: CartanElt, x: LieElt) -> LieElt:
        pos = self.rs.positive_roots
        return LieElt._trusted({k: -c / h.pair(pos[k]) for k, c in x.coeffs.items()})

    def filtration_degree(self, x: LieElt) -> int:
        """Least height in the support; max_height + 1 for zero."""
        self._require_n(x)
        if not x:
            return self.rs.max_height + 1
        return min(self._heights[k] for k in x.coeffs)

    def exp_ad_nilpotent(self, x: LieElt, y: LieElt) -> LieElt:
        """sum_k ad(x)^k (y) / k! for x in n."""
        self._require_n(x)
        total = y
        term = y
        # each ad(x) raises height by at least one; heights span [-H, H]
        bound = 2 * self.rs.max_height + 1
        k = 0
        while True:
            k += 1
            term = self.bracket(x, term) * Fraction(1, k)
            if not term:
                return total
            if k > bound:
                raise RuntimeError("ad(x) failed to be nilpotent")
            total = total + term

    def root_coefficients(self, x: LieElt) -> dict[tuple[int, ...], Rational]:
        return {self.rs.root(k): c for k, c in x.coeffs.items() if k < 2 * self.nu}

    # serialisation

    def to_json(self, x: LieElt) -> dict:
        e, h = {}, {}
        for k in sorted(x.coeffs):
            c = fmt_rational(x.coeffs[k])
            if k < 2 * self.nu:
                e[str(k)] = c
            else:
                h[str(k - 2 * self.nu)] = c
        return {"e": e, "h": h}

    def from_json(self, d: Mapping) -> LieElt:
        if not isinstance(d, Mapping) or set(d) - {"e", "h"}:
            raise ValueError(f"bad LieElt JSON: {d!r}")
        coeffs = {}
        for k, c in d.get("e", {}).items():
            k = int(k)
            if not 0 <= k < 2 * self.nu:
                raise ValueError(f"root index {k} out of range")
            coeffs[k] = parse_rational(c)
        for i, c in d.get("h", {}).items():
            i = int(i)
            if not 0 <= i < self.rank:
                raise ValueError(f"Cartan index {i} out of range")
            coeffs[2 * self.nu + i] = parse_rational(c)
        return LieElt(coeffs)


def parse_rational(c) -> Fraction:
    if isinstance(c, float):
        raise ValueError(f"float coefficient {c!r} is not exact")
    return Fraction(c)


@lru_cache(maxsize=None)
def algebra(cartan_type: str) -> ChevalleyAlgebra:
    """Cached algebra for a type string such as ``"G2"``."""
    return ChevalleyAlgebra(structure_constants(build(cartan_type)))

