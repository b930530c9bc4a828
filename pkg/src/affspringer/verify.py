"""Seeded randomized verification of every module's invariants.

Each trial draws its inputs from its own RNG seeded by ``(seed, index)``,
so a report depends only on the config and trials can be evaluated in any
order.
"""

from __future__ import annotations

import copy
import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import laurent
from .cells import cell_census
from .chevalley import ChevalleyAlgebra, LieElt, StructureTable, algebra, structure_constants
from .domain import (
    esequence_from_json,
    esequence_to_json,
    leading_term,
    omega_image,
    solve_direct,
    solve_incremental,
    verify_omega,
)
from .laurent import LaurentLie
from .rootsys import (
    DEFAULT_CAP,
    CartanElt,
    CartanType,
    GroupTooLarge,
    RootSystem,
    build,
    inversion_data,
    is_regular,
    weyl_enumerate,
    weyl_order_formula,
)

# exhaustive Jacobi above this dimension gets slow; sample triples instead
JACOBI_EXHAUSTIVE_DIM = 60


@dataclass(frozen=True)
class VerifyConfig:
    cartan_type: str
    trials: int = 50
    seed: int = 0
    h_range: int = 10
    coeff_den_bound: int = 5

    def __post_init__(self):
        CartanType.parse(self.cartan_type)
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.h_range < 1 or self.coeff_den_bound < 1:
            raise ValueError("bounds must be positive")


def trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{index}")


def random_regular_h(rng: random.Random, rs: RootSystem, h_range: int) -> CartanElt:
    values = [v for v in range(-h_range, h_range + 1) if v]
    while True:
        h = CartanElt(tuple(rng.choice(values) for _ in range(rs.rank)))
        if is_regular(h, rs):
            return h


def random_rational(rng: random.Random, bound: int) -> Fraction:
    num = rng.choice([v for v in range(-bound, bound + 1) if v])
    return Fraction(num, rng.randint(1, bound))


def random_nilpotent(rng: random.Random, alg: ChevalleyAlgebra, bound: int, density: float = 0.5) -> LieElt:
    """Each positive-root coefficient is zero with probability 1 - density."""
    return LieElt({k: random_rational(rng, bound) for k in range(alg.nu) if rng.random() < density})


def random_lie(rng: random.Random, alg: ChevalleyAlgebra, bound: int) -> LieElt:
    return LieElt({k: random_rational(rng, bound) for k in range(alg.dim) if rng.random() < 0.5})


def random_laurent(rng: random.Random, alg: ChevalleyAlgebra, bound: int, span: int = 3) -> LaurentLie:
    return LaurentLie({k: random_lie(rng, alg, bound) for k in range(-span, span + 1) if rng.random() < 0.5})


def corrupt_table(table: StructureTable) -> StructureTable:
    """Test hook: flip one structure constant (or one coroot in rank-one types)."""
    bad = copy.deepcopy(table)
    nu = bad.rs.nu
    if bad.n:
        a, b = min(bad.n)
        for x, y in ((a, b), (b, a)):
            bad.n[x, y] = -bad.n[x, y]
            bad.rows[x][y] = tuple((k, -c) for k, c in bad.rows[x][y])
    else:
        bad.rows[0][nu] = tuple((k, -c) for k, c in bad.rows[0][nu])
        bad.rows[nu][0] = tuple((k, -c) for k, c in bad.rows[nu][0])
    return bad


class _Failure(Exception):
    def __init__(self, check: str, case: dict):
        self.check = check
        self.case = case


def _table_checks(alg: ChevalleyAlgebra, rng: random.Random) -> dict[str, int]:
    rs = alg.rs
    basis = [LieElt({k: 1}) for k in range(alg.dim)]
    counts = {}

    n = 0
    for x, y in itertools.combinations(range(alg.dim), 2):
        n += 1
        if alg.bracket(basis[x], basis[y]) != -alg.bracket(basis[y], basis[x]):
            raise _Failure("antisymmetry", {"basis": [x, y]})
    counts["antisymmetry"] = n

    if alg.dim <= JACOBI_EXHAUSTIVE_DIM:
        triples = itertools.combinations(range(alg.dim), 3)
    else:
        triples = (tuple(rng.randrange(alg.dim) for _ in range(3)) for _ in range(20_000))
    n = 0
    for x, y, z in triples:
        n += 1
        bx, by, bz = basis[x], basis[y], basis[z]
        j = (alg.bracket(alg.bracket(bx, by), bz)
             + alg.bracket(alg.bracket(by, bz), bx)
             + alg.bracket(alg.bracket(bz, bx), by))
        if j:
            raise _Failure("jacobi", {"basis": [x, y, z]})
    counts["jacobi"] = n

    n = 0
    for a in range(2 * rs.nu):
        for b in range(2 * rs.nu):
            ra, rb = rs.root(a), rs.root(b)
            s = tuple(p + q for p, q in zip(ra, rb))
            if not any(s):
                continue
            val = alg.table.n.get((a, b), 0)
            expected = rs.string_p(ra, rb) + 1 if rs.is_root(s) else 0
            n += 1
            if abs(val) != expected:
                raise _Failure("chevalley_constants", {"roots": [a, b], "N": val, "expected_abs": expected})
    counts["chevalley_constants"] = n

    for a in range(2 * rs.nu):
        neg = a + rs.nu if a < rs.nu else a - rs.nu
        h_a = alg.bracket(basis[a], basis[neg])
        # the coroot evaluates to 2 on its root
        if alg.bracket(h_a, basis[a]) != basis[a] * 2:
            raise _Failure("coroot", {"root": a})
    counts["coroot"] = 2 * rs.nu
    return counts


def _weyl_checks(rs: RootSystem) -> dict[str, int]:
    try:
        elems = weyl_enumerate(rs, DEFAULT_CAP)
    except GroupTooLarge:
        return {}
    if len(elems) != weyl_order_formula(rs):
        raise _Failure("weyl_order", {"enumerated": len(elems), "formula": weyl_order_formula(rs)})
    for w in elems:
        inv, coinv = inversion_data(w)
        if len(inv) != w.length or len(inv) + len(coinv) != rs.nu:
            raise _Failure("inversions", {"w": list(w.word)})
    by_len = [0] * (rs.nu + 1)
    for w in elems:
        by_len[w.length] += 1
    if by_len != by_len[::-1]:
        raise _Failure("length_palindrome", {"counts": by_len})
    census = cell_census(rs)
    if any(c.cell_dim != rs.nu for c in census):
        raise _Failure("census", {})
    return {"weyl_order": 1, "inversions": len(elems), "length_palindrome": 1, "census": len(census)}


def _trial(alg: ChevalleyAlgebra, cfg: VerifyConfig, index: int) -> list[str]:
    rng = trial_rng(cfg.seed, index)
    rs = alg.rs
    h = random_regular_h(rng, rs, cfg.h_range)
    E = random_nilpotent(rng, alg, cfg.coeff_den_bound)
    case = {"trial": index, "h": [str(v) for v in h.simple_values], "E": alg.to_json(E)}

    def fail(check):
        raise _Failure(check, case)

    seq = solve_direct(alg, h, E)
    if solve_incremental(alg, h, E) != seq:
        fail("solver_equivalence")
    if len(seq.e_terms) != rs.max_height or seq[1] != E:
        fail("termination")
    if any(alg.filtration_degree(seq[r]) < r for r in range(1, rs.max_height + 1)):
        fail("filtration")
    x = seq.to_laurent()
    image = omega_image(alg, h, x)
    if any(k < 0 for k in image.terms):
        fail("omega")
    H = alg.cartan_element(h)
    lead = image.coefficient(0)
    if lead != alg.bracket(E, H) or lead != leading_term(alg, h, E):
        fail("leading_term")
    if alg.ad_h_inverse(h, lead) != E:
        fail("leading_term_injective")
    c = random_rational(rng, cfg.coeff_den_bound)
    scaled = solve_direct(alg, h, E * c)
    if any(scaled[r] != seq[r] * c ** r for r in range(1, rs.max_height + 1)):
        fail("scaling")
    if rs.max_height >= 2:
        r = rng.randint(2, rs.max_height)
        delta = random_nilpotent(rng, alg, cfg.coeff_den_bound, density=1.0)
        if verify_omega(alg, h, x + LaurentLie.monomial(-r, delta)):
            fail("perturbation")
    if esequence_from_json(alg, json.loads(json.dumps(esequence_to_json(alg, seq)))) != seq:
        fail("json_roundtrip")
    if laurent.from_json(alg, json.loads(json.dumps(laurent.to_json(alg, x)))) != x:
        fail("json_roundtrip")
    return ["solver_equivalence", "termination", "filtration", "omega", "leading_term",
            "leading_term_injective", "scaling", "perturbation", "json_roundtrip"]


def run(cfg: VerifyConfig, table_hook: Callable[[StructureTable], StructureTable] | None = None) -> dict:
    """Run the suite; the returned report has ``ok`` and, on failure, ``failure``."""
    ct = str(CartanType.parse(cfg.cartan_type))
    if table_hook is None:
        alg = algebra(ct)
    else:
        alg = ChevalleyAlgebra(table_hook(structure_constants(build(ct))))
    report = {
        "type": ct,
        "seed": cfg.seed,
        "trials": cfg.trials,
        "h_range": cfg.h_range,
        "coeff_den_bound": cfg.coeff_den_bound,
    }
    checks: dict[str, int] = {}
    try:
        checks.update(_table_checks(alg, trial_rng(cfg.seed, -1)))
        checks.update(_weyl_checks(alg.rs))
        for i in range(cfg.trials):
            for name in _trial(alg, cfg, i):
                checks[name] = checks.get(name, 0) + 1
    except _Failure as f:
        report["ok"] = False
        report["checks"] = checks
        report["failure"] = {"check": f.check, **f.case}
        return report
    report["ok"] = True
    report["checks"] = checks
    return report
