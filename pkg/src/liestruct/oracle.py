"""Ground truth by exhaustive enumeration over small prime fields: all
subspaces by echelon pattern, hence all subalgebras, ideals and maximal
subalgebras, Frattini objects, definition-based primitivity and prefrattini
subalgebras, and the agreement checks against the analytic paths.

The enumeration cost is predicted exactly by Gaussian binomials before any
work starts; exceeding the budget is a hard error, never a truncation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

from .algebra import LieAlgebra, bracket_spaces, core, is_solvable, quotient_algebra
from .fields import PrimeField
from .linalg import Subspace, intersect_many, unit_vec
if TYPE_CHECKING:  # pragma: no cover
    from .chief import ChiefSeries


class BudgetExceeded(RuntimeError):
    def __init__(self, needed: int, allowed: int, what: str = "subspaces"):
        self.needed = needed
        self.allowed = allowed
        super().__init__(f"enumeration needs {needed} {what}, budget allows {allowed}")


@dataclass(frozen=True)
class EnumBudget:
    max_subspaces: int = 500_000
    max_field_order: int = 4

    def __post_init__(self):
        if self.max_subspaces <= 0 or self.max_field_order <= 0:
            raise ValueError("budgets must be positive")


def gaussian_binomial(n: int, k: int, q: int) -> int:
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def _check_budget(L: LieAlgebra, budget: EnumBudget) -> PrimeField:
    F = L.field
    if not isinstance(F, PrimeField):
        raise BudgetExceeded(0, 0, "enumeration requires a finite field")
    if F.p > budget.max_field_order:
        raise BudgetExceeded(F.p, budget.max_field_order, "field order")
    total = subspace_count(L.dim, F.p)
    if total > budget.max_subspaces:
        raise BudgetExceeded(total, budget.max_subspaces)
    return F


def iter_subspaces(F: PrimeField, n: int):
    """All subspaces of F^n as canonical RREF bases, by pivot pattern."""
    p = F.p
    yield Subspace.zero(F, n)
    for k in range(1, n + 1):
        for pivots in itertools.combinations(range(n), k):
            free_positions = [
                (r, c)
                for r in range(k)
                for c in range(pivots[r] + 1, n)
                if c not in pivots
            ]
            for assignment in itertools.product(range(p), repeat=len(free_positions)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), val in zip(free_positions, assignment):
                    rows[r][c] = val
                basis = tuple(tuple(x % p for x in row) for row in rows)
                yield Subspace(F, n, basis, tuple(pivots))


@dataclass(frozen=True)
class EnumeratedStructures:
    subalgebras: tuple
    ideals: tuple
    maximal_subalgebras: tuple


def enum_structures(L: LieAlgebra, budget: EnumBudget = EnumBudget()) -> EnumeratedStructures:
    return _enum_structures_cached(L, budget)


@lru_cache(maxsize=64)
def _enum_structures_cached(L: LieAlgebra, budget: EnumBudget) -> EnumeratedStructures:
    F = _check_budget(L, budget)
    subalgebras = []
    ideals = []
    full = L.full_space()
    for U in iter_subspaces(F, L.dim):
        closed = True
        for i in range(U.dim):
            for j in range(i + 1, U.dim):
                if not U.contains(L.bracket(U.basis[i], U.basis[j])):
                    closed = False
                    break
            if not closed:
                break
        if not closed:
            continue
        subalgebras.append(U)
        ideal = True
        for bvec in U.basis:
            for i in range(L.dim):
                if not U.contains(L.bracket(unit_vec(F, L.dim, i), bvec)):
                    ideal = False
                    break
            if not ideal:
                break
        if ideal:
            ideals.append(U)
    proper = [U for U in subalgebras if U.dim < L.dim]
    by_dim = sorted(proper, key=lambda U: -U.dim)
    maximals = []
    for U in by_dim:
        if not any(V.dim > U.dim and V.contains_space(U) for V in proper):
            maximals.append(U)
    return EnumeratedStructures(tuple(subalgebras), tuple(ideals), tuple(maximals))


def maximal_subalgebras_of(L: LieAlgebra, budget: EnumBudget = EnumBudget()) -> tuple:
    return enum_structures(L, budget).maximal_subalgebras


def minimal_ideals_bf(L: LieAlgebra, budget: EnumBudget = EnumBudget()) -> tuple:
    ideals = enum_structures(L, budget).ideals
    nonzero = [I for I in ideals if I.dim > 0]
    return tuple(
        I
        for I in nonzero
        if not any(J.dim < I.dim and I.contains_space(J) for J in nonzero)
    )


def frattini_objects(L: LieAlgebra, budget: EnumBudget = EnumBudget()):
    """(intersection of the maximal subalgebras, its core)."""
    maxes = enum_structures(L, budget).maximal_subalgebras
    if not maxes:
        return L.full_space(), L.full_space()
    phi_sub = intersect_many(list(maxes))
    return phi_sub, core(L, phi_sub)


def frattini_ideal_bf(L: LieAlgebra, budget: EnumBudget = EnumBudget()) -> Subspace:
    return frattini_objects(L, budget)[1]


def factor_is_frattini_bf(
    L: LieAlgebra, A: Subspace, B: Subspace, budget: EnumBudget = EnumBudget()
) -> bool:
    """Definition-based Frattini flag: A/B inside the Frattini ideal of L/B."""
    qa = quotient_algebra(L, B)
    phi = frattini_ideal_bf(qa.algebra, budget)
    return qa.lift_space(phi).contains_space(A)


def complements_bf(
    L: LieAlgebra, A: Subspace, B: Subspace, budget: EnumBudget = EnumBudget()
) -> tuple:
    """All subalgebras K with K + A = L and K cap A = B."""
    subs = enum_structures(L, budget).subalgebras
    full = L.full_space()
    return tuple(
        K for K in subs if K.sum(A) == full and K.intersect(A) == B
    )


def supplements_bf(
    L: LieAlgebra, A: Subspace, B: Subspace, budget: EnumBudget = EnumBudget()
) -> tuple:
    """All proper subalgebras M with L = A + M and B inside M."""
    subs = enum_structures(L, budget).subalgebras
    full = L.full_space()
    return tuple(
        M
        for M in subs
        if M.dim < L.dim and M.sum(A) == full and M.contains_space(B)
    )


def primitive_bf(L: LieAlgebra, budget: EnumBudget = EnumBudget()):
    """Definitive primitivity verdict by scanning maximal subalgebras for a
    trivial core; the type is read off the minimal-ideal structure."""
    from .primitive import NOT_PRIMITIVE, TYPE1, TYPE2, TYPE3, PrimitiveWitness

    if L.dim == 0:
        return PrimitiveWitness(NOT_PRIMITIVE, reason="the zero algebra has no maximal subalgebra")
    structures = enum_structures(L, budget)
    core_free = [M for M in structures.maximal_subalgebras if core(L, M).is_zero()]
    mins = minimal_ideals_bf(L, budget)
    if not core_free:
        return PrimitiveWitness(
            NOT_PRIMITIVE, minimal_ideals=mins, reason="every maximal subalgebra has a nonzero core"
        )
    U = core_free[0]
    if len(mins) == 1:
        W = mins[0]
        abelian = bracket_spaces(L, W, W).is_zero()
        return PrimitiveWitness(
            TYPE1 if abelian else TYPE2,
            minimal_ideals=mins,
            monolith=W,
            core_free_maximal=U,
        )
    if len(mins) == 2:
        common = next(
            (
                M
                for M in core_free
                if all(
                    M.intersect(W).is_zero() and M.sum(W).is_full() for W in mins
                )
            ),
            None,
        )
        return PrimitiveWitness(
            TYPE3,
            minimal_ideals=mins,
            core_free_maximal=U,
            common_complement=common,
        )
    raise RuntimeError("primitive algebra with more than two minimal ideals: impossible")


def prefrattini_bf(
    L: LieAlgebra, series: "ChiefSeries", budget: EnumBudget = EnumBudget()
):
    """The full finite set of prefrattini subalgebras from the definition:
    one maximal subalgebra from each avoidance set of the non-Frattini
    indices of the series, intersected, over all choice functions."""
    if not is_solvable(L):
        raise ValueError("prefrattini subalgebras are defined for solvable algebras here")
    structures = enum_structures(L, budget)
    chain = series.chain
    choice_sets = []
    for i in range(1, len(chain)):
        A, B = chain[i], chain[i - 1]
        if factor_is_frattini_bf(L, A, B, budget):
            continue
        Mi = [
            M
            for M in structures.maximal_subalgebras
            if M.contains_space(B) and not M.contains_space(A)
        ]
        choice_sets.append(Mi)
    total = 1
    for s in choice_sets:
        total *= max(len(s), 1)
    if total > budget.max_subspaces:
        raise BudgetExceeded(total, budget.max_subspaces, "choice functions")
    results = set()
    if not choice_sets:
        return (L.full_space(),), tuple(choice_sets)
    for picks in itertools.product(*choice_sets):
        results.add(intersect_many(list(picks)))
    return tuple(sorted(results, key=lambda S: (S.dim, S.basis))), tuple(choice_sets)


def four_core_intersections(
    L: LieAlgebra, ref, series: "ChiefSeries", budget: EnumBudget = EnumBudget()
):
    """The four equal core-intersections attached to a supplemented factor,
    computed literally from enumerated maximal subalgebras.

    Sets: monolithic-primitive cores whose socle factor is connected to the
    reference; cores of monolithic maximal supplements of class members (the
    precrown denominators); cores of all maximal supplements of class
    members; cores of all maximal supplements of module-isomorphic factors.
    """
    from .chief import classify_factor, connected, module_isomorphic

    structures = enum_structures(L, budget)
    full = L.full_space()
    j0, j1, j2, j3 = [], [], [], []
    cores = {}
    monolithic = {}
    socle_factor = {}
    for M in structures.maximal_subalgebras:
        ML = core(L, M)
        cores[M] = ML
        qa = quotient_algebra(L, ML)
        qmins = minimal_ideals_bf(qa.algebra, budget)
        monolithic[M] = len(qmins) == 1
        if monolithic[M]:
            socle_factor[M] = classify_factor(L, qa.lift_space(qmins[0]), ML)
    for M in structures.maximal_subalgebras:
        ML = cores[M]
        supplemented = [
            f
            for f in series.factors
            if f.supplemented and M.sum(f.A) == full and M.contains_space(f.B)
        ]
        conn = [f for f in supplemented if connected(f, ref)[0]]
        isom = [f for f in supplemented if module_isomorphic(f, ref)[0]]
        if monolithic[M] and connected(socle_factor[M], ref)[0]:
            j0.append(ML)
        if monolithic[M] and conn:
            j1.append(ML)
        if conn:
            j2.append(ML)
        if isom:
            j3.append(ML)
    out = []
    for js in (j0, j1, j2, j3):
        out.append(intersect_many(js) if js else full)
    return tuple(out)


def oracle_check(L: LieAlgebra, budget: EnumBudget = EnumBudget()) -> list[str]:
    """Diff the analytic pipeline against the enumeration oracle; returns a
    list of discrepancy descriptions (empty means full agreement)."""
    from .chief import chief_series
    from .crowns import all_crowns
    from .modules import socle_and_minimal_ideals
    from .primitive import classify_primitive

    problems: list[str] = []
    structures = enum_structures(L, budget)

    # primitivity
    analytic = classify_primitive(L, use_oracle=False)
    bf = primitive_bf(L, budget)
    if analytic.verdict != "undecided" and analytic.verdict != bf.verdict:
        problems.append(
            f"primitivity: analytic {analytic.verdict} vs oracle {bf.verdict}"
        )

    # socle and minimal ideals
    info = socle_and_minimal_ideals(L, L.zero_space())
    mins_bf = minimal_ideals_bf(L, budget)
    soc_bf = L.zero_space()
    asoc_bf = L.zero_space()
    for W in mins_bf:
        soc_bf = soc_bf.sum(W)
        if bracket_spaces(L, W, W).is_zero():
            asoc_bf = asoc_bf.sum(W)
    if info.soc != soc_bf:
        problems.append("socle: analytic sum differs from the oracle")
    if info.asoc != asoc_bf:
        problems.append("abelian socle: analytic sum differs from the oracle")
    for W in info.minimals:
        if W not in mins_bf:
            problems.append("a reported minimal ideal is not minimal per the oracle")

    # cores of maximal subalgebras and primitivity of the quotients
    for M in structures.maximal_subalgebras:
        ML = core(L, M)
        inside = [
            I for I in structures.ideals if M.contains_space(I)
        ]
        biggest = max(inside, key=lambda I: I.dim)
        if ML != biggest:
            problems.append("core: chain computation differs from the ideal enumeration")
        qa = quotient_algebra(L, ML)
        if qa.algebra.dim and not primitive_bf(qa.algebra, budget).primitive:
            problems.append("a maximal core quotient is not primitive")

    # chief factor flags
    series = chief_series(L)
    for idx, f in enumerate(series.factors):
        frat_bf = factor_is_frattini_bf(L, f.A, f.B, budget)
        if f.frattini != frat_bf:
            problems.append(f"frattini flag mismatch on factor {idx}")
        comps = complements_bf(L, f.A, f.B, budget)
        if f.complemented is not None and f.complemented != bool(comps):
            problems.append(f"complemented flag mismatch on factor {idx}")
        supp_bf = bool(supplements_bf(L, f.A, f.B, budget))
        if f.supplemented != supp_bf:
            problems.append(f"supplemented flag mismatch on factor {idx}")

    # crowns: socle identity and phi-freeness of the quotient
    crowns = all_crowns(L, series)
    for crown in crowns:
        qa = quotient_algebra(L, crown.R)
        phi = frattini_ideal_bf(qa.algebra, budget)
        if not phi.is_zero():
            problems.append("a crown quotient is not phi-free")
        soc_here = L.zero_space()
        for W in minimal_ideals_bf(qa.algebra, budget):
            soc_here = soc_here.sum(qa.lift_space(W))
        if soc_here != crown.C:
            problems.append("crown numerator differs from the oracle socle")

    # prefrattini sets and the four core-intersection families (solvable only)
    if is_solvable(L):
        bf_set, _ = prefrattini_bf(L, series, budget)
        crown_comps = [complements_bf(L, c.C, c.R, budget) for c in crowns]
        total = 1
        for cc in crown_comps:
            total *= max(len(cc), 1)
        if total <= budget.max_subspaces:
            via_crowns = set()
            for picks in itertools.product(*crown_comps):
                via_crowns.add(intersect_many(list(picks)) if picks else L.full_space())
            if via_crowns != set(bf_set):
                problems.append("prefrattini sets differ between crowns and the definition")
        for crown in crowns:
            inters = four_core_intersections(L, crown.class_rep, series, budget)
            if len(set((i.basis for i in inters))) != 1:
                problems.append("the four core-intersections disagree")
            elif inters[0] != crown.R:
                problems.append("crown denominator differs from the core intersections")
    return problems
