"""Chief series and chief factors: classification flags, module isomorphism
and connectedness of factors, the strengthened Jordan-Hoelder matching, the
solvable radical, and the primitive algebra attached to a supplemented
factor.

Terminology.  A chief factor A/B is *supplemented* when some proper
subalgebra M satisfies L = A + M with B inside M, *complemented* when
additionally A cap M = B, and *Frattini* when it lies inside the Frattini
ideal of L/B; a factor is Frattini exactly when it has no proper supplement.
Two factors are *connected* when they are isomorphic as modules, or when
they arise (up to module isomorphism) as the two minimal ideals of a common
epimorphic image with two cross-centralizing nonabelian minimal ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (
    AlgebraError,
    LieAlgebra,
    bracket_spaces,
    centralizer,
    factor_centralizer,
    is_ideal,
    quotient_algebra,
    semidirect_sum,
)
from .linalg import Matrix, Subspace, invert_matrix, unit_vec
from .modules import (
    LModule,
    ModuleMap,
    certify_irreducible,
    factor_module,
    module_isomorphism,
    socle_and_minimal_ideals,
    split_abelian_extension,
)
from .primitive import TYPE1, TYPE2, TYPE3, PrimitiveWitness, classify_primitive
from .status import CERTIFIED, CertificationFailure, Status, undecided, worst


class MatchFailure(RuntimeError):
    """The Jordan-Hoelder pairing could not be built; this is a bug signal,
    never an expected outcome."""


@dataclass(frozen=True)
class ChiefFactor:
    """A chief factor A/B with its classification flags.

    ``complemented`` is three-valued: None records that no analytic route
    decided the flag (possible only for nonabelian factors over the
    rationals); the finite-field oracle settles those in tests.
    """

    algebra: LieAlgebra
    A: Subspace
    B: Subspace
    abelian: bool
    centralizer: Subspace
    supplemented: bool
    complemented: Optional[bool]
    frattini: bool
    complement_witness: Optional[Subspace]
    status: Status = CERTIFIED

    @property
    def dim(self) -> int:
        return self.A.dim - self.B.dim

    def module(self) -> LModule:
        return factor_module(self.algebra, self.A, self.B).module

    def same_section(self, other: "ChiefFactor") -> bool:
        return self.A == other.A and self.B == other.B

    def __repr__(self):
        return f"ChiefFactor(dim={self.dim}, abelian={self.abelian}, frattini={self.frattini})"


@dataclass(frozen=True)
class ChiefSeries:
    algebra: LieAlgebra
    chain: tuple
    factors: tuple
    status: Status

    def __len__(self):
        return len(self.factors)


def classify_factor(L: LieAlgebra, A: Subspace, B: Subspace, status: Status = CERTIFIED) -> ChiefFactor:
    """Classify a chief factor: abelian flag, centralizer, and the
    supplement/complement/Frattini trio.

    Abelian factors are decided exactly by the cocycle splitting test (for
    them supplemented, complemented and non-Frattini coincide).  Nonabelian
    factors are always supplemented and never Frattini: a Frattini factor
    would sit inside the Frattini ideal of L/B, whose chief factors are
    abelian.  Their complement flag is taken from cheap exact witnesses
    (the top of the algebra, or the centralizer when it complements).
    """
    abelian = B.contains_space(bracket_spaces(L, A, A))
    cent = factor_centralizer(L, A, B)
    if abelian:
        cert = split_abelian_extension(L, A, B)
        complemented = cert is not None
        witness = cert.complement if cert else None
        return ChiefFactor(
            L, A, B, True, cent, complemented, complemented, not complemented, witness, status
        )
    witness = None
    complemented: Optional[bool] = None
    if A.is_full() and A.dim > B.dim:
        complemented, witness = True, B
    elif cent.sum(A).is_full() and cent.intersect(A) == B:
        complemented, witness = True, cent
    return ChiefFactor(L, A, B, False, cent, True, complemented, False, witness, status)


def chief_series(L: LieAlgebra, choices: tuple = ()) -> ChiefSeries:
    """A chief series built bottom-up from certified minimal ideals.

    ``choices[k]`` selects among the minimal ideals of the k-th quotient
    (default first in the deterministic order), which is how alternative
    series are generated for the Jordan-Hoelder tests.
    """
    if L.dim < 1:
        raise AlgebraError("chief series needs a nonzero algebra")
    chain = [L.zero_space()]
    status = CERTIFIED
    step = 0
    while chain[-1].dim < L.dim:
        info = socle_and_minimal_ideals(L, chain[-1])
        status = worst(status, info.status)
        if not info.minimals:
            raise CertificationFailure("no minimal ideal found above a proper ideal")
        pick = choices[step] if step < len(choices) else 0
        chain.append(info.minimals[pick % len(info.minimals)])
        step += 1
    factors = tuple(
        classify_factor(L, chain[i + 1], chain[i], status) for i in range(len(chain) - 1)
    )
    return ChiefSeries(L, tuple(chain), factors, status)


def chief_series_variants(L: LieAlgebra, limit: int = 6) -> list[ChiefSeries]:
    """Distinct chief series obtained by permuting minimal-ideal choices."""
    seen = {}
    queue = [()]
    while queue and len(seen) < limit:
        choices = queue.pop(0)
        series = chief_series(L, choices)
        if series.chain not in seen:
            seen[series.chain] = series
            # branch on each level's alternatives
            for depth in range(len(series.factors)):
                info = socle_and_minimal_ideals(L, series.chain[depth])
                prefix = (tuple(choices) + (0,) * depth)[:depth]
                for alt in range(1, len(info.minimals)):
                    queue.append(prefix + (alt,))
    return list(seen.values())


def module_isomorphic(F1: ChiefFactor, F2: ChiefFactor):
    """Module isomorphism of chief factors: (verdict, witness, status).

    Nonabelian pairs are decided by centralizer equality (with an explicit
    witness built through the common quotient); abelian pairs go through the
    hom-space isomorphism search; mixed pairs are never isomorphic.
    """
    L = F1.algebra
    if L != F2.algebra:
        raise AlgebraError("factors of different algebras")
    if F1.abelian != F2.abelian:
        return False, None, CERTIFIED
    if F1.dim != F2.dim:
        return False, None, CERTIFIED
    if not F1.abelian:
        if F1.centralizer != F2.centralizer:
            return False, None, CERTIFIED
        witness = _nonabelian_iso_witness(F1, F2)
        return True, witness, CERTIFIED
    iso, status = module_isomorphism(F1.module(), F2.module())
    return iso is not None, iso, status


def _nonabelian_iso_witness(F1: ChiefFactor, F2: ChiefFactor) -> ModuleMap:
    """Witness for equal-centralizer nonabelian factors through (A_i + C)/C."""
    L = F1.algebra
    C = F1.centralizer
    lift1 = F1.A.sum(C)
    lift2 = F2.A.sum(C)
    if lift1 != lift2:
        raise CertificationFailure("equal centralizers but distinct common images")
    fm1, fm2 = factor_module(L, F1.A, F1.B), factor_module(L, F2.A, F2.B)
    fmC = factor_module(L, lift1, C)

    def through(fm) -> Matrix:
        cols = [
            fmC.coords.project(fm.coords.lift(unit_vec(L.field, fm.coords.dim, i)))
            for i in range(fm.coords.dim)
        ]
        return Matrix.from_columns(L.field, cols)

    m1, m2 = through(fm1), through(fm2)
    m2_inv = invert_matrix(m2)
    if m2_inv is None:
        raise CertificationFailure("factor does not embed isomorphically beside its centralizer")
    return ModuleMap(fm1.module, fm2.module, m2_inv.matmul(m1))


@dataclass(frozen=True)
class ConnectionWitness:
    kind: str  # "isomorphic" | "type3"
    iso: Optional[ModuleMap] = None
    kernel: Optional[Subspace] = None
    quotient_witness: Optional[PrimitiveWitness] = None


def connected(F1: ChiefFactor, F2: ChiefFactor):
    """The connectedness test: (verdict, witness, status).

    Non-isomorphic factors can only be connected when both are nonabelian;
    then the joint quotient must be by N = C1 cap C2, with C1/N and C2/N
    minimal cross-centralizing ideals and L/N primitive with two minimal
    ideals (type 3).
    """
    L = F1.algebra
    iso, witness, st = module_isomorphic(F1, F2)
    if iso:
        return True, ConnectionWitness("isomorphic", iso=witness), st
    if F1.abelian or F2.abelian:
        return False, None, st
    C1, C2 = F1.centralizer, F2.centralizer
    N = C1.intersect(C2)
    for C in (C1, C2):
        if not is_ideal(L, C):
            raise CertificationFailure("a factor centralizer failed the ideal check")
    if C1 == C2:
        return False, None, st  # nonabelian equal centralizers already isomorphic
    # C1/N and C2/N must be chief factors with crossed centralizers
    for upper, other in ((C1, C2), (C2, C1)):
        fm = factor_module(L, upper, N)
        verdict, _, cst = certify_irreducible(fm.module)
        st = worst(st, cst)
        if verdict is not True:
            if verdict is None:
                return False, None, worst(st, undecided("minimality of a crossed section undecided"))
            return False, None, st
        if factor_centralizer(L, upper, N) != other:
            return False, None, st
    qa = quotient_algebra(L, N)
    qw = classify_primitive(qa.algebra)
    st = worst(st, qw.status)
    if qw.verdict == TYPE3:
        return True, ConnectionWitness("type3", kernel=N, quotient_witness=qw), st
    if qw.verdict == "undecided":
        return False, None, worst(st, undecided("type-3 certification out of scope"))
    return False, None, st


@dataclass(frozen=True)
class IsoClass:
    representative: ChiefFactor
    member_indices: tuple


def iso_classes(series: ChiefSeries) -> list[IsoClass]:
    """Partition the series factors by module isomorphism."""
    reps: list[ChiefFactor] = []
    members: list[list[int]] = []
    for idx, f in enumerate(series.factors):
        for ridx, rep in enumerate(reps):
            ok, _, _ = module_isomorphic(rep, f)
            if ok:
                members[ridx].append(idx)
                break
        else:
            reps.append(f)
            members.append([idx])
    return [IsoClass(r, tuple(m)) for r, m in zip(reps, members)]


@dataclass(frozen=True)
class ChiefMatch:
    pairs: tuple  # (index in S1, index in S2, witness)
    status: Status


def jordan_holder_match(S1: ChiefSeries, S2: ChiefSeries) -> ChiefMatch:
    """A bijection between the factors of two chief series pairing
    module-isomorphic factors with equal Frattini flags."""
    if S1.algebra != S2.algebra:
        raise AlgebraError("series of different algebras")
    if len(S1) != len(S2):
        raise MatchFailure("series lengths differ")
    status = S1.status
    status = worst(status, S2.status)
    reps: list[ChiefFactor] = []
    labels1, labels2 = [], []
    witnesses: dict = {}
    for labels, series, tag in ((labels1, S1, 0), (labels2, S2, 1)):
        for idx, f in enumerate(series.factors):
            for ridx, rep in enumerate(reps):
                ok, wit, st = module_isomorphic(rep, f)
                status = worst(status, st)
                if ok:
                    labels.append(ridx)
                    witnesses[(tag, idx)] = wit
                    break
            else:
                reps.append(f)
                labels.append(len(reps) - 1)
                witnesses[(tag, idx)] = None
    pairs = []
    for ridx in range(len(reps)):
        side1 = [i for i, l in enumerate(labels1) if l == ridx]
        side2 = [j for j, l in enumerate(labels2) if l == ridx]
        if len(side1) != len(side2):
            raise MatchFailure(f"class {ridx} has unequal multiplicity across the series")
        f1_frat = [i for i in side1 if S1.factors[i].frattini]
        f1_rest = [i for i in side1 if not S1.factors[i].frattini]
        f2_frat = [j for j in side2 if S2.factors[j].frattini]
        f2_rest = [j for j in side2 if not S2.factors[j].frattini]
        if len(f1_frat) != len(f2_frat):
            raise MatchFailure(f"class {ridx} has unequal Frattini multiplicity")
        for i, j in list(zip(f1_frat, f2_frat)) + list(zip(f1_rest, f2_rest)):
            ok, wit, st = module_isomorphic(S1.factors[i], S2.factors[j])
            status = worst(status, st)
            if not ok:
                raise MatchFailure("paired factors failed the isomorphism re-check")
            pairs.append((i, j, wit))
    pairs.sort()
    return ChiefMatch(tuple(pairs), status)


def solvable_radical(L: LieAlgebra):
    """The largest solvable ideal, by absorbing abelian socles upward.

    Returns (radical, status).  The loop invariant keeps R solvable; it
    stops when the quotient has no abelian minimal ideal, which forces a
    trivial radical upstairs.
    """
    R = L.zero_space()
    status = CERTIFIED
    while True:
        info = socle_and_minimal_ideals(L, R)
        status = worst(status, info.status)
        if info.asoc == R:
            break
        R = info.asoc
    # certify: R solvable, by its internal derived series
    from .algebra import subspace_is_solvable

    if not subspace_is_solvable(L, R):
        raise CertificationFailure("radical candidate is not solvable")
    return R, status


def radical_centralizer_formula(L: LieAlgebra, series: ChiefSeries) -> Optional[Subspace]:
    """Intersection of the centralizers of the nonabelian factors of a
    series; None when the series has no nonabelian factor."""
    cents = [f.centralizer for f in series.factors if not f.abelian]
    if not cents:
        return None
    acc = cents[0]
    for c in cents[1:]:
        acc = acc.intersect(c)
    return acc


@dataclass(frozen=True)
class AssociatedPrimitive:
    algebra: LieAlgebra
    witness: PrimitiveWitness
    status: Status


def associated_primitive_algebra(F: ChiefFactor) -> AssociatedPrimitive:
    """The primitive algebra attached to a supplemented factor: the section
    extended by L/C for abelian factors, the plain quotient L/C otherwise."""
    if not F.supplemented:
        raise AlgebraError("only supplemented factors have an associated primitive algebra")
    L = F.algebra
    C = F.centralizer
    if F.abelian:
        fm = factor_module(L, F.A, F.B)
        qa = quotient_algebra(L, C)
        Q = qa.algebra
        d = fm.coords.dim
        Balg = LieAlgebra(L.field, d, {})
        action = []
        for i in range(Q.dim):
            lift = qa.lift(unit_vec(L.field, Q.dim, i))
            cols = [
                fm.coords.project(L.bracket(lift, fm.coords.lift(unit_vec(L.field, d, j))))
                for j in range(d)
            ]
            action.append(Matrix.from_columns(L.field, cols))
        X = semidirect_sum(Balg, Q, action)
        w = classify_primitive(X)
        if w.verdict not in (TYPE1, "undecided"):
            raise CertificationFailure("associated algebra of an abelian factor is not of type 1")
        return AssociatedPrimitive(X, w, w.status)
    qa = quotient_algebra(L, C)
    w = classify_primitive(qa.algebra)
    if w.verdict not in (TYPE2, "undecided"):
        raise CertificationFailure("associated algebra of a nonabelian factor is not of type 2")
    return AssociatedPrimitive(qa.algebra, w, w.status)
