"""Primitivity: classification into the three types, maximal-subalgebra
typing, conjugacy of core-free maximals in the solvable case, and the
semidirect-sum equivalences between the types.

An algebra is primitive when it has a core-free maximal subalgebra.  The
three mutually exclusive shapes are: a unique abelian minimal ideal that is
complemented (type 1), a unique nonabelian minimal ideal (type 2), and
exactly two minimal ideals, necessarily nonabelian and centralizing each
other, with a common complement (type 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (
    AlgebraError,
    LieAlgebra,
    bracket_spaces,
    centralizer,
    core,
    is_solvable,
    is_subalgebra,
    quotient_algebra,
    semidirect_sum,
    sub_algebra,
)
from .fields import PrimeField
from .linalg import Matrix, Subspace, invert_matrix, rref_solve, unit_vec, vec_add, vec_scale, zero_vec
from .modules import (
    LModule,
    certify_irreducible,
    socle_and_minimal_ideals,
    split_abelian_extension,
)
from .status import CERTIFIED, CertificationFailure, Status, heuristic, undecided

NOT_PRIMITIVE = "not_primitive"
TYPE1 = "type1"
TYPE2 = "type2"
TYPE3 = "type3"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class PrimitiveWitness:
    verdict: str
    minimal_ideals: tuple = ()
    monolith: Optional[Subspace] = None
    core_free_maximal: Optional[Subspace] = None
    common_complement: Optional[Subspace] = None
    reason: str = ""
    status: Status = CERTIFIED

    @property
    def primitive(self) -> Optional[bool]:
        if self.verdict == UNDECIDED:
            return None
        return self.verdict != NOT_PRIMITIVE


def algebra_isomorphism(A: LieAlgebra, B: LieAlgebra) -> Optional[Matrix]:
    """A bounded search for an algebra isomorphism A -> B.

    Covers identical tables and tables that agree up to one global scaling
    (a map c.id intertwines tables differing by the factor 1/c); anything
    beyond that is left undecided by returning None.
    """
    if A.field != B.field or A.dim != B.dim:
        return None
    F = A.field
    n = A.dim

    def check(T: Matrix) -> bool:
        for i in range(n):
            for j in range(i + 1, n):
                lhs = T.apply(A.basis_bracket(i, j))
                rhs = B.bracket(T.apply(unit_vec(F, n, i)), T.apply(unit_vec(F, n, j)))
                if lhs != rhs:
                    return False
        return True

    ident = Matrix.identity(F, n)
    if check(ident):
        return ident
    # one global scaling: table_B = lam * table_A  =>  T = (1/lam) id
    lam = None
    ok = True
    for i in range(n):
        for j in range(i + 1, n):
            va = A.basis_bracket(i, j)
            vb = B.basis_bracket(i, j)
            for x, y in zip(va, vb):
                za, zb = F.is_zero(x), F.is_zero(y)
                if za != zb:
                    ok = False
                elif not za:
                    r = F.div(y, x)
                    if lam is None:
                        lam = r
                    elif lam != r:
                        ok = False
    if ok and lam is not None and not F.is_zero(lam):
        T = ident.scale(F.inv(lam))
        if check(T):
            return T
    return None


def _is_abelian_space(L: LieAlgebra, W: Subspace) -> bool:
    return bracket_spaces(L, W, W).is_zero()


def _diagonal_complement(L: LieAlgebra, M1: Subspace, M2: Subspace, iso: Matrix) -> Subspace:
    """Graph of an algebra isomorphism between two complementary ideals."""
    F = L.field
    vecs = []
    for i in range(M1.dim):
        img = iso.apply(unit_vec(F, M1.dim, i))
        w = M1.basis[i]
        for c, bvec in zip(img, M2.basis):
            w = vec_add(F, w, vec_scale(F, c, bvec))
        vecs.append(w)
    return Subspace.from_vectors(F, L.dim, vecs)


def classify_primitive(L: LieAlgebra, use_oracle: bool = True) -> PrimitiveWitness:
    """Decide primitivity and type with certified witnesses.

    The analytic routes are field-independent where the theory is; the
    characteristic-zero shortcuts (type 2 means simple, type 3 means a sum
    of two isomorphic simples) close the nonabelian cases, and small finite
    fields fall back to the exhaustive oracle when analysis cannot decide.
    """
    F = L.field
    if L.dim == 0:
        return PrimitiveWitness(NOT_PRIMITIVE, reason="the zero algebra has no maximal subalgebra")
    si = socle_and_minimal_ideals(L, L.zero_space())
    if not si.status.certified:
        return _oracle_or_undecided(L, use_oracle, si.status.reason)
    mins = tuple(si.minimals)
    if len(mins) >= 3:
        return PrimitiveWitness(
            NOT_PRIMITIVE,
            minimal_ideals=mins,
            reason="more than two minimal ideals",
        )
    if len(mins) == 2:
        M1, M2 = mins
        if _is_abelian_space(L, M1) or _is_abelian_space(L, M2):
            return PrimitiveWitness(
                NOT_PRIMITIVE,
                minimal_ideals=mins,
                reason="two distinct minimal ideals with an abelian member",
            )
        cross = centralizer(L, M1) == M2 and centralizer(L, M2) == M1
        if not cross:
            return PrimitiveWitness(
                NOT_PRIMITIVE,
                minimal_ideals=mins,
                reason="the two minimal ideals do not centralize each other exactly",
            )
        if M1.sum(M2).is_full():
            iso = algebra_isomorphism(sub_algebra(L, M1), sub_algebra(L, M2))
            if iso is not None:
                U = _diagonal_complement(L, M1, M2, iso)
                _verify_common_complement(L, U, M1, M2)
                return PrimitiveWitness(
                    TYPE3,
                    minimal_ideals=mins,
                    core_free_maximal=U,
                    common_complement=U,
                )
            if F.characteristic() == 0:
                return PrimitiveWitness(
                    UNDECIDED,
                    minimal_ideals=mins,
                    reason="isomorphism search between the minimal ideals was inconclusive",
                    status=undecided("bounded isomorphism search failed"),
                )
            return _oracle_or_undecided(L, use_oracle, "finite-field type-3 analysis needs the oracle")
        if F.characteristic() == 0:
            return PrimitiveWitness(
                NOT_PRIMITIVE,
                minimal_ideals=mins,
                reason="two minimal ideals whose sum is proper (impossible in a characteristic-zero type 3)",
            )
        return _oracle_or_undecided(L, use_oracle, "characteristic-p socle analysis is out of analytic scope")
    # monolithic
    W = mins[0]
    if _is_abelian_space(L, W):
        cert = split_abelian_extension(L, W, L.zero_space())
        if cert is None:
            return PrimitiveWitness(
                NOT_PRIMITIVE,
                minimal_ideals=mins,
                monolith=W,
                reason="the abelian monolith is a Frattini ideal (no complement)",
            )
        return PrimitiveWitness(
            TYPE1,
            minimal_ideals=mins,
            monolith=W,
            core_free_maximal=cert.complement,
        )
    if W.is_full():
        # simple algebra; exhibit a core-free maximal when a cheap search finds one
        U = _find_core_free_maximal_simple(L)
        return PrimitiveWitness(TYPE2, minimal_ideals=mins, monolith=W, core_free_maximal=U)
    if F.characteristic() == 0:
        return PrimitiveWitness(
            NOT_PRIMITIVE,
            minimal_ideals=mins,
            monolith=W,
            reason="nonabelian monolith in a non-simple characteristic-zero algebra",
        )
    return _oracle_or_undecided(
        L, use_oracle, "characteristic-p nonabelian monolithic case is out of analytic scope"
    )


def _verify_common_complement(L: LieAlgebra, U: Subspace, M1: Subspace, M2: Subspace):
    if not is_subalgebra(L, U):
        raise CertificationFailure("diagonal complement is not a subalgebra")
    for M in (M1, M2):
        if not U.intersect(M).is_zero() or not U.sum(M).is_full():
            raise CertificationFailure("diagonal does not complement a minimal ideal")


def _find_core_free_maximal_simple(L: LieAlgebra) -> Optional[Subspace]:
    """Bounded search for a maximal subalgebra of a simple algebra: spans of
    basis subsets, certified maximal via irreducibility of L/U over U."""
    import itertools

    F = L.field
    n = L.dim
    for size in range(n - 1, 0, -1):
        for subset in itertools.combinations(range(n), size):
            U = L.span([unit_vec(F, n, i) for i in subset])
            if U.dim != size or not is_subalgebra(L, U):
                continue
            if maximality_certificate(L, U).certified:
                return U
    return None


def maximality_certificate(L: LieAlgebra, M: Subspace) -> Status:
    """Sufficient exact conditions for maximality of a proper subalgebra:
    codimension one, or irreducibility of L/M as an M-module."""
    if M.dim >= L.dim or not is_subalgebra(L, M):
        return undecided("not a proper subalgebra")
    if L.dim - M.dim == 1:
        return CERTIFIED
    F = L.field
    from .linalg import QuotientMap

    qm = QuotientMap(L.full_space(), M)
    Msub = sub_algebra(L, M)
    mats = []
    for i in range(M.dim):
        cols = [
            qm.project(L.bracket(M.basis[i], qm.lift(unit_vec(F, qm.dim, j))))
            for j in range(qm.dim)
        ]
        mats.append(Matrix.from_columns(F, cols))
    mod = LModule(Msub, mats, validate=False)
    verdict, _, st = certify_irreducible(mod)
    if verdict is True:
        return CERTIFIED
    return heuristic("no maximality certificate found")


def _oracle_or_undecided(L: LieAlgebra, use_oracle: bool, reason: str) -> PrimitiveWitness:
    if use_oracle and isinstance(L.field, PrimeField):
        from .oracle import EnumBudget, BudgetExceeded, primitive_bf

        try:
            return primitive_bf(L, EnumBudget(max_field_order=L.field.p))
        except BudgetExceeded as exc:
            reason = f"{reason}; oracle budget exceeded ({exc})"
    return PrimitiveWitness(UNDECIDED, reason=reason, status=undecided(reason))


@dataclass(frozen=True)
class MaximalTypeReport:
    core: Subspace
    quotient_witness: PrimitiveWitness
    maximality: Status


def maximal_type(L: LieAlgebra, M: Subspace, assume_maximal: bool = False) -> MaximalTypeReport:
    """Core of a maximal subalgebra and the primitive type of L/core."""
    if not is_subalgebra(L, M):
        raise AlgebraError("maximal-type analysis requires a subalgebra")
    mstat = maximality_certificate(L, M)
    if not mstat.certified:
        if isinstance(L.field, PrimeField):
            from .oracle import BudgetExceeded, EnumBudget, maximal_subalgebras_of

            try:
                maxes = maximal_subalgebras_of(L, EnumBudget(max_field_order=L.field.p))
            except BudgetExceeded:
                maxes = None
            if maxes is not None:
                if M not in maxes:
                    raise AlgebraError("subalgebra is not maximal")
                mstat = CERTIFIED
        if not mstat.certified and not assume_maximal:
            raise AlgebraError(
                "maximality not certified; pass assume_maximal=True to proceed"
            )
    ML = core(L, M)
    qa = quotient_algebra(L, ML)
    return MaximalTypeReport(ML, classify_primitive(qa.algebra), mstat)


def core_free_conjugator(L: LieAlgebra, U1: Subspace, U2: Subspace):
    """An element a of the monolith with (1 + ad a)(U1) = U2, for core-free
    maximal subalgebras of a solvable primitive algebra."""
    if not is_solvable(L):
        raise AlgebraError("conjugacy of core-free maximals assumes a solvable algebra")
    w = classify_primitive(L)
    if w.verdict != TYPE1:
        raise AlgebraError("the algebra is not solvable primitive")
    A = w.monolith
    F = L.field
    for U in (U1, U2):
        if not is_subalgebra(L, U):
            raise AlgebraError("conjugator inputs must be subalgebras")
        if not core(L, U).is_zero():
            raise AlgebraError("conjugator inputs must be core-free")
        if not U.sum(A).is_full() or not U.intersect(A).is_zero():
            raise AlgebraError("inputs do not complement the monolith")
    if U1 == U2:
        return zero_vec(F, L.dim)
    from .linalg import QuotientMap

    qm = QuotientMap(L.full_space(), U2)
    rows, rhs = [], []
    for u in U1.basis:
        cols = [qm.project(L.bracket(a_b, u)) for a_b in A.basis]
        for t in range(qm.dim):
            rows.append(tuple(col[t] for col in cols))
            rhs.append(F.neg(qm.project(u)[t]))
    _, _, particular, _ = rref_solve(Matrix(F, rows), tuple(rhs))
    if particular is None:
        raise CertificationFailure("no conjugating element exists; hypothesis violated")
    a = zero_vec(F, L.dim)
    for c, bvec in zip(particular, A.basis):
        a = vec_add(F, a, vec_scale(F, c, bvec))
    ada = L.ad(a)
    if not ada.matmul(ada).is_zero():
        raise CertificationFailure("conjugating element is not square-nilpotent")
    image = Subspace.from_vectors(
        F, L.dim, [vec_add(F, u, ada.apply(u)) for u in U1.basis]
    )
    if image != U2:
        raise CertificationFailure("conjugation image mismatch")
    return a


@dataclass(frozen=True)
class TypeEquivalenceReport:
    verdict: str
    B: Subspace
    complement: Optional[Subspace]
    model: LieAlgebra
    model_witness: PrimitiveWitness
    iso_matrix: Matrix
    status: Status


def _decompose(L: LieAlgebra, B: Subspace, U: Subspace, v):
    """Split v = b + u along L = B (+) U; returns (b, u)."""
    F = L.field
    cols = [list(x) for x in B.basis] + [list(x) for x in U.basis]
    M = Matrix.from_columns(F, [tuple(c) for c in cols])
    _, _, sol, _ = rref_solve(M, v)
    if sol is None:
        raise CertificationFailure("vector does not decompose along the complement")
    b = zero_vec(F, L.dim)
    for c, bvec in zip(sol[: B.dim], B.basis):
        b = vec_add(F, b, vec_scale(F, c, bvec))
    u = zero_vec(F, L.dim)
    for c, uvec in zip(sol[B.dim :], U.basis):
        u = vec_add(F, u, vec_scale(F, c, uvec))
    return b, u


def _check_algebra_iso(A: LieAlgebra, B: LieAlgebra, T: Matrix) -> bool:
    F = A.field
    if invert_matrix(T) is None:
        return False
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            if T.apply(A.basis_bracket(i, j)) != B.bracket(
                T.apply(unit_vec(F, A.dim, i)), T.apply(unit_vec(F, A.dim, j))
            ):
                return False
    return True


def type_equivalence_witnesses(L: LieAlgebra) -> TypeEquivalenceReport:
    """The semidirect-sum equivalences.

    For type 1 or 3: rebuild L as B acted on by L/C_L(B) and verify the
    explicit isomorphism sending b + u to (b, u + C_L(B)).  For type 2:
    inflate by the monolith acting adjointly, certify the result is type 3,
    and verify that factoring the new ideal out returns the original algebra.
    """
    w = classify_primitive(L)
    F = L.field
    if w.verdict in (TYPE1, TYPE3):
        B = w.monolith if w.verdict == TYPE1 else w.minimal_ideals[0]
        C = centralizer(L, B)
        U = w.core_free_maximal
        # U must complement both B and C
        for X in (B, C):
            if not U.sum(X).is_full() or not U.intersect(X).is_zero():
                raise CertificationFailure("witness does not complement as required")
        qa = quotient_algebra(L, C)
        Q = qa.algebra
        Balg = sub_algebra(L, B)
        action = []
        for i in range(Q.dim):
            lift = qa.lift(unit_vec(F, Q.dim, i))
            cols = [B.coords(L.bracket(lift, b)) for b in B.basis]
            action.append(Matrix.from_columns(F, cols))
        X = semidirect_sum(Balg, Q, action)
        # theta: L -> X, theta(b + u) = b + (u + C)
        cols = []
        for i in range(L.dim):
            b, u = _decompose(L, B, U, unit_vec(F, L.dim, i))
            cols.append(tuple(B.coords(b)) + tuple(qa.project(u)))
        theta = Matrix.from_columns(F, cols)
        if not _check_algebra_iso(L, X, theta):
            raise CertificationFailure("semidirect model is not isomorphic via theta")
        xw = classify_primitive(X)
        if xw.verdict != w.verdict:
            raise CertificationFailure("semidirect model has a different primitive type")
        return TypeEquivalenceReport(w.verdict, B, U, X, xw, theta, w.status)
    if w.verdict == TYPE2:
        D = w.monolith
        Dalg = sub_algebra(L, D)
        action = []
        for i in range(L.dim):
            cols = [D.coords(L.bracket(unit_vec(F, L.dim, i), d)) for d in D.basis]
            action.append(Matrix.from_columns(F, cols))
        X = semidirect_sum(Dalg, L, action)
        xw = classify_primitive(X)
        if xw.verdict != TYPE3:
            raise CertificationFailure("inflation failed to produce a type-3 algebra")
        Bnew = Subspace.from_vectors(
            F, X.dim, [unit_vec(F, X.dim, i) for i in range(D.dim)]
        )
        qa = quotient_algebra(X, Bnew)
        # the quotient by the new ideal must return L
        cols = []
        for i in range(qa.algebra.dim):
            lifted = qa.lift(unit_vec(F, qa.algebra.dim, i))
            cols.append(tuple(lifted[D.dim :]))
        T = Matrix.from_columns(F, cols)
        if not _check_algebra_iso(qa.algebra, L, T):
            raise CertificationFailure("inflation quotient does not return the original")
        return TypeEquivalenceReport(TYPE2, Bnew, None, X, xw, T, w.status)
    raise AlgebraError(f"type equivalences need a primitive algebra (got {w.verdict})")
