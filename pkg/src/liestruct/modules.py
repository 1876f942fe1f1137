"""Module machinery for chief factors: factor modules, spinning, socles and
minimal ideals, hom spaces, module isomorphism, and the abelian-extension
splitting test.

Minimality of submodules is *certified*, never assumed:

* over GF(p) with p^dim within budget, by exhausting spins of all nonzero
  vectors;
* over the rationals, by an irreducible characteristic polynomial of an
  action element when one exists, and otherwise by the one-vector singular
  element criterion (a kernel vector of minimal nullity must spin to the
  whole module on both the module and its dual); every failed attempt yields
  an explicit proper submodule, so the search either certifies or splits.

Socles are exact: over GF(p) by vector enumeration, in characteristic zero
as the annihilator of the trace-form radical of the unital enveloping
algebra of the action.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import (
    AlgebraError,
    LieAlgebra,
    bracket_spaces,
    is_ideal,
    quotient_algebra,
)
from .fields import Field, PrimeField, Rationals
from .linalg import (
    Matrix,
    QuotientMap,
    Subspace,
    Vector,
    rref_solve,
    unit_vec,
    vec,
    vec_add,
    vec_scale,
    zero_vec,
)
from .polys import charpoly, is_irreducible, linear_factors, poly_at_matrix, roots_in_field
from .status import CERTIFIED, Status, heuristic, worst

VECTOR_ENUM_BUDGET = 1_000_000
GRID_BUDGET = 4096


class LModule:
    """A finite-dimensional module over a Lie algebra, one action matrix per
    algebra basis element; the commutator law is validated at construction."""

    __slots__ = ("algebra", "dim", "mats")

    def __init__(self, algebra: LieAlgebra, mats: Sequence[Matrix], validate=True):
        if len(mats) != algebra.dim:
            raise AlgebraError("need one action matrix per algebra basis element")
        d = mats[0].rows if mats else 0
        for M in mats:
            if M.rows != M.cols or M.rows != d:
                raise AlgebraError("action matrices must be square of equal size")
        self.algebra = algebra
        self.dim = d
        self.mats = tuple(mats)
        if validate:
            self._validate()

    def _validate(self):
        L = self.algebra
        F = L.field
        for i in range(L.dim):
            for j in range(i + 1, L.dim):
                w = L.basis_bracket(i, j)
                lhs = Matrix.zero(F, self.dim, self.dim)
                for k, c in enumerate(w):
                    if not F.is_zero(c):
                        lhs = lhs.add(self.mats[k].scale(c))
                rhs = self.mats[i].matmul(self.mats[j]).sub(
                    self.mats[j].matmul(self.mats[i])
                )
                if lhs != rhs:
                    raise AlgebraError(
                        f"action violates the bracket law on pair ({i}, {j})"
                    )

    @property
    def field(self) -> Field:
        return self.algebra.field

    def act(self, x: Vector, v: Vector) -> Vector:
        F = self.field
        out = zero_vec(F, self.dim)
        for c, M in zip(x, self.mats):
            if not F.is_zero(c):
                out = vec_add(F, out, vec_scale(F, c, M.apply(v)))
        return out

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def kernel_of_action(self) -> Subspace:
        """Elements of the algebra acting as zero."""
        F = self.field
        if self.dim == 0:
            return Subspace.full(F, self.algebra.dim)
        rows = []
        for r in range(self.dim):
            for c in range(self.dim):
                rows.append(tuple(M.entries[r][c] for M in self.mats))
        _, _, _, null = rref_solve(Matrix(F, rows))
        return null


@dataclass(frozen=True)
class ModuleMap:
    """An equivariant linear map between modules of one algebra."""

    source: LModule
    target: LModule
    matrix: Matrix

    def __post_init__(self):
        if self.source.algebra is not self.target.algebra and (
            self.source.algebra != self.target.algebra
        ):
            raise AlgebraError("module map requires a common base algebra")
        M = self.matrix
        if M.rows != self.target.dim or M.cols != self.source.dim:
            raise AlgebraError("module map matrix has wrong shape")
        for rs, rt in zip(self.source.mats, self.target.mats):
            if rt.matmul(M) != M.matmul(rs):
                raise AlgebraError("matrix is not equivariant")

    def is_isomorphism(self) -> bool:
        if self.source.dim != self.target.dim or self.source.dim == 0:
            return self.source.dim == self.target.dim
        _, rank, _, _ = rref_solve(self.matrix)
        return rank == self.source.dim


@dataclass(frozen=True)
class FactorModule:
    """The section A/B of ideals as a module, with its coordinate maps."""

    module: LModule
    A: Subspace
    B: Subspace
    coords: QuotientMap


def adjoint_module(L: LieAlgebra) -> LModule:
    mats = [L.ad(unit_vec(L.field, L.dim, i)) for i in range(L.dim)]
    return LModule(L, mats, validate=False)  # the Jacobi identity is the law here


def factor_module(L: LieAlgebra, A: Subspace, B: Subspace) -> FactorModule:
    if not is_ideal(L, A) or not is_ideal(L, B):
        raise AlgebraError("factor module requires a pair of ideals")
    if not A.contains_space(B):
        raise AlgebraError("denominator must sit inside the numerator")
    F = L.field
    qm = QuotientMap(A, B)
    d = qm.dim
    mats = []
    for i in range(L.dim):
        cols = [
            qm.project(L.bracket(unit_vec(F, L.dim, i), qm.lift(unit_vec(F, d, j))))
            for j in range(d)
        ]
        mats.append(Matrix.from_columns(F, cols) if d else Matrix(F, []))
    return FactorModule(LModule(L, mats), A, B, qm)


def restrict_module(M: LModule, W: Subspace) -> LModule:
    """The module structure on an invariant subspace, in W-coordinates."""
    F = M.field
    mats = []
    for rho in M.mats:
        cols = [W.coords(rho.apply(w)) for w in W.basis]
        mats.append(Matrix.from_columns(F, cols) if W.dim else Matrix(F, []))
    return LModule(M.algebra, mats, validate=False)


def spin(M: LModule, v: Vector) -> Subspace:
    """Smallest action-invariant subspace containing v."""
    F = M.field
    space = Subspace.from_vectors(F, M.dim, [v])
    queue = list(space.basis)
    while queue:
        w = queue.pop()
        for rho in M.mats:
            cand = rho.apply(w)
            if not space.contains(cand):
                space = space.sum(Subspace.from_vectors(F, M.dim, [cand]))
                queue.append(cand)
    return space


def spin_space(M: LModule, seed: Subspace) -> Subspace:
    space = seed
    queue = list(space.basis)
    F = M.field
    while queue:
        w = queue.pop()
        for rho in M.mats:
            cand = rho.apply(w)
            if not space.contains(cand):
                space = space.sum(Subspace.from_vectors(F, M.dim, [cand]))
                queue.append(cand)
    return space


def _spin_transposed(M: LModule, u: Vector) -> Subspace:
    """Spin in the dual module (invariance under the transposed action)."""
    F = M.field
    trans = [rho.transpose() for rho in M.mats]
    space = Subspace.from_vectors(F, M.dim, [u])
    queue = list(space.basis)
    while queue:
        w = queue.pop()
        for rho in trans:
            cand = rho.apply(w)
            if not space.contains(cand):
                space = space.sum(Subspace.from_vectors(F, M.dim, [cand]))
                queue.append(cand)
    return space


def _annihilator(F: Field, dual_space: Subspace) -> Subspace:
    """Vectors killed by every functional of a coordinate dual subspace."""
    if dual_space.is_zero():
        return Subspace.full(F, dual_space.ambient_dim)
    _, _, _, null = rref_solve(Matrix(F, list(dual_space.basis)))
    return null


def _nonzero_vectors(field: PrimeField, dim: int):
    """One representative per projective point (first nonzero entry is 1)."""
    p = field.p
    for pattern in itertools.product(range(p), repeat=dim):
        first = next((x for x in pattern if x != 0), None)
        if first == 1:
            yield pattern


def _candidate_operators(M: LModule):
    """Deterministic generic-element candidates inside the enveloping algebra."""
    F = M.field
    d = M.dim
    singles = [rho for rho in M.mats if not rho.is_zero()]
    for rho in singles:
        yield rho
    if len(singles) > 1:
        total = Matrix.zero(F, d, d)
        for rho in singles:
            total = total.add(rho)
        yield total
        for base in (2, 3, 5):
            mix = Matrix.zero(F, d, d)
            w = 1
            for rho in singles:
                mix = mix.add(rho.scale(F.coerce(w)))
                w = w * base
            yield mix
        for i in range(min(len(singles), 4)):
            for j in range(i + 1, min(len(singles), 4)):
                yield singles[i].matmul(singles[j])


def _norton_attempt(M: LModule, theta: Matrix, nullity_needed: int):
    """One singular-element test; returns ('irr' | 'red' | 'skip', submodule)."""
    F = M.field
    _, rank, _, ker = rref_solve(theta)
    if M.dim - rank != nullity_needed or ker.is_zero():
        return "skip", None
    v = ker.basis[0]
    W = spin(M, v)
    if W.dim < M.dim:
        return "red", W
    _, _, _, kert = rref_solve(theta.transpose())
    u = kert.basis[0]
    Wd = _spin_transposed(M, u)
    if Wd.dim < M.dim:
        return "red", _annihilator(F, Wd)
    return "irr", None


def certify_irreducible(M: LModule):
    """Decide irreducibility of a module exactly where possible.

    Returns ``(verdict, counterexample, status)``: verdict True/False with a
    certified status, or None with a heuristic status when every implemented
    certificate is out of reach.  A False verdict always carries a proper
    nonzero submodule.
    """
    F = M.field
    d = M.dim
    if d == 0:
        return False, None, CERTIFIED
    if d == 1:
        return True, None, CERTIFIED
    if isinstance(F, PrimeField) and F.p**d <= VECTOR_ENUM_BUDGET:
        full = M.full_space()
        for v in _nonzero_vectors(F, d):
            W = spin(M, vec(F, v))
            if W != full:
                return False, W, CERTIFIED
        return True, None, CERTIFIED
    if isinstance(F, Rationals):
        # a proper socle is a reducibility witness; a full socle means the
        # module is semisimple, where the endomorphism ring decides
        soc, soc_status = socle_space(M)
        if soc_status.certified and soc.dim < d:
            return False, soc, CERTIFIED
        if soc_status.certified:
            endos = hom_space(M, M)
            if len(endos) == 1:
                return True, None, CERTIFIED  # semisimple with scalar endomorphisms only
            ident = Matrix.identity(F, d)
            for h in endos:
                hm = h.matrix
                # skip scalars: they never split anything
                if hm == ident.scale(hm.entries[0][0]):
                    continue
                for lam in roots_in_field(F, charpoly(hm)):
                    _, rank, _, ker = rref_solve(hm.sub(ident.scale(lam)))
                    if 0 < ker.dim < d:
                        return False, ker, CERTIFIED
    for g in _candidate_operators(M):
        cp = charpoly(g)
        irr = is_irreducible(F, cp)
        if irr:
            return True, None, CERTIFIED
        roots, cofactor = linear_factors(F, cp)
        for r in sorted(set(roots), key=str):
            theta = g.sub(Matrix.identity(F, d).scale(r))
            verdict, sub = _norton_attempt(M, theta, 1)
            if verdict == "irr":
                return True, None, CERTIFIED
            if verdict == "red":
                return False, sub, CERTIFIED
        cdeg = len(cofactor) - 1
        if 2 <= cdeg <= 4 and is_irreducible(F, cofactor):
            theta = poly_at_matrix(F, cofactor, g)
            verdict, sub = _norton_attempt(M, theta, cdeg)
            if verdict == "irr":
                return True, None, CERTIFIED
            if verdict == "red":
                return False, sub, CERTIFIED
    return None, None, heuristic("irreducibility certificates exhausted")


def enveloping_basis(M: LModule) -> list[Matrix]:
    """Basis of the unital associative algebra generated by the action."""
    F = M.field
    d = M.dim
    if d == 0:
        return []

    def flat(mat: Matrix):
        return tuple(x for row in mat.entries for x in row)

    basis_mats: list[Matrix] = []
    span = Subspace.zero(F, d * d)

    def push(mat: Matrix) -> bool:
        nonlocal span
        fv = flat(mat)
        if span.contains(fv):
            return False
        span = span.sum(Subspace.from_vectors(F, d * d, [fv]))
        basis_mats.append(mat)
        return True

    push(Matrix.identity(F, d))
    for rho in M.mats:
        push(rho)
    frontier = list(basis_mats)
    while frontier:
        new = []
        for A in frontier:
            for gen in M.mats:
                for prod in (A.matmul(gen), gen.matmul(A)):
                    if push(prod):
                        new.append(prod)
        frontier = new
    return basis_mats


def _trace_form_radical(F: Field, env: list[Matrix]) -> list[Matrix]:
    """Radical of the enveloping algebra via the trace form (char 0 exact)."""
    rows = []
    for A in env:
        rows.append(tuple(A.matmul(B).trace() for B in env))
    _, _, _, null = rref_solve(Matrix(F, rows))
    rad = []
    for coeffs in null.basis:
        mat = Matrix.zero(F, env[0].rows, env[0].rows)
        for c, A in zip(coeffs, env):
            if not F.is_zero(c):
                mat = mat.add(A.scale(c))
        rad.append(mat)
    return rad


def socle_space(M: LModule):
    """The sum of all minimal submodules, with a certification status."""
    F = M.field
    d = M.dim
    if d == 0:
        return Subspace.zero(F, 0), CERTIFIED
    if isinstance(F, PrimeField):
        if F.p**d <= VECTOR_ENUM_BUDGET:
            spins: dict = {}
            for pattern in _nonzero_vectors(F, d):
                W = spin(M, vec(F, pattern))
                spins[W.basis] = W
            mins = [
                W
                for W in spins.values()
                if not any(
                    V.dim < W.dim and W.contains_space(V) for V in spins.values()
                )
            ]
            soc = Subspace.zero(F, d)
            for W in mins:
                soc = soc.sum(W)
            return soc, CERTIFIED
        return M.full_space(), heuristic(
            f"field order {F.p}^{d} exceeds the vector enumeration budget"
        )
    env = enveloping_basis(M)
    rad = _trace_form_radical(F, env)
    soc = M.full_space()
    for r in rad:
        _, _, _, ker = rref_solve(r)
        soc = soc.intersect(ker)
    return soc, CERTIFIED


def complement_in_semisimple(M: LModule, V: Subspace, U: Subspace) -> Subspace:
    """A submodule complement of U inside the semisimple submodule V."""
    F = M.field
    RV = restrict_module(M, V)
    RU = restrict_module(M, U)
    u, v = U.dim, V.dim
    if u == 0:
        return V
    # Unknown projection X (u x v) with X|_U = id and X equivariant.
    nvar = u * v
    rows, rhs = [], []
    for rhoV, rhoU in zip(RV.mats, RU.mats):
        for i in range(u):
            for j in range(v):
                coeff = [F.zero()] * nvar
                for k in range(v):
                    coeff[i * v + k] = F.add(coeff[i * v + k], rhoV.entries[k][j])
                for k in range(u):
                    coeff[k * v + j] = F.sub(
                        coeff[k * v + j], rhoU.entries[i][k]
                    )
                rows.append(tuple(coeff))
                rhs.append(F.zero())
    for bidx, ub in enumerate(U.basis):
        cu = V.coords(ub)
        for i in range(u):
            coeff = [F.zero()] * nvar
            for k in range(v):
                coeff[i * v + k] = cu[k]
            rows.append(tuple(coeff))
            rhs.append(F.one() if i == bidx else F.zero())
    _, _, particular, _ = rref_solve(Matrix(F, rows), tuple(rhs))
    if particular is None:
        raise AlgebraError("no equivariant projection: subspace is not a direct summand")
    X = Matrix(F, [particular[i * v : (i + 1) * v] for i in range(u)])
    _, _, _, kerX = rref_solve(X)
    comp_vecs = []
    for coeffs in kerX.basis:
        w = zero_vec(F, M.dim)
        for c, bvec in zip(coeffs, V.basis):
            w = vec_add(F, w, vec_scale(F, c, bvec))
        comp_vecs.append(w)
    return Subspace.from_vectors(F, M.dim, comp_vecs)


def _minimal_inside(M: LModule, V: Subspace, avoid: Subspace):
    """A certified minimal submodule of V not contained in ``avoid``.

    V must be semisimple (a submodule of the socle); every reducibility
    counterexample splits off, so the descent terminates.
    """
    R = restrict_module(M, V)
    verdict, counterexample, status = certify_irreducible(R)
    if verdict is True:
        return V, status
    if verdict is None:
        return V, status
    if counterexample is None or counterexample.is_zero():
        raise AlgebraError("reducible verdict without a witness")
    # translate the witness back to module coordinates
    F = M.field
    sub_vecs = []
    for cv in counterexample.basis:
        w = zero_vec(F, M.dim)
        for c, bvec in zip(cv, V.basis):
            w = vec_add(F, w, vec_scale(F, c, bvec))
        sub_vecs.append(w)
    U = Subspace.from_vectors(F, M.dim, sub_vecs)
    Uc = complement_in_semisimple(M, V, U)
    if not avoid.contains_space(U):
        return _minimal_inside(M, U, avoid)
    return _minimal_inside(M, Uc, avoid)


def socle_decomposition(M: LModule):
    """(summands, socle, status): a direct-sum decomposition of the socle
    into certified minimal submodules, deterministic in the basis order."""
    F = M.field
    soc, status = socle_space(M)
    summands: list[Subspace] = []
    acc = Subspace.zero(F, M.dim)
    while acc.dim < soc.dim:
        seed = next(v for v in soc.basis if not acc.contains(v))
        W = spin(M, seed)
        piece, st = _minimal_inside(M, W, acc)
        status = worst(status, st)
        summands.append(piece)
        acc = acc.sum(piece)
    return summands, soc, status


@dataclass(frozen=True)
class SocleInfo:
    """Minimal ideals of L/I lifted to L, their sum, and the abelian part."""

    minimals: list
    soc: Subspace
    asoc: Subspace
    status: Status


def socle_and_minimal_ideals(L: LieAlgebra, I: Subspace) -> SocleInfo:
    qa = quotient_algebra(L, I)
    Q = qa.algebra
    M = adjoint_module(Q)
    summands, soc_q, status = socle_decomposition(M)
    minimals = []
    asoc_q = Subspace.zero(Q.field, Q.dim)
    for W in summands:
        if bracket_spaces(Q, W, W).is_zero():
            asoc_q = asoc_q.sum(W)
        minimals.append(qa.lift_space(W))
    soc = qa.lift_space(soc_q)
    asoc = qa.lift_space(asoc_q)  # the lift of the zero space is I itself
    return SocleInfo(minimals, soc, asoc, status)


def hom_space(M1: LModule, M2: LModule) -> list[ModuleMap]:
    """Basis of the space of equivariant maps M1 -> M2."""
    if M1.algebra != M2.algebra:
        raise AlgebraError("hom space requires a common base algebra")
    F = M1.field
    s, t = M1.dim, M2.dim
    if s == 0 or t == 0:
        return []
    nvar = t * s
    rows = []
    for r1, r2 in zip(M1.mats, M2.mats):
        for i in range(t):
            for j in range(s):
                coeff = [F.zero()] * nvar
                for k in range(s):
                    coeff[i * s + k] = F.add(coeff[i * s + k], r1.entries[k][j])
                for k in range(t):
                    coeff[k * s + j] = F.sub(coeff[k * s + j], r2.entries[i][k])
                rows.append(tuple(coeff))
    _, _, _, null = rref_solve(Matrix(F, rows))
    out = []
    for flatv in null.basis:
        mat = Matrix(F, [flatv[i * s : (i + 1) * s] for i in range(t)])
        out.append(ModuleMap(M1, M2, mat))
    return out


class _MPoly:
    """Tiny exact multivariate polynomial for symbolic determinants."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[dict] = None):
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, nvars: int, c: Fraction):
        return cls(nvars, {(0,) * nvars: Fraction(c)} if c else {})

    @classmethod
    def var(cls, nvars: int, i: int, coeff: Fraction):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(coeff)} if coeff else {})

    def add(self, other: "_MPoly") -> "_MPoly":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, Fraction(0)) + v
        return _MPoly(self.nvars, t)

    def mul(self, other: "_MPoly") -> "_MPoly":
        t: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                t[k] = t.get(k, Fraction(0)) + v1 * v2
        return _MPoly(self.nvars, t)

    def neg(self) -> "_MPoly":
        return _MPoly(self.nvars, {k: -v for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def eval(self, point) -> Fraction:
        out = Fraction(0)
        for k, v in self.terms.items():
            term = v
            for e, x in zip(k, point):
                term *= Fraction(x) ** e
            out += term
        return out


def _symbolic_det(polys: list[list[_MPoly]]) -> _MPoly:
    n = len(polys)
    nvars = polys[0][0].nvars if n else 0
    if n == 0:
        return _MPoly.const(nvars, Fraction(1))
    if n == 1:
        return polys[0][0]
    acc = _MPoly(nvars)
    for j in range(n):
        minor = [[polys[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = polys[0][j].mul(_symbolic_det(minor))
        acc = acc.add(term if j % 2 == 0 else term.neg())
    return acc


def module_isomorphism(M1: LModule, M2: LModule):
    """An invertible equivariant map when one exists.

    Returns ``(map_or_None, status)``; a None with certified status means no
    isomorphism exists, a heuristic status means the invertibility search was
    inconclusive.
    """
    if M1.algebra != M2.algebra:
        raise AlgebraError("isomorphism test requires a common base algebra")
    F = M1.field
    if M1.dim != M2.dim:
        return None, CERTIFIED
    if M1.dim == 0:
        return ModuleMap(M1, M2, Matrix(F, [])), CERTIFIED
    homs = hom_space(M1, M2)
    if not homs:
        return None, CERTIFIED
    for h in homs:
        if h.is_isomorphism():
            return h, CERTIFIED
    m = len(homs)
    d = M1.dim
    if isinstance(F, PrimeField):
        if F.p**m <= VECTOR_ENUM_BUDGET:
            for coeffs in itertools.product(range(F.p), repeat=m):
                mat = Matrix.zero(F, d, d)
                for c, h in zip(coeffs, homs):
                    if c:
                        mat = mat.add(h.matrix.scale(c))
                _, rank, _, _ = rref_solve(mat)
                if rank == d:
                    return ModuleMap(M1, M2, mat), CERTIFIED
            return None, CERTIFIED
        return None, heuristic("hom-space enumeration over GF(p) exceeds budget")
    if m <= 3:
        entries = [
            [
                _MPoly(
                    m,
                    {
                        tuple(1 if t == k else 0 for t in range(m)): Fraction(
                            homs[k].matrix.entries[i][j]
                        )
                        for k in range(m)
                        if homs[k].matrix.entries[i][j] != 0
                    },
                )
                for j in range(d)
            ]
            for i in range(d)
        ]
        det = _symbolic_det(entries)
        if det.is_zero():
            return None, CERTIFIED
        for point in itertools.product(range(d + 1), repeat=m):
            if det.eval(point) != 0:
                mat = Matrix.zero(F, d, d)
                for c, h in zip(point, homs):
                    if c:
                        mat = mat.add(h.matrix.scale(F.coerce(c)))
                return ModuleMap(M1, M2, mat), CERTIFIED
        raise AlgebraError("nonzero determinant with no witness on the grid")
    # wide hom spaces: deterministic grid sampling, certified only if the
    # grid is exhaustive for the determinant's degree
    grid = (d + 1) ** m
    if grid <= GRID_BUDGET:
        points = itertools.product(range(d + 1), repeat=m)
        exhaustive = True
    else:
        points = itertools.islice(
            itertools.product(range(d + 1), repeat=m), GRID_BUDGET
        )
        exhaustive = False
    for point in points:
        mat = Matrix.zero(F, d, d)
        for c, h in zip(point, homs):
            if c:
                mat = mat.add(h.matrix.scale(F.coerce(c)))
        _, rank, _, _ = rref_solve(mat)
        if rank == d:
            return ModuleMap(M1, M2, mat), CERTIFIED
    if exhaustive:
        return None, CERTIFIED
    return None, heuristic("determinant sampling budget exhausted")


@dataclass(frozen=True)
class SplittingCertificate:
    complement: Subspace
    cochain: Matrix


def split_abelian_extension(
    L: LieAlgebra, A: Subspace, B: Subspace
) -> Optional[SplittingCertificate]:
    """Find a subalgebra K with K + A = L and K cap A = B, for abelian A/B.

    Works in L/B: a linear section of (L/B)/(A/B) is corrected by a cochain
    solving the coboundary equation against the section's 2-cocycle.  The
    system is linear, so an unsolvable system certifies non-splitting.
    """
    if not is_ideal(L, A) or not is_ideal(L, B):
        raise AlgebraError("splitting test requires ideals")
    if not A.contains_space(B):
        raise AlgebraError("denominator must sit inside the numerator")
    if not B.contains_space(bracket_spaces(L, A, A)):
        raise AlgebraError("the section is not abelian")
    F = L.field
    qa = quotient_algebra(L, B)
    Q = qa.algebra
    Abar = qa.project_space(A)
    if Abar.is_zero():
        return SplittingCertificate(L.full_space(), Matrix(F, []))
    qm = QuotientMap(Q.full_space(), Abar)  # coordinates of (L/B)/(A/B)
    q = qm.dim
    a = Abar.dim
    if q == 0:
        # complement of the full section is the denominator itself
        return SplittingCertificate(B, Matrix(F, []))
    section = [qm.lift(unit_vec(F, q, i)) for i in range(q)]

    # action of Q on Abar in Abar-coordinates
    def act(x: Vector, acoords: Vector) -> Vector:
        w = zero_vec(F, Q.dim)
        for c, bvec in zip(acoords, Abar.basis):
            w = vec_add(F, w, vec_scale(F, c, bvec))
        return Abar.coords(Q.bracket(x, w))

    nvar = a * q  # cochain phi: q-coords -> Abar-coords
    rows, rhs = [], []
    for i in range(q):
        for j in range(i + 1, q):
            br = Q.bracket(section[i], section[j])
            br_q = qm.project(br)
            s_br = qm.lift(br_q)
            g = Abar.coords(
                tuple(F.sub(x, y) for x, y in zip(br, s_br))
            )  # the 2-cocycle value
            # closure of {s + phi} forces
            #   x_i . phi(x_j) - x_j . phi(x_i) - phi([x_i, x_j]) = -g(i, j)
            for t in range(a):
                coeff = [F.zero()] * nvar
                for k in range(a):
                    ei = act(section[i], unit_vec(F, a, k))
                    coeff[k * q + j] = F.add(coeff[k * q + j], ei[t])
                    ej = act(section[j], unit_vec(F, a, k))
                    coeff[k * q + i] = F.sub(coeff[k * q + i], ej[t])
                for k in range(q):
                    coeff[t * q + k] = F.sub(coeff[t * q + k], br_q[k])
                rows.append(tuple(coeff))
                rhs.append(F.neg(g[t]))
    if rows:
        _, _, particular, _ = rref_solve(Matrix(F, rows), tuple(rhs))
        if particular is None:
            return None
        phi = Matrix(F, [particular[t * q : (t + 1) * q] for t in range(a)])
    else:
        phi = Matrix.zero(F, a, q)
    comp_vecs = []
    for i in range(q):
        corr = phi.apply(unit_vec(F, q, i))
        w = section[i]
        for c, bvec in zip(corr, Abar.basis):
            w = vec_add(F, w, vec_scale(F, c, bvec))
        comp_vecs.append(qa.lift(w))
    K = Subspace.from_vectors(F, L.dim, comp_vecs + list(B.basis))
    # hard postcondition
    from .algebra import is_subalgebra

    if not is_subalgebra(L, K):
        raise AlgebraError("splitting produced a non-subalgebra")
    if K.intersect(A) != B or K.sum(A) != L.full_space():
        raise AlgebraError("splitting produced a wrong complement")
    return SplittingCertificate(K, phi)
