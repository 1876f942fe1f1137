import pytest

from liestruct import builtin
from liestruct.algebra import AlgebraError, is_subalgebra
from liestruct.chief import chief_series, classify_factor, connected
from liestruct.crowns import (
    AVOIDS,
    COVERS,
    all_crowns,
    complement_conjugator,
    cover_avoid_profile,
    crown_complement,
    crown_of_factor,
    precrowns_of_factor,
    prefrattini,
)
from liestruct.fields import GF, QQ
from liestruct.linalg import Subspace, unit_vec, vec


def crown_table(L, series=None):
    return {(c.C.basis, c.R.basis, c.rank) for c in all_crowns(L, series)}


class TestPrecrowns:
    def test_heis_family_over_q(self):
        H = builtin("heis")
        S = chief_series(H)
        fam = precrowns_of_factor(S.factors[1])
        assert len(fam.precrowns) == 1 and not fam.exhaustive
        assert fam.precrowns[0].numerator.is_full()
        assert fam.denominator_intersection == H.span([(0, 0, 1)])

    def test_heis_family_over_gf3_is_exhaustive(self):
        H = builtin("heis", GF(3))
        S = chief_series(H)
        fam = precrowns_of_factor(S.factors[1])
        assert fam.exhaustive and len(fam.precrowns) == 3
        inter = fam.precrowns[0].denominator
        for p in fam.precrowns[1:]:
            inter = inter.intersect(p.denominator)
        assert inter == fam.denominator_intersection == H.span([(0, 0, 1)])

    def test_ex22_line_has_unique_denominator(self):
        E = builtin("ex22")
        f = classify_factor(E, E.span([(1, 0, 0, 0)]), E.zero_space())
        fam = precrowns_of_factor(f)
        bc = E.span([(0, 1, 0, 0), (0, 0, 1, 0)])
        assert fam.denominator_intersection == bc
        assert fam.precrowns[0].denominator == bc

    def test_sl2_plus_sl2_unique_nonabelian_precrown(self):
        D = builtin("sl2_plus_sl2")
        S = chief_series(D)
        fam = precrowns_of_factor(S.factors[0])
        S2 = D.span([unit_vec(QQ, 6, i) for i in range(3, 6)])
        assert fam.exhaustive and len(fam.precrowns) == 1
        assert fam.precrowns[0].numerator.is_full()
        assert fam.precrowns[0].denominator == S2

    def test_frattini_factor_rejected(self):
        H = builtin("heis")
        with pytest.raises(AlgebraError):
            precrowns_of_factor(chief_series(H).factors[0])


class TestCrownValues:
    def test_heis(self):
        H = builtin("heis")
        S = chief_series(H)
        crown = crown_of_factor(S.factors[1], S)
        assert crown.C.is_full()
        assert crown.R == H.span([(0, 0, 1)])
        assert crown.rank == 2

    def test_ex22_three_crowns(self):
        E = builtin("ex22")
        abc = E.span([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
        expected = {
            (abc.basis, E.span([(0, 1, 0, 0), (0, 0, 1, 0)]).basis, 1),
            (abc.basis, E.span([(1, 0, 0, 0)]).basis, 1),
            (E.full_space().basis, abc.basis, 1),
        }
        assert crown_table(E) == expected

    def test_r2_two_crowns(self):
        R = builtin("r2")
        expected = {
            (R.span([(0, 1)]).basis, R.zero_space().basis, 1),
            (R.full_space().basis, R.span([(0, 1)]).basis, 1),
        }
        assert crown_table(R) == expected

    def test_sl2_plus_sl2(self):
        D = builtin("sl2_plus_sl2")
        assert crown_table(D) == {(D.full_space().basis, D.zero_space().basis, 2)}

    def test_crown_independent_of_series(self):
        from liestruct.chief import chief_series_variants

        H = builtin("h3_plus_r2")
        tables = {frozenset(crown_table(H, S)) for S in chief_series_variants(H, limit=4)}
        assert len(tables) == 1

    def test_same_crown_iff_connected(self, corpus_q):
        for L in corpus_q.values():
            S = chief_series(L)
            supplemented = [f for f in S.factors if f.supplemented]
            crowns = {id(f): crown_of_factor(f, S) for f in supplemented}
            for f1 in supplemented:
                for f2 in supplemented:
                    same = crowns[id(f1)].key == crowns[id(f2)].key
                    assert same == connected(f1, f2)[0]


class TestCrownComplements:
    def test_r2_line_crown(self):
        R = builtin("r2")
        S = chief_series(R)
        crown = crown_of_factor(S.factors[0], S)
        K = crown_complement(R, crown)
        assert K.dim == 1 and is_subalgebra(R, K)
        assert K.intersect(crown.C).is_zero()

    def test_full_numerator_forces_denominator(self):
        R = builtin("r2")
        S = chief_series(R)
        crown = crown_of_factor(S.factors[1], S)  # C = L
        assert crown_complement(R, crown) == crown.R

    def test_heis(self):
        H = builtin("heis")
        S = chief_series(H)
        crown = crown_of_factor(S.factors[1], S)
        assert crown_complement(H, crown) == H.span([(0, 0, 1)])

    def test_nonsolvable_rejected(self):
        D = builtin("sl2_plus_sl2")
        S = chief_series(D)
        crown = crown_of_factor(S.factors[0], S)
        with pytest.raises(AlgebraError):
            crown_complement(D, crown)


class TestConjugator:
    def test_r2_known_element(self):
        R = builtin("r2")
        S = chief_series(R)
        crown = crown_of_factor(S.factors[0], S)
        K1 = R.span([(1, 0)])
        K2 = R.span([(1, -1)])
        a = complement_conjugator(R, crown, K1, K2)
        assert a == vec(QQ, (0, 1))  # a = y

    def test_identical_complements(self):
        R = builtin("r2")
        S = chief_series(R)
        crown = crown_of_factor(S.factors[0], S)
        K = crown_complement(R, crown)
        assert all(x == 0 for x in complement_conjugator(R, crown, K, K))

    def test_heis_unique_complement(self):
        H = builtin("heis")
        S = chief_series(H)
        crown = crown_of_factor(S.factors[1], S)
        K = crown_complement(H, crown)
        assert all(x == 0 for x in complement_conjugator(H, crown, K, K))

    def test_all_pairs_over_gf3(self):
        from liestruct.oracle import complements_bf

        for name in ("r2", "heis", "ex22"):
            L = builtin(name, GF(3))
            S = chief_series(L)
            for crown in all_crowns(L, S):
                comps = complements_bf(L, crown.C, crown.R)
                for K1 in comps:
                    for K2 in comps:
                        a = complement_conjugator(L, crown, K1, K2)
                        ada = L.ad(a)
                        assert ada.matmul(ada).is_zero()
                        image = Subspace.from_vectors(
                            L.field, L.dim,
                            [tuple(L.field.add(x, y) for x, y in zip(k, ada.apply(k)))
                             for k in K1.basis],
                        )
                        assert image == K2

    def test_non_complement_rejected(self):
        R = builtin("r2")
        S = chief_series(R)
        crown = crown_of_factor(S.factors[0], S)
        with pytest.raises(AlgebraError):
            complement_conjugator(R, crown, R.span([(0, 1)]), R.span([(1, 0)]))


class TestPrefrattini:
    def test_r2_trivial(self):
        assert prefrattini(builtin("r2")).is_zero()

    def test_heis_is_the_frattini_ideal(self):
        H = builtin("heis")
        assert prefrattini(H) == H.span([(0, 0, 1)])

    def test_ab1(self):
        assert prefrattini(builtin("ab(1)")).is_zero()

    def test_h3_plus_r2(self):
        HR = builtin("h3_plus_r2")
        assert prefrattini(HR) == HR.span([(0, 0, 1, 0, 0)])

    def test_contains_frattini_ideal_over_gf(self):
        from liestruct.oracle import frattini_ideal_bf

        for name, p in (("r2", 3), ("heis", 3), ("ex22", 3), ("h3_plus_r2", 2)):
            L = builtin(name, GF(p))
            P = prefrattini(L)
            assert P.contains_space(frattini_ideal_bf(L))

    def test_nonsolvable_rejected(self):
        with pytest.raises(AlgebraError):
            prefrattini(builtin("sl2"))


class TestCoverAvoid:
    def test_r2_profiles(self):
        R = builtin("r2")
        S = chief_series(R)
        crowns = {c.R.dim: c for c in all_crowns(R, S)}
        K0 = crown_complement(R, crowns[0])  # crown <y>/0
        assert cover_avoid_profile(R, K0, crowns[0], S) == [AVOIDS, COVERS]
        K1 = crown_complement(R, crowns[1])  # crown L/<y>
        assert cover_avoid_profile(R, K1, crowns[1], S) == [COVERS, AVOIDS]

    def test_heis_profile(self):
        H = builtin("heis")
        S = chief_series(H)
        crown = all_crowns(H, S)[0]
        K = crown_complement(H, crown)
        # the Frattini factor is outside the class and gets covered
        assert cover_avoid_profile(H, K, crown, S) == [COVERS, AVOIDS, AVOIDS]

    def test_every_solvable_profile_matches(self, corpus_q):
        from liestruct.algebra import is_solvable

        for L in corpus_q.values():
            if not is_solvable(L) or L.dim == 0:
                continue
            S = chief_series(L)
            for crown in all_crowns(L, S):
                K = crown_complement(L, crown)
                tags = cover_avoid_profile(L, K, crown, S)
                assert len(tags) == len(S.factors)
