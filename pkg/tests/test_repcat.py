import itertools

import pytest

from ncthick import repcat as rc
from ncthick.errors import (
    DimensionMismatchError,
    NotRealRootError,
    UnsupportedLabelError,
)


@pytest.fixture(scope="module")
def a2():
    return rc.dynkin_quiver("A2")


@pytest.fixture(scope="module")
def a3():
    return rc.dynkin_quiver("A3")


@pytest.fixture(scope="module")
def d4():
    return rc.dynkin_quiver("D4")


class TestQuiver:
    def test_default_orientation(self, a3):
        assert a3.arrows == ((1, 2), (2, 3))

    def test_custom_orientation(self):
        q = rc.dynkin_quiver("A3", ((2, 1), (2, 3)))
        assert q.arrows == ((2, 1), (2, 3))

    def test_rejects_non_simply_laced(self):
        with pytest.raises(UnsupportedLabelError):
            rc.dynkin_quiver("B2")

    def test_rejects_wrong_tree(self):
        with pytest.raises(DimensionMismatchError):
            rc.dynkin_quiver("A3", ((1, 2), (1, 3)))


class TestHom:
    def test_p1_to_s1(self, a2):
        p1 = rc.indecomposable_for_root(a2, (1, 1))
        s1 = rc.simple_rep(a2, 1)
        assert rc.hom(a2, p1, s1).dim == 1
        assert rc.hom(a2, s1, p1).dim == 0

    def test_identity_is_endomorphism(self, a3):
        for m in rc.indecomposables(a3):
            assert rc.hom(a3, m, m).dim >= 1

    def test_intertwining_law(self, a3):
        inds = rc.indecomposables(a3)
        for m in inds:
            for n in inds:
                for f in rc.hom(a3, m, n).basis:
                    for idx, (s, t) in enumerate(a3.arrows):
                        si, ti = s - 1, t - 1
                        lhs = rc._mm(f[ti], m.maps[idx], n.dim[ti], m.dim[ti], m.dim[si])
                        rhs = rc._mm(n.maps[idx], f[si], n.dim[ti], n.dim[si], m.dim[si])
                        assert lhs == rhs


class TestExt:
    def test_a2_simples(self, a2):
        s1, s2 = rc.simple_rep(a2, 1), rc.simple_rep(a2, 2)
        assert rc.ext1_dim(a2, s1, s2) == 1
        assert rc.ext1_dim(a2, s2, s1) == 0

    def test_no_self_extensions(self, a3):
        for m in rc.indecomposables(a3):
            assert rc.ext1_dim(a3, m, m) == 0

    def test_projectives_have_no_ext(self, a3):
        # projectives are the reps whose dim vector is a reachability set
        p1 = rc.indecomposable_for_root(a3, (1, 1, 1))
        p2 = rc.indecomposable_for_root(a3, (0, 1, 1))
        p3 = rc.simple_rep(a3, 3)
        for p in (p1, p2, p3):
            for n in rc.indecomposables(a3):
                assert rc.ext1_dim(a3, p, n) == 0

    def test_euler_consistency(self, a3):
        for m in rc.indecomposables(a3):
            for n in rc.indecomposables(a3):
                assert rc.hom(a3, m, n).dim - rc.ext1_dim(a3, m, n) == rc.euler_form(
                    a3, m.dim, n.dim
                )


class TestIndecomposables:
    def test_a2_interval(self, a2):
        m = rc.indecomposable_for_root(a2, (1, 1))
        assert m.maps[0] == ((1,),)
        assert rc.hom(a2, m, m).dim == 1

    def test_simples(self, a3):
        s2 = rc.indecomposable_for_root(a3, (0, 1, 0))
        assert s2 == rc.simple_rep(a3, 2)

    def test_a3_full_interval(self, a3):
        m = rc.indecomposable_for_root(a3, (1, 1, 1))
        assert all(mat == ((1,),) for mat in m.maps)

    @pytest.mark.parametrize("label,count", [("A2", 3), ("A3", 6), ("D4", 12)])
    def test_gabriel_counts(self, label, count):
        q = rc.dynkin_quiver(label)
        inds = rc.indecomposables(q)
        assert len(inds) == count
        assert len({m.dim for m in inds}) == count
        for m in inds:
            assert rc.hom(q, m, m).dim == 1

    def test_d4_branch_vertex(self, d4):
        m = rc.indecomposable_for_root(d4, (1, 2, 1, 1))
        assert rc.hom(d4, m, m).dim == 1

    def test_rejects_non_root(self, a2):
        with pytest.raises(NotRealRootError):
            rc.indecomposable_for_root(a2, (2, 1))


class TestExceptionalSequences:
    def test_a2_order_matters(self, a2):
        s1, s2 = rc.simple_rep(a2, 1), rc.simple_rep(a2, 2)
        assert rc.is_exceptional_sequence(a2, [s1, s2])
        assert not rc.is_exceptional_sequence(a2, [s2, s1])

    def test_empty_sequence(self, a2):
        assert rc.is_exceptional_sequence(a2, [])

    def test_a3_complete_count(self, a3):
        inds = rc.indecomposables(a3)
        count = sum(
            1
            for trip in itertools.product(inds, repeat=3)
            if rc.is_exceptional_sequence(a3, trip)
        )
        assert count == 16

    def test_a2_complete_count(self, a2):
        inds = rc.indecomposables(a2)
        count = sum(
            1
            for pair in itertools.product(inds, repeat=2)
            if rc.is_exceptional_sequence(a2, pair)
        )
        assert count == 3


class TestRadIrr:
    def test_a2_values(self, a2):
        p1 = rc.indecomposable_for_root(a2, (1, 1))
        s1, s2 = rc.simple_rep(a2, 1), rc.simple_rep(a2, 2)
        assert rc.irr_dim(a2, p1, s1) == 1
        assert rc.irr_dim(a2, s2, s1) == 0
        assert rc.irr_dim(a2, s2, p1) == 1

    def test_no_irreducible_endomorphisms(self, a3):
        for m in rc.indecomposables(a3):
            assert rc.irr_dim(a3, m, m) == 0

    def test_rad_table_shape(self, a2):
        table = rc.rad_dims(a2)
        assert len(table) == 9
        assert table[((1, 1), (1, 0))] == (1, 0)  # P1 -> S1 irreducible
        assert table[((0, 1), (1, 0))] == (0, 0)  # Hom(S2, S1) = 0


class TestARQuiver:
    def test_a1_trivial(self):
        ar = rc.ar_quiver_module_category(rc.dynkin_quiver("A1"))
        assert len(ar.vertices) == 1
        assert ar.arrows == ()
        assert ar.tau == {}

    def test_a2_shape(self, a2):
        ar = rc.ar_quiver_module_category(a2)
        assert set(ar.vertices) == {(1, 0), (0, 1), (1, 1)}
        assert set((s, t) for s, t, _ in ar.arrows) == {((0, 1), (1, 1)), ((1, 1), (1, 0))}
        assert ar.tau == {(1, 0): (0, 1)}

    def test_a3_counts(self, a3):
        ar = rc.ar_quiver_module_category(a3)
        assert len(ar.vertices) == 6
        assert len(ar.arrows) == 6

    def test_d4_counts(self, d4):
        ar = rc.ar_quiver_module_category(d4)
        assert len(ar.vertices) == 12
        assert len(ar.arrows) == 15

    @pytest.mark.parametrize("label", ["A3", "D4"])
    def test_valuation_symmetry(self, label):
        ar = rc.ar_quiver_module_category(rc.dynkin_quiver(label))
        arrows = {(s, t): val for s, t, val in ar.arrows}
        for (x, y), (d, _) in arrows.items():
            if y in ar.tau:
                ty = ar.tau[y]
                assert arrows[(ty, x)][1] == d

    @pytest.mark.parametrize("label", ["A2", "A3", "D4"])
    def test_mesh_shape(self, label):
        ar = rc.ar_quiver_module_category(rc.dynkin_quiver(label))
        assert ar.check_mesh_shape() == []


class TestJson:
    def test_table(self, a2):
        data = rc.hom_table_json(a2)
        assert data["hom"]["1,1"]["1,0"] == 1
        assert data["ext1"]["1,0"]["0,1"] == 1
