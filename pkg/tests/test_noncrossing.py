import json

import pytest

from ncthick import cartan as cw
from ncthick import noncrossing as nc
from ncthick.errors import NotInPosetError, UnsupportedLabelError


def _lattice(label):
    return nc.enumerate_nc(cw.build_cartan(label))


def _whole_group_count(label):
    """Oracle: filter the full group through BFS lengths."""
    cd = cw.build_cartan(label)
    c = cw.coxeter_element(cd)
    n = cd.rank
    return sum(
        1
        for w in cw.weyl_group(cd)
        if cw.absolute_length_bfs(cd, w) + cw.absolute_length_bfs(cd, w.inverse() * c) == n
    )


class TestEnumerate:
    @pytest.mark.parametrize(
        "label,count", [("A1", 2), ("A2", 5), ("A3", 14), ("B2", 6), ("G2", 8)]
    )
    def test_counts(self, label, count):
        assert len(_lattice(label)) == count

    @pytest.mark.parametrize("label", ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"])
    def test_against_whole_group_filter(self, label):
        assert len(_lattice(label)) == _whole_group_count(label)

    def test_rank_bounds(self):
        lat = _lattice("A3")
        assert lat.ranks[lat.identity()] == 0
        assert lat.ranks[lat.coxeter] == 3

    def test_hasse_edges_are_covers(self):
        lat = _lattice("A3")
        for i, j in lat.hasse:
            u, v = lat.elements[i], lat.elements[j]
            assert lat.ranks[v] == lat.ranks[u] + 1
            assert lat.leq(u, v)

    def test_kronecker_routed_elsewhere(self):
        with pytest.raises(UnsupportedLabelError):
            nc.enumerate_nc(cw.build_cartan("KRONECKER"))

    def test_non_coxeter_rejected(self):
        cd = cw.build_cartan("B2")
        c = cw.coxeter_element(cd)
        with pytest.raises(NotInPosetError):
            nc.enumerate_nc(cd, c * c)

    def test_reflection_order_irrelevant(self):
        cd = cw.build_cartan("A3")
        base = nc.enumerate_nc(cd)
        permuted = nc.enumerate_nc(cd, reflection_order=tuple(reversed(cw.reflections(cd))))
        assert set(base.elements) == set(permuted.elements)


class TestKreweras:
    def test_identity_maps_to_coxeter(self):
        lat = _lattice("A3")
        assert nc.kreweras(lat, lat.identity()) == lat.coxeter

    def test_a2_example(self):
        lat = _lattice("A2")
        cd = lat.cartan
        assert nc.kreweras(lat, cw.simple_reflection(cd, 1)) == cw.simple_reflection(cd, 2)
        assert nc.co_kreweras(lat, cw.simple_reflection(cd, 2)) == cw.simple_reflection(cd, 1)

    def test_double_kreweras_is_conjugation(self):
        lat = _lattice("A3")
        c = lat.coxeter
        ci = c.inverse()
        for w in lat.elements:
            assert nc.kreweras(lat, nc.kreweras(lat, w)) == ci * w * c

    def test_mutually_inverse(self):
        lat = _lattice("A3")
        for w in lat.elements:
            assert nc.co_kreweras(lat, nc.kreweras(lat, w)) == w
            assert nc.kreweras(lat, nc.co_kreweras(lat, w)) == w

    @pytest.mark.parametrize("label", ["A2", "A3", "B2", "G2"])
    def test_rank_complement_and_order_reversal(self, label):
        lat = _lattice(label)
        n = lat.cartan.rank
        for u in lat.elements:
            assert lat.ranks[nc.kreweras(lat, u)] == n - lat.ranks[u]
            for v in lat.elements:
                if lat.leq(u, v):
                    assert lat.leq(nc.kreweras(lat, v), nc.kreweras(lat, u))

    def test_outside_element_rejected(self):
        lat = _lattice("A2")
        c = lat.coxeter
        with pytest.raises(NotInPosetError):
            nc.kreweras(lat, c * c)


class TestMeetJoin:
    def test_idempotence_and_units(self):
        lat = _lattice("A3")
        for w in lat.elements:
            assert nc.meet(lat, w, w) == w
            assert nc.join(lat, w, lat.identity()) == w

    def test_a2_examples(self):
        lat = _lattice("A2")
        cd = lat.cartan
        s1 = cw.simple_reflection(cd, 1)
        s2 = cw.simple_reflection(cd, 2)
        s3 = cw.reflection_element(cd, (1, 1))
        assert nc.join(lat, s1, s2) == lat.coxeter
        assert nc.meet(lat, s1, s3) == lat.identity()

    @pytest.mark.parametrize("label", ["A2", "A3", "B2", "G2"])
    def test_complementation(self, label):
        lat = _lattice(label)
        for w in lat.elements:
            comp = nc.co_kreweras(lat, w)
            assert nc.meet(lat, w, comp) == lat.identity()
            assert nc.join(lat, w, comp) == lat.coxeter

    def test_every_interval_complemented(self):
        lat = _lattice("A3")
        for u in lat.elements:
            for v in lat.elements:
                if not lat.leq(u, v):
                    continue
                interval = [x for x in lat.elements if lat.leq(u, x) and lat.leq(x, v)]
                for x in interval:
                    assert any(
                        nc.meet(lat, x, y) == u and nc.join(lat, x, y) == v
                        for y in interval
                    )


class TestKronecker:
    def test_bound0(self):
        lat = nc.nc_kronecker(0)
        assert len(lat) == 4

    def test_bound1(self):
        assert len(nc.nc_kronecker(1)) == 6

    def test_reflections_below_coxeter(self):
        lat = nc.nc_kronecker(2)
        for r in lat.reflection_members():
            assert cw.abs_leq(lat.cartan, lat.identity(), r)
            assert (r.inverse() * lat.coxeter).det() == -1

    @pytest.mark.parametrize("bound", [0, 1, 2, 3])
    def test_height_two_incomparable_atoms(self, bound):
        lat = nc.nc_kronecker(bound)
        assert max(lat.ranks.values()) == 2
        refs = lat.reflection_members()
        for a in refs:
            for b in refs:
                if a != b:
                    assert not lat.leq(a, b)

    def test_meet_join_unsupported(self):
        lat = nc.nc_kronecker(0)
        r = lat.reflection_members()[0]
        with pytest.raises(UnsupportedLabelError):
            nc.meet(lat, r, r)


class TestDotAndJson:
    def test_a1_dot(self):
        dot = nc.hasse_dot(_lattice("A1"))
        assert dot.count("[label=") == 2
        assert dot.count("->") == 1

    def test_a2_dot_counts(self):
        dot = nc.hasse_dot(_lattice("A2"))
        assert dot.count("[label=") == 5
        assert dot.count("->") == 6

    def test_kronecker_diamond(self):
        dot = nc.hasse_dot(nc.nc_kronecker(0))
        assert dot.count("[label=") == 4
        assert dot.count("->") == 4

    def test_dot_deterministic(self):
        assert nc.hasse_dot(_lattice("A3")) == nc.hasse_dot(_lattice("A3"))

    def test_json_shape(self):
        lat = _lattice("A2")
        data = nc.to_json(lat)
        assert data["type"] == "A2"
        assert len(data["elements"]) == 5
        assert len(data["hasse"]) == 6
        assert all(set(e) == {"id", "rank", "matrix"} for e in data["elements"])
        json.dumps(data)  # serializable

    def test_canonical_words_shortest(self):
        lat = _lattice("A3")
        for w in lat.elements:
            assert len(lat.canonical_word(w)) == lat.ranks[w]
