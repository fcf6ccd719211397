import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncthick import braid
from ncthick import cartan as cw
from ncthick.errors import NotInPosetError, NotReflectionError, ResourceLimitError


def _standard(label):
    cd = cw.build_cartan(label)
    c = cw.coxeter_element(cd)
    parts = tuple(cw.simple_reflection(cd, i) for i in range(1, cd.rank + 1))
    return braid.Factorization(cd, parts, c)


class TestFactorization:
    def test_validates_product(self):
        cd = cw.build_cartan("A2")
        s1 = cw.simple_reflection(cd, 1)
        with pytest.raises(NotInPosetError):
            braid.Factorization(cd, (s1, s1), cw.coxeter_element(cd))

    def test_validates_reflections(self):
        cd = cw.build_cartan("A2")
        c = cw.coxeter_element(cd)
        with pytest.raises(NotReflectionError):
            braid.Factorization(cd, (c, c), c * c)

    def test_roots(self):
        f = _standard("A2")
        assert f.roots() == ((1, 0), (0, 1))


class TestBraidAct:
    def test_a2_forward(self):
        cd = cw.build_cartan("A2")
        f = _standard("A2")
        g = braid.braid_act(f, 1)
        s1 = cw.simple_reflection(cd, 1)
        s2 = cw.simple_reflection(cd, 2)
        assert g.parts == (s1 * s2 * s1, s1)

    def test_product_invariant(self):
        f = _standard("A3")
        for i in (1, 2):
            assert braid.braid_act(f, i).target == f.target

    def test_round_trip_all_a3(self):
        cd = cw.build_cartan("A3")
        for f in braid.enumerate_factorizations(cd):
            for i in (1, 2):
                assert braid.braid_act(braid.braid_act(f, i), i, True).key() == f.key()
                assert braid.braid_act(braid.braid_act(f, i, True), i).key() == f.key()

    def test_index_out_of_range(self):
        f = _standard("A2")
        with pytest.raises(IndexError):
            braid.braid_act(f, 2)
        with pytest.raises(IndexError):
            braid.braid_act(f, 0)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.tuples(st.integers(1, 2), st.booleans()), min_size=1, max_size=12))
    def test_random_words_undo(self, word):
        f = _standard("A3")
        g = f
        for i, inv in word:
            g = braid.braid_act(g, i, inv)
        for i, inv in reversed(word):
            g = braid.braid_act(g, i, not inv)
        assert g.key() == f.key()


class TestEnumerate:
    @pytest.mark.parametrize("label,count", [("A1", 1), ("A2", 3), ("A3", 16), ("B2", 4), ("G2", 6)])
    def test_counts(self, label, count):
        assert len(braid.enumerate_factorizations(cw.build_cartan(label))) == count

    def test_rank_cap(self):
        with pytest.raises(ResourceLimitError):
            braid.enumerate_factorizations(cw.build_cartan("A5"))

    def test_prefix_lengths(self):
        cd = cw.build_cartan("A3")
        for f in braid.enumerate_factorizations(cd):
            prefix = cw.identity_element(cd)
            for r, x in enumerate(f.parts, start=1):
                prefix = prefix * x
                assert cw.absolute_length(cd, prefix) == r
                assert cw.abs_leq(cd, prefix, f.target)


class TestHurwitzOrbit:
    @pytest.mark.parametrize("label", ["A2", "A3", "B2", "G2"])
    def test_transitive(self, label):
        cd = cw.build_cartan(label)
        orbit = braid.hurwitz_orbit(_standard(label))
        facts = braid.enumerate_factorizations(cd)
        assert {f.key() for f in orbit} == {f.key() for f in facts}

    def test_a1_orbit_is_singleton(self):
        assert len(braid.hurwitz_orbit(_standard("A1"))) == 1

    def test_braid_relation(self):
        cd = cw.build_cartan("A3")
        for f in braid.enumerate_factorizations(cd):
            lhs = braid.braid_act(braid.braid_act(braid.braid_act(f, 1), 2), 1)
            rhs = braid.braid_act(braid.braid_act(braid.braid_act(f, 2), 1), 2)
            assert lhs.key() == rhs.key()


class TestJson:
    def test_shape(self):
        cd = cw.build_cartan("A2")
        data = braid.to_json(braid.enumerate_factorizations(cd))
        assert data["type"] == "A2"
        assert len(data["factorizations"]) == 3
        assert all(len(f) == 2 for f in data["factorizations"])
