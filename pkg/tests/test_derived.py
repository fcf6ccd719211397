import pytest

from ncthick import derived as dv
from ncthick import repcat as rc
from ncthick.errors import WindowError


@pytest.fixture(scope="module")
def a2_window():
    return dv.build_zdelta("A2", (0, 8))


@pytest.fixture(scope="module")
def a3_window():
    return dv.build_zdelta("A3", (-2, 14))


class TestBuildZdelta:
    def test_a1_no_arrows(self):
        t = dv.build_zdelta("A1", (0, 3))
        assert len(t.vertices) == 4
        assert t.arrows == ()

    def test_a2_small_window(self):
        t = dv.build_zdelta("A2", (0, 1))
        assert len(t.vertices) == 4
        assert len(t.arrows) == 3

    def test_tau_drops_level(self):
        t = dv.build_zdelta("A3", (0, 4))
        for (n, x), (m, y) in t.tau.items():
            assert (m, y) == (n - 1, x)
        assert all((n, x) in t.tau for (n, x) in t.vertices if n > 0)

    def test_valuations_trivial(self):
        t = dv.build_zdelta("D4", (0, 2))
        assert all(val == (1, 1) for _, _, val in t.arrows)

    def test_empty_window_rejected(self):
        with pytest.raises(WindowError):
            dv.build_zdelta("A2", (3, 1))


class TestKnit:
    def test_seed_value(self, a2_window):
        for v in [(0, 1), (1, 2), (2, 1)]:
            assert dv.knit_hammock(a2_window, v).value(v) == 1

    def test_a2_named_values(self, a2_window):
        q = rc.dynkin_quiver("A2")
        emb = dv.module_slice(q)
        h_s1 = dv.knit_hammock(a2_window, emb[(1, 0)])
        sigma_s2 = dv.suspension(a2_window, emb[(0, 1)])
        assert h_s1.value(sigma_s2) == 1  # Ext^1(S1, S2)
        h_p1 = dv.knit_hammock(a2_window, emb[(1, 1)])
        assert h_p1.value(sigma_s2) == 0  # no extensions from a projective

    def test_values_nonnegative_finite(self, a3_window):
        h = dv.knit_hammock(a3_window, (0, 1))
        assert all(v > 0 for v in h.values.values())
        assert len(h.values) < 40

    def test_auto_extend_disabled(self):
        t = dv.build_zdelta("A3", (0, 1))
        with pytest.raises(WindowError):
            dv.knit_hammock(t, (0, 1), auto_extend=False)

    def test_auto_extend_matches_large_window(self):
        small = dv.build_zdelta("A3", (0, 1))
        large = dv.build_zdelta("A3", (0, 12))
        hs = dv.knit_hammock(small, (0, 1))
        hl = dv.knit_hammock(large, (0, 1))
        assert hs.values == hl.values
        assert hs.sigma_of_source == hl.sigma_of_source


class TestSuspension:
    def test_a1_sigma_is_tau_inverse(self):
        # the one-vertex tree gives a semisimple category: the only
        # morphisms are endomorphisms, so the shift must step one level up
        t = dv.build_zdelta("A1", (0, 4))
        for n in range(0, 3):
            assert dv.suspension(t, (n, 1)) == (n + 1, 1)
            h = dv.knit_hammock(t, (n, 1))
            assert h.values == {(n, 1): 1}

    def test_a2_periodicity(self, a2_window):
        # suspension commutes with the translate level shift
        assert dv.suspension(a2_window, (0, 1)) == (1, 2)
        assert dv.suspension(a2_window, (1, 1)) == (2, 2)
        assert dv.suspension(a2_window, (0, 2)) == (2, 1)

    def test_sigma_tau_commute(self, a3_window):
        for v in [(0, 1), (1, 2), (2, 3), (1, 1)]:
            n, x = v
            s = dv.suspension(a3_window, v)
            s_shift = dv.suspension(a3_window, (n + 1, x))
            assert s_shift == (s[0] + 1, s[1])

    def test_serre_is_tau_after_sigma(self, a2_window):
        q = rc.dynkin_quiver("A2")
        emb = dv.module_slice(q)
        ns1 = dv.serre(a2_window, emb[(1, 0)])
        assert ns1 == dv.suspension(a2_window, emb[(0, 1)])  # N S1 = Sigma S2
        h = dv.knit_hammock(a2_window, emb[(1, 0)])
        assert h.value(ns1) == 1


class TestEll:
    def test_a1_all_one(self):
        t = dv.build_zdelta("A1", (0, 4))
        assert all(dv.ell(t, (n, 1)) == 1 for n in range(0, 4))

    def test_a2_simples(self, a2_window):
        q = rc.dynkin_quiver("A2")
        emb = dv.module_slice(q)
        assert dv.ell(a2_window, emb[(1, 0)]) == 2
        assert dv.ell(a2_window, emb[(0, 1)]) == 2
        assert dv.ell(a2_window, emb[(1, 1)]) == 2

    def test_tau_invariance(self, a3_window):
        for x in [1, 2, 3]:
            for n in range(1, 5):
                assert dv.ell(a3_window, (n, x)) == dv.ell(a3_window, (n - 1, x))


class TestMesh:
    def test_a2_example_vertex(self, a2_window):
        q = rc.dynkin_quiver("A2")
        emb = dv.module_slice(q)
        z = emb[(1, 0)]  # S1
        lz = dv.ell(a2_window, z)
        arrows_in = a2_window.arrows_into(z)
        assert 2 * lz == 2 + sum(val[0] * dv.ell(a2_window, y) for y, val in arrows_in) == 4

    def test_a1_degenerate(self):
        t = dv.build_zdelta("A1", (0, 3))
        report = dv.verify_mesh(t)
        assert report.ok
        assert len(report.checked) == 3

    @pytest.mark.parametrize("label,hi", [("A2", 4), ("A3", 5), ("D4", 4)])
    def test_zero_violations(self, label, hi):
        report = dv.verify_mesh(dv.build_zdelta(label, (0, hi)))
        assert report.ok
        assert len(report.checked) >= 4


class TestDerivedHom:
    def test_a2_bridge_values(self):
        q = rc.dynkin_quiver("A2")
        p1 = rc.indecomposable_for_root(q, (1, 1))
        s1, s2 = rc.simple_rep(q, 1), rc.simple_rep(q, 2)
        assert dv.derived_hom(q, (p1, 0), (s1, 0)) == 1
        assert dv.derived_hom(q, (s1, 0), (s2, 1)) == 1
        assert dv.derived_hom(q, (s1, 0), (s2, 2)) == 0
        assert dv.derived_hom(q, (s1, 0), (s2, -1)) == 0

    def test_shift_invariance(self):
        q = rc.dynkin_quiver("A2")
        s1, s2 = rc.simple_rep(q, 1), rc.simple_rep(q, 2)
        assert dv.derived_hom(q, (s1, 3), (s2, 4)) == dv.derived_hom(q, (s1, 0), (s2, 1))

    @pytest.mark.parametrize("label", ["A2", "A3"])
    def test_matches_knitting(self, label):
        q = rc.dynkin_quiver(label)
        emb = dv.module_slice(q)
        window = dv.build_zdelta(label, (-2, 4 * q.rank))
        reps = {a: rc.indecomposable_for_root(q, a) for a in emb}
        for a, va in emb.items():
            h = dv.knit_hammock(window, va)
            for b, vb in emb.items():
                target = vb
                for shift in range(3):
                    assert h.value(target) == dv.derived_hom(
                        q, (reps[a], 0), (reps[b], shift)
                    )
                    target = dv.suspension(window, target)


class TestModuleSlice:
    @pytest.mark.parametrize("label", ["A2", "A3", "D4"])
    def test_embedding_respects_arrows_and_tau(self, label):
        q = rc.dynkin_quiver(label)
        ar = rc.ar_quiver_module_category(q)
        emb = dv.module_slice(q)
        lo = min(v[0] for v in emb.values()) - 1
        hi = max(v[0] for v in emb.values()) + 1
        window = dv.build_zdelta(label, (lo, hi))
        arrows = {(s, t) for s, t, _ in window.arrows}
        for s, t, _ in ar.arrows:
            assert (emb[s], emb[t]) in arrows
        for z, tz in ar.tau.items():
            assert window.tau[emb[z]] == emb[tz]

    def test_injective(self):
        emb = dv.module_slice(rc.dynkin_quiver("D4"))
        assert len(set(emb.values())) == 12


class TestSerreDuality:
    def test_a3_window(self):
        t = dv.build_zdelta("A3", (0, 6))
        hammocks = {v: dv.knit_hammock(t, v) for v in t.vertices}
        for x in t.vertices:
            nx = dv.serre(t, x)
            for y in t.vertices:
                assert hammocks[x].value(y) == hammocks[y].value(nx)


class TestPathWitness:
    def test_a3(self):
        q = rc.dynkin_quiver("A3")
        emb = dv.module_slice(q)
        t = dv.build_zdelta("A3", (-2, 14))
        succ = {v: [w for w, _ in t.arrows_out_of(v)] for v in t.vertices}

        def reachable(src):
            seen, stack = {src}, [src]
            while stack:
                v = stack.pop()
                for w in succ.get(v, ()):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            return seen

        for va in emb.values():
            reach = reachable(va)
            h = dv.knit_hammock(t, va)
            for z, value in h.values.items():
                if value:
                    assert z in reach


class TestOutputs:
    def test_dot_has_dashed_tau(self):
        dot = dv.window_dot(dv.build_zdelta("A2", (0, 2)))
        assert "style=dashed" in dot
        assert dot.count("->") > 0

    def test_hammocks_json(self):
        data = dv.hammocks_json(dv.build_zdelta("A2", (0, 2)))
        assert data["type"] == "A2"
        assert data["hammocks"]["0:1"]["values"]["0:1"] == 1
