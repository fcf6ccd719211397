"""Invariant suites behind the CLI verify command.

Every fast path is checked against an independent route: fixed-space
absolute lengths against Cayley-graph BFS, prefix-grown noncrossing
posets against whole-group filters, knitted hammocks against the
rational-matrix oracle, the thick lattice against the wide-subcategory
closure.  Each check returns a result record instead of raising so that
the CLI can print one line per invariant.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import braid, cartan, derived, noncrossing, repcat, thicklat


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def worker_count() -> int:
    """Parallelism cap from NC_THICK_THREADS; defaults to sequential."""
    try:
        return max(1, int(os.environ.get("NC_THICK_THREADS", "1")))
    except ValueError:
        return 1


def _check(suite: str, name: str, fn) -> CheckResult:
    try:
        detail = fn()
        return CheckResult(suite, name, True, detail or "")
    except Exception as exc:  # noqa: BLE001 - reported, not swallowed
        return CheckResult(suite, name, False, f"{type(exc).__name__}: {exc}")


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise AssertionError(msg)


# ---------------------------------------------------------------------------
# nc suite: Weyl arithmetic and the noncrossing lattice


def _whole_group_nc_count(label: str) -> int:
    """Filter the full group through BFS lengths; no rank formula involved."""
    cd = cartan.build_cartan(label)
    c = cartan.coxeter_element(cd)
    table = cartan._bfs_length_table(cd)
    n = cd.rank
    return sum(
        1 for w in table if table[w] + table[w.inverse() * c] == n
    )


def _chk_form_invariance():
    rng = random.Random(20240801)
    for label in ("A2", "A3", "B2", "G2"):
        cd = cartan.build_cartan(label)
        ws = list(cartan.reflections(cd)) + [
            cartan.coxeter_element(cd),
            cartan.coxeter_element(cd) * cartan.simple_reflection(cd, 1),
        ]
        for _ in range(20):
            xi = tuple(rng.randint(-4, 4) for _ in range(cd.rank))
            eta = tuple(rng.randint(-4, 4) for _ in range(cd.rank))
            for w in ws:
                _expect(
                    cartan.form(cd, w.apply(xi), w.apply(eta)) == cartan.form(cd, xi, eta),
                    f"form not invariant under {w} in {label}",
                )
    return "A2 A3 B2 G2, 20 random vector pairs each"


def _chk_reflection_involutive():
    for label in ("A3", "B2", "G2", "D4"):
        cd = cartan.build_cartan(label)
        for alpha in cartan.positive_roots(cd):
            s = cartan.reflection_element(cd, alpha)
            _expect((s * s).is_identity(), f"reflection at {alpha} not involutive in {label}")
    return "all positive roots of A3 B2 G2 D4"


def _chk_length_oracle():
    for label in ("A2", "A3", "B2", "G2"):
        cd = cartan.build_cartan(label)
        for w in cartan.weyl_group(cd):
            _expect(
                cartan.absolute_length(cd, w) == cartan.absolute_length_bfs(cd, w),
                f"fixed-space length disagrees with BFS in {label}",
            )
    return "every element of W(A2) W(A3) W(B2) W(G2)"


def _chk_prefix_property():
    for label in ("A2", "A3"):
        cd = cartan.build_cartan(label)
        c = cartan.coxeter_element(cd)
        for f in braid.enumerate_factorizations(cd):
            prefix = cartan.identity_element(cd)
            for r, x in enumerate(f.parts, start=1):
                prefix = prefix * x
                _expect(
                    cartan.absolute_length(cd, prefix) == r,
                    f"prefix of length {r} has wrong absolute length in {label}",
                )
                _expect(cartan.abs_leq(cd, prefix, c), f"prefix not below c in {label}")
    return "all factorization prefixes in A2 and A3"


def _chk_conjugation_invariance():
    for label in ("A2", "B2"):
        cd = cartan.build_cartan(label)
        group = cartan.weyl_group(cd)
        for g in group:
            gi = g.inverse()
            for w in group:
                _expect(
                    cartan.absolute_length(cd, g * w * gi)
                    == cartan.absolute_length(cd, w),
                    f"length not conjugation invariant in {label}",
                )
    return "all pairs in W(A2) and W(B2)"


def _chk_root_counts():
    for n in range(1, 5):
        cd = cartan.build_cartan(f"A{n}")
        _expect(
            len(cartan.real_roots(cd)) == n * (n + 1),
            f"|roots(A{n})| != n(n+1)",
        )
    return "A1..A4"


def _chk_nc_counts():
    expected = {"A2": 5, "A3": 14, "B2": 6, "G2": 8}
    for label, count in expected.items():
        cd = cartan.build_cartan(label)
        got = len(noncrossing.enumerate_nc(cd))
        _expect(got == count, f"NC({label}) = {got}, expected {count}")
    return "A2=5 A3=14 B2=6 G2=8"


def _chk_nc_whole_group():
    for label in ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"):
        cd = cartan.build_cartan(label)
        fast = len(noncrossing.enumerate_nc(cd))
        slow = _whole_group_nc_count(label)
        _expect(fast == slow, f"NC({label}): prefix growth {fast} vs whole group {slow}")
    return "all finite labels of rank <= 4"


def _chk_kreweras_duality():
    for label in ("A2", "A3", "B2", "G2"):
        cd = cartan.build_cartan(label)
        lat = noncrossing.enumerate_nc(cd)
        n = cd.rank
        image = set()
        for w in lat.elements:
            k = noncrossing.kreweras(lat, w)
            image.add(k)
            _expect(lat.ranks[k] == n - lat.ranks[w], f"rank not complementary in {label}")
            _expect(
                noncrossing.co_kreweras(lat, k) == w,
                f"co_kreweras does not invert kreweras in {label}",
            )
        _expect(len(image) == len(lat), f"kreweras not bijective in {label}")
        for u in lat.elements:
            for v in lat.elements:
                if lat.leq(u, v):
                    _expect(
                        lat.leq(noncrossing.kreweras(lat, v), noncrossing.kreweras(lat, u)),
                        f"kreweras not order reversing in {label}",
                    )
    return "bijective, rank-complementary, order-reversing on A2 A3 B2 G2"


def _chk_complementation():
    for label in ("A2", "A3", "B2", "G2"):
        cd = cartan.build_cartan(label)
        lat = noncrossing.enumerate_nc(cd)
        for w in lat.elements:
            comp = noncrossing.co_kreweras(lat, w)
            _expect(
                noncrossing.meet(lat, w, comp) == lat.identity(),
                f"meet with complement not bottom in {label}",
            )
            _expect(
                noncrossing.join(lat, w, comp) == lat.coxeter,
                f"join with complement not top in {label}",
            )
    return "w meet cw^-1 = id, w join cw^-1 = c on A2 A3 B2 G2"


def _chk_interval_complements():
    cd = cartan.build_cartan("A3")
    lat = noncrossing.enumerate_nc(cd)
    for u in lat.elements:
        for v in lat.elements:
            if not lat.leq(u, v):
                continue
            interval = [x for x in lat.elements if lat.leq(u, x) and lat.leq(x, v)]
            for x in interval:
                found = any(
                    noncrossing.meet(lat, x, y) == u and noncrossing.join(lat, x, y) == v
                    for y in interval
                )
                _expect(found, f"no relative complement for {x} in [{u},{v}]")
    return "every interval of NC(A3) is complemented"


def _chk_kronecker_poset():
    for bound in range(4):
        lat = noncrossing.nc_kronecker(bound)
        _expect(len(lat) == 2 + 2 * (bound + 1), f"wrong size at bound {bound}")
        refs = lat.reflection_members()
        for r in refs:
            _expect(
                cartan.abs_leq(lat.cartan, lat.identity(), r), "id not below a reflection"
            )
            _expect(
                (r.inverse() * lat.coxeter).det() == -1,
                "complement of a reflection is not a reflection",
            )
        for a in refs:
            for b in refs:
                if a != b:
                    _expect(not lat.leq(a, b), "atoms must be incomparable")
        _expect(max(lat.ranks.values()) == 2, "height must be 2")
    return "bounds 0..3: size, det test, incomparable atoms, height 2"


_NC_CHECKS = [
    ("form-invariance", _chk_form_invariance),
    ("reflection-involutive", _chk_reflection_involutive),
    ("absolute-length-bfs-oracle", _chk_length_oracle),
    ("factorization-prefix-ranks", _chk_prefix_property),
    ("length-conjugation-invariance", _chk_conjugation_invariance),
    ("root-counts", _chk_root_counts),
    ("nc-counts", _chk_nc_counts),
    ("nc-whole-group-oracle", _chk_nc_whole_group),
    ("kreweras-duality", _chk_kreweras_duality),
    ("nc-complementation", _chk_complementation),
    ("nc-interval-complements", _chk_interval_complements),
    ("nc-kronecker-truncations", _chk_kronecker_poset),
]


# ---------------------------------------------------------------------------
# braid suite


def _chk_hurwitz_transitive():
    for label in ("A2", "A3", "B2", "G2"):
        cd = cartan.build_cartan(label)
        c = cartan.coxeter_element(cd)
        facts = braid.enumerate_factorizations(cd)
        start = braid.Factorization(
            cd, tuple(cartan.simple_reflection(cd, i) for i in range(1, cd.rank + 1)), c
        )
        orbit = braid.hurwitz_orbit(start)
        _expect(
            {f.key() for f in orbit} == {f.key() for f in facts},
            f"Hurwitz orbit differs from all factorizations in {label}",
        )
    return "single orbit on A2 A3 B2 G2"


def _chk_braid_relation():
    cd = cartan.build_cartan("A3")
    for f in braid.enumerate_factorizations(cd):
        lhs = braid.braid_act(braid.braid_act(braid.braid_act(f, 1), 2), 1)
        rhs = braid.braid_act(braid.braid_act(braid.braid_act(f, 2), 1), 2)
        _expect(lhs.key() == rhs.key(), "braid relation fails on A3")
    return "s1 s2 s1 = s2 s1 s2 on all 16 A3 factorizations"


def _chk_braid_roundtrip():
    cd = cartan.build_cartan("A3")
    for f in braid.enumerate_factorizations(cd):
        for i in (1, 2):
            _expect(
                braid.braid_act(braid.braid_act(f, i), i, inverse=True).key() == f.key(),
                "forward-then-inverse is not the identity",
            )
            _expect(
                braid.braid_act(f, i).target == f.target,
                "braid action changed the product",
            )
    return "roundtrip and product invariance on all A3 factorizations"


_BRAID_CHECKS = [
    ("hurwitz-transitivity", _chk_hurwitz_transitive),
    ("braid-relation", _chk_braid_relation),
    ("braid-roundtrip", _chk_braid_roundtrip),
]


# ---------------------------------------------------------------------------
# arq suite: module category and the derived model


def _chk_intertwiners_sound():
    for label in ("A3", "D4"):
        q = repcat.dynkin_quiver(label)
        inds = repcat.indecomposables(q)
        for m in inds:
            for n in inds:
                space = repcat.hom(q, m, n)
                for f in space.basis:
                    for idx, (s, t) in enumerate(q.arrows):
                        si, ti = s - 1, t - 1
                        lhs = repcat._mm(f[ti], m.maps[idx], n.dim[ti], m.dim[ti], m.dim[si])
                        rhs = repcat._mm(n.maps[idx], f[si], n.dim[ti], n.dim[si], m.dim[si])
                        _expect(lhs == rhs, f"intertwiner law fails in {label}")
    return "every Hom basis element of A3 and D4"


def _chk_root_module_bijection():
    expected = {"A2": 3, "A3": 6, "D4": 12}
    for label, count in expected.items():
        q = repcat.dynkin_quiver(label)
        inds = repcat.indecomposables(q)
        _expect(len(inds) == count, f"{label} should have {count} indecomposables")
        dims = {m.dim for m in inds}
        _expect(len(dims) == count, "dimension vectors must be distinct")
        for m in inds:
            _expect(repcat.hom(q, m, m).dim == 1, "endomorphisms must be scalar")
    return "A2=3 A3=6 D4=12 with scalar endomorphism rings"


def _chk_euler_consistency():
    q = repcat.dynkin_quiver("A3")
    inds = repcat.indecomposables(q)
    for m in inds:
        for n in inds:
            _expect(
                repcat.hom(q, m, n).dim - repcat.ext1_dim(q, m, n)
                == repcat.euler_form(q, m.dim, n.dim),
                "Euler identity fails on A3",
            )
    return "all 36 ordered pairs of A3 indecomposables"


def _chk_valuation_symmetry():
    for label in ("A3", "D4"):
        ar = repcat.ar_quiver_module_category(repcat.dynkin_quiver(label))
        arrows = {(s, t): val for s, t, val in ar.arrows}
        for (x, y), (d, _) in arrows.items():
            if y in ar.tau:
                ty = ar.tau[y]
                _expect(
                    (ty, x) in arrows and arrows[(ty, x)][1] == d,
                    f"valuation symmetry fails at {x}->{y} in {label}",
                )
        _expect(not ar.check_mesh_shape(), f"mesh shape violated in {label}")
    return "d'(tau Y, X) = d(X, Y) on knitted A3 and D4 quivers"


def _chk_exceptional_count_matches_braid():
    q = repcat.dynkin_quiver("A2")
    inds = repcat.indecomposables(q)
    count = sum(
        1
        for pair in itertools.product(inds, repeat=2)
        if repcat.is_exceptional_sequence(q, pair)
    )
    facts = braid.enumerate_factorizations(cartan.build_cartan("A2"))
    _expect(count == len(facts) == 3, "A2 exceptional pairs != factorizations")
    return "3 = 3 on A2"


def _chk_hammock_oracle():
    for label in ("A2", "A3"):
        q = repcat.dynkin_quiver(label)
        emb = derived.module_slice(q)
        window = derived.build_zdelta(label, (-2, 4 * q.rank))
        reps = {a: repcat.indecomposable_for_root(q, a) for a in emb}
        for a, va in emb.items():
            h = derived._knit_cached(window, va)
            for b, vb in emb.items():
                target = vb
                for shift in range(3):
                    _expect(
                        h.value(target)
                        == derived.derived_hom(q, (reps[a], 0), (reps[b], shift)),
                        f"hammock disagrees with linear algebra at {a}->{b}[{shift}]",
                    )
                    target = derived.suspension(window, target)
    return "knitting = rational linear algebra on A2 and A3, shifts 0..2"


def _chk_mesh_identities():
    for label, hi in (("A2", 4), ("A3", 5), ("D4", 4)):
        report = derived.verify_mesh(derived.build_zdelta(label, (0, hi)))
        _expect(report.ok, f"mesh violations in {label}: {report.violations}")
        _expect(len(report.checked) >= 4, "window too small")
    return "zero violations on A2 A3 D4 windows"


def _chk_serre_duality():
    t = derived.build_zdelta("A3", (0, 6))
    for x in t.vertices:
        hx = derived._knit_cached(t, x)
        nx = derived.serre(t, x)
        for y in t.vertices:
            hy = derived._knit_cached(t, y)
            _expect(
                hx.value(y) == hy.value(nx),
                f"Serre duality fails at {x},{y}",
            )
    return "dim Hom(X,Y) = dim Hom(Y,NX) on an A3 window"


def _chk_ar_shape_embedding():
    for label in ("A2", "A3", "D4"):
        q = repcat.dynkin_quiver(label)
        ar = repcat.ar_quiver_module_category(q)
        emb = derived.module_slice(q)
        lo = min(v[0] for v in emb.values()) - 1
        hi = max(v[0] for v in emb.values()) + 1
        window = derived.build_zdelta(label, (lo, hi))
        warrows = {(s, t) for s, t, _ in window.arrows}
        for s, t, _ in ar.arrows:
            _expect(
                (emb[s], emb[t]) in warrows,
                f"module arrow {s}->{t} missing in the repetition of {label}",
            )
        for z, tz in ar.tau.items():
            _expect(
                window.tau.get(emb[z]) == emb[tz],
                f"translate mismatch at {z} in {label}",
            )
    return "module AR quivers embed arrow- and tau-compatibly (A2 A3 D4)"


def _chk_path_witness():
    label = "A3"
    q = repcat.dynkin_quiver(label)
    emb = derived.module_slice(q)
    t = derived.build_zdelta(label, (-2, 14))
    succ = {v: [w for w, _ in t.arrows_out_of(v)] for v in t.vertices}

    def reachable(src):
        seen = {src}
        stack = [src]
        while stack:
            v = stack.pop()
            for w in succ.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    for a, va in emb.items():
        h = derived._knit_cached(t, va)
        reach = reachable(va)
        for z, val in h.values.items():
            if val > 0:
                _expect(z in reach, f"no path from {va} to {z} despite Hom != 0")
    return "Hom != 0 implies a directed path, A3 window"


_ARQ_CHECKS = [
    ("intertwiner-soundness", _chk_intertwiners_sound),
    ("root-module-bijection", _chk_root_module_bijection),
    ("euler-consistency", _chk_euler_consistency),
    ("valuation-symmetry", _chk_valuation_symmetry),
    ("exceptional-pairs-match-factorizations", _chk_exceptional_count_matches_braid),
    ("hammock-oracle-agreement", _chk_hammock_oracle),
    ("mesh-identities", _chk_mesh_identities),
    ("serre-duality", _chk_serre_duality),
    ("ar-shape-embedding", _chk_ar_shape_embedding),
    ("path-witness", _chk_path_witness),
]


# ---------------------------------------------------------------------------
# thick suite


def _chk_cox_well_defined():
    rng = random.Random(1105)
    for label in ("A2", "A3"):
        cd = cartan.build_cartan(label)
        lat = noncrossing.enumerate_nc(cd)
        c = lat.coxeter
        base = braid.Factorization(
            cd, tuple(cartan.simple_reflection(cd, i) for i in range(1, cd.rank + 1)), c
        )
        for _ in range(40):
            f = base
            for _ in range(rng.randint(1, 8)):
                f = braid.braid_act(f, rng.randint(1, cd.rank - 1), inverse=rng.random() < 0.5)
            for r in range(cd.rank + 1):
                prefix = cartan.identity_element(cd)
                for x in f.parts[:r]:
                    prefix = prefix * x
                u = thicklat.thick_from_nc(cd, prefix, c)
                _expect(
                    thicklat.cox(u, c) == prefix,
                    "cox differs across braid-orbit representatives",
                )
    return "random braid words, all prefixes, A2 and A3"


def _chk_bijectivity():
    for label in ("A2", "A3"):
        cd = cartan.build_cartan(label)
        lat = noncrossing.enumerate_nc(cd)
        for w in lat.elements:
            u = thicklat.thick_from_nc(cd, w, lat.coxeter)
            _expect(thicklat.cox(u, lat.coxeter) == w, "cox o thick_from_nc != id")
    return "cox o thick_from_nc = id on NC(A2) and NC(A3)"


def _chk_order_preservation():
    cd = cartan.build_cartan("A3")
    lat = noncrossing.enumerate_nc(cd)
    n = cd.rank
    for u in lat.elements:
        for v in lat.elements:
            if not lat.leq(u, v):
                continue
            f1 = thicklat._reflection_factorization(cd, u)
            f2 = thicklat._reflection_factorization(cd, u.inverse() * v)
            f3 = thicklat._reflection_factorization(cd, v.inverse() * lat.coxeter)
            word = f1 + f2 + f3
            _expect(len(word) == n, "concatenated word has wrong length")
            prod = cartan.identity_element(cd)
            for k, alpha in enumerate(word, start=1):
                prod = prod * cartan.reflection_element(cd, alpha)
                if k == len(f1):
                    _expect(prod == u, "prefix does not realize u")
                if k == len(f1) + len(f2):
                    _expect(prod == v, "prefix does not realize v")
            _expect(prod == lat.coxeter, "word does not multiply to c")
    return "nested prefixes realize every u <= v in NC(A3)"


def _chk_biperp():
    cd = cartan.build_cartan("A3")
    lat = noncrossing.enumerate_nc(cd)
    for w in lat.elements:
        u = thicklat.thick_from_nc(cd, w, lat.coxeter)
        _expect(
            thicklat.left_perp(thicklat.right_perp(u, lat.coxeter), lat.coxeter) == u,
            "left_perp o right_perp != id",
        )
        _expect(
            thicklat.right_perp(thicklat.left_perp(u, lat.coxeter), lat.coxeter) == u,
            "right_perp o left_perp != id",
        )
    return "biperpendicular identity on NC(A3)"


def _chk_oracle_agreement():
    for label in ("A1", "A2", "A3"):
        cd = cartan.build_cartan(label)
        fast = len(thicklat.thick_lattice(cd))
        slow = thicklat.wide_subcategory_oracle(repcat.dynkin_quiver(label)).count
        _expect(fast == slow, f"thick count {fast} != wide count {slow} in {label}")
    return "thick lattice = wide subcategories on A1 A2 A3"


def _chk_reflection_root_bijection():
    for label in ("A2", "A3", "B2", "G2", "D4"):
        cd = cartan.build_cartan(label)
        seen = set()
        for t in cartan.reflections(cd):
            alpha = thicklat.root_of_reflection(cd, t)
            _expect(cartan.reflection_element(cd, alpha) == t, "root round trip fails")
            seen.add(alpha)
        _expect(
            seen == set(cartan.positive_roots(cd)),
            f"reflections and positive roots do not biject in {label}",
        )
    return "reflections <-> positive roots on A2 A3 B2 G2 D4"


def _chk_kronecker_lattice():
    lat = thicklat.kronecker_lattice(2, 3)
    _expect(len(lat) == 15, f"glued lattice has {len(lat)} elements, expected 15")
    for a in lat.elements:
        for b in lat.elements:
            lat.meet(a, b)
            lat.join(a, b)
    refs = [e for e in lat.elements if e[0] == "nc"]
    tubes = [e for e in lat.elements if e[0] == "tube"]
    for r in refs:
        for t in tubes:
            _expect(lat.meet(r, t) == ("bottom",), "cross-part meet must be bottom")
            _expect(lat.join(r, t) == ("top",), "cross-part join must be top")
    return "15 elements, all meets/joins exist, cross-part laws hold"


_THICK_CHECKS = [
    ("cox-well-defined", _chk_cox_well_defined),
    ("thick-nc-bijectivity", _chk_bijectivity),
    ("order-preservation-nested-prefixes", _chk_order_preservation),
    ("biperpendicular-identity", _chk_biperp),
    ("wide-oracle-agreement", _chk_oracle_agreement),
    ("reflection-root-bijection", _chk_reflection_root_bijection),
    ("kronecker-glued-lattice", _chk_kronecker_lattice),
]


SUITES = {
    "nc": _NC_CHECKS,
    "braid": _BRAID_CHECKS,
    "arq": _ARQ_CHECKS,
    "thick": _THICK_CHECKS,
}


def run_suites(names) -> list[CheckResult]:
    """Run the named suites; 'all' expands to every suite in order."""
    if isinstance(names, str):
        names = [names]
    expanded: list[str] = []
    for n in names:
        if n == "all":
            expanded.extend(SUITES)
        elif n in SUITES:
            expanded.append(n)
        else:
            raise KeyError(f"unknown suite {n!r}")
    jobs = [(suite, name, fn) for suite in expanded for name, fn in SUITES[suite]]
    threads = worker_count()
    if threads == 1:
        return [_check(s, n, f) for s, n, f in jobs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_check, s, n, f) for s, n, f in jobs]
        return [f.result() for f in futures]
