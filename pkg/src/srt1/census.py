"""Exhaustive cross-validation over all small simplicial complexes.

Complexes on [n] correspond to antichains of subsets of 2^[n]; the census
enumerates them, quotients by vertex relabeling (every checked property is
label-equivariant) and runs the full invariant battery on each canonical
representative.  Ground sizes up to 5 are supported.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .complexes import (
    SimplicialComplex,
    maximal_masks,
    minimal_nonface_masks,
    sort_key,
    unpack,
)
from .cotangent import (
    T1Table,
    _bijection_sets,
    _dim_on_faces,
    _link_face_masks,
    _ndel,
    _vertex_mask_of_faces,
    dim_t1,
    dim_t1_nonface,
    t1_table,
    t1_upper_bound,
)
from .matroids import (
    is_matroid_circuit_elimination,
    is_matroid_exchange,
    is_matroid_unique_min,
    uniform,
)
from .recognition import formula_discrepancies, is_matroid_via_t1
from .reconstruction import classify_loops_coloops, reconstruct, slice_link_table

MAX_CENSUS_GROUND = 5


def all_antichain_masks(n: int) -> list[tuple[int, ...]]:
    """Every antichain of subsets of [n], as a sorted tuple of facet masks.

    () is the void complex and (0,) is {emptyset}; the count over all n
    matches the Dedekind numbers.
    """
    out: list[tuple[int, ...]] = [(), (0,)]
    masks = list(range(1, 1 << n))
    chosen: list[int] = []

    def rec(start: int) -> None:
        for i in range(start, len(masks)):
            m = masks[i]
            if any(m & ~c == 0 or c & ~m == 0 for c in chosen):
                continue
            chosen.append(m)
            out.append(tuple(chosen))
            rec(i + 1)
            chosen.pop()

    rec(0)
    return out


def _perm_tables(n: int) -> list[list[int]]:
    tables = []
    for perm in itertools.permutations(range(n)):
        table = [0] * (1 << n)
        for mask in range(1 << n):
            img = 0
            rest = mask
            while rest:
                low = rest & -rest
                img |= 1 << perm[low.bit_length() - 1]
                rest ^= low
            table[mask] = img
        tables.append(table)
    return tables


def canonical_form(facet_masks: tuple[int, ...], perm_tables: list[list[int]]) -> tuple[int, ...]:
    """Least relabeled facet tuple over all vertex permutations."""
    return min(tuple(sorted(t[f] for f in facet_masks)) for t in perm_tables)


def representatives(n: int) -> list[SimplicialComplex]:
    """One nonvoid complex per relabeling class on ground size n."""
    tables = _perm_tables(n)
    seen: set[tuple[int, ...]] = set()
    out = []
    for facets in all_antichain_masks(n):
        if not facets:
            continue
        key = canonical_form(facets, tables)
        if key not in seen:
            seen.add(key)
            out.append(SimplicialComplex(n, key))
    return out


def orbit_size(cx: SimplicialComplex) -> int:
    tables = _perm_tables(cx.n)
    return len({tuple(sorted(t[f] for f in cx.facet_masks)) for t in tables})


# ---------------------------------------------------------------------------
# invariant battery


@dataclass
class CensusReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


_FAIL_CAP = 5


class _Recorder:
    def __init__(self) -> None:
        self.data: dict[str, CensusReport] = {}

    def add(self, name: str, checked: int, failures: list[str]) -> None:
        rep = self.data.setdefault(name, CensusReport(name))
        rep.checked += checked
        for f in failures:
            if len(rep.failures) < _FAIL_CAP:
                rep.failures.append(f)


def _tag(cx: SimplicialComplex) -> str:
    return f"n={cx.n} facets={[list(f) for f in cx.facets]}"


def check_complex(cx: SimplicialComplex) -> tuple[dict[str, CensusReport], tuple[bool, bool, bool]]:
    """Run the per-complex battery; also report (matroid, nondiscrete, coloop-free)."""
    rec = _Recorder()
    tag = _tag(cx)
    n = cx.n
    full = (1 << n) - 1
    faces = cx.face_masks()
    circuits = cx.minimal_nonface_masks()

    # facets form an antichain
    anti = all(
        not (f1 & ~f2 == 0 or f2 & ~f1 == 0)
        for f1, f2 in itertools.combinations(cx.facet_masks, 2)
    )
    rec.add("antichain", 1, [] if anti else [tag])

    # the two descriptions determine each other
    rebuilt = SimplicialComplex.from_minimal_nonfaces(n, cx.minimal_nonfaces())
    rec.add("nonface-duality", 1, [] if rebuilt == cx else [tag])

    # link and restriction commute
    fails = []
    checked = 0
    for w in range(1 << n):
        sub = w
        while True:
            checked += 1
            lhs = cx.restrict(unpack(w)).link_mask(sub)
            rhs = cx.link_mask(sub).restrict(unpack(w))
            if lhs != rhs:
                fails.append(f"{tag}: W={unpack(w)} F={unpack(sub)}")
            if sub == 0:
                break
            sub = (sub - 1) & w
    rec.add("link-restrict-commute", checked, fails)

    # rank is monotone and bounded by cardinality
    fails = []
    for a in range(1 << n):
        ra = cx.rank_of(unpack(a))
        if ra > a.bit_count():
            fails.append(f"{tag}: rank({unpack(a)}) > |A|")
        for v in range(n):
            bit = 1 << v
            if not a & bit and cx.rank_of(unpack(a | bit)) < ra:
                fails.append(f"{tag}: rank drops adding {v + 1} to {unpack(a)}")
    rec.add("rank-monotone", 1 << n, fails)

    # the three matroid oracles agree
    ex = is_matroid_exchange(cx)
    ce = is_matroid_circuit_elimination(cx)
    um = is_matroid_unique_min(cx)
    rec.add(
        "oracle-agreement",
        1,
        [] if ex == ce == um else [f"{tag}: exchange={ex} circuits={ce} unique-min={um}"],
    )

    # per-face link data, reused below
    a_masks = sorted(faces, key=sort_key)
    links = {a: _link_face_masks(faces, a) for a in a_masks}

    # T1 computed on the complex equals T1 of the link in the shifted degree
    fails = []
    checked = 0
    for a in a_masks:
        link_cx = cx.link_mask(a)
        rest = full & ~a
        sub = rest
        while sub:
            checked += 1
            lhs = dim_t1(cx, (unpack(a), unpack(sub)))
            rhs = dim_t1(link_cx, ((), unpack(sub)))
            if lhs != rhs:
                fails.append(f"{tag}: degree ({unpack(a)},{unpack(sub)}) {lhs} != {rhs}")
            sub = (sub - 1) & rest
    rec.add("link-reduction", checked, fails)

    # N_b shape, minimal elements, and the N~ emptiness equivalence
    fails_shape, fails_min, fails_equiv = [], [], []
    for b in range(1, 1 << n):
        nvert = _ndel(faces, b)
        nset = set(nvert)
        del_faces = {f for f in faces if not f & b}
        if cx.is_face_mask(b):
            expect = {f for f in del_faces if (f | b) not in faces}
        else:
            expect = del_faces
        if nset != expect:
            fails_shape.append(f"{tag}: b={unpack(b)}")
        subs = [b ^ (b & -b)] if b.bit_count() == 1 else [b & ~bit for bit in _bits_of(b)]
        red = {f for f in nvert if any((f | s) not in faces for s in subs)}
        cuts = {c & ~b for c in circuits if c & b}
        minima_n = {f for f in nset if not any(g != f and g & ~f == 0 for g in nset)}
        if not minima_n <= cuts:
            fails_min.append(f"{tag}: b={unpack(b)} minima of N_b")
        cuts_cross = {c & ~b for c in circuits if c & b and b & ~c}
        minima_r = {f for f in red if not any(g != f and g & ~f == 0 for g in red)}
        if not minima_r <= cuts_cross:
            fails_min.append(f"{tag}: b={unpack(b)} minima of N~_b")
        tame = all(not (c & b) or b & ~c == 0 for c in circuits)
        if (not red) != tame:
            fails_equiv.append(f"{tag}: b={unpack(b)} emptiness")
        elif tame and minima_n != {c & ~b for c in circuits if b & ~c == 0}:
            fails_equiv.append(f"{tag}: b={unpack(b)} minima formula")
    rec.add("ndel-star-shape", (1 << n) - 1, fails_shape)
    rec.add("min-element-containment", 2 * ((1 << n) - 1), fails_min)
    rec.add("ndelred-empty-equivalence", (1 << n) - 1, fails_equiv)

    # upper bound, with equality for matroids at nonzero degrees
    fails = []
    checked = 0
    for b in a_masks:
        if b == 0:
            continue
        checked += 1
        bound = t1_upper_bound(cx, unpack(b))
        d = dim_t1(cx, ((), unpack(b)))
        if d > bound:
            fails.append(f"{tag}: b={unpack(b)} dim {d} > bound {bound}")
        if ex and d > 0 and d != bound:
            fails.append(f"{tag}: b={unpack(b)} matroid dim {d} != bound {bound}")
    rec.add("upper-bound", checked, fails)

    # nonface degrees
    fails = []
    checked = 0
    for b in range(1, 1 << n):
        if cx.is_face_mask(b):
            continue
        checked += 1
        if dim_t1_nonface(cx, unpack(b)) != dim_t1(cx, ((), unpack(b))):
            fails.append(f"{tag}: b={unpack(b)}")
    rec.add("nonface-dimension", checked, fails)

    # main theorem, both directions, plus the singleton corollary
    disc = formula_discrepancies(cx)
    rec.add(
        "main-theorem-iff",
        1,
        [] if (not disc) == ex else [f"{tag}: discrepancies={len(disc)} matroid={ex}"],
    )
    rec.add(
        "recognition-corollary",
        1,
        [] if is_matroid_via_t1(cx) == ex else [tag],
    )
    fails = [
        f"{tag}: degree {d.degree} graph {d.graph_dim} >= formula {d.formula_dim}"
        for d in disc
        if len(d.degree.b) == 1 and d.graph_dim >= d.formula_dim
    ]
    rec.add("singleton-discrepancy-direction", len(disc), fails)

    nondiscrete = False
    coloop_free = False
    if ex:
        loops, coloops = cx.loops_and_coloops()
        nondiscrete = len(loops) + len(coloops) < n
        coloop_free = not coloops
        _check_matroid_parts(rec, cx, tag, faces, a_masks, links, coloops)
    return rec.data, (ex, nondiscrete, coloop_free)


def _bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low)
        mask ^= low
    return out


def _check_matroid_parts(rec, cx, tag, faces, a_masks, links, coloops) -> None:
    n = cx.n
    full = (1 << n) - 1

    # links and restrictions stay matroids
    fails = []
    for a in a_masks:
        if not is_matroid_exchange(cx.link_mask(a)):
            fails.append(f"{tag}: link at {unpack(a)}")
    for w in range(1 << n):
        if not is_matroid_exchange(cx.restrict(unpack(w))):
            fails.append(f"{tag}: restriction to {unpack(w)}")
    rec.add("matroid-minor-closure", len(a_masks) + (1 << n), fails)

    # coloop-free heredity
    if not coloops:
        fails = []
        for a in a_masks:
            link_cx = cx.link_mask(a)
            if link_cx.loops_and_coloops()[1]:
                fails.append(f"{tag}: link at {unpack(a)} gained a coloop")
        rec.add("coloop-free-link-heredity", len(a_masks), fails)

    # facets all have rank cardinality
    rank = cx.rank
    fails = [] if all(f.bit_count() == rank for f in cx.facet_masks) else [tag]
    rec.add("matroid-equicardinal-facets", 1, fails)

    # deletion facets saturate N_b and N~_b
    fails = []
    for b in range(1, 1 << n):
        nvert = set(_ndel(faces, b))
        del_facets = set(maximal_masks(f for f in faces if not f & b))
        if nvert and not del_facets <= nvert:
            fails.append(f"{tag}: b={unpack(b)} facets of deletion escape N_b")
        subs = [b ^ (b & -b)] if b.bit_count() == 1 else [b & ~bit for bit in _bits_of(b)]
        red = {f for f in nvert if any((f | s) not in faces for s in subs)}
        if red:
            if not del_facets <= red:
                fails.append(f"{tag}: b={unpack(b)} facets of deletion escape N~_b")
            maxima_n = {f for f in nvert if not any(g != f and f & ~g == 0 for g in nvert)}
            maxima_r = {f for f in red if not any(g != f and f & ~g == 0 for g in red)}
            if maxima_n != maxima_r:
                fails.append(f"{tag}: b={unpack(b)} maxima differ")
    rec.add("deletion-basis-saturation", (1 << n) - 1, fails)

    # one basis of the deletion extends by b' exactly when all do
    fails = []
    checked = 0
    for b in range(1, 1 << n):
        del_facets = maximal_masks(f for f in faces if not f & b)
        for b1, b2 in itertools.combinations(del_facets, 2):
            sub = b
            while True:
                checked += 1
                if cx.is_face_mask(b1 | sub) != cx.is_face_mask(b2 | sub):
                    fails.append(f"{tag}: b={unpack(b)} bases {unpack(b1)},{unpack(b2)}")
                if sub == 0:
                    break
                sub = (sub - 1) & b
    rec.add("basis-extension", checked, fails)

    # generator bijection at every admissible (A, b)
    fails = []
    checked = 0
    for a in a_masks:
        link_faces = links[a]
        link_circuits = None
        for b in sorted(link_faces, key=sort_key):
            if b == 0:
                continue
            if link_circuits is None:
                link_circuits = minimal_nonface_masks(link_faces, n)
            if any(c & b and b & ~c for c in link_circuits):
                continue
            checked += 1
            dom, cod = _bijection_sets(link_faces, n, b)
            if dom != cod:
                fails.append(f"{tag}: A={unpack(a)} b={unpack(b)}")
    rec.add("bijection-generators", checked, fails)

    # table-level properties
    table = t1_table(cx)
    loops, coloop_t = cx.loops_and_coloops()
    discrete = len(loops) + len(coloop_t) == n
    rec.add(
        "rigidity-discrete",
        1,
        [] if (len(table) == 0) == discrete else [f"{tag}: table size {len(table)}"],
    )

    if not discrete:
        try:
            back = reconstruct(table)
            ok = back == cx
        except ValueError:
            back, ok = None, False
        rec.add("round-trip", 1, [] if ok else [f"{tag}: got {back!r}"])

        roles = classify_loops_coloops(table)
        want = {v: "ordinary" for v in range(1, n + 1)}
        for v in loops:
            want[v] = "loop"
        for v in coloop_t:
            want[v] = "coloop"
        rec.add("loop-coloop-classify", 1, [] if roles == want else [f"{tag}: {roles}"])

    if not coloop_t:
        fails = []
        facet_set = set(cx.facet_masks)
        for a in a_masks:
            empty = len(slice_link_table(table, unpack(a))) == 0
            if empty != (a in facet_set):
                fails.append(f"{tag}: A={unpack(a)}")
        rec.add("link-rigidity-basis", len(a_masks), fails)


# ---------------------------------------------------------------------------
# cross-complex checks


def _check_families(rec: _Recorder, matroid_reps: dict[int, list[SimplicialComplex]]) -> None:
    # joins of matroids are matroids
    fails = []
    checked = 0
    pairs = [
        (m1, m2)
        for n1, lst1 in matroid_reps.items()
        for n2, lst2 in matroid_reps.items()
        if n1 + n2 <= 7
        for m1 in lst1
        for m2 in lst2
    ]
    for m1, m2 in pairs:
        checked += 1
        if not is_matroid_exchange(m1.join(m2)):
            fails.append(f"join of {_tag(m1)} and {_tag(m2)}")
    rec.add("join-matroid-closure", checked, fails)

    # join is associative with {emptyset} on an empty ground as identity
    ident = SimplicialComplex.from_facets(0, [])
    fails = []
    checked = 0
    small = [lst[0] for _, lst in sorted(matroid_reps.items()) if lst][:4]
    some = [m for lst in matroid_reps.values() for m in lst if m.n <= 2][:6]
    for m1, m2, m3 in itertools.product(some, repeat=3):
        checked += 1
        if m1.join(m2).join(m3) != m1.join(m2.join(m3)):
            fails.append(f"{_tag(m1)} * {_tag(m2)} * {_tag(m3)}")
    for m in small:
        checked += 2
        if m.join(ident) != m or ident.join(m) != m:
            fails.append(f"identity on {_tag(m)}")
    rec.add("join-associativity", checked, fails)

    # adjoining coloops copies every entry across all coloop subsets
    fails = []
    checked = 0
    for n1, lst in matroid_reps.items():
        if n1 > 4:
            continue
        for m in lst:
            loops, coloops = m.loops_and_coloops()
            if coloops or len(loops) == m.n:
                continue
            base = t1_table(m)
            for c in (1, 2):
                checked += 1
                joined = m.join(uniform(c, c))
                new = tuple(range(m.n + 1, m.n + c + 1))
                expected = []
                for key, dim in base.items():
                    for r in range(c + 1):
                        for extra in itertools.combinations(new, r):
                            expected.append(((key.A + extra, key.b), dim))
                if t1_table(joined) != T1Table(joined.n, expected):
                    fails.append(f"{_tag(m)} with {c} coloops")
    rec.add("coloop-extension", checked, fails)


BATTERY_ORDER = [
    "antichain",
    "nonface-duality",
    "link-restrict-commute",
    "rank-monotone",
    "oracle-agreement",
    "matroid-minor-closure",
    "coloop-free-link-heredity",
    "matroid-equicardinal-facets",
    "link-reduction",
    "ndel-star-shape",
    "min-element-containment",
    "ndelred-empty-equivalence",
    "upper-bound",
    "deletion-basis-saturation",
    "basis-extension",
    "main-theorem-iff",
    "recognition-corollary",
    "singleton-discrepancy-direction",
    "nonface-dimension",
    "bijection-generators",
    "rigidity-discrete",
    "round-trip",
    "loop-coloop-classify",
    "link-rigidity-basis",
    "join-matroid-closure",
    "join-associativity",
    "coloop-extension",
]


def run_census(max_n: int, threads: int = 1) -> list[CensusReport]:
    """Run the full battery over all complexes on up to max_n vertices.

    Returns one report per invariant, in a fixed order; an invariant passed
    when its failure list is empty.
    """
    if not 1 <= max_n <= MAX_CENSUS_GROUND:
        raise ValueError(f"census supports 1 <= max_n <= {MAX_CENSUS_GROUND}")
    rec = _Recorder()
    matroid_reps: dict[int, list[SimplicialComplex]] = {}
    for n in range(1, max_n + 1):
        reps = representatives(n)
        matroid_reps[n] = []
        if threads > 1 and len(reps) >= 16:
            import multiprocessing

            with multiprocessing.Pool(threads) as pool:
                results = pool.map(check_complex, reps, chunksize=max(1, len(reps) // (4 * threads)))
        else:
            results = [check_complex(cx) for cx in reps]
        for cx, (data, flags) in zip(reps, results):
            for name, part in data.items():
                rec.add(name, part.checked, part.failures)
            if flags[0]:
                matroid_reps[n].append(cx)
    _check_families(rec, matroid_reps)
    reports = [rec.data.get(name, CensusReport(name)) for name in BATTERY_ORDER]
    extra = [r for name, r in rec.data.items() if name not in BATTERY_ORDER]
    return reports + sorted(extra, key=lambda r: r.name)
