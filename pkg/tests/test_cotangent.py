import json
import pickle

import pytest

from srt1.complexes import SimplicialComplex, VoidComplexError, unpack
from srt1.cotangent import (
    InclusionGraph,
    MultiDegree,
    T1Table,
    bijection_check,
    circuits_containing,
    dim_t1,
    dim_t1_matroid_formula,
    dim_t1_nonface,
    inclusion_graph,
    n_del,
    n_del_red,
    t1_table,
    t1_upper_bound,
)
from srt1.matroids import NotAMatroidError, uniform

from _oracles import naive_dim_t1, powerset

REMARK = SimplicialComplex.from_minimal_nonfaces(
    5, [[1, 2], [1, 3], [2, 3, 4], [2, 3, 5], [1, 4, 5]]
)
TETRA_SKEL = SimplicialComplex.from_facets(
    4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]
)


def all_complexes(n):
    masks = list(range(1, 1 << n))
    for bits in range(1 << len(masks)):
        chosen = [unpack(masks[i]) for i in range(len(masks)) if bits >> i & 1]
        yield SimplicialComplex.from_facets(n, chosen)


def all_degrees(n):
    verts = list(range(1, n + 1))
    for A in powerset(verts):
        rest = [v for v in verts if v not in A]
        for b in powerset(rest):
            if b:
                yield MultiDegree.make(A, b)


# -- MultiDegree ------------------------------------------------------------


def test_multidegree_make_normalizes():
    d = MultiDegree.make([3, 1, 1], [2])
    assert d == MultiDegree((1, 3), (2,))
    assert MultiDegree.make([], []) == MultiDegree((), ())


def test_multidegree_overlap_rejected():
    with pytest.raises(ValueError, match="overlap at vertex 2"):
        MultiDegree.make([1, 2], [2, 3])


def test_multidegree_key_orders_by_size_then_lex():
    ds = [
        MultiDegree.make([2], [3]),
        MultiDegree.make([], [1, 2]),
        MultiDegree.make([], [3]),
        MultiDegree.make([1], [2]),
    ]
    assert sorted(ds, key=lambda d: d.key()) == [
        MultiDegree((), (3,)),
        MultiDegree((), (1, 2)),
        MultiDegree((1,), (2,)),
        MultiDegree((2,), (3,)),
    ]


# -- N_b and friends ---------------------------------------------------------


def test_n_del_tetrahedron_skeleton():
    assert n_del(TETRA_SKEL, [1, 2]) == [(3,), (4,), (3, 4)]
    assert n_del_red(TETRA_SKEL, [1, 2]) == [(3, 4)]


def test_n_del_remark_complex():
    assert n_del(REMARK, [4, 5]) == [(1,), (2, 3)]
    assert n_del_red(REMARK, [4, 5]) == [(2, 3)]


def test_n_del_star_shape():
    # face b: N_b is the deletion minus the star; nonface b: all of the deletion
    cx = REMARK

    def deletion_minus_star(b):
        return sorted(
            (f for f in cx.faces() if not set(f) & b and not cx.is_face(set(f) | b)),
            key=lambda t: (len(t), t),
        )

    assert n_del(cx, [4, 5]) == deletion_minus_star({4, 5})
    assert n_del(cx, [1, 2]) == deletion_minus_star({1, 2})
    # {1,2} is a nonface, so nothing survives the star filter
    assert n_del(cx, [1, 2]) == [
        f for f in cx.faces() if not set(f) & {1, 2}
    ]


def test_n_del_validation():
    with pytest.raises(ValueError):
        n_del(REMARK, [])
    with pytest.raises(VoidComplexError):
        n_del(SimplicialComplex.void(2), [1])
    # singleton b never has a reduced part
    for v in range(1, 6):
        assert n_del_red(REMARK, [v]) == []


def test_circuits_containing():
    assert circuits_containing(REMARK, [4, 5]) == [(1, 4, 5)]
    assert circuits_containing(REMARK, [1]) == [(1, 2), (1, 3), (1, 4, 5)]
    assert circuits_containing(REMARK, []) == REMARK.minimal_nonfaces()
    assert circuits_containing(uniform(3, 3), [1]) == []


# -- inclusion graph ----------------------------------------------------------


def test_inclusion_graph_remark():
    g = inclusion_graph(REMARK, [], [4, 5])
    assert g.vertices == ((1,), (2, 3))
    assert g.edges == ()
    assert g.marked == frozenset({1})
    assert g.components == ((0,), (1,))
    assert g.unmarked_component_count() == 1


def test_inclusion_graph_remark_vertex_one():
    g = inclusion_graph(REMARK, [], [1])
    assert len(g.vertices) == 10
    assert len(g.components) == 1
    assert g.marked == frozenset()


def test_inclusion_graph_full_simplex_empty():
    g = inclusion_graph(uniform(3, 3), [], [1])
    assert g.vertices == ()
    assert g.components == ()
    assert g.unmarked_component_count() == 0


def test_inclusion_graph_edges_are_strict_inclusions():
    g = inclusion_graph(TETRA_SKEL, [], [1, 2])
    # {3} < {3,4} and {4} < {3,4}
    assert g.vertices == ((3,), (4,), (3, 4))
    assert g.edges == ((0, 2), (1, 2))
    assert g.components == ((0, 1, 2),)


def test_inclusion_graph_validation():
    with pytest.raises(ValueError):
        inclusion_graph(REMARK, [1], [])
    with pytest.raises(ValueError):
        inclusion_graph(REMARK, [1], [1, 4])


# -- dim_t1 -------------------------------------------------------------------


def test_dim_t1_golden_values():
    assert dim_t1(REMARK, ((), (4, 5))) == 1
    assert dim_t1(REMARK, ((), (1,))) == 0
    assert dim_t1(uniform(4, 2), ((), (1,))) == 2
    assert dim_t1(uniform(3, 2), ((), (1, 2, 3))) == 1


def test_dim_t1_vanishing_range():
    # A not a face
    assert dim_t1(REMARK, ((1, 2), (4,))) == 0
    # empty b
    assert dim_t1(REMARK, ((1,), ())) == 0
    # b outside the link's vertex set: link(REMARK, {2,3}) has vertices {4,5}
    assert dim_t1(REMARK, ((2, 3), (1,))) == 0
    with pytest.raises(VoidComplexError):
        dim_t1(SimplicialComplex.void(2), ((), (1,)))


def test_dim_t1_accepts_degree_forms():
    d = MultiDegree.make([], [4, 5])
    assert dim_t1(REMARK, d) == dim_t1(REMARK, ([], [4, 5])) == 1


def test_dim_t1_matches_naive_oracle_n3():
    for cx in all_complexes(3):
        for d in all_degrees(3):
            got = dim_t1(cx, d)
            want = naive_dim_t1(cx, d.A, d.b)
            assert got == want, (cx.facets, d)


def test_dim_t1_matches_naive_oracle_remark_all_degrees():
    for d in all_degrees(5):
        assert dim_t1(REMARK, d) == naive_dim_t1(REMARK, d.A, d.b), d


def test_dim_t1_matches_naive_oracle_4_vertex_sample():
    sample = [
        TETRA_SKEL,
        uniform(4, 2),
        SimplicialComplex.from_facets(4, [[1, 2, 3], [3, 4]]),
        SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4]]),
        SimplicialComplex.from_facets(4, [[1], [2], [3], [4]]),
    ]
    for cx in sample:
        for d in all_degrees(4):
            assert dim_t1(cx, d) == naive_dim_t1(cx, d.A, d.b), (cx.facets, d)


# -- nonface degrees -----------------------------------------------------------


def test_dim_t1_nonface_golden():
    assert dim_t1_nonface(uniform(3, 2), [1, 2, 3]) == 1
    assert dim_t1_nonface(uniform(4, 2), [1, 2, 3]) == 0
    lone = SimplicialComplex.from_minimal_nonfaces(3, [[1], [2, 3]])
    assert dim_t1_nonface(lone, [2, 3]) == 1
    assert dim_t1_nonface(lone, [1]) == 0
    assert dim_t1_nonface(lone, [1, 2]) == 0  # nonface but not minimal


def test_dim_t1_nonface_requires_nonface():
    with pytest.raises(ValueError, match="face"):
        dim_t1_nonface(REMARK, [4, 5])


def test_dim_t1_nonface_agrees_with_dim_t1_n3():
    for cx in all_complexes(3):
        for b in powerset([1, 2, 3]):
            if b and not cx.is_face(b):
                assert dim_t1_nonface(cx, b) == dim_t1(cx, ((), b)), (cx.facets, b)


# -- matroid closed form ---------------------------------------------------------


def test_matroid_formula_golden():
    assert dim_t1_matroid_formula(uniform(4, 2), ((), (1,))) == 2
    assert dim_t1_matroid_formula(uniform(4, 2), ((1,), (2,))) == 1
    assert dim_t1_matroid_formula(uniform(4, 2), ((), (1, 2))) == 0
    discrete = uniform(2, 0) * uniform(1, 1)
    for d in all_degrees(3):
        assert dim_t1_matroid_formula(discrete, d) == 0


def test_matroid_formula_rejects_nonmatroid():
    with pytest.raises(NotAMatroidError):
        dim_t1_matroid_formula(REMARK, ((), (1,)))


def test_matroid_formula_agrees_with_graph_on_uniforms():
    for n, k in [(3, 1), (3, 2), (4, 2), (4, 3), (5, 2)]:
        m = uniform(n, k)
        for d in all_degrees(n):
            assert dim_t1_matroid_formula(m, d) == dim_t1(m, d), (n, k, d)


# -- upper bound -----------------------------------------------------------------


def test_upper_bound_golden():
    assert t1_upper_bound(uniform(4, 2), [1]) == 2
    assert t1_upper_bound(uniform(3, 3), [1]) == 0
    # both sides of the min are 2 here; the observed dimension is 1
    assert t1_upper_bound(REMARK, [4, 5]) == 2
    assert dim_t1(REMARK, ((), (4, 5))) <= t1_upper_bound(REMARK, [4, 5])


def test_upper_bound_validation():
    with pytest.raises(ValueError):
        t1_upper_bound(REMARK, [])
    with pytest.raises(ValueError, match="face"):
        t1_upper_bound(REMARK, [1, 2])


def test_upper_bound_dominates_dimension_n3():
    for cx in all_complexes(3):
        for b in powerset([1, 2, 3]):
            if b and cx.is_face(b):
                assert dim_t1(cx, ((), b)) <= t1_upper_bound(cx, b), (cx.facets, b)


def test_upper_bound_tight_for_matroids():
    for m in [uniform(4, 2), uniform(5, 2), uniform(5, 3)]:
        for b in powerset(range(1, m.n + 1)):
            if b and m.is_face(b):
                d = dim_t1(m, ((), b))
                if d > 0:
                    assert d == t1_upper_bound(m, b), (m.facets, b)


# -- tables ------------------------------------------------------------------------


def test_t1_table_u32_all_entries():
    t = t1_table(uniform(3, 2))
    assert dict(t.items()) == {
        MultiDegree((), (1, 2)): 1,
        MultiDegree((), (1, 3)): 1,
        MultiDegree((), (2, 3)): 1,
        MultiDegree((), (1, 2, 3)): 1,
        MultiDegree((1,), (2, 3)): 1,
        MultiDegree((2,), (1, 3)): 1,
        MultiDegree((3,), (1, 2)): 1,
    }


def test_t1_table_discrete_empty():
    assert len(t1_table(uniform(2, 0) * uniform(1, 1))) == 0
    assert len(t1_table(uniform(3, 3))) == 0


def test_t1_table_coloop_doubling():
    t = t1_table(SimplicialComplex.from_facets(3, [[1, 3], [2, 3]]))
    assert dict(t.items()) == {
        MultiDegree((), (1, 2)): 1,
        MultiDegree((3,), (1, 2)): 1,
    }


def test_t1_table_agrees_with_dim_t1():
    cx = REMARK
    t = t1_table(cx)
    for d in all_degrees(5):
        assert t.dim(d) == dim_t1(cx, d), d


def test_t1_table_threads_deterministic():
    cx = uniform(7, 3)  # 64 faces, enough to engage the pool
    assert t1_table(cx, threads=2) == t1_table(cx, threads=1)


def test_t1_table_lookup_and_iteration():
    t = t1_table(uniform(3, 2))
    assert t.dim([], [1, 2]) == 1
    assert t.dim(((), (1, 2))) == 1
    assert t.dim([1], [3]) == 0
    assert ([], [1, 2]) in t
    assert ([1], [3]) not in t
    assert len(t) == 7
    keys = list(t)
    assert keys == sorted(keys, key=lambda d: d.key())


def test_t1_table_validation():
    with pytest.raises(ValueError, match="duplicate"):
        T1Table(3, [(((), (1, 2)), 1), (((), (2, 1)), 2)])
    with pytest.raises(ValueError, match="positive"):
        T1Table(3, [(((), (1,)), 0)])
    with pytest.raises(ValueError, match="nonempty"):
        T1Table(3, [(((1,), ()), 1)])
    with pytest.raises(ValueError, match="range"):
        T1Table(3, [(((), (4,)), 1)])
    with pytest.raises(ValueError):
        T1Table(-1, [])


def test_t1_table_json_roundtrip():
    t = t1_table(uniform(4, 2))
    doc = t.to_json_dict()
    json.dumps(doc)
    assert T1Table.from_json_dict(doc) == t

    with pytest.raises(ValueError, match="'n'"):
        T1Table.from_json_dict({"entries": []})
    with pytest.raises(ValueError, match="'entries'"):
        T1Table.from_json_dict({"n": 3})
    with pytest.raises(ValueError, match="entries\\[0\\].dim"):
        T1Table.from_json_dict({"n": 3, "entries": [{"A": [], "b": [1]}]})
    with pytest.raises(ValueError, match="entries\\[1\\]"):
        T1Table.from_json_dict(
            {"n": 3, "entries": [{"A": [], "b": [1], "dim": 1},
                                 {"A": [2], "b": [2], "dim": 1}]}
        )


def test_t1_table_tsv():
    t = t1_table(SimplicialComplex.from_facets(3, [[1, 3], [2, 3]]))
    assert t.to_tsv() == "A\tb\tdim\n\t1,2\t1\n3\t1,2\t1\n"


def test_t1_table_pickle_and_eq():
    t = t1_table(uniform(3, 2))
    assert pickle.loads(pickle.dumps(t)) == t
    assert t != T1Table(3, [])
    assert t != "not a table"
    assert hash(t) == hash(t1_table(uniform(3, 2)))


# -- bijection ---------------------------------------------------------------------


def test_bijection_check_golden():
    assert bijection_check(uniform(4, 3), [], [1, 2])
    assert bijection_check(uniform(3, 2), [], [1])
    assert bijection_check(uniform(5, 2), [1], [2])


def test_bijection_check_preconditions():
    with pytest.raises(NotAMatroidError):
        bijection_check(REMARK, [], [4])
    with pytest.raises(ValueError, match="face"):
        bijection_check(uniform(3, 1), [1, 2], [3])
    with pytest.raises(ValueError, match="link"):
        bijection_check(uniform(3, 1), [1], [2, 3])
    with pytest.raises(ValueError, match="contained in or disjoint"):
        bijection_check(uniform(4, 2), [], [1, 2])
