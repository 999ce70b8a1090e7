"""Matroid recognition through T1 dimensions.

A complex is a matroid exactly when every singleton degree (0, {v}) has
graph-computed dimension equal to max(#circuits through v - 1, 0), and more
generally exactly when the closed-form circuit expression matches the graph
computation at every degree in the vanishing range.
"""

from __future__ import annotations

from typing import NamedTuple

from .complexes import SimplicialComplex, pack, sort_key, unpack
from .cotangent import (
    MultiDegree,
    _dim_on_faces,
    _formula_on_link,
    _link_face_masks,
    _vertex_mask_of_faces,
)


class Discrepancy(NamedTuple):
    degree: MultiDegree
    graph_dim: int
    formula_dim: int


def is_matroid_via_t1(cx: SimplicialComplex) -> bool:
    """Singleton-degree test: graph dimension vs. circuit count at every (0, {v})."""
    cx._require_nonvoid("is_matroid_via_t1")
    faces = cx.face_masks()
    circuits = cx.minimal_nonface_masks()
    verts = _vertex_mask_of_faces(faces)
    for v in range(cx.n):
        bit = 1 << v
        through = sum(1 for c in circuits if c & bit)
        expected = max(through - 1, 0)
        actual = _dim_on_faces(faces, bit) if bit & verts else 0
        if actual != expected:
            return False
    return True


def formula_discrepancies(cx: SimplicialComplex) -> list[Discrepancy]:
    """Degrees where the graph computation and the circuit formula disagree.

    Scans every face A and every nonempty b within the vertices of the link;
    outside that range both sides are zero.  Empty exactly when cx is a
    matroid.
    """
    cx._require_nonvoid("formula_discrepancies")
    faces = cx.face_masks()
    out = []
    for a in sorted(faces, key=sort_key):
        link_faces = _link_face_masks(faces, a)
        verts = _vertex_mask_of_faces(link_faces)
        sub = verts
        while sub:
            graph_dim = _dim_on_faces(link_faces, sub)
            formula_dim = _formula_on_link(link_faces, cx.n, sub)
            if graph_dim != formula_dim:
                out.append(
                    Discrepancy(MultiDegree.make(unpack(a), unpack(sub)), graph_dim, formula_dim)
                )
            sub = (sub - 1) & verts
    out.sort(key=lambda d: d.degree.key())
    return out
