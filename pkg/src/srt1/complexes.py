"""Abstract simplicial complexes on the ground set {1, ..., n}.

Faces are stored as fixed-width bitmasks (bit v-1 stands for vertex v), so the
ground set is capped at MAX_GROUND vertices.  A complex is represented by its
facets, the inclusion-maximal faces, kept as a canonically sorted antichain.

Two degenerate complexes need care.  The complex {0} (written here as "{emptyset}")
has the empty set as its only face; it arises from an empty facet list and makes
every vertex a loop.  The void complex has no faces at all.  It is never built
by `from_facets` but shows up as the link of a nonface, so it is representable
and flagged by `is_void`; most operations reject it.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

MAX_GROUND = 64


class VertexRangeError(ValueError):
    """A vertex lies outside 1..n, or n exceeds the word-width limit."""


class VoidComplexError(ValueError):
    """The requested operation is undefined on the void complex."""


def pack(vertices: Iterable[int], n: int) -> int:
    """Encode an iterable of 1-based vertices as a bitmask, validating range."""
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or isinstance(v, bool):
            raise VertexRangeError(f"vertex {v!r} is not an integer")
        if not 1 <= v <= n:
            raise VertexRangeError(f"vertex {v} out of range 1..{n}")
        mask |= 1 << (v - 1)
    return mask


def unpack(mask: int) -> tuple[int, ...]:
    """Decode a bitmask into the sorted tuple of its 1-based vertices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical ordering key for faces: cardinality, then lexicographic."""
    return (mask.bit_count(), unpack(mask))


def submasks(mask: int) -> Iterator[int]:
    """All subsets of a bitmask, the full mask first and 0 last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal elements of a family of bitmasks, canonically sorted."""
    out: list[int] = []
    for m in sorted(set(masks), key=lambda x: x.bit_count(), reverse=True):
        if not any(m & ~k == 0 for k in out):
            out.append(m)
    return sorted(out, key=sort_key)


def minimal_nonface_masks(face_set: frozenset[int] | set[int], n: int) -> list[int]:
    """Minimal nonfaces of a downward-closed face family, as bitmasks.

    Sweeps subsets of [n] by ascending cardinality, skipping any set that
    contains an already-found minimal nonface.  Exponential in n; meant for
    desk-scale ground sets.
    """
    found: list[int] = []
    for mask in sorted(range(1 << n), key=lambda x: x.bit_count()):
        if mask in face_set:
            continue
        if any(c & ~mask == 0 for c in found):
            continue
        found.append(mask)
    return sorted(found, key=sort_key)


class SimplicialComplex:
    """A simplicial complex, held as the antichain of its facet bitmasks.

    `facet_masks == ()` encodes the void complex; `facet_masks == (0,)`
    encodes {emptyset}.  Instances are immutable by convention and hashable.
    """

    __slots__ = ("n", "facet_masks", "_faces", "_mnf")

    def __init__(self, n: int, facet_masks: Iterable[int]):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise VertexRangeError(f"ground size {n!r} must be a nonnegative integer")
        if n > MAX_GROUND:
            raise VertexRangeError(f"ground size {n} exceeds limit {MAX_GROUND}")
        masks = list(facet_masks)
        full = (1 << n) - 1
        for m in masks:
            if m & ~full:
                raise VertexRangeError(f"facet {unpack(m)} not within 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "facet_masks", tuple(maximal_masks(masks)))
        object.__setattr__(self, "_faces", None)
        object.__setattr__(self, "_mnf", None)

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    def __reduce__(self):
        # default slot-state pickling would trip the __setattr__ guard
        return (SimplicialComplex, (self.n, self.facet_masks))

    # -- construction -------------------------------------------------

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build a complex from candidate facets; non-maximal entries are absorbed.

        An empty facet list yields the complex {emptyset}, never the void complex.
        """
        masks = [pack(f, n) for f in facets]
        if not masks:
            masks = [0]
        return cls(n, masks)

    @classmethod
    def from_minimal_nonfaces(cls, n: int, nonfaces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build the complex whose faces are the sets containing no listed nonface."""
        forb = [pack(f, n) for f in nonfaces]
        if any(m == 0 for m in forb):
            raise ValueError("the empty set cannot be a nonface")
        faces = [m for m in range(1 << n) if not any(c & ~m == 0 for c in forb)]
        return cls(n, maximal_masks(faces))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        """The void complex on ground size n (no faces at all)."""
        return cls(n, ())

    # -- basic structure ----------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facet_masks

    def _require_nonvoid(self, op: str) -> None:
        if self.is_void:
            raise VoidComplexError(f"{op} is undefined on the void complex")

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        """Facets as sorted vertex tuples, in canonical order."""
        return tuple(unpack(m) for m in self.facet_masks)

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for m in self.facet_masks:
            mask |= m
        return mask

    def vertices(self) -> tuple[int, ...]:
        """The vertices of the complex, i.e. v with {v} a face."""
        return unpack(self.vertex_mask)

    def face_masks(self) -> frozenset[int]:
        """The set of all faces as bitmasks (cached)."""
        if self._faces is None:
            acc: set[int] = set()
            for b in self.facet_masks:
                acc.update(submasks(b))
            object.__setattr__(self, "_faces", frozenset(acc))
        return self._faces

    def faces(self) -> list[tuple[int, ...]]:
        """All faces as vertex tuples, canonically ordered."""
        return [unpack(m) for m in sorted(self.face_masks(), key=sort_key)]

    def is_face_mask(self, mask: int) -> bool:
        if self._faces is not None:
            return mask in self._faces
        return any(mask & ~b == 0 for b in self.facet_masks)

    def is_face(self, F: Iterable[int]) -> bool:
        """Whether F is a face."""
        return self.is_face_mask(pack(F, self.n))

    # -- derived data --------------------------------------------------

    def minimal_nonface_masks(self) -> list[int]:
        if self._mnf is None:
            self._require_nonvoid("minimal_nonfaces")
            object.__setattr__(
                self, "_mnf", minimal_nonface_masks(self.face_masks(), self.n)
            )
        return self._mnf

    def minimal_nonfaces(self) -> list[tuple[int, ...]]:
        """Minimal nonfaces (circuits, when the complex is a matroid)."""
        return [unpack(m) for m in self.minimal_nonface_masks()]

    def rank_of(self, A: Iterable[int]) -> int:
        """Cardinality of the largest face contained in A."""
        self._require_nonvoid("rank_of")
        a = pack(A, self.n)
        return max(f.bit_count() for f in self.face_masks() if f & ~a == 0)

    @property
    def rank(self) -> int:
        """rank_of the full ground set, i.e. the largest face cardinality."""
        self._require_nonvoid("rank")
        return max(m.bit_count() for m in self.facet_masks)

    def loops_and_coloops(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Vertices in no face, and vertices in every facet."""
        self._require_nonvoid("loops_and_coloops")
        full = (1 << self.n) - 1
        loops = full & ~self.vertex_mask
        co = full
        for m in self.facet_masks:
            co &= m
        return unpack(loops), unpack(co)

    # -- constructions -------------------------------------------------

    def link_mask(self, A: int) -> "SimplicialComplex":
        hits = [b & ~A for b in self.facet_masks if b & A == A]
        return SimplicialComplex(self.n, maximal_masks(hits))

    def link(self, F: Iterable[int]) -> "SimplicialComplex":
        """Link of F: all faces G disjoint from F with G u F a face.

        The link of a nonface is the void complex.
        """
        return self.link_mask(pack(F, self.n))

    def restrict(self, W: Iterable[int]) -> "SimplicialComplex":
        """Full subcomplex on the vertex subset W, on the same ground set."""
        w = pack(W, self.n)
        return SimplicialComplex(self.n, maximal_masks(b & w for b in self.facet_masks))

    def delete(self, W: Iterable[int]) -> "SimplicialComplex":
        """Deletion of W, i.e. the restriction to the complement of W."""
        w = pack(W, self.n)
        full = (1 << self.n) - 1
        return SimplicialComplex(self.n, maximal_masks(b & (full & ~w) for b in self.facet_masks))

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Simplicial join, with the other ground set relabeled to follow this one.

        A void operand propagates voidness.
        """
        n = self.n + other.n
        if n > MAX_GROUND:
            raise VertexRangeError(f"joined ground size {n} exceeds limit {MAX_GROUND}")
        shift = self.n
        masks = [f | (g << shift) for f in self.facet_masks for g in other.facet_masks]
        return SimplicialComplex(n, masks)

    def __mul__(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return self.join(other)

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> "SimplicialComplex":
        """Parse {"n": ..., "facets": [...]} or {"n": ..., "minimal_nonfaces": [...]}."""
        if not isinstance(doc, dict):
            raise ValueError("complex document must be a JSON object")
        if "n" not in doc:
            raise ValueError("missing key 'n'")
        n = doc["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError("key 'n': must be a nonnegative integer")
        has_f = "facets" in doc
        has_m = "minimal_nonfaces" in doc
        if has_f and has_m:
            raise ValueError("keys 'facets' and 'minimal_nonfaces' are mutually exclusive")
        if not has_f and not has_m:
            raise ValueError("missing key 'facets' (or 'minimal_nonfaces')")
        key = "facets" if has_f else "minimal_nonfaces"
        sets = doc[key]
        if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
            raise ValueError(f"key '{key}': must be a list of vertex lists")
        try:
            if has_f:
                return cls.from_facets(n, sets)
            return cls.from_minimal_nonfaces(n, sets)
        except ValueError as exc:
            raise ValueError(f"key '{key}': {exc}") from exc

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facet_masks == other.facet_masks

    def __hash__(self) -> int:
        return hash((self.n, self.facet_masks))

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex.void({self.n})"
        return f"SimplicialComplex(n={self.n}, facets={[list(f) for f in self.facets]})"


def boundary_simplex(F: Iterable[int], n: int | None = None) -> SimplicialComplex:
    """Boundary of the simplex on F: all proper subsets of F.

    The ground size defaults to max(F).  boundary_simplex([v]) is {emptyset}
    with v a loop.
    """
    verts = sorted(set(F))
    if not verts:
        raise ValueError("boundary_simplex needs a nonempty vertex set")
    if n is None:
        n = max(verts)
    mask = pack(verts, n)
    facets = [mask & ~(1 << (v - 1)) for v in verts]
    return SimplicialComplex(n, maximal_masks(facets))
