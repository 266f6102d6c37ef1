"""The additive category A-proj: formal sums of projectives and block
morphisms, plus the degree function and the Orlov-category checks.

Objects are multiplicity vectors over the indecomposables P_1..P_n (legal
because A-proj is Krull-Schmidt).  A morphism is a block matrix whose
(row r, col c) entry lies in e_{v(c)} A e_{v(r)} where v(c) is the vertex
of the source copy and v(r) the vertex of the target copy; the entry acts
by right multiplication.  Composition of maps corresponds to the algebra
product with the first-applied map's entry on the left:
(f after g)[s][c] = sum_r g[r][c] * f[s][r].
"""

from __future__ import annotations

from .algebra import Algebra, AlgebraElement
from .exactlin import Matrix
from .quiver import CyclicQuiverError


class ShapeError(ValueError):
    pass


class ProjObject:
    """A formal direct sum of indecomposable projectives."""

    __slots__ = ("algebra", "mults", "_slots")

    def __init__(self, algebra: Algebra, mults):
        mults = tuple(int(m) for m in mults)
        if len(mults) != algebra.num_vertices:
            raise ShapeError(f"expected {algebra.num_vertices} multiplicities, got {len(mults)}")
        if any(m < 0 for m in mults):
            raise ShapeError("negative multiplicity")
        self.algebra = algebra
        self.mults = mults
        slots = []
        for v, m in enumerate(mults, start=1):
            slots.extend([v] * m)
        self._slots = tuple(slots)

    @classmethod
    def zero(cls, algebra: Algebra) -> "ProjObject":
        return cls(algebra, (0,) * algebra.num_vertices)

    @classmethod
    def indecomposable(cls, algebra: Algebra, vertex: int) -> "ProjObject":
        mults = [0] * algebra.num_vertices
        mults[vertex - 1] = 1
        return cls(algebra, mults)

    @property
    def slots(self):
        """Vertex of each copy, ordered by vertex then copy index."""
        return self._slots

    @property
    def num_copies(self) -> int:
        return len(self._slots)

    def is_zero(self) -> bool:
        return not self._slots

    def k_dim(self) -> int:
        return sum(len(self.algebra.projective_basis(v)) for v in self._slots)

    def __add__(self, other):
        if not isinstance(other, ProjObject):
            return NotImplemented
        if other.algebra is not self.algebra:
            raise ValueError("objects over different algebras")
        return ProjObject(self.algebra, tuple(a + b for a, b in zip(self.mults, other.mults)))

    def __eq__(self, other):
        if not isinstance(other, ProjObject):
            return NotImplemented
        return self.algebra is other.algebra and self.mults == other.mults

    def __hash__(self):
        return hash((id(self.algebra), self.mults))

    def summand_display(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for v, m in enumerate(self.mults, start=1):
            if m == 1:
                parts.append(f"P{v}")
            elif m > 1:
                parts.append(f"{m}P{v}")
        return "+".join(parts)

    def __repr__(self):
        return self.summand_display()


def sum_with_maps(objects):
    """Direct sum of ProjObjects with the canonical injections/projections."""
    if not objects:
        raise ValueError("empty direct sum")
    algebra = objects[0].algebra
    total = ProjObject(algebra, (0,) * algebra.num_vertices)
    for obj in objects:
        total = total + obj
    # slot of copy (v, k) in the sum: copies are grouped by vertex, summand
    # blocks keep their relative order inside each vertex group.
    offsets = []
    seen = [0] * algebra.num_vertices
    for obj in objects:
        offsets.append(tuple(seen))
        seen = [s + m for s, m in zip(seen, obj.mults)]
    base = [0] * (algebra.num_vertices + 1)
    for v in range(1, algebra.num_vertices + 1):
        base[v] = base[v - 1] + total.mults[v - 1]
    injections = []
    projections = []
    for obj, offset in zip(objects, offsets):
        inj = ProjMorphism.zero(algebra, obj, total)
        proj = ProjMorphism.zero(algebra, total, obj)
        inj_entries = [list(row) for row in inj.entries]
        proj_entries = [list(row) for row in proj.entries]
        local = 0
        counters = list(offset)
        for v in obj.slots:
            global_slot = base[v - 1] + counters[v - 1]
            counters[v - 1] += 1
            e = algebra.idempotent(v)
            inj_entries[global_slot][local] = e
            proj_entries[local][global_slot] = e
            local += 1
        injections.append(ProjMorphism(algebra, obj, total, inj_entries))
        projections.append(ProjMorphism(algebra, total, obj, proj_entries))
    return total, injections, projections


class ProjMorphism:
    """A block matrix of algebra elements between two ProjObjects."""

    __slots__ = ("algebra", "src", "tgt", "entries", "_expanded")

    def __init__(self, algebra: Algebra, src: ProjObject, tgt: ProjObject, entries):
        self.algebra = algebra
        self.src = src
        self.tgt = tgt
        rows = tuple(tuple(row) for row in entries)
        if len(rows) != tgt.num_copies or any(len(r) != src.num_copies for r in rows):
            raise ShapeError(f"entry grid must be {tgt.num_copies} x {src.num_copies}")
        for r, row in enumerate(rows):
            for c, el in enumerate(row):
                if el.algebra is not algebra:
                    raise ValueError("entry from a different algebra")
                if not el.lies_in_piece(src.slots[c], tgt.slots[r]):
                    raise ShapeError(
                        f"entry ({r},{c}) must lie in e_{src.slots[c]} A e_{tgt.slots[r]}")
        self.entries = rows
        self._expanded = None

    @classmethod
    def zero(cls, algebra: Algebra, src: ProjObject, tgt: ProjObject) -> "ProjMorphism":
        z = algebra.zero()
        return cls(algebra, src, tgt,
                   [[z] * src.num_copies for _ in range(tgt.num_copies)])

    @classmethod
    def identity(cls, algebra: Algebra, obj: ProjObject) -> "ProjMorphism":
        z = algebra.zero()
        entries = [[z] * obj.num_copies for _ in range(obj.num_copies)]
        for k, v in enumerate(obj.slots):
            entries[k][k] = algebra.idempotent(v)
        return cls(algebra, obj, obj, entries)

    @classmethod
    def of_element(cls, element: AlgebraElement) -> "ProjMorphism":
        """The 1x1 morphism P_t -> P_s of a homogeneous element of e_t A e_s."""
        piece = element.piece()
        if piece is None:
            raise ShapeError("need a nonzero homogeneous element")
        t, s = piece
        src = ProjObject.indecomposable(element.algebra, t)
        tgt = ProjObject.indecomposable(element.algebra, s)
        return cls(element.algebra, src, tgt, [[element]])

    def entry(self, r: int, c: int) -> AlgebraElement:
        return self.entries[r][c]

    def is_zero(self) -> bool:
        return all(el.is_zero() for row in self.entries for el in row)

    def __add__(self, other):
        self._parallel_check(other)
        return ProjMorphism(self.algebra, self.src, self.tgt, [
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)
        ])

    def __sub__(self, other):
        self._parallel_check(other)
        return ProjMorphism(self.algebra, self.src, self.tgt, [
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)
        ])

    def __neg__(self):
        return ProjMorphism(self.algebra, self.src, self.tgt,
                            [[-a for a in row] for row in self.entries])

    def scale(self, scalar) -> "ProjMorphism":
        return ProjMorphism(self.algebra, self.src, self.tgt,
                            [[a.scale(scalar) for a in row] for row in self.entries])

    def _parallel_check(self, other):
        if not isinstance(other, ProjMorphism):
            raise TypeError("expected a ProjMorphism")
        if other.src != self.src or other.tgt != self.tgt:
            raise ShapeError("morphisms with different source or target")

    def __eq__(self, other):
        if not isinstance(other, ProjMorphism):
            return NotImplemented
        return (self.src == other.src and self.tgt == other.tgt
                and self.entries == other.entries)

    def __repr__(self):
        return f"ProjMorphism({self.src} -> {self.tgt})"

    def expand(self) -> Matrix:
        """The morphism as a k-matrix on the path bases of the projectives."""
        if self._expanded is not None:
            return self._expanded
        alg = self.algebra
        src_bases = [alg.projective_basis(v) for v in self.src.slots]
        tgt_bases = [alg.projective_basis(v) for v in self.tgt.slots]
        tgt_offsets = []
        total_rows = 0
        tgt_pos = []
        for basis in tgt_bases:
            tgt_offsets.append(total_rows)
            tgt_pos.append({p: k for k, p in enumerate(basis)})
            total_rows += len(basis)
        total_cols = sum(len(b) for b in src_bases)
        zero = alg.field.zero
        data = [[zero] * total_cols for _ in range(total_rows)]
        col = 0
        for c, basis in enumerate(src_bases):
            for p in basis:
                pel = alg.path_element(p)
                for r in range(self.tgt.num_copies):
                    el = self.entries[r][c]
                    if el.is_zero():
                        continue
                    image = pel * el
                    off = tgt_offsets[r]
                    pos = tgt_pos[r]
                    for q, coef in image.coeffs.items():
                        data[off + pos[q]][col] = coef
                col += 1
        self._expanded = Matrix(alg.field, data)
        return self._expanded

    def is_isomorphism(self) -> bool:
        """Invertibility, decided on the expanded k-matrix."""
        mat = self.expand()
        return mat.nrows == mat.ncols and mat.is_invertible()


def compose(f: ProjMorphism, g: ProjMorphism) -> ProjMorphism:
    """The composite f after g; requires src(f) = tgt(g)."""
    if f.algebra is not g.algebra:
        raise ValueError("morphisms over different algebras")
    if f.src != g.tgt:
        raise ShapeError(f"cannot compose: f has source {f.src}, g has target {g.tgt}")
    alg = f.algebra
    out = []
    for s in range(f.tgt.num_copies):
        row = []
        frow = f.entries[s]
        for c in range(g.src.num_copies):
            acc = alg.zero()
            for r in range(g.tgt.num_copies):
                ge = g.entries[r][c]
                fe = frow[r]
                if ge.is_zero() or fe.is_zero():
                    continue
                acc = acc + ge * fe
            row.append(acc)
        out.append(row)
    return ProjMorphism(alg, g.src, f.tgt, out)


class DegreeFunction:
    """Degrees of the indecomposable projectives."""

    def __init__(self, degrees):
        self.degrees = tuple(int(d) for d in degrees)

    @classmethod
    def from_algebra(cls, algebra: Algebra) -> "DegreeFunction":
        """The source-layer degrees of the Ext-quiver."""
        try:
            layering = algebra.ext_quiver().source_layers()
        except CyclicQuiverError as exc:
            raise ValueError("degree function needs a triangular algebra") from exc
        return cls(layering.degrees)

    def degree(self, vertex: int) -> int:
        return self.degrees[vertex - 1]

    def __eq__(self, other):
        if not isinstance(other, DegreeFunction):
            return NotImplemented
        return self.degrees == other.degrees

    def __repr__(self):
        return f"DegreeFunction{self.degrees}"


def bricky_check(algebra: Algebra) -> bool:
    """Each End(P_i) must be one dimensional over k."""
    return all(algebra.dim_hom(i, i) == 1 for i in algebra.quiver.vertices)


class OrlovCertificate:
    def __init__(self, ok, bricky_ok, pairs, witnesses):
        self.ok = ok
        self.bricky_ok = bricky_ok
        self.pairs = tuple(pairs)
        self.witnesses = tuple(witnesses)

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"OrlovCertificate(ok={self.ok}, pairs={len(self.pairs)})"


def orlov_check(algebra: Algebra, deg: DegreeFunction) -> OrlovCertificate:
    """Check the Orlov property: nonzero homs strictly drop the degree.

    The certificate records every ordered pair (i, j) with its hom
    dimension and degrees, and the failing pairs as witnesses.
    """
    bricky_ok = bricky_check(algebra)
    pairs = []
    witnesses = []
    for i in algebra.quiver.vertices:
        for j in algebra.quiver.vertices:
            if i == j:
                continue
            hom_dim = algebra.dim_hom(i, j)
            pair_ok = hom_dim == 0 or deg.degree(i) > deg.degree(j)
            pairs.append((i, j, hom_dim, deg.degree(i), deg.degree(j), pair_ok))
            if not pair_ok:
                witnesses.append((i, j))
    return OrlovCertificate(bricky_ok and not witnesses, bricky_ok, pairs, witnesses)


class ObjectDegree:
    """Homogeneity verdict for an object: kind is homogeneous/mixed/zero."""

    def __init__(self, kind, value=None):
        self.kind = kind
        self.value = value

    @property
    def is_homogeneous(self):
        return self.kind == "homogeneous"

    def __eq__(self, other):
        if not isinstance(other, ObjectDegree):
            return NotImplemented
        return self.kind == other.kind and self.value == other.value

    def __repr__(self):
        return f"ObjectDegree({self.kind}, {self.value})"


def degree_of_object(obj: ProjObject, deg: DegreeFunction) -> ObjectDegree:
    present = {deg.degree(v) for v, m in enumerate(obj.mults, start=1) if m > 0}
    if not present:
        return ObjectDegree("zero")
    if len(present) == 1:
        return ObjectDegree("homogeneous", next(iter(present)))
    return ObjectDegree("mixed")


def homogeneity_check(functor, deg: DegreeFunction) -> bool:
    """True iff F sends each P_i to a homogeneous object of the same degree.

    Only needs the functor's object map, so any presentation-like object
    with an `object_image(i)` method works.
    """
    algebra = functor.algebra
    for i in algebra.quiver.vertices:
        verdict = degree_of_object(functor.object_image(i), deg)
        if not (verdict.is_homogeneous and verdict.value == deg.degree(i)):
            return False
    return True
