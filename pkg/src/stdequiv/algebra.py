"""Finite dimensional path algebras A = kQ/I with exact arithmetic.

The presenting quiver must be acyclic and the relations admissible (each a
combination of parallel paths of length >= 2), so the path basis is finite
and the quotient is computed by one exact elimination over the full path
list.  Elements are kept in normal form: supported on the non-pivot paths
of that elimination.

Grading convention used everywhere downstream: a path p from i to j is an
element of e_j A e_i, and Hom_A(Ae_j, Ae_i) = e_j A e_i, so p is a morphism
P_j -> P_i of left projectives acting by right multiplication.  The product
x*y composes y first.
"""

from __future__ import annotations

from .exactlin import Matrix
from .quiver import Path, Quiver, QuiverError, compose_paths, trivial_path


class PresentationError(ValueError):
    pass


class Relation:
    """A k-linear combination of parallel paths of length >= 2."""

    def __init__(self, terms):
        cleaned = []
        for coef, path in terms:
            if not coef:
                continue
            cleaned.append((coef, path))
        if not cleaned:
            raise PresentationError("empty relation")
        source = cleaned[0][1].source
        target = cleaned[0][1].target
        for _, path in cleaned:
            if path.length < 2:
                raise PresentationError(f"non-admissible relation term {path}: length < 2")
            if path.source != source or path.target != target:
                raise PresentationError("relation terms are not parallel paths")
        self.terms = tuple(cleaned)
        self.source = source
        self.target = target

    def display(self) -> str:
        return element_display({path: coef for coef, path in self.terms})

    def __repr__(self):
        return f"Relation({self.display()})"


def element_display(coeffs, render=str) -> str:
    """Canonical text for a path-coefficient dict: '<c>*<path> +- ...'."""
    if not coeffs:
        return "0"
    parts = []
    for path in sorted(coeffs, key=Path.sort_key):
        token = f"{render(coeffs[path])}*{path.display()}"
        if not parts:
            parts.append(token)
        elif token.startswith("-"):
            parts.append("-")
            parts.append(token[1:])
        else:
            parts.append("+")
            parts.append(token)
    return " ".join(parts)


class AlgebraPresentation:
    """An acyclic quiver, a ground field, and admissible relations."""

    def __init__(self, quiver: Quiver, field, relations=()):
        cycle = quiver.find_cycle()
        if cycle is not None:
            raise PresentationError(f"presenting quiver has an oriented cycle {cycle}")
        self.quiver = quiver
        self.field = field
        self.relations = tuple(Relation(r.terms) if isinstance(r, Relation) else Relation(r)
                               for r in relations)

    def __eq__(self, other):
        if not isinstance(other, AlgebraPresentation):
            return NotImplemented
        return (self.quiver == other.quiver and self.field == other.field
                and [r.terms for r in self.relations] == [r.terms for r in other.relations])


class AlgebraElement:
    """An element of A in normal form: a dict basis-path -> scalar."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = {p: c for p, c in coeffs.items() if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, path: Path):
        return self.coeffs.get(path, self.algebra.field.zero)

    def piece(self):
        """(target, source) grading when homogeneous; None for 0 or mixed."""
        pieces = {(p.target, p.source) for p in self.coeffs}
        if len(pieces) == 1:
            return next(iter(pieces))
        return None

    def lies_in_piece(self, target: int, source: int) -> bool:
        return all(p.target == target and p.source == source for p in self.coeffs)

    def _binop(self, other, op):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.algebra is not self.algebra:
            raise ValueError("elements of different algebras")
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = op(out.get(p, self.algebra.field.zero), c)
        return AlgebraElement(self.algebra, out)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __neg__(self):
        return AlgebraElement(self.algebra, {p: -c for p, c in self.coeffs.items()})

    def scale(self, scalar):
        return AlgebraElement(self.algebra, {p: scalar * c for p, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra.multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def display(self) -> str:
        return element_display(self.coeffs, render=self.algebra.field.render)

    def __repr__(self):
        return self.display()


class Algebra:
    """The quotient algebra with its path basis and graded hom spaces."""

    def __init__(self, presentation: AlgebraPresentation):
        self.presentation = presentation
        self.quiver = presentation.quiver
        self.field = presentation.field
        self.paths = tuple(self.quiver.enumerate_paths())
        self.path_index = {p: i for i, p in enumerate(self.paths)}
        self._pivot_reductions = self._eliminate_ideal()
        self.basis = tuple(p for p in self.paths if p not in self._pivot_reductions)
        self.basis_index = {p: i for i, p in enumerate(self.basis)}
        self._hom_bases = {}
        for p in self.basis:
            self._hom_bases.setdefault((p.target, p.source), []).append(p)
        self._product_cache = {}

    def _ideal_generators(self):
        """Path-coefficient dicts spanning the two-sided ideal."""
        by_target = {}
        by_source = {}
        for p in self.paths:
            by_target.setdefault(p.target, []).append(p)
            by_source.setdefault(p.source, []).append(p)
        generators = []
        for rel in self.presentation.relations:
            lefts = by_source.get(rel.target, [trivial_path(rel.target)])
            rights = by_target.get(rel.source, [trivial_path(rel.source)])
            for left in lefts:
                for right in rights:
                    gen = {}
                    for coef, mid in rel.terms:
                        whole = compose_paths(left, compose_paths(mid, right))
                        gen[whole] = gen.get(whole, self.field.zero) + coef
                    if any(c for c in gen.values()):
                        generators.append(gen)
        return generators

    def _eliminate_ideal(self):
        generators = self._ideal_generators()
        if not generators:
            return {}
        zero = self.field.zero
        rows = []
        for gen in generators:
            row = [zero] * len(self.paths)
            for p, c in gen.items():
                row[self.path_index[p]] = c
            rows.append(row)
        reduced, pivots = Matrix(self.field, rows).rref()
        reductions = {}
        for r, pc in enumerate(pivots):
            rest = {}
            for c in range(len(self.paths)):
                if c == pc:
                    continue
                val = reduced.data[r][c]
                if val:
                    rest[self.paths[c]] = -val
            reductions[self.paths[pc]] = rest
        return reductions

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def num_vertices(self) -> int:
        return self.quiver.num_vertices

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def element(self, coeffs) -> AlgebraElement:
        """Normal form of an arbitrary path-coefficient dict."""
        out = {}
        for path, coef in coeffs.items():
            if not coef:
                continue
            if path not in self.path_index:
                raise ValueError(f"path {path} does not live on the presenting quiver")
            reduction = self._pivot_reductions.get(path)
            if reduction is None:
                out[path] = out.get(path, self.field.zero) + coef
            else:
                for q, c in reduction.items():
                    out[q] = out.get(q, self.field.zero) + coef * c
        return AlgebraElement(self, out)

    def idempotent(self, vertex: int) -> AlgebraElement:
        return AlgebraElement(self, {trivial_path(vertex): self.field.one})

    def unit(self) -> AlgebraElement:
        return AlgebraElement(self, {trivial_path(v): self.field.one for v in self.quiver.vertices})

    def path_element(self, path: Path) -> AlgebraElement:
        return self.element({path: self.field.one})

    def arrow_element(self, label: str) -> AlgebraElement:
        arrow = self.quiver.arrow_by_label[label]
        return self.path_element(Path(arrow.source, arrow.target, (label,)))

    def _basis_product(self, p: Path, q: Path):
        """Normal form of p*q for basis paths, cached."""
        key = (p, q)
        cached = self._product_cache.get(key)
        if cached is None:
            if p.source != q.target:
                cached = {}
            else:
                cached = self.element({compose_paths(p, q): self.field.one}).coeffs
            self._product_cache[key] = cached
        return cached

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("elements of a different algebra")
        out = {}
        for p, a in x.coeffs.items():
            for q, b in y.coeffs.items():
                prod = self._basis_product(p, q)
                if not prod:
                    continue
                ab = a * b
                for r, c in prod.items():
                    out[r] = out.get(r, self.field.zero) + ab * c
        return AlgebraElement(self, out)

    def hom_basis(self, i: int, j: int):
        """Basis paths of e_i A e_j, i.e. of Hom(P_i, P_j): paths j -> i."""
        return tuple(self._hom_bases.get((i, j), ()))

    def dim_hom(self, i: int, j: int) -> int:
        return len(self._hom_bases.get((i, j), ()))

    def projective_basis(self, vertex: int):
        """Basis paths of the projective P_vertex = A e_vertex."""
        return tuple(p for p in self.basis if p.source == vertex)

    def radical_multiplicities(self):
        """dim e_j (rad/rad^2) e_i per ordered pair (i, j), nonzero entries only."""
        out = {}
        n = self.num_vertices
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                piece = self._hom_bases.get((j, i), ())
                rad_basis = [p for p in piece if p.length >= 1]
                if not rad_basis:
                    continue
                index = {p: k for k, p in enumerate(rad_basis)}
                rows = []
                for p in self.paths:
                    if p.source != i or p.target != j or p.length < 2:
                        continue
                    nf = self.element({p: self.field.one})
                    row = [self.field.zero] * len(rad_basis)
                    for q, c in nf.coeffs.items():
                        row[index[q]] = c
                    rows.append(row)
                rad2_rank = Matrix(self.field, rows).rank() if rows else 0
                mult = len(rad_basis) - rad2_rank
                if mult:
                    out[(i, j)] = mult
        return out

    def ext_quiver(self) -> Quiver:
        """The Ext-quiver: one arrow i -> j per pair with rad/rad^2 piece nonzero."""
        mults = self.radical_multiplicities()
        arrows = [(f"x{i}_{j}", i, j) for (i, j) in sorted(mults)]
        return Quiver(self.num_vertices, arrows)

    def is_triangular(self) -> bool:
        return self.ext_quiver().is_acyclic()


def build_algebra(presentation: AlgebraPresentation) -> Algebra:
    return Algebra(presentation)


class Automorphism:
    """An algebra map fixed by images of the idempotents and the arrows.

    The idempotents must be permuted on the nose: vertex_images is the
    permutation pi with sigma(e_i) = e_{pi(i)}.
    """

    def __init__(self, algebra: Algebra, vertex_images, arrow_images):
        self.algebra = algebra
        self.vertex_images = tuple(vertex_images)
        n = algebra.num_vertices
        if sorted(self.vertex_images) != list(range(1, n + 1)):
            raise PresentationError(f"vertex images {self.vertex_images} are not a permutation of 1..{n}")
        self.arrow_images = {}
        for arrow in algebra.quiver.arrows:
            image = arrow_images[arrow.label]
            expected = (self.vertex_images[arrow.target - 1], self.vertex_images[arrow.source - 1])
            if not image.lies_in_piece(*expected):
                raise PresentationError(
                    f"image of arrow {arrow.label} must lie in the graded piece "
                    f"e_{expected[0]} A e_{expected[1]}")
            self.arrow_images[arrow.label] = image

    def vertex_image(self, v: int) -> int:
        return self.vertex_images[v - 1]

    def apply_path(self, path: Path) -> AlgebraElement:
        acc = self.algebra.idempotent(self.vertex_image(path.source))
        for label in path.arrows:
            acc = self.arrow_images[label] * acc
        return acc

    def apply(self, element: AlgebraElement) -> AlgebraElement:
        out = self.algebra.zero()
        for path, coef in element.coeffs.items():
            out = out + self.apply_path(path).scale(coef)
        return out

    def matrix(self) -> Matrix:
        """k-matrix of the induced linear map on the algebra basis."""
        alg = self.algebra
        cols = []
        for p in alg.basis:
            image = self.apply_path(p)
            cols.append([image.coefficient(q) for q in alg.basis])
        return Matrix(alg.field, cols).transpose()

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other."""
        if other.algebra is not self.algebra:
            raise ValueError("automorphisms of different algebras")
        vertex_images = tuple(self.vertex_image(other.vertex_image(v))
                              for v in self.algebra.quiver.vertices)
        arrow_images = {label: self.apply(img) for label, img in other.arrow_images.items()}
        return Automorphism(self.algebra, vertex_images, arrow_images)

    def inverse(self) -> "Automorphism":
        alg = self.algebra
        inv_matrix = self.matrix().inverse()
        if inv_matrix is None:
            raise ValueError("automorphism is not invertible")
        inv_vertices = [0] * alg.num_vertices
        for v in alg.quiver.vertices:
            inv_vertices[self.vertex_image(v) - 1] = v
        arrow_images = {}
        for arrow in alg.quiver.arrows:
            el = alg.arrow_element(arrow.label)
            vec = [el.coefficient(q) for q in alg.basis]
            pre = inv_matrix.apply(vec)
            arrow_images[arrow.label] = AlgebraElement(
                alg, {p: c for p, c in zip(alg.basis, pre)})
        return Automorphism(alg, tuple(inv_vertices), arrow_images)

    @classmethod
    def identity(cls, algebra: Algebra) -> "Automorphism":
        return cls(algebra, tuple(algebra.quiver.vertices),
                   {a.label: algebra.arrow_element(a.label) for a in algebra.quiver.arrows})

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return (self.algebra is other.algebra
                and self.vertex_images == other.vertex_images
                and self.arrow_images == other.arrow_images)

    def __repr__(self):
        imgs = ", ".join(f"{lab}->{el.display()}" for lab, el in sorted(self.arrow_images.items()))
        return f"Automorphism(pi={self.vertex_images}, {imgs})"


class AutomorphismReport:
    def __init__(self, ok: bool, vertex_permutation, failures):
        self.ok = ok
        self.vertex_permutation = vertex_permutation
        self.failures = tuple(failures)

    def __bool__(self):
        return self.ok

    def __repr__(self):
        status = "ok" if self.ok else "; ".join(self.failures)
        return f"AutomorphismReport({status})"


def check_automorphism(algebra: Algebra, automorphism: Automorphism) -> AutomorphismReport:
    """Verify sigma respects the relations, is unital, and is invertible."""
    failures = []
    if automorphism.algebra is not algebra:
        return AutomorphismReport(False, None, ["automorphism belongs to a different algebra"])
    total = algebra.zero()
    for v in algebra.quiver.vertices:
        total = total + algebra.idempotent(automorphism.vertex_image(v))
    if total != algebra.unit():
        failures.append("images of the idempotents do not sum to 1")
    for rel in algebra.presentation.relations:
        image = algebra.zero()
        for coef, path in rel.terms:
            image = image + automorphism.apply_path(path).scale(coef)
        if not image.is_zero():
            failures.append(f"relation {rel.display()} maps to {image.display()} != 0")
    if not automorphism.matrix().is_invertible():
        failures.append("induced linear map on the basis is not invertible")
    ok = not failures
    return AutomorphismReport(ok, automorphism.vertex_images if ok else None, failures)
