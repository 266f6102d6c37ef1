"""Bounded complexes over A-proj and the homotopy category K^b(A-proj).

Cohomological indexing: differentials raise the degree by one.  Sign
conventions, fixed once and tested against: d_{X[1]}^n = -d_X^{n+1}, and
cone(f)^n = X^{n+1} (+) Y^n with differential [[-d_X^{n+1}, 0], [f^{n+1},
d_Y^n]].  Morphism equality in K^b is equality up to null-homotopy, and
every question about it reduces to one exact linear system over k.
"""

from __future__ import annotations

from .exactlin import Matrix
from .projcat import ProjMorphism, ProjObject, ShapeError, compose, sum_with_maps


class ComplexError(ValueError):
    pass


def _zero_morphism(algebra, src, tgt):
    return ProjMorphism.zero(algebra, src, tgt)


class Complex:
    """A bounded complex of ProjObjects; zero objects are not stored."""

    def __init__(self, algebra, objects, diffs):
        self.algebra = algebra
        self.objects = {n: obj for n, obj in objects.items() if not obj.is_zero()}
        for obj in self.objects.values():
            if obj.algebra is not algebra:
                raise ComplexError("object over a different algebra")
        cleaned = {}
        for n, d in diffs.items():
            if d.is_zero():
                continue
            if d.src != self.object_at(n) or d.tgt != self.object_at(n + 1):
                raise ComplexError(f"differential at degree {n} has wrong shape")
            cleaned[n] = d
        self.diffs = cleaned

    @property
    def support(self):
        return tuple(sorted(self.objects))

    def is_zero(self) -> bool:
        return not self.objects

    @property
    def lo(self):
        return min(self.objects) if self.objects else None

    @property
    def hi(self):
        return max(self.objects) if self.objects else None

    def object_at(self, n: int) -> ProjObject:
        return self.objects.get(n, ProjObject.zero(self.algebra))

    def diff_at(self, n: int) -> ProjMorphism:
        d = self.diffs.get(n)
        if d is None:
            return _zero_morphism(self.algebra, self.object_at(n), self.object_at(n + 1))
        return d

    def validate(self):
        """(ok, first offending degree): checks d^{n+1} o d^n = 0 exactly."""
        for n in sorted(self.diffs):
            if (n + 1) in self.diffs:
                if not compose(self.diffs[n + 1], self.diffs[n]).is_zero():
                    return False, n
        return True, None

    def shift(self, m: int) -> "Complex":
        """X[m]: degree n holds X^{n+m}; differentials pick up (-1)^m."""
        if m == 0:
            return self
        sign = self.algebra.field.one if m % 2 == 0 else -self.algebra.field.one
        objects = {n - m: obj for n, obj in self.objects.items()}
        diffs = {n - m: (d if sign == self.algebra.field.one else d.scale(sign))
                 for n, d in self.diffs.items()}
        return Complex(self.algebra, objects, diffs)

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return (self.algebra is other.algebra and self.objects == other.objects
                and self.diffs == other.diffs)

    def __repr__(self):
        if self.is_zero():
            return "Complex(0)"
        body = ", ".join(f"{n}:{self.objects[n]}" for n in self.support)
        return f"Complex({body})"

    def canonical_key(self):
        """A hashable fingerprint; equal complexes get equal keys."""
        render = self.algebra.field.render
        parts = []
        for n in self.support:
            parts.append((n, self.objects[n].mults))
        for n in sorted(self.diffs):
            d = self.diffs[n]
            entries = []
            for r, row in enumerate(d.entries):
                for c, el in enumerate(row):
                    if el.is_zero():
                        continue
                    body = tuple(sorted(
                        ((p.source, p.target, p.arrows), render(coef))
                        for p, coef in el.coeffs.items()))
                    entries.append((r, c, body))
            parts.append((n, tuple(entries)))
        return tuple(parts)


def stalk(algebra, obj: ProjObject, degree: int = 0) -> Complex:
    return Complex(algebra, {degree: obj}, {})


def indecomposable_stalk(algebra, vertex: int, degree: int = 0) -> Complex:
    return stalk(algebra, ProjObject.indecomposable(algebra, vertex), degree)


class ChainMap:
    """A degreewise morphism commuting with the differentials."""

    def __init__(self, src: Complex, tgt: Complex, components, *, check=True):
        self.src = src
        self.tgt = tgt
        self.algebra = src.algebra
        comps = {}
        for n, f in components.items():
            if f.is_zero():
                continue
            if f.src != src.object_at(n) or f.tgt != tgt.object_at(n):
                raise ComplexError(f"component at degree {n} has wrong shape")
            comps[n] = f
        self.components = comps
        if check and not self.commutes():
            raise ComplexError("components do not commute with the differentials")

    def component_at(self, n: int) -> ProjMorphism:
        f = self.components.get(n)
        if f is None:
            return _zero_morphism(self.algebra, self.src.object_at(n), self.tgt.object_at(n))
        return f

    def commutes(self) -> bool:
        degrees = set(self.components) | set(self.src.diffs) | set(self.tgt.diffs)
        for n in degrees:
            lhs = compose(self.tgt.diff_at(n), self.component_at(n))
            rhs = compose(self.component_at(n + 1), self.src.diff_at(n))
            if lhs != rhs:
                return False
        return True

    def is_zero(self) -> bool:
        return not self.components

    def __add__(self, other):
        self._parallel(other)
        degrees = set(self.components) | set(other.components)
        return ChainMap(self.src, self.tgt, {
            n: self.component_at(n) + other.component_at(n) for n in degrees
        }, check=False)

    def __sub__(self, other):
        self._parallel(other)
        degrees = set(self.components) | set(other.components)
        return ChainMap(self.src, self.tgt, {
            n: self.component_at(n) - other.component_at(n) for n in degrees
        }, check=False)

    def scale(self, scalar):
        return ChainMap(self.src, self.tgt,
                        {n: f.scale(scalar) for n, f in self.components.items()}, check=False)

    def _parallel(self, other):
        if self.src != other.src or self.tgt != other.tgt:
            raise ComplexError("chain maps with different endpoints")

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return NotImplemented
        return (self.src == other.src and self.tgt == other.tgt
                and self.components == other.components)

    def shift(self, m: int) -> "ChainMap":
        return ChainMap(self.src.shift(m), self.tgt.shift(m),
                        {n - m: f for n, f in self.components.items()}, check=False)

    def __repr__(self):
        return f"ChainMap({self.src} -> {self.tgt})"


def identity_chain_map(x: Complex) -> ChainMap:
    return ChainMap(x, x, {n: ProjMorphism.identity(x.algebra, obj)
                           for n, obj in x.objects.items()}, check=False)


def zero_chain_map(src: Complex, tgt: Complex) -> ChainMap:
    return ChainMap(src, tgt, {}, check=False)


def compose_chain_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    """f after g."""
    if f.src != g.tgt:
        raise ComplexError("chain maps not composable")
    degrees = set(f.components) & set(g.components)
    comps = {n: compose(f.component_at(n), g.component_at(n)) for n in degrees}
    return ChainMap(g.src, f.tgt, comps, check=False)


class Homotopy:
    """Degree -1 data s with d s + s d the map it bounds."""

    def __init__(self, src: Complex, tgt: Complex, components):
        self.src = src
        self.tgt = tgt
        self.algebra = src.algebra
        comps = {}
        for n, s in components.items():
            if s.is_zero():
                continue
            if s.src != src.object_at(n) or s.tgt != tgt.object_at(n - 1):
                raise ComplexError(f"homotopy component at degree {n} has wrong shape")
            comps[n] = s
        self.components = comps

    def component_at(self, n: int) -> ProjMorphism:
        s = self.components.get(n)
        if s is None:
            return _zero_morphism(self.algebra, self.src.object_at(n), self.tgt.object_at(n - 1))
        return s

    def boundary(self) -> ChainMap:
        degrees = set()
        for n in self.components:
            degrees.update((n, n - 1))
        degrees |= set(self.src.objects) & set(self.tgt.objects)
        comps = {}
        for n in degrees:
            term1 = compose(self.tgt.diff_at(n - 1), self.component_at(n))
            term2 = compose(self.component_at(n + 1), self.src.diff_at(n))
            comps[n] = term1 + term2
        return ChainMap(self.src, self.tgt, comps, check=False)


class HomCoords:
    """k-coordinates on Hom(src, tgt) for a pair of ProjObjects."""

    def __init__(self, algebra, src: ProjObject, tgt: ProjObject):
        self.algebra = algebra
        self.src = src
        self.tgt = tgt
        slots = []
        for r, tv in enumerate(tgt.slots):
            for c, sv in enumerate(src.slots):
                for path in algebra.hom_basis(sv, tv):
                    slots.append((r, c, path))
        self.slots = tuple(slots)

    @property
    def dim(self):
        return len(self.slots)

    def to_vector(self, morphism: ProjMorphism):
        vec = []
        for r, c, path in self.slots:
            vec.append(morphism.entries[r][c].coefficient(path))
        return vec

    def from_vector(self, vec):
        alg = self.algebra
        entries = [[dict() for _ in range(self.src.num_copies)]
                   for _ in range(self.tgt.num_copies)]
        for (r, c, path), coef in zip(self.slots, vec):
            if coef:
                entries[r][c][path] = coef
        built = [[alg.element(entries[r][c]) for c in range(self.src.num_copies)]
                 for r in range(self.tgt.num_copies)]
        return ProjMorphism(alg, self.src, self.tgt, built)


class GradedCoords:
    """Coordinates on a finite sum of hom spaces indexed by degree."""

    def __init__(self, algebra, pieces):
        self.algebra = algebra
        self.pieces = []
        self.offsets = {}
        total = 0
        for n, src, tgt in pieces:
            hc = HomCoords(algebra, src, tgt)
            if hc.dim == 0:
                continue
            self.offsets[n] = total
            self.pieces.append((n, hc))
            total += hc.dim
        self.dim = total

    def to_vector(self, maps):
        vec = []
        for n, hc in self.pieces:
            m = maps.get(n)
            if m is None:
                vec.extend([self.algebra.field.zero] * hc.dim)
            else:
                vec.extend(hc.to_vector(m))
        return vec

    def from_vector(self, vec):
        out = {}
        for n, hc in self.pieces:
            off = self.offsets[n]
            m = hc.from_vector(vec[off:off + hc.dim])
            if not m.is_zero():
                out[n] = m
        return out

    def basis_single(self, index):
        """The basis vector `index` as a sparse map dict."""
        for n, hc in self.pieces:
            off = self.offsets[n]
            if off <= index < off + hc.dim:
                vec = [self.algebra.field.zero] * hc.dim
                vec[index - off] = self.algebra.field.one
                return {n: hc.from_vector(vec)}
        raise IndexError(index)


def chain_coords(x: Complex, y: Complex) -> GradedCoords:
    degrees = sorted(set(x.objects) & set(y.objects))
    return GradedCoords(x.algebra, [(n, x.object_at(n), y.object_at(n)) for n in degrees])


def chain_output_coords(x: Complex, y: Complex) -> GradedCoords:
    degrees = sorted(n for n in x.objects if (n + 1) in y.objects)
    return GradedCoords(x.algebra, [(n, x.object_at(n), y.object_at(n + 1)) for n in degrees])


def homotopy_coords(x: Complex, y: Complex) -> GradedCoords:
    degrees = sorted(n for n in x.objects if (n - 1) in y.objects)
    return GradedCoords(x.algebra, [(n, x.object_at(n), y.object_at(n - 1)) for n in degrees])


def operator_matrix(in_coords: GradedCoords, out_coords: GradedCoords, fn) -> Matrix:
    """Matrix of a linear operator, assembled by probing basis vectors."""
    field = in_coords.algebra.field
    rows = out_coords.dim
    cols = in_coords.dim
    data = [[field.zero] * cols for _ in range(rows)]
    for k in range(cols):
        maps = in_coords.basis_single(k)
        image = fn(maps)
        vec = out_coords.to_vector(image)
        for i, v in enumerate(vec):
            if v:
                data[i][k] = v
    return Matrix(field, data, cols)


def _chain_condition_fn(x: Complex, y: Complex):
    def fn(maps):
        out = {}
        degrees = set(maps)
        for n in list(degrees):
            degrees.add(n - 1)
        for n in degrees:
            f_n = maps.get(n)
            f_n1 = maps.get(n + 1)
            term = None
            if f_n is not None:
                term = compose(y.diff_at(n), f_n)
            if f_n1 is not None:
                t2 = compose(f_n1, x.diff_at(n))
                term = -t2 if term is None else term - t2
            if term is not None:
                out[n] = term
        return out
    return fn


def _boundary_fn(x: Complex, y: Complex):
    def fn(maps):
        out = {}
        degrees = set(maps)
        for n in list(degrees):
            degrees.add(n - 1)
        for n in degrees:
            s_n = maps.get(n)
            s_n1 = maps.get(n + 1)
            term = None
            if s_n is not None:
                term = compose(y.diff_at(n - 1), s_n)
            if s_n1 is not None:
                t2 = compose(s_n1, x.diff_at(n))
                term = t2 if term is None else term + t2
            if term is not None:
                out[n] = term
        return out
    return fn


def chain_map_basis(x: Complex, y: Complex):
    """A k-basis of the space of honest chain maps x -> y."""
    coords = chain_coords(x, y)
    if coords.dim == 0:
        return []
    out_coords = chain_output_coords(x, y)
    if out_coords.dim == 0:
        kernel = [tuple(x.algebra.field.one if i == k else x.algebra.field.zero
                        for i in range(coords.dim)) for k in range(coords.dim)]
    else:
        op = operator_matrix(coords, out_coords, _chain_condition_fn(x, y))
        kernel = op.kernel_basis()
    return [ChainMap(x, y, coords.from_vector(v), check=False) for v in kernel]


def kb_hom_dim(x: Complex, y: Complex) -> int:
    """dim_k Hom_{K^b}(x, y): chain maps modulo null-homotopic maps."""
    coords = chain_coords(x, y)
    if coords.dim == 0:
        return 0
    out_coords = chain_output_coords(x, y)
    if out_coords.dim == 0:
        cycles = coords.dim
    else:
        op = operator_matrix(coords, out_coords, _chain_condition_fn(x, y))
        cycles = coords.dim - op.rank()
    h_coords = homotopy_coords(x, y)
    if h_coords.dim == 0:
        boundaries = 0
    else:
        h_op = operator_matrix(h_coords, coords, _boundary_fn(x, y))
        boundaries = h_op.rank()
    return cycles - boundaries


def homotopy_solve(f: ChainMap, g: ChainMap):
    """A homotopy s with f - g = d s + s d, or None when none exists."""
    f._parallel(g)
    x, y = f.src, f.tgt
    diff = f - g
    coords = chain_coords(x, y)
    rhs = coords.to_vector(diff.components)
    h_coords = homotopy_coords(x, y)
    if h_coords.dim == 0:
        if any(rhs):
            return None
        return Homotopy(x, y, {})
    h_op = operator_matrix(h_coords, coords, _boundary_fn(x, y))
    solution = h_op.solve(rhs)
    if solution is None:
        return None
    return Homotopy(x, y, h_coords.from_vector(solution))


def is_homotopic(f: ChainMap, g: ChainMap) -> bool:
    return homotopy_solve(f, g) is not None


def is_null_homotopic(f: ChainMap) -> bool:
    return homotopy_solve(f, zero_chain_map(f.src, f.tgt)) is not None


def is_contractible(x: Complex) -> bool:
    return is_null_homotopic(identity_chain_map(x))


def direct_sum(complexes):
    """Degreewise direct sum with inclusion and projection chain maps."""
    algebra = complexes[0].algebra
    degrees = sorted({n for c in complexes for n in c.objects})
    objects = {}
    injections = {n: [] for n in degrees}
    projections = {n: [] for n in degrees}
    for n in degrees:
        total, injs, projs = sum_with_maps([c.object_at(n) for c in complexes])
        objects[n] = total
        injections[n] = injs
        projections[n] = projs
    diffs = {}
    for n in degrees:
        if (n + 1) not in objects:
            continue
        total_n = objects[n]
        total_n1 = objects[n + 1]
        acc = _zero_morphism(algebra, total_n, total_n1)
        for k, c in enumerate(complexes):
            d = c.diff_at(n)
            if d.is_zero():
                continue
            acc = acc + compose(injections[n + 1][k], compose(d, projections[n][k]))
        diffs[n] = acc
    total_complex = Complex(algebra, objects, diffs)
    inj_maps = []
    proj_maps = []
    for k, c in enumerate(complexes):
        inj = ChainMap(c, total_complex,
                       {n: injections[n][k] for n in c.objects}, check=False)
        proj = ChainMap(total_complex, c,
                        {n: projections[n][k] for n in c.objects}, check=False)
        inj_maps.append(inj)
        proj_maps.append(proj)
    return total_complex, inj_maps, proj_maps


class ConeTriangle:
    """cone(f) with the canonical maps Y -> cone(f) -> X[1]."""

    def __init__(self, base_map, complex_, inclusion, projection):
        self.base_map = base_map
        self.complex = complex_
        self.inclusion = inclusion
        self.projection = projection


def cone(f: ChainMap) -> ConeTriangle:
    x, y = f.src, f.tgt
    algebra = f.algebra
    shifted = x.shift(1)
    degrees = sorted(set(shifted.objects) | set(y.objects))
    objects = {}
    inj_u = {}
    inj_y = {}
    proj_u = {}
    proj_y = {}
    for n in degrees:
        total, (iu, iy), (pu, py) = sum_with_maps([shifted.object_at(n), y.object_at(n)])
        objects[n] = total
        inj_u[n], inj_y[n] = iu, iy
        proj_u[n], proj_y[n] = pu, py
    diffs = {}
    for n in degrees:
        if (n + 1) not in objects:
            continue
        acc = _zero_morphism(algebra, objects[n], objects[n + 1])
        d_u = shifted.diff_at(n)          # already carries the -d_X^{n+1} sign
        if not d_u.is_zero():
            acc = acc + compose(inj_u[n + 1], compose(d_u, proj_u[n]))
        f_comp = f.component_at(n + 1)    # X^{n+1} -> Y^{n+1}
        if not f_comp.is_zero():
            acc = acc + compose(inj_y[n + 1], compose(f_comp, proj_u[n]))
        d_y = y.diff_at(n)
        if not d_y.is_zero():
            acc = acc + compose(inj_y[n + 1], compose(d_y, proj_y[n]))
        diffs[n] = acc
    cone_complex = Complex(algebra, objects, diffs)
    inclusion = ChainMap(y, cone_complex,
                         {n: inj_y[n] for n in y.objects}, check=False)
    projection = ChainMap(cone_complex, shifted,
                          {n: proj_u[n] for n in shifted.objects}, check=False)
    return ConeTriangle(f, cone_complex, inclusion, projection)


class Minimalization:
    def __init__(self, minimal, to_minimal, from_minimal):
        self.minimal = minimal
        self.to_minimal = to_minimal
        self.from_minimal = from_minimal


def _find_invertible_entry(x: Complex):
    for n in sorted(x.diffs):
        d = x.diffs[n]
        src_slots = d.src.slots
        tgt_slots = d.tgt.slots
        for r, row in enumerate(d.entries):
            for c, el in enumerate(row):
                if src_slots[c] != tgt_slots[r]:
                    continue
                v = src_slots[c]
                coef = el.coefficient(_trivial(x.algebra, v))
                if coef:
                    return n, r, c, v, coef
    return None


def _trivial(algebra, vertex):
    from .quiver import trivial_path
    return trivial_path(vertex)


def _drop_slot(algebra, obj: ProjObject, slot: int) -> ProjObject:
    mults = list(obj.mults)
    mults[obj.slots[slot] - 1] -= 1
    return ProjObject(algebra, mults)


def _reduce_step(x: Complex, n, r0, c0, vertex, coef):
    """Split off one cone(id_{P_vertex}) across degrees n, n+1."""
    alg = x.algebra
    inv = alg.field.one / coef
    old_n = x.object_at(n)
    old_n1 = x.object_at(n + 1)
    new_n = _drop_slot(alg, old_n, c0)
    new_n1 = _drop_slot(alg, old_n1, r0)
    d = x.diff_at(n)
    keep_cols = [c for c in range(old_n.num_copies) if c != c0]
    keep_rows = [r for r in range(old_n1.num_copies) if r != r0]
    corrected = [[d.entries[s][c] - (d.entries[r0][c] * d.entries[s][c0]).scale(inv)
                  for c in keep_cols] for s in keep_rows]
    objects = dict(x.objects)
    diffs = {m: dd for m, dd in x.diffs.items() if m not in (n - 1, n, n + 1)}
    objects[n] = new_n
    objects[n + 1] = new_n1

    def restrict_rows(m, rows):
        return [m.entries[r] for r in rows]

    if (n - 1) in x.diffs:
        prev = x.diffs[n - 1]
        diffs[n - 1] = ProjMorphism(alg, prev.src, new_n, restrict_rows(prev, keep_cols))
    if new_n.num_copies and new_n1.num_copies:
        diffs[n] = ProjMorphism(alg, new_n, new_n1, corrected)
    if (n + 1) in x.diffs:
        nxt = x.diffs[n + 1]
        entries = [[row[c] for c in keep_rows] for row in nxt.entries]
        diffs[n + 1] = ProjMorphism(alg, new_n1, nxt.tgt, entries)
    reduced = Complex(alg, objects, {m: dd for m, dd in diffs.items() if not dd.is_zero()})

    # projection e: x -> reduced and section f: reduced -> x
    e_comps = {}
    f_comps = {}
    for m, obj in x.objects.items():
        if m == n:
            z = alg.zero()
            e_entries = [[alg.idempotent(old_n.slots[c]) if c == keep_cols[i] else z
                          for c in range(old_n.num_copies)] for i in range(len(keep_cols))]
            e_comps[m] = ProjMorphism(alg, old_n, new_n, e_entries)
            f_entries = []
            for c in range(old_n.num_copies):
                if c == c0:
                    f_entries.append([(d.entries[r0][kc]).scale(-inv) for kc in keep_cols])
                else:
                    i = keep_cols.index(c)
                    f_entries.append([alg.idempotent(old_n.slots[c]) if k == i else z
                                      for k in range(len(keep_cols))])
            f_comps[m] = ProjMorphism(alg, new_n, old_n, f_entries)
        elif m == n + 1:
            z = alg.zero()
            e_entries = []
            for i, r in enumerate(keep_rows):
                row = []
                for rr in range(old_n1.num_copies):
                    if rr == r0:
                        row.append((d.entries[r][c0]).scale(-inv))
                    elif rr == r:
                        row.append(alg.idempotent(old_n1.slots[r]))
                    else:
                        row.append(z)
                e_entries.append(row)
            e_comps[m] = ProjMorphism(alg, old_n1, new_n1, e_entries)
            f_entries = [[alg.idempotent(old_n1.slots[r]) if k == keep_rows.index(r) else z
                          for k in range(len(keep_rows))] if r != r0
                         else [z] * len(keep_rows)
                         for r in range(old_n1.num_copies)]
            f_comps[m] = ProjMorphism(alg, new_n1, old_n1, f_entries)
        else:
            e_comps[m] = ProjMorphism.identity(alg, obj)
            f_comps[m] = ProjMorphism.identity(alg, obj)
    to_reduced = ChainMap(x, reduced, e_comps, check=False)
    from_reduced = ChainMap(reduced, x, f_comps, check=False)
    return reduced, to_reduced, from_reduced


def minimalize(x: Complex) -> Minimalization:
    """Strip contractible cone(id) summands until all differentials are radical."""
    current = x
    to_min = identity_chain_map(x)
    from_min = identity_chain_map(x)
    while True:
        found = _find_invertible_entry(current)
        if found is None:
            break
        reduced, e, f = _reduce_step(current, *found)
        to_min = compose_chain_maps(e, to_min)
        from_min = compose_chain_maps(from_min, f)
        current = reduced
    return Minimalization(current, to_min, from_min)


def is_stalk(x: Complex):
    """(object, degree) when x is homotopy equivalent to a stalk, else None.

    The zero complex counts as the zero stalk at degree 0.
    """
    minimal = minimalize(x).minimal
    if minimal.is_zero():
        return ProjObject.zero(x.algebra), 0
    support = minimal.support
    if len(support) == 1:
        n = support[0]
        return minimal.object_at(n), n
    return None


def kb_is_isomorphism(f: ChainMap) -> bool:
    """f invertible in K^b iff its cone is contractible."""
    return is_contractible(cone(f).complex)


class FillSquare:
    """One constraint post o eta o pre ~ rhs, up to homotopy."""

    def __init__(self, rhs: ChainMap, pre=None, post=None):
        self.pre = pre
        self.post = post
        self.rhs = rhs


class FillInResult:
    def __init__(self, ok, eta=None, uniqueness_dim=None, reason=None):
        self.ok = ok
        self.eta = eta
        self.uniqueness_dim = uniqueness_dim
        self.reason = reason

    def __bool__(self):
        return self.ok


def solve_fill_in(src: Complex, tgt: Complex, squares, *, uniqueness=False) -> FillInResult:
    """Find a chain map eta: src -> tgt satisfying homotopy-commuting squares.

    Unknowns are the components of eta together with one homotopy witness
    per square; everything is one exact linear system.  When `uniqueness`
    is requested, also reports the dimension of the solution set for the
    homotopy class of eta: the kernel's eta-part modulo null-homotopic
    maps.  Dimension zero means the class is pinned by the squares.
    """
    algebra = src.algebra
    field = algebra.field
    eta_coords = chain_coords(src, tgt)
    cond_coords = chain_output_coords(src, tgt)
    cond_fn = _chain_condition_fn(src, tgt)

    square_data = []
    for sq in squares:
        a = sq.pre.src if sq.pre is not None else src
        b = sq.post.tgt if sq.post is not None else tgt
        if sq.rhs.src != a or sq.rhs.tgt != b:
            raise ComplexError("square right-hand side has wrong endpoints")
        out_c = chain_coords(a, b)
        wit_c = homotopy_coords(a, b)
        square_data.append((sq, a, b, out_c, wit_c))

    col_blocks = [eta_coords.dim] + [wd[4].dim for wd in square_data]
    total_cols = sum(col_blocks)
    row_blocks = [cond_coords.dim] + [wd[3].dim for wd in square_data]
    total_rows = sum(row_blocks)

    data = [[field.zero] * total_cols for _ in range(total_rows)]
    rhs_vec = [field.zero] * total_rows

    def write_column(col, row_off, coords, maps):
        vec = coords.to_vector(maps)
        for i, v in enumerate(vec):
            if v:
                data[row_off + i][col] = v

    def l_of_eta(sq, eta_map):
        out = eta_map
        if sq.pre is not None:
            out = compose_chain_maps(out, sq.pre)
        if sq.post is not None:
            out = compose_chain_maps(sq.post, out)
        return out

    # eta columns
    for k in range(eta_coords.dim):
        maps = eta_coords.from_vector(
            [field.one if i == k else field.zero for i in range(eta_coords.dim)])
        eta_map = ChainMap(src, tgt, maps, check=False)
        write_column(k, 0, cond_coords, cond_fn(maps))
        row_off = cond_coords.dim
        for sq, a, b, out_c, _ in square_data:
            write_column(k, row_off, out_c, l_of_eta(sq, eta_map).components)
            row_off += out_c.dim

    # witness columns, block per square
    col_off = eta_coords.dim
    row_off = cond_coords.dim
    for sq, a, b, out_c, wit_c in square_data:
        bfn = _boundary_fn(a, b)
        for k in range(wit_c.dim):
            maps = wit_c.basis_single(k)
            image = bfn(maps)
            vec = out_c.to_vector(image)
            for i, v in enumerate(vec):
                if v:
                    data[row_off + i][col_off + k] = -v
        rhs_part = out_c.to_vector(sq.rhs.components)
        for i, v in enumerate(rhs_part):
            rhs_vec[row_off + i] = v
        col_off += wit_c.dim
        row_off += out_c.dim

    system = Matrix(field, data, total_cols)
    solution = system.solve(rhs_vec)
    if solution is None:
        return FillInResult(False, reason="fill-in system inconsistent")
    eta = ChainMap(src, tgt, eta_coords.from_vector(solution[:eta_coords.dim]), check=False)

    uniq = None
    if uniqueness:
        kernel = system.kernel_basis()
        eta_parts = [v[:eta_coords.dim] for v in kernel]
        h_coords = homotopy_coords(src, tgt)
        boundary_rows = []
        if h_coords.dim and eta_coords.dim:
            h_op = operator_matrix(h_coords, eta_coords, _boundary_fn(src, tgt))
            boundary_rows = [h_op.col(j) for j in range(h_op.ncols)]
        if eta_coords.dim == 0:
            uniq = 0
        else:
            b_rank = Matrix(field, boundary_rows, eta_coords.dim).rank() if boundary_rows else 0
            stacked = list(boundary_rows) + [list(v) for v in eta_parts]
            total_rank = Matrix(field, stacked, eta_coords.dim).rank() if stacked else 0
            uniq = total_rank - b_rank
    return FillInResult(True, eta=eta, uniqueness_dim=uniq)


class KbHomSpace:
    """Hom_{K^b}(x, y) with explicit representatives of a quotient basis."""

    def __init__(self, x: Complex, y: Complex):
        self.x = x
        self.y = y
        self.algebra = x.algebra
        field = self.algebra.field
        self.coords = chain_coords(x, y)
        cycles = chain_map_basis(x, y)
        h_coords = homotopy_coords(x, y)
        boundary_vectors = []
        if h_coords.dim and self.coords.dim:
            h_op = operator_matrix(h_coords, self.coords, _boundary_fn(x, y))
            for j in range(h_op.ncols):
                boundary_vectors.append(list(h_op.col(j)))
        reducer = []  # rref-style row store: list of (pivot, row)

        def reduce_vector(vec):
            vec = list(vec)
            for pivot, row in reducer:
                coef = vec[pivot]
                if coef:
                    vec = [a - coef * b for a, b in zip(vec, row)]
            return vec

        def insert_vector(vec):
            vec = reduce_vector(vec)
            for i, v in enumerate(vec):
                if v:
                    normalized = [a / v for a in vec]
                    reducer.append((i, normalized))
                    return True
            return False

        self.boundary_basis = []
        for vec in boundary_vectors:
            if insert_vector(vec):
                self.boundary_basis.append(vec)
        self.representatives = []
        for cm in cycles:
            vec = self.coords.to_vector(cm.components)
            if insert_vector(vec):
                self.representatives.append(cm)
        self.dim = len(self.representatives)

    def class_coords(self, f: ChainMap):
        """Coordinates of [f] in the chosen quotient basis."""
        field = self.algebra.field
        if self.coords.dim == 0:
            return ()
        columns = [self.coords.to_vector(r.components) for r in self.representatives]
        columns += self.boundary_basis
        mat = Matrix(field, columns, self.coords.dim).transpose()
        target = self.coords.to_vector(f.components)
        solution = mat.solve(target)
        if solution is None:
            raise ComplexError("map is not a chain map into this hom space")
        return tuple(solution[:self.dim])
