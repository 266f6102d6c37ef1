import random

import pytest

from stdequiv.exactlin import QQ
from stdequiv.projcat import (
    DegreeFunction,
    ProjMorphism,
    ProjObject,
    ShapeError,
    bricky_check,
    compose,
    degree_of_object,
    orlov_check,
    sum_with_maps,
)


def morphism_of_path(alg, display):
    for p in alg.basis:
        if p.display() == display:
            return ProjMorphism.of_element(alg.path_element(p))
    raise KeyError(display)


class TestObjects:
    def test_slots_ordering(self, kronecker):
        x = ProjObject(kronecker, (2, 1))
        assert x.slots == (1, 1, 2)
        assert x.num_copies == 3
        assert not x.is_zero()
        assert ProjObject.zero(kronecker).is_zero()

    def test_direct_sum(self, a2):
        p1 = ProjObject.indecomposable(a2, 1)
        p2 = ProjObject.indecomposable(a2, 2)
        assert (p1 + p2).mults == (1, 1)

    def test_sum_with_maps_identities(self, commsquare):
        x = ProjObject(commsquare, (1, 0, 2, 0))
        y = ProjObject(commsquare, (0, 1, 1, 1))
        total, (ix, iy), (px, py) = sum_with_maps([x, y])
        assert total.mults == (1, 1, 3, 1)
        assert compose(px, ix) == ProjMorphism.identity(commsquare, x)
        assert compose(py, iy) == ProjMorphism.identity(commsquare, y)
        assert compose(px, iy).is_zero()
        recomposed = compose(ix, px) + compose(iy, py)
        assert recomposed == ProjMorphism.identity(commsquare, total)


class TestComposition:
    def test_identity_laws(self, a2):
        f = morphism_of_path(a2, "a")
        assert compose(ProjMorphism.identity(a2, f.tgt), f) == f
        assert compose(f, ProjMorphism.identity(a2, f.src)) == f

    def test_shape_mismatch(self, a2):
        f = morphism_of_path(a2, "a")
        with pytest.raises(ShapeError):
            compose(f, f)

    def test_relation_kills_composite(self, a3rel):
        f = morphism_of_path(a3rel, "b")  # P3 -> P2
        g = morphism_of_path(a3rel, "a")  # P2 -> P1
        assert f.src == ProjObject.indecomposable(a3rel, 3)
        assert g.tgt == ProjObject.indecomposable(a3rel, 1)
        assert compose(g, f).is_zero()

    def test_associative_on_random_triples(self, commsquare):
        rng = random.Random(551)
        alg = commsquare
        objs = [ProjObject(alg, tuple(rng.randint(0, 2) for _ in range(4))) for _ in range(4)]

        def random_morphism(src, tgt):
            entries = []
            for r in range(tgt.num_copies):
                row = []
                for c in range(src.num_copies):
                    el = alg.zero()
                    for p in alg.hom_basis(src.slots[c], tgt.slots[r]):
                        el = el + alg.path_element(p).scale(QQ(rng.randint(-2, 2)))
                    row.append(el)
                entries.append(row)
            return ProjMorphism(alg, src, tgt, entries)

        for _ in range(12):
            f = random_morphism(objs[2], objs[3])
            g = random_morphism(objs[1], objs[2])
            h = random_morphism(objs[0], objs[1])
            assert compose(compose(f, g), h) == compose(f, compose(g, h))


class TestIsomorphism:
    def test_identity(self, a2):
        obj = ProjObject(a2, (1, 1))
        assert ProjMorphism.identity(a2, obj).is_isomorphism()

    def test_zero_endomorphism(self, a2):
        p1 = ProjObject.indecomposable(a2, 1)
        assert not ProjMorphism.zero(a2, p1, p1).is_isomorphism()

    def test_scalar_multiple(self, a2):
        obj = ProjObject(a2, (1, 1))
        f = ProjMorphism.identity(a2, obj).scale(QQ(5))
        assert f.is_isomorphism()

    def test_non_square_shape(self, a2):
        f = morphism_of_path(a2, "a")
        assert not f.is_isomorphism()


class TestDegrees:
    @pytest.mark.parametrize("name,expected", [
        ("a2", (0, 1)),
        ("a3rel", (0, 1, 2)),
        ("kronecker", (0, 1)),
        ("commsquare", (0, 1, 1, 2)),
    ])
    def test_source_layer_degrees(self, name, expected, request):
        alg = request.getfixturevalue(name)
        assert DegreeFunction.from_algebra(alg).degrees == expected

    def test_degree_of_object(self, a2):
        deg = DegreeFunction.from_algebra(a2)
        p1 = ProjObject.indecomposable(a2, 1)
        p2 = ProjObject.indecomposable(a2, 2)
        assert degree_of_object(p1, deg) .value == 0
        assert degree_of_object(p1 + p2, deg).kind == "mixed"
        assert degree_of_object(p2 + p2, deg).value == 1
        assert degree_of_object(ProjObject.zero(a2), deg).kind == "zero"


class TestOrlov:
    @pytest.mark.parametrize("name", ["a2", "a3rel", "kronecker", "commsquare"])
    def test_fixture_is_orlov(self, name, request):
        alg = request.getfixturevalue(name)
        assert bricky_check(alg)
        cert = orlov_check(alg, DegreeFunction.from_algebra(alg))
        assert cert.ok
        n = alg.num_vertices
        assert len(cert.pairs) == n * (n - 1)

    def test_a3_pairs_exhaustive(self, a3rel):
        cert = orlov_check(a3rel, DegreeFunction.from_algebra(a3rel))
        table = {(i, j): hom for (i, j, hom, _, _, _) in cert.pairs}
        assert table == {
            (1, 2): 0, (1, 3): 0, (2, 1): 1,
            (2, 3): 0, (3, 1): 0, (3, 2): 1,
        }

    def test_adversarial_degrees(self, a2):
        cert = orlov_check(a2, DegreeFunction((0, 0)))
        assert not cert.ok
        assert (2, 1) in cert.witnesses

    def test_strict_inequality_over_all_pairs(self, commsquare):
        deg = DegreeFunction.from_algebra(commsquare)
        for i in commsquare.quiver.vertices:
            for j in commsquare.quiver.vertices:
                if i != j and commsquare.dim_hom(i, j):
                    assert deg.degree(i) > deg.degree(j)
