import pytest

from stdequiv.algebra import AlgebraPresentation, Relation, build_algebra
from stdequiv.exactlin import QQ, PrimeField
from stdequiv.quiver import Path, Quiver


def a2_presentation(field=QQ):
    return AlgebraPresentation(Quiver(2, [("a", 1, 2)]), field)


def a3_rel_presentation(field=QQ):
    q = Quiver(3, [("a", 1, 2), ("b", 2, 3)])
    rel = Relation([(field(1), Path(1, 3, ("a", "b")))])
    return AlgebraPresentation(q, field, [rel])


def kronecker_presentation(field=QQ):
    return AlgebraPresentation(Quiver(2, [("a", 1, 2), ("b", 1, 2)]), field)


def commsquare_presentation(field=QQ):
    q = Quiver(4, [("a", 1, 2), ("b", 1, 3), ("c", 2, 4), ("d", 3, 4)])
    rel = Relation([
        (field(1), Path(1, 4, ("a", "c"))),
        (field(-1), Path(1, 4, ("b", "d"))),
    ])
    return AlgebraPresentation(q, field, [rel])


FIXTURE_PRESENTATIONS = {
    "a2": a2_presentation,
    "a3rel": a3_rel_presentation,
    "kronecker": kronecker_presentation,
    "commsquare": commsquare_presentation,
}


@pytest.fixture
def a2():
    return build_algebra(a2_presentation())


@pytest.fixture
def a3rel():
    return build_algebra(a3_rel_presentation())


@pytest.fixture
def kronecker():
    return build_algebra(kronecker_presentation())


@pytest.fixture
def commsquare():
    return build_algebra(commsquare_presentation())


@pytest.fixture
def f7():
    return PrimeField(7)


def fixture_algebras(field=QQ):
    return {name: build_algebra(make(field)) for name, make in FIXTURE_PRESENTATIONS.items()}
