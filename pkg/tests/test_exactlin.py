import random
from fractions import Fraction

import pytest

from stdequiv.exactlin import QQ, FieldError, Matrix, PrimeField, field_from_descriptor


def mat(rows, field=QQ):
    return Matrix(field, [[field(x) for x in row] for row in rows])


class TestFields:
    def test_rational_canonical(self):
        assert QQ(2, 4) == Fraction(1, 2)
        assert QQ.parse("-3/6") == Fraction(-1, 2)
        assert QQ.render(Fraction(-1, 2)) == "-1/2"

    def test_prime_field_arithmetic(self):
        f5 = PrimeField(5)
        x = f5(3)
        assert x + f5(4) == f5(2)
        assert x * f5(2) == f5(1)
        assert x / f5(2) == f5(4)
        assert -x == f5(2)
        assert bool(f5(0)) is False

    def test_prime_field_rejects_composite(self):
        with pytest.raises(FieldError):
            PrimeField(6)

    def test_mixed_characteristic_rejected(self):
        with pytest.raises(FieldError):
            PrimeField(5)(1) + PrimeField(7)(1)

    def test_descriptor_round_trip(self):
        assert field_from_descriptor("Q") == QQ
        assert field_from_descriptor("F7") == PrimeField(7)


class TestRref:
    def test_identity(self):
        m = Matrix.identity(QQ, 2)
        reduced, pivots = m.rref()
        assert reduced == m
        assert pivots == (0, 1)

    def test_zero(self):
        m = Matrix.zeros(QQ, 3, 3)
        reduced, pivots = m.rref()
        assert reduced == m
        assert pivots == ()

    def test_rank_one_by_hand(self):
        # hand elimination: r2 -= r1/2, then normalize r1.
        reduced, pivots = mat([[2, 4], [1, 2]]).rref()
        assert reduced == mat([[1, 2], [0, 0]])
        assert pivots == (0,)

    def test_empty_shapes(self):
        assert Matrix.zeros(QQ, 0, 3).rref()[1] == ()
        assert Matrix.zeros(QQ, 3, 0).rank() == 0


class TestKernel:
    def test_identity_has_no_kernel(self):
        assert Matrix.identity(QQ, 4).kernel_basis() == []

    def test_zero_row(self):
        basis = Matrix.zeros(QQ, 1, 3).kernel_basis()
        assert len(basis) == 3

    def test_rank_nullity_example(self):
        basis = mat([[1, 1]]).kernel_basis()
        assert len(basis) == 1
        v = basis[0]
        assert v[0] + v[1] == 0 and any(v)


class TestSolve:
    def test_identity(self):
        b = (QQ(1), QQ(2))
        assert Matrix.identity(QQ, 2).solve(b) == b

    def test_inconsistent(self):
        assert Matrix.zeros(QQ, 2, 2).solve((QQ(0), QQ(1))) is None

    def test_underdetermined_verified(self):
        m = mat([[1, 1]])
        x = m.solve((QQ(3),))
        assert x is not None
        assert m.apply(x) == (QQ(3),)

    def test_inverse(self):
        m = mat([[1, 2], [3, 5]])
        inv = m.inverse()
        assert inv is not None
        assert m * inv == Matrix.identity(QQ, 2)
        assert mat([[1, 2], [2, 4]]).inverse() is None


def random_matrix(rng, field, nrows, ncols, density=0.7):
    rows = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            if rng.random() < density:
                row.append(field(rng.randint(-4, 4)))
            else:
                row.append(field.zero)
        rows.append(row)
    return Matrix(field, rows)


@pytest.mark.parametrize("field", [QQ, PrimeField(7)])
def test_elimination_properties(field):
    rng = random.Random(20240817)
    for _ in range(40):
        nrows = rng.randint(0, 5)
        ncols = rng.randint(0, 5)
        m = (random_matrix(rng, field, nrows, ncols) if nrows
             else Matrix.zeros(field, 0, ncols))
        reduced, pivots = m.rref()
        assert reduced.rref()[0] == reduced
        kernel = m.kernel_basis()
        assert len(pivots) + len(kernel) == ncols
        zero = tuple(field.zero for _ in range(nrows))
        for v in kernel:
            assert m.apply(v) == zero
        if nrows and ncols:
            target = m.apply(tuple(field(rng.randint(-3, 3)) for _ in range(ncols)))
            x = m.solve(target)
            assert x is not None
            assert m.apply(x) == target
