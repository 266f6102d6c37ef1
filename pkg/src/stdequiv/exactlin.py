"""Exact dense linear algebra over the rationals and over prime fields.

Scalars are `fractions.Fraction` values (field Q) or `FpElement` residues
(field F_p).  There is no floating point anywhere.  Elimination always
picks the first nonzero pivot, so every routine is deterministic and
re-runs produce identical output.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


class RationalField:
    """The rationals; scalars are Fraction values in lowest terms."""

    characteristic = 0

    def __call__(self, numerator, denominator=1):
        return Fraction(numerator, denominator)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def parse(self, token: str) -> Fraction:
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational scalar {token!r}") from exc

    def render(self, value) -> str:
        return str(value)

    def descriptor(self) -> str:
        return "Q"

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


class FpElement:
    """A residue modulo a prime, with exact field arithmetic."""

    __slots__ = ("p", "value")

    def __init__(self, p: int, value: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldError(f"mixed characteristics {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpElement(self.p, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.p, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.p, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.p, other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.p, self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self.p, self.value * pow(other.value, self.p - 2, self.p))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return FpElement(self.p, -self.value)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash((self.p, self.value))

    def __repr__(self):
        return str(self.value)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field of integers modulo a prime p; scalars live in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p

    @property
    def characteristic(self):
        return self.p

    def __call__(self, value):
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise FieldError(f"mixed characteristics {self.p} and {value.p}")
            return value
        return FpElement(self.p, value)

    @property
    def zero(self):
        return FpElement(self.p, 0)

    @property
    def one(self):
        return FpElement(self.p, 1)

    def parse(self, token: str) -> FpElement:
        try:
            return FpElement(self.p, int(token, 10))
        except ValueError as exc:
            raise FieldError(f"bad F_{self.p} scalar {token!r}") from exc

    def render(self, value) -> str:
        return str(value.value)

    def descriptor(self) -> str:
        return f"F{self.p}"

    def __repr__(self):
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


QQ = RationalField()


def field_from_descriptor(text: str):
    """Build a field from its canonical descriptor, 'Q' or 'F<p>'."""
    text = text.strip()
    if text == "Q":
        return QQ
    if text.startswith("F"):
        return PrimeField(int(text[1:]))
    raise FieldError(f"unknown field descriptor {text!r}")


class Matrix:
    """Immutable dense matrix over a declared ground field.

    Zero-row and zero-column shapes are legal; they show up constantly as
    hom spaces between zero objects.
    """

    __slots__ = ("field", "nrows", "ncols", "data")

    def __init__(self, field, data, ncols=None):
        rows = tuple(tuple(row) for row in data)
        if rows:
            ncols = len(rows[0])
            for row in rows:
                if len(row) != ncols:
                    raise ValueError("ragged matrix data")
        else:
            # row-free matrices still need a column count
            ncols = 0 if ncols is None else ncols
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.data = rows

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero
        m = cls.__new__(cls)
        m.field = field
        m.nrows = nrows
        m.ncols = ncols
        m.data = tuple(tuple(zero for _ in range(ncols)) for _ in range(nrows))
        return m

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        zero, one = field.zero, field.one
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, field, vector) -> "Matrix":
        return cls(field, [[v] for v in vector])

    def entry(self, i: int, j: int):
        return self.data[i][j]

    def row(self, i: int):
        return self.data[i]

    def col(self, j: int):
        return tuple(row[j] for row in self.data)

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.data == other.data

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def __add__(self, other):
        self._shape_check(other)
        return Matrix(self.field, [
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)
        ], self.ncols)

    def __sub__(self, other):
        self._shape_check(other)
        return Matrix(self.field, [
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)
        ], self.ncols)

    def __neg__(self):
        return Matrix(self.field, [[-a for a in row] for row in self.data], self.ncols)

    def _shape_check(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    def scale(self, scalar) -> "Matrix":
        return Matrix(self.field, [[scalar * a for a in row] for row in self.data], self.ncols)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        zero = self.field.zero
        out = [[zero for _ in range(other.ncols)] for _ in range(self.nrows)]
        for i in range(self.nrows):
            row = self.data[i]
            acc = out[i]
            for k in range(self.ncols):
                a = row[k]
                if not a:
                    continue
                orow = other.data[k]
                for j in range(other.ncols):
                    b = orow[j]
                    if b:
                        acc[j] = acc[j] + a * b
        return Matrix(self.field, out, other.ncols)

    def apply(self, vector):
        """Matrix-vector product; vector length must equal ncols."""
        if len(vector) != self.ncols:
            raise ValueError("vector length mismatch")
        zero = self.field.zero
        out = []
        for row in self.data:
            acc = zero
            for a, v in zip(row, vector):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.col(j) for j in range(self.ncols)], self.nrows)

    def hstack(self, other) -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch in hstack")
        return Matrix(self.field, [r1 + r2 for r1, r2 in zip(self.data, other.data)],
                      self.ncols + other.ncols)

    def vstack(self, other) -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch in vstack")
        return Matrix(self.field, self.data + other.data, self.ncols)

    def rref(self):
        """Reduced row-echelon form and the tuple of pivot columns.

        First-nonzero pivoting, no reordering heuristics: the output is a
        deterministic function of the input.
        """
        rows = [list(r) for r in self.data]
        pivots = []
        pr = 0
        for pc in range(self.ncols):
            pivot_row = None
            for r in range(pr, self.nrows):
                if rows[r][pc]:
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
            lead = rows[pr][pc]
            if lead != self.field.one:
                rows[pr] = [x / lead for x in rows[pr]]
            for r in range(self.nrows):
                if r != pr and rows[r][pc]:
                    factor = rows[r][pc]
                    prow = rows[pr]
                    rows[r] = [a - factor * b for a, b in zip(rows[r], prow)]
            pivots.append(pc)
            pr += 1
            if pr == self.nrows:
                break
        return Matrix(self.field, rows, self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis of the right null space, as a list of column tuples.

        The vectors are linearly independent, each is annihilated by the
        matrix, and their count is ncols - rank.
        """
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        zero, one = self.field.zero, self.field.one
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            vec = [zero] * self.ncols
            vec[free] = one
            for r, pc in enumerate(pivots):
                vec[pc] = -reduced.data[r][free]
            basis.append(tuple(vec))
        return basis

    def solve(self, rhs):
        """Some exact solution x of self * x = rhs, or None if inconsistent.

        Free variables are set to zero, so the particular solution is
        deterministic.
        """
        if len(rhs) != self.nrows:
            raise ValueError("rhs length mismatch")
        augmented = self.hstack(Matrix.column(self.field, rhs))
        reduced, pivots = augmented.rref()
        if pivots and pivots[-1] == self.ncols:
            return None
        zero = self.field.zero
        solution = [zero] * self.ncols
        for r, pc in enumerate(pivots):
            solution[pc] = reduced.data[r][self.ncols]
        return tuple(solution)

    def inverse(self):
        """The exact inverse, or None when the matrix is singular."""
        if self.nrows != self.ncols:
            return None
        if self.nrows == 0:
            return self
        augmented = self.hstack(Matrix.identity(self.field, self.nrows))
        reduced, pivots = augmented.rref()
        if pivots != tuple(range(self.nrows)):
            return None
        return Matrix(self.field, [row[self.nrows:] for row in reduced.data])

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows
