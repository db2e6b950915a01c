"""Exact arithmetic over Q and simple extensions Q(alpha), plus exact dense
linear algebra (rank, right kernel).

Elements of Q(alpha) are stored as coefficient vectors in the power basis
1, alpha, ..., alpha^(d-1) for a fixed monic irreducible minimal polynomial
of degree d <= 4.  Degree 1 encodes plain Q.  Everything is immutable and
all arithmetic is exact; no floats appear anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    BadScalar,
    DivisionByZero,
    FieldMismatch,
    NonMonic,
    Reducible,
    UnsupportedDegree,
)

Rational = Fraction

_MINUS_SIGNS = str.maketrans({"−": "-", "–": "-"})


def parse_rational(text) -> Fraction:
    """Parse "p" or "p/q" (also plain ints) into a reduced Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise BadScalar(f"floating point literal {text!r} not accepted")
    if not isinstance(text, str):
        raise BadScalar(f"cannot read a rational from {text!r}")
    cleaned = text.translate(_MINUS_SIGNS).strip()
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise BadScalar(f"bad rational literal {text!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _poly_trim(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return coeffs[:i]


def _poly_divmod(num, den):
    """Division with remainder for coefficient lists (constant term first)."""
    num = list(num)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    inv_lead = 1 / den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] * inv_lead
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, _poly_trim(num)


def _poly_xgcd(a, b):
    """Extended gcd of coefficient lists: returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = _poly_trim(list(a)), _poly_trim(list(b))
    u0, u1 = [Fraction(1)], []
    v0, v1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
        v0, v1 = v1, _poly_sub(v0, _poly_mul(q, v1))
    return r0, u0, v0


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _integer_model(minpoly):
    """Clear denominators of a monic rational polynomial: substitute x = y/N
    and rescale, giving a monic integer polynomial with the same factorization
    behaviour over Q."""
    deg = len(minpoly) - 1
    lcm = 1
    for c in minpoly:
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    out = []
    for i, c in enumerate(minpoly):
        v = c * lcm ** (deg - i)
        assert v.denominator == 1
        out.append(v.numerator)
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _has_rational_root(g) -> bool:
    """Rational-root test for a monic integer polynomial (constant first)."""
    if g[0] == 0:
        return True
    for d in _divisors(g[0]):
        for r in (d, -d):
            acc = 0
            for c in reversed(g):
                acc = acc * r + c
            if acc == 0:
                return True
    return False


def _has_quadratic_factor(g) -> bool:
    """Monic quartic integer polynomial: search for a factorization into two
    monic integer quadratics (y^2+p*y+q)(y^2+r*y+s)."""
    D, C, B, A = g[0], g[1], g[2], g[3]
    for q in _divisors(D):
        for q_signed in (q, -q):
            if q_signed == 0 or D % q_signed != 0:
                continue
            s = D // q_signed
            if s != q_signed:
                num = C - q_signed * A
                if num % (s - q_signed) != 0:
                    continue
                p = num // (s - q_signed)
                r = A - p
                if B == q_signed + s + p * r:
                    return True
            else:
                if C != q_signed * A:
                    continue
                disc = A * A - 4 * (B - 2 * q_signed)
                if disc >= 0 and _isqrt_exact(disc) is not None:
                    return True
    return False


def _isqrt_exact(n: int):
    """Integer square root if n is a perfect square, else None."""
    if n < 0:
        return None
    r = int(n**0.5)
    for cand in (r - 1, r, r + 1, r + 2):
        if cand >= 0 and cand * cand == n:
            return cand
    return None


class FieldDescriptor:
    """Q(alpha) for alpha a root of a fixed monic irreducible polynomial.

    ``minpoly`` holds rational coefficients, constant term first, leading
    coefficient 1.  Degree 1 is plain Q.
    """

    __slots__ = ("minpoly", "degree", "_high_powers", "_hash")

    def __init__(self, minpoly):
        self.minpoly = tuple(minpoly)
        self.degree = len(self.minpoly) - 1
        # alpha^e for e = degree .. 2*degree-2, expanded in the power basis
        powers = []
        d = self.degree
        top = [-c for c in self.minpoly[:d]]  # alpha^d
        cur = list(top)
        for _ in range(d, 2 * d - 1):
            powers.append(tuple(cur))
            nxt = [Fraction(0)] + cur[: d - 1]
            carry = cur[d - 1]
            if carry:
                nxt = [nxt[i] + carry * top[i] for i in range(d)]
            cur = nxt
        self._high_powers = powers
        self._hash = hash(self.minpoly)

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def __eq__(self, other):
        return isinstance(other, FieldDescriptor) and self.minpoly == other.minpoly

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.is_rational:
            return "Q"
        return "Q(a: %s)" % " + ".join(
            f"{format_rational(c)}*a^{i}" for i, c in enumerate(self.minpoly) if c
        )

    # -- element construction -------------------------------------------

    def scalar(self, coeffs) -> "Scalar":
        if isinstance(coeffs, Scalar):
            if coeffs.field != self:
                raise FieldMismatch("scalar belongs to a different field")
            return coeffs
        if isinstance(coeffs, (int, Fraction, str)):
            coeffs = [coeffs]
        vals = [parse_rational(c) for c in coeffs]
        if len(vals) > self.degree:
            raise BadScalar(
                f"{len(vals)} coordinates for an extension of degree {self.degree}"
            )
        vals += [Fraction(0)] * (self.degree - len(vals))
        return Scalar(tuple(vals), self)

    def zero(self) -> "Scalar":
        return self.scalar(0)

    def one(self) -> "Scalar":
        return self.scalar(1)

    def alpha(self) -> "Scalar":
        if self.is_rational:
            raise BadScalar("plain Q has no extension generator")
        return self.scalar([0, 1])

    # -- arithmetic kernels ----------------------------------------------

    def _reduce(self, coeffs):
        """Reduce a product coefficient list (length <= 2d-1) mod minpoly."""
        d = self.degree
        out = list(coeffs[:d]) + [Fraction(0)] * (d - min(d, len(coeffs)))
        for e in range(d, len(coeffs)):
            c = coeffs[e]
            if c:
                pw = self._high_powers[e - d]
                for i in range(d):
                    out[i] += c * pw[i]
        return tuple(out)

    def _mul(self, a, b):
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def _inv(self, a):
        g, u, _ = _poly_xgcd(list(a), list(self.minpoly))
        if len(g) != 1:
            raise DivisionByZero("element has no inverse (reducible minpoly?)")
        inv_g = 1 / g[0]
        coeffs = [c * inv_g for c in u]
        return self._reduce(coeffs + [Fraction(0)] * max(0, self.degree - len(coeffs)))


def make_field(minpoly) -> FieldDescriptor:
    """Build a field descriptor after a deterministic irreducibility check.

    ``minpoly`` lists rational coefficients, constant term first; it must be
    monic of degree 1 to 4.
    """
    coeffs = [parse_rational(c) for c in minpoly]
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        raise NonMonic("leading coefficient is zero")
    deg = len(coeffs) - 1
    if deg < 1:
        raise UnsupportedDegree("minimal polynomial must have degree >= 1")
    if deg > 4:
        raise UnsupportedDegree(f"degree {deg} > 4 not supported")
    if coeffs[-1] != 1:
        raise NonMonic("minimal polynomial must be monic")
    if deg >= 2:
        g = _integer_model(coeffs)
        if _has_rational_root(g):
            raise Reducible("minimal polynomial has a rational root")
        if deg == 4 and _has_quadratic_factor(g):
            raise Reducible("minimal polynomial splits into two quadratics")
    return FieldDescriptor(coeffs)


QQ = make_field([0, 1])


class Scalar:
    """Element of Q(alpha), stored by its power-basis coordinates."""

    __slots__ = ("coeffs", "field", "_hash")

    def __init__(self, coeffs, field: FieldDescriptor):
        self.coeffs = coeffs
        self.field = field
        self._hash = None

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch("scalars from different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)), self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field._mul(self.coeffs, o.coeffs), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise DivisionByZero("division by zero scalar")
        return Scalar(self.field._mul(self.coeffs, self.field._inv(o.coeffs)), self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Scalar(tuple(-a for a in self.coeffs), self.field)

    def inverse(self) -> "Scalar":
        if not self:
            raise DivisionByZero("zero has no inverse")
        return Scalar(self.field._inv(self.coeffs), self.field)

    # -- comparisons -------------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.coeffs, self.field))
        return self._hash

    # -- presentation ------------------------------------------------------

    @property
    def rational_value(self) -> Fraction:
        """The value as a Fraction; only meaningful over plain Q."""
        if not all(c == 0 for c in self.coeffs[1:]):
            raise BadScalar("not a rational element")
        return self.coeffs[0]

    def encode(self):
        """Document encoding: a bare string over Q, a string list otherwise."""
        if self.field.is_rational:
            return format_rational(self.coeffs[0])
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self):
        if self.field.is_rational:
            return format_rational(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(format_rational(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else format_rational(c) + "*")
                terms.append(f"{head}a" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Dispatch helper mirroring the low-level field operations."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise BadScalar(f"unknown operation {op!r}")


class Matrix:
    """Dense row-major matrix over one field descriptor."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, rows: int, cols: int, entries, field: FieldDescriptor):
        if len(entries) != rows * cols:
            raise BadScalar("entry count does not match the shape")
        self.rows = rows
        self.cols = cols
        self.entries = list(entries)
        self.field = field

    @classmethod
    def from_rows(cls, row_lists, field: FieldDescriptor | None = None) -> "Matrix":
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = []
        for row in row_lists:
            if len(row) != cols:
                raise BadScalar("ragged rows")
            flat.extend(row)
        if field is None:
            if not flat:
                raise BadScalar("cannot infer the field of an empty matrix")
            field = flat[0].field
        flat = [field.scalar(e) for e in flat]
        return cls(rows, cols, flat, field)

    @classmethod
    def zero(cls, rows: int, cols: int, field: FieldDescriptor) -> "Matrix":
        z = field.zero()
        return cls(rows, cols, [z] * (rows * cols), field)

    def at(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def transpose(self) -> "Matrix":
        flat = [self.at(i, j) for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.cols, self.rows, flat, self.field)

    def apply(self, vec):
        """Matrix times column vector, exactly."""
        if len(vec) != self.cols:
            raise BadScalar("dimension mismatch")
        out = []
        for i in range(self.rows):
            acc = self.field.zero()
            base = i * self.cols
            for j, v in enumerate(vec):
                e = self.entries[base + j]
                if e and v:
                    acc = acc + e * v
            out.append(acc)
        return out

    def __repr__(self):
        body = "; ".join(
            " ".join(repr(self.at(i, j)) for j in range(self.cols))
            for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"


def _echelon(matrix: Matrix):
    """Row echelon form by fraction-preserving elimination with partial
    pivoting on the first nonzero entry.  Returns (rows, pivot_cols); pivot
    entries are normalized to 1."""
    rows = [list(matrix.row(i)) for i in range(matrix.rows)]
    cols = matrix.cols
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [e * inv if e else e for e in rows[r]]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                top = rows[r]
                rows[i] = [e - f * t if t else e for e, t in zip(rows[i], top)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Matrix) -> int:
    return len(_echelon(matrix)[1])


def kernel_basis(matrix: Matrix):
    """Basis of the exact right null space; one vector per free column.

    Each returned vector v satisfies matrix.apply(v) == 0 exactly, and the
    basis size equals cols - rank.
    """
    field = matrix.field
    rows, pivots = _echelon(matrix)
    pivot_set = set(pivots)
    free_cols = [c for c in range(matrix.cols) if c not in pivot_set]
    basis = []
    zero, one = field.zero(), field.one()
    for fc in free_cols:
        v = [zero] * matrix.cols
        v[fc] = one
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            acc = zero
            row = rows[r]
            for j in range(pc + 1, matrix.cols):
                if row[j] and v[j]:
                    acc = acc + row[j] * v[j]
            v[pc] = -acc
        basis.append(v)
    return basis
