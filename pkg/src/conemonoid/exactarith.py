"""Exact linear algebra over Q and over real quadratic extensions Q(sqrt(n)).

Scalars are ``fractions.Fraction`` (rationals) or :class:`QuadScalar`
(a + b*sqrt(n) with a, b rational and n squarefree).  Every comparison and
every sign decision is exact; no floating point enters any code path.
Vectors are plain tuples of ints/Fractions/QuadScalars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import QuadFieldError

Rational = Fraction  # invariants (gcd-reduced, positive denominator) come for free


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def _split_square(n: int) -> tuple[int, int]:
    """n = s^2 * m with m squarefree; returns (s, m)."""
    s, m, d = 1, n, 2
    while d * d <= m:
        while m % (d * d) == 0:
            m //= d * d
            s *= d
        d += 1
    return s, m


@dataclass(frozen=True)
class QuadScalar:
    """Exact element a + b*sqrt(n) of Q(sqrt(n)), n squarefree positive."""

    a: Fraction
    b: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not isinstance(self.n, int) or not is_squarefree(self.n):
            raise QuadFieldError(f"radicand {self.n!r} is not a squarefree positive integer")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def sqrt(n: int) -> "QuadScalar":
        """Exact sqrt(n) for a positive integer n (square part factored out)."""
        if n < 1:
            raise QuadFieldError(f"cannot take sqrt of {n}")
        s, m = _split_square(n)
        if m == 1:
            return QuadScalar(Fraction(s), Fraction(0), 2)
        return QuadScalar(Fraction(0), Fraction(s), m)

    def is_rational(self) -> bool:
        return self.b == 0

    def _coerce(self, other) -> "QuadScalar":
        if isinstance(other, QuadScalar):
            if other.b == 0:
                return QuadScalar(other.a, Fraction(0), self.n)
            if self.b == 0:
                return other  # self will be lifted into other's field by caller
            if other.n != self.n:
                raise QuadFieldError(f"incompatible quadratic fields sqrt({self.n}) vs sqrt({other.n})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadScalar(Fraction(other), Fraction(0), self.n)
        return NotImplemented

    def _pair(self, other):
        """Lift self and other into one common field."""
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented, NotImplemented
        lhs = self if self.b != 0 or rhs.b == 0 else QuadScalar(self.a, Fraction(0), rhs.n)
        if lhs.n != rhs.n:
            rhs = QuadScalar(rhs.a, Fraction(0), lhs.n)
        return lhs, rhs

    # -- field arithmetic ----------------------------------------------------

    def __add__(self, other):
        x, y = self._pair(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadScalar(x.a + y.a, x.b + y.b, x.n)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, self.n)

    def __sub__(self, other):
        x, y = self._pair(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadScalar(x.a - y.a, x.b - y.b, x.n)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        x, y = self._pair(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadScalar(x.a * y.a + x.b * y.b * x.n, x.a * y.b + x.b * y.a, x.n)

    __rmul__ = __mul__

    def inverse(self) -> "QuadScalar":
        norm = self.a * self.a - self.b * self.b * self.n
        if norm == 0:
            # a^2 = b^2 n with n squarefree forces a = b = 0
            raise ZeroDivisionError("division by zero QuadScalar")
        return QuadScalar(self.a / norm, -self.b / norm, self.n)

    def __truediv__(self, other):
        x, y = self._pair(other)
        if x is NotImplemented:
            return NotImplemented
        return x * y.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __bool__(self):
        return not (self.a == 0 and self.b == 0)

    # -- exact ordering ------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(n), computed without floating point."""
        a, b, n = self.a, self.b, self.n
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: |a| vs |b| sqrt(n) decided by squaring
        lhs, rhs = a * a, b * b * n
        if a > 0:  # b < 0: positive iff a > |b| sqrt(n)
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return 1 if rhs > lhs else (-1 if rhs < lhs else 0)

    def _cmp(self, other) -> int:
        diff = self - other
        if diff is NotImplemented:
            raise TypeError(f"cannot compare QuadScalar with {type(other)!r}")
        return diff.sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadScalar):
            x, y = self._pair(other)
            return x.a == y.a and x.b == y.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.n))

    def __repr__(self):
        if self.b == 0:
            return f"QuadScalar({self.a})"
        return f"QuadScalar({self.a} + {self.b}*sqrt({self.n}))"


def sqrt_int(n: int) -> QuadScalar:
    """Convenience alias for QuadScalar.sqrt."""
    return QuadScalar.sqrt(n)


def quad_compare(x: QuadScalar, y: QuadScalar) -> int:
    """Exact three-way comparison inside one quadratic field (-1, 0, or 1).

    Raises QuadFieldError when both operands are irrational with different
    radicands; use :func:`cross_compare` for that case.
    """
    if x.b != 0 and y.b != 0 and x.n != y.n:
        raise QuadFieldError(f"incompatible quadratic fields sqrt({x.n}) vs sqrt({y.n})")
    return (x - y).sign()


def _sign_rational_plus_radical(a: Fraction, c: Fraction, k: int) -> int:
    """Exact sign of a + c*sqrt(k) for rational a, c and integer k >= 0."""
    if k == 0 or c == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (c > 0) - (c < 0)
    if a > 0 and c > 0:
        return 1
    if a < 0 and c < 0:
        return -1
    lhs, rhs = a * a, c * c * k
    if a > 0:
        return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
    return 1 if rhs > lhs else (-1 if rhs < lhs else 0)


def cross_compare(x: QuadScalar, y: QuadScalar) -> int:
    """Exact comparison of elements of two (possibly different) quadratic fields.

    Decides sign(x - y) = sign(p + b*sqrt(m) - d*sqrt(n)) by repeated squaring
    with sign bookkeeping; fully rational at the end.
    """
    if x.b == 0 or y.b == 0 or x.n == y.n:
        return quad_compare(x, y)
    p = x.a - y.a
    b, m = x.b, x.n
    d, n = y.b, y.n
    # s := b*sqrt(m) - d*sqrt(n)
    if (b > 0) != (d > 0):
        s_sign = 1 if b > 0 else -1
    else:
        lhs, rhs = b * b * m, d * d * n
        base = 1 if b > 0 else -1
        s_sign = base if lhs > rhs else (-base if lhs < rhs else 0)
    if s_sign == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return s_sign
    p_sign = 1 if p > 0 else -1
    if p_sign == s_sign:
        return p_sign
    # opposite signs: compare p^2 against s^2 = b^2 m + d^2 n - 2 b d sqrt(mn)
    sq_diff = _sign_rational_plus_radical(p * p - b * b * m - d * d * n, 2 * b * d, m * n)
    if sq_diff == 0:
        return 0
    return p_sign if sq_diff > 0 else s_sign


def scalar_sign(v) -> int:
    """Sign of an exact scalar (int, Fraction, or QuadScalar)."""
    if isinstance(v, QuadScalar):
        return v.sign()
    return (v > 0) - (v < 0)


# ---------------------------------------------------------------------------
# vectors and matrices (tuples of exact scalars; rows = list of vectors)
# ---------------------------------------------------------------------------


def dot(u, v):
    assert len(u) == len(v)
    total = 0
    for a, b in zip(u, v):
        total = total + a * b
    return total


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u):
    return tuple(c * a for a in u)


def is_zero_vector(u) -> bool:
    return all(scalar_sign(a) == 0 for a in u)


def _int_rows(rows) -> list[list[int]]:
    """Scale each row by the lcm of denominators; rank is unchanged."""
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        denom = math.lcm(*(f.denominator for f in fr)) if fr else 1
        out.append([int(f * denom) for f in fr])
    return out


def mat_rank(rows) -> int:
    """Rank by fraction-free (Bareiss) elimination on integer-scaled rows."""
    if not rows:
        return 0
    m = _int_rows(rows)
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == nrows:
            break
    return rank


def field_rank(rows) -> int:
    """Rank over an exact field; works for Fraction and QuadScalar entries."""
    if not rows:
        return 0
    m = [list(row) for row in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if scalar_sign(m[r][col]) != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        head = m[rank][col]
        for r in range(rank + 1, nrows):
            val = m[r][col]
            if scalar_sign(val) == 0:
                continue
            if isinstance(val, QuadScalar) or isinstance(head, QuadScalar):
                factor = val / head
            else:
                factor = Fraction(val) / Fraction(head)
            m[r] = [x - factor * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _rref(rows):
    """Reduced row echelon form over Fractions; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m, pivots


def solve_linear(rows, rhs):
    """Any exact solution x of rows . x = rhs, or None when inconsistent.

    Free variables are set to zero, which makes the output deterministic.
    """
    if not rows:
        return ()
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    m, pivots = _rref(aug)
    for i, row in enumerate(m):
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        if col == ncols:
            return None  # pivot in the rhs column: inconsistent
        x[col] = m[r][ncols]
    return tuple(x)


def kernel_basis(rows):
    """Basis of the right null space {x : rows . x = 0} over Q."""
    if not rows:
        return []
    ncols = len(rows[0])
    m, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(tuple(v))
    return basis


def solve_common_hyperplane(points):
    """A functional u with <p, u> = 1 for every p, or None when none exists.

    The points then lie on a common affine hyperplane at level 1 (a hyperplane
    avoiding the origin, normalized).  Output is checked before returning.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise ValueError("points must be nonempty")
    u = solve_linear(pts, [Fraction(1)] * len(pts))
    if u is None:
        return None
    assert all(dot(p, u) == 1 for p in pts)
    return u


def affine_rank(points) -> int:
    """Dimension of the affine hull: rank of {p_i - p_0 : i >= 1}."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise ValueError("points must be nonempty")
    base = pts[0]
    diffs = [vsub(p, base) for p in pts[1:]]
    return mat_rank(diffs)


def primitive_vector(vec) -> tuple[int, ...]:
    """Canonical primitive integer form of a nonzero rational vector.

    Scales by a positive rational only, so the ray direction is preserved.
    """
    fr = [Fraction(x) for x in vec]
    denom = math.lcm(*(f.denominator for f in fr))
    ints = [int(f * denom) for f in fr]
    g = math.gcd(*(abs(v) for v in ints))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(v // g for v in ints)
