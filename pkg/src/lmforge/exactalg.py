"""Exact scalars and dense exact linear algebra.

Scalar domains: rationals (``fractions.Fraction``), single-variable Laurent
polynomials over the rationals (:class:`LaurentPoly`), and their fraction
field QQ(t) (:class:`RatFunc`).  Rank, kernel and cokernel are always taken
over the fraction field.  Two independent elimination routes exist for
Laurent matrices: a fraction-free Bareiss elimination that keeps entries
polynomial, and a naive rational-function elimination; the test suite
cross-checks them against each other and against random specializations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class ExactAlgError(Exception):
    pass


class ZeroSpecialization(ExactAlgError):
    """Raised when a Laurent polynomial is evaluated at t = 0."""


class NonInvertibleMatrix(ExactAlgError):
    pass


class RingMismatch(ExactAlgError):
    pass


# ---------------------------------------------------------------------------
# Laurent polynomials over QQ


class LaurentPoly:
    """Sparse Laurent polynomial in the fixed variable t, exact rational
    coefficients, canonical form (no zero coefficients stored)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Fraction] | None = None):
        clean: dict[int, Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    clean[int(e)] = c
        self.coeffs = clean

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: Fraction(1)})

    @classmethod
    def t(cls, exp: int = 1) -> "LaurentPoly":
        return cls({exp: Fraction(1)})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: Fraction(c)})

    @classmethod
    def monomial(cls, c, exp: int) -> "LaurentPoly":
        return cls({exp: Fraction(c)})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) - c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly({e: k * c for e, k in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == {0: Fraction(1)}

    def is_unit(self) -> bool:
        """Units of QQ[t, t^-1] are the single-term polynomials c*t^e."""
        return len(self.coeffs) == 1

    def is_constant(self) -> bool:
        return not self.coeffs or set(self.coeffs) == {0}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ExactAlgError(f"not a constant: {self}")
        return self.coeffs.get(0, Fraction(0))

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ExactAlgError(f"not a unit in QQ[t^±1]: {self}")
        ((e, c),) = self.coeffs.items()
        return LaurentPoly({-e: 1 / c})

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ExactAlgError("zero polynomial has no exponents")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ExactAlgError("zero polynomial has no exponents")
        return max(self.coeffs)

    def eval(self, q) -> Fraction:
        """Exact substitution t = q, q a nonzero rational."""
        q = Fraction(q)
        if q == 0:
            raise ZeroSpecialization("cannot specialize a Laurent polynomial at t = 0")
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * q**e
        return total

    def subs_t_inverse(self) -> "LaurentPoly":
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    # serialization: terms "c*t^e" joined by " + ", decreasing exponents,
    # exponent-zero terms printed as a bare rational

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            terms.append(str(c) if e == 0 else f"{c}*t^{e}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        text = text.strip()
        if text in ("0", ""):
            return cls.zero()
        out: dict[int, Fraction] = {}
        for term in text.split("+"):
            term = term.strip()
            if "*t^" in term:
                c_str, e_str = term.split("*t^")
                c, e = Fraction(c_str), int(e_str)
            elif term.startswith("t^"):
                c, e = Fraction(1), int(term[2:])
            elif term == "t":
                c, e = Fraction(1), 1
            elif term == "-t":
                c, e = Fraction(-1), 1
            else:
                c, e = Fraction(term), 0
            out[e] = out.get(e, Fraction(0)) + c
        return cls(out)


# dense QQ[t] helpers (gcd, exact division, Bareiss)


def _to_poly(p: LaurentPoly) -> tuple[list[Fraction], int]:
    """Coefficient list of p * t^-min_exp together with min_exp."""
    if p.is_zero():
        return [], 0
    shift = p.min_exp()
    deg = p.max_exp() - shift
    coeffs = [Fraction(0)] * (deg + 1)
    for e, c in p.coeffs.items():
        coeffs[e - shift] = c
    return coeffs, shift


def _from_poly(coeffs: Sequence[Fraction], shift: int = 0) -> LaurentPoly:
    return LaurentPoly({i + shift: c for i, c in enumerate(coeffs) if c != 0})


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while a and len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - len(b)
        f = a[-1] / b[-1]
        q[k] = f
        for i, bc in enumerate(b):
            a[k + i] -= f * bc
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """A gcd in QQ[t^±1], normalized monic with lowest exponent 0."""
    if a.is_zero():
        return _normalize_assoc(b)
    if b.is_zero():
        return _normalize_assoc(a)
    pa, _ = _to_poly(a)
    pb, _ = _to_poly(b)
    return _from_poly(_poly_gcd(pa, pb))


def _normalize_assoc(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return p
    coeffs, _ = _to_poly(p)
    lead = coeffs[-1]
    return _from_poly([c / lead for c in coeffs])


def laurent_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division a / b in QQ[t^±1]; raises on a nonzero remainder."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero Laurent polynomial")
    if a.is_zero():
        return LaurentPoly.zero()
    pa, sa = _to_poly(a)
    pb, sb = _to_poly(b)
    q, r = _poly_divmod(pa, pb)
    if r:
        raise ExactAlgError("non-exact Laurent division")
    return _from_poly(q, sa - sb)


# ---------------------------------------------------------------------------
# Rational functions QQ(t)


class RatFunc:
    """Fraction num/den of Laurent polynomials, gcd-reduced, denominator
    normalized to a monic honest polynomial with nonzero constant term."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, _normalized=False):
        if den is None:
            den = LaurentPoly.one()
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        if num.is_zero():
            return LaurentPoly.zero(), LaurentPoly.one()
        g = laurent_gcd(num, den)
        if not g.is_one():
            num = laurent_exact_div(num, g)
            den = laurent_exact_div(den, g)
        unit = LaurentPoly.monomial(_to_poly(den)[0][-1], den.min_exp()).unit_inverse()
        return num * unit, den * unit

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(LaurentPoly.zero(), None, _normalized=True)

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(LaurentPoly.one(), None, _normalized=True)

    @classmethod
    def of(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x)
        return cls(LaurentPoly.const(x))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def __add__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, _normalized=True)

    def __mul__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.num, self.den * o.den)

    def __truediv__(self, o: "RatFunc") -> "RatFunc":
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __eq__(self, o) -> bool:
        return isinstance(o, RatFunc) and self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def as_laurent(self) -> LaurentPoly:
        if self.den.is_one():
            return self.num
        return laurent_exact_div(self.num, self.den)

    @classmethod
    def parse(cls, text: str) -> "RatFunc":
        text = text.strip()
        if ") / (" in text:
            n, d = text.split(") / (")
            return cls(LaurentPoly.parse(n.lstrip("(")), LaurentPoly.parse(d.rstrip(")")))
        return cls(LaurentPoly.parse(text))


# ---------------------------------------------------------------------------
# Ring specification


class RingSpec:
    """Coefficient domain tag.  kind is one of "integers", "rationals",
    "laurent", "laurent_field"; the fraction-field flag records whether rank
    computations may pass to the fraction field (always true here)."""

    KINDS = ("integers", "rationals", "laurent", "laurent_field")

    def __init__(self, kind: str, fraction_field: bool = True):
        if kind not in self.KINDS:
            raise ExactAlgError(f"unknown ring kind {kind!r}")
        self.kind = kind
        self.fraction_field = fraction_field

    def __eq__(self, other):
        return isinstance(other, RingSpec) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"RingSpec({self.kind!r})"

    @property
    def is_laurent(self) -> bool:
        return self.kind == "laurent"

    @property
    def is_laurent_field(self) -> bool:
        return self.kind == "laurent_field"

    @property
    def over_t(self) -> bool:
        return self.kind in ("laurent", "laurent_field")

    def field_ring(self) -> "RingSpec":
        if self.kind == "laurent":
            return LAURENT_FIELD
        if self.kind == "integers":
            return QQ
        return self

    def zero(self):
        if self.kind == "laurent":
            return LaurentPoly.zero()
        if self.kind == "laurent_field":
            return RatFunc.zero()
        return Fraction(0)

    def one(self):
        if self.kind == "laurent":
            return LaurentPoly.one()
        if self.kind == "laurent_field":
            return RatFunc.one()
        return Fraction(1)

    def coerce(self, x):
        if self.kind == "laurent":
            if isinstance(x, LaurentPoly):
                return x
            if isinstance(x, RatFunc):
                return x.as_laurent()
            return LaurentPoly.const(Fraction(x))
        if self.kind == "laurent_field":
            return RatFunc.of(x)
        if isinstance(x, RatFunc):
            x = x.as_laurent()
        if isinstance(x, LaurentPoly):
            return x.constant_value()
        return Fraction(x)

    def scalar_str(self, x) -> str:
        return str(x)

    def parse_scalar(self, text: str):
        if self.kind == "laurent":
            return LaurentPoly.parse(text)
        if self.kind == "laurent_field":
            return RatFunc.parse(text)
        return Fraction(text.strip())


ZZ = RingSpec("integers")
QQ = RingSpec("rationals")
LAURENT = RingSpec("laurent")
LAURENT_FIELD = RingSpec("laurent_field")


def scalar_is_zero(x) -> bool:
    if isinstance(x, (LaurentPoly, RatFunc)):
        return x.is_zero()
    return x == 0


# ---------------------------------------------------------------------------
# Dense exact matrices


class ExactMatrix:
    """Dense matrix over one of the RingSpec domains.  Operations return new
    matrices; entries are never mutated after construction."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: RingSpec, entries: Sequence[Sequence], rows: int | None = None, cols: int | None = None):
        self.ring = ring
        ents = [list(row) for row in entries]
        self.rows = len(ents) if rows is None else rows
        self.cols = (len(ents[0]) if ents else 0) if cols is None else cols
        for row in ents:
            if len(row) != self.cols:
                raise ExactAlgError("ragged matrix rows")
        self.entries = ents

    @classmethod
    def zeros(cls, ring: RingSpec, rows: int, cols: int) -> "ExactMatrix":
        z = ring.zero()
        return cls(ring, [[z] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "ExactMatrix":
        m = cls.zeros(ring, n, n)
        one = ring.one()
        for i in range(n):
            m.entries[i][i] = one
        return m

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence]) -> "ExactMatrix":
        return cls(ring, [[ring.coerce(x) for x in row] for row in rows])

    def __getitem__(self, ij: tuple[int, int]):
        return self.entries[ij[0]][ij[1]]

    def col(self, j: int) -> list:
        return [self.entries[i][j] for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols} over {self.ring.kind})"

    def is_zero(self) -> bool:
        return all(scalar_is_zero(x) for row in self.entries for x in row)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == ExactMatrix.identity(self.ring, self.rows)

    def _check_ring(self, other: "ExactMatrix"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ExactAlgError("shape mismatch in addition")
        return ExactMatrix(
            self.ring,
            [[self.entries[i][j] + other.entries[i][j] for j in range(self.cols)] for i in range(self.rows)],
            self.rows,
            self.cols,
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "ExactMatrix":
        c = self.ring.coerce(c)
        return ExactMatrix(self.ring, [[x * c for x in row] for row in self.entries], self.rows, self.cols)

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_ring(other)
        if self.cols != other.rows:
            raise ExactAlgError(f"shape mismatch in product: {self.cols} vs {other.rows}")
        zero = self.ring.zero()
        out = [[zero] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            row_i = self.entries[i]
            for k in range(self.cols):
                a = row_i[k]
                if scalar_is_zero(a):
                    continue
                brow = other.entries[k]
                orow = out[i]
                for j in range(other.cols):
                    b = brow[j]
                    if not scalar_is_zero(b):
                        orow[j] = orow[j] + a * b
        return ExactMatrix(self.ring, out, self.rows, other.cols)

    def matvec(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ExactAlgError("vector length mismatch")
        zero = self.ring.zero()
        out = []
        for i in range(self.rows):
            acc = zero
            for j, x in enumerate(v):
                if not scalar_is_zero(x):
                    acc = acc + self.entries[i][j] * x
            out.append(acc)
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.ring,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.cols,
            self.rows,
        )

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product, left factor outer, right factor inner."""
        self._check_ring(other)
        out = ExactMatrix.zeros(self.ring, self.rows * other.rows, self.cols * other.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.entries[i][j]
                if scalar_is_zero(a):
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        b = other.entries[k][l]
                        if not scalar_is_zero(b):
                            out.entries[i * other.rows + k][j * other.cols + l] = a * b
        return out

    def direct_sum(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_ring(other)
        out = ExactMatrix.zeros(self.ring, self.rows + other.rows, self.cols + other.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out.entries[i][j] = self.entries[i][j]
        for i in range(other.rows):
            for j in range(other.cols):
                out.entries[self.rows + i][self.cols + j] = other.entries[i][j]
        return out

    def map_entries(self, f, ring: RingSpec | None = None) -> "ExactMatrix":
        return ExactMatrix(ring or self.ring, [[f(x) for x in row] for row in self.entries], self.rows, self.cols)

    def to_field(self) -> "ExactMatrix":
        fr = self.ring.field_ring()
        if fr == self.ring:
            return self
        return self.map_entries(fr.coerce, fr)

    def eval_at(self, q) -> "ExactMatrix":
        """Specialize a Laurent matrix at t = q, giving a rational matrix."""
        if not self.ring.over_t:
            return self
        if self.ring.is_laurent_field:
            return ExactMatrix(QQ, [[x.num.eval(q) / x.den.eval(q) for x in row] for row in self.entries], self.rows, self.cols)
        return ExactMatrix(QQ, [[x.eval(q) for x in row] for row in self.entries], self.rows, self.cols)

    # -- elimination over the fraction field

    def _rref(self) -> tuple[list[list], list[int]]:
        """Reduced row-echelon form over the fraction field; first-nonzero
        pivot rule, so the result is deterministic."""
        fr = self.ring.field_ring()
        m = [[fr.coerce(x) for x in row] for row in self.entries]
        one = fr.one()
        rows, cols = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            pr = None
            for i in range(r, rows):
                if not scalar_is_zero(m[i][c]):
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            pv = m[r][c]
            m[r] = [x / pv for x in m[r]]
            for i in range(rows):
                if i != r and not scalar_is_zero(m[i][c]):
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return m, pivots

    def rank(self) -> int:
        if self.ring.is_laurent:
            return bareiss_rank(self)
        return len(self._rref()[1])

    def kernel_basis(self) -> list[list]:
        """Exact right-kernel basis.  For Laurent matrices the vectors are
        scaled back into QQ[t^±1]; they annihilate the matrix exactly."""
        rref, pivots = self._rref()
        free = [c for c in range(self.cols) if c not in pivots]
        fr = self.ring.field_ring()
        zero, one = fr.zero(), fr.one()
        basis = []
        for fc in free:
            v = [zero] * self.cols
            v[fc] = one
            for r, pc in enumerate(pivots):
                v[pc] = -rref[r][fc]
            basis.append(self._vector_to_ring(v))
        return basis

    def _vector_to_ring(self, v: list) -> list:
        """Scale a fraction-field vector by a common denominator so its
        entries lie in the base ring (no-op for field rings)."""
        if not self.ring.is_laurent:
            if self.ring.kind == "integers":
                return [Fraction(x) for x in v]
            return list(v)
        out = list(v)
        for x in v:
            if isinstance(x, RatFunc) and not x.den.is_one():
                d = RatFunc(x.den)
                out = [y * d for y in out]
        return [y.as_laurent() if isinstance(y, RatFunc) else y for y in out]

    def cokernel_projection(self) -> tuple["ExactMatrix", list[int]]:
        """Projection P onto the complement of the column space spanned by the
        standard coordinates at non-pivot rows; P @ inclusion = identity on
        the complement.  P is returned over the fraction field."""
        fr = self.ring.field_ring()
        rref_t, pivots = self.transpose()._rref()
        comp = [i for i in range(self.rows) if i not in pivots]
        zero, one = fr.zero(), fr.one()
        proj = []
        for ci in comp:
            row = [zero] * self.rows
            row[ci] = one
            # subtract the column-space combination matching v on pivot coords
            for k, pk in enumerate(pivots):
                coeff = rref_t[k][ci]
                if not scalar_is_zero(coeff):
                    row[pk] = row[pk] - coeff
            proj.append(row)
        return ExactMatrix(fr, proj, len(comp), self.rows), comp

    def inverse(self) -> "ExactMatrix":
        """Exact inverse; result lies in the base ring (for Laurent matrices
        this requires the determinant to be a unit, which holds for every
        representation matrix this package constructs)."""
        if self.rows != self.cols:
            raise NonInvertibleMatrix("non-square matrix")
        n = self.rows
        fr = self.ring.field_ring()
        one, zero = fr.one(), fr.zero()
        m = [[fr.coerce(x) for x in row] for row in self.entries]
        inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
        for c in range(n):
            pr = None
            for i in range(c, n):
                if not scalar_is_zero(m[i][c]):
                    pr = i
                    break
            if pr is None:
                raise NonInvertibleMatrix("singular matrix")
            m[c], m[pr] = m[pr], m[c]
            inv[c], inv[pr] = inv[pr], inv[c]
            pv = m[c][c]
            m[c] = [x / pv for x in m[c]]
            inv[c] = [x / pv for x in inv[c]]
            for i in range(n):
                if i != c and not scalar_is_zero(m[i][c]):
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
                    inv[i] = [a - f * b for a, b in zip(inv[i], inv[c])]
        if self.ring.is_laurent:
            try:
                ents = [[x.as_laurent() for x in row] for row in inv]
            except ExactAlgError as exc:
                raise NonInvertibleMatrix("inverse does not lie in QQ[t^±1]") from exc
            return ExactMatrix(self.ring, ents, n, n)
        if self.ring.kind == "integers":
            return ExactMatrix(self.ring, inv, n, n)
        return ExactMatrix(self.ring, inv, n, n)

    def solve(self, rhs: "ExactMatrix") -> "ExactMatrix | None":
        """Solve self @ X = rhs over the fraction field; None if inconsistent.
        Free variables are set to zero.  X is returned over the field ring."""
        if rhs.rows != self.rows:
            raise ExactAlgError("solve shape mismatch")
        fr = self.ring.field_ring()
        a, b = self.to_field(), rhs.to_field()
        aug = ExactMatrix(fr, [a.entries[i] + b.entries[i] for i in range(a.rows)], a.rows, a.cols + b.cols)
        rref, pivots = aug._rref()
        if any(p >= self.cols for p in pivots):
            return None
        zero = fr.zero()
        xs = [[zero] * rhs.cols for _ in range(self.cols)]
        for r, pc in enumerate(pivots):
            for j in range(rhs.cols):
                xs[pc][j] = rref[r][self.cols + j]
        return ExactMatrix(fr, xs, self.cols, rhs.cols)

    # -- serialization

    def to_strings(self) -> list[list[str]]:
        return [[self.ring.scalar_str(x) for x in row] for row in self.entries]

    @classmethod
    def from_strings(cls, ring: RingSpec, rows: Sequence[Sequence[str]], shape: tuple[int, int] | None = None) -> "ExactMatrix":
        ents = [[ring.parse_scalar(x) for x in row] for row in rows]
        if shape is not None:
            return cls(ring, ents, shape[0], shape[1])
        return cls(ring, ents)


# ---------------------------------------------------------------------------
# Fraction-free Bareiss elimination (Laurent matrices)


def bareiss_rank(M: ExactMatrix) -> int:
    """Rank of a Laurent matrix over QQ(t) by fraction-free elimination.

    Rows are scaled by units t^-min so all entries are honest polynomials;
    the Bareiss update keeps every intermediate entry polynomial, with exact
    division by the previous pivot.
    """
    if not M.ring.is_laurent:
        return M.rank()
    m = []
    for row in M.entries:
        nz = [x for x in row if not x.is_zero()]
        if nz:
            shift = -min(x.min_exp() for x in nz)
            row = [LaurentPoly({e + shift: c for e, c in x.coeffs.items()}) for x in row]
        m.append(list(row))
    rows, cols = M.rows, M.cols
    rank = 0
    prev = LaurentPoly.one()
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if not m[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pivot = m[r][c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                num = m[i][j] * pivot - m[i][c] * m[r][j]
                m[i][j] = laurent_exact_div(num, prev)
            m[i][c] = LaurentPoly.zero()
        prev = pivot
        rank += 1
        r += 1
        if r == rows:
            break
    return rank


def naive_field_rank(M: ExactMatrix) -> int:
    """Rank by naive fraction-field Gaussian elimination (the cross-check
    route to :func:`bareiss_rank`)."""
    return len(M._rref()[1])


def rank_by_specialization(M: ExactMatrix, points: Iterable) -> int:
    """Best rank observed among exact specializations t = q.  Each value is a
    lower bound for the generic rank and equals it off the bad locus, so a
    retry at a fresh point recovers from an unlucky specialization."""
    best = 0
    for q in points:
        if q == 0:
            continue
        try:
            best = max(best, M.eval_at(q).rank())
        except ZeroDivisionError:
            continue
    return best


def mat_rank_kernel(M: ExactMatrix) -> tuple[int, list[list], ExactMatrix]:
    """Rank over the fraction field, exact kernel basis, and the cokernel
    projection onto the chosen complement of the column space."""
    rank = naive_field_rank(M)
    kernel = M.kernel_basis()
    proj, _ = M.cokernel_projection()
    return rank, kernel, proj
