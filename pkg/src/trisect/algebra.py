"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction`.  :class:`UPoly` is a dense
univariate polynomial whose coefficients live in any exact field that
supports ``+ - * /`` (rationals, or :class:`AlgNum` elements of one
quotient ring).  :class:`BiPoly` is a polynomial in ``x`` whose
coefficients are rational :class:`UPoly` in ``t``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Sequence, Union

Rat = Fraction
Scalar = Union[Fraction, "AlgNum"]


class ZeroDivisorSplit(ArithmeticError):
    """Inversion hit a zero divisor of a reducible modulus.

    ``factor`` is a nontrivial monic divisor of the modulus, so callers can
    split the quotient ring and retry on both pieces.
    """

    def __init__(self, modulus: "UPoly", factor: "UPoly"):
        super().__init__(f"modulus {modulus} splits off {factor}")
        self.modulus = modulus
        self.factor = factor


class SingularSystemError(ArithmeticError):
    pass


def to_rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(value: Fraction) -> str:
    return str(value)


def _coerce(c):
    if isinstance(c, (Fraction, AlgNum)):
        return c
    return to_rat(c)


class UPoly:
    """Dense polynomial, coefficients in ascending degree order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls) -> "UPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "UPoly":
        return cls((c,))

    @classmethod
    def linear_root(cls, r) -> "UPoly":
        """The monic polynomial ``t - r``."""
        return cls((-_coerce(r), 1))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _wrap(self, other) -> "UPoly":
        return other if isinstance(other, UPoly) else UPoly((other,))

    def __add__(self, other) -> "UPoly":
        other = self._wrap(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UPoly":
        return self + (-self._wrap(other))

    def __rsub__(self, other) -> "UPoly":
        return self._wrap(other) - self

    def __mul__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            other = _coerce(other)
            return UPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = UPoly((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "UPoly"):
        other = self._wrap(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree()
        inv_lc = 1 / other.lc() if isinstance(other.lc(), Fraction) else other.lc().inverse()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] * inv_lc
            quot[k] = c
            if c == 0:
                continue
            for j, oc in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * oc
        return UPoly(quot), UPoly(rem[:dq])

    def __truediv__(self, other) -> "UPoly":
        """Division by a nonzero scalar; use divmod or exact_div for polynomials."""
        if isinstance(other, UPoly):
            raise TypeError("use divmod or exact_div to divide by a polynomial")
        other = _coerce(other)
        if other == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        inv = 1 / other
        return UPoly(c * inv for c in self.coeffs)

    def __floordiv__(self, other) -> "UPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UPoly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element (or a UPoly)."""
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> "UPoly":
        if order < 1:
            raise ValueError("derivative order must be positive")
        cs = self.coeffs
        for _ in range(order):
            cs = tuple(c * i for i, c in enumerate(cs))[1:]
        return UPoly(cs)

    def shift(self, tau) -> "UPoly":
        """Return ``p(t + tau)``."""
        acc = UPoly()
        step = UPoly((tau, 1))
        for c in reversed(self.coeffs):
            acc = acc * step + c
        return acc

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        lc = self.lc()
        inv = 1 / lc if isinstance(lc, Fraction) else lc.inverse()
        return self * inv

    def padded(self, n: int) -> list:
        return list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))

    def reversed_to(self, n: int) -> "UPoly":
        """``s^n p(1/s)`` for a formal degree bound ``n >= deg p``."""
        if self.degree() > n:
            raise ValueError(f"degree {self.degree()} exceeds formal bound {n}")
        return UPoly(reversed(self.padded(n + 1)))

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "UPoly":
        return cls(to_rat(c) for c in data)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                cs = str(c) if not isinstance(c, AlgNum) else f"({c})"
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(p: UPoly, q: UPoly) -> UPoly:
    """Monic gcd (zero only if both inputs are zero)."""
    while q:
        p, q = q, p % q
    return p.monic()


def poly_xgcd(p: UPoly, q: UPoly):
    """Return ``(g, s, u)`` with ``s*p + u*q = g`` and ``g`` monic."""
    r0, r1 = p, q
    s0, s1 = UPoly((1,)), UPoly()
    u0, u1 = UPoly(), UPoly((1,))
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        u0, u1 = u1, u0 - quo * u1
    if not r0:
        return r0, s0, u0
    inv = 1 / r0.lc()
    return r0 * inv, s0 * inv, u0 * inv


def derivative(p: UPoly, order: int = 1) -> UPoly:
    return p.derivative(order)


def poly_arith(p: UPoly, q: UPoly, op: str):
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "divrem":
        return divmod(p, q)
    raise ValueError(f"unknown operation {op!r}")


def root_multiplicity(p: UPoly, r) -> int:
    if p.is_zero():
        raise ValueError("root multiplicity of the zero polynomial")
    r = _coerce(r)
    m = 0
    while p(r) == 0:
        p = p.exact_div(UPoly.linear_root(r))
        m += 1
    return m


def squarefree_decomposition(p: UPoly) -> list[tuple[UPoly, int]]:
    """Yun's algorithm; monic, pairwise coprime factors in ascending exponent."""
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    if p.degree() == 0:
        return []
    dp = p.derivative()
    b = poly_gcd(p, dp)
    c = p.exact_div(b).monic()
    d = dp.exact_div(b) * (1 / p.exact_div(b).lc()) - c.derivative()
    out = []
    i = 1
    while c.degree() > 0:
        a = poly_gcd(c, d)
        if a.degree() > 0:
            out.append((a, i))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        i += 1
    return out


def squarefree_part(p: UPoly) -> UPoly:
    out = UPoly((1,))
    for factor, _ in squarefree_decomposition(p):
        out = out * factor
    return out


def _primitive_integer(p: UPoly) -> list[int]:
    den = lcm(*(c.denominator for c in p.coeffs))
    return [int(c * den) for c in p.coeffs]


def _sturm_sequence(p: UPoly) -> list[list[int]]:
    """Sturm chain of ``p`` as integer coefficient lists, each rescaled by a positive factor."""
    seq = [UPoly(_primitive_integer(p))]
    seq.append(UPoly(_primitive_integer(seq[0].derivative())))
    while seq[-1].degree() > 0:
        rem = seq[-2] % seq[-1]
        if rem.is_zero():
            break
        seq.append(-UPoly(_primitive_integer(rem)))
    return [[int(c) for c in q.coeffs] for q in seq]


def _scaled_value(coeffs: list[int], num: int, den: int) -> int:
    """den^deg * q(num / den) for den > 0, so the sign matches q(num / den)."""
    value, power = coeffs[-1], 1
    for c in reversed(coeffs[:-1]):
        power *= den
        value = value * num + c * power
    return value


def _sign_changes(seq: list[list[int]], num: int, den: int) -> int:
    signs = [v > 0 for v in (_scaled_value(q, num, den) for q in seq) if v != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _squarefree_rational_roots(p: UPoly) -> list[Fraction]:
    """Rational roots of a squarefree rational polynomial.

    A rational root of the primitive integer form has denominator dividing
    the leading coefficient, so roots are isolated with a Sturm sequence
    until each interval is narrower than that lattice spacing, and the few
    lattice points inside are tested exactly. Interval ends are dyadic and
    all evaluation stays in integers.
    """
    if p.degree() <= 0:
        return []
    roots = []
    if p.coeff(0) == 0:
        roots.append(Fraction(0))
        p = UPoly(p.coeffs[1:])
        if p.degree() <= 0:
            return roots
    if p.degree() == 1:
        return sorted(roots + [-p.coeff(0) / p.coeff(1)])
    ints = _primitive_integer(p)
    lead = abs(ints[-1])
    # Cauchy bound rounded up to a power of two
    bound = 1 + max(abs(c) for c in ints[:-1]) // lead + 1
    seq = _sturm_sequence(p)
    # (lo, hi, e) stands for the interval (lo / 2^e, hi / 2^e]
    k = bound.bit_length()
    stack = [(-(1 << k), 1 << k, 0)]
    while stack:
        lo, hi, e = stack.pop()
        den = 1 << e
        if _sign_changes(seq, lo, den) == _sign_changes(seq, hi, den):
            continue
        if (hi - lo) * lead < den:
            m = ((lo * lead) >> e) + 1
            while m * den <= hi * lead:
                if _scaled_value(ints, m, lead) == 0:
                    roots.append(Fraction(m, lead))
                m += 1
            continue
        stack.append((2 * lo, lo + hi, e + 1))
        stack.append((lo + hi, 2 * hi, e + 1))
    return sorted(set(roots))


def rational_roots(p: UPoly) -> list[tuple[Fraction, int]]:
    """All rational roots of ``p`` with multiplicities, sorted by value."""
    if p.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    out = []
    for factor, e in squarefree_decomposition(p):
        out.extend((r, e) for r in _squarefree_rational_roots(factor))
    return sorted(out)


def remove_rational_roots(p: UPoly) -> tuple[list[Fraction], UPoly]:
    """Split a squarefree ``p`` into its rational roots and the monic cofactor."""
    roots = _squarefree_rational_roots(p)
    rest = p.monic()
    for r in roots:
        rest = rest.exact_div(UPoly.linear_root(r))
    return roots, rest


def interpolate(points: Sequence[tuple]) -> UPoly:
    """Lagrange interpolation through ``(x, y)`` pairs with distinct x."""
    total = UPoly()
    for i, (xi, yi) in enumerate(points):
        term = UPoly((yi,))
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * UPoly((-xj, 1)) * (1 / Fraction(xi - xj))
        total = total + term
    return total


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Gauss-Jordan elimination over an exact field."""
    n = len(matrix)
    rows = [[_coerce(v) for v in row] + [_coerce(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise SingularSystemError(f"no pivot in column {col}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[col])]
    return [row[-1] for row in rows]


class AlgNum:
    """Element of the quotient ring Q[t]/(modulus)."""

    __slots__ = ("modulus", "value")

    def __init__(self, modulus: UPoly, value: UPoly | None = None):
        if modulus.degree() < 1 or modulus.lc() != 1:
            raise ValueError("modulus must be monic of positive degree")
        self.modulus = modulus
        self.value = (value if value is not None else UPoly()) % modulus

    @classmethod
    def generator(cls, modulus: UPoly) -> "AlgNum":
        """Class of ``t``; moduli of degree <= 3 are checked for irreducibility."""
        modulus = modulus.monic()
        if modulus.degree() <= 3 and modulus.degree() > 1 and _squarefree_rational_roots(modulus):
            raise ValueError(f"{modulus} has a rational root, so it is reducible")
        return cls(modulus, UPoly.t())

    def _same(self, other) -> "AlgNum":
        if isinstance(other, AlgNum):
            if other.modulus != self.modulus:
                raise ValueError("AlgNum operands have different moduli")
            return other
        return AlgNum(self.modulus, UPoly((_coerce(other),)))

    def __add__(self, other):
        other = self._same(other)
        return AlgNum(self.modulus, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        return AlgNum(self.modulus, -self.value)

    def __sub__(self, other):
        other = self._same(other)
        return AlgNum(self.modulus, self.value - other.value)

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        if isinstance(other, UPoly):
            return NotImplemented
        other = self._same(other)
        return AlgNum(self.modulus, self.value * other.value)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = AlgNum(self.modulus, UPoly((1,)))
        base = self
        if n < 0:
            base, n = base.inverse(), -n
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "AlgNum":
        if not self.value:
            raise ZeroDivisionError("inverse of zero in a quotient ring")
        g, s, _ = poly_xgcd(self.value, self.modulus)
        if g.degree() > 0:
            raise ZeroDivisorSplit(self.modulus, g)
        return AlgNum(self.modulus, s)

    def is_unit(self) -> bool:
        """True for invertible elements; raises ZeroDivisorSplit on zero divisors."""
        if not self.value:
            return False
        self.inverse()
        return True

    def __truediv__(self, other):
        other = self._same(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._same(other) * self.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgNum):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == UPoly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.modulus, self.value))

    def __bool__(self) -> bool:
        return bool(self.value)

    def to_json(self) -> dict:
        return {"modulus": self.modulus.to_json(), "value": self.value.to_json()}

    def __repr__(self) -> str:
        return f"[{self.value}] mod ({self.modulus})"


def is_nonzero(c) -> bool:
    """Exact nonzero test that refuses to treat zero divisors as units."""
    if isinstance(c, AlgNum):
        return c.is_unit()
    return c != 0


def split_modulus(exc: ZeroDivisorSplit) -> tuple[UPoly, UPoly]:
    g = exc.factor.monic()
    return g, exc.modulus.exact_div(g).monic()


class BiPoly:
    """Polynomial in x whose coefficients are UPoly in t (ascending in x)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, UPoly) else UPoly((c,)) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "BiPoly":
        return cls((UPoly(), UPoly((1,))))

    @classmethod
    def from_t(cls, p: UPoly) -> "BiPoly":
        return cls((p,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree_x(self) -> int:
        return len(self.coeffs) - 1

    def degree_t(self) -> int:
        return max((c.degree() for c in self.coeffs), default=-1)

    def _wrap(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UPoly):
            return BiPoly((other,))
        return BiPoly((UPoly((other,)),))

    def __add__(self, other) -> "BiPoly":
        other = self._wrap(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return BiPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "BiPoly":
        return self + (-self._wrap(other))

    def __rsub__(self, other) -> "BiPoly":
        return self._wrap(other) - self

    def __mul__(self, other) -> "BiPoly":
        other = self._wrap(other)
        if self.is_zero() or other.is_zero():
            return BiPoly()
        out = [UPoly()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, p in enumerate(self.coeffs):
            for j, q in enumerate(other.coeffs):
                out[i + j] = out[i + j] + p * q
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        result = BiPoly((UPoly((1,)),))
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def diff_x(self) -> "BiPoly":
        return BiPoly(c * i for i, c in enumerate(self.coeffs))._drop_const()

    def _drop_const(self) -> "BiPoly":
        return BiPoly(self.coeffs[1:])

    def diff_t(self) -> "BiPoly":
        return BiPoly(c.derivative() for c in self.coeffs)

    def __call__(self, x, t):
        """Evaluate at a point; coordinates may be rationals or AlgNums."""
        return UPoly(c(t) for c in self.coeffs)(x) if self.coeffs else Fraction(0)

    def at_t(self, t) -> UPoly:
        """Specialise ``t``; the result is a polynomial in x over t's field."""
        return UPoly(c(t) for c in self.coeffs)

    def terms(self) -> dict[tuple[int, int], object]:
        return {(i, j): c for i, p in enumerate(self.coeffs) for j, c in enumerate(p.coeffs) if c != 0}

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    def __repr__(self) -> str:
        parts = [f"({c})*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"


def taylor_shift(p: BiPoly, x0, t0, order: str = "xt") -> dict[tuple[int, int], object]:
    """Coefficients of ``p(x + x0, t + t0)`` as a ``{(i, j): c}`` map.

    ``order`` picks which variable is shifted first; both routes give the
    same polynomial and are kept so the equality can be tested.
    """
    grid = [list(c.coeffs) for c in p.coeffs]

    def shift_t(rows):
        return [list(UPoly(row).shift(t0).padded(len(row))) if row else [] for row in rows]

    def shift_x(rows):
        width = max((len(r) for r in rows), default=0)
        cols = [[rows[i][j] if j < len(rows[i]) else Fraction(0) for i in range(len(rows))] for j in range(width)]
        cols = [list(UPoly(col).shift(x0).padded(len(col))) for col in cols]
        return [[cols[j][i] for j in range(width)] for i in range(len(rows))]

    if order == "xt":
        grid = shift_t(shift_x(grid))
    elif order == "tx":
        grid = shift_x(shift_t(grid))
    else:
        raise ValueError("order must be 'xt' or 'tx'")
    return {(i, j): c for i, row in enumerate(grid) for j, c in enumerate(row) if c != 0}


def hasse_coefficient(p: BiPoly, i: int, j: int, x0, t0):
    """Coefficient of ``X^i T^j`` in ``p(X + x0, T + t0)`` computed directly."""
    total = Fraction(0)
    for (k, l), c in p.terms().items():
        if k >= i and l >= j:
            total = total + comb(k, i) * comb(l, j) * c * _power(x0, k - i) * _power(t0, l - j)
    return total


def _power(v, n: int):
    return v ** n if n else Fraction(1)


def _bareiss_det(rows: list[list[UPoly]]) -> UPoly:
    m = [row[:] for row in rows]
    n = len(m)
    if n == 0:
        return UPoly((1,))
    sign = 1
    prev = UPoly((1,))
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return UPoly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def sylvester_matrix(p: Sequence, q: Sequence) -> list[list]:
    """Sylvester matrix of two coefficient lists given in ascending order."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    zero = UPoly()
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(p)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(q)):
            row[i + k] = c
        rows.append(row)
    return rows


def resultant_x(p: BiPoly, q: BiPoly) -> UPoly:
    """Resultant with respect to x, a polynomial in t."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    m, n = p.degree_x(), q.degree_x()
    if m == 0:
        return p.coeffs[0] ** n
    if n == 0:
        return q.coeffs[0] ** m
    return _bareiss_det(sylvester_matrix(p.coeffs, q.coeffs))


def algnum_eval(p: UPoly | BiPoly, *coords):
    """Evaluate ``p`` at rational/AlgNum coordinates sharing one modulus."""
    moduli = {c.modulus for c in coords if isinstance(c, AlgNum)}
    if len(moduli) > 1:
        raise ValueError("coordinates carry different moduli")
    if isinstance(p, BiPoly):
        x, t = coords
        value = p(x, t)
    else:
        (x,) = coords
        value = p(x)
    if moduli and not isinstance(value, AlgNum):
        value = AlgNum(next(iter(moduli)), UPoly((value,)))
    return value
