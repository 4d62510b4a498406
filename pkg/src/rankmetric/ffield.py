"""Finite extension fields GF(q^m) over a small prime base field GF(q).

Elements are encoded as plain integers in [0, q^m): the base-q digits of the
encoding are the coordinates in the polynomial basis (1, alpha, ...,
alpha^(m-1)), where alpha is a root of the modulus polynomial.  Consequently
addition is digit-wise mod q (XOR for q=2), base-field elements occupy the
encodings 0..q-1, and alpha itself is the encoding q.

Multiplication uses log/antilog tables for fields up to 2^16 elements and
schoolbook polynomial arithmetic above that (both paths implemented, and
checked against each other in the test suite).  Fields larger than 2^20 are
rejected.

The modulus defaults to the monic irreducible polynomial of degree m whose
coefficient tuple (c_0, ..., c_m), read as a base-q integer, is smallest.
Irreducibility is certified by trial division against every monic polynomial
of degree 1..m/2.
"""
from __future__ import annotations

import functools
import itertools

from . import _linalg

SUPPORTED_Q = (2, 3, 5)
MAX_ORDER = 1 << 20   # largest supported field size q^m
TABLE_LIMIT = 1 << 16  # log/antilog tables are built up to this size


def _poly_rem(num, den, q):
    """Remainder of polynomial division over GF(q) (lists, low degree first)."""
    num = list(num)
    dn = len(den) - 1
    inv_lead = pow(den[-1], -1, q)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] * inv_lead % q
        if c:
            for k in range(dn + 1):
                num[i - dn + k] = (num[i - dn + k] - c * den[k]) % q
    while num and num[-1] == 0:
        num.pop()
    return num


@functools.cache
def is_irreducible(coeffs, q):
    """Irreducibility over GF(q) by trial division (monic input expected)."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1:
        return False
    if m == 1:
        return True
    if coeffs[0] == 0:  # divisible by x
        return False
    for d in range(1, m // 2 + 1):
        for lower in itertools.product(range(q), repeat=d):
            den = list(lower) + [1]
            if not _poly_rem(coeffs, den, q):
                return False
    return True


@functools.cache
def default_modulus(q, m):
    """Lexicographically smallest monic irreducible of degree m over GF(q).

    "Smallest" means the coefficient tuple read as a base-q integer; e.g. the
    default for GF(4) is x^2 + x + 1 and for GF(8) is x^3 + x + 1.
    """
    for v in range(q ** m):
        coeffs = []
        t = v
        for _ in range(m):
            coeffs.append(t % q)
            t //= q
        coeffs.append(1)
        if is_irreducible(tuple(coeffs), q):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """GF(q^m): arithmetic on integer-encoded elements.

    All arithmetic methods take and return plain ints; ``element`` wraps one
    in a FieldElement for operator syntax.
    """

    def __init__(self, q, m, modulus=None):
        if q not in SUPPORTED_Q:
            raise ValueError(f"unsupported base field GF({q}); q must be one of {SUPPORTED_Q}")
        if m < 1:
            raise ValueError("extension degree m must be >= 1")
        order = q ** m
        if order > MAX_ORDER:
            raise ValueError(f"field size q^m = {order} exceeds the supported limit 2^20")
        self.q = q
        self.m = m
        self.order = order
        if modulus is None:
            modulus = default_modulus(q, m)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != m + 1:
                raise ValueError(f"modulus must have degree {m} ({m + 1} coefficients)")
            if any(not 0 <= c < q for c in modulus):
                raise ValueError("modulus coefficients must lie in [0, q)")
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if not is_irreducible(modulus, q):
                raise ValueError("modulus is reducible over GF(q)")
        self.modulus = modulus
        if q == 2:
            self._modint = sum(c << i for i, c in enumerate(modulus))
            self._top = 1 << m
        self._exp = None
        self._log = None
        self.generator = None
        if order <= TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _build_tables(self):
        order = self.order
        if order == 2:
            self._exp = [1]
            self._log = [-1, 0]
            self.generator = 1
            return
        for g in range(2, order):
            exp = [1]
            x = 1
            for _ in range(order - 2):
                x = self._mul_raw(x, g)
                if x == 1:
                    break
                exp.append(x)
            else:
                self._exp = exp
                log = [-1] * order
                for i, v in enumerate(exp):
                    log[v] = i
                self._log = log
                self.generator = g
                return
        raise AssertionError("no generator found")  # unreachable

    # -- encoding ------------------------------------------------------------

    def digits(self, x):
        """Base-q digits of x, low to high: coordinates in the polynomial basis."""
        q = self.q
        out = []
        for _ in range(self.m):
            out.append(x % q)
            x //= q
        return tuple(out)

    def from_digits(self, ds):
        q = self.q
        x = 0
        for d in reversed(list(ds)):
            x = x * q + d % q
        return x

    def elements(self):
        return range(self.order)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        if self.q == 2:
            return a ^ b
        q = self.q
        out = 0
        mult = 1
        for _ in range(self.m):
            out += (a + b) % q * mult
            a //= q
            b //= q
            mult *= q
        return out

    def neg(self, a):
        if self.q == 2:
            return a
        q = self.q
        out = 0
        mult = 1
        for _ in range(self.m):
            out += -a % q * mult
            a //= q
            mult *= q
        return out

    def sub(self, a, b):
        if self.q == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def _mul_raw(self, a, b):
        """Schoolbook polynomial multiplication with reduction by the modulus."""
        if self.q == 2:
            r = 0
            while a:
                if a & 1:
                    r ^= b
                a >>= 1
                b <<= 1
                if b & self._top:
                    b ^= self._modint
            return r
        q, m = self.q, self.m
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % q
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for k in range(m):
                    prod[i - m + k] = (prod[i - m + k] - c * self.modulus[k]) % q
        return self.from_digits(prod[:m])

    def mul(self, a, b):
        if self._log is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._mul_raw(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(q^m)")
        if self._log is not None:
            return self._exp[-self._log[a] % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, x, e):
        if e < 0:
            return self.inv(self.pow(x, -e))
        if x == 0:
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[self._log[x] * e % (self.order - 1)]
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, x)
            x = self._mul_raw(x, x)
            e >>= 1
        return r

    def frobenius(self, x, a=1):
        """x^(q^a); a may be any integer (reduced mod m, since x^(q^m) = x)."""
        a %= self.m
        if x == 0 or a == 0:
            return x
        if self._log is not None:
            return self._exp[self._log[x] * pow(self.q, a, self.order - 1) % (self.order - 1)]
        for _ in range(a):
            x = self.pow(x, self.q)
        return x

    def trace(self, x):
        """Trace into GF(q): sum of x^(q^i) for i < m.  Returns an int < q."""
        t = 0
        y = x
        for _ in range(self.m):
            t = self.add(t, y)
            y = self.frobenius(y)
        assert t < self.q, "trace landed outside the base field"
        return t

    # -- bases and expansions --------------------------------------------------

    def _basis_matrix(self, basis):
        basis = list(basis)
        if len(basis) != self.m:
            raise ValueError(f"a basis of GF({self.q}^{self.m}) needs {self.m} elements")
        return [[self.digits(b)[i] for b in basis] for i in range(self.m)]

    def is_basis(self, basis):
        return _linalg.invert_mod_q(self._basis_matrix(basis), self.q) is not None

    def coords(self, x, basis=None):
        """Coordinates of x over GF(q) with respect to basis (default: polynomial)."""
        if basis is None:
            return self.digits(x)
        binv = _linalg.invert_mod_q(self._basis_matrix(basis), self.q)
        if binv is None:
            raise ValueError("given elements do not form a basis")
        return tuple(_linalg.matvec_mod_q(binv, list(self.digits(x)), self.q))

    def from_coords(self, cs, basis=None):
        if basis is None:
            return self.from_digits(cs)
        x = 0
        for c, b in zip(cs, basis):
            x = self.add(x, self.mul(c % self.q, b))
        return x

    def expand(self, vec, basis=None):
        """m x n matrix over GF(q): column j holds the coordinates of vec[j]."""
        binv = None
        if basis is not None:
            binv = _linalg.invert_mod_q(self._basis_matrix(basis), self.q)
            if binv is None:
                raise ValueError("given elements do not form a basis")
        cols = []
        for v in vec:
            d = list(self.digits(v))
            cols.append(d if binv is None else _linalg.matvec_mod_q(binv, d, self.q))
        return tuple(tuple(col[i] for col in cols) for i in range(self.m))

    def reassemble(self, mat, basis=None):
        """Inverse of expand: columns of the m x n matrix back to field elements."""
        mat = [list(row) for row in mat]
        if len(mat) != self.m:
            raise ValueError(f"expected {self.m} rows")
        n = len(mat[0]) if mat else 0
        out = []
        for j in range(n):
            col = [mat[i][j] for i in range(self.m)]
            out.append(self.from_coords(col, basis))
        return tuple(out)

    def dual_basis(self, basis):
        """The trace-dual basis P of E: trace(E_i * P_j) = delta_ij.

        Solved as a linear system over GF(q) by writing each P_j in the
        polynomial basis; the trace form is nondegenerate, so the system
        matrix is invertible exactly when E is a basis.
        """
        basis = list(basis)
        if len(basis) != self.m:
            raise ValueError(f"a basis of GF({self.q}^{self.m}) needs {self.m} elements")
        powers = self.polynomial_basis()
        mat = [[self.trace(self.mul(e, p)) for p in powers] for e in basis]
        cinv = _linalg.invert_mod_q(mat, self.q)
        if cinv is None:
            raise ValueError("given elements do not form a basis")
        return tuple(self.from_digits([cinv[k][j] for k in range(self.m)])
                     for j in range(self.m))

    # -- misc ------------------------------------------------------------------

    def element(self, value):
        return FieldElement(self, value % self.order)

    def polynomial_basis(self):
        """(1, alpha, ..., alpha^(m-1)): encodings are the powers of q."""
        return tuple(self.q ** k for k in range(self.m))

    def descriptor(self):
        """Text form "q m c_0 c_1 ... c_m" (modulus coefficients low to high)."""
        return " ".join(str(x) for x in (self.q, self.m, *self.modulus))

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.q, self.m, self.modulus) == (other.q, other.m, other.modulus))

    def __hash__(self):
        return hash((self.q, self.m, self.modulus))

    def __repr__(self):
        return f"Field(q={self.q}, m={self.m}, modulus={_poly_str(self.modulus)})"


def _poly_str(coeffs, var="x"):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            cs = "" if c == 1 else str(c)
            terms.append(f"{cs}{var}" + (f"^{i}" if i > 1 else ""))
    return " + ".join(terms) if terms else "0"


@functools.lru_cache(maxsize=None)
def _field_cached(q, m, modulus):
    return Field(q, m, modulus)


def make_field(q, m, modulus=None):
    """Construct GF(q^m); modulus defaults to the smallest monic irreducible.

    Fields are immutable, so repeated calls with the same parameters return
    the same object (log/antilog tables are built once).
    """
    return _field_cached(q, m, None if modulus is None else tuple(modulus))


def field_from_descriptor(text):
    """Parse "q m c_0 ... c_m" back into a Field."""
    parts = [int(t) for t in text.split()]
    if len(parts) < 2:
        raise ValueError("descriptor needs at least q and m")
    q, m = parts[0], parts[1]
    rest = parts[2:]
    return Field(q, m, rest if rest else None)


def element_arith(field, a, b, op):
    """Dispatch basic arithmetic on integer-encoded elements.

    op is one of add, sub, mul, div, inv, or "pow k" with an integer k.
    """
    if op == "add":
        return field.add(a, b)
    if op == "sub":
        return field.sub(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "div":
        return field.div(a, b)
    if op == "inv":
        return field.inv(a)
    if op.startswith("pow"):
        return field.pow(a, int(op.split()[1]))
    raise ValueError(f"unknown operation {op!r}")


class FieldElement:
    """Operator-syntax wrapper around an integer-encoded element."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements from different fields")
            return other.value
        return int(other) % self.field.order

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._coerce(other), self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __int__(self):
        return self.value

    def frobenius(self, a=1):
        return FieldElement(self.field, self.field.frobenius(self.value, a))

    def trace(self):
        return self.field.trace(self.value)

    def __repr__(self):
        return f"<{_poly_str(self.field.digits(self.value), 'a')} in GF({self.field.q}^{self.field.m})>"
