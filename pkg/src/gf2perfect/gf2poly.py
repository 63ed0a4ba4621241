"""Exact arithmetic for polynomials over the two-element field.

A polynomial c_n x^n + ... + c_1 x + c_0 with c_i in {0, 1} is stored as
the nonnegative integer c_n 2^n + ... + c_1 2 + c_0, so bit i of the
integer is the coefficient of x^i.  Python's arbitrary-precision integers
give dense packed-bit storage for free: addition is XOR, multiplication
by x^k is a left shift, and equality/ordering of masks coincides with the
canonical (degree, coefficient-mask) ordering used throughout.

The zero polynomial is the integer 0 and its degree is the distinct
sentinel ``NEG_INFINITY`` (never -1), so degree laws such as
deg(p*q) = deg(p) + deg(q) stay testable.

Multiplication uses a windowed carry-less kernel for large operands and a
schoolbook shift-XOR loop otherwise; both produce bit-identical results.
"""

from __future__ import annotations

import re

NEG_INFINITY = float("-inf")

#: Operand size (sum of bit lengths) above which multiplication switches
#: from the schoolbook loop to the windowed kernel.
_MUL_WINDOW_CUTOVER = 1536


class BudgetError(RuntimeError):
    """A computation was refused because it exceeds a configured cost cap."""


def _spread_table():
    # byte -> 16-bit value with the byte's bits moved to even positions
    table = []
    for v in range(256):
        s = 0
        for i in range(8):
            if v >> i & 1:
                s |= 1 << (2 * i)
        table.append(s)
    return table


def _compress_table():
    # 16-bit value -> byte collecting the bits at even positions
    table = [0] * 65536
    for v in range(1, 65536):
        table[v] = table[v >> 2] << 1 | (v & 1)
    return table


_SPREAD16 = _spread_table()
_COMPRESS16 = _compress_table()


def _sqr_mask(a):
    # Frobenius: squaring spreads bit i to bit 2i
    out = 0
    shift = 0
    while a:
        out |= _SPREAD16[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return out


def _sqrt_mask(a):
    out = 0
    shift = 0
    while a:
        out |= _COMPRESS16[a & 0xFFFF] << shift
        a >>= 16
        shift += 8
    return out


def _mul_schoolbook(a, b):
    if a.bit_count() > b.bit_count():
        a, b = b, a
    acc = 0
    while a:
        low = a & -a
        acc ^= b * low  # low is a power of two, so this is a shift
        a ^= low
    return acc


def _mul_windowed(a, b):
    # precompute all 8-bit multiples of the longer operand, then scan the
    # shorter one byte at a time
    if a.bit_length() < b.bit_length():
        a, b = b, a
    table = [0] * 256
    for w in range(1, 256):
        low = w & -w
        table[w] = table[w ^ low] ^ (a * low)
    acc = 0
    shift = 0
    while b:
        acc ^= table[b & 0xFF] << shift
        b >>= 8
        shift += 8
    return acc


def _mul_mask(a, b):
    if a == 0 or b == 0:
        return 0
    if a.bit_length() + b.bit_length() > _MUL_WINDOW_CUTOVER:
        return _mul_windowed(a, b)
    return _mul_schoolbook(a, b)


def _divmod_mask(a, d):
    if d == 0:
        raise ZeroDivisionError("division by zero polynomial")
    dn = d.bit_length() - 1
    q = 0
    while True:
        shift = a.bit_length() - 1 - dn
        if shift < 0:
            return q, a
        q |= 1 << shift
        a ^= d << shift


def _mod_mask(a, d):
    if d == 0:
        raise ZeroDivisionError("division by zero polynomial")
    dn = d.bit_length() - 1
    while True:
        shift = a.bit_length() - 1 - dn
        if shift < 0:
            return a
        a ^= d << shift


def _gcd_mask(a, b):
    while b:
        a, b = b, _mod_mask(a, b)
    return a


def _bar_mask(a):
    # substitute x -> x+1 by accumulating successive powers of x+1
    out = 0
    power = 1
    while a:
        if a & 1:
            out ^= power
        a >>= 1
        power ^= power << 1
    return out


def _even_positions_mask(width):
    # 0b...010101 covering bit positions 0, 2, ... below width
    w = width + (width & 1)
    return ((1 << w) - 1) // 3


class Poly:
    """Immutable polynomial over GF(2), wrapping a coefficient bitmask.

    Supports +, *, **, divmod, //, %, << (shift by x^k) between Poly
    values.  Comparison orders by mask, which sorts by degree first and
    then by coefficients.
    """

    __slots__ = ("_mask",)

    def __init__(self, mask: int):
        if not isinstance(mask, int) or mask < 0:
            raise ValueError("coefficient mask must be a nonnegative integer")
        object.__setattr__(self, "_mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def mask(self) -> int:
        return self._mask

    @property
    def degree(self):
        """Degree of the polynomial; NEG_INFINITY for the zero polynomial."""
        if self._mask == 0:
            return NEG_INFINITY
        return self._mask.bit_length() - 1

    @classmethod
    def monomial(cls, k: int) -> "Poly":
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls(1 << k)

    def coeff(self, i: int) -> int:
        """Coefficient of x^i (0 or 1)."""
        if i < 0:
            raise ValueError("exponent must be nonnegative")
        return self._mask >> i & 1

    def alpha(self, l: int) -> int:
        """Coefficient of x^(deg - l), indexing from the leading term down."""
        if self._mask == 0:
            raise ValueError("alpha is undefined for the zero polynomial")
        deg = self._mask.bit_length() - 1
        if not 0 <= l <= deg:
            raise ValueError(f"alpha index {l} out of range 0..{deg}")
        return self._mask >> (deg - l) & 1

    def __add__(self, other):
        return Poly(self._mask ^ other._mask)

    __sub__ = __add__

    def __mul__(self, other):
        return Poly(_mul_mask(self._mask, other._mask))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = 1
        base = self._mask
        while n:
            if n & 1:
                result = _mul_mask(result, base)
            n >>= 1
            if n:
                base = _sqr_mask(base)
        return Poly(result)

    def __divmod__(self, other):
        q, r = _divmod_mask(self._mask, other._mask)
        return Poly(q), Poly(r)

    def __floordiv__(self, other):
        return Poly(_divmod_mask(self._mask, other._mask)[0])

    def __mod__(self, other):
        return Poly(_mod_mask(self._mask, other._mask))

    def __lshift__(self, k: int):
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return Poly(self._mask << k)

    def divides(self, other: "Poly") -> bool:
        return _mod_mask(other._mask, self._mask) == 0

    def square(self) -> "Poly":
        return Poly(_sqr_mask(self._mask))

    def is_square(self) -> bool:
        """True iff every odd-exponent coefficient vanishes."""
        if self._mask == 0:
            raise ValueError("zero polynomial has no square status")
        odd = _even_positions_mask(self._mask.bit_length()) << 1
        return self._mask & odd == 0

    def sqrt(self) -> "Poly":
        if not self.is_square():
            raise ValueError(f"{self} is not a square")
        return Poly(_sqrt_mask(self._mask))

    def derivative(self) -> "Poly":
        even = _even_positions_mask(self._mask.bit_length())
        return Poly((self._mask >> 1) & even)

    def bar(self) -> "Poly":
        """Composition with x+1; an involution and ring homomorphism."""
        return Poly(_bar_mask(self._mask))

    def valuation(self, at: "Poly") -> int:
        """Largest e such that at^e divides self, for at in {x, x+1}."""
        if self._mask == 0:
            raise ValueError("valuation is undefined for the zero polynomial")
        if at == X:
            m = self._mask
        elif at == XP1:
            m = _bar_mask(self._mask)
        else:
            raise ValueError("valuation is only defined at x and x+1")
        return (m & -m).bit_length() - 1

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self._mask == other._mask

    def __lt__(self, other):
        return self._mask < other._mask

    def __le__(self, other):
        return self._mask <= other._mask

    def __gt__(self, other):
        return self._mask > other._mask

    def __ge__(self, other):
        return self._mask >= other._mask

    def __hash__(self):
        return hash(self._mask)

    def __bool__(self):
        return self._mask != 0

    def __reduce__(self):
        return (Poly, (self._mask,))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


ZERO = Poly(0)
ONE = Poly(1)
X = Poly(2)
XP1 = Poly(3)


def add(p: Poly, q: Poly) -> Poly:
    """Sum (equivalently difference) of two polynomials."""
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    """Product of two polynomials."""
    return p * q


def div_rem(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with deg r < deg d; d must be nonzero."""
    return divmod(p, d)


def gcd(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor; undefined for two zero inputs."""
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    return Poly(_gcd_mask(p.mask, q.mask))


def power(p: Poly, n: int) -> Poly:
    """p raised to a nonnegative integer power by repeated squaring."""
    return p**n


def bar(p: Poly) -> Poly:
    """The conjugate polynomial p(x+1)."""
    return p.bar()


def format_poly(p: Poly) -> str:
    """Canonical descending-power expression, e.g. 'x^4+x^3+1'."""
    m = p.mask
    if m == 0:
        return "0"
    terms = []
    for i in range(m.bit_length() - 1, -1, -1):
        if m >> i & 1:
            if i == 0:
                terms.append("1")
            elif i == 1:
                terms.append("x")
            else:
                terms.append(f"x^{i}")
    return "+".join(terms)


_TOKEN = re.compile(
    r"\s*(?:(?P<hex>0[xX][0-9a-fA-F]+)|(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"unexpected character {text[pos:].lstrip()[0]!r} in polynomial")
        pos = m.end()
        if m.lastgroup is not None:
            tokens.append((m.lastgroup, m.group(m.lastgroup)))
    return tokens


class _Parser:
    # expr   := term ('+' term)*        ('-' accepted as '+': characteristic 2)
    # term   := factor (['*'] factor)*  (juxtaposition multiplies)
    # factor := atom ('^' uint)?
    # atom   := '(' expr ')' | 'x' | '0' | '1' | hex-mask | alias

    _ATOM_START = {"hex", "int", "name"}

    def __init__(self, tokens, aliases):
        self.tokens = tokens
        self.pos = 0
        self.aliases = aliases or {}

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, value):
        kind, text = self.take()
        if text != value:
            raise ValueError(f"expected {value!r} in polynomial expression")

    def parse(self):
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError("trailing input in polynomial expression")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-"):
            self.take()
            value = value + self.term()
        return value

    def term(self):
        value = self.factor()
        while True:
            kind, text = self.peek()
            if text == "*":
                self.take()
                value = value * self.factor()
            elif kind in self._ATOM_START or text == "(":
                value = value * self.factor()
            else:
                return value

    def factor(self):
        value = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, text = self.take()
            if kind != "int":
                raise ValueError("exponent must be a nonnegative integer")
            value = value ** int(text)
        return value

    def atom(self):
        kind, text = self.take()
        if text == "(":
            value = self.expr()
            self.expect(")")
            return value
        if kind == "hex":
            return Poly(int(text, 16))
        if kind == "int":
            if text == "0":
                return ZERO
            if text == "1":
                return ONE
            raise ValueError(f"coefficient {text} is not valid over GF(2)")
        if kind == "name":
            if text == "x":
                return X
            key = text.replace("_", "")
            if key in self.aliases:
                return self.aliases[key]
            raise ValueError(f"unknown polynomial name {text!r}")
        raise ValueError("malformed polynomial expression")


def parse(text: str, aliases=None) -> Poly:
    """Parse a polynomial expression or hex coefficient mask.

    Accepts sums of monomials ('x^4+x^3+1'), products of parenthesized
    factors with integer exponents ('x^2(x+1)^3'), hex masks ('0x13',
    bit i = coefficient of x^i), and optional named aliases.
    """
    if not isinstance(text, str) or text.strip() == "":
        raise ValueError("empty polynomial expression")
    return _Parser(_tokenize(text), aliases).parse()
