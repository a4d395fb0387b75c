"""Exact arithmetic in GF(2^k) and truncated Laurent-series fields GF(2^k)((t)).

Elements are immutable and every operation is a pure function of its
operands, so values can be shared freely.  Laurent elements carry a window
of known coefficients [val, prec_abs) and arithmetic propagates the minimum
available precision; an operation that would need a coefficient outside the
window raises PrecisionLoss instead of guessing.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .errors import (
    DescriptorMismatch,
    DivisionByZero,
    NoSolution,
    NotASquare,
    ParseError,
    PrecisionLoss,
    PrecisionOverflow,
    WindowTooLarge,
)

# Fixed defining polynomials (bitmask, degree k), primitive so that w
# generates the multiplicative group and log/exp tables are total.
_MINPOLY = {
    1: 0b11,          # x + 1
    2: 0b111,         # x^2 + x + 1
    3: 0b1011,        # x^3 + x + 1
    4: 0b10011,       # x^4 + x + 1
    5: 0b100101,      # x^5 + x^2 + 1
    6: 0b1000011,     # x^6 + x + 1
    7: 0b10000011,    # x^7 + x + 1
    8: 0b100011101,   # x^8 + x^4 + x^3 + x^2 + 1
}

DEFAULT_PRECISION = 32

_EXP_LIMIT = 10 ** 6


def window_cap() -> int:
    """Maximum enumeration size, overridable via CHAR2Q_MAX_WINDOW."""
    raw = os.environ.get("CHAR2Q_MAX_WINDOW")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return 4_000_000


class FieldElement:
    """Common base for elements of the two supported field families."""

    __slots__ = ()

    def __sub__(self, other):
        return self.__add__(other)  # characteristic 2

    def __neg__(self):
        return self

    def __truediv__(self, other):
        return self * other.inverse()

    def __bool__(self) -> bool:
        return not self.is_zero


class FiniteField:
    """GF(2^k) with the fixed defining polynomial for its degree.

    Elements are k-bit coefficient vectors of polynomials in the generator w;
    multiplication runs through precomputed log/exp tables.
    """

    _cache: dict[int, "FiniteField"] = {}

    kind = "finite"

    def __new__(cls, k: int):
        field = cls._cache.get(k)
        if field is not None:
            return field
        if k not in _MINPOLY:
            raise ParseError(f"unsupported extension degree {k} (need 1 <= k <= 8)")
        field = super().__new__(cls)
        field._init(k)
        cls._cache[k] = field
        return field

    def _init(self, k: int) -> None:
        self.k = k
        self.order = 1 << k
        self.modulus = _MINPOLY[k]
        n = self.order - 1
        exp = [1] * (2 * n if n else 1)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x <<= 1
            if x >> k:
                x ^= self.modulus
        if x != 1 or len(set(exp[:n])) != max(n, 1):
            raise AssertionError(f"defining polynomial for k={k} is not primitive")
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp = exp
        self._log = log
        self._group_order = n
        sqrt_table = [0] * self.order
        for bits in range(self.order):
            sqrt_table[self._mul_bits(bits, bits)] = bits
        self._sqrt = sqrt_table
        trace = [0] * self.order
        for bits in range(self.order):
            acc, t = bits, bits
            for _ in range(k - 1):
                t = self._mul_bits(t, t)
                acc ^= t
            if acc not in (0, 1):
                raise AssertionError("trace landed outside GF(2)")
            trace[bits] = acc
        self._trace = trace
        self._trace_one_bits = next(b for b in range(self.order) if trace[b] == 1)

    # low-level bitmask arithmetic -------------------------------------

    def _mul_bits(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def _inv_bits(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[self._group_order - self._log[a]]

    # element construction ---------------------------------------------

    def element(self, bits: int) -> "FiniteFieldElement":
        if not 0 <= bits < self.order:
            raise ValueError(f"bits {bits} out of range for {self}")
        return FiniteFieldElement(self, bits)

    @property
    def zero(self) -> "FiniteFieldElement":
        return FiniteFieldElement(self, 0)

    @property
    def one(self) -> "FiniteFieldElement":
        return FiniteFieldElement(self, 1)

    @property
    def gen(self) -> "FiniteFieldElement":
        if self.k == 1:
            raise ParseError("GF(2) has no generator w")
        return FiniteFieldElement(self, 0b10)

    @property
    def trace_one(self) -> "FiniteFieldElement":
        """The fixed representative of trace 1 (first such bitmask)."""
        return FiniteFieldElement(self, self._trace_one_bits)

    def parse(self, text: str) -> "FiniteFieldElement":
        return parse_element(self, text)

    def elements(self) -> Iterator["FiniteFieldElement"]:
        for bits in range(self.order):
            yield FiniteFieldElement(self, bits)

    def random_element(self, rng) -> "FiniteFieldElement":
        return FiniteFieldElement(self, rng.randrange(self.order))

    def random_nonzero(self, rng) -> "FiniteFieldElement":
        return FiniteFieldElement(self, rng.randrange(1, self.order))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and other.k == self.k

    def __hash__(self) -> int:
        return hash(("finite", self.k))

    def __str__(self) -> str:
        return f"gf({self.order})"

    __repr__ = __str__


class FiniteFieldElement(FieldElement):
    __slots__ = ("field", "bits")

    def __init__(self, field: FiniteField, bits: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("field elements are immutable")

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def _same_field(self, other) -> None:
        if not isinstance(other, FiniteFieldElement) or other.field != self.field:
            raise DescriptorMismatch(f"expected element of {self.field}")

    def __add__(self, other):
        self._same_field(other)
        return FiniteFieldElement(self.field, self.bits ^ other.bits)

    def __mul__(self, other):
        self._same_field(other)
        return FiniteFieldElement(self.field, self.field._mul_bits(self.bits, other.bits))

    def inverse(self) -> "FiniteFieldElement":
        return FiniteFieldElement(self.field, self.field._inv_bits(self.bits))

    def __pow__(self, n: int) -> "FiniteFieldElement":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        acc = self.field.one
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def sqrt(self) -> "FiniteFieldElement":
        return FiniteFieldElement(self.field, self.field._sqrt[self.bits])

    def trace(self) -> int:
        """Absolute trace down to GF(2), as an int bit."""
        return self.field._trace[self.bits]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteFieldElement)
            and other.field == self.field
            and other.bits == self.bits
        )

    def __hash__(self) -> int:
        return hash((self.field.k, self.bits))

    def key(self):
        """Hashable exact key, shared convention with Laurent elements."""
        return self.bits

    def sort_key(self):
        return (0, self.bits)

    def __str__(self) -> str:
        return _poly_str(self.bits)

    __repr__ = __str__


class LaurentField:
    """Truncated Laurent series GF(2^k)((t)) at a fixed relative precision."""

    kind = "laurent"

    def __init__(self, k: int, prec: int = DEFAULT_PRECISION):
        if prec < 1:
            raise ParseError(f"precision must be >= 1, got {prec}")
        self.coeff_field = FiniteField(k)
        self.k = k
        self.prec = prec

    def element(self, val: int, coeff_bits, prec_abs: Optional[int] = None) -> "LaurentElement":
        return _normalize(self, val, list(coeff_bits), prec_abs)

    @property
    def zero(self) -> "LaurentElement":
        return LaurentElement(self, 0, (), None)

    @property
    def one(self) -> "LaurentElement":
        return self.monomial(1, 0)

    @property
    def t(self) -> "LaurentElement":
        return self.monomial(1, 1)

    def monomial(self, coeff: Union[int, FiniteFieldElement], exp: int) -> "LaurentElement":
        bits = coeff.bits if isinstance(coeff, FiniteFieldElement) else coeff
        return _normalize(self, exp, [bits], None)

    def constant(self, coeff: Union[int, FiniteFieldElement]) -> "LaurentElement":
        return self.monomial(coeff, 0)

    def parse(self, text: str) -> "LaurentElement":
        return parse_element(self, text)

    def random_element(self, rng, min_exp: int = -2, max_exp: int = 4,
                       max_terms: int = 3) -> "LaurentElement":
        """Short random series; sparse supports keep downstream products exact."""
        exps = list(range(min_exp, max_exp + 1))
        n = rng.randint(0, min(max_terms, len(exps)))
        chosen = sorted(rng.sample(exps, n))
        if not chosen:
            return self.zero
        lo = chosen[0]
        coeffs = [0] * (chosen[-1] - lo + 1)
        for e in chosen:
            coeffs[e - lo] = rng.randrange(1, self.coeff_field.order)
        return _normalize(self, lo, coeffs, None)

    def random_nonzero(self, rng, min_exp: int = -2, max_exp: int = 4,
                       max_terms: int = 3) -> "LaurentElement":
        while True:
            x = self.random_element(rng, min_exp, max_exp, max_terms)
            if not x.is_zero:
                return x

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentField)
            and other.k == self.k
            and other.prec == self.prec
        )

    def __hash__(self) -> int:
        return hash(("laurent", self.k, self.prec))

    def __str__(self) -> str:
        return f"laurent(gf({1 << self.k}),prec={self.prec})"

    __repr__ = __str__


Field = Union[FiniteField, LaurentField]


def _normalize(field: LaurentField, val: int, coeffs: list, prec_abs: Optional[int]) -> "LaurentElement":
    i, n = 0, len(coeffs)
    while i < n and coeffs[i] == 0:
        i += 1
    val += i
    coeffs = coeffs[i:]
    if prec_abs is None and coeffs:
        prec_abs = val + field.prec
    if prec_abs is not None:
        prec_abs = min(prec_abs, val + field.prec)
        keep = prec_abs - val
        if keep < len(coeffs):
            coeffs = coeffs[: max(keep, 0)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        val = prec_abs if prec_abs is not None else 0
    return LaurentElement(field, val, tuple(coeffs), prec_abs)


class LaurentElement(FieldElement):
    """One truncated Laurent series.

    ``coeffs`` starts at exponent ``val`` with nonzero first and last entries;
    coefficients from the end of ``coeffs`` up to ``prec_abs`` are known zeros.
    ``prec_abs is None`` marks the exact zero; an empty ``coeffs`` with finite
    ``prec_abs`` is "zero to that precision".
    """

    __slots__ = ("field", "val", "coeffs", "prec_abs")

    def __init__(self, field: LaurentField, val: int, coeffs: tuple, prec_abs: Optional[int]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "prec_abs", prec_abs)

    def __setattr__(self, name, value):
        raise AttributeError("field elements are immutable")

    @property
    def is_zero(self) -> bool:
        """Zero as far as the known window can tell."""
        return not self.coeffs

    @property
    def is_exact_zero(self) -> bool:
        return self.prec_abs is None

    @property
    def valuation(self) -> int:
        if not self.coeffs:
            raise PrecisionLoss("valuation of a (near-)zero element is undetermined")
        return self.val

    def coefficient(self, exp: int) -> FiniteFieldElement:
        """Coefficient of t^exp; PrecisionLoss if outside the known window."""
        if self.prec_abs is not None and exp >= self.prec_abs:
            raise PrecisionLoss(f"coefficient of t^{exp} is beyond precision O(t^{self.prec_abs})")
        i = exp - self.val
        bits = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return self.field.coeff_field.element(bits)

    def _same_field(self, other) -> None:
        if not isinstance(other, LaurentElement) or other.field != self.field:
            raise DescriptorMismatch(f"expected element of {self.field}")

    def __add__(self, other):
        self._same_field(other)
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        pa, pb = self.prec_abs, other.prec_abs
        p = min(pa, pb)
        v = min(self.val, other.val)
        end = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        out = [0] * max(end - v, 0)
        for src in (self, other):
            off = src.val - v
            for i, c in enumerate(src.coeffs):
                out[off + i] ^= c
        return _normalize(self.field, v, out, p)

    def __mul__(self, other):
        self._same_field(other)
        if self.is_exact_zero or other.is_exact_zero:
            return self.field.zero
        p = min(self.prec_abs + other.val, other.prec_abs + self.val)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _normalize(self.field, 0, [], p)
        mul = self.field.coeff_field._mul_bits
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] ^= mul(ca, cb)
        return _normalize(self.field, self.val + other.val, out, p)

    def square(self) -> "LaurentElement":
        """Frobenius shortcut: squaring doubles exponents coefficient-wise."""
        if self.is_exact_zero:
            return self
        p = self.prec_abs + self.val
        msq = self.field.coeff_field._mul_bits
        out = [0] * (2 * len(self.coeffs) - 1 if self.coeffs else 0)
        for i, c in enumerate(self.coeffs):
            if c:
                out[2 * i] = msq(c, c)
        return _normalize(self.field, 2 * self.val, out, p)

    def inverse(self) -> "LaurentElement":
        if self.is_exact_zero:
            raise DivisionByZero("inverse of zero")
        if not self.coeffs:
            raise PrecisionLoss("cannot invert an element that is zero to available precision")
        cf = self.field.coeff_field
        relprec = self.prec_abs - self.val
        c = list(self.coeffs) + [0] * (relprec - len(self.coeffs))
        d = [0] * relprec
        c0inv = cf._inv_bits(c[0])
        d[0] = c0inv
        for n in range(1, relprec):
            acc = 0
            for i in range(1, min(n, len(self.coeffs) - 1) + 1):
                if c[i] and d[n - i]:
                    acc ^= cf._mul_bits(c[i], d[n - i])
            d[n] = cf._mul_bits(c0inv, acc)
        return _normalize(self.field, -self.val, d, self.prec_abs - 2 * self.val)

    def __pow__(self, n: int) -> "LaurentElement":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        acc = self.field.one
        while n:
            if n & 1:
                acc = acc * base
            base = base.square()
            n >>= 1
        return acc

    def sqrt(self) -> "LaurentElement":
        if self.is_exact_zero:
            return self
        if not self.coeffs:
            raise PrecisionLoss("cannot take sqrt of an element that is zero to precision")
        if self.val % 2:
            raise NotASquare(f"odd valuation {self.val}")
        for i, c in enumerate(self.coeffs):
            if c and (self.val + i) % 2:
                raise NotASquare(f"odd-exponent term t^{self.val + i}")
        cf = self.field.coeff_field
        out = [cf._sqrt[self.coeffs[2 * i] if 2 * i < len(self.coeffs) else 0]
               for i in range((len(self.coeffs) + 1) // 2)]
        return _normalize(self.field, self.val // 2, out, -(-self.prec_abs // 2))

    def derivative(self) -> "LaurentElement":
        """Formal d/dt; in characteristic 2 only odd-exponent terms survive."""
        if self.is_exact_zero:
            return self
        out = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c and (self.val + i) % 2:
                out[i] = c
        return _normalize(self.field, self.val - 1, out, self.prec_abs - 1)

    def __eq__(self, other) -> bool:
        """Equality to the common known precision."""
        if not isinstance(other, LaurentElement) or other.field != self.field:
            return NotImplemented if not isinstance(other, LaurentElement) else False
        return (self + other).is_zero

    __hash__ = None  # precision-relative equality cannot honor the hash contract

    def key(self):
        """Hashable key of the known terms (callers ensure exactness)."""
        return (self.val, self.coeffs) if self.coeffs else 0

    def sort_key(self):
        if not self.coeffs:
            return (0, 0)
        return (1, self.val, self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(_term_str(c, self.val + i))
        return " + ".join(parts)

    __repr__ = __str__


# --------------------------------------------------------------------------
# printing and parsing

def _poly_str(bits: int) -> str:
    if bits == 0:
        return "0"
    parts = []
    for d in range(bits.bit_length() - 1, -1, -1):
        if bits >> d & 1:
            parts.append("1" if d == 0 else ("w" if d == 1 else f"w^{d}"))
    return "+".join(parts)

def _term_str(bits: int, exp: int) -> str:
    coeff = _poly_str(bits)
    if exp == 0:
        return coeff
    tpart = "t" if exp == 1 else f"t^{exp}"
    if bits == 1:
        return tpart
    if "+" in coeff:
        return f"({coeff})*{tpart}"
    return f"{coeff}*{tpart}"


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(\^)|(\*)|(\+)|(\()|(\))|(-)|([wt]))")


def _tokenize(text: str):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {text[pos:]!r}")
        pos = m.end()
        tok = next(g for g in m.groups() if g is not None)
        tokens.append(tok)
    return tokens


class _ElementParser:
    """Recursive-descent parser for sums of c*t^n terms."""

    def __init__(self, field: Field, tokens: list):
        self.field = field
        self.tokens = tokens
        self.pos = 0
        self.cf = field.coeff_field if isinstance(field, LaurentField) else field

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, tok):
        got = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}")

    def parse(self):
        terms = self.sum_terms()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input at {self.tokens[self.pos]!r}")
        return terms

    def sum_terms(self):
        acc = {}
        while True:
            bits, exp = self.term()
            acc[exp] = acc.get(exp, 0) ^ bits
            if self.peek() == "+":
                self.take()
            else:
                return acc

    def term(self):
        bits, exp = self.factor()
        while self.peek() == "*":
            self.take()
            b2, e2 = self.factor()
            bits = self.cf._mul_bits(bits, b2)
            exp += e2
        return bits, exp

    def factor(self):
        tok = self.take()
        if tok == "t":
            if not isinstance(self.field, LaurentField):
                raise ParseError("t is only valid in a Laurent field")
            return 1, self.exponent_suffix()
        if tok == "w":
            return self.w_power(), 0
        if tok == "(":
            bits = self.w_poly()
            self.expect(")")
            return bits, 0
        if tok.isdigit():
            v = int(tok)
            if v not in (0, 1):
                raise ParseError(f"coefficient {v} is not 0 or 1 (characteristic 2)")
            return v, 0
        raise ParseError(f"unexpected token {tok!r}")

    def exponent_suffix(self) -> int:
        if self.peek() != "^":
            return 1
        self.take()
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.take()
        if not tok.isdigit():
            raise ParseError(f"expected exponent digits, got {tok!r}")
        exp = sign * int(tok)
        if abs(exp) > _EXP_LIMIT:
            raise PrecisionOverflow(f"exponent {exp} out of range")
        return exp

    def w_power(self) -> int:
        if self.cf.k == 1:
            raise ParseError("no generator w in GF(2)")
        exp = 1
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"expected exponent digits, got {tok!r}")
            exp = int(tok)
            if exp > _EXP_LIMIT:
                raise PrecisionOverflow(f"exponent {exp} out of range")
        return (self.cf.gen ** exp).bits

    def w_poly(self) -> int:
        bits = 0
        while True:
            tok = self.take()
            if tok == "w":
                bits ^= self.w_power()
            elif tok.isdigit() and int(tok) in (0, 1):
                bits ^= int(tok)
            else:
                raise ParseError(f"unexpected token {tok!r} in coefficient")
            if self.peek() == "+":
                self.take()
            else:
                return bits


def parse_element(field: Field, text: str):
    """Parse element text; print/parse is the identity on canonical text."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty element text")
    terms = _ElementParser(field, tokens).parse()
    terms = {e: b for e, b in terms.items() if b}
    if isinstance(field, FiniteField):
        if not terms:
            return field.zero
        return field.element(terms[0]) if set(terms) == {0} else _raise_t_in_finite()
    if not terms:
        return field.zero
    lo, hi = min(terms), max(terms)
    if hi - lo >= field.prec:
        raise PrecisionOverflow(
            f"term span [{lo},{hi}] exceeds relative precision {field.prec}")
    coeffs = [0] * (hi - lo + 1)
    for e, b in terms.items():
        coeffs[e - lo] = b
    return _normalize(field, lo, coeffs, None)


def _raise_t_in_finite():
    raise ParseError("t is only valid in a Laurent field")


_DESC_FINITE = re.compile(r"^\s*gf\(\s*(\d+)\s*\)\s*$")
_DESC_LAURENT = re.compile(r"^\s*laurent\(\s*gf\(\s*(\d+)\s*\)\s*(?:,\s*prec\s*=\s*(\d+)\s*)?\)\s*$")


def parse_descriptor(text: str, default_prec: int = DEFAULT_PRECISION) -> Field:
    """Parse a field descriptor string like gf(4) or laurent(gf(2),prec=16)."""
    m = _DESC_FINITE.match(text)
    if m:
        return FiniteField(_degree_of(int(m.group(1))))
    m = _DESC_LAURENT.match(text)
    if m:
        prec = int(m.group(2)) if m.group(2) else default_prec
        return LaurentField(_degree_of(int(m.group(1))), prec)
    raise ParseError(f"bad field descriptor {text!r}")


def _degree_of(order: int) -> int:
    k = order.bit_length() - 1
    if order != 1 << k or k not in _MINPOLY:
        raise ParseError(f"field order {order} is not a supported power of 2")
    return k


# --------------------------------------------------------------------------
# squares

def is_square(x: FieldElement) -> bool:
    """Membership in (F*)^2 ∪ {0}; Frobenius makes this decidable exactly."""
    if isinstance(x, FiniteFieldElement):
        return True
    try:
        x.sqrt()
        return True
    except NotASquare:
        return False


def sqrt(x: FieldElement) -> FieldElement:
    return x.sqrt()


# --------------------------------------------------------------------------
# the Artin-Schreier map p(x) = x^2 + x

def artin_schreier(x: FieldElement) -> FieldElement:
    if isinstance(x, LaurentElement):
        return x.square() + x
    return x * x + x


def _solve_finite_artin_schreier(field: FiniteField, bits: int) -> int:
    """Solve x^2+x = a in GF(2^k) by GF(2)-linear elimination; 'trace' on failure."""
    k = field.k
    cols = []
    for i in range(k):
        b = 1 << i
        cols.append(field._mul_bits(b, b) ^ b)
    rows = [([(cols[j] >> r) & 1 for j in range(k)], (bits >> r) & 1) for r in range(k)]
    solution = [0] * k
    pivot_rows = []
    col = 0
    r0 = 0
    for col in range(k):
        piv = None
        for r in range(r0, k):
            if rows[r][0][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[r0], rows[piv] = rows[piv], rows[r0]
        for r in range(k):
            if r != r0 and rows[r][0][col]:
                merged = [a ^ b for a, b in zip(rows[r][0], rows[r0][0])]
                rows[r] = (merged, rows[r][1] ^ rows[r0][1])
        pivot_rows.append((r0, col))
        r0 += 1
    for r in range(r0, k):
        if rows[r][1]:
            raise NoSolution("trace")
    for r, col in pivot_rows:
        solution[col] = rows[r][1]
    out = 0
    for i, s in enumerate(solution):
        if s:
            out |= 1 << i
    return out


def artin_schreier_solve(a: FieldElement) -> FieldElement:
    """Return x with x^2 + x = a (exactly / to precision), or raise NoSolution.

    Over a Laurent field the reduction runs: even-order poles are peeled with
    sqrt-of-leading-coefficient monomials, an odd-order pole is a permanent
    obstruction, the constant lands in the coefficient field, and the strictly
    positive part is summed through repeated Frobenius squares.
    """
    if isinstance(a, FiniteFieldElement):
        return a.field.element(_solve_finite_artin_schreier(a.field, a.bits))
    field = a.field
    if a.is_exact_zero:
        return field.zero
    if a.prec_abs < 1:
        raise PrecisionLoss("need the constant coefficient to run the reduction")
    cf = field.coeff_field
    parts = []
    cur = a
    while cur.coeffs and cur.val < 0:
        m = -cur.val
        if m % 2:
            raise NoSolution("odd-pole")
        if cur.prec_abs < 1:
            raise PrecisionLoss("pole reduction outran the known window")
        s = cf._sqrt[cur.coeffs[0]]
        term = field.monomial(s, -m // 2)
        parts.append(term)
        cur = cur + term.square() + term
    if cur.prec_abs < 1:
        raise PrecisionLoss("constant coefficient fell outside the known window")
    c0 = cur.coefficient(0)
    if not c0.is_zero:
        x0 = artin_schreier_solve(c0)  # NoSolution('trace') propagates
        parts.append(field.constant(x0))
        cur = cur + field.constant(c0)
    # strictly positive part: sum of iterated Frobenius squares
    term = cur
    acc = field.zero
    while term.coeffs:
        acc = acc + term
        term = term.square()
    parts.append(acc)
    out = field.zero
    for p in parts:
        out = out + p
    return out


def artin_schreier_reduce(a: FieldElement) -> FieldElement:
    """Canonical representative of a modulo p(F).

    Finite fields: 0 or the fixed trace-1 element.  Laurent fields: only
    odd-exponent pole terms survive, plus that constant convention; the
    positive-valuation part is always reducible and is dropped.
    """
    if isinstance(a, FiniteFieldElement):
        return a.field.zero if a.trace() == 0 else a.field.trace_one
    field = a.field
    if a.is_exact_zero:
        return field.zero
    if a.prec_abs < 1:
        raise PrecisionLoss("need pole and constant coefficients to reduce")
    cf = field.coeff_field
    terms = {}
    for i, c in enumerate(a.coeffs):
        e = a.val + i
        if c and e <= 0:
            terms[e] = c
    while True:
        even = [e for e, c in terms.items() if e < 0 and e % 2 == 0 and c]
        if not even:
            break
        e = min(even)
        s = cf._sqrt[terms.pop(e)]
        half = e // 2
        terms[half] = terms.get(half, 0) ^ s
        if not terms[half]:
            del terms[half]
    c0 = terms.pop(0, 0)
    c0 = 0 if cf._trace[c0] == 0 else cf._trace_one_bits
    if c0:
        terms[0] = c0
    if not terms:
        return field.zero
    lo = min(terms)
    coeffs = [0] * (max(terms) - lo + 1)
    for e, c in terms.items():
        coeffs[e - lo] = c
    return _normalize(field, lo, coeffs, None)


# --------------------------------------------------------------------------
# residue pairing over GF(2^k)((t))

def residue_and_trace(a: LaurentElement, b: LaurentElement) -> int:
    """Tr down to GF(2) of the t^-1 coefficient of a * (db/dt) / b."""
    if not isinstance(a, LaurentElement) or not isinstance(b, LaurentElement):
        raise DescriptorMismatch("residue pairing is defined over Laurent fields only")
    if b.is_exact_zero:
        raise DivisionByZero("residue pairing needs b != 0")
    if not b.coeffs:
        raise PrecisionLoss("b is zero to available precision")
    u = a * b.derivative() * b.inverse()
    if u.is_exact_zero:
        return 0
    return u.coefficient(-1).trace()


# --------------------------------------------------------------------------
# enumeration windows

@dataclass(frozen=True)
class LaurentWindow:
    """All series supported on exponents [min_exp, max_exp]."""

    min_exp: int
    max_exp: int

    def __post_init__(self):
        if self.max_exp < self.min_exp:
            raise ValueError("empty window")

    def positions(self) -> int:
        return self.max_exp - self.min_exp + 1

    def size(self, field: LaurentField) -> int:
        return 1 << (field.k * self.positions())


def enumerate_elements(field: Field, window: Optional[LaurentWindow] = None,
                       cap: Optional[int] = None) -> Iterator[FieldElement]:
    """Deterministic exhaustive element stream (finite field or Laurent window)."""
    limit = cap if cap is not None else window_cap()
    if isinstance(field, FiniteField):
        if field.order > limit:
            raise WindowTooLarge(f"{field.order} elements exceeds cap {limit}")
        yield from field.elements()
        return
    if window is None:
        raise ValueError("Laurent enumeration needs an explicit window")
    total = window.size(field)
    if total > limit:
        raise WindowTooLarge(f"window size {total} exceeds cap {limit}")
    k, n = field.k, window.positions()
    mask = (1 << k) - 1
    for idx in range(total):
        coeffs = [(idx >> (k * i)) & mask for i in range(n)]
        yield _normalize(field, window.min_exp, coeffs, None)
