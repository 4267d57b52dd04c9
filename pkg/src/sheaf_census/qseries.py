"""Truncated formal power series over exact rationals.

Everything here is exact: coefficients are Fractions, binary operations
truncate to the smaller order, and infinite products are expanded factor by
factor with early exit once a factor's lowest exponent passes the order.

The module also owns the text grammar for product expressions used by the
command line (`parse_series_expr`).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

DEFAULT_ORDER = 40

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class FormalSeries:
    """A power series known exactly for exponents 0..order.

    Stored densely: coeffs[k] is the coefficient of x^k and len(coeffs) is
    order+1.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least its constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def from_values(values: Iterable, order: int | None = None) -> FormalSeries:
        vals = [Fraction(v) for v in values]
        if order is not None:
            vals = (vals + [_ZERO] * (order + 1))[: order + 1]
        return FormalSeries(tuple(vals))

    @staticmethod
    def constant(value, order: int) -> FormalSeries:
        return FormalSeries((Fraction(value),) + (_ZERO,) * order)

    @staticmethod
    def one(order: int) -> FormalSeries:
        return FormalSeries.constant(1, order)

    @staticmethod
    def zero(order: int) -> FormalSeries:
        return FormalSeries.constant(0, order)

    @staticmethod
    def monomial(exponent: int, coefficient=1, order: int = DEFAULT_ORDER) -> FormalSeries:
        if exponent < 0:
            raise ValueError("negative exponents are not representable")
        vals = [_ZERO] * (order + 1)
        if exponent <= order:
            vals[exponent] = Fraction(coefficient)
        return FormalSeries(tuple(vals))

    def coeff(self, k: int) -> Fraction:
        if k < 0:
            return _ZERO
        if k > self.order:
            raise ValueError(f"exponent {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> FormalSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return FormalSeries(self.coeffs[: order + 1])

    def valuation(self) -> int | None:
        """Lowest exponent with nonzero coefficient, None for the zero series."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __add__(self, other: FormalSeries) -> FormalSeries:
        n = min(self.order, other.order)
        return FormalSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)))

    def __sub__(self, other: FormalSeries) -> FormalSeries:
        n = min(self.order, other.order)
        return FormalSeries(tuple(self.coeffs[k] - other.coeffs[k] for k in range(n + 1)))

    def __neg__(self) -> FormalSeries:
        return FormalSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: FormalSeries) -> FormalSeries:
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [_ZERO] * (n + 1)
        for i in range(min(len(a) - 1, n) + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(min(len(b) - 1, n - i) + 1):
                if b[j]:
                    out[i + j] += ai * b[j]
        return FormalSeries(tuple(out))

    def scale(self, scalar) -> FormalSeries:
        s = Fraction(scalar)
        return FormalSeries(tuple(c * s for c in self.coeffs))

    def shift(self, exponent: int) -> FormalSeries:
        """Multiply by x^exponent, keeping the order."""
        if exponent < 0:
            raise ValueError("negative shifts are not representable")
        vals = (_ZERO,) * exponent + self.coeffs
        return FormalSeries(vals[: self.order + 1])

    def inverse(self) -> FormalSeries:
        if not self.coeffs[0]:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [_ZERO] * self.order
        for k in range(1, self.order + 1):
            acc = _ZERO
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    acc += self.coeffs[j] * out[k - j]
            out[k] = -inv0 * acc
        return FormalSeries(tuple(out))

    def mul_binomial(self, sign: int, exponent: int, power: int = 1) -> FormalSeries:
        """Multiply by (1 + sign*x^exponent)^power; power may be negative."""
        if exponent < 1:
            raise ValueError("binomial factors need exponent >= 1")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        vals = list(self.coeffs)
        n = self.order
        for _ in range(abs(power)):
            if power > 0:
                for k in range(n, exponent - 1, -1):
                    if vals[k - exponent]:
                        vals[k] += sign * vals[k - exponent]
            else:
                for k in range(exponent, n + 1):
                    if vals[k - exponent]:
                        vals[k] -= sign * vals[k - exponent]
        return FormalSeries(tuple(vals))

    def __str__(self) -> str:
        chunks = []
        for k, c in enumerate(self.coeffs):
            if c:
                chunks.append(f"{c}*x^{k}" if k else f"{c}")
        body = " + ".join(chunks) if chunks else "0"
        return f"{body} + O(x^{self.order + 1})"


@dataclass(frozen=True)
class ProductFactor:
    """One factor family prod_{s>=1} (1 + sign*x^(stride*s+offset))^power."""

    sign: int
    stride: int
    offset: int = 0
    power: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.stride < 1:
            raise ValueError("stride must be positive")
        if self.stride + self.offset < 1:
            raise ValueError("lowest factor exponent must be >= 1")


@dataclass(frozen=True)
class ProductSpec:
    """A scalar times x^shift times a list of infinite product factors."""

    factors: tuple[ProductFactor, ...] = ()
    scalar: Fraction = _ONE
    shift: int = 0

    def __post_init__(self) -> None:
        if self.shift < 0:
            raise ValueError("monomial shift must be nonnegative")


def product_spec(factors: Sequence[tuple[int, int, int, int]],
                 scalar=1, shift: int = 0) -> ProductSpec:
    """Build a ProductSpec from (sign, stride, offset, power) tuples."""
    return ProductSpec(tuple(ProductFactor(*f) for f in factors), Fraction(scalar), shift)


def eval_product(spec: ProductSpec, order: int) -> FormalSeries:
    """Expand the product to the given truncation order."""
    series = FormalSeries.monomial(spec.shift, spec.scalar, order)
    for f in spec.factors:
        s = 1
        while True:
            exponent = f.stride * s + f.offset
            if exponent > order:
                break
            series = series.mul_binomial(f.sign, exponent, f.power)
            s += 1
    return series


def prod_series(order: int, *factors: tuple[int, int, int, int],
                scalar=1, shift: int = 0) -> FormalSeries:
    """Shorthand: expand prod (1+sign*x^(stride*s+offset))^power terms."""
    return eval_product(product_spec(factors, scalar, shift), order)


def poch_inf(sign: int, exponent: int, order: int) -> FormalSeries:
    """(A; x)_infinity with A = sign*x^exponent: prod_{s>=0}(1 - A x^s)."""
    if exponent < 1:
        raise ValueError("need a positive starting exponent")
    return prod_series(order, (-sign, 1, exponent - 1, 1))


def poch(sign: int, exponent: int, n: int, order: int) -> FormalSeries:
    """(A; x)_n with A = sign*x^exponent: prod_{s=0}^{n-1}(1 - A x^s)."""
    series = FormalSeries.one(order)
    for s in range(n):
        e = exponent + s
        if e > order:
            break
        series = series.mul_binomial(-sign, e, 1)
    return series


def geometric_alternating(start: int, step: int, order: int) -> FormalSeries:
    """x^start / (1 + x^step) expanded as an alternating geometric series."""
    if start < 1 or step < 1:
        raise ValueError("start and step must be positive for a power-series expansion")
    vals = [_ZERO] * (order + 1)
    k, sign = start, 1
    while k <= order:
        vals[k] += sign
        sign = -sign
        k += step
    return FormalSeries(tuple(vals))


def bilateral_sum(constant_term, pos_term: Callable[[int], FormalSeries],
                  neg_term: Callable[[int], FormalSeries] | None = None,
                  order: int = DEFAULT_ORDER) -> FormalSeries:
    """Symmetrized bilateral sum: k=0 term plus sum over k>=1 of the k and -k
    terms, each already rewritten as a power series of positive valuation.

    neg_term(k) must give the rewritten term at index -k; it defaults to
    pos_term (all the sums used here are symmetric under k -> -k).
    """
    if neg_term is None:
        neg_term = pos_term
    total = FormalSeries.constant(constant_term, order)
    # term k has valuation >= k in every family used here, so indices past
    # the truncation order contribute nothing
    for k in range(1, order + 1):
        total = total + pos_term(k) + neg_term(k)
    return total


@dataclass(frozen=True)
class Verdict:
    """Result of an identity check: PASS, or the first disagreement."""

    ok: bool
    order: int
    exponent: int | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"PASS (order {self.order})"
        return (f"FAIL at x^{self.exponent}: lhs={self.lhs} rhs={self.rhs} "
                f"(order {self.order})")


def check_identity(lhs: FormalSeries, rhs: FormalSeries,
                   order: int | None = None, start: int = 0) -> Verdict:
    """Compare coefficients for exponents start..order."""
    n = min(lhs.order, rhs.order)
    if order is not None:
        if order > n:
            raise ValueError(f"operands only defined to order {n}, asked for {order}")
        n = order
    for k in range(start, n + 1):
        if lhs.coeffs[k] != rhs.coeffs[k]:
            return Verdict(False, n, k, lhs.coeffs[k], rhs.coeffs[k])
    return Verdict(True, n)


class BiSeries:
    """A truncated series in two variables u, v with exact coefficients.

    Coefficients are held in a dense matrix indexed [i][j] for u^i v^j,
    truncated independently in each variable.
    """

    __slots__ = ("u_order", "v_order", "m")

    def __init__(self, u_order: int, v_order: int, matrix=None):
        self.u_order = u_order
        self.v_order = v_order
        if matrix is None:
            matrix = [[_ZERO] * (v_order + 1) for _ in range(u_order + 1)]
        self.m = matrix

    @staticmethod
    def one(u_order: int, v_order: int) -> BiSeries:
        s = BiSeries(u_order, v_order)
        s.m[0][0] = _ONE
        return s

    def coeff(self, i: int, j: int) -> Fraction:
        if i > self.u_order or j > self.v_order:
            raise ValueError("exponent beyond truncation order")
        return self.m[i][j]

    def add(self, other: BiSeries) -> BiSeries:
        if (self.u_order, self.v_order) != (other.u_order, other.v_order):
            raise ValueError("mismatched truncation orders")
        out = BiSeries(self.u_order, self.v_order)
        for i in range(self.u_order + 1):
            for j in range(self.v_order + 1):
                out.m[i][j] = self.m[i][j] + other.m[i][j]
        return out

    def mul_binomial(self, sign: int, ue: int, ve: int, power: int = 1) -> BiSeries:
        """Multiply by (1 + sign*u^ue*v^ve)^power in place-ish; power may be
        negative. Requires ue+ve >= 1."""
        if ue < 0 or ve < 0 or ue + ve < 1:
            raise ValueError("factor exponents must be nonnegative with positive total")
        out = [row[:] for row in self.m]
        for _ in range(abs(power)):
            if power > 0:
                for i in range(self.u_order, ue - 1, -1):
                    for j in range(self.v_order, ve - 1, -1):
                        if out[i - ue][j - ve]:
                            out[i][j] += sign * out[i - ue][j - ve]
            else:
                for i in range(ue, self.u_order + 1):
                    for j in range(ve, self.v_order + 1):
                        if out[i - ue][j - ve]:
                            out[i][j] -= sign * out[i - ue][j - ve]
        return BiSeries(self.u_order, self.v_order, out)

    def diagonal(self) -> FormalSeries:
        """Specialize u = v = x (the result is exact to min(u_order, v_order))."""
        n = min(self.u_order, self.v_order)
        vals = [_ZERO] * (n + 1)
        for i in range(self.u_order + 1):
            for j in range(self.v_order + 1):
                if i + j <= n and self.m[i][j]:
                    vals[i + j] += self.m[i][j]
        return FormalSeries(tuple(vals))


# ---------------------------------------------------------------------------
# Text grammar for series expressions (used by the CLI `series` command).
#
#   EXPR     := TERM { ('+'|'-') TERM }
#   TERM     := [RATIONAL '*'] FACTOR { FACTOR }
#   FACTOR   := 'prod' GROUP { GROUP } | 'x^' INT | '(' EXPR ')' | 'inv' '(' EXPR ')'
#   GROUP    := '(' '1' ('+'|'-') 'x^{' LIN '}' ')' [ '^' INT ]
#   LIN      := INT 's' [ ('+'|'-') INT ]
#   RATIONAL := INT [ '/' INT ]
# ---------------------------------------------------------------------------

class SeriesParseError(ValueError):
    """Parse failure with enough context for caret diagnostics."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(message)
        self.message = message
        self.text = text
        self.pos = pos

    def diagnostic(self) -> str:
        caret = " " * self.pos + "^"
        return f"{self.message}\n  {self.text}\n  {caret}"


_TOKEN_RE = re.compile(r"\s*(prod|inv|\d+|[()+\-*/^{}sx])")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m:
                stripped = len(text[pos:]) - len(text[pos:].lstrip())
                raise SeriesParseError("unexpected character", text, pos + stripped)
            self.toks.append((m.group(1), m.start(1)))
            pos = m.end()
        self.i = 0

    def peek(self, ahead: int = 0) -> str | None:
        j = self.i + ahead
        return self.toks[j][0] if j < len(self.toks) else None

    def pos(self, ahead: int = 0) -> int:
        j = self.i + ahead
        return self.toks[j][1] if j < len(self.toks) else len(self.text)

    def next(self) -> str:
        if self.i >= len(self.toks):
            raise SeriesParseError("unexpected end of expression", self.text, len(self.text))
        tok = self.toks[self.i][0]
        self.i += 1
        return tok

    def expect(self, what: str) -> str:
        if self.peek() != what:
            raise SeriesParseError(f"expected '{what}'", self.text, self.pos())
        return self.next()

    def error(self, message: str) -> SeriesParseError:
        return SeriesParseError(message, self.text, self.pos())


class _Parser:
    def __init__(self, text: str, order: int):
        self.t = _Tokens(text)
        self.order = order

    def parse(self) -> FormalSeries:
        series = self.expr()
        if self.t.peek() is not None:
            raise self.t.error("trailing input after expression")
        return series

    def expr(self) -> FormalSeries:
        series = self.term()
        while self.t.peek() in ("+", "-"):
            op = self.t.next()
            rhs = self.term()
            series = series + rhs if op == "+" else series - rhs
        return series

    def term(self) -> FormalSeries:
        scalar = _ONE
        if self._at_rational_prefix():
            scalar = self._rational()
            self.t.expect("*")
        series = self.factor()
        while self._at_factor_start():
            series = series * self.factor()
        return series.scale(scalar)

    def _at_rational_prefix(self) -> bool:
        if not (self.t.peek() or "").isdigit():
            return False
        # a number is a scalar prefix only when followed by '*' or '/INT*'
        if self.t.peek(1) == "*":
            return True
        return self.t.peek(1) == "/" and (self.t.peek(2) or "").isdigit() and self.t.peek(3) == "*"

    def _rational(self) -> Fraction:
        num = int(self.t.next())
        if self.t.peek() == "/":
            self.t.next()
            den = int(self.t.next())
            if den == 0:
                raise self.t.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def _at_factor_start(self) -> bool:
        return self.t.peek() in ("prod", "inv", "x", "(")

    def _at_prod_group(self) -> bool:
        return (self.t.peek() == "(" and self.t.peek(1) == "1"
                and self.t.peek(2) in ("+", "-") and self.t.peek(3) == "x")

    def factor(self) -> FormalSeries:
        tok = self.t.peek()
        if tok == "prod":
            self.t.next()
            if not self._at_prod_group():
                raise self.t.error("expected '(1+x^{...})' after prod")
            series = FormalSeries.one(self.order)
            while self._at_prod_group():
                series = self._prod_group(series)
            return series
        if tok == "inv":
            self.t.next()
            self.t.expect("(")
            inner = self.expr()
            self.t.expect(")")
            if not inner.coeffs[0]:
                raise self.t.error("inv() of a series with zero constant term")
            return inner.inverse()
        if tok == "x":
            self.t.next()
            self.t.expect("^")
            exp = self._int()
            return FormalSeries.monomial(exp, 1, self.order)
        if tok == "(":
            self.t.next()
            inner = self.expr()
            self.t.expect(")")
            return inner
        raise self.t.error("expected a factor")

    def _prod_group(self, series: FormalSeries) -> FormalSeries:
        self.t.expect("(")
        self.t.expect("1")
        sign = 1 if self.t.next() == "+" else -1
        self.t.expect("x")
        self.t.expect("^")
        self.t.expect("{")
        stride = self._int()
        self.t.expect("s")
        offset = 0
        if self.t.peek() in ("+", "-"):
            op = self.t.next()
            off = self._int()
            offset = off if op == "+" else -off
        self.t.expect("}")
        self.t.expect(")")
        power = 1
        if self.t.peek() == "^":
            self.t.next()
            power = self._int()
        if stride < 1 or stride + offset < 1:
            raise self.t.error("product factor must have lowest exponent >= 1")
        s = 1
        while stride * s + offset <= self.order:
            series = series.mul_binomial(sign, stride * s + offset, power)
            s += 1
        return series

    def _int(self) -> int:
        tok = self.t.peek()
        if not (tok or "").isdigit():
            raise self.t.error("expected an integer")
        return int(self.t.next())


def parse_series_expr(text: str, order: int = DEFAULT_ORDER) -> FormalSeries:
    """Parse and evaluate a series expression at the given truncation order."""
    return _Parser(text, order).parse()
