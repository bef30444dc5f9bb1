"""Exact arithmetic in Q(q), the field of rational functions in the field size.

Polynomials are tuples of Python ints, lowest degree first, with no trailing
zeros (the zero polynomial is the empty tuple).  A :class:`RationalFunction`
stores an integer numerator and denominator in canonical form:

* ``gcd(num, den) = 1`` as polynomials over Q,
* the integer contents of ``num`` and ``den`` are jointly coprime,
* the leading coefficient of ``den`` is positive.

Canonical form is unique, so structural equality is value equality.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Rational

from .errors import DivideByZeroError, PoleError

Poly = tuple


def _trim(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def poly_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def poly_scale(a: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    return tuple(c * x for x in a)


def content(a: Poly) -> int:
    return reduce(gcd, a, 0)


def primitive_part(a: Poly) -> Poly:
    if not a:
        return a
    c = content(a)
    if a[-1] < 0:
        c = -c
    return tuple(x // c for x in a)


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of ``a`` by ``b`` (integer arithmetic only)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient (``()`` if both zero)."""
    if not a:
        return primitive_part(b)
    if not b:
        return primitive_part(a)
    if len(a) == 1 or len(b) == 1:
        return (1,)
    a, b = primitive_part(a), primitive_part(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (1,)
        a, b = b, primitive_part(_prem(a, b))
    return primitive_part(a)


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    """Divide ``a`` by ``b`` in Z[q]; raises if the division is not exact."""
    if not b:
        raise DivideByZeroError("polynomial division by zero")
    if not a:
        return ()
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    quot = [0] * max(len(a) - db, 0)
    while r and len(r) - 1 >= db:
        coeff, rem = divmod(r[-1], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        shift = len(r) - 1 - db
        quot[shift] = coeff
        for i, c in enumerate(b):
            r[i + shift] -= coeff * c
        while r and r[-1] == 0:
            r.pop()
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _trim(quot)


def poly_eval(a: Poly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise DivideByZeroError("zero denominator")
    if not num:
        return (), (1,)
    if len(den) > 1:
        g = poly_gcd(num, den)
        if len(g) > 1:
            num = poly_exact_div(num, g)
            den = poly_exact_div(den, g)
    c = gcd(content(num), content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


class RationalFunction:
    """An element of Q(q) in canonical form; immutable and hashable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=(1,), *, _canonical: bool = False):
        if isinstance(num, Rational) and not isinstance(num, tuple):
            frac = Fraction(num)
            num, den = _trim((frac.numerator,)), (frac.denominator,)
            _canonical = True
        if not _canonical:
            num, den = _normalize(_trim(num), _trim(den))
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def variable(cls) -> "RationalFunction":
        return cls((0, 1), (1,), _canonical=True)

    @classmethod
    def constant(cls, value) -> "RationalFunction":
        return cls(Fraction(value))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "RationalFunction":
        """``coeff * q**power`` for any integer ``power``."""
        if power >= 0:
            return cls(tuple([0] * power + [coeff]), (1,))
        return cls((coeff,), tuple([0] * (-power) + [1]))

    @classmethod
    def qpow(cls, a: int, b: int = 0, sign: int = 1) -> "RationalFunction":
        """``sign * q**a * (q-1)**b`` with ``a, b`` arbitrary integers."""
        num, den = [sign], [1]
        num_poly = [(0,) * a + (1,)] if a >= 0 else []
        den_poly = [(0,) * (-a) + (1,)] if a < 0 else []
        qm1 = (-1, 1)
        if b >= 0:
            num_poly += [qm1] * b
        else:
            den_poly += [qm1] * (-b)
        n = reduce(poly_mul, num_poly, tuple(num))
        d = reduce(poly_mul, den_poly, tuple(den))
        return cls(n, d, _canonical=True)

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den == (1,)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    # arithmetic -----------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Rational):
            return RationalFunction(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den == (1,):
                return RationalFunction(poly_add(self.num, other.num), (1,), _canonical=True)
            return RationalFunction(poly_add(self.num, other.num), self.den)
        num = poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den))
        return RationalFunction(num, poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(poly_neg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if self.den == (1,) and other.den == (1,):
            return RationalFunction(poly_mul(self.num, other.num), (1,), _canonical=True)
        return RationalFunction(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise DivideByZeroError("division by zero in Q(q)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = poly_neg(num), poly_neg(den)
        return RationalFunction(num, den, _canonical=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        num = reduce(poly_mul, [base.num] * exponent, (1,))
        den = reduce(poly_mul, [base.den] * exponent, (1,))
        return RationalFunction(num, den, _canonical=True)

    # comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # evaluation -----------------------------------------------------------
    def evaluate(self, q0) -> Fraction:
        """Specialise q to the rational number ``q0``."""
        q0 = Fraction(q0)
        d = poly_eval(self.den, q0)
        if d == 0:
            raise PoleError(f"{self} has a pole at q={q0}")
        return Fraction(poly_eval(self.num, q0)) / d

    def __call__(self, q0) -> Fraction:
        return self.evaluate(q0)

    # rendering ------------------------------------------------------------
    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"RationalFunction({render(self)!r})"


ZERO = RationalFunction((), (1,), _canonical=True)
ONE = RationalFunction((1,), (1,), _canonical=True)
q = RationalFunction.variable()


def as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, str):
        return parse(x)
    return RationalFunction(Fraction(x))


# --------------------------------------------------------------------------
# rendering and parsing


def _split_q_factors(p: Poly) -> tuple[int, int, Poly]:
    """Write ``p = q**a * (q-1)**b * rest`` with ``rest`` coprime to q, q-1."""
    a = 0
    while len(p) > 1 and p[0] == 0:
        p = p[1:]
        a += 1
    b = 0
    while len(p) > 1 and sum(p) == 0:
        p = poly_exact_div(p, (-1, 1))
        b += 1
    return a, b, p


def _render_poly(p: Poly) -> str:
    terms = []
    for power in range(len(p) - 1, -1, -1):
        c = p[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            mono = "q" if power == 1 else f"q^{power}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f"{sign}{body}"
    return out


def _factor_strings(p: Poly) -> tuple[bool, list[str]]:
    """Atomic factors of ``p`` (parenthesised where needed) and its sign."""
    a, b, rest = _split_q_factors(p)
    negative = rest[-1] < 0
    if negative:
        rest = poly_neg(rest)
    factors = []
    if len(rest) == 1 and rest[0] != 1:
        factors.append(str(rest[0]))
    if a:
        factors.append("q" if a == 1 else f"q^{a}")
    if b:
        factors.append("(q-1)" if b == 1 else f"(q-1)^{b}")
    if len(rest) > 1:
        text = _render_poly(rest)
        factors.append(f"({text})" if sum(1 for c in rest if c) > 1 else text)
    return negative, factors


def render(x: RationalFunction) -> str:
    """Canonical string: q-powers and (q-1)-powers factored, cofactor expanded.

    Examples: ``(q-1)*(q-2)``, ``-q^2``, ``q^2*(q-1)/(q+1)``, ``q-1``.
    """
    if not x.num:
        return "0"
    negative, factors = _factor_strings(x.num)
    if not factors:
        num_text = "1"
    elif len(factors) == 1 and x.den == (1,) and not negative and factors[0].startswith("(") \
            and not factors[0].startswith("(q-1)^"):
        num_text = factors[0][1:-1]
    else:
        num_text = "*".join(factors)
    text = ("-" if negative else "") + num_text
    if x.den == (1,):
        return text
    _, den_factors = _factor_strings(x.den)
    den_text = "*".join(den_factors)
    if len(den_factors) > 1:
        den_text = f"({den_text})"
    return f"{text}/{den_text}"


_ALLOWED = (
    ast.Expression, ast.BinOp, ast.UnaryOp, ast.Add, ast.Sub, ast.Mult, ast.Div,
    ast.Pow, ast.USub, ast.UAdd, ast.Constant, ast.Name, ast.Load,
)


def _eval_node(node):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body)
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ValueError(f"unsupported constant {node.value!r}")
        return RationalFunction(node.value)
    if isinstance(node, ast.Name):
        if node.id != "q":
            raise ValueError(f"unknown symbol {node.id!r}")
        return q
    if isinstance(node, ast.UnaryOp):
        val = _eval_node(node.operand)
        return -val if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left)
        if isinstance(node.op, ast.Pow):
            if not isinstance(node.right, (ast.Constant, ast.UnaryOp)):
                raise ValueError("exponent must be an integer literal")
            exp = _eval_node(node.right).constant_value()
            if exp.denominator != 1:
                raise ValueError("exponent must be an integer")
            return left ** int(exp)
        right = _eval_node(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
    raise ValueError(f"unsupported syntax: {ast.dump(node)}")


def parse(text: str) -> RationalFunction:
    """Parse strings such as ``"q^2*(q-1)/(q+1)"`` or ``"-3/2"``."""
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED):
            raise ValueError(f"unsupported syntax in {text!r}")
    return _eval_node(tree)
