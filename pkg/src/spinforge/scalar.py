"""Scalar handling: exact rationals by default, binary floats on request.

The active mode lives in a context variable so concurrent callers can use
different modes without stepping on each other.
"""

from __future__ import annotations

import contextlib
import contextvars
from fractions import Fraction
from numbers import Rational

EXACT = "exact"
FLOAT = "float"

_mode: contextvars.ContextVar[str] = contextvars.ContextVar("spinforge_mode", default=EXACT)


class ExactModeRequired(RuntimeError):
    """Raised by operations that refuse to run on floating scalars."""


def mode() -> str:
    return _mode.get()


def set_mode(name: str) -> None:
    if name not in (EXACT, FLOAT):
        raise ValueError(f"unknown scalar mode {name!r}")
    _mode.set(name)


@contextlib.contextmanager
def scalar_mode(name: str):
    if name not in (EXACT, FLOAT):
        raise ValueError(f"unknown scalar mode {name!r}")
    token = _mode.set(name)
    try:
        yield
    finally:
        _mode.reset(token)


def require_exact(what: str) -> None:
    if _mode.get() != EXACT:
        raise ExactModeRequired(f"{what} runs in exact mode only")


def coerce(x, exact: bool | None = None):
    """Convert ``x`` to the scalar type of the active (or given) mode."""
    if exact is None:
        exact = _mode.get() == EXACT
    if exact:
        if isinstance(x, float):
            # a float literal is taken at its decimal face value, not its binary one
            return Fraction(repr(x))
        return Fraction(x)
    return float(x)


def parse_scalar(text: str, exact: bool | None = None):
    text = text.strip()
    if not text:
        raise ValueError("empty scalar literal")
    if exact is None:
        exact = _mode.get() == EXACT
    try:
        value = Fraction(text)
    except ValueError:
        if exact:
            raise ValueError(f"not a rational literal: {text!r}") from None
        return float(text)  # inf, nan and friends
    return value if exact else float(value)


def format_scalar(x) -> str:
    if isinstance(x, Rational):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, Complex):
        return x.format()
    return repr(float(x))


def parse_list(text: str, n: int | tuple[int, int], exact: bool | None = None) -> list:
    parts = [p for p in text.replace(" ", "").split(",")]
    lo, hi = (n, n) if isinstance(n, int) else n
    if not lo <= len(parts) <= hi:
        want = str(lo) if lo == hi else f"{lo} to {hi}"
        raise ValueError(f"expected {want} comma-separated values, got {len(parts)}")
    return [parse_scalar(p, exact) for p in parts]


def div(a, b):
    """a / b, staying rational when both are integers."""
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def is_zero(x, tol: float = 0.0) -> bool:
    if isinstance(x, Complex):
        return is_zero(x.re, tol) and is_zero(x.im, tol)
    if isinstance(x, float):
        return abs(x) <= tol
    return x == 0


class Complex:
    """A complex number whose parts are arbitrary scalars (exact rationals usually)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("Complex is immutable")

    @staticmethod
    def lift(x) -> "Complex":
        return x if isinstance(x, Complex) else Complex(x, 0)

    def __add__(self, other):
        o = Complex.lift(other)
        return Complex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Complex(-self.re, -self.im)

    def __sub__(self, other):
        o = Complex.lift(other)
        return Complex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return Complex.lift(other) - self

    def __mul__(self, other):
        o = Complex.lift(other)
        return Complex(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "Complex":
        return Complex(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = Complex.lift(other)
        n = o.abs2()
        num = self * o.conjugate()
        return Complex(div(num.re, n), div(num.im, n))

    def __eq__(self, other):
        if isinstance(other, (int, float, Fraction)):
            other = Complex(other, 0)
        if not isinstance(other, Complex):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def format(self) -> str:
        re, im = format_scalar(self.re), format_scalar(self.im)
        return f"{re}+{im}i" if not im.startswith("-") else f"{re}{im}i"

    def __repr__(self):
        return f"Complex({self.format()})"
