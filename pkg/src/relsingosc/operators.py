"""Composable finite-difference operator calculus.

Shift operators act on analytic functions by exact complex displacement
(rho -> rho + tau), not by discretized stencils: every function in scope
(gamma products, polynomials, plane waves) is analytic in a strip around
the real axis, so residual checks are limited only by rounding.

Each AnalyticFunction declares the half-width of the strip it is valid on;
each operator declares how much imaginary displacement it consumes
(shift_budget). Applying an operator checks the budget against the strip
and the image carries the reduced strip, so "how many shifts can I still
apply" is a checkable contract rather than a silent wrong value.

Operators are immutable; evaluation is lazy (a closure tree) and
re-entrant. An opt-in memoization wrapper is provided for grid sweeps.
"""

from __future__ import annotations

import threading
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "AnalyticFunction",
    "LinearOperator",
    "StripExhaustedError",
    "SingularPointError",
    "shift",
    "scale",
    "multiply_by",
    "identity_op",
    "op_sum",
    "compose",
    "cosh_shift",
    "sinh_shift",
    "apply",
    "linear_combination",
    "memoized",
    "taylor_limit_check",
]

_BUDGET_SLACK = 1e-12  # tolerate rounding in strip bookkeeping comparisons


class StripExhaustedError(RuntimeError):
    """Operator chain consumes more imaginary displacement than the function's strip."""


class SingularPointError(ValueError):
    """Evaluation requested exactly at a declared isolated singular point."""


class AnalyticFunction:
    """An evaluable function of a complex coordinate, valid on |Im rho| <= strip_halfwidth.

    The evaluator must accept complex scalars and numpy arrays alike and be
    finite everywhere in the strip except at declared isolated points
    (typically on the imaginary axis, e.g. rho = 0 images).
    """

    __slots__ = ("fn", "strip_halfwidth", "singular_points")

    def __init__(self, fn: Callable, strip_halfwidth: float, singular_points: tuple = ()):
        if strip_halfwidth < 0:
            raise ValueError("strip_halfwidth must be non-negative")
        self.fn = fn
        self.strip_halfwidth = float(strip_halfwidth)
        self.singular_points = tuple(singular_points)

    def __call__(self, rho):
        return self.fn(rho)


def _as_function(f) -> AnalyticFunction:
    if isinstance(f, AnalyticFunction):
        return f
    raise TypeError(f"expected AnalyticFunction, got {type(f).__name__}")


class LinearOperator:
    """Base class; subclasses realize Shift / MultiplyBy / Scale / Sum / Compose."""

    shift_budget: float = 0.0

    def apply(self, f: AnalyticFunction) -> AnalyticFunction:
        f = _as_function(f)
        if f.strip_halfwidth + _BUDGET_SLACK < self.shift_budget:
            raise StripExhaustedError(
                f"operator needs strip {self.shift_budget}, function provides "
                f"{f.strip_halfwidth}"
            )
        return self._apply(f)

    def _apply(self, f: AnalyticFunction) -> AnalyticFunction:
        raise NotImplementedError

    # operator algebra sugar ------------------------------------------------
    def __matmul__(self, other):
        return compose(self, other)

    def __add__(self, other):
        return op_sum(self, other)

    def __sub__(self, other):
        return op_sum(self, scale(-1.0) @ other)

    def __mul__(self, c):
        if isinstance(c, LinearOperator):
            return NotImplemented
        return compose(scale(c), self)

    __rmul__ = __mul__

    def __neg__(self):
        return compose(scale(-1.0), self)


class Shift(LinearOperator):
    """(shift(tau) f)(rho) = f(rho + tau); budget counts |Im tau| only."""

    def __init__(self, tau):
        self.tau = complex(tau)
        self.shift_budget = abs(self.tau.imag)

    def _apply(self, f):
        tau = self.tau
        return AnalyticFunction(
            lambda z, _f=f.fn: _f(z + tau),
            f.strip_halfwidth - self.shift_budget,
            tuple(p - tau for p in f.singular_points),
        )


class Scale(LinearOperator):
    def __init__(self, c):
        self.c = complex(c)

    def _apply(self, f):
        c = self.c
        return AnalyticFunction(lambda z, _f=f.fn: c * _f(z), f.strip_halfwidth,
                                f.singular_points)


class MultiplyBy(LinearOperator):
    """Multiplication by a coordinate function (callable or AnalyticFunction)."""

    def __init__(self, factor, singular_points: tuple = ()):
        if isinstance(factor, AnalyticFunction):
            self.factor = factor.fn
            self.factor_strip = factor.strip_halfwidth
            self.singular_points = tuple(singular_points) + factor.singular_points
        else:
            self.factor = factor
            self.factor_strip = np.inf
            self.singular_points = tuple(singular_points)

    def _apply(self, f):
        fac = self.factor
        pts = self.singular_points

        def ev(z, _f=f.fn):
            if pts:
                _check_singular(z, pts)
            return fac(z) * _f(z)

        return AnalyticFunction(
            ev,
            min(f.strip_halfwidth, self.factor_strip),
            f.singular_points + pts,
        )


def _check_singular(z, points):
    zz = np.asarray(z)
    for p in points:
        if np.any(zz == p):
            raise SingularPointError(f"evaluation at declared singular point {p}")


class OpSum(LinearOperator):
    def __init__(self, ops: Sequence[LinearOperator]):
        self.ops = tuple(ops)
        self.shift_budget = max((op.shift_budget for op in self.ops), default=0.0)

    def _apply(self, f):
        parts = [op.apply(f) for op in self.ops]
        strip = min(p.strip_halfwidth for p in parts)
        sing = sum((p.singular_points for p in parts), ())

        def ev(z, _parts=parts):
            acc = _parts[0].fn(z)
            for p in _parts[1:]:
                acc = acc + p.fn(z)
            return acc

        return AnalyticFunction(ev, strip, sing)


class OpCompose(LinearOperator):
    """compose(A, B, C) acts as the operator product A B C (C applied first)."""

    def __init__(self, ops: Sequence[LinearOperator]):
        self.ops = tuple(ops)
        self.shift_budget = sum(op.shift_budget for op in self.ops)

    def _apply(self, f):
        g = f
        for op in reversed(self.ops):
            g = op.apply(g)
        return g


def shift(tau) -> LinearOperator:
    return Shift(tau)


def scale(c) -> LinearOperator:
    return Scale(c)


def multiply_by(factor, singular_points: tuple = ()) -> LinearOperator:
    return MultiplyBy(factor, singular_points)


def identity_op() -> LinearOperator:
    return Shift(0.0)


def op_sum(*ops) -> LinearOperator:
    return OpSum(ops)


def compose(*ops) -> LinearOperator:
    return OpCompose(ops)


def cosh_shift(step: float = 1.0) -> LinearOperator:
    """cosh(i step d/drho): f -> [f(rho + i step) + f(rho - i step)] / 2."""
    return op_sum(0.5 * shift(1j * step), 0.5 * shift(-1j * step))


def sinh_shift(step: float = 1.0) -> LinearOperator:
    """sinh(i step d/drho): f -> [f(rho + i step) - f(rho - i step)] / 2."""
    return op_sum(0.5 * shift(1j * step), -0.5 * shift(-1j * step))


def apply(op: LinearOperator, f: AnalyticFunction) -> AnalyticFunction:
    """Apply an operator, enforcing the strip budget."""
    return op.apply(f)


def linear_combination(coeffs, fns: Sequence[AnalyticFunction]) -> AnalyticFunction:
    """Pointwise sum_i coeffs[i] * fns[i], carrying the tightest strip."""
    coeffs = [complex(c) for c in coeffs]
    fns = [_as_function(f) for f in fns]
    if len(coeffs) != len(fns) or not fns:
        raise ValueError("need matching, non-empty coefficient and function lists")
    strip = min(f.strip_halfwidth for f in fns)
    sing = sum((f.singular_points for f in fns), ())

    def ev(z):
        acc = coeffs[0] * fns[0].fn(z)
        for c, f in zip(coeffs[1:], fns[1:]):
            acc = acc + c * f.fn(z)
        return acc

    return AnalyticFunction(ev, strip, sing)


def memoized(f: AnalyticFunction) -> AnalyticFunction:
    """Caching wrapper keyed on the exact bit pattern of the argument.

    Scalars key on the complex value, arrays on their raw bytes. Safe to
    share between threads (a lock guards the cache); intended for grid
    sweeps that revisit identical evaluation points.
    """
    cache: dict = {}
    lock = threading.Lock()
    inner = f.fn

    def ev(z):
        if np.ndim(z) == 0:
            key = complex(z)
        else:
            arr = np.asarray(z)
            key = (arr.shape, arr.tobytes())
        with lock:
            if key in cache:
                return cache[key]
        val = inner(z)
        with lock:
            cache[key] = val
        return val

    return AnalyticFunction(ev, f.strip_halfwidth, f.singular_points)


def taylor_limit_check(f: Callable, second_derivative: Callable, lambda_bar: float,
                       points) -> float:
    """Max over points of |(cosh(i lam d) - 1) f + lam^2 f''/2|.

    For entire test functions this residual scales as O(lambda_bar^4),
    certifying that the symmetric displacement average reproduces the
    ordinary second-derivative kinetic term in the small-step limit.
    """
    pts = np.asarray(points, dtype=float)
    lam = float(lambda_bar)
    avg = 0.5 * (np.asarray(f(pts + 1j * lam)) + np.asarray(f(pts - 1j * lam)))
    resid = avg - f(pts) + 0.5 * lam ** 2 * np.asarray(second_derivative(pts))
    return float(np.max(np.abs(resid)))
