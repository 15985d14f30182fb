"""Exact size sequences, their closed forms, and spanning-tree entropy.

The vertex/edge counts of both families satisfy coupled first-order
recurrences that decouple into a single second-order linear recurrence.
Closed-form (Binet) evaluation is done in the quadratic field Q(sqrt(d))
with exact rational coordinates, with coefficients re-derived from the
seed values; the fixed constant expressions that are usually quoted for
the wheel family fail at j = 0 and are kept only for cross-check reports.

Index convention: u[j] and e[j] are seeded with u[0] = 1, e[0] = 0 (a
single bare vertex), so the stage-i graph has u[i+1] vertices and e[i+1]
edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import BadParameterError, DomainViolationError
from .params import Family, FractalParams


@dataclass(frozen=True)
class QuadraticNumber:
    """Exact element p + q*sqrt(d) of a real quadratic field."""

    p: Fraction
    q: Fraction
    d: int

    def _check(self, other):
        if self.d != other.d:
            raise ValueError("mixed radicands")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(self.p + other, self.q, self.d)
        self._check(other)
        return QuadraticNumber(self.p + other.p, self.q + other.q, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.p, -self.q, self.d)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadraticNumber) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(self.p * other, self.q * other, self.d)
        self._check(other)
        return QuadraticNumber(
            self.p * other.p + self.q * other.q * self.d,
            self.p * other.q + self.q * other.p,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(self.p / other, self.q / other, self.d)
        self._check(other)
        norm = other.p * other.p - other.q * other.q * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero element")
        conj = QuadraticNumber(other.p, -other.q, self.d)
        return (self * conj) / norm

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = QuadraticNumber(Fraction(1), Fraction(0), self.d)
        basis = self
        while k:
            if k & 1:
                result = result * basis
            basis = basis * basis
            k >>= 1
        return result

    def to_float(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(self.d)

    def as_exact_int(self) -> int:
        """The value as an integer; raises if it is not one."""
        root = math.isqrt(self.d)
        if root * root == self.d:
            value = self.p + self.q * root
        elif self.q == 0:
            value = self.p
        else:
            raise ValueError(f"{self} is irrational")
        if value.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return value.numerator

    def __str__(self):
        return f"{self.p} + {self.q}*sqrt({self.d})"


@dataclass(frozen=True)
class SizeSequences:
    """Exact u (vertex) and e (edge) count sequences up to a given index."""

    params: FractalParams
    u: tuple
    e: tuple


def _coupled_rates(params: FractalParams) -> tuple:
    # u_j = vr*u_{j-1} + (m-1)*e_{j-1};  e_j = er*u_{j-1} + m*e_{j-1}
    if params.family is Family.CYCLE:
        return params.n, params.n
    return params.n + 1, 2 * params.n


def size_sequences(params: FractalParams, upto: int) -> SizeSequences:
    """u[0..upto] and e[0..upto] from the coupled growth recurrences."""
    if upto < 0:
        raise BadParameterError("upto must be >= 0")
    vr, er = _coupled_rates(params)
    m = params.m
    u = [1]
    e = [0]
    for _ in range(upto):
        u.append(vr * u[-1] + (m - 1) * e[-1])
        e.append(er * u[-2] + m * e[-1])
    return SizeSequences(params, tuple(u), tuple(e))


@dataclass(frozen=True)
class RecurrenceSpec:
    """Decoupled second-order recurrence x_j = a*x_{j-1} + b*x_{j-2}."""

    a: int
    b: int
    discriminant: int
    u0: int
    u1: int

    @classmethod
    def for_params(cls, params: FractalParams) -> "RecurrenceSpec":
        n, m = params.n, params.m
        if params.family is Family.CYCLE:
            a, b, u1 = n + m, -n, n
        else:
            a, b, u1 = n + m + 1, m * n - m - 2 * n, n + 1
        return cls(a, b, a * a + 4 * b, 1, u1)

    def roots(self) -> tuple:
        d = self.discriminant
        half = Fraction(1, 2)
        plus = QuadraticNumber(Fraction(self.a, 2), half, d)
        minus = QuadraticNumber(Fraction(self.a, 2), -half, d)
        return plus, minus

    def binet_coefficients(self) -> tuple:
        """Coefficients (A, B) with x_j = A*r+^j + B*r-^j, from the seeds."""
        plus, minus = self.roots()
        sqrt_d = QuadraticNumber(Fraction(0), Fraction(1), self.discriminant)
        coeff_plus = (self.u1 - minus * self.u0) / sqrt_d
        coeff_minus = self.u0 - coeff_plus
        return coeff_plus, coeff_minus


def binet_vertex(params: FractalParams, j: int) -> int:
    """Closed-form u_j, exact; always equals the recurrence value."""
    if j < 0:
        raise BadParameterError("index must be >= 0")
    spec = RecurrenceSpec.for_params(params)
    plus, minus = spec.roots()
    coeff_plus, coeff_minus = spec.binet_coefficients()
    return (coeff_plus * plus**j + coeff_minus * minus**j).as_exact_int()


def binet_vertex_fixed_constants(params: FractalParams, j: int) -> QuadraticNumber:
    """Closed-form u_j using the fixed constant expressions, exactly.

    For the cycle family this agrees with :func:`binet_vertex`.  For the
    wheel family the constant (z - a2 + 1) makes the expression fail
    already at j = 0; it is evaluated verbatim here so cross-check reports
    can quantify the disagreement.
    """
    n, m = params.n, params.m
    spec = RecurrenceSpec.for_params(params)
    d = spec.discriminant
    a1, a2 = m - n, m + n
    root = QuadraticNumber(Fraction(0), Fraction(1), d)
    if params.family is Family.CYCLE:
        term = (a1 + root) * (a2 - root) ** j + (root - a1) * (root + a2) ** j
    else:
        term = (a1 + root - 1) * (a2 + 1 - root) ** j + (root - a2 + 1) * (root + a2 + 1) ** j
    return term / root / (2 ** (j + 1))


class EntropyConvention(str, Enum):
    # ln tau(G^(k)) divided by u_k ("offset", the count one stage back) or
    # by u_{k+1} (the actual vertex count of the stage-k graph).
    OFFSET_STAGE = "offset_stage"
    SAME_STAGE = "same_stage"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class EntropyEstimate:
    value: float
    method: str
    iterations: int
    delta: float


def _entropy_terms(params: FractalParams):
    # ln tau(G^(k)) = S1(k)*ln(base) + mult*S2(k)*ln(m) with
    # S1 = sum u_j, S2 = sum (k-j)u_j over j <= k.
    if params.family is Family.CYCLE:
        return params.n, 1
    from .spanning import tau_wheel_base

    return tau_wheel_base(params.n), params.n


def entropy_limit(
    params: FractalParams,
    iters: int = 60,
    convention: EntropyConvention = EntropyConvention.OFFSET_STAGE,
) -> EntropyEstimate:
    """Per-vertex spanning-tree entropy via the recurrences, no graphs built.

    The exponent sums and vertex counts are exact integers; each estimate
    is formed from exact ratios so arbitrarily deep iterations never
    overflow.
    """
    if iters < 2:
        raise BadParameterError("iters must be >= 2")
    convention = EntropyConvention(convention)
    if convention is EntropyConvention.CLOSED_FORM:
        raise BadParameterError("use entropy_closed for the closed form")
    base_count, mult = _entropy_terms(params)
    log_base = math.log(base_count)
    log_m = math.log(params.m)
    u = size_sequences(params, iters + 1).u

    def estimate(k: int) -> float:
        s1 = sum(u[: k + 1])
        s2 = sum((k - j) * u[j] for j in range(k + 1))
        denom = u[k] if convention is EntropyConvention.OFFSET_STAGE else u[k + 1]
        return float(Fraction(s1, denom)) * log_base + mult * float(
            Fraction(s2, denom)
        ) * log_m

    value = estimate(iters)
    return EntropyEstimate(value, convention.value, iters, value - estimate(iters - 1))


def entropy_closed(params: FractalParams) -> float:
    """The explicit entropy formulas, evaluated verbatim.

    The cycle formula is only stated for n > m and matches the limit.  The
    wheel formula (constants A, B, C, D below) does not reproduce the
    numerical limit; callers compare, never assume.
    """
    n, m = params.n, params.m
    if params.family is Family.CYCLE:
        if not n > m:
            raise DomainViolationError(f"cycle entropy formula needs n > m, got n={n}, m={m}")
        phi = math.sqrt(-4 * n + (m + n) ** 2)
        a1, a2 = m - n, m + n
        return (2 * (m - 1) * n * math.log(n) - n * math.log(m) * (-phi + a2 - 2)) / (
            (m - 1) * (phi - a1)
        )
    z = math.sqrt(6 * (m - 1) * n + (m - 1) ** 2 + n ** 2)
    a2 = m + n
    golden = (1 + math.sqrt(5)) / 2
    big_a = 4 * (m - 1) / ((z - a2 + 1) * (z + a2 - 1) ** 2)
    big_b = (4 * n * math.log(m) / (z - a2 + 1) ** 2) * (
        -z
        + m**2 * (n - 1)
        + m * (z + n * (-z + 3 * n - 7) + 2)
        + n * (3 * z - 5 * n + 6)
        - 1
    )
    big_c = (
        (1 / (-z + a2 - 1))
        * (z + a2 - 1)
        * (z + m * (n - 1) - n * (z + n + 4) + 1)
        * math.log(golden ** (2 * n) - 2)
    )
    big_d = 4**n * (math.sqrt(5) + 1) ** (-2 * n) * math.cos(2 * math.pi * n)
    return big_a * (big_b + big_c + big_d)


def entropy_surface_rows(family: Family, n_range, m_range) -> list:
    """(n, m, offset, same, closed-or-None) rows, n-major order."""
    rows = []
    for n in n_range:
        for m in m_range:
            p = FractalParams(family, n, m)
            offset = entropy_limit(p, convention=EntropyConvention.OFFSET_STAGE).value
            same = entropy_limit(p, convention=EntropyConvention.SAME_STAGE).value
            try:
                closed = entropy_closed(p)
            except DomainViolationError:
                closed = None
            rows.append((n, m, offset, same, closed))
    return rows
