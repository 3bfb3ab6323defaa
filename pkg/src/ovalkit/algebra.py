"""Exact arithmetic backbone: rationals, sparse multivariate polynomials,
dense univariate polynomials, rational functions, Sturm counts and
rational root extraction.

Coefficients are `fractions.Fraction` throughout, so every operation is
exact and every stored value is automatically in lowest terms with a
positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import DeskScopeError, EvaluationError

Scalar = Union[int, Fraction]

# Largest trailing/leading coefficient magnitude for which rational-root
# candidates are enumerated by trial division.
_ROOT_DIVISOR_LIMIT = 10**12


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _monomial_key(exponents: tuple[int, ...]) -> tuple:
    # Graded order; ties broken on the exponents of later variables first,
    # which reproduces the conventional textbook printing y^4 - 2*x*y^2 - ...
    return (sum(exponents), tuple(reversed(exponents)))


class Polynomial:
    """Sparse multivariate polynomial over Fraction.

    Terms are stored as a map from exponent tuples (aligned with the
    declared variable order) to nonzero coefficients.

    >>> x, y = Polynomial.variable("x"), Polynomial.variable("y")
    >>> ((y**2 - x)**2 - x**3).total_degree()
    4
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], Scalar]):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate variable names")
        cleaned: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != len(vs):
                raise ValueError("exponent tuple does not match variable count")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = as_fraction(coeff)
            if c:
                cleaned[exps] = cleaned.get(exps, Fraction(0)) + c
                if not cleaned[exps]:
                    del cleaned[exps]
        self.vars = vs
        self.terms = cleaned

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value, variables: Sequence[str] = ()) -> "Polynomial":
        value = as_fraction(value)
        vs = tuple(variables)
        if not value:
            return cls(vs, {})
        return cls(vs, {(0,) * len(vs): value})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> "Polynomial":
        return cls(variables, {})

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        if var not in self.vars:
            return 0 if self.terms else -1
        if not self.terms:
            return -1
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def used_vars(self) -> set[str]:
        used = set()
        for exps in self.terms:
            for v, e in zip(self.vars, exps):
                if e:
                    used.add(v)
        return used

    def _normal(self) -> dict[frozenset, Fraction]:
        out: dict[frozenset, Fraction] = {}
        for exps, c in self.terms.items():
            key = frozenset((v, e) for v, e in zip(self.vars, exps) if e)
            out[key] = c
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._normal() == other._normal()

    def __hash__(self):
        return hash(frozenset(self._normal().items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in canonical order: graded, descending."""
        return sorted(self.terms.items(), key=lambda t: _monomial_key(t[0]), reverse=True)

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=_monomial_key)
        return exps, self.terms[exps]

    # -- variable alignment -------------------------------------------

    def with_vars(self, variables: Sequence[str]) -> "Polynomial":
        """Re-express over a superset of variables (declared order given)."""
        vs = tuple(variables)
        missing = self.used_vars() - set(vs)
        if missing:
            raise ValueError(f"variables {sorted(missing)} would be dropped")
        index = {v: i for i, v in enumerate(vs)}
        pos = [index.get(v) for v in self.vars]
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            new = [0] * len(vs)
            for p, e in zip(pos, exps):
                if e:
                    new[p] = e
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + c
        return Polynomial(vs, terms)

    @staticmethod
    def _aligned(a: "Polynomial", b: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if a.vars == b.vars:
            return a, b
        merged = list(a.vars) + [v for v in b.vars if v not in a.vars]
        return a.with_vars(merged), b.with_vars(merged)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(as_fraction(other), self.vars)

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "Polynomial":
        a, b = Polynomial._aligned(self, self._coerce(other))
        terms = dict(a.terms)
        for exps, c in b.terms.items():
            s = terms.get(exps, Fraction(0)) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return Polynomial(a.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if not c:
                return Polynomial.zero(self.vars)
            return Polynomial(self.vars, {e: k * c for e, k in self.terms.items()})
        a, b = Polynomial._aligned(self, self._coerce(other))
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(i + j for i, j in zip(e1, e2))
                s = terms.get(key, Fraction(0)) + c1 * c2
                if s:
                    terms[key] = s
                else:
                    del terms[key]
        return Polynomial(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power requires a non-negative integer")
        result = Polynomial.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and evaluation ----------------------------------------

    def partial_derivative(self, var: str) -> "Polynomial":
        if var not in self.vars:
            raise ValueError(f"variable {var!r} not declared")
        i = self.vars.index(var)
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            if exps[i] == 0:
                continue
            new = list(exps)
            new[i] -= 1
            terms[tuple(new)] = c * exps[i]
        return Polynomial(self.vars, terms)

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        missing = self.used_vars() - set(assignment)
        if missing:
            raise EvaluationError(f"assignment missing variables {sorted(missing)}")
        vals = [as_fraction(assignment.get(v, 0)) for v in self.vars]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(vals, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def evaluate_float(self, assignment: Mapping[str, float]) -> tuple[float, float]:
        """Float evaluation; returns (value, largest absolute monomial)."""
        total = 0.0
        biggest = 0.0
        for exps, c in self.terms.items():
            term = float(c)
            for v, e in zip(self.vars, exps):
                if e:
                    term *= float(assignment[v]) ** e
            total += term
            biggest = max(biggest, abs(term))
        return total, biggest

    def subs(self, var: str, replacement) -> "Polynomial":
        """Substitute a polynomial (or scalar) for one variable, exactly."""
        if var not in self.vars:
            return self
        if isinstance(replacement, (int, Fraction)):
            replacement = Polynomial.constant(replacement)
        coeffs = self.coeffs_in(var)
        rest_vars = tuple(v for v in self.vars if v != var)
        result = Polynomial.zero(rest_vars)
        for c in reversed(coeffs):
            result = result * replacement + c
        return result

    def rename_vars(self, mapping: Mapping[str, str]) -> "Polynomial":
        new = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new)) != len(new):
            raise ValueError("renaming collides variable names")
        return Polynomial(new, dict(self.terms))

    # -- coefficient views ---------------------------------------------

    def coeffs_in(self, var: str) -> list["Polynomial"]:
        """Coefficients as polynomials in the remaining variables, ascending."""
        if var not in self.vars:
            return [self]
        i = self.vars.index(var)
        rest = tuple(v for j, v in enumerate(self.vars) if j != i)
        deg = self.degree_in(var)
        buckets: list[dict[tuple[int, ...], Fraction]] = [dict() for _ in range(deg + 1)]
        for exps, c in self.terms.items():
            key = exps[:i] + exps[i + 1 :]
            buckets[exps[i]][key] = c
        return [Polynomial(rest, b) for b in buckets]

    @staticmethod
    def from_coeffs_in(var: str, coeffs: Sequence["Polynomial"]) -> "Polynomial":
        out = Polynomial.zero((var,))
        v = Polynomial.variable(var)
        for k, c in enumerate(coeffs):
            if not c.is_zero:
                out = out + c * v**k
        return out

    # -- normalization --------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational content (gcd of coefficients); 0 for the zero poly."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, abs(c.numerator))
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive_normalized(self) -> tuple["Polynomial", Fraction]:
        """Divide out the content and fix the canonical leading sign positive.

        Returns (normalized polynomial, removed factor) with
        self == normalized * factor.
        """
        if not self.terms:
            return self, Fraction(1)
        factor = self.content()
        if self.leading()[1] < 0:
            factor = -factor
        return self * (1 / factor), factor

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Exact polynomial division; raises ValueError if not divisible."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        a, d = Polynomial._aligned(self, divisor)
        if a.is_zero:
            return a
        d_exps, d_coeff = d.leading()
        quotient: dict[tuple[int, ...], Fraction] = {}
        rem = a
        while rem.terms:
            r_exps, r_coeff = rem.leading()
            q_exps = tuple(r - s for r, s in zip(r_exps, d_exps))
            if any(e < 0 for e in q_exps):
                raise ValueError("polynomial division is not exact")
            q_coeff = r_coeff / d_coeff
            quotient[q_exps] = quotient.get(q_exps, Fraction(0)) + q_coeff
            rem = rem - Polynomial(rem.vars, {q_exps: q_coeff}) * d
        return Polynomial(a.vars, quotient)

    def __repr__(self):
        from .parsing import render_polynomial

        return f"Polynomial({render_polynomial(self)!r})"


class UnivariatePolynomial:
    """Dense univariate polynomial over Fraction, ascending coefficients."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[Scalar]):
        cs = [as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.var = var
        self.coeffs = cs

    @classmethod
    def zero(cls, var: str) -> "UnivariatePolynomial":
        return cls(var, [])

    @classmethod
    def constant(cls, var: str, value) -> "UnivariatePolynomial":
        return cls(var, [as_fraction(value)])

    @classmethod
    def identity(cls, var: str) -> "UnivariatePolynomial":
        return cls(var, [0, 1])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def _check(self, other: "UnivariatePolynomial"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def _coerce(self, other) -> "UnivariatePolynomial":
        if isinstance(other, UnivariatePolynomial):
            self._check(other)
            return other
        return UnivariatePolynomial.constant(self.var, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UnivariatePolynomial.constant(self.var, other)
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, tuple(self.coeffs)))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        cs = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            cs[i] += c
        for i, c in enumerate(o.coeffs):
            cs[i] += c
        return UnivariatePolynomial(self.var, cs)

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = as_fraction(other)
            return UnivariatePolynomial(self.var, [c * k for c in self.coeffs])
        o = self._coerce(other)
        if self.is_zero or o.is_zero:
            return UnivariatePolynomial.zero(self.var)
        cs = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                cs[i + j] += a * b
        return UnivariatePolynomial(self.var, cs)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("power requires a non-negative integer")
        out = UnivariatePolynomial.constant(self.var, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        d = self._coerce(other)
        if d.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = UnivariatePolynomial.zero(self.var)
        r = self
        dlc = d.leading_coefficient()
        ddeg = d.degree()
        while not r.is_zero and r.degree() >= ddeg:
            shift = r.degree() - ddeg
            coeff = r.leading_coefficient() / dlc
            mono = UnivariatePolynomial(self.var, [0] * shift + [coeff])
            q = q + mono
            r = r - mono * d
        return q, r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def evaluate(self, x) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def derivative(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(self.var, [c * i for i, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "UnivariatePolynomial":
        """Formal antiderivative with zero constant term."""
        return UnivariatePolynomial(
            self.var, [Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)]
        )

    def monic(self) -> "UnivariatePolynomial":
        if self.is_zero:
            return self
        lc = self.leading_coefficient()
        return UnivariatePolynomial(self.var, [c / lc for c in self.coeffs])

    def compose(self, inner: "UnivariatePolynomial") -> "UnivariatePolynomial":
        acc = UnivariatePolynomial.zero(inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def rename(self, var: str) -> "UnivariatePolynomial":
        return UnivariatePolynomial(var, self.coeffs)

    def primitive_integer(self) -> tuple["UnivariatePolynomial", Fraction]:
        """Integer-coefficient primitive form and the removed positive factor."""
        if self.is_zero:
            return self, Fraction(1)
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = 0
        for c in self.coeffs:
            num = math.gcd(num, abs(c.numerator * (den // c.denominator)))
        factor = Fraction(num, den)
        return self * (1 / factor), factor

    def to_polynomial(self) -> Polynomial:
        return Polynomial((self.var,), {(i,): c for i, c in enumerate(self.coeffs) if c})

    def __repr__(self):
        from .parsing import render_polynomial

        return f"UnivariatePolynomial({render_polynomial(self.to_polynomial())!r})"


def univariate_from_polynomial(p: Polynomial, var: str | None = None) -> UnivariatePolynomial:
    used = p.used_vars()
    if var is None:
        if len(used) > 1:
            raise ValueError("polynomial is not univariate")
        var = next(iter(used)) if used else (p.vars[0] if p.vars else "t")
    if used - {var}:
        raise ValueError(f"polynomial involves variables besides {var!r}")
    coeffs = [Fraction(0)] * (p.degree_in(var) + 1 if p.terms else 0)
    i = p.vars.index(var) if var in p.vars else None
    for exps, c in p.terms.items():
        coeffs[exps[i] if i is not None else 0] = c
    return UnivariatePolynomial(var, coeffs)


def gcd_univariate(p: UnivariatePolynomial, q: UnivariatePolynomial) -> UnivariatePolynomial:
    """Monic greatest common divisor via the Euclidean algorithm."""
    if p.var != q.var:
        raise ValueError("gcd requires a common variable")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: UnivariatePolynomial) -> UnivariatePolynomial:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero:
        raise ValueError("square-free part of the zero polynomial")
    if p.degree() == 0:
        return UnivariatePolynomial.constant(p.var, 1)
    g = gcd_univariate(p, p.derivative())
    return (p // g).monic()


def sturm_chain(p: UnivariatePolynomial) -> list[UnivariatePolynomial]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_variations(values: Iterable[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@dataclass(frozen=True)
class Interval:
    """Closed rational interval with lo < hi."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if not self.lo < self.hi:
            raise ValueError("interval requires lo < hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x, closed: bool = True) -> bool:
        x = as_fraction(x)
        return (self.lo <= x <= self.hi) if closed else (self.lo < x < self.hi)


def sturm_count_roots(p: UnivariatePolynomial, interval: Interval) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    The square-free part is taken internally, so multiplicities are ignored.
    """
    if p.is_zero:
        raise ValueError("root counting requires a nonzero polynomial")
    q = squarefree_part(p)
    if q.degree() < 1:
        return 0
    chain = sturm_chain(q)
    v_lo = _sign_variations(f.evaluate(interval.lo) for f in chain)
    v_hi = _sign_variations(f.evaluate(interval.hi) for f in chain)
    return v_lo - v_hi


_TRIAL_DIVISION_BOUND = 10**6
_MAX_ROOT_CANDIDATES = 200_000


def _divisors(n: int) -> list[int]:
    """All positive divisors of n via trial-division factorization.

    After dividing out primes up to 1e6, a remaining cofactor below 1e12 is
    necessarily prime; anything larger is declared out of desk scope rather
    than mis-factored.
    """
    factors: dict[int, int] = {}
    m = n
    d = 2
    while d * d <= m and d <= _TRIAL_DIVISION_BOUND:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        if m > _ROOT_DIVISOR_LIMIT:
            raise DeskScopeError(
                f"coefficient cofactor {m} too large for rational-root candidate enumeration"
            )
        factors[m] = factors.get(m, 0) + 1
    divisors = [1]
    for p, k in factors.items():
        divisors = [dv * p**j for dv in divisors for j in range(k + 1)]
        if len(divisors) > _MAX_ROOT_CANDIDATES:
            raise DeskScopeError("too many divisor candidates for rational roots")
    return sorted(divisors)


def rational_roots(p: UnivariatePolynomial) -> list[Fraction]:
    """All rational roots of p, repeated per multiplicity, ascending.

    Uses the rational-root theorem on the primitive integer form.
    """
    if p.is_zero:
        raise ValueError("rational roots of the zero polynomial")
    roots: list[Fraction] = []
    work = p
    while work.coeffs and not work.coeffs[0]:
        roots.append(Fraction(0))
        work = UnivariatePolynomial(p.var, work.coeffs[1:])
    if work.degree() < 1:
        return sorted(roots)
    prim, _ = work.primitive_integer()
    a0 = abs(prim.coeffs[0].numerator)
    an = abs(prim.coeffs[-1].numerator)
    num_divs = _divisors(a0)
    den_divs = _divisors(an)
    if len(num_divs) * len(den_divs) > _MAX_ROOT_CANDIDATES:
        raise DeskScopeError("too many rational-root candidates")
    candidates = set()
    for num in num_divs:
        for den in den_divs:
            candidates.add(Fraction(num, den))
            candidates.add(Fraction(-num, den))
    lin = UnivariatePolynomial.identity(p.var)
    for r in sorted(candidates):
        while not work.is_zero and work.degree() >= 1 and work.evaluate(r) == 0:
            roots.append(r)
            work = work // (lin - r)
    return sorted(roots)


class RationalFunction:
    """Quotient of two univariate polynomials, kept coprime with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UnivariatePolynomial, den: UnivariatePolynomial | None = None):
        if den is None:
            den = UnivariatePolynomial.constant(num.var, 1)
        if num.var != den.var:
            raise ValueError("numerator and denominator variables differ")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = UnivariatePolynomial.constant(num.var, 1)
        else:
            g = gcd_univariate(num, den)
            if g.degree() > 0:
                num, den = num // g, den // g
            lc = den.leading_coefficient()
            if lc != 1:
                num = num * (1 / lc)
                den = den * (1 / lc)
        self.num = num
        self.den = den

    @classmethod
    def from_const(cls, var: str, value) -> "RationalFunction":
        return cls(UnivariatePolynomial.constant(var, value))

    @property
    def var(self) -> str:
        return self.num.var

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def as_univariate(self) -> UnivariatePolynomial:
        if not self.is_polynomial:
            raise ValueError("rational function has a nontrivial denominator")
        return self.num

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, UnivariatePolynomial):
            return RationalFunction(other)
        return RationalFunction.from_const(self.var, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, UnivariatePolynomial)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("power requires a non-negative integer")
        return RationalFunction(self.num**n, self.den**n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def evaluate(self, x) -> Fraction:
        x = as_fraction(x)
        dv = self.den.evaluate(x)
        if not dv:
            raise EvaluationError(f"denominator vanishes at {x}")
        return self.num.evaluate(x) / dv

    def evaluate_float(self, x: float) -> float:
        return self.num.evaluate_float(x) / self.den.evaluate_float(x)

    def compose(self, inner: UnivariatePolynomial) -> "RationalFunction":
        return RationalFunction(self.num.compose(inner), self.den.compose(inner))

    def __repr__(self):
        from .parsing import render_polynomial

        n = render_polynomial(self.num.to_polynomial())
        if self.is_polynomial:
            return f"RationalFunction({n!r})"
        d = render_polynomial(self.den.to_polynomial())
        return f"RationalFunction({n!r} / {d!r})"


def substitute(p: Polynomial, var: str, replacement) -> Polynomial:
    """Polynomial substitution of one variable; exact expansion."""
    return p.subs(var, replacement)


def pure_variable_content(p: Polynomial, var: str) -> UnivariatePolynomial:
    """Monic gcd of the coefficients of p grouped by the monomials in the
    other variables, as a univariate polynomial in var. Divides p exactly."""
    if var not in p.vars or p.is_zero:
        return UnivariatePolynomial.constant(var, 1)
    i = p.vars.index(var)
    groups: dict[tuple[int, ...], dict[int, Fraction]] = {}
    for exps, c in p.terms.items():
        key = exps[:i] + exps[i + 1 :]
        groups.setdefault(key, {})[exps[i]] = c
    content = UnivariatePolynomial.zero(var)
    for coeffs in groups.values():
        u = UnivariatePolynomial(var, [coeffs.get(k, 0) for k in range(max(coeffs) + 1)])
        content = gcd_univariate(content, u) if not content.is_zero else u.monic()
        if content.degree() == 0:
            break
    return content


def substitute_fraction(
    p: Polynomial, var: str, rf: RationalFunction
) -> tuple[Polynomial, UnivariatePolynomial]:
    """Substitute a univariate rational function for one variable.

    Returns (numerator, denominator) with denominator = den(t)^deg cleared
    exactly and the pair reduced coprime; other variables of p pass through
    into the numerator.
    """
    if rf.var in p.vars and rf.var != var:
        raise ValueError(f"replacement variable {rf.var!r} collides with {p.vars}")
    deg = p.degree_in(var)
    if var not in p.vars or deg < 1:
        return p, UnivariatePolynomial.constant(rf.var, 1)
    coeffs = p.coeffs_in(var)
    num_poly = rf.num.to_polynomial()
    den_poly = rf.den.to_polynomial()
    numerator = Polynomial.zero((rf.var,))
    for k, c in enumerate(coeffs):
        if c.is_zero:
            continue
        numerator = numerator + c * num_poly**k * den_poly ** (deg - k)
    denominator = rf.den**deg
    if denominator.degree() >= 1:
        common = gcd_univariate(pure_variable_content(numerator, rf.var), denominator)
        if common.degree() >= 1:
            numerator = numerator.exact_div(common.to_polynomial().with_vars(numerator.vars))
            denominator = denominator // common
    lc = denominator.leading_coefficient()
    if lc not in (0, 1):
        numerator = numerator * (1 / lc)
        denominator = denominator * (1 / lc)
    return numerator, denominator


def substitute_rational(
    p: Polynomial, assignments: Mapping[str, RationalFunction]
) -> RationalFunction:
    """Substitute univariate rational functions (all in one common variable)
    for every variable of p, clearing denominators exactly.
    """
    missing = p.used_vars() - set(assignments)
    if missing:
        raise ValueError(f"missing substitutions for {sorted(missing)}")
    rfs = {v: rf for v, rf in assignments.items() if v in p.vars}
    variables = {rf.var for rf in rfs.values()}
    if len(variables) > 1:
        raise ValueError("substitutions must share a single variable")
    var = variables.pop() if variables else "t"
    one = UnivariatePolynomial.constant(var, 1)
    degs = {v: p.degree_in(v) for v in p.vars}
    num_total = UnivariatePolynomial.zero(var)
    for exps, c in p.terms.items():
        term = UnivariatePolynomial.constant(var, c)
        for v, e in zip(p.vars, exps):
            rf = rfs.get(v)
            if rf is None:
                continue
            term = term * rf.num**e * rf.den ** (degs[v] - e)
        num_total = num_total + term
    den_total = one
    for v, rf in rfs.items():
        den_total = den_total * rf.den ** degs[v]
    return RationalFunction(num_total, den_total)
