"""Exact arithmetic building blocks: polynomials, fractional-power sums, windows.

Everything here computes over the rationals with no rounding:

* :class:`SparsePoly` — multivariate polynomials with ``Fraction``
  coefficients, keyed by exponent tuples.  Supports ring arithmetic,
  substitution of polynomials for variables, and exact division by a
  variable (used by recursions that are only valid when the division is
  exact).

* :class:`FracExpSum` — finite sums of terms ``c * prod(t_j^{q_j}) *
  prod(log(1/t_j)^{p_j})`` with rational ``c``, rational exponents ``q_j``
  and nonnegative integer log powers ``p_j``.  This class is closed under
  the three moves iterated monomial integration needs: antidifferentiation
  in one variable, evaluation at a monomial bound (which substitutes a
  monomial for the variable, expanding ``log`` of a monomial linearly), and
  taking the limit at 0.  The log powers are essential: integrating
  ``t**-1`` against a monomial lower bound is exact via
  ``d/dt[-log(1/t)**(p+1)/(p+1)] = t**-1 * log(1/t)**p``, and
  ``∫_0^1 t^q log(1/t)^p dt = p! / (q+1)^{p+1}``.

* :class:`LaurentChunk` — a finite window of Laurent coefficients: exact
  values on a box of integer exponents, unknown outside it.  Operations
  track the window honestly, shrinking it when information would be
  missing (e.g. multiplying by a polynomial).
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable, Iterator, Mapping, Sequence


class DivergentIntegral(ArithmeticError):
    """An integral with a zero lower bound diverges (exponent <= -1)."""


class OutsideWindow(KeyError):
    """A Laurent coefficient was requested outside the chunk's trusted box."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# SparsePoly
# ---------------------------------------------------------------------------


class SparsePoly:
    """A multivariate polynomial over Q, stored sparsely.

    ``terms`` maps exponent tuples (nonnegative ints, length ``nvars``) to
    nonzero ``Fraction`` coefficients.  Instances are treated as immutable;
    all operations return new polynomials.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.nvars = int(nvars)
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coef in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != self.nvars:
                    raise ValueError(f"exponent tuple {exps} has length != {self.nvars}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}; use LaurentChunk for Laurent data")
                c = _frac(coef)
                if c:
                    clean[exps] = clean.get(exps, Fraction(0)) + c
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: _frac(c)})

    @classmethod
    def one(cls, nvars: int) -> "SparsePoly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coef=1) -> "SparsePoly":
        return cls(nvars, {tuple(exps): _frac(coef)})

    @classmethod
    def linear_form(cls, nvars: int, coeffs: Mapping[int, int | Fraction], const=0) -> "SparsePoly":
        """``const + sum(coeffs[i] * x_i)``."""
        terms: dict[tuple[int, ...], Fraction] = {}
        if const:
            terms[(0,) * nvars] = _frac(const)
        for i, c in coeffs.items():
            exps = [0] * nvars
            exps[i] = 1
            terms[tuple(exps)] = _frac(c)
        return cls(nvars, terms)

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "SparsePoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            acc = terms.get(exps, Fraction(0)) + coef
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        out = SparsePoly.__new__(SparsePoly)
        out.nvars, out.terms = self.nvars, terms
        return out

    def __neg__(self) -> "SparsePoly":
        out = SparsePoly.__new__(SparsePoly)
        out.nvars = self.nvars
        out.terms = {exps: -coef for exps, coef in self.terms.items()}
        return out

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            self._check(other)
            terms: dict[tuple[int, ...], Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    exps = tuple(a + b for a, b in zip(e1, e2))
                    acc = terms.get(exps, Fraction(0)) + c1 * c2
                    if acc:
                        terms[exps] = acc
                    else:
                        terms.pop(exps, None)
            out = SparsePoly.__new__(SparsePoly)
            out.nvars, out.terms = self.nvars, terms
            return out
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            if not c:
                return SparsePoly.zero(self.nvars)
            out = SparsePoly.__new__(SparsePoly)
            out.nvars = self.nvars
            out.terms = {exps: coef * c for exps, coef in self.terms.items()}
            return out
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SparsePoly":
        if exponent < 0:
            raise ValueError("polynomial powers must be nonnegative")
        result = SparsePoly.one(self.nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure ----------------------------------------------------------

    def total_degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        if not self.terms:
            return True
        degrees = {sum(e) for e in self.terms}
        if len(degrees) != 1:
            return False
        return degree is None or degrees == {degree}

    def content(self) -> Fraction:
        """gcd of the coefficients (positive; 0 for the zero polynomial)."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, c.numerator)
            den = math.lcm(den, c.denominator)
        return Fraction(num, den)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items())

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, values: Sequence):
        """Evaluate at a point; exact for int/Fraction input, numeric otherwise."""
        if len(values) != self.nvars:
            raise ValueError(f"point has length {len(values)}, expected {self.nvars}")
        exact = all(isinstance(v, (int, Fraction)) for v in values)
        total = Fraction(0) if exact else 0.0
        for exps, coef in self.terms.items():
            term = coef if exact else float(coef)
            for value, e in zip(values, exps):
                if e:
                    term = term * value ** e
            total = total + term
        return total

    def substitute(self, mapping: Mapping[int, "SparsePoly"]) -> "SparsePoly":
        """Simultaneously replace ``x_i`` by ``mapping[i]`` (same variable count)."""
        for poly in mapping.values():
            self._check(poly)
        power_cache: dict[tuple[int, int], SparsePoly] = {}

        def var_power(i: int, e: int) -> SparsePoly:
            if i not in mapping:
                return SparsePoly.monomial(self.nvars, tuple(e if j == i else 0 for j in range(self.nvars)))
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = mapping[i] ** e
            return power_cache[key]

        total = SparsePoly.zero(self.nvars)
        for exps, coef in self.terms.items():
            term = SparsePoly.constant(self.nvars, coef)
            for i, e in enumerate(exps):
                if e:
                    term = term * var_power(i, e)
            total = total + term
        return total

    def divide_exact_by_var(self, index: int) -> "SparsePoly":
        """Divide by ``x_index``, requiring every term to contain it."""
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, coef in self.terms.items():
            if exps[index] == 0:
                raise ArithmeticError(
                    f"division by variable {index} is not exact: term {exps} has no factor"
                )
            new = list(exps)
            new[index] -= 1
            terms[tuple(new)] = coef
        out = SparsePoly.__new__(SparsePoly)
        out.nvars, out.terms = self.nvars, terms
        return out

    def extended(self, nvars: int) -> "SparsePoly":
        """The same polynomial viewed in a larger variable ring."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink the variable ring")
        pad = (0,) * (nvars - self.nvars)
        return SparsePoly(nvars, {exps + pad: coef for exps, coef in self.terms.items()})

    def permuted(self, perm: Sequence[int]) -> "SparsePoly":
        """Relabel variables: new variable ``i`` is old variable ``perm[i]``."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("perm must be a permutation of the variables")
        terms = {}
        for exps, coef in self.terms.items():
            terms[tuple(exps[perm[i]] for i in range(self.nvars))] = coef
        return SparsePoly(self.nvars, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "SparsePoly(0)"
        bits = []
        for exps, coef in self.sorted_terms():
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exps) if e)
            bits.append(f"{coef}" + (f"*{mono}" if mono else ""))
        return "SparsePoly(" + " + ".join(bits) + ")"


# ---------------------------------------------------------------------------
# FracExpSum
# ---------------------------------------------------------------------------

#: A monomial bound for integration: exponent vector ``e`` meaning
#: ``prod(t_j ** e_j)``; the all-zero vector is the constant bound 1, and
#: ``None`` stands for the bound 0 (allowed as a lower bound only).
MonomialBound = "tuple[Fraction, ...] | None"


class FracExpSum:
    """A finite sum ``sum c * prod t_j^{q_j} * prod log(1/t_j)^{p_j}``.

    Keys are ``(exps, logs)`` pairs: ``exps`` a tuple of ``Fraction``
    exponents, ``logs`` a tuple of nonnegative int powers of ``log(1/t_j)``.
    Log factors only ever appear through integration against monomial
    bounds; the all-zero ``logs`` tuple is the plain fractional-power case.
    """

    __slots__ = ("nvars", "terms")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[tuple[tuple[Fraction, ...], tuple[int, ...]], Fraction] | None = None,
    ):
        self.nvars = int(nvars)
        clean: dict[tuple[tuple[Fraction, ...], tuple[int, ...]], Fraction] = {}
        if terms:
            for (exps, logs), coef in terms.items():
                exps = tuple(_frac(q) for q in exps)
                logs = tuple(int(p) for p in logs)
                if len(exps) != self.nvars or len(logs) != self.nvars:
                    raise ValueError("term key length disagrees with nvars")
                if any(p < 0 for p in logs):
                    raise ValueError("log powers must be nonnegative")
                c = _frac(coef)
                if c:
                    key = (exps, logs)
                    acc = clean.get(key, Fraction(0)) + c
                    if acc:
                        clean[key] = acc
                    else:
                        del clean[key]
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "FracExpSum":
        return cls(nvars)

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence, coef=1) -> "FracExpSum":
        key = (tuple(_frac(q) for q in exps), (0,) * nvars)
        return cls(nvars, {key: _frac(coef)})

    def _check(self, other: "FracExpSum") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "FracExpSum") -> "FracExpSum":
        if not isinstance(other, FracExpSum):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for key, coef in other.terms.items():
            acc = terms.get(key, Fraction(0)) + coef
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
        out = FracExpSum.__new__(FracExpSum)
        out.nvars, out.terms = self.nvars, terms
        return out

    def __neg__(self) -> "FracExpSum":
        out = FracExpSum.__new__(FracExpSum)
        out.nvars = self.nvars
        out.terms = {key: -coef for key, coef in self.terms.items()}
        return out

    def __sub__(self, other: "FracExpSum") -> "FracExpSum":
        if not isinstance(other, FracExpSum):
            return NotImplemented
        return self + (-other)

    def scaled(self, c) -> "FracExpSum":
        c = _frac(c)
        if not c:
            return FracExpSum.zero(self.nvars)
        out = FracExpSum.__new__(FracExpSum)
        out.nvars = self.nvars
        out.terms = {key: coef * c for key, coef in self.terms.items()}
        return out

    def mul_monomial(self, exps: Sequence, coef=1) -> "FracExpSum":
        shift = tuple(_frac(q) for q in exps)
        c = _frac(coef)
        terms = {}
        for (e, logs), old in self.terms.items():
            terms[(tuple(a + b for a, b in zip(e, shift)), logs)] = old * c
        return FracExpSum(self.nvars, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FracExpSum):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def depends_on(self, var: int) -> bool:
        return any(e[var] or logs[var] for (e, logs) in self.terms)

    def as_constant(self) -> Fraction:
        """The value of a variable-free sum; errors if any variable remains."""
        total = Fraction(0)
        for (exps, logs), coef in self.terms.items():
            if any(exps) or any(logs):
                raise ValueError("sum still depends on a variable")
            total += coef
        return total

    def evaluate(self, point: Sequence[float]) -> float:
        """Numeric evaluation at 0 < t_j < 1 (for cross-checks)."""
        if len(point) != self.nvars:
            raise ValueError("point length disagrees with nvars")
        total = 0.0
        for (exps, logs), coef in self.terms.items():
            term = float(coef)
            for t, q, p in zip(point, exps, logs):
                if q:
                    term *= float(t) ** float(q)
                if p:
                    term *= math.log(1.0 / float(t)) ** p
            total += term
        return total

    # -- substitution of monomial bounds -------------------------------------

    def substitute_monomial(self, var: int, bound: Sequence) -> "FracExpSum":
        """Replace ``t_var`` by the monomial ``prod t_j^{bound_j}`` exactly.

        The bound must not involve ``t_var`` itself.  Power factors push the
        bound's exponents onto the other variables; each log factor expands
        as ``log(1/t_var) -> sum bound_j * log(1/t_j)``.
        """
        bound = tuple(_frac(b) for b in bound)
        if len(bound) != self.nvars:
            raise ValueError("bound length disagrees with nvars")
        if bound[var]:
            raise ValueError("a bound may not involve the variable it replaces")
        support = [j for j in range(self.nvars) if bound[j]]
        terms: dict[tuple[tuple[Fraction, ...], tuple[int, ...]], Fraction] = {}
        for (exps, logs), coef in self.terms.items():
            q, p = exps[var], logs[var]
            base_exps = list(exps)
            base_exps[var] = Fraction(0)
            if q:
                for j in support:
                    base_exps[j] += q * bound[j]
            # expand (sum_j bound_j * log(1/t_j)) ** p multinomially
            expansion: dict[tuple[int, ...], Fraction] = {(0,) * self.nvars: Fraction(1)}
            for _ in range(p):
                nxt: dict[tuple[int, ...], Fraction] = {}
                for lvec, c in expansion.items():
                    for j in support:
                        bumped = list(lvec)
                        bumped[j] += 1
                        key = tuple(bumped)
                        nxt[key] = nxt.get(key, Fraction(0)) + c * bound[j]
                expansion = nxt
            base_logs = list(logs)
            base_logs[var] = 0
            for lvec, c in expansion.items():
                if not c:
                    continue
                key = (tuple(base_exps), tuple(a + b for a, b in zip(base_logs, lvec)))
                acc = terms.get(key, Fraction(0)) + coef * c
                if acc:
                    terms[key] = acc
                else:
                    terms.pop(key, None)
        return FracExpSum(self.nvars, terms)

    def limit_at_zero(self, var: int) -> "FracExpSum":
        """The limit as ``t_var -> 0+``; errors if any term blows up.

        Distinct ``t^q log(1/t)^p`` scales are linearly independent as
        ``t -> 0``, so after like terms merge, divergence of any surviving
        term with ``q < 0``, or ``q == 0 < p``, is genuine and raises
        :class:`DivergentIntegral`.  Terms with ``q > 0`` vanish (powers
        beat logs) and terms free of the variable pass through.
        """
        terms = {}
        for (exps, logs), coef in self.terms.items():
            q, p = exps[var], logs[var]
            if q > 0:
                continue
            if q < 0 or p > 0:
                raise DivergentIntegral(
                    f"term with exponent {q} and log power {p} diverges as t_{var} -> 0"
                )
            terms[(exps, logs)] = coef
        return FracExpSum(self.nvars, terms)

    # -- integration ---------------------------------------------------------

    def antiderivative(self, var: int) -> "FracExpSum":
        """An exact antiderivative in ``t_var`` (defined up to a constant)."""
        terms: dict[tuple[tuple[Fraction, ...], tuple[int, ...]], Fraction] = {}

        def put(exps, logs, coef):
            key = (tuple(exps), tuple(logs))
            acc = terms.get(key, Fraction(0)) + coef
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)

        for (exps, logs), coef in self.terms.items():
            q, p = exps[var], logs[var]
            if q == -1:
                # ∫ t^-1 log(1/t)^p dt = -log(1/t)^(p+1) / (p+1)
                new_exps = list(exps)
                new_exps[var] = Fraction(0)
                new_logs = list(logs)
                new_logs[var] = p + 1
                put(new_exps, new_logs, -coef / (p + 1))
            else:
                # ∫ t^q log(1/t)^p dt = sum_{i=0}^{p} p!/(p-i)! * t^{q+1} log(1/t)^{p-i} / (q+1)^{i+1}
                new_exps = list(exps)
                new_exps[var] = q + 1
                factor = Fraction(1)
                for i in range(p + 1):
                    factor /= q + 1
                    new_logs = list(logs)
                    new_logs[var] = p - i
                    put(new_exps, new_logs, coef * factor)
                    factor *= p - i
        return FracExpSum(self.nvars, terms)


def integrate_one_var(f: FracExpSum, var: int, lower, upper=None) -> FracExpSum:
    """Definite integral of ``f`` in ``t_var`` between monomial bounds.

    ``lower`` and ``upper`` are exponent vectors describing monomials in
    the *other* variables (the all-zero vector is the constant 1, the
    default upper bound); ``lower`` may also be ``None`` / ``0`` for a zero
    lower bound.  The result no longer depends on ``t_var``.

    Raises :class:`DivergentIntegral` when the lower bound is 0 and the
    integrand carries a term with exponent <= -1 in ``t_var`` (after like
    terms merge), and ``ValueError`` for malformed bounds.
    """
    if not 0 <= var < f.nvars:
        raise ValueError(f"variable index {var} out of range")
    if isinstance(lower, int) and lower == 0:
        lower = None
    if upper is None or (isinstance(upper, int) and upper == 1):
        upper = (Fraction(0),) * f.nvars
    F = f.antiderivative(var)
    top = F.substitute_monomial(var, upper)
    if lower is None:
        bottom = F.limit_at_zero(var)
    else:
        bottom = F.substitute_monomial(var, lower)
    return top - bottom


# ---------------------------------------------------------------------------
# LaurentChunk
# ---------------------------------------------------------------------------


class LaurentChunk:
    """Exact Laurent coefficients on a finite box of integer exponents.

    ``box`` is a tuple of inclusive ``(lo, hi)`` ranges, one per variable.
    Inside the box every coefficient is known exactly (absent means zero);
    outside it nothing is known, and :meth:`coefficient` refuses to guess.
    ``pi_power`` tags an overall ``1/pi**pi_power`` prefactor so kernel
    coefficient tables stay rational.  ``truncated`` records whether some
    operation shrank the window relative to its operand.
    """

    __slots__ = ("nvars", "box", "terms", "pi_power", "truncated")

    def __init__(
        self,
        nvars: int,
        box: Sequence[tuple[int, int]],
        terms: Mapping[tuple[int, ...], Fraction] | None = None,
        pi_power: int = 0,
        truncated: bool = False,
    ):
        self.nvars = int(nvars)
        box = tuple((int(lo), int(hi)) for lo, hi in box)
        if len(box) != self.nvars:
            raise ValueError("box length disagrees with nvars")
        for lo, hi in box:
            if lo > hi:
                raise ValueError(f"empty box range ({lo}, {hi})")
        self.box = box
        self.pi_power = int(pi_power)
        self.truncated = bool(truncated)
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coef in terms.items():
                exps = tuple(int(e) for e in exps)
                if not self._inside(exps):
                    raise ValueError(f"exponent {exps} lies outside the box {self.box}")
                c = _frac(coef)
                if c:
                    clean[exps] = c
        self.terms = clean

    def _inside(self, exps: tuple[int, ...]) -> bool:
        return all(lo <= e <= hi for e, (lo, hi) in zip(exps, self.box))

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        exps = tuple(int(a) for a in alpha)
        if len(exps) != self.nvars:
            raise ValueError("exponent length disagrees with nvars")
        if not self._inside(exps):
            raise OutsideWindow(f"exponent {exps} outside trusted box {self.box}")
        return self.terms.get(exps, Fraction(0))

    def box_points(self) -> Iterator[tuple[int, ...]]:
        """All exponents in the box, lexicographically."""
        return _cartesian(*(range(lo, hi + 1) for lo, hi in self.box))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentChunk):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.box == other.box
            and self.pi_power == other.pi_power
            and self.terms == other.terms
        )

    def _merge_box(self, other: "LaurentChunk") -> tuple[tuple[int, int], ...]:
        merged = tuple(
            (max(a_lo, b_lo), min(a_hi, b_hi))
            for (a_lo, a_hi), (b_lo, b_hi) in zip(self.box, other.box)
        )
        for lo, hi in merged:
            if lo > hi:
                raise ValueError("windows do not overlap")
        return merged

    def __add__(self, other: "LaurentChunk") -> "LaurentChunk":
        if not isinstance(other, LaurentChunk):
            return NotImplemented
        if self.nvars != other.nvars or self.pi_power != other.pi_power:
            raise ValueError("chunks must share variable count and pi power")
        box = self._merge_box(other)
        out = LaurentChunk(self.nvars, box, pi_power=self.pi_power,
                           truncated=self.truncated or other.truncated or box != self.box or box != other.box)
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps in out.box_points():
            c = self.terms.get(exps, Fraction(0)) + other.terms.get(exps, Fraction(0))
            if c:
                terms[exps] = c
        out.terms = terms
        return out

    def scaled(self, c) -> "LaurentChunk":
        c = _frac(c)
        return LaurentChunk(
            self.nvars, self.box,
            {exps: coef * c for exps, coef in self.terms.items()} if c else {},
            self.pi_power, self.truncated,
        )

    def shifted(self, delta: Sequence[int]) -> "LaurentChunk":
        """Multiply by the monomial ``x**delta``: window and exponents translate."""
        delta = tuple(int(d) for d in delta)
        if len(delta) != self.nvars:
            raise ValueError("shift length disagrees with nvars")
        box = tuple((lo + d, hi + d) for (lo, hi), d in zip(self.box, delta))
        terms = {tuple(e + d for e, d in zip(exps, delta)): coef for exps, coef in self.terms.items()}
        return LaurentChunk(self.nvars, box, terms, self.pi_power, self.truncated)

    def mul_poly(self, poly: SparsePoly) -> "LaurentChunk":
        """Multiply by a polynomial, shrinking to the box where all inputs are known."""
        if poly.nvars != self.nvars:
            raise ValueError("variable-count mismatch")
        if poly.is_zero():
            raise ValueError("multiplying a window by zero discards it entirely")
        lo = [max(self.box[i][0] + e[i] for e in poly.terms) for i in range(self.nvars)]
        hi = [min(self.box[i][1] + e[i] for e in poly.terms) for i in range(self.nvars)]
        box = tuple(zip(lo, hi))
        for b_lo, b_hi in box:
            if b_lo > b_hi:
                raise ValueError("window too small to hold any product coefficient")
        terms: dict[tuple[int, ...], Fraction] = {}
        out = LaurentChunk(self.nvars, box, pi_power=self.pi_power,
                           truncated=self.truncated or box != self.box)
        for gamma in out.box_points():
            total = Fraction(0)
            for e, c in poly.terms.items():
                total += c * self.terms.get(tuple(g - ei for g, ei in zip(gamma, e)), Fraction(0))
            if total:
                terms[gamma] = total
        out.terms = terms
        return out

    # -- serialization -------------------------------------------------------

    def csv_rows(self) -> Iterator[str]:
        """One row per box point (zeros included): ``a_1,...,a_n,coefficient``."""
        for exps in self.box_points():
            coef = self.terms.get(exps, Fraction(0))
            yield ",".join(str(e) for e in exps) + f",{coef}"

    def to_json_dict(self) -> dict:
        return {
            "pi_power": self.pi_power,
            "box": [[lo, hi] for lo, hi in self.box],
            "coefficients": [
                {"exp": list(exps), "coef": str(coef)}
                for exps, coef in sorted(self.terms.items())
            ],
        }

    def __repr__(self) -> str:
        return (
            f"LaurentChunk(nvars={self.nvars}, box={self.box}, "
            f"{len(self.terms)} nonzero, pi_power={self.pi_power})"
        )
