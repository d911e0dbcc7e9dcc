"""Closed-form Bergman kernels for signature-one domains.

For ``H(k)`` with exactly one positive exponent the Bergman kernel is a
rational function of the pairings ``t_a = z_a * conj(w_a)``:

    B(z, w) = 1 / (pi**n * L) *
              sum_{beta in G} C(beta) t**beta
              / [ (prod_{b>=2} t_b^{|k_b|} - t_1^{k_1})**2 * prod_{b>=2} (1 - t_b)**2 ]

with lcm data ``(K, ell, L)``, coefficients ``C`` from
:mod:`reinhardt.counting`, and support box ``G``.  :class:`RationalKernel`
stores the pieces exactly: a rational scalar, a power of pi, the numerator
polynomial, the squared "main" denominator (described by the exponents
``k_1`` and ``|k_b|``), and the squared unit factors ``(1 - t_b)``.

Two kernels are equal when their canonical forms match: the content of the
numerator is folded into the scalar, so the general construction at
``k = (1, -k)`` — scalar ``1/k``, numerator ``k * t_2**k`` — equals the
directly-built special case with scalar 1 and numerator ``t_2**k``.

Special-case constructors for ``H(1, -k)`` ("fat" generalized Hartogs
triangles) and ``H(k, -1)`` ("thin") are built from their own explicit
coefficient patterns, deliberately not reusing :func:`coefficient_C`, so
that agreement with :func:`kernel_signature_one` is a real cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .counting import coefficient_C, index_set
from .domains import DomainSpec, lcm_data, model_spec, normalize_spec
from .exact import SparsePoly


class SingularEvaluation(ArithmeticError):
    """The evaluation point is too close to the kernel's singular set."""


_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _sup(e: int) -> str:
    return str(e).translate(_SUPERSCRIPTS) if e != 1 else ""


@dataclass(frozen=True, eq=False)
class RationalKernel:
    """An exact rational Bergman kernel in the pairings ``t_a = z_a conj(w_a)``."""

    spec: DomainSpec
    scalar: Fraction
    pi_power: int
    numerator: SparsePoly
    main_k1: int
    main_kb: tuple[int, ...]
    unit_factors: tuple[tuple[int, int], ...] = field(default=())
    # unit_factors lists (variable index, multiplicity) for factors (1 - t_var)^mult

    def __post_init__(self) -> None:
        if self.numerator.nvars != self.spec.n:
            raise ValueError("numerator variable count disagrees with the spec")
        if len(self.main_kb) != self.spec.n - 1:
            raise ValueError("main denominator needs one exponent per negative variable")
        if not self.unit_factors:
            object.__setattr__(
                self, "unit_factors", tuple((b, 2) for b in range(1, self.spec.n))
            )
        if self.scalar <= 0 or self.numerator.is_zero():
            raise ValueError("kernels have positive scalar and nonzero numerator")

    @property
    def n(self) -> int:
        return self.spec.n

    # -- normal form ---------------------------------------------------------

    def canonical(self) -> "RationalKernel":
        """Fold the numerator's content into the scalar and reduce."""
        content = self.numerator.content()
        return RationalKernel(
            spec=self.spec,
            scalar=self.scalar * content,
            pi_power=self.pi_power,
            numerator=self.numerator * (1 / content),
            main_k1=self.main_k1,
            main_kb=self.main_kb,
            unit_factors=self.unit_factors,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalKernel):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (
            a.spec.k == b.spec.k
            and a.scalar == b.scalar
            and a.pi_power == b.pi_power
            and a.numerator == b.numerator
            and a.main_k1 == b.main_k1
            and a.main_kb == b.main_kb
            and a.unit_factors == b.unit_factors
        )

    # -- evaluation -----------------------------------------------------------

    def evaluate_pairings(self, t: Sequence[complex], guard: float = 1e-12) -> complex:
        """Evaluate at given pairings ``t``; exact structure, float arithmetic.

        Raises :class:`SingularEvaluation` when the denominator is smaller
        than ``guard`` times the scale of the evaluation (singular set:
        the main surface ``prod t_b^{|k_b|} = t_1^{k_1}`` and the unit
        hyperplanes ``t_b = 1``).
        """
        if len(t) != self.n:
            raise ValueError(f"need {self.n} pairings, got {len(t)}")
        num = float(self.scalar) * self.numerator.evaluate(list(t))
        main = 1.0
        for b, kb in zip(range(1, self.n), self.main_kb):
            main *= t[b] ** kb
        main -= t[0] ** self.main_k1
        den = main * main
        for b, mult in self.unit_factors:
            den *= (1.0 - t[b]) ** mult
        scale = max(1.0, abs(num))
        if abs(den) < guard * scale:
            raise SingularEvaluation(
                f"denominator {abs(den):.3e} below guard {guard:.0e} * {scale:.3e}"
            )
        return num / den / math.pi ** self.pi_power

    def evaluate(self, z: Sequence[complex], w: Sequence[complex], guard: float = 1e-12) -> complex:
        """The kernel at ``(z, w)``: holomorphic in ``z``, conjugate in ``w``."""
        if len(z) != self.n or len(w) != self.n:
            raise ValueError(f"points must have length {self.n}")
        t = [zi * complex(wi).conjugate() for zi, wi in zip(z, w)]
        return self.evaluate_pairings(t, guard)

    # -- emitters -------------------------------------------------------------

    def _num_terms_str(self, fmt_frac, fmt_mono, times: str) -> list[str]:
        parts = []
        for exps, coef in self.numerator.sorted_terms():
            mono = fmt_mono(exps)
            if not mono:
                parts.append(fmt_frac(coef))
            elif coef == 1:
                parts.append(mono)
            else:
                parts.append(f"{fmt_frac(coef)}{times}{mono}")
        return parts

    def _main_strs(self, var, power) -> tuple[str, str]:
        lead = " ".join(
            f"{var(b)}{power(kb)}" for b, kb in zip(range(1, self.n), self.main_kb)
        )
        return lead, f"{var(0)}{power(self.main_k1)}"

    def to_plain(self) -> str:
        """Human-readable one-liner, e.g. ``1/π² · t2 / ((t2 − t1)² (1 − t2)²)``."""
        kernel = self.canonical()
        var = lambda i: f"t{i + 1}"
        mono = lambda exps: " ".join(f"{var(i)}{_sup(e)}" for i, e in enumerate(exps) if e)
        num = " + ".join(kernel._num_terms_str(str, mono, " "))
        if len(kernel.numerator.terms) > 1:
            num = f"({num})"
        pi = f"π{_sup(kernel.pi_power)}"
        if kernel.scalar == 1:
            scalar = f"1/{pi}"
        elif kernel.scalar.numerator == 1:
            scalar = f"1/({kernel.scalar.denominator}{pi})"
        else:
            scalar = f"{kernel.scalar.numerator}/({kernel.scalar.denominator}{pi})"
        lead, sub = kernel._main_strs(var, _sup)
        den_parts = [f"({lead} − {sub})²"]
        for b, mult in kernel.unit_factors:
            den_parts.append(f"(1 − {var(b)}){_sup(mult)}")
        return f"{scalar} · {num} / ({' '.join(den_parts)})"

    def to_latex(self) -> str:
        """The kernel as a LaTeX fraction."""
        kernel = self.canonical()
        var = lambda i: f"t_{{{i + 1}}}"
        power = lambda e: f"^{{{e}}}" if e != 1 else ""

        def frac(c: Fraction) -> str:
            return str(c) if c.denominator == 1 else f"\\tfrac{{{c.numerator}}}{{{c.denominator}}}"

        mono = lambda exps: " ".join(f"{var(i)}{power(e)}" for i, e in enumerate(exps) if e)
        num = " + ".join(kernel._num_terms_str(frac, mono, "\\, "))
        lead, sub = kernel._main_strs(var, power)
        den = [f"\\left({lead} - {sub}\\right)^{{2}}"]
        for b, mult in kernel.unit_factors:
            den.append(f"\\left(1 - {var(b)}\\right)^{{{mult}}}")
        scalar_den = "" if kernel.scalar.denominator == 1 else f"{kernel.scalar.denominator}\\,"
        if kernel.scalar.numerator != 1:
            num = f"{kernel.scalar.numerator}\\,\\left({num}\\right)"
        return (
            f"\\frac{{{num}}}{{{scalar_den}\\pi^{{{kernel.pi_power}}}\\,"
            + "\\,".join(den)
            + "}"
        )

    def to_json_dict(self) -> dict:
        """Exact machine-readable form (coefficients as rational strings)."""
        kernel = self.canonical()
        return {
            "pi_power": kernel.pi_power,
            "L": kernel.scalar.denominator,
            "scalar_num": kernel.scalar.numerator,
            "numerator": [
                {"exp": list(exps), "coef": str(coef)}
                for exps, coef in kernel.numerator.sorted_terms()
            ],
            "denom_main": {"k1": kernel.main_k1, "kb": list(kernel.main_kb)},
            "denom_units": [{"var": b + 1, "mult": mult} for b, mult in kernel.unit_factors],
        }

    def __repr__(self) -> str:
        return f"RationalKernel({self.spec}, {len(self.numerator.terms)} numerator terms)"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def kernel_signature_one(spec: DomainSpec) -> RationalKernel:
    """The closed-form kernel of any signature-one ``H(k)``."""
    if spec.s != 1:
        raise ValueError(
            f"{spec} has signature {spec.s}; the closed form exists only for signature 1"
        )
    _, _, L = lcm_data(spec)
    n = spec.n
    terms = {}
    for beta in index_set(spec, "full"):
        c = coefficient_C(beta, spec)
        if c:
            terms[beta] = Fraction(c)
    return RationalKernel(
        spec=spec,
        scalar=Fraction(1, L),
        pi_power=n,
        numerator=SparsePoly(n, terms),
        main_k1=spec.k[0],
        main_kb=tuple(abs(e) for e in spec.k[1:]),
    )


def kernel_model_sig1(n: int) -> RationalKernel:
    """The model kernel of Omega(n, 1), built from its product shape directly.

    Numerator ``t_2 * ... * t_n`` over ``(t_2...t_n - t_1)**2 *
    prod (1 - t_b)**2``, scalar 1 — independent of the coefficient
    machinery, as a cross-check on :func:`kernel_signature_one`.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    return RationalKernel(
        spec=model_spec(n, 1),
        scalar=Fraction(1),
        pi_power=n,
        numerator=SparsePoly.monomial(n, (0,) + (1,) * (n - 1)),
        main_k1=1,
        main_kb=(1,) * (n - 1),
    )


def kernel_fat_hartogs(k: int) -> RationalKernel:
    """The kernel of the fat generalized Hartogs triangle ``H(1, -k)``.

    Single numerator term ``t_2**k`` with scalar 1 — the reduced special
    case, built without the general coefficient sum.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    return RationalKernel(
        spec=normalize_spec((1, -k)),
        scalar=Fraction(1),
        pi_power=2,
        numerator=SparsePoly.monomial(2, (0, k)),
        main_k1=1,
        main_kb=(k,),
    )


def kernel_thin_hartogs(k: int) -> RationalKernel:
    """The kernel of the thin generalized Hartogs triangle ``H(k, -1)``, k >= 2.

    Numerator written as the three explicit index sums

        sum_{l=1}^{k-1} (k-l) l t_1^{k+l-1}
      + sum_{l=1}^{k} [ l**2 t_1^{l-1} + (k-l)**2 t_1^{k+l-1} ] t_2
      + sum_{l=1}^{k} l (k-l) t_1^{l-1} t_2**2

    with scalar ``1/k`` — again independent of the general construction.
    """
    if k < 2:
        raise ValueError("the thin family starts at k = 2")
    terms: dict[tuple[int, int], Fraction] = {}

    def add(e1: int, e2: int, c: int) -> None:
        if c:
            terms[(e1, e2)] = terms.get((e1, e2), Fraction(0)) + c

    for l in range(1, k):
        add(k + l - 1, 0, (k - l) * l)
    for l in range(1, k + 1):
        add(l - 1, 1, l * l)
        add(k + l - 1, 1, (k - l) * (k - l))
        add(l - 1, 2, l * (k - l))
    return RationalKernel(
        spec=normalize_spec((k, -1)),
        scalar=Fraction(1, k),
        pi_power=2,
        numerator=SparsePoly(2, terms),
        main_k1=k,
        main_kb=(1,),
    )
