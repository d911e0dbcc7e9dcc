"""Laurent expansion of kernels and series-side consistency tools.

On the domain every factor of the closed-form kernel expands in a geometric
series: with ``rho = t_1^{k_1} / prod_b t_b^{|k_b|}`` (strictly inside the
unit interval on the shadow),

    1 / (prod_b t_b^{|k_b|} - t_1^{k_1})**2
        = prod_b t_b^{-2 |k_b|} * sum_{m>=0} (m+1) rho**m,
    1 / (1 - t_b)**2 = sum_{p>=0} (p+1) t_b**p,

so each Laurent coefficient of the kernel is a *finite* exact sum: for a
numerator term ``C(beta) t**beta``, the exponent ``alpha`` receives
``C(beta) * (m+1) * prod_b (p_b+1)`` whenever ``m = (alpha_1-beta_1)/k_1``
is a nonnegative integer and every ``p_b = alpha_b - beta_b + |k_b|(m+2)``
is nonnegative.  :func:`expand_closed_form` evaluates this per exponent —
no truncation error, so windows produced here are exact.

Independently, the kernel's series is the sum of ``t**alpha / ||z**alpha||^2
* pi**n`` over finite-norm exponents; :func:`series_coefficients_model`
(via the R/S formula) and :func:`series_coefficients_oracle` (via exact
shadow integration) tabulate that route for comparison.

The module also carries the diagonal differential check: the operator
"multiply by ``t_1 ... t_n``, then apply ``R(t_1 d_1, ..., t_n d_n)``"
sends ``t**gamma`` to ``R(gamma) t**gamma`` after the shift, so applied to
the model kernel series it must reproduce the plain values ``S(gamma)`` on
the support — a sharp test tying the series back to the norm recursion.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .domains import DomainSpec, MultiIndex
from .exact import LaurentChunk
from .kernels import RationalKernel
from .norms import build_RS, is_norm_finite
from .shadow import shadow_integral_exact

Box = "Sequence[tuple[int, int]]"


def expand_closed_form(kernel: RationalKernel, box: Sequence[tuple[int, int]]) -> LaurentChunk:
    """Exact Laurent coefficients of a closed-form kernel on a box."""
    n = kernel.n
    if len(box) != n:
        raise ValueError(f"box needs {n} ranges")
    if any(mult != 2 for _, mult in kernel.unit_factors):
        raise ValueError("expansion assumes squared unit factors")
    k1 = kernel.main_k1
    kb = kernel.main_kb
    chunk = LaurentChunk(n, box, pi_power=kernel.pi_power)
    terms: dict[tuple[int, ...], Fraction] = {}
    numerator = kernel.numerator.sorted_terms()
    for alpha in chunk.box_points():
        total = Fraction(0)
        for beta, c in numerator:
            d = alpha[0] - beta[0]
            if d < 0 or d % k1:
                continue
            m = d // k1
            weight = Fraction(m + 1)
            for b in range(1, n):
                p = alpha[b] - beta[b] + kb[b - 1] * (m + 2)
                if p < 0:
                    weight = Fraction(0)
                    break
                weight *= p + 1
            total += c * weight
        if total:
            terms[alpha] = kernel.scalar * total
    chunk.terms = terms
    return chunk


def series_coefficients_model(n: int, s: int, box: Sequence[tuple[int, int]]) -> LaurentChunk:
    """Kernel series coefficients of Omega(n, s) from the norm formula R/S."""
    pair = build_RS(n, s)
    chunk = LaurentChunk(n, box, pi_power=n)
    terms: dict[tuple[int, ...], Fraction] = {}
    for alpha in chunk.box_points():
        if not is_norm_finite(alpha, n, s):
            continue
        beta = tuple(a + 1 for a in alpha)
        r = pair.R.evaluate(beta)
        if r == 0:
            raise ArithmeticError(f"R vanishes at finite-norm beta={beta}")
        terms[alpha] = Fraction(pair.S.evaluate(beta)) / r
    chunk.terms = terms
    return chunk


def series_coefficients_oracle(spec: DomainSpec, box: Sequence[tuple[int, int]]) -> LaurentChunk:
    """Kernel series coefficients of ``H(k)`` from exact shadow integrals.

    The coefficient at ``alpha`` is ``pi**n / ||z**alpha||^2``, i.e. the
    reciprocal of the shadow integral; exponents with infinite norm
    contribute nothing.  Works for every signature.
    """
    chunk = LaurentChunk(spec.n, box, pi_power=spec.n)
    terms: dict[tuple[int, ...], Fraction] = {}
    for alpha in chunk.box_points():
        value = shadow_integral_exact(MultiIndex(alpha).shifted(1), spec)
        if value is not None:
            terms[alpha] = 1 / value
    chunk.terms = terms
    return chunk


def slice_coefficients(n: int, count: int) -> list[Fraction]:
    """The diagonal slice tail coefficients ``j / ((j+1)**(n-1) - 1)``.

    These arise from the model kernel of Omega(n, n-1) restricted along the
    last axis, after the polar part ``1/(n-1) * t**-1`` and the polydisc
    part ``sum j t**(j-1)`` are split off.  For ``n = 3`` they reduce to
    ``1/(j+2)``; for every ``n`` they decay like ``j**(2-n)`` — a rational,
    not geometric, tail.
    """
    if n < 3:
        raise ValueError("slice families need n >= 3")
    if count < 1:
        raise ValueError("need at least one coefficient")
    return [Fraction(j, (j + 1) ** (n - 1) - 1) for j in range(1, count + 1)]


def rationality_diagnostic(values: Sequence, *, poly_margin: float = 10.0, exp_delta: float = 0.05) -> str:
    """Classify a positive tail as polynomial or exponential decay.

    Looks at consecutive ratios ``r_j = a_{j+1}/a_j`` over the second half
    of the sequence: ``|r_j - 1| < poly_margin / j`` for all of them votes
    ``"polynomial_decay"`` (ratios creeping up to 1 like rational functions
    do), ``r_j < 1 - exp_delta`` votes ``"exponential_decay"`` (ratios
    pinned below 1), anything else is ``"inconclusive"``.
    """
    data = [float(v) for v in values]
    if len(data) < 8:
        return "inconclusive"
    start = len(data) // 2
    if any(v <= 0.0 for v in data[start - 1:]):
        return "inconclusive"
    ratios = [(j + 1, data[j + 1] / data[j]) for j in range(start, len(data) - 1)]
    if all(abs(r - 1.0) < poly_margin / j for j, r in ratios):
        return "polynomial_decay"
    if all(r < 1.0 - exp_delta for _, r in ratios):
        return "exponential_decay"
    return "inconclusive"


def apply_annihilating_operator(n: int, s: int, chunk: LaurentChunk) -> LaurentChunk:
    """Shift by ``t_1...t_n`` and apply ``R(t_1 d_1, ..., t_n d_n)`` exactly.

    Acting on a Laurent window termwise: the coefficient of the shifted
    window at ``gamma`` is ``R(gamma)`` times the input coefficient at
    ``gamma - 1``.  Applied to a kernel-series window of Omega(n, s) the
    output must equal ``S(gamma)`` at every ``gamma`` whose monomial lies
    in the space (and 0 at the rest) — the denominator ``R`` of the norm
    formula is annihilated.
    """
    if chunk.nvars != n:
        raise ValueError("window variable count disagrees with n")
    pair = build_RS(n, s)
    shifted = chunk.shifted((1,) * n)
    terms: dict[tuple[int, ...], Fraction] = {}
    for gamma, coef in shifted.terms.items():
        scaled = coef * pair.R.evaluate(gamma)
        if scaled:
            terms[gamma] = scaled
    out = LaurentChunk(n, shifted.box, terms, chunk.pi_power, chunk.truncated)
    return out
