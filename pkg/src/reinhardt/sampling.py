"""Monte-Carlo verification: norms, the reproducing property, branch sums.

All randomness flows through numpy's counter-based Philox generator, keyed
by ``SeedSequence(seed, spawn_key=(stream,))``: runs are bit-for-bit
reproducible for a fixed ``(seed, samples)`` pair, independent streams are
cheap, and nothing depends on global RNG state.

Sampling uses the polar factorization of Reinhardt domains: drawing
``t`` uniformly on the unit cube, keeping the shadow inequality, and
attaching independent uniform phases gives points ``w_j = sqrt(t_j) *
exp(i theta_j)`` uniform on ``H(k)``; for any integrand ``f``,

    Integral_{H(k)} f dV  ~  pi**n / N * sum_{accepted} f(w_i),

since the cube has volume 1 and each polar fiber contributes ``pi**n``.
Estimates report a standard error from the same sample, so consumers can
apply z-score tolerances.

Two identity checks live here because only numerics can see them whole:

* the reproducing property ``f(z) = Integral f(w) K(z, w) dV(w)`` for
  monomials ``f``, with near-singular kernel evaluations counted and
  discarded rather than silently included;

* the branch-sum identity tying the kernel of ``H(k)`` to the model kernel
  through the proper map ``phi(z) = (z_a**ell_a)``: with ``zeta_a`` the
  primitive ``ell_a``-th root of unity and principal roots ``w_a**(1/ell_a)``,

      prod_a ell_a z_a^{ell_a - 1} * B_{H(k)}(phi(z), w)
        = sum_j B_model(z, Phi_j(w)) * conj(U_j(w)),

  summed over all branch tuples ``j``, where ``Phi_j(w)_a = zeta_a^{j_a}
  w_a^{1/ell_a}`` and ``U_j = prod_a (zeta_a^{j_a}/ell_a)
  w_a^{1/ell_a - 1}``.  The identity holds for any fixed choice of root
  branch, which is why the float principal branch is safe.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Sequence

import numpy as np

from .domains import DomainSpec, lcm_data, model_spec
from .kernels import RationalKernel, kernel_model_sig1, kernel_signature_one

_CHUNK = 1 << 20


def generator(seed: int, stream: int = 0) -> np.random.Generator:
    """A Philox generator on an independent stream of the given seed."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(stream,))))


def _shadow_mask(spec: DomainSpec, t: np.ndarray) -> np.ndarray:
    s = spec.s
    k = np.array(spec.k[:s], dtype=np.float64)
    kb = np.array([abs(e) for e in spec.k[s:]], dtype=np.float64)
    lhs = np.prod(t[:, :s] ** k, axis=1)
    rhs = np.prod(t[:, s:] ** kb, axis=1)
    return lhs < rhs


@dataclass(frozen=True)
class McNormEstimate:
    estimate: float
    std_error: float
    accepted: int
    samples: int
    seed: int


def mc_norm_estimate(
    alpha: Sequence[int], spec: DomainSpec, samples: int, seed: int, stream: int = 0
) -> McNormEstimate:
    """Monte-Carlo estimate of ``||z**alpha||^2`` on ``H(k)`` with its standard error."""
    n = spec.n
    if len(alpha) != n:
        raise ValueError(f"alpha has length {len(alpha)}, expected {n}")
    if samples < 2:
        raise ValueError("need at least two samples")
    rng = generator(seed, stream)
    a = np.array(alpha, dtype=np.float64)
    total = 0.0
    total_sq = 0.0
    accepted = 0
    done = 0
    while done < samples:
        count = min(_CHUNK, samples - done)
        t = rng.random((count, n))
        mask = _shadow_mask(spec, t)
        with np.errstate(divide="ignore", invalid="ignore"):
            powered = np.prod(t ** a, axis=1)
        g = np.where(mask, powered, 0.0)
        total += float(np.sum(g))
        total_sq += float(np.sum(g * g))
        accepted += int(np.count_nonzero(mask))
        done += count
    if accepted == 0:
        raise ArithmeticError("no sample landed in the shadow; cannot estimate")
    scale = math.pi ** n
    mean = total / samples
    variance = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    return McNormEstimate(
        estimate=scale * mean,
        std_error=scale * math.sqrt(variance / samples),
        accepted=accepted,
        samples=samples,
        seed=seed,
    )


@dataclass(frozen=True)
class DivergenceProbe:
    estimates: tuple[float, ...]
    flagged: bool


def mc_divergence_probe(
    alpha: Sequence[int],
    spec: DomainSpec,
    samples: int,
    seed: int,
    rungs: int = 4,
    factor: int = 4,
    growth: float = 1.25,
) -> DivergenceProbe:
    """Heuristic divergence flag: estimates on a geometric ladder of sizes.

    A finite norm settles (estimates fluctuate around the value); an
    infinite one climbs with the sample size, though heavy tails make the
    climb ragged.  The flag fires when the top rung beats both the bottom
    and the next-to-top rung by the ``growth`` factor — deterministic for a
    fixed seed, and a heuristic by nature (hence the separate exact oracle).
    """
    estimates = tuple(
        mc_norm_estimate(alpha, spec, samples * factor ** i, seed, stream=i).estimate
        for i in range(rungs)
    )
    flagged = estimates[-1] > growth * estimates[0] and estimates[-1] > growth * estimates[-2]
    return DivergenceProbe(estimates=estimates, flagged=flagged)


def kernel_values(
    kernel: RationalKernel, z: Sequence[complex], W: np.ndarray, guard: float = 1e-12
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized kernel evaluation ``K(z, W_row)`` with a non-singular mask."""
    zc = np.asarray(z, dtype=np.complex128)
    T = zc[None, :] * np.conj(W)
    num = np.zeros(len(W), dtype=np.complex128)
    for exps, coef in kernel.numerator.sorted_terms():
        term = np.full(len(W), float(coef), dtype=np.complex128)
        for i, e in enumerate(exps):
            if e:
                term *= T[:, i] ** e
        num += term
    num *= float(kernel.scalar)
    main = np.ones(len(W), dtype=np.complex128)
    for b, kb in zip(range(1, kernel.n), kernel.main_kb):
        main *= T[:, b] ** kb
    main -= T[:, 0] ** kernel.main_k1
    den = main * main
    for b, mult in kernel.unit_factors:
        den *= (1.0 - T[:, b]) ** mult
    scale = np.maximum(1.0, np.abs(num))
    ok = np.abs(den) >= guard * scale
    values = np.zeros(len(W), dtype=np.complex128)
    np.divide(num, den, out=values, where=ok)
    return values / math.pi ** kernel.pi_power, ok


@dataclass(frozen=True)
class ReproducingCheck:
    estimate: complex
    reference: complex
    relative_error: float
    accepted: int
    discarded: int
    samples: int
    seed: int


def check_reproducing(
    spec: DomainSpec,
    alpha: Sequence[int],
    z: Sequence[complex],
    samples: int,
    seed: int,
    kernel: RationalKernel | None = None,
    stream: int = 0,
) -> ReproducingCheck:
    """Monte-Carlo check of ``z**alpha = Integral w**alpha K(z, w) dV(w)``.

    Samples uniformly on the domain, evaluates the kernel vectorized, and
    discards (but counts) near-singular draws.  The reference value is the
    monomial at ``z``; the relative error compares against it.
    """
    n = spec.n
    if kernel is None:
        kernel = kernel_signature_one(spec)
    rng = generator(seed, stream)
    a = np.array(alpha, dtype=np.float64)
    reference = complex(np.prod(np.asarray(z, dtype=np.complex128) ** a))
    total = 0.0 + 0.0j
    accepted = 0
    discarded = 0
    done = 0
    while done < samples:
        count = min(_CHUNK, samples - done)
        t = rng.random((count, n))
        theta = rng.random((count, n)) * (2.0 * math.pi)
        mask = _shadow_mask(spec, t)
        W = np.sqrt(t) * np.exp(1j * theta)
        with np.errstate(divide="ignore", invalid="ignore"):
            f_vals = np.prod(W ** a, axis=1)
        k_vals, ok = kernel_values(kernel, z, W)
        use = mask & ok
        total += complex(np.sum(np.where(use, f_vals * k_vals, 0.0)))
        accepted += int(np.count_nonzero(use))
        discarded += int(np.count_nonzero(mask & ~ok))
        done += count
    estimate = math.pi ** n / samples * total
    return ReproducingCheck(
        estimate=estimate,
        reference=reference,
        relative_error=abs(estimate - reference) / abs(reference),
        accepted=accepted,
        discarded=discarded,
        samples=samples,
        seed=seed,
    )


def check_bell_identity(
    spec: DomainSpec,
    z: Sequence[complex],
    w: Sequence[complex],
    kernel_general: RationalKernel | None = None,
    kernel_model: RationalKernel | None = None,
) -> float:
    """Relative residual of the branch-sum identity at one point pair.

    ``z`` must lie in the model domain Omega(n, 1) and ``w`` in ``H(k)``
    with nonzero coordinates; the residual is ``|lhs - rhs| /
    max(|lhs|, |rhs|)``.
    """
    if spec.s != 1:
        raise ValueError("the branch-sum identity is for signature-one specs")
    n = spec.n
    _, ell, _ = lcm_data(spec)
    if kernel_general is None:
        kernel_general = kernel_signature_one(spec)
    if kernel_model is None:
        kernel_model = kernel_model_sig1(n)

    u = 1.0 + 0.0j
    for za, la in zip(z, ell):
        u *= la * za ** (la - 1)
    phi = [za ** la for za, la in zip(z, ell)]
    lhs = u * kernel_general.evaluate(phi, w)

    roots = [complex(wa) ** (1.0 / la) for wa, la in zip(w, ell)]
    zetas = [cmath.exp(2j * math.pi / la) for la in ell]
    rhs = 0.0 + 0.0j
    for branches in _cartesian(*(range(la) for la in ell)):
        point = [zetas[a] ** j * roots[a] for a, j in enumerate(branches)]
        U = 1.0 + 0.0j
        for a, j in enumerate(branches):
            U *= zetas[a] ** j / ell[a] * point[a] / (zetas[a] ** j * w[a])
        # point[a] / w[a] * zeta**j / zeta**j reduces to w_a^{1/ell_a - 1},
        # written through the stored root so both sides share one branch choice
        rhs += kernel_model.evaluate(z, point) * U.conjugate()
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs))


def _sample_domain_point(
    spec: DomainSpec, rng: np.random.Generator, margin: float = 0.8
) -> list[complex]:
    """A random interior point with a safety margin from the singular set."""
    n, s = spec.n, spec.s
    while True:
        t = 0.05 + 0.85 * rng.random(n)
        lhs = math.prod(float(t[a]) ** spec.k[a] for a in range(s))
        rhs = math.prod(float(t[b]) ** abs(spec.k[b]) for b in range(s, n))
        if lhs < margin * rhs:
            theta = rng.random(n) * 2.0 * math.pi
            return [math.sqrt(float(ti)) * cmath.exp(1j * th) for ti, th in zip(t, theta)]


def bell_residuals(spec: DomainSpec, pairs: int, seed: int) -> list[float]:
    """Branch-sum residuals at ``pairs`` random point pairs (seeded)."""
    rng = generator(seed)
    model = model_spec(spec.n, 1)
    kernel_general = kernel_signature_one(spec)
    kernel_model = kernel_model_sig1(spec.n)
    out = []
    for _ in range(pairs):
        z = _sample_domain_point(model, rng)
        w = _sample_domain_point(spec, rng)
        out.append(check_bell_identity(spec, z, w, kernel_general, kernel_model))
    return out
