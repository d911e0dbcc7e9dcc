"""Lattice pair counts and closed-form kernel numerator coefficients.

The numerator of the signature-one closed-form kernel is a polynomial whose
coefficients count lattice pairs.  The basic count is

    pair_count(lam, mu) = #{ (x, y) : 0 <= x, y <= lam - 1, x + y = mu },

a discrete triangle: ``mu + 1`` on the rising side ``0 <= mu <= lam - 1``,
``2*lam - 1 - mu`` on the falling side ``lam <= mu <= 2*lam - 2``, zero
outside.  Summing over ``mu`` recovers ``lam**2``.

For a signature-one spec with lcm data ``(K, ell, L)`` the numerator
coefficient at a multi-exponent ``beta`` is the product

    C(beta) = pair_count(K, 2K - ell_1*(beta_1 + 1) - 1)
              * prod_b pair_count(ell_b, ell_b*(beta_b + 1) + ell_1*(beta_1 + 1) - 2K - 1)

over the negative block ``b = 2..n``.  It is supported on the box

    G      = { beta : 0 <= beta_1 <= 2k_1 - 2,  0 <= beta_b <= 2|k_b| },

and in fact already on the smaller box ``G*`` where each coordinate with
``ell_b == 1`` is pinched to ``1 <= beta_b <= 2|k_b| - 1``; the coefficient
vanishes identically on ``G \\ G*``, which is what makes branch-sum
("Bell-type") manipulations of the kernel work.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Sequence

from .domains import DomainSpec, lcm_data


def pair_count(lam: int, mu: int) -> int:
    """#{(x, y) : 0 <= x, y <= lam-1, x + y = mu}, by the closed form."""
    if lam < 1:
        raise ValueError("lam must be a positive integer")
    if mu < 0 or mu > 2 * lam - 2:
        return 0
    if mu <= lam - 1:
        return mu + 1
    return 2 * lam - 1 - mu


def pair_count_bruteforce(lam: int, mu: int) -> int:
    """The same count by enumeration (test oracle for :func:`pair_count`)."""
    if lam < 1:
        raise ValueError("lam must be a positive integer")
    return sum(1 for x in range(lam) for y in range(lam) if x + y == mu)


def coefficient_C(beta: Sequence[int], spec: DomainSpec) -> int:
    """Numerator coefficient of the closed-form kernel at ``beta``.

    Only signature-one specs have the closed form; others raise
    ``ValueError``.  ``beta`` may be any integer vector of length ``n``
    (the count is simply 0 outside the support box).
    """
    if spec.s != 1:
        raise ValueError(f"closed-form coefficients need signature 1, got {spec.s}")
    if len(beta) != spec.n:
        raise ValueError(f"beta has length {len(beta)}, expected {spec.n}")
    K, ell, _ = lcm_data(spec)
    head = ell[0] * (beta[0] + 1)
    value = pair_count(K, 2 * K - head - 1)
    for b in range(1, spec.n):
        if value == 0:
            return 0
        value *= pair_count(ell[b], ell[b] * (beta[b] + 1) + head - 2 * K - 1)
    return value


@dataclass(frozen=True)
class IndexSetG:
    """A support box for the kernel numerator, with its members enumerated."""

    spec: DomainSpec
    variant: str  # "full" or "pruned"
    members: tuple[tuple[int, ...], ...]

    def __contains__(self, beta) -> bool:
        return tuple(beta) in set(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def index_set(spec: DomainSpec, variant: str = "full") -> IndexSetG:
    """The numerator support box ``G`` (``variant="full"``) or ``G*`` (``"pruned"``).

    Members are listed lexicographically.  ``G*`` pinches every negative-block
    coordinate whose branch order ``ell_b`` is 1 from ``[0, 2|k_b|]`` to
    ``[1, 2|k_b| - 1]``; it is a subset of ``G`` and carries all the nonzero
    coefficients.
    """
    if spec.s != 1:
        raise ValueError(f"numerator index sets need signature 1, got {spec.s}")
    if variant not in ("full", "pruned"):
        raise ValueError(f"unknown variant {variant!r}")
    _, ell, _ = lcm_data(spec)
    ranges = [range(0, 2 * spec.k[0] - 1)]
    for b in range(1, spec.n):
        cap = 2 * abs(spec.k[b])
        if variant == "pruned" and ell[b] == 1:
            ranges.append(range(1, cap))
        else:
            ranges.append(range(0, cap + 1))
    return IndexSetG(spec, variant, tuple(_cartesian(*ranges)))
