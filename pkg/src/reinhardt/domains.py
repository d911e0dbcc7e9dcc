"""Domain specifications for elementary Reinhardt domains.

An elementary Reinhardt domain is determined by a vector ``k`` of nonzero
integer exponents with at least one positive and one negative entry::

    H(k) = { z in D^n : |z_1^{k_1} * ... * z_n^{k_n}| < 1 },

where ``D^n`` is the unit polydisc and coordinates with negative exponents
are implicitly nonzero.  The prototype is the Hartogs triangle ``H(1, -1)``.
Two exponent vectors cut out the same domain when they agree up to a
positive rational multiple and a reordering of coordinates, so every vector
is normalized here to a canonical representative: positive entries first
(input order preserved inside each sign block) and the entries divided by
the gcd of their absolute values.

The *signature* ``s`` is the number of positive entries.  When every entry
is ``+1`` or ``-1`` the domain is called a *model domain*, written
``Omega(n, s)``; general domains are rational images of their model via the
standard proper monomial map ``z -> (z_a ** ell_a)`` whose exponents come
from :func:`lcm_data`.

The *shadow* of ``H(k)`` is its image under ``z -> (|z_1|^2, ..., |z_n|^2)``
intersected with the open unit cube: the set of ``t in (0,1)^n`` with
``prod(t_a^{k_a}, a <= s) < prod(t_b^{|k_b|}, b > s)``.  Integrals over the
domain reduce to integrals over the shadow, which is why membership tests
for both live together here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class MultiIndex(tuple):
    """An integer exponent vector with componentwise arithmetic.

    Behaves as an immutable sequence of ints; ``+`` and ``-`` act
    componentwise (lengths must match), ``scaled`` multiplies every entry
    by an integer, and ``shifted`` adds a constant to every entry —
    ``alpha.shifted(1)`` is the ubiquitous ``beta = alpha + 1``.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]) -> "MultiIndex":
        values = tuple(entries)
        for e in values:
            if not isinstance(e, int):
                raise TypeError(f"multi-index entries must be ints, got {e!r}")
        return super().__new__(cls, values)

    def __add__(self, other: Sequence[int]) -> "MultiIndex":  # type: ignore[override]
        if len(self) != len(other):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")
        return MultiIndex(a + b for a, b in zip(self, other))

    __radd__ = __add__

    def __sub__(self, other: Sequence[int]) -> "MultiIndex":
        if len(self) != len(other):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")
        return MultiIndex(a - b for a, b in zip(self, other))

    def scaled(self, c: int) -> "MultiIndex":
        return MultiIndex(c * a for a in self)

    def shifted(self, c: int = 1) -> "MultiIndex":
        return MultiIndex(a + c for a in self)

    def __repr__(self) -> str:
        return f"MultiIndex{tuple(self)!r}"


@dataclass(frozen=True)
class DomainSpec:
    """A normalized exponent vector ``k`` together with its signature.

    Instances should be built through :func:`normalize_spec`, which sorts
    the positive entries ahead of the negative ones and divides out the
    gcd; the constructor enforces that the data is already in this shape.
    ``permutation[i]`` records which position of the caller's original
    vector ended up at normalized position ``i``.
    """

    k: tuple[int, ...]
    s: int
    permutation: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        k = self.k
        if len(k) < 2:
            raise ValueError("an exponent vector needs at least two entries")
        if any(e == 0 for e in k):
            raise ValueError("exponent entries must be nonzero")
        s = sum(1 for e in k if e > 0)
        if s == 0 or s == len(k):
            raise ValueError("exponents must mix signs (at least one positive and one negative)")
        if s != self.s:
            raise ValueError(f"signature field {self.s} disagrees with entries {k}")
        if any(e <= 0 for e in k[:s]) or any(e >= 0 for e in k[s:]):
            raise ValueError("normalized exponents must list positive entries first")
        if math.gcd(*[abs(e) for e in k]) != 1:
            raise ValueError("normalized exponents must have gcd 1")
        if not self.permutation:
            object.__setattr__(self, "permutation", tuple(range(len(k))))
        elif sorted(self.permutation) != list(range(len(k))):
            raise ValueError("permutation must be a permutation of 0..n-1")

    @property
    def n(self) -> int:
        return len(self.k)

    @property
    def abs_k(self) -> tuple[int, ...]:
        return tuple(abs(e) for e in self.k)

    @property
    def is_model(self) -> bool:
        """True when every entry is ±1 (the model domain Omega(n, s))."""
        return all(abs(e) == 1 for e in self.k)

    def __str__(self) -> str:
        return f"H({', '.join(str(e) for e in self.k)})"


def normalize_spec(entries: Sequence[int]) -> DomainSpec:
    """Normalize a raw exponent vector to its canonical :class:`DomainSpec`.

    Positive entries are moved ahead of negative ones (stably, preserving
    the input order inside each sign block) and the whole vector is divided
    by the gcd of the absolute values, e.g. ``(-2, 4) -> (2, -1)``.

    Raises ``ValueError`` for vectors with fewer than two entries, zero
    entries, or entries of only one sign.
    """
    values = [int(e) for e in entries]
    if len(values) < 2:
        raise ValueError("an exponent vector needs at least two entries")
    if any(e == 0 for e in values):
        raise ValueError("exponent entries must be nonzero")
    positives = [(i, e) for i, e in enumerate(values) if e > 0]
    negatives = [(i, e) for i, e in enumerate(values) if e < 0]
    if not positives or not negatives:
        raise ValueError("exponents must mix signs (at least one positive and one negative)")
    ordered = positives + negatives
    g = math.gcd(*[abs(e) for _, e in ordered])
    return DomainSpec(
        k=tuple(e // g for _, e in ordered),
        s=len(positives),
        permutation=tuple(i for i, _ in ordered),
    )


def model_spec(n: int, s: int) -> DomainSpec:
    """The model domain Omega(n, s) as a spec: s entries +1, then n-s entries -1."""
    return DomainSpec(k=(1,) * s + (-1,) * (n - s), s=s)


def lcm_data(spec: DomainSpec) -> tuple[int, tuple[int, ...], int]:
    """Return ``(K, ell, L)`` for the standard proper map onto ``H(k)``.

    ``K = lcm(|k_1|, ..., |k_n|)``, ``ell_a = K / |k_a|``, and
    ``L = prod(ell_a)`` is the generic sheet count of the map
    ``z -> (z_a ** ell_a)`` from the model domain.  For example
    ``H(2, -3)`` has ``K = 6``, ``ell = (3, 2)``, ``L = 6``.
    """
    abs_k = spec.abs_k
    K = math.lcm(*abs_k)
    ell = tuple(K // a for a in abs_k)
    L = math.prod(ell)
    return K, ell, L


def standard_proper_map_exponents(spec: DomainSpec) -> tuple[int, ...]:
    """Exponents ``ell`` of the proper monomial map Omega(n, s) -> H(k)."""
    return lcm_data(spec)[1]


def shadow_contains(spec: DomainSpec, t: Sequence) -> bool:
    """Whether ``t`` lies strictly inside the shadow of ``H(k)``.

    Works for exact inputs (ints/Fractions compare exactly) as well as
    floats.  The shadow is open: boundary points return False.
    """
    if len(t) != spec.n:
        raise ValueError(f"point has length {len(t)}, expected {spec.n}")
    if not all(0 < ti < 1 for ti in t):
        return False
    s = spec.s
    lhs = math.prod((t[a] ** spec.k[a] for a in range(s)), start=Fraction(1) if _exact(t) else 1.0)
    rhs = math.prod((t[b] ** abs(spec.k[b]) for b in range(s, spec.n)), start=Fraction(1) if _exact(t) else 1.0)
    return lhs < rhs


def _exact(point: Sequence) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in point)


def domain_contains(spec: DomainSpec, z: Sequence[complex]) -> bool:
    """Whether ``z`` lies in ``H(k)`` (open; negative-block coordinates nonzero)."""
    if len(z) != spec.n:
        raise ValueError(f"point has length {len(z)}, expected {spec.n}")
    moduli = [abs(zi) for zi in z]
    if any(m >= 1.0 for m in moduli):
        return False
    s = spec.s
    if any(moduli[b] == 0.0 for b in range(s, spec.n)):
        return False
    lhs = math.prod(moduli[a] ** spec.k[a] for a in range(s))
    rhs = math.prod(moduli[b] ** abs(spec.k[b]) for b in range(s, spec.n))
    return lhs < rhs


class NormValue:
    """The squared Bergman-space norm of a monomial: ``q * pi**p`` or infinite.

    The rational part ``coefficient`` and the power ``pi_power`` of pi are
    stored exactly; they may only be read when ``finite`` is True.
    """

    __slots__ = ("_coefficient", "_pi_power", "finite")

    def __init__(self, coefficient: Fraction | None, pi_power: int | None, finite: bool):
        if finite and (coefficient is None or pi_power is None or coefficient <= 0):
            raise ValueError("a finite norm needs a positive rational coefficient and a pi power")
        self._coefficient = Fraction(coefficient) if finite else None
        self._pi_power = int(pi_power) if finite else None
        self.finite = finite

    @classmethod
    def of(cls, coefficient, pi_power: int) -> "NormValue":
        return cls(Fraction(coefficient), pi_power, True)

    @classmethod
    def infinite(cls) -> "NormValue":
        return cls(None, None, False)

    @property
    def coefficient(self) -> Fraction:
        if not self.finite:
            raise ValueError("an infinite norm has no coefficient")
        return self._coefficient

    @property
    def pi_power(self) -> int:
        if not self.finite:
            raise ValueError("an infinite norm has no pi power")
        return self._pi_power

    def __float__(self) -> float:
        if not self.finite:
            return math.inf
        return float(self._coefficient) * math.pi ** self._pi_power

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormValue):
            return NotImplemented
        if not self.finite or not other.finite:
            return self.finite == other.finite
        return (self._coefficient, self._pi_power) == (other._coefficient, other._pi_power)

    def __hash__(self) -> int:
        return hash((self._coefficient, self._pi_power, self.finite))

    def __str__(self) -> str:
        if not self.finite:
            return "infinite"
        if self._pi_power == 0:
            return str(self._coefficient)
        pi = "π" if self._pi_power == 1 else f"π^{self._pi_power}"
        return f"{self._coefficient} · {pi}"

    def __repr__(self) -> str:
        if not self.finite:
            return "NormValue.infinite()"
        return f"NormValue.of({self._coefficient!r}, {self._pi_power})"
