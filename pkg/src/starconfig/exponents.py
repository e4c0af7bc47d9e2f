"""Exact arithmetic for monomials and monomial ideals in a fixed number of variables.

A monomial in s variables is an exponent tuple: a tuple of s nonnegative
integers, element i giving the exponent of x_i.  Its degree is the sum of the
entries (always recomputed, never cached).

  Exponent = tuple[int, ...]        x0^2*x1  in 3 variables  ->  (2, 1, 0)

A MonomialIdeal is an arity plus the minimal generating antichain, stored in
graded-lexicographic order (degree ascending, then x0 > x1 > ... within a
degree) so that equality of ideals is equality of generator tuples.  The zero
ideal has no generators; the unit ideal has the single all-zeros generator.

All values are immutable and all operations are pure.  Arity is checked at
every binary operation; there is no implicit broadcasting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import UsageError

Exponent = tuple[int, ...]

# Above this many pairwise divisibility checks, contains() switches to a
# vectorized numpy batch (exact int64 comparisons, same result).
_BATCH_THRESHOLD = 50_000


def grlex_key(t: Exponent) -> tuple:
    """Sort key for the graded-lexicographic order with x0 largest."""
    return (sum(t), tuple(-e for e in t))


def monomial_str(t: Exponent) -> str:
    """Render an exponent tuple as a monomial in x0..x{s-1}, e.g. x0*x2^3."""
    parts = []
    for i, e in enumerate(t):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def deg(t: Exponent) -> int:
    """Total degree of an exponent tuple."""
    return sum(t)


def _check_exponent(t: Exponent, arity: int) -> None:
    if len(t) != arity:
        raise UsageError(f"exponent tuple {t} has arity {len(t)}, expected {arity}")
    if any(e < 0 for e in t):
        raise UsageError(f"exponent tuple {t} has a negative entry")


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal: arity plus its canonical minimal generating antichain.

    Construct through :func:`minimalize` (or the convenience constructors
    below); the raw constructor trusts that ``gens`` is already a deduplicated
    antichain in graded-lex order.
    """

    arity: int
    gens: tuple[Exponent, ...]

    def __post_init__(self):
        if self.arity < 1:
            raise UsageError(f"arity must be positive, got {self.arity}")
        for g in self.gens:
            _check_exponent(g, self.arity)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and sum(self.gens[0]) == 0

    def max_gen_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"


def zero_ideal(arity: int) -> MonomialIdeal:
    return MonomialIdeal(arity, ())


def unit_ideal(arity: int) -> MonomialIdeal:
    return MonomialIdeal(arity, ((0,) * arity,))


def variable_ideal(arity: int, indices: Iterable[int]) -> MonomialIdeal:
    """The prime ideal generated by the listed variables."""
    gens = []
    for i in indices:
        if not 0 <= i < arity:
            raise UsageError(f"variable index {i} out of range for arity {arity}")
        e = [0] * arity
        e[i] = 1
        gens.append(tuple(e))
    return minimalize(arity, gens)


def divides(a: Exponent, b: Exponent) -> bool:
    """True iff monomial a divides monomial b (componentwise <=)."""
    if len(a) != len(b):
        raise UsageError(f"arity mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def minimalize(arity: int, tuples: Iterable[Exponent]) -> MonomialIdeal:
    """The ideal generated by the given monomials, as its minimal antichain.

    Duplicates and divisibility-dominated tuples are dropped; the result
    generates the same upward-closed set.
    """
    uniq = sorted(set(tuples), key=grlex_key)
    for t in uniq:
        _check_exponent(t, arity)
    # only strictly smaller degrees can divide a candidate, so each tuple is
    # checked against the kept generators below its own degree
    kept: list[Exponent] = []
    limit = 0
    current_degree = -1
    for t in uniq:  # ascending degree
        d = sum(t)
        if d != current_degree:
            current_degree = d
            limit = len(kept)
        if not any(all(x <= y for x, y in zip(g, t)) for g in kept[:limit]):
            kept.append(t)
    return MonomialIdeal(arity, tuple(kept))


def member(mu: Exponent, ideal: MonomialIdeal) -> bool:
    """True iff the monomial mu lies in the ideal (some generator divides it)."""
    _check_exponent(mu, ideal.arity)
    return any(all(x <= y for x, y in zip(g, mu)) for g in ideal.gens)


def _check_same_arity(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.arity != b.arity:
        raise UsageError(f"arity mismatch: {a.arity} vs {b.arity}")


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The ideal a + b."""
    _check_same_arity(a, b)
    return minimalize(a.arity, a.gens + b.gens)


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The product ideal, generated by pairwise products of generators."""
    _check_same_arity(a, b)
    prods = {tuple(x + y for x, y in zip(g, h)) for g in a.gens for h in b.gens}
    return minimalize(a.arity, prods)


def power(ideal: MonomialIdeal, ell: int) -> MonomialIdeal:
    """The ell-th power, minimalized at every step.

    power(I, 0) is the unit ideal by convention.
    """
    if ell < 0:
        raise UsageError(f"power exponent must be nonnegative, got {ell}")
    if ell == 0:
        return unit_ideal(ideal.arity)
    result = ideal
    for _ in range(ell - 1):
        result = multiply(result, ideal)
    return result


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The intersection, via componentwise max (lcm) of generator pairs."""
    _check_same_arity(a, b)
    lcms = {tuple(max(x, y) for x, y in zip(g, h)) for g in a.gens for h in b.gens}
    return minimalize(a.arity, lcms)


def intersect_many(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Fold intersect pairwise, minimalizing after each fold.

    The empty intersection is undefined here; pass at least one ideal.
    """
    it = iter(ideals)
    try:
        result = next(it)
    except StopIteration:
        raise UsageError("intersect_many needs at least one ideal") from None
    for ideal in it:
        result = intersect(result, ideal)
    return result


def colon(ideal: MonomialIdeal, mu: Exponent) -> MonomialIdeal:
    """The colon ideal (I : mu) for a single monomial mu."""
    _check_exponent(mu, ideal.arity)
    quots = {tuple(max(x - y, 0) for x, y in zip(g, mu)) for g in ideal.gens}
    return minimalize(ideal.arity, quots)


def colon_ideal(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The colon ideal (a : b), intersecting colons over the generators of b.

    (a : (0)) is the unit ideal.
    """
    _check_same_arity(a, b)
    if b.is_zero:
        return unit_ideal(a.arity)
    return intersect_many(colon(a, g) for g in b.gens)


def saturate(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The saturation of a with respect to b: iterate (a : b) to a fixed point."""
    _check_same_arity(a, b)
    if b.is_zero:
        raise UsageError("cannot saturate by the zero ideal")
    current = a
    while True:
        nxt = colon_ideal(current, b)
        if nxt == current:
            return current
        current = nxt


def contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """True iff b is contained in a (every generator of b is a member of a)."""
    _check_same_arity(a, b)
    if b.is_zero or a.is_unit:
        return True
    if a.is_zero:
        return False
    if len(a.gens) * len(b.gens) > _BATCH_THRESHOLD:
        ga = np.array(a.gens, dtype=np.int64)
        gb = np.array(b.gens, dtype=np.int64)
        # b-gen j is a member of a iff some a-gen divides it
        hit = (ga[:, None, :] <= gb[None, :, :]).all(axis=2).any(axis=0)
        return bool(hit.all())
    return all(member(g, a) for g in b.gens)


def equals(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Ideal equality; canonical storage makes this generator-list comparison."""
    _check_same_arity(a, b)
    return a.gens == b.gens


def alpha(ideal: MonomialIdeal) -> int:
    """Least degree of a minimal generator (initial degree)."""
    if ideal.is_zero:
        raise UsageError("alpha of the zero ideal is undefined")
    return sum(ideal.gens[0])  # gens sorted by degree first


def omega(ideal: MonomialIdeal) -> int:
    """Largest degree of a minimal generator (terminal generator degree)."""
    if ideal.is_zero:
        raise UsageError("omega of the zero ideal is undefined")
    return sum(ideal.gens[-1])


def truncate_to_degree(ideal: MonomialIdeal, t: int) -> MonomialIdeal:
    """The intersection of the ideal with the t-th power of the irrelevant ideal.

    Each generator of degree < t is padded up to degree t in every possible
    way; this produces the same ideal as intersecting with the ideal of all
    degree-t monomials, without the quadratic lcm blow-up.
    """
    if t < 0:
        raise UsageError(f"degree bound must be nonnegative, got {t}")
    s = ideal.arity
    out: set[Exponent] = set()
    for g in ideal.gens:
        gap = t - sum(g)
        if gap <= 0:
            out.add(g)
            continue
        for pad in compositions(gap, s):
            out.add(tuple(x + y for x, y in zip(g, pad)))
    return minimalize(s, out)


def compositions(total: int, parts: int):
    """Yield all tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def monomials_of_degree(arity: int, d: int):
    """Yield all exponent tuples of total degree d, in no particular order."""
    return compositions(d, arity)


def degree_bound(ideal: MonomialIdeal) -> int:
    """Degree of the lcm of all generators.

    The Hilbert-series numerator of the ideal vanishes beyond this degree
    (every twist in the Taylor complex is the lcm of a generator subset).
    """
    if ideal.is_zero:
        return 0
    return sum(max(col) for col in zip(*ideal.gens))


__all__ = [
    "Exponent",
    "MonomialIdeal",
    "alpha",
    "colon",
    "colon_ideal",
    "compositions",
    "contains",
    "deg",
    "degree_bound",
    "divides",
    "equals",
    "grlex_key",
    "ideal_sum",
    "intersect",
    "intersect_many",
    "member",
    "minimalize",
    "monomial_str",
    "monomials_of_degree",
    "multiply",
    "omega",
    "power",
    "saturate",
    "truncate_to_degree",
    "unit_ideal",
    "variable_ideal",
    "zero_ideal",
]
