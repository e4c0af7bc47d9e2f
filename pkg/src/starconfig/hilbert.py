"""Hilbert functions, h-vectors, degrees, and closed-form h-vector predictions.

The Hilbert function of R/I counts standard monomials (monomials of a given
degree not in I).  It is computed through the exact numerator K(t) of the
Hilbert series K(t)/(1-t)^s, obtained by the classical pivot recursion

    K(I) = K(I + (x_i)) + t * K(I : x_i)

with coprime generator blocks split multiplicatively.  All arithmetic is
exact integer arithmetic; the numerator is a finite polynomial whose degree
is bounded by the degree of the lcm of the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import exponents as ex
from .errors import ResourceCapError, UsageError


@dataclass(frozen=True)
class HVector:
    """An h-vector: the (s-c)-th difference of a Hilbert function, trailing zeros trimmed."""

    entries: tuple[int, ...]
    codim: int

    def total(self) -> int:
        """Sum of entries; the scheme degree when the ideal is unmixed of this codimension."""
        return sum(self.entries)


def _poly_trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _support_blocks(gens: tuple[ex.Exponent, ...]) -> list[tuple[ex.Exponent, ...]]:
    """Partition generators into blocks with pairwise disjoint variable supports."""
    supports = [frozenset(i for i, e in enumerate(g) if e > 0) for g in gens]
    parent = list(range(len(gens)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if supports[i] & supports[j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    blocks: dict[int, list[ex.Exponent]] = {}
    for i, g in enumerate(gens):
        blocks.setdefault(find(i), []).append(g)
    return [tuple(b) for b in blocks.values()]


@lru_cache(maxsize=None)
def _numerator(ideal: ex.MonomialIdeal) -> tuple[int, ...]:
    """Coefficients of the Hilbert-series numerator K(t) of R/ideal."""
    gens = ideal.gens
    s = ideal.arity
    if not gens:
        return (1,)
    if ideal.is_unit:
        return ()
    if len(gens) == 1:
        d = sum(gens[0])
        return _poly_trim([1] + [0] * (d - 1) + [-1])
    blocks = _support_blocks(gens)
    if len(blocks) > 1:
        result = (1,)
        for block in blocks:
            result = _poly_mul(result, _numerator(ex.MonomialIdeal(s, block)))
        return result
    # pivot on the variable hitting the most generators
    counts = [sum(1 for g in gens if g[i] > 0) for i in range(s)]
    pivot = counts.index(max(counts))
    e = [0] * s
    e[pivot] = 1
    added = ex.minimalize(s, gens + (tuple(e),))
    quotient = ex.colon(ideal, tuple(e))
    a = _numerator(added)
    b = _numerator(quotient)
    out = [0] * max(len(a), len(b) + 1)
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i + 1] += x
    return _poly_trim(out)


def hilbert_function(ideal: ex.MonomialIdeal, d: int) -> int:
    """Number of monomials of degree d in s variables not lying in the ideal."""
    if d < 0:
        raise UsageError(f"degree must be nonnegative, got {d}")
    s = ideal.arity
    k = _numerator(ideal)
    return sum(c * comb(d - j + s - 1, s - 1) for j, c in enumerate(k) if j <= d)


def default_degree_cap(ideal: ex.MonomialIdeal) -> int:
    return 4 * (1 + ideal.max_gen_degree())


def h_vector(ideal: ex.MonomialIdeal, c: int, d_cap: int | None = None) -> HVector:
    """The h-vector: the (s-c)-th first difference of the Hilbert function.

    The differenced sequence has generating series K(t)/(1-t)^c, so it
    stabilizes at zero exactly when (1-t)^c divides the numerator, and the
    entries are the quotient coefficients.  A non-stabilizing sequence (the
    ideal does not define codimension c) or a numerator past the degree cap
    raises ResourceCapError.
    """
    s = ideal.arity
    if not 1 <= c <= s:
        raise UsageError(f"codimension must satisfy 1 <= c <= {s}, got {c}")
    cap = default_degree_cap(ideal) if d_cap is None else d_cap
    k = list(_numerator(ideal))
    if len(k) - 1 > cap:
        raise ResourceCapError(
            f"h-vector needs Hilbert function values up to degree {len(k) - 1}, cap is {cap}"
        )
    entries = k
    for _ in range(c):
        if sum(entries) != 0:  # remainder of division by (1-t)
            raise ResourceCapError(
                f"h-vector entries fail to stabilize at zero within cap {cap}; "
                f"is the ideal of codimension {c}?"
            )
        total = 0
        quotient = []
        for coeff in entries[:-1]:
            total += coeff
            quotient.append(total)
        entries = quotient
    while entries and entries[-1] == 0:
        entries.pop()
    return HVector(tuple(entries), c)


def generic_hvector(s: int, c: int) -> HVector:
    """The generic h-vector of the codimension-c skeleton: binom(t+c-1, c-1) for t = 0..s-c."""
    if not 1 <= c <= s - 1:
        raise UsageError(f"need 1 <= c <= s-1, got c={c}, s={s}")
    return HVector(tuple(comb(t + c - 1, c - 1) for t in range(s - c + 1)), c)


def ss_hvector_formula(s: int, c: int) -> HVector:
    """Closed form for the h-vector of the symbolic square of the skeleton.

    Entries grow generically through degree s-c, then plateau at binom(s, c-1)
    through degree 2s-2c+1, then vanish.
    """
    if not 1 <= c <= s - 1:
        raise UsageError(f"need 1 <= c <= s-1, got c={c}, s={s}")
    entries = [comb(t + c - 1, c - 1) for t in range(s - c + 1)]
    entries += [comb(s, c - 1)] * ((2 * s - 2 * c + 1) - (s - c + 1) + 1)
    return HVector(tuple(entries), c)


def degree(ideal: ex.MonomialIdeal, c: int) -> int:
    """The scheme degree: sum of h-vector entries (the ideal must be unmixed of codimension c)."""
    return h_vector(ideal, c).total()


def bdg_hf_check(
    i_s: ex.MonomialIdeal,
    i_c: ex.MonomialIdeal,
    d: int,
    i_result: ex.MonomialIdeal,
) -> bool:
    """Verify the basic-double-link Hilbert function identity.

    For I' = F*I_C + I_S with deg F = d and F a nonzerodivisor mod I_S, the
    Hilbert function of R/I' is h_S(t) - h_S(t-d) + h_C(t-d).  Checking
    degrees up to the largest numerator bound plus d pins the identity for
    every t.
    """
    if not (i_s.arity == i_c.arity == i_result.arity):
        raise UsageError("all three ideals must share an arity")
    if d < 0:
        raise UsageError(f"the linking form degree must be nonnegative, got {d}")
    top = max(ex.degree_bound(i_s) + d, ex.degree_bound(i_c) + d, ex.degree_bound(i_result)) + 1

    def hf(ideal, t):
        return hilbert_function(ideal, t) if t >= 0 else 0

    return all(
        hf(i_result, t) == hf(i_s, t) - hf(i_s, t - d) + hf(i_c, t - d) for t in range(top + 1)
    )


def series_numerator(ideal: ex.MonomialIdeal, cap: int | None = None) -> tuple[int, ...]:
    """Coefficients of (sum_d HF(d) t^d) * (1-t)^s, truncated at cap.

    With the default cap (the lcm bound of the generators plus a window) the
    polynomial provably terminates; with a caller-supplied cap the trailing
    window is checked and a ResourceCapError raised if it is not zero.
    """
    s = ideal.arity
    if cap is None:
        cap = ex.degree_bound(ideal) + s + 1
    if cap < s + 1:
        raise ResourceCapError(f"series numerator cap {cap} is below the minimal window {s + 1}")
    hf = [hilbert_function(ideal, t) for t in range(cap + 1)]
    signs = [(-1) ** k * comb(s, k) for k in range(s + 1)]
    coeffs = [
        sum(signs[k] * hf[j - k] for k in range(min(j, s) + 1)) for j in range(cap + 1)
    ]
    if any(coeffs[-(s + 1) :]):
        raise ResourceCapError(f"series numerator does not terminate within cap {cap}")
    return _poly_trim(coeffs)


__all__ = [
    "HVector",
    "bdg_hf_check",
    "default_degree_cap",
    "degree",
    "generic_hvector",
    "h_vector",
    "hilbert_function",
    "series_numerator",
    "ss_hvector_formula",
]
