"""Primary decomposition of powers, saturation, containment, and resurgence.

For the monomial skeleton in P^{N+1-1} (s = N+1 coordinate hyperplanes), the
l-th ordinary power of the codimension-c skeleton ideal decomposes as the
intersection of symbolic powers of the higher-codimension skeletons and a
power of the irrelevant ideal; the saturation drops the irrelevant factor.
The resurgence sup{m/r : I^(m) not in I^r} has an exact value for c in
{1, N-1, N} and a general lower bound c(s-c+1)/s.

All ratio arithmetic uses exact rationals; no floating point appears in any
decision path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exponents as ex
from . import star
from .errors import ResourceCapError, TheoremViolation, UsageError

# Ordinary powers blow up with the number of variables; these are the
# default caps on the power exponent r, overridable per call.
DEFAULT_R_CAPS = {3: 10, 4: 8, 5: 5}
DEFAULT_R_CAP_LARGE = 3

# Default desk-scale caps for the decomposition/saturation verifiers.
DECOMP_S_CAP = 5
DECOMP_L_CAP = 3


def irrelevant_ideal(s: int) -> ex.MonomialIdeal:
    """The ideal generated by all s variables."""
    return ex.variable_ideal(s, range(s))


def irrelevant_power(s: int, t: int) -> ex.MonomialIdeal:
    """The t-th power of the irrelevant ideal: all monomials of degree t."""
    if t < 0:
        raise UsageError(f"power must be nonnegative, got {t}")
    if t == 0:
        return ex.unit_ideal(s)
    return ex.MonomialIdeal(
        s, tuple(sorted(ex.monomials_of_degree(s, t), key=ex.grlex_key))
    )


@lru_cache(maxsize=None)
def _skeleton_power(s: int, c: int, r: int) -> ex.MonomialIdeal:
    return ex.power(star.skeleton_ideal(star.StarConfig(s, c)), r)


def _default_r_cap(s: int) -> int:
    return DEFAULT_R_CAPS.get(s, DEFAULT_R_CAP_LARGE if s > 5 else 10)


def rhs_decomposition(s: int, c: int, ell: int) -> ex.MonomialIdeal:
    """The conjectured decomposition of the ell-th power of the skeleton ideal.

    Intersects the ((j+1)*ell)-th symbolic powers of the codimension-(c+j)
    skeletons for j = 0..N-c (N = s-1), then the (N-c+2)*ell-th power of the
    irrelevant ideal.
    """
    if ell < 1:
        raise UsageError(f"need ell >= 1, got {ell}")
    n_top = s - 1
    terms = [
        star.symbolic_power(star.StarConfig(s, c + j), (j + 1) * ell)
        for j in range(n_top - c + 1)
    ]
    result = ex.intersect_many(terms)
    # the irrelevant factor: intersect with M^t via degree truncation
    return ex.truncate_to_degree(result, (n_top - c + 2) * ell)


def verify_power_decomposition(
    s: int, c: int, ell: int, s_cap: int = DECOMP_S_CAP, l_cap: int = DECOMP_L_CAP
) -> bool:
    """Whether the ell-th ordinary power equals its symbolic-power decomposition."""
    if s > s_cap or ell > l_cap:
        raise ResourceCapError(
            f"decomposition check capped at s <= {s_cap}, ell <= {l_cap}; got s={s}, ell={ell}"
        )
    lhs = _skeleton_power(s, c, ell)
    return ex.equals(lhs, rhs_decomposition(s, c, ell))


def verify_saturation(
    s: int, c: int, ell: int, s_cap: int = DECOMP_S_CAP, l_cap: int = DECOMP_L_CAP
) -> bool:
    """Whether saturating the ell-th power removes exactly the irrelevant factor."""
    if s > s_cap or ell > l_cap:
        raise ResourceCapError(
            f"saturation check capped at s <= {s_cap}, ell <= {l_cap}; got s={s}, ell={ell}"
        )
    lhs = ex.saturate(_skeleton_power(s, c, ell), irrelevant_ideal(s))
    n_top = s - 1
    rhs = ex.intersect_many(
        star.symbolic_power(star.StarConfig(s, c + j), (j + 1) * ell)
        for j in range(n_top - c + 1)
    )
    return ex.equals(lhs, rhs)


def symbolic_in_power(s: int, c: int, m: int, r: int, r_cap: int | None = None) -> bool:
    """Whether the m-th symbolic power is contained in the r-th ordinary power."""
    if m < 1 or r < 1:
        raise UsageError(f"need m, r >= 1, got m={m}, r={r}")
    cap = _default_r_cap(s) if r_cap is None else r_cap
    if r > cap:
        raise ResourceCapError(f"power exponent r={r} exceeds the cap {cap} for s={s}")
    return ex.contains(_skeleton_power(s, c, r), star.symbolic_power(star.StarConfig(s, c), m))


def criterion(n_dim: int, m: int, r: int) -> bool:
    """Exact non-containment test for the codimension N-1 skeleton on N+1 hyperplanes.

    True means the m-th symbolic power is NOT contained in the r-th ordinary
    power; the test is m/r < (3 - (2N-4)/((N-1)r)) * (N-1)/(N+1), evaluated
    in exact rational arithmetic.
    """
    if n_dim < 3:
        raise UsageError(f"the criterion needs N >= 3, got {n_dim}")
    if m < 1 or r < 1:
        raise UsageError(f"need m, r >= 1, got m={m}, r={r}")
    rhs = (3 - Fraction(2 * n_dim - 4, (n_dim - 1) * r)) * Fraction(n_dim - 1, n_dim + 1)
    return Fraction(m, r) < rhs


def rho_lower_bound(s: int, c: int) -> Fraction:
    """The general lower bound c(s-c+1)/s for the resurgence."""
    return Fraction(c * (s - c + 1), s)


def rho_exact(s: int, c: int) -> Fraction | None:
    """The exact resurgence when known: c = 1, c = N, or c = N-1 (N >= 3); else None."""
    star.StarConfig(s, c)  # validate ranges
    n_dim = s - 1
    if c == 1:
        return Fraction(1)  # principal ideal: symbolic powers equal ordinary powers
    if c == n_dim:
        return Fraction(2 * n_dim, n_dim + 1)
    if c == n_dim - 1 and n_dim >= 3:
        return Fraction(3 * (n_dim - 1), n_dim + 1)
    return None


@dataclass(frozen=True)
class ContainmentReport:
    """Grid of containment results with the empirical ratio supremum and known bounds."""

    s: int
    c: int
    m_max: int
    r_max: int
    entries: tuple[tuple[int, int, bool], ...]  # (m, r, contained)
    empirical_sup: Fraction | None
    lower_bound: Fraction
    rho: Fraction | None
    # cells where the rational criterion disagrees with the computed
    # containment (the criterion is sufficient for non-containment but misses
    # boundary cases where 3r = alpha(I^(m)) + 1; see the tests)
    criterion_mismatches: tuple[tuple[int, int], ...] = ()


def resurgence_scan(
    s: int, c: int, m_max: int, r_max: int, r_cap: int | None = None
) -> ContainmentReport:
    """Evaluate containment over the full grid m <= m_max, r <= r_max.

    For c = N-1 with N >= 3 every cell is also compared against the rational
    criterion and disagreements are recorded in the report.  The empirical
    supremum over non-contained cells never exceeds the exact resurgence
    when the latter is known; that is enforced.
    """
    if m_max < 1 or r_max < 1:
        raise UsageError(f"need m_max, r_max >= 1, got {m_max}, {r_max}")
    n_dim = s - 1
    entries = []
    mismatches = []
    sup: Fraction | None = None
    for m in range(1, m_max + 1):
        for r in range(1, r_max + 1):
            contained = symbolic_in_power(s, c, m, r, r_cap=r_cap)
            entries.append((m, r, contained))
            if not contained:
                ratio = Fraction(m, r)
                sup = ratio if sup is None or ratio > sup else sup
            if c == n_dim - 1 and n_dim >= 3 and contained == criterion(n_dim, m, r):
                mismatches.append((m, r))
    rho = rho_exact(s, c)
    if rho is not None and sup is not None and sup > rho:
        raise TheoremViolation(
            f"empirical supremum {sup} exceeds the exact resurgence {rho} for s={s}, c={c}"
        )
    return ContainmentReport(
        s=s,
        c=c,
        m_max=m_max,
        r_max=r_max,
        entries=tuple(entries),
        empirical_sup=sup,
        lower_bound=rho_lower_bound(s, c),
        rho=rho,
        criterion_mismatches=tuple(mismatches),
    )


__all__ = [
    "ContainmentReport",
    "DECOMP_L_CAP",
    "DECOMP_S_CAP",
    "criterion",
    "irrelevant_ideal",
    "irrelevant_power",
    "resurgence_scan",
    "rhs_decomposition",
    "rho_exact",
    "rho_lower_bound",
    "symbolic_in_power",
    "verify_power_decomposition",
    "verify_saturation",
]
