"""Skeleton ideals of coordinate-hyperplane arrangements and their symbolic powers.

The configuration of s coordinate hyperplanes in P^{s-1} has, for each
codimension c, a skeleton: the union of all codimension-c coordinate
subspaces.  Its ideal is generated by the squarefree monomials of degree
s-c+1, and the ell-th symbolic power is generated by the monomials whose c
smallest exponents sum to at least ell.

Everything here is 0-based: variables and complex vertices are indexed
0..s-1.  Operations are pure and outputs canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import exponents as ex
from .errors import ResourceCapError, UsageError

# Cap on the number of candidate generator shapes scanned by enumeration ops.
DEFAULT_ENUM_CAP = 5_000_000

# is_matroid and Stanley-Reisner extraction scan all vertex subsets.
MATROID_VERTEX_CAP = 16


@dataclass(frozen=True)
class StarConfig:
    """Parameters of a skeleton in the monomial model P^{s-1}.

    s is the number of hyperplanes (= number of variables), c the codimension.
    ambient, when given, is a reported ambient dimension n with c <= n <= s-1;
    it affects reporting only, never computation (the initial degree of every
    symbolic power is the same in the monomial model).
    """

    s: int
    c: int
    ambient: int | None = None

    def __post_init__(self):
        if self.s < 2:
            raise UsageError(f"need at least 2 hyperplanes, got s={self.s}")
        if not 1 <= self.c <= self.s - 1:
            raise UsageError(f"codimension must satisfy 1 <= c <= s-1, got c={self.c}, s={self.s}")
        if self.ambient is not None and not self.c <= self.ambient <= self.s - 1:
            raise UsageError(f"ambient dimension must satisfy c <= n <= s-1, got n={self.ambient}")


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets (an antichain of vertex subsets)."""

    vertex_count: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for f in self.facets:
            if any(not 0 <= v < self.vertex_count for v in f):
                raise UsageError(f"facet {f} has a vertex outside 0..{self.vertex_count - 1}")
            if tuple(sorted(set(f))) != f:
                raise UsageError(f"facet {f} is not a sorted duplicate-free tuple")

    def is_face(self, subset: frozenset[int]) -> bool:
        return any(subset <= set(f) for f in self.facets)


def make_complex(vertex_count: int, facets) -> SimplicialComplex:
    """Canonicalize facet sets (drop faces contained in other faces, sort)."""
    sets = {frozenset(f) for f in facets}
    maximal = [f for f in sets if not any(f < g for g in sets)]
    canon = tuple(sorted(tuple(sorted(f)) for f in maximal))
    return SimplicialComplex(vertex_count, canon)


def skeleton_ideal(cfg: StarConfig) -> ex.MonomialIdeal:
    """The ideal of the codimension-c skeleton: all squarefree monomials of degree s-c+1."""
    s, c = cfg.s, cfg.c
    gens = []
    for support in itertools.combinations(range(s), s - c + 1):
        e = [0] * s
        for i in support:
            e[i] = 1
        gens.append(tuple(e))
    return ex.MonomialIdeal(s, tuple(sorted(gens, key=ex.grlex_key)))


def symbolic_member(mu: ex.Exponent, cfg: StarConfig, ell: int) -> bool:
    """True iff mu lies in the ell-th symbolic power of the skeleton ideal.

    Membership is a threshold: the sum of the c smallest exponents must be at
    least ell (equivalently, mu vanishes to order >= ell on every component).
    """
    if ell <= 0:
        raise UsageError(f"symbolic power exponent must be >= 1, got {ell}")
    if len(mu) != cfg.s:
        raise UsageError(f"arity mismatch: monomial has {len(mu)} entries, config has s={cfg.s}")
    if any(e < 0 for e in mu):
        raise UsageError(f"exponent tuple {mu} has a negative entry")
    return sum(sorted(mu)[: cfg.c]) >= ell


@lru_cache(maxsize=None)
def symbolic_power(cfg: StarConfig, ell: int, enum_cap: int = DEFAULT_ENUM_CAP) -> ex.MonomialIdeal:
    """Minimal generating antichain of the ell-th symbolic power.

    Minimal generators have every exponent <= ell, so the search space is
    {0..ell}^s.  Membership and minimality depend only on the multiset of
    exponents, so the scan runs over nondecreasing tuples and expands
    permutations of the survivors.
    """
    if ell <= 0:
        raise UsageError(f"symbolic power exponent must be >= 1, got {ell}")
    s, c = cfg.s, cfg.c
    shapes = comb(ell + s, s)
    if shapes > enum_cap:
        raise ResourceCapError(
            f"symbolic power enumeration needs {shapes} candidate shapes, cap is {enum_cap}"
        )
    gens: list[ex.Exponent] = []
    for t in itertools.combinations_with_replacement(range(ell + 1), s):
        if sum(t[:c]) < ell:  # t is nondecreasing: first c entries are the c smallest
            continue
        minimal = True
        for v in sorted(set(t)):
            if v == 0:
                continue
            # decrement the first copy of v; the tuple stays nondecreasing
            i = t.index(v)
            u = t[:i] + (v - 1,) + t[i + 1 :]
            if sum(u[:c]) >= ell:
                minimal = False
                break
        if minimal:
            gens.extend(set(itertools.permutations(t)))
    return ex.MonomialIdeal(s, tuple(sorted(gens, key=ex.grlex_key)))


def symbolic_power_by_intersection(cfg: StarConfig, ell: int) -> ex.MonomialIdeal:
    """Cross-check oracle: intersect the ell-th powers of all component primes."""
    if ell <= 0:
        raise UsageError(f"symbolic power exponent must be >= 1, got {ell}")
    s, c = cfg.s, cfg.c
    terms = (
        ex.power(ex.variable_ideal(s, subset), ell)
        for subset in itertools.combinations(range(s), c)
    )
    return ex.intersect_many(terms)


def alpha_symbolic_formula(cfg: StarConfig, ell: int) -> int:
    """Closed form for the initial degree of the ell-th symbolic power.

    Writing ell = q*c + r with 1 <= r <= c, the value is (q+1)*s - c + r.
    """
    if ell <= 0:
        raise UsageError(f"symbolic power exponent must be >= 1, got {ell}")
    q, r = divmod(ell - 1, cfg.c)
    r += 1
    return (q + 1) * cfg.s - cfg.c + r


def omega_symbolic_formula(cfg: StarConfig, ell: int) -> int:
    """Closed form for the top generator degree: ell*(s-c+1), the initial degree of the ordinary power."""
    if ell <= 0:
        raise UsageError(f"symbolic power exponent must be >= 1, got {ell}")
    return ell * (cfg.s - cfg.c + 1)


def check_lemma_contain(cfg: StarConfig) -> bool:
    """Whether the codimension-(c-1) skeleton ideal sits inside the symbolic square."""
    if cfg.c < 2:
        raise UsageError("the containment check needs c >= 2")
    lower = skeleton_ideal(StarConfig(cfg.s, cfg.c - 1))
    return ex.contains(symbolic_power(cfg, 2), lower)


def skeleton_complex(cfg: StarConfig) -> SimplicialComplex:
    """The complete complex whose facets are all (s-c)-subsets of the s vertices."""
    facets = tuple(itertools.combinations(range(cfg.s), cfg.s - cfg.c))
    return SimplicialComplex(cfg.s, facets)


def is_matroid(complex_: SimplicialComplex) -> bool:
    """True iff every vertex-subset restriction of the complex is pure.

    Scans all 2^v subsets; guarded by MATROID_VERTEX_CAP.
    """
    v = complex_.vertex_count
    if v > MATROID_VERTEX_CAP:
        raise ResourceCapError(f"matroid check scans 2^{v} subsets; cap is {MATROID_VERTEX_CAP} vertices")
    facet_sets = [frozenset(f) for f in complex_.facets]
    vertices = list(range(v))
    for k in range(v + 1):
        for w in itertools.combinations(vertices, k):
            ws = frozenset(w)
            restricted = {f & ws for f in facet_sets}
            maximal = [f for f in restricted if not any(f < g for g in restricted)]
            if len({len(f) for f in maximal}) > 1:
                return False
    return True


def stanley_reisner_ideal(complex_: SimplicialComplex) -> ex.MonomialIdeal:
    """The Stanley-Reisner ideal: squarefree monomials of the minimal non-faces."""
    v = complex_.vertex_count
    if v > MATROID_VERTEX_CAP:
        raise ResourceCapError(f"non-face scan is exponential; cap is {MATROID_VERTEX_CAP} vertices")
    gens = []
    for k in range(1, v + 1):
        for w in itertools.combinations(range(v), k):
            ws = frozenset(w)
            if complex_.is_face(ws):
                continue
            if all(complex_.is_face(ws - {x}) for x in w):
                e = [0] * v
                for i in w:
                    e[i] = 1
                gens.append(tuple(e))
    return ex.minimalize(v, gens)


def _wk_thresholds(s: int, ell: int, k: int) -> dict[tuple[int, int], int]:
    """Pair exponents for W_k: ell+2 inside the first k variables, ell+1 across, ell outside."""
    a = {}
    for i, j in itertools.combinations(range(s), 2):
        if j < k:
            a[(i, j)] = ell + 2
        elif i < k:
            a[(i, j)] = ell + 1
        else:
            a[(i, j)] = ell
    return a


def wk_ideal(s: int, ell: int, k: int, enum_cap: int = DEFAULT_ENUM_CAP) -> ex.MonomialIdeal:
    """The intersection of pair-prime powers interpolating between symbolic powers.

    W_0 is the ell-th symbolic power of the codimension-2 skeleton and W_s the
    (ell+2)-nd; step k raises the exponent of every pair meeting variable k-1.
    """
    if s < 3:
        raise UsageError(f"codimension-2 configurations need s >= 3, got {s}")
    if ell < 1:
        raise UsageError(f"need ell >= 1, got {ell}")
    if not 0 <= k <= s:
        raise UsageError(f"need 0 <= k <= s, got k={k}")
    thresholds = _wk_thresholds(s, ell, k)
    box = ell + 3
    if box**s > enum_cap:
        raise ResourceCapError(f"W_k enumeration needs {box}^{s} points, cap is {enum_cap}")

    pairs = list(thresholds.items())

    def is_member(t: tuple[int, ...]) -> bool:
        return all(t[i] + t[j] >= a for (i, j), a in pairs)

    gens = []
    for t in itertools.product(range(box), repeat=s):
        if not is_member(t):
            continue
        minimal = True
        for v in range(s):
            if t[v] == 0:
                continue
            u = t[:v] + (t[v] - 1,) + t[v + 1 :]
            if is_member(u):
                minimal = False
                break
        if minimal:
            gens.append(t)
    return ex.MonomialIdeal(s, tuple(sorted(gens, key=ex.grlex_key)))


def wk_degree(s: int, ell: int, k: int) -> int:
    """Degree of W_k as a codimension-2 scheme: sum of binom(a+1, 2) over its pair exponents."""
    return sum(comb(a + 1, 2) for a in _wk_thresholds(s, ell, k).values())


def wk_link_monomial(s: int, ell: int, k: int) -> ex.Exponent:
    """The hypersurface generator added at step k: exponent ell+2 on variables < k, 0 at k, ell+1 beyond."""
    return tuple((ell + 2 if v < k else 0 if v == k else ell + 1) for v in range(s))


def wk_step_check(s: int, ell: int, k: int) -> bool:
    """Verify one basic-double-link step of the W chain.

    Checks, as monomial-ideal equality, that W_{k+1} is generated by
    x_k * W_k together with the single hypersurface monomial, and that the
    degree grows by k*(ell+2) + (s-k-1)*(ell+1).
    """
    if not 0 <= k < s:
        raise UsageError(f"need 0 <= k < s, got k={k}")
    current = wk_ideal(s, ell, k)
    nxt = wk_ideal(s, ell, k + 1)
    xk = ex.variable_ideal(s, [k])
    link = ex.MonomialIdeal(s, (wk_link_monomial(s, ell, k),))
    built = ex.ideal_sum(ex.multiply(xk, current), link)
    if not ex.equals(nxt, built):
        return False
    return wk_degree(s, ell, k + 1) == wk_degree(s, ell, k) + k * (ell + 2) + (s - k - 1) * (ell + 1)


__all__ = [
    "DEFAULT_ENUM_CAP",
    "MATROID_VERTEX_CAP",
    "SimplicialComplex",
    "StarConfig",
    "alpha_symbolic_formula",
    "check_lemma_contain",
    "is_matroid",
    "make_complex",
    "omega_symbolic_formula",
    "skeleton_complex",
    "skeleton_ideal",
    "stanley_reisner_ideal",
    "symbolic_member",
    "symbolic_power",
    "symbolic_power_by_intersection",
    "wk_degree",
    "wk_ideal",
    "wk_link_monomial",
    "wk_step_check",
]
