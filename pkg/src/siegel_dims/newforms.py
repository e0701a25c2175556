"""Newform dimension bounds and Diophantine decomposition of cusp form spaces.

A cuspidal automorphic representation contributing to S_k(Gamma(p)) occupies
a block of the space whose size is the degree of a nontrivial irreducible
representation of GSp(4,F_p), so the multiplicities (c_1..c_15) of the
unitary-relevant degrees must solve sum c_n * a_n(p) = dim S_k(Gamma(p)).
``decompose`` enumerates every solution of that equation; ``bounds_prime``
and ``bounds_squarefree`` give the closed-form lower/upper bounds on the
newform dimension; ``analyze_level`` packages dimension, bounds, solutions
and (for weight 4, level 3) the local-component identification into one
report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arithmetic import SquareFreeLevel, require_odd_prime
from .dimensions import (
    _require_weight,
    dim_gamma0,
    dim_paramodular_weight4,
    dim_principal,
    dim_principal_prime,
)
from .errors import InputError, IntegralityError, TooManySolutionsError
from .irreps import TABLE, irrep_dim

# Enumeration is only meaningful for desk-scale targets; these caps abort
# pathological requests with an explicit error instead of running forever.
DEFAULT_SOLUTION_CAP = 10**6
MAX_ENUMERATION_TARGET = 10**7


@dataclass(frozen=True)
class BoundPair:
    """Exact rational lower/upper bounds; never rounded internally."""

    lower: Fraction
    upper: Fraction

    def integer_envelope(self) -> tuple[int, int]:
        """(ceil(lower), floor(upper)), for callers who want integers."""
        return math.ceil(self.lower), math.floor(self.upper)


def bounds_prime(k: int, p: int) -> BoundPair:
    """Newform dimension bounds for S_k(Gamma(p)), k >= 4, odd prime p.

    lower = ((2k^3-9k^2+13k-6)p^3 + (180-120k)p + 360) * p(p-1)^2 / 34560,
    which equals dim S_k(Gamma(p)) / a_1(p) (checked on every call).  The
    upper bound is (6k^3-27k^2-k+82)/12 when p = 3 and
    numerator * p(p^4-1) / 17280 otherwise, exactly as published.
    """
    _require_weight(k, 4)
    require_odd_prime(p)
    poly = (2 * k**3 - 9 * k**2 + 13 * k - 6) * p**3 + (180 - 120 * k) * p + 360
    lower = Fraction(poly * p * (p - 1) ** 2, 34560)
    if p == 3:
        upper = Fraction(6 * k**3 - 27 * k**2 - k + 82, 12)
    else:
        upper = Fraction(poly * p * (p**4 - 1), 17280)
    if lower * irrep_dim(1, p) != dim_principal_prime(k, p):
        raise IntegralityError(
            f"lower bound at (k={k}, p={p}) violates the dim / a_1 identity"
        )
    return BoundPair(lower, upper)


def bounds_squarefree(k: int, level: SquareFreeLevel) -> BoundPair:
    """Newform dimension bounds for S_k(Gamma(N)), odd square-free N.

    Both bounds share the full Gamma(N) dimension as numerator.  The lower
    divisor is sum a_1(p_i); the upper divisor is 6 + sum_{i>=2} (p_i^2 - 1)
    when 3 | N (the sorted-prime convention makes p_1 = 3 in that case) and
    sum (p_i^2 - 1) when 3 does not divide N.
    """
    _require_weight(k, 4)
    dim = dim_principal(k, level)
    primes = level.primes
    lower_div = sum((p * p + 1) * (p + 1) ** 2 for p in primes)
    if primes[0] == 3:
        upper_div = 6 + sum(p * p - 1 for p in primes[1:])
    else:
        upper_div = sum(p * p - 1 for p in primes)
    return BoundPair(Fraction(dim, lower_div), Fraction(dim, upper_div))


# --- exhaustive decomposition ------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """One solution of sum c_n * a_n(p) = target.

    ``multiplicities`` maps every index in play (1..15, or 1..17 when the
    non-unitary rows were included) to its multiplicity, zeros included.  The
    defining equation is re-checked on construction.
    """

    multiplicities: dict[int, int]
    prime: int
    target: int

    def __post_init__(self):
        total = 0
        for n, c in self.multiplicities.items():
            if c < 0:
                raise InputError(f"multiplicity c_{n} = {c} is negative")
            total += c * irrep_dim(n, self.prime)
        if total != self.target:
            raise InputError(
                f"multiplicities sum to {total}, not the target {self.target}"
            )

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(self.multiplicities[n] for n in sorted(self.multiplicities))

    @property
    def total_multiplicity(self) -> int:
        return sum(self.multiplicities.values())

    def nonzero(self) -> dict[int, int]:
        return {n: c for n, c in self.multiplicities.items() if c}


def _active_dims(p: int, include_nonunitary: bool) -> list[tuple[int, int]]:
    entries = [e for e in TABLE if include_nonunitary or e.unitary_relevant]
    return [(e.index, e.dim_at(p)) for e in entries]


def _check_target(D: int) -> int:
    if D < 0:
        raise InputError(f"target must be non-negative, got {D}")
    if D > MAX_ENUMERATION_TARGET:
        raise TooManySolutionsError(
            f"target {D} exceeds the enumeration limit {MAX_ENUMERATION_TARGET}"
        )
    return D


def count_decompositions(p: int, D: int, include_nonunitary: bool = False) -> int:
    """Number of solutions of sum c_n * a_n(p) = D, without enumerating them.

    Coin-change style dynamic program, one pass per representation index, so
    indices that share a degree (rows 9 and 10 at p = 3) count separately.
    """
    require_odd_prime(p)
    _check_target(D)
    counts = [0] * (D + 1)
    counts[0] = 1
    for _, d in _active_dims(p, include_nonunitary):
        for s in range(d, D + 1):
            counts[s] += counts[s - d]
    return counts[D]


def decompose(
    p: int,
    D: int,
    include_nonunitary: bool = False,
    max_solutions: int = DEFAULT_SOLUTION_CAP,
) -> list[Decomposition]:
    """All solutions of sum c_n * a_n(p) = D, in lexicographic order of
    (c_1, c_2, ...).

    The solution count is computed first; if it exceeds ``max_solutions`` a
    :class:`TooManySolutionsError` carrying the exact count is raised before
    any enumeration starts.  The search itself walks indices in descending
    degree order and prunes with per-suffix reachability bitsets, so only
    branches leading to at least one solution are visited.
    """
    count = count_decompositions(p, D, include_nonunitary)
    if count > max_solutions:
        raise TooManySolutionsError(
            f"{count} solutions exceed the cap of {max_solutions}", count=count
        )

    indexed = _active_dims(p, include_nonunitary)
    order = sorted(indexed, key=lambda t: -t[1])
    n = len(order)

    # reachable[j] = bitset of sums attainable with the degrees order[j:]
    reachable = [0] * (n + 1)
    reachable[n] = 1
    mask = (1 << (D + 1)) - 1
    for j in range(n - 1, -1, -1):
        r = reachable[j + 1]
        shift = order[j][1]
        while shift <= D:
            r |= r << shift
            shift <<= 1
        reachable[j] = r & mask

    vectors: list[tuple[int, ...]] = []
    current = {idx: 0 for idx, _ in indexed}

    def walk(j: int, remaining: int) -> None:
        if j == n:
            vectors.append(tuple(current[idx] for idx, _ in indexed))
            return
        idx, d = order[j]
        suffix = reachable[j + 1]
        c = 0
        while c * d <= remaining:
            rest = remaining - c * d
            if (suffix >> rest) & 1:
                current[idx] = c
                walk(j + 1, rest)
            c += 1
        current[idx] = 0

    if (reachable[0] >> D) & 1:
        walk(0, D)
    if len(vectors) != count:
        raise IntegralityError(
            f"enumeration found {len(vectors)} solutions but the count is {count}"
        )
    vectors.sort()
    indices = [idx for idx, _ in indexed]
    return [
        Decomposition(dict(zip(indices, vec)), p, D) for vec in vectors
    ]


# --- level analysis ----------------------------------------------------------

TAU_COMPONENT = "tau(T, nu^(-1/2) sigma)"
L_COMPONENT = "L(nu^(1/2) St(GL2), nu^(-1/2) sigma)"

# Fixed-vector facts for the two constituents of degree a_14: (label,
# has a Gamma_0(p)-fixed vector, has a paramodular-fixed vector).  These are
# the only local-component facts the analysis can decide, and only the
# weight-4 level-3 case supplies the tabulated dimensions that use them.
A14_CANDIDATES = (
    (TAU_COMPONENT, True, False),
    (L_COMPONENT, False, True),
)


@dataclass
class AnalysisReport:
    """Everything ``analyze_level`` can determine about S_k(Gamma(p))."""

    weight: int
    prime: int
    dimension: int
    bounds: BoundPair
    solution_count: int | None
    solutions: list[Decomposition] | None
    enumeration_note: str | None = None
    newform_dimension: int | None = None
    unique_solution_note: str | None = None
    local_component: str | None = None
    local_component_candidates: tuple[str, ...] | None = None
    local_component_evidence: dict | None = None
    conclusion: str | None = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "weight": self.weight,
            "prime": self.prime,
            "dimension": self.dimension,
            "lower_bound": {
                "numerator": self.bounds.lower.numerator,
                "denominator": self.bounds.lower.denominator,
            },
            "upper_bound": {
                "numerator": self.bounds.upper.numerator,
                "denominator": self.bounds.upper.denominator,
            },
            "solution_count": self.solution_count,
        }
        if self.solutions is not None:
            out["solutions"] = [
                {str(n): c for n, c in sol.multiplicities.items()}
                for sol in self.solutions
            ]
        for key in (
            "enumeration_note",
            "newform_dimension",
            "unique_solution_note",
            "local_component",
            "local_component_evidence",
            "conclusion",
        ):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.local_component_candidates is not None:
            out["local_component_candidates"] = list(self.local_component_candidates)
        return out

    def to_text(self) -> str:
        lines = [
            f"weight {self.weight}, level {self.prime}",
            f"dim S_{self.weight}(Gamma({self.prime})) = {self.dimension}",
            f"newform dimension bounds: {self.bounds.lower} <= dim <= {self.bounds.upper}",
        ]
        if self.solution_count is None:
            lines.append(f"decompositions: {self.enumeration_note}")
        else:
            lines.append(f"decompositions of {self.dimension}: {self.solution_count}")
            if self.solutions is None:
                lines.append(f"  ({self.enumeration_note})")
            else:
                for sol in self.solutions:
                    nz = sol.nonzero()
                    body = " ".join(f"c{n}={c}" for n, c in sorted(nz.items())) or "trivial"
                    lines.append(f"  {body}")
        if self.newform_dimension is not None:
            lines.append(f"newform dimension: {self.newform_dimension}")
        if self.unique_solution_note:
            lines.append(self.unique_solution_note)
        if self.local_component is not None:
            lines.append(f"local component at p={self.prime}: {self.local_component}")
        if self.conclusion:
            lines.append(self.conclusion)
        return "\n".join(lines)


def analyze_level(
    k: int,
    p: int,
    max_solutions: int = DEFAULT_SOLUTION_CAP,
) -> AnalysisReport:
    """Dimension, bounds, and decomposition analysis of S_k(Gamma(p)).

    When the decomposition is unique the newform dimension sum(c_n) is
    derived.  For (k, p) = (4, 3) -- the one case the tabulated Gamma_0 and
    paramodular dimensions settle -- the local component is identified among
    the two degree-a_14 candidates via their fixed-vector behaviour.
    """
    dimension = dim_principal_prime(k, p)
    bounds = bounds_prime(k, p)
    report = AnalysisReport(
        weight=k,
        prime=p,
        dimension=dimension,
        bounds=bounds,
        solution_count=None,
        solutions=None,
    )

    if dimension > MAX_ENUMERATION_TARGET:
        report.enumeration_note = (
            f"not enumerated: dimension {dimension} exceeds the "
            f"enumeration limit {MAX_ENUMERATION_TARGET}"
        )
        return report

    report.solution_count = count_decompositions(p, dimension)
    if report.solution_count > max_solutions:
        report.enumeration_note = (
            f"solution list omitted: {report.solution_count} solutions exceed "
            f"the cap of {max_solutions}"
        )
    else:
        report.solutions = decompose(p, dimension, max_solutions=max_solutions)

    if report.solution_count == 1:
        only = report.solutions[0]
        report.newform_dimension = only.total_multiplicity
        noun = (
            "a single automorphic representation accounts"
            if report.newform_dimension == 1
            else f"{report.newform_dimension} automorphic representations account"
        )
        report.unique_solution_note = (
            f"the decomposition is unique, so {noun} for the whole space"
        )

        if (k, p) == (4, 3) and only.nonzero() == {14: 1}:
            gamma0_dim = dim_gamma0(4, 3)
            paramodular_dim = dim_paramodular_weight4(3)
            survivors = [
                label
                for label, has_gamma0, has_paramodular in A14_CANDIDATES
                if has_gamma0 == (gamma0_dim > 0)
                and has_paramodular == (paramodular_dim > 0)
            ]
            report.local_component_candidates = tuple(lbl for lbl, _, _ in A14_CANDIDATES)
            report.local_component_evidence = {
                "dim S_4(Gamma_0(3))": gamma0_dim,
                "dim S_4(K(3))": paramodular_dim,
            }
            if len(survivors) == 1:
                report.local_component = survivors[0]
                report.conclusion = (
                    f"local component {survivors[0]}, a Saito-Kurokawa lifting: "
                    "every cusp form of weight 4 and level 3 is a Saito-Kurokawa lift"
                )
    return report
