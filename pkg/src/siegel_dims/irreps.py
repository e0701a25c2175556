"""Character degrees of the nontrivial irreducible representations of GSp(4,F_p).

The seventeen degrees are polynomials in p.  Rows 13-15 carry a factor 1/2;
they are stored as the doubled integer polynomial and halved after an
explicit evenness check, so integrality stays a verified invariant rather
than an assumption.  Rows 16 and 17 belong to non-unitary representations
and are excluded from newform counting.

Note: the degrees are not always pairwise distinct -- rows 9 and 10 both
evaluate to 40 at p = 3.  Decomposition enumeration therefore works with
representation indices, never with bare degree values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .arithmetic import require_odd_prime
from .errors import IndexOutOfRangeError, IntegralityError


@dataclass(frozen=True)
class IrrepEntry:
    index: int
    formula: str
    unitary_relevant: bool
    halved: bool
    numerator: Callable[[int], int] = field(repr=False)

    def dim_at(self, p: int) -> int:
        require_odd_prime(p)
        n = self.numerator(p)
        if self.halved:
            if n % 2:
                raise IntegralityError(
                    f"row {self.index}: {self.formula} has odd numerator {n} at p={p}"
                )
            n //= 2
        return n


_ROWS: list[tuple[str, bool, Callable[[int], int]]] = [
    ("(p^2+1)(p+1)^2", False, lambda p: (p * p + 1) * (p + 1) ** 2),
    ("p(p^2+1)(p+1)", False, lambda p: p * (p * p + 1) * (p + 1)),
    ("p^2(p^2+1)", False, lambda p: p * p * (p * p + 1)),
    ("p^4", False, lambda p: p**4),
    ("p^4-1", False, lambda p: p**4 - 1),
    ("p^2(p^2-1)", False, lambda p: p * p * (p * p - 1)),
    ("(p^2-1)^2", False, lambda p: (p * p - 1) ** 2),
    ("p(p^2+1)(p-1)", False, lambda p: p * (p * p + 1) * (p - 1)),
    ("(p^2+1)(p-1)^2", False, lambda p: (p * p + 1) * (p - 1) ** 2),
    ("(p^2+1)(p+1)", False, lambda p: (p * p + 1) * (p + 1)),
    ("p(p^2+1)", False, lambda p: p * (p * p + 1)),
    ("(p^2+1)(p-1)", False, lambda p: (p * p + 1) * (p - 1)),
    ("p(p+1)^2/2", True, lambda p: p * (p + 1) ** 2),
    ("p(p^2+1)/2", True, lambda p: p * (p * p + 1)),
    ("p(p-1)^2/2", True, lambda p: p * (p - 1) ** 2),
    ("p^2+1", False, lambda p: p * p + 1),
    ("p^2-1", False, lambda p: p * p - 1),
]

NON_UNITARY_INDICES = (16, 17)

TABLE: tuple[IrrepEntry, ...] = tuple(
    IrrepEntry(i, formula, i not in NON_UNITARY_INDICES, halved, fn)
    for i, (formula, halved, fn) in enumerate(_ROWS, start=1)
)


def irrep_dim(n: int, p: int) -> int:
    """Degree of row n (1..17) evaluated at the odd prime p."""
    if not 1 <= n <= 17:
        raise IndexOutOfRangeError(f"representation index must be in 1..17, got {n}")
    return TABLE[n - 1].dim_at(p)


def unitary_dims(p: int) -> list[tuple[int, int]]:
    """(index, degree) for the unitary-relevant rows 1..15 at p, sorted by
    ascending degree with the index as tie-break."""
    require_odd_prime(p)
    pairs = [(e.index, e.dim_at(p)) for e in TABLE if e.unitary_relevant]
    pairs.sort(key=lambda t: (t[1], t[0]))
    return pairs


def table_at(p: int) -> list[dict]:
    """The full table evaluated at p, one dict per row (JSON-friendly)."""
    require_odd_prime(p)
    return [
        {
            "index": e.index,
            "formula": e.formula,
            "dimension": e.dim_at(p),
            "unitary_relevant": e.unitary_relevant,
        }
        for e in TABLE
    ]
