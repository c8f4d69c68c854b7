"""Published values for the quotient-singularity catalog.

Everything here is transcribed data: the page closed forms as stated, the
m/n tables used in the derivations, the support-genus table, and a list of
known disagreements between the two.  Entries of n written as strings are
affine in the central weight b, e.g. ``"b-3"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import FamilySpec

__all__ = [
    "PageClaim",
    "stated_page",
    "table_cycle",
    "expected_classification",
    "page_erratum",
    "SUPPORT_GENUS_ONE",
]


@dataclass(frozen=True)
class PageClaim:
    genus: int
    boundary_count: int | None  # None where no closed form is given


# stated N: offset added to b when b > 2, and the plain value when b = 2
_STATED_PLANAR = {
    "tetrahedral": {"i": 0, "ii": 1, "iii": 2},
    "octahedral": {"i": 0, "ii": 1, "iii": 2, "iv": 3},
    "icosahedral": {"i": 0, "ii": 1, "iii": 2, "iv": 1, "v": 2, "vi": 3, "vii": 2, "viii": 4},
}
_STATED_GENUS_ONE = {
    "tetrahedral": {"i": 1, "ii": 2, "iii": 3},
    "octahedral": {"i": 1, "ii": 2, "iii": 3, "iv": 4},
    "icosahedral": {"i": 1, "ii": 2, "iii": 2, "iv": 2, "v": 4, "vi": 4, "vii": 3, "viii": 5},
}


def _dihedral_k(chain: Sequence[int]) -> int | None:
    big = [i for i, bi in enumerate(chain, start=1) if bi > 2]
    return big[-1] if big else None


def stated_page(spec: FamilySpec) -> PageClaim:
    """Genus and N exactly as the closed-form statements give them."""
    if spec.family == "cyclic":
        r = len(spec.chain)
        return PageClaim(0, sum(spec.chain) - 2 * (r - 1))
    if spec.family == "dihedral":
        r = len(spec.chain) + 1
        if spec.b > 2:
            return PageClaim(0, sum(spec.chain) + spec.b - 2 * r + 1)
        k = _dihedral_k(spec.chain)
        if k is None:
            return PageClaim(1, 1)  # simple singularity: one-holed torus
        return PageClaim(1, sum(spec.chain[:k]) - 2 * k + 1)
    if spec.b > 2:
        return PageClaim(0, spec.b + _STATED_PLANAR[spec.family][spec.variant])
    return PageClaim(1, _STATED_GENUS_ONE[spec.family][spec.variant])


_TABLE_PLANAR = {
    ("tetrahedral", "i"): (1, 0, "b-3", 0, 1, 1),
    ("tetrahedral", "ii"): (2, "b-3", 0, 1, 1),
    ("tetrahedral", "iii"): (2, "b-3", 2, 1),
    ("octahedral", "i"): (1, 0, 0, "b-3", 0, 1, 1),
    ("octahedral", "ii"): (1, 0, 0, "b-3", 2, 1),
    ("octahedral", "iii"): (3, "b-3", 0, 1, 1),
    ("octahedral", "iv"): (3, "b-3", 2, 1),
    ("icosahedral", "i"): (1, 0, 0, 0, "b-3", 0, 1, 1),
    ("icosahedral", "ii"): (2, 0, "b-3", 0, 1, 1),
    ("icosahedral", "iii"): (1, 0, 0, 0, "b-3", 2, 1),
    ("icosahedral", "iv"): (1, 1, "b-3", 0, 1, 1),
    ("icosahedral", "v"): (2, 0, "b-3", 2, 1),
    ("icosahedral", "vi"): (4, "b-3", 0, 1, 1),
    ("icosahedral", "vii"): (1, 1, "b-3", 2, 1),
    ("icosahedral", "viii"): (4, "b-3", 2, 1),
}

_TABLE_GENUS_ONE = {
    ("tetrahedral", "i"): ((1, 2, 3, 2, 1, 2), (0, 0, 0, 0, 0, 1)),
    ("tetrahedral", "ii"): ((1, 2, 2, 1, 1), (1, 0, 1, 0, 0)),
    ("tetrahedral", "iii"): ((1, 2, 1, 1), (1, 1, 1, 0)),
    ("octahedral", "i"): ((1, 2, 3, 4, 3, 2, 2), (0, 0, 0, 0, 0, 1, 0)),
    ("octahedral", "ii"): ((1, 2, 2, 2, 1, 1), (0, 1, 0, 0, 1, 0)),
    ("octahedral", "iii"): ((1, 2, 2, 1, 1), (2, 0, 1, 0, 0)),
    ("octahedral", "iv"): ((1, 2, 1, 1), (2, 1, 1, 0)),
    ("icosahedral", "i"): ((2, 3, 4, 5, 6, 4, 2, 3), (1, 0, 0, 0, 0, 0, 0, 0)),
    ("icosahedral", "ii"): ((1, 2, 3, 2, 1, 2), (1, 0, 0, 0, 0, 1)),
    ("icosahedral", "iii"): ((1, 2, 2, 2, 2, 1, 1), (0, 1, 0, 0, 0, 1, 0)),
    ("icosahedral", "iv"): ((1, 1, 2, 2, 1, 1), (1, 0, 0, 1, 0, 0)),
    ("icosahedral", "v"): ((1, 2, 2, 1, 1), (1, 1, 0, 1, 0)),
    ("icosahedral", "vi"): ((1, 2, 2, 1, 1), (3, 0, 1, 0, 0)),
    ("icosahedral", "vii"): ((1, 1, 2, 1, 1), (1, 0, 1, 1, 0)),
    ("icosahedral", "viii"): ((1, 2, 1, 1), (3, 1, 1, 0)),
}


def _eval(entry: int | str, b: int) -> int:
    if isinstance(entry, int):
        return entry
    assert entry == "b-3"
    return b - 3


def table_cycle(spec: FamilySpec) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """(m, n) as tabulated in the derivations, or None where none is given."""
    if spec.family == "cyclic":
        chain = spec.chain
        r = len(chain)
        if r == 1:
            return (1,), (chain[0],)
        n = (chain[0] - 1,) + tuple(bi - 2 for bi in chain[1:-1]) + (chain[-1] - 1,)
        return (1,) * r, n
    if spec.family == "dihedral":
        chain, b = spec.chain, spec.b
        r = len(chain) + 1
        if b > 2:
            n = (chain[0] - 1,) + tuple(bi - 2 for bi in chain[1:]) + (b - 3, 1, 1)
            return (1,) * len(n), n
        k = _dihedral_k(chain)
        if k is None:
            return None
        if r == 2:
            return (1, 2, 1, 1), (chain[0] - 2, 1, 0, 0)
        m = (1,) * k + (2,) * (r - k) + (1, 1)
        if k == 1:
            head: tuple[int, ...] = (chain[0] - 2,)
        else:
            head = (chain[0] - 1,) + tuple(bi - 2 for bi in chain[1 : k - 1]) + (chain[k - 1] - 3,)
        n = head + (1,) + (0,) * (r - k + 1)
        return m, n
    key = (spec.family, spec.variant)
    if spec.b > 2:
        n = tuple(_eval(x, spec.b) for x in _TABLE_PLANAR[key])
        return (1,) * len(n), n
    return _TABLE_GENUS_ONE[key]


SUPPORT_GENUS_ONE = {("tetrahedral", "i"), ("octahedral", "i"), ("icosahedral", "i"), ("icosahedral", "ii")}


def expected_classification(spec: FamilySpec) -> str:
    if spec.family == "cyclic" or spec.b > 2:
        return "support_genus_0"
    if (spec.family, spec.variant) in SUPPORT_GENUS_ONE:
        return "support_genus_1"
    return "support_genus_at_most_1"


def page_erratum(spec: FamilySpec) -> str | None:
    """Why the stated N disagrees with the tabulated n, if it does."""
    if spec.family == "dihedral" and spec.b > 2:
        return "dihedral b>2: stated N = sum+b-2r+1, tabulated n sums to sum+b-2r+2"
    if (spec.family, spec.variant) == ("icosahedral", "iii") and spec.b > 2:
        return "icosahedral (iii) b>2: stated N = b+2, tabulated n sums to b+1"
    if (spec.family, spec.variant) == ("icosahedral", "v") and spec.b == 2:
        return "icosahedral (v) b=2: stated N = 4, tabulated n sums to 3"
    return None

