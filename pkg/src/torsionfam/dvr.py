"""Local analysis of a family at a degeneration point.

The ring of rational functions regular at t0 is a discrete valuation
ring; its modules decompose into a free part and a torsion part
(a direct sum of pieces O/(t - t0)^a).  Diagonalizing a matrix over
that ring by valuation-pivoted row/column reduction yields its
elementary divisors; the recorded data is the sorted multiset of their
valuations plus the free rank of the cokernel.

For a generically acyclic complex the homology of the localized
complex is all torsion, and its dimension in degree i is the sum of
the divisor valuations of the boundary d_{i+1}: splitting the complex
over the DVR into two-term pieces O --(t-t0)^a--> O shows each piece
contributes its full valuation to the torsion of the degree below its
top, and nothing else survives.  (The correction term one might expect
from d_i vanishes under generic acyclicity.)  Tests pin this
bookkeeping against a minor-enumeration oracle and against rank-drop
counts of the evaluated complex.

The deformation report cross-checks the two routes to the singularity
exponent: the valuation of the torsion function must equal the Euler
number of the local torsion modules (alternating sum over homological
degree).  That equality is what the ``FT-cal-1`` sign convention is
calibrated to; a violation is a hard error, not a warning.

Duality, when supplied, is an explicit chain isomorphism from the
complex to its conjugate-transpose dual, invertible over the local
ring at t0.  It certifies the symmetry dims[i] == dims[m-1-i], whose
middle value governs the parity of the sign flip.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .complexes import (
    BasedChainComplex,
    dual_complex,
    is_generically_acyclic,
    torsion,
)
from .linalg import Matrix
from .ratfunc import RatFunc
from .scalars import GaussRat

__all__ = [
    "DivisorProfile",
    "TorsionModuleSummary",
    "DeformationReport",
    "snf_local",
    "torsion_modules",
    "euler_number",
    "singularity_exponent",
    "analyze",
    "check_duality_pairing",
]

_ZERO = RatFunc.zero()
_ONE = RatFunc.one()


@dataclass(frozen=True)
class DivisorProfile:
    """Elementary divisor valuations (ascending) and cokernel free rank."""

    valuations: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        vals = tuple(int(v) for v in self.valuations)
        if any(v < 0 for v in vals):
            raise ValueError("divisor valuations are non-negative")
        if list(vals) != sorted(vals):
            raise ValueError("divisor valuations must be sorted ascending")
        if self.free_rank < 0:
            raise ValueError("free rank is non-negative")
        object.__setattr__(self, "valuations", vals)

    @property
    def rank(self) -> int:
        """Rank over the fraction field."""
        return len(self.valuations)

    def total_valuation(self) -> int:
        return sum(self.valuations)

    def positive_count(self) -> int:
        """Number of divisors that actually vanish at the center."""
        return sum(1 for v in self.valuations if v > 0)


@dataclass(frozen=True)
class TorsionModuleSummary:
    """dim over the scalar field of the torsion of homology, by degree."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if any(d < 0 for d in dims):
            raise ValueError("torsion dimensions are non-negative")
        object.__setattr__(self, "dims", dims)

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 1

    def dims_cohomological(self) -> tuple[int, ...]:
        """Degree-reversed view (index i holds the degree m-i entry)."""
        return tuple(reversed(self.dims))

    def middle_dim(self) -> Optional[int]:
        """dim in the self-paired degree (m-1)/2, for odd top degree m."""
        m = self.top_degree
        if m % 2 == 0:
            return None
        return self.dims[(m - 1) // 2]


@dataclass(frozen=True)
class DeformationReport:
    """Per-degeneration-point summary of a family complex."""

    t0: GaussRat
    nu: int
    chi: int
    dims: TorsionModuleSummary
    middle_dim_parity: Optional[int]
    sign_flip: bool
    duality_ok: Optional[bool] = None

    def __post_init__(self):
        if self.chi != euler_number(self.dims):
            raise ValueError("report chi disagrees with its dims")
        if self.sign_flip != (self.nu % 2 == 1):
            raise ValueError("sign_flip must equal the parity of nu")
        mid = self.dims.middle_dim()
        want = None if mid is None else mid % 2
        if self.middle_dim_parity != want:
            raise ValueError("middle_dim_parity disagrees with dims")


def _require_local(mat: Matrix, t0: GaussRat) -> None:
    for e in mat.entries():
        if not e.is_regular_at(t0):
            raise ValueError("matrix not defined over the local ring")


def snf_local(mat: Matrix, t0, strategy: str = "first") -> DivisorProfile:
    """Elementary divisors of a matrix over the local ring at t0.

    Pivots on an entry of minimal valuation, clears its row and column
    with transformations invertible over the local ring, and recurses;
    the divisor valuations come out sorted automatically.  ``strategy``
    picks among minimal-valuation pivots ("first" or "last" in
    row-major scan order); the result is pivot-order independent, and
    tests assert exactly that.
    """
    if strategy not in ("first", "last"):
        raise ValueError(f"unknown pivot strategy {strategy!r}")
    t0 = GaussRat.coerce(t0)
    _require_local(mat, t0)
    work = [list(r) for r in mat.rows]
    nr, nc = mat.nrows, mat.ncols
    lo = 0
    vals: list[int] = []
    while lo < min(nr, nc):
        pivot = None
        pivot_val = None
        for j in range(lo, nr):
            for k in range(lo, nc):
                e = work[j][k]
                if e.is_zero():
                    continue
                v = e.valuation(t0)
                better = pivot_val is None or v < pivot_val
                tie = pivot_val is not None and v == pivot_val and strategy == "last"
                if better or tie:
                    pivot, pivot_val = (j, k), v
        if pivot is None:
            break
        pj, pk = pivot
        work[lo], work[pj] = work[pj], work[lo]
        for row in work:
            row[lo], row[pk] = row[pk], row[lo]
        p = work[lo][lo]
        for j in range(lo + 1, nr):
            e = work[j][lo]
            if e.is_zero():
                continue
            ratio = e / p  # valuation >= 0: regular at t0
            row_j, row_p = work[j], work[lo]
            for k in range(lo, nc):
                row_j[k] = row_j[k] - ratio * row_p[k]
        for k in range(lo + 1, nc):
            e = work[lo][k]
            if e.is_zero():
                continue
            ratio = e / p
            for j in range(lo, nr):
                work[j][k] = work[j][k] - ratio * work[j][lo]
        vals.append(pivot_val)
        lo += 1
    return DivisorProfile(tuple(sorted(vals)), free_rank=nr - len(vals))


def torsion_modules(c: BasedChainComplex, t0) -> TorsionModuleSummary:
    """Local torsion dimensions of the homology, degree by degree.

    Requires the complex to be defined over the local ring at t0 and
    generically acyclic; a nonzero free rank in homology is an error
    (it would mean the family is singular at every parameter value).
    """
    t0 = GaussRat.coerce(t0)
    m = c.top_degree
    profiles = [snf_local(c.boundary(k), t0) for k in range(1, m + 1)]
    ranks_of_d = [0] + [p.rank for p in profiles] + [0]
    for i in range(m + 1):
        free = c.ranks[i] - ranks_of_d[i] - ranks_of_d[i + 1]
        if free:
            raise ValueError("family not generically acyclic at this degree")
    dims = [0] * (m + 1)
    for i in range(m):
        dims[i] = profiles[i].total_valuation()  # profile of d_{i+1}
    return TorsionModuleSummary(tuple(dims))


def euler_number(dims: TorsionModuleSummary) -> int:
    """Alternating sum of the torsion dimensions over homological degree."""
    return sum((-1) ** i * d for i, d in enumerate(dims.dims))


def singularity_exponent(c: BasedChainComplex, t0) -> int:
    """Order of zero or pole of the torsion function at t0."""
    return torsion(c).value.valuation(GaussRat.coerce(t0))


def check_duality_pairing(
    c: BasedChainComplex, pairing: list[Matrix], t0
) -> None:
    """Validate a chain-level duality pairing at a point.

    The pairing is a list of matrices P_i : C_i -> dual(C)_i, one per
    degree, forming a chain isomorphism onto the conjugate-transpose
    dual, with every P_i invertible over the local ring at t0 (entries
    regular, determinant a unit).  Raises with a description on any
    failure.
    """
    t0 = GaussRat.coerce(t0)
    m = c.top_degree
    dual = dual_complex(c)
    if len(pairing) != m + 1:
        raise ValueError(f"duality pairing needs {m + 1} matrices, got {len(pairing)}")
    for i, p in enumerate(pairing):
        want = (dual.ranks[i], c.ranks[i])
        if p.shape() != want:
            raise ValueError(f"duality matrix {i} has shape {p.shape()}, expected {want}")
        _require_local(p, t0)
        if p.nrows != p.ncols:
            raise ValueError(f"duality matrix {i} is not square")
        if p.nrows:
            det = p.det()
            if det.is_zero() or det.valuation(t0) != 0:
                raise ValueError(
                    f"duality matrix {i} is not invertible over the local ring"
                )
    for i in range(1, m + 1):
        lhs = dual.boundary(i).mul_with_zero(pairing[i], _ZERO)
        rhs = pairing[i - 1].mul_with_zero(c.boundary(i), _ZERO)
        if lhs != rhs:
            raise ValueError(f"duality pairing is not a chain map in degree {i}")


def analyze(
    c: BasedChainComplex, t0, duality: Optional[list[Matrix]] = None
) -> DeformationReport:
    """Full deformation report of a family complex at a point.

    Computes the singularity exponent two ways (torsion valuation and
    Euler number of the local torsion modules) and requires them to
    agree exactly; that is the calibration cross-check of the frozen
    sign convention and it is enforced as a hard failure.
    """
    t0 = GaussRat.coerce(t0)
    if not is_generically_acyclic(c):
        raise ValueError("torsion undefined: complex not generically acyclic")
    dims = torsion_modules(c, t0)
    chi = euler_number(dims)
    nu = singularity_exponent(c, t0)
    if nu != chi:
        raise ValueError("convention calibration violated")
    duality_ok: Optional[bool] = None
    if duality is not None:
        check_duality_pairing(c, duality, t0)
        m = c.top_degree
        duality_ok = all(
            dims.dims[i] == dims.dims[m - 1 - i] for i in range(m)
        ) and dims.dims[m] == 0
    mid = dims.middle_dim()
    return DeformationReport(
        t0=t0,
        nu=nu,
        chi=chi,
        dims=dims,
        middle_dim_parity=None if mid is None else mid % 2,
        sign_flip=nu % 2 == 1,
        duality_ok=duality_ok,
    )
