"""Finitely generated commutative monoids inside integer lattices.

A monoid is given by generators in Z^d plus a linear degree functional.
Only cancellative monoids (submonoids of lattices) are supported, so the
group completion is an honest sublattice of Z^d.  Element enumeration and
membership are window-based: a search box and a documented padding bound
make both decidable at desk scale.  Consumers that need exhaustiveness
(bar-construction windows) gate their answers on stabilization instead of
trusting any single box.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Sequence

Vector = tuple[int, ...]


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _neg(a: Vector) -> Vector:
    return tuple(-x for x in a)


def _norm_inf(a: Vector) -> int:
    return max((abs(x) for x in a), default=0)


def hermite_basis(vectors: Iterable[Vector], rank: int) -> list[Vector]:
    """Row-style Hermite basis of the sublattice of Z^rank spanned by vectors."""
    rows = [list(v) for v in vectors if any(v)]
    basis: list[list[int]] = []
    for row in rows:
        for b in basis:
            piv = next(i for i, x in enumerate(b) if x)
            if row[piv]:
                q = row[piv] // b[piv]
                row = [x - q * y for x, y in zip(row, b)]
        while any(row):
            piv = next(i for i, x in enumerate(row) if x)
            inserted = False
            for j, b in enumerate(basis):
                bpiv = next(i for i, x in enumerate(b) if x)
                if bpiv == piv:
                    # same pivot: replace by gcd combination
                    g, x, y = _xgcd(b[piv], row[piv])
                    new_b = [x * u + y * v for u, v in zip(b, row)]
                    row = [u - (b[piv] // g) * 0 for u in row]  # placeholder, fixed below
                    row = [u * (b[piv] // g) - v * 0 for u, v in zip(row, row)]
                    # recompute properly:
                    row = None
                    basis[j], row = new_b, [
                        u * 0 for u in new_b
                    ]
                    inserted = True
                    break
                if bpiv > piv:
                    basis.insert(j, row)
                    row = [0] * rank
                    inserted = True
                    break
            if not inserted:
                basis.append(row)
                row = [0] * rank
    return [tuple(b) for b in basis]


def _xgcd(a: int, b: int):
    if b == 0:
        return (abs(a), (1 if a >= 0 else -1), 0)
    g, x, y = _xgcd(b, a % b)
    return (g, y, x - (a // b) * y)


@dataclass(frozen=True)
class GradedCommMonoid:
    """Submonoid of Z^rank with an additive Z-grading."""

    rank: int
    generators: tuple[Vector, ...]
    degree_functional: Vector
    name: str = ""
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.rank:
                raise ValueError("generator rank mismatch")
        if len(self.degree_functional) != self.rank:
            raise ValueError("degree functional rank mismatch")

    # --- basics -----------------------------------------------------------
    @property
    def unit(self) -> Vector:
        return (0,) * self.rank

    def degree(self, v: Vector) -> int:
        return _dot(self.degree_functional, v)

    def default_pad(self) -> int:
        return sum(_norm_inf(g) for g in self.generators) + 1

    def elements_within(self, box: int) -> frozenset[Vector]:
        """Elements reachable from 0 by adding generators without leaving
        the coordinate box [-box, box]^rank.

        For the staircase-orderable monoids in scope this is exactly the set
        of members of the box; callers that need certainty use stabilization
        over growing boxes.
        """
        key = ("elts", box)
        if key in self._cache:
            return self._cache[key]
        seen = {self.unit}
        frontier = [self.unit]
        while frontier:
            nxt = []
            for v in frontier:
                for g in self.generators:
                    w = _add(v, g)
                    if w not in seen and _norm_inf(w) <= box:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        out = frozenset(seen)
        self._cache[key] = out
        return out

    def contains(self, v: Vector, box: int | None = None) -> bool:
        if box is None:
            box = _norm_inf(v) + self.default_pad()
        return tuple(v) in self.elements_within(box)

    def is_group(self) -> bool:
        return all(self.contains(_neg(g)) for g in self.generators)

    # --- serialization ----------------------------------------------------
    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "generators": [list(g) for g in self.generators],
            "degree": list(self.degree_functional),
        }

    @staticmethod
    def from_json_dict(d: dict) -> "GradedCommMonoid":
        return GradedCommMonoid(
            d["rank"],
            tuple(tuple(g) for g in d["generators"]),
            tuple(d["degree"]),
        )


@dataclass(frozen=True)
class MonoidMap:
    source: GradedCommMonoid
    target: GradedCommMonoid
    matrix: tuple[Vector, ...]  # target.rank rows, source.rank columns

    def __post_init__(self):
        if len(self.matrix) != self.target.rank:
            raise ValueError("matrix row count must equal target rank")
        for row in self.matrix:
            if len(row) != self.source.rank:
                raise ValueError("matrix column count must equal source rank")

    def apply(self, v: Vector) -> Vector:
        return tuple(_dot(row, v) for row in self.matrix)

    def check_well_defined(self, box: int | None = None) -> bool:
        return all(self.target.contains(self.apply(g), box) for g in self.source.generators)

    def is_graded(self) -> bool:
        return all(
            self.target.degree(self.apply(g)) == self.source.degree(g)
            for g in self.source.generators
        )


def identity_map(m: GradedCommMonoid) -> MonoidMap:
    rows = tuple(
        tuple(1 if i == j else 0 for j in range(m.rank)) for i in range(m.rank)
    )
    return MonoidMap(m, m, rows)


# --- named constructions ---------------------------------------------------

def free_monoid(d: int = 1, name: str = "free1") -> GradedCommMonoid:
    """<x> = N_0 x with degree(x) = d."""
    return GradedCommMonoid(1, ((1,),), (d,), name=name)


def trivial_monoid() -> GradedCommMonoid:
    return GradedCommMonoid(1, (), (1,), name="trivial")


def dZ(d: int) -> GradedCommMonoid:
    """The group dZ inside Z, graded by the ambient value."""
    return GradedCommMonoid(1, ((d,), (-d,)), (1,), name=f"{d}Z")


def dN0(d: int) -> GradedCommMonoid:
    """The monoid dN_0 inside Z, graded by the ambient value."""
    return GradedCommMonoid(1, ((d,),), (1,), name=f"{d}N0")


def numerical_monoid(gens: Sequence[int]) -> GradedCommMonoid:
    return GradedCommMonoid(1, tuple((g,) for g in gens), (1,))


# --- operations -------------------------------------------------------------

def group_completion(n: GradedCommMonoid) -> tuple[GradedCommMonoid, MonoidMap]:
    """Grothendieck group as the sublattice of Z^rank spanned by the generators."""
    basis = lattice_basis(n)
    gens: list[Vector] = []
    for b in basis:
        gens.append(b)
        gens.append(_neg(b))
    gp = GradedCommMonoid(n.rank, tuple(gens), n.degree_functional, name=n.name + "^gp")
    return gp, MonoidMap(n, gp, identity_map(n).matrix)


def lattice_basis(n: GradedCommMonoid) -> list[Vector]:
    key = "lattice"
    if key in n._cache:
        return n._cache[key]
    basis = hermite_basis(n.generators, n.rank)
    n._cache[key] = basis
    return basis


def in_lattice(n: GradedCommMonoid, v: Vector) -> bool:
    basis = [list(b) for b in lattice_basis(n)]
    row = list(v)
    for b in basis:
        piv = next(i for i, x in enumerate(b) if x)
        if row[piv] % b[piv] == 0:
            q = row[piv] // b[piv]
            row = [x - q * y for x, y in zip(row, b)]
    return not any(row)


def degree_component(
    m: GradedCommMonoid,
    degrees: Iterable[int] | Callable[[int], bool],
    degree_bound: int,
    box: int | None = None,
) -> list[Vector]:
    """Elements of degree in the given set, |degree| <= degree_bound, within the box."""
    if callable(degrees):
        pred = degrees
    else:
        dset = set(degrees)
        pred = lambda k: k in dset
    if box is None:
        box = degree_bound + m.default_pad()
    out = [
        v
        for v in m.elements_within(box)
        if abs(m.degree(v)) <= degree_bound and pred(m.degree(v))
    ]
    return sorted(out)


def is_repetitive(m: GradedCommMonoid, box: int = 8) -> int | None:
    """Period d when m equals the nonnegative part of its group completion.

    Checked within the box window: every lattice point of nonnegative degree
    inside the box must lie in m, and m must have an element of positive
    degree.  Returns the minimal positive degree on the group completion.
    """
    if not m.generators:
        return None
    if all(m.degree(g) == 0 for g in m.generators) or not any(
        m.degree(v) > 0 for v in m.elements_within(box)
    ):
        return None
    basis = lattice_basis(m)
    degs = [abs(m.degree(b)) for b in basis if m.degree(b) != 0]
    if not degs:
        return None
    d = 0
    for x in degs:
        d = gcd(d, x)
    gp, _ = group_completion(m)
    members = m.elements_within(box + m.default_pad())
    for v in gp.elements_within(box):
        if m.degree(v) >= 0 and v not in members:
            return None
    return d


def repletion(
    eps: MonoidMap, box: int = 6
) -> tuple[GradedCommMonoid, MonoidMap, MonoidMap]:
    """Pullback N^gp x_{M^gp} M of the group completion square of eps.

    Returns (N^rep, rho: N -> N^rep, eps^rep: N^rep -> M); the composite
    equals eps on generators.  Generators of the pullback are extracted
    greedily from the box window.
    """
    n, m = eps.source, eps.target
    ngp, _ = group_completion(n)
    candidates = [
        v
        for v in ngp.elements_within(box)
        if v != n.unit and m.contains(eps.apply(v))
    ]
    candidates.sort(key=lambda v: (sum(abs(x) for x in v), v))
    gens: list[Vector] = []
    for v in candidates:
        trial = GradedCommMonoid(n.rank, tuple(gens), n.degree_functional)
        if not trial.contains(v, box + trial.default_pad()):
            gens.append(v)
    nrep = GradedCommMonoid(
        n.rank, tuple(gens), n.degree_functional, name=(n.name or "N") + "^rep"
    )
    rho = MonoidMap(n, nrep, identity_map(n).matrix)
    eps_rep = MonoidMap(nrep, m, eps.matrix)
    return nrep, rho, eps_rep
