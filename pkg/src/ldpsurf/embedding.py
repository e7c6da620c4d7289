"""Anticanonical quadric embeddings of one-singularity log del Pezzo surfaces.

Dilating the polar polygon by the index gives a lattice polygon whose lattice
points are the exponents of the embedding monomials.  The defining ideal is
generated by quadratic binomials z_a z_b - z_c z_d with a + b = c + d; a
minimal generating system takes, inside the fiber of each sum point, the
differences against the lexicographically smallest point pair.  The size of
that system is cross-checked by lattice point counting and, optionally, by an
exact rank computation over the rationals.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .delpezzo import LdpData, canonical_polygon, ldp_analyze
from .errors import ConsistencyError, DomainError, ParseError
from .lattice import (LatticePolygon, Point, dilate, lattice_points,
                      minkowski_double, polygon_area2, to_lattice)

# Fiber-wise exact rank verification is skipped by default once the monomial
# count passes this threshold; covers every family member with p <= 12.
AUTO_RANK_MAX_POINTS = 1600


@dataclass(frozen=True)
class EmbeddingData:
    """The dilated polar polygon and its embedding numerology."""

    polygon: LatticePolygon          # index * polar, integral by construction
    points: tuple[Point, ...]        # lattice points, lexicographic order
    ambient_dim: int                 # one less than the number of points
    degree: int                      # twice the polygon area
    boundary_count: int
    interior_count: int


@dataclass(frozen=True)
class Binomial:
    """z_a z_b - z_c z_d with a + b = c + d, stored with sorted pairs and
    plus < minus."""

    plus: tuple[Point, Point]
    minus: tuple[Point, Point]

    def __post_init__(self):
        plus = tuple(sorted(tuple(pt) for pt in self.plus))
        minus = tuple(sorted(tuple(pt) for pt in self.minus))
        if plus == minus:
            raise DomainError("binomial with equal monomials is zero")
        sum_plus = (plus[0][0] + plus[1][0], plus[0][1] + plus[1][1])
        sum_minus = (minus[0][0] + minus[1][0], minus[0][1] + minus[1][1])
        if sum_plus != sum_minus:
            raise DomainError(
                f"monomial exponent sums differ: {sum_plus} vs {sum_minus}"
            )
        if minus < plus:
            plus, minus = minus, plus
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    @property
    def sum_point(self) -> Point:
        return (self.plus[0][0] + self.plus[1][0],
                self.plus[0][1] + self.plus[1][1])


@dataclass(frozen=True)
class QuadricIdealReport:
    """A minimal generating system together with its cross-checked size."""

    points: tuple[Point, ...]
    ambient_dim: int
    degree: int
    genus: int
    count: int
    formula_count: int
    generators: tuple[Binomial, ...]
    rank: int | None  # exact rank of the full relation set, when verified


class TableRow:
    """Closed-form row of embedding numerology for a family member."""

    __slots__ = ("ambient_dim", "degree", "quadric_count", "genus",
                 "boundary_count", "index")

    def __init__(self, ambient_dim, degree, quadric_count, genus,
                 boundary_count, index):
        self.ambient_dim = ambient_dim
        self.degree = degree
        self.quadric_count = quadric_count
        self.genus = genus
        self.boundary_count = boundary_count
        self.index = index

    def astuple(self):
        return (self.ambient_dim, self.degree, self.quadric_count,
                self.genus, self.boundary_count, self.index)

    def __eq__(self, other):
        return isinstance(other, TableRow) and self.astuple() == other.astuple()

    def __repr__(self):
        return ("TableRow(ambient_dim=%d, degree=%d, quadric_count=%d, "
                "genus=%d, boundary_count=%d, index=%d)" % self.astuple())


def embedding_data(data: LdpData) -> EmbeddingData:
    """Lattice data of the index-dilated polar polygon.

    Both Pick-type identities (ambient dimension against degree and boundary,
    genus against interior count) are asserted, so a failure here means a
    counting bug rather than unusual input.
    """
    dilated = to_lattice(dilate(data.polar, data.index))
    boundary, interior = lattice_points(dilated)
    points = tuple(sorted(boundary | interior))
    degree = polygon_area2(dilated)
    delta = len(points) - 1
    if 2 * delta != degree + len(boundary):
        raise ConsistencyError("point count violates the Pick identity")
    if len(interior) != delta - len(boundary) + 1:
        raise ConsistencyError("interior count violates the Pick identity")
    return EmbeddingData(
        polygon=dilated,
        points=points,
        ambient_dim=delta,
        degree=degree,
        boundary_count=len(boundary),
        interior_count=len(interior),
    )


def embedding_of(q: LatticePolygon) -> EmbeddingData:
    return embedding_data(ldp_analyze(q))


def sum_fibers(e: EmbeddingData) -> dict[Point, list[tuple[Point, Point]]]:
    """Unordered point pairs grouped by their coordinate sum."""
    fibers: dict[Point, list[tuple[Point, Point]]] = {}
    for a, b in itertools.combinations_with_replacement(e.points, 2):
        fibers.setdefault((a[0] + b[0], a[1] + b[1]), []).append((a, b))
    return fibers


def koelman_quadrics(e: EmbeddingData) -> list[Binomial]:
    """The full relation set: every binomial with matching monomial sums.

    Grows quadratically in the fiber sizes; intended for moderate polygons.
    """
    out = []
    fibers = sum_fibers(e)
    for s in sorted(fibers):
        for pair_a, pair_b in itertools.combinations(fibers[s], 2):
            out.append(Binomial(pair_a, pair_b))
    out.sort(key=lambda b: (b.plus, b.minus))
    return out


def _reduce_row(row: dict, echelon: dict) -> dict:
    """Eliminate against an echelon keyed by pivot (largest coordinate)."""
    while row:
        pivot = max(row)
        hit = echelon.get(pivot)
        if hit is None:
            return row
        factor = row[pivot] / hit[pivot]
        for key, value in hit.items():
            new = row.get(key, Fraction(0)) - factor * value
            if new:
                row[key] = new
            else:
                row.pop(key, None)
    return row


def relation_rank(binomials) -> int:
    """Exact rank over the rationals of a set of binomial relations.

    Rows live in the vector space with one coordinate per unordered point
    pair; generic sparse Gaussian elimination, no structural shortcuts.
    """
    echelon: dict = {}
    rank = 0
    for b in binomials:
        row = _reduce_row({b.plus: Fraction(1), b.minus: Fraction(-1)}, echelon)
        if row:
            echelon[max(row)] = row
            rank += 1
    return rank


def _full_set_rank(fibers: dict) -> int:
    """Rank of the full relation set, fiber block by fiber block.

    Binomials from different fibers involve disjoint monomials, so the
    relation matrix is block diagonal and ranks add.  Inside a block every
    row has coordinate sum zero, which bounds the block rank by m - 1 and
    lets the elimination stop early once that bound is reached.
    """
    total = 0
    for s in sorted(fibers):
        pairs = fibers[s]
        cap = len(pairs) - 1
        echelon: dict = {}
        rank = 0
        for pair_a, pair_b in itertools.combinations(pairs, 2):
            if rank == cap:
                break
            row = _reduce_row({pair_a: Fraction(1), pair_b: Fraction(-1)},
                              echelon)
            if row:
                echelon[max(row)] = row
                rank += 1
        if rank > cap:
            raise ConsistencyError("fiber rank exceeded its dimension bound")
        total += rank
    return total


def quadric_count_by_counting(e: EmbeddingData) -> int:
    """Minimal system size from lattice point counting alone:
    C(delta + 2, 2) minus the number of lattice points of the doubled
    polygon."""
    delta = e.ambient_dim
    return (delta + 1) * (delta + 2) // 2 - minkowski_double(e.polygon)


def minimal_system(e: EmbeddingData, verify_rank: bool | None = None) -> QuadricIdealReport:
    """Minimal generating system of the embedding ideal.

    In each sum-point fiber the lexicographically smallest pair is the
    representative and one binomial per remaining pair is emitted.  The
    system size must agree with the counting formula; when rank verification
    runs (the default for small polygons), the exact rank of the full
    relation set must agree as well.
    """
    fibers = sum_fibers(e)
    doubled = minkowski_double(e.polygon)
    if len(fibers) != doubled:
        raise ConsistencyError(
            f"{len(fibers)} sum fibers but {doubled} lattice points in the "
            "doubled polygon"
        )
    generators = []
    for s in sorted(fibers):
        root, *rest = sorted(fibers[s])
        generators.extend(Binomial(root, other) for other in rest)
    generators.sort(key=lambda b: (b.plus, b.minus))
    formula_count = quadric_count_by_counting(e)
    if len(generators) != formula_count:
        raise ConsistencyError(
            f"spanning construction produced {len(generators)} generators, "
            f"counting formula gives {formula_count}"
        )
    if verify_rank is None:
        verify_rank = len(e.points) <= AUTO_RANK_MAX_POINTS
    rank = None
    if verify_rank:
        rank = _full_set_rank(fibers)
        if rank != formula_count:
            raise ConsistencyError(
                f"full relation set has rank {rank}, expected {formula_count}"
            )
    return QuadricIdealReport(
        points=e.points,
        ambient_dim=e.ambient_dim,
        degree=e.degree,
        genus=e.interior_count,
        count=len(generators),
        formula_count=formula_count,
        generators=tuple(generators),
        rank=rank,
    )


@functools.lru_cache(maxsize=8)
def _echelon_of(report: QuadricIdealReport) -> tuple[dict, frozenset]:
    echelon: dict = {}
    for b in report.generators:
        row = _reduce_row({b.plus: Fraction(1), b.minus: Fraction(-1)}, echelon)
        if row:
            echelon[max(row)] = row
    return echelon, frozenset(report.points)


def span_membership(report: QuadricIdealReport, b: Binomial) -> bool:
    """True when b lies in the rational span of the report's generators."""
    echelon, point_set = _echelon_of(report)
    for pair in (b.plus, b.minus):
        for pt in pair:
            if pt not in point_set:
                raise DomainError(f"point {pt} is not an embedding monomial")
    row = _reduce_row({b.plus: Fraction(1), b.minus: Fraction(-1)}, echelon)
    return not row


def sectional_genus(e: EmbeddingData) -> int:
    """Genus of a generic hyperplane section: the interior point count."""
    return e.interior_count


def _exact_div(n: int, d: int) -> int:
    q, r = divmod(n, d)
    if r:
        raise ConsistencyError(f"{n} is not divisible by {d}")
    return q


def table_formulas(k: int, p: int) -> TableRow:
    """Closed-form embedding numerology of canonical_polygon(k, p)."""
    if k not in (1, 2, 3):
        raise DomainError("k must be 1, 2 or 3")
    if p < 1:
        raise DomainError("p must be >= 1")
    s = {1: (p + 3) ** 2, 2: p * p + 5 * p + 8, 3: p * p + 4 * p + 7}[k]
    if p % 2 == 1:
        index = _exact_div(p + 1, 2)
        boundary = _exact_div(s, 2)
        degree = _exact_div((p + 1) * s, 4)
        delta = _exact_div((p + 3) * s, 8)
        cubic = {
            1: p ** 3 + 11 * p * p + 43 * p + 25,
            2: p ** 3 + 10 * p * p + 37 * p + 16,
            3: p ** 3 + 9 * p * p + 31 * p + 7,
        }[k]
        beta = _exact_div((p + 1) * s * cubic, 128)
        genus = {
            1: _exact_div((p + 1) * (p * p + 4 * p - 1), 8),
            2: _exact_div(p * (p + 1) * (p + 3), 8),
            3: _exact_div((p + 1) ** 3, 8),
        }[k]
    else:
        index = p + 1
        boundary = s
        degree = (p + 1) * s
        delta = _exact_div((p + 2) * s, 2)
        quartic = {
            1: p ** 4 + 10 * p ** 3 + 37 * p * p + 50 * p + 24,
            2: p ** 4 + 9 * p ** 3 + 32 * p * p + 42 * p + 20,
            3: p ** 4 + 8 * p ** 3 + 27 * p * p + 34 * p + 16,
        }[k]
        beta = _exact_div(s * quartic, 8)
        genus = {
            1: _exact_div((p + 2) * (p * p + 4 * p + 1), 2),
            2: _exact_div(p ** 3 + 5 * p * p + 8 * p + 2, 2),
            3: _exact_div(p ** 3 + 4 * p * p + 7 * p + 2, 2),
        }[k]
    return TableRow(ambient_dim=delta, degree=degree, quadric_count=beta,
                    genus=genus, boundary_count=boundary, index=index)


def enumerated_row(k: int, p: int) -> TableRow:
    """The same numerology measured directly: analyze the polygon, enumerate
    lattice points, count the doubled polygon.  No closed forms involved."""
    data = ldp_analyze(canonical_polygon(k, p))
    e = embedding_data(data)
    return TableRow(
        ambient_dim=e.ambient_dim,
        degree=e.degree,
        quadric_count=quadric_count_by_counting(e),
        genus=e.interior_count,
        boundary_count=e.boundary_count,
        index=data.index,
    )


# ---------------------------------------------------------------------------
# ideal file format

def format_binomial(b: Binomial) -> str:
    (a1, a2), (m1, m2) = b.plus, b.minus
    return (f"z({a1[0]},{a1[1]})*z({a2[0]},{a2[1]}) - "
            f"z({m1[0]},{m1[1]})*z({m2[0]},{m2[1]})")


def format_ideal(report: QuadricIdealReport) -> str:
    """Deterministic text form: a header with the numerology, then one
    generator per line in tuple-lexicographic order."""
    lines = [
        "# minimal quadric generating system",
        (f"# ambient_dim={report.ambient_dim} degree={report.degree} "
         f"generators={report.count} sectional_genus={report.genus}"),
    ]
    lines.extend(format_binomial(b) for b in report.generators)
    return "\n".join(lines) + "\n"


_FACTOR = r"z\((-?\d+),(-?\d+)\)"
_LINE = re.compile(
    rf"^\s*{_FACTOR}\s*\*\s*{_FACTOR}\s*-\s*{_FACTOR}\s*\*\s*{_FACTOR}\s*$"
)


def parse_binomial_line(line: str) -> Binomial:
    m = _LINE.match(line)
    if not m:
        raise ParseError(f"not a binomial line: {line!r}")
    nums = [int(g) for g in m.groups()]
    return Binomial(
        ((nums[0], nums[1]), (nums[2], nums[3])),
        ((nums[4], nums[5]), (nums[6], nums[7])),
    )


def parse_ideal(text: str) -> list[Binomial]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_binomial_line(line))
        except ParseError:
            raise ParseError(f"line {lineno}: not a binomial line: {raw!r}") from None
    return out
