"""Multiplicity record of the indecomposable summands of a graph's matrix pair.

The five indecomposable families are tracked as:

    zt[n]   -- summands [nilpotent, identity] on K^n            (n >= 1)
    tz[n]   -- summands [identity, nilpotent] on K^n            (n >= 1)
    t[n]    -- summands K^n -> K^(n+1), the shift pair          (n >= 0)
    ztz[n]  -- summands K^(n+1) -> K^n, the co-shift pair       (n >= 0)
    cycles  -- one regular summand S(X^k - 1) per k-cycle of the fully
               contracted relation, stored as the bare cycle length, which
               keeps the record independent of the ground field

Second-difference formulas over the contraction table gamma produce zt, tz
and ztz[n >= 1] (each by two redundant forms that must agree); the stable
cycle/path shape gives t and cycles; the edge-count identity pins ztz[0].
The vertex-count identity must then close, or the input exposed a bug.

Orientation of the zt/tz difference formulas is the one validated by the
exact-linear-algebra oracle: persistence of class counts under repeated
RIGHT contractions signals zt (first-map kernel chains), persistence under
LEFT contractions signals tz.  See tests/test_invariants.py for the two
hand-checked witnesses pinning this.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .contraction import ContractionDiagram, StableShape, gamma_table, stabilize
from .ratpoly import Poly, poly_str, totient
from .relation import BinaryRelation, MultiDigraph, reduce as reduce_graph


class DualFormMismatch(RuntimeError):
    """The two redundant difference forms disagreed; an upstream bug."""


class NegativeMultiplicity(RuntimeError):
    """A computed multiplicity went negative; an upstream bug."""


class ConsistencyError(RuntimeError):
    """Edge/vertex bookkeeping failed to close; an upstream bug."""


MultMap = dict[int, int]

# regular part of a non-graph pair: ((poly coefficients, exponent), ...)
RegularDivisors = tuple[tuple[Poly, int], ...]


def _clean(mult: MultMap, low: int) -> MultMap:
    out = {}
    for n, c in sorted(mult.items()):
        if n < low:
            raise ValueError(f"multiplicity index {n} below {low}")
        if c < 0:
            raise NegativeMultiplicity(f"multiplicity {c} at index {n}")
        if c:
            out[n] = c
    return out


@dataclass(frozen=True, eq=True)
class InvariantRecord:
    """Sparse multiplicity record; zero entries are never stored."""

    zt: MultMap = field(default_factory=dict)
    tz: MultMap = field(default_factory=dict)
    t: MultMap = field(default_factory=dict)
    ztz: MultMap = field(default_factory=dict)
    cycles: tuple[int, ...] = ()
    regular_divisors: RegularDivisors | None = None

    def __post_init__(self):
        object.__setattr__(self, "zt", _clean(self.zt, 1))
        object.__setattr__(self, "tz", _clean(self.tz, 1))
        object.__setattr__(self, "t", _clean(self.t, 0))
        object.__setattr__(self, "ztz", _clean(self.ztz, 0))
        object.__setattr__(self, "cycles", tuple(sorted(self.cycles)))
        if self.regular_divisors is not None:
            if self.cycles:
                raise ValueError("record cannot carry both cycles and raw divisors")
            canon = tuple(sorted((tuple(p), int(e)) for p, e in self.regular_divisors))
            object.__setattr__(self, "regular_divisors", canon)

    def _regular_edge_total(self) -> int:
        if self.regular_divisors is not None:
            return sum((len(p) - 1) * e for p, e in self.regular_divisors)
        return sum(self.cycles)

    def edge_total(self) -> int:
        return (sum(n * c for n, c in self.zt.items())
                + sum(n * c for n, c in self.tz.items())
                + sum(n * c for n, c in self.t.items())
                + sum((n + 1) * c for n, c in self.ztz.items())
                + self._regular_edge_total())

    def vertex_total(self) -> int:
        return (sum(n * c for n, c in self.zt.items())
                + sum(n * c for n, c in self.tz.items())
                + sum((n + 1) * c for n, c in self.t.items())
                + sum(n * c for n, c in self.ztz.items())
                + self._regular_edge_total())

    def swapped(self) -> "InvariantRecord":
        """zt and tz exchanged; what taking the converse graph does."""
        return InvariantRecord(dict(self.tz), dict(self.zt), dict(self.t),
                               dict(self.ztz), self.cycles, self.regular_divisors)

    def summand_count(self) -> int:
        maps = (self.zt, self.tz, self.t, self.ztz)
        regular = (len(self.cycles) if self.regular_divisors is None
                   else len(self.regular_divisors))
        return sum(sum(m.values()) for m in maps) + regular

    def describe(self) -> str:
        """One-line rendering, e.g. ``ztz[1]=1 tz[1]=1 cycles=[1]``."""
        parts = []
        for name, m in (("ztz", self.ztz), ("zt", self.zt), ("tz", self.tz), ("t", self.t)):
            parts += [f"{name}[{n}]={c}" for n, c in sorted(m.items())]
        if self.regular_divisors is not None:
            parts += [f"S(({poly_str(p)})^{e})" for p, e in self.regular_divisors]
        else:
            parts.append("cycles=[" + ",".join(str(n) for n in self.cycles) + "]")
        return " ".join(parts)


@dataclass(frozen=True)
class RationalRegularPart:
    """Regular summands split over the rationals: multiplicity of each
    cyclotomic index d is the number of cycle lengths it divides."""

    divisors: tuple[tuple[int, int], ...]

    def degree(self) -> int:
        return sum(totient(d) * mult for d, mult in self.divisors)


def cyclotomic_refine(cycles) -> RationalRegularPart:
    counts: Counter[int] = Counter()
    for n in cycles:
        for d in range(1, n + 1):
            if n % d == 0:
                counts[d] += 1
    return RationalRegularPart(tuple(sorted(counts.items())))


# -- the three computation stages -------------------------------------------


def _dual(label: str, n: int, form_a: int, form_b: int) -> int:
    if form_a != form_b:
        raise DualFormMismatch(f"{label}[{n}]: {form_a} != {form_b}")
    if form_a < 0:
        raise NegativeMultiplicity(f"{label}[{n}] = {form_a}")
    return form_a


def part_one(d: ContractionDiagram) -> tuple[MultMap, MultMap, MultMap]:
    """zt, tz, and ztz for indices >= 1, read off the gamma table.

    Every index beyond 2*horizon + 2 reads only stable values and vanishes.
    """
    g = d.value
    zt: MultMap = {}
    tz: MultMap = {}
    ztz: MultMap = {}
    for n in range(1, 2 * d.horizon + 3):
        v = _dual("zt", n,
                  g(n - 1, n + 1) - g(n, n) - g(n, n + 1) + g(n + 1, n),
                  g(n + 1, n - 1) - g(n, n) - g(n, n - 1) + g(n - 1, n))
        if v:
            zt[n] = v
        v = _dual("tz", n,
                  g(n + 1, n - 1) - g(n, n) - g(n + 1, n) + g(n, n + 1),
                  g(n - 1, n + 1) - g(n, n) - g(n - 1, n) + g(n, n - 1))
        if v:
            tz[n] = v
        if n % 2:
            p = n // 2
            v = g(p, p) - g(p, p + 1) - g(p + 1, p) + g(p + 1, p + 1)
            if v < 0:
                raise NegativeMultiplicity(f"ztz[{n}] = {v}")
        else:
            p = n // 2
            v = _dual("ztz", n,
                      g(p, p - 1) - g(p, p) - g(p + 1, p - 1) + g(p + 1, p),
                      g(p - 1, p) - g(p, p) - g(p - 1, p + 1) + g(p, p + 1))
        if v:
            ztz[n] = v
    return zt, tz, ztz


def part_two(shape: StableShape) -> tuple[MultMap, tuple[int, ...]]:
    """A path component on N vertices contributes one t[N - 1]; each cycle
    length becomes one regular summand."""
    t = dict(sorted(Counter(n - 1 for n in shape.paths).items()))
    return t, shape.cycles


def part_three_zt00(edge_count: int, partial: InvariantRecord) -> int:
    """Solve the edge-count identity for the one multiplicity the difference
    formulas cannot see (the one-edge, zero-vertex summand)."""
    if 0 in partial.ztz:
        raise ValueError("partial record already has a ztz[0] entry")
    rest = partial.edge_total()
    value = edge_count - rest
    if value < 0:
        raise NegativeMultiplicity(f"ztz[0] = {value}")
    return value


def edge_check(edge_count: int, rec: InvariantRecord) -> bool:
    return rec.edge_total() == edge_count


def vertex_check(vertex_count: int, rec: InvariantRecord) -> bool:
    return rec.vertex_total() == vertex_count


def full_invariants(g: MultiDigraph | BinaryRelation) -> InvariantRecord:
    """Complete multiplicity record of a graph, by the contraction pipeline:
    reduce, tabulate gamma, stabilize, evaluate the three stages, then verify
    both counting identities."""
    if isinstance(g, BinaryRelation):
        relation, split = g, 0
        edge_count = g.edge_count
    else:
        summary = reduce_graph(g)
        relation, split = summary.reduced, summary.split_count
        edge_count = g.edge_count
    diagram = gamma_table(relation)
    shape, _stable, _depth = stabilize(relation)
    zt, tz, ztz = part_one(diagram)
    t, cycles = part_two(shape)
    partial = InvariantRecord(zt, tz, t, ztz, cycles)
    ztz0 = part_three_zt00(relation.edge_count, partial)
    ztz = dict(ztz)
    if ztz0 + split:
        ztz[0] = ztz0 + split
    rec = InvariantRecord(zt, tz, t, ztz, cycles)
    if not edge_check(edge_count, rec):
        raise ConsistencyError(f"edge identity failed: {rec.edge_total()} != {edge_count}")
    if not vertex_check(relation.vertex_count, rec):
        raise ConsistencyError(
            f"vertex identity failed: {rec.vertex_total()} != {relation.vertex_count}")
    return rec


# -- diagram cells and equivalence -------------------------------------------


def gamma_content(d: ContractionDiagram, cell: dict[str, tuple[int, int]]) -> int:
    """Signed four-corner sum over a diagram cell.

    Squares use roles a, b, c, d (content gamma_a - gamma_b - gamma_d +
    gamma_c); parallelograms use a, a2, b, b2 (gamma_a + gamma_a2 - gamma_b
    - gamma_b2).  Every corner must be a suitable lattice point.
    """
    roles = set(cell)
    if roles == {"a", "b", "c", "d"}:
        signs = {"a": 1, "b": -1, "c": 1, "d": -1}
    elif roles == {"a", "a2", "b", "b2"}:
        signs = {"a": 1, "a2": 1, "b": -1, "b2": -1}
    else:
        raise ValueError(f"unrecognized cell roles {sorted(roles)}")
    return sum(sign * d.value(*cell[role]) for role, sign in signs.items())


def diagram_cells(k: int) -> list[tuple[str, str, int, dict[str, tuple[int, int]]]]:
    """The standard annotated cells with index k: name, multiplicity family,
    family index, and corner roles."""
    return [
        (f"A{k}", "ztz", 2 * k - 1,
         {"a": (k - 1, k - 1), "b": (k - 1, k), "c": (k, k), "d": (k, k - 1)}),
        (f"B{k}", "ztz", 2 * k,
         {"a": (k, k - 1), "b": (k, k), "c": (k + 1, k), "d": (k + 1, k - 1)}),
        (f"B{k}'", "ztz", 2 * k,
         {"a": (k - 1, k), "b": (k - 1, k + 1), "c": (k, k + 1), "d": (k, k)}),
        (f"C{k}", "tz", k,
         {"a": (k - 1, k + 1), "a2": (k, k - 1), "b": (k - 1, k), "b2": (k, k)}),
        (f"C{k}'", "tz", k,
         {"a": (k, k + 1), "a2": (k + 1, k - 1), "b": (k, k), "b2": (k + 1, k)}),
        (f"D{k}", "zt", k,
         {"a": (k - 1, k + 1), "a2": (k + 1, k), "b": (k, k), "b2": (k, k + 1)}),
        (f"D{k}'", "zt", k,
         {"a": (k + 1, k - 1), "a2": (k - 1, k), "b": (k, k), "b2": (k, k - 1)}),
    ]


@dataclass(frozen=True)
class EquivVerdict:
    equivalent: bool
    reason: str | None = None

    def __str__(self) -> str:
        return "equivalent" if self.equivalent else f"distinguished-by: {self.reason}"


def _first_gamma_difference(da: ContractionDiagram, db: ContractionDiagram) -> str:
    bound = max(da.band_end, db.band_end) + 3
    for s in range(bound + 1):
        for m in range(s + 1):
            n = s - m
            if ContractionDiagram.is_suitable(m, n) and da.value(m, n) != db.value(m, n):
                return f"gamma[{m},{n}]: {da.value(m, n)} != {db.value(m, n)}"
    raise AssertionError("gamma signatures differ but no differing point found")


def decide_equiv(a: MultiDigraph | BinaryRelation,
                 b: MultiDigraph | BinaryRelation) -> EquivVerdict:
    """Two graphs have the same pair invariants iff their gamma tables, their
    stable cycle/path shapes, and their edge counts all agree."""
    ra = a if isinstance(a, BinaryRelation) else reduce_graph(a).reduced
    rb = b if isinstance(b, BinaryRelation) else reduce_graph(b).reduced
    ea = a.edge_count if isinstance(a, MultiDigraph) else ra.edge_count
    eb = b.edge_count if isinstance(b, MultiDigraph) else rb.edge_count
    da, db = gamma_table(ra), gamma_table(rb)
    shape_a, _, _ = stabilize(ra)
    shape_b, _, _ = stabilize(rb)
    if da.signature() != db.signature():
        verdict = EquivVerdict(False, _first_gamma_difference(da, db))
    elif shape_a != shape_b:
        verdict = EquivVerdict(False,
                               f"stable shape: cycles {list(shape_a.cycles)} paths "
                               f"{list(shape_a.paths)} != cycles {list(shape_b.cycles)} "
                               f"paths {list(shape_b.paths)}")
    elif ea != eb:
        verdict = EquivVerdict(False, f"edge count: {ea} != {eb}")
    else:
        verdict = EquivVerdict(True)
    records_equal = full_invariants(a) == full_invariants(b)
    if records_equal != verdict.equivalent:
        raise ConsistencyError("primitive invariants and records disagree")
    return verdict


# -- JSON shapes --------------------------------------------------------------


def record_to_json(rec: InvariantRecord, edge_count: int, vertex_count: int) -> dict:
    out = {
        "zt": {str(n): c for n, c in rec.zt.items()},
        "tz": {str(n): c for n, c in rec.tz.items()},
        "t": {str(n): c for n, c in rec.t.items()},
        "ztz": {str(n): c for n, c in rec.ztz.items()},
        "cycles": list(rec.cycles),
        "edge_check": edge_check(edge_count, rec),
        "vertex_check": vertex_check(vertex_count, rec),
    }
    if rec.regular_divisors is not None:
        out["regular_divisors"] = [
            {"poly": poly_str(p), "exponent": e} for p, e in rec.regular_divisors]
    else:
        out["cyclotomic"] = [
            {"d": d, "multiplicity": m}
            for d, m in cyclotomic_refine(rec.cycles).divisors]
    return out
