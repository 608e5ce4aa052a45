"""Finite posets, order complexes of open intervals, and reduced rational homology.

Homology is reduced throughout: the augmented chain complex always carries a
rank-one degree -(1) term, so the empty complex has b_{-1} = 1 and a point is
acyclic.  Betti numbers are computed from exact boundary-matrix ranks over Q.
"""

from __future__ import annotations

from typing import Hashable, Iterable

from .errors import InputError
from .qlinalg import QMatrix


class FinitePoset:
    """A finite strict partial order, closed transitively at construction."""

    __slots__ = ("elements", "less")

    def __init__(self, elements: Iterable[Hashable], less_than: Iterable[tuple]):
        elems = tuple(elements)
        elem_set = set(elems)
        if len(elem_set) != len(elems):
            raise InputError("duplicate poset elements")
        pairs = set()
        for a, b in less_than:
            if a not in elem_set or b not in elem_set:
                raise InputError(f"relation mentions unknown element: ({a!r}, {b!r})")
            pairs.add((a, b))
        # transitive closure
        changed = True
        while changed:
            changed = False
            for a, b in list(pairs):
                for c, d in list(pairs):
                    if b == c and (a, d) not in pairs:
                        pairs.add((a, d))
                        changed = True
        for a, b in pairs:
            if a == b:
                raise InputError(f"order relation is not irreflexive at {a!r}")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "less", frozenset(pairs))

    def __setattr__(self, name, value):
        raise AttributeError("FinitePoset is immutable")

    def less_than(self, a, b) -> bool:
        return (a, b) in self.less

    def open_interval(self, lower, upper) -> tuple:
        """Elements strictly between lower and upper, in element order."""
        for x in (lower, upper):
            if x not in set(self.elements):
                raise InputError(f"unknown poset element: {x!r}")
        return tuple(
            x for x in self.elements if (lower, x) in self.less and (x, upper) in self.less
        )


def _vertex_key(v):
    # deterministic total order even for mixed vertex types
    return (type(v).__name__, repr(v))


class SimplicialComplex:
    """Abstract simplicial complex: vertex tuple plus a downward-closed family.

    The empty simplex is stored whenever any simplex is present.  Vertices are
    kept in a fixed order so simplex enumeration (and hence boundary matrices)
    is deterministic.
    """

    __slots__ = ("vertices", "simplices", "_pos")

    def __init__(self, vertices: Iterable[Hashable], simplices: Iterable[Iterable[Hashable]]):
        verts = tuple(sorted(set(vertices), key=_vertex_key))
        vset = set(verts)
        closed: set[frozenset] = set()
        for s in simplices:
            fs = frozenset(s)
            if not fs <= vset:
                raise InputError(f"simplex {sorted(fs)!r} uses unknown vertices")
            closed.add(fs)
        # close downward; every vertex is a simplex
        for v in verts:
            closed.add(frozenset([v]))
        stack = list(closed)
        while stack:
            s = stack.pop()
            for v in s:
                face = s - {v}
                if face not in closed:
                    closed.add(face)
                    stack.append(face)
        if closed:
            closed.add(frozenset())
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "simplices", frozenset(closed))
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(verts)})

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls((), ())

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.simplices == other.simplices
        )

    def __hash__(self):
        return hash((self.vertices, self.simplices))

    def is_empty(self) -> bool:
        return not self.simplices

    def dim(self) -> int:
        """Largest simplex dimension; -1 for {empty simplex}, -2 if void."""
        if not self.simplices:
            return -2
        return max(len(s) for s in self.simplices) - 1

    def k_simplices(self, k: int) -> list[tuple]:
        """The k-simplices as vertex tuples in vertex order, lexicographically."""
        pos = self._pos
        found = [
            tuple(sorted(s, key=pos.__getitem__)) for s in self.simplices if len(s) == k + 1
        ]
        return sorted(found, key=lambda s: tuple(pos[v] for v in s))

    def euler_characteristic_reduced(self) -> int:
        """Alternating simplex count over the augmented complex (degree -1 included)."""
        total = -1  # rank-one augmentation term in degree -1
        for s in self.simplices:
            if s:
                total += (-1) ** (len(s) - 1)
        return total


class BettiVector:
    """Reduced Betti numbers indexed from degree -1, trailing zeros trimmed."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]):
        vals = list(values)
        while len(vals) > 1 and vals[-1] == 0:
            vals.pop()
        if not vals:
            vals = [0]
        if any(v < 0 for v in vals):
            raise InputError("Betti numbers must be nonnegative")
        object.__setattr__(self, "values", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("BettiVector is immutable")

    def __getitem__(self, degree: int) -> int:
        i = degree + 1
        if i < 0 or i >= len(self.values):
            return 0
        return self.values[i]

    def __eq__(self, other):
        if isinstance(other, BettiVector):
            return self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        pairs = ", ".join(f"b{k - 1}={v}" for k, v in enumerate(self.values) if v)
        return f"BettiVector({pairs or 'trivial'})"

    def max_degree(self) -> int:
        return len(self.values) - 2

    def euler_characteristic_reduced(self) -> int:
        return sum((-1) ** (k - 1) * v for k, v in enumerate(self.values))


def order_complex(poset: FinitePoset, lower, upper) -> SimplicialComplex:
    """Chains of the open interval (lower, upper) as a simplicial complex."""
    interval = poset.open_interval(lower, upper)
    less = poset.less
    above = {
        x: [y for y in interval if (x, y) in less]
        for x in interval
    }
    chains: list[tuple] = []

    def extend(chain: tuple, last):
        chains.append(chain)
        for y in above[last]:
            extend(chain + (y,), y)

    for x in interval:
        # extending upward only, each chain appears exactly once: grown
        # from its minimum in increasing order
        extend((x,), x)

    return SimplicialComplex(interval, chains)


def cone(k: SimplicialComplex, apex) -> SimplicialComplex:
    """Cone over a complex: a new apex joined to every simplex."""
    if apex in k.vertices:
        raise InputError("apex must be a fresh vertex")
    simplices = [tuple(s) for s in k.simplices]
    coned = simplices + [tuple(s) + (apex,) for s in simplices]
    if not simplices:
        coned = [(apex,)]
    return SimplicialComplex(k.vertices + (apex,), coned)


def boundary_matrix(k: SimplicialComplex, degree: int) -> QMatrix:
    """Boundary map from degree-k chains to degree-(k-1) chains.

    Degree 0 is the augmentation onto the rank-one degree -1 term.
    Simplices are ordered lexicographically; faces carry alternating signs.
    """
    if degree < 0:
        raise InputError("boundary degree must be >= 0")
    top = k.k_simplices(degree)
    if degree == 0:
        return QMatrix([[1] * len(top)], ncols=len(top))
    low = k.k_simplices(degree - 1)
    low_index = {s: i for i, s in enumerate(low)}
    cols = len(top)
    rows = [[0] * cols for _ in low]
    for j, simplex in enumerate(top):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1:]
            rows[low_index[face]][j] += (-1) ** i
    return QMatrix(rows, ncols=cols)


def reduced_betti(k: SimplicialComplex) -> BettiVector:
    """Reduced rational Betti numbers from boundary-matrix ranks."""
    d = k.dim()
    if d <= -2:
        return BettiVector([1])  # empty complex: only H~_{-1} survives
    counts = {-1: 1}
    for deg in range(0, d + 1):
        counts[deg] = len(k.k_simplices(deg))
    ranks = {deg: boundary_matrix(k, deg).rank() for deg in range(0, d + 1)}
    ranks[-1] = 0
    ranks[d + 1] = 0
    betti = []
    for deg in range(-1, d + 1):
        betti.append(counts[deg] - ranks[deg] - ranks[deg + 1])
    return BettiVector(betti)
