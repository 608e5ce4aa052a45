"""Invariant tables and the spectral bookkeeping engine.

Tables are (d+1)x(d+1) grids of nonnegative integers (or None for unknown
cells), row index p downward, column index q rightward.  Two kinds exist:

* ``lyubeznik``: socle-dimension tables; differentials move (p,q) to
  (p+r, q+r-1) on page r and the limit page must vanish off the diagonal
  with total diagonal mass exactly 1.
* ``cdr``: Cech-de Rham tables; differentials move (p,q) to (p-r, q+r-1)
  and the limit page is compared against reduced Betti numbers of the
  complement along the anti-diagonals 2n - p - q - 1 = k.

All searches are exhaustive bounded integer searches; the environment
variable INVAR_SEARCH_LIMIT (default 10**7) caps the number of visited
nodes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import InputError, SearchLimitError
from .qlinalg import QMatrix

KIND_LYUBEZNIK = "lyubeznik"
KIND_CDR = "cdr"
_KINDS = (KIND_LYUBEZNIK, KIND_CDR)

DEFAULT_BOUND = 10
DEFAULT_SEARCH_LIMIT = 10**7

Cell = tuple[int, int]


def _search_limit(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("INVAR_SEARCH_LIMIT")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"INVAR_SEARCH_LIMIT must be an integer, got {env!r}") from exc
    return DEFAULT_SEARCH_LIMIT


class InvariantTable:
    """Upper-triangular table of nonnegative integers with optional unknowns."""

    __slots__ = ("kind", "entries")

    def __init__(self, kind: str, entries: Iterable[Sequence]):
        if kind not in _KINDS:
            raise InputError(f"unknown table kind: {kind!r}")
        rows = tuple(tuple(row) for row in entries)
        size = len(rows)
        if size == 0 or any(len(r) != size for r in rows):
            raise InputError("table entries must form a nonempty square array")
        for row in rows:
            for v in row:
                if v is None:
                    continue
                if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                    raise InputError(f"table entries must be nonnegative integers or None, got {v!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("InvariantTable is immutable")

    @classmethod
    def zeros(cls, kind: str, d: int) -> "InvariantTable":
        if d < 0:
            raise InputError("table dimension must be nonnegative")
        return cls(kind, [[0] * (d + 1) for _ in range(d + 1)])

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def entry(self, p: int, q: int):
        return self.entries[p][q]

    def cells(self) -> list[Cell]:
        n = self.d + 1
        return [(p, q) for p in range(n) for q in range(n)]

    def unknown_cells(self) -> tuple[Cell, ...]:
        return tuple((p, q) for p, q in self.cells() if self.entries[p][q] is None)

    def is_complete(self) -> bool:
        return not self.unknown_cells()

    def with_entries(self, assignment: Mapping[Cell, int | None]) -> "InvariantTable":
        rows = [list(r) for r in self.entries]
        for (p, q), v in assignment.items():
            if not (0 <= p <= self.d and 0 <= q <= self.d):
                raise InputError(f"cell {(p, q)} outside table of dimension {self.d}")
            rows[p][q] = v
        return InvariantTable(self.kind, rows)

    def __eq__(self, other):
        return (
            isinstance(other, InvariantTable)
            and self.kind == other.kind
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.kind, self.entries))

    def __repr__(self):
        return f"InvariantTable(kind={self.kind!r}, d={self.d})"

    def pretty(self) -> str:
        """Aligned grid; zero prints as a middle dot, unknown as '?'."""
        cells = [
            ["?" if v is None else ("·" if v == 0 else str(v)) for v in row]
            for row in self.entries
        ]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)

    def as_json_dict(self, notes: Sequence[str] = ()) -> dict:
        return {
            "kind": self.kind,
            "dim": self.d,
            "entries": [list(row) for row in self.entries],
            "notes": list(notes),
        }


@dataclass(frozen=True)
class OgusBounds:
    """Thresholds above which local cohomology is Artinian (f_y) or zero (v_y).

    ambient_dim is the dimension n of the surrounding affine space; it is
    needed to convert the thresholds into vanishing column ranges q < n - v_y
    and q < n - f_y of a Lyubeznik table.
    """

    f_y: int
    v_y: int
    ambient_dim: int

    def __post_init__(self):
        if self.f_y > self.v_y:
            raise InputError("f_y must not exceed v_y")


def validate_lambda(table: InvariantTable, bounds: OgusBounds | None = None) -> list[str]:
    """Structural diagnostics for a Lyubeznik table; empty list means valid.

    Unknown cells are skipped: only known entries can violate a constraint.
    """
    if table.kind != KIND_LYUBEZNIK:
        raise InputError("validate_lambda expects a lyubeznik table")
    d = table.d
    diags: list[str] = []
    for p, q in table.cells():
        v = table.entry(p, q)
        if v is None:
            continue
        if p > q and v != 0:
            diags.append(f"triangularity violated: entry ({p},{q}) = {v} below the diagonal")
        if d >= 2 and q == d and p in (0, 1) and v != 0:
            diags.append(
                f"entry ({p},{d}) = {v} must vanish: top-column entries (0,d) and (1,d) "
                "are zero whenever d >= 2"
            )
    vdd = table.entry(d, d)
    if vdd is not None and vdd == 0:
        diags.append(f"entry ({d},{d}) must be positive")
    if bounds is not None:
        n = bounds.ambient_dim
        for p, q in table.cells():
            v = table.entry(p, q)
            if v is None or v == 0:
                continue
            if q < n - bounds.v_y:
                diags.append(
                    f"entry ({p},{q}) = {v} lies in the vanishing range q < {n - bounds.v_y}"
                )
            elif p >= 1 and q < n - bounds.f_y:
                diags.append(
                    f"entry ({p},{q}) = {v} lies in the Artinian range q < {n - bounds.f_y} "
                    "where only row 0 may be nonzero"
                )
    return diags


def euler_sum(table: InvariantTable) -> int:
    """Alternating sum of all entries with sign (-1)^(p+q)."""
    if table.kind != KIND_LYUBEZNIK:
        raise InputError("euler_sum expects a lyubeznik table")
    if not table.is_complete():
        raise InputError("euler_sum requires a table without unknown cells")
    return sum(
        (-1) ** (p + q) * table.entry(p, q) for p, q in table.cells()
    )


def differential_target(kind: str, page: int, cell: Cell) -> Cell:
    """Where the page-r differential sends a table cell."""
    p, q = cell
    if kind == KIND_LYUBEZNIK:
        return (p + page, q + page - 1)
    if kind == KIND_CDR:
        return (p - page, q + page - 1)
    raise InputError(f"unknown table kind: {kind!r}")


def _in_table(cell: Cell, d: int) -> bool:
    p, q = cell
    return 0 <= p <= d and 0 <= q <= d


def _page_candidates(entries, kind: str, page: int, d: int) -> list[tuple[Cell, Cell]]:
    out = []
    for p in range(d + 1):
        for q in range(d + 1):
            if entries[p][q] <= 0:
                continue
            tgt = differential_target(kind, page, (p, q))
            if _in_table(tgt, d) and entries[tgt[0]][tgt[1]] > 0:
                out.append(((p, q), tgt))
    return out


def _can_change_later(entries, kind: str, cell: Cell, next_page: int, d: int) -> bool:
    """Whether any differential on page >= next_page can still lower this cell."""
    p, q = cell
    for r in range(next_page, d + 2):
        tgt = differential_target(kind, r, (p, q))
        if _in_table(tgt, d) and entries[tgt[0]][tgt[1]] > 0:
            return True
        if kind == KIND_LYUBEZNIK:
            src = (p - r, q - r + 1)
        else:
            src = (p + r, q - r + 1)
        if _in_table(src, d) and entries[src[0]][src[1]] > 0:
            return True
    return False


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int):
        self.nodes = 0
        self.limit = limit

    def tick(self, amount: int = 1):
        self.nodes += amount
        if self.nodes > self.limit:
            raise SearchLimitError(
                f"search exceeded the node limit of {self.limit}; "
                "raise INVAR_SEARCH_LIMIT to search further"
            )


def _search_ranks(entries, kind: str, d: int, page: int, counter: _Counter,
                  accept, prune, witness: list):
    """Depth-first search over differential ranks, one page at a time."""
    counter.tick()
    if page > d + 1:
        return accept(entries)
    cands = _page_candidates(entries, kind, page, d)
    if not cands:
        return _search_ranks(entries, kind, d, page + 1, counter, accept, prune, witness)

    rows = [list(r) for r in entries]

    def choose(i: int) -> bool:
        if i == len(cands):
            new = tuple(tuple(r) for r in rows)
            if not prune(new, page + 1):
                return False
            return _search_ranks(new, kind, d, page + 1, counter, accept, prune, witness)
        counter.tick()
        (sp, sq), (tp, tq) = cands[i]
        top = min(rows[sp][sq], rows[tp][tq])
        for rank in range(top, -1, -1):
            rows[sp][sq] -= rank
            rows[tp][tq] -= rank
            if rank:
                witness.append((page, (sp, sq), (tp, tq), rank))
            if choose(i + 1):
                return True
            if rank:
                witness.pop()
            rows[sp][sq] += rank
            rows[tp][tq] += rank
        return False

    return choose(0)


def _lambda_accept(entries) -> bool:
    d = len(entries) - 1
    total = 0
    for p in range(d + 1):
        for q in range(d + 1):
            if p == q:
                total += entries[p][q]
            elif entries[p][q] != 0:
                return False
    return total == 1


def _lambda_prune(entries, next_page: int, kind: str = KIND_LYUBEZNIK) -> bool:
    d = len(entries) - 1
    diag = 0
    for p in range(d + 1):
        for q in range(d + 1):
            v = entries[p][q]
            if p == q:
                diag += v
            elif v > 0 and not _can_change_later(entries, kind, (p, q), next_page, d):
                return False
    return diag >= 1


def check_convergence_lambda(table: InvariantTable, *, search_limit: int | None = None,
                             _counter: _Counter | None = None):
    """Decide whether differential ranks can converge the table to one socle copy.

    Returns (feasible, witness); the witness is a tuple of
    (page, source_cell, target_cell, rank) with positive ranks, or None.
    """
    if table.kind != KIND_LYUBEZNIK:
        raise InputError("check_convergence_lambda expects a lyubeznik table")
    if not table.is_complete():
        raise InputError("check_convergence_lambda requires a table without unknown cells")
    # differentials flip parity, so the alternating sum is conserved; a limit
    # page concentrated on the diagonal with total 1 forces it to be 1 already
    if euler_sum(table) != 1:
        return False, None
    counter = _counter if _counter is not None else _Counter(_search_limit(search_limit))
    witness: list = []
    ok = _search_ranks(
        table.entries, KIND_LYUBEZNIK, table.d, 2, counter, _lambda_accept,
        lambda entries, nxt: _lambda_prune(entries, nxt), witness,
    )
    return (True, tuple(witness)) if ok else (False, None)


def _antidiagonal_sums(entries, n: int) -> list[int]:
    d = len(entries) - 1
    sums = [0] * (2 * n)
    for p in range(d + 1):
        for q in range(d + 1):
            k = 2 * n - p - q - 1
            sums[k] += entries[p][q]
    return sums


def _normalize_betti(betti: Sequence[int], n: int) -> list[int]:
    vals = list(betti)
    if any(not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in vals):
        raise InputError("Betti numbers must be nonnegative integers")
    if len(vals) > 2 * n:
        if any(vals[2 * n:]):
            raise InputError(
                f"Betti vector has nonzero entries beyond degree {2 * n - 1}, "
                "impossible for the given ambient dimension"
            )
        vals = vals[: 2 * n]
    return vals + [0] * (2 * n - len(vals))


def check_cdr(table: InvariantTable, betti: Sequence[int], n: int, *,
              require_degenerate: bool = False,
              search_limit: int | None = None) -> bool:
    """Decide whether the table can converge to the given complement Betti numbers.

    betti is the reduced Betti vector of the complement, indexed from degree 0.
    With require_degenerate (honored for tables of dimension <= 3), only the
    all-ranks-zero assignment is accepted.
    """
    if table.kind != KIND_CDR:
        raise InputError("check_cdr expects a cdr table")
    if not table.is_complete():
        raise InputError("check_cdr requires a table without unknown cells")
    if n < table.d + 1:
        raise InputError(
            f"ambient dimension {n} is too small for a table of dimension {table.d}"
        )
    target = _normalize_betti(betti, n)

    def accept(entries) -> bool:
        return _antidiagonal_sums(entries, n) == target

    if require_degenerate and table.d <= 3:
        return accept(table.entries)

    if sum((-1) ** k * v for k, v in enumerate(target)) != -sum(
        (-1) ** (p + q) * table.entry(p, q) for p, q in table.cells()
    ):
        return False

    def prune(entries, next_page: int) -> bool:
        sums = _antidiagonal_sums(entries, n)
        return all(s >= t for s, t in zip(sums, target))

    counter = _Counter(_search_limit(search_limit))
    witness: list = []
    return _search_ranks(table.entries, KIND_CDR, table.d, 2, counter, accept, prune, witness)


class SpectralState:
    """One page of a spectral table together with the rank choices taken so far."""

    __slots__ = ("kind", "page", "entries", "history")

    def __init__(self, kind: str, page: int, entries, history=()):
        if kind not in _KINDS:
            raise InputError(f"unknown table kind: {kind!r}")
        if page < 2:
            raise InputError("pages start at 2")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "page", page)
        object.__setattr__(self, "entries", tuple(tuple(r) for r in entries))
        object.__setattr__(self, "history", tuple(history))

    def __setattr__(self, name, value):
        raise AttributeError("SpectralState is immutable")

    @classmethod
    def start(cls, table: InvariantTable) -> "SpectralState":
        if not table.is_complete():
            raise InputError("spectral bookkeeping needs a fully known table")
        return cls(table.kind, 2, table.entries)

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def differentials(self) -> list[tuple[Cell, Cell]]:
        """Source/target pairs that admit a nonzero rank on this page."""
        return _page_candidates(self.entries, self.kind, self.page, self.d)

    def euler(self) -> int:
        return sum(
            (-1) ** (p + q) * self.entries[p][q]
            for p in range(self.d + 1)
            for q in range(self.d + 1)
        )

    def apply_page(self, ranks: Mapping[Cell, int]) -> "SpectralState":
        """Advance one page, subtracting each rank from its source and target."""
        d = self.d
        rows = [list(r) for r in self.entries]
        history = list(self.history)
        for src in sorted(ranks):
            rank = ranks[src]
            if not _in_table(src, d):
                raise InputError(f"cell {src} outside table")
            tgt = differential_target(self.kind, self.page, src)
            if not _in_table(tgt, d):
                raise InputError(f"differential from {src} leaves the table on page {self.page}")
            if rank < 0 or rank > min(self.entries[src[0]][src[1]], self.entries[tgt[0]][tgt[1]]):
                raise InputError(
                    f"rank {rank} at {src} exceeds min(source, target) on page {self.page}"
                )
            rows[src[0]][src[1]] -= rank
            rows[tgt[0]][tgt[1]] -= rank
            if rank:
                history.append((self.page, src, tgt, rank))
        for p in range(d + 1):
            for q in range(d + 1):
                if rows[p][q] < 0:
                    raise InputError(
                        f"cell ({p},{q}) driven negative on page {self.page}: "
                        "incoming plus outgoing ranks exceed the entry"
                    )
        return SpectralState(self.kind, self.page + 1, rows, history)


@dataclass(frozen=True)
class LinearRelation:
    """An integer relation sum(coeff * entry(cell)) + const = 0."""

    coeffs: tuple[tuple[Cell, int], ...]
    const: int

    def render(self) -> str:
        terms = list(self.coeffs)
        if not terms:
            return f"{self.const} = 0"
        (cell, a), rest = terms[0], terms[1:]
        lhs = f"({cell[0]},{cell[1]})" if a == 1 else f"{a}*({cell[0]},{cell[1]})"
        parts = []
        for c, coeff in rest:
            coeff = -coeff
            name = f"({c[0]},{c[1]})"
            if coeff == 1:
                parts.append(("+", name))
            elif coeff == -1:
                parts.append(("-", name))
            elif coeff > 0:
                parts.append(("+", f"{coeff}*{name}"))
            else:
                parts.append(("-", f"{-coeff}*{name}"))
        if self.const:
            k = -self.const
            parts.append(("+", str(k)) if k > 0 else ("-", str(-k)))
        if not parts:
            return f"{lhs} = 0"
        first_sign, first_term = parts[0]
        rhs = (f"-{first_term}" if first_sign == "-" else first_term)
        for sign, term in parts[1:]:
            rhs += f" {sign} {term}"
        return f"{lhs} = {rhs}"


@dataclass(frozen=True)
class DeductionResult:
    """Summary of an exhaustive bounded completion search."""

    unknown_cells: tuple[Cell, ...]
    bound: int
    contradiction: bool
    feasible_count: int
    forced: dict
    identities: tuple[LinearRelation, ...]
    completions: tuple[tuple[int, ...], ...]
    truncated: bool
    nodes: int
    _first: tuple[int, ...] | None = field(default=None, repr=False)
    _diffs: tuple[tuple[int, ...], ...] = field(default=(), repr=False)

    def implies(self, coeffs: Mapping[Cell, int], const: int = 0) -> bool:
        """Whether the relation holds on every feasible completion."""
        if self.contradiction:
            return True
        index = {c: i for i, c in enumerate(self.unknown_cells)}
        vec = [0] * len(self.unknown_cells)
        for cell, coeff in coeffs.items():
            if cell not in index:
                raise InputError(f"cell {cell} was not unknown in this deduction")
            vec[index[cell]] = coeff
        if sum(a * b for a, b in zip(vec, self._first)) + const != 0:
            return False
        return all(
            sum(a * b for a, b in zip(vec, diff)) == 0 for diff in self._diffs
        )

    def notes(self) -> list[str]:
        out = []
        if self.contradiction:
            out.append("contradiction: no completion satisfies the constraints")
            return out
        out.append(f"feasible completions: {self.feasible_count}"
                   + (" (list truncated)" if self.truncated else ""))
        for cell in sorted(self.forced):
            out.append(f"forced: ({cell[0]},{cell[1]}) = {self.forced[cell]}")
        for rel in self.identities:
            out.append(f"identity: {rel.render()}")
        return out


def _reduce_against_basis(vec: list[int], basis: list[list[int]]) -> list[int] | None:
    """Integer echelon reduction; returns the new independent vector or None."""
    v = list(vec)
    for b in basis:
        lead = next(i for i, x in enumerate(b) if x != 0)
        if v[lead] != 0:
            pivot = b[lead]
            coeff = v[lead]
            v = [x * pivot - y * coeff for x, y in zip(v, b)]
    if not any(v):
        return None
    g = 0
    for x in v:
        g = gcd(g, x)
    v = [x // g for x in v]
    lead = next(i for i, x in enumerate(v) if x != 0)
    if v[lead] < 0:
        v = [-x for x in v]
    return v


_COMPLETION_CAP = 20000


def deduce_lambda(table: InvariantTable, bound: int | None = None, *,
                  search_limit: int | None = None) -> DeductionResult:
    """Enumerate all valid, convergent completions of a partially known table.

    Unknown cells first inherit the structural zeros (below the diagonal, and
    the (0,d)/(1,d) corner for d >= 2); the remaining unknowns range over
    0..bound.  Reports cells that take the same value in every feasible
    completion (structurally zeroed cells included) and a basis of integer
    linear relations satisfied by all of them.
    """
    if table.kind != KIND_LYUBEZNIK:
        raise InputError("deduce_lambda expects a lyubeznik table")
    b = DEFAULT_BOUND if bound is None else bound
    if b < 0:
        raise InputError("bound must be nonnegative")
    d = table.d
    structural = {}
    for p, q in table.unknown_cells():
        if p > q or (d >= 2 and q == d and p in (0, 1)):
            structural[(p, q)] = 0
    base = table.with_entries(structural)
    unknowns = base.unknown_cells()
    counter = _Counter(_search_limit(search_limit))

    # reject early if the known part is already inconsistent
    base_diags = validate_lambda(base)

    first: tuple[int, ...] | None = None
    diffs: list[list[int]] = []
    constant: dict[Cell, int] = {}
    varying: set[Cell] = set()
    completions: list[tuple[int, ...]] = []
    truncated = False
    count = 0

    known_euler = sum(
        (-1) ** (p + q) * base.entry(p, q)
        for p, q in base.cells()
        if base.entry(p, q) is not None
    )

    def record(vec: tuple[int, ...]):
        nonlocal first, truncated, count
        count += 1
        if first is None:
            first = vec
            for cell, v in zip(unknowns, vec):
                constant[cell] = v
        else:
            for i, cell in enumerate(unknowns):
                if cell not in varying and constant.get(cell) != vec[i]:
                    varying.add(cell)
                    constant.pop(cell, None)
            diff = [a - b_ for a, b_ in zip(vec, first)]
            reduced = _reduce_against_basis(diff, diffs)
            if reduced is not None:
                diffs.append(reduced)
                diffs.sort(key=lambda v: next(i for i, x in enumerate(v) if x != 0))
        if len(completions) < _COMPLETION_CAP:
            completions.append(vec)
        else:
            truncated = True

    def try_completion(values: tuple[int, ...]):
        candidate = base.with_entries(dict(zip(unknowns, values)))
        if validate_lambda(candidate):
            return
        ok, _ = check_convergence_lambda(candidate, _counter=counter)
        if ok:
            record(values)

    if base_diags:
        pass  # the known entries alone violate the structure: no completion exists
    elif not unknowns:
        counter.tick()
        ok, _ = check_convergence_lambda(base, _counter=counter)
        if ok:
            record(())
    else:
        # the alternating sum of a convergent table is 1, so the last unknown
        # is determined by the others; enumerate only the free ones
        last = unknowns[-1]
        last_sign = (-1) ** (last[0] + last[1])
        free = unknowns[:-1]

        def enumerate_free(i: int, values: list[int], partial_euler: int):
            counter.tick()
            if i == len(free):
                residual = (1 - known_euler - partial_euler) * last_sign
                if 0 <= residual <= b:
                    try_completion(tuple(values) + (residual,))
                return
            sign = (-1) ** (free[i][0] + free[i][1])
            for v in range(b + 1):
                values.append(v)
                enumerate_free(i + 1, values, partial_euler + sign * v)
                values.pop()

        enumerate_free(0, [], 0)

    forced = dict(sorted(constant.items()))
    if count > 0:
        forced = dict(sorted({**structural, **forced}.items()))
    identities: list[LinearRelation] = []
    if count > 0 and diffs:
        nonforced = [c for c in unknowns if c in varying]
        col_of = {c: i for i, c in enumerate(unknowns)}
        dmat = QMatrix([[row[col_of[c]] for c in nonforced] for row in diffs])
        for basis_vec in dmat.nullspace_basis():
            denom_lcm = 1
            for x in basis_vec:
                denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
            ints = [int(x * denom_lcm) for x in basis_vec]
            g = 0
            for x in ints:
                g = gcd(g, x)
            ints = [x // g for x in ints]
            lead = next(i for i, x in enumerate(ints) if x != 0)
            if ints[lead] < 0:
                ints = [-x for x in ints]
            const = -sum(
                coeff * first[col_of[cell]]
                for cell, coeff in zip(nonforced, ints)
            )
            coeffs = tuple(
                (cell, coeff) for cell, coeff in zip(nonforced, ints) if coeff
            )
            identities.append(LinearRelation(coeffs, const))
        identities.sort(key=lambda r: r.coeffs)

    return DeductionResult(
        unknown_cells=unknowns,
        bound=b,
        contradiction=count == 0,
        feasible_count=count,
        forced=forced,
        identities=tuple(identities),
        completions=tuple(completions),
        truncated=truncated,
        nodes=counter.nodes,
        _first=first,
        _diffs=tuple(tuple(v) for v in diffs),
    )


def canonical_small_tables(dim_y: int, a: int = 1) -> InvariantTable:
    """Closed-form Lyubeznik tables in dimension 0, 1, 2.

    In dimension 2, a is the number of connected components of the punctured
    spectrum: the table has a-1 in cell (0,1) and a in cell (2,2).
    """
    if a < 1:
        raise InputError("a must be a positive integer")
    if dim_y == 0:
        return InvariantTable(KIND_LYUBEZNIK, [[1]])
    if dim_y == 1:
        return InvariantTable(KIND_LYUBEZNIK, [[0, 0], [0, 1]])
    if dim_y == 2:
        return InvariantTable(
            KIND_LYUBEZNIK,
            [[0, a - 1, 0], [0, 0, 0], [0, 0, a]],
        )
    raise InputError("closed-form tables exist only for dimension <= 2")
