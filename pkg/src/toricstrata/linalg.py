"""Exact integer and rational linear algebra.

Everything here runs on arbitrary-precision ``int`` and ``fractions.Fraction``;
no floating point enters any decision.  Conventions relied on elsewhere:

* Hermite normal form is row-style: ``U @ A == H`` with ``U`` unimodular,
  positive pivots, entries above a pivot reduced into ``[0, pivot)``, zero
  rows last.  Canonical subgroup bases depend on this normalization.
* Smith normal form returns ``(U, S, V)`` with ``U @ A @ V == S``, ``S``
  diagonal and nonnegative, each diagonal entry dividing the next.
* An inequality ``(coeffs, rhs, strict)`` means ``coeffs . x >= rhs``
  (``> rhs`` when strict); an equality ``(coeffs, rhs)`` means
  ``coeffs . x == rhs`` with integer data.
* Rational feasibility is decided by Fourier-Motzkin elimination after exact
  Gaussian substitution of the equalities.  The intended operating envelope
  is small: at most ~10 variables and a few dozen constraints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ConsistencyError, InputError

IntVec = tuple[int, ...]

__all__ = [
    "IntMatrix",
    "IntVec",
    "IntegerSolution",
    "LinearSystem",
    "first_lattice_point",
    "hermite_normal_form",
    "integer_rank",
    "lattice_points_bounded",
    "linear_system",
    "primitive_vector",
    "rational_feasible",
    "smith_normal_form",
    "solve_integer_system",
]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y == g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _ceil_div(a: int, b: int) -> int:
    if b < 0:
        a, b = -a, -b
    return -((-a) // b)


def _floor_div(a: int, b: int) -> int:
    if b < 0:
        a, b = -a, -b
    return a // b


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers (row-major)."""

    rows: int
    cols: int
    entries: tuple[IntVec, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise InputError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise InputError("ragged matrix rows")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise InputError("matrix entries must be integers")

    @staticmethod
    def from_rows(data: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [tuple(row) for row in data]
        if cols is None:
            if not rows:
                raise InputError("column count required for an empty matrix")
            cols = len(rows[0])
        return IntMatrix(len(rows), cols, tuple(rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    def row(self, i: int) -> IntVec:
        return self.entries[i]

    def column(self, j: int) -> IntVec:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def apply(self, vec: Sequence[int]) -> IntVec:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise InputError("vector length does not match matrix columns")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise InputError("matrix dimensions do not match for multiplication")
        cols = [other.column(j) for j in range(other.cols)]
        data = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries
        )
        return IntMatrix(self.rows, other.cols, data)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def primitive_vector(vec: Sequence[int]) -> IntVec:
    """Divide a nonzero integer vector by the gcd of its entries."""
    g = 0
    for x in vec:
        g = math.gcd(g, x)
    if g == 0:
        raise InputError("zero vector has no primitive representative")
    return tuple(x // g for x in vec)


def _identity_lists(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, S, V) with U @ a @ V == S in Smith normal form.

    U and V are unimodular; S is diagonal with nonnegative entries and each
    diagonal entry divides the next.
    """
    m, n = a.rows, a.cols
    d = [list(row) for row in a.entries]
    u = _identity_lists(m)
    v = _identity_lists(n)

    def swap_rows(i: int, j: int) -> None:
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for mat in (d, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(src: int, dst: int, k: int) -> None:
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def row_combine(i: int, j: int, p: int, q: int, r: int, s: int) -> None:
        for mat in (d, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [p * x + q * y for x, y in zip(ri, rj)]
            mat[j] = [r * x + s * y for x, y in zip(ri, rj)]

    def col_combine(i: int, j: int, p: int, q: int, r: int, s: int) -> None:
        for mat in (d, v):
            for row in mat:
                x, y = row[i], row[j]
                row[i] = p * x + q * y
                row[j] = r * x + s * y

    t = 0
    limit = min(m, n)
    while t < limit:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = abs(d[i][j])
                if x and (best is None or x < best):
                    pivot, best = (i, j), x
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            clean = False
            while not clean:
                clean = True
                for i in range(t + 1, m):
                    b = d[i][t]
                    if b:
                        aa = d[t][t]
                        if b % aa == 0:
                            add_row(t, i, -(b // aa))
                        else:
                            g, x, y = _xgcd(aa, b)
                            row_combine(t, i, x, y, -(b // g), aa // g)
                        clean = False
                for j in range(t + 1, n):
                    b = d[t][j]
                    if b:
                        aa = d[t][t]
                        if b % aa == 0:
                            col_combine(t, j, 1, 0, -(b // aa), 1)
                        else:
                            g, x, y = _xgcd(aa, b)
                            col_combine(t, j, x, y, -(b // g), aa // g)
                        clean = False
                        break  # column ops can refill column t; restart the sweep
            bad = None
            aa = d[t][t]
            for i in range(t + 1, m):
                for x in d[i][t + 1 :]:
                    if x % aa:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    um = IntMatrix.from_rows(u, m) if m else IntMatrix(0, 0, ())
    vm = IntMatrix.from_rows(v, n) if n else IntMatrix(0, 0, ())
    sm = IntMatrix.from_rows(d, n) if m else IntMatrix(0, n, ())
    return um, sm, vm


def hermite_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Return (H, U) with U @ a == H in row-style Hermite normal form.

    Pivots are positive, entries above each pivot lie in [0, pivot), pivot
    columns strictly increase, and zero rows come last.
    """
    m, n = a.rows, a.cols
    h = [list(row) for row in a.entries]
    u = _identity_lists(m)

    def swap(i: int, j: int) -> None:
        h[i], h[j] = h[j], h[i]
        u[i], u[j] = u[j], u[i]

    def add_row(src: int, dst: int, k: int) -> None:
        h[dst] = [x + k * y for x, y in zip(h[dst], h[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def negate(i: int) -> None:
        h[i] = [-x for x in h[i]]
        u[i] = [-x for x in u[i]]

    r = 0
    for j in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if h[i][j] != 0]
            if len(nz) <= 1:
                break
            i0 = min(nz, key=lambda i: (abs(h[i][j]), i))
            for i in nz:
                if i != i0:
                    add_row(i0, i, -(h[i][j] // h[i0][j]))
        nz = [i for i in range(r, m) if h[i][j] != 0]
        if not nz:
            continue
        if nz[0] != r:
            swap(r, nz[0])
        if h[r][j] < 0:
            negate(r)
        for i in range(r):
            q = h[i][j] // h[r][j]
            if q:
                add_row(r, i, -q)
        r += 1

    hm = IntMatrix.from_rows(h, n) if m else IntMatrix(0, n, ())
    um = IntMatrix.from_rows(u, m) if m else IntMatrix(0, 0, ())
    return hm, um


def integer_rank(a: IntMatrix) -> int:
    """Rank of the matrix over the rationals."""
    h, _ = hermite_normal_form(a)
    return sum(1 for row in h.entries if any(row))


# ---------------------------------------------------------------------------
# Linear systems


@dataclass(frozen=True)
class LinearSystem:
    """Mixed equality/inequality system over a fixed number of variables.

    ``equalities`` entries are ``(coeffs, rhs)`` over the integers meaning
    ``coeffs . x == rhs``.  ``inequalities`` entries are
    ``(coeffs, rhs, strict)`` over the rationals meaning ``coeffs . x >= rhs``
    (strictly greater when ``strict``).
    """

    dim: int
    equalities: tuple[tuple[IntVec, int], ...]
    inequalities: tuple[tuple[tuple[Fraction, ...], Fraction, bool], ...]


def linear_system(
    dim: int,
    equalities: Iterable[tuple[Sequence[int], int]] = (),
    inequalities: Iterable[tuple[Sequence[Fraction | int], Fraction | int, bool]] = (),
) -> LinearSystem:
    """Validate and freeze a :class:`LinearSystem`."""
    if dim < 0:
        raise InputError("system dimension must be nonnegative")
    eqs = []
    for coeffs, rhs in equalities:
        vec = tuple(coeffs)
        if len(vec) != dim:
            raise InputError("equality coefficient vector has wrong length")
        for x in vec:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError("equality coefficients must be integers")
        if not isinstance(rhs, int) or isinstance(rhs, bool):
            raise InputError("equality right-hand side must be an integer")
        eqs.append((vec, rhs))
    ineqs = []
    for coeffs, rhs, strict in inequalities:
        vec = tuple(Fraction(x) for x in coeffs)
        if len(vec) != dim:
            raise InputError("inequality coefficient vector has wrong length")
        ineqs.append((vec, Fraction(rhs), bool(strict)))
    return LinearSystem(dim, tuple(eqs), tuple(ineqs))


@dataclass(frozen=True)
class IntegerSolution:
    """Integer solution set of an equality system: particular + lattice."""

    particular: IntVec
    kernel_basis: tuple[IntVec, ...]


def solve_integer_system(system: LinearSystem) -> IntegerSolution | None:
    """Solve the equality part of ``system`` exactly over the integers.

    Returns ``None`` when no integer solution exists (a certificate: the
    Smith-form reduction exhibits either a non-divisible pivot or an
    inconsistent zero row).  Inequalities are not accepted here.
    """
    if system.inequalities:
        raise InputError("solve_integer_system accepts equality-only systems")
    n = system.dim
    k = len(system.equalities)
    if k == 0:
        basis = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return IntegerSolution(tuple(0 for _ in range(n)), basis)
    a = IntMatrix.from_rows([c for c, _ in system.equalities], n)
    b = [rhs for _, rhs in system.equalities]
    u, s, v = smith_normal_form(a)
    c = u.apply(b)
    y = [0] * n
    limit = min(k, n)
    for i in range(limit):
        si = s.entries[i][i]
        if si:
            if c[i] % si:
                return None
            y[i] = c[i] // si
        elif c[i]:
            return None
    for i in range(limit, k):
        if c[i]:
            return None
    particular = v.apply(y)
    kernel = tuple(
        v.column(i) for i in range(n) if i >= limit or s.entries[i][i] == 0
    )
    return IntegerSolution(particular, kernel)


# ---------------------------------------------------------------------------
# Fourier-Motzkin machinery
#
# Internal rows are integer triples (coeffs, rhs, strict) meaning
# coeffs . x >= rhs (strictly when strict).  Constant rows are checked and
# dropped as they appear.

_Row = tuple[IntVec, int, bool]


class _Infeasible(Exception):
    pass


def _scale_inequality(coeffs: Sequence[Fraction], rhs: Fraction, strict: bool) -> _Row:
    denom = rhs.denominator
    for x in coeffs:
        denom = denom * x.denominator // math.gcd(denom, x.denominator)
    vec = tuple(int(x * denom) for x in coeffs)
    return vec, int(rhs * denom), strict


def _normalize_row(row: _Row) -> _Row | None:
    """Reduce by the content gcd; return None for a satisfied constant row."""
    vec, rhs, strict = row
    g = 0
    for x in vec:
        g = math.gcd(g, x)
    if g == 0:
        if rhs > 0 or (strict and rhs >= 0):
            raise _Infeasible
        return None
    g = math.gcd(g, rhs)
    if g > 1:
        vec = tuple(x // g for x in vec)
        rhs //= g
    return vec, rhs, strict


def _add_rows(store: dict[IntVec, tuple[int, bool]], rows: Iterable[_Row]) -> None:
    for row in rows:
        norm = _normalize_row(row)
        if norm is None:
            continue
        vec, rhs, strict = norm
        prev = store.get(vec)
        if prev is None or (rhs, strict) > prev:
            store[vec] = (rhs, strict)


def _fm_chain(rows: Iterable[_Row], nvars: int) -> list[list[_Row]] | None:
    """Projection chain: chain[k] constrains variables 0..k-1 only.

    Returns ``None`` when the system is rationally infeasible.
    """
    try:
        store: dict[IntVec, tuple[int, bool]] = {}
        _add_rows(store, rows)
        chain: list[list[_Row]] = [[] for _ in range(nvars + 1)]
        chain[nvars] = [(v, r, s) for v, (r, s) in store.items()]
        for k in range(nvars, 0, -1):
            var = k - 1
            pos, neg, zero = [], [], []
            for row in chain[k]:
                c = row[0][var]
                (pos if c > 0 else neg if c < 0 else zero).append(row)
            store = {}
            _add_rows(store, zero)
            for pvec, prhs, pstr in pos:
                pc = pvec[var]
                for qvec, qrhs, qstr in neg:
                    qc = -qvec[var]
                    vec = tuple(qc * x + pc * y for x, y in zip(pvec, qvec))
                    _add_rows(store, [(vec, qc * prhs + pc * qrhs, pstr or qstr)])
            chain[k - 1] = [(v, r, s) for v, (r, s) in store.items()]
        return chain
    except _Infeasible:
        return None


def _segment(
    rows: Iterable[_Row], var: int, prefix: Sequence[Fraction]
) -> tuple[tuple[Fraction, bool] | None, tuple[Fraction, bool] | None]:
    """Exact lower/upper bounds on variable ``var`` given assigned prefix."""
    lower: tuple[Fraction, bool] | None = None
    upper: tuple[Fraction, bool] | None = None
    for vec, rhs, strict in rows:
        c = vec[var]
        if c == 0:
            continue
        rest = rhs - sum(a * x for a, x in zip(vec[:var], prefix))
        bound = Fraction(rest, c)
        if c > 0:
            if lower is None or (bound, strict) > lower:
                lower = (bound, strict)
        else:
            if upper is None or (bound, not strict) < (upper[0], not upper[1]):
                upper = (bound, strict)
    return lower, upper


def rational_feasible(system: LinearSystem) -> tuple[Fraction, ...] | None:
    """Decide rational feasibility; return an exact witness or ``None``.

    Equalities are removed first by exact Gaussian substitution, the
    remaining inequalities go through Fourier-Motzkin elimination, and a
    witness is rebuilt by back-substitution.  Strict inequalities are
    honored throughout.
    """
    n = system.dim

    # Gaussian elimination on the equalities over the rationals.
    eq_rows = [
        [Fraction(x) for x in coeffs] + [Fraction(rhs)]
        for coeffs, rhs in system.equalities
    ]
    pivots: list[tuple[int, int]] = []  # (row index, pivot column)
    rank = 0
    for col in range(n):
        sel = None
        for i in range(rank, len(eq_rows)):
            if eq_rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        eq_rows[rank], eq_rows[sel] = eq_rows[sel], eq_rows[rank]
        piv = eq_rows[rank][col]
        eq_rows[rank] = [x / piv for x in eq_rows[rank]]
        for i in range(len(eq_rows)):
            if i != rank and eq_rows[i][col]:
                f = eq_rows[i][col]
                eq_rows[i] = [x - f * y for x, y in zip(eq_rows[i], eq_rows[rank])]
        pivots.append((rank, col))
        rank += 1
    for i in range(rank, len(eq_rows)):
        if eq_rows[i][n]:
            return None  # 0 == nonzero
    pivot_cols = [col for _, col in pivots]
    free_cols = [c for c in range(n) if c not in pivot_cols]

    # Substitute pivot variables into the inequalities.
    reduced: list[_Row] = []
    try:
        for coeffs, rhs, strict in system.inequalities:
            const = Fraction(0)
            free_coeffs = {c: coeffs[c] for c in free_cols}
            for (ri, col) in pivots:
                f = coeffs[col]
                if not f:
                    continue
                const += f * eq_rows[ri][n]
                for c in free_cols:
                    free_coeffs[c] -= f * eq_rows[ri][c]
            row = _scale_inequality(
                [free_coeffs[c] for c in free_cols], rhs - const, strict
            )
            norm = _normalize_row(row)
            if norm is not None:
                reduced.append(norm)
    except _Infeasible:
        return None

    nfree = len(free_cols)
    chain = _fm_chain(reduced, nfree)
    if chain is None:
        return None

    # Back-substitute a rational witness for the free variables.
    free_vals: list[Fraction] = []
    for level in range(nfree):
        lower, upper = _segment(chain[level + 1], level, free_vals)
        if lower is None and upper is None:
            val = Fraction(0)
        elif lower is None:
            val = upper[0] - 1
        elif upper is None:
            val = lower[0] + 1
        elif lower[0] < upper[0]:
            val = (lower[0] + upper[0]) / 2
        elif lower[0] == upper[0] and not lower[1] and not upper[1]:
            val = lower[0]
        else:
            raise ConsistencyError("Fourier-Motzkin bounds produced an empty segment")
        free_vals.append(val)

    witness = [Fraction(0)] * n
    for c, val in zip(free_cols, free_vals):
        witness[c] = val
    for (ri, col) in pivots:
        witness[col] = eq_rows[ri][n] - sum(
            eq_rows[ri][c] * witness[c] for c in free_cols
        )

    for coeffs, rhs in system.equalities:
        if sum(a * x for a, x in zip(coeffs, witness)) != rhs:
            raise ConsistencyError("feasibility witness violates an equality")
    for coeffs, rhs, strict in system.inequalities:
        val = sum(a * x for a, x in zip(coeffs, witness))
        if val < rhs or (strict and val == rhs):
            raise ConsistencyError("feasibility witness violates an inequality")
    return tuple(witness)


def _reduce_mod_rows(vec: IntVec, rows) -> IntVec:
    """Shift ``vec`` by row-lattice vectors so pivot entries land in [0, pivot)."""
    out = list(vec)
    for row in rows:
        pivot = next((j for j, x in enumerate(row) if x), None)
        if pivot is None:
            continue
        q = out[pivot] // row[pivot]
        if q:
            out = [a - q * b for a, b in zip(out, row)]
    return tuple(out)


def _inequality_rows(inequalities) -> list[_Row]:
    """Inequalities as closed integer >= rows (strict shifted by one)."""
    rows: list[_Row] = []
    for coeffs, rhs, strict in inequalities:
        vec, r, s = _scale_inequality(coeffs, rhs, strict)
        if s:
            r += 1  # integer points: a.x > r  <=>  a.x >= r + 1
        rows.append((vec, r, False))
    return rows


def _lattice_dfs(
    chain: list[list[_Row]], n: int, stop_at_first: bool, small_first: bool
) -> list[IntVec]:
    found: list[IntVec] = []
    prefix: list[int] = []

    def descend(level: int) -> bool:
        if level == n:
            found.append(tuple(prefix))
            return stop_at_first
        lo, hi = None, None
        for vec, rhs, _ in chain[level + 1]:
            c = vec[level]
            if c == 0:
                continue
            rest = rhs - sum(a * x for a, x in zip(vec[:level], prefix))
            if c > 0:
                b = _ceil_div(rest, c)
                lo = b if lo is None else max(lo, b)
            else:
                b = _floor_div(rest, c)
                hi = b if hi is None else min(hi, b)
        if lo is None or hi is None:
            raise ConsistencyError("unbounded level in boxed lattice search")
        values = range(lo, hi + 1)
        if small_first:
            values = sorted(values, key=lambda v: (abs(v), v < 0))
        for val in values:
            prefix.append(val)
            if descend(level + 1):
                return True
            prefix.pop()
        return False

    descend(0)
    return found


def _boxed_solutions(
    system: LinearSystem, box_bound: int, stop_at_first: bool
) -> list[IntVec]:
    """Integer solutions with coordinates in the box.

    Equalities are eliminated first by passing to coordinates on their
    integer solution lattice, which keeps the search dimension at the
    lattice rank; the box constrains the original coordinates either way.
    """
    if box_bound < 0:
        raise InputError("box bound must be nonnegative")
    n = system.dim
    if not system.equalities:
        rows = _inequality_rows(system.inequalities)
        for i in range(n):
            unit = tuple(1 if j == i else 0 for j in range(n))
            rows.append((unit, -box_bound, False))
            rows.append((tuple(-x for x in unit), -box_bound, False))
        chain = _fm_chain(rows, n)
        if chain is None:
            return []
        return _lattice_dfs(chain, n, stop_at_first, small_first=stop_at_first)

    solution = solve_integer_system(linear_system(n, system.equalities))
    if solution is None:
        return []
    particular = solution.particular
    kernel = solution.kernel_basis
    k = len(kernel)
    if k:
        # Reparametrize: a triangular (Hermite) kernel basis and a particular
        # point reduced into its fundamental domain keep the search ranges
        # close to the box instead of inheriting huge solver coordinates.
        hnf, _ = hermite_normal_form(IntMatrix.from_rows(kernel, n))
        kernel = tuple(hnf.row(i) for i in range(k))
        particular = _reduce_mod_rows(particular, kernel)

    def satisfied(point: IntVec) -> bool:
        if any(abs(x) > box_bound for x in point):
            return False
        for coeffs, rhs, strict in system.inequalities:
            val = sum(a * x for a, x in zip(coeffs, point))
            if val < rhs or (strict and val == rhs):
                return False
        return True

    if k == 0:
        return [particular] if satisfied(particular) else []

    t_ineqs = []
    for coeffs, rhs, strict in system.inequalities:
        t_coeffs = tuple(
            sum(a * b for a, b in zip(coeffs, basis_vec)) for basis_vec in kernel
        )
        t_rhs = rhs - sum(a * b for a, b in zip(coeffs, particular))
        t_ineqs.append((t_coeffs, t_rhs, strict))
    for j in range(n):
        column = tuple(kernel[i][j] for i in range(k))
        if any(column):
            t_ineqs.append((column, -box_bound - particular[j], False))
            t_ineqs.append(
                (tuple(-x for x in column), particular[j] - box_bound, False)
            )
        elif abs(particular[j]) > box_bound:
            return []
    chain = _fm_chain(_inequality_rows(t_ineqs), k)
    if chain is None:
        return []
    points = []
    for t in _lattice_dfs(chain, k, stop_at_first, small_first=stop_at_first):
        point = tuple(
            particular[j] + sum(t[i] * kernel[i][j] for i in range(k))
            for j in range(n)
        )
        if not satisfied(point):
            raise ConsistencyError("reduced lattice search produced a bad point")
        points.append(point)
    return points


def lattice_points_bounded(system: LinearSystem, box_bound: int) -> list[IntVec]:
    """All integer solutions with every coordinate in [-box_bound, box_bound].

    Points are returned in lexicographic order.  The search prunes with
    exact Fourier-Motzkin projections, so only rationally feasible prefixes
    are explored.
    """
    return sorted(_boxed_solutions(system, box_bound, stop_at_first=False))


def first_lattice_point(system: LinearSystem, box_bound: int) -> IntVec | None:
    """Some integer solution in the box, or ``None`` if there is none.

    Deterministic, and biased toward solutions with small search
    coordinates; use :func:`lattice_points_bounded` for full enumeration.
    """
    found = _boxed_solutions(system, box_bound, stop_at_first=True)
    return found[0] if found else None
