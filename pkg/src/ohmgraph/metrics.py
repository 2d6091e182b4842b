"""Metric-side tools: Kalmanson certification, circular split decomposition,
the Gromov (Farris) transform and the dual response candidate ``M(D)``.

Nodes are labelled ``1..n`` and node ``k`` is row ``k-1`` of a distance
matrix.  A circular order is a tuple of node labels read clockwise; every
index shift ``i+1`` below is taken inside that order, wrapping around.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from . import exact
from .errors import NotKalmanson, TooLarge
from .exact import Matrix

ORDER_SEARCH_CAP = 10


# --------------------------------------------------------------------------
# types


def circular_order(order: Iterable[int] | None, n: int) -> tuple[int, ...]:
    """Validate a circular order, defaulting to ``1..n``."""
    if order is None:
        return tuple(range(1, n + 1))
    order = tuple(int(x) for x in order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"order {order} is not a permutation of 1..{n}")
    return order


def same_circular_order(a: Sequence[int], b: Sequence[int]) -> bool:
    """Equal up to rotation and reflection."""
    n = len(a)
    if sorted(a) != sorted(b):
        return False
    doubled = list(b) + list(b)
    rev = list(reversed(b))
    doubled_rev = rev + rev
    a = list(a)
    return any(doubled[s : s + n] == a or doubled_rev[s : s + n] == a for s in range(n))


@dataclass(frozen=True)
class Split:
    """A bipartition ``A|B`` of ``{1..n}``, stored with node 1 in ``A``."""

    A: frozenset
    B: frozenset

    def __post_init__(self):
        a, b = frozenset(self.A), frozenset(self.B)
        if not a or not b or a & b:
            raise ValueError("split blocks must be nonempty and disjoint")
        if 1 in b:
            a, b = b, a
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "B", b)

    @classmethod
    def of(cls, block: Iterable[int], n: int) -> "Split":
        block = frozenset(block)
        return cls(block, frozenset(range(1, n + 1)) - block)

    @property
    def n(self) -> int:
        return len(self.A) + len(self.B)

    def separates(self, k: int, l: int) -> bool:
        return (k in self.A) != (l in self.A)

    def is_contiguous(self, order: Sequence[int]) -> bool:
        flags = [x in self.A for x in order]
        changes = sum(flags[t] != flags[(t + 1) % len(flags)] for t in range(len(flags)))
        return changes == 2

    def __str__(self):
        return "".join(map(str, sorted(self.A))) + "|" + "".join(map(str, sorted(self.B)))


@dataclass(frozen=True)
class WeightedSplitSystem:
    n: int
    order: tuple[int, ...]
    splits: tuple[tuple[Split, Fraction], ...] = field(default=())

    def __post_init__(self):
        seen = set()
        for s, w in self.splits:
            if w <= 0:
                raise ValueError(f"split {s} has non-positive weight {w}")
            if s.n != self.n:
                raise ValueError(f"split {s} is not a split of 1..{self.n}")
            if not s.is_contiguous(self.order):
                raise ValueError(f"split {s} is not contiguous in order {self.order}")
            if s in seen:
                raise ValueError(f"split {s} listed twice")
            seen.add(s)

    def weight(self, s: Split) -> Fraction:
        return dict(self.splits).get(s, Fraction(0))


@dataclass
class Verdict:
    """Outcome of a check: ``ok`` plus a structured witness when it fails."""

    ok: bool
    witness: dict | None = None

    def __bool__(self):
        return self.ok


# --------------------------------------------------------------------------
# basic checks


def check_metric(d: Matrix, allow_pseudo: bool = True) -> list[dict]:
    """List every way ``d`` fails to be a (pseudo)metric; empty means it is one."""
    n = len(d)
    problems: list[dict] = []
    for i in range(n):
        if len(d[i]) != n:
            problems.append({"kind": "shape", "row": i + 1})
            return problems
    for i in range(n):
        if d[i][i] != 0:
            problems.append({"kind": "diagonal", "node": i + 1, "value": d[i][i]})
        for j in range(i + 1, n):
            if d[i][j] != d[j][i]:
                problems.append({"kind": "symmetry", "pair": (i + 1, j + 1)})
            if d[i][j] < 0:
                problems.append({"kind": "negative", "pair": (i + 1, j + 1)})
            elif d[i][j] == 0 and not allow_pseudo:
                problems.append({"kind": "zero_distance", "pair": (i + 1, j + 1)})
    for i, j, k in itertools.permutations(range(n), 3):
        if i < j and d[i][j] > d[i][k] + d[k][j]:
            problems.append({"kind": "triangle", "triple": (i + 1, k + 1, j + 1)})
    return problems


def _reordered(d: Matrix, order: Sequence[int]) -> Matrix:
    return [[d[a - 1][b - 1] for b in order] for a in order]


def kalmanson_check(d: Matrix, order: Sequence[int] | None = None) -> Verdict:
    """Both Kalmanson inequalities for every quadruple in clockwise position.

    For positions ``p1<p2<p3<p4`` the diagonal sum ``d13+d24`` must dominate
    both ``d23+d14`` and ``d12+d34``.
    """
    n = len(d)
    order = circular_order(order, n)
    r = _reordered(d, order)
    for a, b, c, e in itertools.combinations(range(n), 4):
        diag = r[a][c] + r[b][e]
        if diag < r[b][c] + r[a][e]:
            return Verdict(False, _quad_witness(order, (a, b, c, e), 1, diag, r[b][c] + r[a][e]))
        if diag < r[a][b] + r[c][e]:
            return Verdict(False, _quad_witness(order, (a, b, c, e), 2, diag, r[a][b] + r[c][e]))
    return Verdict(True)


def _quad_witness(order, pos, which, lhs, rhs):
    return {
        "quadruple": [order[p] for p in pos],
        "inequality": which,
        "lhs": lhs,
        "rhs": rhs,
    }


def find_circular_order(d: Matrix, cap: int = ORDER_SEARCH_CAP) -> tuple[int, ...] | None:
    """Lexicographically least circular order (starting at 1, with its second
    entry smaller than its last) under which ``d`` is Kalmanson."""
    n = len(d)
    if n > cap:
        raise TooLarge(f"brute-force order search is capped at n={cap}; got n={n}")
    if n <= 3:
        return tuple(range(1, n + 1))
    for rest in itertools.permutations(range(2, n + 1)):
        if rest[0] > rest[-1]:
            continue
        order = (1,) + rest
        if kalmanson_check(d, order):
            return order
    return None


def circular_order_count(n: int) -> int:
    return 1 if n <= 3 else factorial(n - 1) // 2


# --------------------------------------------------------------------------
# Gromov product


def gromov_transform(d: Matrix, base: int) -> Matrix:
    """``out[i][j] = (d_ib + d_jb - d_ij) / 2`` over the nodes other than ``base``.

    For the resistance matrix of a connected network with ``base = n`` this
    is the inverse of the response matrix with its last row and column removed.
    """
    n = len(d)
    if not 1 <= base <= n:
        raise ValueError(f"base {base} outside 1..{n}")
    rest = [k for k in range(n) if k != base - 1]
    b = base - 1
    return [[(d[i][b] + d[j][b] - d[i][j]) / 2 for j in rest] for i in rest]


# --------------------------------------------------------------------------
# splits


def split_metric(s: Split, n: int | None = None) -> Matrix:
    n = s.n if n is None else n
    return [[Fraction(int(s.separates(k, l))) for l in range(1, n + 1)] for k in range(1, n + 1)]


def chord_split(i: int, j: int, order: Sequence[int]) -> Split:
    """Split cut by the chord between dual points ``i`` and ``j`` (1-based
    positions): the block is the nodes at positions ``i+1..j``."""
    n = len(order)
    block = [order[(p - 1) % n] for p in range(i + 1, j + 1)]
    return Split.of(block, n)


def split_coefficient(r: Matrix, i: int, j: int) -> Fraction:
    """``(d_ij + d_{i+1,j+1} - d_{i,j+1} - d_{i+1,j}) / 2`` on 0-based positions of a reordered matrix."""
    n = len(r)
    i1, j1 = (i + 1) % n, (j + 1) % n
    return (r[i][j] + r[i1][j1] - r[i][j1] - r[i1][j]) / 2


def split_weights(d: Matrix, order: Sequence[int] | None = None) -> WeightedSplitSystem:
    """Circular split decomposition of a Kalmanson matrix."""
    n = len(d)
    order = circular_order(order, n)
    r = _reordered(d, order)
    splits = []
    for i in range(n):
        for j in range(i + 1, n):
            w = split_coefficient(r, i, j)
            if w < 0:
                raise NotKalmanson(
                    f"negative split weight {w} for chord ({i + 1},{j + 1})",
                    {"chord": (i + 1, j + 1), "weight": w},
                )
            if w > 0:
                splits.append((chord_split(i + 1, j + 1, order), w))
    system = WeightedSplitSystem(n, order, tuple(splits))
    if metric_from_splits(system) != [list(row) for row in d]:
        raise NotKalmanson("split decomposition does not reproduce the matrix")
    return system


def metric_from_splits(system: WeightedSplitSystem) -> Matrix:
    n = system.n
    out = exact.zeros(n)
    for s, w in system.splits:
        for k in range(n):
            for l in range(n):
                if s.separates(k + 1, l + 1):
                    out[k][l] += w
    return out


# --------------------------------------------------------------------------
# dual response candidate


def m_of_d(d: Matrix, order: Sequence[int] | None = None) -> Matrix:
    """``M(D)``: minus the split coefficients, in the given order.

    Rows and columns are indexed by position in ``order``.  The diagonal is
    ``d_{i,i+1}`` and every row sums to zero.
    """
    n = len(d)
    order = circular_order(order, n)
    r = _reordered(d, order)
    return [[-split_coefficient(r, i, j) for j in range(n)] for i in range(n)]


def enumerate_circular_pairs(n: int, k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All circular pairs ``(P;Q)`` of size ``k`` on nodes ``1..n``.

    ``p1..pk, qk..q1`` must read clockwise around the circle.
    """
    if not 1 <= k <= n // 2:
        raise ValueError(f"need 1 <= k <= n/2, got k={k}, n={n}")
    out = []
    for support in itertools.combinations(range(1, n + 1), 2 * k):
        for shift in range(2 * k):
            seq = support[shift:] + support[:shift]
            out.append((tuple(seq[:k]), tuple(reversed(seq[k:]))))
    return out


def _response_like_problems(m: Matrix) -> list[dict]:
    n = len(m)
    out = []
    if not exact.is_symmetric(m):
        out.append({"kind": "not_symmetric"})
    for i in range(n):
        if sum(m[i]) != 0:
            out.append({"kind": "row_sum", "row": i + 1, "value": sum(m[i])})
        for j in range(n):
            if i != j and m[i][j] > 0:
                out.append({"kind": "positive_off_diagonal", "pair": (i + 1, j + 1), "value": m[i][j]})
    return out


def circular_minor_test(m: Matrix) -> Verdict:
    """Signed circular minors nonnegative and kernel spanned by the ones vector."""
    problems = _response_like_problems(m)
    if problems:
        return Verdict(False, {"reason": "precondition", "problems": problems})
    n = len(m)
    rk = exact.rank(m)
    if rk != n - 1:
        return Verdict(False, {"reason": "rank", "rank": rk, "expected": n - 1})
    for k in range(1, n // 2 + 1):
        sign = -1 if k % 2 else 1
        for p, q in enumerate_circular_pairs(n, k):
            minor = exact.det(exact.submatrix(m, [x - 1 for x in p], [x - 1 for x in q]))
            if sign * minor < 0:
                return Verdict(False, {"reason": "circular_minor", "P": p, "Q": q, "k": k, "det": minor})
    return Verdict(True)


def is_electrical_via_dual(d: Matrix, order: Sequence[int] | None = None) -> Verdict:
    """Decide whether a Kalmanson matrix is the resistance matrix of a connected
    circular planar network, by testing ``M(D)`` as a response matrix.

    On success the witness carries ``M(D)``, the response matrix of the dual
    network.
    """
    n = len(d)
    order = circular_order(order, n)
    kal = kalmanson_check(d, order)
    if not kal:
        raise NotKalmanson("matrix is not Kalmanson in this order", kal.witness)
    md = m_of_d(d, order)
    verdict = circular_minor_test(md)
    if verdict:
        return Verdict(True, {"dual_response": md})
    witness = dict(verdict.witness)
    if witness.get("reason") == "rank":
        witness["note"] = "cactus boundary: M(D) has a kernel larger than the constants"
    return Verdict(False, witness)


def resistance_from_dual_response(x: Matrix, order: Sequence[int] | None = None) -> Matrix:
    """Resistance matrix of the dual of a network with response ``x``.

    ``R*_ij`` is minus the sum of ``x_kl`` over pairs ``k<l`` separated by
    the chord split ``S_ij``.
    """
    n = len(x)
    order = circular_order(order, n)
    r = _reordered(x, order)
    out = exact.zeros(n)
    for i in range(n):
        for j in range(i + 1, n):
            # positions i+1..j form one block of S_ij
            inside = {(p % n) for p in range(i + 1, j + 1)}
            total = Fraction(0)
            for k in range(n):
                for l in range(k + 1, n):
                    if (k in inside) != (l in inside):
                        total += r[k][l]
            out[i][j] = out[j][i] = -total
    return out
