"""The n x 2n matrices Omega (from a response matrix) and Omega_R (from a
distance matrix), their Plücker coordinates, and the total-nonnegativity
decision for electrical Kalmanson metrics.

Column indices and Plücker subsets are 1-based, matching the usual
``Delta_{246}`` style of naming coordinates.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from . import exact
from .errors import AllZero, InvalidResponse, NotKalmanson, TooLarge
from .exact import Matrix
from .metrics import Verdict, circular_order, kalmanson_check, m_of_d

PLUCKER_N_CAP = 8
PARALLEL_THRESHOLD = 4000

RESPONSE_FORM = "response"
RESISTANCE_FORM = "resistance"


@dataclass(frozen=True)
class OmegaMatrix:
    rows: tuple[tuple[Fraction, ...], ...]
    form: str

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def deleted_row(self) -> int:
        """1-based row dropped before taking maximal minors."""
        return 1 if self.form == RESPONSE_FORM else self.n

    def as_lists(self) -> Matrix:
        return [list(r) for r in self.rows]

    def reduced(self) -> Matrix:
        """The (n-1) x 2n matrix with :attr:`deleted_row` removed."""
        return [list(r) for t, r in enumerate(self.rows) if t != self.deleted_row - 1]

    def column(self, c: int) -> list[Fraction]:
        return [r[c - 1] for r in self.rows]


@dataclass(frozen=True)
class PluckerVector:
    n: int
    form: str
    coords: dict  # tuple (sorted, 1-based) -> Fraction
    deleted_row: int

    def __getitem__(self, subset: Iterable[int]) -> Fraction:
        return self.coords[tuple(sorted(subset))]

    def sign(self) -> str:
        pos = any(v > 0 for v in self.coords.values())
        neg = any(v < 0 for v in self.coords.values())
        if pos and neg:
            return "mixed"
        if neg:
            return "-"
        return "+" if pos else "0"


def shift_operator(n: int) -> Matrix:
    """2n x 2n cyclic shift: ones on the superdiagonal, ``(-1)^n`` in the corner."""
    size = 2 * n
    s = exact.zeros(size)
    for i in range(size - 1):
        s[i][i + 1] = Fraction(1)
    s[size - 1][0] = Fraction((-1) ** n)
    return s


def _validate_response(m: Matrix, strict: bool) -> None:
    n = len(m)
    if n < 2 or any(len(row) != n for row in m):
        raise InvalidResponse("response matrix must be square with n >= 2")
    if not exact.is_symmetric(m):
        raise InvalidResponse("response matrix must be symmetric")
    for i, row in enumerate(m):
        if sum(row) != 0:
            raise InvalidResponse(f"row {i + 1} does not sum to zero")
    if strict:
        for i in range(n):
            for j in range(n):
                if i != j and m[i][j] > 0:
                    raise InvalidResponse(f"off-diagonal entry ({i + 1},{j + 1}) is positive")
        if exact.rank(m) != n - 1:
            raise InvalidResponse("kernel is larger than the constant vectors (rank < n-1)")


def build_omega_response(m: Matrix, strict: bool = True) -> OmegaMatrix:
    """Omega from a response matrix.

    Entry ``(i, 2j-1)`` is ``(-1)^(i+j) x_ij``; row ``i`` has ones in even
    columns ``2(i-1)`` and ``2i``, with the wrapped entry of row 1 (column
    2n) equal to ``(-1)^n``.  ``strict=False`` only requires symmetry and
    zero row sums, which is what degenerate (cactus) inputs still satisfy.
    """
    _validate_response(m, strict)
    n = len(m)
    rows = []
    for i in range(1, n + 1):
        row = [Fraction(0)] * (2 * n)
        for j in range(1, n + 1):
            row[2 * j - 2] = (-1) ** (i + j) * m[i - 1][j - 1]
        row[2 * i - 1] += 1
        if i == 1:
            row[2 * n - 1] += (-1) ** n
        else:
            row[2 * (i - 1) - 1] += 1
        rows.append(tuple(row))
    return OmegaMatrix(tuple(rows), RESPONSE_FORM)


def build_omega_resistance(d: Matrix, order: Sequence[int] | None = None) -> OmegaMatrix:
    """Omega_R: ``Omega(M(D))`` right-multiplied by the shift operator."""
    n = len(d)
    order = circular_order(order, n)
    md = m_of_d(d, order)
    omega = build_omega_response(md, strict=False)
    shifted = exact.matmul(omega.as_lists(), shift_operator(n))
    return OmegaMatrix(tuple(tuple(r) for r in shifted), RESISTANCE_FORM)


def _minor_chunk(args):
    int_rows, subsets = args
    return [exact.bareiss_det([[row[c - 1] for c in s] for row in int_rows]) for s in subsets]


def _parallel_allowed() -> bool:
    return os.environ.get("OHMGRAPH_NO_PARALLEL", "") not in ("1", "true", "yes")


def maximal_minors(a: Matrix, subsets: Sequence[tuple[int, ...]]) -> list[Fraction]:
    """Exact determinants of the column subsets (1-based) of a full-width matrix."""
    int_rows, factor = exact._integer_rows(a)
    if len(subsets) >= PARALLEL_THRESHOLD and _parallel_allowed():
        workers = min(8, os.cpu_count() or 1)
        size = -(-len(subsets) // (workers * 4))
        chunks = [subsets[t : t + size] for t in range(0, len(subsets), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            dets = [x for part in pool.map(_minor_chunk, [(int_rows, c) for c in chunks]) for x in part]
    else:
        dets = _minor_chunk((int_rows, subsets))
    return [Fraction(x, factor) for x in dets]


def plucker(
    omega: OmegaMatrix,
    cap: int = PLUCKER_N_CAP,
    subsets: Iterable[Iterable[int]] | None = None,
) -> PluckerVector:
    """Plücker coordinates: maximal minors after deleting the conventional row.

    Without ``subsets`` every coordinate is computed, which is refused above
    ``n = cap``.  With ``subsets`` only those coordinates are computed.
    """
    n = omega.n
    reduced = omega.reduced()
    if subsets is None:
        if n > cap:
            raise TooLarge(f"full Plücker enumeration is capped at n={cap} ({comb(2 * n, n - 1)} minors)")
        wanted = list(itertools.combinations(range(1, 2 * n + 1), n - 1))
    else:
        wanted = [tuple(sorted(s)) for s in subsets]
        for s in wanted:
            if len(s) != n - 1 or len(set(s)) != n - 1 or not all(1 <= c <= 2 * n for c in s):
                raise ValueError(f"{s} is not an (n-1)-subset of 1..{2 * n}")
    values = maximal_minors(reduced, wanted)
    return PluckerVector(n, omega.form, dict(zip(wanted, values)), omega.deleted_row)


def certify_nonnegative(p: PluckerVector) -> Verdict:
    """Do all coordinates share one sign (zeros allowed)?"""
    pos = next((s for s, v in p.coords.items() if v > 0), None)
    neg = next((s for s, v in p.coords.items() if v < 0), None)
    if pos is None and neg is None:
        raise AllZero("all Plücker coordinates vanish; not a point of the Grassmannian")
    if pos is not None and neg is not None:
        return Verdict(False, {"positive": pos, "negative": neg, "values": (p.coords[pos], p.coords[neg])})
    return Verdict(True, {"sign": "+" if pos is not None else "-"})


def even_subset(n: int) -> tuple[int, ...]:
    """``(2, 4, ..., 2n-2)``."""
    return tuple(range(2, 2 * n - 1, 2))


def odd_subset(n: int) -> tuple[int, ...]:
    """``(1, 3, ..., 2n-3)``."""
    return tuple(range(1, 2 * n - 2, 2))


def connectivity_indicator(p: PluckerVector, n: int | None = None) -> bool:
    """Non-vanishing of the coordinate that detects a connected network:
    ``Delta_{24..2n-2}`` for the resistance form, ``Delta_{13..2n-3}`` for the
    response form."""
    n = p.n if n is None else n
    key = even_subset(n) if p.form == RESISTANCE_FORM else odd_subset(n)
    return p.coords.get(key, Fraction(0)) != 0


def is_electrical_via_grassmannian(
    d: Matrix, order: Sequence[int] | None = None, cap: int = PLUCKER_N_CAP
) -> Verdict:
    """Kalmanson ``D`` is electrical iff Omega_R is totally nonnegative with
    ``Delta_{24..2n-2} != 0``."""
    n = len(d)
    order = circular_order(order, n)
    kal = kalmanson_check(d, order)
    if not kal:
        raise NotKalmanson("matrix is not Kalmanson in this order", kal.witness)
    p = plucker(build_omega_resistance(d, order), cap=cap)
    key = even_subset(n)
    try:
        cert = certify_nonnegative(p)
    except AllZero:
        return Verdict(False, {"reason": "all_zero"})
    if not cert:
        return Verdict(False, {"reason": "mixed_signs", **cert.witness})
    if p.coords[key] == 0:
        return Verdict(
            False,
            {"reason": "connectivity", "note": f"Delta_{key} vanishes (cactus boundary)", "coordinate": key},
        )
    return Verdict(True, {"coordinate": key, "value": p.coords[key], "sign": cert.witness["sign"], "plucker": p})


def ordered_coordinate(p: PluckerVector, columns: Sequence[int]) -> Fraction:
    """Minor for columns in the given (not necessarily sorted) order."""
    cols = list(columns)
    if len(set(cols)) != len(cols):
        return Fraction(0)
    inversions = sum(1 for a, b in itertools.combinations(cols, 2) if a > b)
    value = p.coords[tuple(sorted(cols))]
    return -value if inversions % 2 else value


def three_term_relation(p: PluckerVector, rest: Sequence[int], a: int, b: int, c: int, e: int) -> bool:
    """``D(S a c) D(S b e) == D(S a b) D(S c e) + D(S a e) D(S b c)`` with columns in
    the written order."""
    s = list(rest)
    lhs = ordered_coordinate(p, s + [a, c]) * ordered_coordinate(p, s + [b, e])
    rhs = ordered_coordinate(p, s + [a, b]) * ordered_coordinate(p, s + [c, e]) + ordered_coordinate(
        p, s + [a, e]
    ) * ordered_coordinate(p, s + [b, c])
    return lhs == rhs
