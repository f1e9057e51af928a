"""P-tableaux of lollipop incomparability posets and the injection f_lambda.

Labels: ``A_1..A_m`` form the clique part, ``C`` joins the clique to the path
``B_1..B_{n-1}``. As integers, ``A_i = i``, ``C = m + 1``, ``B_j = m + 1 + j``,
which is the natural labelling of both L_{m+1,n-1} (variant ``"upper"``) and
L_{m,n} (variant ``"lower"``). Rows and columns are 0-based.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .partition import Partition, partitions_of

__all__ = [
    "LollipopLabel",
    "PTableau",
    "LollipopPoset",
    "ShiftError",
    "incomparability_poset",
    "is_valid",
    "enumerate_ptableaux",
    "gasharov_count",
    "a_shift",
    "column_b_shift",
    "f_lambda",
    "injection_case",
    "recover_case3",
    "InjectionReport",
    "verify_injection",
    "verify_injection_all",
    "PTABLEAU_MAX_N",
]

log = logging.getLogger(__name__)

PTABLEAU_MAX_N = 9
VARIANTS = ("upper", "lower")


class LollipopLabel(NamedTuple):
    kind: str  # "A", "B" or "C"
    index: int = 0

    def __str__(self):
        return "C" if self.kind == "C" else f"{self.kind}{self.index}"

    @property
    def b_index(self) -> int | None:
        """Path position with C counted as B_0; None for clique labels."""
        if self.kind == "B":
            return self.index
        return 0 if self.kind == "C" else None

    def to_int(self, m: int) -> int:
        if self.kind == "A":
            return self.index
        return m + 1 + (self.index if self.kind == "B" else 0)

    @classmethod
    def from_int(cls, v: int, m: int) -> "LollipopLabel":
        if v <= m:
            return cls("A", v)
        return cls("C") if v == m + 1 else cls("B", v - m - 1)

    @classmethod
    def parse(cls, text: str) -> "LollipopLabel":
        text = text.strip()
        if text == "C":
            return cls("C")
        if len(text) >= 2 and text[0] in "AB" and text[1:].isdigit():
            return cls(text[0], int(text[1:]))
        raise ValueError(f"bad lollipop label {text!r}")


C = LollipopLabel("C")


@dataclass(frozen=True)
class PTableau:
    rows: tuple[tuple[LollipopLabel, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        Partition(len(r) for r in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def column(self, c: int) -> list[LollipopLabel]:
        return [r[c] for r in self.rows if len(r) > c]

    @property
    def num_columns(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def with_column(self, c: int, labels) -> "PTableau":
        labels = list(labels)
        rows = [list(r) for r in self.rows]
        for i, lab in enumerate(labels):
            rows[i][c] = lab
        return PTableau(tuple(map(tuple, rows)))

    def find(self, label: LollipopLabel) -> tuple[int, int]:
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if x == label:
                    return i, j
        raise KeyError(str(label))

    def render(self) -> str:
        return " / ".join(" ".join(map(str, r)) for r in self.rows)

    __str__ = render

    @classmethod
    def parse(cls, text: str) -> "PTableau":
        rows = [tuple(LollipopLabel.parse(x) for x in chunk.split()) for chunk in text.split("/")]
        return cls(tuple(rows))

    def to_ints(self, m: int) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(x.to_int(m) for x in r) for r in self.rows)

    @classmethod
    def from_ints(cls, rows, m: int) -> "PTableau":
        return cls(tuple(tuple(LollipopLabel.from_int(v, m) for v in r) for r in rows))


# -- posets -------------------------------------------------------------------

def _lollipop_less(clique: int):
    """Strict order on 1..N whose incomparability graph is L_{clique, N-clique}."""

    def less(x: int, y: int) -> bool:
        if x >= y:
            return False
        if y <= clique:
            return False
        return not (y == x + 1 and y > clique)

    return less


@dataclass(frozen=True)
class LollipopPoset:
    m: int
    n: int
    variant: str
    _less: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.m < 2 or self.n < 1:
            raise ValueError("labelled lollipop posets need m >= 2 and n >= 1")
        clique = self.m + 1 if self.variant == "upper" else self.m
        object.__setattr__(self, "_less", _lollipop_less(clique))

    @property
    def size(self) -> int:
        return self.m + self.n

    def labels(self) -> list[LollipopLabel]:
        return [LollipopLabel.from_int(v, self.m) for v in range(1, self.size + 1)]

    def less(self, x: LollipopLabel, y: LollipopLabel) -> bool:
        return self._less(x.to_int(self.m), y.to_int(self.m))


def incomparability_poset(m: int, n: int, variant: str) -> LollipopPoset:
    return LollipopPoset(m, n, variant)


def _valid_ints(rows, less) -> bool:
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if j and not less(r[j - 1], x):
                return False
            if i and less(x, rows[i - 1][j]):
                return False
    return True


def is_valid(T: PTableau, m: int, n: int, variant: str) -> bool:
    P = incomparability_poset(m, n, variant)
    if sorted(x.to_int(m) for r in T.rows for x in r) != list(range(1, P.size + 1)):
        raise ValueError(f"tableau {T} does not use each label of the (m={m}, n={n}) lollipop once")
    return _valid_ints(T.to_ints(m), P._less)


# -- enumeration --------------------------------------------------------------

def _fillings(shape: Partition, N: int, less) -> Iterator[tuple[tuple[int, ...], ...]]:
    cells = [(i, j) for i, part in enumerate(shape) for j in range(part)]
    grid = [[0] * part for part in shape]

    def place(k: int, used: int):
        if k == len(cells):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[k]
        left = grid[i][j - 1] if j else 0
        above = grid[i - 1][j] if i else 0
        for v in range(1, N + 1):
            if used >> v & 1:
                continue
            if left and not less(left, v):
                continue
            if above and less(v, above):
                continue
            grid[i][j] = v
            yield from place(k + 1, used | (1 << v))
        grid[i][j] = 0

    yield from place(0, 0)


def _count(shape: Partition, N: int, less) -> int:
    return sum(1 for _ in _fillings(shape, N, less))


def gasharov_count(lam, m: int, n: int) -> int:
    """Number of P-tableaux of shape lam for L_{m,n}, any m >= 1, n >= 0."""
    lam = Partition(lam)
    N = m + n
    if lam.weight != N:
        raise ValueError(f"shape {lam} is not a partition of {N}")
    if N > PTABLEAU_MAX_N:
        raise ValueError(f"P-tableau enumeration supports m+n <= {PTABLEAU_MAX_N}")
    return _count(lam, N, _lollipop_less(m))


def enumerate_ptableaux(lam, m: int, n: int, variant: str, collect: bool = False):
    """Count (or list, with ``collect``) P-tableaux for the chosen lollipop."""
    lam = Partition(lam)
    P = incomparability_poset(m, n, variant)
    if lam.weight != P.size:
        raise ValueError(f"shape {lam} is not a partition of {P.size}")
    if P.size > PTABLEAU_MAX_N:
        raise ValueError(f"P-tableau enumeration supports m+n <= {PTABLEAU_MAX_N}")
    if not collect:
        return _count(lam, P.size, P._less)
    return [PTableau.from_ints(rows, m) for rows in _fillings(lam, P.size, P._less)]


# -- the injection ------------------------------------------------------------

class ShiftError(ValueError):
    """A shift's structural precondition does not hold."""


def _c_above_small_a(T: PTableau, m: int) -> int | None:
    """j when C sits directly above A_j with j <= m-1."""
    col = T.column(0)
    for i in range(len(col) - 1):
        below = col[i + 1]
        if col[i] == C and below.kind == "A" and below.index <= m - 1:
            return below.index
    return None


def a_shift(T: PTableau, j: int) -> PTableau:
    """Reorder column 0 from A', B', C, A_j, A'', B'' to A', A_j, A'', B', C, B''."""
    col = T.column(0)
    try:
        ci = col.index(C)
    except ValueError:
        raise ShiftError("C is not in the first column") from None
    if ci + 1 >= len(col) or col[ci + 1] != LollipopLabel("A", j):
        raise ShiftError(f"C is not directly above A{j}")
    top = 0
    while top < ci and col[top].kind == "A":
        top += 1
    a_prime, b_prime = col[:top], col[top:ci]
    if any(x.kind != "B" for x in b_prime):
        raise ShiftError("labels between the top A-block and C are not all from B")
    end = ci + 2
    while end < len(col) and col[end].kind == "A":
        end += 1
    a_second, b_second = col[ci + 2:end], col[end:]
    if any(x.kind != "B" for x in b_second):
        raise ShiftError("labels below the lower A-block are not all from B")
    new = a_prime + [col[ci + 1]] + a_second + b_prime + [C] + b_second
    return T.with_column(0, new)


def _offending_row(T: PTableau, c: int) -> int | None:
    """Row where column c holds B_t and column c+1 holds B_{t+1} (C = B_0)."""
    hits = []
    for i, r in enumerate(T.rows):
        if len(r) > c + 1:
            t, u = r[c].b_index, r[c + 1].b_index
            if t is not None and u is not None and r[c + 1].kind == "B" and u == t + 1:
                hits.append(i)
    if len(hits) > 1:
        raise ShiftError(f"several offending rows {hits} between columns {c} and {c + 1}")
    return hits[0] if hits else None


def _rotate(col: list, top: int, bottom: int, up: int) -> list:
    block = col[top:bottom + 1]
    k = len(block)
    new = [None] * k
    for i, x in enumerate(block):
        new[(i - up) % k] = x
    return col[:top] + new + col[bottom + 1:]


def column_b_shift(T: PTableau, c: int, target_row: int) -> PTableau:
    """Cycle the increasing B-block of column c that starts at the offending
    B_{t+1} (right of B_t) so that B_{t+1} ends up in ``target_row``."""
    if c < 1:
        raise ShiftError("column B-shifts act on columns 1 and beyond")
    rho = _offending_row(T, c - 1)
    if rho is None:
        raise ShiftError(f"no B_t, B_(t+1) pair between columns {c - 1} and {c}")
    col = T.column(c)
    top = rho
    while top > 0 and col[top - 1].kind == "B" and col[top - 1].index == col[top].index + 1:
        top -= 1
    if rho - top + 1 == 1:
        log.warning("single-cell B-block in column %d of %s", c, T)
    if not top <= target_row <= rho:
        raise ShiftError(
            f"block rows {top}..{rho} of column {c} cannot bring {col[rho]} to row {target_row}"
        )
    return T.with_column(c, _rotate(col, top, rho, rho - target_row))


def _case3(T: PTableau, j: int) -> PTableau:
    prev_rows = {lab: i for i, lab in enumerate(T.column(0))}
    current = a_shift(T, j)
    c = 0
    while c + 1 < current.num_columns:
        rho = _offending_row(current, c)
        if rho is None:
            break
        left = current.rows[rho][c]
        target = prev_rows[left]
        prev_rows = {lab: i for i, lab in enumerate(current.column(c + 1))}
        current = column_b_shift(current, c + 1, target)
        c += 1
    return current


def injection_case(k: int, T: PTableau, m: int, n: int) -> int:
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    if is_valid(T, m, n, "lower"):
        return 1
    return 2 if k == 1 else 3


def f_lambda(k: int, T: PTableau, m: int, n: int) -> tuple[int, PTableau]:
    """Map (k, T) with T a P-tableau for L_{m+1,n-1} to (j, T') with T' one for L_{m,n}."""
    if not is_valid(T, m, n, "upper"):
        raise ValueError(f"{T} is not a P-tableau for the upper lollipop")
    case = injection_case(k, T, m, n)
    if case == 1:
        return m - 1 + k, T
    j = _c_above_small_a(T, m)
    if j is None:
        raise ShiftError(f"{T} is invalid for the lower lollipop but C is not above a small A")
    if case == 2:
        aj, am = LollipopLabel("A", j), LollipopLabel("A", m)
        swap = {aj: am, am: aj}
        return j, PTableau(tuple(tuple(swap.get(x, x) for x in r) for r in T.rows))
    return j, _case3(T, j)


def _undo_a_shift(T: PTableau, j: int, m: int) -> PTableau:
    col = T.column(0)
    if any(x.kind != "A" for x in col[:m]):
        raise ShiftError("first column does not start with the full A-block")
    a_block = col[:m]
    pos = a_block.index(LollipopLabel("A", j))
    a_prime, a_second = a_block[:pos], a_block[pos + 1:]
    ci = col.index(C)
    b_prime, b_second = col[m:ci], col[ci + 1:]
    return T.with_column(0, a_prime + b_prime + [C, a_block[pos]] + a_second + b_second)


def _undo_b_shift(T: PTableau, c: int, rho0: int) -> PTableau:
    col = T.column(c)
    start = col[rho0].index
    top = rho0
    while top > 0 and col[top - 1].kind == "B" and col[top - 1].index == col[top].index + 1:
        top -= 1
    stop = col[top].index + 1
    bottom = rho0 + 1
    if bottom >= len(col) or col[bottom].kind != "B" or col[bottom].index <= stop - 1:
        raise ShiftError(f"no descending run below {col[rho0]} in column {c}")
    while col[bottom].index != stop:
        nxt = bottom + 1
        if nxt >= len(col) or col[nxt].kind != "B" or col[nxt].index != col[bottom].index - 1:
            raise ShiftError(f"descending run below B{start} in column {c} is broken")
        bottom = nxt
    # move B_{t+1} back to the bottom of its block
    return T.with_column(c, _rotate(col, top, bottom, rho0 - bottom))


def recover_case3(j: int, T2: PTableau, m: int) -> PTableau:
    """Invert the Case 3 construction from its output (j, T'')."""
    current = _undo_a_shift(T2, j, m)
    for c in range(current.num_columns - 1):
        rho = _offending_row(current, c)
        if rho is None:
            break
        current = _undo_b_shift(current, c + 1, rho)
    return current


# -- verification -------------------------------------------------------------

@dataclass
class InjectionReport:
    shape: Partition
    m: int
    n: int
    upper_count: int = 0
    lower_count: int = 0
    case_counts: dict = field(default_factory=lambda: {1: 0, 2: 0, 3: 0})
    failures: list = field(default_factory=list)

    @property
    def inequality_holds(self) -> bool:
        return 2 * self.upper_count <= (self.m + 1) * self.lower_count

    @property
    def passed(self) -> bool:
        return not self.failures and self.inequality_holds

    def to_json_dict(self) -> dict:
        return {
            "shape": str(self.shape),
            "m": self.m,
            "n": self.n,
            "upper_count": self.upper_count,
            "lower_count": self.lower_count,
            "cases": {str(k): v for k, v in self.case_counts.items()},
            "inequality": self.inequality_holds,
            "passed": self.passed,
            "failures": self.failures,
        }


def verify_injection(lam, m: int, n: int) -> InjectionReport:
    """Apply f_lambda to all of [2] x T_upper and check validity, injectivity,
    case separation, Case 3 recovery and the counting inequality."""
    lam = Partition(lam)
    report = InjectionReport(lam, m, n)
    uppers = enumerate_ptableaux(lam, m, n, "upper", collect=True)
    report.upper_count = len(uppers)
    report.lower_count = enumerate_ptableaux(lam, m, n, "lower")
    am = LollipopLabel("A", m)
    seen: dict[tuple[int, PTableau], tuple[int, PTableau]] = {}
    for T in uppers:
        for k in (1, 2):
            case = injection_case(k, T, m, n)
            report.case_counts[case] += 1
            try:
                j, out = f_lambda(k, T, m, n)
            except ShiftError as exc:
                report.failures.append({"k": k, "input": T.render(), "error": str(exc)})
                continue
            problems = []
            if not is_valid(out, m, n, "lower"):
                problems.append("output invalid for the lower lollipop")
            if case == 1 and j not in (m, m + 1):
                problems.append("case 1 index out of range")
            if case > 1 and not 1 <= j <= m - 1:
                problems.append("case 2/3 index out of range")
            col = out.column(0)
            ci = col.index(C)
            c_over_am = ci + 1 < len(col) and col[ci + 1] == am
            if case == 2 and not c_over_am:
                problems.append("case 2 output lacks C above A_m")
            if case == 3 and c_over_am:
                problems.append("case 3 output has C above A_m")
            if case == 3:
                try:
                    back = recover_case3(j, out, m)
                except ShiftError as exc:
                    back = None
                    problems.append(f"recovery failed: {exc}")
                if back is not None and back != T:
                    problems.append(f"recovery gave {back.render()}")
            key = (j, out)
            if key in seen:
                k0, T0 = seen[key]
                problems.append(f"collides with (k={k0}, {T0.render()})")
            seen[key] = (k, T)
            if problems:
                report.failures.append({"k": k, "input": T.render(), "output": out.render(),
                                        "j": j, "problems": problems})
    return report


def verify_injection_all(N: int) -> list[InjectionReport]:
    """Every shape of N and every split m + n = N with m >= 2, n >= 1."""
    return [verify_injection(lam, m, N - m) for m in range(2, N) for lam in partitions_of(N)]
