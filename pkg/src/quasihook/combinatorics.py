"""Partitions, hook tableaux and strict-partition counting."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        ps = list(parts)
        while ps and ps[-1] == 0:
            ps.pop()
        if any(p < 0 for p in ps) or any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"not a partition: {tuple(parts)}")
        object.__setattr__(self, "parts", tuple(ps))

    def length(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def cells(self) -> Iterator["Cell"]:
        for r, row_len in enumerate(self.parts, start=1):
            for c in range(1, row_len + 1):
                yield Cell(r, c)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition([sum(1 for p in self.parts if p > j) for j in range(self.parts[0])])

    def __contains__(self, c: "Cell") -> bool:
        return 1 <= c.row <= len(self.parts) and 1 <= c.col <= self.parts[c.row - 1]


@dataclass(frozen=True)
class Cell:
    row: int
    col: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise ValueError("cells are 1-indexed")


def cell_stats(lam: Partition, c: Cell) -> tuple[int, int, int]:
    """Return ``(arm, leg, hook)`` for a cell of ``lam``."""
    if c not in lam:
        raise ValueError(f"{c} is not a cell of {lam.parts}")
    arm = lam.parts[c.row - 1] - c.col
    leg = sum(1 for r in range(c.row, len(lam.parts)) if lam.parts[r] >= c.col)
    return arm, leg, arm + leg + 1


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lex order."""
    if max_part is None:
        max_part = n

    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in rec(rem - first, first):
                yield (first,) + rest

    for ps in rec(n, max_part):
        yield Partition(ps)


def count_standard_tableaux(lam: Partition) -> int:
    """Hook-length formula."""
    n = lam.size()
    return factorial(n) // prod(cell_stats(lam, c)[2] for c in lam.cells())


@dataclass(frozen=True)
class HookShape:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or not 1 <= self.k <= self.n:
            raise ValueError(f"invalid hook shape eta({self.n},{self.k})")

    def partition(self) -> Partition:
        return Partition([self.n - self.k + 1] + [1] * (self.k - 1))


@dataclass(frozen=True)
class HookTableau:
    """Hook tableau ``D(s_1..s_k; s_1, s_{k+1}..s_n)``.

    The corner entry appears in both ``column`` and ``row``.
    """

    column: tuple[int, ...]
    row: tuple[int, ...]

    def __init__(self, column: Sequence[int], row: Sequence[int]):
        col, rw = tuple(column), tuple(row)
        if not col or not rw or col[0] != rw[0]:
            raise ValueError("column and row must share their first entry")
        entries = col + rw[1:]
        if len(set(entries)) != len(entries):
            raise ValueError("tableau entries must be distinct")
        if any(e < 1 for e in entries):
            raise ValueError("tableau entries must be positive")
        object.__setattr__(self, "column", col)
        object.__setattr__(self, "row", rw)

    @classmethod
    def standard(cls, n: int, column: Sequence[int]) -> "HookTableau":
        """``T(1, s_2, ..., s_k)`` for shape with ``n`` boxes."""
        col = tuple(column)
        rest = tuple(i for i in range(1, n + 1) if i not in col)
        return cls(col, (col[0],) + rest)

    @property
    def n(self) -> int:
        return len(self.column) + len(self.row) - 1

    @property
    def k(self) -> int:
        return len(self.column)

    @property
    def corner(self) -> int:
        return self.column[0]

    @property
    def shape(self) -> HookShape:
        return HookShape(self.n, self.k)

    def entries(self) -> tuple[int, ...]:
        """``s_1, ..., s_n`` in the ``D(...)`` order."""
        return self.column + self.row[1:]

    def members(self) -> frozenset[int]:
        return frozenset(self.entries())

    def arm_entries(self) -> tuple[int, ...]:
        """Row entries other than the corner (``s_{k+1}, ..., s_n``)."""
        return self.row[1:]

    def is_standard(self) -> bool:
        n = self.n
        return (
            sorted(self.entries()) == list(range(1, n + 1))
            and self.corner == 1
            and all(a < b for a, b in zip(self.column, self.column[1:]))
            and all(a < b for a, b in zip(self.row, self.row[1:]))
        )

    def to_json(self) -> dict:
        return {"column": list(self.column), "row": list(self.row)}

    @classmethod
    def from_json(cls, data) -> "HookTableau":
        return cls(data["column"], data["row"])

    def __str__(self) -> str:
        return f"D({','.join(map(str, self.column))};{','.join(map(str, self.row))})"


def standard_hook_tableaux(shape: HookShape) -> list[HookTableau]:
    n, k = shape.n, shape.k
    return [HookTableau.standard(n, (1,) + c) for c in combinations(range(2, n + 1), k - 1)]


def remove_entry(d: HookTableau, s: int) -> HookTableau:
    """``D^{s}``.  Removing the corner promotes ``s_2`` to the corner."""
    if s not in d.members():
        raise ValueError(f"{s} is not an entry of {d}")
    if s == d.corner:
        if d.k < 2:
            raise ValueError("cannot remove the corner of a single-row tableau")
        new_corner = d.column[1]
        return HookTableau(d.column[1:], (new_corner,) + d.row[1:])
    if s in d.column:
        return HookTableau(tuple(e for e in d.column if e != s), d.row)
    return HookTableau(d.column, tuple(e for e in d.row if e != s))


def transpose_tableau(i: int, j: int, d: HookTableau) -> HookTableau:
    """``(i,j)D``: swap ``i`` and ``j`` among the entries (or rename one)."""
    if i == j:
        raise ValueError("transposition needs two distinct labels")
    if i < 1 or j < 1:
        raise ValueError("labels must be positive")
    swap = {i: j, j: i}
    return HookTableau(
        tuple(swap.get(e, e) for e in d.column),
        tuple(swap.get(e, e) for e in d.row),
    )


@dataclass(frozen=True, order=True)
class StrictPartition:
    """Strictly decreasing nonnegative parts; a trailing 0 is kept."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        ps = tuple(parts)
        if any(p < 0 for p in ps) or any(a <= b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"not a strict partition: {ps}")
        object.__setattr__(self, "parts", ps)

    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


@lru_cache(maxsize=None)
def _strict(s: int, t: int, u: int) -> tuple[tuple[int, ...], ...]:
    if u == 0:
        return ((),) if s == 0 else ()
    if t < 0:
        return ()
    out = []
    # largest first part first, so the listing is reverse-lex
    for first in range(min(s, t), -1, -1):
        for rest in _strict(s - first, first - 1, u - 1):
            out.append((first,) + rest)
    return tuple(out)


def strict_partitions(s: int, t: int, u: int) -> list[StrictPartition]:
    """``P(s; t; u)``: ``|mu| = s`` and ``t >= mu_1 > ... > mu_u >= 0``."""
    if s < 0 or u < 0:
        return []
    return [StrictPartition(p) for p in _strict(s, t, u)]


def strict_partitions_bounded(t: int, u: int) -> list[StrictPartition]:
    """``P(t; u)`` ordered by size, then reverse-lex."""
    if u == 0:
        return [StrictPartition(())]
    return [StrictPartition(tuple(sorted(c, reverse=True))) for c in _by_size(t, u)]


def _by_size(t: int, u: int):
    combos = [tuple(sorted(c, reverse=True)) for c in combinations(range(t + 1), u)]
    combos.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
    return combos


def count_p(s: int, t: int, u: int) -> int:
    if s < 0 or u < 0:
        return 0
    return len(_strict(s, t, u))


def count_q(s: int, t: int, u: int) -> int:
    """``#Q(s; t; u)``; for ``t = 0`` this is ``p(s; 0; u)``."""
    if t == 0:
        return count_p(s, 0, u)
    return count_p(s, t, u) - count_p(s, t - 1, u)


def triangular(k: int) -> int:
    return k * (k - 1) // 2


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
