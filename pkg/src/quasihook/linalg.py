"""Rank computations for sparse vectors of rationals.

Vectors are mappings ``column -> coefficient`` with integer column keys
(packed monomials in practice).

* :class:`Echelon` keeps an exact reduced row set over ``Q``.
* :func:`rank_mod_p` computes the rank over ``F_p`` with dense numpy
  elimination.  For vectors with integer (or ``p``-integral) entries it is
  a lower bound for the rank over ``Q``, which is all the callers rely on.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Mapping

import numpy as np
from gmpy2 import mpq

DEFAULT_PRIME = 2_147_483_647  # 2^31 - 1: products of two residues fit in int64


class Echelon:
    """Incremental exact row echelon form over ``Q``.

    Each stored row is normalized to coefficient 1 at its pivot, the
    largest column key it contains.
    """

    def __init__(self):
        self._rows: dict[int, dict[int, mpq]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Mapping[int, object]) -> dict[int, mpq]:
        """The residue of ``vec`` after eliminating every stored pivot."""
        v = {k: mpq(c) for k, c in vec.items() if c}
        heap = [-k for k in v]
        heapq.heapify(heap)
        done: dict[int, mpq] = {}
        while heap:
            col = -heapq.heappop(heap)
            c = v.pop(col, None)
            if c is None:
                continue  # cancelled, or a duplicate heap entry
            row = self._rows.get(col)
            if row is None:
                done[col] = c
                continue
            for k, rc in row.items():
                if k == col:
                    continue
                old = v.get(k)
                if old is None:
                    v[k] = -c * rc
                    heapq.heappush(heap, -k)
                else:
                    nv = old - c * rc
                    if nv:
                        v[k] = nv
                    else:
                        del v[k]
        return done

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return ``True`` iff it was independent of the stored rows."""
        r = self.reduce(vec)
        if not r:
            return False
        pivot = max(r)
        inv = 1 / r[pivot]
        self._rows[pivot] = {k: c * inv for k, c in r.items()}
        return True


def exact_rank(vectors: Iterable[Mapping]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def _residue(c, p: int) -> int:
    q = mpq(c)
    num, den = int(q.numerator), int(q.denominator)
    if den % p == 0:
        raise ZeroDivisionError(f"denominator divisible by {p}")
    return num * pow(den, -1, p) % p


def rank_mod_p(vectors: Iterable[Mapping], p: int = DEFAULT_PRIME) -> int:
    """Rank over ``F_p`` of the given sparse vectors."""
    if p >= 2**31:
        raise ValueError("prime must be below 2^31 so int64 products do not overflow")
    rows = [v for v in vectors if v]
    if not rows:
        return 0
    cols = sorted({k for v in rows for k in v})
    index = {k: i for i, k in enumerate(cols)}
    a = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for r, v in enumerate(rows):
        for k, c in v.items():
            a[r, index[k]] = _residue(c, p)
    return _dense_rank_mod_p(a, p)


def _dense_rank_mod_p(a: np.ndarray, p: int) -> int:
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank, col:] = a[rank, col:] * inv % p
        below = rank + 1 + np.nonzero(a[rank + 1 :, col])[0]
        if below.size:
            factors = a[below, col][:, None]
            a[below, col:] = (a[below, col:] - factors * a[rank, col:]) % p
        rank += 1
    return rank


__all__ = ["DEFAULT_PRIME", "Echelon", "exact_rank", "rank_mod_p"]
