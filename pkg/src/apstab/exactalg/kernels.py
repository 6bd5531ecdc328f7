"""Backend selection for the elimination kernels.

The compiled ``_celim`` extension is used when it imports; otherwise (or
when ``APSTAB_PURE_PYTHON=1`` is set) the pure-Python kernels run.  Both
backends return identical results.  When the compiled integer kernel would
overflow int64 it switches to a multimodular rank certified by the Hadamard
bound, still exact.
"""

from __future__ import annotations

import os
from math import isqrt

from . import _pyelim

_c = None
if os.environ.get("APSTAB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _celim as _c
    except ImportError:  # extension not built
        _c = None

BACKEND = "cython" if _c is not None else "python"

# below this many nonzeros the conversion overhead dominates
_MIN_C_NNZ = 64


def _csr(rows, ncols):
    import numpy as np

    nnz = sum(len(r) for r in rows)
    indptr = np.zeros(len(rows) + 1, dtype=np.int64)
    indices = np.empty(nnz, dtype=np.int64)
    data = np.empty(nnz, dtype=np.int64)
    k = 0
    for i, r in enumerate(rows):
        for j in sorted(r):
            v = r[j]
            if not -(1 << 62) < v < (1 << 62):
                raise OverflowError
            indices[k] = j
            data[k] = v
            k += 1
        indptr[i + 1] = k
    return indptr, indices, data


def rank_mod_p(rows: list[dict], ncols: int, p: int, backend: str | None = None) -> int:
    rows = [{j: v % p for j, v in r.items() if v % p} for r in rows]
    use_c = _use_c(backend, rows) and p < (1 << 31)
    if use_c:
        indptr, indices, data = _csr(rows, ncols)
        return _c.rank_mod_p(indptr, indices, data, len(rows), ncols, p)
    return _pyelim.rank_mod_p(rows, ncols, p)


def rank_integer(rows: list[dict], ncols: int, backend: str | None = None) -> int:
    rows = [{j: v for j, v in r.items() if v} for r in rows]
    if _use_c(backend, rows):
        try:
            indptr, indices, data = _csr(rows, ncols)
            return _c.rank_integer(indptr, indices, data, len(rows), ncols)
        except OverflowError:
            return rank_integer_multimodular(rows, ncols, backend)
    return _pyelim.rank_integer(rows, ncols)


def _large_primes():
    """Primes below 2^31, descending (trial division suffices at this size)."""
    n = (1 << 31) - 1
    while n > 2:
        if all(n % d for d in range(3, isqrt(n) + 1, 2)):
            yield n
        n -= 2


_PRIMES: list[int] = []


def _prime(i: int) -> int:
    gen = None
    while len(_PRIMES) <= i:
        if gen is None:
            gen = _large_primes()
            for _ in _PRIMES:
                next(gen)
        _PRIMES.append(next(gen))
    return _PRIMES[i]


def rank_integer_multimodular(rows: list[dict], ncols: int, backend: str | None = None) -> int:
    """Rank over Q as the largest rank modulo enough primes.

    ``rank mod p <= rank over Q`` always.  If every prime used gives rank
    below R, each prime divides every R x R minor; once their product exceeds
    the Hadamard bound ``prod_i max(1, |row_i|)`` those minors must vanish.
    """
    h2 = 1
    for r in rows:
        h2 *= max(1, sum(v * v for v in r.values()))
    target = isqrt(h2) + 1
    full = min(len(rows), ncols)
    best, prod, i = 0, 1, 0
    while prod <= target:
        p = _prime(i)
        best = max(best, rank_mod_p(rows, ncols, p, backend))
        if best == full:
            break
        prod *= p
        i += 1
    return best


def _use_c(backend, rows) -> bool:
    if backend == "python":
        return False
    if backend == "cython":
        if _c is None:
            raise RuntimeError("compiled kernels are not available")
        return True
    return _c is not None and sum(len(r) for r in rows) >= _MIN_C_NNZ
