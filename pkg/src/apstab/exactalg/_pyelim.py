"""Pure-Python elimination kernels.

These are the reference implementations; ``_celim`` provides the same
functions compiled, and ``kernels`` chooses between them at import.
Rows are dicts ``{column: value}`` and are consumed (mutated).
"""

from math import gcd


def rank_mod_p(rows, ncols, p):
    pivots = {}
    rank = 0
    for r in rows:
        r = {j: v % p for j, v in r.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {j: (v * inv) % p for j, v in r.items()}
                rank += 1
                break
            f = r[c]
            for j, v in piv.items():
                nv = (r.get(j, 0) - f * v) % p
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
    return rank


def _content(r):
    g = 0
    for v in r.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def rank_integer(rows, ncols):
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    pivots = {}
    rank = 0
    for r in rows:
        r = {j: v for j, v in r.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                g = _content(r)
                if g > 1:
                    r = {j: v // g for j, v in r.items()}
                pivots[c] = r
                rank += 1
                break
            a = piv[c]
            b = r[c]
            if b % a == 0:
                q = b // a
            else:
                g = gcd(a, b)
                s = a // g
                r = {j: v * s for j, v in r.items()}
                q = b // g
            for j, v in piv.items():
                nv = r.get(j, 0) - q * v
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
    return rank
