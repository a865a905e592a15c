"""Sparse exact Gaussian elimination over Q(q).

Vectors are dicts mapping hashable basis keys to nonzero Scalars.
Column order is assigned by first appearance, which keeps every
computation deterministic for a fixed insertion sequence.  A Reducer
maintains a forward-eliminated row space, optionally with history
rows so that kernels and coordinate expressions can be read off.
"""

from __future__ import annotations

from .scalars import Scalar, ZERO


def vec_iadd_scaled(dst: dict, src: dict, c: Scalar) -> dict:
    if not c:
        return dst
    for k, v in src.items():
        w = dst.get(k, ZERO) + v * c
        if w:
            dst[k] = w
        else:
            dst.pop(k, None)
    return dst


def vec_scale(v: dict, c: Scalar) -> dict:
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


class Reducer:
    """Forward-eliminated row space with optional history tracking."""

    def __init__(self):
        self._ord = {}
        self._rows = {}  # pivot column index -> (row vector, history vector)

    def _col(self, key) -> int:
        idx = self._ord.get(key)
        if idx is None:
            idx = len(self._ord)
            self._ord[key] = idx
        return idx

    def register(self, keys):
        """Pin the column order of the given keys before any insertion.

        Pivots prefer earlier columns, so registering keys sorted by
        descending degree makes every stored row's support stay at or
        below its pivot degree; the rows with pivot degree <= d then
        span exactly the intersection of the row space with the
        degree-<= d coordinate subspace.
        """
        for k in keys:
            self._col(k)

    def _reduce(self, vec: dict, hist: dict):
        vec = {k: v for k, v in vec.items() if v}
        while vec:
            pivot_key = min(vec, key=self._col)
            row = self._rows.get(self._col(pivot_key))
            if row is None:
                return vec, hist, pivot_key
            c = -vec[pivot_key]
            vec_iadd_scaled(vec, row[0], c)
            vec_iadd_scaled(hist, row[1], c)
        return vec, hist, None

    def insert(self, vec: dict, tag=None) -> bool:
        """Reduce vec against the space; add the residual if nonzero.

        tag seeds the history of the inserted row, so kernel relations
        among the inserted vectors can be recovered later.
        """
        hist = {tag: Scalar.from_int(1)} if tag is not None else {}
        vec, hist, pivot_key = self._reduce(dict(vec), hist)
        if pivot_key is None:
            self._last_hist = hist
            return False
        inv = vec[pivot_key].inverse()
        self._rows[self._col(pivot_key)] = (vec_scale(vec, inv), vec_scale(hist, inv))
        return True

    def residual(self, vec: dict) -> dict:
        out, _, _ = self._reduce(dict(vec), {})
        return out

    def contains(self, vec: dict) -> bool:
        return not self.residual(vec)

    def express(self, vec: dict):
        """Coefficients writing vec over the tagged inserted rows, or None."""
        res, hist, _ = self._reduce(dict(vec), {})
        if res:
            return None
        return {tag: -c for tag, c in hist.items() if c}

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivot_keys(self) -> list:
        inv = {i: k for k, i in self._ord.items()}
        return [inv[i] for i in sorted(self._rows)]

    def rows(self):
        """Yield (pivot key, row vector) in column order."""
        inv = {i: k for k, i in self._ord.items()}
        for i in sorted(self._rows):
            yield inv[i], self._rows[i][0]


def kernel_of_map(keys, image_of) -> list:
    """Kernel basis of a linear map given by images of basis keys.

    image_of(key) returns a sparse vector.  The result is a list of
    sparse coefficient dicts over the given keys.
    """
    red = Reducer()
    kernel = []
    for key in keys:
        if not red.insert(image_of(key), tag=key):
            kernel.append(dict(red._last_hist))
    return kernel


def span_dim(vectors) -> int:
    red = Reducer()
    n = 0
    for v in vectors:
        if red.insert(v):
            n += 1
    return n


def span_contains_all(spanning, candidates) -> bool:
    red = Reducer()
    for v in spanning:
        red.insert(v)
    return all(red.contains(v) for v in candidates)


def span_equal(vs1, vs2) -> bool:
    vs1, vs2 = list(vs1), list(vs2)
    return span_contains_all(vs1, vs2) and span_contains_all(vs2, vs1)
