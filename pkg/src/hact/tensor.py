"""Multi-slot tensors with slotwise normal forms.

A Tensor holds a linear combination of tuples of normal-form words, one
word per slot, each slot governed by its own rewrite system.  This is
the common value type for coproducts, coactions and the linearized
balanced tensor products used by the bialgebroid backends.
"""

from __future__ import annotations

from .freealg import NCPoly, RewriteSystem
from .parser import tensor_str
from .scalars import ONE, Scalar, ZERO


class Tensor:
    __slots__ = ("syss", "terms")

    def __init__(self, syss, terms=None):
        self.syss = tuple(syss)
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] = c

    @property
    def arity(self) -> int:
        return len(self.syss)

    def add_term(self, words, coeff: Scalar) -> None:
        c = self.terms.get(words, ZERO) + coeff
        if c:
            self.terms[words] = c
        else:
            self.terms.pop(words, None)

    def add_product(self, polys, coeff: Scalar = ONE) -> None:
        """Add the outer product of slot polynomials, normalizing each slot."""
        if not coeff:
            return
        normed = []
        for p, sys in zip(polys, self.syss):
            p = sys.normalize(p)
            if p.is_zero:
                return
            normed.append(p)
        keys = [((), coeff)]
        for p in normed:
            keys = [(k + (w,), c * cw) for k, c in keys for w, cw in p.terms.items()]
        for k, c in keys:
            self.add_term(k, c)

    def __add__(self, other: "Tensor") -> "Tensor":
        out = Tensor(self.syss, dict(self.terms))
        for k, c in other.terms.items():
            out.add_term(k, c)
        return out

    def __sub__(self, other: "Tensor") -> "Tensor":
        out = Tensor(self.syss, dict(self.terms))
        for k, c in other.terms.items():
            out.add_term(k, -c)
        return out

    def __neg__(self) -> "Tensor":
        return Tensor(self.syss, {k: -c for k, c in self.terms.items()})

    def scale(self, coeff: Scalar) -> "Tensor":
        if not coeff:
            return Tensor(self.syss)
        return Tensor(self.syss, {k: c * coeff for k, c in self.terms.items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def apply_slot(self, slot: int, fn) -> "Tensor":
        """Replace one slot through a word -> NCPoly map, renormalizing."""
        out = Tensor(self.syss)
        for key, c in self.terms.items():
            image = fn(key[slot])
            for w, cw in self.syss[slot].normalize(image).terms.items():
                out.add_term(key[:slot] + (w,) + key[slot + 1 :], c * cw)
        return out

    def sorted_keys(self):
        def keyfn(key):
            return tuple(sys.word_key(w) for sys, w in zip(self.syss, key))

        return sorted(self.terms, key=keyfn)

    def as_vector(self) -> dict:
        return dict(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        addends = []
        for key in self.sorted_keys():
            c = self.terms[key]
            slots = [NCPoly.monomial(w) for w in key]
            slots[0] = slots[0].scale(c)
            addends.append(tuple(slots))
        return tensor_str(addends, self.syss)

    def __repr__(self):
        return "Tensor(%s)" % self


def tensor_of_pairs(syss, pairs) -> Tensor:
    """Build a Tensor from (polys..., coeff)-free list of slot tuples."""
    out = Tensor(syss)
    for slots in pairs:
        out.add_product(slots)
    return out
