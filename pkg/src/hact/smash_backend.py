"""Scalar extension algebroids A # H on a combined rewrite system.

The total algebra of a smash product A # H is presented as a single
rewrite system over the concatenated alphabet: A letters first, then H
letters, with straightening rules h x -> (h_(1).x) h_(2) derived from
the action table.  Normal forms are then words with all A letters in
front, so every element splits uniquely as a # (word in H).

The base algebra is A; source is the inclusion a -> a # 1, target is
a -> a_(0) # a_(1) along the coaction encoded by per-letter weights
into the grouplike generators of H (weight zero means trivial coaction,
in which case source and target coincide).

Balanced tensors over A are linearized by fusing the A part of a leg
into its partner: for the coring balancing t(r)h (x) h' ~ h (x) s(r)h'
the A part of the right leg is moved out through the target map; for
the sharp balancing h s(r) (x) h' ~ h (x) s(r)h' it is moved out
through right multiplication.  The fused legs are plain H words, so
keys are tuples of normal words and equality is dictionary equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .freealg import NCPoly, RewriteSystem, basis_upto
from .hopfalg import HopfPresentation, hopf_antipode_inv, hopf_counit
from .report import Report
from .scalars import ONE, Scalar


def act_poly(table, hopf: HopfPresentation, hpoly: NCPoly, apoly: NCPoly,
             asys: RewriteSystem) -> NCPoly:
    """Left action of an H element on an A element, extended from the
    letter table by the module-algebra law h.(ab) = (h_(1).a)(h_(2).b)
    and h.1 = counit(h) 1."""
    out = NCPoly.zero()
    for hw, hc in hpoly.terms.items():
        out = out + _act_word(table, hopf, hw, apoly, asys).scale(hc)
    return out


def _act_word(table, hopf, hword, apoly, asys):
    if not hword:
        return asys.normalize(apoly)
    head, rest = hword[0], hword[1:]
    inner = _act_word(table, hopf, rest, apoly, asys)
    out = NCPoly.zero()
    for aw, ac in inner.terms.items():
        out = out + _act_letter(table, hopf, head, aw, asys).scale(ac)
    return asys.normalize(out)


def _act_letter(table, hopf, l, aword, asys):
    if not aword:
        return NCPoly.const(hopf.counit[l])
    if len(aword) == 1:
        return table[(l, aword[0])]
    out = NCPoly.zero()
    for d1, d2 in hopf.delta[l]:
        left = act_poly(table, hopf, d1, NCPoly.gen(aword[0]), asys)
        right = act_poly(table, hopf, d2, NCPoly.monomial(aword[1:]), asys)
        out = out + asys.mul(left, right)
    return asys.normalize(out)


@dataclass
class SmashAlgebroid:
    """Backend object for A # H over the base A."""

    name: str
    sys: RewriteSystem
    base: RewriteSystem
    hopf: HopfPresentation
    action: dict
    a_weights: dict
    pos: str = None
    neg: str = None
    gens: list = field(default_factory=list)

    def __post_init__(self):
        if not self.gens:
            self.gens = [(l, NCPoly.gen(l)) for l in self.sys.letters]
        self._h_letters = set(self.hopf.sys.letters)
        self._a_letters = set(self.base.letters)

    # -- element operations

    def zero(self):
        return NCPoly.zero()

    def one(self):
        return NCPoly.one()

    def add(self, e1, e2):
        return e1 + e2

    def smul(self, c: Scalar, e):
        return e.scale(c)

    def mul(self, e1, e2):
        return self.sys.mul(e1, e2)

    def eq(self, e1, e2):
        return e1 == e2

    def elem_terms(self, e):
        return sorted(e.terms.items(), key=lambda kv: self.sys.word_key(kv[0]))

    def elem_of_word(self, w):
        return NCPoly.monomial(w)

    def word_basis(self, degree):
        return basis_upto(self.sys, degree)

    def word_degree(self, w) -> int:
        return len(w)

    def word_label(self, w) -> str:
        from .parser import word_str

        return word_str(w) if w else "1"

    def split(self, word):
        """Split a normal word into its A prefix and H suffix."""
        i = 0
        while i < len(word) and word[i] in self._a_letters:
            i += 1
        aword, hword = word[:i], word[i:]
        assert all(l in self._h_letters for l in hword), word
        return aword, hword

    # -- structure maps

    def grouplike(self, n: int):
        if n == 0:
            return ()
        if n > 0:
            return (self.pos,) * n
        return (self.neg,) * (-n)

    def a_weight(self, aword) -> int:
        return sum(self.a_weights[l] for l in aword)

    def s_of(self, rpoly: NCPoly):
        return self.sys.normalize(rpoly)

    def t_of(self, rpoly: NCPoly):
        out = NCPoly.zero()
        for aw, c in rpoly.terms.items():
            out.add_term(aw + self.grouplike(self.a_weight(aw)), c)
        return self.sys.normalize(out)

    def delta(self, e):
        pairs = []
        for w, c in self.elem_terms(e):
            aw, hw = self.split(w)
            for (w1, w2), dc in self.hopf.delta_word(hw).terms.items():
                left = NCPoly.zero()
                left.add_term(aw + w1, c * dc)
                pairs.append((self.sys.normalize(left), NCPoly.monomial(w2)))
        return pairs

    def counit(self, e) -> NCPoly:
        out = NCPoly.zero()
        for w, c in e.terms.items():
            aw, hw = self.split(w)
            out.add_term(aw, c * hopf_counit(self.hopf, NCPoly.monomial(hw)))
        return self.base.normalize(out)

    def translation(self, e):
        """(a # h)_+ (x) (a # h)_- = (a_(0) # h_(2)) (x) (1 # Sinv(h_(1)) a_(1))."""
        pairs = []
        for w, c in self.elem_terms(e):
            aw, hw = self.split(w)
            gl = self.grouplike(self.a_weight(aw))
            for (w1, w2), dc in self.hopf.delta_word(hw).terms.items():
                plus = NCPoly.zero()
                plus.add_term(aw + w2, c * dc)
                minus = self.sys.mul(
                    hopf_antipode_inv(self.hopf, NCPoly.monomial(w1)),
                    NCPoly.monomial(gl))
                pairs.append((self.sys.normalize(plus), minus))
        return pairs

    # -- linearized balanced tensors

    def lin(self, flavor, terms):
        out = {}
        if flavor == "cor2":
            for z1, z2 in terms:
                for w2, c2 in z2.terms.items():
                    a2, h2 = self.split(w2)
                    moved = self.mul(self.t_of(NCPoly.monomial(a2)), z1)
                    for w1, c1 in moved.terms.items():
                        _bump(out, (w1, h2), c1 * c2)
        elif flavor == "sharp2":
            for z1, z2 in terms:
                for w2, c2 in z2.terms.items():
                    a2, h2 = self.split(w2)
                    moved = self.mul(z1, NCPoly.monomial(a2))
                    for w1, c1 in moved.terms.items():
                        _bump(out, (w1, h2), c1 * c2)
        elif flavor == "cor3":
            for z1, z2, z3 in terms:
                for w3, c3 in z3.terms.items():
                    a3, h3 = self.split(w3)
                    mid = self.mul(self.t_of(NCPoly.monomial(a3)), z2)
                    for w2, c2 in mid.terms.items():
                        a2, h2 = self.split(w2)
                        left = self.mul(self.t_of(NCPoly.monomial(a2)), z1)
                        for w1, c1 in left.terms.items():
                            _bump(out, (w1, h2, h3), c1 * c2 * c3)
        elif flavor == "tch4":
            # sharp at (1,2), coring between slots 1 and 3
            for z1, z2, z3 in terms:
                for w2, c2 in z2.terms.items():
                    a2, h2 = self.split(w2)
                    left = self.mul(z1, NCPoly.monomial(a2))
                    for w3, c3 in z3.terms.items():
                        a3, h3 = self.split(w3)
                        left2 = self.mul(self.t_of(NCPoly.monomial(a3)), left)
                        for w1, c1 in left2.terms.items():
                            _bump(out, (w1, h2, h3), c1 * c2 * c3)
        elif flavor == "tch5":
            # coring at (2,3) first, then sharp at (1,2)
            for z1, z2, z3 in terms:
                for w3, c3 in z3.terms.items():
                    a3, h3 = self.split(w3)
                    mid = self.mul(self.t_of(NCPoly.monomial(a3)), z2)
                    for w2, c2 in mid.terms.items():
                        a2, h2 = self.split(w2)
                        left = self.mul(z1, NCPoly.monomial(a2))
                        for w1, c1 in left.terms.items():
                            _bump(out, (w1, h2, h3), c1 * c2 * c3)
        else:
            raise ValueError("unknown linearization flavor %r" % flavor)
        return out


def _bump(out, key, c):
    c0 = out.get(key)
    c0 = c if c0 is None else c0 + c
    if c0:
        out[key] = c0
    else:
        out.pop(key, None)


def build_smash(name, asys: RewriteSystem, hopf: HopfPresentation, action,
                a_weights, pos=None, neg=None, order_weights=None) -> SmashAlgebroid:
    """Assemble the combined rewrite system of A # H and wrap it as a
    backend.  The straightening rules are h x -> (h_(1).x) h_(2) for
    every H letter h and A letter x."""
    letters = tuple(asys.letters) + tuple(hopf.sys.letters)
    rules = list(asys.rules)
    rules.extend(hopf.sys.rules)
    for hl in hopf.sys.letters:
        for al in asys.letters:
            rhs = NCPoly.zero()
            for d1, d2 in hopf.delta[hl]:
                acted = act_poly(action, hopf, d1, NCPoly.gen(al), asys)
                for aw, ac in acted.terms.items():
                    for hw, hc in d2.terms.items():
                        rhs.add_term(aw + hw, ac * hc)
            rules.append(((hl, al), rhs))
    weights = dict(a_weights)
    weights.update(hopf.sys.weights)
    ow = dict(order_weights or {})
    bridges = tuple(asys.bridges) + tuple(hopf.sys.bridges)
    sys = RewriteSystem(letters=letters, rules=tuple(rules), weights=weights,
                        order_weights=ow, bridges=bridges)
    return SmashAlgebroid(name=name, sys=sys, base=asys, hopf=hopf,
                          action=action, a_weights=dict(a_weights),
                          pos=pos, neg=neg)


def yd_check(asys: RewriteSystem, hopf: HopfPresentation, action, coaction_exp,
             hopf_map=None, target: HopfPresentation = None,
             degree: int = 2) -> Report:
    """Braided commutativity and the Yetter-Drinfel'd compatibility of
    the action/coaction pair on A.

    With `hopf_map` absent this is the plain module/comodule condition
    over one Hopf algebra H: h_(1).a_(0) (x) h_(2) a_(1) equals
    (h_(2).a)_(0) (x) (h_(2).a)_(1) h_(1) in A (x) H.  With `hopf_map`
    given (a letter table G -> H into `target`), the coaction takes
    values in G, the action is by `target`, and the compatibility reads
    h_(1).a_(0) (x) h_(2) pi(a_(1)) = (h_(2).a)_(0) (x)
    pi((h_(2).a)_(1)) h_(1), with braided commutativity
    b_(0) (pi(b_(1)).a) = a b."""
    rep = Report()
    acting = target if hopf_map is not None else hopf

    def coact(apoly):
        # diagonal coaction from the letter exponents, valued in `hopf`
        out = []
        for aw, c in apoly.terms.items():
            n = sum(coaction_exp[l] for l in aw)
            out.append((NCPoly.monomial(aw).scale(c), _grouplike(hopf, n)))
        return out

    def project(gpoly):
        out = NCPoly.zero()
        for gw, c in gpoly.terms.items():
            img = NCPoly.const(c)
            for l in gw:
                img = acting.sys.mul(img, hopf_map[l])
            out = out + img
        return acting.sys.normalize(out)

    abasis = basis_upto(asys, degree)
    for hl in acting.sys.letters:
        for aw in abasis:
            if not aw:
                continue
            apoly = NCPoly.monomial(aw)
            lhs = {}
            rhs = {}
            for d1, d2 in acting.delta[hl]:
                for av, g in coact(apoly):
                    moved = act_poly(action, acting, d1, av, asys)
                    gh = project(g) if hopf_map is not None else g
                    tail = acting.sys.mul(d2, gh)
                    _tensor_bump(lhs, asys, acting.sys, moved, tail)
                acted = act_poly(action, acting, d2, apoly, asys)
                for av, g in coact(acted):
                    gh = project(g) if hopf_map is not None else g
                    tail = acting.sys.mul(gh, d1)
                    _tensor_bump(rhs, asys, acting.sys, av, tail)
            rep.add("yd", "compatibility", "%s,%s" % (hl, _wstr(aw)), lhs == rhs)

    for aw in abasis:
        for bw in abasis:
            if not aw and not bw:
                continue
            apoly, bpoly = NCPoly.monomial(aw), NCPoly.monomial(bw)
            lhs = NCPoly.zero()
            for bv, g in coact(bpoly):
                gh = project(g) if hopf_map is not None else g
                lhs = lhs + asys.mul(bv, act_poly(action, acting, gh, apoly, asys))
            rhs = asys.mul(apoly, bpoly)
            rep.add("yd", "braided-commutative", "%s,%s" % (_wstr(aw), _wstr(bw)),
                    asys.normalize(lhs) == asys.normalize(rhs))

    # the action respects the relations of the acting Hopf algebra
    for lhs_word, rhs_poly in acting.sys.rules:
        ok = True
        for al in asys.letters:
            via_lhs = _act_word(action, acting, lhs_word, NCPoly.gen(al), asys)
            via_rhs = act_poly(action, acting, rhs_poly, NCPoly.gen(al), asys)
            ok = ok and via_lhs == via_rhs
        rep.add("yd", "action-respects-relations", _wstr(lhs_word), ok)

    # the action respects the relations of A (module-algebra law)
    for lhs_word, rhs_poly in asys.rules:
        ok = True
        rel = NCPoly.monomial(lhs_word) + rhs_poly.neg()
        for hl in acting.sys.letters:
            img = act_poly(action, acting, NCPoly.gen(hl), rel, asys)
            ok = ok and img.is_zero
        rep.add("yd", "action-respects-base", _wstr(lhs_word), ok)
    return rep


def _grouplike(hopf: HopfPresentation, n: int) -> NCPoly:
    if n == 0:
        return NCPoly.one()
    letters = hopf.sys.letters
    pos = letters[0]
    neg = letters[1] if len(letters) > 1 else None
    word = (pos,) * n if n > 0 else (neg,) * (-n)
    return NCPoly.monomial(word)


def _tensor_bump(out, asys, hsys, apoly, hpoly):
    for aw, ac in asys.normalize(apoly).terms.items():
        for hw, hc in hsys.normalize(hpoly).terms.items():
            _bump(out, (aw, hw), ac * hc)


def _wstr(word):
    from .parser import word_str
    return word_str(word) if word else "1"


def smash_surjection(dom: SmashAlgebroid, cod: SmashAlgebroid, letter_map):
    """The algebroid surjection a # g -> a # pi(g) induced by a Hopf
    letter map pi; A letters are sent to themselves."""
    table = {}
    for l in dom.base.letters:
        table[l] = NCPoly.gen(l)
    table.update(letter_map)

    def apply(e):
        out = NCPoly.zero()
        for w, c in e.terms.items():
            img = NCPoly.const(c)
            for l in w:
                img = cod.sys.mul(img, table[l])
            out = out + img
        return cod.sys.normalize(out)

    return apply


def verify_surjection(dom: SmashAlgebroid, cod: SmashAlgebroid, apply,
                      samples) -> Report:
    """The letter map is a morphism of algebroids: it intertwines
    source, target, counit, multiplication and (slotwise) coproduct."""
    rep = Report()
    for r in dom.base.letters:
        rp = NCPoly.gen(r)
        rep.add("surjection", "source", r, apply(dom.s_of(rp)) == cod.s_of(rp))
        rep.add("surjection", "target", r, apply(dom.t_of(rp)) == cod.t_of(rp))
    for label, e in samples:
        rep.add("surjection", "counit", label,
                dom.counit(e) == cod.counit(apply(e)))
    for label, (e1, e2) in _pairs(samples):
        rep.add("surjection", "multiplicative", label,
                apply(dom.mul(e1, e2)) == cod.mul(apply(e1), apply(e2)))
    for label, e in samples:
        lhs = cod.lin("cor2", [(apply(z1), apply(z2)) for z1, z2 in dom.delta(e)])
        rhs = cod.lin("cor2", cod.delta(apply(e)))
        rep.add("surjection", "comultiplicative", label, lhs == rhs)
    return rep


def _pairs(samples):
    out = []
    for i, (l1, e1) in enumerate(samples):
        for l2, e2 in samples[i:]:
            out.append(("%s,%s" % (l1, l2), (e1, e2)))
    return out
