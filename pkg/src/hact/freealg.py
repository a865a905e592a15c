"""Free noncommutative polynomials and confluent rewriting.

Words are tuples of generator names.  An NCPoly is a finite Q(q)-linear
combination of words.  A RewriteSystem presents a quotient algebra by a
list of rules lhs -> rhs where every monomial of rhs is strictly smaller
than lhs in the degree-lexicographic order induced by the generator
list.  Normal forms are computed by leftmost-outermost rewriting, which
terminates because every step decreases the order; confluence is a
property of the rule set and is certified separately by check_overlaps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from .scalars import Scalar, ZERO, ONE

Word = tuple


class NCPoly:
    """Linear combination of words with Scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = c

    @staticmethod
    def zero() -> "NCPoly":
        return NCPoly()

    @staticmethod
    def one() -> "NCPoly":
        return NCPoly({(): ONE})

    @staticmethod
    def gen(letter: str) -> "NCPoly":
        return NCPoly({(letter,): ONE})

    @staticmethod
    def monomial(word: Word, coeff: Scalar = ONE) -> "NCPoly":
        return NCPoly({word: coeff} if coeff else {})

    @staticmethod
    def const(coeff: Scalar) -> "NCPoly":
        return NCPoly({(): coeff} if coeff else {})

    def add_term(self, word: Word, coeff: Scalar) -> None:
        c = self.terms.get(word, ZERO) + coeff
        if c:
            self.terms[word] = c
        else:
            self.terms.pop(word, None)

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = NCPoly(dict(self.terms))
        for w, c in other.terms.items():
            out.add_term(w, c)
        return out

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        out = NCPoly(dict(self.terms))
        for w, c in other.terms.items():
            out.add_term(w, -c)
        return out

    def __neg__(self) -> "NCPoly":
        return NCPoly({w: -c for w, c in self.terms.items()})

    def scale(self, coeff: Scalar) -> "NCPoly":
        if not coeff:
            return NCPoly()
        return NCPoly({w: c * coeff for w, c in self.terms.items()})

    def raw_mul(self, other: "NCPoly") -> "NCPoly":
        """Concatenation product with no rewriting applied."""
        out = NCPoly()
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out.add_term(w1 + w2, c1 * c2)
        return out

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Maximal word length; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def constant_term(self) -> Scalar:
        return self.terms.get((), ZERO)

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "NCPoly(0)"
        bits = ["%s*%s" % (c, ".".join(w) or "1") for w, c in self.terms.items()]
        return "NCPoly(%s)" % " + ".join(sorted(bits))


@dataclass(frozen=True)
class BridgeRule:
    """Parametric rule family  L m R -> (prod of factors of m) m rhs.

    Here L R -> rhs is an ordinary two-letter rule of the system and m
    ranges over all nonempty words in the listed middle letters, each
    contributing its scalar factor.  This finitely presents the infinite
    completions that appear when L x = factor_x (x L) holds for every
    middle letter x but the orientation keeps L on the left: the pair
    rule then has consequences L m R that no finite plain rule set can
    cover."""

    left: str
    right: str
    factors: tuple  # of (letter, Scalar) pairs for the middle letters


@dataclass(frozen=True)
class RewriteSystem:
    """Algebra presentation: ordered generators plus order-decreasing rules.

    weights is an optional integer grading of the generators used by
    comodule structures; word length is always the notion of degree.
    order_weights (default 1 per generator) feed the termination order:
    rules must strictly decrease (order weight, length, letter indices).
    Sorting and display always use plain deglex.  bridges holds
    BridgeRule families completing the plain rules; their instances are
    rewritten like ordinary rules.
    """

    letters: tuple
    rules: tuple  # of (Word, NCPoly) pairs
    weights: dict = field(default_factory=dict, compare=False)
    order_weights: dict = field(default_factory=dict, compare=False)
    bridges: tuple = ()

    def __post_init__(self):
        index = {g: i for i, g in enumerate(self.letters)}
        object.__setattr__(self, "_index", index)
        if len(index) != len(self.letters):
            raise ValueError("duplicate generator names")
        if "q" in index:
            raise ValueError("the name q is reserved for the scalar parameter")
        for lhs, rhs in self.rules:
            if not lhs:
                raise ValueError("empty rule left-hand side")
            for w in list(lhs) + [x for word in rhs.terms for x in word]:
                if w not in index:
                    raise ValueError("rule mentions unknown generator %r" % w)
            for w in rhs.terms:
                if not self._termination_key(w) < self._termination_key(lhs):
                    raise ValueError(
                        "rule %s -> ... is not order-decreasing at %s"
                        % ("*".join(lhs), "*".join(w) or "1")
                    )
        pair_rhs = []
        for br in self.bridges:
            for x in (br.left, br.right, *(l for l, _ in br.factors)):
                if x not in index:
                    raise ValueError("bridge mentions unknown generator %r" % x)
            if not br.factors:
                raise ValueError("bridge without middle letters")
            rhs0 = None
            for lhs, rhs in self.rules:
                if lhs == (br.left, br.right):
                    rhs0 = rhs
            if rhs0 is None:
                raise ValueError(
                    "bridge %s..%s has no matching pair rule" % (br.left, br.right)
                )
            # instance termination must not depend on the middle word:
            # require strict decrease already in (order weight, length)
            wt_lr = self._termination_key((br.left, br.right))[:2]
            for w in rhs0.terms:
                if not self._termination_key(w)[:2] < wt_lr:
                    raise ValueError(
                        "bridge %s..%s is not order-decreasing" % (br.left, br.right)
                    )
            pair_rhs.append((rhs0, dict(br.factors)))
        object.__setattr__(self, "_bridge_data", tuple(pair_rhs))

    def _termination_key(self, word: Word):
        idx = self._index
        wt = sum(self.order_weights.get(x, 1) for x in word)
        return (wt, len(word), tuple(idx[x] for x in word))

    # -- order -------------------------------------------------------

    def index(self, letter: str) -> int:
        return self._index[letter]

    def word_key(self, word: Word):
        idx = self._index
        return (len(word), tuple(idx[x] for x in word))

    def word_less(self, a: Word, b: Word) -> bool:
        return self.word_key(a) < self.word_key(b)

    def sorted_words(self, words):
        return sorted(words, key=self.word_key)

    def weight(self, word: Word) -> int:
        return sum(self.weights.get(x, 0) for x in word)

    # -- rewriting ---------------------------------------------------

    def _bridge_matches(self, word: Word, pos: int):
        """Yield (segment length, replacement) for bridges firing at pos."""
        for br, (rhs0, factors) in zip(self.bridges, self._bridge_data):
            if word[pos] != br.left:
                continue
            coeff = ONE
            i = pos + 1
            while i < len(word):
                x = word[i]
                if x == br.right and i > pos + 1:
                    middle = NCPoly.monomial(word[pos + 1 : i], coeff)
                    yield i + 1 - pos, middle.raw_mul(rhs0)
                if x not in factors:
                    break
                coeff = coeff * factors[x]
                i += 1

    def redexes(self, word: Word):
        """Yield every (pos, segment length, replacement NCPoly)."""
        for pos in range(len(word)):
            for lhs, rhs in self.rules:
                n = len(lhs)
                if word[pos : pos + n] == lhs:
                    yield pos, n, rhs
            for seglen, rhs in self._bridge_matches(word, pos):
                yield pos, seglen, rhs

    def find_redex(self, word: Word):
        """Leftmost (pos, segment length, replacement NCPoly), or None."""
        for hit in self.redexes(word):
            return hit
        return None

    def rewrite_segment(self, word: Word, pos: int, seglen: int, rhs: NCPoly) -> NCPoly:
        pre, post = word[:pos], word[pos + seglen :]
        out = NCPoly()
        for w, c in rhs.terms.items():
            out.add_term(pre + w + post, c)
        return out

    def normalize(self, p: NCPoly) -> NCPoly:
        out = NCPoly()
        stack = list(p.terms.items())
        while stack:
            word, coeff = stack.pop()
            hit = self.find_redex(word)
            if hit is None:
                out.add_term(word, coeff)
                continue
            pos, seglen, rhs = hit
            for w, c in self.rewrite_segment(word, pos, seglen, rhs).terms.items():
                stack.append((w, c * coeff))
        return out

    def mul(self, p: NCPoly, q: NCPoly) -> NCPoly:
        return self.normalize(p.raw_mul(q))

    def mul_many(self, polys) -> NCPoly:
        out = NCPoly.one()
        for p in polys:
            out = self.mul(out, p)
        return out

    def is_normal(self, word: Word) -> bool:
        return self.find_redex(word) is None

    def _suffix_reducible(self, word: Word) -> bool:
        """A redex ending exactly at the last letter, for incremental
        basis construction over words with irreducible proper prefixes."""
        for lhs, _ in self.rules:
            n = len(lhs)
            if n <= len(word) and word[-n:] == lhs:
                return True
        for br, (_, factors) in zip(self.bridges, self._bridge_data):
            if word[-1] != br.right:
                continue
            i = len(word) - 2
            while i >= 0 and word[i] in factors:
                i -= 1
            if i >= 0 and word[i] == br.left and i < len(word) - 2:
                return True
        return False


def graded_basis(sys: RewriteSystem, degree: int):
    """Irreducible words of the given length, in deglex order."""
    if degree < 0:
        return []
    words = [()]
    for _ in range(degree):
        nxt = []
        for w in words:
            for g in sys.letters:
                cand = w + (g,)
                # only a suffix of the extended word can become reducible
                if not sys._suffix_reducible(cand):
                    nxt.append(cand)
        words = nxt
    return sys.sorted_words(words)


def basis_upto(sys: RewriteSystem, degree: int):
    out = []
    for d in range(degree + 1):
        out.extend(graded_basis(sys, d))
    return out


@dataclass
class ConfluenceReport:
    max_degree: int
    words_checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def check_overlaps(sys: RewriteSystem, max_degree: int = 4) -> ConfluenceReport:
    """Exhaustively certify confluence on all words up to max_degree.

    For every word w of length <= max_degree and every applicable rule at
    every position, one rewriting step followed by full normalization
    must agree with normalizing w directly.  This subsumes resolving the
    overlap ambiguities of rule pairs whose overlap words fit in the
    bound.
    """

    if max_degree < max(len(lhs) for lhs, _ in sys.rules):
        raise ValueError("max_degree smaller than the longest rule")
    nf_cache = {}

    def nf_word(word):
        if word not in nf_cache:
            nf_cache[word] = sys.normalize(NCPoly.monomial(word))
        return nf_cache[word]

    def nf_poly(p):
        out = NCPoly()
        for w, c in p.terms.items():
            for w2, c2 in nf_word(w).terms.items():
                out.add_term(w2, c2 * c)
        return out

    failures = []
    words = [()]
    checked = 0
    for _ in range(max_degree):
        words = [w + (g,) for w in words for g in sys.letters]
        for word in words:
            checked += 1
            direct = nf_word(word)
            for pos, seglen, rhs in sys.redexes(word):
                stepped = nf_poly(sys.rewrite_segment(word, pos, seglen, rhs))
                if stepped != direct:
                    failures.append((word, pos, seglen, stepped, direct))
    return ConfluenceReport(max_degree, checked, failures)
