"""Reader for presentation files.

A presentation file is structured text with sections

    [coefficients]         field = Q(q)
    [algebra NAME]         generators, relations, grading, order_weights
    [hopf NAME]            delta, counit, antipode, antipode_inv
    [bialgebroid NAME]     builder

Keys hold grammar strings; list-valued keys separate entries with ';'
and table-valued keys use 'generator: expression' entries.  Lines
starting with '#' are comments.
"""

from __future__ import annotations

from .freealg import BridgeRule, NCPoly, RewriteSystem
from .hopfalg import HopfPresentation
from .parser import ParseError, parse_poly, parse_scalar, parse_tensor


def read_sections(text: str) -> dict:
    sections = {}
    current = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            head = line[1:-1].split()
            kind = head[0]
            name = head[1] if len(head) > 1 else ""
            current = {}
            sections[(kind, name)] = current
            continue
        if current is None or "=" not in line:
            raise ParseError("stray line in presentation file: %r" % raw)
        key, _, value = line.partition("=")
        current[key.strip()] = value.strip()
    return sections


def _find(sections: dict, kind: str, name: str = None):
    hits = [(k, v) for k, v in sections.items() if k[0] == kind and (name is None or k[1] == name)]
    if not hits:
        return None, None
    if len(hits) > 1:
        raise ParseError("ambiguous [%s] section" % kind)
    return hits[0][0][1], hits[0][1]


def _int_table(value: str) -> dict:
    out = {}
    for item in value.split():
        name, _, num = item.partition(":")
        out[name] = int(num)
    return out


def algebra_from_sections(sections: dict, name: str = None) -> RewriteSystem:
    secname, sec = _find(sections, "algebra", name)
    if sec is None:
        raise ParseError("no [algebra] section found")
    letters = tuple(sec["generators"].split())
    probe = RewriteSystem(letters, ())
    rules = []
    for chunk in sec.get("relations", "").split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        lhs_text, arrow, rhs_text = chunk.partition("->")
        if not arrow:
            raise ParseError("relation without '->': %r" % chunk)
        lhs = parse_poly(lhs_text, probe)
        if len(lhs.terms) != 1:
            raise ParseError("relation left side must be a single word: %r" % chunk)
        (word, coeff), = lhs.terms.items()
        rhs = parse_poly(rhs_text, probe).scale(coeff.inverse())
        rules.append((word, rhs))
    weights = _int_table(sec["grading"]) if "grading" in sec else {}
    order_weights = _int_table(sec["order_weights"]) if "order_weights" in sec else {}
    bridges = []
    for chunk in sec.get("bridges", "").split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        head, colon, facs = chunk.partition(":")
        ends = head.split()
        if not colon or len(ends) != 2:
            raise ParseError("bridge must look like 'L R : x=scalar ...': %r" % chunk)
        factors = []
        for item in facs.split():
            letter, eq, expr = item.partition("=")
            if not eq:
                raise ParseError("bridge factor without '=': %r" % item)
            factors.append((letter.strip(), parse_scalar(expr)))
        bridges.append(BridgeRule(ends[0], ends[1], tuple(factors)))
    return RewriteSystem(letters, tuple(rules), weights, order_weights, tuple(bridges))


def _gen_table(value: str, parse_one) -> dict:
    out = {}
    for chunk in value.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, colon, expr = chunk.partition(":")
        if not colon:
            raise ParseError("table entry without ':': %r" % chunk)
        out[name.strip()] = parse_one(expr)
    return out


def hopf_from_sections(sections: dict, sys: RewriteSystem, name: str = None) -> HopfPresentation:
    _, sec = _find(sections, "hopf", name)
    if sec is None:
        raise ParseError("no [hopf] section found")
    delta = _gen_table(sec["delta"], lambda s: parse_tensor(s, sys.letters, 2))
    counit = _gen_table(sec["counit"], parse_scalar)
    antipode = _gen_table(sec["antipode"], lambda s: parse_poly(s, sys))
    antipode_inv = _gen_table(sec["antipode_inv"], lambda s: parse_poly(s, sys))
    for table in (delta, counit, antipode, antipode_inv):
        missing = set(sys.letters) - set(table)
        if missing:
            raise ParseError("hopf table missing generators %s" % sorted(missing))
    return HopfPresentation(sys, delta, counit, antipode, antipode_inv)


def load_presentation(text: str) -> dict:
    """Parse a presentation file into its algebra and optional hopf data."""
    sections = read_sections(text)
    out = {"sections": sections}
    if any(k[0] == "algebra" for k in sections):
        sys = algebra_from_sections(sections)
        out["algebra"] = sys
        if any(k[0] == "hopf" for k in sections):
            out["hopf"] = hopf_from_sections(sections, sys)
    _, bsec = _find(sections, "bialgebroid")
    if bsec is not None:
        out["builder"] = bsec.get("builder", "")
    return out
