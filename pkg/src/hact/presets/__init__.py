"""Built-in presentations and constructed algebroids.

load(name) resolves a preset to a descriptor dict.  File presets are
read from NAME.pres, looked up first in $HACT_PRESET_DIR when that is
set, then among the packaged files; constructed presets assemble
backends out of the packaged presentations.  Descriptors carry:

    name      the preset name
    kind      "algebra" | "hopf" | "bialgebroid"
    algebra   RewriteSystem (file presets)
    hopf      HopfPresentation (hopf presets)
    backend   bialgebroid backend (constructed presets)
    extension HGExtension (tensor-square preset only)
    systems   list of (label, RewriteSystem) shipped with the preset
"""

from __future__ import annotations

import os

from ..es_backend import ESAlgebroid
from ..freealg import NCPoly, RewriteSystem
from ..hopfalg import ComoduleAlgebra, HGExtension
from ..parser import parse_poly
from ..presfile import load_presentation
from ..scalars import Scalar
from ..smash_backend import build_smash
from ..tensor import Tensor

_DIR = os.path.dirname(__file__)
_FILE_PRESETS = ("oq_sl2", "o_u1", "podles")
_cache = {}


def _descriptor_from_text(name: str, text: str) -> dict:
    data = load_presentation(text)
    kind = "hopf" if "hopf" in data else "algebra"
    desc = {
        "name": name,
        "kind": kind,
        "algebra": data.get("algebra"),
        "hopf": data.get("hopf"),
        "sections": data["sections"],
        "systems": [],
    }
    if desc["algebra"] is not None:
        desc["systems"] = [(name, desc["algebra"])]
    return desc


def load_file(path: str, name: str = None) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if name is None:
        name = os.path.splitext(os.path.basename(path))[0]
    return _descriptor_from_text(name, text)


def _builtin(name: str) -> dict:
    key = ("builtin", name)
    if key not in _cache:
        _cache[key] = load_file(os.path.join(_DIR, name + ".pres"), name)
    return _cache[key]


def _q(n: int) -> Scalar:
    return Scalar.q_pow(n)


def _gen_table(value: str, parse_one) -> dict:
    out = {}
    for chunk in value.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, _, expr = chunk.partition(":")
        out[name.strip()] = parse_one(expr)
    return out


def sl2_extension() -> HGExtension:
    """Quantum SL(2) over the circle, with the standard sphere as base.

    The stored translation pairs for weights +-1 invert the Galois map
    on the grouplike generators; higher weights extend them through the
    translation product rule (hg)_+ (x) (hg)_- = h_+ g_+ (x) g_- h_-.
    """
    A = _builtin("oq_sl2")["algebra"]
    H = _builtin("o_u1")["hopf"]
    pod = _builtin("podles")
    ca = ComoduleAlgebra(alg=A, hopf=H, pos="t", neg="tinv")
    emb_sec = pod["sections"][("coinvariants", "podles")]
    embed = _gen_table(emb_sec["embed"], lambda s: A.normalize(parse_poly(s, A)))

    one = NCPoly.one()
    tau = {0: [(one, one)]}
    tau[1] = [
        (parse_poly("d", A), parse_poly("a", A)),
        (parse_poly("-q^-1*b", A), parse_poly("c", A)),
    ]
    tau[-1] = [
        (parse_poly("a", A), parse_poly("d", A)),
        (parse_poly("-q*c", A), parse_poly("b", A)),
    ]
    for n in (1, 2, 3):
        for sign in (1, -1):
            step = tau[sign]
            tau[sign * (n + 1)] = [
                (A.mul(p1, p2), A.mul(m2, m1))
                for p1, m1 in tau[sign * n]
                for p2, m2 in step
            ]
    return HGExtension(ca=ca, base=pod["algebra"], base_embed=embed, tau=tau)


def _pair(A: RewriteSystem, x: str, y: str) -> Tensor:
    t = Tensor((A, A))
    t.add_product((parse_poly(x, A), parse_poly(y, A)))
    return t


# the distinguished weight-balanced pair generators of the tensor square
_ES_GENS = (
    ("alpha", "a", "d"),
    ("alphat", "-q^-1*a", "b"),
    ("beta", "-q^-1*b", "c"),
    ("betat", "d", "c"),
    ("gamma", "-q^-1*c", "b"),
    ("gammat", "c", "d"),
    ("delta", "d", "a"),
    ("deltat", "-q^-1*b", "a"),
)


def _es_fibration() -> dict:
    X = sl2_extension()
    A = X.ca.alg
    gens = [(nm, _pair(A, x, y)) for nm, x, y in _ES_GENS]
    backend = ESAlgebroid(name="es_fibration", X=X, gens=gens)
    return {
        "name": "es_fibration",
        "kind": "bialgebroid",
        "algebra": None,
        "hopf": X.ca.hopf,
        "backend": backend,
        "extension": X,
        "systems": [
            ("oq_sl2", A),
            ("o_u1", X.ca.hopf.sys),
            ("podles", X.base),
        ],
    }


def _x_line(weight: int) -> RewriteSystem:
    return RewriteSystem(("x",), ((("x", "x"), NCPoly.zero()),), {"x": weight})


def _smash_desk() -> dict:
    xsys = _x_line(1)
    H = _builtin("o_u1")["hopf"]
    action = {
        ("t", "x"): NCPoly.gen("x").scale(_q(1)),
        ("tinv", "x"): NCPoly.gen("x").scale(_q(-1)),
    }
    backend = build_smash("smash_desk", xsys, H, action, {"x": 1}, pos="t", neg="tinv")
    return {
        "name": "smash_desk",
        "kind": "bialgebroid",
        "algebra": None,
        "hopf": H,
        "backend": backend,
        "systems": [("smash_desk", backend.sys)],
    }


def _smash_slq2() -> dict:
    xsys = _x_line(0)
    G = _builtin("oq_sl2")["hopf"]
    action = {
        ("a", "x"): NCPoly.gen("x").scale(_q(1)),
        ("b", "x"): NCPoly.zero(),
        ("c", "x"): NCPoly.zero(),
        ("d", "x"): NCPoly.gen("x").scale(_q(-1)),
    }
    backend = build_smash(
        "smash_slq2", xsys, G, action, {"x": 0},
        order_weights={"x": 1, "a": 2, "b": 1, "c": 1, "d": 2},
    )

    H = _builtin("o_u1")["hopf"]
    target_action = {
        ("t", "x"): NCPoly.gen("x").scale(_q(1)),
        ("tinv", "x"): NCPoly.gen("x").scale(_q(-1)),
    }
    target = build_smash(
        "smash_slq2_u1", _x_line(0), H, target_action, {"x": 0}, pos="t", neg="tinv"
    )
    pi_letters = {
        "a": NCPoly.gen("t"),
        "b": NCPoly.zero(),
        "c": NCPoly.zero(),
        "d": NCPoly.gen("tinv"),
    }
    return {
        "name": "smash_slq2",
        "kind": "bialgebroid",
        "algebra": None,
        "hopf": G,
        "backend": backend,
        "pi_target": target,
        "pi_letters": pi_letters,
        "extension": sl2_extension(),
        "systems": [("smash_slq2", backend.sys), ("smash_slq2_u1", target.sys)],
    }


_CONSTRUCTED = {
    "es_fibration": _es_fibration,
    "smash_desk": _smash_desk,
    "smash_slq2": _smash_slq2,
}


def available() -> list:
    names = set(_FILE_PRESETS) | set(_CONSTRUCTED)
    preset_dir = os.environ.get("HACT_PRESET_DIR")
    if preset_dir and os.path.isdir(preset_dir):
        for fn in os.listdir(preset_dir):
            if fn.endswith(".pres"):
                names.add(fn[: -len(".pres")])
    return sorted(names)


def load(name: str) -> dict:
    preset_dir = os.environ.get("HACT_PRESET_DIR")
    if preset_dir:
        path = os.path.join(preset_dir, name + ".pres")
        if os.path.isfile(path):
            key = ("file", os.path.abspath(path))
            if key not in _cache:
                _cache[key] = load_file(path, name)
            return _cache[key]
    if name in _CONSTRUCTED:
        key = ("constructed", name)
        if key not in _cache:
            _cache[key] = _CONSTRUCTED[name]()
        return _cache[key]
    if name in _FILE_PRESETS:
        return _builtin(name)
    raise KeyError("unknown preset %r; available: %s" % (name, ", ".join(available())))
