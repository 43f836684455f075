"""
Canonical JSON encodings.

Rationals are strings "p/q" (or "p"), multi-indices are lists, directions
are counted from 1. Every ``encode_*`` output decodes to an equal value.
"""

from fractions import Fraction
from typing import Any, Dict, List

from src.algebra.polynomial import Polynomial
from src.algebra.weyl import P0Vector, WeylElement
from src.algebra.witt import WittElement
from src.core.multi_index import MultiIndex
from src.core.scalars import format_scalar, to_scalar
from src.modules.base import SmoothModule, TrivialModule
from src.modules.families import make_w_phi
from src.modules.induced import induce
from src.modules.tensor import TensorModule
from src.modules.vectors import ModuleVector
from src.modules.whittaker import WhittakerCharacter, induce_whittaker
from src.representations.gln import GlnModule, exterior_power, module_from_matrices, one_dim_module, tau_twist
from src.utils.errors import ArityError, FamilyError, UsageError


def _require(obj: Dict[str, Any], *fields: str) -> None:
    if not isinstance(obj, dict):
        raise UsageError(f"expected a JSON object, got {type(obj).__name__}")
    missing = [f for f in fields if f not in obj]
    if missing:
        raise UsageError(f"missing field(s) {missing}")


def decode_scalar(value) -> Fraction:
    try:
        return to_scalar(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not an exact rational: {value!r}") from exc


def decode_index(value, n: int) -> MultiIndex:
    alpha = MultiIndex(value)
    if len(alpha) != n:
        raise UsageError(f"multi-index {list(alpha)} does not have length {n}")
    return alpha


# -- algebra elements ---------------------------------------------------

def encode_witt(x: WittElement) -> dict:
    return {
        "n": x.n,
        "terms": [{"alpha": list(alpha), "i": i + 1, "c": format_scalar(c)} for (alpha, i), c in x.items()],
    }


def decode_witt(obj: dict) -> WittElement:
    _require(obj, "n", "terms")
    n = int(obj["n"])
    terms: Dict = {}
    for t in obj["terms"]:
        _require(t, "alpha", "i")
        key = (decode_index(t["alpha"], n), int(t["i"]) - 1)
        terms[key] = terms.get(key, 0) + decode_scalar(t.get("c", "1"))
    return WittElement(n, terms)


def encode_weyl(a: WeylElement) -> dict:
    return {
        "n": a.n,
        "terms": [{"beta": list(b), "gamma": list(g), "c": format_scalar(c)} for (b, g), c in a.items()],
    }


def decode_weyl(obj: dict) -> WeylElement:
    _require(obj, "n", "terms")
    n = int(obj["n"])
    terms: Dict = {}
    for t in obj["terms"]:
        _require(t, "beta", "gamma")
        key = (decode_index(t["beta"], n), decode_index(t["gamma"], n))
        terms[key] = terms.get(key, 0) + decode_scalar(t.get("c", "1"))
    return WeylElement(n, terms)


def encode_p0(v: P0Vector) -> dict:
    return {"n": v.n, "terms": [{"alpha": list(a), "c": format_scalar(c)} for a, c in v.items()]}


def decode_p0(obj: dict) -> P0Vector:
    _require(obj, "n", "terms")
    n = int(obj["n"])
    terms: Dict = {}
    for t in obj["terms"]:
        _require(t, "alpha")
        alpha = decode_index(t["alpha"], n)
        terms[alpha] = terms.get(alpha, 0) + decode_scalar(t.get("c", "1"))
    return P0Vector(n, terms)


def encode_polynomial(f: Polynomial) -> dict:
    return {"n": f.n, "terms": [{"alpha": list(a), "c": format_scalar(c)} for a, c in f.items()]}


def decode_polynomial(obj: dict) -> Polynomial:
    _require(obj, "n", "terms")
    n = int(obj["n"])
    return Polynomial(n, {decode_index(t["alpha"], n): decode_scalar(t.get("c", "1")) for t in obj["terms"]})


# -- gl_n-modules -------------------------------------------------------

def encode_gln(M: GlnModule) -> dict:
    return {
        "n": M.n,
        "dim": M.dim,
        "E": [[[[format_scalar(c) for c in row] for row in M.action[i, j]] for j in range(M.n)] for i in range(M.n)],
    }


def decode_gln(obj: dict, validate: bool = True) -> GlnModule:
    _require(obj, "n", "E")
    n = int(obj["n"])
    matrices = [[[[decode_scalar(c) for c in row] for row in mat] for mat in line] for line in obj["E"]]
    M = module_from_matrices(n, matrices, validate=validate)
    if "dim" in obj and int(obj["dim"]) != M.dim:
        raise UsageError(f"declared dim {obj['dim']} but matrices are {M.dim} x {M.dim}")
    return M


def gln_from_data(n: int, data: dict) -> GlnModule:
    """The coefficient module of a descriptor: explicit matrices, an exterior power or V(0, b)."""
    if "module" in data:
        M = decode_gln(data["module"])
    elif "exterior" in data:
        M = exterior_power(n, int(data["exterior"]))
    elif "one_dim" in data:
        M = one_dim_module(n, decode_scalar(data["one_dim"]))
    else:
        raise UsageError("module data needs one of 'module', 'exterior', 'one_dim'")
    if data.get("tau"):
        M = tau_twist(M, int(data["tau"]))
    return M


# -- characters and module descriptors ------------------------------------

def decode_character(obj: dict) -> WhittakerCharacter:
    if not isinstance(obj, dict):
        raise UsageError("a character is an object with keys among p0..p3, q0, q1")
    try:
        return WhittakerCharacter.from_mapping({k: decode_scalar(v) for k, v in obj.items()})
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def encode_character(phi: WhittakerCharacter) -> dict:
    return phi.to_dict()


def build_module(descriptor: dict) -> SmoothModule:
    _require(descriptor, "family", "n")
    family = descriptor["family"]
    n = int(descriptor["n"])
    data = descriptor.get("data", {}) or {}
    if family == "tensor":
        return TensorModule(gln_from_data(n, data))
    if family == "induced":
        return induce(gln_from_data(n, data))
    if family == "wphi":
        return make_w_phi(n, decode_scalar(data.get("lambda", "0")))
    if family == "whittaker":
        if n != 2:
            raise UsageError("whittaker modules exist for n = 2 only")
        return induce_whittaker(decode_character(data.get("phi", {})))
    if family == "trivial":
        return TrivialModule(n)
    raise UsageError(f"unknown module family {family!r}")


# -- module vectors -----------------------------------------------------

def _encode_label(label):
    return list(label) if isinstance(label, tuple) else label


def _decode_label(label):
    return tuple(label) if isinstance(label, list) else int(label)


def encode_vector(module: SmoothModule, w: ModuleVector) -> dict:
    """Dense component lists for finite coefficient spaces, sparse terms otherwise."""
    out: Dict[str, Any] = {"n": w.n, "family": w.family}
    if module.is_finite():
        labels = module.labels(0)
        dim = len(labels)
        out["terms"] = [
            {"alpha": list(alpha), "v": [format_scalar(c) for c in w.dense_component(alpha, dim)]}
            for alpha in w.support()
        ]
    else:
        out["terms"] = [
            {"alpha": list(alpha), "label": _encode_label(label), "c": format_scalar(c)}
            for (alpha, label), c in w.items()
        ]
    return out


def decode_vector(module: SmoothModule, obj: dict) -> ModuleVector:
    """Terms over ``module``; the optional "n" and "family" fields must agree with it."""
    _require(obj, "terms")
    if obj.get("family", module.family) != module.family:
        raise FamilyError(f"{obj['family']} vector handed to a {module.family} module")
    if int(obj.get("n", module.n)) != module.n:
        raise ArityError(f"vector over n = {obj['n']} handed to a module over n = {module.n}")
    labels = module.labels(0) if module.is_finite() else None
    terms: Dict = {}
    for t in obj["terms"]:
        _require(t, "alpha")
        alpha = decode_index(t["alpha"], module.n)
        if "v" in t:
            if labels is None:
                raise UsageError(f"{module.family} vectors take sparse labelled terms, not component lists")
            if len(t["v"]) != len(labels):
                raise UsageError(f"component list of length {len(t['v'])} for a coefficient space of dimension {len(labels)}")
            for label, c in enumerate(t["v"]):
                terms[(alpha, label)] = terms.get((alpha, label), 0) + decode_scalar(c)
        else:
            label = _decode_label(t.get("label", 0))
            if labels is not None and label not in labels:
                raise UsageError(f"label {label!r} outside 0..{len(labels) - 1}")
            key = (alpha, label)
            terms[key] = terms.get(key, 0) + decode_scalar(t.get("c", "1"))
    return module.vector(terms)


def encode_rows(rows: List[List[Fraction]]) -> List[List[str]]:
    return [[format_scalar(c) for c in row] for row in rows]
