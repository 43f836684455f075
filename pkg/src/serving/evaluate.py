"""
EVAL DISPATCHER
===============

One entry point for every library operation: a request
``{"op": name, "args": {...}}`` is validated, its arguments are decoded from
the canonical JSON encodings, the operation runs, and the result is encoded
back. Shared by the CLI ``eval`` subcommand and the HTTP ``/eval`` route.

Errors never escape ``handle_request``: they come back as
``{"error": {"type": ..., "message": ...}}``.
"""

import logging
from fractions import Fraction
from typing import Any, Callable, Dict, Optional

from src.algebra.weyl import p0_act, p0_reach_one, projection_phi, weyl_multiply
from src.algebra.witt import (
    ad_matrix,
    apply_to_polynomial,
    basis_of_grade,
    bracket,
    g0_coordinates,
    g1_decomposition,
    grade_component,
)
from src.analysis.annihilator import annihilator_space, height, weight_space
from src.analysis.aphi import AphiMatrix, aphi_det, quasi_whittaker_vectors_deg1
from src.analysis.closure import cyclicity_certificate, l_tilde_truncated, quotient_graded_dims, whittaker_cyclicity
from src.analysis.intertwiner import intertwiner_check, perturbed, phi_map, psi_map
from src.analysis.orbits import local_finiteness_orbit, smoothness_bound_check
from src.analysis.window import TruncationWindow
from src.core.multi_index import lex_compare, mi_add, mi_binomial, mi_factorial, mi_sub
from src.core.scalars import format_scalar
from src.data.codec import (
    build_module,
    decode_character,
    decode_gln,
    decode_index,
    decode_p0,
    decode_polynomial,
    decode_scalar,
    decode_vector,
    decode_weyl,
    decode_witt,
    encode_gln,
    encode_p0,
    encode_polynomial,
    encode_rows,
    encode_vector,
    encode_weyl,
    encode_witt,
    gln_from_data,
)
from src.modules.continuous import TruncatedSeries, continuous_act
from src.modules.families import highest_weight_vector, l_n_generators, make_w_phi, top_action_n1
from src.modules.whittaker import make_whittaker
from src.representations.gln import (
    adjoint_module,
    check_gln_relations,
    exterior_power,
    joint_eigenvectors,
    one_dim_module,
    tau_twist,
)
from src.utils.config import Settings, load_settings
from src.utils.errors import UsageError, WittSmoothError
from src.utils.validate_data import parse_request

logger = logging.getLogger(__name__)

Handler = Callable[[Dict[str, Any], Settings], Any]
OPERATIONS: Dict[str, Handler] = {}


def operation(name: str):
    def register(fn: Handler) -> Handler:
        OPERATIONS[name] = fn
        return fn
    return register


def _arg(args: Dict[str, Any], name: str):
    if name not in args:
        raise UsageError(f"missing argument {name!r}")
    return args[name]


def _int(args: Dict[str, Any], name: str, default: Optional[int] = None) -> int:
    value = args.get(name, default)
    if value is None:
        raise UsageError(f"missing argument {name!r}")
    try:
        return int(value)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"argument {name!r} must be an integer") from exc


def _grade_cap(args: Dict[str, Any], settings: Settings) -> Optional[int]:
    if args.get("grade_cap") is None:
        return settings.grade_cap
    return _int(args, "grade_cap")


def _window(args: Dict[str, Any], settings: Settings) -> TruncationWindow:
    module = build_module(_arg(args, "module"))
    return TruncationWindow(
        module,
        degree=_int(args, "degree", settings.degree),
        grade_cap=_grade_cap(args, settings),
        source_degree=_int(args, "source_degree", settings.source_degree),
    )


def _basis(module, vectors) -> list:
    return [encode_vector(module, v) for v in vectors]


# ==========================================================
# MULTI-INDICES
# ==========================================================

def _index(args: Dict[str, Any], name: str):
    value = _arg(args, name)
    if not isinstance(value, list):
        raise UsageError(f"argument {name!r} must be a list of exponents")
    return decode_index(value, len(value))


@operation("mi_add")
def _mi_add(args, settings):
    return list(mi_add(_index(args, "alpha"), _index(args, "beta")))


@operation("mi_sub")
def _mi_sub(args, settings):
    diff = mi_sub(_index(args, "alpha"), _index(args, "beta"))
    return None if diff is None else list(diff)


@operation("mi_binomial")
def _mi_binomial(args, settings):
    return format_scalar(mi_binomial(_index(args, "alpha"), _index(args, "beta")))


@operation("mi_factorial")
def _mi_factorial(args, settings):
    return format_scalar(mi_factorial(_index(args, "alpha")))


@operation("lex_compare")
def _lex_compare(args, settings):
    return lex_compare(_index(args, "alpha"), _index(args, "beta"))


# ==========================================================
# WITT ALGEBRA, WEYL ALGEBRA, P0
# ==========================================================

@operation("bracket")
def _bracket(args, settings):
    return encode_witt(bracket(decode_witt(_arg(args, "x")), decode_witt(_arg(args, "y"))))


@operation("grade_component")
def _grade_component(args, settings):
    return encode_witt(grade_component(decode_witt(_arg(args, "x")), _int(args, "k")))


@operation("basis_of_grade")
def _basis_of_grade(args, settings):
    return [encode_witt(x) for x in basis_of_grade(_int(args, "n"), _int(args, "k"))]


@operation("ad_matrix")
def _ad_matrix(args, settings):
    return encode_rows(ad_matrix(decode_witt(_arg(args, "x")), _int(args, "k")))


@operation("g0_coordinates")
def _g0_coordinates(args, settings):
    return dict(zip("eihf", map(format_scalar, g0_coordinates(decode_witt(_arg(args, "x"))))))


@operation("g1_decomposition")
def _g1_decomposition(args, settings):
    return {name: [encode_witt(x) for x in span] for name, span in g1_decomposition().items()}


@operation("apply_to_polynomial")
def _apply_to_polynomial(args, settings):
    return encode_polynomial(apply_to_polynomial(decode_witt(_arg(args, "x")), decode_polynomial(_arg(args, "f"))))


@operation("weyl_multiply")
def _weyl_multiply(args, settings):
    return encode_weyl(weyl_multiply(decode_weyl(_arg(args, "a")), decode_weyl(_arg(args, "b"))))


@operation("p0_act")
def _p0_act(args, settings):
    return encode_p0(p0_act(decode_weyl(_arg(args, "a")), decode_p0(_arg(args, "v"))))


@operation("p0_reach_one")
def _p0_reach_one(args, settings):
    beta, c = p0_reach_one(decode_p0(_arg(args, "v")))
    return {"beta": list(beta), "c": format_scalar(c)}


@operation("projection_phi")
def _projection_phi(args, settings):
    return encode_p0(projection_phi(decode_weyl(_arg(args, "a"))))


# ==========================================================
# gl_n-MODULES
# ==========================================================

@operation("exterior_power")
def _exterior_power(args, settings):
    return encode_gln(exterior_power(_int(args, "n"), _int(args, "k")))


@operation("one_dim_module")
def _one_dim_module(args, settings):
    return encode_gln(one_dim_module(_int(args, "n"), decode_scalar(_arg(args, "b"))))


@operation("tau_twist")
def _tau_twist(args, settings):
    return encode_gln(tau_twist(decode_gln(_arg(args, "module")), _int(args, "shift", 1)))


@operation("check_gln_relations")
def _check_gln_relations(args, settings):
    return check_gln_relations(decode_gln(_arg(args, "module"), validate=False)).to_dict()


@operation("adjoint_module")
def _adjoint_module(args, settings):
    return encode_gln(adjoint_module(_int(args, "n"), _int(args, "k")))


@operation("joint_eigenvectors")
def _joint_eigenvectors(args, settings):
    M = decode_gln(_arg(args, "module"))
    eigenvalues = [decode_scalar(c) for c in _arg(args, "eigenvalues")]
    return encode_rows(joint_eigenvectors(M, eigenvalues))


# ==========================================================
# SMOOTH MODULES
# ==========================================================

def _act(args, settings, family: Optional[str] = None):
    module = build_module(_arg(args, "module"))
    if family is not None and module.family != family:
        raise UsageError(f"expected a {family} module, got {module.family}")
    v = decode_vector(module, _arg(args, "v"))
    cap = args.get("cap")
    return encode_vector(module, module.act(decode_witt(_arg(args, "x")), v, cap=None if cap is None else int(cap)))


@operation("act")
def _act_any(args, settings):
    return _act(args, settings)


@operation("tensor_act")
def _tensor_act(args, settings):
    return _act(args, settings, "tensor")


@operation("induced_act")
def _induced_act(args, settings):
    return _act(args, settings, "induced")


@operation("induce")
def _induce(args, settings):
    """Descriptor and graded dimensions of Ind_{g>=0}^g M up to the window degree."""
    n = _int(args, "n")
    data = {k: v for k, v in args.items() if k in ("module", "exterior", "one_dim", "tau")}
    gln_from_data(n, data)
    module = build_module({"family": "induced", "n": n, "data": data})
    degree = _int(args, "degree", settings.degree)
    return {
        "module": {"family": "induced", "n": n, "data": data},
        "level": module.level,
        "graded_dims": [module.graded_dim(m) for m in range(degree + 1)],
    }


@operation("make_w_phi")
def _make_w_phi(args, settings):
    n = _int(args, "n")
    module = make_w_phi(n, decode_scalar(args.get("lambda", "0")))
    degree = _int(args, "degree", settings.degree)
    return {
        "module": {"family": "wphi", "n": n, "data": {"lambda": format_scalar(decode_scalar(args.get("lambda", "0")))}},
        "level": module.level,
        "graded_dims": [module.graded_dim(m) for m in range(degree + 1)],
    }


@operation("make_whittaker")
def _make_whittaker(args, settings):
    M = make_whittaker(decode_character(args.get("phi", {})), _int(args, "degree", 2))
    return {
        "degree": M.degree,
        "basis": [list(m) for m in M.basis],
        "matrices": {name: encode_rows(mat) for name, mat in M.matrices().items()},
    }


@operation("l_n_generators")
def _l_n_generators(args, settings):
    module, generators = l_n_generators(_int(args, "n"), _int(args, "r"), _int(args, "bound", settings.degree - 1))
    return _basis(module, generators)


@operation("highest_weight_vector")
def _highest_weight_vector(args, settings):
    n, r = _int(args, "n"), _int(args, "r")
    module, v = highest_weight_vector(n, r)
    return {"module": {"family": "tensor", "n": n, "data": {"exterior": r}}, "v": encode_vector(module, v)}


@operation("top_action_n1")
def _top_action_n1(args, settings):
    lhs, expected = top_action_n1(_int(args, "m"), decode_scalar(_arg(args, "c")))
    return {"value": format_scalar(lhs), "expected": format_scalar(expected)}


@operation("continuous_act")
def _continuous_act(args, settings):
    module = build_module(_arg(args, "module"))
    series = TruncatedSeries.from_parts(module.n, [decode_witt(x) for x in _arg(args, "series")])
    return encode_vector(module, continuous_act(series, decode_vector(module, _arg(args, "v")), module))


@operation("quotient_graded_dims")
def _quotient_graded_dims(args, settings):
    window = _window(args, settings)
    generators = [decode_vector(window.module, g) for g in _arg(args, "generators")]
    return {"dims": quotient_graded_dims(window, generators), "window": window.to_dict()}


# ==========================================================
# ANALYSIS
# ==========================================================

@operation("annihilator_space")
def _annihilator_space(args, settings):
    window = _window(args, settings)
    basis = annihilator_space(window, _int(args, "r"))
    return {"basis": _basis(window.module, basis), "dim": len(basis), "window": window.to_dict()}


@operation("height")
def _height(args, settings):
    return height(_window(args, settings)).to_dict()


@operation("weight_space")
def _weight_space(args, settings):
    window = _window(args, settings)
    basis = weight_space(window, [decode_scalar(c) for c in _arg(args, "eigenvalues")])
    return {"basis": _basis(window.module, basis), "window": window.to_dict()}


@operation("cyclicity_certificate")
def _cyclicity_certificate(args, settings):
    window = _window(args, settings)
    target = args.get("target_degree")
    result = cyclicity_certificate(window, decode_vector(window.module, _arg(args, "v")), None if target is None else int(target))
    return result.to_dict()


@operation("whittaker_cyclicity")
def _whittaker_cyclicity(args, settings):
    M = make_whittaker(decode_character(args.get("phi", {})), _int(args, "degree", settings.degree))
    v = {}
    for t in _arg(args, "v"):
        m = tuple(int(a) for a in _arg(t, "m"))
        v[m] = v.get(m, Fraction(0)) + decode_scalar(t.get("c", "1"))
    return whittaker_cyclicity(M, v, _int(args, "target_degree", M.degree - 1)).to_dict()


@operation("l_tilde_truncated")
def _l_tilde_truncated(args, settings):
    n, r = _int(args, "n"), _int(args, "r")
    window = _window({**args, "module": {"family": "tensor", "n": n, "data": {"exterior": r}}}, settings)
    basis = l_tilde_truncated(n, r, window)
    return {"basis": _basis(window.module, basis), "dim": len(basis), "window": window.to_dict(), "kind": "truncation"}


@operation("local_finiteness_orbit")
def _local_finiteness_orbit(args, settings):
    window = _window(args, settings)
    v = decode_vector(window.module, _arg(args, "v"))
    return local_finiteness_orbit(window, _int(args, "i") - 1, _int(args, "k"), v).to_dict()


@operation("smoothness_bound_check")
def _smoothness_bound_check(args, settings):
    window = _window(args, settings)
    return smoothness_bound_check(window, decode_index(_arg(args, "alpha"), window.module.n)).to_dict()


@operation("aphi_det")
def _aphi_det(args, settings):
    phi = decode_character(_arg(args, "phi"))
    det = aphi_det(phi)
    return {"det": format_scalar(det), "matrix": encode_rows(AphiMatrix.build(phi).as_lists())}


@operation("quasi_whittaker_vectors_deg1")
def _quasi_whittaker_vectors_deg1(args, settings):
    phi = decode_character(_arg(args, "phi"))
    kernel = quasi_whittaker_vectors_deg1(phi, _int(args, "degree", 2))
    return {"basis": encode_rows(kernel), "dim": len(kernel), "rank_aphi": AphiMatrix.build(phi).rank()}


@operation("intertwiner_check")
def _intertwiner_check(args, settings):
    """
    Presets: ``{"map": "psi", "n", <module data>}`` for Ind(M) -> F(P_0, M^tau),
    ``{"map": "phi", "n", "lambda"}`` for W(phi) -> F(P_0, V(0, n + lambda)),
    or explicit ``source``/``target`` descriptors with ``images``.
    """
    degree = _int(args, "degree", settings.degree)
    grade_cap = _grade_cap(args, settings)
    kind = args.get("map")
    if kind == "psi":
        n = _int(args, "n")
        data = {k: v for k, v in args.items() if k in ("module", "exterior", "one_dim", "tau")}
        src, tgt, images = psi_map(gln_from_data(n, data), degree, grade_cap)
    elif kind == "phi":
        src, tgt, images = phi_map(_int(args, "n"), decode_scalar(args.get("lambda", "0")), degree, grade_cap)
    elif kind is None:
        src = TruncationWindow(build_module(_arg(args, "source")), degree, grade_cap)
        tgt = TruncationWindow(build_module(_arg(args, "target")), degree, grade_cap)
        images = {}
        for entry in _arg(args, "images"):
            label = _arg(entry, "label")
            label = tuple(label) if isinstance(label, list) else int(label)
            images[label] = decode_vector(tgt.module, _arg(entry, "v"))
    else:
        raise UsageError(f"unknown map preset {kind!r}")
    if "perturb" in args:
        label = args["perturb"]
        label = tuple(label) if isinstance(label, list) else int(label)
        if label not in images:
            raise UsageError(f"no image for label {label!r}")
        images = perturbed(images, label)
    return intertwiner_check(src, tgt, images).to_dict()


# ==========================================================
# ENTRY POINTS
# ==========================================================

def evaluate(op: str, args: Dict[str, Any], settings: Optional[Settings] = None) -> Any:
    """Runs one operation; raises WittSmoothError subclasses on failure."""
    handler = OPERATIONS.get(op)
    if handler is None:
        raise UsageError(f"unknown operation {op!r}")
    settings = settings or load_settings()
    logger.debug("eval %s", op)
    return handler(args, settings)


def handle_request(payload: Any, settings: Optional[Settings] = None) -> Dict[str, Any]:
    try:
        request = parse_request(payload)
        return {"result": evaluate(request.op, request.args, settings)}
    except WittSmoothError as err:
        logger.info("eval failed: %s", err)
        return {"error": err.to_dict()}
    except (ValueError, TypeError, LookupError) as err:
        logger.info("eval failed: %s", err)
        return {"error": {"type": type(err).__name__, "message": str(err)}}
