"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 divergence or non-convergence, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .errors import (ConvergenceError, DivergenceError, DomainError,
                     HemifrustumError, PoleError)
from .geometry import (AREA_F3_PARAMS, HemiellipsoidFrustum, surface_area_closed,
                       theorem1_angular_integral, theorem2_angular_integral,
                       theorem3_radial_integral)
from .multivar import AppellF2Args, TripleSeriesParams, appell_f2, srivastava_f3
from .quadrature import (angular_integral_quadrature, radial_integral_quadrature,
                         surface_area_quadrature)
from .series import TruncationPolicy
from .special import gauss_2f1

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_VALIDATION = 2
EXIT_CONVERGENCE = 3
EXIT_INTERNAL = 4

_F3_GROUPS = ("a", "b", "b_prime", "b_dprime", "c", "c_prime", "c_dprime",
              "e", "g", "g_prime", "g_dprime", "h", "h_prime", "h_dprime")


class _Failure(Exception):
    def __init__(self, code, exc, document=None):
        super().__init__(str(exc))
        self.code = code
        self.exc = exc
        self.document = document


def _float_list(text: str) -> list[float]:
    text = text.strip()
    if not text:
        return []
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--rel-tol", type=float, default=1e-12,
                        help="series stopping tolerance")
    common.add_argument("--max-terms", type=int, default=100_000,
                        help="term budget of single and double series")
    common.add_argument("--max-shells", type=int, default=600,
                        help="total-degree budget of the triple series")
    common.add_argument("--output", metavar="PATH",
                        help="also write the report to PATH")
    return common


def _add_frustum(p: argparse.ArgumentParser, allow_fractions: bool = True) -> None:
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--h", type=float, help="lower cutting plane height")
    p.add_argument("--H", type=float, help="upper cutting plane height")
    if allow_fractions:
        p.add_argument("--beta", type=float, help="plane fraction of H")
        p.add_argument("--gamma", type=float, help="plane fraction of h")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="hemifrustum",
        description="Curved surface area of a hemiellipsoid frustum and the "
                    "special functions behind it.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("area", parents=[common],
                       help="closed-form area from (h, H) or (beta, gamma)")
    _add_frustum(p)

    p = sub.add_parser("verify", parents=[common],
                       help="compare the closed form with quadrature")
    _add_frustum(p)
    p.add_argument("--verify-tol", type=float, default=1e-6)
    p.add_argument("--quad-tol", type=float, default=1e-10)

    p = sub.add_parser("eval-f2", parents=[common], help="Appell F2")
    for name in ("a", "b", "c", "d", "g", "x", "y"):
        p.add_argument(f"--{name}", type=float, required=True)

    p = sub.add_parser("eval-f3", parents=[common],
                       help="triple series F(3); groups are comma-separated")
    p.add_argument("--preset", choices=("area",),
                   help="use the parameter groups of the area formula")
    for name in _F3_GROUPS:
        p.add_argument(f"--{name.replace('_', '-')}", dest=f"grp_{name}",
                       type=_float_list, default=None)
    for name in ("x", "y", "z"):
        p.add_argument(f"--{name}", type=float, required=True)

    p = sub.add_parser("eval-2f1", parents=[common], help="Gauss 2F1")
    for name in ("a", "b", "c", "z"):
        p.add_argument(f"--{name}", type=float, required=True)

    p = sub.add_parser("integral", parents=[common],
                       help="angular or radial integral, closed form and/or quadrature")
    p.add_argument("kind", choices=("angular", "radial"))
    p.add_argument("--sigma", type=float)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--method", choices=("closed", "quad", "both"), default="both")
    p.add_argument("--quad-tol", type=float, default=1e-12)
    return parser


def _policy(args) -> TruncationPolicy:
    return TruncationPolicy(rel_tol=args.rel_tol, max_terms=args.max_terms,
                            max_shells=args.max_shells)


def _frustum(args) -> HemiellipsoidFrustum:
    planes = args.h is not None or args.H is not None
    fractions = (getattr(args, "beta", None) is not None
                 or getattr(args, "gamma", None) is not None)
    if planes == fractions:
        raise DomainError("supply exactly one of (--h, --H) or (--beta, --gamma)")
    if planes:
        if args.h is None or args.H is None:
            raise DomainError("both --h and --H are required")
        return HemiellipsoidFrustum(args.a, args.b, args.c, args.h, args.H)
    if args.beta is None or args.gamma is None:
        raise DomainError("both --beta and --gamma are required")
    return HemiellipsoidFrustum.from_plane_fractions(args.a, args.b, args.c,
                                                     args.beta, args.gamma)


def _frustum_inputs(fr: HemiellipsoidFrustum) -> dict:
    return {"a": fr.a, "b": fr.b, "c": fr.c, "h": fr.h, "H": fr.H}


def _document(command, inputs, result, diagnostics=None, warnings=None) -> dict:
    return {"command": command, "inputs": inputs, "result": result,
            "diagnostics": diagnostics or {}, "warnings": warnings or []}


def _series_doc(command, inputs, res) -> dict:
    warnings = [] if res.converged else ["series did not meet its tolerance"]
    return _document(command, inputs, {"value": res.value}, res.to_dict(), warnings)


def cmd_area(args) -> dict:
    fr = _frustum(args)
    inputs = _frustum_inputs(fr)
    try:
        report = surface_area_closed(fr, _policy(args))
    except ConvergenceError as exc:
        doc = None
        if exc.partial is not None:
            doc = _document("area", inputs, exc.partial.to_dict(),
                            {k: v.to_dict() for k, v in exc.partial.diagnostics.items()},
                            [str(exc)])
        raise _Failure(EXIT_CONVERGENCE, exc, doc)
    return _document("area", inputs, report.to_dict(),
                     {k: v.to_dict() for k, v in report.diagnostics.items()})


def cmd_verify(args) -> tuple[dict, int]:
    fr = _frustum(args)
    inputs = dict(_frustum_inputs(fr), verify_tol=args.verify_tol,
                  quad_tol=args.quad_tol)
    closed_value, closed_exc = None, None
    try:
        closed_value = surface_area_closed(fr, _policy(args)).area
    except ConvergenceError as exc:
        closed_exc = exc
        if exc.partial is not None:
            closed_value = exc.partial.area
    oracle_value, oracle_exc = None, None
    try:
        oracle_value = surface_area_quadrature(fr, args.quad_tol).value
    except ConvergenceError as exc:
        oracle_exc = exc
        if exc.partial is not None:
            oracle_value = exc.partial.value
    result = {"closed": closed_value, "oracle": oracle_value}
    if closed_value is not None and oracle_value is not None:
        abs_dev = abs(closed_value - oracle_value)
        scale = max(abs(closed_value), abs(oracle_value))
        rel_dev = 0.0 if scale == 0.0 else abs_dev / scale
        result.update(abs_deviation=abs_dev, rel_deviation=rel_dev,
                      passed=rel_dev <= args.verify_tol)
    failures = [e for e in (closed_exc, oracle_exc) if e is not None]
    if failures:
        doc = _document("verify", inputs, result, warnings=[str(e) for e in failures])
        raise _Failure(EXIT_CONVERGENCE, failures[0], doc)
    doc = _document("verify", inputs, result)
    return doc, EXIT_OK if result["passed"] else EXIT_MISMATCH


def cmd_eval_f2(args) -> dict:
    f2 = AppellF2Args(args.a, args.b, args.c, args.d, args.g, args.x, args.y)
    res = appell_f2(f2, _policy(args))
    return _series_doc("eval-f2", vars(f2), res)


def cmd_eval_f3(args) -> dict:
    groups = AREA_F3_PARAMS.to_dict() if args.preset == "area" else {}
    for name in _F3_GROUPS:
        given = getattr(args, f"grp_{name}")
        if given is not None:
            groups[name] = given
    params = TripleSeriesParams.from_dict(groups)
    res = srivastava_f3(params, args.x, args.y, args.z, _policy(args))
    inputs = {"params": params.to_dict(), "x": args.x, "y": args.y, "z": args.z}
    return _series_doc("eval-f3", inputs, res)


def cmd_eval_2f1(args) -> dict:
    res = gauss_2f1(args.a, args.b, args.c, args.z, _policy(args))
    return _series_doc("eval-2f1", {"a": args.a, "b": args.b, "c": args.c,
                                    "z": args.z}, res)


def cmd_integral(args) -> dict:
    policy = _policy(args)
    if args.kind == "angular":
        if args.sigma is None or args.lam is None:
            raise DomainError("angular integral needs --sigma and --lambda")
        inputs = {"kind": "angular", "sigma": args.sigma, "lambda": args.lam, "s": args.s}
        closed = lambda: (theorem1_angular_integral if args.sigma >= args.lam
                          else theorem2_angular_integral)(args.sigma, args.lam,
                                                          args.s, policy)
        quad = lambda: angular_integral_quadrature(args.sigma, args.lam, args.s,
                                                   args.quad_tol)
    else:
        if args.beta is None or args.gamma is None:
            raise DomainError("radial integral needs --beta and --gamma")
        inputs = {"kind": "radial", "beta": args.beta, "gamma": args.gamma, "s": args.s}
        closed = lambda: theorem3_radial_integral(args.beta, args.gamma, args.s, policy)
        quad = lambda: radial_integral_quadrature(args.beta, args.gamma, args.s,
                                                  args.quad_tol)
    inputs["method"] = args.method
    result, diagnostics, warnings = {}, {}, []
    if args.method in ("closed", "both"):
        res = closed()
        result["closed"] = res.value
        diagnostics["closed"] = res.to_dict()
        if not res.converged:
            warnings.append("closed-form series did not meet its tolerance")
    if args.method in ("quad", "both"):
        res = quad()
        result["quadrature"] = res.value
        diagnostics["quadrature"] = res.to_dict()
    if args.method == "both":
        dev = abs(result["closed"] - result["quadrature"])
        result["abs_deviation"] = dev
        scale = max(abs(result["closed"]), abs(result["quadrature"]))
        result["rel_deviation"] = 0.0 if scale == 0.0 else dev / scale
    return _document("integral", inputs, result, diagnostics, warnings)


_COMMANDS = {
    "area": cmd_area,
    "verify": cmd_verify,
    "eval-f2": cmd_eval_f2,
    "eval-f3": cmd_eval_f3,
    "eval-2f1": cmd_eval_2f1,
    "integral": cmd_integral,
}


def _flatten(doc, prefix=""):
    for key, value in doc.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, name + ".")
        elif isinstance(value, list):
            yield name, json.dumps(value)
        elif isinstance(value, float):
            yield name, repr(value)
        else:
            yield name, str(value)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    return "".join(f"{k}: {v}\n" for k, v in _flatten(doc))


def _emit(text: str, path: str | None) -> None:
    sys.stdout.write(text)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _error(code: int, exc: BaseException) -> None:
    payload = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    sys.stderr.write(json.dumps(payload) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    try:
        out = _COMMANDS[args.command](args)
        doc, code = out if isinstance(out, tuple) else (out, EXIT_OK)
    except _Failure as fail:
        if fail.document is not None:
            _emit(render(fail.document, fmt), args.output)
        _error(fail.code, fail.exc)
        return fail.code
    except (DomainError, PoleError) as exc:
        _error(EXIT_VALIDATION, exc)
        return EXIT_VALIDATION
    except (DivergenceError, ConvergenceError) as exc:
        _error(EXIT_CONVERGENCE, exc)
        return EXIT_CONVERGENCE
    except HemifrustumError as exc:
        _error(EXIT_INTERNAL, exc)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - stable exit code for anything unexpected
        _error(EXIT_INTERNAL, exc)
        return EXIT_INTERNAL
    _emit(render(doc, fmt), args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
