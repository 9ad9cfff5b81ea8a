"""Command-line front end: ``superhv <verb> [args] [flags]``.

Exit status is 0 on success, 1 when a verification finds a counterexample and
2 for usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import parsing, verify
from .algebra import AlgebraElement, Generator, as_element
from .arith import Scalar, ZeroLambdaError
from .omega import OmegaParams, SuperVector, act_element
from .poly import BiPoly, UniPoly
from .render import render, render_bipoly, render_scalar
from .sampling import DEFAULT_SEED
from .structure import (
    PhiParams,
    PhiVector,
    SubmoduleSpec,
    closure_witness,
    composition_series,
    member,
    phi_act,
    verify_series,
)
from .subalgebras import (
    SubModuleFamily,
    sub_act_element,
    sub_closure_witness,
    sub_member,
    sub_quotient_act,
)
from .weighting import (
    WeightParams,
    WeightVector,
    a_is_reducible,
    matched_params,
    rescaled_act,
    weighting_mismatches,
    weighted_act_vector,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
VERBS = ("bracket", "act", "member", "closure", "series", "phi-act", "weight", "verify", "parse")


class UsageError(Exception):
    pass


# -- output ------------------------------------------------------------------


def _coef_text(c: Scalar) -> str:
    return str(c.constant()) if c.is_lambda_free() else render_scalar(c)


def _poly_json(f: BiPoly) -> list:
    return [[i, j, _coef_text(c)] for (i, j), c in sorted(f.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))]


def to_json(value):
    """JSON-ready form; vectors as ``{"even": [[i, j, "coef"], ...], "odd": [...]}``."""
    if isinstance(value, PhiVector):
        value = value.as_supervector()
    if isinstance(value, SuperVector):
        return {"even": _poly_json(value.even), "odd": _poly_json(value.odd)}
    if isinstance(value, BiPoly):
        return _poly_json(value)
    if isinstance(value, Scalar):
        return {str(k): str(c) for k, c in sorted(value.items())}
    if isinstance(value, Generator):
        return str(value)
    if isinstance(value, AlgebraElement):
        return [[str(g), _coef_text(c)] for g, c in sorted(value.items(), key=lambda kv: kv[0].sort_key())]
    if isinstance(value, WeightVector):
        return [[f"{'vp' if s == '+' else 'vm'}[{i}]", _coef_text(c)] for (s, i), c in sorted(
            value.items(), key=lambda kv: (kv[0][0] != "+", kv[0][1].doubled))]
    if isinstance(value, UniPoly):
        return [[d, _coef_text(c)] for d, c in sorted(value.items(), reverse=True)]
    if isinstance(value, (Fraction, int)):
        return str(value)
    return str(value)


def _specialize_scalar(c: Scalar, lam) -> Scalar:
    return c if lam is None else Scalar.const(c.eval(lam))


def specialize(value, lam):
    """Evaluate every lambda-coefficient at the rational ``lam`` (None keeps it formal)."""
    if lam is None:
        return value
    if isinstance(value, BiPoly):
        return BiPoly({k: _specialize_scalar(c, lam) for k, c in value.terms.items()})
    if isinstance(value, PhiVector):
        return PhiVector(specialize(value.even, lam), specialize(value.odd, lam))
    if isinstance(value, SuperVector):
        return SuperVector(specialize(value.even, lam), specialize(value.odd, lam))
    if isinstance(value, WeightVector):
        return WeightVector({k: _specialize_scalar(c, lam) for k, c in value.items()})
    if isinstance(value, AlgebraElement):
        return AlgebraElement({g: _specialize_scalar(c, lam) for g, c in value.items()})
    return value


class Output:
    def __init__(self, args):
        self.json = args.json
        self.unicode = args.unicode
        self.lam = args.lam

    def text(self, value) -> str:
        return render(specialize(value, self.lam), unicode=self.unicode)

    def emit(self, text: str, payload: dict) -> None:
        if self.json:
            print(json.dumps(payload, sort_keys=True))
        else:
            print(text)


# -- argument helpers ------------------------------------------------------------


def _lambda_arg(text: str):
    if text == "formal":
        return None
    try:
        lam = parsing.parse_rat(text)
    except parsing.ParseError as exc:
        raise argparse.ArgumentTypeError(f"--lambda: {exc}") from None
    if lam == 0:
        raise argparse.ArgumentTypeError("--lambda must be nonzero")
    return lam


def _beta(args) -> UniPoly:
    return parsing.parse_beta(args.beta)


def _omega(args) -> OmegaParams:
    return OmegaParams(_beta(args))


def _family(args) -> SubModuleFamily | None:
    if not args.subalgebra:
        return None
    tag = args.subalgebra
    if tag == "ns":
        return SubModuleFamily("ns")
    if tag == "hc":
        return SubModuleFamily("hc")
    return SubModuleFamily(tag, _beta(args))


def _spec(args) -> SubmoduleSpec:
    return SubmoduleSpec(args.kind, parsing.parse_unipoly(args.g, "y"))


def _vector(text: str, fam: SubModuleFamily | None):
    if fam is not None and fam.tag == "hv":
        # hv modules are C[x, y]; accept "even: P" as well
        node = parsing.parse_expr(text)
        if isinstance(node, parsing.SuperPair):
            v = parsing.evaluate(node)
            if v.odd:
                raise UsageError("hv modules have no odd part")
            return v.even
        return parsing.parse_bipoly(text)
    return parsing.parse_supervector(text)


# -- verbs -------------------------------------------------------------------------


def cmd_bracket(args, out: Output) -> int:
    a = parsing.parse_element(args.expr)
    out.emit(out.text(a), {"result": to_json(a), "text": out.text(a)})
    return EXIT_OK


def cmd_act(args, out: Output) -> int:
    a = parsing.parse_element(args.element)
    fam = _family(args)
    v = _vector(args.vector, fam)
    res = sub_act_element(fam, a, v) if fam else act_element(a, v, _omega(args))
    res = specialize(res, out.lam)
    text = render_bipoly(res, unicode=out.unicode) if isinstance(res, BiPoly) else out.text(res)
    out.emit(text, {"result": to_json(res), "text": text})
    return EXIT_OK


def cmd_member(args, out: Output) -> int:
    spec = _spec(args)
    fam = _family(args)
    v = _vector(args.vector, fam)
    res = sub_member(fam, v, spec) if fam else member(v, spec)
    out.emit("true" if res else "false", {"member": res, "submodule": str(spec)})
    return EXIT_OK


def cmd_closure(args, out: Output) -> int:
    spec = _spec(args)
    fam = _family(args)
    if fam:
        wit = sub_closure_witness(fam, spec, samples=args.samples, seed=args.seed)
    else:
        wit = closure_witness(spec, _omega(args), samples=args.samples, seed=args.seed)
    if wit is None:
        out.emit(f"{spec}: closed on all sampled members", {"submodule": str(spec), "witness": None})
        return EXIT_OK
    x, v = wit
    image = sub_act_element(fam, x, v) if fam else act_element(x, v, _omega(args))
    vt = out.text(v) if not isinstance(v, BiPoly) else render_bipoly(v, unicode=out.unicode)
    it = out.text(image) if not isinstance(image, BiPoly) else render_bipoly(image, unicode=out.unicode)
    text = f"{spec}: not closed\n  witness: {x} acting on {vt}\n  image: {it}"
    out.emit(text, {"submodule": str(spec), "witness": {"generator": str(x), "vector": to_json(v), "image": to_json(image)}})
    return EXIT_OK


def _roots(text: str) -> list[tuple[Fraction, int]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--roots must be JSON such as [[1, 1], [2, 2]]: {exc}") from None
    if not isinstance(data, list):
        raise UsageError("--roots must be a JSON list of [root, multiplicity] pairs")
    roots = []
    for item in data:
        if not (isinstance(item, list) and len(item) == 2) or not isinstance(item[1], int) or isinstance(item[1], bool):
            raise UsageError(f"bad root entry {item!r}")
        root = item[0]
        if isinstance(root, bool) or not isinstance(root, (int, str)):
            raise UsageError(f"roots are integers or rational strings, got {root!r}")
        roots.append((parsing.parse_rat(str(root)), item[1]))
    return roots


def cmd_series(args, out: Output) -> int:
    series = composition_series(_roots(args.roots), _omega(args))
    factors = [q.as_dict() for q in series.factors]
    lines = [f"g = {render(series.g, out.unicode)}; quotient rank {series.rank}"]
    lines += [f"  Phi(lam, {f['beta']}, {f['b']})" for f in factors]
    status = EXIT_OK
    if args.check:
        ok = verify_series(series, samples=args.samples, seed=args.seed)
        lines.append("psi intertwining: " + ("PASS" if ok else "FAIL"))
        status = EXIT_OK if ok else EXIT_FAIL
    if out.json:
        print(json.dumps(factors, sort_keys=True))
    else:
        print("\n".join(lines))
    return status


def cmd_phi_act(args, out: Output) -> int:
    a = as_element(parsing.parse_element(args.element))
    b = parsing.parse_rat(args.b)
    fam = _family(args)
    if fam is not None and fam.tag == "hv":
        f = _vector(args.vector, fam)
        if not f.is_v_free():
            raise UsageError("a quotient vector involves only x")
        res = BiPoly.zero()
        for g, c in a.items():
            res = res + sub_quotient_act(fam, g, f, b).scale(c)
    else:
        f = parsing.parse_phivector(args.vector)
        res = PhiVector()
        for g, c in a.items():
            img = sub_quotient_act(fam, g, f, b) if fam else phi_act(g, f, PhiParams(_beta(args), b))
            res = res + img.scale(c)
    res = specialize(res, out.lam)
    text = render_bipoly(res, unicode=out.unicode) if isinstance(res, BiPoly) else out.text(res)
    out.emit(text, {"result": to_json(res), "text": text})
    return EXIT_OK


def cmd_weight(args, out: Output) -> int:
    w = WeightParams(parsing.parse_rat(args.alpha1), parsing.parse_rat(args.alpha2), parsing.parse_rat(args.epsilon))
    p = _omega(args)
    q = matched_params(w, p)
    bad = weighting_mismatches(w, p)
    lines = [f"A(a, b, c) = A({q.a}, {q.b}, {q.c})", f"reducible: {'yes' if a_is_reducible(q) else 'no'}"]
    lines.append(f"rescaled action matches A(a, b, c) in window: {'PASS' if not bad else 'FAIL'}")
    payload = {"a": str(q.a), "b": str(q.b), "c": str(q.c), "reducible": a_is_reducible(q), "verified": not bad}
    if bad:
        m = bad[0]
        lines.append(f"  counterexample: {m.gen} on {'vp' if m.sign == '+' else 'vm'}[{m.index}]: "
                     f"got {out.text(m.got)}, expected {out.text(m.expected)}")
        payload["counterexample"] = {"generator": str(m.gen), "got": to_json(m.got), "expected": to_json(m.expected)}
    if args.element is not None:
        if args.vector is None:
            raise UsageError("weight needs a vector after the element")
        a = as_element(parsing.parse_element(args.element))
        v = parsing.parse_weightvector(args.vector)
        if args.rescaled:
            res = WeightVector()
            for g, c in a.items():
                for (sign, idx), sc in v.items():
                    res = res + rescaled_act(g, sign, idx, w, p).scale(c * sc)
        else:
            res = weighted_act_vector(a, v, w, p)
        res = specialize(res, out.lam)
        lines.append(f"action: {out.text(res)}")
        payload["result"] = to_json(res)
        payload["text"] = out.text(res)
    out.emit("\n".join(lines), payload)
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_verify(args, out: Output) -> int:
    names = args.suites or list(verify.SUITES)
    unknown = [n for n in names if n not in verify.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(verify.SUITES)}")
    reports = []
    for name in names:
        kw = {}
        if name != "jacobi":
            kw["seed"] = args.seed
        if name == "relations" and args.beta_given:
            kw["betas"] = [_beta(args)]
        if name == "subalgebra" and args.subalgebra:
            kw["tag"] = args.subalgebra
        reports.append(verify.SUITES[name](**kw))
    ok = all(r.ok for r in reports)
    out.emit("\n".join(r.line() for r in reports), {"ok": ok, "suites": [r.as_dict() for r in reports]})
    return EXIT_OK if ok else EXIT_FAIL


_NODE_NAMES = {
    parsing.Num: "rational",
    parsing.Var: "variable",
    parsing.Gen: "generator",
    parsing.WeightBasis: "weight basis vector",
    parsing.Neg: "negation",
    parsing.Sum: "sum",
    parsing.Product: "product",
    parsing.Pow: "power",
    parsing.Bracket: "bracket",
    parsing.SuperPair: "super-vector",
}


def cmd_parse(args, out: Output) -> int:
    if args.type:
        value = parsing.parse_value(args.expr, args.type)
        kind = args.type
    else:
        kind = _NODE_NAMES[type(parsing.parse_expr(args.expr))]
        value = parsing.parse(args.expr)
    text = render(value, unicode=out.unicode)
    out.emit(f"{kind}: {text}", {"node": kind, "text": text, "value": to_json(value)})
    return EXIT_OK


COMMANDS = {
    "bracket": cmd_bracket,
    "act": cmd_act,
    "member": cmd_member,
    "closure": cmd_closure,
    "series": cmd_series,
    "phi-act": cmd_phi_act,
    "weight": cmd_weight,
    "verify": cmd_verify,
    "parse": cmd_parse,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--beta", default=None, help="polynomial in y (default 0)")
    common.add_argument("--lambda", dest="lam", type=_lambda_arg, default=None, metavar="formal|RAT",
                        help="keep lambda formal (default) or evaluate it at a nonzero rational")
    common.add_argument("--subalgebra", choices=("hv", "ns", "fv", "hc"), default=None)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--unicode", action="store_true", help="write lambda as λ")

    ap = argparse.ArgumentParser(prog="superhv", description="Exact computations in the N=1 Heisenberg-Virasoro superalgebra and its modules.")
    sub = ap.add_subparsers(dest="verb", required=True, metavar="verb")

    p = sub.add_parser("bracket", parents=[common], help="evaluate a bracket expression")
    p.add_argument("expr")

    p = sub.add_parser("act", parents=[common], help="act with an algebra element on a vector")
    p.add_argument("element")
    p.add_argument("vector")

    for verb, helptext in (("member", "test membership in R_g or S_g"), ("closure", "search for a closure witness")):
        p = sub.add_parser(verb, parents=[common], help=helptext)
        if verb == "member":
            p.add_argument("vector")
        p.add_argument("--kind", choices=("R", "S"), required=True)
        p.add_argument("--g", required=True, help="monic polynomial in y")
        if verb == "closure":
            p.add_argument("--samples", type=int, default=20)

    p = sub.add_parser("series", parents=[common], help="composition series of Omega / R_g")
    p.add_argument("--roots", required=True, help='JSON list of [root, multiplicity], e.g. "[[1,1],[2,2]]"')
    p.add_argument("--check", action="store_true", help="also verify each factor")
    p.add_argument("--samples", type=int, default=10)

    p = sub.add_parser("phi-act", parents=[common], help="act on the quotient Phi(lam, beta, b)")
    p.add_argument("element")
    p.add_argument("vector")
    p.add_argument("--b", required=True)

    p = sub.add_parser("weight", parents=[common], help="weighted module: matched A(a, b, c) and optional action")
    p.add_argument("element", nargs="?", default=None)
    p.add_argument("vector", nargs="?", default=None, help="combination of vp[n] and vm[q]")
    p.add_argument("--alpha1", required=True)
    p.add_argument("--alpha2", required=True)
    p.add_argument("--eps", "--epsilon", dest="epsilon", default="0")
    p.add_argument("--rescaled", action="store_true", help="use the rescaled basis")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suites", nargs="*", metavar="suite", help=f"any of {', '.join(verify.SUITES)} (default all)")

    p = sub.add_parser("parse", parents=[common], help="parse and print canonically")
    p.add_argument("expr")
    p.add_argument("--type", choices=sorted(parsing.PARSERS), default=None)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.beta_given = args.beta is not None
    if args.beta is None:
        args.beta = "0"
    out = Output(args)
    try:
        return COMMANDS[args.verb](args, out)
    except parsing.IndexParityError as exc:
        print(f"index-parity error: {exc}", file=sys.stderr)
    except parsing.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (UsageError, ValueError, TypeError, ZeroLambdaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
