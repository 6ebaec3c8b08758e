"""The ``dpd`` command line tool.

Exit codes: 0 affirmative verdict, 1 negative verdict, 2 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from dataclasses import dataclass, field
from typing import Optional

from .dpd import dpd_d_minus, dpd_is_regular, piece_divisor, section_generator, sigma_on_section
from .errors import DpdError, NotAModel, NotReal, UnknownCommand, ValidityViolation
from .fibers import classify_conjugate_fiber, classify_real_fiber, fiber_report
from .mobius import Mobius
from .parsing import parse_expression, parse_pair, parse_point, parse_rational
from .render import color_enabled, colorize, render_diagram
from .topology import classify_real_locus, normalize_to_model, real_image, verify_equivalence
from .torsor import norm_equation

COMMANDS = ("validate", "smooth", "fibers", "classify", "normalize", "sections", "torsor", "equiv")

OK, NEGATIVE, ERROR = 0, 1, 2


def load_schema() -> dict:
    """The JSON schema every ``--json`` report validates against."""
    text = resources.files("dpdreal").joinpath("schema/report.schema.json").read_text("utf-8")
    return json.loads(text)


@dataclass
class Report:
    command: str
    exit_code: int = OK
    result: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    diagram: Optional[str] = None
    error: Optional[dict] = None

    @property
    def status(self) -> str:
        return {OK: "ok", NEGATIVE: "negative", ERROR: "error"}[self.exit_code]

    def to_dict(self) -> dict:
        out = {"command": self.command, "status": self.status, "exit_code": self.exit_code}
        if self.error is not None:
            out["error"] = self.error
        else:
            out["result"] = self.result
        if self.diagram is not None:
            out["diagram"] = self.diagram
        return out

    def text(self, color: bool = False) -> str:
        if self.error is not None:
            return f"error [{self.error['error']}]: {self.error['message']}\n"
        out = "".join(line + "\n" for line in self.lines)
        if self.diagram:
            out += "\n" + (colorize(self.diagram) if color else self.diagram)
        return out


def _load(doc):
    if hasattr(doc, "pair"):
        return doc.pair()
    return parse_pair(doc).pair()


def _cmd_validate(r: Report, docs, args):
    try:
        pair = _load(docs[0])
    except (ValidityViolation, NotReal) as exc:
        r.exit_code = NEGATIVE
        r.result = {"valid": False, **exc.to_dict()}
        r.lines.append(f"invalid [{exc.tag}]: {exc}")
        return
    r.result = {"valid": True, "D_minus": str(dpd_d_minus(pair))}
    r.lines.append("valid")
    r.lines.append(f"D- = {dpd_d_minus(pair)}")


def _cmd_smooth(r: Report, docs, args):
    reg = dpd_is_regular(_load(docs[0]))
    r.result = {"regular": bool(reg)}
    if reg:
        r.lines.append("regular (the surface is smooth)")
        return
    r.exit_code = NEGATIVE
    r.result.update(
        point=str(reg.point), d_plus=str(reg.d_plus), d_minus=str(reg.d_minus)
    )
    r.lines.append(f"not regular at {reg.point}: (D+, D-) = ({reg.d_plus}, {reg.d_minus})")


def _cmd_fibers(r: Report, docs, args):
    pair = _load(docs[0])
    if args.at is not None:
        p = parse_point(args.at)
        if p.is_real:
            t = classify_real_fiber(pair, p)
            r.result = {"point": str(p), "fiber": t.value, "tag": t.tag}
        else:
            t = classify_conjugate_fiber(pair, p)
            r.result = {"point": str(p), "fiber": t.kind}
            if t.m is not None:
                r.result["multiplicity"] = t.m
        r.lines.append(f"{p}: {t}")
        return
    rep = fiber_report(pair)
    r.result = rep.to_dict()
    for p, t in rep.points:
        chart = " (chart w = 1/z)" if p.is_infinite else ""
        r.lines.append(f"point {p}: {t}{chart}")
    for q, t in rep.conjugate:
        r.lines.append(f"pair {q}, {q.conjugate()}: {t}")
    for a in rep.arcs:
        r.lines.append(f"arc {a.describe()}: {a.verdict}")
    r.diagram = render_diagram(rep)


def _cmd_classify(r: Report, docs, args):
    pair = _load(docs[0])
    rep = fiber_report(pair)
    verdict = classify_real_locus(pair, rep)
    image = real_image(pair, rep)
    r.result = {"verdict": verdict.to_dict(), "image": image.to_dict()}
    r.lines.append(str(verdict) + (f"  ({verdict.to_dict()['surface']})" if verdict.is_model else ""))
    r.lines.append(f"image: {image.describe()}")
    r.diagram = render_diagram(rep)
    if not verdict.is_model:
        r.exit_code = NEGATIVE


def _cmd_normalize(r: Report, docs, args):
    pair = _load(docs[0])
    try:
        model, moves, canonical = normalize_to_model(pair)
    except NotAModel as exc:
        r.exit_code = NEGATIVE
        r.result = {"model": None, **exc.to_dict()}
        r.lines.append(f"not a model: {exc}")
        return
    r.result = {
        "model": model.value,
        "moves": [m.to_dict() for m in moves],
        "canonical": canonical.document(),
    }
    r.lines.append(f"model: {model}")
    for k, m in enumerate(moves, 1):
        r.lines.append(f"  {k}. {m}")
    r.lines.append("canonical pair:")
    r.lines.extend("  " + line for line in canonical.document().splitlines())


def _cmd_sections(r: Report, docs, args):
    pair = _load(docs[0])
    n = args.m if args.m is not None else 1
    g = section_generator(pair, n)
    image = sigma_on_section(pair, n, g)
    r.result = {
        "degree": n,
        "divisor": str(piece_divisor(pair, n)),
        "generator": str(g),
        "sigma_image": str(image),
    }
    r.lines.append(f"degree {n}: Gamma(C, O({piece_divisor(pair, n)})) = g * A0, g = {g}")
    r.lines.append(f"sigma(g) in degree {-n}: {image}")


def _cmd_torsor(r: Report, docs, args):
    pair = _load(docs[0])
    res = norm_equation(pair.h, pair.curve)
    r.result = res.to_dict()
    r.lines.append(str(res))
    if not res:
        r.exit_code = NEGATIVE


def _cmd_equiv(r: Report, docs, args):
    if len(docs) < 2:
        raise DpdError("equiv needs two pair documents")
    p1, p2 = _load(docs[0]), _load(docs[1])
    psi = Mobius.parse(args.psi or "z")
    f = parse_expression(args.f or "1")
    lam = parse_rational(args.lam or "1")
    ok = verify_equivalence(p1, p2, psi, f, lam)
    r.result = {"equivalent": ok, "psi": str(psi), "f": str(f), "lambda": str(lam)}
    r.lines.append("certificate verified" if ok else "certificate rejected")
    if not ok:
        r.exit_code = NEGATIVE


HANDLERS = {
    "validate": _cmd_validate,
    "smooth": _cmd_smooth,
    "fibers": _cmd_fibers,
    "classify": _cmd_classify,
    "normalize": _cmd_normalize,
    "sections": _cmd_sections,
    "torsor": _cmd_torsor,
    "equiv": _cmd_equiv,
}


def _default_args() -> argparse.Namespace:
    return argparse.Namespace(at=None, m=None, f=None, psi=None, lam=None, json=False)


def _error_dict(exc: Exception) -> dict:
    if isinstance(exc, DpdError):
        return exc.to_dict()
    return {"error": type(exc).__name__, "message": str(exc)}


def run_command(name: str, args, documents) -> Report:
    """Run one command on pair documents (text or parsed) and collect a Report."""
    r = Report(name)
    if args is None:
        args = _default_args()
    elif isinstance(args, dict):
        ns = _default_args()
        for k, v in args.items():
            setattr(ns, k, v)
        args = ns
    try:
        if name not in HANDLERS:
            raise UnknownCommand(f"unknown command {name!r}; expected one of {', '.join(COMMANDS)}")
        HANDLERS[name](r, list(documents), args)
    except (DpdError, ValueError, ZeroDivisionError) as exc:
        r.exit_code = ERROR
        r.error = _error_dict(exc)
        r.result = {}
        r.diagram = None
    return r


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise DpdError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _ArgParser(prog="dpd", description="Exact DPD-pair toolkit for real surfaces with circle actions.")
    p.add_argument("command", help=" | ".join(COMMANDS))
    p.add_argument("files", nargs="*", help="pair documents ('-' reads stdin)")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    p.add_argument("--at", metavar="POINT", help="fibers: classify the fiber over one point")
    p.add_argument("-m", type=int, metavar="INT", help="sections: degree of the graded piece")
    p.add_argument("--f", metavar="EXPR", help="equiv: twist function f")
    p.add_argument("--psi", metavar="EXPR", help="equiv: Moebius map psi in z")
    p.add_argument("--lambda", dest="lam", metavar="Q", help="equiv: positive scalar")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        if args.command in HANDLERS:
            docs = [_read(f) for f in args.files]
            if not docs:
                raise DpdError("no pair document given")
        else:
            docs = []
        report = run_command(args.command, args, docs)
    except (DpdError, OSError) as exc:
        report = Report(argv[0] if argv else "", ERROR)
        report.error = _error_dict(exc)
    if as_json:
        sys.stdout.write(json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n")
    else:
        stream = sys.stderr if report.exit_code == ERROR else sys.stdout
        stream.write(report.text(color_enabled(stream)))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
