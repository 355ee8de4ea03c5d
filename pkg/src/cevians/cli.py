"""Command-line front end.

Every result is printed as one line of compact JSON with exact values as
``"p/q"`` strings.  Failures print ``{"error": <name>, "message": ...}`` and
exit with the error's code (see ``cevians.errors`` and the README).

    cevians routh --lambda 2 --mu 2 --nu 2
    cevians hexagon --lambda 1
    cevians parallelogram --kappa 1 --lambda 1 --mu 1 --nu 1
    cevians faces --sides 1,1,1 1,1,1 1,1,1
    cevians polygon --sides 1,1,1 1,1,1 1,1,1 --pair "1:1 x 3:2" ...
    cevians verify --figure routh --lambda 2 --mu 2 --nu 2 --count 10 --seed 0
    cevians svg --figure hexagon --lambda 1 --svg-out hexagon.svg
    cevians run --config job.json
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, TextIO

from . import closed_forms as cf
from . import parallelogram as pg
from . import svg
from .arrangement import build_arrangement
from .bary import BaryPoint, normalize, polygon_ratio
from .errors import ConfigParseError, GeometryError, IndexOutOfRange, InvalidConfig, MismatchFound
from .exact import parse_rational, render
from .oracle import verify_invariance
from .triangle import (
    CevianId,
    TriangleConfig,
    cevian_vertex,
    hexagon_ratio_geometric,
    routh_triangle_ratio,
)

EXIT_IO = 24
EXIT_INTERNAL = 1

CLOSED_FORMS = ("routh", "hexagon", "morgan", "even", "corollary", "de_villiers", "eq1")


# --- config ----------------------------------------------------------------

def _ratio(value, what: str, positive: bool = True):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ConfigParseError(f"{what}: exact values must be strings like \"p/q\", got {value!r}")
    q = parse_rational(str(value))
    if positive and q <= 0:
        raise InvalidConfig(f"{what}: must be positive, got {render(q)}")
    return q


_PAIR_RE = re.compile(r"\s*(\d+):(\d+)\s*(?:x|X|\*|×)\s*(\d+):(\d+)\s*")


def parse_pair(text: str) -> tuple[CevianId, CevianId]:
    """``"v:j x v:j"`` (``×`` also accepted) -> two cevian ids."""
    m = _PAIR_RE.fullmatch(text)
    if m is None:
        raise ConfigParseError(f"bad cevian pair {text!r}; expected 'v:j x v:j'")
    v1, j1, v2, j2 = map(int, m.groups())
    return CevianId(v1, j1), CevianId(v2, j2)


@dataclass
class JobConfig:
    figure: str
    divisions: Any
    query: dict = field(default_factory=dict)

    @classmethod
    def from_json(cls, data) -> "JobConfig":
        if not isinstance(data, dict):
            raise ConfigParseError("config must be a JSON object")
        figure = data.get("figure")
        if figure not in ("triangle", "parallelogram"):
            raise ConfigParseError(f"figure must be 'triangle' or 'parallelogram', got {figure!r}")
        if "divisions" not in data:
            raise ConfigParseError("config needs 'divisions'")
        query = data.get("query", {"type": "faces"})
        if isinstance(query, str):
            query = {"type": query}
        if not isinstance(query, dict) or "type" not in query:
            raise ConfigParseError("query must be a name or an object with 'type'")
        return cls(figure, data["divisions"], query)

    def triangle(self) -> TriangleConfig:
        if self.figure != "triangle":
            raise ConfigParseError("this query needs a triangle figure")
        sides = self.divisions
        if not isinstance(sides, list) or len(sides) != 3 or not all(isinstance(s, list) and s for s in sides):
            raise ConfigParseError("triangle divisions must be three non-empty lists of proportions")
        return TriangleConfig.from_proportions(
            *[[_ratio(x, f"side {i + 1}") for x in s] for i, s in enumerate(sides)]
        )

    def parallelogram(self) -> pg.ParallelogramConfig:
        if self.figure != "parallelogram":
            raise ConfigParseError("this query needs a parallelogram figure")
        d = self.divisions
        if isinstance(d, list) and len(d) == 4:
            d = dict(zip(("kappa", "lambda", "mu", "nu"), d))
        if not isinstance(d, dict) or set(d) != {"kappa", "lambda", "mu", "nu"}:
            raise ConfigParseError("parallelogram divisions need kappa, lambda, mu, nu")
        return pg.ParallelogramConfig(*(_ratio(d[k], k) for k in ("kappa", "lambda", "mu", "nu")))


def load_config(path) -> JobConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigParseError(f"cannot read config {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return JobConfig.from_json(data)


# --- queries ---------------------------------------------------------------

def _point(p: BaryPoint) -> list[str]:
    return [render(x) for x in normalize(p).coords()]


def _routh_params(cfg: TriangleConfig):
    if any(len(s.proportions) != 2 for s in cfg.side_divisions):
        raise InvalidConfig("Routh needs exactly one division point per side")
    return [s.proportions[0] / s.proportions[1] for s in cfg.side_divisions]


def _hexagon_param(cfg: TriangleConfig):
    props = {s.proportions for s in cfg.side_divisions}
    if len(props) != 1 or len(next(iter(props))) != 3:
        raise InvalidConfig("hexagon needs every side divided 1:lambda:1")
    a, lam, b = next(iter(props))
    if a != b:
        raise InvalidConfig("hexagon needs symmetric divisions a:b:a")
    return lam / a


def routh_result(lam, mu, nu) -> dict:
    ratio = routh_triangle_ratio(lam, mu, nu)
    if ratio != cf.routh_formula(cf.RouthParams(lam, mu, nu)):
        raise MismatchFound("geometric and closed-form Routh ratios differ")
    return {"ratio": render(ratio)}


def hexagon_result(lam) -> dict:
    ratio = hexagon_ratio_geometric(lam)
    if ratio != cf.hexagon_formula(lam):
        raise MismatchFound("geometric and closed-form hexagon ratios differ")
    return {"ratio": render(ratio)}


def parallelogram_result(cfg: pg.ParallelogramConfig) -> dict:
    ratio = pg.quadrilateral_ratio_geometric(cfg)
    r1, r2 = pg.eval_r1_r2(cfg)
    if ratio != pg.eval_eq1(cfg):
        raise MismatchFound("geometric ratio and the two-term closed form differ")
    return {"ratio": render(ratio), "r1": render(r1), "r2": render(r2)}


def faces_result(cfg: TriangleConfig) -> dict:
    arr = build_arrangement(cfg)
    return {
        "faces": [
            {"id": f.id, "vertices": [_point(v) for v in f.vertices], "ratio": render(f.ratio)}
            for f in arr.faces
        ],
        "total": render(sum(f.ratio for f in arr.faces)),
        "counts": {"V": len(arr.vertices), "E": len(arr.edges), "F": len(arr.faces) + 1},
    }


def polygon_result(cfg: TriangleConfig, pairs: list[str]) -> dict:
    ids = [parse_pair(p) for p in pairs]
    for a, b in ids:
        for c in (a, b):
            cfg.side(c.vertex).split(c.point_index)  # raises IndexOutOfRange
    pts = [cevian_vertex(cfg, a, b) for a, b in ids]
    return {"ratio": render(polygon_ratio(pts)), "vertices": [_point(p) for p in pts]}


def closed_form_result(job: JobConfig, name: str, query: dict) -> dict:
    if name == "routh":
        value = cf.routh_formula(cf.RouthParams(*_routh_params(job.triangle())))
    elif name == "hexagon":
        value = cf.hexagon_formula(_hexagon_param(job.triangle()))
    elif name == "eq1":
        value = pg.eval_eq1(job.parallelogram())
    elif name == "corollary":
        cfg = job.parallelogram()
        if len(set(cfg.as_tuple())) != 1:
            raise InvalidConfig("corollary needs kappa = lambda = mu = nu")
        value = cf.corollary_formula(cfg.kappa)
    elif name in ("morgan", "even"):
        n = query.get("n")
        if not isinstance(n, int) or isinstance(n, bool):
            raise ConfigParseError(f"{name} needs an integer 'n'")
        value = cf.morgan_formula(n) if name == "morgan" else cf.even_case_formula(n)
    elif name == "de_villiers":
        value = cf.de_villiers_formula(_ratio(query.get("p"), "p"))
    else:
        raise ConfigParseError(f"unknown closed form {name!r}; choose from {', '.join(CLOSED_FORMS)}")
    return {"name": name, "ratio": render(value)}


def verify_result(figure: str, params: dict, count: int, seed: int) -> dict:
    return verify_invariance(figure, params, count=count, seed=seed).as_dict()


def _verify_params(job: JobConfig, figure: str | None):
    if job.figure == "parallelogram":
        return "parallelogram", {k: render(v) for k, v in
                                 zip(("kappa", "lambda", "mu", "nu"), job.parallelogram().as_tuple())}
    cfg = job.triangle()
    figure = figure or "faces"
    if figure == "routh":
        return figure, dict(zip(("lambda", "mu", "nu"), map(render, _routh_params(cfg))))
    if figure == "hexagon":
        return figure, {"lambda": render(_hexagon_param(cfg))}
    return "faces", {"sides": [[render(x) for x in s.proportions] for s in cfg.side_divisions]}


def svg_result(drawing: svg.Drawing, path) -> dict:
    try:
        svg.emit_svg(drawing, path)
    except OSError as exc:
        raise _IoError(f"cannot write {path}: {exc.strerror}") from exc
    return {"svg": str(path)}


class _IoError(GeometryError):
    exit_code = EXIT_IO


def _triangle_drawing(job: JobConfig, query: dict) -> svg.Drawing:
    cfg = job.triangle()
    pairs = query.get("highlight", [])
    ids = [parse_pair(p) for p in pairs]
    pts = [cevian_vertex(cfg, a, b) for a, b in ids]
    return svg.triangle_drawing(cfg, pts)


def run(config: JobConfig, output: TextIO) -> int:
    """Execute one job and write its JSON result; returns the exit status."""
    return _guarded(lambda: _dispatch(config), output)


def _dispatch(job: JobConfig) -> dict:
    q = job.query
    kind = q["type"]
    if kind == "faces":
        return faces_result(job.triangle())
    if kind == "polygon":
        pairs = q.get("pairs")
        if not isinstance(pairs, list):
            raise ConfigParseError("polygon query needs a 'pairs' list")
        return polygon_result(job.triangle(), pairs)
    if kind == "closed_form":
        return closed_form_result(job, q.get("name"), q)
    if kind == "ratio":
        if job.figure == "parallelogram":
            return parallelogram_result(job.parallelogram())
        raise ConfigParseError("'ratio' query is for parallelograms; use closed_form or polygon")
    if kind == "verify":
        count, seed = q.get("count", 10), q.get("seed", 0)
        if not isinstance(count, int) or not isinstance(seed, int) or count < 1:
            raise ConfigParseError("verify needs integer 'count' >= 1 and 'seed'")
        figure, params = _verify_params(job, q.get("figure"))
        return verify_result(figure, params, count, seed)
    if kind == "svg":
        path = q.get("path")
        if not isinstance(path, str):
            raise ConfigParseError("svg query needs a 'path'")
        if job.figure == "parallelogram":
            return svg_result(svg.parallelogram_drawing(job.parallelogram()), path)
        return svg_result(_triangle_drawing(job, q), path)
    raise ConfigParseError(f"unknown query type {kind!r}")


def _emit(obj: dict, output: TextIO) -> None:
    output.write(json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n")


def _guarded(fn, output: TextIO) -> int:
    try:
        result = fn()
    except GeometryError as exc:
        name = "IoError" if isinstance(exc, _IoError) else type(exc).__name__
        _emit({"error": name, "message": str(exc)}, output)
        return exc.exit_code
    except Exception as exc:  # noqa: BLE001 - report, never crash
        _emit({"error": "InternalError", "message": f"{type(exc).__name__}: {exc}"}, output)
        return EXIT_INTERNAL
    _emit(result, output)
    return 0


# --- argument parsing --------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigParseError(message)


def _add_ratio(p, *names):
    for name in names:
        p.add_argument(f"--{name}", dest=name, metavar="P/Q")


def _add_sides(p):
    p.add_argument("--sides", nargs=3, metavar="S1,S2,...",
                   help="segment proportions of sides A2A3, A3A1, A1A2")
    p.add_argument("--config", help="JSON job file supplying figure and divisions")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cevians", description="Exact area ratios of cevian figures.")
    parser.add_argument("--out", help="write the JSON result here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("routh", help="inner triangle of three cevians")
    _add_ratio(p, "lambda", "mu", "nu")
    p = sub.add_parser("hexagon", help="central hexagon for 1:lambda:1 divisions")
    _add_ratio(p, "lambda")
    p = sub.add_parser("parallelogram", help="inner quadrilateral of a parallelogram")
    _add_ratio(p, "kappa", "lambda", "mu", "nu")
    p.add_argument("--config")
    p = sub.add_parser("formula", help="evaluate a closed form directly")
    p.add_argument("name", choices=CLOSED_FORMS)
    _add_ratio(p, "kappa", "lambda", "mu", "nu", "p")
    p.add_argument("--n", type=int)
    p = sub.add_parser("faces", help="every face of the cevian arrangement")
    _add_sides(p)
    p = sub.add_parser("polygon", help="polygon with corners at cevian crossings")
    _add_sides(p)
    p.add_argument("--pair", action="append", default=[], metavar="'v:j x v:j'")
    p = sub.add_parser("verify", help="affine-invariance check against the Cartesian oracle")
    p.add_argument("--figure", choices=("routh", "hexagon", "parallelogram", "faces"))
    _add_ratio(p, "kappa", "lambda", "mu", "nu")
    _add_sides(p)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("svg", help="draw a figure")
    p.add_argument("--figure", choices=("routh", "hexagon", "parallelogram", "triangle"))
    _add_ratio(p, "kappa", "lambda", "mu", "nu")
    _add_sides(p)
    p.add_argument("--pair", action="append", default=[], metavar="'v:j x v:j'")
    p.add_argument("--svg-out", required=True, dest="svg_out")
    p = sub.add_parser("run", help="execute a JSON job file")
    p.add_argument("--config", required=True)
    return parser


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise ConfigParseError("missing " + ", ".join(f"--{n}" for n in missing))
    return [_ratio(getattr(args, n), f"--{n}") for n in names]


def _sides_job(args) -> JobConfig:
    if args.config:
        return load_config(args.config)
    if not args.sides:
        raise ConfigParseError("give --sides or --config")
    return JobConfig("triangle", [s.split(",") for s in args.sides])


def _parallelogram_cfg(args) -> pg.ParallelogramConfig:
    if getattr(args, "config", None):
        return load_config(args.config).parallelogram()
    return pg.ParallelogramConfig(*_need(args, "kappa", "lambda", "mu", "nu"))


def _command(args) -> dict:
    c = args.command
    if c == "routh":
        return routh_result(*_need(args, "lambda", "mu", "nu"))
    if c == "hexagon":
        return hexagon_result(*_need(args, "lambda"))
    if c == "parallelogram":
        return parallelogram_result(_parallelogram_cfg(args))
    if c == "formula":
        return _formula(args)
    if c == "faces":
        return faces_result(_sides_job(args).triangle())
    if c == "polygon":
        if not args.pair:
            raise ConfigParseError("give at least three --pair arguments")
        return polygon_result(_sides_job(args).triangle(), args.pair)
    if c == "verify":
        return _verify(args)
    if c == "svg":
        return svg_result(_drawing(args), args.svg_out)
    if c == "run":
        return _dispatch(load_config(args.config))
    raise ConfigParseError(f"unknown command {c!r}")


def _formula(args) -> dict:
    name = args.name
    if name == "routh":
        value = cf.routh_formula(cf.RouthParams(*_need(args, "lambda", "mu", "nu")))
    elif name == "hexagon":
        value = cf.hexagon_formula(*_need(args, "lambda"))
    elif name == "corollary":
        value = cf.corollary_formula(*_need(args, "lambda"))
    elif name == "de_villiers":
        value = cf.de_villiers_formula(*_need(args, "p"))
    elif name == "eq1":
        value = pg.eval_eq1(pg.ParallelogramConfig(*_need(args, "kappa", "lambda", "mu", "nu")))
    else:
        if args.n is None:
            raise ConfigParseError(f"{name} needs --n")
        value = cf.morgan_formula(args.n) if name == "morgan" else cf.even_case_formula(args.n)
    return {"name": name, "ratio": render(value)}


def _verify(args) -> dict:
    figure = args.figure
    if figure is None:
        raise ConfigParseError("verify needs --figure")
    if args.config:
        job = load_config(args.config)
        figure, params = _verify_params(job, figure)
    elif figure == "routh":
        params = dict(zip(("lambda", "mu", "nu"), map(render, _need(args, "lambda", "mu", "nu"))))
    elif figure == "hexagon":
        params = {"lambda": render(*_need(args, "lambda"))}
    elif figure == "parallelogram":
        params = dict(zip(("kappa", "lambda", "mu", "nu"),
                          map(render, _need(args, "kappa", "lambda", "mu", "nu"))))
    else:
        _, params = _verify_params(_sides_job(args), "faces")
    if args.count < 1:
        raise ConfigParseError("--count must be at least 1")
    return verify_result(figure, params, args.count, args.seed)


def _drawing(args) -> svg.Drawing:
    figure = args.figure
    if args.config:
        job = load_config(args.config)
        if job.figure == "parallelogram":
            return svg.parallelogram_drawing(job.parallelogram())
        return _triangle_drawing(job, {"highlight": args.pair})
    if figure == "routh":
        return svg.routh_drawing(*_need(args, "lambda", "mu", "nu"))
    if figure == "hexagon":
        return svg.hexagon_drawing(*_need(args, "lambda"))
    if figure == "parallelogram":
        return svg.parallelogram_drawing(_parallelogram_cfg(args))
    if figure == "triangle":
        return _triangle_drawing(_sides_job(args), {"highlight": args.pair})
    raise ConfigParseError("svg needs --figure or --config")


def main(argv=None, stdout: TextIO | None = None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    out_path = None

    def go():
        nonlocal out_path
        args = build_parser().parse_args(argv)
        out_path = args.out
        return _command(args)

    buf = _Buffer()
    status = _guarded(go, buf)
    if out_path is not None and status == 0:
        try:
            Path(out_path).write_text(buf.text, encoding="utf-8", newline="\n")
        except OSError as exc:
            _emit({"error": "IoError", "message": f"cannot write {out_path}: {exc.strerror}"}, stdout)
            return EXIT_IO
    else:
        stdout.write(buf.text)
    return status


class _Buffer:
    def __init__(self):
        self.text = ""

    def write(self, s):
        self.text += s


if __name__ == "__main__":
    sys.exit(main())
