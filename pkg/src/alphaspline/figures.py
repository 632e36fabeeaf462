"""Figure configurations and their rendering to CSV/SVG files.

A configuration file is TOML with one ``[[figure]]`` table per figure::

    [[figure]]
    name = "basis_U4_k2"
    kind = "basis"              # phi | basis | curve
    knots = "0,0,0,1,2,3,3,3"   # basis and curve
    degree = 2                  # basis and curve
    alphas = ["-1", "2", "5", "inf"]
    polygon = [[0, 2], [1.5, 5]]  # curve only
    span = [0, 1]               # phi only
    domain = [-1, 2]            # phi only, defaults to the span
    samples = 400
    formats = ["csv", "svg"]
    output = "basis_U4_k2"      # file stem relative to the output directory

Basis figures produce one file per index (``<stem>_alpha_<label>``); phi and
curve figures overlay all indices in one file.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .alpha import Alpha, Span
from .basis import BasisSpec
from .curve import CurveSpec
from .emit import emit_csv, emit_svg
from .knots import make_knot_vector, parse_number
from .sampling import alpha_column, merge_series, sample_basis, sample_curve, sample_phi

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

KINDS = ("phi", "basis", "curve")
FORMATS = ("csv", "svg")
DEFAULT_SAMPLES = 400


@dataclass(frozen=True)
class FigureConfig:
    name: str
    kind: str
    alphas: tuple[Alpha, ...]
    knots: str | None = None
    degree: int | None = None
    polygon: tuple[tuple[float, ...], ...] | None = None
    span: tuple[float, float] | None = None
    domain: tuple[float, float] | None = None
    samples: int = DEFAULT_SAMPLES
    formats: tuple[str, ...] = FORMATS
    output: str | None = None
    title: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"figure {self.name!r}: kind must be one of {KINDS}")
        if not self.alphas:
            raise ValueError(f"figure {self.name!r}: alphas must be non-empty")
        if self.samples < 2:
            raise ValueError(f"figure {self.name!r}: samples must be >= 2")
        for f in self.formats:
            if f not in FORMATS:
                raise ValueError(f"figure {self.name!r}: unknown format {f!r}")
        if self.kind == "phi" and self.span is None:
            raise ValueError(f"figure {self.name!r}: phi figures need a span")
        if self.kind in ("basis", "curve") and (self.knots is None or self.degree is None):
            raise ValueError(f"figure {self.name!r}: {self.kind} figures need knots and degree")
        if self.kind == "curve" and self.polygon is None:
            raise ValueError(f"figure {self.name!r}: curve figures need a polygon")

    @property
    def stem(self) -> str:
        return self.output or self.name


def _pair(value, what: str) -> tuple[float, float]:
    if isinstance(value, str):
        value = value.split(",")
    if len(value) != 2:
        raise ValueError(f"{what} must have two entries")
    return tuple(parse_number(str(v)) for v in value)


def config_from_table(table: dict) -> FigureConfig:
    known = {"name", "kind", "knots", "degree", "alphas", "polygon", "span", "domain",
             "samples", "formats", "output", "title"}
    unknown = set(table) - known
    if unknown:
        raise ValueError(f"unknown figure keys: {sorted(unknown)}")
    if "name" not in table or "kind" not in table:
        raise ValueError("each figure needs a name and a kind")
    knots = table.get("knots")
    if isinstance(knots, list):
        knots = ",".join(str(v) for v in knots)
    polygon = table.get("polygon")
    return FigureConfig(
        name=str(table["name"]),
        kind=str(table["kind"]),
        alphas=tuple(Alpha.parse(str(a)) for a in table.get("alphas", ())),
        knots=knots,
        degree=None if table.get("degree") is None else int(table["degree"]),
        polygon=None if polygon is None else tuple(tuple(float(c) for c in p) for p in polygon),
        span=None if table.get("span") is None else _pair(table["span"], "span"),
        domain=None if table.get("domain") is None else _pair(table["domain"], "domain"),
        samples=int(table.get("samples", DEFAULT_SAMPLES)),
        formats=tuple(table.get("formats", FORMATS)),
        output=table.get("output"),
        title=table.get("title"),
    )


def load_configs(path) -> list[FigureConfig]:
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    tables = data.get("figure")
    if not isinstance(tables, list) or not tables:
        raise ValueError(f"{path}: no [[figure]] tables found")
    return [config_from_table(t) for t in tables]


def bundled_config_paths() -> list[Path]:
    root = resources.files("alphaspline") / "figures"
    return sorted(Path(str(p)) for p in root.iterdir() if p.name.endswith(".toml"))


def load_bundled() -> list[FigureConfig]:
    return [cfg for p in bundled_config_paths() for cfg in load_configs(p)]


def file_label(alpha: Alpha) -> str:
    return alpha.label.replace("-", "m").replace("/", "_").replace(".", "p")


def _emit(stem: str, series, formats, style: str, title: str) -> list[tuple[str, bytes]]:
    out = []
    for f in formats:
        if f == "csv":
            out.append((f"{stem}.csv", emit_csv(series)))
        else:
            out.append((f"{stem}.svg", emit_svg(series, style=style, title=title)))
    return out


def render(cfg: FigureConfig) -> list[tuple[str, bytes]]:
    """Relative file names and contents for one figure."""
    title = cfg.title or cfg.name
    if cfg.kind == "phi":
        span = Span(*cfg.span)
        domain = cfg.domain or cfg.span
        series = merge_series([sample_phi(a, span, domain, cfg.samples) for a in cfg.alphas])
        return _emit(cfg.stem, series, cfg.formats, "graph", title)
    knots = make_knot_vector(cfg.knots)
    if cfg.kind == "basis":
        files = []
        for a in cfg.alphas:
            series = sample_basis(BasisSpec(knots, cfg.degree, a), cfg.samples)
            files += _emit(f"{cfg.stem}_alpha_{file_label(a)}", series, cfg.formats, "graph",
                           f"{title} ({alpha_column(a)})")
        return files
    curves = [sample_curve(CurveSpec(BasisSpec(knots, cfg.degree, a), cfg.polygon), cfg.samples)
              for a in cfg.alphas]
    series = merge_series(curves, [alpha_column(a) for a in cfg.alphas])
    return _emit(cfg.stem, series, cfg.formats, "parametric", title)


def write_figures(configs, out_dir) -> list[Path]:
    out_dir = Path(out_dir)
    written = []
    for cfg in configs:
        for rel, data in render(cfg):
            path = out_dir / rel
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(data)
            written.append(path)
    return written
