"""Command-line front end: ``cotoeplitz matrix|verify|relations|info``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .coalgebra.cosymbol import COUNIT, CoSymbol
from .coalgebra.cosymbol import from_json as cosymbol_from_json
from .coalgebra.instances import SUq2Instance
from .operators.matrix import TruncationSpec, matrix_of_cosymbol, matrix_of_symbol
from .operators.ncpoly import associated_classical, check_relation, classify_relation, hbar_deform, parse_ncpoly
from .scalar import as_rational
from .suq2.algebra import symbol_from_text
from .suq2.form import WeightFunction
from .verify import SUITES, VerifyConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    q: Fraction | None
    weight: WeightFunction
    trunc: int
    subspace: str
    output_format: str
    seed: int
    hbar_sqrt: Fraction

    def instance(self) -> SUq2Instance:
        return SUq2Instance(self.weight, self.subspace)  # type: ignore[arg-type]

    def to_json(self) -> dict[str, Any]:
        return {
            "q": "symbolic" if self.q is None else str(self.q),
            "weight": self.weight.to_json(),
            "trunc": self.trunc,
            "subspace": self.subspace,
            "seed": self.seed,
            "hbar_sqrt": str(self.hbar_sqrt),
        }


def _rational(text: str, what: str) -> Fraction:
    try:
        return Fraction(as_rational(text))
    except (ValueError, ZeroDivisionError, TypeError):
        raise ConfigError(f"{what} must be a rational like 3 or 1/2, got {text!r}") from None


def build_config(args: argparse.Namespace) -> RunConfig:
    q = None if args.q == "symbolic" else _rational(args.q, "--q")
    if q == 0:
        raise ConfigError("--q must be non-zero")
    if args.trunc < 1:
        raise ConfigError("--trunc must be at least 1")
    if args.weight == "one":
        weight = WeightFunction.one()
    else:
        try:
            weight = WeightFunction.from_file(args.weight)
        except OSError as exc:
            raise ConfigError(f"cannot read weight table: {exc}") from None
    return RunConfig(q, weight, args.trunc, args.subspace, args.format, args.seed, _rational(args.hbar_sqrt, "--hbar-sqrt"))


def _emit(text: str, output: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _load_cosymbol(source: str) -> CoSymbol:
    if source == "counit":
        return COUNIT
    try:
        return cosymbol_from_json(json.loads(Path(source).read_text(encoding="utf-8")))
    except OSError as exc:
        raise ConfigError(f"cannot read co-symbol file: {exc}") from None
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ConfigError(f"bad co-symbol file {source!r}: {exc}") from None


def cmd_matrix(cfg: RunConfig, args: argparse.Namespace) -> int:
    if (args.symbol is None) == (args.cosymbol is None):
        raise ConfigError("give exactly one of --symbol or --cosymbol")
    inst = cfg.instance()
    trunc = TruncationSpec(cfg.trunc, cfg.subspace)
    if args.symbol is not None:
        mat = matrix_of_symbol(inst, symbol_from_text(args.symbol), trunc)
    else:
        mat = matrix_of_cosymbol(inst, _load_cosymbol(args.cosymbol), trunc)
    if cfg.output_format == "csv":
        if cfg.q is None:
            raise ConfigError("CSV export needs a rational --q")
        _emit(mat.to_csv(cfg.q), args.output)
        return EXIT_OK
    data = mat.to_json()
    if cfg.q is not None:
        values = mat.specialize(cfg.q)
        data["specialized"] = {
            "q": str(cfg.q),
            "values": [
                {"row": e["row"], "col": e["col"], "value": values[(r, c)].to_json()}
                for e, (r, c, _) in zip(data["entries"], mat.sorted_entries())
                if (r, c) in values
            ],
        }
    _emit(_dump(data), args.output)
    return EXIT_OK


def cmd_verify(cfg: RunConfig, args: argparse.Namespace) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise ConfigError(f"unknown suite {args.suite!r}; choose from {', '.join([*SUITES, 'all'])}")
    if cfg.q is not None and cfg.q <= 0:
        raise ConfigError("verification compares adjoints and needs --q > 0")
    vcfg = VerifyConfig(trunc=cfg.trunc, seed=cfg.seed, weight=cfg.weight, subspace=cfg.subspace, q_value=cfg.q)
    report = run_suite(args.suite, vcfg)
    _emit(_dump(report), args.output)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def read_relations(path: str) -> list[str]:
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read relation file: {exc}") from None
    return [ln.split("#", 1)[0].strip() for ln in lines if ln.split("#", 1)[0].strip()]


def cmd_relations(cfg: RunConfig, args: argparse.Namespace) -> int:
    inst = cfg.instance()
    trunc = TruncationSpec(cfg.trunc, cfg.subspace)
    symbols: dict[str, Any] = {}

    def resolve(name: str) -> None:
        if name not in symbols:
            try:
                symbols[name] = symbol_from_text(name)
            except ValueError as exc:
                raise ConfigError(f"unknown generator G[{name}]: {exc}") from None

    rels = []
    for text in read_relations(args.relation_file):
        try:
            rels.append((text, parse_ncpoly(text, resolve)))
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(f"cannot parse relation {text!r}: {exc}") from None
    mats = {name: matrix_of_symbol(inst, g, trunc) for name, g in symbols.items()}
    out = []
    for text, rel in rels:
        if rel.is_zero():
            out.append({"relation": text, "verdict": "zero polynomial"})
            continue
        res = check_relation(rel, mats) if mats else None
        out.append(
            {
                "relation": text,
                "parsed": str(rel),
                "verdict": res.details["verdict"] if res else "no generators",
                "witness": {k: v for k, v in res.details.items() if k != "verdict"} if res else {},
                "class": classify_relation(rel),
                "degree": max(rel.degrees()),
                "classical_part": str(associated_classical(rel)),
                "hbar_sqrt": str(cfg.hbar_sqrt),
                "deformed": str(hbar_deform(rel, cfg.hbar_sqrt)),
            }
        )
    _emit(_dump({"config": cfg.to_json(), "relations": out}), args.output)
    return EXIT_OK


def cmd_info(cfg: RunConfig, args: argparse.Namespace) -> int:
    inst = cfg.instance()
    basis = inst.p_basis(cfg.trunc)
    data = {
        "version": __version__,
        "config": cfg.to_json(),
        "instance": inst.name,
        "basis_size": len(basis),
        "basis": [i.to_json() for i in basis],
        "suites": [*SUITES, "all"],
    }
    _emit(_dump(data), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", default="symbolic", help='rational value "p/r" or "symbolic" (default)')
    common.add_argument("--weight", default="one", help='"one" or a table file with lines "k d num/den"')
    common.add_argument("--trunc", type=int, default=5, help="maximal total degree r+s (default 5)")
    common.add_argument("--subspace", choices=("P", "Pprime"), default="P")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--hbar-sqrt", default="1", help="exact rational square root of hbar (default 1)")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="cotoeplitz", description="Exact co-Toeplitz quantization on SU_q(2).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", parents=[common], help="emit the matrix of C_g or C_lambda")
    p.add_argument("--symbol", help='word over aAcC (uppercase = star) or "k,l,m"')
    p.add_argument("--cosymbol", help='"counit" or a JSON co-symbol file')
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=f"one of: {', '.join([*SUITES, 'all'])}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("relations", parents=[common], help="check and classify relations")
    p.add_argument("relation_file")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("info", parents=[common], help="show configuration and basis")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        return args.func(cfg, args)
    except ConfigError as exc:
        print(f"cotoeplitz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"cotoeplitz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
