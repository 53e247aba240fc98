"""Command-line front end.

    symvol verify|norm|symmetrise --complex PATH --dim N
           [--class PATH | --generator K] [--cap N] [--out PATH]

Exit status: 0 success, 1 a verification check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

import yaml

from . import corpus
from .chain import Chain, chain_from_list, chain_to_list, format_fraction
from .checks import symmetrisation_checks
from .homology import NotACycleError, homology_generators
from .l1opt import DEFAULT_ENCODING, ENCODINGS, min_l1_in_class, min_l1_normalised, verify_equality
from .lp import LPError
from .scomplex import ComplexError, SimplicialComplex, load_complex
from .symm import DEFAULT_DIM_CAP, DimensionCapError, check_cap, symmetrise

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class JobConfig:
    command: str
    complex_path: str
    dim: int
    class_path: str | None = None
    generator: int | None = None
    cap: int = DEFAULT_DIM_CAP
    out: str | None = None
    encoding: str = DEFAULT_ENCODING


def _load_complex(source: str) -> SimplicialComplex:
    p = Path(source)
    if p.exists():
        return load_complex(p.read_text())
    if source in corpus.NAMES:
        return corpus.get(source)
    raise InputError(f"complex file {source!r} not found")


def _load_classes(cfg: JobConfig, K: SimplicialComplex) -> list[tuple[str, Chain]]:
    check_cap(cfg.dim, cfg.cap)
    if cfg.class_path is not None:
        p = Path(cfg.class_path)
        if not p.exists():
            raise InputError(f"class file {cfg.class_path!r} not found")
        try:
            items = yaml.safe_load(p.read_text())
        except yaml.YAMLError as exc:
            raise InputError(f"cannot parse class file: {exc}") from exc
        return [("class", chain_from_list(items if items is not None else [], cfg.dim, K))]
    gens = homology_generators(K, cfg.dim)
    if cfg.generator is not None:
        if not 0 <= cfg.generator < len(gens):
            raise InputError(
                f"generator {cfg.generator} requested but H_{cfg.dim} has {len(gens)} generator(s)"
            )
        return [(f"generator {cfg.generator}", gens[cfg.generator])]
    if not gens:
        return [("zero", Chain.zero(cfg.dim))]
    return [(f"generator {k}", g) for k, g in enumerate(gens)]


def _symmetrisation_checks(c: Chain, K: SimplicialComplex, cap: int) -> tuple[dict, dict]:
    checks = symmetrisation_checks(c, K, cap)
    s = symmetrise(c, cap)
    return checks, {"symmetrise_idempotent": symmetrise(s, cap) == s}


def _norm_entry(label: str, report) -> dict:
    return {
        "label": label,
        "representative": chain_to_list(report.class_representative),
        "seminorm": format_fraction(report.seminorm),
        "normalised_seminorm": format_fraction(report.normalised_seminorm),
        "optimal_chain": chain_to_list(report.optimal_chain),
        "optimal_normalised_chain": chain_to_list(report.optimal_normalised_chain),
    }


def _header(cfg: JobConfig, K: SimplicialComplex) -> dict:
    return {
        "command": cfg.command,
        "complex": K.name or cfg.complex_path,
        "dim": cfg.dim,
        "cap": cfg.cap,
        "encoding": cfg.encoding,
    }


def cmd_verify(cfg: JobConfig) -> tuple[int, dict]:
    K = _load_complex(cfg.complex_path)
    classes = _load_classes(cfg, K)
    doc = _header(cfg, K)
    entries, failed = [], []
    for label, c in classes:
        checks, info = _symmetrisation_checks(c, K, cfg.cap)
        report = verify_equality(c, K, cfg.encoding, cfg.cap, strict=False)
        checks.update(report.checks)
        entry = _norm_entry(label, report)
        entry["symmetrised_optimum"] = chain_to_list(report.symmetrised_optimum)
        entry["checks"] = checks
        entry["informational"] = info
        entries.append(entry)
        failed += [f"{label}: {name}" for name, ok in checks.items() if not ok]
    doc["classes"] = entries
    doc["status"] = "fail" if failed else "pass"
    doc["failed"] = failed
    return (EXIT_FAIL if failed else EXIT_OK), doc


def cmd_norm(cfg: JobConfig) -> tuple[int, dict]:
    K = _load_complex(cfg.complex_path)
    doc = _header(cfg, K)
    entries = []
    for label, c in _load_classes(cfg, K):
        value, z = min_l1_in_class(c, K, cfg.encoding, cfg.cap)
        nvalue, zn = min_l1_normalised(c, K, cfg.encoding, cfg.cap)
        entries.append({
            "label": label,
            "representative": chain_to_list(c),
            "seminorm": format_fraction(value),
            "normalised_seminorm": format_fraction(nvalue),
            "optimal_chain": chain_to_list(z),
            "optimal_normalised_chain": chain_to_list(zn),
        })
    doc["classes"] = entries
    return EXIT_OK, doc


def cmd_symmetrise(cfg: JobConfig) -> tuple[int, object]:
    if cfg.class_path is None:
        raise InputError("symmetrise needs an explicit chain via --class")
    K = _load_complex(cfg.complex_path)
    (_, c), = _load_classes(cfg, K)
    return EXIT_OK, chain_to_list(symmetrise(c, cfg.cap))


COMMANDS = {"verify": cmd_verify, "norm": cmd_norm, "symmetrise": cmd_symmetrise}


def dump(doc) -> str:
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=None, width=100)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symvol", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--complex", required=True, dest="complex_path",
                        help="complex document (JSON/YAML) or a bundled name: " + ", ".join(corpus.NAMES))
    parser.add_argument("--dim", required=True, type=int)
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--class", dest="class_path", help="chain file: list of {simplex, coeff}")
    group.add_argument("--generator", type=int, help="index of a homology generator")
    parser.add_argument("--cap", type=int, default=DEFAULT_DIM_CAP, help="dimension cap")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--encoding", choices=ENCODINGS, default=DEFAULT_ENCODING)
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def run(cfg: JobConfig) -> int:
    try:
        if cfg.dim < 0:
            raise InputError("--dim must be non-negative")
        status, doc = COMMANDS[cfg.command](cfg)
    except (InputError, ComplexError, DimensionCapError, NotACycleError, ValueError) as exc:
        print(f"symvol: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LPError as exc:
        print(f"symvol: LP failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = dump(doc)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    if status == EXIT_FAIL:
        print(f"symvol: verification failed: {doc['failed'][0]}", file=sys.stderr)
    return status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    cfg = JobConfig(
        command=args.command,
        complex_path=args.complex_path,
        dim=args.dim,
        class_path=args.class_path,
        generator=args.generator,
        cap=args.cap,
        out=args.out,
        encoding=args.encoding,
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
