"""Batch front-end: train idioms, run blends, sample walks, export matrices.

Exit codes: 0 ok, 2 usage, 3 data error, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arguments import ArgumentSet
from .blending import DEFAULT_POOL_CAPACITY
from .chords import Chord
from .errors import ChordBlendError
from .extension import (DEFAULT_BRIDGE_MASS, extended_matrix_csv,
                        extended_sector_csv, load_extended)
from .idioms import (IdiomRegistry, corpus_from_jsonable, dump_idiom_json,
                     idiom_matrix_csv, load_idiom, train_idiom)
from .sampling import walk_chords
from .service import compute_blend_response

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_INTERNAL = 4


def _read_json(path: str):
    return json.loads(Path(path).read_text(encoding="utf-8"))


def _write_json(path: Path, doc) -> None:
    path.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n",
                    encoding="utf-8")


def _load_matrix_file(path: str):
    """An idiom or extended-matrix JSON file, sniffed by its version field."""
    doc = _read_json(path)
    if isinstance(doc, dict) and doc.get("version") == "em/1":
        em = load_extended(doc)
        return em.chords, em.matrix, em
    idiom = load_idiom(doc)
    return idiom.chords, idiom.matrix, None


def cmd_train(args) -> int:
    doc = _read_json(args.corpus)
    name, tonic, sequences = corpus_from_jsonable(doc)
    if name is None:
        name = Path(args.out).stem
    idiom = train_idiom(name, tonic, sequences)
    Path(args.out).write_text(dump_idiom_json(idiom), encoding="utf-8")
    print(f"trained idiom {idiom.name!r}: {len(idiom.chords)} chords -> {args.out}")
    return EXIT_OK


def _parse_answers(args) -> dict[str, bool]:
    if args.all_questions:
        return {f"Q{i}": True for i in range(1, 10)}
    answers = {f"Q{i}": False for i in range(1, 10)}
    for token in (args.questions or "").split(","):
        token = token.strip().upper()
        if not token:
            continue
        if token not in answers:
            raise ChordBlendError(f"unknown question {token!r}")
        answers[token] = True
    return answers


def cmd_blend(args) -> int:
    registry = IdiomRegistry()
    idiom1 = load_idiom(_read_json(args.idiom1))
    idiom2 = load_idiom(_read_json(args.idiom2))
    registry.register(idiom1)
    if idiom2.name == idiom1.name:
        idiom2_name = idiom2.name + "#2"
        registry.register(
            load_idiom({**_read_json(args.idiom2), "name": idiom2_name}))
    else:
        idiom2_name = idiom2.name
        registry.register(idiom2)
    answers = _parse_answers(args)
    ArgumentSet.from_answers(answers)  # fail fast on an all-false selection
    response = compute_blend_response(registry, idiom1.name, idiom2_name, answers,
                                      args.capacity, args.bridge_mass)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    _write_json(out_dir / "pool.json", response["pool"])
    _write_json(out_dir / "extended.json", response["extended"])
    _write_json(out_dir / "bridge_paths.json", response["extended"]["bridge_paths"])
    em = load_extended(response["extended"])
    (out_dir / "extended_matrix.csv").write_text(extended_matrix_csv(em), encoding="utf-8")
    (out_dir / "extended_sectors.csv").write_text(extended_sector_csv(em), encoding="utf-8")
    n_paths = (len(response["extended"]["bridge_paths"]["i1_to_i2"])
               + len(response["extended"]["bridge_paths"]["i2_to_i1"]))
    print(f"pool of {len(response['pool'])} blends, "
          f"{len(response['extended']['chords'])} chords, "
          f"{n_paths} bridge paths -> {out_dir}")
    return EXIT_OK


def cmd_sample(args) -> int:
    chords, matrix, _ = _load_matrix_file(args.matrix)
    start = Chord.parse(args.start)
    walk = walk_chords(chords, matrix, start, args.length, args.seed)
    print(json.dumps([str(c) for c in walk], ensure_ascii=False))
    return EXIT_OK


def cmd_export(args) -> int:
    chords, matrix, em = _load_matrix_file(args.input)
    if em is not None:
        Path(args.matrix_csv).write_text(extended_matrix_csv(em), encoding="utf-8")
        if args.sector_csv:
            Path(args.sector_csv).write_text(extended_sector_csv(em), encoding="utf-8")
    else:
        from .idioms import matrix_csv
        Path(args.matrix_csv).write_text(
            matrix_csv(chords, [[float(p) for p in row] for row in matrix.probs]),
            encoding="utf-8")
        if args.sector_csv:
            raise ChordBlendError("sector export requires an extended-matrix file")
    print(f"wrote {args.matrix_csv}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordblend",
        description="Blend the chord-transition spaces of two musical idioms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train an idiom from a corpus JSON file")
    p_train.add_argument("corpus", help="corpus JSON: {name?, tonic, sequences}")
    p_train.add_argument("-o", "--out", required=True, help="output idiom JSON path")
    p_train.set_defaults(func=cmd_train)

    p_blend = sub.add_parser("blend", help="blend two idiom files into a report directory")
    p_blend.add_argument("idiom1")
    p_blend.add_argument("idiom2")
    p_blend.add_argument("--questions", default="",
                         help="comma list of selected questions, e.g. q1,q3,q9")
    p_blend.add_argument("--all-questions", action="store_true")
    p_blend.add_argument("--capacity", type=int, default=DEFAULT_POOL_CAPACITY)
    p_blend.add_argument("--bridge-mass", type=float, default=DEFAULT_BRIDGE_MASS)
    p_blend.add_argument("-o", "--out-dir", required=True)
    p_blend.set_defaults(func=cmd_blend)

    p_sample = sub.add_parser("sample", help="sample a chord walk from a matrix file")
    p_sample.add_argument("matrix", help="idiom JSON or extended-matrix JSON")
    p_sample.add_argument("--start", required=True, help="start chord, e.g. 0:0,4,7")
    p_sample.add_argument("--length", type=int, default=16)
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.set_defaults(func=cmd_sample)

    p_export = sub.add_parser("export", help="export a matrix file to CSV")
    p_export.add_argument("input", help="idiom JSON or extended-matrix JSON")
    p_export.add_argument("--matrix-csv", required=True)
    p_export.add_argument("--sector-csv", default=None)
    p_export.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ChordBlendError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
