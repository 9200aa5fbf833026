"""Idioms: chord inventories with first-order Markov transition matrices.

An idiom is trained from chord-symbol sequences (counting adjacent pairs,
never self-transitions) or assembled directly from a chord list plus
weighted transitions.  Matrices are row-stochastic with a forced-zero
diagonal; rows of absorbing chords may be entirely zero.
"""

from __future__ import annotations

import csv
import io
import json
import threading
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .chords import Chord, ChordTransition, check_pitch_class
from .errors import (ChordParseError, DuplicateIdiomError, EmptyCorpusError,
                     SchemaError, SelfTransitionError, UnknownIdiomError,
                     UnknownIndexError)

ROW_SUM_TOL = 1e-9


class TransitionMatrix:
    """Square matrix of transition probabilities with a zero diagonal.

    Every row either sums to one within ROW_SUM_TOL or is entirely zero.
    The backing array is frozen after validation.
    """

    def __init__(self, probs):
        arr = np.asarray(probs, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValueError(f"transition matrix must be square, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("transition matrix entries must be finite")
        if np.any(arr < 0.0) or np.any(arr > 1.0):
            raise ValueError("transition probabilities must lie in [0, 1]")
        if np.any(np.diag(arr) != 0.0):
            raise ValueError("diagonal entries must be exactly zero")
        sums = arr.sum(axis=1)
        zero_rows = np.all(arr == 0.0, axis=1)
        bad = ~zero_rows & (np.abs(sums - 1.0) > ROW_SUM_TOL)
        if np.any(bad):
            i = int(np.argmax(bad))
            raise ValueError(f"row {i} sums to {sums[i]!r}, expected 1 or all-zero")
        arr = arr.copy()
        arr.flags.writeable = False
        self._probs = arr

    @property
    def n(self) -> int:
        return self._probs.shape[0]

    @property
    def probs(self) -> np.ndarray:
        return self._probs

    def row(self, i: int) -> np.ndarray:
        return self._probs[i]

    def __getitem__(self, key) -> float:
        return float(self._probs[key])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return self._probs.shape == other._probs.shape and bool(
            np.array_equal(self._probs, other._probs))

    __hash__ = None

    def __repr__(self) -> str:
        return f"TransitionMatrix(n={self.n})"

    @classmethod
    def from_counts(cls, counts) -> "TransitionMatrix":
        """Row-normalize a non-negative count matrix; zero rows stay zero."""
        arr = np.asarray(counts, dtype=float)
        sums = arr.sum(axis=1, keepdims=True)
        with np.errstate(invalid="ignore", divide="ignore"):
            probs = np.where(sums > 0, arr / sums, 0.0)
        return cls(probs)

    def to_lists(self) -> list[list[float]]:
        return [[float(p) for p in row] for row in self._probs]


@dataclass(frozen=True)
class Idiom:
    """A named harmonic space: tonic, chord inventory, transition matrix."""

    name: str
    tonic: int
    chords: tuple[Chord, ...]
    matrix: TransitionMatrix

    def __post_init__(self):
        check_pitch_class(self.tonic, "tonic")
        if len(set(self.chords)) != len(self.chords):
            raise ValueError("idiom chords must be distinct")
        if self.matrix.n != len(self.chords):
            raise ValueError(
                f"matrix size {self.matrix.n} does not match {len(self.chords)} chords")

    def index_of(self, chord: Chord) -> int:
        try:
            return self.chords.index(chord)
        except ValueError:
            raise UnknownIndexError(f"chord {chord} is not in idiom {self.name!r}") from None

    def chord_set(self) -> frozenset[Chord]:
        return frozenset(self.chords)

    def transitions(self) -> list[tuple[ChordTransition, float]]:
        """All nonzero transitions in row-major matrix order."""
        out = []
        for i, from_chord in enumerate(self.chords):
            for j, to_chord in enumerate(self.chords):
                p = self.matrix[i, j]
                if p > 0.0:
                    out.append((ChordTransition(from_chord, to_chord), p))
        return out


def _as_chord(symbol, position=None) -> Chord:
    if isinstance(symbol, Chord):
        return symbol
    try:
        return Chord.parse(symbol)
    except ChordParseError as exc:
        if position is None:
            raise
        raise ChordParseError(exc.base_message, symbol=symbol, position=position) from None


def train_idiom(name: str, tonic: int, sequences: Sequence[Sequence]) -> Idiom:
    """Count adjacent chord pairs across sequences and row-normalize.

    Adjacent identical chords are skipped entirely (no count, no
    self-loop).  The inventory is every distinct chord observed, in
    canonical (root, type) order.  Raises EmptyCorpusError when no pair
    is counted at all, ChordParseError on a malformed symbol.
    """
    parsed: list[list[Chord]] = []
    for si, sequence in enumerate(sequences):
        parsed.append([_as_chord(symbol, position=(si, ci))
                       for ci, symbol in enumerate(sequence)])
    observed = sorted({c for seq in parsed for c in seq})
    index = {c: i for i, c in enumerate(observed)}
    counts = np.zeros((len(observed), len(observed)), dtype=float)
    counted = 0
    for seq in parsed:
        for a, b in zip(seq, seq[1:]):
            if a == b:
                continue
            counts[index[a], index[b]] += 1
            counted += 1
    if counted == 0:
        raise EmptyCorpusError("corpus contains no usable chord transitions")
    return Idiom(name=name, tonic=check_pitch_class(tonic, "tonic"),
                 chords=tuple(observed), matrix=TransitionMatrix.from_counts(counts))


def artificial_idiom(name: str, tonic: int, chords: Sequence,
                     transitions: Iterable[tuple[int, int, float]]) -> Idiom:
    """Build an idiom from an explicit chord list and weighted transitions.

    Chord order is preserved as given; weights are accumulated and each
    row renormalized to sum one (rows without transitions stay zero).
    """
    chord_list = tuple(_as_chord(c) for c in chords)
    n = len(chord_list)
    weights = np.zeros((n, n), dtype=float)
    for i, j, w in transitions:
        if not (0 <= i < n and 0 <= j < n):
            raise UnknownIndexError(f"transition index ({i}, {j}) out of range for {n} chords")
        if i == j:
            raise SelfTransitionError(f"self-transition ({i}, {i}) is not allowed")
        if w < 0:
            raise ValueError(f"transition weight must be non-negative, got {w}")
        weights[i, j] += w
    return Idiom(name=name, tonic=check_pitch_class(tonic, "tonic"),
                 chords=chord_list, matrix=TransitionMatrix.from_counts(weights))


def transpose_idiom(idiom: Idiom, semitones: int, name: str | None = None) -> Idiom:
    """The same harmonic space shifted by a number of semitones."""
    return Idiom(name=name if name is not None else f"{idiom.name}+{semitones % 12}",
                 tonic=(idiom.tonic + semitones) % 12,
                 chords=tuple(c.transpose(semitones) for c in idiom.chords),
                 matrix=idiom.matrix)


def c_major_preset() -> Idiom:
    """Three-chord C major space (C, F, G7) with uniform legal transitions."""
    chords = [Chord(0, (0, 4, 7)), Chord(5, (0, 4, 7)), Chord(7, (0, 4, 7, 10))]
    legal = [(i, j, 1.0) for i in range(3) for j in range(3) if i != j]
    return artificial_idiom("c-major-artificial", 0, chords, legal)


def fsharp_major_preset() -> Idiom:
    """The C major preset transposed a tritone up."""
    return transpose_idiom(c_major_preset(), 6, name="fsharp-major-artificial")


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------

def idiom_to_jsonable(idiom: Idiom) -> dict:
    return {
        "name": idiom.name,
        "tonic": idiom.tonic,
        "chords": [str(c) for c in idiom.chords],
        "matrix": idiom.matrix.to_lists(),
    }


def save_idiom(idiom: Idiom) -> dict:
    return idiom_to_jsonable(idiom)


def _require(doc: Mapping, key: str, kind, path: str):
    if key not in doc:
        raise SchemaError(f"missing required key {key!r}", path=path)
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise SchemaError(f"expected {kind.__name__}", path=f"{path}/{key}")
    return value


def load_idiom(doc: Mapping) -> Idiom:
    """Validate and rebuild an idiom document; SchemaError carries the path."""
    if not isinstance(doc, Mapping):
        raise SchemaError("idiom document must be an object", path="")
    name = _require(doc, "name", str, "")
    tonic = _require(doc, "tonic", int, "")
    if not 0 <= tonic <= 11:
        raise SchemaError("tonic must be in [0, 11]", path="/tonic")
    chord_strings = _require(doc, "chords", list, "")
    if not chord_strings:
        raise SchemaError("chord list must not be empty", path="/chords")
    chords = []
    for i, text in enumerate(chord_strings):
        if not isinstance(text, str):
            raise SchemaError("chord must be a string", path=f"/chords/{i}")
        try:
            chords.append(Chord.parse(text))
        except ChordParseError as exc:
            raise SchemaError(str(exc), path=f"/chords/{i}") from None
    if len(set(chords)) != len(chords):
        raise SchemaError("chords must be distinct", path="/chords")
    rows = _require(doc, "matrix", list, "")
    n = len(chords)
    if len(rows) != n:
        raise SchemaError(f"expected {n} rows", path="/matrix")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError(f"expected {n} columns", path=f"/matrix/{i}")
        for j, p in enumerate(row):
            if isinstance(p, bool) or not isinstance(p, (int, float)):
                raise SchemaError("probability must be a number", path=f"/matrix/{i}/{j}")
            if not 0.0 <= p <= 1.0:
                raise SchemaError(f"probability {p!r} outside [0, 1]", path=f"/matrix/{i}/{j}")
        if row[i] != 0:
            raise SchemaError("diagonal entry must be zero", path=f"/matrix/{i}/{i}")
        total = sum(row)
        if total != 0 and abs(total - 1.0) > ROW_SUM_TOL:
            raise SchemaError(f"row sums to {total!r}, expected 1 or all-zero",
                              path=f"/matrix/{i}")
    return Idiom(name=name, tonic=tonic, chords=tuple(chords),
                 matrix=TransitionMatrix(rows))


def corpus_from_jsonable(doc: Mapping) -> tuple[str | None, int, list[list[str]]]:
    """Validate a corpus document {tonic, sequences, [name]}."""
    if not isinstance(doc, Mapping):
        raise SchemaError("corpus document must be an object", path="")
    tonic = _require(doc, "tonic", int, "")
    if not 0 <= tonic <= 11:
        raise SchemaError("tonic must be in [0, 11]", path="/tonic")
    sequences = _require(doc, "sequences", list, "")
    for si, seq in enumerate(sequences):
        if not isinstance(seq, list):
            raise SchemaError("sequence must be a list", path=f"/sequences/{si}")
        for ci, symbol in enumerate(seq):
            if not isinstance(symbol, str):
                raise SchemaError("chord symbol must be a string",
                                  path=f"/sequences/{si}/{ci}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise SchemaError("name must be a string", path="/name")
    return name, tonic, sequences


def matrix_csv(chords: Sequence[Chord], cells: Sequence[Sequence]) -> str:
    """Header of chord strings, then one row per chord.

    Numeric cells are written with 6 decimal places; other cells verbatim.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([str(c) for c in chords])
    for row in cells:
        writer.writerow([f"{v:.6f}" if isinstance(v, float) else str(v) for v in row])
    return buf.getvalue()


def idiom_matrix_csv(idiom: Idiom) -> str:
    return matrix_csv(idiom.chords, [[float(p) for p in row] for row in idiom.matrix.probs])


def dump_idiom_json(idiom: Idiom) -> str:
    return json.dumps(idiom_to_jsonable(idiom), indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# Registry (used by the HTTP service)
# ---------------------------------------------------------------------------

@dataclass
class RegisteredIdiom:
    idiom: Idiom
    kind: str  # "preset" | "trained"


class IdiomRegistry:
    """Name-keyed idiom store; many concurrent readers, exclusive writes."""

    def __init__(self):
        self._lock = threading.RLock()
        self._entries: dict[str, RegisteredIdiom] = {}

    def register(self, idiom: Idiom, kind: str = "trained") -> None:
        with self._lock:
            if idiom.name in self._entries:
                raise DuplicateIdiomError(f"idiom {idiom.name!r} is already registered")
            self._entries[idiom.name] = RegisteredIdiom(idiom, kind)

    def get(self, name: str) -> Idiom:
        with self._lock:
            try:
                return self._entries[name].idiom
            except KeyError:
                raise UnknownIdiomError(f"unknown idiom {name!r}") from None

    def catalog(self) -> list[dict]:
        with self._lock:
            entries = sorted(self._entries.items())
        return [{"name": name, "tonic": e.idiom.tonic,
                 "chord_count": len(e.idiom.chords), "kind": e.kind}
                for name, e in entries]

    @classmethod
    def with_presets(cls) -> "IdiomRegistry":
        registry = cls()
        registry.register(c_major_preset(), kind="preset")
        registry.register(fsharp_major_preset(), kind="preset")
        return registry
