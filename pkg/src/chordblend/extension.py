"""The extended transition matrix joining two idioms through blends.

Cells are classified into nine sectors by chord membership: the two
original blocks (I1, I2), direct jumps between the idioms (A12, A21),
motions to and from chords external to both idioms (B1X, BX1, B2X, BX2),
and transitions between two external chords (C), which are never given
probability mass.  Pool entries price new transitions proportionally to
their rate: each affected row cedes ``bridge_mass`` of its probability to
its blend cells, and rows made purely of blend cells distribute full mass.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .blending import BlendPool
from .chords import Chord, ChordTransition
from .errors import EmptyPoolError, InvalidBridgeMassError, SchemaError
from .idioms import Idiom, ROW_SUM_TOL, TransitionMatrix, matrix_csv

EXTENDED_SCHEMA_VERSION = "em/1"

DIRECTION_1TO2 = "1to2"
DIRECTION_2TO1 = "2to1"

DEFAULT_BRIDGE_MASS = 0.2


class Sector(str, enum.Enum):
    I1 = "I1"
    I2 = "I2"
    A12 = "A12"
    A21 = "A21"
    B1X = "B1X"
    BX1 = "BX1"
    B2X = "B2X"
    BX2 = "BX2"
    C = "C"


def _classify(from_chord: Chord, to_chord: Chord,
              set1: frozenset[Chord], set2: frozenset[Chord]) -> Sector:
    from1, from2 = from_chord in set1, from_chord in set2
    to1, to2 = to_chord in set1, to_chord in set2
    if from1 and to1:
        return Sector.I1
    if from2 and to2:
        return Sector.I2
    if from1 and to2:
        return Sector.A12
    if from2 and to1:
        return Sector.A21
    # At least one endpoint is external to both idioms; shared-membership
    # endpoints resolve to the idiom-1 tag.
    if from1:
        return Sector.B1X
    if from2:
        return Sector.B2X
    if to1:
        return Sector.BX1
    if to2:
        return Sector.BX2
    return Sector.C


def classify_sector(transition: ChordTransition,
                    set1: frozenset[Chord], set2: frozenset[Chord]) -> Sector:
    """Sector of a transition given the two idioms' chord inventories."""
    return _classify(transition.from_chord, transition.to_chord, set1, set2)


@dataclass(frozen=True)
class CellOrigin:
    """Where a nonzero cell's probability comes from.

    ``kind`` is idiom1 / idiom2 / both / blend; blend cells carry the rate
    that priced them.
    """

    kind: str
    rate: float | None = None

    def to_jsonable(self) -> dict:
        if self.kind == "blend":
            return {"kind": "blend", "rate": self.rate}
        return {"kind": self.kind}


@dataclass(frozen=True)
class ExtendedMatrix:
    """Sectored matrix over idiom-1 chords, idiom-2-only chords, new chords."""

    chords: tuple[Chord, ...]
    matrix: TransitionMatrix
    sector_map: tuple[tuple[Sector, ...], ...]
    origin_map: tuple[tuple[CellOrigin | None, ...], ...]
    idiom1_chords: tuple[Chord, ...]
    idiom2_chords: tuple[Chord, ...]

    def index_of(self, chord: Chord) -> int:
        return self.chords.index(chord)

    def external_indices(self) -> list[int]:
        known = set(self.idiom1_chords) | set(self.idiom2_chords)
        return [i for i, c in enumerate(self.chords) if c not in known]


@dataclass(frozen=True)
class BridgePath:
    """A one-hop (A sector) or two-hop (through one external chord) route."""

    kind: str  # "direct" | "chained"
    from_chord: Chord
    to_chord: Chord
    intermediate: Chord | None
    combined_rate: float

    def to_jsonable(self) -> dict:
        return {
            "kind": self.kind,
            "from": str(self.from_chord),
            "intermediate": None if self.intermediate is None else str(self.intermediate),
            "to": str(self.to_chord),
            "combined_rate": self.combined_rate,
        }


def build_extended(idiom1: Idiom, idiom2: Idiom, pool: BlendPool,
                   bridge_mass: float = DEFAULT_BRIDGE_MASS) -> ExtendedMatrix:
    """Assemble the extended matrix from two idioms and a blend pool.

    C-sector and zero-rate pool entries are discarded (they would carry no
    probability).  In every row that gains blend cells the original
    entries are scaled by (1 - bridge_mass) and the blends share
    bridge_mass proportionally to rate; rows consisting solely of blend
    cells share the full mass.
    """
    if not 0.0 < bridge_mass < 1.0:
        raise InvalidBridgeMassError(
            f"bridge mass must lie strictly between 0 and 1, got {bridge_mass}")
    set1, set2 = idiom1.chord_set(), idiom2.chord_set()
    chords: list[Chord] = list(idiom1.chords) + [c for c in idiom2.chords if c not in set1]
    index = {c: i for i, c in enumerate(chords)}

    insertable = []
    for entry in pool.entries:
        transition = entry.transition
        if classify_sector(transition, set1, set2) is Sector.C:
            continue
        if entry.score.rate == 0.0:
            continue
        insertable.append(entry)
        for chord in (transition.from_chord, transition.to_chord):
            if chord not in index:
                index[chord] = len(chords)
                chords.append(chord)
    if not insertable:
        raise EmptyPoolError("no pool entry survives sector and rate filtering")

    n = len(chords)
    probs = np.zeros((n, n))
    sources: dict[tuple[int, int], set[int]] = {}
    for source_id, idiom in ((1, idiom1), (2, idiom2)):
        for transition, p in idiom.transitions():
            cell = (index[transition.from_chord], index[transition.to_chord])
            probs[cell] += p
            sources.setdefault(cell, set()).add(source_id)
    # Rows fed by both idioms can sum above one; renormalize those only, so
    # disjoint idioms keep their original probabilities bit-exactly.
    for i in range(n):
        total = probs[i].sum()
        if total > 0.0 and abs(total - 1.0) > ROW_SUM_TOL:
            probs[i] /= total

    blend_cells: dict[tuple[int, int], float] = {}
    coinciding: set[tuple[int, int]] = set()
    for entry in insertable:
        cell = (index[entry.transition.from_chord], index[entry.transition.to_chord])
        if probs[cell] > 0.0:
            coinciding.add(cell)
        else:
            blend_cells[cell] = entry.score.rate

    rows_with_blends: dict[int, list[tuple[int, float]]] = {}
    for (i, j), r in blend_cells.items():
        rows_with_blends.setdefault(i, []).append((j, r))
    for i, cells in rows_with_blends.items():
        rate_sum = sum(r for _, r in cells)
        if probs[i].sum() > 0.0:
            probs[i] *= 1.0 - bridge_mass
            for j, r in cells:
                probs[i, j] = bridge_mass * r / rate_sum
        else:
            for j, r in cells:
                probs[i, j] = r / rate_sum

    sector_map = tuple(
        tuple(_classify(chords[i], chords[j], set1, set2) for j in range(n))
        for i in range(n))
    origin_rows = []
    for i in range(n):
        row: list[CellOrigin | None] = []
        for j in range(n):
            cell = (i, j)
            if cell in blend_cells:
                row.append(CellOrigin("blend", blend_cells[cell]))
            elif cell in coinciding:
                row.append(CellOrigin("both"))
            elif cell in sources:
                ids = sources[cell]
                row.append(CellOrigin("both" if len(ids) == 2
                                      else f"idiom{next(iter(ids))}"))
            else:
                row.append(None)
        origin_rows.append(tuple(row))

    return ExtendedMatrix(
        chords=tuple(chords),
        matrix=TransitionMatrix(probs),
        sector_map=sector_map,
        origin_map=tuple(origin_rows),
        idiom1_chords=idiom1.chords,
        idiom2_chords=idiom2.chords,
    )


def _cell_rate(em: ExtendedMatrix, i: int, j: int) -> float:
    origin = em.origin_map[i][j]
    if origin is None or origin.kind != "blend":
        raise ValueError(f"cell ({i}, {j}) carries no blend rate")
    return origin.rate


def bridge_paths(em: ExtendedMatrix, direction: str = DIRECTION_1TO2) -> list[BridgePath]:
    """All routes from one idiom's chords to the other's.

    Direct paths are the nonzero A-sector cells; chained paths pass
    through exactly one external chord (a B cell into it, a B cell out of
    it).  Enumeration goes by inventory membership, so a chord shared by
    both idioms can start or end paths in either direction.  A chain's
    combined rate is the product of its two hops' rates.  Sorted by
    combined rate descending, then by chord labels.
    """
    set1 = frozenset(em.idiom1_chords)
    set2 = frozenset(em.idiom2_chords)
    if direction == DIRECTION_1TO2:
        src, dst = set1, set2
    elif direction == DIRECTION_2TO1:
        src, dst = set2, set1
    else:
        raise ValueError(f"direction must be {DIRECTION_1TO2!r} or {DIRECTION_2TO1!r}")
    n = len(em.chords)
    probs = em.matrix.probs
    paths = []
    for i in range(n):
        for j in range(n):
            if probs[i, j] <= 0.0:
                continue
            a, b = em.chords[i], em.chords[j]
            if a in src and b in dst and a not in dst and b not in src:
                paths.append(BridgePath("direct", a, b, None, _cell_rate(em, i, j)))
    for x in em.external_indices():
        into = [i for i in range(n) if probs[i, x] > 0.0 and em.chords[i] in src]
        out = [j for j in range(n) if probs[x, j] > 0.0 and em.chords[j] in dst]
        for i in into:
            rate_in = _cell_rate(em, i, x)
            for j in out:
                paths.append(BridgePath("chained", em.chords[i], em.chords[j],
                                        em.chords[x], rate_in * _cell_rate(em, x, j)))
    paths.sort(key=lambda p: (-p.combined_rate, str(p.from_chord),
                              "" if p.intermediate is None else str(p.intermediate),
                              str(p.to_chord)))
    return paths


# ---------------------------------------------------------------------------
# Exports
# ---------------------------------------------------------------------------

def extended_matrix_csv(em: ExtendedMatrix) -> str:
    return matrix_csv(em.chords, [[float(p) for p in row] for row in em.matrix.probs])


def extended_sector_csv(em: ExtendedMatrix) -> str:
    return matrix_csv(em.chords, [[tag.value for tag in row] for row in em.sector_map])


def bridge_paths_to_jsonable(em: ExtendedMatrix) -> dict:
    return {
        "i1_to_i2": [p.to_jsonable() for p in bridge_paths(em, DIRECTION_1TO2)],
        "i2_to_i1": [p.to_jsonable() for p in bridge_paths(em, DIRECTION_2TO1)],
    }


def extended_to_jsonable(em: ExtendedMatrix) -> dict:
    return {
        "version": EXTENDED_SCHEMA_VERSION,
        "chords": [str(c) for c in em.chords],
        "idiom1_chords": [str(c) for c in em.idiom1_chords],
        "idiom2_chords": [str(c) for c in em.idiom2_chords],
        "matrix": em.matrix.to_lists(),
        "sector_map": [[tag.value for tag in row] for row in em.sector_map],
        "origin_map": [[None if o is None else o.to_jsonable() for o in row]
                       for row in em.origin_map],
        "bridge_paths": bridge_paths_to_jsonable(em),
    }


def load_extended(doc: Mapping) -> ExtendedMatrix:
    """Rebuild an extended matrix from its JSON form; SchemaError on defects."""
    if not isinstance(doc, Mapping):
        raise SchemaError("extended matrix document must be an object", path="")
    if doc.get("version") != EXTENDED_SCHEMA_VERSION:
        raise SchemaError(f"expected version {EXTENDED_SCHEMA_VERSION!r}", path="/version")

    def parse_chords(key: str) -> tuple[Chord, ...]:
        value = doc.get(key)
        if not isinstance(value, list) or not value:
            raise SchemaError("expected a non-empty list of chord strings", path=f"/{key}")
        out = []
        for i, text in enumerate(value):
            try:
                out.append(Chord.parse(text))
            except Exception as exc:
                raise SchemaError(str(exc), path=f"/{key}/{i}") from None
        return tuple(out)

    chords = parse_chords("chords")
    idiom1_chords = parse_chords("idiom1_chords")
    idiom2_chords = parse_chords("idiom2_chords")
    n = len(chords)
    try:
        matrix = TransitionMatrix(doc.get("matrix"))
    except Exception as exc:
        raise SchemaError(str(exc), path="/matrix") from None
    if matrix.n != n:
        raise SchemaError(f"matrix size {matrix.n} does not match {n} chords", path="/matrix")

    raw_sectors = doc.get("sector_map")
    if not isinstance(raw_sectors, list) or len(raw_sectors) != n:
        raise SchemaError(f"expected {n} sector rows", path="/sector_map")
    sector_rows = []
    for i, row in enumerate(raw_sectors):
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError(f"expected {n} sector columns", path=f"/sector_map/{i}")
        try:
            sector_rows.append(tuple(Sector(tag) for tag in row))
        except ValueError as exc:
            raise SchemaError(str(exc), path=f"/sector_map/{i}") from None

    raw_origins = doc.get("origin_map")
    if not isinstance(raw_origins, list) or len(raw_origins) != n:
        raise SchemaError(f"expected {n} origin rows", path="/origin_map")
    origin_rows = []
    for i, row in enumerate(raw_origins):
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError(f"expected {n} origin columns", path=f"/origin_map/{i}")
        cells: list[CellOrigin | None] = []
        for j, cell in enumerate(row):
            if cell is None:
                cells.append(None)
                continue
            if not isinstance(cell, Mapping) or "kind" not in cell:
                raise SchemaError("origin cell must be null or {kind, ...}",
                                  path=f"/origin_map/{i}/{j}")
            kind = cell["kind"]
            if kind == "blend":
                rate_value = cell.get("rate")
                if not isinstance(rate_value, (int, float)) or isinstance(rate_value, bool):
                    raise SchemaError("blend origin needs a numeric rate",
                                      path=f"/origin_map/{i}/{j}/rate")
                cells.append(CellOrigin("blend", float(rate_value)))
            elif kind in ("idiom1", "idiom2", "both"):
                cells.append(CellOrigin(kind))
            else:
                raise SchemaError(f"unknown origin kind {kind!r}",
                                  path=f"/origin_map/{i}/{j}/kind")
        origin_rows.append(tuple(cells))

    return ExtendedMatrix(chords=chords, matrix=matrix,
                          sector_map=tuple(sector_rows),
                          origin_map=tuple(origin_rows),
                          idiom1_chords=idiom1_chords,
                          idiom2_chords=idiom2_chords)
