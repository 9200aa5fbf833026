"""Candidate blend generation, scoring, and the pool of best blends.

Two input transitions are blended by cross-combining their from/to roots
and types, giving up to sixteen candidate transitions per pair.  Every
candidate is scored against both input transitions (each in its own
idiom's tonic frame) and the best-scoring distinct transitions across all
input pairs form the pool.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arguments import ArgumentSet, ScoredBlend, preference_key, score_blend, association
from .chords import Chord, ChordTransition, FeatureVector, extract_features
from .errors import NoTransitionsError
from .idioms import Idiom

DEFAULT_POOL_CAPACITY = 100

INPUT1 = "input1"
INPUT2 = "input2"
BOTH = "both"


@dataclass(frozen=True)
class Provenance:
    """Which input supplied each component of a blended transition."""

    from_root: str
    from_type: str
    to_root: str
    to_type: str

    def swapped(self) -> "Provenance":
        flip = {INPUT1: INPUT2, INPUT2: INPUT1, BOTH: BOTH}
        return Provenance(flip[self.from_root], flip[self.from_type],
                          flip[self.to_root], flip[self.to_type])

    def to_jsonable(self) -> dict:
        return {"from_root": self.from_root, "from_type": self.from_type,
                "to_root": self.to_root, "to_type": self.to_type}


@dataclass(frozen=True)
class BlendCandidate:
    """A scored blended transition with its input ancestry."""

    transition: ChordTransition
    provenance: Provenance
    features_vs_input1: FeatureVector
    features_vs_input2: FeatureVector
    score: ScoredBlend

    def sort_key(self) -> tuple:
        return preference_key(self.score, str(self.transition))


def _component_tag(value, value1, value2) -> str:
    if value1 == value2:
        return BOTH
    return INPUT1 if value == value1 else INPUT2


def generate_candidates_with_provenance(
        t1: ChordTransition, t2: ChordTransition
) -> list[tuple[ChordTransition, Provenance]]:
    """Cross-combine the two inputs' from/to roots and types.

    Deduplicated, diagonal candidates removed; both inputs always appear
    (they are the identity combinations).  Enumeration order is fixed so
    downstream processing is deterministic.
    """
    from_roots = (t1.from_chord.root, t2.from_chord.root)
    from_types = (t1.from_chord.chord_type, t2.from_chord.chord_type)
    to_roots = (t1.to_chord.root, t2.to_chord.root)
    to_types = (t1.to_chord.chord_type, t2.to_chord.chord_type)
    seen: set[ChordTransition] = set()
    out: list[tuple[ChordTransition, Provenance]] = []
    for fr in from_roots:
        for ft in from_types:
            from_chord = Chord(fr, ft)
            for tr in to_roots:
                for tt in to_types:
                    to_chord = Chord(tr, tt)
                    if from_chord == to_chord:
                        continue
                    transition = ChordTransition(from_chord, to_chord)
                    if transition in seen:
                        continue
                    seen.add(transition)
                    out.append((transition, Provenance(
                        _component_tag(fr, from_roots[0], from_roots[1]),
                        _component_tag(ft, from_types[0], from_types[1]),
                        _component_tag(tr, to_roots[0], to_roots[1]),
                        _component_tag(tt, to_types[0], to_types[1]))))
    return out


def generate_candidates(t1: ChordTransition, t2: ChordTransition) -> list[ChordTransition]:
    return [t for t, _ in generate_candidates_with_provenance(t1, t2)]


def score_candidate(transition: ChordTransition,
                    t1: ChordTransition, tonic1: int,
                    t2: ChordTransition, tonic2: int,
                    arguments: ArgumentSet,
                    provenance: Provenance | None = None) -> BlendCandidate:
    """Score one candidate against both inputs, each in its own tonic frame."""
    blend_fv1 = extract_features(transition, tonic1)
    blend_fv2 = extract_features(transition, tonic2)
    assoc1 = association(blend_fv1, extract_features(t1, tonic1), arguments)
    assoc2 = association(blend_fv2, extract_features(t2, tonic2), arguments)
    if provenance is None:
        provenance = Provenance(BOTH, BOTH, BOTH, BOTH)
    return BlendCandidate(transition=transition, provenance=provenance,
                          features_vs_input1=blend_fv1, features_vs_input2=blend_fv2,
                          score=score_blend(assoc1, assoc2))


@dataclass(frozen=True)
class BlendPool:
    """The top blends across all input pairs, best first, transitions distinct."""

    capacity: int
    entries: tuple[BlendCandidate, ...]

    def __post_init__(self):
        if self.capacity < 1:
            raise ValueError("pool capacity must be at least 1")
        if len(self.entries) > self.capacity:
            raise ValueError("pool holds more entries than its capacity")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def transitions(self) -> list[ChordTransition]:
        return [e.transition for e in self.entries]


def _derivation_key(candidate: BlendCandidate,
                    u: ChordTransition, v: ChordTransition) -> tuple:
    # Total order over derivations of the same transition.  The first
    # three components match the preference order; the unordered source
    # pair keeps the choice invariant under swapping the two idioms.
    pair = (str(u), str(v))
    return (-candidate.score.rate, -candidate.score.total_assoc,
            candidate.score.asym, tuple(sorted(pair)), pair)


def blend_idioms(idiom1: Idiom, idiom2: Idiom, arguments: ArgumentSet,
                 capacity: int = DEFAULT_POOL_CAPACITY) -> BlendPool:
    """Blend every transition of idiom 1 with every transition of idiom 2.

    Candidates are deduplicated across input pairs keeping the
    best-scoring derivation, then ranked by preference; the top
    ``capacity`` entries form the pool.
    """
    if capacity < 1:
        raise ValueError("pool capacity must be at least 1")
    transitions1 = [t for t, _ in idiom1.transitions()]
    transitions2 = [t for t, _ in idiom2.transitions()]
    if not transitions1:
        raise NoTransitionsError(f"idiom {idiom1.name!r} has no transitions")
    if not transitions2:
        raise NoTransitionsError(f"idiom {idiom2.name!r} has no transitions")
    best: dict[ChordTransition, tuple[tuple, BlendCandidate]] = {}
    for u in transitions1:
        for v in transitions2:
            for transition, provenance in generate_candidates_with_provenance(u, v):
                candidate = score_candidate(transition, u, idiom1.tonic,
                                            v, idiom2.tonic, arguments, provenance)
                key = _derivation_key(candidate, u, v)
                kept = best.get(transition)
                if kept is None or key < kept[0]:
                    best[transition] = (key, candidate)
    ranked = sorted((c for _, c in best.values()), key=BlendCandidate.sort_key)
    return BlendPool(capacity=capacity, entries=tuple(ranked[:capacity]))


def pool_to_jsonable(pool: BlendPool) -> list[dict]:
    return [{
        "transition": str(e.transition),
        "assoc1": e.score.assoc1,
        "assoc2": e.score.assoc2,
        "total_assoc": e.score.total_assoc,
        "asym": e.score.asym,
        "signed_asym": e.score.signed_asym,
        "rate": e.score.rate,
        "provenance": e.provenance.to_jsonable(),
    } for e in pool.entries]
