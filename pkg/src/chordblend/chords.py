"""Pitch-class chords, chord transitions, and transition feature extraction.

A chord is a (root, type) pair: a root pitch class plus the ordered set of
intervals sounding above it, everything mod 12.  A transition is an ordered
pair of distinct chords.  ``extract_features`` turns a transition into the
feature vector used for blend evaluation: root/type/pitch-class content of
both chords, the directed interval class (DIC) histogram between their
pitch-class sets, and a group of boolean interval-change descriptors
(semitone motions toward the tonic and toward the next chord's root, fifth
root motion).

The textual chord form used for all I/O is ``"<root>:<i1>,<i2>,..."``,
e.g. ``"7:0,4,7,10"``; parse and format round-trip exactly.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache

from .errors import ChordParseError, SelfTransitionError

TRANSITION_ARROW = "→"

DIC_MIN = -5
DIC_MAX = 6


def check_pitch_class(value: int, what: str = "pitch class") -> int:
    """Validate and return an integer pitch class in [0, 11]."""
    try:
        value = operator.index(value)
    except TypeError:
        raise ValueError(f"{what} must be an integer, got {value!r}") from None
    if not 0 <= value <= 11:
        raise ValueError(f"{what} must be in [0, 11], got {value}")
    return value


@dataclass(frozen=True, order=True)
class Chord:
    """A root pitch class plus the intervals above it (always containing 0).

    ``chord_type`` is stored sorted ascending, so equal chords compare and
    hash equal regardless of the interval order they were built from.  The
    natural ordering (root, then type) is the canonical chord order used
    for matrix layouts.
    """

    root: int
    chord_type: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "root", check_pitch_class(self.root, "root"))
        intervals = tuple(sorted(check_pitch_class(t, "interval") for t in self.chord_type))
        if not intervals:
            raise ValueError("chord type must not be empty")
        if 0 not in intervals:
            raise ValueError(f"chord type must contain 0, got {intervals}")
        if len(set(intervals)) != len(intervals):
            raise ValueError(f"chord type must not repeat intervals, got {intervals}")
        object.__setattr__(self, "chord_type", intervals)

    @classmethod
    def parse(cls, text: str) -> "Chord":
        head, sep, tail = text.partition(":")
        if not sep:
            raise ChordParseError("expected '<root>:<i1>,<i2>,...'", symbol=text)
        try:
            root = int(head)
            intervals = tuple(int(part) for part in tail.split(","))
            return cls(root, intervals)
        except ChordParseError:
            raise
        except ValueError as exc:
            raise ChordParseError(str(exc), symbol=text) from None

    def __str__(self) -> str:
        return f"{self.root}:{','.join(str(t) for t in self.chord_type)}"

    def pitch_classes(self) -> frozenset[int]:
        """The absolute pitch-class set { (root + t) mod 12 }."""
        return frozenset((self.root + t) % 12 for t in self.chord_type)

    def transpose(self, semitones: int) -> "Chord":
        return Chord((self.root + semitones) % 12, self.chord_type)


@dataclass(frozen=True, order=True)
class ChordTransition:
    """An ordered pair of distinct chords, the atomic unit of blending."""

    from_chord: Chord
    to_chord: Chord

    def __post_init__(self):
        if self.from_chord == self.to_chord:
            raise SelfTransitionError(
                f"transition must connect two distinct chords, got {self.from_chord}")

    @classmethod
    def parse(cls, text: str) -> "ChordTransition":
        head, sep, tail = text.partition(TRANSITION_ARROW)
        if not sep:
            raise ChordParseError(
                f"expected '<chord>{TRANSITION_ARROW}<chord>'", symbol=text)
        return cls(Chord.parse(head), Chord.parse(tail))

    def __str__(self) -> str:
        return f"{self.from_chord}{TRANSITION_ARROW}{self.to_chord}"

    def transpose(self, semitones: int) -> "ChordTransition":
        return ChordTransition(self.from_chord.transpose(semitones),
                               self.to_chord.transpose(semitones))


def directed_interval_class(p: int, q: int) -> int:
    """Directed pitch-class interval from p to q folded into [-5, +6].

    The ascending tritone (+6) is its own inverse; every other interval d
    inverts to -d.
    """
    return (q - p + 5) % 12 - 5


@dataclass(frozen=True)
class DicVector:
    """Histogram of directed interval classes, bins -5..+6.

    ``counts[i]`` holds the count for interval class ``i - 5``; the bin sum
    equals |pcs(from)| * |pcs(to)| for the transition it was computed from.
    """

    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != 12 or any(c < 0 for c in self.counts):
            raise ValueError(f"DIC vector needs 12 non-negative bins, got {self.counts}")

    def count(self, d: int) -> int:
        if not DIC_MIN <= d <= DIC_MAX:
            raise ValueError(f"directed interval class must be in [-5, 6], got {d}")
        return self.counts[d - DIC_MIN]

    def has(self, d: int) -> bool:
        return self.count(d) > 0

    def total(self) -> int:
        return sum(self.counts)


def dic_vector(from_chord: Chord, to_chord: Chord) -> DicVector:
    """DIC histogram over all pitch-class pairs of the two chords."""
    counts = [0] * 12
    for p in from_chord.pitch_classes():
        for q in to_chord.pitch_classes():
            counts[directed_interval_class(p, q) - DIC_MIN] += 1
    return DicVector(tuple(counts))


@dataclass(frozen=True)
class FeatureVector:
    """All features describing one chord transition, relative to a tonic.

    Relative pitch classes are measured from the tonic passed at extraction
    time; the booleans are the agreement-ready form of the DIC content and
    of the semitone/fifth root-motion relations.
    """

    from_root: int
    to_root: int
    from_type: tuple[int, ...]
    to_type: tuple[int, ...]
    from_pcs: frozenset[int]
    to_pcs: frozenset[int]
    from_rel_pcs: frozenset[int]
    to_rel_pcs: frozenset[int]
    dic: DicVector
    dic_has_0: bool
    dic_has_1: bool
    dic_has_minus_1: bool
    dic_has_2: bool
    dic_has_minus_2: bool
    asc_sem_to_tonic: bool
    desc_sem_to_tonic: bool
    sem_to_tonic: bool
    asc_sem_to_next_root: bool
    desc_sem_to_next_root: bool
    sem_to_next_root: bool
    fifth_root_relation: bool


@lru_cache(maxsize=65536)
def extract_features(transition: ChordTransition, tonic: int) -> FeatureVector:
    """Populate the full feature vector of a transition.

    Boolean semantics:
      * asc_sem_to_tonic: the first chord contains relative pitch class 11
        (a semitone below the tonic); desc_sem_to_tonic: relative pc 1.
      * asc/desc_sem_to_next_root: some pitch class of the first chord lies
        a semitone below / above the second chord's root.
      * fifth_root_relation: the first chord's root is a perfect fifth
        above the second's, (from_root - to_root) mod 12 == 7.
    """
    tonic = check_pitch_class(tonic, "tonic")
    from_chord, to_chord = transition.from_chord, transition.to_chord
    from_pcs = from_chord.pitch_classes()
    to_pcs = to_chord.pitch_classes()
    from_rel = frozenset((p - tonic) % 12 for p in from_pcs)
    to_rel = frozenset((p - tonic) % 12 for p in to_pcs)
    dic = dic_vector(from_chord, to_chord)
    to_root = to_chord.root
    asc_sem_tonic = 11 in from_rel
    desc_sem_tonic = 1 in from_rel
    asc_sem_next = any((to_root - p) % 12 == 1 for p in from_pcs)
    desc_sem_next = any((p - to_root) % 12 == 1 for p in from_pcs)
    return FeatureVector(
        from_root=from_chord.root,
        to_root=to_root,
        from_type=from_chord.chord_type,
        to_type=to_chord.chord_type,
        from_pcs=from_pcs,
        to_pcs=to_pcs,
        from_rel_pcs=from_rel,
        to_rel_pcs=to_rel,
        dic=dic,
        dic_has_0=dic.has(0),
        dic_has_1=dic.has(1),
        dic_has_minus_1=dic.has(-1),
        dic_has_2=dic.has(2),
        dic_has_minus_2=dic.has(-2),
        asc_sem_to_tonic=asc_sem_tonic,
        desc_sem_to_tonic=desc_sem_tonic,
        sem_to_tonic=asc_sem_tonic or desc_sem_tonic,
        asc_sem_to_next_root=asc_sem_next,
        desc_sem_to_next_root=desc_sem_next,
        sem_to_next_root=asc_sem_next or desc_sem_next,
        fifth_root_relation=(from_chord.root - to_root) % 12 == 7,
    )
