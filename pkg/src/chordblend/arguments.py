"""User arguments over transition features and the blend scoring pipeline.

A user steers blending by answering nine yes/no questions; each selected
question becomes an argument bound to a fixed subset of transition features.
Scoring then proceeds val -> association -> asymmetry -> rate, and blends
are ranked by rate with a deterministic tie-break chain.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .chords import DicVector, FeatureVector
from .errors import NoArgumentsError, SchemaError


class Question(enum.Enum):
    Q1 = "Are roots and types of chords important?"
    Q2 = "Are individual pitch classes of chords important?"
    Q3 = "Are repeating pitch classes in transitions important?"
    Q4 = "Are semitone steps in transitions important?"
    Q5 = "Are tone steps in transitions important?"
    Q6 = "Are the intervalic contents of transitions important?"
    Q7 = "Are semitone motions to the tonic important?"
    Q8 = "Are semitones to the second chord's root important?"
    Q9 = "Are motions of the chord roots by 5th important?"

    @property
    def text(self) -> str:
        return self.value


# Feature subset each question abstracts, in fixed summation order.
PSI: dict[Question, tuple[str, ...]] = {
    Question.Q1: ("from_root", "to_root", "from_type", "to_type"),
    Question.Q2: ("from_rel_pcs", "to_rel_pcs"),
    Question.Q3: ("dic_has_0",),
    Question.Q4: ("dic_has_1", "dic_has_minus_1"),
    Question.Q5: ("dic_has_2", "dic_has_minus_2"),
    Question.Q6: ("dic",),
    Question.Q7: ("asc_sem_to_tonic", "desc_sem_to_tonic", "sem_to_tonic"),
    Question.Q8: ("asc_sem_to_next_root", "desc_sem_to_next_root", "sem_to_next_root"),
    Question.Q9: ("fifth_root_relation",),
}


@dataclass(frozen=True, order=True)
class Argument:
    """One selected question; its feature subset is fixed by the question."""

    question: Question

    @property
    def features(self) -> tuple[str, ...]:
        return PSI[self.question]


def psi(argument: Argument) -> tuple[str, ...]:
    """The fixed feature subset an argument abstracts."""
    return argument.features


@dataclass(frozen=True)
class ArgumentSet:
    """Non-empty set of arguments with distinct questions, at most nine."""

    arguments: tuple[Argument, ...]

    def __post_init__(self):
        questions = [a.question for a in self.arguments]
        if not questions:
            raise NoArgumentsError("at least one argument is required for scoring")
        if len(set(questions)) != len(questions):
            raise ValueError("argument questions must be distinct")
        ordered = tuple(sorted(self.arguments, key=lambda a: a.question.name))
        object.__setattr__(self, "arguments", ordered)

    @classmethod
    def from_questions(cls, questions: Iterable[Question | str]) -> "ArgumentSet":
        members = []
        for q in questions:
            if isinstance(q, str):
                name = q.strip().upper()
                if name not in Question.__members__:
                    raise SchemaError(f"unknown question {q!r}", path="/questions")
                q = Question[name]
            members.append(Argument(q))
        return cls(tuple(members))

    @classmethod
    def from_answers(cls, answers: Mapping[str, bool]) -> "ArgumentSet":
        """Build from the wire form {"Q1": bool, ..., "Q9": bool}.

        Missing questions count as false; unknown keys are rejected.
        """
        selected = []
        for key, value in answers.items():
            if key not in Question.__members__:
                raise SchemaError(f"unknown question key {key!r}", path=f"/answers/{key}")
            if not isinstance(value, bool):
                raise SchemaError("answer must be a boolean", path=f"/answers/{key}")
            if value:
                selected.append(key)
        return cls.from_questions(sorted(selected))

    @classmethod
    def all_questions(cls) -> "ArgumentSet":
        return cls(tuple(Argument(q) for q in Question))

    def answers(self) -> dict[str, bool]:
        chosen = {a.question for a in self.arguments}
        return {q.name: q in chosen for q in Question}

    def __iter__(self):
        return iter(self.arguments)

    def __len__(self):
        return len(self.arguments)


def _dic_correlation(x: DicVector, y: DicVector) -> float:
    # Integer accumulation keeps the result bit-reproducible across
    # implementations that evaluate the same closed form.
    n = 12
    sx = sum(x.counts)
    sy = sum(y.counts)
    sxx = sum(c * c for c in x.counts)
    syy = sum(c * c for c in y.counts)
    sxy = sum(a * b for a, b in zip(x.counts, y.counts))
    var_x = n * sxx - sx * sx
    var_y = n * syy - sy * sy
    if var_x == 0 or var_y == 0:
        return 1.0 if x.counts == y.counts else 0.0
    return (n * sxy - sx * sy) / math.sqrt(var_x * var_y)


def val(argument: Argument, blend: FeatureVector, reference: FeatureVector) -> float:
    """Agreement of a blend with a reference input under one argument.

    Q1 counts equal root/type fields (0..4); Q2 counts shared relative
    pitch classes; Q6 maps the correlation of the two DIC histograms from
    [-1, 1] onto [0, 1]; every other question scores each boolean feature
    with 1 - |difference|.
    """
    q = argument.question
    if q is Question.Q1:
        return float(
            int(reference.from_root == blend.from_root)
            + int(reference.to_root == blend.to_root)
            + int(reference.from_type == blend.from_type)
            + int(reference.to_type == blend.to_type))
    if q is Question.Q2:
        return float(
            len(reference.from_rel_pcs & blend.from_rel_pcs)
            + len(reference.to_rel_pcs & blend.to_rel_pcs))
    if q is Question.Q6:
        return (_dic_correlation(reference.dic, blend.dic) + 1.0) / 2.0
    total = 0.0
    for name in argument.features:
        total += 1.0 - abs(int(getattr(reference, name)) - int(getattr(blend, name)))
    return total


def association(blend: FeatureVector, reference: FeatureVector,
                arguments: ArgumentSet) -> float:
    """Sum of per-argument agreement values; the a(b, I) of the scoring chain."""
    return sum(val(a, blend, reference) for a in arguments)


def asymmetry(assoc1: float, assoc2: float) -> tuple[float, float]:
    """Imbalance of a blend's associations with the two inputs.

    Returns ``(asym, signed)``: asym in [0, 1] where 0 is perfect symmetry
    and 1 is association with only one input; signed carries the direction,
    negative when input 1 dominates.  The magnitude is clamped to 1.
    """
    if assoc1 < 0 or assoc2 < 0:
        raise ValueError("associations must be non-negative")
    if assoc1 == assoc2:
        return 0.0, 0.0
    first = (assoc1 * assoc1 + assoc1 * assoc2) / (assoc1 * assoc1 + assoc2)
    second = (assoc2 * assoc2 + assoc1 * assoc2) / (assoc2 * assoc2 + assoc1)
    magnitude = min(1.0, abs(first - second))
    return magnitude, -magnitude if assoc1 > assoc2 else magnitude


def rate(total_assoc: float, asym: float) -> float:
    """Harmonic-mean style aggregate of association and symmetry.

    High only when association and symmetry (1 - asym) are both high;
    0 when the denominator vanishes (no association, total asymmetry).
    """
    symmetry = 1.0 - asym
    denominator = total_assoc + symmetry
    if denominator == 0.0:
        return 0.0
    return (total_assoc * symmetry) / denominator


@dataclass(frozen=True)
class ScoredBlend:
    """The full score record of one blended transition."""

    assoc1: float
    assoc2: float
    total_assoc: float
    asym: float
    signed_asym: float
    rate: float


def score_blend(assoc1: float, assoc2: float) -> ScoredBlend:
    """Assemble the score record from the two input associations."""
    asym, signed = asymmetry(assoc1, assoc2)
    return ScoredBlend(
        assoc1=assoc1,
        assoc2=assoc2,
        total_assoc=assoc1 + assoc2,
        asym=asym,
        signed_asym=signed,
        rate=rate(assoc1 + assoc2, asym),
    )


def preference_key(score: ScoredBlend, transition_label: str) -> tuple:
    """Sort key realizing blend preference: best first under ascending sort.

    Rate decides; ties fall back to total association, then to the
    transition's canonical textual form, making any two blends comparable.
    """
    return (-score.rate, -score.total_assoc, transition_label)


def prefers(first: ScoredBlend, first_label: str,
            second: ScoredBlend, second_label: str) -> bool:
    """True when the first blend is (weakly) preferred to the second."""
    return preference_key(first, first_label) <= preference_key(second, second_label)
