import type { Answers, BlendResponse, QuestionId } from "./types.js"

export const QUESTION_IDS: QuestionId[] = [
  "Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8", "Q9",
]

export const QUESTION_TEXTS: Record<QuestionId, string> = {
  Q1: "Are roots and types of chords important?",
  Q2: "Are individual pitch classes of chords important?",
  Q3: "Are repeating pitch classes in transitions important?",
  Q4: "Are semitone steps in transitions important?",
  Q5: "Are tone steps in transitions important?",
  Q6: "Are the intervalic contents of transitions important?",
  Q7: "Are semitone motions to the tonic important?",
  Q8: "Are semitones to the second chord's root important?",
  Q9: "Are motions of the chord roots by 5th important?",
}

export interface UiState {
  idiom1: string
  idiom2: string
  answers: Answers
  capacity: number
  bridgeMass: number
  current: BlendResponse | null
  previous: BlendResponse | null
  progression: string[] | null
}

export function initialState(): UiState {
  const answers = Object.fromEntries(
    QUESTION_IDS.map((q) => [q, true]),
  ) as Answers
  return {
    idiom1: "",
    idiom2: "",
    answers,
    capacity: 100,
    bridgeMass: 0.2,
    current: null,
    previous: null,
    progression: null,
  }
}

/** The exact nine-key wire object; toggles map 1:1 onto it. */
export function answersPayload(state: UiState): Answers {
  return Object.fromEntries(
    QUESTION_IDS.map((q) => [q, state.answers[q]]),
  ) as Answers
}

export function toggleQuestion(state: UiState, question: QuestionId): void {
  state.answers[question] = !state.answers[question]
}
