// Conventional chord names for the textual form, e.g. "7:0,4,7,10" => "G7".

const ROOT_NAMES = ["C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"]

const TYPE_SUFFIXES: Record<string, string> = {
  "0,4,7": "",
  "0,3,7": "m",
  "0,4,7,10": "7",
  "0,3,7,10": "m7",
  "0,4,7,11": "maj7",
  "0,3,6": "dim",
  "0,3,6,9": "dim7",
  "0,3,6,10": "m7b5",
  "0,4,8": "aug",
  "0,2,7": "sus2",
  "0,5,7": "sus4",
}

export const TRANSITION_ARROW = "→"

/** Conventional name when derivable, otherwise the raw chord string. */
export function chordLabel(chord: string): string {
  const colon = chord.indexOf(":")
  if (colon < 0) return chord
  const root = Number(chord.slice(0, colon))
  if (!Number.isInteger(root) || root < 0 || root > 11) return chord
  const suffix = TYPE_SUFFIXES[chord.slice(colon + 1)]
  if (suffix === undefined) return chord
  return ROOT_NAMES[root] + suffix
}

export function transitionLabel(transition: string): string {
  const parts = transition.split(TRANSITION_ARROW)
  if (parts.length !== 2) return transition
  return `${chordLabel(parts[0])} ${TRANSITION_ARROW} ${chordLabel(parts[1])}`
}
