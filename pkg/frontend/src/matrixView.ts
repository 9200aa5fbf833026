import { TRANSITION_ARROW, chordLabel } from "./chordNames.js"
import type { BlendResponse, PoolEntry } from "./types.js"

// Every number shown here comes straight from the server response; the
// client never recomputes scores or probabilities.

function prevailingInput(signed: number): string {
  if (signed < 0) return "prevails: input 1"
  if (signed > 0) return "prevails: input 2"
  return "balanced"
}

function cellTooltip(probability: number, sector: string,
                     originKind: string | undefined,
                     entry: PoolEntry | undefined): string {
  const parts = [`p=${probability.toFixed(6)}`, `sector ${sector}`]
  if (originKind !== undefined) parts.push(`origin ${originKind}`)
  if (entry !== undefined) {
    parts.push(`rate=${entry.rate.toFixed(3)}`)
    parts.push(`assoc=${entry.assoc1.toFixed(3)}/${entry.assoc2.toFixed(3)}`)
    parts.push(prevailingInput(entry.signed_asym))
  }
  return parts.join(" | ")
}

export function hasBridges(result: BlendResponse): boolean {
  const paths = result.extended.bridge_paths
  return paths.i1_to_i2.length > 0 || paths.i2_to_i1.length > 0
}

/** Sector-colored grid of the extended matrix; cells carry full tooltips. */
export function renderMatrixView(container: HTMLElement,
                                 result: BlendResponse | null): void {
  container.textContent = ""
  if (result === null) {
    const empty = container.ownerDocument.createElement("p")
    empty.className = "placeholder"
    empty.textContent = "no blend yet"
    container.appendChild(empty)
    return
  }
  const doc = container.ownerDocument
  if (!hasBridges(result)) {
    const banner = doc.createElement("div")
    banner.className = "banner no-bridges"
    banner.textContent = "no bridges: the idioms are unconnected"
    container.appendChild(banner)
  }
  const { chords, matrix, sector_map, origin_map } = result.extended
  const poolByTransition = new Map<string, PoolEntry>(
    result.pool.map((entry) => [entry.transition, entry]))
  const table = doc.createElement("table")
  table.className = "matrix"
  const head = doc.createElement("tr")
  head.appendChild(doc.createElement("th"))
  for (const chord of chords) {
    const th = doc.createElement("th")
    th.textContent = chordLabel(chord)
    th.title = chord
    head.appendChild(th)
  }
  table.appendChild(head)
  chords.forEach((fromChord, i) => {
    const tr = doc.createElement("tr")
    const label = doc.createElement("th")
    label.textContent = chordLabel(fromChord)
    label.title = fromChord
    tr.appendChild(label)
    chords.forEach((toChord, j) => {
      const td = doc.createElement("td")
      const sector = sector_map[i][j]
      const origin = origin_map[i][j]
      const probability = matrix[i][j]
      td.className = `sector-${sector}` + (origin ? ` origin-${origin.kind}` : "")
      td.dataset.transition = `${fromChord}${TRANSITION_ARROW}${toChord}`
      if (probability > 0) {
        td.textContent = probability.toFixed(3)
        td.title = cellTooltip(probability, sector, origin?.kind,
                               poolByTransition.get(td.dataset.transition))
      } else {
        td.textContent = "·"
        td.classList.add("empty")
      }
      tr.appendChild(td)
    })
    table.appendChild(tr)
  })
  container.appendChild(table)
}

/** Highlight the cell of one transition (used by blend-table row clicks). */
export function highlightCell(container: HTMLElement, transition: string): void {
  for (const cell of Array.from(container.querySelectorAll("td.selected"))) {
    cell.classList.remove("selected")
  }
  const target = container.querySelector(
    `td[data-transition="${transition}"]`)
  if (target !== null) target.classList.add("selected")
}
