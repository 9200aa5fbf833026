import { transitionLabel } from "./chordNames.js"
import type { PoolEntry } from "./types.js"

export type SortColumn = "rate" | "total_assoc" | "asym"

const PROVENANCE_SHORT: Record<string, string> = {
  input1: "1", input2: "2", both: "=",
}

function provenanceSummary(entry: PoolEntry): string {
  const p = entry.provenance
  return `${PROVENANCE_SHORT[p.from_root]}${PROVENANCE_SHORT[p.from_type]}` +
    `→${PROVENANCE_SHORT[p.to_root]}${PROVENANCE_SHORT[p.to_type]}`
}

/**
 * Client-side reordering of an already-scored pool; never re-queries and
 * never recomputes any number.
 */
export function sortPool(pool: PoolEntry[], column: SortColumn,
                         ascending: boolean): PoolEntry[] {
  const sorted = [...pool].sort((a, b) => (a[column] - b[column]))
  return ascending ? sorted : sorted.reverse()
}

export interface BlendTableOptions {
  onRowClick?: (transition: string) => void
  sort?: { column: SortColumn; ascending: boolean } | null
}

/** Ranked blend table; default order is the server's preference order. */
export function renderBlendTable(container: HTMLElement, pool: PoolEntry[],
                                 options: BlendTableOptions = {}): void {
  container.textContent = ""
  const doc = container.ownerDocument
  const rows = options.sort
    ? sortPool(pool, options.sort.column, options.sort.ascending)
    : pool
  const table = doc.createElement("table")
  table.className = "blends"
  const head = doc.createElement("tr")
  for (const [key, label] of [["transition", "transition"], ["rate", "rate"],
                              ["total_assoc", "association"], ["asym", "asymmetry"],
                              ["provenance", "provenance"]]) {
    const th = doc.createElement("th")
    th.textContent = label
    th.dataset.column = key
    head.appendChild(th)
  }
  table.appendChild(head)
  for (const entry of rows) {
    const tr = doc.createElement("tr")
    tr.dataset.transition = entry.transition
    const cells = [
      transitionLabel(entry.transition),
      entry.rate.toFixed(3),
      entry.total_assoc.toFixed(3),
      entry.asym.toFixed(3),
      provenanceSummary(entry),
    ]
    for (const text of cells) {
      const td = doc.createElement("td")
      td.textContent = text
      tr.appendChild(td)
    }
    tr.title = entry.transition
    if (options.onRowClick) {
      tr.addEventListener("click", () => options.onRowClick!(entry.transition))
    }
    table.appendChild(tr)
  }
  container.appendChild(table)
}
