import { ApiClient, ApiError, isAbortError } from "./api.js"
import { renderBlendTable } from "./blendTable.js"
import { chordLabel } from "./chordNames.js"
import { highlightCell, renderMatrixView } from "./matrixView.js"
import {
  QUESTION_IDS, QUESTION_TEXTS, UiState, answersPayload, initialState,
  toggleQuestion,
} from "./state.js"
import type { BlendResponse, IdiomInfo, QuestionId } from "./types.js"

const DEFAULT_DEBOUNCE_MS = 200

export class App {
  readonly state: UiState
  private pendingTimer: ReturnType<typeof setTimeout> | null = null

  constructor(private root: HTMLElement, private api: ApiClient,
              private debounceMs: number = DEFAULT_DEBOUNCE_MS) {
    this.state = initialState()
  }

  async init(): Promise<void> {
    const idioms = await this.api.listIdioms()
    if (idioms.length > 0) {
      this.state.idiom1 = idioms[0].name
      this.state.idiom2 = idioms[Math.min(1, idioms.length - 1)].name
    }
    this.buildSkeleton(idioms)
    this.syncControls()
  }

  private element<T extends HTMLElement>(id: string): T {
    const found = this.root.querySelector(`#${id}`)
    if (found === null) throw new Error(`missing element #${id}`)
    return found as T
  }

  private buildSkeleton(idioms: IdiomInfo[]): void {
    const doc = this.root.ownerDocument
    this.root.innerHTML = `
      <header><h1>chordblend</h1></header>
      <section id="controls">
        <label>idiom 1 <select id="idiom1-select"></select></label>
        <label>idiom 2 <select id="idiom2-select"></select></label>
        <label>capacity <input id="capacity" type="number" min="1" value="100"></label>
        <label>bridge mass
          <input id="bridge-mass" type="number" min="0.01" max="0.99" step="0.05" value="0.2">
        </label>
        <fieldset id="question-toggles"><legend>arguments</legend></fieldset>
        <button id="blend-now">blend</button>
      </section>
      <div id="toast" class="toast" hidden></div>
      <main class="results">
        <section id="current-result">
          <h2>current</h2>
          <p class="headline">top rate: <span id="top-rate">-</span></p>
          <div id="matrix-view"></div>
          <div id="blend-table"></div>
          <div class="sampler">
            <button id="sample-button" disabled>sample progression</button>
            <p id="progression"></p>
          </div>
        </section>
        <section id="previous-result">
          <h2>previous</h2>
          <p class="headline">top rate: <span id="previous-top-rate">-</span></p>
          <div id="previous-matrix-view"></div>
        </section>
      </main>`
    for (const [id, value] of [["idiom1-select", this.state.idiom1],
                               ["idiom2-select", this.state.idiom2]] as const) {
      const select = this.element<HTMLSelectElement>(id)
      for (const idiom of idioms) {
        const option = doc.createElement("option")
        option.value = idiom.name
        option.textContent = `${idiom.name} (${idiom.chord_count} chords, ${idiom.kind})`
        select.appendChild(option)
      }
      select.value = value
      select.addEventListener("change", () => {
        if (id === "idiom1-select") this.state.idiom1 = select.value
        else this.state.idiom2 = select.value
        this.scheduleBlend()
      })
    }
    const toggles = this.element<HTMLFieldSetElement>("question-toggles")
    for (const question of QUESTION_IDS) {
      const label = doc.createElement("label")
      const box = doc.createElement("input")
      box.type = "checkbox"
      box.dataset.question = question
      box.addEventListener("change", () => this.toggle(question))
      label.appendChild(box)
      label.appendChild(doc.createTextNode(` ${question}: ${QUESTION_TEXTS[question]}`))
      toggles.appendChild(label)
    }
    this.element<HTMLInputElement>("capacity").addEventListener("change", (e) => {
      this.state.capacity = Number((e.target as HTMLInputElement).value)
      this.scheduleBlend()
    })
    this.element<HTMLInputElement>("bridge-mass").addEventListener("change", (e) => {
      this.state.bridgeMass = Number((e.target as HTMLInputElement).value)
      this.scheduleBlend()
    })
    this.element<HTMLButtonElement>("blend-now")
      .addEventListener("click", () => void this.runBlendNow())
    this.element<HTMLButtonElement>("sample-button")
      .addEventListener("click", () => void this.sampleProgression())
  }

  /** Flip one question; re-render the toggles and schedule a blend. */
  toggle(question: QuestionId): void {
    toggleQuestion(this.state, question)
    this.syncControls()
    this.scheduleBlend()
  }

  private syncControls(): void {
    for (const question of QUESTION_IDS) {
      const box = this.root.querySelector(
        `input[data-question="${question}"]`) as HTMLInputElement | null
      if (box !== null) box.checked = this.state.answers[question]
    }
  }

  /** Debounced request: rapid toggles collapse into one POST /blend. */
  private scheduleBlend(): void {
    if (this.pendingTimer !== null) clearTimeout(this.pendingTimer)
    this.pendingTimer = setTimeout(() => {
      this.pendingTimer = null
      void this.runBlendNow()
    }, this.debounceMs)
  }

  async runBlendNow(): Promise<void> {
    try {
      const response = await this.api.runBlend({
        idiom1: this.state.idiom1,
        idiom2: this.state.idiom2,
        answers: answersPayload(this.state),
        capacity: this.state.capacity,
        bridge_mass: this.state.bridgeMass,
      })
      this.state.previous = this.state.current
      this.state.current = response
      this.state.progression = null
      this.renderResults()
    } catch (err) {
      if (isAbortError(err)) return  // superseded by a newer request
      this.showError(err)
    }
  }

  private renderResults(): void {
    const current = this.state.current
    this.element<HTMLSpanElement>("top-rate").textContent =
      current !== null && current.pool.length > 0
        ? current.pool[0].rate.toFixed(3)
        : "-"
    renderMatrixView(this.element("matrix-view"), current)
    renderBlendTable(this.element("blend-table"), current?.pool ?? [], {
      onRowClick: (transition) =>
        highlightCell(this.element("matrix-view"), transition),
    })
    this.element<HTMLButtonElement>("sample-button").disabled = current === null
    this.element<HTMLParagraphElement>("progression").textContent =
      this.state.progression === null
        ? ""
        : this.state.progression.map(chordLabel).join(" ")
    const previous = this.state.previous
    this.element<HTMLSpanElement>("previous-top-rate").textContent =
      previous !== null && previous.pool.length > 0
        ? previous.pool[0].rate.toFixed(3)
        : "-"
    renderMatrixView(this.element("previous-matrix-view"), previous)
  }

  async sampleProgression(): Promise<void> {
    const current = this.state.current
    if (current === null) return
    try {
      this.state.progression = await this.api.sample({
        extended: current.extended,
        start: current.extended.chords[0],
        length: 16,
        seed: 0,
      })
      this.renderResults()
    } catch (err) {
      this.showError(err)
    }
  }

  private showError(err: unknown): void {
    const toast = this.element<HTMLDivElement>("toast")
    toast.hidden = false
    toast.textContent = err instanceof ApiError
      ? `error ${err.code}: ${err.message}`
      : `error: ${String(err)}`
  }

  lastBlend(): BlendResponse | null {
    return this.state.current
  }
}
