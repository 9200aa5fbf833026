import { afterEach, beforeEach, describe, expect, it, vi } from "vitest"

import { QUESTION_IDS } from "../src/state.js"
import type { Answers, BlendResponse } from "../src/types.js"

import fixture from "./fixtures/blend_presets.json"
import { jsonResponse, setupApp } from "./helpers.js"

const blendFixture = fixture as unknown as BlendResponse

beforeEach(() => {
  vi.useFakeTimers()
})

afterEach(() => {
  vi.unstubAllGlobals()
  vi.useRealTimers()
  document.body.innerHTML = ""
})

async function flushDebounce(ms = 500): Promise<void> {
  await vi.advanceTimersByTimeAsync(ms)
}

describe("question toggles", () => {
  it("toggling each of the nine questions issues exactly one request with the right payload", async () => {
    const harness = await setupApp(blendFixture)
    const expected: Answers = { ...blendFixture.session.answers }
    for (const question of QUESTION_IDS) {
      const before = harness.blendCalls().length
      const box = harness.root.querySelector(
        `input[data-question="${question}"]`) as HTMLInputElement
      box.click()
      expected[question] = !expected[question]
      await flushDebounce()
      const bodies = harness.blendBodies()
      expect(bodies.length).toBe(before + 1)
      expect(bodies[bodies.length - 1].answers).toEqual(expected)
    }
  })

  it("a toggle changes only that question in the request body", async () => {
    const harness = await setupApp(blendFixture)
    await harness.app.runBlendNow()
    harness.app.toggle("Q9")
    await flushDebounce()
    const bodies = harness.blendBodies()
    const before = bodies[bodies.length - 2].answers
    const after = bodies[bodies.length - 1].answers
    expect(after.Q9).toBe(!before.Q9)
    for (const q of QUESTION_IDS.filter((q) => q !== "Q9")) {
      expect(after[q]).toBe(before[q])
    }
  })

  it("two rapid toggles collapse into a single debounced request", async () => {
    const harness = await setupApp(blendFixture)
    harness.app.toggle("Q1")
    harness.app.toggle("Q2")
    await flushDebounce()
    expect(harness.blendCalls().length).toBe(1)
    expect(harness.blendBodies()[0].answers.Q1).toBe(false)
    expect(harness.blendBodies()[0].answers.Q2).toBe(false)
  })
})

describe("rendering", () => {
  it("shows the server's pool head as the top rate", async () => {
    const harness = await setupApp(blendFixture)
    await harness.app.runBlendNow()
    const topRate = harness.root.querySelector("#top-rate") as HTMLElement
    expect(topRate.textContent).toBe(blendFixture.pool[0].rate.toFixed(3))
  })

  it("renders checkbox states equal to the answers echoed by the server", async () => {
    const harness = await setupApp(blendFixture)
    await harness.app.runBlendNow()
    const echoed = harness.app.lastBlend()!.session.answers
    for (const question of QUESTION_IDS) {
      const box = harness.root.querySelector(
        `input[data-question="${question}"]`) as HTMLInputElement
      expect(box.checked).toBe(echoed[question])
    }
  })

  it("keeps the previous result side by side after a re-blend", async () => {
    const harness = await setupApp(blendFixture)
    await harness.app.runBlendNow()
    harness.app.toggle("Q3")
    await flushDebounce()
    const previousRate = harness.root.querySelector(
      "#previous-top-rate") as HTMLElement
    expect(previousRate.textContent).toBe(blendFixture.pool[0].rate.toFixed(3))
    const previousMatrix = harness.root.querySelector(
      "#previous-matrix-view table.matrix")
    expect(previousMatrix).not.toBeNull()
  })

  it("colors matrix cells by sector and tips blends with rate and direction", async () => {
    const harness = await setupApp(blendFixture)
    await harness.app.runBlendNow()
    const matrix = harness.root.querySelector("#matrix-view") as HTMLElement
    expect(matrix.querySelectorAll("td.sector-I1").length).toBeGreaterThan(0)
    expect(matrix.querySelectorAll("td.sector-A12").length).toBeGreaterThan(0)
    const blendCell = Array.from(matrix.querySelectorAll("td.origin-blend"))
      .find((td) => (td as HTMLElement).title !== "") as HTMLElement
    expect(blendCell.title).toMatch(/rate=\d/)
    expect(blendCell.title).toMatch(/sector /)
    expect(blendCell.title).toMatch(/prevails|balanced/)
  })

  it("shows the no-bridges banner when the idioms are unconnected", async () => {
    const unconnected = JSON.parse(JSON.stringify(blendFixture)) as BlendResponse
    unconnected.extended.bridge_paths = { i1_to_i2: [], i2_to_i1: [] }
    const harness = await setupApp(unconnected)
    await harness.app.runBlendNow()
    const banner = harness.root.querySelector(".banner.no-bridges") as HTMLElement
    expect(banner).not.toBeNull()
    expect(banner.textContent).toMatch(/no bridges/)
  })

  it("clicking a blend row highlights the matrix cell", async () => {
    const harness = await setupApp(blendFixture)
    await harness.app.runBlendNow()
    const row = harness.root.querySelector(
      "#blend-table table.blends tr[data-transition]") as HTMLElement
    row.click()
    const selected = harness.root.querySelector(
      "#matrix-view td.selected") as HTMLElement
    expect(selected).not.toBeNull()
    expect(selected.dataset.transition).toBe(row.dataset.transition)
  })
})

describe("errors", () => {
  it("shows a toast with the machine-readable code on server errors", async () => {
    const harness = await setupApp(blendFixture)
    vi.stubGlobal("fetch", vi.fn(async () => jsonResponse(
      { error: { code: "no_arguments", message: "select at least one" } }, 400)))
    await harness.app.runBlendNow()
    const toast = harness.root.querySelector("#toast") as HTMLElement
    expect(toast.hidden).toBe(false)
    expect(toast.textContent).toContain("no_arguments")
  })
})
