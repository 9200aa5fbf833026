import { vi } from "vitest"

import { ApiClient } from "../src/api.js"
import { App } from "../src/app.js"

export const IDIOM_CATALOG = {
  idioms: [
    { name: "c-major-artificial", tonic: 0, chord_count: 3, kind: "preset" },
    { name: "fsharp-major-artificial", tonic: 6, chord_count: 3, kind: "preset" },
  ],
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  })
}

export interface RecordedCall {
  url: string
  init: RequestInit
}

export interface TestHarness {
  app: App
  root: HTMLElement
  blendCalls: () => RecordedCall[]
  blendBodies: () => any[]
}

/** App wired to a mocked fetch; blend responses come from `blendBody`. */
export async function setupApp(blendBody: unknown,
                               debounceMs = 200): Promise<TestHarness> {
  const calls: RecordedCall[] = []
  const fetchMock = vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input)
    if (url.endsWith("/v1/idioms")) return jsonResponse(IDIOM_CATALOG)
    if (url.endsWith("/v1/blend")) {
      calls.push({ url, init: init ?? {} })
      return jsonResponse(blendBody)
    }
    if (url.endsWith("/v1/sample")) {
      return jsonResponse({ chords: ["0:0,4,7", "7:0,4,7,10"] })
    }
    return jsonResponse({ error: { code: "not_found", message: url } }, 404)
  })
  vi.stubGlobal("fetch", fetchMock)
  const root = document.createElement("div")
  document.body.appendChild(root)
  const app = new App(root, new ApiClient(), debounceMs)
  await app.init()
  return {
    app,
    root,
    blendCalls: () => [...calls],
    blendBodies: () => calls.map((c) => JSON.parse(String(c.init.body))),
  }
}
