import type {
  ApiErrorBody, BlendRequest, BlendResponse, IdiomInfo, SampleRequest,
} from "./types.js"

export class ApiError extends Error {
  constructor(public code: string, message: string, public status: number) {
    super(message)
  }
}

async function parseError(res: Response): Promise<ApiError> {
  try {
    const body = (await res.json()) as ApiErrorBody
    return new ApiError(body.error.code, body.error.message, res.status)
  } catch {
    return new ApiError("http_error", `request failed with ${res.status}`, res.status)
  }
}

export function isAbortError(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError"
}

/**
 * Thin client for the /v1 endpoints. Blend requests are latest-wins: a new
 * one aborts whatever is still in flight, so at most one is pending.
 */
export class ApiClient {
  private inflightBlend: AbortController | null = null

  constructor(private baseUrl: string = "") {}

  async listIdioms(): Promise<IdiomInfo[]> {
    const res = await fetch(`${this.baseUrl}/v1/idioms`)
    if (!res.ok) throw await parseError(res)
    const body = (await res.json()) as { idioms: IdiomInfo[] }
    return body.idioms
  }

  async runBlend(request: BlendRequest): Promise<BlendResponse> {
    this.inflightBlend?.abort()
    const controller = new AbortController()
    this.inflightBlend = controller
    try {
      const res = await fetch(`${this.baseUrl}/v1/blend`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(request),
        signal: controller.signal,
      })
      if (!res.ok) throw await parseError(res)
      return (await res.json()) as BlendResponse
    } finally {
      if (this.inflightBlend === controller) this.inflightBlend = null
    }
  }

  async sample(request: SampleRequest): Promise<string[]> {
    const res = await fetch(`${this.baseUrl}/v1/sample`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    })
    if (!res.ok) throw await parseError(res)
    const body = (await res.json()) as { chords: string[] }
    return body.chords
  }
}
