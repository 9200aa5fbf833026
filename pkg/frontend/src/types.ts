// Wire types for the /v1 JSON API.

export type QuestionId =
  | "Q1" | "Q2" | "Q3" | "Q4" | "Q5" | "Q6" | "Q7" | "Q8" | "Q9"

export type Answers = Record<QuestionId, boolean>

export interface IdiomInfo {
  name: string
  tonic: number
  chord_count: number
  kind: string
}

export interface Provenance {
  from_root: string
  from_type: string
  to_root: string
  to_type: string
}

export interface PoolEntry {
  transition: string
  assoc1: number
  assoc2: number
  total_assoc: number
  asym: number
  signed_asym: number
  rate: number
  provenance: Provenance
}

export interface OriginCell {
  kind: string
  rate?: number
}

export interface BridgePathDto {
  kind: string
  from: string
  intermediate: string | null
  to: string
  combined_rate: number
}

export interface ExtendedDto {
  version: string
  chords: string[]
  idiom1_chords: string[]
  idiom2_chords: string[]
  matrix: number[][]
  sector_map: string[][]
  origin_map: (OriginCell | null)[][]
  bridge_paths: {
    i1_to_i2: BridgePathDto[]
    i2_to_i1: BridgePathDto[]
  }
}

export interface BlendSession {
  id: string
  idiom1: string
  idiom2: string
  answers: Answers
  capacity: number
  bridge_mass: number
}

export interface BlendResponse {
  session: BlendSession
  pool: PoolEntry[]
  extended: ExtendedDto
}

export interface BlendRequest {
  idiom1: string
  idiom2: string
  answers: Answers
  capacity: number
  bridge_mass: number
}

export interface SampleRequest {
  idiom?: string
  extended?: ExtendedDto
  start: string
  length: number
  seed: number
}

export interface ApiErrorBody {
  error: { code: string; message: string }
}
