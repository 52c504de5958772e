// Payload types mirroring docs/schema.md.  The client renders these
// verbatim; it never derives domain numbers itself.

export type CellKind = "exact" | "interval" | "missing";

export interface CellDoc {
  p: number;
  q: number;
  kind: CellKind;
  cards?: number;
  lo?: number;
  hi?: number;
}

export interface TableDoc {
  schema: string;
  levels: { count: number; labels: string[] | null; coordinates: number[] | null };
  integer: boolean;
  cells: CellDoc[];
}

export interface Violation {
  p: number;
  k: number;
  q: number;
  lhs: number;
  rhs: number;
}

export interface CheckResult {
  kind: CellKind | "mixed";
  consistent: boolean;
  violations?: Violation[];
  z?: number;
  flagged?: [number, number][];
}

export interface RepairDoc {
  z: number;
  modified: [number, number][];
  deltas?: Record<string, number>;
  new_bounds?: Record<string, [number, number]>;
  table: TableDoc;
}

export interface RepairsResult {
  repairs: RepairDoc[];
  version: number;
}

export interface ScaleDoc {
  anchors: [number, number][];
  alpha: number;
  utilities: number[];
  coordinates: number[] | null;
  labels: string[] | null;
}

export interface ScalesResult {
  version: number;
  scales: Record<string, ScaleDoc>;
}

export interface CapacityResult {
  version: number;
  capacity: {
    criteria: string[];
    singletons: { criterion: string; m: number; mu: number }[];
    pairs: { criteria: string[]; m: number; mu: number }[];
  };
  z: number;
  ell: number;
  total_corrected_value: number;
  violations: { criterion: string | null; partners: string[]; value: number }[];
  sign_mismatches: { pair: string[]; hint: number; m: number }[];
}

export interface EvaluateResult {
  version: number;
  values: Record<string, number>;
  ranking: string[];
}

export interface SmaaResult {
  version: number;
  alternatives: string[];
  combination_count: number;
  b: number[][];
  p: number[][];
  seed?: number;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  location: string;
}
