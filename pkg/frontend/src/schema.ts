/** Bench CSV schema: parsing, validation, and trial-averaged aggregation. */

import Papa from "papaparse";

export const REQUIRED_COLUMNS = [
  "experiment",
  "algorithm",
  "n",
  "trial",
  "seed",
  "wall_seconds",
  "per_job_seconds",
] as const;

export interface BenchRow {
  experiment: number;
  algorithm: string;
  n: number;
  trial: number;
  wall_seconds: number;
  per_job_seconds: number;
}

/** One plotted point: trial-averaged metric at a given n. */
export interface MeanPoint {
  n: number;
  mean: number;
  trials: number;
}

/** algorithm -> points sorted by n */
export type SeriesByAlgorithm = Map<string, MeanPoint[]>;

export class SchemaError extends Error {}

export function parseBenchCsv(text: string): BenchRow[] {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  const fields = parsed.meta.fields ?? [];
  const missing = REQUIRED_COLUMNS.filter((c) => !fields.includes(c));
  if (missing.length > 0) {
    throw new SchemaError(`missing columns: ${missing.join(", ")}`);
  }
  return parsed.data.map((row, i) => {
    const num = (col: string): number => {
      const value = Number(row[col]);
      if (!Number.isFinite(value)) {
        throw new SchemaError(`row ${i + 2}: non-numeric ${col} '${row[col]}'`);
      }
      return value;
    };
    return {
      experiment: num("experiment"),
      algorithm: row.algorithm,
      n: num("n"),
      trial: num("trial"),
      wall_seconds: num("wall_seconds"),
      per_job_seconds: num("per_job_seconds"),
    };
  });
}

export function experiments(rows: BenchRow[]): number[] {
  return [...new Set(rows.map((r) => r.experiment))].sort((a, b) => a - b);
}

/**
 * Arithmetic mean of the metric over trials, grouped by algorithm and n,
 * for one experiment.
 */
export function aggregate(
  rows: BenchRow[],
  experiment: number,
  metric: "wall_seconds" | "per_job_seconds",
): SeriesByAlgorithm {
  const sums = new Map<string, Map<number, { sum: number; count: number }>>();
  for (const row of rows) {
    if (row.experiment !== experiment) continue;
    let byN = sums.get(row.algorithm);
    if (!byN) {
      byN = new Map();
      sums.set(row.algorithm, byN);
    }
    let cell = byN.get(row.n);
    if (!cell) {
      cell = { sum: 0, count: 0 };
      byN.set(row.n, cell);
    }
    cell.sum += row[metric];
    cell.count += 1;
  }
  const series: SeriesByAlgorithm = new Map();
  for (const [algorithm, byN] of sums) {
    const points = [...byN.entries()]
      .map(([n, { sum, count }]) => ({ n, mean: sum / count, trials: count }))
      .sort((a, b) => a.n - b.n);
    series.set(algorithm, points);
  }
  return series;
}
