/** render(csvPath, outDir): one overall-runtime and one per-job-runtime
 * chart per experiment present in the CSV, named expN_total.png and
 * expN_perjob.png. */

import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { join } from "node:path";

import { encodePng, PALETTE, renderChart, RGB, Series } from "./chart.js";
import {
  aggregate,
  BenchRow,
  experiments,
  parseBenchCsv,
  SeriesByAlgorithm,
} from "./schema.js";

const ALGORITHM_COLORS: Record<string, RGB> = {
  classical: PALETTE[0],
  gpi_comparison: PALETTE[1],
  gpi_linear: PALETTE[2],
};

function toSeries(byAlgorithm: SeriesByAlgorithm): Series[] {
  const names = [...byAlgorithm.keys()].sort();
  return names.map((name, i) => ({
    name,
    color: ALGORITHM_COLORS[name] ?? PALETTE[i % PALETTE.length],
    points: byAlgorithm.get(name)!.map((p) => ({ x: p.n, y: p.mean })),
  }));
}

export interface RenderResult {
  files: string[];
}

/** The two chart specs (total, per-job) for one experiment's rows. */
export function chartSpecs(rows: BenchRow[], experiment: number) {
  return [
    {
      file: `exp${experiment}_total.png`,
      spec: {
        title: `EXPERIMENT ${experiment}: OVERALL RUNTIME`,
        xLabel: "N (JOBS)",
        yLabel: "SECONDS",
        series: toSeries(aggregate(rows, experiment, "wall_seconds")),
      },
    },
    {
      file: `exp${experiment}_perjob.png`,
      spec: {
        title: `EXPERIMENT ${experiment}: PER-JOB RUNTIME`,
        xLabel: "N (JOBS)",
        yLabel: "SECONDS/JOB",
        series: toSeries(aggregate(rows, experiment, "per_job_seconds")),
      },
    },
  ];
}

export function render(csvPath: string, outDir: string): RenderResult {
  const rows = parseBenchCsv(readFileSync(csvPath, "utf8"));
  if (rows.length === 0) {
    console.warn(`warning: ${csvPath} has no data rows, nothing to render`);
    return { files: [] };
  }
  mkdirSync(outDir, { recursive: true });
  const files: string[] = [];
  for (const experiment of experiments(rows)) {
    for (const { file, spec } of chartSpecs(rows, experiment)) {
      const { raster } = renderChart(spec);
      const path = join(outDir, file);
      writeFileSync(path, encodePng(raster));
      files.push(path);
    }
  }
  return { files };
}
