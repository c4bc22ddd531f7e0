/** Software line-chart renderer over a raw RGBA buffer (encoded with pngjs).
 * Linear axes on both sides, one polyline + point markers per series, tick
 * labels in a built-in bitmap font, legend in the top-left of the plot area.
 */

import { PNG } from "pngjs";

import { GLYPH_ADVANCE, GLYPH_HEIGHT, glyphFor, textWidth } from "./font.js";

export type RGB = [number, number, number];

export interface Series {
  name: string;
  color: RGB;
  /** (x, y) data points, x ascending */
  points: { x: number; y: number }[];
}

export interface ChartSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
}

export const PALETTE: RGB[] = [
  [214, 39, 40], // red
  [31, 119, 180], // blue
  [44, 160, 44], // green
  [148, 103, 189], // purple
  [255, 127, 14], // orange
];

export const WIDTH = 800;
export const HEIGHT = 500;
const MARGIN = { left: 90, right: 25, top: 45, bottom: 65 };

export class Raster {
  png: PNG;

  constructor(width: number, height: number) {
    this.png = new PNG({ width, height });
    this.png.data.fill(255); // white, opaque
  }

  set(x: number, y: number, [r, g, b]: RGB): void {
    x = Math.round(x);
    y = Math.round(y);
    if (x < 0 || y < 0 || x >= this.png.width || y >= this.png.height) return;
    const i = (y * this.png.width + x) * 4;
    this.png.data[i] = r;
    this.png.data[i + 1] = g;
    this.png.data[i + 2] = b;
    this.png.data[i + 3] = 255;
  }

  get(x: number, y: number): RGB {
    const i = (Math.round(y) * this.png.width + Math.round(x)) * 4;
    return [this.png.data[i], this.png.data[i + 1], this.png.data[i + 2]];
  }

  line(x0: number, y0: number, x1: number, y1: number, color: RGB): void {
    // Bresenham
    let x = Math.round(x0);
    let y = Math.round(y0);
    const ex = Math.round(x1);
    const ey = Math.round(y1);
    const dx = Math.abs(ex - x);
    const dy = -Math.abs(ey - y);
    const sx = x < ex ? 1 : -1;
    const sy = y < ey ? 1 : -1;
    let err = dx + dy;
    for (;;) {
      this.set(x, y, color);
      if (x === ex && y === ey) break;
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        x += sx;
      }
      if (e2 <= dx) {
        err += dx;
        y += sy;
      }
    }
  }

  fillRect(x: number, y: number, w: number, h: number, color: RGB): void {
    for (let dy = 0; dy < h; dy++) {
      for (let dx = 0; dx < w; dx++) {
        this.set(x + dx, y + dy, color);
      }
    }
  }

  text(x: number, y: number, s: string, color: RGB): void {
    let cx = Math.round(x);
    for (const ch of s) {
      const rows = glyphFor(ch);
      for (let ry = 0; ry < GLYPH_HEIGHT; ry++) {
        for (let rx = 0; rx < 5; rx++) {
          if (rows[ry] & (1 << (4 - rx))) this.set(cx + rx, y + ry, color);
        }
      }
      cx += GLYPH_ADVANCE;
    }
  }

  textVertical(x: number, y: number, s: string, color: RGB): void {
    // rotated 90° counter-clockwise, reading bottom-to-top
    let cy = Math.round(y);
    for (const ch of s) {
      const rows = glyphFor(ch);
      for (let ry = 0; ry < GLYPH_HEIGHT; ry++) {
        for (let rx = 0; rx < 5; rx++) {
          if (rows[ry] & (1 << (4 - rx))) this.set(x + ry, cy - rx, color);
        }
      }
      cy -= GLYPH_ADVANCE;
    }
  }
}

export function formatTick(value: number): string {
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 0.01 && abs < 1e7) {
    const s = value.toPrecision(4);
    return s.includes(".") ? s.replace(/\.?0+$/, "") : s;
  }
  return value.toExponential(2).toUpperCase();
}

function niceTicks(lo: number, hi: number, count: number): number[] {
  if (hi <= lo) return [lo];
  const rawStep = (hi - lo) / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const norm = rawStep / mag;
  const step = (norm < 1.5 ? 1 : norm < 3 ? 2 : norm < 7 ? 5 : 10) * mag;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step / 1e6; v += step) {
    ticks.push(v);
  }
  return ticks;
}

export interface RenderedChart {
  raster: Raster;
  /** data coordinates -> pixel coordinates used for the plotted points */
  project: (x: number, y: number) => [number, number];
}

const BLACK: RGB = [0, 0, 0];
const GRID: RGB = [225, 225, 225];

export function renderChart(spec: ChartSpec): RenderedChart {
  const raster = new Raster(WIDTH, HEIGHT);
  const allPoints = spec.series.flatMap((s) => s.points);
  const xs = allPoints.map((p) => p.x);
  const ys = allPoints.map((p) => p.y);
  const xMin = 0;
  const xMax = Math.max(1, ...xs) * 1.02;
  const yMin = 0;
  const yMax = Math.max(...ys.map((y) => Math.abs(y)), 1e-12) * 1.05;

  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const project = (x: number, y: number): [number, number] => [
    Math.round(MARGIN.left + ((x - xMin) / (xMax - xMin)) * plotW),
    Math.round(MARGIN.top + plotH - ((y - yMin) / (yMax - yMin)) * plotH),
  ];

  // grid + ticks
  for (const tx of niceTicks(xMin, xMax, 6)) {
    const [px] = project(tx, 0);
    raster.line(px, MARGIN.top, px, MARGIN.top + plotH, GRID);
    raster.line(px, MARGIN.top + plotH, px, MARGIN.top + plotH + 4, BLACK);
    const label = formatTick(tx);
    raster.text(px - textWidth(label) / 2, MARGIN.top + plotH + 8, label, BLACK);
  }
  for (const ty of niceTicks(yMin, yMax, 6)) {
    const [, py] = project(0, ty);
    raster.line(MARGIN.left, py, MARGIN.left + plotW, py, GRID);
    raster.line(MARGIN.left - 4, py, MARGIN.left, py, BLACK);
    const label = formatTick(ty);
    raster.text(MARGIN.left - 8 - textWidth(label), py - 3, label, BLACK);
  }

  // axes
  raster.line(MARGIN.left, MARGIN.top, MARGIN.left, MARGIN.top + plotH, BLACK);
  raster.line(
    MARGIN.left, MARGIN.top + plotH,
    MARGIN.left + plotW, MARGIN.top + plotH, BLACK,
  );

  // series: polyline + 5x5 point markers
  for (const series of spec.series) {
    const pixels = series.points.map((p) => project(p.x, p.y));
    for (let i = 1; i < pixels.length; i++) {
      raster.line(...pixels[i - 1], ...pixels[i], series.color);
    }
    for (const [px, py] of pixels) {
      raster.fillRect(px - 2, py - 2, 5, 5, series.color);
    }
  }

  // title, axis labels, legend
  raster.text(
    (WIDTH - textWidth(spec.title)) / 2, 18, spec.title, BLACK,
  );
  raster.text(
    MARGIN.left + (plotW - textWidth(spec.xLabel)) / 2,
    HEIGHT - 22, spec.xLabel, BLACK,
  );
  raster.textVertical(
    14, MARGIN.top + plotH / 2 + textWidth(spec.yLabel) / 2, spec.yLabel, BLACK,
  );
  let ly = MARGIN.top + 10;
  for (const series of spec.series) {
    raster.fillRect(MARGIN.left + 12, ly, 18, 3, series.color);
    raster.text(MARGIN.left + 36, ly - 2, series.name, BLACK);
    ly += 14;
  }

  return { raster, project };
}

export function encodePng(raster: Raster): Buffer {
  return PNG.sync.write(raster.png);
}
