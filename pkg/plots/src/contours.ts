/**
 * Phase-space contour sequence: a 2x2 grid of panels, one per snapshot,
 * tagged (a)-(d) in order of increasing step count.  Contour levels are
 * shared across panels (fractions of the global density maximum) so the
 * panels stay comparable.
 */

import { contours as contourGenerator } from "d3-contour";
import { interpolateViridis } from "d3-scale-chromatic";

import type { Table } from "./csv.js";
import { invokedDirectly, runFigure, type FigureDefinition, type FigureSpec } from "./figure.js";
import { snapshotGrid, type SnapshotGrid } from "./grid.js";
import { extentOf, Panel, SvgDocument, type Extent } from "./svg.js";

const PANEL_W = 280;
const PANEL_H = 230;
const MARGIN_L = 78;
const MARGIN_T = 40;
const GAP_X = 84;
const GAP_Y = 72;
const MARGIN_B = 56;
const MARGIN_R = 24;

export const LEVEL_FRACTIONS = [0.05, 0.15, 0.3, 0.45, 0.6, 0.75, 0.9] as const;

interface DataRing {
  level: number;
  rings: (readonly [number, number])[][];
}

/**
 * Iso-lines of a gridded field at the given absolute levels, returned in
 * data coordinates.  The marching-squares output lives in grid-index space
 * where sample (i, j) is centered at (i + 0.5, j + 0.5); the shift below
 * undoes that.
 */
export function contourRings(grid: SnapshotGrid, levels: number[]): DataRing[] {
  const { nEta, nPi, eta, pi } = grid;
  const values: number[] = new Array(nEta * nPi);
  for (let j = 0; j < nPi; j += 1) {
    for (let i = 0; i < nEta; i += 1) {
      values[j * nEta + i] = grid.value(i, j);
    }
  }
  const dEta = (eta[nEta - 1]! - eta[0]!) / (nEta - 1);
  const dPi = (pi[nPi - 1]! - pi[0]!) / (nPi - 1);
  const generator = contourGenerator().size([nEta, nPi]).thresholds(levels);

  return generator(values).map((multi) => ({
    level: multi.value,
    rings: multi.coordinates.flatMap((polygon) =>
      polygon.map((ring) =>
        ring.map(([gx, gy]) => [eta[0]! + (gx! - 0.5) * dEta, pi[0]! + (gy! - 0.5) * dPi] as const),
      ),
    ),
  }));
}

export function render(spec: FigureSpec, tables: Table[]): string {
  const grids = tables.map((t) => ({ grid: snapshotGrid(t), n: t.metaNumber("n") }));
  grids.sort((a, b) => a.n - b.n);

  const globalMax = Math.max(...grids.map((g) => g.grid.maxValue));
  const levels = LEVEL_FRACTIONS.map((f) => f * globalMax);

  const width = MARGIN_L + 2 * PANEL_W + GAP_X + MARGIN_R;
  const height = MARGIN_T + 2 * PANEL_H + GAP_Y + MARGIN_B;
  const doc = new SvgDocument(width, height);
  const tags = ["(a)", "(b)", "(c)", "(d)"];

  grids.forEach(({ grid, n }, index) => {
    const col = index % 2;
    const row = (index - col) / 2;
    const x0 = MARGIN_L + col * (PANEL_W + GAP_X);
    const y0 = MARGIN_T + row * (PANEL_H + GAP_Y);
    const xExtent: Extent = spec.xRange ?? extentOf(grid.eta);
    const yExtent: Extent = spec.yRange ?? extentOf(grid.pi);
    const panel = new Panel(doc, x0, y0, PANEL_W, PANEL_H, xExtent, yExtent, {
      xLabel: "η",
      yLabel: "Π",
      title: `n = ${n}`,
      tag: tags[index],
    });
    panel.drawFrame();
    for (const { level, rings } of contourRings(grid, levels)) {
      panel.rings(rings, {
        stroke: interpolateViridis(level / globalMax),
        "stroke-width": 1,
      });
    }
  });

  return doc.toString();
}

export const definition: FigureDefinition = {
  name: "contours",
  usage: "contours snapshot.csv snapshot.csv snapshot.csv snapshot.csv -o out.svg",
  inputCount: { lo: 4, hi: 4 },
  render,
};

if (invokedDirectly(import.meta.url)) {
  process.exit(runFigure(definition, process.argv.slice(2)));
}
