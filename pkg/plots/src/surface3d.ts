/**
 * Three-dimensional rendering of one phase-space density snapshot: the
 * grid is projected isometrically and drawn as filled quadrilaterals back
 * to front, colored by height.  Heavy grids are strided down to at most
 * MAX_NODES nodes per axis so the mesh stays legible.
 */

import { interpolateViridis } from "d3-scale-chromatic";

import type { Table } from "./csv.js";
import { invokedDirectly, runFigure, type FigureDefinition, type FigureSpec } from "./figure.js";
import { snapshotGrid } from "./grid.js";
import { px, SvgDocument, FONT_SIZE } from "./svg.js";

const WIDTH = 640;
const HEIGHT = 520;
const MARGIN = 48;
const MAX_NODES = 61;
const HEIGHT_FRACTION = 0.55; // peak height relative to the base diagonal

const COS30 = Math.cos(Math.PI / 6);
const SIN30 = Math.sin(Math.PI / 6);

interface Projected {
  x: number;
  y: number;
}

function project(u: number, v: number, w: number): Projected {
  return { x: (u - v) * COS30, y: (u + v) * SIN30 - w };
}

export function render(spec: FigureSpec, tables: Table[]): string {
  void spec;
  const grid = snapshotGrid(tables[0]!);
  const strideEta = Math.max(1, Math.ceil(grid.nEta / MAX_NODES));
  const stridePi = Math.max(1, Math.ceil(grid.nPi / MAX_NODES));
  const etaIdx: number[] = [];
  const piIdx: number[] = [];
  for (let i = 0; i < grid.nEta; i += strideEta) etaIdx.push(i);
  if (etaIdx[etaIdx.length - 1] !== grid.nEta - 1) etaIdx.push(grid.nEta - 1);
  for (let j = 0; j < grid.nPi; j += stridePi) piIdx.push(j);
  if (piIdx[piIdx.length - 1] !== grid.nPi - 1) piIdx.push(grid.nPi - 1);

  // unit-square base coordinates, density normalized to HEIGHT_FRACTION
  const etaSpan = grid.eta[grid.nEta - 1]! - grid.eta[0]!;
  const piSpan = grid.pi[grid.nPi - 1]! - grid.pi[0]!;
  const nodes: Projected[][] = etaIdx.map((i) =>
    piIdx.map((j) =>
      project(
        (grid.eta[i]! - grid.eta[0]!) / etaSpan,
        (grid.pi[j]! - grid.pi[0]!) / piSpan,
        (grid.value(i, j) / grid.maxValue) * HEIGHT_FRACTION,
      ),
    ),
  );

  let xLo = Infinity;
  let xHi = -Infinity;
  let yLo = Infinity;
  let yHi = -Infinity;
  for (const row of nodes) {
    for (const p of row) {
      if (p.x < xLo) xLo = p.x;
      if (p.x > xHi) xHi = p.x;
      if (p.y < yLo) yLo = p.y;
      if (p.y > yHi) yHi = p.y;
    }
  }
  const scale = Math.min((WIDTH - 2 * MARGIN) / (xHi - xLo), (HEIGHT - 2 * MARGIN) / (yHi - yLo));
  const toScreen = (p: Projected): readonly [number, number] => [
    MARGIN + (p.x - xLo) * scale,
    MARGIN + (p.y - yLo) * scale,
  ];

  interface Quad {
    depth: number;
    d: string;
    fill: string;
  }
  const quads: Quad[] = [];
  for (let a = 0; a < etaIdx.length - 1; a += 1) {
    for (let b = 0; b < piIdx.length - 1; b += 1) {
      const corners = [nodes[a]![b]!, nodes[a + 1]![b]!, nodes[a + 1]![b + 1]!, nodes[a]![b + 1]!];
      const height =
        (grid.value(etaIdx[a]!, piIdx[b]!) +
          grid.value(etaIdx[a + 1]!, piIdx[b]!) +
          grid.value(etaIdx[a + 1]!, piIdx[b + 1]!) +
          grid.value(etaIdx[a]!, piIdx[b + 1]!)) /
        (4 * grid.maxValue);
      // painter order: draw far (small screen y of the base) before near
      const depth = (a + b) / (etaIdx.length + piIdx.length);
      const d =
        corners
          .map((p, k) => `${k === 0 ? "M" : "L"}${px(toScreen(p)[0])} ${px(toScreen(p)[1])}`)
          .join("") + "Z";
      quads.push({ depth, d, fill: interpolateViridis(height) });
    }
  }
  quads.sort((lhs, rhs) => lhs.depth - rhs.depth);

  const doc = new SvgDocument(WIDTH, HEIGHT);
  const n = tables[0]!.metaNumber("n");
  doc.text(WIDTH / 2, MARGIN - FONT_SIZE, `phase-space density, n = ${n}`, {
    "text-anchor": "middle",
  });
  for (const quad of quads) {
    doc.path(quad.d, { fill: quad.fill, stroke: "#1a1a2e", "stroke-width": 0.3, class: "quad" });
  }

  // base-edge direction markers
  const origin = toScreen(nodes[0]![0]!);
  const etaEnd = toScreen(nodes[nodes.length - 1]![0]!);
  const piEnd = toScreen(nodes[0]![piIdx.length - 1]!);
  doc.text(
    (origin[0] + etaEnd[0]) / 2 + 16,
    (origin[1] + etaEnd[1]) / 2 + 22,
    "η",
    { "font-style": "italic" },
  );
  doc.text(
    (origin[0] + piEnd[0]) / 2 - 26,
    (origin[1] + piEnd[1]) / 2 + 22,
    "Π",
    { "font-style": "italic" },
  );

  return doc.toString();
}

export const definition: FigureDefinition = {
  name: "surface3d",
  usage: "surface3d snapshot.csv -o out.svg",
  inputCount: { lo: 1, hi: 1 },
  allowRanges: false,
  render,
};

if (invokedDirectly(import.meta.url)) {
  process.exit(runFigure(definition, process.argv.slice(2)));
}
