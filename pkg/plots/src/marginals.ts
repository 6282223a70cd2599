/**
 * Marginal distributions of the evolved phase-space density: a position
 * panel and a momentum panel, each overlaying one curve per snapshot.
 * Curves are keyed "(a)", "(b)", ... by increasing step count.
 */

import { expectTable, CsvError, type Table } from "./csv.js";
import {
  FigureError,
  invokedDirectly,
  runFigure,
  type FigureDefinition,
  type FigureSpec,
} from "./figure.js";
import {
  drawLegend,
  extentOf,
  Panel,
  PALETTE,
  SvgDocument,
  type Extent,
  type LegendEntry,
} from "./svg.js";

const PANEL_W = 300;
const PANEL_H = 250;
const MARGIN_L = 78;
const MARGIN_T = 26;
const GAP_X = 84;
const MARGIN_B = 56;
const MARGIN_R = 24;

interface MarginalCurve {
  n: number;
  coord: Float64Array;
  value: Float64Array;
}

export interface MarginalGroups {
  eta: MarginalCurve[];
  pi: MarginalCurve[];
}

export function groupMarginals(tables: Table[]): MarginalGroups {
  const groups: MarginalGroups = { eta: [], pi: [] };
  for (const table of tables) {
    expectTable(table, ["coord", "value"], ["density"]);
    const axis = table.meta("axis");
    if (axis !== "eta" && axis !== "pi") {
      throw new CsvError(table.path, 1, `unknown marginal axis "${axis}"`);
    }
    groups[axis].push({
      n: table.metaNumber("n"),
      coord: table.column("coord"),
      value: table.column("value"),
    });
  }
  if (groups.eta.length === 0 || groups.pi.length === 0) {
    throw new FigureError(
      "need marginals for both axes " +
        `(got ${groups.eta.length} position and ${groups.pi.length} momentum files)`,
    );
  }
  groups.eta.sort((a, b) => a.n - b.n);
  groups.pi.sort((a, b) => a.n - b.n);
  return groups;
}

/** Letter key per step count, "(a)" for the smallest. */
export function letterByStep(groups: MarginalGroups): Map<number, string> {
  const steps = [...new Set([...groups.eta, ...groups.pi].map((c) => c.n))].sort(
    (a, b) => a - b,
  );
  return new Map(steps.map((n, i) => [n, `(${String.fromCharCode(97 + i)})`]));
}

export function render(spec: FigureSpec, tables: Table[]): string {
  const groups = groupMarginals(tables);
  const letters = letterByStep(groups);

  const width = MARGIN_L + 2 * PANEL_W + GAP_X + MARGIN_R;
  const height = MARGIN_T + PANEL_H + MARGIN_B;
  const doc = new SvgDocument(width, height);

  const panels: Array<{
    curves: MarginalCurve[];
    x0: number;
    xLabel: string;
    yLabel: string;
  }> = [
    { curves: groups.eta, x0: MARGIN_L, xLabel: "η", yLabel: "S" },
    { curves: groups.pi, x0: MARGIN_L + PANEL_W + GAP_X, xLabel: "Π", yLabel: "R" },
  ];

  for (const { curves, x0, xLabel, yLabel } of panels) {
    const xExtent: Extent =
      spec.xRange ?? extentOf(Float64Array.from(curves.flatMap((c) => [...c.coord])));
    const yExtent: Extent =
      spec.yRange ??
      (() => {
        const e = extentOf(Float64Array.from(curves.flatMap((c) => [...c.value])), 0.05);
        return { lo: Math.min(0, e.lo), hi: e.hi };
      })();
    const panel = new Panel(doc, x0, MARGIN_T, PANEL_W, PANEL_H, xExtent, yExtent, {
      xLabel,
      yLabel,
    });
    panel.drawFrame();
    const legend: LegendEntry[] = [];
    curves.forEach((curve, i) => {
      const color = PALETTE[i % PALETTE.length]!;
      panel.curve(curve.coord, curve.value, color);
      legend.push({ label: `${letters.get(curve.n)} n = ${curve.n}`, color });
    });
    drawLegend(doc, x0 + PANEL_W - 116, MARGIN_T + 16, legend);
  }

  return doc.toString();
}

export const definition: FigureDefinition = {
  name: "marginals",
  usage: "marginals marginal_eta_*.csv marginal_pi_*.csv -o out.svg",
  inputCount: { lo: 2, hi: Infinity },
  render,
};

if (invokedDirectly(import.meta.url)) {
  process.exit(runFigure(definition, process.argv.slice(2)));
}
