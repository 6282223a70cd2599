/**
 * Density-current panels: one panel per snapshot, stacked vertically and
 * tagged (a), (b), ... by increasing step count.  Each panel overlays the
 * momentum-integrated density S (solid) and flux I (dashed).
 */

import { expectTable, type Table } from "./csv.js";
import { invokedDirectly, runFigure, type FigureDefinition, type FigureSpec } from "./figure.js";
import {
  DASH_DASHED,
  DASH_SOLID,
  drawLegend,
  extentOf,
  Panel,
  PALETTE,
  SvgDocument,
  type Extent,
} from "./svg.js";

const PANEL_W = 460;
const PANEL_H = 170;
const MARGIN_L = 78;
const MARGIN_T = 26;
const GAP_Y = 54;
const MARGIN_B = 56;
const MARGIN_R = 24;

interface CurrentCurves {
  n: number;
  eta: Float64Array;
  s: Float64Array;
  i: Float64Array;
}

export function readCurrents(tables: Table[]): CurrentCurves[] {
  const curves = tables.map((table) => {
    expectTable(table, ["eta", "S", "I"], ["density", "current"]);
    return {
      n: table.metaNumber("n"),
      eta: table.column("eta"),
      s: table.column("S"),
      i: table.column("I"),
    };
  });
  curves.sort((a, b) => a.n - b.n);
  return curves;
}

export function render(spec: FigureSpec, tables: Table[]): string {
  const curves = readCurrents(tables);

  const width = MARGIN_L + PANEL_W + MARGIN_R;
  const height = MARGIN_T + curves.length * PANEL_H + (curves.length - 1) * GAP_Y + MARGIN_B;
  const doc = new SvgDocument(width, height);

  const xExtent: Extent =
    spec.xRange ?? extentOf(Float64Array.from(curves.flatMap((c) => [...c.eta])));
  const yExtent: Extent =
    spec.yRange ??
    (() => {
      const e = extentOf(Float64Array.from(curves.flatMap((c) => [...c.s, ...c.i])), 0.06);
      return { lo: Math.min(0, e.lo) - 0.0, hi: e.hi };
    })();

  curves.forEach((curve, index) => {
    const y0 = MARGIN_T + index * (PANEL_H + GAP_Y);
    const last = index === curves.length - 1;
    const panel = new Panel(doc, MARGIN_L, y0, PANEL_W, PANEL_H, xExtent, yExtent, {
      xLabel: last ? "η" : undefined,
      tag: `(${String.fromCharCode(97 + index)})`,
      title: `n = ${curve.n}`,
    });
    panel.drawFrame();
    panel.curve(curve.eta, curve.s, PALETTE[0]!, DASH_SOLID);
    panel.curve(curve.eta, curve.i, PALETTE[1]!, DASH_DASHED);
    if (index === 0) {
      drawLegend(doc, MARGIN_L + PANEL_W - 66, y0 + 14, [
        { label: "S", color: PALETTE[0]!, dash: DASH_SOLID },
        { label: "I", color: PALETTE[1]!, dash: DASH_DASHED },
      ]);
    }
  });

  return doc.toString();
}

export const definition: FigureDefinition = {
  name: "current",
  usage: "current current_n*.csv -o out.svg",
  inputCount: { lo: 1, hi: 6 },
  render,
};

if (invokedDirectly(import.meta.url)) {
  process.exit(runFigure(definition, process.argv.slice(2)));
}
