/**
 * Model-comparison marginals: coordinate and momentum distributions at a
 * single step count, overlaid for two (or more) Hamiltonian couplings.
 * Curves are keyed "(a)" for the first model and "(b)" for the second.
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
  DASH_DASHED,
  DASH_SOLID,
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

// fixed key order: the scalar-coupled oscillator is curve (a), the
// mass-coupled one curve (b); anything else sorts after, alphabetically
const MODEL_ORDER = ["quadratic-scalar", "quadratic-mass"];

interface ModelCurve {
  model: string;
  axis: "eta" | "pi";
  coord: Float64Array;
  value: Float64Array;
}

export interface Comparison {
  n: number;
  models: string[];
  curves: ModelCurve[];
}

export function groupComparison(tables: Table[]): Comparison {
  const curves: ModelCurve[] = [];
  const steps = new Set<number>();
  for (const table of tables) {
    expectTable(table, ["coord", "value"], ["density"]);
    const axis = table.meta("axis");
    if (axis !== "eta" && axis !== "pi") {
      throw new CsvError(table.path, 1, `unknown marginal axis "${axis}"`);
    }
    steps.add(table.metaNumber("n"));
    curves.push({
      model: table.meta("cfg.hamiltonian"),
      axis,
      coord: table.column("coord"),
      value: table.column("value"),
    });
  }
  if (steps.size !== 1) {
    throw new FigureError(
      `inputs mix step counts ${[...steps].sort((a, b) => a - b).join(", ")}; ` +
        "a comparison wants all marginals at the same step",
    );
  }
  const models = [...new Set(curves.map((c) => c.model))].sort((a, b) => {
    const ia = MODEL_ORDER.indexOf(a);
    const ib = MODEL_ORDER.indexOf(b);
    if (ia >= 0 || ib >= 0) {
      return (ia < 0 ? MODEL_ORDER.length : ia) - (ib < 0 ? MODEL_ORDER.length : ib);
    }
    return a < b ? -1 : 1;
  });
  if (models.length < 2) {
    throw new FigureError(`need marginals from at least two models, got only "${models[0]}"`);
  }
  for (const model of models) {
    for (const axis of ["eta", "pi"] as const) {
      if (!curves.some((c) => c.model === model && c.axis === axis)) {
        throw new FigureError(`model "${model}" is missing its ${axis} marginal`);
      }
    }
  }
  return { n: [...steps][0]!, models, curves };
}

export function render(spec: FigureSpec, tables: Table[]): string {
  const { n, models, curves } = groupComparison(tables);

  const width = MARGIN_L + 2 * PANEL_W + GAP_X + MARGIN_R;
  const height = MARGIN_T + PANEL_H + MARGIN_B;
  const doc = new SvgDocument(width, height);

  const panels: Array<{ axis: "eta" | "pi"; x0: number; xLabel: string; yLabel: string }> = [
    { axis: "eta", x0: MARGIN_L, xLabel: "η", yLabel: "S" },
    { axis: "pi", x0: MARGIN_L + PANEL_W + GAP_X, xLabel: "Π", yLabel: "R" },
  ];

  for (const { axis, x0, xLabel, yLabel } of panels) {
    const axisCurves = curves.filter((c) => c.axis === axis);
    const xExtent: Extent =
      spec.xRange ?? extentOf(Float64Array.from(axisCurves.flatMap((c) => [...c.coord])));
    const yExtent: Extent =
      spec.yRange ??
      (() => {
        const e = extentOf(Float64Array.from(axisCurves.flatMap((c) => [...c.value])), 0.05);
        return { lo: Math.min(0, e.lo), hi: e.hi };
      })();
    const panel = new Panel(doc, x0, MARGIN_T, PANEL_W, PANEL_H, xExtent, yExtent, {
      xLabel,
      yLabel,
      title: axis === "eta" ? `coordinate, n = ${n}` : `momentum, n = ${n}`,
    });
    panel.drawFrame();
    const legend: LegendEntry[] = [];
    models.forEach((model, i) => {
      const color = PALETTE[i % PALETTE.length]!;
      const dash = i === 0 ? DASH_SOLID : DASH_DASHED;
      for (const curve of axisCurves.filter((c) => c.model === model)) {
        panel.curve(curve.coord, curve.value, color, dash);
      }
      legend.push({ label: `(${String.fromCharCode(97 + i)}) ${model}`, color, dash });
    });
    drawLegend(doc, x0 + 12, MARGIN_T + 16, legend);
  }

  return doc.toString();
}

export const definition: FigureDefinition = {
  name: "compare-marginals",
  usage: "compare-marginals runA/marginal_*.csv runB/marginal_*.csv -o out.svg",
  inputCount: { lo: 4, hi: Infinity },
  render,
};

if (invokedDirectly(import.meta.url)) {
  process.exit(runFigure(definition, process.argv.slice(2)));
}
