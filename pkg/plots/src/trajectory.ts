/**
 * Momentum-history overlay: the split-integrator trajectory, the
 * momentum-equation oracle, and the ordinary harmonic oscillator drawn
 * dot-dashed for contrast.  The first two coincide to plotting accuracy;
 * the harmonic curve runs visibly ahead at relativistic amplitudes.
 */

import { expectTable, type Table } from "./csv.js";
import {
  FigureError,
  invokedDirectly,
  runFigure,
  type FigureDefinition,
  type FigureSpec,
} from "./figure.js";
import {
  DASH_DASHED,
  DASH_DOT_DASHED,
  DASH_SOLID,
  drawLegend,
  extentOf,
  Panel,
  PALETTE,
  SvgDocument,
  type Extent,
} from "./svg.js";

const PANEL_W = 560;
const PANEL_H = 320;
const MARGIN_L = 78;
const MARGIN_T = 26;
const MARGIN_B = 56;
const MARGIN_R = 24;

interface Roles {
  split: Table;
  oracle: Table;
  harmonic: Table;
}

export function assignRoles(tables: Table[]): Roles {
  let split: Table | undefined;
  let oracle: Table | undefined;
  let harmonic: Table | undefined;
  for (const table of tables) {
    expectTable(table, ["lambda", "eta", "pi", "energy"], ["trajectory"]);
    const reference = table.metadata.get("reference");
    if (reference === undefined) {
      split = table;
    } else if (reference === "momentum-equation") {
      oracle = table;
    } else if (reference === "harmonic-oscillator") {
      harmonic = table;
    } else {
      throw new FigureError(`${table.path}: unknown reference kind "${reference}"`);
    }
  }
  if (!split || !oracle || !harmonic) {
    const missing = [
      split ? "" : "split trajectory",
      oracle ? "" : "momentum-equation reference",
      harmonic ? "" : "harmonic-oscillator reference",
    ]
      .filter((m) => m !== "")
      .join(", ");
    throw new FigureError(`missing input: ${missing}`);
  }
  return { split, oracle, harmonic };
}

export function render(spec: FigureSpec, tables: Table[]): string {
  const { split, oracle, harmonic } = assignRoles(tables);

  const width = MARGIN_L + PANEL_W + MARGIN_R;
  const height = MARGIN_T + PANEL_H + MARGIN_B;
  const doc = new SvgDocument(width, height);

  const lambda = split.column("lambda");
  const xExtent: Extent = spec.xRange ?? extentOf(lambda);
  const yExtent: Extent =
    spec.yRange ??
    extentOf(
      Float64Array.from([...split.column("pi"), ...harmonic.column("pi")]),
      0.08,
    );

  const panel = new Panel(doc, MARGIN_L, MARGIN_T, PANEL_W, PANEL_H, xExtent, yExtent, {
    xLabel: "λ",
    yLabel: "Π",
  });
  panel.drawFrame();
  panel.curve(lambda, split.column("pi"), PALETTE[0]!, DASH_SOLID, 1.6);
  panel.curve(oracle.column("lambda"), oracle.column("pi"), PALETTE[1]!, DASH_DASHED, 1.1);
  panel.curve(
    harmonic.column("lambda"),
    harmonic.column("pi"),
    "#444444",
    DASH_DOT_DASHED,
    1.3,
  );
  drawLegend(doc, MARGIN_L + PANEL_W - 214, MARGIN_T + 14, [
    { label: "split evolution", color: PALETTE[0]!, dash: DASH_SOLID },
    { label: "momentum-equation oracle", color: PALETTE[1]!, dash: DASH_DASHED },
    { label: "harmonic oscillator", color: "#444444", dash: DASH_DOT_DASHED },
  ]);

  return doc.toString();
}

export const definition: FigureDefinition = {
  name: "trajectory",
  usage: "trajectory trajectory.csv trajectory_oracle.csv trajectory_harmonic.csv -o out.svg",
  inputCount: { lo: 3, hi: 3 },
  render,
};

if (invokedDirectly(import.meta.url)) {
  process.exit(runFigure(definition, process.argv.slice(2)));
}
