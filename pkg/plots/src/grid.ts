/**
 * Reconstruction of the 2D phase-space grid from a flattened snapshot
 * table.  Snapshot rows are written position-major: all momentum nodes of
 * the first position line, then the next position line, and so on.
 */

import { CsvError, expectTable, type Table } from "./csv.js";

export interface SnapshotGrid {
  /** Position-axis node values, ascending, length nEta. */
  eta: Float64Array;
  /** Momentum-axis node values, ascending, length nPi. */
  pi: Float64Array;
  /** Density value at (eta[i], pi[j]). */
  value(i: number, j: number): number;
  nEta: number;
  nPi: number;
  maxValue: number;
}

export function snapshotGrid(table: Table): SnapshotGrid {
  expectTable(table, ["eta", "pi", "rho"], ["density"]);
  const eta = table.column("eta");
  const pi = table.column("pi");
  const rho = table.column("rho");

  // momentum-line length = run length of the leading position value
  let nPi = 1;
  while (nPi < eta.length && eta[nPi] === eta[0]) {
    nPi += 1;
  }
  const nEta = table.rows / nPi;
  if (!Number.isInteger(nEta) || nEta < 2 || nPi < 2) {
    throw new CsvError(
      table.path,
      1,
      `rows do not form a grid: ${table.rows} rows with momentum-line length ${nPi}`,
    );
  }

  const etaAxis = new Float64Array(nEta);
  for (let i = 0; i < nEta; i += 1) {
    etaAxis[i] = eta[i * nPi]!;
  }
  const piAxis = pi.slice(0, nPi);

  let maxValue = 0;
  for (let k = 0; k < rho.length; k += 1) {
    if (rho[k]! > maxValue) {
      maxValue = rho[k]!;
    }
  }

  return {
    eta: etaAxis,
    pi: piAxis,
    value: (i, j) => rho[i * nPi + j]!,
    nEta,
    nPi,
    maxValue,
  };
}
