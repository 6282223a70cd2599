/** Shared fixture builders: write CSV files in the relosc output dialect. */

import { mkdtempSync, writeFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

export function makeTempDir(prefix: string): { dir: string; cleanup: () => void } {
  const dir = mkdtempSync(join(tmpdir(), prefix));
  return { dir, cleanup: () => rmSync(dir, { recursive: true, force: true }) };
}

function formatValue(value: string | number | boolean): string {
  if (typeof value === "number" && !Number.isInteger(value)) {
    return value.toExponential(12);
  }
  return String(value);
}

export function writeCsv(
  path: string,
  metadata: Record<string, string | number | boolean>,
  columns: string[],
  rows: number[][],
): string {
  let text = "";
  for (const [key, value] of Object.entries(metadata)) {
    text += `# ${key} = ${formatValue(value)}\n`;
  }
  text += `${columns.join(",")}\n`;
  for (const row of rows) {
    text += `${row.map((v) => v.toExponential(12)).join(",")}\n`;
  }
  writeFileSync(path, text);
  return path;
}

export const BASE_META = {
  generator: "relosc 0.1.0",
  subcommand: "density",
  "cfg.hamiltonian": "quadratic-scalar",
} as const;

/** Snapshot table over a square grid, position-major row order. */
export function writeSnapshot(
  path: string,
  n: number,
  etas: number[],
  pis: number[],
  density: (eta: number, pi: number) => number,
  meta: Record<string, string | number | boolean> = {},
): string {
  const rows: number[][] = [];
  for (const eta of etas) {
    for (const pi of pis) {
      rows.push([eta, pi, density(eta, pi)]);
    }
  }
  return writeCsv(
    path,
    { ...BASE_META, n, lambda: n * 5e-3, ...meta },
    ["eta", "pi", "rho"],
    rows,
  );
}

export function writeMarginal(
  path: string,
  axis: "eta" | "pi",
  n: number,
  coords: number[],
  values: number[],
  meta: Record<string, string | number | boolean> = {},
): string {
  return writeCsv(
    path,
    { ...BASE_META, n, lambda: n * 5e-3, axis, ...meta },
    ["coord", "value"],
    coords.map((c, i) => [c, values[i]!]),
  );
}

export function writeTrajectory(
  path: string,
  reference: string | undefined,
  lambdas: number[],
  pis: number[],
): string {
  const meta: Record<string, string | number | boolean> = {
    generator: "relosc 0.1.0",
    subcommand: "trajectory",
    "cfg.hamiltonian": "quadratic-scalar",
  };
  if (reference !== undefined) {
    meta.reference = reference;
  }
  return writeCsv(
    path,
    meta,
    ["lambda", "eta", "pi", "energy"],
    lambdas.map((lam, i) => [lam, 0.9 * Math.sin(lam), pis[i]!, 1.405]),
  );
}

export function writeCurrent(
  path: string,
  n: number,
  etas: number[],
  s: number[],
  flux: number[],
): string {
  return writeCsv(
    path,
    { ...BASE_META, subcommand: "current", n, lambda: n * 5e-3 },
    ["eta", "S", "I"],
    etas.map((eta, i) => [eta, s[i]!, flux[i]!]),
  );
}

export function linspace(lo: number, hi: number, count: number): number[] {
  const out: number[] = [];
  for (let i = 0; i < count; i += 1) {
    out.push(lo + ((hi - lo) * i) / (count - 1));
  }
  return out;
}
