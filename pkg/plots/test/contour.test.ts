import { join } from "node:path";

import { afterAll, describe, expect, test } from "vitest";

import { readTable, CsvError } from "../src/csv.js";
import { contourRings } from "../src/contours.js";
import { snapshotGrid, type SnapshotGrid } from "../src/grid.js";
import { linspace, makeTempDir, writeSnapshot, writeCsv } from "./helpers.js";

const { dir, cleanup } = makeTempDir("plots-grid-");
afterAll(cleanup);

describe("snapshotGrid", () => {
  test("rebuilds axes and values from position-major rows", () => {
    const etas = [-1, 0, 1, 2];
    const pis = [-0.5, 0.5, 1.5];
    const path = writeSnapshot(join(dir, "snap.csv"), 0, etas, pis, (e, p) => e + 10 * p);
    const grid = snapshotGrid(readTable(path));
    expect(grid.nEta).toBe(4);
    expect(grid.nPi).toBe(3);
    expect([...grid.eta]).toEqual(etas);
    expect([...grid.pi]).toEqual(pis);
    expect(grid.value(3, 0)).toBeCloseTo(-3, 12);
    expect(grid.value(0, 2)).toBeCloseTo(14, 12);
    expect(grid.maxValue).toBeCloseTo(17, 12);
  });

  test("rejects row counts that do not factor into a grid", () => {
    const path = writeCsv(
      join(dir, "ragged.csv"),
      { subcommand: "density" },
      ["eta", "pi", "rho"],
      [
        [0, 0, 1],
        [0, 1, 1],
        [1, 0, 1],
      ],
    );
    expect(() => snapshotGrid(readTable(path))).toThrowError(CsvError);
    expect(() => snapshotGrid(readTable(path))).toThrowError(/do not form a grid/);
  });

  test("rejects tables with the wrong columns", () => {
    const path = writeCsv(join(dir, "cols.csv"), { subcommand: "density" }, ["eta", "S", "I"], [
      [0, 1, 0],
    ]);
    expect(() => snapshotGrid(readTable(path))).toThrowError(/expected columns eta,pi,rho/);
  });
});

describe("contourRings", () => {
  function gaussianGrid(half: number, count: number): SnapshotGrid {
    const axis = Float64Array.from(linspace(-half, half, count));
    return {
      eta: axis,
      pi: axis,
      nEta: count,
      nPi: count,
      maxValue: 1,
      value: (i, j) => Math.exp(-(axis[i]! ** 2 + axis[j]! ** 2) / 2),
    };
  }

  test("level sets of a round Gaussian are circles of the analytic radius", () => {
    const grid = gaussianGrid(4, 161);
    const cell = 8 / 160;
    for (const level of [0.1, 0.5, 0.9]) {
      const expected = Math.sqrt(-2 * Math.log(level));
      const bands = contourRings(grid, [level]);
      expect(bands).toHaveLength(1);
      expect(bands[0]!.rings.length).toBeGreaterThan(0);
      for (const ring of bands[0]!.rings) {
        for (const [x, y] of ring) {
          // linear interpolation on a smooth field: within a cell diagonal
          expect(Math.hypot(x, y)).toBeCloseTo(expected, Math.log10(1 / cell));
          expect(Math.abs(Math.hypot(x, y) - expected)).toBeLessThan(cell);
        }
      }
    }
  });

  test("levels above the maximum produce empty ring sets", () => {
    const grid = gaussianGrid(4, 41);
    const bands = contourRings(grid, [2.0]);
    expect(bands[0]?.rings ?? []).toHaveLength(0);
  });

  test("an asymmetric field is mapped with the right orientation", () => {
    // density concentrated at eta = +2, pi = -1: the 0.5 level set should
    // surround that point, not its mirror image
    const axis = Float64Array.from(linspace(-4, 4, 81));
    const grid: SnapshotGrid = {
      eta: axis,
      pi: axis,
      nEta: 81,
      nPi: 81,
      maxValue: 1,
      value: (i, j) => Math.exp(-((axis[i]! - 2) ** 2 + (axis[j]! + 1) ** 2) / 0.5),
    };
    const bands = contourRings(grid, [0.5]);
    const points = bands[0]!.rings.flat();
    expect(points.length).toBeGreaterThan(0);
    const meanEta = points.reduce((acc, [x]) => acc + x, 0) / points.length;
    const meanPi = points.reduce((acc, [, y]) => acc + y, 0) / points.length;
    expect(meanEta).toBeCloseTo(2, 1);
    expect(meanPi).toBeCloseTo(-1, 1);
  });
});
