/**
 * Shared command-line scaffold for the figure scripts.
 *
 * Every script is invoked the same way:
 *
 *     node dist/<figure>.js input.csv [more.csv ...] -o out.svg \
 *         [--xrange lo:hi] [--yrange lo:hi]
 *
 * Exit codes: 0 success, 1 missing/malformed input or rendering failure
 * (nothing is written), 2 usage error.
 */

import { existsSync, writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";

import { CsvError, readTable, type Table } from "./csv.js";
import type { Extent } from "./svg.js";

/** True when the module at `moduleUrl` is the script node was asked to run. */
export function invokedDirectly(moduleUrl: string): boolean {
  const script = process.argv[1];
  return script !== undefined && moduleUrl === pathToFileURL(script).href;
}

export interface FigureSpec {
  inputs: string[];
  output: string;
  xRange?: Extent;
  yRange?: Extent;
}

export class UsageError extends Error {}

/** Raised by renderers for inputs that parse but do not fit the figure. */
export class FigureError extends Error {}

function parseRange(flag: string, value: string | undefined): Extent {
  if (value === undefined) {
    throw new UsageError(`${flag} needs a value of the form lo:hi`);
  }
  const parts = value.split(":");
  const lo = Number(parts[0]);
  const hi = Number(parts[1]);
  if (parts.length !== 2 || !Number.isFinite(lo) || !Number.isFinite(hi) || lo >= hi) {
    throw new UsageError(`${flag} expects lo:hi with lo < hi, got "${value}"`);
  }
  return { lo, hi };
}

export function parseFigureArgs(argv: string[], allowRanges = true): FigureSpec {
  const inputs: string[] = [];
  let output: string | undefined;
  let xRange: Extent | undefined;
  let yRange: Extent | undefined;

  for (let i = 0; i < argv.length; i += 1) {
    const arg = argv[i]!;
    if (arg === "-o" || arg === "--output") {
      if (output !== undefined) {
        throw new UsageError("duplicate -o");
      }
      output = argv[i + 1];
      if (output === undefined) {
        throw new UsageError("-o needs a file name");
      }
      i += 1;
    } else if (arg === "--xrange" && allowRanges) {
      xRange = parseRange("--xrange", argv[i + 1]);
      i += 1;
    } else if (arg === "--yrange" && allowRanges) {
      yRange = parseRange("--yrange", argv[i + 1]);
      i += 1;
    } else if (arg.startsWith("-") && arg !== "-") {
      throw new UsageError(`unknown option ${arg}`);
    } else {
      inputs.push(arg);
    }
  }

  if (output === undefined) {
    throw new UsageError("missing -o OUTPUT");
  }
  if (inputs.length === 0) {
    throw new UsageError("no input CSV files given");
  }
  return { inputs, output, xRange, yRange };
}

export interface FigureDefinition {
  name: string;
  usage: string;
  /** Inclusive bounds on the input file count; hi = Infinity for open-ended. */
  inputCount: { lo: number; hi: number };
  allowRanges?: boolean;
  render(spec: FigureSpec, tables: Table[]): string;
}

/**
 * Run a figure script against raw argv and return the process exit code.
 * All failure paths leave the output file unwritten.
 */
export function runFigure(definition: FigureDefinition, argv: string[]): number {
  let spec: FigureSpec;
  try {
    spec = parseFigureArgs(argv, definition.allowRanges ?? true);
  } catch (error) {
    if (error instanceof UsageError) {
      process.stderr.write(`${definition.name}: ${error.message}\n`);
      process.stderr.write(`usage: ${definition.usage}\n`);
      return 2;
    }
    throw error;
  }

  const { lo, hi } = definition.inputCount;
  if (spec.inputs.length < lo || spec.inputs.length > hi) {
    const want = lo === hi ? `${lo}` : hi === Infinity ? `at least ${lo}` : `${lo}..${hi}`;
    process.stderr.write(
      `${definition.name}: expected ${want} input file(s), got ${spec.inputs.length}\n`,
    );
    process.stderr.write(`usage: ${definition.usage}\n`);
    return 2;
  }

  for (const input of spec.inputs) {
    if (!existsSync(input)) {
      process.stderr.write(`${definition.name}: input file not found: ${input}\n`);
      return 1;
    }
  }

  let svg: string;
  try {
    const tables = spec.inputs.map((path) => readTable(path));
    svg = definition.render(spec, tables);
  } catch (error) {
    if (error instanceof CsvError || error instanceof FigureError) {
      process.stderr.write(`${definition.name}: ${error.message}\n`);
      return 1;
    }
    throw error;
  }

  writeFileSync(spec.output, svg);
  return 0;
}
