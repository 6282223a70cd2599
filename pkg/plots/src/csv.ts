/**
 * Reader for the CSV dialect emitted by the relosc command line tool.
 *
 * Files look like:
 *
 *     # generator = relosc 0.1.0
 *     # subcommand = density
 *     # cfg.hamiltonian = quadratic-scalar
 *     # n = 1000
 *     eta,pi,rho
 *     -6.000000000000e+00,-6.000000000000e+00,1.234567890123e-45
 *     ...
 *
 * Leading `# key = value` lines carry run metadata, the first bare line
 * names the columns, and every following line is a row of finite floats.
 * Parse problems are reported as `path:line: message` so a shell user can
 * jump straight to the offending line.
 */

import { readFileSync } from "node:fs";

export class CsvError extends Error {
  readonly path: string;
  readonly line: number;

  constructor(path: string, line: number, message: string) {
    super(`${path}:${line}: ${message}`);
    this.name = "CsvError";
    this.path = path;
    this.line = line;
  }
}

export interface Table {
  readonly path: string;
  readonly metadata: ReadonlyMap<string, string>;
  readonly columns: readonly string[];
  readonly rows: number;
  /** Column values by name; throws CsvError naming the alternatives. */
  column(name: string): Float64Array;
  /** Metadata string by key; throws CsvError if the key is absent. */
  meta(key: string): string;
  /** Metadata value parsed as a finite number. */
  metaNumber(key: string): number;
}

const METADATA_SEPARATOR = " = ";

function parseFloatStrict(field: string): number {
  if (field.trim() === "") {
    return NaN;
  }
  return Number(field);
}

export function readTable(path: string): Table {
  const raw = readFileSync(path, "utf8");
  const lines = raw.split("\n");
  // the writer ends the file with a newline, which split turns into a
  // trailing empty string
  if (lines.length > 0 && lines[lines.length - 1] === "") {
    lines.pop();
  }

  const metadata = new Map<string, string>();
  let cursor = 0;
  while (cursor < lines.length && lines[cursor]!.startsWith("#")) {
    const line = lines[cursor]!;
    const body = line.replace(/^#\s?/, "");
    const split = body.indexOf(METADATA_SEPARATOR);
    if (split <= 0) {
      throw new CsvError(path, cursor + 1, `metadata line without "key = value": ${line}`);
    }
    metadata.set(body.slice(0, split), body.slice(split + METADATA_SEPARATOR.length));
    cursor += 1;
  }

  if (cursor >= lines.length) {
    throw new CsvError(path, lines.length + 1, "missing column header line");
  }
  const headerLine = cursor + 1;
  const columns = lines[cursor]!.split(",").map((c) => c.trim());
  if (columns.some((c) => c === "")) {
    throw new CsvError(path, headerLine, `empty column name in header: ${lines[cursor]}`);
  }
  cursor += 1;

  const rows = lines.length - cursor;
  const data = columns.map(() => new Float64Array(rows));
  for (let r = 0; r < rows; r += 1) {
    const lineNumber = cursor + r + 1;
    const fields = lines[cursor + r]!.split(",");
    if (fields.length !== columns.length) {
      throw new CsvError(
        path,
        lineNumber,
        `expected ${columns.length} fields, got ${fields.length}`,
      );
    }
    for (let c = 0; c < columns.length; c += 1) {
      const value = parseFloatStrict(fields[c]!);
      if (!Number.isFinite(value)) {
        throw new CsvError(
          path,
          lineNumber,
          `field "${fields[c]}" in column ${columns[c]} is not a finite number`,
        );
      }
      data[c]![r] = value;
    }
  }

  return {
    path,
    metadata,
    columns,
    rows,
    column(name: string): Float64Array {
      const index = columns.indexOf(name);
      if (index < 0) {
        throw new CsvError(path, headerLine, `no column "${name}" (have ${columns.join(", ")})`);
      }
      return data[index]!;
    },
    meta(key: string): string {
      const value = metadata.get(key);
      if (value === undefined) {
        throw new CsvError(path, 1, `missing metadata key "${key}"`);
      }
      return value;
    },
    metaNumber(key: string): number {
      const value = Number(this.meta(key));
      if (!Number.isFinite(value)) {
        throw new CsvError(path, 1, `metadata key "${key}" is not numeric: ${this.meta(key)}`);
      }
      return value;
    },
  };
}

/**
 * Check that a table carries the expected header kind: the listed columns,
 * and optionally a `subcommand` metadata value among the allowed ones.
 */
export function expectTable(
  table: Table,
  columns: readonly string[],
  subcommands?: readonly string[],
): void {
  const have = table.columns.join(",");
  const want = columns.join(",");
  if (have !== want) {
    throw new CsvError(table.path, 1, `expected columns ${want}, got ${have}`);
  }
  if (subcommands) {
    const sub = table.meta("subcommand");
    if (!subcommands.includes(sub)) {
      throw new CsvError(
        table.path,
        1,
        `expected a ${subcommands.join(" or ")} output, got subcommand = ${sub}`,
      );
    }
  }
}
