/**
 * Minimal deterministic SVG emitter.
 *
 * The renderers build figures out of a handful of primitives (rects, paths,
 * polylines, text) so that identical inputs always produce byte-identical
 * files: no timestamps, no random ids, coordinates rounded to a fixed
 * precision before formatting.
 */

import { scaleLinear, type ScaleLinear } from "d3-scale";

export const FONT_FAMILY = "Helvetica, Arial, sans-serif";
export const FONT_SIZE = 12;

/** Qualitative palette; index 0 is the "blue continuous line" of the overlays. */
export const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"] as const;

export const DASH_SOLID = "";
export const DASH_DASHED = "6 4";
export const DASH_DOT_DASHED = "8 3 2 3";

export interface Attrs {
  [name: string]: string | number | undefined;
}

/** Round to 2 decimal pixels and drop the sign of -0. */
export function px(value: number): string {
  const rounded = Math.round(value * 100) / 100;
  return String(rounded === 0 ? 0 : rounded);
}

export function escapeXml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

function renderAttrs(attrs: Attrs): string {
  let out = "";
  for (const [name, value] of Object.entries(attrs)) {
    if (value === undefined || value === "") {
      continue;
    }
    const text = typeof value === "number" ? px(value) : escapeXml(value);
    out += ` ${name}="${text}"`;
  }
  return out;
}

export class SvgDocument {
  readonly width: number;
  readonly height: number;
  private readonly defs: string[] = [];
  private readonly body: string[] = [];
  private clipCounter = 0;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.rect(0, 0, width, height, { fill: "#ffffff" });
  }

  element(tag: string, attrs: Attrs): void {
    this.body.push(`<${tag}${renderAttrs(attrs)}/>`);
  }

  rect(x: number, y: number, w: number, h: number, attrs: Attrs = {}): void {
    this.element("rect", { x, y, width: w, height: h, ...attrs });
  }

  line(x1: number, y1: number, x2: number, y2: number, attrs: Attrs = {}): void {
    this.element("line", { x1, y1, x2, y2, stroke: "#000000", ...attrs });
  }

  path(d: string, attrs: Attrs = {}): void {
    this.body.push(`<path d="${d}"${renderAttrs(attrs)}/>`);
  }

  text(x: number, y: number, content: string, attrs: Attrs = {}): void {
    const base: Attrs = {
      x,
      y,
      "font-family": FONT_FAMILY,
      "font-size": FONT_SIZE,
      fill: "#000000",
      ...attrs,
    };
    this.body.push(`<text${renderAttrs(base)}>${escapeXml(content)}</text>`);
  }

  openGroup(attrs: Attrs = {}): void {
    this.body.push(`<g${renderAttrs(attrs)}>`);
  }

  closeGroup(): void {
    this.body.push("</g>");
  }

  /** Register a rectangular clip and return its reference for `clip-path`. */
  clipRect(x: number, y: number, w: number, h: number): string {
    const id = `clip${this.clipCounter}`;
    this.clipCounter += 1;
    this.defs.push(
      `<clipPath id="${id}"><rect x="${px(x)}" y="${px(y)}" width="${px(w)}" height="${px(h)}"/></clipPath>`,
    );
    return `url(#${id})`;
  }

  toString(): string {
    const head =
      `<svg xmlns="http://www.w3.org/2000/svg" width="${this.width}" ` +
      `height="${this.height}" viewBox="0 0 ${this.width} ${this.height}">`;
    const defs = this.defs.length > 0 ? `<defs>${this.defs.join("")}</defs>` : "";
    return `${head}${defs}${this.body.join("")}</svg>\n`;
  }
}

export interface Extent {
  lo: number;
  hi: number;
}

export function extentOf(values: ArrayLike<number>, pad = 0): Extent {
  let lo = Infinity;
  let hi = -Infinity;
  for (let i = 0; i < values.length; i += 1) {
    const v = values[i]!;
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!(lo < hi)) {
    // degenerate (constant) data still needs a drawable span
    lo -= 0.5;
    hi += 0.5;
  }
  const span = hi - lo;
  return { lo: lo - pad * span, hi: hi + pad * span };
}

export interface PanelOptions {
  xLabel?: string;
  yLabel?: string;
  title?: string;
  /** Corner tag such as "(a)". */
  tag?: string;
}

const TICK_LENGTH = 5;

/**
 * One framed plotting area with linear axes.  `x`, `y`, `width`, `height`
 * describe the inner data rectangle; ticks and labels render outside it.
 */
export class Panel {
  readonly xScale: ScaleLinear<number, number>;
  readonly yScale: ScaleLinear<number, number>;
  private readonly clip: string;

  constructor(
    readonly doc: SvgDocument,
    readonly x: number,
    readonly y: number,
    readonly width: number,
    readonly height: number,
    xExtent: Extent,
    yExtent: Extent,
    readonly options: PanelOptions = {},
  ) {
    this.xScale = scaleLinear([xExtent.lo, xExtent.hi], [x, x + width]);
    this.yScale = scaleLinear([yExtent.lo, yExtent.hi], [y + height, y]);
    this.clip = doc.clipRect(x, y, width, height);
  }

  sx(value: number): number {
    return this.xScale(value);
  }

  sy(value: number): number {
    return this.yScale(value);
  }

  /** Frame, ticks, tick labels, axis labels, title and corner tag. */
  drawFrame(): void {
    const { doc, x, y, width, height, options } = this;
    doc.rect(x, y, width, height, { fill: "none", stroke: "#000000" });

    const xTicks = this.xScale.ticks(6);
    const xFormat = this.xScale.tickFormat(6);
    for (const t of xTicks) {
      const tx = this.sx(t);
      doc.line(tx, y + height, tx, y + height + TICK_LENGTH);
      doc.text(tx, y + height + TICK_LENGTH + FONT_SIZE, xFormat(t), {
        "text-anchor": "middle",
      });
    }

    const yTicks = this.yScale.ticks(5);
    const yFormat = this.yScale.tickFormat(5);
    for (const t of yTicks) {
      const ty = this.sy(t);
      doc.line(x - TICK_LENGTH, ty, x, ty);
      doc.text(x - TICK_LENGTH - 3, ty + 4, yFormat(t), { "text-anchor": "end" });
    }

    if (options.xLabel) {
      doc.text(x + width / 2, y + height + 2 * FONT_SIZE + TICK_LENGTH + 4, options.xLabel, {
        "text-anchor": "middle",
        "font-style": "italic",
      });
    }
    if (options.yLabel) {
      const lx = x - TICK_LENGTH - 38;
      const ly = y + height / 2;
      doc.text(lx, ly, options.yLabel, {
        "text-anchor": "middle",
        "font-style": "italic",
        transform: `rotate(-90 ${px(lx)} ${px(ly)})`,
      });
    }
    if (options.title) {
      doc.text(x + width / 2, y - 8, options.title, { "text-anchor": "middle" });
    }
    if (options.tag) {
      doc.text(x + 8, y + FONT_SIZE + 6, options.tag, {
        "font-weight": "bold",
        class: "panel-tag",
      });
    }
  }

  /** Polyline through data points, clipped to the panel. */
  curve(
    xs: ArrayLike<number>,
    ys: ArrayLike<number>,
    stroke: string,
    dash: string = DASH_SOLID,
    width = 1.5,
  ): void {
    let d = "";
    for (let i = 0; i < xs.length; i += 1) {
      d += `${i === 0 ? "M" : "L"}${px(this.sx(xs[i]!))} ${px(this.sy(ys[i]!))}`;
    }
    this.doc.path(d, {
      fill: "none",
      stroke,
      "stroke-width": width,
      "stroke-dasharray": dash,
      "clip-path": this.clip,
      class: "curve",
    });
  }

  /** Closed path from rings of data-space points, clipped to the panel. */
  rings(ringList: ArrayLike<ArrayLike<readonly [number, number]>>, attrs: Attrs): void {
    let d = "";
    for (let r = 0; r < ringList.length; r += 1) {
      const ring = ringList[r]!;
      for (let i = 0; i < ring.length; i += 1) {
        const [dx, dy] = ring[i]!;
        d += `${i === 0 ? "M" : "L"}${px(this.sx(dx))} ${px(this.sy(dy))}`;
      }
      d += "Z";
    }
    if (d !== "") {
      this.doc.path(d, { fill: "none", "clip-path": this.clip, class: "contour", ...attrs });
    }
  }
}

export interface LegendEntry {
  label: string;
  color: string;
  dash?: string;
}

/** Small list of line samples with labels, anchored at (x, y) top-left. */
export function drawLegend(doc: SvgDocument, x: number, y: number, entries: LegendEntry[]): void {
  const lineLength = 26;
  const rowHeight = FONT_SIZE + 5;
  entries.forEach((entry, i) => {
    const cy = y + i * rowHeight;
    doc.line(x, cy, x + lineLength, cy, {
      stroke: entry.color,
      "stroke-width": 1.5,
      "stroke-dasharray": entry.dash ?? DASH_SOLID,
      class: "legend-line",
    });
    doc.text(x + lineLength + 6, cy + 4, entry.label, { class: "legend-label" });
  });
}
