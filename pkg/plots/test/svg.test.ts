import { describe, expect, test } from "vitest";

import {
  drawLegend,
  escapeXml,
  extentOf,
  Panel,
  px,
  SvgDocument,
  DASH_DOT_DASHED,
} from "../src/svg.js";

describe("px", () => {
  test("rounds to two decimals", () => {
    expect(px(1.004999)).toBe("1");
    expect(px(1.006)).toBe("1.01");
    expect(px(-3.14159)).toBe("-3.14");
  });

  test("never prints negative zero", () => {
    expect(px(-0.001)).toBe("0");
    expect(px(-0)).toBe("0");
  });
});

describe("escapeXml", () => {
  test("escapes markup characters", () => {
    expect(escapeXml('a < b & "c" > d')).toBe("a &lt; b &amp; &quot;c&quot; &gt; d");
  });
});

describe("extentOf", () => {
  test("finds the data range", () => {
    expect(extentOf([3, -1, 2])).toEqual({ lo: -1, hi: 3 });
  });

  test("pads symmetrically by a fraction of the span", () => {
    const e = extentOf([0, 10], 0.1);
    expect(e.lo).toBeCloseTo(-1, 12);
    expect(e.hi).toBeCloseTo(11, 12);
  });

  test("widens a constant series so it stays drawable", () => {
    const e = extentOf([2, 2, 2]);
    expect(e.lo).toBeLessThan(2);
    expect(e.hi).toBeGreaterThan(2);
  });
});

describe("SvgDocument", () => {
  test("identical build sequences give identical output", () => {
    const build = () => {
      const doc = new SvgDocument(200, 100);
      doc.line(0, 0, 200, 100, { stroke: "#ff0000" });
      doc.text(10, 20, "label");
      return doc.toString();
    };
    expect(build()).toBe(build());
  });

  test("starts with a white background and valid root element", () => {
    const doc = new SvgDocument(320, 240);
    const svg = doc.toString();
    expect(svg.startsWith('<svg xmlns="http://www.w3.org/2000/svg"')).toBe(true);
    expect(svg).toContain('viewBox="0 0 320 240"');
    expect(svg).toContain('fill="#ffffff"');
    expect(svg.endsWith("</svg>\n")).toBe(true);
  });

  test("escapes text content", () => {
    const doc = new SvgDocument(100, 100);
    doc.text(0, 0, "S < I & more");
    expect(doc.toString()).toContain("S &lt; I &amp; more");
  });

  test("clip ids count up from zero", () => {
    const doc = new SvgDocument(100, 100);
    expect(doc.clipRect(0, 0, 10, 10)).toBe("url(#clip0)");
    expect(doc.clipRect(0, 0, 20, 20)).toBe("url(#clip1)");
    expect(doc.toString()).toContain('<clipPath id="clip1">');
  });
});

describe("Panel", () => {
  function makePanel(doc: SvgDocument): Panel {
    return new Panel(doc, 50, 20, 100, 80, { lo: -2, hi: 2 }, { lo: 0, hi: 1 });
  }

  test("maps data corners onto the pixel frame", () => {
    const panel = makePanel(new SvgDocument(200, 150));
    expect(panel.sx(-2)).toBeCloseTo(50, 10);
    expect(panel.sx(2)).toBeCloseTo(150, 10);
    // y axis points up in data space, down in pixels
    expect(panel.sy(0)).toBeCloseTo(100, 10);
    expect(panel.sy(1)).toBeCloseTo(20, 10);
  });

  test("frame draws ticks and the corner tag", () => {
    const doc = new SvgDocument(200, 150);
    const panel = new Panel(doc, 50, 20, 100, 80, { lo: -2, hi: 2 }, { lo: 0, hi: 1 }, {
      xLabel: "x",
      yLabel: "y",
      tag: "(a)",
      title: "n = 7",
    });
    panel.drawFrame();
    const svg = doc.toString();
    expect(svg).toContain('class="panel-tag"');
    expect(svg).toContain(">(a)</text>");
    expect(svg).toContain(">n = 7</text>");
    expect(svg).toContain("rotate(-90");
  });

  test("curves are clipped to the panel", () => {
    const doc = new SvgDocument(200, 150);
    const panel = makePanel(doc);
    panel.curve([-10, 10], [0.5, 0.5], "#123456");
    const svg = doc.toString();
    expect(svg).toContain('clip-path="url(#clip0)"');
    expect(svg).toContain('stroke="#123456"');
  });
});

describe("drawLegend", () => {
  test("renders one sample line and label per entry", () => {
    const doc = new SvgDocument(300, 100);
    drawLegend(doc, 10, 10, [
      { label: "split evolution", color: "#1f77b4" },
      { label: "harmonic oscillator", color: "#444444", dash: DASH_DOT_DASHED },
    ]);
    const svg = doc.toString();
    expect(svg.match(/class="legend-line"/g)).toHaveLength(2);
    expect(svg).toContain(">split evolution</text>");
    expect(svg).toContain(`stroke-dasharray="${DASH_DOT_DASHED}"`);
  });
});
