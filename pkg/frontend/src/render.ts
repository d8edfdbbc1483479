import { existsSync, mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { basename, dirname, join } from "node:path";

import { CsvError, columnIndex, numericColumn, readCsv } from "./csv.js";
import { CANNED, FigureSpec, TOPOLOGY_NAME, cannedSpec } from "./figures.js";
import { extent, linearScale } from "./scale.js";
import { HEIGHT, MARGIN, PALETTE, SeriesStyle, WIDTH, axes, escapeXml, legend, polyline, svgDocument } from "./svg.js";

export class RenderError extends Error {}

function seriesStyle(column: string, index: number): SeriesStyle {
  // greedy-scheme series are dashed so the two schemes read apart at a glance
  return { color: PALETTE[index % PALETTE.length], dashed: column.includes("nnr") };
}

/** Render a line chart per the spec and write it; returns the SVG text. */
export function render(spec: FigureSpec): string {
  if (spec.yColumns.length === 0) {
    throw new RenderError(`figure ${spec.figureName}: empty series list`);
  }
  const table = readCsv(spec.csvPath);
  if (table.rows.length === 0) {
    throw new RenderError(`figure ${spec.figureName}: CSV has no data rows`);
  }
  const xs = numericColumn(table, spec.xColumn);
  const columns = spec.yColumns.map((s) => numericColumn(table, s.column));

  const finiteY = columns.flat().filter(Number.isFinite);
  if (finiteY.length === 0) {
    throw new RenderError(`figure ${spec.figureName}: no finite values in any series`);
  }
  const [xLo, xHi] = extent(xs);
  let [yLo, yHi] = extent(finiteY);
  if (spec.yIncludeZero) yLo = Math.min(0, yLo);
  if (yLo === yHi) {
    yLo -= 0.5;
    yHi += 0.5;
  }
  const x = linearScale([xLo, xHi], [MARGIN.left, WIDTH - MARGIN.right]);
  const y = linearScale([yLo, yHi], [HEIGHT - MARGIN.bottom, MARGIN.top]);

  let body = axes(x, y, spec.xLabel, spec.yLabel);
  body += `<g class="plot">\n`;
  spec.yColumns.forEach((s, i) => {
    const pts: Array<[number, number]> = [];
    xs.forEach((xv, row) => {
      const yv = columns[i][row];
      if (Number.isFinite(xv) && Number.isFinite(yv)) {
        pts.push([x.map(xv), y.map(yv)]);
      }
    });
    if (pts.length === 0) {
      throw new RenderError(`figure ${spec.figureName}: series '${s.column}' has no finite points`);
    }
    body += polyline(pts, seriesStyle(s.column, i));
    for (const [px, py] of pts) {
      body += `<circle cx="${px}" cy="${py}" r="2.4" fill="${seriesStyle(s.column, i).color}"/>`;
    }
    body += "\n";
  });
  body += "</g>\n";
  body += legend(spec.yColumns.map((s, i) => ({ label: s.label, style: seriesStyle(s.column, i) })));
  body += `<text x="${MARGIN.left}" y="14" fill="#111" font-weight="bold">${escapeXml(spec.figureName)}</text>\n`;

  const svg = svgDocument(body);
  writeFileSync(spec.outPath, svg);
  return svg;
}

const SECTOR_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#bcbd22"];

interface TopologyNode {
  kind: string;
  label: string;
  x: number;
  y: number;
  sector: string;
}

/** Render the deployment scatter with backbone edges; returns the SVG text. */
export function renderTopology(csvPath: string, outPath: string, edgesPath?: string): string {
  const table = readCsv(csvPath);
  for (const col of ["kind", "label", "x", "y", "sector"]) {
    columnIndex(table, col);
  }
  if (table.rows.length === 0) {
    throw new RenderError("topology CSV has no data rows");
  }
  const ik = columnIndex(table, "kind");
  const il = columnIndex(table, "label");
  const ix = columnIndex(table, "x");
  const iy = columnIndex(table, "y");
  const is = columnIndex(table, "sector");
  const nodes: TopologyNode[] = table.rows.map((row) => ({
    kind: row[ik],
    label: row[il],
    x: Number(row[ix]),
    y: Number(row[iy]),
    sector: row[is],
  }));
  for (const n of nodes) {
    if (!Number.isFinite(n.x) || !Number.isFinite(n.y)) {
      throw new RenderError(`node '${n.label}' has non-numeric coordinates`);
    }
  }

  const defaultEdges = join(dirname(csvPath), basename(csvPath).replace(/\.csv$/, "") + "_edges.csv");
  const edgeFile = edgesPath ?? (existsSync(defaultEdges) ? defaultEdges : undefined);
  const edges: Array<[string, string, string]> = [];
  if (edgeFile) {
    for (const line of readFileSync(edgeFile, "utf8").split(/\r?\n/)) {
      const text = line.trim();
      if (!text) continue;
      const parts = text.split(",");
      if (parts.length !== 3) {
        throw new CsvError(`edge line needs label,label,class: ${text}`);
      }
      edges.push([parts[0], parts[1], parts[2]]);
    }
  }

  const [xLo, xHi] = extent(nodes.map((n) => n.x));
  const [yLo, yHi] = extent(nodes.map((n) => n.y));
  const pad = 0.05 * Math.max(xHi - xLo, yHi - yLo, 1);
  const side = Math.min(WIDTH - MARGIN.left - MARGIN.right, HEIGHT - MARGIN.top - MARGIN.bottom);
  const x = linearScale([xLo - pad, xHi + pad], [MARGIN.left, MARGIN.left + side]);
  const y = linearScale([yLo - pad, yHi + pad], [MARGIN.top + side, MARGIN.top]);

  const sn = new Map<string, TopologyNode>();
  for (const n of nodes) {
    if (n.kind === "SN") sn.set(n.label, n);
  }

  let body = `<g class="edges">\n`;
  for (const [a, b, cls] of edges) {
    const na = sn.get(a);
    const nb = sn.get(b);
    if (!na || !nb) {
      throw new RenderError(`edge references unknown super node: ${a},${b}`);
    }
    const dash = cls === "inter" ? ' stroke-dasharray="5 4"' : "";
    body += `<line class="edge ${cls}" x1="${x.map(na.x)}" y1="${y.map(na.y)}" x2="${x.map(nb.x)}" y2="${y.map(nb.y)}" stroke="#666" stroke-width="1"${dash}/>\n`;
  }
  body += "</g>\n";

  for (const kind of ["RN", "SN", "SRN", "DRN"]) {
    const group = nodes.filter((n) => n.kind === kind);
    body += `<g class="kind-${kind.toLowerCase()}">\n`;
    for (const n of group) {
      const px = x.map(n.x);
      const py = y.map(n.y);
      if (kind === "RN") {
        body += `<circle cx="${px}" cy="${py}" r="1.6" fill="#b0b0b0"/>\n`;
      } else if (kind === "SN") {
        const sector = Number(n.sector) || 0;
        const color = SECTOR_PALETTE[(sector - 1 + SECTOR_PALETTE.length) % SECTOR_PALETTE.length];
        body += `<circle cx="${px}" cy="${py}" r="6" fill="${color}" stroke="#222"/>`;
        body += `<text x="${px + 8}" y="${py - 6}" font-size="10" fill="#222">${escapeXml(n.label)}</text>\n`;
      } else {
        body += `<rect x="${px - 5}" y="${py - 5}" width="10" height="10" fill="#000"/>`;
        body += `<text x="${px + 8}" y="${py + 4}" font-size="11" fill="#000">${escapeXml(kind)}</text>\n`;
      }
    }
    body += "</g>\n";
  }
  body += `<text x="${MARGIN.left}" y="14" fill="#111" font-weight="bold">topology</text>\n`;

  const svg = svgDocument(body);
  writeFileSync(outPath, svg);
  return svg;
}

export function renderByName(name: string, csvPath: string, outPath: string): string {
  if (name === TOPOLOGY_NAME) {
    return renderTopology(csvPath, outPath);
  }
  return render(cannedSpec(name, csvPath, outPath));
}

/** Render every canned CSV found in a directory; returns the written paths. */
export function renderAll(dir: string, outDir?: string): string[] {
  const target = outDir ?? dir;
  mkdirSync(target, { recursive: true });
  const written: string[] = [];
  for (const name of [...Object.keys(CANNED), TOPOLOGY_NAME]) {
    const csvPath = join(dir, `${name}.csv`);
    if (!existsSync(csvPath)) continue;
    const outPath = join(target, `${name}.svg`);
    renderByName(name, csvPath, outPath);
    written.push(outPath);
  }
  if (written.length === 0) {
    throw new RenderError(`no canned CSVs found in ${dir}`);
  }
  return written;
}
