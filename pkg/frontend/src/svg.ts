import { Scale, formatTick, ticks } from "./scale.js";

export const WIDTH = 720;
export const HEIGHT = 480;
export const MARGIN = { top: 24, right: 180, bottom: 52, left: 72 };

export const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#7f7f7f",
  "#bcbd22",
  "#e377c2",
];

export function escapeXml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

export function svgDocument(body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
    `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif" font-size="12">\n` +
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>\n` +
    body +
    "</svg>\n"
  );
}

export function axes(x: Scale, y: Scale, xLabel: string, yLabel: string): string {
  const [x0, x1] = x.range;
  const [y0, y1] = y.range; // y0 is the bottom pixel (larger value)
  let out = `<g class="axes" stroke="#333" fill="none">\n`;
  out += `<line x1="${x0}" y1="${y0}" x2="${x1}" y2="${y0}"/>\n`;
  out += `<line x1="${x0}" y1="${y0}" x2="${x0}" y2="${y1}"/>\n`;
  out += "</g>\n";
  out += `<g class="ticks" fill="#333" stroke="none">\n`;
  for (const t of ticks(x.domain[0], x.domain[1])) {
    const px = x.map(t);
    out += `<line x1="${px}" y1="${y0}" x2="${px}" y2="${y0 + 5}" stroke="#333"/>`;
    out += `<text x="${px}" y="${y0 + 18}" text-anchor="middle">${formatTick(t)}</text>\n`;
  }
  for (const t of ticks(y.domain[0], y.domain[1])) {
    const py = y.map(t);
    out += `<line x1="${x0 - 5}" y1="${py}" x2="${x0}" y2="${py}" stroke="#333"/>`;
    out += `<text x="${x0 - 8}" y="${py + 4}" text-anchor="end">${formatTick(t)}</text>\n`;
  }
  out += "</g>\n";
  const cx = (x0 + x1) / 2;
  out += `<text x="${cx}" y="${y0 + 38}" text-anchor="middle" fill="#111">${escapeXml(xLabel)}</text>\n`;
  const cy = (y0 + y1) / 2;
  out += `<text x="18" y="${cy}" text-anchor="middle" fill="#111" transform="rotate(-90 18 ${cy})">${escapeXml(yLabel)}</text>\n`;
  return out;
}

export interface SeriesStyle {
  color: string;
  dashed: boolean;
}

export function polyline(
  points: Array<[number, number]>,
  style: SeriesStyle,
  cssClass = "series",
): string {
  const attr = style.dashed ? ' stroke-dasharray="6 4"' : "";
  const pts = points.map(([px, py]) => `${px},${py}`).join(" ");
  return (
    `<polyline class="${cssClass}" fill="none" stroke="${style.color}" stroke-width="1.8"${attr} ` +
    `points="${pts}"/>\n`
  );
}

export function legend(entries: Array<{ label: string; style: SeriesStyle }>): string {
  const x0 = WIDTH - MARGIN.right + 12;
  let out = `<g class="legend" font-size="11">\n`;
  entries.forEach(({ label, style }, i) => {
    const y = MARGIN.top + 14 + i * 18;
    const attr = style.dashed ? ' stroke-dasharray="6 4"' : "";
    out += `<line x1="${x0}" y1="${y - 4}" x2="${x0 + 24}" y2="${y - 4}" stroke="${style.color}" stroke-width="1.8"${attr}/>`;
    out += `<text x="${x0 + 30}" y="${y}" fill="#111">${escapeXml(label)}</text>\n`;
  });
  out += "</g>\n";
  return out;
}
