/** Minimal SVG document builder; no DOM required. */

export const WIDTH = 640;
export const HEIGHT = 480;
export const MARGIN = { top: 24, right: 24, bottom: 48, left: 64 };

export const PALETTE = [
  '#1f77b4',
  '#d62728',
  '#2ca02c',
  '#9467bd',
  '#ff7f0e',
  '#8c564b',
];

export function esc(s: string): string {
  return s
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export interface Scale {
  (v: number): number;
  ticks(): number[];
}

export function linearScale(
  lo: number,
  hi: number,
  rangeLo: number,
  rangeHi: number,
): Scale {
  const span = hi - lo || 1;
  const fn = ((v: number) =>
    rangeLo + ((v - lo) / span) * (rangeHi - rangeLo)) as Scale;
  fn.ticks = () => {
    const step = Math.pow(10, Math.floor(Math.log10(span))) || 1;
    const ticks: number[] = [];
    for (let t = Math.ceil(lo / step) * step; t <= hi + 1e-12; t += step) {
      ticks.push(Number(t.toPrecision(12)));
    }
    return ticks.length >= 2 ? ticks : [lo, hi];
  };
  return fn;
}

export function logScale(
  lo: number,
  hi: number,
  rangeLo: number,
  rangeHi: number,
): Scale {
  const l0 = Math.log10(lo);
  const l1 = Math.log10(hi);
  const span = l1 - l0 || 1;
  const fn = ((v: number) =>
    rangeLo + ((Math.log10(v) - l0) / span) * (rangeHi - rangeLo)) as Scale;
  fn.ticks = () => {
    const ticks: number[] = [];
    for (let e = Math.ceil(l0); e <= Math.floor(l1); e++) {
      ticks.push(Math.pow(10, e));
    }
    return ticks.length >= 1 ? ticks : [lo, hi];
  };
  return fn;
}

export function polyline(
  points: Array<[number, number]>,
  color: string,
): string {
  const pts = points.map(([x, y]) => `${x.toFixed(1)},${y.toFixed(1)}`).join(' ');
  return `<polyline fill="none" stroke="${color}" stroke-width="1.5" points="${pts}"/>`;
}

export function circle(x: number, y: number, color: string): string {
  return `<circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="3" fill="${color}" fill-opacity="0.7"/>`;
}

export function text(
  x: number,
  y: number,
  s: string,
  anchor = 'middle',
  size = 11,
): string {
  return `<text x="${x.toFixed(1)}" y="${y.toFixed(1)}" text-anchor="${anchor}" font-family="sans-serif" font-size="${size}">${esc(s)}</text>`;
}

export function line(
  x1: number,
  y1: number,
  x2: number,
  y2: number,
  color = '#999',
  dash = '',
): string {
  const d = dash ? ` stroke-dasharray="${dash}"` : '';
  return `<line x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" x2="${x2.toFixed(1)}" y2="${y2.toFixed(1)}" stroke="${color}"${d}/>`;
}

export function document(body: string[]): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
    ...body,
    '</svg>',
  ].join('\n');
}
