/** Pairwise scatter of two algorithms over the same problems.
 *
 * Log-log points for problems where both runs qualify; runs that ended in
 * UNKNOWN or REDUCED_TO_FALSE are drawn on dedicated gutter lines outside
 * the main square rather than dropped silently.  The core-size metric only
 * compares problems where both algorithms proved unsatisfiability.
 */

import { BenchRow } from './csv.js';
import * as svg from './svg.js';

export type Metric = 'elapsed' | 'core_size';

export interface ScatterPoint {
  problem: string;
  x: number;
  y: number;
}

export interface GutterPoint {
  problem: string;
  /** the qualifying value on the other axis */
  value: number;
  status: 'UNKNOWN' | 'REDUCED_TO_FALSE';
}

export interface ScatterData {
  points: ScatterPoint[];
  /** x qualified, y did not */
  gutterY: GutterPoint[];
  /** y qualified, x did not */
  gutterX: GutterPoint[];
}

export class ScatterError extends Error {}

function qualifies(row: BenchRow, metric: Metric): boolean {
  if (metric === 'core_size') {
    return row.status === 'UNSAT' && row.coreSize !== null;
  }
  return row.status === 'SAT' || row.status === 'UNSAT';
}

function value(row: BenchRow, metric: Metric): number {
  return metric === 'core_size' ? (row.coreSize as number) : row.elapsed;
}

export function scatterData(
  rows: BenchRow[],
  algoX: string,
  algoY: string,
  metric: Metric = 'elapsed',
): ScatterData {
  const have = new Set(rows.map((r) => r.algorithm));
  for (const a of [algoX, algoY]) {
    if (!have.has(a)) throw new ScatterError(`algorithm ${a} not in the CSV`);
  }
  const byProblem = new Map<string, { x?: BenchRow; y?: BenchRow }>();
  for (const r of rows) {
    if (r.algorithm !== algoX && r.algorithm !== algoY) continue;
    const slot = byProblem.get(r.problem) ?? {};
    if (r.algorithm === algoX) slot.x = r;
    if (r.algorithm === algoY) slot.y = r;
    byProblem.set(r.problem, slot);
  }
  const out: ScatterData = { points: [], gutterX: [], gutterY: [] };
  for (const [problem, { x, y }] of byProblem) {
    if (!x || !y) continue;
    const xOk = qualifies(x, metric);
    const yOk = qualifies(y, metric);
    if (xOk && yOk) {
      out.points.push({ problem, x: value(x, metric), y: value(y, metric) });
    } else if (xOk && !yOk && y.status !== 'SAT') {
      out.gutterY.push({
        problem,
        value: value(x, metric),
        status: y.status === 'REDUCED_TO_FALSE' ? y.status : 'UNKNOWN',
      });
    } else if (yOk && !xOk && x.status !== 'SAT') {
      out.gutterX.push({
        problem,
        value: value(y, metric),
        status: x.status === 'REDUCED_TO_FALSE' ? x.status : 'UNKNOWN',
      });
    }
  }
  return out;
}

export function scatterSvg(
  rows: BenchRow[],
  algoX: string,
  algoY: string,
  metric: Metric = 'elapsed',
): string {
  const data = scatterData(rows, algoX, algoY, metric);
  const { WIDTH, HEIGHT, MARGIN } = svg;
  const gutter = 40; // room for the dedicated no-verdict lines
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right - gutter;
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top + gutter;

  const values = [
    ...data.points.flatMap((p) => [p.x, p.y]),
    ...data.gutterX.map((p) => p.value),
    ...data.gutterY.map((p) => p.value),
  ].filter((v) => v > 0);
  const lo = values.length ? Math.min(...values) : 1e-3;
  const hi = values.length ? Math.max(...values) : 1;
  // core sizes include small integers; pad so points sit inside the frame
  const sx = svg.logScale(lo / 2 || 1e-3, hi * 2, x0, x1);
  const sy = svg.logScale(lo / 2 || 1e-3, hi * 2, y0, y1);

  const body: string[] = [];
  body.push(svg.line(x0, y0, x1, y0));
  body.push(svg.line(x0, y0, x0, y1));
  body.push(svg.line(sx(lo / 2 || 1e-3), y0, x1, sy(hi * 2), '#bbb', '4 3'));
  for (const t of sx.ticks()) {
    body.push(svg.text(sx(t), y0 + 16, String(t)));
    body.push(svg.text(x0 - 8, sy(t) + 4, String(t), 'end'));
  }
  // dedicated lines for runs without a comparable verdict
  const gy = y1 - gutter / 2;
  const gx = x1 + gutter / 2;
  body.push(svg.line(x0, gy, x1, gy, '#ccc', '2 3'));
  body.push(svg.line(gx, y0, gx, y1, '#ccc', '2 3'));
  body.push(svg.text(x0 + 4, gy - 6, `${algoY}: no verdict`, 'start', 9));
  body.push(svg.text(gx, y0 + 28, `${algoX}: no verdict`, 'middle', 9));

  for (const p of data.points) {
    body.push(svg.circle(sx(p.x), sy(p.y), '#1f77b4'));
  }
  for (const p of data.gutterY) {
    const color = p.status === 'REDUCED_TO_FALSE' ? '#9467bd' : '#d62728';
    body.push(svg.circle(sx(p.value), gy, color));
  }
  for (const p of data.gutterX) {
    const color = p.status === 'REDUCED_TO_FALSE' ? '#9467bd' : '#d62728';
    body.push(svg.circle(gx, sy(p.value), color));
  }
  const label = metric === 'core_size' ? 'core size' : 'time (s)';
  body.push(svg.text((x0 + x1) / 2, HEIGHT - 12, `${algoX} ${label}`));
  body.push(svg.text(16, (y0 + y1) / 2, `${algoY}`, 'middle'));
  return svg.document(body);
}
