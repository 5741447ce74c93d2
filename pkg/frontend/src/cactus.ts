/** Cactus plot: per algorithm, instances solved within a time budget.
 *
 * Each algorithm's solved runs are sorted by elapsed time; the curve plots
 * (number of instances solved, cumulative worst elapsed), so curves are
 * monotone non-decreasing by construction and a uniformly faster algorithm
 * draws a curve that lies below.
 */

import { BenchRow, algorithmsIn } from './csv.js';
import * as svg from './svg.js';

export interface CactusCurve {
  algorithm: string;
  /** y-value (elapsed seconds) at solved count x = index + 1. */
  elapsed: number[];
}

export interface CactusOptions {
  /** Count only runs that proved unsatisfiability (and produced a core);
   * the default counts every decided run (SAT or UNSAT). */
  solvedOnly?: boolean;
}

function isSolved(row: BenchRow, solvedOnly: boolean): boolean {
  if (solvedOnly) return row.status === 'UNSAT' && row.coreSize !== null;
  return row.status === 'SAT' || row.status === 'UNSAT';
}

export function cactusData(
  rows: BenchRow[],
  opts: CactusOptions = {},
): CactusCurve[] {
  return algorithmsIn(rows).map((algorithm) => ({
    algorithm,
    elapsed: rows
      .filter((r) => r.algorithm === algorithm && isSolved(r, !!opts.solvedOnly))
      .map((r) => r.elapsed)
      .sort((a, b) => a - b),
  }));
}

export function cactusSvg(rows: BenchRow[], opts: CactusOptions = {}): string {
  const curves = cactusData(rows, opts).filter((c) => c.elapsed.length > 0);
  const { WIDTH, HEIGHT, MARGIN } = svg;
  const body: string[] = [];
  const maxCount = Math.max(1, ...curves.map((c) => c.elapsed.length));
  const maxElapsed = Math.max(1e-6, ...curves.flatMap((c) => c.elapsed));
  const x = svg.linearScale(0, maxCount, MARGIN.left, WIDTH - MARGIN.right);
  const y = svg.linearScale(0, maxElapsed, HEIGHT - MARGIN.bottom, MARGIN.top);

  body.push(svg.line(MARGIN.left, HEIGHT - MARGIN.bottom, WIDTH - MARGIN.right, HEIGHT - MARGIN.bottom));
  body.push(svg.line(MARGIN.left, MARGIN.top, MARGIN.left, HEIGHT - MARGIN.bottom));
  for (const t of x.ticks()) {
    body.push(svg.text(x(t), HEIGHT - MARGIN.bottom + 16, String(t)));
  }
  for (const t of y.ticks()) {
    body.push(svg.text(MARGIN.left - 8, y(t) + 4, t.toPrecision(3), 'end'));
  }
  body.push(svg.text(WIDTH / 2, HEIGHT - 12, 'instances solved'));
  body.push(svg.text(16, HEIGHT / 2, 'time (s)', 'middle'));

  curves.forEach((curve, i) => {
    const color = svg.PALETTE[i % svg.PALETTE.length];
    const pts: Array<[number, number]> = curve.elapsed.map((t, j) => [
      x(j + 1),
      y(t),
    ]);
    if (pts.length === 1) pts.push(pts[0]);
    body.push(svg.polyline(pts, color));
    body.push(
      svg.text(WIDTH - MARGIN.right, MARGIN.top + 14 * (i + 1), curve.algorithm, 'end').replace(
        '<text ',
        `<text fill="${color}" `,
      ),
    );
  });
  return svg.document(body);
}
