#!/usr/bin/env node
/** Render plots from a benchmark CSV.
 *
 *   ltlfuc-plots cactus results.csv [--solved-only] [--out-dir DIR]
 *   ltlfuc-plots scatter results.csv ALGO_X ALGO_Y [--metric elapsed|core_size]
 *                [--out-dir DIR]
 */

import { readFileSync, writeFileSync, mkdirSync } from 'node:fs';
import { join } from 'node:path';

import { parseBenchCsv, SchemaError } from './csv.js';
import { cactusSvg } from './cactus.js';
import { scatterSvg, Metric, ScatterError } from './scatter.js';

function flag(args: string[], name: string): boolean {
  const i = args.indexOf(name);
  if (i < 0) return false;
  args.splice(i, 1);
  return true;
}

function option(args: string[], name: string): string | undefined {
  const i = args.indexOf(name);
  if (i < 0) return undefined;
  const v = args[i + 1];
  args.splice(i, 2);
  return v;
}

export function main(argv: string[]): number {
  const args = [...argv];
  const outDir = option(args, '--out-dir') ?? '.';
  const [command, csvPath, ...rest] = args;
  if (!command || !csvPath) {
    console.error('usage: ltlfuc-plots cactus|scatter results.csv ...');
    return 2;
  }
  let rows;
  try {
    rows = parseBenchCsv(readFileSync(csvPath, 'utf8'));
  } catch (e) {
    if (e instanceof SchemaError) {
      console.error(`schema error: ${e.message}`);
      return 2;
    }
    throw e;
  }
  mkdirSync(outDir, { recursive: true });
  if (command === 'cactus') {
    const solvedOnly = flag(rest, '--solved-only');
    const out = join(outDir, solvedOnly ? 'cactus-solved.svg' : 'cactus.svg');
    writeFileSync(out, cactusSvg(rows, { solvedOnly }));
    console.log(`wrote ${out}`);
    return 0;
  }
  if (command === 'scatter') {
    const metric = (option(rest, '--metric') ?? 'elapsed') as Metric;
    const [algoX, algoY] = rest;
    if (!algoX || !algoY) {
      console.error('scatter needs two algorithm names');
      return 2;
    }
    try {
      const out = join(outDir, `scatter-${algoX}-${algoY}-${metric}.svg`);
      writeFileSync(out, scatterSvg(rows, algoX, algoY, metric));
      console.log(`wrote ${out}`);
      return 0;
    } catch (e) {
      if (e instanceof ScatterError) {
        console.error(e.message);
        return 2;
      }
      throw e;
    }
  }
  console.error(`unknown command ${command}`);
  return 2;
}

if (process.argv[1] && process.argv[1].endsWith('cli.js')) {
  process.exit(main(process.argv.slice(2)));
}
