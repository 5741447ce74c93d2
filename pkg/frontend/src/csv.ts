/** Reading and validating the benchmark CSV schema. */

export const CSV_COLUMNS = [
  'problem',
  'family',
  'n_conjuncts',
  'n_vars',
  'algorithm',
  'status',
  'core_size',
  'elapsed',
  'k_reached',
] as const;

export type Status = 'SAT' | 'UNSAT' | 'UNKNOWN' | 'REDUCED_TO_FALSE';

export interface BenchRow {
  problem: string;
  family: string;
  nConjuncts: number;
  nVars: number;
  algorithm: string;
  status: Status;
  /** null when the run produced no core (SAT/UNKNOWN rows). */
  coreSize: number | null;
  elapsed: number;
  kReached: number | null;
}

export class SchemaError extends Error {}

const STATUSES = new Set(['SAT', 'UNSAT', 'UNKNOWN', 'REDUCED_TO_FALSE']);

/** Split one CSV line; the schema never quotes, but tolerate plain quotes. */
function splitLine(line: string): string[] {
  return line.split(',').map((f) => {
    const t = f.trim();
    return t.startsWith('"') && t.endsWith('"') && t.length >= 2
      ? t.slice(1, -1)
      : t;
  });
}

function optionalInt(field: string, line: number, name: string): number | null {
  if (field === '') return null;
  const n = Number(field);
  if (!Number.isInteger(n)) {
    throw new SchemaError(`line ${line}: ${name} is not an integer: ${field}`);
  }
  return n;
}

export function parseBenchCsv(text: string): BenchRow[] {
  const lines = text.split(/\r?\n/).filter((l) => l.trim() !== '');
  if (lines.length === 0) return [];
  const header = splitLine(lines[0]);
  if (header.join(',') !== CSV_COLUMNS.join(',')) {
    throw new SchemaError(
      `unexpected header: ${header.join(',')} (want ${CSV_COLUMNS.join(',')})`,
    );
  }
  const rows: BenchRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const f = splitLine(lines[i]);
    if (f.length !== CSV_COLUMNS.length) {
      throw new SchemaError(
        `line ${i + 1}: expected ${CSV_COLUMNS.length} fields, got ${f.length}`,
      );
    }
    const [problem, family, nc, nv, algorithm, status, core, elapsed, k] = f;
    if (!STATUSES.has(status)) {
      throw new SchemaError(`line ${i + 1}: unknown status ${status}`);
    }
    const t = Number(elapsed);
    if (!Number.isFinite(t) || t < 0) {
      throw new SchemaError(`line ${i + 1}: bad elapsed ${elapsed}`);
    }
    rows.push({
      problem,
      family,
      nConjuncts: optionalInt(nc, i + 1, 'n_conjuncts') ?? 0,
      nVars: optionalInt(nv, i + 1, 'n_vars') ?? 0,
      algorithm,
      status: status as Status,
      coreSize: optionalInt(core, i + 1, 'core_size'),
      elapsed: t,
      kReached: optionalInt(k, i + 1, 'k_reached'),
    });
  }
  return rows;
}

export function algorithmsIn(rows: BenchRow[]): string[] {
  return [...new Set(rows.map((r) => r.algorithm))].sort();
}
