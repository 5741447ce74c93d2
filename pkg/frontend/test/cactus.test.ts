import { describe, expect, it } from 'vitest';

import { cactusData, cactusSvg } from '../src/cactus.js';
import { parseBenchCsv } from '../src/csv.js';
import { csv } from './csv.test.js';

describe('cactusData', () => {
  it('sorts one algorithm by elapsed', () => {
    const rows = parseBenchCsv(
      csv(
        'p1,f,1,1,bdd,UNSAT,1,3,',
        'p2,f,1,1,bdd,UNSAT,1,1,',
        'p3,f,1,1,bdd,UNSAT,1,2,',
      ),
    );
    expect(cactusData(rows)).toEqual([
      { algorithm: 'bdd', elapsed: [1, 2, 3] },
    ]);
  });

  it('curves are monotone non-decreasing', () => {
    const body: string[] = [];
    for (let i = 0; i < 50; i++) {
      const status = i % 7 === 0 ? 'UNKNOWN' : i % 2 === 0 ? 'UNSAT' : 'SAT';
      const core = status === 'UNSAT' ? '2' : '';
      body.push(
        `p${i},f,1,1,${['bdd', 'bmc', 'native'][i % 3]},${status},${core},${((i * 37) % 11) / 10 + 0.01},`,
      );
    }
    for (const curve of cactusData(parseBenchCsv(csv(...body)))) {
      for (let i = 1; i < curve.elapsed.length; i++) {
        expect(curve.elapsed[i]).toBeGreaterThanOrEqual(curve.elapsed[i - 1]);
      }
    }
  });

  it('excludes undecided runs, and non-core runs in solved-only mode', () => {
    const rows = parseBenchCsv(
      csv(
        'p1,f,1,1,bdd,UNSAT,1,1,',
        'p2,f,1,1,bdd,SAT,,2,',
        'p3,f,1,1,bdd,UNKNOWN,,3,',
      ),
    );
    expect(cactusData(rows)[0].elapsed).toEqual([1, 2]);
    expect(cactusData(rows, { solvedOnly: true })[0].elapsed).toEqual([1]);
  });

  it('a uniformly faster algorithm draws the lower curve', () => {
    const body: string[] = [];
    for (let i = 0; i < 10; i++) {
      body.push(`p${i},f,1,1,fast,UNSAT,1,${0.1 * (i + 1)},`);
      body.push(`p${i},f,1,1,slow,UNSAT,1,${0.5 * (i + 1)},`);
    }
    const [fast, slow] = cactusData(parseBenchCsv(csv(...body)));
    expect(fast.algorithm).toBe('fast');
    for (let i = 0; i < 10; i++) {
      expect(fast.elapsed[i]).toBeLessThan(slow.elapsed[i]);
    }
  });
});

describe('cactusSvg', () => {
  it('renders an empty CSV without crashing', () => {
    const doc = cactusSvg([]);
    expect(doc).toContain('<svg');
    expect(doc).toContain('</svg>');
  });

  it('names every algorithm in the legend', () => {
    const rows = parseBenchCsv(
      csv('p1,f,1,1,bdd,UNSAT,1,1,', 'p1,f,1,1,virtual_best,UNSAT,1,0.5,'),
    );
    const doc = cactusSvg(rows);
    expect(doc).toContain('bdd');
    expect(doc).toContain('virtual_best');
    expect(doc).toContain('<polyline');
  });

  it('is deterministic', () => {
    const rows = parseBenchCsv(csv('p1,f,1,1,bdd,UNSAT,1,1,'));
    expect(cactusSvg(rows)).toBe(cactusSvg(rows));
  });
});
