export { parseBenchCsv, algorithmsIn, SchemaError, CSV_COLUMNS } from './csv.js';
export type { BenchRow, Status } from './csv.js';
export { cactusData, cactusSvg } from './cactus.js';
export type { CactusCurve, CactusOptions } from './cactus.js';
export { scatterData, scatterSvg, ScatterError } from './scatter.js';
export type { Metric, ScatterData, ScatterPoint, GutterPoint } from './scatter.js';
