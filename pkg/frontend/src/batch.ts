/** Array layout checks for data crossing into the core. */

const LAYOUT =
  "expected a non-empty 2-D array of finite numbers, rows of equal length (N series by L samples)";

/**
 * Assert that `values` is a rectangular N x L matrix of finite numbers.
 *
 * Only the layout is checked here; everything about parameter ranges
 * and content is validated by the core and surfaces as a CoreError.
 */
export function checkMatrix(values: unknown): number[][] {
  if (!Array.isArray(values) || values.length === 0) {
    throw new TypeError(LAYOUT);
  }
  const first = values[0];
  if (!Array.isArray(first) || first.length === 0) {
    throw new TypeError(LAYOUT);
  }
  const width = first.length;
  for (const row of values) {
    if (!Array.isArray(row) || row.length !== width) {
      throw new TypeError(LAYOUT);
    }
    for (const v of row) {
      if (typeof v !== "number" || !Number.isFinite(v)) {
        throw new TypeError(LAYOUT);
      }
    }
  }
  return values as number[][];
}

/** Assert that `values` is a non-empty 1-D array of finite numbers. */
export function checkVector(values: unknown, name: string): number[] {
  if (!Array.isArray(values) || values.length === 0) {
    throw new TypeError(`${name}: expected a non-empty 1-D array of finite numbers`);
  }
  for (const v of values) {
    if (typeof v !== "number" || !Number.isFinite(v)) {
      throw new TypeError(`${name}: expected a non-empty 1-D array of finite numbers`);
    }
  }
  return values as number[];
}
