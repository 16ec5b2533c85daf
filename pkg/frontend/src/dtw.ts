/** Dynamic time warping distance, evaluated by the core. */

import { checkVector } from "./batch.js";
import { CoreWorker, defaultWorker } from "./worker.js";

export interface DtwOptions {
  worker?: CoreWorker;
}

/** Alignment result: cost, length-normalized similarity in (0, 1], and the warping path. */
export interface DtwResult {
  distance: number;
  similarity: number;
  path: Array<[number, number]>;
}

/** Full DTW alignment of two series. */
export async function dtwDistance(
  a: readonly number[],
  b: readonly number[],
  options: DtwOptions = {},
): Promise<DtwResult> {
  checkVector(a, "a");
  checkVector(b, "b");
  const worker = options.worker ?? defaultWorker();
  const result = (await worker.request("dtw_distance", { a, b })) as {
    distance: number;
    similarity: number;
    path: Array<[number, number]>;
  };
  return result;
}

/** Length-normalized similarity in (0, 1]; 1 means identical. */
export async function dtwSimilarity(
  a: readonly number[],
  b: readonly number[],
  options: DtwOptions = {},
): Promise<number> {
  checkVector(a, "a");
  checkVector(b, "b");
  const worker = options.worker ?? defaultWorker();
  const result = (await worker.request("dtw_similarity", { a, b })) as {
    similarity: number;
  };
  return result.similarity;
}
