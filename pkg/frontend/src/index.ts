/**
 * Node bindings for the seriesaug augmentation engine.
 *
 * Everything here talks to a persistent core process over line-delimited
 * JSON; results are bitwise identical to running the core directly with
 * the same seeds.
 */

import { CoreWorker, defaultWorker } from "./worker.js";

/** Version of these bindings; kept in lockstep with the core package. */
export const VERSION = "0.1.0";

/** Ask the running core for its own version string. */
export async function coreVersion(worker?: CoreWorker): Promise<string> {
  const w = worker ?? defaultWorker();
  const result = (await w.request("version")) as { version: string };
  return result.version;
}

export {
  CoreError,
  CoreWorker,
  WorkerError,
  defaultWorker,
  shutdownWorker,
  type WorkerOptions,
} from "./worker.js";
export { checkMatrix, checkVector } from "./batch.js";
export {
  AmplitudePhasePerturb,
  BoundAugmenter,
  Crop,
  Drift,
  FrequencyMask,
  InjectNoise,
  Jitter,
  PermuteSegments,
  Quantize,
  Repeat,
  Resize,
  Reverse,
  Rotate,
  Scale,
  TimeWarp,
  WindowWarp,
  type AugmentOptions,
  type NoiseSpec,
  type StageOptions,
  type StageRecord,
} from "./augmenters.js";
export {
  BoundPipeline,
  type PipelineOptions,
  type RunOptions,
} from "./pipeline.js";
export {
  dctForward,
  dctInverse,
  fftForward,
  fftInverse,
  roundtripCheck,
  type Spectrum,
  type TransformOptions,
} from "./transforms.js";
export {
  dtwDistance,
  dtwSimilarity,
  type DtwOptions,
  type DtwResult,
} from "./dtw.js";
