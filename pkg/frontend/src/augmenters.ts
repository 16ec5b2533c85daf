/**
 * One class per core augmenter.
 *
 * Each instance is a thin record of {kind, probability, params} that the
 * core reconstructs on its side of the pipe.  Parameter validation
 * happens there, not here; bad values come back as CoreError with the
 * core's own message.  The only thing checked locally is the array
 * layout of the data.
 */

import { checkMatrix } from "./batch.js";
import { CoreWorker, defaultWorker } from "./worker.js";

export interface AugmentOptions {
  /** Ask the core to fan the batch out across its thread pool. */
  parallel?: boolean;
  /** Position of this augmenter in a chain; part of the seed derivation. */
  augmenterIndex?: number;
  /** Explicit worker; defaults to the shared one. */
  worker?: CoreWorker;
}

export interface StageOptions {
  /** Chance in [0, 1] that the stage fires for a given series. */
  probability?: number;
}

/** Wire record for one augmentation stage. */
export interface StageRecord {
  kind: string;
  probability: number;
  params: Record<string, unknown>;
}

/** Base wrapper: holds the stage record and dispatches apply calls. */
export class BoundAugmenter {
  readonly kind: string;
  readonly probability: number;
  readonly params: Record<string, unknown>;

  constructor(kind: string, params: Record<string, unknown>, options: StageOptions = {}) {
    this.kind = kind;
    this.params = params;
    this.probability = options.probability ?? 1.0;
  }

  /** The {kind, probability, params} record the core consumes. */
  stageRecord(): StageRecord {
    return { kind: this.kind, probability: this.probability, params: this.params };
  }

  /**
   * Apply this augmenter to an N x L batch with the given seed.
   *
   * Bitwise identical to calling the core directly with the same seed
   * and augmenter index.
   */
  async augmentBatch(
    values: readonly (readonly number[])[],
    seed: number,
    options: AugmentOptions = {},
  ): Promise<number[][]> {
    checkMatrix(values);
    const worker = options.worker ?? defaultWorker();
    const result = (await worker.request("augment_batch", {
      stage: this.stageRecord(),
      seed,
      values,
      parallel: options.parallel ?? false,
      augmenter_index: options.augmenterIndex ?? 0,
    })) as { values: number[][] };
    return result.values;
  }
}

/** Additive i.i.d. Gaussian noise with standard deviation sigma. */
export class Jitter extends BoundAugmenter {
  constructor(sigma: number, options: StageOptions = {}) {
    super("jitter", { sigma }, options);
  }
}

/** Per-series multiplicative factor drawn from N(1, sigmaFactor^2). */
export class Scale extends BoundAugmenter {
  constructor(sigmaFactor: number, options: StageOptions = {}) {
    super("scale", { sigma_factor: sigmaFactor }, options);
  }
}

/** Flip the sign of every sample. */
export class Rotate extends BoundAugmenter {
  constructor(options: StageOptions = {}) {
    super("rotate", {}, options);
  }
}

/** Split into contiguous segments and shuffle their order. */
export class PermuteSegments extends BoundAugmenter {
  constructor(nSegments: number, options: StageOptions = {}) {
    super("permute_segments", { n_segments: nSegments }, options);
  }
}

/** Keep a random contiguous window of the given size. */
export class Crop extends BoundAugmenter {
  constructor(size: number, options: StageOptions = {}) {
    super("crop", { size }, options);
  }
}

/** Reverse each series in time. */
export class Reverse extends BoundAugmenter {
  constructor(options: StageOptions = {}) {
    super("reverse", {}, options);
  }
}

/** Linear interpolation onto a grid of targetLen samples. */
export class Resize extends BoundAugmenter {
  constructor(targetLen: number, options: StageOptions = {}) {
    super("resize", { target_len: targetLen }, options);
  }
}

/** Snap values to nLevels evenly spaced levels over each series range. */
export class Quantize extends BoundAugmenter {
  constructor(nLevels: number, options: StageOptions = {}) {
    super("quantize", { n_levels: nLevels }, options);
  }
}

/** Smooth random-walk offset interpolated through nPoints anchors. */
export class Drift extends BoundAugmenter {
  constructor(maxDrift: number, nPoints = 6, options: StageOptions = {}) {
    super("drift", { max_drift: maxDrift, n_points: nPoints }, options);
  }
}

/** Noise recipe for {@link InjectNoise}; mirrors the core noise kinds. */
export type NoiseSpec =
  | { kind: "uniform"; half_width: number }
  | { kind: "gaussian"; sigma: number }
  | { kind: "spike"; count: number; magnitude: number }
  | { kind: "slope_trend"; max_offset: number };

/** Add structured noise described by a NoiseSpec record. */
export class InjectNoise extends BoundAugmenter {
  constructor(noise: NoiseSpec, options: StageOptions = {}) {
    super("inject_noise", { noise }, options);
  }
}

/** Tile each series r times end to end. */
export class Repeat extends BoundAugmenter {
  constructor(r: number, options: StageOptions = {}) {
    super("repeat", { r }, options);
  }
}

/** Perturb spectral amplitudes and phases, then transform back. */
export class AmplitudePhasePerturb extends BoundAugmenter {
  constructor(sigmaAmp: number, sigmaPhase: number, options: StageOptions = {}) {
    super(
      "amplitude_phase_perturb",
      { sigma_amp: sigmaAmp, sigma_phase: sigmaPhase },
      options,
    );
  }
}

/** Zero a random block of width frequency bins. */
export class FrequencyMask extends BoundAugmenter {
  constructor(width: number, options: StageOptions = {}) {
    super("frequency_mask", { width }, options);
  }
}

/** Smooth random time warp through nKnots anchors at the given intensity. */
export class TimeWarp extends BoundAugmenter {
  constructor(nKnots = 4, intensity = 0.5, options: StageOptions = {}) {
    super("time_warp", { n_knots: nKnots, intensity }, options);
  }
}

/** Time warp confined to one random window of windowSize samples. */
export class WindowWarp extends BoundAugmenter {
  constructor(windowSize: number, nKnots = 4, intensity = 0.5, options: StageOptions = {}) {
    super(
      "time_warp_window",
      { window_size: windowSize, n_knots: nKnots, intensity },
      options,
    );
  }
}
