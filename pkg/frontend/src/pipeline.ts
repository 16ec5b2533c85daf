/**
 * Client-side chain of bound augmenters.
 *
 * Runs in standard mode only: each stage sees the whole batch before
 * the next starts, and stage j is dispatched with augmenter index j, so
 * the result is bitwise identical to the core pipeline with the same
 * master seed.  Per-sample mode stays on the core side.
 */

import { BoundAugmenter } from "./augmenters.js";
import { checkMatrix } from "./batch.js";
import { CoreError, CoreWorker } from "./worker.js";

export interface PipelineOptions {
  /** Seed every stage stream derives from; defaults to 0. */
  masterSeed?: number;
  /** Forwarded to each stage dispatch. */
  parallel?: boolean;
}

export interface RunOptions {
  /** Explicit worker; defaults to the shared one. */
  worker?: CoreWorker;
}

export class BoundPipeline {
  readonly stages: readonly BoundAugmenter[];
  readonly masterSeed: number;
  readonly parallel: boolean;

  constructor(stages: readonly BoundAugmenter[], options: PipelineOptions = {}) {
    this.stages = stages;
    this.masterSeed = options.masterSeed ?? 0;
    this.parallel = options.parallel ?? false;
  }

  /**
   * Push a batch through every stage in order.
   *
   * An empty pipeline returns the input unchanged.  A failure inside
   * stage j rethrows the core error with the stage index and kind
   * prefixed to the message.
   */
  async run(
    values: readonly (readonly number[])[],
    options: RunOptions = {},
  ): Promise<number[][]> {
    let out = checkMatrix(values);
    for (let j = 0; j < this.stages.length; j++) {
      const stage = this.stages[j] as BoundAugmenter;
      try {
        out = await stage.augmentBatch(out, this.masterSeed, {
          parallel: this.parallel,
          augmenterIndex: j,
          worker: options.worker,
        });
      } catch (err) {
        if (err instanceof CoreError) {
          throw new CoreError(err.kind, `stage ${j} (${stage.kind}): ${err.message}`);
        }
        throw err;
      }
    }
    return out;
  }
}
