/** Frequency-domain transforms evaluated by the core. */

import { checkMatrix } from "./batch.js";
import { CoreWorker, defaultWorker } from "./worker.js";

export interface TransformOptions {
  worker?: CoreWorker;
}

/** Half spectrum of a real batch: L//2+1 bins per series. */
export interface Spectrum {
  re: number[][];
  im: number[][];
  originalLen: number;
}

/** Orthonormal DCT-II coefficients, one row per series. */
export async function dctForward(
  values: readonly (readonly number[])[],
  options: TransformOptions = {},
): Promise<number[][]> {
  checkMatrix(values);
  const worker = options.worker ?? defaultWorker();
  const result = (await worker.request("dct_forward", { values })) as {
    coeffs: number[][];
  };
  return result.coeffs;
}

/** Inverse of {@link dctForward}. */
export async function dctInverse(
  coeffs: readonly (readonly number[])[],
  options: TransformOptions = {},
): Promise<number[][]> {
  checkMatrix(coeffs);
  const worker = options.worker ?? defaultWorker();
  const result = (await worker.request("dct_inverse", { coeffs })) as {
    values: number[][];
  };
  return result.values;
}

/** Real FFT half spectrum of each series. */
export async function fftForward(
  values: readonly (readonly number[])[],
  options: TransformOptions = {},
): Promise<Spectrum> {
  checkMatrix(values);
  const worker = options.worker ?? defaultWorker();
  const result = (await worker.request("fft_forward", { values })) as {
    re: number[][];
    im: number[][];
    original_len: number;
  };
  return { re: result.re, im: result.im, originalLen: result.original_len };
}

/** Inverse of {@link fftForward}; originalLen settles the odd/even length. */
export async function fftInverse(
  spectrum: Spectrum,
  options: TransformOptions = {},
): Promise<number[][]> {
  checkMatrix(spectrum.re);
  checkMatrix(spectrum.im);
  const worker = options.worker ?? defaultWorker();
  const result = (await worker.request("fft_inverse", {
    re: spectrum.re,
    im: spectrum.im,
    original_len: spectrum.originalLen,
  })) as { values: number[][] };
  return result.values;
}

/** Max absolute forward-inverse error for "dct" or "fft". */
export async function roundtripCheck(
  values: readonly (readonly number[])[],
  transform: "dct" | "fft",
  options: TransformOptions = {},
): Promise<number> {
  checkMatrix(values);
  const worker = options.worker ?? defaultWorker();
  const result = (await worker.request("roundtrip_check", {
    values,
    transform,
  })) as { max_abs_error: number };
  return result.max_abs_error;
}
