/**
 * Transport to the augmentation core: a persistent Python child speaking
 * line-delimited JSON over stdio.
 *
 * One request per line, one response per line, answered strictly in
 * order, so a FIFO queue of pending promises is enough to correlate
 * them (ids are still sent and checked).  Floats cross the pipe as
 * shortest round-trip JSON numbers and therefore survive bitwise in
 * both directions; see {@link encodeRequest} for the negative-zero
 * wrinkle on the outbound side.
 */

import { spawn, type ChildProcessByStdio } from "node:child_process";
import { createInterface, type Interface } from "node:readline";
import type { Readable, Writable } from "node:stream";

/** Error reported by the core, carrying the core-side exception name. */
export class CoreError extends Error {
  /** Exception class name on the core side, e.g. "InvalidParameterError". */
  readonly kind: string;

  constructor(kind: string, message: string) {
    super(message);
    this.name = "CoreError";
    this.kind = kind;
  }
}

/** The worker process died or the protocol broke mid-request. */
export class WorkerError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "WorkerError";
  }
}

function writeNumber(v: number): string {
  if (!Number.isFinite(v)) {
    throw new TypeError("values must be finite numbers");
  }
  // JSON.stringify(-0) emits "0" and drops the sign; "-0.0" parses back
  // to a true negative zero on the Python side.
  if (Object.is(v, -0)) return "-0.0";
  return String(v);
}

function writeValue(v: unknown): string {
  if (typeof v === "number") return writeNumber(v);
  if (typeof v === "string") return JSON.stringify(v);
  if (typeof v === "boolean") return v ? "true" : "false";
  if (v === null) return "null";
  if (Array.isArray(v)) {
    return "[" + v.map(writeValue).join(",") + "]";
  }
  if (typeof v === "object") {
    const parts: string[] = [];
    for (const [k, val] of Object.entries(v as Record<string, unknown>)) {
      if (val === undefined) continue;
      parts.push(JSON.stringify(k) + ":" + writeValue(val));
    }
    return "{" + parts.join(",") + "}";
  }
  throw new TypeError(`cannot encode ${typeof v} for the worker`);
}

/**
 * Serialize a request object to a single JSON line.
 *
 * Hand-rolled instead of JSON.stringify because the latter flattens -0
 * to 0, which would silently break bitwise fidelity for data that
 * round-trips through the core.
 */
export function encodeRequest(req: Record<string, unknown>): string {
  return writeValue(req);
}

interface Pending {
  id: number;
  resolve: (result: unknown) => void;
  reject: (err: Error) => void;
}

export interface WorkerOptions {
  /** Python executable used to start the core; SERIESAUG_PYTHON wins over this. */
  pythonPath?: string;
}

/**
 * A running core process plus the request plumbing around it.
 *
 * Most callers never construct one: the module-level default worker is
 * spawned lazily on first use and shut down via {@link shutdownWorker}.
 */
export class CoreWorker {
  #child: ChildProcessByStdio<Writable, Readable, null>;
  #lines: Interface;
  #pending: Pending[] = [];
  #nextId = 1;
  #closed = false;
  #exitError: Error | null = null;

  constructor(options: WorkerOptions = {}) {
    const python =
      process.env.SERIESAUG_PYTHON ?? options.pythonPath ?? "python3";
    this.#child = spawn(python, ["-m", "seriesaug.serve"], {
      stdio: ["pipe", "pipe", "inherit"],
    });
    this.#child.on("error", (err) => {
      this.#fail(new WorkerError(`failed to start ${python}: ${err.message}`));
    });
    this.#child.on("exit", (code) => {
      if (!this.#closed) {
        this.#fail(new WorkerError(`core process exited with code ${code}`));
      }
    });
    this.#lines = createInterface({ input: this.#child.stdout });
    this.#lines.on("line", (line) => this.#onLine(line));
  }

  #fail(err: Error): void {
    this.#exitError = err;
    const waiting = this.#pending;
    this.#pending = [];
    for (const p of waiting) p.reject(err);
  }

  #onLine(line: string): void {
    const next = this.#pending.shift();
    if (next === undefined) return;
    let msg: { id?: unknown; ok?: unknown; result?: unknown; error?: unknown };
    try {
      msg = JSON.parse(line);
    } catch {
      next.reject(new WorkerError(`unparseable response: ${line}`));
      return;
    }
    if (msg.id !== next.id) {
      next.reject(
        new WorkerError(`response id ${msg.id} does not match request ${next.id}`),
      );
      return;
    }
    if (msg.ok === true) {
      next.resolve(msg.result);
      return;
    }
    const err = msg.error as { type?: string; message?: string } | undefined;
    next.reject(
      new CoreError(err?.type ?? "Error", err?.message ?? "core request failed"),
    );
  }

  /** Send one op and resolve with its result field. */
  request(op: string, fields: Record<string, unknown> = {}): Promise<unknown> {
    if (this.#exitError !== null) {
      return Promise.reject(this.#exitError);
    }
    const id = this.#nextId++;
    const line = encodeRequest({ id, op, ...fields });
    return new Promise((resolve, reject) => {
      this.#pending.push({ id, resolve, reject });
      this.#child.stdin.write(line + "\n");
    });
  }

  /** Close stdin and wait for the child to exit. */
  close(): Promise<void> {
    this.#closed = true;
    return new Promise((resolve) => {
      this.#child.once("exit", () => resolve());
      this.#child.stdin.end();
    });
  }
}

let shared: CoreWorker | null = null;

/** The lazily spawned worker used when no explicit one is passed. */
export function defaultWorker(): CoreWorker {
  if (shared === null) shared = new CoreWorker();
  return shared;
}

/** Stop the shared worker, if one was started. */
export async function shutdownWorker(): Promise<void> {
  if (shared !== null) {
    const w = shared;
    shared = null;
    await w.close();
  }
}
