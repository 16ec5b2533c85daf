import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    // Criterion lines print from passing tests; keep them visible even
    // when stdout is not a terminal.
    silent: false,
    reporters: ["verbose"],
    // Each file owns a core child process; keep files sequential so the
    // dispatch timing test runs on a quiet machine.
    fileParallelism: false,
    pool: "forks",
    testTimeout: 120_000,
    hookTimeout: 30_000,
  },
});
