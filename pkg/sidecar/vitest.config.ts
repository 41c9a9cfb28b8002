import { defineConfig } from "vitest/config";

// One worker, no per-file isolation: the word-embedding table (~100MB JSON)
// loads once for the whole suite instead of once per test file.
export default defineConfig({
  test: {
    testTimeout: 120_000,
    hookTimeout: 120_000,
    pool: "forks",
    maxWorkers: 1,
    fileParallelism: false,
    isolate: false,
  },
});
