import { Express } from "express";

import { ServiceConfig } from "../src/config";
import { createServer } from "../src/server";

export function testConfig(overrides: Partial<ServiceConfig> = {}): ServiceConfig {
  return {
    host: "127.0.0.1",
    port: 0,
    maxBatch: 16,
    summarizerEnabled: true,
    models: {
      annotator: "wink-eng-lite-web-model+gazetteer",
      embedder: "wink-embeddings-sg-100d",
      nli: "sg-100d-semantic-overlap",
      summarizer: "sg-100d-centroid-extractive",
    },
    ...overrides,
  };
}

export function app(overrides: Partial<ServiceConfig> = {}): Express {
  return createServer(testConfig(overrides));
}

export function norm(vector: number[]): number {
  return Math.hypot(...vector);
}

export function cosine(a: number[], b: number[]): number {
  return a.reduce((sum, x, i) => sum + x * b[i], 0);
}
