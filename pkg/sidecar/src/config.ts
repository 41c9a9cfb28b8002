export interface ServiceConfig {
  host: string;
  port: number;
  maxBatch: number;
  summarizerEnabled: boolean;
  models: {
    annotator: string;
    embedder: string;
    nli: string;
    summarizer: string;
  };
}

export function configFromEnv(env: NodeJS.ProcessEnv = process.env): ServiceConfig {
  const maxBatch = Number.parseInt(env.CANDLE_MAX_BATCH ?? "64", 10);
  if (!Number.isInteger(maxBatch) || maxBatch < 1) {
    throw new Error(`CANDLE_MAX_BATCH must be a positive integer, got ${env.CANDLE_MAX_BATCH}`);
  }
  return {
    host: env.CANDLE_BIND ?? "127.0.0.1",
    port: Number.parseInt(env.CANDLE_PORT ?? "8750", 10),
    maxBatch,
    summarizerEnabled: (env.CANDLE_SUMMARIZER ?? "extractive") !== "disabled",
    models: {
      annotator: "wink-eng-lite-web-model+gazetteer",
      embedder: "wink-embeddings-sg-100d",
      nli: "sg-100d-semantic-overlap",
      summarizer:
        (env.CANDLE_SUMMARIZER ?? "extractive") === "disabled" ? "disabled" : "sg-100d-centroid-extractive",
    },
  };
}
